#pragma once

// Lane-templated kernel bodies shared by the scalar and AVX2 backends.
// Exact-distance queries are reduced to fixed-count golden-section searches
// over the segment parameter: the signed distance from a point moving along
// a segment to a convex set is convex in the parameter, so the bracket
// always contains the global minimum. A fixed iteration count (no early
// exit, no data-dependent branches) keeps all lanes in lockstep and makes
// both backends execute the identical IEEE operation sequence.
//
// min/max follow the minpd/maxpd convention (a < b ? a : b) in both lanes;
// select(m, x, y) is blendv. Divisions guard against zero-length edges with
// a denominator floor instead of branching.

#include "artiplan/kernels.hpp"

namespace artiplan::kernels::detail {

inline constexpr int kGoldenIters = 48;
inline constexpr double kGoldenC = 0.3819660112501051;  // 1 - 1/phi
inline constexpr double kDenomFloor = 1e-300;

template <class L>
struct Body {
    using V = typename L::V;
    using M = typename L::M;

    struct V3 {
        V x, y, z;
    };

    static V lerp(V a, V b, V t) { return L::add(a, L::mul(t, L::sub(b, a))); }

    static V vabs(V a) { return L::vmax(a, L::sub(L::set1(0.0), a)); }

    static V clamp01(V t) { return L::vmin(L::vmax(t, L::set1(0.0)), L::set1(1.0)); }

    // Signed distance from local point p to the origin-centered box with
    // half extents h.
    static V box_sdf(const V3& p, const V3& h) {
        const V zero = L::set1(0.0);
        const V dx = L::sub(vabs(p.x), h.x);
        const V dy = L::sub(vabs(p.y), h.y);
        const V dz = L::sub(vabs(p.z), h.z);
        const V m = L::vmax(dx, L::vmax(dy, dz));
        const V ox = L::vmax(dx, zero);
        const V oy = L::vmax(dy, zero);
        const V oz = L::vmax(dz, zero);
        const V outer =
            L::vsqrt(L::add(L::add(L::mul(ox, ox), L::mul(oy, oy)), L::mul(oz, oz)));
        return L::add(outer, L::vmin(m, zero));
    }

    // Golden-section minimization of f over t in [0, 1]; returns f at the
    // bracket midpoint after a fixed number of shrink steps.
    template <class F>
    static V golden_min(F&& f) {
        V lo = L::set1(0.0);
        V hi = L::set1(1.0);
        const V c = L::set1(kGoldenC);
        for (int it = 0; it < kGoldenIters; ++it) {
            const V d = L::sub(hi, lo);
            const V m1 = L::add(lo, L::mul(c, d));
            const V m2 = L::sub(hi, L::mul(c, d));
            const V f1 = f(m1);
            const V f2 = f(m2);
            const M keep_low = L::lt(f1, f2);
            hi = L::select(keep_low, m2, hi);
            lo = L::select(keep_low, lo, m1);
        }
        const V mid = L::mul(L::set1(0.5), L::add(lo, hi));
        return f(mid);
    }

    static void seg_box(const SegBoxBatch& b, std::size_t i) {
        const V3 a{L::load(b.ax + i), L::load(b.ay + i), L::load(b.az + i)};
        const V3 e{L::load(b.bx + i), L::load(b.by + i), L::load(b.bz + i)};
        const V3 h{L::load(b.hx + i), L::load(b.hy + i), L::load(b.hz + i)};
        const V sd = golden_min([&](V t) {
            const V3 p{lerp(a.x, e.x, t), lerp(a.y, e.y, t), lerp(a.z, e.z, t)};
            return box_sdf(p, h);
        });
        L::store(b.dist + i, sd);
    }

    static void seg_prism(const SegPrismBatch& b, std::size_t i) {
        const V3 a{L::load(b.ax + i), L::load(b.ay + i), L::load(b.az + i)};
        const V3 e{L::load(b.bx + i), L::load(b.by + i), L::load(b.bz + i)};
        const V z0 = L::load(b.z0 + i);
        const V z1 = L::load(b.z1 + i);
        const std::size_t n = b.n;
        const V zero = L::set1(0.0);

        const V sd = golden_min([&](V t) {
            const V px = lerp(a.x, e.x, t);
            const V py = lerp(a.y, e.y, t);
            const V pz = lerp(a.z, e.z, t);

            // max over edge planes (negative inside the polygon)
            V plane_max = L::set1(-1e300);
            // min squared distance to any boundary edge segment
            V edge_d2 = L::set1(1e300);
            for (std::size_t k = 0; k < kPrismEdges; ++k) {
                const std::size_t off = k * n + i;
                const V nx = L::load(b.nx + off);
                const V ny = L::load(b.ny + off);
                const V nd = L::load(b.nd + off);
                plane_max = L::vmax(plane_max,
                                    L::sub(L::add(L::mul(nx, px), L::mul(ny, py)), nd));

                const V e0x = L::load(b.e0x + off);
                const V e0y = L::load(b.e0y + off);
                const V ex = L::sub(L::load(b.e1x + off), e0x);
                const V ey = L::sub(L::load(b.e1y + off), e0y);
                const V rx = L::sub(px, e0x);
                const V ry = L::sub(py, e0y);
                const V ee = L::vmax(L::add(L::mul(ex, ex), L::mul(ey, ey)),
                                     L::set1(kDenomFloor));
                const V s = clamp01(L::div(L::add(L::mul(rx, ex), L::mul(ry, ey)), ee));
                const V qx = L::sub(rx, L::mul(s, ex));
                const V qy = L::sub(ry, L::mul(s, ey));
                edge_d2 = L::vmin(edge_d2, L::add(L::mul(qx, qx), L::mul(qy, qy)));
            }
            const M inside_xy = L::lt(plane_max, zero);
            const V sd2 = L::select(inside_xy, plane_max, L::vsqrt(edge_d2));

            const V dz = L::vmax(L::sub(z0, pz), L::sub(pz, z1));
            const V o1 = L::vmax(sd2, zero);
            const V o2 = L::vmax(dz, zero);
            const V outer = L::vsqrt(L::add(L::mul(o1, o1), L::mul(o2, o2)));
            return L::add(outer, L::vmin(L::vmax(sd2, dz), zero));
        });
        L::store(b.dist + i, sd);
    }

    static void seg_seg(const SegSegBatch& b, std::size_t i) {
        const V3 a{L::load(b.ax + i), L::load(b.ay + i), L::load(b.az + i)};
        const V3 e{L::load(b.bx + i), L::load(b.by + i), L::load(b.bz + i)};
        const V3 c{L::load(b.cx + i), L::load(b.cy + i), L::load(b.cz + i)};
        const V3 d{L::load(b.dx + i), L::load(b.dy + i), L::load(b.dz + i)};
        const V3 cd{L::sub(d.x, c.x), L::sub(d.y, c.y), L::sub(d.z, c.z)};
        const V ee = L::vmax(
            L::add(L::add(L::mul(cd.x, cd.x), L::mul(cd.y, cd.y)), L::mul(cd.z, cd.z)),
            L::set1(kDenomFloor));

        const V sd = golden_min([&](V t) {
            const V px = lerp(a.x, e.x, t);
            const V py = lerp(a.y, e.y, t);
            const V pz = lerp(a.z, e.z, t);
            const V rx = L::sub(px, c.x);
            const V ry = L::sub(py, c.y);
            const V rz = L::sub(pz, c.z);
            const V s = clamp01(L::div(
                L::add(L::add(L::mul(rx, cd.x), L::mul(ry, cd.y)), L::mul(rz, cd.z)), ee));
            const V qx = L::sub(rx, L::mul(s, cd.x));
            const V qy = L::sub(ry, L::mul(s, cd.y));
            const V qz = L::sub(rz, L::mul(s, cd.z));
            return L::vsqrt(
                L::add(L::add(L::mul(qx, qx), L::mul(qy, qy)), L::mul(qz, qz)));
        });
        L::store(b.dist + i, sd);
    }
};

struct ScalarLane {
    static constexpr std::size_t width = 1;
    using V = double;
    using M = bool;
    static V load(const double* p) { return *p; }
    static void store(double* p, V v) { *p = v; }
    static V set1(double x) { return x; }
    static V add(V a, V b) { return a + b; }
    static V sub(V a, V b) { return a - b; }
    static V mul(V a, V b) { return a * b; }
    static V div(V a, V b) { return a / b; }
    static V vmin(V a, V b) { return a < b ? a : b; }
    static V vmax(V a, V b) { return a > b ? a : b; }
    static V vsqrt(V a) { return __builtin_sqrt(a); }
    static M lt(V a, V b) { return a < b; }
    static V select(M m, V a, V b) { return m ? a : b; }
};

template <class L, class Batch, void (*Fn)(const Batch&, std::size_t)>
void run_batch(const Batch& batch) {
    std::size_t i = 0;
    if constexpr (L::width > 1) {
        for (; i + L::width <= batch.n; i += L::width) Fn(batch, i);
    } else {
        for (; i < batch.n; ++i) Fn(batch, i);
    }
    // Tail entries (vector backend only) run through the scalar lane, which
    // performs the same IEEE operation sequence per element.
    if constexpr (L::width > 1) {
        for (; i < batch.n; ++i) {
            if constexpr (std::is_same_v<Batch, SegBoxBatch>)
                Body<ScalarLane>::seg_box(batch, i);
            else if constexpr (std::is_same_v<Batch, SegPrismBatch>)
                Body<ScalarLane>::seg_prism(batch, i);
            else
                Body<ScalarLane>::seg_seg(batch, i);
        }
    }
}

}  // namespace artiplan::kernels::detail
