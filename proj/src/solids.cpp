#include "artiplan/solids.hpp"

#include <cmath>
#include <stdexcept>

namespace artiplan::solids {

Aabb Aabb::of_points(const std::vector<Vec3>& pts) {
    Aabb box;
    if (pts.empty()) return box;
    box.lo = box.hi = pts[0];
    for (std::size_t i = 1; i < pts.size(); ++i) box.expand(pts[i]);
    return box;
}

void Aabb::expand(const Vec3& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
}

double Aabb::gap(const Aabb& other) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double d = std::max(std::max(lo[i] - other.hi[i], other.lo[i] - hi[i]), 0.0);
        s += d * d;
    }
    return std::sqrt(s);
}

Aabb Capsule::aabb() const {
    Aabb box;
    box.lo = a.cwiseMin(b).array() - radius;
    box.hi = a.cwiseMax(b).array() + radius;
    return box;
}

bool is_ccw_convex(const std::vector<Vec2>& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const Vec2& c = poly[(i + 2) % n];
        const Vec2 e1 = b - a;
        const Vec2 e2 = c - b;
        if (e1.norm() < 1e-9) return false;  // duplicate vertex
        const double cross = e1.x() * e2.y() - e1.y() * e2.x();
        if (cross < -1e-12) return false;  // reflex corner
        area2 += a.x() * b.y() - b.x() * a.y();
    }
    return area2 > 1e-12;
}

Solid Solid::make_box(const Pose& pose, const Vec3& half_extents) {
    if ((half_extents.array() <= 0.0).any())
        throw std::invalid_argument("box half extents must be positive");
    Solid s;
    s.kind = Kind::box;
    s.pose = pose;
    s.half = half_extents;
    return s;
}

Solid Solid::make_prism(const Pose& pose, std::vector<Vec2> polygon, double z0, double z1) {
    if (!is_ccw_convex(polygon)) throw std::invalid_argument("prism polygon must be CCW convex");
    if (!(z1 > z0)) throw std::invalid_argument("prism extrusion interval must be non-empty");
    Solid s;
    s.kind = Kind::prism;
    s.pose = pose;
    s.poly = std::move(polygon);
    s.z0 = z0;
    s.z1 = z1;
    return s;
}

Solid Solid::transformed(const Pose& t) const {
    Solid out = *this;
    out.pose = geom::compose(t, pose);
    return out;
}

std::vector<Vec3> Solid::vertices() const {
    std::vector<Vec3> out;
    if (kind == Kind::box) {
        out.reserve(8);
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1})
                    out.push_back(pose.apply(Vec3(sx * half.x(), sy * half.y(), sz * half.z())));
    } else {
        out.reserve(poly.size() * 2);
        for (const double z : {z0, z1})
            for (const Vec2& v : poly) out.push_back(pose.apply(Vec3(v.x(), v.y(), z)));
    }
    return out;
}

Aabb Solid::aabb() const { return Aabb::of_points(vertices()); }

std::vector<Solid::Plane> Solid::planes() const {
    std::vector<Plane> out;
    const Eigen::Matrix3d r = pose.orientation.toRotationMatrix();
    auto add = [&](const Vec3& local_n, const Vec3& local_p) {
        const Vec3 n = r * local_n;
        out.push_back({n, n.dot(pose.apply(local_p))});
    };
    if (kind == Kind::box) {
        for (int axis = 0; axis < 3; ++axis)
            for (int sign : {-1, 1}) {
                Vec3 n = Vec3::Zero();
                n[axis] = sign;
                add(n, n.cwiseProduct(half));
            }
    } else {
        add(Vec3(0, 0, -1), Vec3(poly[0].x(), poly[0].y(), z0));
        add(Vec3(0, 0, 1), Vec3(poly[0].x(), poly[0].y(), z1));
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % n];
            const Vec2 e = (b - a).normalized();
            add(Vec3(e.y(), -e.x(), 0.0), Vec3(a.x(), a.y(), z0));
        }
    }
    return out;
}

std::vector<Vec3> Solid::edge_dirs() const {
    std::vector<Vec3> out;
    const Eigen::Matrix3d r = pose.orientation.toRotationMatrix();
    if (kind == Kind::box) {
        out.push_back(r.col(0));
        out.push_back(r.col(1));
        out.push_back(r.col(2));
    } else {
        out.push_back(r.col(2));
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e = poly[(i + 1) % n] - poly[i];
            out.push_back(r * Vec3(e.x(), e.y(), 0.0).normalized());
        }
    }
    return out;
}

bool Solid::contains(const Vec3& p, double tol) const {
    for (const Plane& pl : planes())
        if (pl.n.dot(p) > pl.d + tol) return false;
    return true;
}

namespace {

void sample_rect(std::vector<Vec3>& out, const Pose& pose, const Vec3& origin, const Vec3& u_dir,
                 double u_len, const Vec3& v_dir, double v_len, double pitch) {
    const int nu = std::max(1, static_cast<int>(std::floor(u_len / pitch)));
    const int nv = std::max(1, static_cast<int>(std::floor(v_len / pitch)));
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const double du = (i + 0.5) * (u_len / nu);
            const double dv = (j + 0.5) * (v_len / nv);
            out.push_back(pose.apply(origin + du * u_dir + dv * v_dir));
        }
}

bool point_in_poly(const std::vector<Vec2>& poly, const Vec2& p, double tol) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        const Vec2 e = (b - a).normalized();
        // outward normal of a CCW edge
        if (Vec2(e.y(), -e.x()).dot(p - a) > -tol) return false;
    }
    return true;
}

}  // namespace

std::vector<Vec3> Solid::face_samples(double pitch) const {
    std::vector<Vec3> out;
    if (kind == Kind::box) {
        for (int axis = 0; axis < 3; ++axis)
            for (int sign : {-1, 1}) {
                const int ua = (axis + 1) % 3;
                const int va = (axis + 2) % 3;
                Vec3 origin = Vec3::Zero();
                origin[axis] = sign * half[axis];
                origin[ua] -= half[ua];
                origin[va] -= half[va];
                Vec3 u = Vec3::Zero(), v = Vec3::Zero();
                u[ua] = 1.0;
                v[va] = 1.0;
                sample_rect(out, pose, origin, u, 2.0 * half[ua], v, 2.0 * half[va], pitch);
            }
    } else {
        // Caps: grid over the polygon's bounding box, filtered to the interior.
        Vec2 lo = poly[0], hi = poly[0];
        for (const Vec2& v : poly) {
            lo = lo.cwiseMin(v);
            hi = hi.cwiseMax(v);
        }
        const int nu = std::max(1, static_cast<int>(std::floor((hi.x() - lo.x()) / pitch)));
        const int nv = std::max(1, static_cast<int>(std::floor((hi.y() - lo.y()) / pitch)));
        for (const double z : {z0, z1})
            for (int i = 0; i < nu; ++i)
                for (int j = 0; j < nv; ++j) {
                    const Vec2 p(lo.x() + (i + 0.5) * (hi.x() - lo.x()) / nu,
                                 lo.y() + (j + 0.5) * (hi.y() - lo.y()) / nv);
                    if (point_in_poly(poly, p, 1e-9)) out.push_back(pose.apply(Vec3(p.x(), p.y(), z)));
                }
        // Sides.
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % n];
            const double len = (b - a).norm();
            const Vec2 e = (b - a) / len;
            sample_rect(out, pose, Vec3(a.x(), a.y(), z0), Vec3(e.x(), e.y(), 0.0), len,
                        Vec3(0, 0, 1), z1 - z0, pitch);
        }
    }
    return out;
}

namespace {

void project_onto(const std::vector<Vec3>& verts, const Vec3& axis, double& lo, double& hi) {
    lo = hi = axis.dot(verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) {
        const double v = axis.dot(verts[i]);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
}

}  // namespace

bool solids_intersect(const Solid& a, const Solid& b, double tol) {
    const std::vector<Vec3> va = a.vertices();
    const std::vector<Vec3> vb = b.vertices();

    std::vector<Vec3> axes;
    for (const auto& pl : a.planes()) axes.push_back(pl.n);
    for (const auto& pl : b.planes()) axes.push_back(pl.n);
    for (const Vec3& ea : a.edge_dirs())
        for (const Vec3& eb : b.edge_dirs()) {
            const Vec3 c = ea.cross(eb);
            if (c.norm() > 1e-9) axes.push_back(c.normalized());
        }

    for (const Vec3& axis : axes) {
        double alo, ahi, blo, bhi;
        project_onto(va, axis, alo, ahi);
        project_onto(vb, axis, blo, bhi);
        if (std::min(ahi, bhi) - std::max(alo, blo) <= tol) return false;  // separated or touching
    }
    return true;
}

bool segment_hits(const Solid& s, const Vec3& p0, const Vec3& p1, double t_max) {
    // Clip the segment parameter interval against every face halfspace.
    double t_lo = 0.0, t_hi = 1.0;
    const Vec3 d = p1 - p0;
    for (const auto& pl : s.planes()) {
        const double denom = pl.n.dot(d);
        const double dist = pl.d - pl.n.dot(p0);
        if (std::abs(denom) < 1e-15) {
            if (dist < 0.0) return false;  // parallel and outside
        } else {
            const double t = dist / denom;
            if (denom > 0.0)
                t_hi = std::min(t_hi, t);
            else
                t_lo = std::max(t_lo, t);
            if (t_lo > t_hi) return false;
        }
    }
    return t_lo < t_max - 1e-9 && t_hi > 1e-9;
}

}  // namespace artiplan::solids
