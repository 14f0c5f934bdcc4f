#pragma once

#include <cstddef>

namespace artiplan::kernels {

// Batch signed-distance kernels for the collision narrow phase. Each batch
// entry is one query, already expressed in the solid's local frame; the
// caller subtracts capsule radii from the returned segment distances.
//
// Two backends exist: a scalar reference and an AVX2 variant selected at
// runtime. Both are instantiations of the same lane-templated code compiled
// with FP contraction off, so their outputs are bitwise identical (asserted
// in tests). ARTIPLAN_KERNELS=scalar|avx2 in the environment pins a backend.

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b);  // throws if unavailable

// Segment vs oriented box (local frame: box centered at origin, half
// extents h). dist is the signed distance from the segment to the box
// surface: negative when the segment enters the box.
struct SegBoxBatch {
    const double* ax;
    const double* ay;
    const double* az;
    const double* bx;
    const double* by;
    const double* bz;
    const double* hx;
    const double* hy;
    const double* hz;
    double* dist;
    std::size_t n;
};

// Segment vs extruded convex polygon. Exactly kPrismEdges edges per entry
// (shorter polygons are padded by repeating a vertex/plane, which leaves
// both the min edge distance and the max plane distance unchanged). Edge
// arrays are edge-major: element for edge k of entry i lives at [k*n + i].
inline constexpr std::size_t kPrismEdges = 8;

struct SegPrismBatch {
    const double* ax;
    const double* ay;
    const double* az;
    const double* bx;
    const double* by;
    const double* bz;
    const double* e0x;  // edge start, length kPrismEdges*n
    const double* e0y;
    const double* e1x;  // edge end
    const double* e1y;
    const double* nx;  // outward edge plane: nx*x + ny*y <= nd inside
    const double* ny;
    const double* nd;
    const double* z0;
    const double* z1;
    double* dist;
    std::size_t n;
};

// Segment (a,b) vs segment (c,d): distance between the two axes (always
// >= 0); caller subtracts both capsule radii.
struct SegSegBatch {
    const double* ax;
    const double* ay;
    const double* az;
    const double* bx;
    const double* by;
    const double* bz;
    const double* cx;
    const double* cy;
    const double* cz;
    const double* dx;
    const double* dy;
    const double* dz;
    double* dist;
    std::size_t n;
};

// Dispatched entry points.
void seg_box_distance(const SegBoxBatch& batch);
void seg_prism_distance(const SegPrismBatch& batch);
void seg_seg_distance(const SegSegBatch& batch);

// Direct backend entry points (equivalence tests).
void seg_box_distance_scalar(const SegBoxBatch& batch);
void seg_prism_distance_scalar(const SegPrismBatch& batch);
void seg_seg_distance_scalar(const SegSegBatch& batch);
void seg_box_distance_avx2(const SegBoxBatch& batch);
void seg_prism_distance_avx2(const SegPrismBatch& batch);
void seg_seg_distance_avx2(const SegSegBatch& batch);

}  // namespace artiplan::kernels
