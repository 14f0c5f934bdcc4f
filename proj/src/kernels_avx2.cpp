#include <stdexcept>
#include <type_traits>

#include "kernels_impl.hpp"

#ifdef ARTIPLAN_COMPILE_AVX2
#include <immintrin.h>

namespace artiplan::kernels {

namespace {

struct Avx2Lane {
    static constexpr std::size_t width = 4;
    using V = __m256d;
    using M = __m256d;
    static V load(const double* p) { return _mm256_loadu_pd(p); }
    static void store(double* p, V v) { _mm256_storeu_pd(p, v); }
    static V set1(double x) { return _mm256_set1_pd(x); }
    static V add(V a, V b) { return _mm256_add_pd(a, b); }
    static V sub(V a, V b) { return _mm256_sub_pd(a, b); }
    static V mul(V a, V b) { return _mm256_mul_pd(a, b); }
    static V div(V a, V b) { return _mm256_div_pd(a, b); }
    static V vmin(V a, V b) { return _mm256_min_pd(a, b); }
    static V vmax(V a, V b) { return _mm256_max_pd(a, b); }
    static V vsqrt(V a) { return _mm256_sqrt_pd(a); }
    static M lt(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
    static V select(M m, V a, V b) { return _mm256_blendv_pd(b, a, m); }
};

}  // namespace

using detail::Body;

void seg_box_distance_avx2(const SegBoxBatch& batch) {
    detail::run_batch<Avx2Lane, SegBoxBatch, &Body<Avx2Lane>::seg_box>(batch);
}

void seg_prism_distance_avx2(const SegPrismBatch& batch) {
    detail::run_batch<Avx2Lane, SegPrismBatch, &Body<Avx2Lane>::seg_prism>(batch);
}

void seg_seg_distance_avx2(const SegSegBatch& batch) {
    detail::run_batch<Avx2Lane, SegSegBatch, &Body<Avx2Lane>::seg_seg>(batch);
}

}  // namespace artiplan::kernels

#else  // no AVX2 at compile time: stubs that must never be dispatched to

namespace artiplan::kernels {

void seg_box_distance_avx2(const SegBoxBatch&) {
    throw std::runtime_error("AVX2 backend not compiled in");
}
void seg_prism_distance_avx2(const SegPrismBatch&) {
    throw std::runtime_error("AVX2 backend not compiled in");
}
void seg_seg_distance_avx2(const SegSegBatch&) {
    throw std::runtime_error("AVX2 backend not compiled in");
}

}  // namespace artiplan::kernels

#endif
