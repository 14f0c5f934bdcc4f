#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "artiplan/kernels.hpp"

namespace artiplan::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool compiled_avx2() {
#ifdef __x86_64__
    return true;  // the avx2 TU is built whenever -mavx2 is accepted
#else
    return false;
#endif
}

Backend detect() {
    if (const char* env = std::getenv("ARTIPLAN_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0) {
            if (!backend_available(Backend::avx2))
                throw std::runtime_error("ARTIPLAN_KERNELS=avx2 but AVX2 is unavailable");
            return Backend::avx2;
        }
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_backend{-1};

Backend current() {
    int b = g_backend.load(std::memory_order_acquire);
    if (b < 0) {
        b = static_cast<int>(detect());
        g_backend.store(b, std::memory_order_release);
    }
    return static_cast<Backend>(b);
}

}  // namespace

bool backend_available(Backend b) {
    if (b == Backend::scalar) return true;
    return compiled_avx2() && cpu_has_avx2();
}

Backend active_backend() { return current(); }

void set_backend(Backend b) {
    if (!backend_available(b)) throw std::runtime_error("requested kernel backend unavailable");
    g_backend.store(static_cast<int>(b), std::memory_order_release);
}

void seg_box_distance(const SegBoxBatch& batch) {
    if (current() == Backend::avx2)
        seg_box_distance_avx2(batch);
    else
        seg_box_distance_scalar(batch);
}

void seg_prism_distance(const SegPrismBatch& batch) {
    if (current() == Backend::avx2)
        seg_prism_distance_avx2(batch);
    else
        seg_prism_distance_scalar(batch);
}

void seg_seg_distance(const SegSegBatch& batch) {
    if (current() == Backend::avx2)
        seg_seg_distance_avx2(batch);
    else
        seg_seg_distance_scalar(batch);
}

}  // namespace artiplan::kernels
