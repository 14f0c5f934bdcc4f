#include <type_traits>

#include "kernels_impl.hpp"

namespace artiplan::kernels {

using detail::Body;
using detail::ScalarLane;

void seg_box_distance_scalar(const SegBoxBatch& batch) {
    detail::run_batch<ScalarLane, SegBoxBatch, &Body<ScalarLane>::seg_box>(batch);
}

void seg_prism_distance_scalar(const SegPrismBatch& batch) {
    detail::run_batch<ScalarLane, SegPrismBatch, &Body<ScalarLane>::seg_prism>(batch);
}

void seg_seg_distance_scalar(const SegSegBatch& batch) {
    detail::run_batch<ScalarLane, SegSegBatch, &Body<ScalarLane>::seg_seg>(batch);
}

}  // namespace artiplan::kernels
