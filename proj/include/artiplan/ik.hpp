#pragma once

#include "artiplan/robot.hpp"

namespace artiplan::ik {

using geom::Pose;
using geom::PoseError;
using robot::ArmModel;
using robot::BasePlacement;
using robot::JointConfig;

// Weight that folds rotational error (rad) into the scalar step-acceptance
// residual: 0.5 m/rad makes 0.01 rad comparable to 0.005 m, mirroring the
// feasibility tolerance ratio.
inline constexpr double kRotErrorWeight = 0.5;

struct IkParams {
    double damping = 1e-2;    // initial damping, added to squared singular values
    int max_iters = 60;
    double step_clamp = 0.2;  // max per-joint change per iteration, rad
    double tol_trans = 1e-4;  // m
    double tol_rot = 1e-4;    // rad
};

struct IkResult {
    JointConfig config;
    bool converged = false;
    int iterations = 0;
    PoseError residual;
};

// Damped least squares from `init` toward `target`. Deterministic; joint
// limits enforced by clamping every iterate. Damping adapts: halved on an
// accepted step, doubled on a rejected one (a step that increases the
// combined residual is recomputed with the larger damping, at most 3
// retries per iteration). Non-convergence is a valid result.
IkResult solve_ik(const ArmModel& model, const BasePlacement& base, const Pose& target,
                  const JointConfig& init, const IkParams& params);

// 9-DOF variant used by the IK-initialization baseline: two virtual
// prismatic joints move the base in the plane while the yaw is re-aimed at
// `face_xy` each iteration and the height stays fixed. The returned base
// xy is continuous (not grid-snapped).
struct BaseIkResult {
    BasePlacement base;
    JointConfig config;
    bool converged = false;
    int iterations = 0;
    PoseError residual;
};

BaseIkResult solve_ik_with_base(const ArmModel& model, const Pose& target,
                                const Eigen::Vector2d& face_xy, double height,
                                const Eigen::Vector2d& init_xy, const JointConfig& init,
                                const IkParams& params);

}  // namespace artiplan::ik
