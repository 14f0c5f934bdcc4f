#include "artiplan/ik.hpp"

#include <cmath>

namespace artiplan::ik {

namespace {

constexpr double kDampingMin = 1e-6;
constexpr double kDampingMax = 1e2;
constexpr int kMaxRetries = 3;

double combined(const PoseError& e) { return e.translational + kRotErrorWeight * e.rotational; }

Eigen::Matrix<double, 6, 1> error_vector(const Pose& target, const Pose& current) {
    Eigen::Matrix<double, 6, 1> e;
    e.head<3>() = target.position - current.position;
    e.tail<3>() = geom::orientation_error_vector(target.orientation, current.orientation);
    return e;
}

}  // namespace

IkResult solve_ik(const ArmModel& model, const BasePlacement& base, const Pose& target,
                  const JointConfig& init, const IkParams& params) {
    IkResult r;
    r.config = model.clamp(init.angles);

    Pose fk = robot::forward_kinematics(model, base, r.config);
    r.residual = geom::pose_error(fk, target);
    if (r.residual.within(params.tol_trans, params.tol_rot)) {
        r.converged = true;
        return r;
    }

    double damping = params.damping;
    for (int iter = 1; iter <= params.max_iters; ++iter) {
        const Eigen::Matrix<double, 6, robot::kNumJoints> jac = jacobian(model, base, r.config);
        const Eigen::Matrix<double, 6, 1> e = error_vector(target, fk);

        JointConfig next;
        Pose next_fk;
        PoseError next_res;
        for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
            Eigen::Matrix<double, 6, 6> a = jac * jac.transpose();
            a.diagonal().array() += damping;
            robot::JointVector dq = jac.transpose() * a.ldlt().solve(e);
            dq = dq.cwiseMax(-params.step_clamp).cwiseMin(params.step_clamp);

            next = model.clamp(r.config.angles + dq);
            next_fk = robot::forward_kinematics(model, base, next);
            next_res = geom::pose_error(next_fk, target);
            if (combined(next_res) <= combined(r.residual)) {
                damping = std::max(damping * 0.5, kDampingMin);
                break;
            }
            damping = std::min(damping * 2.0, kDampingMax);
        }
        // A step that never improved is taken anyway; stalling in place
        // cannot converge, and convergence is re-checked below.
        r.config = next;
        fk = next_fk;
        r.residual = next_res;
        r.iterations = iter;
        if (r.residual.within(params.tol_trans, params.tol_rot)) {
            r.converged = true;
            return r;
        }
    }
    return r;
}

BaseIkResult solve_ik_with_base(const ArmModel& model, const Pose& target,
                                const Eigen::Vector2d& face_xy, double height,
                                const Eigen::Vector2d& init_xy, const JointConfig& init,
                                const IkParams& params) {
    BaseIkResult r;
    r.config = model.clamp(init.angles);
    Eigen::Vector2d xy = init_xy;
    const double xy_clamp = 0.5 * params.step_clamp;

    auto aim = [&](const Eigen::Vector2d& at) {
        const Eigen::Vector2d d = face_xy - at;
        const double yaw = (d.norm() > 1e-12) ? std::atan2(d.y(), d.x()) : 0.0;
        return BasePlacement(at, height, yaw);
    };

    r.base = aim(xy);
    Pose fk = robot::forward_kinematics(model, r.base, r.config);
    r.residual = geom::pose_error(fk, target);
    if (r.residual.within(params.tol_trans, params.tol_rot)) {
        r.converged = true;
        return r;
    }

    double damping = params.damping;
    for (int iter = 1; iter <= params.max_iters; ++iter) {
        const Eigen::Matrix<double, 6, robot::kNumJoints> arm_jac = jacobian(model, r.base, r.config);
        // Base columns: pure translation; the yaw re-aim is treated as an
        // unmodeled disturbance that the damped iteration absorbs.
        Eigen::Matrix<double, 6, 9> jac = Eigen::Matrix<double, 6, 9>::Zero();
        jac.block<6, 7>(0, 0) = arm_jac;
        jac(0, 7) = 1.0;
        jac(1, 8) = 1.0;
        const Eigen::Matrix<double, 6, 1> e = error_vector(target, fk);

        JointConfig next;
        Eigen::Vector2d next_xy;
        BasePlacement next_base;
        Pose next_fk;
        PoseError next_res;
        for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
            Eigen::Matrix<double, 6, 6> a = jac * jac.transpose();
            a.diagonal().array() += damping;
            Eigen::Matrix<double, 9, 1> dq = jac.transpose() * a.ldlt().solve(e);
            dq.head<7>() = dq.head<7>().cwiseMax(-params.step_clamp).cwiseMin(params.step_clamp);
            dq.tail<2>() = dq.tail<2>().cwiseMax(-xy_clamp).cwiseMin(xy_clamp);

            next = model.clamp(r.config.angles + dq.head<7>());
            next_xy = xy + dq.tail<2>();
            next_base = aim(next_xy);
            next_fk = robot::forward_kinematics(model, next_base, next);
            next_res = geom::pose_error(next_fk, target);
            if (combined(next_res) <= combined(r.residual)) {
                damping = std::max(damping * 0.5, kDampingMin);
                break;
            }
            damping = std::min(damping * 2.0, kDampingMax);
        }
        r.config = next;
        xy = next_xy;
        r.base = next_base;
        fk = next_fk;
        r.residual = next_res;
        r.iterations = iter;
        if (r.residual.within(params.tol_trans, params.tol_rot)) {
            r.converged = true;
            return r;
        }
    }
    return r;
}

}  // namespace artiplan::ik
