#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "artiplan/text_io.hpp"

namespace artiplan::geom {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;

// Rigid transform in SE(3). Orientation is stored as a unit quaternion and
// re-normalized after every composition; a decode touches thousands of
// compositions and matrix drift is not worth auditing.
struct Pose {
    Vec3 position{0.0, 0.0, 0.0};
    Quat orientation{1.0, 0.0, 0.0, 0.0};  // (w, x, y, z)

    Pose() = default;
    Pose(const Vec3& p, const Quat& q) : position(p), orientation(q.normalized()) {}

    static Pose identity() { return {}; }

    // Rotation about a coordinate axis, mostly for tests and fixtures.
    static Pose rot_x(double angle) { return axis_rot(Vec3::UnitX(), angle); }
    static Pose rot_y(double angle) { return axis_rot(Vec3::UnitY(), angle); }
    static Pose rot_z(double angle) { return axis_rot(Vec3::UnitZ(), angle); }
    static Pose translation(const Vec3& p) { return {p, Quat::Identity()}; }
    static Pose axis_rot(const Vec3& axis, double angle) {
        return {Vec3::Zero(), Quat(Eigen::AngleAxisd(angle, axis))};
    }

    Vec3 apply(const Vec3& p) const { return position + orientation * p; }

    Pose inverse() const {
        const Quat qi = orientation.conjugate();
        return {qi * -position, qi};
    }
};

// Translational / rotational distance between two poses. Rotational part is
// the SO(3) geodesic angle, 2*acos(|<qa, qb>|), which is insensitive to
// quaternion sign.
struct PoseError {
    double translational = 0.0;  // m
    double rotational = 0.0;     // rad

    bool within(double tol_trans, double tol_rot) const {
        return translational <= tol_trans && rotational <= tol_rot;
    }
};

// Applies b then a.
Pose compose(const Pose& a, const Pose& b);

PoseError pose_error(const Pose& a, const Pose& b);

// Rigid rotation of a pose about the spatial line (axis_point, axis_dir).
// axis_dir must be unit length to 1e-9.
Pose rotate_about_line(const Pose& p, const Vec3& axis_point, const Vec3& axis_dir, double angle);

// Rotation-vector (angle * axis) of the rotation taking b's orientation to
// a's, used as the rotational error term in the IK update.
Vec3 orientation_error_vector(const Quat& target, const Quat& current);

// Serialization: position triple then quaternion as (w, x, y, z).
void write_pose(TextWriter& out, const Pose& p);
Pose read_pose(TokenReader& in);

}  // namespace artiplan::geom
