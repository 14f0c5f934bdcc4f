#include "artiplan/geom.hpp"

#include <cmath>

namespace artiplan::geom {

Pose compose(const Pose& a, const Pose& b) {
    Pose out;
    out.position = a.position + a.orientation * b.position;
    out.orientation = (a.orientation * b.orientation).normalized();
    return out;
}

PoseError pose_error(const Pose& a, const Pose& b) {
    PoseError e;
    e.translational = (a.position - b.position).norm();
    const double d = std::abs(a.orientation.dot(b.orientation));
    e.rotational = 2.0 * std::acos(std::min(d, 1.0));
    return e;
}

Pose rotate_about_line(const Pose& p, const Vec3& axis_point, const Vec3& axis_dir, double angle) {
    if (std::abs(axis_dir.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("rotate_about_line: axis_dir must be unit length");
    const Quat r(Eigen::AngleAxisd(angle, axis_dir));
    Pose out;
    out.position = axis_point + r * (p.position - axis_point);
    out.orientation = (r * p.orientation).normalized();
    return out;
}

Vec3 orientation_error_vector(const Quat& target, const Quat& current) {
    Quat rel = target * current.conjugate();
    if (rel.w() < 0.0) rel.coeffs() = -rel.coeffs();
    const Eigen::AngleAxisd aa(rel);
    return aa.angle() * aa.axis();
}

void write_pose(TextWriter& out, const Pose& p) {
    out.num(p.position.x()).num(p.position.y()).num(p.position.z());
    out.num(p.orientation.w()).num(p.orientation.x()).num(p.orientation.y()).num(p.orientation.z());
}

Pose read_pose(TokenReader& in) {
    Vec3 pos;
    pos.x() = in.take_double();
    pos.y() = in.take_double();
    pos.z() = in.take_double();
    const double w = in.take_double();
    const double x = in.take_double();
    const double y = in.take_double();
    const double z = in.take_double();
    Quat q(w, x, y, z);
    if (std::abs(q.norm() - 1.0) > 1e-6) in.fail("quaternion is not unit length");
    return Pose(pos, q);
}

}  // namespace artiplan::geom
