#include "artiplan/robot.hpp"

#include <cmath>
#include <set>

namespace artiplan::robot {

bool is_allowed_height(double h) {
    for (const double a : kAllowedHeights)
        if (std::abs(h - a) <= 1e-9) return true;
    return false;
}

double nearest_allowed_height(double h) {
    double best = kAllowedHeights[0];
    for (const double a : kAllowedHeights)
        if (std::abs(h - a) < std::abs(h - best)) best = a;
    return best;
}

BasePlacement::BasePlacement(const Eigen::Vector2d& xy_, double height_, double yaw_)
    : xy(xy_), height(height_), yaw(yaw_) {
    if (!is_allowed_height(height))
        throw std::invalid_argument("base height " + std::to_string(height_) +
                                    " is not one of the allowed mounting heights");
}

Pose BasePlacement::pose() const {
    return geom::Pose(Vec3(xy.x(), xy.y(), height),
                      geom::Quat(Eigen::AngleAxisd(yaw, Vec3::UnitZ())));
}

ArmModel ArmModel::from_file(const std::string& path) {
    return from_text(read_file(path), path);
}

ArmModel ArmModel::from_text(const std::string& text, const std::string& source_name) {
    TokenReader in(text, source_name);
    ArmModel m;
    std::array<bool, kNumJoints> seen{};
    bool have_flange = false;

    in.expect("robot_version");
    if (in.take_int() != 1) in.fail("unsupported robot_version");

    while (!in.at_end()) {
        const std::string key = in.take();
        if (key == "name") {
            m.name_ = in.take();
        } else if (key == "joint") {
            const std::int64_t idx = in.take_int();
            if (idx < 0 || idx >= kNumJoints) in.fail("joint index out of range (7-DOF arm)");
            JointDescriptor& j = m.joints_[static_cast<std::size_t>(idx)];
            in.expect("origin");
            j.origin = geom::read_pose(in);
            in.expect("axis");
            Vec3 axis;
            axis.x() = in.take_double();
            axis.y() = in.take_double();
            axis.z() = in.take_double();
            if (std::abs(axis.norm() - 1.0) > 1e-6) in.fail("joint axis must be unit length");
            j.axis = axis.normalized();
            in.expect("limits");
            j.lo = in.take_double();
            j.hi = in.take_double();
            if (!(j.lo < j.hi)) in.fail("joint limits must satisfy lo < hi");
            seen[static_cast<std::size_t>(idx)] = true;
        } else if (key == "flange") {
            m.flange_ = geom::read_pose(in);
            have_flange = true;
        } else if (key == "capsule") {
            LinkCapsule c;
            const std::int64_t link = in.take_int();
            if (link < 0 || link > kNumJoints) in.fail("capsule link index out of range");
            c.link = static_cast<int>(link);
            c.capsule.a.x() = in.take_double();
            c.capsule.a.y() = in.take_double();
            c.capsule.a.z() = in.take_double();
            c.capsule.b.x() = in.take_double();
            c.capsule.b.y() = in.take_double();
            c.capsule.b.z() = in.take_double();
            c.capsule.radius = in.take_double();
            if (!(c.capsule.radius > 0.0)) in.fail("capsule radius must be positive");
            m.capsules_.push_back(c);
        } else if (key == "self_exempt") {
            const int a = static_cast<int>(in.take_int());
            const int b = static_cast<int>(in.take_int());
            m.link_exempt_.emplace_back(std::min(a, b), std::max(a, b));
        } else {
            in.fail("unknown key '" + key + "'");
        }
    }

    for (int i = 0; i < kNumJoints; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw ParseError(source_name + ": missing joint " + std::to_string(i));
    if (!have_flange) throw ParseError(source_name + ": missing flange transform");

    m.build_self_pairs();
    return m;
}

void ArmModel::build_self_pairs() {
    std::set<std::pair<int, int>> exempt(link_exempt_.begin(), link_exempt_.end());
    self_pairs_.clear();
    for (std::size_t i = 0; i < capsules_.size(); ++i)
        for (std::size_t j = i + 1; j < capsules_.size(); ++j) {
            const int la = std::min(capsules_[i].link, capsules_[j].link);
            const int lb = std::max(capsules_[i].link, capsules_[j].link);
            if (lb - la <= 1) continue;  // same or adjacent link
            if (exempt.count({la, lb})) continue;
            self_pairs_.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
}

JointConfig ArmModel::clamp(const JointVector& q) const {
    JointConfig out;
    out.angles = q;
    for (int i = 0; i < kNumJoints; ++i) {
        const auto& j = joints_[static_cast<std::size_t>(i)];
        if (out.angles[i] < j.lo) {
            out.angles[i] = j.lo;
            out.clamped = true;
        } else if (out.angles[i] > j.hi) {
            out.angles[i] = j.hi;
            out.clamped = true;
        }
    }
    return out;
}

bool ArmModel::within_limits(const JointVector& q, double tol) const {
    for (int i = 0; i < kNumJoints; ++i) {
        const auto& j = joints_[static_cast<std::size_t>(i)];
        if (q[i] < j.lo - tol || q[i] > j.hi + tol) return false;
    }
    return true;
}

JointVector ArmModel::mid_range() const {
    JointVector q;
    for (int i = 0; i < kNumJoints; ++i)
        q[i] = 0.5 * (joints_[static_cast<std::size_t>(i)].lo + joints_[static_cast<std::size_t>(i)].hi);
    return q;
}

FkResult forward_kinematics_full(const ArmModel& model, const BasePlacement& base,
                                 const JointConfig& q) {
    FkResult r;
    Pose t = base.pose();
    r.link_poses[0] = t;
    for (int i = 0; i < kNumJoints; ++i) {
        const auto& j = model.joints()[static_cast<std::size_t>(i)];
        t = geom::compose(t, j.origin);
        r.joint_origins_world[static_cast<std::size_t>(i)] = t.position;
        r.joint_axes_world[static_cast<std::size_t>(i)] = t.orientation * j.axis;
        t = geom::compose(t, Pose::axis_rot(j.axis, q.angles[i]));
        r.link_poses[static_cast<std::size_t>(i) + 1] = t;
    }
    r.ee = geom::compose(t, model.flange());
    return r;
}

Pose forward_kinematics(const ArmModel& model, const BasePlacement& base, const JointConfig& q) {
    return forward_kinematics_full(model, base, q).ee;
}

Eigen::Matrix<double, 6, kNumJoints> jacobian(const ArmModel& model, const BasePlacement& base,
                                              const JointConfig& q) {
    const FkResult fk = forward_kinematics_full(model, base, q);
    Eigen::Matrix<double, 6, kNumJoints> jac;
    for (int i = 0; i < kNumJoints; ++i) {
        const Vec3& z = fk.joint_axes_world[static_cast<std::size_t>(i)];
        const Vec3 lever = fk.ee.position - fk.joint_origins_world[static_cast<std::size_t>(i)];
        jac.block<3, 1>(0, i) = z.cross(lever);
        jac.block<3, 1>(3, i) = z;
    }
    return jac;
}

std::vector<solids::Capsule> link_geometry(const ArmModel& model, const BasePlacement& base,
                                           const JointConfig& q) {
    const FkResult fk = forward_kinematics_full(model, base, q);
    std::vector<solids::Capsule> out;
    out.reserve(model.capsules().size());
    for (const LinkCapsule& c : model.capsules()) {
        const Pose& lp = fk.link_poses[static_cast<std::size_t>(c.link)];
        out.push_back({lp.apply(c.capsule.a), lp.apply(c.capsule.b), c.capsule.radius});
    }
    return out;
}

}  // namespace artiplan::robot
