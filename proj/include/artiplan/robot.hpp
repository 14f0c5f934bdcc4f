#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "artiplan/geom.hpp"
#include "artiplan/solids.hpp"

namespace artiplan::robot {

using geom::Pose;
using geom::Vec3;

inline constexpr int kNumJoints = 7;
using JointVector = Eigen::Matrix<double, kNumJoints, 1>;

// The mobile base exposes 4 discrete mounting heights.
inline constexpr std::array<double, 4> kAllowedHeights{0.25, 0.5, 1.0, 1.5};
bool is_allowed_height(double h);
double nearest_allowed_height(double h);

// Joint angles, always within limits: construction goes through
// ArmModel::clamp which records whether clamping occurred, so IK inner loops
// never need to branch on out-of-range input.
struct JointConfig {
    JointVector angles = JointVector::Zero();
    bool clamped = false;
};

struct BasePlacement {
    Eigen::Vector2d xy{0.0, 0.0};  // scene frame, m
    double height = 0.25;          // one of kAllowedHeights
    double yaw = 0.0;              // rad, about +z

    BasePlacement() = default;
    BasePlacement(const Eigen::Vector2d& xy_, double height_, double yaw_);

    Pose pose() const;
};

struct JointDescriptor {
    Pose origin;  // fixed transform from the parent link frame
    Vec3 axis;    // unit rotation axis in the joint frame
    double lo = 0.0, hi = 0.0;
};

// A capsule attached to a link frame. Link 0 is the base-mounted trunk;
// link i (1..7) is the frame after joint i-1.
struct LinkCapsule {
    int link = 0;
    solids::Capsule capsule;
};

// Kinematic description of the 7-DOF arm. Parameters ship as a data file so
// tests can use simplified chains with exact hand-computed oracles.
class ArmModel {
public:
    static ArmModel from_file(const std::string& path);
    static ArmModel from_text(const std::string& text, const std::string& source_name);

    const std::string& name() const { return name_; }
    const std::array<JointDescriptor, kNumJoints>& joints() const { return joints_; }
    const Pose& flange() const { return flange_; }
    const std::vector<LinkCapsule>& capsules() const { return capsules_; }

    // Capsule index pairs that self-collision checking must test: all pairs
    // on non-adjacent links, minus the exemptions listed in the data file.
    const std::vector<std::pair<int, int>>& self_check_pairs() const { return self_pairs_; }

    static constexpr int distal_link() { return kNumJoints; }

    JointConfig clamp(const JointVector& q) const;
    bool within_limits(const JointVector& q, double tol = 1e-12) const;
    JointVector mid_range() const;

private:
    std::string name_;
    std::array<JointDescriptor, kNumJoints> joints_;
    Pose flange_;
    std::vector<LinkCapsule> capsules_;
    std::vector<std::pair<int, int>> link_exempt_;
    std::vector<std::pair<int, int>> self_pairs_;

    void build_self_pairs();
};

struct FkResult {
    Pose ee;                                          // grasp frame, scene frame
    std::array<Pose, kNumJoints + 1> link_poses;      // world pose of each link frame
    std::array<Vec3, kNumJoints> joint_axes_world;    // unit axes
    std::array<Vec3, kNumJoints> joint_origins_world; // rotation points
};

FkResult forward_kinematics_full(const ArmModel& model, const BasePlacement& base,
                                 const JointConfig& q);
Pose forward_kinematics(const ArmModel& model, const BasePlacement& base, const JointConfig& q);

// Geometric Jacobian of the grasp frame: rows 0-2 translational (m/rad),
// rows 3-5 rotational (rad/rad), scene frame.
Eigen::Matrix<double, 6, kNumJoints> jacobian(const ArmModel& model, const BasePlacement& base,
                                              const JointConfig& q);

// World-frame capsules, one per ArmModel::capsules() entry, same order.
std::vector<solids::Capsule> link_geometry(const ArmModel& model, const BasePlacement& base,
                                           const JointConfig& q);

}  // namespace artiplan::robot
