#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artiplan/solids.hpp"

namespace artiplan::artic {

using geom::Pose;
using geom::Quat;
using geom::Vec3;
using solids::Vec2;

// Articulation kinds. Face frame convention: local x along the face width,
// local y along the face height, local z the outward normal.
enum class Kind { prismatic, hinge_left, hinge_right, hinge_top, hinge_bottom };

const char* kind_name(Kind k);
Kind kind_from_name(const std::string& name);
// Reporting category (vertical hinges merge): prismatic, vertical_hinge,
// horizontal_down_hinge, horizontal_up_hinge.
const char* kind_category(Kind k);

struct FaceRect {
    Pose center;
    double width = 0.0;   // extent along local x, m
    double height = 0.0;  // extent along local y, m

    Vec3 outward_normal() const { return center.orientation * Vec3::UnitZ(); }
    Vec3 width_dir() const { return center.orientation * Vec3::UnitX(); }
    Vec3 height_dir() const { return center.orientation * Vec3::UnitY(); }
};

// An articulated panel: prismatic faces translate along the outward normal,
// hinged faces rotate about an edge of the face rectangle (sign chosen so
// the face swings outward). Non-cuboidal lids carry an explicit convex
// profile polygon and an explicit axis instead of a derived edge.
struct ArticulatedObject {
    Kind kind = Kind::prismatic;
    FaceRect face;
    Pose handle;                     // grasp pose, on the face plane
    Vec3 axis_point{0, 0, 0};        // spatial articulation line
    Vec3 axis_dir{0, 0, 1};
    double opening_extent = 0.0;     // m (prismatic) or rad (hinges)
    std::vector<Vec2> lid_profile;   // empty for rectangular faces
    double face_thickness = 0.019;

    // Builds and validates; hinge axes are derived from the face edge unless
    // an explicit axis is supplied (required for lid profiles).
    static ArticulatedObject make(Kind kind, const FaceRect& face, const Pose& handle,
                                  double opening_extent, double face_thickness,
                                  std::vector<Vec2> lid_profile = {},
                                  std::optional<std::pair<Vec3, Vec3>> explicit_axis = {});
};

inline constexpr double kDefaultPrismaticExtent = 0.30;        // m
inline constexpr double kDefaultHingeExtent = 1.5707963267948966;  // rad
inline constexpr int kDefaultWaypointCount = 10;

// Rigid map taking the closed-state panel to its pose at `fraction`.
Pose articulation_map(const ArticulatedObject& obj, double fraction);

// The task-constraint curve: the handle grasp pose articulated to `fraction`.
Pose constraint_pose_at(const ArticulatedObject& obj, double fraction);

struct WaypointTrajectory {
    std::vector<Pose> waypoints;
    std::vector<double> opening_fractions;  // strictly increasing, 0 -> 1

    std::size_t size() const { return waypoints.size(); }
};

// T waypoints at uniform opening fractions k/(T-1). waypoints[k] equals
// constraint_pose_at(obj, k/(T-1)) bitwise.
WaypointTrajectory generate_waypoints(const ArticulatedObject& obj, int t_steps);

// The panel's collision solids at the given opening fraction.
std::vector<solids::Solid> object_geometry_at(const ArticulatedObject& obj, double fraction);

// Deterministic grasp-frame convention at a handle point (face-plane
// coordinates): approach anti-parallel to the outward normal; closing axis
// along the face width for prismatic/vertical hinges, along the face height
// for horizontal hinges.
Pose make_handle_grasp(const FaceRect& face, Kind kind, const Vec2& handle_xy);

// Convex half-ellipse profile (8-gon) spanning the face rectangle, flat edge
// on the +y border: the stand-in for non-cuboidal lids.
std::vector<Vec2> half_ellipse_profile(double width, double height);

}  // namespace artiplan::artic
