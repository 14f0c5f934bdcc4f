#include "artiplan/artic.hpp"

#include <cmath>
#include <stdexcept>

namespace artiplan::artic {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::prismatic: return "prismatic";
        case Kind::hinge_left: return "hinge_left";
        case Kind::hinge_right: return "hinge_right";
        case Kind::hinge_top: return "hinge_top";
        case Kind::hinge_bottom: return "hinge_bottom";
    }
    return "?";
}

Kind kind_from_name(const std::string& name) {
    for (const Kind k : {Kind::prismatic, Kind::hinge_left, Kind::hinge_right, Kind::hinge_top,
                         Kind::hinge_bottom})
        if (name == kind_name(k)) return k;
    throw std::invalid_argument("unknown articulation kind '" + name + "'");
}

const char* kind_category(Kind k) {
    switch (k) {
        case Kind::prismatic: return "prismatic";
        case Kind::hinge_left:
        case Kind::hinge_right: return "vertical_hinge";
        case Kind::hinge_bottom: return "horizontal_down_hinge";
        case Kind::hinge_top: return "horizontal_up_hinge";
    }
    return "?";
}

namespace {

// Derived hinge axes in the face frame; direction signs make a positive
// rotation swing the face outward (+z side).
void derived_axis(const ArticulatedObject& obj, Vec3& point, Vec3& dir) {
    const FaceRect& f = obj.face;
    const double hw = 0.5 * f.width;
    const double hh = 0.5 * f.height;
    Vec3 local_point, local_dir;
    switch (obj.kind) {
        case Kind::hinge_left:
            local_point = Vec3(-hw, 0, 0);
            local_dir = -Vec3::UnitY();
            break;
        case Kind::hinge_right:
            local_point = Vec3(hw, 0, 0);
            local_dir = Vec3::UnitY();
            break;
        case Kind::hinge_top:
            local_point = Vec3(0, hh, 0);
            local_dir = -Vec3::UnitX();
            break;
        case Kind::hinge_bottom:
            local_point = Vec3(0, -hh, 0);
            local_dir = Vec3::UnitX();
            break;
        default:
            local_point = Vec3::Zero();
            local_dir = Vec3::UnitZ();
            break;
    }
    point = f.center.apply(local_point);
    dir = f.center.orientation * local_dir;
}

double point_line_distance(const Vec3& p, const Vec3& line_point, const Vec3& line_dir) {
    const Vec3 d = p - line_point;
    return (d - d.dot(line_dir) * line_dir).norm();
}

}  // namespace

ArticulatedObject ArticulatedObject::make(Kind kind, const FaceRect& face, const Pose& handle,
                                          double opening_extent, double face_thickness,
                                          std::vector<Vec2> lid_profile,
                                          std::optional<std::pair<Vec3, Vec3>> explicit_axis) {
    if (!(face.width > 0.0) || !(face.height > 0.0))
        throw std::invalid_argument("degenerate face rectangle");
    if (!(opening_extent > 0.0)) throw std::invalid_argument("opening_extent must be positive");
    if (!(face_thickness > 0.0)) throw std::invalid_argument("face_thickness must be positive");
    if (!lid_profile.empty() && !solids::is_ccw_convex(lid_profile))
        throw std::invalid_argument("lid profile must be a CCW convex polygon");

    ArticulatedObject obj;
    obj.kind = kind;
    obj.face = face;
    obj.handle = handle;
    obj.opening_extent = opening_extent;
    obj.face_thickness = face_thickness;
    obj.lid_profile = std::move(lid_profile);

    // Handle must lie on the face plane.
    const double off = face.outward_normal().dot(handle.position - face.center.position);
    if (std::abs(off) > 1e-6)
        throw std::invalid_argument("handle does not lie on the face plane");

    if (kind == Kind::prismatic) {
        obj.axis_point = face.center.position;
        obj.axis_dir = face.outward_normal();
    } else {
        Vec3 edge_point, edge_dir;
        derived_axis(obj, edge_point, edge_dir);
        if (explicit_axis) {
            obj.axis_point = explicit_axis->first;
            obj.axis_dir = explicit_axis->second;
            if (std::abs(obj.axis_dir.norm() - 1.0) > 1e-9)
                throw std::invalid_argument("axis direction must be unit length");
            if (obj.lid_profile.empty()) {
                // Rectangular hinges must still sit on the stated face edge.
                if (point_line_distance(obj.axis_point, edge_point, edge_dir) > 1e-6 ||
                    obj.axis_dir.cross(edge_dir).norm() > 1e-6)
                    throw std::invalid_argument("hinge axis does not coincide with the face edge");
            }
        } else {
            if (!obj.lid_profile.empty())
                throw std::invalid_argument("lid profiles require an explicit axis");
            obj.axis_point = edge_point;
            obj.axis_dir = edge_dir;
        }
    }
    return obj;
}

Pose articulation_map(const ArticulatedObject& obj, double fraction) {
    if (obj.kind == Kind::prismatic) {
        return Pose::translation(fraction * obj.opening_extent * obj.face.outward_normal());
    }
    const double angle = fraction * obj.opening_extent;
    const Quat r(Eigen::AngleAxisd(angle, obj.axis_dir));
    return Pose(obj.axis_point - r * obj.axis_point, r);
}

Pose constraint_pose_at(const ArticulatedObject& obj, double fraction) {
    return geom::compose(articulation_map(obj, fraction), obj.handle);
}

WaypointTrajectory generate_waypoints(const ArticulatedObject& obj, int t_steps) {
    if (t_steps < 2) throw std::invalid_argument("waypoint count must be >= 2");
    WaypointTrajectory wt;
    wt.waypoints.reserve(static_cast<std::size_t>(t_steps));
    wt.opening_fractions.reserve(static_cast<std::size_t>(t_steps));
    for (int k = 0; k < t_steps; ++k) {
        const double f = static_cast<double>(k) / static_cast<double>(t_steps - 1);
        wt.opening_fractions.push_back(f);
        wt.waypoints.push_back(constraint_pose_at(obj, f));
    }
    return wt;
}

std::vector<solids::Solid> object_geometry_at(const ArticulatedObject& obj, double fraction) {
    const Pose map = articulation_map(obj, fraction);
    std::vector<solids::Solid> out;
    if (obj.lid_profile.empty()) {
        const Pose slab_center =
            geom::compose(obj.face.center, Pose::translation(Vec3(0, 0, -0.5 * obj.face_thickness)));
        out.push_back(solids::Solid::make_box(
            slab_center, Vec3(0.5 * obj.face.width, 0.5 * obj.face.height, 0.5 * obj.face_thickness)));
    } else {
        out.push_back(
            solids::Solid::make_prism(obj.face.center, obj.lid_profile, -obj.face_thickness, 0.0));
    }
    for (auto& s : out) s = s.transformed(map);
    return out;
}

Pose make_handle_grasp(const FaceRect& face, Kind kind, const Vec2& handle_xy) {
    const Vec3 pos = face.center.apply(Vec3(handle_xy.x(), handle_xy.y(), 0.0));
    const bool horizontal_hinge = (kind == Kind::hinge_top || kind == Kind::hinge_bottom);
    const Vec3 close_axis = horizontal_hinge ? face.height_dir() : face.width_dir();
    const Vec3 approach = -face.outward_normal();
    Eigen::Matrix3d r;
    r.col(0) = close_axis;
    r.col(1) = approach.cross(close_axis);
    r.col(2) = approach;
    return Pose(pos, Quat(r));
}

std::vector<Vec2> half_ellipse_profile(double width, double height) {
    // Flat edge along y = +height/2, arc bulging to y = -height/2.
    std::vector<Vec2> poly;
    const int n = 8;
    for (int k = 0; k < n; ++k) {
        const double phi = M_PI + M_PI * static_cast<double>(k) / static_cast<double>(n - 1);
        poly.emplace_back(0.5 * width * std::cos(phi), 0.5 * height + height * std::sin(phi));
    }
    return poly;
}

}  // namespace artiplan::artic
