#pragma once

#include <vector>

#include "artiplan/geom.hpp"

namespace artiplan::solids {

using geom::Pose;
using geom::Vec3;
using Vec2 = Eigen::Vector2d;

struct Aabb {
    Vec3 lo{0, 0, 0};
    Vec3 hi{0, 0, 0};

    static Aabb of_points(const std::vector<Vec3>& pts);
    void expand(const Vec3& p);
    // Euclidean gap between two boxes; 0 when they overlap. Lower-bounds the
    // distance between any sets the boxes enclose, which is all the
    // broad-phase this project uses.
    double gap(const Aabb& other) const;
};

struct Capsule {
    Vec3 a;
    Vec3 b;
    double radius = 0.0;

    Aabb aabb() const;
};

// Convex solid: an oriented box, or a convex polygon (CCW, in the local xy
// plane) extruded over [z0, z1]. Everything static or articulated in a scene
// is a union of these.
struct Solid {
    enum class Kind { box, prism };

    Kind kind = Kind::box;
    Pose pose;                       // local -> world
    Vec3 half{0, 0, 0};              // box half extents
    std::vector<Vec2> poly;          // prism cross-section, CCW convex
    double z0 = 0.0, z1 = 0.0;       // prism extrusion interval

    static Solid make_box(const Pose& pose, const Vec3& half_extents);
    static Solid make_prism(const Pose& pose, std::vector<Vec2> polygon, double z0, double z1);

    Solid transformed(const Pose& t) const;

    std::vector<Vec3> vertices() const;
    Aabb aabb() const;

    struct Plane {
        Vec3 n;    // outward unit normal, world frame
        double d;  // n . x <= d inside
    };
    std::vector<Plane> planes() const;
    std::vector<Vec3> edge_dirs() const;

    bool contains(const Vec3& p, double tol = 0.0) const;

    // Deterministic sample points on every face, spaced at `pitch`, cell
    // centers (so samples sit strictly inside the face). Used by the
    // depth-camera visibility model.
    std::vector<Vec3> face_samples(double pitch) const;
};

// Strict-overlap test (separating axis over face normals and edge cross
// products). Touching contact does not count as intersection.
bool solids_intersect(const Solid& a, const Solid& b, double tol = 1e-9);

// True if the open segment p0 -> p(t_max) passes through the solid, i.e. the
// solid occludes the point at parameter t_max as seen from p0.
bool segment_hits(const Solid& s, const Vec3& p0, const Vec3& p1, double t_max);

// Validates a CCW convex polygon (used by loaders before building prisms).
bool is_ccw_convex(const std::vector<Vec2>& poly);

}  // namespace artiplan::solids
