#pragma once

#include <map>
#include <string>
#include <vector>

#include "artiplan/artic.hpp"
#include "artiplan/solids.hpp"

namespace artiplan::scene {

using geom::Pose;
using geom::Vec3;

// Static clutter plus articulated objects. Scenes are immutable after
// load/generation.
struct Scene {
    std::string scene_id;
    double floor_z = 0.0;
    Pose camera;  // viewpoint that determines sensed geometry
    std::vector<solids::Solid> statics;
    std::vector<artic::ArticulatedObject> objects;
};

// One evaluation unit: a scene, a target object, and the end-effector
// waypoints that articulate it.
struct ProblemInstance {
    std::string instance_id;
    std::string scene_path;  // as referenced by the instance file ("" if in-memory)
    Scene scene;
    int target_object_index = 0;
    artic::WaypointTrajectory waypoints;
    std::string split;  // train | val | test

    const artic::ArticulatedObject& object() const {
        return scene.objects[static_cast<std::size_t>(target_object_index)];
    }
};

// Scene document (text, versioned). Loading validates every invariant
// (solids above the floor, handles on face planes, hinge axes on face
// edges, closed panels disjoint from statics) and reports the failing path.
Scene load_scene(const std::string& text, const std::string& source_name);
std::string save_scene(const Scene& s);
Scene load_scene_file(const std::string& path);
void save_scene_file(const Scene& s, const std::string& path);

std::string save_instance(const ProblemInstance& inst);
// Loads the instance and its referenced scene (path relative to the
// instance file); stored waypoints are checked against re-derived ones.
ProblemInstance load_instance_file(const std::string& path);
void save_instance_file(const ProblemInstance& inst, const std::string& path);

// Suite manifest: a list of instance files.
std::vector<ProblemInstance> load_suite(const std::string& manifest_path);

// Face-sample grid pitch of the visibility model.
inline constexpr double kVisibilityPitch = 0.05;

// The subset of statics with at least one face sample directly visible from
// the camera. Occluders are the other statics plus every object's
// closed-state panel (a depth image is taken with everything closed).
std::vector<solids::Solid> sensed_geometry(const Scene& s, const Pose& camera);
std::vector<int> sensed_static_indices(const Scene& s, const Pose& camera);

// Obstacle set a motion plan is checked against: scene statics plus the
// closed panels of every articulated object other than the target. `sensed`
// filters both through the visibility test; ground-truth evaluation uses the
// full set.
struct CollisionWorld {
    std::vector<solids::Solid> statics;
    double floor_z = 0.0;
};
CollisionWorld full_world(const Scene& s, int target_index);
CollisionWorld sensed_world(const Scene& s, int target_index);

struct GeneratorParams {
    std::map<artic::Kind, int> counts;  // instances per articulation kind
    double handle_height_min = 0.4;     // m
    double handle_height_max = 1.3;     // m
    double clutter_density = 2.0;       // mean clutter solids per scene
    int waypoint_count = artic::kDefaultWaypointCount;
    double prismatic_extent = artic::kDefaultPrismaticExtent;
    double hinge_extent = artic::kDefaultHingeExtent;
    std::string id_prefix;  // distinguishes suites generated in one process
};

// Deterministic under seed. Instances from the same scene share a split
// (assignment is by scene, 60/20/20).
std::vector<ProblemInstance> generate_instances(std::uint64_t seed, const GeneratorParams& params);

}  // namespace artiplan::scene
