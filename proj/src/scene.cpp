#include "artiplan/scene.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "artiplan/rng.hpp"

namespace artiplan::scene {

using artic::ArticulatedObject;
using artic::Kind;
using solids::Solid;
using solids::Vec2;

namespace {

void write_solid(TextWriter& w, const Solid& s) {
    if (s.kind == Solid::Kind::box) {
        w.word("box");
        geom::write_pose(w, s.pose);
        w.num(s.half.x()).num(s.half.y()).num(s.half.z());
    } else {
        w.word("prism");
        geom::write_pose(w, s.pose);
        w.num(s.z0).num(s.z1).num(static_cast<std::int64_t>(s.poly.size()));
        for (const Vec2& v : s.poly) w.num(v.x()).num(v.y());
    }
    w.end_line();
}

Solid read_solid(TokenReader& in) {
    const std::string tag = in.take();
    if (tag == "box") {
        const geom::Pose pose = geom::read_pose(in);
        Vec3 half;
        half.x() = in.take_double();
        half.y() = in.take_double();
        half.z() = in.take_double();
        return Solid::make_box(pose, half);
    }
    if (tag == "prism") {
        const geom::Pose pose = geom::read_pose(in);
        const double z0 = in.take_double();
        const double z1 = in.take_double();
        const std::int64_t n = in.take_int();
        if (n < 3 || n > 64) in.fail("prism vertex count out of range");
        std::vector<Vec2> poly;
        poly.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            const double x = in.take_double();
            const double y = in.take_double();
            poly.emplace_back(x, y);
        }
        return Solid::make_prism(pose, std::move(poly), z0, z1);
    }
    in.fail("expected 'box' or 'prism', got '" + tag + "'");
}

void write_object(TextWriter& w, const ArticulatedObject& o) {
    w.word("object").word(artic::kind_name(o.kind));
    w.word("face");
    geom::write_pose(w, o.face.center);
    w.num(o.face.width).num(o.face.height);
    w.word("handle");
    geom::write_pose(w, o.handle);
    w.word("extent").num(o.opening_extent);
    w.word("thickness").num(o.face_thickness);
    w.word("axis")
        .num(o.axis_point.x())
        .num(o.axis_point.y())
        .num(o.axis_point.z())
        .num(o.axis_dir.x())
        .num(o.axis_dir.y())
        .num(o.axis_dir.z());
    w.word("lid").num(static_cast<std::int64_t>(o.lid_profile.size()));
    for (const Vec2& v : o.lid_profile) w.num(v.x()).num(v.y());
    w.end_line();
}

ArticulatedObject read_object(TokenReader& in) {
    in.expect("object");
    const Kind kind = artic::kind_from_name(in.take());
    in.expect("face");
    artic::FaceRect face;
    face.center = geom::read_pose(in);
    face.width = in.take_double();
    face.height = in.take_double();
    in.expect("handle");
    const geom::Pose handle = geom::read_pose(in);
    in.expect("extent");
    const double extent = in.take_double();
    in.expect("thickness");
    const double thickness = in.take_double();
    in.expect("axis");
    Vec3 ap, ad;
    ap.x() = in.take_double();
    ap.y() = in.take_double();
    ap.z() = in.take_double();
    ad.x() = in.take_double();
    ad.y() = in.take_double();
    ad.z() = in.take_double();
    in.expect("lid");
    const std::int64_t n = in.take_int();
    if (n < 0 || n > 64) in.fail("lid vertex count out of range");
    std::vector<Vec2> lid;
    lid.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double x = in.take_double();
        const double y = in.take_double();
        lid.emplace_back(x, y);
    }
    std::optional<std::pair<Vec3, Vec3>> axis;
    if (kind != Kind::prismatic) axis = std::make_pair(ap, ad);
    try {
        return ArticulatedObject::make(kind, face, handle, extent, thickness, std::move(lid), axis);
    } catch (const std::invalid_argument& e) {
        in.fail(e.what());
    }
}

void validate_scene(const Scene& s, const std::string& source) {
    auto complain = [&](const std::string& path, const std::string& what) {
        throw ParseError(source + ": " + path + ": " + what);
    };
    for (std::size_t i = 0; i < s.statics.size(); ++i) {
        const auto box = s.statics[i].aabb();
        if (box.lo.z() < s.floor_z - 1e-6)
            complain("statics[" + std::to_string(i) + "]", "solid extends below floor_z");
    }
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
        const auto panel = artic::object_geometry_at(s.objects[i], 0.0);
        for (const Solid& p : panel) {
            if (p.aabb().lo.z() < s.floor_z - 1e-6)
                complain("objects[" + std::to_string(i) + "]", "closed panel extends below floor_z");
            for (std::size_t j = 0; j < s.statics.size(); ++j)
                if (solids::solids_intersect(p, s.statics[j]))
                    complain("objects[" + std::to_string(i) + "]",
                             "closed-state geometry intersects statics[" + std::to_string(j) + "]");
        }
    }
    for (std::size_t j = 0; j < s.statics.size(); ++j)
        if (s.statics[j].contains(s.camera.position, -1e-9))
            complain("camera", "camera position lies inside statics[" + std::to_string(j) + "]");
}

}  // namespace

std::string save_scene(const Scene& s) {
    TextWriter w;
    w.word("scene_version").num(1).end_line();
    w.word("scene_id").word(s.scene_id).end_line();
    w.word("floor_z").num(s.floor_z).end_line();
    w.word("camera");
    geom::write_pose(w, s.camera);
    w.end_line();
    w.word("statics").num(static_cast<std::int64_t>(s.statics.size())).end_line();
    for (const Solid& solid : s.statics) write_solid(w, solid);
    w.word("objects").num(static_cast<std::int64_t>(s.objects.size())).end_line();
    for (const ArticulatedObject& o : s.objects) write_object(w, o);
    return w.take_str();
}

Scene load_scene(const std::string& text, const std::string& source_name) {
    TokenReader in(text, source_name);
    Scene s;
    in.expect("scene_version");
    if (in.take_int() != 1) in.fail("unsupported scene_version");
    in.expect("scene_id");
    s.scene_id = in.take();
    in.expect("floor_z");
    s.floor_z = in.take_double();
    in.expect("camera");
    s.camera = geom::read_pose(in);
    in.expect("statics");
    const std::int64_t ns = in.take_int();
    if (ns < 0) in.fail("negative statics count");
    for (std::int64_t i = 0; i < ns; ++i) {
        try {
            s.statics.push_back(read_solid(in));
        } catch (const std::invalid_argument& e) {
            in.fail("statics[" + std::to_string(i) + "]: " + e.what());
        }
    }
    in.expect("objects");
    const std::int64_t no = in.take_int();
    if (no < 0) in.fail("negative objects count");
    for (std::int64_t i = 0; i < no; ++i) s.objects.push_back(read_object(in));
    if (!in.at_end()) in.fail("trailing content after scene document");
    validate_scene(s, source_name);
    return s;
}

Scene load_scene_file(const std::string& path) { return load_scene(read_file(path), path); }

void save_scene_file(const Scene& s, const std::string& path) { atomic_write_file(path, save_scene(s)); }

std::string save_instance(const ProblemInstance& inst) {
    TextWriter w;
    w.word("instance_version").num(1).end_line();
    w.word("instance_id").word(inst.instance_id).end_line();
    w.word("scene").word(inst.scene_path).end_line();
    w.word("object").num(inst.target_object_index).end_line();
    w.word("split").word(inst.split).end_line();
    w.word("waypoints").num(static_cast<std::int64_t>(inst.waypoints.size())).end_line();
    for (const geom::Pose& p : inst.waypoints.waypoints) {
        w.word("w");
        geom::write_pose(w, p);
        w.end_line();
    }
    return w.take_str();
}

ProblemInstance load_instance_file(const std::string& path) {
    TokenReader in(read_file(path), path);
    ProblemInstance inst;
    in.expect("instance_version");
    if (in.take_int() != 1) in.fail("unsupported instance_version");
    in.expect("instance_id");
    inst.instance_id = in.take();
    in.expect("scene");
    inst.scene_path = in.take();
    in.expect("object");
    inst.target_object_index = static_cast<int>(in.take_int());
    in.expect("split");
    inst.split = in.take();
    if (inst.split != "train" && inst.split != "val" && inst.split != "test")
        in.fail("split must be train, val or test");
    in.expect("waypoints");
    const std::int64_t t = in.take_int();
    if (t < 2) in.fail("waypoint count must be >= 2");
    std::vector<geom::Pose> stored;
    for (std::int64_t k = 0; k < t; ++k) {
        in.expect("w");
        stored.push_back(geom::read_pose(in));
    }

    const auto scene_file =
        (std::filesystem::path(path).parent_path() / inst.scene_path).lexically_normal();
    inst.scene = load_scene_file(scene_file.string());
    if (inst.target_object_index < 0 ||
        inst.target_object_index >= static_cast<int>(inst.scene.objects.size()))
        in.fail("target object index out of range for scene " + inst.scene.scene_id);

    // Waypoints are re-derivable; the stored copies must agree.
    inst.waypoints = artic::generate_waypoints(inst.object(), static_cast<int>(t));
    for (std::int64_t k = 0; k < t; ++k) {
        const geom::PoseError e =
            geom::pose_error(stored[static_cast<std::size_t>(k)],
                             inst.waypoints.waypoints[static_cast<std::size_t>(k)]);
        if (e.translational > 1e-12 || e.rotational > 1e-9)
            in.fail("stored waypoint " + std::to_string(k) +
                    " does not match the object's articulation");
    }
    return inst;
}

void save_instance_file(const ProblemInstance& inst, const std::string& path) {
    atomic_write_file(path, save_instance(inst));
}

std::vector<ProblemInstance> load_suite(const std::string& manifest_path) {
    TokenReader in(read_file(manifest_path), manifest_path);
    in.expect("suite_version");
    if (in.take_int() != 1) in.fail("unsupported suite_version");
    in.expect("count");
    const std::int64_t n = in.take_int();
    if (n < 0) in.fail("negative instance count");
    std::vector<ProblemInstance> out;
    out.reserve(static_cast<std::size_t>(n));
    const auto dir = std::filesystem::path(manifest_path).parent_path();
    for (std::int64_t i = 0; i < n; ++i) {
        in.expect("instance");
        const std::string rel = in.take();
        out.push_back(load_instance_file((dir / rel).lexically_normal().string()));
    }
    return out;
}

namespace {

// Occluders for the depth-camera model: statics plus every closed panel.
std::vector<Solid> occluder_set(const Scene& s) {
    std::vector<Solid> occ = s.statics;
    for (const ArticulatedObject& o : s.objects)
        for (Solid& panel : artic::object_geometry_at(o, 0.0)) occ.push_back(std::move(panel));
    return occ;
}

bool solid_visible(const Solid& target, std::size_t occ_skip, const std::vector<Solid>& occluders,
                   const Vec3& camera) {
    for (const Vec3& sample : target.face_samples(kVisibilityPitch)) {
        bool blocked = false;
        for (std::size_t j = 0; j < occluders.size(); ++j) {
            if (j == occ_skip) continue;
            if (solids::segment_hits(occluders[j], camera, sample, 1.0)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return true;
    }
    return false;
}

}  // namespace

std::vector<int> sensed_static_indices(const Scene& s, const Pose& camera) {
    const std::vector<Solid> occ = occluder_set(s);
    std::vector<int> out;
    for (std::size_t i = 0; i < s.statics.size(); ++i)
        if (solid_visible(s.statics[i], i, occ, camera.position)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<Solid> sensed_geometry(const Scene& s, const Pose& camera) {
    std::vector<Solid> out;
    for (const int i : sensed_static_indices(s, camera))
        out.push_back(s.statics[static_cast<std::size_t>(i)]);
    return out;
}

CollisionWorld full_world(const Scene& s, int target_index) {
    CollisionWorld w;
    w.floor_z = s.floor_z;
    w.statics = s.statics;
    for (int i = 0; i < static_cast<int>(s.objects.size()); ++i) {
        if (i == target_index) continue;
        for (Solid& panel : artic::object_geometry_at(s.objects[static_cast<std::size_t>(i)], 0.0))
            w.statics.push_back(std::move(panel));
    }
    return w;
}

CollisionWorld sensed_world(const Scene& s, int target_index) {
    CollisionWorld w;
    w.floor_z = s.floor_z;
    const std::vector<Solid> occ = occluder_set(s);
    const std::size_t n_statics = s.statics.size();
    for (std::size_t i = 0; i < n_statics; ++i)
        if (solid_visible(s.statics[i], i, occ, s.camera.position)) w.statics.push_back(s.statics[i]);
    for (int i = 0; i < static_cast<int>(s.objects.size()); ++i) {
        if (i == target_index) continue;
        // Panel occluder index within occluder_set: statics, then one panel
        // per object in order.
        const std::size_t occ_idx = n_statics + static_cast<std::size_t>(i);
        for (Solid& panel : artic::object_geometry_at(s.objects[static_cast<std::size_t>(i)], 0.0))
            if (solid_visible(panel, occ_idx, occ, s.camera.position)) w.statics.push_back(std::move(panel));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Procedural generator
// ---------------------------------------------------------------------------

namespace {

std::string zpad_id(const std::string& prefix, const char* stem, std::size_t idx) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%05zu", stem, idx);
    return prefix + buf;
}

struct SceneBuild {
    Scene scene;
    std::vector<int> object_indices;  // targets, one instance each
};

// Convex clutter prism profile: jittered points on an ellipse, in angular
// order, which is convex by construction.
std::vector<Vec2> random_convex_profile(Rng& rng) {
    const int k = 5 + static_cast<int>(rng.next_below(3));
    const double rx = rng.uniform(0.04, 0.18);
    const double ry = rng.uniform(0.04, 0.18);
    std::vector<Vec2> poly;
    for (int i = 0; i < k; ++i) {
        const double phi = 2.0 * M_PI * (i + 0.3 * rng.next_double()) / k;
        poly.emplace_back(rx * std::cos(phi), ry * std::sin(phi));
    }
    return poly;
}

geom::Quat frame_quat(const Vec3& x, const Vec3& y, const Vec3& z) {
    Eigen::Matrix3d r;
    r.col(0) = x;
    r.col(1) = y;
    r.col(2) = z;
    return geom::Quat(r);
}

struct ObjectBuild {
    ArticulatedObject obj;
    std::vector<Solid> statics;
    Vec3 handle_world;
    Vec3 approach_dir;  // horizontal unit vector pointing away from the object
};

ObjectBuild build_object(Kind kind, Rng& rng, const GeneratorParams& p, const Eigen::Vector2d& anchor,
                         double yaw, double lateral_offset) {
    ObjectBuild out;
    const Vec3 up = Vec3::UnitZ();
    const Vec3 n(std::cos(yaw), std::sin(yaw), 0.0);  // outward normal of vertical faces
    const Vec3 lat = up.cross(n);                     // face x for vertical faces
    const double hz = rng.uniform(p.handle_height_min, p.handle_height_max);
    const double th = 0.019;

    if (kind == Kind::hinge_top) {
        // Horizontal lid with a half-ellipse profile over a bowl, tank behind.
        const double w = rng.uniform(0.35, 0.45);
        const double h = rng.uniform(0.38, 0.48);
        const double lid_z = std::min(std::max(hz, 0.35), 0.9);
        artic::FaceRect face;
        const Vec3 fy = -n;  // +y points from tip toward the hinge (back)
        const Vec3 fx = fy.cross(up);
        face.center = geom::Pose(
            Vec3(anchor.x(), anchor.y(), lid_z) + lateral_offset * fx, frame_quat(fx, fy, up));
        face.width = w;
        face.height = h;
        const Vec2 handle_xy(0.0, -(0.5 * h - 0.04));
        const geom::Pose handle = artic::make_handle_grasp(face, kind, handle_xy);
        const Vec3 axis_pt = face.center.apply(Vec3(-0.5 * w, 0.5 * h, 0.0));
        const Vec3 axis_dir = -fx;
        out.obj = ArticulatedObject::make(kind, face, handle, p.hinge_extent, th,
                                          artic::half_ellipse_profile(w, h),
                                          std::make_pair(axis_pt, axis_dir));
        // Bowl below the lid.
        const double bowl_top = lid_z - th - 0.004;
        out.statics.push_back(Solid::make_box(
            geom::Pose(face.center.position - Vec3(0, 0, lid_z - 0.5 * (bowl_top + 0.01)),
                       face.center.orientation),
            Vec3(0.5 * w + 0.02, 0.5 * h + 0.02, 0.5 * (bowl_top - 0.01))));
        // Tank behind the hinge, rising above the lid plane.
        const double tank_rise = 0.32;
        out.statics.push_back(Solid::make_box(
            geom::Pose(face.center.apply(Vec3(0.0, 0.5 * h + 0.1, 0.5 * (tank_rise - 0.5 * lid_z))),
                       face.center.orientation),
            Vec3(0.5 * w + 0.05, 0.075, 0.5 * (tank_rise + 0.5 * lid_z))));
        out.handle_world = handle.position;
        out.approach_dir = n;
        return out;
    }

    // Vertical faces.
    double w = 0.0, h = 0.0;
    Vec2 handle_xy(0.0, 0.0);
    switch (kind) {
        case Kind::prismatic:
            w = rng.uniform(0.35, 0.7);
            h = rng.uniform(0.13, 0.3);
            break;
        case Kind::hinge_left:
        case Kind::hinge_right:
            w = rng.uniform(0.35, 0.55);
            h = rng.uniform(0.45, 0.8);
            break;
        default:  // hinge_bottom
            w = rng.uniform(0.55, 0.75);
            h = std::min(rng.uniform(0.4, 0.65), hz + 0.03);
            break;
    }
    if (kind == Kind::hinge_left)
        handle_xy = Vec2(0.5 * w - 0.06, 0.0);
    else if (kind == Kind::hinge_right)
        handle_xy = Vec2(-(0.5 * w - 0.06), 0.0);
    else if (kind == Kind::hinge_bottom)
        handle_xy = Vec2(0.0, 0.5 * h - 0.06);
    h = std::min(h, 2.0 * (hz - handle_xy.y() - 0.03) > 0.1 ? h : h);  // placeholder, fixed below

    double zc = hz - handle_xy.y();
    if (zc - 0.5 * h < 0.03) {
        h = 2.0 * (zc - 0.03);
        if (kind == Kind::hinge_bottom) {
            // handle tracks the face top
            handle_xy.y() = 0.5 * h - 0.06;
            zc = hz - handle_xy.y();
        }
    }

    artic::FaceRect face;
    face.center =
        geom::Pose(Vec3(anchor.x(), anchor.y(), zc) + lateral_offset * lat, frame_quat(lat, up, n));
    face.width = w;
    face.height = h;
    const geom::Pose handle = artic::make_handle_grasp(face, kind, handle_xy);
    const double extent = (kind == Kind::prismatic) ? p.prismatic_extent : p.hinge_extent;
    out.obj = ArticulatedObject::make(kind, face, handle, extent, th);

    // Carcass behind the face, standing on the floor or wall-mounted.
    const double body_depth = 0.38;
    const double top = zc + 0.5 * h + 0.02;
    const double bottom = std::max(0.005, zc - 0.5 * h - 0.25);
    out.statics.push_back(Solid::make_box(
        geom::Pose(face.center.apply(Vec3(0.0, 0.5 * (top + bottom) - zc, -(th + 0.002 + 0.5 * body_depth))),
                   face.center.orientation),
        Vec3(0.5 * w + 0.02, 0.5 * (top - bottom), 0.5 * body_depth)));

    // Counter slab: above low objects, below high wall cabinets.
    if (top <= 0.95 && rng.next_double() < 0.6) {
        const double c_lo = -0.42, c_hi = 0.03;
        out.statics.push_back(Solid::make_box(
            geom::Pose(face.center.apply(Vec3(0.0, 0.5 * h + 0.05 - 0.0, 0.5 * (c_lo + c_hi))) +
                           Vec3(0, 0, 0.02),
                       face.center.orientation),
            Vec3(0.5 * w + 0.25, 0.02, 0.5 * (c_hi - c_lo))));
    } else if (zc - 0.5 * h >= 0.95 && rng.next_double() < 0.7) {
        const double c_lo = -0.45, c_hi = 0.25;
        const double c_top = 0.90;
        out.statics.push_back(Solid::make_box(
            geom::Pose(Vec3(face.center.position.x(), face.center.position.y(), c_top - 0.02) +
                           face.outward_normal() * (0.5 * (c_lo + c_hi)),
                       face.center.orientation),
            Vec3(0.5 * w + 0.3, 0.02, 0.5 * (c_hi - c_lo))));
    }

    out.handle_world = handle.position;
    out.approach_dir = n;
    return out;
}

}  // namespace

std::vector<ProblemInstance> generate_instances(std::uint64_t seed, const GeneratorParams& params) {
    if (params.clutter_density < 0.0) throw std::invalid_argument("clutter density must be >= 0");
    if (params.handle_height_min <= 0.05 || params.handle_height_max < params.handle_height_min)
        throw std::invalid_argument("invalid handle height range");
    if (params.waypoint_count < 2) throw std::invalid_argument("waypoint count must be >= 2");
    for (const auto& [kind, count] : params.counts) {
        (void)kind;
        if (count < 0) throw std::invalid_argument("negative instance count");
    }

    // Canonical instance order: by kind, then index.
    std::vector<Kind> wanted;
    for (const Kind k : {Kind::prismatic, Kind::hinge_left, Kind::hinge_right, Kind::hinge_top,
                         Kind::hinge_bottom}) {
        const auto it = params.counts.find(k);
        if (it == params.counts.end()) continue;
        for (int i = 0; i < it->second; ++i) wanted.push_back(k);
    }

    // Pack into scenes: lids get their own scene, vertical faces pair up.
    std::vector<std::vector<Kind>> scene_kinds;
    std::vector<Kind> open;
    for (const Kind k : wanted) {
        if (k == Kind::hinge_top) {
            scene_kinds.push_back({k});
            continue;
        }
        open.push_back(k);
        if (open.size() == 2) {
            scene_kinds.push_back(open);
            open.clear();
        }
    }
    if (!open.empty()) scene_kinds.push_back(open);

    std::vector<ProblemInstance> out;
    std::size_t inst_idx = 0;
    for (std::size_t si = 0; si < scene_kinds.size(); ++si) {
        Rng rng(derive_seed(seed, "gen/scene", si));
        Scene s;
        s.scene_id = zpad_id(params.id_prefix, "scn_", si);
        s.floor_z = 0.0;
        const double yaw = rng.uniform(0.0, 2.0 * M_PI);
        const Eigen::Vector2d anchor(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));

        std::vector<ObjectBuild> builds;
        double lateral = 0.0;
        for (std::size_t j = 0; j < scene_kinds[si].size(); ++j) {
            ObjectBuild b = build_object(scene_kinds[si][j], rng, params, anchor, yaw, lateral);
            lateral += b.obj.face.width + 0.45;
            builds.push_back(std::move(b));
        }
        for (ObjectBuild& b : builds) {
            s.objects.push_back(b.obj);
            for (Solid& solid : b.statics) s.statics.push_back(std::move(solid));
        }

        // Camera: standoff from the mean handle along the approach direction.
        Vec3 handle_mean = Vec3::Zero();
        for (const ObjectBuild& b : builds) handle_mean += b.handle_world;
        handle_mean /= static_cast<double>(builds.size());
        const Vec3 approach = builds.front().approach_dir;
        Vec3 cam_pos;
        if (scene_kinds[si][0] == Kind::hinge_top)
            cam_pos = handle_mean + 1.2 * approach + Vec3(0, 0, 0.5);
        else
            cam_pos = handle_mean + 1.5 * approach;
        {
            const Vec3 look = (handle_mean - cam_pos).normalized();
            Vec3 right = look.cross(Vec3::UnitZ());
            if (right.norm() < 1e-6) right = Vec3::UnitX();
            right.normalize();
            const Vec3 down = look.cross(right);
            s.camera = geom::Pose(cam_pos, frame_quat(right, down, look));
        }

        // Clutter, rejection-sampled against everything placed so far.
        const double density = params.clutter_density;
        std::size_t n_clutter = static_cast<std::size_t>(std::floor(density));
        if (rng.next_double() < density - std::floor(density)) ++n_clutter;
        std::vector<Solid> panels;
        for (const ArticulatedObject& o : s.objects)
            for (Solid& panel : artic::object_geometry_at(o, 0.0)) panels.push_back(std::move(panel));
        for (std::size_t c = 0; c < n_clutter; ++c) {
            for (int attempt = 0; attempt < 30; ++attempt) {
                const ObjectBuild& owner =
                    builds[rng.next_below(builds.size())];
                const Vec3 fwd = owner.approach_dir;
                const Vec3 side = Vec3::UnitZ().cross(fwd);
                const double standoff = rng.uniform(0.3, 1.7);
                const double lat_off = rng.uniform(-0.9, 0.9);
                const Vec3 base_xy = owner.handle_world + standoff * fwd + lat_off * side;
                Solid candidate;
                if (rng.next_double() < 0.8) {
                    const bool grounded = rng.next_double() < 0.7;
                    const Vec3 half(rng.uniform(0.04, 0.22), rng.uniform(0.04, 0.22),
                                    grounded ? rng.uniform(0.05, 0.45) : rng.uniform(0.03, 0.15));
                    const double cz = grounded ? half.z() : rng.uniform(0.3, 1.3);
                    candidate = Solid::make_box(
                        geom::Pose(Vec3(base_xy.x(), base_xy.y(), cz),
                                   geom::Quat(Eigen::AngleAxisd(rng.uniform(0.0, M_PI), Vec3::UnitZ()))),
                        half);
                } else {
                    const double height = rng.uniform(0.1, 0.8);
                    candidate = Solid::make_prism(
                        geom::Pose(Vec3(base_xy.x(), base_xy.y(), 0.0), geom::Quat::Identity()),
                        random_convex_profile(rng), 0.0, height);
                }
                if (candidate.aabb().lo.z() < s.floor_z) continue;
                if (candidate.contains(cam_pos, -1e-6)) continue;
                bool clear = true;
                // keep a reachable pocket around each handle
                for (const ObjectBuild& b : builds) {
                    const Solid pocket = Solid::make_box(
                        geom::Pose(b.handle_world, geom::Quat::Identity()), Vec3(0.12, 0.12, 0.12));
                    if (solids_intersect(candidate, pocket)) {
                        clear = false;
                        break;
                    }
                }
                if (clear)
                    for (const Solid& other : s.statics)
                        if (solids_intersect(candidate, other)) {
                            clear = false;
                            break;
                        }
                if (clear)
                    for (const Solid& panel : panels)
                        if (solids_intersect(candidate, panel)) {
                            clear = false;
                            break;
                        }
                if (clear) {
                    s.statics.push_back(std::move(candidate));
                    break;
                }
            }
        }

        validate_scene(s, "generated:" + s.scene_id);

        const int mod = static_cast<int>(si % 5);
        const std::string split = mod <= 2 ? "train" : (mod == 3 ? "val" : "test");
        for (std::size_t j = 0; j < s.objects.size(); ++j) {
            ProblemInstance inst;
            inst.instance_id = zpad_id(params.id_prefix, "inst_", inst_idx++);
            inst.scene = s;
            inst.target_object_index = static_cast<int>(j);
            inst.waypoints = artic::generate_waypoints(s.objects[j], params.waypoint_count);
            inst.split = split;
            out.push_back(std::move(inst));
        }
    }
    return out;
}

}  // namespace artiplan::scene
