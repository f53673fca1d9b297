#pragma once

#include "quasigeo/angle.hpp"
#include "quasigeo/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qg {

// Face labels of an axis-aligned box: Front, Right, Top, bacK, Left, Bottom.
// The enum order doubles as the ownership order for boundary points (the
// lowest face id owns points on a shared edge).
enum class FaceId : std::uint8_t { F = 0, R = 1, T = 2, K = 3, L = 4, B = 5 };

constexpr std::array<FaceId, 6> kAllFaces{FaceId::F, FaceId::R, FaceId::T,
                                          FaceId::K, FaceId::L, FaceId::B};

inline int face_index(FaceId f) { return static_cast<int>(f); }
const char* face_name(FaceId f);
std::optional<FaceId> face_from_name(std::string_view name);

// Vertices are 1..8: bottom ring 1,2,3,4 and top ring 5,6,7,8 with vertex
// i+4 directly above vertex i.
using VertexId = int;

struct Vec2q {
    Rational x, y;
    bool operator==(const Vec2q& o) const { return x == o.x && y == o.y; }
};

// A reduced integer direction in a face chart (never both zero).
struct Dir2 {
    long long x = 0, y = 0;

    static Dir2 reduced(long long dx, long long dy);
    Dir2 operator-() const { return {-x, -y}; }
    bool operator==(const Dir2& o) const { return x == o.x && y == o.y; }
    // Quarter-turn rotation, CCW.
    Dir2 rotated(int quarters) const;
};

// Orientation-preserving rigid motion of the development plane: a CCW
// quarter-turn count plus a rational translation.
struct PlanarTransform {
    int k = 0;  // quarter turns, 0..3
    Rational tx, ty;

    static PlanarTransform identity() { return {}; }
    Vec2q apply(const Vec2q& p) const;
    Dir2 apply_dir(const Dir2& d) const;
    PlanarTransform compose(const PlanarTransform& inner) const;
    PlanarTransform inverse() const;
    bool is_identity() const { return k == 0 && tx == 0 && ty == 0; }
    bool operator==(const PlanarTransform& o) const {
        return k == o.k && tx == o.tx && ty == o.ty;
    }
};

// A point in a face's chart, 0 <= u <= width, 0 <= v <= height.
struct FacePoint {
    FaceId face;
    Rational u, v;
};

// Canonical identity for a point of the surface. Vertices are identified by
// id; edge points are expressed in the chart of the lower-id incident face;
// interior points belong to their face.
struct SurfacePoint {
    VertexId vertex = 0;  // > 0 iff this is a vertex
    FaceId face = FaceId::F;
    Rational u, v;

    bool is_vertex() const { return vertex > 0; }
    int compare(const SurfacePoint& o) const;
    bool operator==(const SurfacePoint& o) const { return compare(o) == 0; }
    bool operator<(const SurfacePoint& o) const { return compare(o) < 0; }
    std::string str() const;
};

// A direction on the surface at a vertex, pointing away from the vertex into
// the closed corner wedge of `face`.
struct VertexRay {
    VertexId v = 0;
    FaceId face = FaceId::F;
    Dir2 d;
};

// Exact rational model of the surface of an a x b x c box: charts, edge
// gluings, planar development and the vertex wedge fans used by the angle
// predicates. Immutable after construction.
class BoxGeometry {
  public:
    static constexpr int kEdgesPerFace = 4;

    const std::array<Rational, 3>& dims() const { return dims_; }
    bool is_cube() const { return dims_[0] == dims_[1] && dims_[1] == dims_[2]; }

    const std::array<Rational, 3>& vertex_coord(VertexId v) const;
    Rational width(FaceId f) const { return width_[face_index(f)]; }
    Rational height(FaceId f) const { return height_[face_index(f)]; }

    // Corners are listed CCW as seen from outside: chart positions
    // (0,0), (w,0), (w,h), (0,h).
    VertexId vertex_at_corner(FaceId f, int corner) const;
    int corner_of_vertex(FaceId f, VertexId v) const;  // -1 if not incident
    bool face_has_vertex(FaceId f, VertexId v) const {
        return corner_of_vertex(f, v) >= 0;
    }
    Vec2q corner_pos(FaceId f, int corner) const;

    // 3D axes of a chart (unit axis vectors, entries in {-1,0,1}).
    const std::array<int, 3>& chart_u_axis(FaceId f) const;
    const std::array<int, 3>& chart_v_axis(FaceId f) const;

    // Edge e of face f runs from corner e to corner e+1 (mod 4).
    std::pair<VertexId, VertexId> edge_endpoints(FaceId f, int e) const;
    FaceId neighbor_face(FaceId f, int e) const;
    int neighbor_edge(FaceId f, int e) const;
    bool faces_adjacent(FaceId f, FaceId g) const;
    // The single edge of f shared with adjacent face g.
    int shared_edge(FaceId f, FaceId g) const;

    // Step transform: maps the neighbor's chart across edge e into f's chart
    // plane so the shared edge coincides and the neighbor unfolds away from f.
    const PlanarTransform& step(FaceId f, int e) const;

    // CCW fan of (face, corner) wedges around a vertex; size 3 on a box.
    const std::array<std::pair<FaceId, int>, 3>& fan(VertexId v) const;
    int fan_position(VertexId v, FaceId f) const;

    // The two boundary directions of a corner wedge in chart coordinates:
    // the wedge sweeps CCW from start_dir to end_dir (a quarter turn).
    static Dir2 wedge_start_dir(int corner);
    static Dir2 wedge_end_dir(int corner);

  private:
    friend BoxGeometry make_box(const Rational&, const Rational&, const Rational&);
    BoxGeometry() = default;

    std::array<Rational, 3> dims_;
    std::array<std::array<Rational, 3>, 9> vcoord_;  // index 1..8
    std::array<std::array<VertexId, 4>, 6> corners_;
    std::array<Rational, 6> width_, height_;
    std::array<std::array<int, 3>, 6> u_axis_, v_axis_;
    std::array<std::array<FaceId, 4>, 6> nbr_face_;
    std::array<std::array<int, 4>, 6> nbr_edge_;
    std::array<std::array<PlanarTransform, 4>, 6> step_;
    std::array<std::array<std::pair<FaceId, int>, 3>, 9> fan_;
};

// Builds the labeled box surface. make_box(1,1,1) is the unit cube with
// vertex 1 at the origin, incident to faces F, L and B.
BoxGeometry make_box(const Rational& a, const Rational& b, const Rational& c);

// Transforms placing each face of the path into the plane of path[0] so that
// consecutive shared edges coincide. Throws if consecutive faces are not
// adjacent.
std::vector<PlanarTransform> develop(const BoxGeometry& geom,
                                     std::span<const FaceId> path);

// Canonical identity of a chart point (vertex / owned edge point / interior).
SurfacePoint canonical_surface_point(const BoxGeometry& geom, const FacePoint& p);

// True if the chart point lies in the closed chart rectangle.
bool face_point_in_chart(const BoxGeometry& geom, const FacePoint& p);

// True if d (nonzero) lies in the closed corner wedge of face f at vertex v.
bool dir_in_wedge(const BoxGeometry& geom, FaceId f, VertexId v, Dir2 d);

// CCW surface angle from ray `from` to ray `to` around their common vertex,
// in [0, 3pi/2). Both rays must point into closed wedges at the vertex.
ExactAngle surface_angle_ccw(const BoxGeometry& geom, const VertexRay& from,
                             const VertexRay& to);

// The ray rotated CCW around its vertex by quarter turns of surface angle.
VertexRay rotate_ray_ccw(const BoxGeometry& geom, const VertexRay& r, int quarters);

// Wedge fan position and chart direction of a ray, with rays along a wedge's
// end edge re-expressed as the start edge of the CCW-next wedge.
std::pair<int, VertexRay> canonical_fan_ray(const BoxGeometry& geom,
                                            const VertexRay& r);

// The two side angles of the passage (incoming, outgoing) through a vertex:
// incoming points toward v in its chart, outgoing away from v. left + right
// equals the cone angle 3pi/2 exactly.
struct SideAngles {
    ExactAngle left, right;
};
SideAngles side_angles(const BoxGeometry& geom, VertexId v,
                       FaceId in_face, Dir2 in_dir,
                       FaceId out_face, Dir2 out_dir);

enum class Side { left, right };
bool side_angle_leq_pi(const BoxGeometry& geom, VertexId v,
                       FaceId in_face, Dir2 in_dir,
                       FaceId out_face, Dir2 out_dir, Side side);

}  // namespace qg
