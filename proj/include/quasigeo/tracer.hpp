#pragma once

#include "quasigeo/geometry.hpp"
#include "quasigeo/intersect.hpp"

#include <map>
#include <string>
#include <vector>

namespace qg {

// One face passage of a traced curve: the chart sub-segment from entry to
// exit. entry/exit are chart points of `face`.
struct Crossing {
    FaceId face;
    Vec2q entry, exit;
};

// A vertex-to-vertex straight path on the surface: straight in the
// development, interior free of vertices and of self-intersections.
struct GeodesicSegment {
    VertexId start = 0, end = 0;
    FaceId start_face = FaceId::F;
    Dir2 dir;          // departure direction at start, in start_face chart
    Dir2 arrival_dir;  // travel direction at end, in crossings.back().face chart
    std::vector<Crossing> crossings;
    Rational length_sq;

    bool is_loop() const { return start == end; }
    GeodesicSegment reversed() const;
    FaceId end_face() const { return crossings.back().face; }
};

// Exact, order-comparable encoding; segments are equal on the surface iff
// their canonical keys match (edge runs are owner-face normalized).
std::string encode_segment(const BoxGeometry& geom, const GeodesicSegment& s);
std::string canonical_segment_key(const BoxGeometry& geom, const GeodesicSegment& s);

// Orients s so that encode_segment is minimal over the two traversals.
GeodesicSegment canonical_orientation(const BoxGeometry& geom, const GeodesicSegment& s);

struct TraceOutcome {
    enum class Kind { segment, self_crossing, unbounded };
    Kind kind = Kind::unbounded;
    GeodesicSegment segment;  // set when kind == segment

    // Self-crossing data: the first point where the ray meets its own earlier
    // path, in the chart of the face where it happens.
    FacePoint witness{FaceId::F, 0, 0};
    int earlier_crossing = -1;
    Dir2 witness_dir_new, witness_dir_old;   // both in witness.face chart
    std::vector<Crossing> partial;           // passages completed before the event
};

// Follows the straight development of a ray leaving `start` across the glued
// surface. Terminates at the first vertex hit, the first exact
// self-intersection, or after max_crossings face passages.
TraceOutcome trace_ray(const BoxGeometry& geom, VertexId start, FaceId start_face,
                       Dir2 dir, int max_crossings);

// All vertex-to-vertex segments of the unit cube whose slope, in some
// incident face frame, is one of 0/1, 1/3, 1/2, 2/3, 1/1. Keys are canonical
// segment encodings; values are canonically oriented.
std::map<std::string, GeodesicSegment> enumerate_segments_cube(const BoxGeometry& geom);

// All vertex-to-vertex segments with length_sq <= bound and at most
// max_crossings face passages, found by sweeping direction cones through the
// development from every vertex and aiming at every developed vertex image.
// Includes loop segments (start == end).
std::map<std::string, GeodesicSegment> enumerate_segments_box(
    const BoxGeometry& geom, const Rational& length_sq_bound, int max_crossings);

// Chart coordinates of a canonical surface point on face f, when the point
// lies on (the closure of) f.
std::optional<Vec2q> surface_point_on_face(const BoxGeometry& geom,
                                           const SurfacePoint& p, FaceId f);

// Slope of a direction normalized to [0,1]: min(|x|,|y|)/max(|x|,|y|).
Rational normalized_slope(Dir2 d);

}  // namespace qg
