#pragma once

#include "quasigeo/geometry.hpp"

#include <vector>

namespace qg {

// Closed rational segment in one chart.
struct Seg2 {
    Vec2q a, b;
};

enum class IsectKind { none, point, overlap };

struct Isect2 {
    IsectKind kind = IsectKind::none;
    Vec2q p, q;  // point, or the two endpoints of a collinear overlap
};

// Exact closed-segment intersection. Degenerate (point) segments allowed.
Isect2 intersect_segments(const Seg2& s, const Seg2& t);

// True if p lies on the closed segment s.
bool point_on_segment(const Vec2q& p, const Seg2& s);

// One straight piece of a surface curve, drawn in a single face chart.
struct SubSeg {
    FaceId face;
    Seg2 seg;
};

// Common surface points of two sub-segments, possibly on different faces.
// Sub-segments on the same face meet in their chart; sub-segments on adjacent
// faces can only meet along the shared edge. `overlap` is set when they share
// a whole 1-dimensional piece.
struct SurfaceMeet {
    bool overlap = false;
    std::vector<SurfacePoint> points;  // deduplicated, at most 2
    bool empty() const { return !overlap && points.empty(); }
};

SurfaceMeet surface_meet(const BoxGeometry& geom, const SubSeg& A, const SubSeg& B);

}  // namespace qg
