#include "quasigeo/tracer.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qg {

namespace {

Rational sq(const Rational& r) { return r * r; }

Rational dist_sq(const Vec2q& a, const Vec2q& b) {
    return sq(a.x - b.x) + sq(a.y - b.y);
}

long long cross_ll(Dir2 a, Dir2 b) { return a.x * b.y - a.y * b.x; }

// Parameter of p along the segment a->b (p assumed on it), by dominant axis.
Rational param_on(const Vec2q& a, const Vec2q& b, const Vec2q& p) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    if (abs(num(dx)) * den(dy) >= abs(num(dy)) * den(dx))
        return dx == 0 ? Rational(0) : (p.x - a.x) / dx;
    return (p.y - a.y) / dy;
}

}  // namespace

Rational normalized_slope(Dir2 d) {
    long long ax = d.x < 0 ? -d.x : d.x;
    long long ay = d.y < 0 ? -d.y : d.y;
    if (ax == 0 && ay == 0) throw std::invalid_argument("zero direction");
    long long lo = std::min(ax, ay), hi = std::max(ax, ay);
    return Rational(lo) / Rational(hi);
}

GeodesicSegment GeodesicSegment::reversed() const {
    GeodesicSegment r;
    r.start = end;
    r.end = start;
    r.start_face = crossings.back().face;
    r.dir = -arrival_dir;
    r.arrival_dir = -dir;
    r.length_sq = length_sq;
    r.crossings.reserve(crossings.size());
    for (auto it = crossings.rbegin(); it != crossings.rend(); ++it)
        r.crossings.push_back({it->face, it->exit, it->entry});
    return r;
}

std::optional<Vec2q> surface_point_on_face(const BoxGeometry& geom,
                                           const SurfacePoint& p, FaceId f) {
    if (p.is_vertex()) {
        int c = geom.corner_of_vertex(f, p.vertex);
        if (c < 0) return std::nullopt;
        return geom.corner_pos(f, c);
    }
    if (p.face == f) return Vec2q{p.u, p.v};
    if (!geom.faces_adjacent(p.face, f)) return std::nullopt;
    int e = geom.shared_edge(f, p.face);
    Vec2q q = geom.step(f, e).apply({p.u, p.v});
    FacePoint fp{f, q.x, q.y};
    if (!face_point_in_chart(geom, fp)) return std::nullopt;
    return q;
}

namespace {

// Face of record for encoding: edge runs are owned by the smaller face id.
FaceId encoding_face(const BoxGeometry& geom, const Crossing& c) {
    for (int e = 0; e < 4; ++e) {
        Vec2q a = geom.corner_pos(c.face, e);
        Vec2q b = geom.corner_pos(c.face, e + 1);
        if (point_on_segment(c.entry, {a, b}) && point_on_segment(c.exit, {a, b})) {
            FaceId n = geom.neighbor_face(c.face, e);
            return face_index(n) < face_index(c.face) ? n : c.face;
        }
    }
    return c.face;
}

}  // namespace

std::string encode_segment(const BoxGeometry& geom, const GeodesicSegment& s) {
    std::ostringstream os;
    os << "v" << s.start << ">v" << s.end << "|" << to_string(s.length_sq);
    for (const auto& c : s.crossings) {
        SurfacePoint pe = canonical_surface_point(geom, {c.face, c.entry.x, c.entry.y});
        SurfacePoint px = canonical_surface_point(geom, {c.face, c.exit.x, c.exit.y});
        os << "|" << face_name(encoding_face(geom, c)) << ":" << pe.str() << ">"
           << px.str();
    }
    return os.str();
}

std::string canonical_segment_key(const BoxGeometry& geom, const GeodesicSegment& s) {
    return std::min(encode_segment(geom, s), encode_segment(geom, s.reversed()));
}

GeodesicSegment canonical_orientation(const BoxGeometry& geom,
                                      const GeodesicSegment& s) {
    GeodesicSegment r = s.reversed();
    return encode_segment(geom, r) < encode_segment(geom, s) ? r : s;
}

TraceOutcome trace_ray(const BoxGeometry& geom, VertexId start, FaceId start_face,
                       Dir2 dir, int max_crossings) {
    if (max_crossings < 1) throw std::invalid_argument("max_crossings must be >= 1");
    int corner = geom.corner_of_vertex(start_face, start);
    if (corner < 0) throw std::invalid_argument("start face not incident to vertex");
    dir = Dir2::reduced(dir.x, dir.y);
    if (!dir_in_wedge(geom, start_face, start, dir))
        throw std::invalid_argument("direction points outside the corner wedge");

    FaceId f = start_face;
    Vec2q p = geom.corner_pos(start_face, corner);
    Dir2 d = dir;
    PlanarTransform to_plane = PlanarTransform::identity();  // chart of f -> start chart
    const Vec2q origin = p;

    std::vector<Crossing> records;
    TraceOutcome out;

    while (true) {
        if (static_cast<int>(records.size()) >= max_crossings) {
            out.kind = TraceOutcome::Kind::unbounded;
            out.partial = records;
            return out;
        }
        Rational w = geom.width(f), h = geom.height(f);
        // First boundary hit of p + t d, t > 0.
        bool have_t = false;
        Rational t;
        auto consider = [&](const Rational& cand) {
            if (cand <= 0) return;
            if (!have_t || cand < t) {
                t = cand;
                have_t = true;
            }
        };
        if (d.x > 0) consider((w - p.x) / d.x);
        if (d.x < 0) consider(-p.x / d.x);
        if (d.y > 0) consider((h - p.y) / d.y);
        if (d.y < 0) consider(-p.y / d.y);
        if (!have_t) throw std::logic_error("ray does not leave the chart");
        Vec2q q{p.x + t * d.x, p.y + t * d.y};
        bool qx0 = q.x == 0, qx1 = q.x == w, qy0 = q.y == 0, qy1 = q.y == h;
        bool at_corner = (qx0 || qx1) && (qy0 || qy1);

        // Self-intersection scan of the new sub-segment against earlier passages.
        SubSeg fresh{f, {p, q}};
        SurfacePoint entry_pt = canonical_surface_point(geom, {f, p.x, p.y});
        SurfacePoint terminal;
        if (at_corner) {
            int qc = qx0 ? (qy0 ? 0 : 3) : (qy0 ? 1 : 2);
            terminal = SurfacePoint{geom.vertex_at_corner(f, qc), f, q.x, q.y};
        }
        bool found_hit = false;
        Rational best_param;
        int best_idx = -1;
        SurfacePoint best_pt;
        for (int i = 0; i < static_cast<int>(records.size()); ++i) {
            SubSeg old{records[i].face, {records[i].entry, records[i].exit}};
            SurfaceMeet m = surface_meet(geom, fresh, old);
            for (const auto& sp : m.points) {
                if (i == static_cast<int>(records.size()) - 1 && sp == entry_pt) continue;
                if (at_corner && sp == terminal) continue;
                auto chart = surface_point_on_face(geom, sp, f);
                if (!chart) throw std::logic_error("meet point not on current face");
                Rational u = param_on(p, q, *chart);
                if (!found_hit || u < best_param ||
                    (u == best_param && i < best_idx)) {
                    found_hit = true;
                    best_param = u;
                    best_idx = i;
                    best_pt = sp;
                }
            }
        }
        if (found_hit) {
            out.kind = TraceOutcome::Kind::self_crossing;
            auto chart = surface_point_on_face(geom, best_pt, f);
            out.witness = {f, chart->x, chart->y};
            out.earlier_crossing = best_idx;
            out.witness_dir_new = d;
            const Crossing& oc = records[best_idx];
            if (oc.face == f) {
                Rational dx = oc.exit.x - oc.entry.x, dy = oc.exit.y - oc.entry.y;
                // Exact integer direction of the old passage.
                BigInt nx = num(dx) * den(dy), ny = num(dy) * den(dx);
                out.witness_dir_old =
                    Dir2::reduced(static_cast<long long>(nx), static_cast<long long>(ny));
            } else {
                int e = geom.shared_edge(f, oc.face);
                Rational dx = oc.exit.x - oc.entry.x, dy = oc.exit.y - oc.entry.y;
                BigInt nx = num(dx) * den(dy), ny = num(dy) * den(dx);
                Dir2 od = Dir2::reduced(static_cast<long long>(nx),
                                        static_cast<long long>(ny));
                out.witness_dir_old = geom.step(f, e).apply_dir(od);
            }
            out.partial = records;
            return out;
        }

        records.push_back({f, p, q});

        if (at_corner) {
            GeodesicSegment seg;
            seg.start = start;
            seg.end = terminal.vertex;
            seg.start_face = start_face;
            seg.dir = dir;
            seg.arrival_dir = d;
            seg.crossings = std::move(records);
            Vec2q plane_q = to_plane.apply(q);
            seg.length_sq = dist_sq(origin, plane_q);
            out.kind = TraceOutcome::Kind::segment;
            out.segment = std::move(seg);
            return out;
        }

        int e = qy0 ? 0 : (qx1 ? 1 : (qy1 ? 2 : 3));
        FaceId n = geom.neighbor_face(f, e);
        PlanarTransform inv = geom.step(f, e).inverse();
        p = inv.apply(q);
        d = inv.apply_dir(d);
        to_plane = to_plane.compose(geom.step(f, e));
        f = n;
    }
}

std::map<std::string, GeodesicSegment> enumerate_segments_cube(const BoxGeometry& geom) {
    if (!geom.is_cube())
        throw std::invalid_argument("five-slope enumeration applies to the cube only");
    static constexpr std::pair<int, int> kWedgeDirs[] = {
        {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}};
    std::map<std::string, GeodesicSegment> out;
    for (VertexId v = 1; v <= 8; ++v) {
        for (const auto& [face, corner] : geom.fan(v)) {
            Dir2 su = BoxGeometry::wedge_start_dir(corner);
            Dir2 sv = BoxGeometry::wedge_end_dir(corner);
            for (auto [x, y] : kWedgeDirs) {
                Dir2 d{x * su.x + y * sv.x, x * su.y + y * sv.y};
                TraceOutcome t = trace_ray(geom, v, face, d, 16);
                if (t.kind != TraceOutcome::Kind::segment)
                    throw std::logic_error("five-slope ray did not reach a vertex");
                GeodesicSegment seg = canonical_orientation(geom, t.segment);
                out.emplace(encode_segment(geom, seg), std::move(seg));
            }
        }
    }
    return out;
}

namespace {

// Strictly inside the open CCW cone (lo, hi); cones here always span < pi.
bool strictly_inside(Dir2 lo, Dir2 hi, Dir2 d) {
    return cross_ll(lo, d) > 0 && cross_ll(d, hi) > 0;
}

Dir2 dir_of_delta(const Vec2q& from, const Vec2q& to) {
    Rational dx = to.x - from.x, dy = to.y - from.y;
    BigInt nx = num(dx) * den(dy), ny = num(dy) * den(dx);
    return Dir2::reduced(static_cast<long long>(nx), static_cast<long long>(ny));
}

Rational point_segment_dist_sq(const Vec2q& p, const Seg2& s) {
    Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    Rational len2 = sq(dx) + sq(dy);
    if (len2 == 0) return dist_sq(p, s.a);
    Rational t = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return dist_sq(p, {s.a.x + t * dx, s.a.y + t * dy});
}

struct SweepContext {
    const BoxGeometry* geom;
    VertexId apex_vertex;
    FaceId wedge_face;
    Vec2q apex;  // in the wedge face chart (= the sweep plane)
    Rational bound;
    int max_crossings;
    std::map<std::string, bool> seen_dirs;  // reduced dir -> already traced
    std::map<std::string, GeodesicSegment>* out;
};

std::string dir_key(Dir2 d) {
    return std::to_string(d.x) + "," + std::to_string(d.y);
}

void try_candidate(SweepContext& ctx, Dir2 d) {
    if (!ctx.seen_dirs.emplace(dir_key(d), true).second) return;
    TraceOutcome t = trace_ray(*ctx.geom, ctx.apex_vertex, ctx.wedge_face, d,
                               ctx.max_crossings);
    if (t.kind != TraceOutcome::Kind::segment) return;
    if (t.segment.length_sq > ctx.bound) return;
    GeodesicSegment seg = canonical_orientation(*ctx.geom, t.segment);
    ctx.out->emplace(encode_segment(*ctx.geom, seg), std::move(seg));
}

// Recursive cone sweep through the development. The cone (lo, hi) is open,
// spans less than a quarter turn, and every ray in it enters `face` (placed
// by to_plane) through the window segment.
void sweep(SweepContext& ctx, FaceId face, const PlanarTransform& to_plane,
           Dir2 lo, Dir2 hi, const Seg2& window, int depth) {
    if (depth >= ctx.max_crossings) return;
    if (cross_ll(lo, hi) <= 0) return;
    if (point_segment_dist_sq(ctx.apex, window) > ctx.bound) return;

    // Developed rectangle of this face (axis-aligned: quarter-turn rotations).
    std::array<Vec2q, 4> corner{};
    for (int c = 0; c < 4; ++c)
        corner[c] = to_plane.apply(ctx.geom->corner_pos(face, c));
    Rational xmin = corner[0].x, xmax = corner[0].x;
    Rational ymin = corner[0].y, ymax = corner[0].y;
    for (int c = 1; c < 4; ++c) {
        xmin = std::min(xmin, corner[c].x);
        xmax = std::max(xmax, corner[c].x);
        ymin = std::min(ymin, corner[c].y);
        ymax = std::max(ymax, corner[c].y);
    }

    // Subdivision directions: developed vertex images strictly inside the cone.
    std::vector<Dir2> divs;
    for (int c = 0; c < 4; ++c) {
        if (corner[c] == ctx.apex) continue;
        Dir2 d = dir_of_delta(ctx.apex, corner[c]);
        if (!strictly_inside(lo, hi, d)) continue;
        if (dist_sq(ctx.apex, corner[c]) <= ctx.bound) try_candidate(ctx, d);
        divs.push_back(d);
    }
    std::sort(divs.begin(), divs.end(),
              [](Dir2 a, Dir2 b) { return cross_ll(a, b) > 0; });
    divs.erase(std::unique(divs.begin(), divs.end(),
                           [](Dir2 a, Dir2 b) { return cross_ll(a, b) == 0; }),
               divs.end());

    std::vector<Dir2> bounds;
    bounds.push_back(lo);
    for (Dir2 d : divs) bounds.push_back(d);
    bounds.push_back(hi);

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Dir2 plo = bounds[i], phi = bounds[i + 1];
        if (cross_ll(plo, phi) <= 0) continue;
        Dir2 mid = Dir2::reduced(plo.x + phi.x, plo.y + phi.y);
        // Exit of the mid ray from the rectangle (slab method).
        bool have = false;
        Rational t_out;
        auto leave = [&](const Rational& cand) {
            if (!have || cand < t_out) {
                t_out = cand;
                have = true;
            }
        };
        if (mid.x > 0) leave((xmax - ctx.apex.x) / mid.x);
        if (mid.x < 0) leave((xmin - ctx.apex.x) / mid.x);
        if (mid.y > 0) leave((ymax - ctx.apex.y) / mid.y);
        if (mid.y < 0) leave((ymin - ctx.apex.y) / mid.y);
        if (!have) throw std::logic_error("cone ray trapped in rectangle");
        Vec2q exit_pt{ctx.apex.x + t_out * mid.x, ctx.apex.y + t_out * mid.y};

        // Which chart edge of `face` carries the exit point?
        int exit_edge = -1;
        for (int e = 0; e < 4; ++e) {
            Seg2 es{corner[e], corner[(e + 1) & 3]};
            if (point_on_segment(exit_pt, es)) {
                // Skip the edge the panel entered through: the entry window
                // lies on it and the ray param there is smaller.
                Rational d_along =
                    (es.a.x == es.b.x) ? abs(exit_pt.x - es.a.x) : abs(exit_pt.y - es.a.y);
                (void)d_along;
                exit_edge = e;
                // Prefer the edge whose line is attained at t_out on the
                // leaving side; point_on_segment can match the entry edge only
                // if exit == entry, impossible for t_out > t_in.
                Rational line_t;
                if (es.a.x == es.b.x && mid.x != 0)
                    line_t = (es.a.x - ctx.apex.x) / mid.x;
                else if (es.a.y == es.b.y && mid.y != 0)
                    line_t = (es.a.y - ctx.apex.y) / mid.y;
                else
                    continue;
                if (line_t == t_out) break;
            }
        }
        if (exit_edge < 0) throw std::logic_error("no exit edge for cone panel");

        FaceId nface = ctx.geom->neighbor_face(face, exit_edge);
        PlanarTransform nplane = to_plane.compose(ctx.geom->step(face, exit_edge));
        // Window on the exit edge spanned by the panel rays.
        Seg2 edge_seg{corner[exit_edge], corner[(exit_edge + 1) & 3]};
        auto ray_hit = [&](Dir2 rd) -> Vec2q {
            // Intersection of apex + t rd with the exit edge line.
            if (edge_seg.a.x == edge_seg.b.x) {
                Rational t = (edge_seg.a.x - ctx.apex.x) / rd.x;
                return {edge_seg.a.x, ctx.apex.y + t * rd.y};
            }
            Rational t = (edge_seg.a.y - ctx.apex.y) / rd.y;
            return {ctx.apex.x + t * rd.x, edge_seg.a.y};
        };
        Seg2 nwindow{ray_hit(plo), ray_hit(phi)};
        sweep(ctx, nface, nplane, plo, phi, nwindow, depth + 1);
    }
}

}  // namespace

std::map<std::string, GeodesicSegment> enumerate_segments_box(
    const BoxGeometry& geom, const Rational& length_sq_bound, int max_crossings) {
    if (length_sq_bound < 0) throw std::invalid_argument("negative length bound");
    if (max_crossings < 1) throw std::invalid_argument("max_crossings must be >= 1");
    std::map<std::string, GeodesicSegment> out;
    if (length_sq_bound == 0) return out;
    for (VertexId v = 1; v <= 8; ++v) {
        for (const auto& [face, corner] : geom.fan(v)) {
            SweepContext ctx;
            ctx.geom = &geom;
            ctx.apex_vertex = v;
            ctx.wedge_face = face;
            ctx.apex = geom.corner_pos(face, corner);
            ctx.bound = length_sq_bound;
            ctx.max_crossings = max_crossings;
            ctx.out = &out;
            Dir2 lo = BoxGeometry::wedge_start_dir(corner);
            Dir2 hi = BoxGeometry::wedge_end_dir(corner);
            // Closed wedge boundaries: the two incident edges.
            try_candidate(ctx, lo);
            try_candidate(ctx, hi);
            Seg2 window{ctx.apex, ctx.apex};
            sweep(ctx, face, PlanarTransform::identity(), lo, hi, window, 0);
        }
    }
    return out;
}

}  // namespace qg
