#include "quasigeo/lemma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qg {

const std::array<CaseSpec, 7>& case_table() {
    using V = CaseSpec::Verdict;
    static const std::array<CaseSpec, 7> table = {{
        {1, Rational(0), Rational(1) / 4, false, true, V::backward_obstructed},
        {2, Rational(1) / 4, Rational(1) / 3, false, false, V::self_crossing},
        {3, Rational(1) / 3, Rational(2) / 5, false, false, V::self_crossing},
        {4, Rational(2) / 5, Rational(1) / 2, true, false, V::backward_obstructed},
        {5, Rational(1) / 2, Rational(2) / 3, false, false, V::backward_obstructed},
        {6, Rational(2) / 3, Rational(3) / 4, false, false, V::self_crossing},
        {7, Rational(3) / 4, Rational(1), true, false, V::backward_obstructed},
    }};
    return table;
}

std::optional<int> case_of_slope(const Rational& slope) {
    for (const auto& c : case_table())
        if (c.contains(slope)) return c.index;
    return std::nullopt;
}

std::vector<Rational> sample_slopes(const CaseSpec& spec, int max_den) {
    std::vector<Rational> out;
    for (int q = 1; q <= max_den; ++q)
        for (int p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational s(p, q);
            if (spec.contains(s)) out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

SelfCrossingResult check_self_crossing(const BoxGeometry& cube, const Rational& slope) {
    auto c = case_of_slope(slope);
    if (!c || case_table()[*c - 1].verdict != CaseSpec::Verdict::self_crossing)
        throw std::invalid_argument("slope is not in a self-crossing range");
    long long p = static_cast<long long>(num(slope));
    long long q = static_cast<long long>(den(slope));
    TraceOutcome t = trace_ray(cube, 1, FaceId::F, Dir2{q, p}, 16 * static_cast<int>(q) + 32);
    SelfCrossingResult out;
    if (t.kind != TraceOutcome::Kind::self_crossing) return out;
    out.self_crossing = true;
    out.witness = t.witness;
    out.on_start_face = t.witness.face == FaceId::F;
    long long dot = t.witness_dir_new.x * t.witness_dir_old.x +
                    t.witness_dir_new.y * t.witness_dir_old.y;
    out.perpendicular = dot == 0;
    return out;
}

namespace {

Rational sq(const Rational& r) { return r * r; }

long long cross_ll(Dir2 a, Dir2 b) { return a.x * b.y - a.y * b.x; }

Dir2 dir_of_delta(const Vec2q& from, const Vec2q& to) {
    Rational dx = to.x - from.x, dy = to.y - from.y;
    BigInt nx = num(dx) * den(dy), ny = num(dy) * den(dx);
    return Dir2::reduced(static_cast<long long>(nx), static_cast<long long>(ny));
}

constexpr int kMaxFaces = 64;

// Shared state of one obstruction certification run.
struct Cert {
    const BoxGeometry* geom;
    const GeodesicSegment* g;  // the tested ray's segment from vertex 1
    std::vector<const GeodesicSegment*> chain;  // g plus accepted candidates
    std::vector<VertexId> used;                 // vertices on the curve so far
    int max_chain_depth;
    ObstructionCertificate* cert;

    std::vector<SubSeg> target_subsegs() const {
        std::vector<SubSeg> out;
        for (const auto* s : chain)
            for (const auto& c : s->crossings)
                out.push_back({c.face, {c.entry, c.exit}});
        return out;
    }
    int target_owner(std::size_t flat_index) const {
        std::size_t i = flat_index;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (i < chain[k]->crossings.size()) return static_cast<int>(k);
            i -= chain[k]->crossings.size();
        }
        return -1;
    }
};

struct FirstEvent {
    enum class Kind { target, self_cross, vertex, budget } kind = Kind::budget;
    SurfacePoint point;       // target hit
    int target = -1;          // flat index of the crossed sub-segment
    FaceId face = FaceId::F;  // face of the target hit
    GeodesicSegment segment;  // vertex hit: the traced candidate (apex -> vertex)
};

// First event along the exact backward ray from `apex`: a crossing with a
// chain target, a self-intersection, or a vertex hit, whichever comes first
// in ray order.
FirstEvent first_event_trace(const Cert& ctx, VertexId apex, FaceId face, Dir2 dir) {
    const BoxGeometry& geom = *ctx.geom;
    auto targets = ctx.target_subsegs();
    SurfacePoint apex_pt{apex, face, 0, 0};

    int corner = geom.corner_of_vertex(face, apex);
    FaceId f = face;
    Vec2q p = geom.corner_pos(face, corner);
    Dir2 d = Dir2::reduced(dir.x, dir.y);
    std::vector<Crossing> records;
    PlanarTransform to_plane = PlanarTransform::identity();
    FirstEvent ev;

    for (int step = 0; step < kMaxFaces; ++step) {
        Rational w = geom.width(f), h = geom.height(f);
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
        if (!have_t) throw std::logic_error("backward ray does not leave the chart");
        Vec2q q{p.x + t * d.x, p.y + t * d.y};
        bool qx0 = q.x == 0, qx1 = q.x == w, qy0 = q.y == 0, qy1 = q.y == h;
        bool at_corner = (qx0 || qx1) && (qy0 || qy1);
        SubSeg fresh{f, {p, q}};
        SurfacePoint entry_pt = canonical_surface_point(geom, {f, p.x, p.y});

        auto param = [&](const SurfacePoint& sp) -> std::optional<Rational> {
            auto chart = surface_point_on_face(geom, sp, f);
            if (!chart) return std::nullopt;
            Rational dx = q.x - p.x, dy = q.y - p.y;
            if (abs(num(dx)) * den(dy) >= abs(num(dy)) * den(dx))
                return dx == 0 ? Rational(0) : (chart->x - p.x) / dx;
            return (chart->y - p.y) / dy;
        };

        bool found = false;
        Rational best;
        bool best_is_target = false;
        SurfacePoint best_pt;
        int best_target = -1;

        // Chain targets on or adjacent to this passage.
        for (std::size_t i = 0; i < targets.size(); ++i) {
            SurfaceMeet m = surface_meet(geom, fresh, targets[i]);
            for (const auto& sp : m.points) {
                if (step == 0 && sp == apex_pt) continue;  // the junction itself
                auto u = param(sp);
                if (!u) continue;
                if (!found || *u < best || (*u == best && !best_is_target)) {
                    found = true;
                    best = *u;
                    best_is_target = true;
                    best_pt = sp;
                    best_target = static_cast<int>(i);
                }
            }
        }
        // Self-intersections of the backward walk.
        for (std::size_t i = 0; i < records.size(); ++i) {
            SubSeg old{records[i].face, {records[i].entry, records[i].exit}};
            SurfaceMeet m = surface_meet(geom, fresh, old);
            for (const auto& sp : m.points) {
                if (i + 1 == records.size() && sp == entry_pt) continue;
                auto u = param(sp);
                if (!u) continue;
                if (!found || *u < best) {
                    found = true;
                    best = *u;
                    best_is_target = false;
                    best_pt = sp;
                    best_target = -1;
                }
            }
        }
        if (found) {
            // A vertex hit at the same point as a target contact counts as a
            // vertex event (the candidate ends there).
            bool ends_here = at_corner && best == 1;
            if (!ends_here) {
                if (best_is_target) {
                    ev.kind = FirstEvent::Kind::target;
                    ev.point = best_pt;
                    ev.target = best_target;
                    ev.face = f;
                } else {
                    ev.kind = FirstEvent::Kind::self_cross;
                    ev.point = best_pt;
                }
                return ev;
            }
        }

        records.push_back({f, p, q});
        if (at_corner) {
            int qc = qx0 ? (qy0 ? 0 : 3) : (qy0 ? 1 : 2);
            GeodesicSegment seg;
            seg.start = apex;
            seg.end = geom.vertex_at_corner(f, qc);
            seg.start_face = face;
            seg.dir = Dir2::reduced(dir.x, dir.y);
            seg.arrival_dir = d;
            seg.crossings = std::move(records);
            Vec2q origin = geom.corner_pos(face, corner);
            Vec2q plane_q = to_plane.apply(q);
            seg.length_sq = sq(plane_q.x - origin.x) + sq(plane_q.y - origin.y);
            ev.kind = FirstEvent::Kind::vertex;
            ev.segment = std::move(seg);
            return ev;
        }
        int e = qy0 ? 0 : (qx1 ? 1 : (qy1 ? 2 : 3));
        FaceId n = geom.neighbor_face(f, e);
        PlanarTransform inv = geom.step(f, e).inverse();
        p = inv.apply(q);
        d = inv.apply_dir(d);
        to_plane = to_plane.compose(geom.step(f, e));
        f = n;
    }
    ev.kind = FirstEvent::Kind::budget;
    return ev;
}

void certify_cone(Cert& ctx, VertexId apex, const VertexRay& next_dir, int depth);

// Disposition of one exact backward direction.
void certify_ray(Cert& ctx, VertexId apex, const VertexRay& ray,
                 const VertexRay& next_dir, int depth) {
    const BoxGeometry& geom = *ctx.geom;
    ObstructionRecord rec;
    rec.depth = depth;
    rec.at_vertex = apex;
    rec.dir_lo = rec.dir_hi = ray;

    FirstEvent ev = first_event_trace(ctx, apex, ray.face, ray.d);
    switch (ev.kind) {
        case FirstEvent::Kind::target:
            rec.kind = ObstructionRecord::Kind::ray_crossing;
            rec.witness = ev.point;
            rec.witness_face = ev.face;
            rec.crossed_target = ctx.target_owner(ev.target);
            ctx.cert->records.push_back(rec);
            return;
        case FirstEvent::Kind::self_cross:
            rec.kind = ObstructionRecord::Kind::ray_self_crossing;
            rec.witness = ev.point;
            ctx.cert->records.push_back(rec);
            return;
        case FirstEvent::Kind::budget:
            rec.kind = ObstructionRecord::Kind::budget_exhausted;
            ctx.cert->records.push_back(rec);
            ctx.cert->complete = false;
            return;
        case FirstEvent::Kind::vertex:
            break;
    }

    const GeodesicSegment& back = ev.segment;  // apex -> reached vertex
    rec.reached = back.end;
    rec.candidate_length_sq = back.length_sq;
    // Junction angle of the candidate against the segment it would precede:
    // the candidate arrives at the apex travelling opposite the backward ray.
    SideAngles sa = side_angles(geom, apex, back.start_face,
                                Dir2{-back.dir.x, -back.dir.y},
                                next_dir.face, next_dir.d);
    rec.junction_valid = sa.left.leq_pi() && sa.right.leq_pi();

    if (back.end == ctx.used.front()) {
        // Returned to the start vertex: the closing angle against the tested
        // ray must fail, otherwise the case is not dispositioned. The chain
        // arrives at the start along the reached end of the backward walk.
        SideAngles close = side_angles(geom, back.end, back.end_face(),
                                       back.arrival_dir,
                                       ctx.g->start_face, ctx.g->dir);
        bool sharp = !(close.left.leq_pi() && close.right.leq_pi());
        rec.kind = sharp ? ObstructionRecord::Kind::sharp_angle
                         : ObstructionRecord::Kind::budget_exhausted;
        if (!sharp) ctx.cert->complete = false;
        ctx.cert->records.push_back(rec);
        return;
    }
    if (std::find(ctx.used.begin(), ctx.used.end(), back.end) != ctx.used.end()) {
        rec.kind = ObstructionRecord::Kind::vertex_reuse;
        ctx.cert->records.push_back(rec);
        return;
    }

    rec.kind = ObstructionRecord::Kind::chain_candidate;
    ctx.cert->records.push_back(rec);
    if (depth + 1 > ctx.max_chain_depth) {
        ObstructionRecord fail = rec;
        fail.kind = ObstructionRecord::Kind::budget_exhausted;
        ctx.cert->records.push_back(fail);
        ctx.cert->complete = false;
        return;
    }
    GeodesicSegment fwd = back.reversed();  // reached -> apex, chain order
    ctx.chain.push_back(&fwd);
    ctx.used.push_back(back.end);
    ctx.cert->deepest_chain = std::max(ctx.cert->deepest_chain, depth + 1);
    // The next chain segment leaves the reached vertex toward the apex.
    certify_cone(ctx, back.end, VertexRay{back.end, fwd.start_face, fwd.dir}, depth + 1);
    ctx.used.pop_back();
    ctx.chain.pop_back();
}

// One wedge-contained open sub-cone, swept through the development.
void sweep_piece(Cert& ctx, VertexId apex, FaceId wedge_face, const Vec2q& apex_pos,
                 FaceId face, const PlanarTransform& to_plane, Dir2 lo, Dir2 hi,
                 int faces_crossed, const VertexRay& next_dir, int depth) {
    const BoxGeometry& geom = *ctx.geom;
    if (cross_ll(lo, hi) <= 0) return;
    if (faces_crossed >= kMaxFaces) {
        ObstructionRecord rec;
        rec.kind = ObstructionRecord::Kind::budget_exhausted;
        rec.depth = depth;
        rec.at_vertex = apex;
        rec.dir_lo = {apex, wedge_face, lo};
        rec.dir_hi = {apex, wedge_face, hi};
        ctx.cert->records.push_back(rec);
        ctx.cert->complete = false;
        return;
    }

    std::array<Vec2q, 4> corner{};
    for (int c = 0; c < 4; ++c)
        corner[c] = to_plane.apply(geom.corner_pos(face, c));
    Rational xmin = corner[0].x, xmax = corner[0].x;
    Rational ymin = corner[0].y, ymax = corner[0].y;
    for (int c = 1; c < 4; ++c) {
        xmin = std::min(xmin, corner[c].x);
        xmax = std::max(xmax, corner[c].x);
        ymin = std::min(ymin, corner[c].y);
        ymax = std::max(ymax, corner[c].y);
    }

    auto targets = ctx.target_subsegs();
    std::vector<Dir2> divs;
    for (int c = 0; c < 4; ++c) {
        if (corner[c] == apex_pos) continue;
        Dir2 dc = dir_of_delta(apex_pos, corner[c]);
        if (cross_ll(lo, dc) > 0 && cross_ll(dc, hi) > 0) divs.push_back(dc);
    }
    for (const auto& tseg : targets) {
        if (tseg.face != face) continue;
        for (const Vec2q& endpt :
             {to_plane.apply(tseg.seg.a), to_plane.apply(tseg.seg.b)}) {
            if (endpt == apex_pos) continue;
            Dir2 dt = dir_of_delta(apex_pos, endpt);
            if (cross_ll(lo, dt) > 0 && cross_ll(dt, hi) > 0) divs.push_back(dt);
        }
    }
    std::sort(divs.begin(), divs.end(),
              [](Dir2 a, Dir2 b) { return cross_ll(a, b) > 0; });
    divs.erase(std::unique(divs.begin(), divs.end(),
                           [](Dir2 a, Dir2 b) { return cross_ll(a, b) == 0; }),
               divs.end());
    for (Dir2 dv : divs)
        certify_ray(ctx, apex, VertexRay{apex, wedge_face, dv}, next_dir, depth);

    std::vector<Dir2> bounds;
    bounds.push_back(lo);
    for (Dir2 dv : divs) bounds.push_back(dv);
    bounds.push_back(hi);

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        Dir2 plo = bounds[i], phi = bounds[i + 1];
        if (cross_ll(plo, phi) <= 0) continue;
        Dir2 mid = Dir2::reduced(plo.x + phi.x, plo.y + phi.y);

        // Does the mid ray cross a target inside this face?
        bool crossed = false;
        for (std::size_t ti = 0; ti < targets.size() && !crossed; ++ti) {
            if (targets[ti].face != face) continue;
            Seg2 dev{to_plane.apply(targets[ti].seg.a), to_plane.apply(targets[ti].seg.b)};
            // Ray apex + t*mid vs dev, t > 0.
            Rational dx = dev.b.x - dev.a.x, dy = dev.b.y - dev.a.y;
            Rational denom = Rational(mid.x) * dy - Rational(mid.y) * dx;
            Rational wx = dev.a.x - apex_pos.x, wy = dev.a.y - apex_pos.y;
            if (denom == 0) continue;  // parallel: endpoint dirs would split
            Rational tt = (wx * dy - wy * dx) / denom;  // along the ray
            Rational ss = (wx * Rational(mid.y) - wy * Rational(mid.x)) / -denom;
            if (tt <= 0 || ss < 0 || ss > 1) continue;
            crossed = true;
            ObstructionRecord rec;
            rec.kind = ObstructionRecord::Kind::cone_crossing;
            rec.depth = depth;
            rec.at_vertex = apex;
            rec.dir_lo = {apex, wedge_face, plo};
            rec.dir_hi = {apex, wedge_face, phi};
            Vec2q hit{apex_pos.x + tt * mid.x, apex_pos.y + tt * mid.y};
            Vec2q chart_hit = to_plane.inverse().apply(hit);
            rec.witness = canonical_surface_point(geom, {face, chart_hit.x, chart_hit.y});
            rec.witness_face = face;
            rec.crossed_target = ctx.target_owner(ti);
            ctx.cert->records.push_back(rec);
        }
        if (crossed) continue;

        // Exit edge of the panel and recursion into the neighbor face.
        bool have = false;
        Rational t_out;
        auto leave = [&](const Rational& cand) {
            if (!have || cand < t_out) {
                t_out = cand;
                have = true;
            }
        };
        if (mid.x > 0) leave((xmax - apex_pos.x) / mid.x);
        if (mid.x < 0) leave((xmin - apex_pos.x) / mid.x);
        if (mid.y > 0) leave((ymax - apex_pos.y) / mid.y);
        if (mid.y < 0) leave((ymin - apex_pos.y) / mid.y);
        if (!have) throw std::logic_error("cone panel trapped in rectangle");
        Vec2q exit_pt{apex_pos.x + t_out * mid.x, apex_pos.y + t_out * mid.y};
        int exit_edge = -1;
        for (int e = 0; e < 4 && exit_edge < 0; ++e) {
            Seg2 es{corner[e], corner[(e + 1) & 3]};
            if (point_on_segment(exit_pt, es)) exit_edge = e;
        }
        if (exit_edge < 0) throw std::logic_error("no exit edge for cone panel");
        FaceId nface = geom.neighbor_face(face, exit_edge);
        PlanarTransform nplane = to_plane.compose(geom.step(face, exit_edge));
        sweep_piece(ctx, apex, wedge_face, apex_pos, nface, nplane, plo, phi,
                    faces_crossed + 1, next_dir, depth);
    }
}

// Splits the open cone (lo_ray, hi_ray) at wedge boundaries and sweeps each
// wedge-contained piece; boundary edge rays strictly inside become ray jobs.
void certify_open_cone(Cert& ctx, VertexId apex, const VertexRay& lo_ray,
                       const VertexRay& hi_ray, const VertexRay& next_dir,
                       int depth) {
    const BoxGeometry& geom = *ctx.geom;
    auto [plo, lo_c] = canonical_fan_ray(geom, lo_ray);
    auto [phi, hi_c] = canonical_fan_ray(geom, hi_ray);
    int span = (phi - plo + 3) % 3;
    // In-wedge boundaries of each intermediate piece.
    struct Piece {
        int pos;
        Dir2 lo, hi;
    };
    std::vector<Piece> pieces;
    std::vector<VertexRay> edge_jobs;
    auto wedge_of = [&](int pos) { return geom.fan(apex)[pos]; };
    if (span == 0 && !(lo_c.d == hi_c.d)) {
        pieces.push_back({plo, lo_c.d, hi_c.d});
    } else {
        // From lo to the end of its wedge, full wedges between, then into
        // hi's wedge.
        auto [f0, c0] = wedge_of(plo);
        pieces.push_back({plo, lo_c.d, BoxGeometry::wedge_end_dir(c0)});
        for (int p = (plo + 1) % 3; p != phi; p = (p + 1) % 3) {
            auto [f, c] = wedge_of(p);
            edge_jobs.push_back({apex, f, BoxGeometry::wedge_start_dir(c)});
            pieces.push_back({p, BoxGeometry::wedge_start_dir(c),
                              BoxGeometry::wedge_end_dir(c)});
        }
        auto [f1, c1] = wedge_of(phi);
        edge_jobs.push_back({apex, f1, BoxGeometry::wedge_start_dir(c1)});
        pieces.push_back({phi, BoxGeometry::wedge_start_dir(c1), hi_c.d});
    }
    for (const auto& r : edge_jobs) certify_ray(ctx, apex, r, next_dir, depth);
    for (const auto& piece : pieces) {
        auto [f, c] = wedge_of(piece.pos);
        Vec2q apex_pos = geom.corner_pos(f, c);
        sweep_piece(ctx, apex, f, apex_pos, f, PlanarTransform::identity(),
                    piece.lo, piece.hi, 0, next_dir, depth);
    }
}

// The full backward cone [next + pi/2, next + pi] at a chain vertex.
void certify_cone(Cert& ctx, VertexId apex, const VertexRay& next_dir, int depth) {
    const BoxGeometry& geom = *ctx.geom;
    VertexRay lo = rotate_ray_ccw(geom, next_dir, 1);
    VertexRay hi = rotate_ray_ccw(geom, next_dir, 2);
    certify_ray(ctx, apex, lo, next_dir, depth);
    certify_ray(ctx, apex, hi, next_dir, depth);
    certify_open_cone(ctx, apex, lo, hi, next_dir, depth);
}

}  // namespace

ObstructionCertificate check_backward_obstruction(const BoxGeometry& cube,
                                                  const Rational& slope,
                                                  int max_chain_depth) {
    auto ci = case_of_slope(slope);
    if (!ci || case_table()[*ci - 1].verdict != CaseSpec::Verdict::backward_obstructed)
        throw std::invalid_argument("slope is not in a backward-obstruction range");
    const CaseSpec& spec = case_table()[*ci - 1];

    long long p = static_cast<long long>(num(slope));
    long long q = static_cast<long long>(den(slope));
    TraceOutcome t = trace_ray(cube, 1, FaceId::F, Dir2{q, p},
                               16 * static_cast<int>(q) + 32);
    if (t.kind != TraceOutcome::Kind::segment)
        throw std::logic_error("case-range ray did not end at a vertex");
    GeodesicSegment g = t.segment;

    ObstructionCertificate cert;
    cert.slope = slope;
    cert.case_index = *ci;
    cert.complete = true;

    Cert ctx;
    ctx.geom = &cube;
    ctx.g = &g;
    ctx.chain = {&g};
    ctx.used = {1, g.end};
    ctx.max_chain_depth = max_chain_depth;
    ctx.cert = &cert;

    // The case-wide backward cone: the union over slopes a in the case range
    // of [a + pi/2, a + pi]. Its ends are the rotated boundary-slope rays;
    // each end is part of the cone exactly when the boundary slope belongs to
    // the range (so case 1 is open along edge v1-v5 and closed at the top).
    long long plo = static_cast<long long>(num(spec.lo));
    long long qlo = static_cast<long long>(den(spec.lo));
    long long phi_n = static_cast<long long>(num(spec.hi));
    long long qhi = static_cast<long long>(den(spec.hi));
    VertexRay lo = rotate_ray_ccw(cube, VertexRay{1, FaceId::F, Dir2{qlo, plo}}, 1);
    VertexRay hi = rotate_ray_ccw(cube, VertexRay{1, FaceId::F, Dir2{qhi, phi_n}}, 2);
    VertexRay next{1, FaceId::F, g.dir};
    if (spec.lo_closed) certify_ray(ctx, 1, lo, next, 0);
    if (spec.hi_closed) certify_ray(ctx, 1, hi, next, 0);
    certify_open_cone(ctx, 1, lo, hi, next, 0);
    return cert;
}

std::array<int, 6> face_crossing_counts(const BoxGeometry& geom, const QuasiGeo& q) {
    std::array<int, 6> counts{};
    for (const auto& s : q.cycle)
        for (const auto& c : s.crossings) {
            // Only passages through the open interior count.
            bool boundary_run = false;
            for (int e = 0; e < 4 && !boundary_run; ++e) {
                Seg2 es{geom.corner_pos(c.face, e), geom.corner_pos(c.face, e + 1)};
                boundary_run = point_on_segment(c.entry, es) &&
                               point_on_segment(c.exit, es);
            }
            if (!boundary_run) ++counts[face_index(c.face)];
        }
    return counts;
}

bool verify_corollary_classes(const BoxGeometry& geom,
                              const std::vector<QuasiGeo>& reps) {
    for (const auto& q : reps) {
        for (const auto& s : q.cycle) {
            std::array<int, 6> per_seg{};
            for (const auto& c : s.crossings) {
                bool boundary_run = false;
                for (int e = 0; e < 4 && !boundary_run; ++e) {
                    Seg2 es{geom.corner_pos(c.face, e), geom.corner_pos(c.face, e + 1)};
                    boundary_run = point_on_segment(c.entry, es) &&
                                   point_on_segment(c.exit, es);
                }
                if (!boundary_run && ++per_seg[face_index(c.face)] > 1) return false;
            }
        }
        auto counts = face_crossing_counts(geom, q);
        for (int c : counts)
            if (c > 1) return false;
    }
    return true;
}

bool verify_corollary(const BoxGeometry& geom,
                      const std::map<std::string, QuasiGeo>& qs) {
    std::vector<QuasiGeo> reps;
    reps.reserve(qs.size());
    for (const auto& [key, q] : qs) reps.push_back(q);
    return verify_corollary_classes(geom, reps);
}

}  // namespace qg
