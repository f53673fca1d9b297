#include "quasigeo/intersect.hpp"

#include <algorithm>

namespace qg {

namespace {

Rational cross(const Vec2q& o, const Vec2q& a, const Vec2q& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

bool point_on_segment(const Vec2q& p, const Seg2& s) {
    if (cross(s.a, s.b, p) != 0) return false;
    Rational lox = std::min(s.a.x, s.b.x), hix = std::max(s.a.x, s.b.x);
    Rational loy = std::min(s.a.y, s.b.y), hiy = std::max(s.a.y, s.b.y);
    return p.x >= lox && p.x <= hix && p.y >= loy && p.y <= hiy;
}

Isect2 intersect_segments(const Seg2& s, const Seg2& t) {
    Vec2q d1{s.b.x - s.a.x, s.b.y - s.a.y};
    Vec2q d2{t.b.x - t.a.x, t.b.y - t.a.y};
    Rational denom = d1.x * d2.y - d1.y * d2.x;
    if (denom != 0) {
        Vec2q w{t.a.x - s.a.x, t.a.y - s.a.y};
        Rational u = (w.x * d2.y - w.y * d2.x) / denom;   // along s
        Rational v = (w.x * d1.y - w.y * d1.x) / denom;   // along t
        if (u < 0 || u > 1 || v < 0 || v > 1) return {};
        return {IsectKind::point, {s.a.x + u * d1.x, s.a.y + u * d1.y}, {}};
    }
    // Parallel, or at least one side degenerate.
    if (d1.x == 0 && d1.y == 0)
        return point_on_segment(s.a, t) ? Isect2{IsectKind::point, s.a, {}} : Isect2{};
    if (d2.x == 0 && d2.y == 0)
        return point_on_segment(t.a, s) ? Isect2{IsectKind::point, t.a, {}} : Isect2{};
    if (cross(s.a, s.b, t.a) != 0) return {};  // parallel, different lines
    // Collinear: overlap along the dominant axis of d1.
    auto key = [&](const Vec2q& p) { return d1.x != 0 ? p.x : p.y; };
    auto dekey = [&](const Rational& k) -> Vec2q {
        if (d1.x != 0) {
            Rational u = (k - s.a.x) / d1.x;
            return {k, s.a.y + u * d1.y};
        }
        Rational u = (k - s.a.y) / d1.y;
        return {s.a.x + u * d1.x, k};
    };
    Rational s_lo = std::min(key(s.a), key(s.b)), s_hi = std::max(key(s.a), key(s.b));
    Rational t_lo = std::min(key(t.a), key(t.b)), t_hi = std::max(key(t.a), key(t.b));
    Rational lo = std::max(s_lo, t_lo), hi = std::min(s_hi, t_hi);
    if (lo > hi) return {};
    if (lo == hi) return {IsectKind::point, dekey(lo), {}};
    return {IsectKind::overlap, dekey(lo), dekey(hi)};
}

namespace {

void add_point(const BoxGeometry& geom, std::vector<SurfacePoint>& out, FaceId f,
               const Vec2q& p) {
    SurfacePoint sp = canonical_surface_point(geom, {f, p.x, p.y});
    for (const auto& q : out)
        if (q == sp) return;
    out.push_back(sp);
}

// Clip a chart sub-segment to edge e of its face. Returns the intersection as
// 0, 1 or 2 parameters along the canonical orientation of the 3D edge
// (from the lower-id endpoint), measured as exact distances.
struct EdgeClip {
    int n = 0;  // 0 none, 1 point, 2 sub-interval
    Rational lo, hi;
};

EdgeClip clip_to_edge(const BoxGeometry& geom, const SubSeg& s, int e) {
    Vec2q ea = geom.corner_pos(s.face, e);
    Vec2q eb = geom.corner_pos(s.face, e + 1);
    Isect2 is = intersect_segments(s.seg, {ea, eb});
    if (is.kind == IsectKind::none) return {};
    auto [va, vb] = geom.edge_endpoints(s.face, e);
    bool flip = va > vb;  // canonical orientation from the lower vertex id
    Rational len = abs(eb.x - ea.x) + abs(eb.y - ea.y);
    auto param = [&](const Vec2q& p) {
        Rational d = abs(p.x - ea.x) + abs(p.y - ea.y);
        return flip ? Rational(len - d) : d;
    };
    if (is.kind == IsectKind::point) return {1, param(is.p), param(is.p)};
    Rational a = param(is.p), b = param(is.q);
    if (a > b) std::swap(a, b);
    return {2, a, b};
}

// Chart point of an edge parameter, in face f's chart.
Vec2q edge_param_point(const BoxGeometry& geom, FaceId f, int e, const Rational& t) {
    Vec2q ea = geom.corner_pos(f, e);
    Vec2q eb = geom.corner_pos(f, e + 1);
    auto [va, vb] = geom.edge_endpoints(f, e);
    Rational len = abs(eb.x - ea.x) + abs(eb.y - ea.y);
    Rational d = (va > vb) ? Rational(len - t) : t;
    Rational fx = (eb.x - ea.x) / len, fy = (eb.y - ea.y) / len;
    return {ea.x + d * fx, ea.y + d * fy};
}

}  // namespace

SurfaceMeet surface_meet(const BoxGeometry& geom, const SubSeg& A, const SubSeg& B) {
    SurfaceMeet out;
    if (A.face == B.face) {
        Isect2 is = intersect_segments(A.seg, B.seg);
        if (is.kind == IsectKind::none) return out;
        add_point(geom, out.points, A.face, is.p);
        if (is.kind == IsectKind::overlap) {
            out.overlap = true;
            add_point(geom, out.points, A.face, is.q);
        }
        return out;
    }
    if (!geom.faces_adjacent(A.face, B.face)) return out;
    int ea = geom.shared_edge(A.face, B.face);
    int eb = geom.shared_edge(B.face, A.face);
    EdgeClip ca = clip_to_edge(geom, A, ea);
    EdgeClip cb = clip_to_edge(geom, B, eb);
    if (ca.n == 0 || cb.n == 0) return out;
    Rational lo = std::max(ca.lo, cb.lo), hi = std::min(ca.hi, cb.hi);
    if (lo > hi) return out;
    add_point(geom, out.points, A.face, edge_param_point(geom, A.face, ea, lo));
    if (lo != hi) {
        out.overlap = true;
        add_point(geom, out.points, A.face, edge_param_point(geom, A.face, ea, hi));
    }
    return out;
}

}  // namespace qg
