#include "quasigeo/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qg {

const char* face_name(FaceId f) {
    static constexpr const char* names[6] = {"F", "R", "T", "K", "L", "B"};
    return names[face_index(f)];
}

std::optional<FaceId> face_from_name(std::string_view name) {
    for (FaceId f : kAllFaces)
        if (name == face_name(f)) return f;
    return std::nullopt;
}

Dir2 Dir2::reduced(long long dx, long long dy) {
    if (dx == 0 && dy == 0) throw std::invalid_argument("zero direction");
    long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    return {dx / g, dy / g};
}

Dir2 Dir2::rotated(int quarters) const {
    Dir2 d = *this;
    int q = ((quarters % 4) + 4) % 4;
    for (int i = 0; i < q; ++i) d = {-d.y, d.x};
    return d;
}

Vec2q PlanarTransform::apply(const Vec2q& p) const {
    Rational rx, ry;
    switch (k) {
        case 0: rx = p.x; ry = p.y; break;
        case 1: rx = -p.y; ry = p.x; break;
        case 2: rx = -p.x; ry = -p.y; break;
        default: rx = p.y; ry = -p.x; break;
    }
    return {rx + tx, ry + ty};
}

Dir2 PlanarTransform::apply_dir(const Dir2& d) const { return d.rotated(k); }

PlanarTransform PlanarTransform::compose(const PlanarTransform& inner) const {
    PlanarTransform out;
    out.k = (k + inner.k) % 4;
    Vec2q t = apply({inner.tx, inner.ty});
    out.tx = t.x;
    out.ty = t.y;
    return out;
}

PlanarTransform PlanarTransform::inverse() const {
    PlanarTransform out;
    out.k = (4 - k) % 4;
    Vec2q t{tx, ty};
    Vec2q rt;
    switch (out.k) {
        case 0: rt = t; break;
        case 1: rt = {-t.y, t.x}; break;
        case 2: rt = {-t.x, -t.y}; break;
        default: rt = {t.y, -t.x}; break;
    }
    out.tx = -rt.x;
    out.ty = -rt.y;
    return out;
}

namespace {

// Face corner lists, CCW as seen from outside, chart corners at
// (0,0), (w,0), (w,h), (0,h).
constexpr std::array<std::array<VertexId, 4>, 6> kFaceCorners{{
    {1, 2, 6, 5},  // F
    {2, 3, 7, 6},  // R
    {5, 6, 7, 8},  // T
    {3, 4, 8, 7},  // K
    {4, 1, 5, 8},  // L
    {2, 1, 4, 3},  // B
}};

std::array<int, 3> sub3(const std::array<Rational, 3>& p,
                        const std::array<Rational, 3>& q,
                        const Rational& scale) {
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        Rational d = (p[i] - q[i]) / scale;
        if (d == 1) out[i] = 1;
        else if (d == -1) out[i] = -1;
        else if (d == 0) out[i] = 0;
        else throw std::logic_error("non-axis chart edge");
    }
    return out;
}

}  // namespace

const std::array<Rational, 3>& BoxGeometry::vertex_coord(VertexId v) const {
    if (v < 1 || v > 8) throw std::invalid_argument("vertex id out of range");
    return vcoord_[v];
}

VertexId BoxGeometry::vertex_at_corner(FaceId f, int corner) const {
    return corners_[face_index(f)][corner & 3];
}

int BoxGeometry::corner_of_vertex(FaceId f, VertexId v) const {
    const auto& c = corners_[face_index(f)];
    for (int i = 0; i < 4; ++i)
        if (c[i] == v) return i;
    return -1;
}

Vec2q BoxGeometry::corner_pos(FaceId f, int corner) const {
    Rational w = width(f), h = height(f);
    switch (corner & 3) {
        case 0: return {0, 0};
        case 1: return {w, 0};
        case 2: return {w, h};
        default: return {0, h};
    }
}

const std::array<int, 3>& BoxGeometry::chart_u_axis(FaceId f) const {
    return u_axis_[face_index(f)];
}
const std::array<int, 3>& BoxGeometry::chart_v_axis(FaceId f) const {
    return v_axis_[face_index(f)];
}

std::pair<VertexId, VertexId> BoxGeometry::edge_endpoints(FaceId f, int e) const {
    return {vertex_at_corner(f, e), vertex_at_corner(f, e + 1)};
}

FaceId BoxGeometry::neighbor_face(FaceId f, int e) const {
    return nbr_face_[face_index(f)][e & 3];
}
int BoxGeometry::neighbor_edge(FaceId f, int e) const {
    return nbr_edge_[face_index(f)][e & 3];
}

bool BoxGeometry::faces_adjacent(FaceId f, FaceId g) const {
    if (f == g) return false;
    for (int e = 0; e < 4; ++e)
        if (neighbor_face(f, e) == g) return true;
    return false;
}

int BoxGeometry::shared_edge(FaceId f, FaceId g) const {
    for (int e = 0; e < 4; ++e)
        if (neighbor_face(f, e) == g) return e;
    return -1;
}

const PlanarTransform& BoxGeometry::step(FaceId f, int e) const {
    return step_[face_index(f)][e & 3];
}

const std::array<std::pair<FaceId, int>, 3>& BoxGeometry::fan(VertexId v) const {
    if (v < 1 || v > 8) throw std::invalid_argument("vertex id out of range");
    return fan_[v];
}

int BoxGeometry::fan_position(VertexId v, FaceId f) const {
    const auto& fn = fan(v);
    for (int i = 0; i < 3; ++i)
        if (fn[i].first == f) return i;
    return -1;
}

Dir2 BoxGeometry::wedge_start_dir(int corner) {
    switch (corner & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

Dir2 BoxGeometry::wedge_end_dir(int corner) {
    return wedge_start_dir(corner).rotated(1);
}

BoxGeometry make_box(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::invalid_argument("box dimensions must be positive");

    BoxGeometry g;
    g.dims_ = {a, b, c};
    const Rational z = 0;
    g.vcoord_[1] = {z, z, z};
    g.vcoord_[2] = {a, z, z};
    g.vcoord_[3] = {a, b, z};
    g.vcoord_[4] = {z, b, z};
    g.vcoord_[5] = {z, z, c};
    g.vcoord_[6] = {a, z, c};
    g.vcoord_[7] = {a, b, c};
    g.vcoord_[8] = {z, b, c};
    g.corners_ = kFaceCorners;

    for (FaceId f : kAllFaces) {
        int fi = face_index(f);
        const auto& cs = g.corners_[fi];
        const auto &p0 = g.vcoord_[cs[0]], &p1 = g.vcoord_[cs[1]], &p3 = g.vcoord_[cs[3]];
        Rational w = 0, h = 0;
        for (int i = 0; i < 3; ++i) {
            w += abs(p1[i] - p0[i]);
            h += abs(p3[i] - p0[i]);
        }
        g.width_[fi] = w;
        g.height_[fi] = h;
        g.u_axis_[fi] = sub3(p1, p0, w);
        g.v_axis_[fi] = sub3(p3, p0, h);
    }

    // Pair up edges across faces: each unordered 3D edge appears in exactly
    // two corner cycles, in opposite directions.
    std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<FaceId, int>>> edge_uses;
    for (FaceId f : kAllFaces)
        for (int e = 0; e < 4; ++e) {
            auto [va, vb] = g.edge_endpoints(f, e);
            edge_uses[{std::min(va, vb), std::max(va, vb)}].push_back({f, e});
        }
    for (auto& [key, uses] : edge_uses) {
        if (uses.size() != 2) throw std::logic_error("edge not shared by two faces");
        auto [f0, e0] = uses[0];
        auto [f1, e1] = uses[1];
        g.nbr_face_[face_index(f0)][e0] = f1;
        g.nbr_edge_[face_index(f0)][e0] = e1;
        g.nbr_face_[face_index(f1)][e1] = f0;
        g.nbr_edge_[face_index(f1)][e1] = e0;
    }

    // Step transforms. For face f edge e (v_i -> v_j in f's chart) glued to
    // face n edge e' (v_j -> v_i in n's chart), the transform maps n's chart
    // into f's plane: rotation takes n's edge direction to the reverse of
    // f's, translation matches the shared endpoints.
    for (FaceId f : kAllFaces) {
        int fi = face_index(f);
        for (int e = 0; e < 4; ++e) {
            FaceId n = g.nbr_face_[fi][e];
            int en = g.nbr_edge_[fi][e];
            Vec2q fa = g.corner_pos(f, e);       // v_i in f chart
            Vec2q fb = g.corner_pos(f, e + 1);   // v_j in f chart
            Vec2q na = g.corner_pos(n, en);      // v_j in n chart
            // Edge directions in chart coordinates are axis unit vectors.
            auto axis_dir = [](const Vec2q& from, const Vec2q& to) -> Dir2 {
                long long dx = to.x > from.x ? 1 : (to.x < from.x ? -1 : 0);
                long long dy = to.y > from.y ? 1 : (to.y < from.y ? -1 : 0);
                return {dx, dy};
            };
            Dir2 df = axis_dir(fa, fb);
            Dir2 dn = axis_dir(g.corner_pos(n, en), g.corner_pos(n, en + 1));
            int k = 0;
            Dir2 want{-df.x, -df.y};
            while (!(dn.rotated(k) == want)) ++k;
            PlanarTransform t;
            t.k = k % 4;
            // n's corner en is vertex v_j which sits at fb in f's chart.
            Vec2q rn = PlanarTransform{t.k, 0, 0}.apply(na);
            t.tx = fb.x - rn.x;
            t.ty = fb.y - rn.y;
            g.step_[fi][e] = t;
        }
    }

    // Wedge fans: from wedge (f, corner) the CCW-next wedge lies across the
    // end edge of the wedge, which is the face edge arriving at the corner.
    for (VertexId v = 1; v <= 8; ++v) {
        FaceId f = FaceId::F;
        bool found = false;
        for (FaceId cand : kAllFaces)
            if (g.corner_of_vertex(cand, v) >= 0 && !found) {
                f = cand;
                found = true;
            }
        std::array<std::pair<FaceId, int>, 3> fan{};
        FaceId cur = f;
        for (int i = 0; i < 3; ++i) {
            int corner = g.corner_of_vertex(cur, v);
            fan[i] = {cur, corner};
            int end_edge = (corner + 3) & 3;  // edge from corner-1 to corner
            FaceId nxt = g.nbr_face_[face_index(cur)][end_edge];
            cur = nxt;
        }
        if (cur != f) throw std::logic_error("vertex fan does not close");
        g.fan_[v] = fan;
    }

    return g;
}

std::vector<PlanarTransform> develop(const BoxGeometry& geom,
                                     std::span<const FaceId> path) {
    if (path.empty()) throw std::invalid_argument("empty face path");
    std::vector<PlanarTransform> out;
    out.reserve(path.size());
    out.push_back(PlanarTransform::identity());
    for (std::size_t i = 1; i < path.size(); ++i) {
        FaceId prev = path[i - 1], cur = path[i];
        int e = geom.shared_edge(prev, cur);
        if (e < 0) {
            std::ostringstream msg;
            msg << "faces " << face_name(prev) << " and " << face_name(cur)
                << " are not adjacent";
            throw std::invalid_argument(msg.str());
        }
        out.push_back(out.back().compose(geom.step(prev, e)));
    }
    return out;
}

bool face_point_in_chart(const BoxGeometry& geom, const FacePoint& p) {
    return p.u >= 0 && p.u <= geom.width(p.face) && p.v >= 0 &&
           p.v <= geom.height(p.face);
}

int SurfacePoint::compare(const SurfacePoint& o) const {
    if (is_vertex() != o.is_vertex()) return is_vertex() ? -1 : 1;
    if (is_vertex()) return vertex < o.vertex ? -1 : (vertex > o.vertex ? 1 : 0);
    if (face != o.face) return face_index(face) < face_index(o.face) ? -1 : 1;
    if (u != o.u) return u < o.u ? -1 : 1;
    if (v != o.v) return v < o.v ? -1 : 1;
    return 0;
}

std::string SurfacePoint::str() const {
    std::ostringstream os;
    if (is_vertex()) {
        os << "v" << vertex;
    } else {
        os << face_name(face) << "(" << to_string(u) << "," << to_string(v) << ")";
    }
    return os.str();
}

SurfacePoint canonical_surface_point(const BoxGeometry& geom, const FacePoint& p) {
    if (!face_point_in_chart(geom, p))
        throw std::invalid_argument("point outside chart");
    Rational w = geom.width(p.face), h = geom.height(p.face);
    bool on_u0 = p.u == 0, on_u1 = p.u == w, on_v0 = p.v == 0, on_v1 = p.v == h;
    int on_count = int(on_u0) + int(on_u1) + int(on_v0) + int(on_v1);
    if (on_count >= 2) {  // corner
        int corner = on_u0 ? (on_v0 ? 0 : 3) : (on_v0 ? 1 : 2);
        return {geom.vertex_at_corner(p.face, corner), p.face, p.u, p.v};
    }
    if (on_count == 1) {
        int e = on_v0 ? 0 : (on_u1 ? 1 : (on_v1 ? 2 : 3));
        FaceId n = geom.neighbor_face(p.face, e);
        if (face_index(n) < face_index(p.face)) {
            Vec2q q = geom.step(n, geom.neighbor_edge(p.face, e)).apply({p.u, p.v});
            return {0, n, q.x, q.y};
        }
    }
    return {0, p.face, p.u, p.v};
}

bool dir_in_wedge(const BoxGeometry& geom, FaceId f, VertexId v, Dir2 d) {
    int corner = geom.corner_of_vertex(f, v);
    if (corner < 0) return false;
    Dir2 s = BoxGeometry::wedge_start_dir(corner);
    Dir2 e = BoxGeometry::wedge_end_dir(corner);
    // d within the closed quarter wedge [s, e]: cross(s, d) >= 0, cross(d, e) >= 0.
    long long c1 = s.x * d.y - s.y * d.x;
    long long c2 = d.x * e.y - d.y * e.x;
    long long dot = s.x * d.x + s.y * d.y + e.x * d.x + e.y * d.y;
    return c1 >= 0 && c2 >= 0 && dot > 0;
}

namespace {

// (fan position, in-wedge angle) of a vertex ray, with rays along a wedge's
// end edge re-expressed as the start edge of the CCW-next wedge.
std::pair<int, ExactAngle> fan_coordinates(const BoxGeometry& geom,
                                           const VertexRay& r) {
    int corner = geom.corner_of_vertex(r.face, r.v);
    if (corner < 0) throw std::invalid_argument("ray face not incident to vertex");
    if (!dir_in_wedge(geom, r.face, r.v, r.d))
        throw std::invalid_argument("ray direction outside corner wedge");
    int pos = geom.fan_position(r.v, r.face);
    Dir2 s = BoxGeometry::wedge_start_dir(corner);
    // Angle of d relative to the wedge start direction.
    ExactAngle a = ExactAngle::of_vector(r.d.x, r.d.y) -
                   ExactAngle::of_vector(s.x, s.y);
    a = a.mod_quarters(4);
    if (a.quarters == 1 && a.y == 0) {  // exactly on the end edge
        return {(pos + 1) % 3, ExactAngle::zero()};
    }
    if (a.quarters != 0) throw std::logic_error("wedge angle out of range");
    return {pos, a};
}

}  // namespace

std::pair<int, VertexRay> canonical_fan_ray(const BoxGeometry& geom,
                                            const VertexRay& r) {
    auto [pos, theta] = fan_coordinates(geom, r);
    auto [f, corner] = geom.fan(r.v)[pos];
    Dir2 s = BoxGeometry::wedge_start_dir(corner);
    // Chart direction = start dir rotated by theta (complex product).
    long long tx = static_cast<long long>(theta.x), ty = static_cast<long long>(theta.y);
    Dir2 d = Dir2::reduced(s.x * tx - s.y * ty, s.x * ty + s.y * tx);
    return {pos, VertexRay{r.v, f, d}};
}

VertexRay rotate_ray_ccw(const BoxGeometry& geom, const VertexRay& r, int quarters) {
    auto [pos, theta] = fan_coordinates(geom, r);
    int npos = ((pos + quarters) % 3 + 3) % 3;
    auto [f, corner] = geom.fan(r.v)[npos];
    Dir2 s = BoxGeometry::wedge_start_dir(corner);
    long long tx = static_cast<long long>(theta.x), ty = static_cast<long long>(theta.y);
    Dir2 d = Dir2::reduced(s.x * tx - s.y * ty, s.x * ty + s.y * tx);
    return {r.v, f, d};
}

ExactAngle surface_angle_ccw(const BoxGeometry& geom, const VertexRay& from,
                             const VertexRay& to) {
    if (from.v != to.v) throw std::invalid_argument("rays at different vertices");
    auto [pa, ta] = fan_coordinates(geom, from);
    auto [pb, tb] = fan_coordinates(geom, to);
    int m = ((pb - pa) % 3 + 3) % 3;
    ExactAngle total = ExactAngle::right_angles(m) + tb - ta;
    return total.mod_quarters(3);
}

SideAngles side_angles(const BoxGeometry& geom, VertexId v,
                       FaceId in_face, Dir2 in_dir,
                       FaceId out_face, Dir2 out_dir) {
    VertexRay back{v, in_face, -in_dir};
    VertexRay fwd{v, out_face, out_dir};
    ExactAngle left = surface_angle_ccw(geom, fwd, back);
    ExactAngle right = ExactAngle::right_angles(3) - left;
    return {left, right};
}

bool side_angle_leq_pi(const BoxGeometry& geom, VertexId v,
                       FaceId in_face, Dir2 in_dir,
                       FaceId out_face, Dir2 out_dir, Side side) {
    SideAngles s = side_angles(geom, v, in_face, in_dir, out_face, out_dir);
    return (side == Side::left ? s.left : s.right).leq_pi();
}

}  // namespace qg
