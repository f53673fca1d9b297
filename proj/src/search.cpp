#include "quasigeo/search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qg {

bool angle_ok(const BoxGeometry& geom, const GeodesicSegment& prev,
              const GeodesicSegment& next) {
    if (prev.end != next.start)
        throw std::invalid_argument("segments do not share a junction vertex");
    SideAngles s = side_angles(geom, prev.end, prev.end_face(), prev.arrival_dir,
                               next.start_face, next.dir);
    return s.left.leq_pi() && s.right.leq_pi();
}

namespace {

// Rays of one passage of the curve through a vertex, pointing away from it.
struct Passage {
    VertexRay back;  // toward where the curve came from
    VertexRay fwd;   // where it continues
};

// Non-crossing test for two passages through the same vertex: the second
// passage's rays must lie strictly within one side sector of the first.
bool passages_disjoint(const BoxGeometry& geom, const Passage& p1, const Passage& p2) {
    ExactAngle beta = surface_angle_ccw(geom, p1.fwd, p1.back);
    ExactAngle x = surface_angle_ccw(geom, p1.fwd, p2.back);
    ExactAngle y = surface_angle_ccw(geom, p1.fwd, p2.fwd);
    ExactAngle z = ExactAngle::zero();
    if (x == z || y == z || x == beta || y == beta) return false;  // shared ray
    bool x_in = x < beta, y_in = y < beta;
    return x_in == y_in;
}

struct CycleJunction {
    VertexId v;
    Passage passage;
    int loop_segment = -1;  // index of the loop owning this junction, if any
};

// Junction list of a closed cycle: junction i sits at the start of segment i,
// between segment i-1 (cyclically) and segment i.
std::vector<CycleJunction> cycle_junctions(const std::vector<GeodesicSegment>& segs) {
    std::vector<CycleJunction> out;
    int m = static_cast<int>(segs.size());
    for (int i = 0; i < m; ++i) {
        const GeodesicSegment& prev = segs[(i + m - 1) % m];
        const GeodesicSegment& cur = segs[i];
        CycleJunction j;
        j.v = cur.start;
        j.passage.back = {cur.start, prev.end_face(), -prev.arrival_dir};
        j.passage.fwd = {cur.start, cur.start_face, cur.dir};
        if (prev.is_loop() && prev.end == cur.start) j.loop_segment = (i + m - 1) % m;
        if (cur.is_loop()) j.loop_segment = i;
        out.push_back(j);
    }
    return out;
}

// Vertex-allowance and interleaving rules over a closed cycle's junctions.
bool vertices_ok_closed(const BoxGeometry& geom,
                        const std::vector<GeodesicSegment>& segs) {
    auto js = cycle_junctions(segs);
    for (VertexId v = 1; v <= 8; ++v) {
        std::vector<const CycleJunction*> at;
        for (const auto& j : js)
            if (j.v == v) at.push_back(&j);
        if (at.size() <= 1) continue;
        if (at.size() > 2) return false;
        // Two junctions are only permitted as the two ends of one loop.
        int loops_here = 0;
        for (const auto& s : segs)
            if (s.is_loop() && s.start == v) ++loops_here;
        if (loops_here != 1) return false;
        if (!passages_disjoint(geom, at[0]->passage, at[1]->passage)) return false;
    }
    return true;
}

bool meets_allowed(const BoxGeometry& geom, const GeodesicSegment& a,
                   const GeodesicSegment& b) {
    std::set<VertexId> shared;
    for (VertexId v : {a.start, a.end})
        if (v == b.start || v == b.end) shared.insert(v);
    for (const auto& ca : a.crossings) {
        SubSeg sa{ca.face, {ca.entry, ca.exit}};
        for (const auto& cb : b.crossings) {
            SubSeg sb{cb.face, {cb.entry, cb.exit}};
            SurfaceMeet m = surface_meet(geom, sa, sb);
            if (m.overlap) return false;
            for (const auto& pt : m.points) {
                if (!pt.is_vertex() || shared.count(pt.vertex) == 0) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool simple_check(const BoxGeometry& geom, const Chain& chain, bool closing) {
    const auto& segs = chain.segments;
    int m = static_cast<int>(segs.size());
    if (m == 0) return true;
    for (int i = 1; i < m; ++i)
        if (segs[i - 1].end != segs[i].start)
            throw std::invalid_argument("chain junctions do not line up");
    if (closing && segs.back().end != segs.front().start)
        throw std::invalid_argument("cycle does not close");

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!meets_allowed(geom, segs[i], segs[j])) return false;

    if (closing) return vertices_ok_closed(geom, segs);

    // Open chain: node list is start(s0), start(s1), ..., end(last). A vertex
    // may recur only as the two ends of one loop segment, or as the pending
    // closure (first node == last node).
    std::vector<VertexId> nodes;
    nodes.push_back(segs[0].start);
    for (const auto& s : segs) nodes.push_back(s.end);
    for (VertexId v = 1; v <= 8; ++v) {
        int cnt = 0;
        for (VertexId n : nodes) cnt += n == v;
        if (cnt <= 1) continue;
        int loops_here = 0;
        for (const auto& s : segs) loops_here += s.is_loop() && s.start == v;
        bool pending_close = nodes.front() == v && nodes.back() == v;
        int allowance = 1 + loops_here + (pending_close ? 1 : 0);
        if (cnt > allowance) return false;
    }
    return true;
}

char classify(const QuasiGeo& q) {
    bool all_edges = true;
    Rational longest = 0;
    for (const auto& s : q.cycle) {
        if (normalized_slope(s.dir) != 0) all_edges = false;
        longest = std::max(longest, s.length_sq);
    }
    if (all_edges) return 'A';
    if (longest == 2) return 'B';
    if (longest == 5) return 'C';
    if (longest == 10) return 'D';
    if (longest == 13) return 'E';
    return '-';
}

std::pair<std::vector<GeodesicSegment>, std::string> canonical_cycle(
    const BoxGeometry& geom, const std::vector<GeodesicSegment>& cycle) {
    int m = static_cast<int>(cycle.size());
    std::vector<GeodesicSegment> best;
    std::string best_key;
    auto consider = [&](const std::vector<GeodesicSegment>& cand) {
        std::string key;
        for (const auto& s : cand) {
            key += encode_segment(geom, s);
            key += "||";
        }
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best = cand;
        }
    };
    std::vector<GeodesicSegment> rev;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it)
        rev.push_back(it->reversed());
    for (int r = 0; r < m; ++r) {
        std::vector<GeodesicSegment> rot;
        for (int i = 0; i < m; ++i) rot.push_back(cycle[(r + i) % m]);
        consider(rot);
        rot.clear();
        for (int i = 0; i < m; ++i) rot.push_back(rev[(r + i) % m]);
        consider(rot);
    }
    return {best, best_key};
}

QuasiGeo make_quasigeo(const BoxGeometry& geom,
                       const std::vector<GeodesicSegment>& cycle) {
    QuasiGeo q;
    auto [canon, key] = canonical_cycle(geom, cycle);
    q.cycle = std::move(canon);
    q.key = std::move(key);
    for (const auto& s : q.cycle) q.vertex_cycle.push_back(s.start);
    q.category = classify(q);
    return q;
}

namespace {

struct DfsState {
    const BoxGeometry* geom;
    std::vector<GeodesicSegment> fwd, bwd;
    // Directed segments grouped by start vertex: (table id, reversed?).
    std::array<std::vector<std::pair<int, bool>>, 9> by_start;
    SearchResult result;

    const GeodesicSegment& seg(int id, bool rev) const { return rev ? bwd[id] : fwd[id]; }
};

int node_count(const std::vector<GeodesicSegment>& segs, VertexId v) {
    int cnt = segs.front().start == v;
    for (const auto& s : segs) cnt += s.end == v;
    return cnt;
}

void dfs_extend(DfsState& st, std::vector<GeodesicSegment>& segs, int root_id) {
    const GeodesicSegment& last = segs.back();
    VertexId w = last.end;
    VertexId home = segs.front().start;

    for (auto [id, rev] : st.by_start[w]) {
        if (id < root_id) continue;
        const GeodesicSegment& next = st.seg(id, rev);
        bool closes = !next.is_loop() && next.end == home;
        if (next.is_loop()) {
            // The loop pair is the vertex's whole allowance.
            if (node_count(segs, w) != 1) continue;
        } else if (!closes && node_count(segs, next.end) != 0) {
            continue;
        }
        if (!angle_ok(*st.geom, last, next)) continue;

        bool clean = true;
        for (const auto& s : segs)
            if (!meets_allowed(*st.geom, s, next)) {
                clean = false;
                break;
            }
        if (!clean) continue;

        segs.push_back(next);
        if (closes) {
            if (angle_ok(*st.geom, next, segs.front()) &&
                vertices_ok_closed(*st.geom, segs)) {
                ++st.result.raw_emissions;
                QuasiGeo q = make_quasigeo(*st.geom, segs);
                st.result.labeled.emplace(q.key, std::move(q));
            }
            // The closing junction consumed the home vertex; no extension.
        } else {
            dfs_extend(st, segs, root_id);
        }
        segs.pop_back();
    }
}

}  // namespace

SearchResult dfs_search(const BoxGeometry& geom,
                        const std::map<std::string, GeodesicSegment>& segments) {
    DfsState st;
    st.geom = &geom;
    for (const auto& [key, seg] : segments) {
        st.fwd.push_back(seg);
        st.bwd.push_back(seg.reversed());
    }
    int n = static_cast<int>(st.fwd.size());
    for (int id = 0; id < n; ++id) {
        st.by_start[st.fwd[id].start].push_back({id, false});
        st.by_start[st.bwd[id].start].push_back({id, true});
    }
    // Longest segments first; ties by table order, forward before reverse.
    for (auto& bucket : st.by_start)
        std::sort(bucket.begin(), bucket.end(), [&](auto a, auto b) {
            const Rational& la = st.fwd[a.first].length_sq;
            const Rational& lb = st.fwd[b.first].length_sq;
            if (la != lb) return la > lb;
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });

    for (int root = 0; root < n; ++root) {
        for (bool rev : {false, true}) {
            std::vector<GeodesicSegment> segs{st.seg(root, rev)};
            // A single loop segment may close on its own.
            const GeodesicSegment& s0 = segs.front();
            if (s0.is_loop()) {
                Chain c{segs};
                if (angle_ok(geom, s0, s0) && simple_check(geom, c, true)) {
                    ++st.result.raw_emissions;
                    QuasiGeo q = make_quasigeo(geom, segs);
                    st.result.labeled.emplace(q.key, std::move(q));
                }
            }
            dfs_extend(st, segs, root);
        }
    }
    return st.result;
}

}  // namespace qg
