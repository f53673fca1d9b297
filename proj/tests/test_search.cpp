#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasigeo/search.hpp"

#include <map>

using namespace qg;

namespace {
const BoxGeometry& cube() {
    static BoxGeometry g = make_box(1, 1, 1);
    return g;
}

GeodesicSegment traced(VertexId v, FaceId f, Dir2 d) {
    TraceOutcome t = trace_ray(cube(), v, f, d, 16);
    REQUIRE(t.kind == TraceOutcome::Kind::segment);
    return t.segment;
}
}  // namespace

TEST_CASE("angle_ok on edge junctions") {
    // v2 -> v1 (B chart dir (1,0)) then v1 -> v4 (B chart dir (0,1)):
    // sides pi/2 and pi, both fine.
    GeodesicSegment e21 = traced(2, FaceId::B, {1, 0});
    REQUIRE(e21.end == 1);
    GeodesicSegment e14 = traced(1, FaceId::B, {0, 1});
    REQUIRE(e14.end == 4);
    CHECK(angle_ok(cube(), e21, e14));

    // Doubling straight back fails.
    GeodesicSegment e12 = e21.reversed();
    CHECK(!angle_ok(cube(), e21, e12));

    CHECK_THROWS_AS(angle_ok(cube(), e14, e21), std::invalid_argument);
}

TEST_CASE("simple_check accepts a single edge and the B face boundary") {
    Chain one{{traced(1, FaceId::B, {0, 1})}};
    CHECK(simple_check(cube(), one, false));

    // v1 -> v2 -> v3 -> v4 -> v1 around the bottom face.
    GeodesicSegment a = traced(1, FaceId::F, {1, 0});
    GeodesicSegment b = traced(2, FaceId::R, {1, 0});
    REQUIRE(b.end == 3);
    GeodesicSegment c = traced(3, FaceId::K, {1, 0});
    REQUIRE(c.end == 4);
    GeodesicSegment d = traced(4, FaceId::L, {1, 0});
    REQUIRE(d.end == 1);
    Chain cyc{{a, b, c, d}};
    CHECK(simple_check(cube(), cyc, false));
    CHECK(simple_check(cube(), cyc, true));
}

TEST_CASE("simple_check rejects crossing diagonals") {
    // The two diagonals of F cross in the middle.
    GeodesicSegment d1 = traced(1, FaceId::F, {1, 1});  // v1 -> v6
    GeodesicSegment d2 = traced(6, FaceId::F, {0, -1}); // v6 -> v2 edge, shares v6
    REQUIRE(d1.end == 6);
    Chain ok{{d1, d2}};
    CHECK(simple_check(cube(), ok, false));

    GeodesicSegment d3 = traced(2, FaceId::F, {-1, 1});  // v2 -> v5, crosses d1
    REQUIRE(d3.end == 5);
    Chain bad{{d1, d2, d3}};
    CHECK(!simple_check(cube(), bad, false));
}

TEST_CASE("classification follows the length order") {
    auto segs = enumerate_segments_cube(cube());
    SearchResult r = dfs_search(cube(), segs);
    std::map<char, int> seen;
    for (const auto& [key, q] : r.labeled) ++seen[q.category];
    CHECK(seen.count('A'));
    CHECK(seen.count('B'));
    CHECK(seen.count('C'));
    CHECK(seen.count('D'));
    CHECK(seen.count('E'));
    CHECK(!seen.count('-'));
}

TEST_CASE("empty segment set yields no quasigeodesics") {
    std::map<std::string, GeodesicSegment> none;
    SearchResult r = dfs_search(cube(), none);
    CHECK(r.labeled.empty());
    CHECK(r.raw_emissions == 0);
}

TEST_CASE("edges-only search finds exactly the simple cube-graph cycles") {
    auto segs = enumerate_segments_cube(cube());
    std::map<std::string, GeodesicSegment> edges;
    for (const auto& [key, s] : segs)
        if (s.length_sq == 1) edges.emplace(key, s);
    REQUIRE(edges.size() == 12);
    SearchResult r = dfs_search(cube(), edges);
    // Simple cycles of the cube graph: 6 squares + 16 hexagons + 6
    // Hamiltonian octagons. Every junction of two distinct edges has sides
    // pi/2 and pi, so all of them qualify.
    CHECK(r.labeled.size() == 28);
    std::map<int, int> by_len;
    for (const auto& [key, q] : r.labeled) {
        ++by_len[q.size()];
        CHECK(q.category == 'A');
    }
    CHECK(by_len[4] == 6);
    CHECK(by_len[6] == 16);
    CHECK(by_len[8] == 6);
}

TEST_CASE("full cube search: rotation and reversal closure") {
    auto segs = enumerate_segments_cube(cube());
    SearchResult r = dfs_search(cube(), segs);
    for (const auto& [key, q] : r.labeled) {
        // Any rotation/reversal of an accepted cycle canonicalizes to the
        // same key.
        std::vector<GeodesicSegment> rot(q.cycle.begin() + 1, q.cycle.end());
        rot.push_back(q.cycle.front());
        auto [c1, k1] = canonical_cycle(cube(), rot);
        CHECK(k1 == q.key);
        std::vector<GeodesicSegment> rev;
        for (auto it = q.cycle.rbegin(); it != q.cycle.rend(); ++it)
            rev.push_back(it->reversed());
        auto [c2, k2] = canonical_cycle(cube(), rev);
        CHECK(k2 == q.key);
    }
}

TEST_CASE("every accepted cube cycle satisfies the public checks") {
    auto segs = enumerate_segments_cube(cube());
    SearchResult r = dfs_search(cube(), segs);
    CHECK(r.labeled.size() > 0);
    for (const auto& [key, q] : r.labeled) {
        Chain c{q.cycle};
        CHECK(simple_check(cube(), c, true));
        int m = q.size();
        for (int i = 0; i < m; ++i)
            CHECK(angle_ok(cube(), q.cycle[i], q.cycle[(i + 1) % m]));
    }
}

TEST_CASE("segment lengths and slopes of accepted cube cycles") {
    auto segs = enumerate_segments_cube(cube());
    SearchResult r = dfs_search(cube(), segs);
    std::set<Rational> lengths;
    std::set<Rational> slopes;
    for (const auto& [key, q] : r.labeled)
        for (const auto& s : q.cycle) {
            lengths.insert(s.length_sq);
            slopes.insert(normalized_slope(s.dir));
        }
    std::set<Rational> len_ok{1, 2, 5, 10, 13};
    std::set<Rational> slope_ok{0, Rational(1) / 3, Rational(1) / 2,
                                Rational(2) / 3, 1};
    for (const auto& l : lengths) CHECK(len_ok.count(l) == 1);
    for (const auto& s : slopes) CHECK(slope_ok.count(s) == 1);
}
