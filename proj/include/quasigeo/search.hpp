#pragma once

#include "quasigeo/tracer.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace qg {

// An open or closed run of geodesic segments joined at vertices.
struct Chain {
    std::vector<GeodesicSegment> segments;
};

// A certified simple closed quasigeodesic: cyclic segment list in traversal
// order, with its canonical labeled encoding (minimal over rotations and
// reversal).
struct QuasiGeo {
    std::vector<GeodesicSegment> cycle;
    std::string key;
    char category = '-';
    std::vector<VertexId> vertex_cycle;  // start vertices of the segments

    int size() const { return static_cast<int>(cycle.size()); }
};

// Both side angles at the junction where prev ends and next starts are <= pi.
bool angle_ok(const BoxGeometry& geom, const GeodesicSegment& prev,
              const GeodesicSegment& next);

// No forbidden surface intersection among the chain's segments: sub-segments
// meet only at shared junction vertices, no vertex carries more than its
// single allowance (a loop pair counts once), and passages through a shared
// vertex do not interleave. `closing` treats the chain as a cycle.
bool simple_check(const BoxGeometry& geom, const Chain& chain, bool closing);

// Table-1 category: 'A' all-edge, else by the longest segment's squared
// length (2 -> B, 5 -> C, 10 -> D, 13 -> E); '-' outside that range.
char classify(const QuasiGeo& q);

struct SearchResult {
    std::map<std::string, QuasiGeo> labeled;  // canonical key -> quasigeo
    long long raw_emissions = 0;              // closures found before dedup
};

// Depth-first assembly of all simple closed quasigeodesics formable from the
// given segments, longest segments first, pruning on the angle and
// simplicity conditions. Deterministic.
SearchResult dfs_search(const BoxGeometry& geom,
                        const std::map<std::string, GeodesicSegment>& segments);

// Canonical cyclic form: rotates/reverses the cycle to minimize the joined
// encoding; returns the canonical cycle and its key.
std::pair<std::vector<GeodesicSegment>, std::string> canonical_cycle(
    const BoxGeometry& geom, const std::vector<GeodesicSegment>& cycle);

// Builds a QuasiGeo (canonical form, category, vertex cycle) from a valid
// directed cycle. Does not re-validate.
QuasiGeo make_quasigeo(const BoxGeometry& geom,
                       const std::vector<GeodesicSegment>& cycle);

}  // namespace qg
