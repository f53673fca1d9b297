#pragma once

#include "quasigeo/search.hpp"

#include <optional>
#include <vector>

namespace qg {

// One of the seven slope ranges between the five admissible slopes.
struct CaseSpec {
    int index = 0;  // 1..7
    Rational lo, hi;
    bool lo_closed = false, hi_closed = false;
    enum class Verdict { self_crossing, backward_obstructed } verdict =
        Verdict::self_crossing;

    bool contains(const Rational& s) const {
        if (s < lo || s > hi) return false;
        if (s == lo && !lo_closed) return false;
        if (s == hi && !hi_closed) return false;
        return true;
    }
};

// The seven ranges, tiling (0,1] minus {1/3, 1/2, 2/3, 1}.
const std::array<CaseSpec, 7>& case_table();

// Which case a slope falls into, if any.
std::optional<int> case_of_slope(const Rational& slope);

// All reduced fractions in the case's range with denominator <= max_den.
std::vector<Rational> sample_slopes(const CaseSpec& spec, int max_den);

// Certification that the ray of the given slope from vertex 1 across face F
// crosses itself, back on F and at right angles.
struct SelfCrossingResult {
    bool self_crossing = false;
    bool on_start_face = false;
    bool perpendicular = false;
    FacePoint witness{FaceId::F, 0, 0};
    bool certified() const { return self_crossing && on_start_face && perpendicular; }
};

SelfCrossingResult check_self_crossing(const BoxGeometry& cube, const Rational& slope);

// One dispositioned piece of the backward-direction cone at a chain vertex.
struct ObstructionRecord {
    enum class Kind {
        cone_crossing,      // an open sub-cone whose rays all cross the chain
        ray_crossing,       // a single direction crossing the chain
        ray_self_crossing,  // backward trace crosses itself: no such predecessor
        chain_candidate,    // direction reaches a fresh vertex; recursed below
        sharp_angle,        // chain returned to the start vertex, angle fails
        vertex_reuse,       // chain reached a vertex already on the curve
        budget_exhausted,   // development or chain budget ran out: NOT certified
    };
    Kind kind;
    int depth = 0;            // chain depth (0 = predecessors of the tested ray)
    VertexId at_vertex = 0;   // apex of the cone this record belongs to
    VertexRay dir_lo, dir_hi; // sub-cone bounds (equal for single-ray records)
    // For crossings: the exact witness and which chain segment was crossed.
    SurfacePoint witness;
    int crossed_target = -1;
    FaceId witness_face = FaceId::F;
    // For chain candidates: where the backward ray ended.
    VertexId reached = 0;
    Rational candidate_length_sq;
    bool junction_valid = false;  // candidate satisfies the angle bound with
                                  // the chain segment it would precede
};

struct ObstructionCertificate {
    Rational slope;
    int case_index = 0;
    bool complete = false;  // every direction in the cone was dispositioned
    int deepest_chain = 0;
    std::vector<ObstructionRecord> records;
};

// Certification of the backward-cone argument for a slope in case 1, 4, 5 or
// 7: every direction a preceding segment could leave vertex 1 in is shown to
// cross the traced ray (or the chain built so far), or followed through
// vertex chains until a sharp-angle rejection.
ObstructionCertificate check_backward_obstruction(const BoxGeometry& cube,
                                                  const Rational& slope,
                                                  int max_chain_depth);

// True iff no segment of any quasigeodesic crosses a face more than once and
// no whole quasigeodesic does either. Only passages through a face's open
// interior count as crossings.
bool verify_corollary(const BoxGeometry& geom,
                      const std::map<std::string, QuasiGeo>& qs);
bool verify_corollary_classes(const BoxGeometry& geom,
                              const std::vector<QuasiGeo>& reps);

// Crossing count of the whole curve per face (open-interior passages).
std::array<int, 6> face_crossing_counts(const BoxGeometry& geom, const QuasiGeo& q);

}  // namespace qg
