#pragma once

#include "quasigeo/search.hpp"

#include <vector>

namespace qg {

// An isometry of the box: a signed axis permutation together with the induced
// action on vertex labels and faces.
struct SymmetryOp {
    std::array<std::array<int, 3>, 3> mat{};  // signed permutation matrix
    std::array<VertexId, 9> vperm{};          // index 1..8
    std::array<FaceId, 6> fperm{};
    bool is_rotation = true;  // det == +1

    bool is_identity() const;
};

// All isometries mapping the box to itself: 48 for the cube, 16 for a square
// prism, 8 for a generic box. Reflections included.
std::vector<SymmetryOp> symmetry_group(const BoxGeometry& geom);

// Rotation-only subgroup (det +1).
std::vector<SymmetryOp> rotation_subgroup(const std::vector<SymmetryOp>& group);

SymmetryOp compose(const SymmetryOp& outer, const SymmetryOp& inner);

// Image of a directed segment: map the start data and re-trace. The image is
// checked to land on the mapped end vertex with the same squared length.
GeodesicSegment apply(const BoxGeometry& geom, const SymmetryOp& op,
                      const GeodesicSegment& s);

// Image of a quasigeodesic, re-canonicalized.
QuasiGeo apply(const BoxGeometry& geom, const SymmetryOp& op, const QuasiGeo& q);

struct CanonicalClass {
    QuasiGeo representative;  // least labeled form in the orbit
    int orbit_size = 0;
    int stabilizer_size = 0;
};

// One representative per orbit of the group action. Input must be closed
// under the action (it is whenever it came from a full search); a violation
// is reported as a logic error. Classes are sorted by (category, slope
// multiset, encoding).
std::vector<CanonicalClass> reduce_to_classes(
    const BoxGeometry& geom, const std::map<std::string, QuasiGeo>& labeled,
    const std::vector<SymmetryOp>& group);

}  // namespace qg
