#pragma once

#include "quasigeo/search.hpp"

#include <string>

namespace qg {

// Cross-shaped net rendering: L, F, R, K in a row with T above F and B below
// F, face labels, and the curve drawn per face passage. Exact coordinates are
// formatted at 6 decimal places; identical input gives identical bytes.
std::string svg_net_quasigeo(const BoxGeometry& geom, const QuasiGeo& q,
                             const std::string& title);

// The three closed geodesics of the cube, drawn at the center of their
// sliding ranges: the equatorial band at mid-height and the two hexagonal
// bands through edge midpoints.
enum class KnownGeodesic { equator, hexagon_a, hexagon_b };
std::string svg_net_geodesic(const BoxGeometry& cube, KnownGeodesic which);

}  // namespace qg
