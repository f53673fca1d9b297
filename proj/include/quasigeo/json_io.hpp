#pragma once

#include "quasigeo/lemma.hpp"
#include "quasigeo/symmetry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qg {

using Json = nlohmann::ordered_json;

// Class ids in report order: the Table-1 letter (or 'Q' outside that
// classification) followed by a 1-based index within the letter.
std::vector<std::string> class_ids(const std::vector<CanonicalClass>& classes);

Json segment_to_json(const BoxGeometry& geom, const GeodesicSegment& s);

// Stable inventory document: geometry, group order, labeled count and the
// canonical classes with their orbit data.
Json inventory_to_json(const BoxGeometry& geom, int group_order,
                       long long labeled_count, long long raw_emissions,
                       const std::vector<CanonicalClass>& classes);

Json segments_to_json(const BoxGeometry& geom,
                      const std::map<std::string, GeodesicSegment>& segments);

Json certificate_to_json(const ObstructionCertificate& cert);
Json self_crossing_to_json(const Rational& slope, const SelfCrossingResult& r);

}  // namespace qg
