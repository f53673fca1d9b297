#pragma once

#include "quasigeo/symmetry.hpp"

#include <string>
#include <vector>

namespace qg {

// Re-validation of search output with code paths independent of the DFS:
// every segment is re-traced from its start data, junction angles are
// recomputed from the development, the full cyclic pairwise intersection
// check is redone, and the once-per-face crossing property is re-counted.
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

VerifyReport verify_quasigeo(const BoxGeometry& geom, const QuasiGeo& q);

VerifyReport verify_classes(const BoxGeometry& geom,
                            const std::vector<CanonicalClass>& classes,
                            int group_order, bool check_corollary);

}  // namespace qg
