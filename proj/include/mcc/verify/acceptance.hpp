#pragma once

#include <string>
#include <vector>

#include "mcc/tower.hpp"

namespace mcc::acceptance {

struct Options {
    /// Upper end of the r sweeps; the term checks stop at min(rmax, 8).
    long rmax = 12;
    /// Reference Betti numbers for r = 3, coefficients of t^0, t^2, ...
    std::vector<long> reference{tower::kTwistedCubicBetti.begin(), tower::kTwistedCubicBetti.end()};
};

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs criteria A1..A10 in order. Exceptions inside a criterion count as
/// failures and are reported in `detail`.
std::vector<CriterionResult> run(const Options& options);

/// "PASS A1  r=3 exactness (0.004 s)" followed by the detail when failing.
std::string format_line(const CriterionResult& result);

}  // namespace mcc::acceptance
