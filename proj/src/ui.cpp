#include "bpa/ui.hpp"

#include <cmath>
#include <string>

#include "bpa/apen.hpp"

namespace bpa {

UiResult integrity_uncertainty(const MassFunction& bpa, const UiParams& params) {
    if (params.m < 1) {
        throw ArgumentError("embedding dimension m must be at least 1");
    }
    const ValidationReport report = validate(bpa, params.eps_sum);
    if (!report.ok()) {
        std::string msg = "mass function fails validation:";
        for (const auto& v : report.violations) {
            msg += "\n  - " + v;
        }
        throw InvalidBpaError(msg);
    }

    UiResult result;
    result.slide = slide(bpa);
    result.n_nodes = static_cast<int>(result.slide.size());
    // fewer than 3 nodes means an empty assignment or a single assigned
    // element; the measure is undefined there
    const int required = std::max(3, params.m + 1);
    if (result.n_nodes < required) {
        throw TooFewNodesError(result.n_nodes, required);
    }

    result.std_dev = population_std(result.slide);
    result.r = params.r_factor * result.std_dev;
    if (result.std_dev == 0.0) {
        // constant degree sequence: maximally regular, ui is 0 by definition
        result.degenerate = true;
        return result;
    }

    result.phi_m = phi(result.slide, params.m, result.r);
    result.phi_m_plus_1 = phi(result.slide, params.m + 1, result.r);
    result.signed_apen = result.phi_m - result.phi_m_plus_1;
    result.ui = std::fabs(result.signed_apen);
    return result;
}

} // namespace bpa
