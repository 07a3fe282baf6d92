#pragma once

#include <vector>

#include "bpa/logical_graph.hpp"

namespace bpa {

struct UiParams {
    int m = 2;              // embedding dimension; 2 is the normative choice
    double r_factor = 0.2;  // r = r_factor * population std of the slide sequence
    double eps_sum = kDefaultMassSumTolerance;
};

/// Integrity-uncertainty value with its full provenance.
struct UiResult {
    double ui = 0.0;            // |signed_apen|; the reported measure
    double signed_apen = 0.0;   // phi_m - phi_m_plus_1 as computed
    double phi_m = 0.0;
    double phi_m_plus_1 = 0.0;
    double r = 0.0;
    double std_dev = 0.0;
    int n_nodes = 0;
    std::vector<double> slide;
    bool degenerate = false;    // constant degree sequence (std = 0): ui is 0 by definition
};

/// Integrity uncertainty of a BPA: the approximate entropy of its descending
/// node-degree sequence, with r = r_factor * population std of that sequence.
/// Larger values mean a higher possibility that the assignment is missing
/// elements. The absolute value is reported so the measure is non-negative
/// under the sign conventions of apen(); the signed value is kept alongside.
///
/// Throws InvalidBpaError when validation fails and TooFewNodesError when the
/// network has fewer than 3 (or m+1) nodes.
UiResult integrity_uncertainty(const MassFunction& bpa, const UiParams& params = {});

} // namespace bpa
