#pragma once

#include <vector>

#include "bpa/evidence.hpp"

// Brute-force reference implementation of the whole measure, written as a
// literal transcription of the defining formulas with no code shared with
// the library's entropy path. Compiled into the test binaries only. Every
// frozen expected value in the test suite was produced by this oracle.
namespace bpa::oracle {

double oracle_population_std(const std::vector<double>& u);
double oracle_sample_std(const std::vector<double>& u);

/// -(1/(N-m+1)) * sum of ln(match fraction), strict d < r, self included.
double oracle_phi(const std::vector<double>& u, int m, double r);

/// oracle_phi(m) - oracle_phi(m+1); the signed value.
double oracle_apen(const std::vector<double>& u, int m, double r);

/// Descending node-degree sequence, collected and sorted independently.
std::vector<double> oracle_slide(const MassFunction& bpa);

/// |oracle_apen| of the slide sequence with r = r_factor * population std,
/// with the same constant-sequence policy as the library (std = 0 gives 0).
double oracle_ui(const MassFunction& bpa, int m = 2, double r_factor = 0.2);

/// The signed value behind oracle_ui.
double oracle_signed_ui(const MassFunction& bpa, int m = 2, double r_factor = 0.2);

} // namespace bpa::oracle
