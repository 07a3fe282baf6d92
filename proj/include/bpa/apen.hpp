#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bpa {

// Approximate entropy of a finite sequence, with two conventions pinned
// so the reference values of this project reproduce:
//   * match test is strict (d < r) and counts the window itself, and
//   * Phi_m(r) = -(1/W) * sum ln(C_i), so Phi is non-negative and
//     apen = Phi_m - Phi_{m+1} may come out negative.

/// Embedded windows of u: window i is [u(i), ..., u(i+m-1)], giving exactly
/// N-m+1 windows. Throws ArgumentError when N < m or m < 1.
std::vector<std::vector<double>> embed(std::span<const double> u, int m);

/// Chebyshev distance: maximum componentwise absolute difference. Throws
/// ArgumentError on a length mismatch.
double chebyshev_distance(std::span<const double> x, std::span<const double> y);

/// Fraction of windows whose Chebyshev distance to windows[i] is strictly
/// below r, the window itself included. At least 1/windows.size() whenever
/// r > 0; exactly 0 when r = 0.
double correlation_count(const std::vector<std::vector<double>>& windows,
                         std::size_t i, double r);

/// Phi_m(r) = -(1/(N-m+1)) * sum_i ln(C_i^m(r)), summed in window order.
/// Throws DegenerateToleranceError when some window has no match at all
/// (only possible with r <= 0), and ArgumentError on N < m or non-finite
/// input.
double phi(std::span<const double> u, int m, double r);

/// Phi_m(r) - Phi_{m+1}(r). Requires N >= m+1 so both terms have at least
/// one window.
double apen(std::span<const double> u, int m, double r);

/// Standard deviation with the 1/N normalization.
double population_std(std::span<const double> u);

} // namespace bpa
