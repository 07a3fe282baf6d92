#include "bpa/apen.hpp"

#include <cmath>
#include <string>

#include "bpa/errors.hpp"

namespace bpa {

namespace {

void require_window_setup(std::size_t n, int m) {
    if (m < 1) {
        throw ArgumentError("embedding dimension m must be at least 1, got " + std::to_string(m));
    }
    if (n < static_cast<std::size_t>(m)) {
        throw ArgumentError("sequence of length " + std::to_string(n) +
                            " is too short for embedding dimension " + std::to_string(m));
    }
}

void require_finite(std::span<const double> u) {
    for (double v : u) {
        if (!std::isfinite(v)) {
            throw ArgumentError("sequence contains a non-finite value");
        }
    }
}

} // namespace

std::vector<std::vector<double>> embed(std::span<const double> u, int m) {
    require_window_setup(u.size(), m);
    const std::size_t count = u.size() - static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<double>> windows;
    windows.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        windows.emplace_back(u.begin() + i, u.begin() + i + m);
    }
    return windows;
}

double chebyshev_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ArgumentError("chebyshev distance needs equal-length vectors, got " +
                            std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    double d = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double t = std::fabs(x[k] - y[k]);
        if (t > d) d = t;
    }
    return d;
}

double correlation_count(const std::vector<std::vector<double>>& windows,
                         std::size_t i, double r) {
    if (i >= windows.size()) {
        throw ArgumentError("window index " + std::to_string(i) + " out of range");
    }
    std::size_t matches = 0;
    for (const auto& w : windows) {
        if (chebyshev_distance(windows[i], w) < r) {
            ++matches;
        }
    }
    return static_cast<double>(matches) / static_cast<double>(windows.size());
}

double phi(std::span<const double> u, int m, double r) {
    require_finite(u);
    const auto windows = embed(u, m);
    double acc = 0.0;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const double c = correlation_count(windows, i, r);
        if (c == 0.0) {
            throw DegenerateToleranceError(
                "tolerance r = " + std::to_string(r) +
                " admits no matches for window " + std::to_string(i + 1) +
                "; with r > 0 every window matches at least itself");
        }
        acc += std::log(c);
    }
    return -(acc / static_cast<double>(windows.size()));
}

double apen(std::span<const double> u, int m, double r) {
    if (m < 1) {
        throw ArgumentError("embedding dimension m must be at least 1, got " + std::to_string(m));
    }
    if (u.size() < static_cast<std::size_t>(m) + 1) {
        throw ArgumentError("apen needs at least m+1 = " + std::to_string(m + 1) +
                            " points, got " + std::to_string(u.size()));
    }
    return phi(u, m, r) - phi(u, m + 1, r);
}

double population_std(std::span<const double> u) {
    if (u.empty()) {
        throw ArgumentError("standard deviation of an empty sequence");
    }
    double mean = 0.0;
    for (double v : u) {
        mean += v;
    }
    mean /= static_cast<double>(u.size());
    double acc = 0.0;
    for (double v : u) {
        acc += (v - mean) * (v - mean);
    }
    return std::sqrt(acc / static_cast<double>(u.size()));
}

} // namespace bpa
