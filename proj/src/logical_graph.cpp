#include "bpa/logical_graph.hpp"

#include <algorithm>
#include <functional>

#include "bpa/apen.hpp"

namespace bpa {

std::vector<LogicalDegree> logical_degrees(const MassFunction& bpa) {
    std::vector<LogicalDegree> nodes;
    nodes.reserve(bpa.assignments.size() + 1);
    bool empty_declared = false;
    for (const auto& a : bpa.assignments) {
        if (a.element.is_empty()) {
            empty_declared = true;
        }
        nodes.push_back({a.element, a.mass});
    }
    if (!empty_declared) {
        nodes.push_back({FocalElement{}, 0.0});
    }
    return nodes;
}

std::vector<double> slide(const MassFunction& bpa) {
    const auto nodes = logical_degrees(bpa);
    std::vector<double> degrees;
    degrees.reserve(nodes.size());
    for (const auto& node : nodes) {
        degrees.push_back(node.degree);
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    return degrees;
}

double slide_apen(const MassFunction& bpa, int m, double r) {
    const auto sequence = slide(bpa);
    if (m < 1 || sequence.size() < static_cast<std::size_t>(m) + 1) {
        throw TooFewNodesError(static_cast<int>(sequence.size()), m + 1);
    }
    return apen(sequence, m, r);
}

} // namespace bpa
