#pragma once

#include <vector>

#include "bpa/evidence.hpp"

namespace bpa {

// The star-network view of a BPA: every declared focal element is a node
// whose degree equals its mass, and the empty set is always a node. The
// degrees are all that matters downstream, so no edge structure is stored.

struct LogicalDegree {
    FocalElement element;
    double degree = 0.0;

    bool operator==(const LogicalDegree&) const = default;
};

/// One node per declared focal element, in declaration order, plus the
/// empty-set node with degree 0 appended when it is not declared. Undeclared
/// non-empty subsets are not nodes. Assumes `bpa` validates.
std::vector<LogicalDegree> logical_degrees(const MassFunction& bpa);

/// Node degrees in non-increasing order.
std::vector<double> slide(const MassFunction& bpa);

/// apen(slide(bpa), m, r). Throws TooFewNodesError when the network has
/// fewer than m+1 nodes.
double slide_apen(const MassFunction& bpa, int m, double r);

} // namespace bpa
