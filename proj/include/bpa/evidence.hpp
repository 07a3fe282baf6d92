#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "bpa/errors.hpp"

namespace bpa {

/// Ordered set of distinct, non-empty hypothesis labels.
class FrameOfDiscernment {
public:
    /// Throws ArgumentError on an empty list, an empty label, or duplicates.
    explicit FrameOfDiscernment(std::vector<std::string> hypotheses);

    const std::vector<std::string>& hypotheses() const noexcept { return hypotheses_; }
    std::size_t size() const noexcept { return hypotheses_.size(); }

    bool contains(const std::string& label) const;
    /// Position of label in the frame order; throws ArgumentError if absent.
    std::size_t index_of(const std::string& label) const;

    bool operator==(const FrameOfDiscernment&) const = default;

private:
    std::vector<std::string> hypotheses_;
};

/// A subset of a frame's hypotheses, kept in frame order. The default-built
/// empty subset is the uncertainty node (the empty set).
class FocalElement {
public:
    FocalElement() = default;

    /// Canonicalizes `labels` against `frame`: members are checked for
    /// membership, rejected on duplicates, and sorted into frame order.
    static FocalElement subset_of(const FrameOfDiscernment& frame,
                                  const std::vector<std::string>& labels);

    const std::vector<std::string>& members() const noexcept { return members_; }
    bool is_empty() const noexcept { return members_.empty(); }

    /// Display form: "{A,B}", or the empty-set symbol for the empty subset.
    std::string to_string() const;

    auto operator<=>(const FocalElement&) const = default;

private:
    explicit FocalElement(std::vector<std::string> members) : members_(std::move(members)) {}

    std::vector<std::string> members_;
};

struct MassAssignment {
    FocalElement element;
    double mass = 0.0;

    bool operator==(const MassAssignment&) const = default;
};

/// Basic probability assignment. Construction and parsing do not enforce the
/// mass axioms; run validate() for that. A declared mass for the empty set is
/// legal and meaningful here (it is the unassigned portion of belief).
struct MassFunction {
    FrameOfDiscernment frame;
    std::vector<MassAssignment> assignments;

    bool operator==(const MassFunction&) const = default;
};

/// Builds a MassFunction from plain label lists; an empty label list denotes
/// the empty set.
MassFunction make_mass_function(
    std::vector<std::string> frame,
    const std::vector<std::pair<std::vector<std::string>, double>>& entries);

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

inline constexpr double kDefaultMassSumTolerance = 1e-9;

/// Checks the mass axioms: every mass lies in [0,1], the masses (including a
/// declared empty-set entry) sum to 1 within eps_sum, and no focal element is
/// declared twice. Violations are collected in the report, never thrown.
ValidationReport validate(const MassFunction& bpa,
                          double eps_sum = kDefaultMassSumTolerance);

/// Declared mass of `e`, or 0 when `e` is undeclared (so the empty set
/// defaults to 0). Throws ArgumentError when `e` has a member outside the
/// frame of `bpa`.
double mass_of(const MassFunction& bpa, const FocalElement& e);

/// Parses the JSON BPA document format (see README). Throws ParseError with
/// position information on malformed text, and on a focal member outside the
/// declared frame. Does not run validate().
MassFunction parse_bpa(const std::string& text);

/// Reads and parses a BPA file. Throws IoError when the file cannot be read.
MassFunction load_bpa(const std::filesystem::path& path);

/// Serializes to the same JSON document format; parse_bpa(serialize_bpa(m))
/// reconstructs `m` exactly, masses included.
std::string serialize_bpa(const MassFunction& bpa);

} // namespace bpa
