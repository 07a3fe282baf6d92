#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bpa/ui.hpp"

namespace bpa {

/// One evaluated grid point. `ui` and `signed_apen` are absent only when the
/// point failed with the error named in `flag`; a degenerate point (constant
/// degree sequence) keeps ui = 0 and is flagged "degenerate" instead of
/// being dropped.
struct SweepRecord {
    double x = 0.0;
    double y = 0.0;
    std::optional<double> ui;
    std::optional<double> signed_apen;
    std::string flag;

    bool operator==(const SweepRecord&) const = default;
};

/// The two-hypothesis test family {(A,x),(B,y),(AB,1-x-y),(empty,0)}.
/// The residual mass is clamped at 0: on the x+y = 1 grid boundary the
/// floating-point sum can overshoot 1 by one ulp.
MassFunction x_test_bpa(double x, double y);

using BpaFamily = std::function<MassFunction(double x, double y)>;

/// Evaluates `family` at every simplex grid point (i/k, j/k), i + j <= k,
/// k = resolution. The x+y <= 1 test is done on the integer indices, so no
/// boundary point is lost to rounding. Records come back ordered
/// lexicographically by (x, y), one per grid point; per-point failures are
/// recorded in the flag, never thrown. Throws ArgumentError if resolution < 1.
std::vector<SweepRecord> sweep_simplex(int resolution, const BpaFamily& family,
                                       const UiParams& params = {});

/// sweep_simplex over the x_test_bpa family.
std::vector<SweepRecord> sweep_simplex(int resolution, const UiParams& params = {});

/// Writes records as delimited text: header "x,y,ui,signed_apen,flag", one
/// row per record in the given order, floats with 17 significant digits so a
/// parse-back reconstructs the exact doubles. Throws IoError on failure.
void write_sweep(const std::vector<SweepRecord>& records, std::ostream& out);
void write_sweep(const std::vector<SweepRecord>& records, const std::filesystem::path& path);

} // namespace bpa
