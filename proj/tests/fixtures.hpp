#pragma once

#include "bpa/evidence.hpp"

// Reference mass functions used across the suites, plus the frozen values
// the brute-force oracle produced for them. Keep the constants at 17
// significant digits so they pin the exact doubles.
namespace bpa::fixtures {

inline MassFunction x() {
    return make_mass_function({"A", "B", "C"},
                              {{{"A"}, 0.2}, {{"B"}, 0.25}, {{"C"}, 0.55}});
}

inline MassFunction x1() {
    return make_mass_function({"A", "B", "C"},
                              {{{"A"}, 0.33}, {{"B"}, 0.33}, {{"C"}, 0.34}});
}

inline MassFunction x2() {
    return make_mass_function({"A", "B", "C"},
                              {{{"A"}, 0.1}, {{"B"}, 0.1}, {{"C"}, 0.1}, {{}, 0.7}});
}

inline MassFunction x_actual() {
    return make_mass_function({"A", "B", "C"}, {{{}, 0.0},
                                                {{"A"}, 0.1},
                                                {{"B"}, 0.1},
                                                {{"C"}, 0.1},
                                                {{"A", "B"}, 0.1},
                                                {{"A", "C"}, 0.1},
                                                {{"B", "C"}, 0.1},
                                                {{"A", "B", "C"}, 0.4}});
}

inline MassFunction singleton() {
    return make_mass_function({"A"}, {{{"A"}, 1.0}});
}

// oracle values (ui_x equals ln 3 - ln 2 exactly)
inline constexpr double kUiX = 0.4054651081081645;
inline constexpr double kUiX1 = 0.056633012265132399;
inline constexpr double kUiX2 = 0.056633012265132399;
inline constexpr double kSignedX1 = -0.056633012265132399;
inline constexpr double kUiXActual = 0.071251588307648328;
inline constexpr double kStdX = 0.19685019685029528;
inline constexpr double kStdX1 = 0.14439529078193653;
inline constexpr double kStdX2 = 0.25980762113533157;
inline constexpr double kStdXActual = 0.10897247358851685;

// the widely quoted 9-value degree sequence for the X_Actual example; its
// entries sum to 1.1, so it cannot come from a valid mass function
inline constexpr double kApenNineValueSeq = -0.060689700415018533;

// values as printed in the original report of this measure
inline constexpr double kPublishedUiX = 0.4054;
inline constexpr double kPublishedUiX1 = 0.05663301226513251;
inline constexpr double kPublishedUiX2 = 0.0566330122651324;
inline constexpr double kPublishedUiXActual = 0.0404;  // not reproducible; see README

} // namespace bpa::fixtures
