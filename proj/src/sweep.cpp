#include "bpa/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace bpa {

MassFunction x_test_bpa(double x, double y) {
    double rest = 1.0 - (x + y);
    if (rest < 0.0) {
        rest = 0.0;
    }
    return make_mass_function({"A", "B"},
                              {{{"A"}, x}, {{"B"}, y}, {{"A", "B"}, rest}, {{}, 0.0}});
}

std::vector<SweepRecord> sweep_simplex(int resolution, const BpaFamily& family,
                                       const UiParams& params) {
    if (resolution < 1) {
        throw ArgumentError("sweep resolution must be at least 1");
    }
    const double k = static_cast<double>(resolution);
    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(resolution + 1) *
                    static_cast<std::size_t>(resolution + 2) / 2);
    for (int i = 0; i <= resolution; ++i) {
        const double x = static_cast<double>(i) / k;
        for (int j = 0; j <= resolution - i; ++j) {
            const double y = static_cast<double>(j) / k;
            SweepRecord rec;
            rec.x = x;
            rec.y = y;
            try {
                const UiResult r = integrity_uncertainty(family(x, y), params);
                rec.ui = r.ui;
                rec.signed_apen = r.signed_apen;
                if (r.degenerate) {
                    rec.flag = "degenerate";
                }
            } catch (const TooFewNodesError&) {
                rec.flag = "too_few_nodes";
            } catch (const InvalidBpaError&) {
                rec.flag = "invalid_bpa";
            } catch (const DegenerateToleranceError&) {
                rec.flag = "degenerate_tolerance";
            } catch (const Error&) {
                rec.flag = "error";
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<SweepRecord> sweep_simplex(int resolution, const UiParams& params) {
    return sweep_simplex(resolution, &x_test_bpa, params);
}

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void write_sweep(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "x,y,ui,signed_apen,flag\n";
    for (const auto& rec : records) {
        out << g17(rec.x) << ',' << g17(rec.y) << ','
            << (rec.ui ? g17(*rec.ui) : std::string{}) << ','
            << (rec.signed_apen ? g17(*rec.signed_apen) : std::string{}) << ','
            << rec.flag << '\n';
    }
    if (!out) {
        throw IoError("failed to write sweep records");
    }
}

void write_sweep(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_sweep(records, out);
    out.flush();
    if (!out) {
        throw IoError("I/O failure while writing '" + path.string() + "'");
    }
}

} // namespace bpa
