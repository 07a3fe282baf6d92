#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpa/apen.hpp"
#include "bpa/evidence.hpp"
#include "bpa/sweep.hpp"
#include "bpa/ui.hpp"

namespace {

// Exit codes (documented in the README). CLI11 usage errors use their own
// codes of 100 and above, so these never collide.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;           // invalid arguments, partial compare failure
constexpr int kExitParseError = 2;        // malformed BPA file or sequence text
constexpr int kExitInvalidBpa = 3;        // mass axioms violated
constexpr int kExitTooFewNodes = 4;       // network below the 3-node floor
constexpr int kExitIoError = 5;           // unreadable/unwritable file
constexpr int kExitDegenerate = 6;        // tolerance admits no matches

std::string fmt(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string g17(double v) { return fmt(v, 17); }
std::string g6(double v) { return fmt(v, 6); }

std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

std::string json_array(std::span<const double> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += g17(values[i]);
    }
    out += "]";
    return out;
}

std::string join_g6(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += g6(values[i]);
    }
    return out;
}

struct Options {
    std::string format = "human";
    int m = 2;
    double r_factor = 0.2;
    std::optional<double> r_explicit;
    double eps_sum = bpa::kDefaultMassSumTolerance;
    int resolution = 100;
    std::string output;
    std::string path;
    std::vector<std::string> paths;
    std::string sequence_text;

    bool machine() const { return format == "json"; }
    bool normative() const { return m == 2 && r_factor == 0.2 && !r_explicit; }
};

void warn_non_normative(const Options& opt) {
    if (!opt.normative()) {
        std::cerr << "note: non-normative parameters (m=" << opt.m;
        if (opt.r_explicit) {
            std::cerr << ", r=" << g6(*opt.r_explicit);
        } else {
            std::cerr << ", r-factor=" << g6(opt.r_factor);
        }
        std::cerr << "); reference values use m=2 and r = 0.2 * std\n";
    }
}

std::vector<double> parse_sequence(const std::string& text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            throw bpa::ParseError("sequence contains an empty value at position " +
                                  std::to_string(values.size() + 1));
        }
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw bpa::ParseError("sequence value '" + token + "' is not a number");
        }
        if (consumed != token.size() || !std::isfinite(v)) {
            throw bpa::ParseError("sequence value '" + token + "' is not a finite number");
        }
        values.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.empty()) {
        throw bpa::ParseError("empty sequence");
    }
    return values;
}

int run_validate(const Options& opt) {
    const bpa::MassFunction mf = bpa::load_bpa(opt.path);
    const bpa::ValidationReport report = bpa::validate(mf, opt.eps_sum);
    if (opt.machine()) {
        std::string out = "{\"file\":" + json_str(opt.path) +
                          ",\"ok\":" + (report.ok() ? "true" : "false") + ",\"violations\":[";
        for (std::size_t i = 0; i < report.violations.size(); ++i) {
            if (i > 0) out += ",";
            out += json_str(report.violations[i]);
        }
        out += "]}";
        std::cout << out << "\n";
    } else if (report.ok()) {
        std::cout << opt.path << ": ok (" << mf.assignments.size() << " assignments over "
                  << mf.frame.size() << " hypotheses)\n";
    } else {
        std::cout << opt.path << ": invalid\n";
        for (const auto& v : report.violations) {
            std::cout << "  - " << v << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitInvalidBpa;
}

void print_ui_result(const bpa::UiResult& r, const Options& opt) {
    if (opt.machine()) {
        std::string out = "{";
        out += "\"ui\":" + g17(r.ui);
        out += ",\"signed_apen\":" + g17(r.signed_apen);
        out += ",\"phi_m\":" + g17(r.phi_m);
        out += ",\"phi_m_plus_1\":" + g17(r.phi_m_plus_1);
        out += ",\"r\":" + g17(r.r);
        out += ",\"std\":" + g17(r.std_dev);
        out += ",\"n_nodes\":" + std::to_string(r.n_nodes);
        out += ",\"slide\":" + json_array(r.slide);
        out += ",\"degenerate\":" + std::string(r.degenerate ? "true" : "false");
        out += ",\"m\":" + std::to_string(opt.m);
        out += ",\"r_factor\":" + g17(opt.r_factor);
        out += "}";
        std::cout << out << "\n";
        return;
    }
    std::cout << "ui            " << g6(r.ui) << "\n"
              << "signed_apen   " << g6(r.signed_apen) << "\n"
              << "phi_" << opt.m << "         " << g6(r.phi_m) << "\n"
              << "phi_" << opt.m + 1 << "         " << g6(r.phi_m_plus_1) << "\n"
              << "std           " << g6(r.std_dev) << "\n"
              << "r             " << g6(r.r) << "\n"
              << "n_nodes       " << r.n_nodes << "\n"
              << "slide         " << join_g6(r.slide) << "\n";
    if (r.degenerate) {
        std::cout << "flags         degenerate (constant degree sequence)\n";
    }
}

int run_ui(const Options& opt) {
    warn_non_normative(opt);
    const bpa::MassFunction mf = bpa::load_bpa(opt.path);
    const bpa::UiResult r =
        bpa::integrity_uncertainty(mf, {.m = opt.m, .r_factor = opt.r_factor, .eps_sum = opt.eps_sum});
    print_ui_result(r, opt);
    return kExitOk;
}

int run_apen(const Options& opt) {
    warn_non_normative(opt);
    const std::vector<double> u = parse_sequence(opt.sequence_text);

    double sd = 0.0;
    double r = 0.0;
    bool factor_path = !opt.r_explicit.has_value();
    if (factor_path) {
        sd = bpa::population_std(u);
        r = opt.r_factor * sd;
    } else {
        r = *opt.r_explicit;
    }

    // constant sequence under the r-factor rule: regularity is maximal
    const bool degenerate = factor_path && sd == 0.0;
    const double value = degenerate ? 0.0 : bpa::apen(u, opt.m, r);

    if (opt.machine()) {
        std::string out = "{\"apen\":" + g17(value) + ",\"m\":" + std::to_string(opt.m) +
                          ",\"r\":" + g17(r);
        if (factor_path) {
            out += ",\"r_factor\":" + g17(opt.r_factor) + ",\"std\":" + g17(sd);
        }
        out += ",\"n\":" + std::to_string(u.size());
        out += ",\"degenerate\":" + std::string(degenerate ? "true" : "false") + "}";
        std::cout << out << "\n";
    } else {
        std::cout << "apen          " << g6(value) << "\n";
        if (factor_path) {
            std::cout << "std           " << g6(sd) << "\n";
        }
        std::cout << "r             " << g6(r) << "\n";
        if (degenerate) {
            std::cout << "flags         degenerate (constant sequence)\n";
        }
    }
    return kExitOk;
}

int run_slide(const Options& opt) {
    const bpa::MassFunction mf = bpa::load_bpa(opt.path);
    const bpa::ValidationReport report = bpa::validate(mf, opt.eps_sum);
    if (!report.ok()) {
        std::string msg = "mass function fails validation:";
        for (const auto& v : report.violations) {
            msg += "\n  - " + v;
        }
        throw bpa::InvalidBpaError(msg);
    }
    const std::vector<double> s = bpa::slide(mf);
    if (opt.machine()) {
        std::cout << "{\"slide\":" << json_array(s) << ",\"n_nodes\":" << s.size() << "}\n";
    } else {
        std::cout << join_g6(s) << "\n";
    }
    return kExitOk;
}

int run_sweep(const Options& opt) {
    warn_non_normative(opt);
    if (opt.resolution < 1) {
        throw bpa::ArgumentError("--resolution must be at least 1");
    }
    const auto records = bpa::sweep_simplex(
        opt.resolution, bpa::UiParams{.m = opt.m, .r_factor = opt.r_factor, .eps_sum = opt.eps_sum});
    if (opt.output.empty() || opt.output == "-") {
        bpa::write_sweep(records, std::cout);
    } else {
        bpa::write_sweep(records, std::filesystem::path(opt.output));
        std::cerr << "wrote " << records.size() << " records to " << opt.output << "\n";
    }
    return kExitOk;
}

int run_compare(const Options& opt) {
    warn_non_normative(opt);
    struct Row {
        std::string file;
        std::optional<bpa::UiResult> result;
        std::string error;
    };
    std::vector<Row> rows;
    bool any_failed = false;
    for (const auto& path : opt.paths) {
        Row row{path, std::nullopt, {}};
        try {
            const bpa::MassFunction mf = bpa::load_bpa(path);
            row.result = bpa::integrity_uncertainty(
                mf, {.m = opt.m, .r_factor = opt.r_factor, .eps_sum = opt.eps_sum});
        } catch (const bpa::Error& e) {
            row.error = e.what();
            any_failed = true;
        }
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.result && b.result) return a.result->ui < b.result->ui;
        return a.result.has_value() && !b.result.has_value();  // failures sort last
    });

    if (opt.machine()) {
        std::string out = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0) out += ",";
            const Row& row = rows[i];
            out += "{\"file\":" + json_str(row.file);
            if (row.result) {
                out += ",\"n_nodes\":" + std::to_string(row.result->n_nodes);
                out += ",\"ui\":" + g17(row.result->ui);
                out += ",\"signed_apen\":" + g17(row.result->signed_apen);
                out += ",\"degenerate\":" + std::string(row.result->degenerate ? "true" : "false");
            } else {
                out += ",\"error\":" + json_str(row.error);
            }
            out += "}";
        }
        out += "]";
        std::cout << out << "\n";
    } else {
        std::size_t width = 4;
        for (const auto& row : rows) {
            width = std::max(width, row.file.size());
        }
        std::cout << std::string(width - 4, ' ') << "file  n_nodes  ui           flags\n";
        for (const auto& row : rows) {
            std::cout << std::string(width - row.file.size(), ' ') << row.file << "  ";
            if (row.result) {
                std::string ui_text = g6(row.result->ui);
                std::cout << row.result->n_nodes << "        " << ui_text
                          << std::string(ui_text.size() < 13 ? 13 - ui_text.size() : 1, ' ')
                          << (row.result->degenerate ? "degenerate" : "") << "\n";
            } else {
                std::string first_line = row.error.substr(0, row.error.find('\n'));
                std::cout << "-        -            error: " << first_line << "\n";
            }
        }
    }
    return any_failed ? kExitFailure : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integrity-uncertainty toolkit for basic probability assignments"};
    app.require_subcommand(1);

    Options opt;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format: human or json")
            ->check(CLI::IsMember({"human", "json"}));
    };
    const auto add_eps = [&](CLI::App* sub) {
        sub->add_option("--epsilon-sum", opt.eps_sum,
                        "Tolerance on |sum of masses - 1| (default 1e-9)");
    };
    const auto add_apen_params = [&](CLI::App* sub) {
        sub->add_option("--m", opt.m, "Embedding dimension (default 2)");
        sub->add_option("--r-factor", opt.r_factor,
                        "Match tolerance as a multiple of the population std (default 0.2)");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check the mass axioms of a BPA file");
    validate_cmd->add_option("file", opt.path, "BPA file")->required();
    add_eps(validate_cmd);
    add_format(validate_cmd);

    CLI::App* ui_cmd =
        app.add_subcommand("ui", "Integrity uncertainty of a BPA with full provenance");
    ui_cmd->add_option("file", opt.path, "BPA file")->required();
    add_apen_params(ui_cmd);
    add_eps(ui_cmd);
    add_format(ui_cmd);

    CLI::App* apen_cmd =
        app.add_subcommand("apen", "Approximate entropy of a comma-separated sequence");
    apen_cmd->add_option("values", opt.sequence_text, "Sequence, e.g. 0.55,0.25,0.2,0")
        ->required();
    add_apen_params(apen_cmd);
    apen_cmd->add_option("--r", opt.r_explicit, "Explicit match tolerance (overrides --r-factor)");
    add_format(apen_cmd);

    CLI::App* slide_cmd =
        app.add_subcommand("slide", "Descending node-degree sequence of a BPA");
    slide_cmd->add_option("file", opt.path, "BPA file")->required();
    add_eps(slide_cmd);
    add_format(slide_cmd);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Evaluate the {(A,x),(B,y),(AB,1-x-y)} family over the simplex grid");
    sweep_cmd->add_option("--resolution", opt.resolution, "Grid resolution k (default 100)");
    sweep_cmd->add_option("--output,-o", opt.output, "Output CSV path (default: stdout)");
    add_apen_params(sweep_cmd);
    add_eps(sweep_cmd);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Rank two or more BPA files by integrity uncertainty");
    compare_cmd->add_option("files", opt.paths, "BPA files")->required()->expected(2, -1);
    add_apen_params(compare_cmd);
    add_eps(compare_cmd);
    add_format(compare_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(opt);
        if (ui_cmd->parsed()) return run_ui(opt);
        if (apen_cmd->parsed()) return run_apen(opt);
        if (slide_cmd->parsed()) return run_slide(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt);
        if (compare_cmd->parsed()) return run_compare(opt);
    } catch (const bpa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const bpa::InvalidBpaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidBpa;
    } catch (const bpa::TooFewNodesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTooFewNodes;
    } catch (const bpa::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const bpa::DegenerateToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const bpa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
