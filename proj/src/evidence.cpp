#include "bpa/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bpa {

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> hypotheses)
    : hypotheses_(std::move(hypotheses)) {
    if (hypotheses_.empty()) {
        throw ArgumentError("frame of discernment needs at least one hypothesis");
    }
    std::set<std::string> seen;
    for (const auto& h : hypotheses_) {
        if (h.empty()) {
            throw ArgumentError("frame of discernment contains an empty hypothesis label");
        }
        if (!seen.insert(h).second) {
            throw ArgumentError("frame of discernment contains duplicate hypothesis '" + h + "'");
        }
    }
}

bool FrameOfDiscernment::contains(const std::string& label) const {
    return std::find(hypotheses_.begin(), hypotheses_.end(), label) != hypotheses_.end();
}

std::size_t FrameOfDiscernment::index_of(const std::string& label) const {
    auto it = std::find(hypotheses_.begin(), hypotheses_.end(), label);
    if (it == hypotheses_.end()) {
        throw ArgumentError("hypothesis '" + label + "' is not in the frame of discernment");
    }
    return static_cast<std::size_t>(it - hypotheses_.begin());
}

FocalElement FocalElement::subset_of(const FrameOfDiscernment& frame,
                                     const std::vector<std::string>& labels) {
    std::vector<std::pair<std::size_t, std::string>> indexed;
    indexed.reserve(labels.size());
    for (const auto& label : labels) {
        indexed.emplace_back(frame.index_of(label), label);
    }
    std::sort(indexed.begin(), indexed.end());
    for (std::size_t k = 1; k < indexed.size(); ++k) {
        if (indexed[k].first == indexed[k - 1].first) {
            throw ArgumentError("focal element lists hypothesis '" + indexed[k].second +
                                "' more than once");
        }
    }
    std::vector<std::string> members;
    members.reserve(indexed.size());
    for (auto& [idx, label] : indexed) {
        members.push_back(std::move(label));
    }
    return FocalElement(std::move(members));
}

std::string FocalElement::to_string() const {
    if (members_.empty()) {
        return "∅";
    }
    std::string out = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k > 0) out += ",";
        out += members_[k];
    }
    out += "}";
    return out;
}

MassFunction make_mass_function(
    std::vector<std::string> frame,
    const std::vector<std::pair<std::vector<std::string>, double>>& entries) {
    MassFunction mf{FrameOfDiscernment(std::move(frame)), {}};
    mf.assignments.reserve(entries.size());
    for (const auto& [labels, mass] : entries) {
        mf.assignments.push_back({FocalElement::subset_of(mf.frame, labels), mass});
    }
    return mf;
}

ValidationReport validate(const MassFunction& bpa, double eps_sum) {
    ValidationReport report;

    for (const auto& a : bpa.assignments) {
        // the negated test also traps NaN masses
        if (!(a.mass >= 0.0 && a.mass <= 1.0)) {
            std::ostringstream msg;
            msg << "mass " << a.mass << " of " << a.element.to_string()
                << " lies outside [0,1]";
            report.violations.push_back(msg.str());
        }
    }

    std::set<FocalElement> seen;
    for (const auto& a : bpa.assignments) {
        if (!seen.insert(a.element).second) {
            report.violations.push_back("focal element " + a.element.to_string() +
                                        " is declared more than once");
        }
    }

    double sum = 0.0;
    for (const auto& a : bpa.assignments) {
        sum += a.mass;
    }
    if (!(std::fabs(sum - 1.0) <= eps_sum)) {
        std::ostringstream msg;
        msg << "masses sum to " << sum << ", violating the unit-sum axiom (|sum-1| > "
            << eps_sum << ")";
        report.violations.push_back(msg.str());
    }

    return report;
}

double mass_of(const MassFunction& bpa, const FocalElement& e) {
    for (const auto& member : e.members()) {
        if (!bpa.frame.contains(member)) {
            throw ArgumentError("hypothesis '" + member + "' is not in the frame of discernment");
        }
    }
    for (const auto& a : bpa.assignments) {
        if (a.element == e) {
            return a.mass;
        }
    }
    return 0.0;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) {
        throw ParseError(std::string("BPA document is missing the '") + name + "' field");
    }
    return *it;
}

std::vector<std::string> string_list(const nlohmann::json& node, const std::string& what) {
    if (!node.is_array()) {
        throw ParseError(what + " must be a list of labels");
    }
    std::vector<std::string> out;
    out.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_string()) {
            throw ParseError(what + " must contain only text labels");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

MassFunction parse_bpa(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports "parse error at line L, column C: ..."
        throw ParseError(std::string("invalid BPA document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("BPA document must be an object with 'frame' and 'masses' fields");
    }

    std::vector<std::string> frame_labels = string_list(require_field(doc, "frame"), "'frame'");
    if (frame_labels.empty()) {
        throw ParseError("'frame' must declare at least one hypothesis");
    }
    std::set<std::string> seen;
    for (const auto& label : frame_labels) {
        if (label.empty()) {
            throw ParseError("'frame' contains an empty hypothesis label");
        }
        if (!seen.insert(label).second) {
            throw ParseError("'frame' declares hypothesis '" + label + "' twice");
        }
    }
    MassFunction mf{FrameOfDiscernment(std::move(frame_labels)), {}};

    const nlohmann::json& masses = require_field(doc, "masses");
    if (!masses.is_array()) {
        throw ParseError("'masses' must be a list of {focal, mass} records");
    }
    mf.assignments.reserve(masses.size());
    std::size_t index = 0;
    for (const auto& entry : masses) {
        const std::string where = "masses[" + std::to_string(index) + "]";
        if (!entry.is_object()) {
            throw ParseError(where + " must be an object with 'focal' and 'mass'");
        }
        std::vector<std::string> labels =
            string_list(require_field(entry, "focal"), where + ".focal");
        for (const auto& label : labels) {
            if (!mf.frame.contains(label)) {
                throw ParseError(where + ".focal names hypothesis '" + label +
                                 "' which is outside the declared frame");
            }
        }
        const nlohmann::json& mass_node = require_field(entry, "mass");
        if (!mass_node.is_number()) {
            throw ParseError(where + ".mass must be a number");
        }
        mf.assignments.push_back(
            {FocalElement::subset_of(mf.frame, labels), mass_node.get<double>()});
        ++index;
    }
    return mf;
}

MassFunction load_bpa(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read BPA file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("I/O failure while reading '" + path.string() + "'");
    }
    return parse_bpa(buffer.str());
}

std::string serialize_bpa(const MassFunction& bpa) {
    nlohmann::json doc;
    doc["frame"] = bpa.frame.hypotheses();
    nlohmann::json masses = nlohmann::json::array();
    for (const auto& a : bpa.assignments) {
        masses.push_back({{"focal", a.element.members()}, {"mass", a.mass}});
    }
    doc["masses"] = std::move(masses);
    return doc.dump(2) + "\n";
}

} // namespace bpa
