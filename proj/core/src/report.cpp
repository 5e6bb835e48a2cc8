#include "finv/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "finv/errors.hpp"

namespace finv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_value(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

ordered_json grid_json(const ChernGrid& grid) {
    ordered_json j;
    j["n"] = grid.n_formula;
    j["level"] = level_to_int(grid.level);
    ordered_json arr = ordered_json::array();
    for (const Int& p : grid.pairings) arr.push_back(int_value(p));
    j["pairings"] = std::move(arr);
    return j;
}

ordered_json representative_json(const FilteredElement& rep, int expansion_prec) {
    ordered_json j;
    j["zero"] = rep.is_zero();
    ordered_json weights = ordered_json::array();
    for (int w : rep.form().weights()) {
        ordered_json entry;
        entry["weight"] = w;
        ordered_json coords = ordered_json::array();
        std::vector<Rational> cs = rep.component_coords(w);
        std::vector<ModularForm> basis = monomial_basis(w, rep.level());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const ModularForm::Key& key = basis[i].terms().begin()->first;
            ordered_json c;
            c["monomial"] = monomial_name(rep.level(), key.first, key.second);
            c["coefficient"] = to_fraction_string(cs[i]);
            coords.push_back(std::move(c));
        }
        entry["coordinates"] = std::move(coords);
        entry["expansion"] =
            to_expansion_string(rep.weight_component(w).expand(expansion_prec));
        weights.push_back(std::move(entry));
    }
    j["weights"] = std::move(weights);
    return j;
}

const char* severity_name(Finding::Severity s) {
    return s == Finding::Severity::violation ? "violation" : "warning";
}

}  // namespace

std::string to_json(const TransferResult& result) {
    int expansion_prec = std::min(result.precision_used, 12);
    ordered_json j;
    j["input"] = grid_json(result.grid);
    j["filtration"] = result.representative.filtration();
    j["representative"] = representative_json(result.representative, expansion_prec);
    j["classification"] = result.classification;
    j["torsion_order"] = int_value(result.torsion_order);
    ordered_json findings = ordered_json::array();
    for (const Finding& f : result.findings) {
        ordered_json entry;
        entry["severity"] = severity_name(f.severity);
        entry["message"] = f.message;
        findings.push_back(std::move(entry));
    }
    j["findings"] = std::move(findings);
    j["precision_used"] = result.precision_used;
    j["stable_under_doubling"] = result.stable_under_doubling;
    if (result.oracle_agrees.has_value()) j["oracle_agrees"] = *result.oracle_agrees;
    return j.dump(2) + "\n";
}

std::string to_json(const std::vector<VerificationItem>& items) {
    ordered_json arr = ordered_json::array();
    int passed = 0, failed = 0, errors = 0;
    for (const VerificationItem& item : items) {
        ordered_json entry;
        entry["id"] = item.id;
        entry["anchor"] = item.anchor;
        entry["status"] = to_string(item.status);
        entry["details"] = item.details;
        arr.push_back(std::move(entry));
        switch (item.status) {
            case VerifyStatus::passed: ++passed; break;
            case VerifyStatus::failed: ++failed; break;
            case VerifyStatus::error: ++errors; break;
        }
    }
    ordered_json j;
    j["items"] = std::move(arr);
    ordered_json summary;
    summary["total"] = static_cast<int>(items.size());
    summary["pass"] = passed;
    summary["fail"] = failed;
    summary["error"] = errors;
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string to_text(const TransferResult& result) {
    std::ostringstream out;
    out << "input: degree " << result.grid.n_formula << ", level "
        << level_to_int(result.grid.level) << ", pairings [";
    for (std::size_t i = 0; i < result.grid.pairings.size(); ++i) {
        if (i > 0) out << ", ";
        out << result.grid.pairings[i].get_str();
    }
    out << "]\n";
    out << "filtration: " << result.representative.filtration() << "\n";
    out << "classification: " << result.classification << "\n";
    out << "torsion order: " << result.torsion_order.get_str() << "\n";
    out << "precision used: " << result.precision_used
        << (result.stable_under_doubling ? " (verdicts re-checked at doubled precision)"
                                         : "")
        << "\n";
    if (result.representative.is_zero()) {
        out << "representative: 0\n";
    } else {
        out << "representative:\n";
        int expansion_prec = std::min(result.precision_used, 12);
        for (int w : result.representative.form().weights()) {
            out << "  weight " << w << ": "
                << to_string(result.representative.weight_component(w)) << "\n";
            out << "    expansion: "
                << to_expansion_string(
                       result.representative.weight_component(w).expand(expansion_prec))
                << "\n";
        }
    }
    if (result.findings.empty()) {
        out << "findings: none\n";
    } else {
        out << "findings:\n";
        for (const Finding& f : result.findings)
            out << "  [" << severity_name(f.severity) << "] " << f.message << "\n";
    }
    if (result.oracle_agrees.has_value())
        out << "oracle agrees: " << (*result.oracle_agrees ? "yes" : "no") << "\n";
    return out.str();
}

std::string to_text(const std::vector<VerificationItem>& items) {
    std::ostringstream out;
    int passed = 0, failed = 0, errors = 0;
    for (const VerificationItem& item : items) {
        std::string status = to_string(item.status);
        out << "[" << status << "]" << std::string(6 - status.size(), ' ') << item.id
            << " (" << item.anchor << "): " << item.details << "\n";
        switch (item.status) {
            case VerifyStatus::passed: ++passed; break;
            case VerifyStatus::failed: ++failed; break;
            case VerifyStatus::error: ++errors; break;
        }
    }
    out << "summary: " << items.size() << " items, " << passed << " passed, " << failed
        << " failed, " << errors << " errored\n";
    return out.str();
}

ChernGrid grid_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("grid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("level") ||
        !j.contains("pairings"))
        throw InvalidInputError("grid JSON must carry the fields n, level, pairings");
    if (!j["n"].is_number_integer())
        throw InvalidInputError("grid JSON: n must be an integer");
    if (!j["level"].is_number_integer())
        throw InvalidInputError("grid JSON: level must be 2 or 3");
    int n = j["n"].get<int>();
    if (n < 0) throw InvalidInputError("grid JSON: n must be >= 0");
    Level level = level_from_int(j["level"].get<int>());
    if (!j["pairings"].is_array())
        throw InvalidInputError("grid JSON: pairings must be an array");
    std::vector<Int> pairings;
    for (const auto& v : j["pairings"]) {
        if (v.is_number_integer()) {
            pairings.emplace_back(static_cast<long>(v.get<long long>()));
        } else if (v.is_string()) {
            try {
                pairings.emplace_back(Int(v.get<std::string>()));
            } catch (const std::invalid_argument&) {
                throw InvalidInputError("grid JSON: pairing string is not an integer");
            }
        } else {
            throw InvalidInputError(
                "grid JSON: pairings must be integers or integer strings");
        }
    }
    if (static_cast<int>(pairings.size()) != n + 1)
        throw InvalidInputError("grid JSON: pairings must have exactly n+1 entries");
    return ChernGrid{n, level, std::move(pairings)};
}

}  // namespace finv
