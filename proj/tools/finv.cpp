#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "finv/errors.hpp"
#include "finv/flag_cohomology.hpp"
#include "finv/modforms.hpp"
#include "finv/report.hpp"
#include "finv/series.hpp"
#include "finv/transfer.hpp"
#include "finv/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coefficient_array(const finv::QSeries& s) {
    ordered_json arr = ordered_json::array();
    for (int j = 0; j < s.precision(); ++j)
        arr.push_back(finv::to_fraction_string(s.coeff(j)));
    return arr;
}

finv::Int parse_integer(const std::string& text) {
    try {
        return finv::Int(text);
    } catch (const std::invalid_argument&) {
        throw finv::InvalidInputError("'" + text + "' is not an integer");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw finv::InvalidInputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_transfer(const finv::TransferResult& result, bool json) {
    std::cout << (json ? finv::to_json(result) : finv::to_text(result));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact f-invariants of double quaternionic transfers"};
    app.require_subcommand(1);

    auto* eis = app.add_subcommand("eis", "Level-1 Eisenstein q-expansion");
    int eis_weight = 0, eis_prec = 16;
    bool eis_norm = false, eis_json = false;
    eis->add_option("--weight", eis_weight, "even weight >= 2")->required();
    eis->add_option("--prec", eis_prec, "number of q-coefficients (default 16)");
    eis->add_flag("--normalized", eis_norm, "normalized variant with constant term 1");
    eis->add_flag("--json", eis_json, "JSON output");

    auto* ser = app.add_subcommand("series", "Ring-generator q-expansion");
    std::string ser_name;
    int ser_prec = 16, ser_level = 0;
    bool ser_json = false;
    ser->add_option("--name", ser_name, "E1, E3, delta4 or epsilon")->required();
    ser->add_option("--level", ser_level, "2 or 3 (default: the generator's level)");
    ser->add_option("--prec", ser_prec, "number of q-coefficients (default 16)");
    ser->add_flag("--json", ser_json, "JSON output");

    auto* red = app.add_subcommand("reduce-cohomology",
                                   "Normal form in the flag coinvariant algebra");
    int red_n = 0;
    std::string red_poly;
    bool red_json = false;
    red->add_option("--n", red_n, "number of variables t1..tn")->required();
    red->add_option("--poly", red_poly, "polynomial, e.g. \"t1^2*t2 - 3*t1\"")->required();
    red->add_flag("--json", red_json, "JSON output");

    auto* ft = app.add_subcommand("f-transfer", "f-invariant of a pairing grid");
    std::string ft_input;
    int ft_prec = 0;
    bool ft_json = false, ft_oracle = false;
    ft->add_option("--input", ft_input, "grid JSON file")->required();
    ft->add_option("--prec", ft_prec, "working precision (default: policy)");
    ft->add_flag("--json", ft_json, "JSON output");
    ft->add_flag("--oracle", ft_oracle, "cross-check against the geometric oracle");

    auto* fl = app.add_subcommand("flag", "f-invariant of a tautological flag pair");
    int fl_n = 0, fl_level = 3, fl_prec = 0;
    std::string fl_lines;
    bool fl_json = false, fl_oracle = false;
    fl->add_option("--n", fl_n, "number of tautological lines (flags in H^n)")->required();
    fl->add_option("--lines", fl_lines, "pair of line indices, e.g. 1,2")->required();
    fl->add_option("--level", fl_level, "2 or 3 (default 3)");
    fl->add_option("--prec", fl_prec, "working precision (default: policy)");
    fl->add_flag("--json", fl_json, "JSON output");
    fl->add_flag("--oracle", fl_oracle, "cross-check against the geometric oracle");

    auto* et = app.add_subcommand("e-transfer", "e-invariant of a single transfer");
    int et_n = 0;
    std::string et_index;
    bool et_json = false;
    et->add_option("--n", et_n, "degree parameter (class in dimension 4n+3)")->required();
    et->add_option("--index", et_index, "index of the class")->required();
    et->add_flag("--json", et_json, "JSON output");

    auto* vp = app.add_subcommand("verify-paper", "Reproduce the frozen claim set");
    int vp_prec = 0, vp_cases = 200;
    std::uint64_t vp_seed = 271828;
    bool vp_json = false;
    vp->add_option("--prec", vp_prec, "working precision (default: per-check policy)");
    vp->add_option("--cases", vp_cases, "randomized cases per property suite");
    vp->add_option("--seed", vp_seed, "property-suite RNG seed");
    vp->add_flag("--json", vp_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eis) {
            finv::QSeries s = eis_norm ? finv::eisenstein_E(eis_weight, eis_prec)
                                       : finv::eisenstein_G(eis_weight, eis_prec);
            if (eis_json) {
                ordered_json j;
                j["kind"] = eis_norm ? "E" : "G";
                j["weight"] = eis_weight;
                j["precision"] = eis_prec;
                j["coefficients"] = coefficient_array(s);
                j["expansion"] = finv::to_expansion_string(s);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (eis_norm ? "E" : "G") << "_" << eis_weight << " = "
                          << finv::to_expansion_string(s) << "\n";
            }
        } else if (*ser) {
            finv::GeneratorName name = finv::generator_from_string(ser_name);
            finv::Level level =
                ser_level != 0
                    ? finv::level_from_int(ser_level)
                    : (name == finv::GeneratorName::e1 || name == finv::GeneratorName::e3
                           ? finv::Level::three
                           : finv::Level::two);
            finv::QSeries s = finv::level_generator(level, name, ser_prec);
            if (ser_json) {
                ordered_json j;
                j["name"] = ser_name;
                j["level"] = finv::level_to_int(level);
                j["precision"] = ser_prec;
                j["coefficients"] = coefficient_array(s);
                j["expansion"] = finv::to_expansion_string(s);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << ser_name << " = " << finv::to_expansion_string(s) << "\n";
            }
        } else if (*red) {
            finv::CoinvariantPoly p = finv::parse_poly(red_n, red_poly);
            finv::CoinvariantPoly normal = p.reduce();
            finv::Int pairing = finv::top_pairing(p);
            if (red_json) {
                ordered_json j;
                j["n"] = red_n;
                j["input"] = red_poly;
                j["reduced"] = finv::to_string(normal);
                j["top_pairing"] = pairing.fits_slong_p()
                                       ? ordered_json(pairing.get_si())
                                       : ordered_json(pairing.get_str());
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "reduced: " << finv::to_string(normal) << "\n"
                          << "top pairing: " << pairing.get_str() << "\n";
            }
        } else if (*ft) {
            finv::ChernGrid grid = finv::grid_from_json(slurp(ft_input));
            emit_transfer(finv::transfer_report(grid, ft_prec, ft_oracle), ft_json);
        } else if (*fl) {
            auto comma = fl_lines.find(',');
            if (comma == std::string::npos)
                throw finv::InvalidInputError("--lines expects two indices, e.g. 1,2");
            int li, lj;
            try {
                li = std::stoi(fl_lines.substr(0, comma));
                lj = std::stoi(fl_lines.substr(comma + 1));
            } catch (const std::exception&) {
                throw finv::InvalidInputError("--lines expects two indices, e.g. 1,2");
            }
            emit_transfer(finv::flag_report(fl_n, li, lj, finv::level_from_int(fl_level),
                                            fl_prec, fl_oracle),
                          fl_json);
        } else if (*et) {
            finv::Int index = parse_integer(et_index);
            finv::Rational value = finv::e_single(et_n, index);
            if (et_json) {
                ordered_json j;
                j["n"] = et_n;
                j["index"] = index.get_str();
                j["value"] = finv::to_fraction_string(value);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "e = " << finv::to_fraction_string(value) << "\n";
            }
        } else if (*vp) {
            finv::VerifyOptions options;
            options.precision = vp_prec;
            options.cases = vp_cases;
            options.seed = vp_seed;
            std::vector<finv::VerificationItem> items = finv::run_verification(options);
            std::cout << (vp_json ? finv::to_json(items) : finv::to_text(items));
            if (finv::any_errored(items)) return 1;
            if (!finv::all_passed(items)) return 3;
        }
    } catch (const finv::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const finv::OutOfScopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const finv::UnsupportedDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const finv::UnsupportedDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const finv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
