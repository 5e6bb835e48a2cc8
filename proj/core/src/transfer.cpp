#include "finv/transfer.hpp"

#include <algorithm>

#include "finv/bernoulli.hpp"
#include "finv/errors.hpp"

namespace finv {

namespace {

int checked_degree(const ChernGrid& grid) {
    if (grid.n_formula < 1)
        throw OutOfScopeError("pairing grid of degree " + std::to_string(grid.n_formula) +
                              " is outside the transfer's range (need n >= 1)");
    if (static_cast<int>(grid.pairings.size()) != grid.n_formula + 1)
        throw InvalidInputError("pairing grid of degree " + std::to_string(grid.n_formula) +
                                " must carry exactly " + std::to_string(grid.n_formula + 1) +
                                " entries");
    return grid.n_formula;
}

std::vector<BetaEntry> build_beta_table() {
    const int prec = 24;
    ModularForm one = ModularForm::constant(Level::three, 1);
    ModularForm e4 = embed_level1(eisenstein_E(4, prec), 4, Level::three, prec);
    ModularForm b44 = ((e4 - one) / Rational(240)).pow(2) * Rational(1, 2);
    ModularForm u = (ModularForm::monomial(Level::three, 2, 0) - one) / Rational(4);
    ModularForm b422 = u.pow(4) * Rational(1, 4) + u.pow(3) * Rational(1, 2);
    std::vector<BetaEntry> table;
    table.push_back({"beta_{4/4}", FilteredElement(8, b44), Int(2)});
    table.push_back({"beta_{4/2,2}", FilteredElement(10, b422), Int(4)});
    table.push_back({"beta_{4/2}", FilteredElement(10, b422 * Rational(2)), Int(2)});
    return table;
}

}  // namespace

const std::vector<BetaEntry>& beta_table() {
    static const std::vector<BetaEntry> table = build_beta_table();
    return table;
}

FilteredElement f_formula(const ChernGrid& grid, int prec) {
    int n = checked_degree(grid);
    int filtration = 2 * n + 4;
    if (prec == 0) prec = default_precision(filtration);
    ModularForm sum(grid.level);
    for (int k = 1; k <= n - 1; ++k) {
        if (grid.pairings[k] == 0) continue;
        int w = 2 * n - 2 * k + 2;
        Rational c = bernoulli(2 * k + 2) / Rational(k + 1) * Rational(grid.pairings[k]) /
                     Rational(factorial(2 * k) * factorial(2 * n - 2 * k));
        if (n % 2 == 0) c = -c;  // (-1)^{n+1}
        // The embedding has its own solvability threshold; the requested
        // precision only governs the congruence checks downstream.
        int embed_prec = std::max(prec, 2 * w + 8);
        sum += embed_level1(eisenstein_G(w, embed_prec), w, grid.level, embed_prec) * c;
    }
    return FilteredElement(filtration, std::move(sum));
}

FilteredElement f_oracle(const ChernGrid& grid, int prec) {
    int n = checked_degree(grid);
    int filtration = 2 * n + 4;
    if (prec == 0) prec = default_precision(filtration);
    Level level = grid.level;

    auto a_part = [&](int a) {
        if (a == 0)
            return level == Level::three
                       ? ModularForm::monomial(level, 2, 0, Rational(-1, 4))
                       : ModularForm::monomial(level, 1, 0, Rational(-2, 3));
        int w = 2 * a + 2;
        Rational c = Rational(2) / Rational(factorial(2 * a));
        if (a % 2 == 0) c = -c;  // (-1)^{a+1}
        int embed_prec = std::max(prec, 2 * w + 8);
        return embed_level1(eisenstein_G(w, embed_prec), w, level, embed_prec) * c;
    };
    auto c_part = [&](int b) {
        if (b == 0) return level == Level::three ? Rational(-1, 4) : Rational(-1, 6);
        Rational c = -bernoulli(2 * b + 2) / Rational(4 * b + 4) * 2 /
                     Rational(factorial(2 * b));
        if (b % 2 == 0) c = -c;  // (-1)^{b+1}
        return c;
    };

    ModularForm sum(level);
    for (int b = 0; b <= n; ++b) {
        if (grid.pairings[b] == 0) continue;
        sum += a_part(n - b) * (c_part(b) * Rational(grid.pairings[b]));
    }
    return FilteredElement(filtration, std::move(sum));
}

Rational e_single(int n, const Int& index) {
    if (n < 1) throw InvalidInputError("single-transfer degree n must be >= 1");
    return reduced_mod1(bernoulli(2 * n + 2) / Rational(4 * n + 4) * Rational(index));
}

std::vector<Finding> validate_divisibility(const ChernGrid& grid) {
    int n = checked_degree(grid);
    std::vector<Finding> out;
    Int half = factorial(2 * n) / 2;
    for (int end : {0, n}) {
        if (grid.pairings[end] % half != 0) {
            out.push_back({Finding::Severity::violation,
                           "extremal pairing entry " + std::to_string(end) + " = " +
                               grid.pairings[end].get_str() +
                               " is not divisible by (2n)!/2 = " + half.get_str()});
        } else if (n % 2 == 0 && grid.pairings[end] % (2 * half) != 0) {
            out.push_back({Finding::Severity::warning,
                           "extremal pairing entry " + std::to_string(end) + " = " +
                               grid.pairings[end].get_str() +
                               " misses the sharper even-degree bound (2n)! = " +
                               Int(2 * half).get_str()});
        }
    }
    if (n == 3 && (grid.pairings[1] + grid.pairings[2]) % 12 != 0)
        out.push_back({Finding::Severity::violation,
                       "pairings[1] + pairings[2] = " +
                           Int(grid.pairings[1] + grid.pairings[2]).get_str() +
                           " is not divisible by 12"});
    return out;
}

std::string classify(const FilteredElement& element, int prec) {
    if (in_indeterminacy(element, prec)) return "0";
    if (element.level() == Level::three &&
        (element.filtration() == 8 || element.filtration() == 10)) {
        for (const BetaEntry& entry : beta_table()) {
            if (entry.element.filtration() != element.filtration()) continue;
            if (congruent(element, entry.element, prec)) return entry.label;
            if (congruent(element, -entry.element, prec)) return "-" + entry.label;
        }
    }
    return "unrecognized";
}

TransferResult transfer_report(const ChernGrid& grid, int prec, bool with_oracle) {
    FilteredElement rep = f_formula(grid, prec);
    int used = prec == 0 ? default_precision(rep.filtration()) : prec;
    std::string cls = classify(rep, prec);
    Int order = torsion_order(rep, prec);
    std::vector<Finding> findings = validate_divisibility(grid);
    std::optional<bool> oracle;
    if (with_oracle) oracle = congruent(rep, f_oracle(grid, prec), prec);
    return TransferResult{grid,
                          std::move(rep),
                          std::move(cls),
                          std::move(order),
                          std::move(findings),
                          used,
                          true,
                          oracle};
}

TransferResult flag_report(int n, int i, int j, Level level, int prec, bool with_oracle) {
    return transfer_report(taut_chern_grid(n, i, j, level), prec, with_oracle);
}

}  // namespace finv
