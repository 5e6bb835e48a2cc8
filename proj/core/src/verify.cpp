#include "finv/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "finv/divcong.hpp"
#include "finv/errors.hpp"
#include "finv/flag_cohomology.hpp"
#include "finv/genus.hpp"
#include "finv/linalg.hpp"
#include "finv/modforms.hpp"
#include "finv/series.hpp"
#include "finv/transfer.hpp"

namespace finv {

namespace {

using CheckResult = std::pair<bool, std::string>;

// ---------------------------------------------------------------- builders

ModularForm embedded_E(int weight, int prec) {
    int p = std::max(prec, 2 * weight + 8);
    return embed_level1(eisenstein_E(weight, p), weight, Level::three, p);
}

struct ChainStep {
    std::string name;
    bool equality;  ///< exact coordinate equality instead of a congruence
    ModularForm lhs;
    ModularForm rhs;
};

/**
 * The fifteen congruence steps (filtration 10, level 3) and five exact
 * rewrites that deform the Eisenstein expression of the invariant into its
 * normal form u^4/4 + u^3/2, u = (E1^2-1)/4.
 */
std::vector<ChainStep> chain_steps(int prec) {
    Level L = Level::three;
    ModularForm one = ModularForm::constant(L, 1);
    ModularForm E1 = ModularForm::monomial(L, 1, 0);
    ModularForm E3f = ModularForm::monomial(L, 0, 1);
    ModularForm E4 = embedded_E(4, prec);
    ModularForm E6 = embedded_E(6, prec);

    ModularForm u = (E1.pow(2) - one) / Rational(4);
    ModularForm e4s = (E4 - one) / Rational(16);
    ModularForm e6s = (E6 - one) / Rational(8);
    ModularForm q4 = (E1.pow(4) - one) / Rational(8);
    ModularForm r4 = E1.pow(4) - E1 * E3f;
    ModularForm e1e3 = E1 * E3f;

    ModularForm A0 = ((E6 - one) / Rational(128) - (E4 - one) / Rational(128)) * Rational(1, 4);
    ModularForm A1 = -(e4s * e6s) * Rational(1, 4) - e4s * Rational(1, 16);
    ModularForm A2 = e4s.pow(2) * Rational(1, 4) - e4s * Rational(1, 16);

    ModularForm bracket = q4.pow(2) * Rational(1, 4) + q4 * r4 * Rational(1, 2) +
                          r4.pow(2) * Rational(1, 4);
    ModularForm BargA = bracket * Rational(1, 4);
    ModularForm BargB = (u.pow(4) + u.pow(3) + u.pow(2) * Rational(1, 4) +
                         q4 * r4 * Rational(1, 2) + r4.pow(2) * Rational(1, 4)) *
                        Rational(1, 4);
    ModularForm BargC = E1.pow(2) * bracket * Rational(1, 4);

    ModularForm B4 = u.pow(4) * Rational(1, 4) + u.pow(3) * Rational(1, 4) +
                     E1.pow(2) * u.pow(2) * Rational(1, 16) - e1e3 * Rational(1, 32);
    ModularForm B5 = u.pow(4) * Rational(1, 4) + u.pow(3) * Rational(1, 2) +
                     u.pow(2) * Rational(1, 16) - e1e3 * Rational(1, 32);

    ModularForm t31 = (E1.pow(3) * E3f - one) * Rational(1, 64);
    ModularForm C0 = q4 * (E1.pow(6) - E1.pow(3) * E3f) * Rational(1, 8);
    ModularForm C1 = t31 - (E1.pow(6) - one) * Rational(1, 64);
    ModularForm C2 = t31 + e4s * Rational(1, 4);
    ModularForm C3 = t31;
    ModularForm C4 = -(e4s * (E1.pow(3) * E3f)) * Rational(1, 4);
    ModularForm C5 = -(e4s * e1e3) * Rational(1, 4);
    ModularForm C6 = e6s * e1e3 * Rational(1, 4);
    ModularForm C7 = -e1e3 * Rational(1, 32);

    ModularForm D0 = e4s * Rational(1, 16);
    ModularForm D1 = (q4 + r4) * Rational(1, 32);
    ModularForm D2 = q4 * Rational(1, 32) - e1e3 * Rational(1, 32);
    ModularForm D3 = (q4 - u) * Rational(1, 32) - e1e3 * Rational(1, 32);
    ModularForm D4 = u.pow(2) * Rational(1, 16) - e1e3 * Rational(1, 32);

    ModularForm beta422 = u.pow(4) * Rational(1, 4) + u.pow(3) * Rational(1, 2);

    return {
        {"01", false, A0, A1},
        {"02", false, A1, A2},
        {"03", false, BargB, BargC},
        {"04", false, BargC, B4},
        {"05", false, C0, C1},
        {"06", false, C1, C2},
        {"07", false, C2, C3},
        {"08", false, C3, C4},
        {"09", false, C4, C5},
        {"10", false, C5, C6},
        {"11", false, C6, C7},
        {"12", false, D1, D2},
        {"13", false, D2, D3},
        {"14", false, A0, beta422},
        {"15", false, C3, C7},
        {"eq1", true, BargA, e4s.pow(2) * Rational(1, 4)},
        {"eq2", true, BargA, BargB},
        {"eq3", true, B4, B5},
        {"eq4", true, D0, D1},
        {"eq5", true, D3, D4},
    };
}

// ---------------------------------------------------- deterministic checks

CheckResult check_beta44_identity(int prec) {
    ModularForm one = ModularForm::constant(Level::three, 1);
    ModularForm E4 = embedded_E(4, prec);
    FilteredElement lhs(8, (E4 - one) * Rational(1, 57600));
    FilteredElement rhs(8, ((E4 - one) / Rational(240)).pow(2) * Rational(1, 2));
    bool ok = congruent(lhs, rhs, prec);
    return {ok, ok ? "(E4-1)/240^2 is congruent to (1/2)((E4-1)/240)^2 at filtration 8"
                   : "filtration-8 congruence fails"};
}

CheckResult check_chain_step(int prec, std::size_t index) {
    std::vector<ChainStep> steps = chain_steps(prec);
    const ChainStep& st = steps.at(index);
    if (st.equality) {
        bool ok = st.lhs == st.rhs;
        return {ok, ok ? "rewrite " + st.name + " holds exactly in generator coordinates"
                       : "rewrite " + st.name + " is not an identity of forms"};
    }
    bool ok = congruent(FilteredElement(10, st.lhs), FilteredElement(10, st.rhs), prec);
    return {ok, ok ? "step " + st.name + " holds modulo the filtration-10 indeterminacy"
                   : "step " + st.name + " fails"};
}

CheckResult check_torsion_orders(int prec) {
    std::string seen;
    for (const BetaEntry& entry : beta_table()) {
        Int order = torsion_order(entry.element, prec);
        if (!seen.empty()) seen += ", ";
        seen += entry.label + ": " + order.get_str();
        if (order != entry.order)
            return {false, "order of " + entry.label + " is " + order.get_str() +
                               ", expected " + entry.order.get_str()};
    }
    return {true, seen};
}

CheckResult check_product_grids(int prec) {
    ChernGrid single{2, Level::three, {Int(0), Int(1), Int(0)}};
    std::string c1 = classify(f_formula(single, prec), prec);
    if (c1 != "beta_{4/4}")
        return {false, "grid [0,1,0] classified as " + c1 + ", expected beta_{4/4}"};
    ChernGrid doubled{2, Level::three, {Int(0), Int(2), Int(0)}};
    std::string c2 = classify(f_formula(doubled, prec), prec);
    if (c2 != "0") return {false, "grid [0,2,0] classified as " + c2 + ", expected 0"};
    return {true, "[0,1,0] -> beta_{4/4}; [0,2,0] -> 0"};
}

CheckResult check_flag3(int prec) {
    TransferResult r = flag_report(3, 1, 2, Level::three, prec, false);
    bool label_ok =
        r.classification == "beta_{4/2,2}" || r.classification == "-beta_{4/2,2}";
    if (!label_ok)
        return {false, "flag(3;1,2) classified as " + r.classification};
    if (r.torsion_order != 4)
        return {false, "flag(3;1,2) has order " + r.torsion_order.get_str() +
                           ", expected 4"};
    return {true, "flag(3;1,2) -> " + r.classification + ", order 4"};
}

CheckResult check_flag_vanishing(int prec) {
    if (!CoinvariantPoly::variable(4, 1).pow(4).reduce().is_zero())
        return {false, "t1^4 does not reduce to zero for n = 4"};
    if (!(CoinvariantPoly::variable(4, 1).pow(3) * CoinvariantPoly::variable(4, 2).pow(3))
             .reduce()
             .is_zero())
        return {false, "t1^3 t2^3 does not reduce to zero for n = 4"};
    for (int n : {4, 5}) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                TransferResult r = flag_report(n, i, j, Level::three, prec, false);
                if (r.classification != "0")
                    return {false, "flag(" + std::to_string(n) + ";" + std::to_string(i) +
                                       "," + std::to_string(j) + ") classified as " +
                                       r.classification};
            }
        }
    }
    return {true, "every tautological pair at n = 4, 5 gives the zero class"};
}

CheckResult check_genus_oracle(int prec) {
    int p = prec > 0 ? prec : 48;
    if (!(ell_closed(Level::three, 6, p) == ell_oracle_level3(6, p)))
        return {false, "closed and exponential genus forms disagree by c2-degree 6"};

    std::vector<XSeries> q = char_series_level3(4, p);
    std::vector<XSeries> product(5, XSeries(p));
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            QuadExt sign = (j % 2 == 0) ? QuadExt(1) : QuadExt(-1);
            product[i + j] = product[i + j] + q[i] * q[j] * sign;
        }
    C2Series closed = ell_closed(Level::three, 2, p);
    if (!product[1].is_zero() || !product[3].is_zero())
        return {false, "Q(x)Q(-x) has nonvanishing odd part"};
    if (!(product[0] == widen(closed.coeff[0])))
        return {false, "Q(x)Q(-x) constant term differs from the closed genus"};
    if (!(product[2] == widen(closed.coeff[1] * Rational(-1))))
        return {false, "Q(x)Q(-x) x^2 term differs from the closed genus at c2 = -x^2"};
    if (!(product[4] == widen(closed.coeff[2])))
        return {false, "Q(x)Q(-x) x^4 term differs from the closed genus at c2 = -x^2"};

    // The product above cancels the odd char data by construction, so pin the
    // x^1 and x^3 coefficients directly against independently recomputed
    // arithmetic expansions of the odd Eisenstein series (character divisor
    // sums); a corrupted generator series cannot reproduce these.
    QSeries e1i(p), e3i(p);
    e1i.set_coeff(0, 1);
    e3i.set_coeff(0, 1);
    for (int n = 1; n < p; ++n) {
        long s1 = 0, s3 = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            long chi = d % 3 == 1 ? 1 : (d % 3 == 2 ? -1 : 0);
            s1 += chi;
            s3 += chi * d * d;
        }
        e1i.set_coeff(n, Rational(6 * s1));
        e3i.set_coeff(n, Rational(-9 * s3));
    }
    QSeries g2 = eisenstein_G(2, p);
    XSeries a1 = widen(e1i) * QuadExt(Rational(0), Rational(1, 6));
    XSeries a2 =
        widen(g2 - g2.substituted_qpow(3) * Rational(3)) * QuadExt(Rational(3, 2));
    XSeries a3 = widen(e3i) * QuadExt(Rational(0), Rational(-1, 54));
    if (!(q[1] == a1))
        return {false, "x^1 char coefficient disagrees with the arithmetic odd data"};
    XSeries expect3 = a3 + a1 * a2 + a1 * a1 * a1 / QuadExt(6);
    if (!(q[3] == expect3))
        return {false, "x^3 char coefficient disagrees with the arithmetic odd data"};
    return {true, "exponential form matches to c2-degree 6; Q(x)Q(-x) matches to x^4 "
                  "with rational coefficients; odd char data matches the divisor sums"};
}

CheckResult check_eisenstein_identities(int prec) {
    int p = prec > 0 ? prec : 64;
    QSeries e1 = level_generator(Level::three, GeneratorName::e1, p);
    QSeries e3 = level_generator(Level::three, GeneratorName::e3, p);
    QSeries g2 = eisenstein_G(2, p);
    if (!(e1.pow(2) == (g2 - g2.substituted_qpow(3) * Rational(3)) * Rational(12)))
        return {false, "E1^2 != 12(G2(q) - 3 G2(q^3))"};
    if (!(eisenstein_E(4, p) == e1.pow(4) * Rational(9) - e1 * e3 * Rational(8)))
        return {false, "E4 != 9 E1^4 - 8 E1 E3"};
    return {true, "E1^2 = 12(G2(q) - 3 G2(q^3)) and E4 = 9 E1^4 - 8 E1 E3 to q^" +
                      std::to_string(p)};
}

CheckResult check_degeneracies(int prec) {
    ChernGrid point{1, Level::three, {Int(3), Int(5)}};
    FilteredElement f1 = f_formula(point, prec);
    if (!f1.is_zero()) return {false, "degree-1 grid produced a nonzero form"};
    if (!in_indeterminacy(f1, prec))
        return {false, "degree-1 zero element not recognized as trivial"};

    for (const ChernGrid& grid :
         {ChernGrid{2, Level::three, {Int(12), Int(1), Int(12)}},
          ChernGrid{3, Level::three, {Int(0), Int(-1), Int(1), Int(0)}}}) {
        for (const Finding& finding : validate_divisibility(grid))
            if (finding.severity == Finding::Severity::violation)
                return {false, "grid of degree " + std::to_string(grid.n_formula) +
                                   " unexpectedly violates divisibility: " + finding.message};
        if (!congruent(f_formula(grid, prec), f_oracle(grid, prec), prec))
            return {false, "oracle disagrees with the formula at degree " +
                               std::to_string(grid.n_formula)};
    }
    return {true, "degree-1 grid vanishes; oracle agrees with the formula at degrees 2 "
                  "and 3"};
}

// ------------------------------------------------------- randomized suites

Rational rand_rational(std::mt19937_64& rng, const std::vector<long>& denoms) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = denoms[rng() % denoms.size()];
    Rational r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

QSeries rand_qseries(std::mt19937_64& rng, int prec) {
    QSeries s(prec);
    for (int j = 0; j < prec; ++j) {
        if (rng() % 3 == 0) continue;
        s.set_coeff(j, rand_rational(rng, {1, 2, 3, 4, 5, 12}));
    }
    return s;
}

std::string qseries_case(std::mt19937_64& rng) {
    const int P = 32;
    QSeries a = rand_qseries(rng, P);
    QSeries b = rand_qseries(rng, P);
    QSeries c = rand_qseries(rng, P);
    QSeries one = QSeries::constant(1, P);
    if (!((a + b) + c == a + (b + c))) return "addition associativity";
    if (!(a + b == b + a)) return "addition commutativity";
    if (!(a * b == b * a)) return "multiplication commutativity";
    if (!((a * b) * c == a * (b * c))) return "multiplication associativity";
    if (!(a * (b + c) == a * b + a * c)) return "distributivity";
    if (!(a * one == a)) return "multiplicative unit";
    if (!((a - b) + b == a)) return "additive inverse";
    if (!((-a) + a == QSeries(P))) return "negation";
    if (!((a * b).substituted_qpow(2) == a.substituted_qpow(2) * b.substituted_qpow(2)))
        return "q-substitution multiplicativity";
    return "";
}

FilteredElement rand_element(std::mt19937_64& rng, Level level, int k) {
    FilteredElement f(level, k);
    int picks = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < picks; ++t) {
        int w = static_cast<int>(rng() % (k + 1));
        std::vector<ModularForm> basis = monomial_basis(w, level);
        if (basis.empty()) continue;
        std::vector<Rational> coords(basis.size());
        for (Rational& c : coords)
            if (rng() % 2 == 0) c = rand_rational(rng, {1, 2, 3, 4, 5, 9});
        f.add_component(w, coords);
    }
    return f;
}

/// Element guaranteed to lie in the indeterminacy: rational constant +
/// rational top-weight form + Z[1/N] combination of basis monomials.
FilteredElement rand_absorbable(std::mt19937_64& rng, Level level, int k) {
    long n_base = level == Level::three ? 3 : 2;
    ModularForm form = ModularForm::constant(level, rand_rational(rng, {1, 2, 3, 5, 7}));
    for (const ModularForm& m : monomial_basis(k, level))
        if (rng() % 2 == 0) form += m * rand_rational(rng, {1, 2, 3, 5, 7});
    int picks = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < picks; ++t) {
        int w = static_cast<int>(rng() % (k + 1));
        std::vector<ModularForm> basis = monomial_basis(w, level);
        if (basis.empty()) continue;
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1;
        for (unsigned e = rng() % 3; e > 0; --e) den *= n_base;
        Rational c{Int(num), Int(den)};
        c.canonicalize();
        form += basis[rng() % basis.size()] * c;
    }
    return FilteredElement(k, form);
}

std::string divcong_case(int case_idx, std::mt19937_64& rng) {
    Level level = (case_idx % 2 == 0) ? Level::three : Level::two;
    int k = 4 + 2 * static_cast<int>(rng() % 2);
    const int P = default_precision(k);
    FilteredElement f = rand_element(rng, level, k);
    if (!congruent(f, f, P)) return "reflexivity";
    FilteredElement g = f + rand_absorbable(rng, level, k);
    if (!congruent(f, g, P)) return "absorption of constants/top-weight/integral parts";
    if (!congruent(g, f, P)) return "symmetry";
    FilteredElement h = f + rand_absorbable(rng, level, k);
    if (!congruent(g, h, P)) return "transitivity through the base element";
    Int t = torsion_order(f, P);
    if (t < 1) return "torsion order positivity";
    if (!in_indeterminacy(f * Rational(t), P)) return "torsion order kills the class";
    if (torsion_order(-f, P) != t) return "torsion order negation invariance";
    return "";
}

std::string stability_case(int case_idx, std::mt19937_64& rng) {
    Level level = (case_idx % 2 == 0) ? Level::three : Level::two;
    int k = 4 + 2 * static_cast<int>(rng() % 2);
    const int P = default_precision(k);
    FilteredElement f = rand_element(rng, level, k);
    if (in_indeterminacy(f, P) != in_indeterminacy(f, 2 * P))
        return "membership verdict changed under precision doubling";
    if (torsion_order(f, P) != torsion_order(f, 2 * P))
        return "torsion order changed under precision doubling";
    FilteredElement a = rand_absorbable(rng, level, k);
    if (!in_indeterminacy(a, P) || !in_indeterminacy(a, 2 * P))
        return "absorbable element not recognized at both precisions";
    FilteredElement g = rand_element(rng, level, k);
    if (congruent(f, g, P) != congruent(f, g, 2 * P))
        return "congruence verdict changed under precision doubling";
    return "";
}

// Independent pairing oracle: linear algebra against the elementary-symmetric
// ideal, no staircase rewriting involved.
struct FlagOracle {
    int n = 0;
    int dim = 0;
    std::vector<std::vector<int>> monos;
    std::map<std::vector<int>, int> index;
    std::vector<Rational> phi;  ///< pairing functional on degree-dim monomials
};

void exponents_of_degree(int total, int parts, std::vector<int>& prefix,
                         std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        prefix.push_back(head);
        exponents_of_degree(total - head, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> exponents_of_degree(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    exponents_of_degree(total, parts, prefix, out);
    return out;
}

FlagOracle build_flag_oracle(int n) {
    FlagOracle o;
    o.n = n;
    o.dim = n * (n - 1) / 2;
    o.monos = exponents_of_degree(o.dim, n);
    for (std::size_t i = 0; i < o.monos.size(); ++i)
        o.index.emplace(o.monos[i], static_cast<int>(i));

    linalg::QMatrix rows;
    for (int r = 1; r <= n; ++r) {
        int rest = o.dim - r;
        if (rest < 0) continue;
        std::vector<std::vector<int>> supports;  // indicator vectors of e_r terms
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != r) continue;
            std::vector<int> ind(n, 0);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) ind[v] = 1;
            supports.push_back(std::move(ind));
        }
        for (const std::vector<int>& mu : exponents_of_degree(rest, n)) {
            std::vector<Rational> row(o.monos.size());
            for (const std::vector<int>& ind : supports) {
                std::vector<int> target(n);
                for (int v = 0; v < n; ++v) target[v] = mu[v] + ind[v];
                row[o.index.at(target)] += 1;
            }
            rows.push_back(std::move(row));
        }
    }

    linalg::Rref rr = linalg::rref(std::move(rows));
    if (rr.pivot_cols.size() + 1 != o.monos.size())
        throw Error("flag oracle: top graded piece of the quotient is not a line");
    std::vector<char> is_pivot(o.monos.size(), 0);
    for (int p : rr.pivot_cols) is_pivot[p] = 1;
    int free_col = -1;
    for (std::size_t j = 0; j < o.monos.size(); ++j)
        if (!is_pivot[j]) free_col = static_cast<int>(j);

    std::vector<Rational> phi(o.monos.size());
    phi[free_col] = 1;
    for (std::size_t i = 0; i < rr.rows.size(); ++i)
        phi[rr.pivot_cols[i]] = -rr.rows[i][free_col];

    std::vector<int> top(n);
    for (int v = 0; v < n; ++v) top[v] = n - 1 - v;
    Rational at_top = phi[o.index.at(top)];
    if (at_top == 0) throw Error("flag oracle: pairing degenerates on the top monomial");
    for (Rational& value : phi) value /= at_top;
    o.phi = std::move(phi);
    return o;
}

Rational oracle_pairing(const FlagOracle& o, const std::vector<int>& mono) {
    int deg = 0;
    for (int e : mono) deg += e;
    if (deg != o.dim) return 0;
    return o.phi[o.index.at(mono)];
}

CoinvariantPoly rand_poly(std::mt19937_64& rng, int n, int maxdeg) {
    CoinvariantPoly p(n);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        int deg = static_cast<int>(rng() % (maxdeg + 2));
        std::vector<int> exps(n, 0);
        for (int d = 0; d < deg; ++d) exps[rng() % n]++;
        Int coeff(static_cast<long>(rng() % 9) - 4);
        p += CoinvariantPoly::monomial(n, exps, coeff);
    }
    return p;
}

std::string flagcohom_case(int case_idx, std::mt19937_64& rng,
                           const std::map<int, FlagOracle>& oracles) {
    int n = 2 + case_idx % 3;
    const FlagOracle& o = oracles.at(n);

    std::vector<int> mono(n, 0);
    for (int d = 0; d < o.dim; ++d) mono[rng() % n]++;
    Int lib = top_pairing(CoinvariantPoly::monomial(n, mono));
    if (Rational(lib) != oracle_pairing(o, mono)) return "pairing disagrees with the oracle";

    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int v = n - 1; v > 0; --v)
        std::swap(perm[v], perm[rng() % (v + 1)]);
    int inversions = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (perm[x] > perm[y]) ++inversions;
    std::vector<int> permuted(n, 0);
    for (int v = 0; v < n; ++v) permuted[perm[v]] = mono[v];
    Int expected = (inversions % 2 == 0) ? lib : Int(-lib);
    if (top_pairing(CoinvariantPoly::monomial(n, permuted)) != expected)
        return "permutation sign equivariance";

    CoinvariantPoly p = rand_poly(rng, n, o.dim);
    CoinvariantPoly q = rand_poly(rng, n, o.dim);
    CoinvariantPoly rp = p.reduce();
    if (!rp.is_reduced()) return "reduce left a staircase violation";
    if (!(rp.reduce() == rp)) return "reduce not idempotent";
    if (top_pairing(p + q) != top_pairing(p) + top_pairing(q)) return "pairing linearity";
    if (!((p * q).reduce() == (rp * q.reduce()).reduce()))
        return "reduce incompatible with products";
    return "";
}

CheckResult run_cases(int cases, std::uint64_t seed,
                      const std::function<std::string(int, std::mt19937_64&)>& body) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        std::string outcome = body(i, rng);
        if (!outcome.empty())
            return {false, "case " + std::to_string(i) + ": " + outcome};
    }
    return {true, std::to_string(cases) + " randomized cases passed"};
}

}  // namespace

std::string to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::passed: return "pass";
        case VerifyStatus::failed: return "fail";
        case VerifyStatus::error: return "error";
    }
    return "error";
}

std::vector<VerificationItem> run_verification(const VerifyOptions& options) {
    struct Check {
        std::string id;
        std::string anchor;
        std::function<CheckResult()> fn;
    };

    int prec = options.precision;
    int cases = std::max(1, options.cases);
    std::uint64_t seed = options.seed;

    std::vector<Check> checks;
    checks.push_back({"c01-beta44-identity", "divcong",
                      [prec] { return check_beta44_identity(prec); }});
    {
        const std::vector<std::string> step_names = {
            "01", "02", "03", "04", "05", "06", "07", "08",  "09",  "10",
            "11", "12", "13", "14", "15", "eq1", "eq2", "eq3", "eq4", "eq5"};
        for (std::size_t i = 0; i < step_names.size(); ++i) {
            checks.push_back({"c02-chain-" + step_names[i], "divcong",
                              [prec, i] { return check_chain_step(prec, i); }});
        }
    }
    checks.push_back({"c03-torsion-orders", "transfer",
                      [prec] { return check_torsion_orders(prec); }});
    checks.push_back({"c04-product-grids", "transfer",
                      [prec] { return check_product_grids(prec); }});
    checks.push_back({"c05-flag3-transfer", "transfer",
                      [prec] { return check_flag3(prec); }});
    checks.push_back({"c06-flag-vanishing", "flagcohom",
                      [prec] { return check_flag_vanishing(prec); }});
    checks.push_back({"c07-genus-oracle", "genus",
                      [prec] { return check_genus_oracle(prec); }});
    checks.push_back({"c08-eisenstein-identities", "modforms",
                      [prec] { return check_eisenstein_identities(prec); }});
    checks.push_back({"c09-formula-degeneracies", "transfer",
                      [prec] { return check_degeneracies(prec); }});
    checks.push_back({"c10-properties-divcong", "divcong", [cases, seed] {
                          return run_cases(cases, seed + 1, [](int i, std::mt19937_64& rng) {
                              return divcong_case(i, rng);
                          });
                      }});
    checks.push_back({"c10-properties-flagcohom", "flagcohom", [cases, seed] {
                          std::map<int, FlagOracle> oracles;
                          for (int n : {2, 3, 4}) oracles.emplace(n, build_flag_oracle(n));
                          return run_cases(cases, seed + 2,
                                           [&oracles](int i, std::mt19937_64& rng) {
                                               return flagcohom_case(i, rng, oracles);
                                           });
                      }});
    checks.push_back({"c10-properties-qseries", "qseries", [cases, seed] {
                          return run_cases(cases, seed + 3, [](int, std::mt19937_64& rng) {
                              return qseries_case(rng);
                          });
                      }});
    checks.push_back({"c10-properties-stability", "divcong", [cases, seed] {
                          return run_cases(cases, seed + 4, [](int i, std::mt19937_64& rng) {
                              return stability_case(i, rng);
                          });
                      }});

    std::vector<VerificationItem> items;
    items.reserve(checks.size());
    for (const Check& check : checks) {
        VerificationItem item{check.id, check.anchor, VerifyStatus::passed, ""};
        try {
            CheckResult result = check.fn();
            item.status = result.first ? VerifyStatus::passed : VerifyStatus::failed;
            item.details = result.second;
        } catch (const std::exception& e) {
            item.status = VerifyStatus::error;
            item.details = e.what();
        }
        items.push_back(std::move(item));
    }
    std::sort(items.begin(), items.end(),
              [](const VerificationItem& a, const VerificationItem& b) { return a.id < b.id; });
    return items;
}

bool all_passed(const std::vector<VerificationItem>& items) {
    return std::all_of(items.begin(), items.end(), [](const VerificationItem& item) {
        return item.status == VerifyStatus::passed;
    });
}

bool any_errored(const std::vector<VerificationItem>& items) {
    return std::any_of(items.begin(), items.end(), [](const VerificationItem& item) {
        return item.status == VerifyStatus::error;
    });
}

}  // namespace finv
