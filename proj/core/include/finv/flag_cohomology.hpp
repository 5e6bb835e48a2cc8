#pragma once

#include <map>
#include <string>
#include <vector>

#include "finv/modforms.hpp"
#include "finv/rational.hpp"

namespace finv {

/**
 * Integer polynomial in t_1..t_n viewed in the coinvariant algebra
 * Z[t_1..t_n] / (symmetric polynomials of positive degree), the cohomology of
 * the full flag variety of C^n with t_i the tautological first Chern classes.
 *
 * reduce() rewrites onto the staircase basis {t^a : a_i <= n - i} using the
 * relations h_{n-k+1}(t_1,..,t_k) = 0 (complete homogeneous sums), each of
 * which trades the power t_k^{n-k+1} for lexicographically smaller monomials.
 */
class CoinvariantPoly {
  public:
    using Monomial = std::vector<int>;  ///< exponents of t_1..t_n

    explicit CoinvariantPoly(int n);

    static CoinvariantPoly constant(int n, const Int& value);
    /// t_index (1-based).
    static CoinvariantPoly variable(int n, int index);
    static CoinvariantPoly monomial(int n, const Monomial& exponents, const Int& coeff = 1);

    int n() const { return n_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True iff every monomial satisfies the staircase bound a_i <= n - i.
    bool is_reduced() const;

    /// Normal form in the staircase basis.
    CoinvariantPoly reduce() const;

    CoinvariantPoly operator-() const;
    CoinvariantPoly& operator+=(const CoinvariantPoly& o);
    CoinvariantPoly& operator-=(const CoinvariantPoly& o);
    friend CoinvariantPoly operator+(CoinvariantPoly a, const CoinvariantPoly& b) {
        return a += b;
    }
    friend CoinvariantPoly operator-(CoinvariantPoly a, const CoinvariantPoly& b) {
        return a -= b;
    }
    friend CoinvariantPoly operator*(const CoinvariantPoly& a, const CoinvariantPoly& b);
    friend CoinvariantPoly operator*(const Int& c, const CoinvariantPoly& p);
    friend CoinvariantPoly operator*(const CoinvariantPoly& p, const Int& c) { return c * p; }
    CoinvariantPoly pow(unsigned e) const;

    friend bool operator==(const CoinvariantPoly& a, const CoinvariantPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CoinvariantPoly& a, const CoinvariantPoly& b) {
        return !(a == b);
    }

  private:
    void insert(const Monomial& mono, const Int& coeff);  // accumulates, drops zeros

    int n_;
    std::map<Monomial, Int> terms_;
};

/**
 * Pairing against the fundamental class: the coefficient of the top staircase
 * monomial t_1^{n-1} t_2^{n-2} ... t_{n-1} in the normal form.  The top
 * monomial itself pairs to +1.
 */
Int top_pairing(const CoinvariantPoly& p);

/**
 * Parse "t1^2*t2 - 3*t1" style input over t_1..t_n.  Supports + - * ^,
 * parentheses and integer literals; multiplication requires an explicit '*'.
 */
CoinvariantPoly parse_poly(int n, const std::string& text);

std::string to_string(const CoinvariantPoly& p);

/**
 * Pairing grid of a pair of tautological classes, the geometric input of the
 * transfer formula: entry k is <t_i^k t_j^(N-k), [flag]> for k = 0..N with
 * N = n(n-1)/2 the complex dimension of the flag variety.  The grid records N
 * as its formula degree together with the congruence level it will be
 * evaluated at.  Requires n >= 2 and distinct 1-based indices i, j.
 */
struct ChernGrid {
    int n_formula;
    Level level;
    std::vector<Int> pairings;  ///< size n_formula + 1

    friend bool operator==(const ChernGrid& a, const ChernGrid& b) {
        return a.n_formula == b.n_formula && a.level == b.level && a.pairings == b.pairings;
    }
};

ChernGrid taut_chern_grid(int n, int i, int j, Level level = Level::three);

}  // namespace finv
