#pragma once

#include <vector>

#include "finv/modforms.hpp"
#include "finv/series.hpp"

namespace finv {

/**
 * Polynomial in a degree-4 class c2 with q-series coefficients, truncated at
 * c2^deg: coeff[k] multiplies c2^k.  This is the shape of the elliptic genus
 * of a quaternionic line bundle.
 */
struct C2Series {
    Level level;
    int prec;
    std::vector<QSeries> coeff;  ///< size deg+1

    int deg() const { return static_cast<int>(coeff.size()) - 1; }

    friend C2Series operator+(const C2Series& a, const C2Series& b);
    friend C2Series operator*(const C2Series& a, const C2Series& b);
    friend C2Series operator*(const Rational& c, const C2Series& s);
    friend bool operator==(const C2Series& a, const C2Series& b) {
        return a.level == b.level && a.coeff == b.coeff;
    }
};

/**
 * Closed form of the elliptic genus of a quaternionic line:
 *   1 - (E1^2/4) c2 + sum_{k>=2} (-1)^k G_{2k} c2^k * 2/(2k-2)!   (level 3)
 *   1 - (2 delta/3) c2 + the same tail                            (level 2)
 * truncated at c2^deg.
 */
C2Series ell_closed(Level level, int deg, int prec);

/** Constant terms (q = 0) of ell_closed, as exact rationals. */
std::vector<Rational> ell_const(Level level, int deg);

/**
 * Independent exponential form of the same genus at level 3:
 *   exp(6 sum_{n>=1} (-1)^n c2^n/(2n)! * G*_{2n}),
 * where G*_{2n}(tau) = G_{2n}(tau) - 3^{2n-1} G_{2n}(3 tau).
 * Equal to ell_closed(Level::three, ...) as an identity; kept separate as a
 * cross-check oracle.
 */
C2Series ell_oracle_level3(int deg, int prec);

/**
 * Characteristic power series Q(x) of the level-3 genus through x^xdeg
 * (xdeg <= 4; only two odd Eisenstein data points are normalized):
 *   Q(x) = exp(3 sum x^{2n}/(2n)! G*_{2n} - 2 sum x^{2k+1}/(2k+1)! Godd_{2k+1})
 * with Godd_1 = (s/2)(-1/6) E1 and Godd_3 = (s/2)(1/9) E3 over Q(s), s^2 = -3.
 * Entry j of the result is the coefficient of x^j.
 *
 * The product Q(x) Q(-x) is rational and reproduces ell_closed under
 * c2 = -x^2; the library asserts this in its verification suite.
 */
std::vector<XSeries> char_series_level3(int xdeg, int prec);

/**
 * Todd-genus coefficients for the same bundle shape: entry k multiplies c2^k,
 *   t_0 = 1,  t_k = (-1)^{k+1} (B_{2k}/2k) / (2k-2)!   (t_1 = 1/12, t_2 = 1/240).
 */
std::vector<Rational> todd_series(int deg);

}  // namespace finv
