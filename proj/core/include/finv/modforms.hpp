#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finv/series.hpp"

namespace finv {

/// Supported congruence levels.  Level three carries the weight-1/weight-3
/// generator pair E1, E3; level two the pair delta (weight 2), epsilon
/// (weight 4).
enum class Level : int { two = 2, three = 3 };

Level level_from_int(int level);
int level_to_int(Level level);

enum class GeneratorName { e1, e3, delta4, epsilon };

GeneratorName generator_from_string(const std::string& name);

/**
 * q-expansion of a ring generator at the given level:
 *   E1      = 1 + 6 sum_n (sum_{d|n} chi(d)) q^n            (level 3, weight 1)
 *   E3      = 1 - 9 sum_n (sum_{d|n} chi(d) d^2) q^n        (level 3, weight 3)
 *   delta4  = 4*delta = 1 + 24 sum_n sigma1^odd(n) q^n      (level 2, weight 2)
 *   epsilon = q prod_n (1-q^{2n})^16 (1-q^n)^{-8}           (level 2, weight 4)
 * with chi the quadratic character mod 3.  delta itself (constant 1/4) is the
 * monomial generator used in coordinates; delta4 is its integral multiple.
 *
 * Level/name mismatch raises InvalidInputError.
 */
QSeries level_generator(Level level, GeneratorName name, int prec);

/**
 * Level-1 Eisenstein series of even weight 2k >= 2:
 *   G_{2k} = -B_{2k}/(4k) + sum_{n>=1} sigma_{2k-1}(n) q^n.
 */
QSeries eisenstein_G(int weight, int prec);

/** Normalized variant E_{2k} = G_{2k} * (-4k / B_{2k}), constant term 1. */
QSeries eisenstein_E(int weight, int prec);

/**
 * Element of the graded generator ring at a level: a finite map from
 * exponent pairs (a, b) to rational coefficients, where (a, b) names
 * E1^a E3^b (level 3, weight a + 3b) or delta^a epsilon^b (level 2,
 * weight 2a + 4b).  Mixed weights are allowed; weight_part() splits them.
 */
class ModularForm {
  public:
    using Key = std::pair<int, int>;  // (a, b) exponents

    explicit ModularForm(Level level) : level_(level) {}

    static ModularForm constant(Level level, const Rational& value);
    static ModularForm monomial(Level level, int a, int b, const Rational& coeff = 1);

    Level level() const { return level_; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Weight of a single exponent pair at this level.
    int monomial_weight(const Key& key) const;

    /// Largest weight present (0 for the zero form).
    int max_weight() const;

    /// True iff all terms share one weight; that weight goes to *weight.
    bool is_homogeneous(int* weight = nullptr) const;

    /// The sub-sum of terms of exactly the given weight.
    ModularForm weight_part(int weight) const;

    /// All weights that occur, ascending.
    std::vector<int> weights() const;

    /// q-expansion at the given precision (delta contributes 4^{-a} factors).
    QSeries expand(int prec) const;

    ModularForm operator-() const;
    ModularForm& operator+=(const ModularForm& o);
    ModularForm& operator-=(const ModularForm& o);
    friend ModularForm operator+(ModularForm a, const ModularForm& b) { return a += b; }
    friend ModularForm operator-(ModularForm a, const ModularForm& b) { return a -= b; }
    friend ModularForm operator*(const ModularForm& a, const ModularForm& b);
    friend ModularForm operator*(const Rational& c, const ModularForm& f);
    friend ModularForm operator*(const ModularForm& f, const Rational& c) { return c * f; }
    friend ModularForm operator/(const ModularForm& f, const Rational& c);
    ModularForm pow(unsigned e) const;

    friend bool operator==(const ModularForm& a, const ModularForm& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ModularForm& a, const ModularForm& b) { return !(a == b); }

  private:
    void insert(const Key& key, const Rational& coeff);  // drops zeros

    Level level_;
    std::map<Key, Rational> terms_;
};

/// Human name of a monomial, e.g. "E1^4", "E1*E3", "delta^2", "1".
std::string monomial_name(Level level, int a, int b);

/// Generator-coordinate rendering of a form, e.g. "9*E1^4 - 8*E1*E3".
std::string to_string(const ModularForm& f);

/**
 * All generator monomials of the given weight at the given level, ordered by
 * ascending second exponent (lexicographic in (b, a)).  Weight 0 yields the
 * constant monomial; odd weights at level two yield the empty sequence.
 */
std::vector<ModularForm> monomial_basis(int weight, Level level);

/**
 * Express a level-1 q-expansion exactly in the weight-w monomial basis of the
 * level, solving the linear system on the first `prec` coefficients.
 *
 * Requires prec >= 2*weight + 8 (solve margin well past the dimension
 * bound), otherwise InsufficientPrecisionError.  A rank-deficient system is
 * also an InsufficientPrecisionError; an inconsistent one is a
 * NotAModularFormError.
 */
ModularForm embed_level1(const QSeries& target, int weight, Level level, int prec);

namespace testing {
/// Fault-injection hook: when enabled, the E3 generator series is corrupted
/// in its q^1 coefficient and expansion caches are bypassed.  Test use only.
void set_e3_corruption(bool enabled);
bool e3_corruption_enabled();
}  // namespace testing

}  // namespace finv
