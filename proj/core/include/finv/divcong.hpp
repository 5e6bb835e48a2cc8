#pragma once

#include <map>
#include <string>
#include <vector>

#include "finv/modforms.hpp"
#include "finv/series.hpp"

namespace finv {

/**
 * Inhomogeneous sum of modular forms of weights <= filtration, tracked in
 * exact generator coordinates.  The congruence operations below decide
 * membership in the "divided congruence plus indeterminacy" subgroup: the
 * element is trivial iff some constant and some pure top-weight form can be
 * subtracted so that the remaining q-expansion has coefficients in Z[1/N]
 * (N = 3 at level three, N = 2 at level two).
 */
class FilteredElement {
  public:
    /// Zero element.
    FilteredElement(Level level, int filtration);

    /// Wrap a graded form; every weight present must be <= filtration.
    FilteredElement(int filtration, ModularForm form);

    Level level() const { return form_.level(); }
    int filtration() const { return filtration_; }
    const ModularForm& form() const { return form_; }

    bool is_zero() const { return form_.is_zero(); }

    /// Component of one weight, as a graded form.
    ModularForm weight_component(int weight) const { return form_.weight_part(weight); }

    /// Coordinates of the weight component on monomial_basis(weight, level).
    std::vector<Rational> component_coords(int weight) const;

    /// Add coordinates on monomial_basis(weight, level) into this element.
    void add_component(int weight, const std::vector<Rational>& coords);

    /// Expansion of the whole sum at the given precision.
    QSeries total_expansion(int prec) const;

    FilteredElement operator-() const;
    friend FilteredElement operator+(const FilteredElement& a, const FilteredElement& b);
    friend FilteredElement operator-(const FilteredElement& a, const FilteredElement& b);
    friend FilteredElement operator*(const Rational& c, const FilteredElement& h);
    friend FilteredElement operator*(const FilteredElement& h, const Rational& c) {
        return c * h;
    }
    friend bool operator==(const FilteredElement& a, const FilteredElement& b) {
        return a.filtration_ == b.filtration_ && a.form_ == b.form_;
    }

  private:
    int filtration_;
    ModularForm form_;
};

/// Working precision policy: max(48, 8 * (filtration + 1)).
int default_precision(int filtration);

/**
 * Does h lie in the indeterminacy subgroup (constants + top-weight forms +
 * N-integral expansions)?  The verdict is computed at precision P (0 means
 * the default policy) and re-confirmed at 2P; a flip raises
 * PrecisionUnstableError instead of returning a guess.
 */
bool in_indeterminacy(const FilteredElement& h, int prec = 0);

/** congruent(f, g) := in_indeterminacy(f - g); levels/filtrations must match. */
bool congruent(const FilteredElement& f, const FilteredElement& g, int prec = 0);

/**
 * Order of the class of h modulo the indeterminacy: the least t >= 1 with
 * t*h inside.  Always finite; stability under precision doubling enforced.
 */
Int torsion_order(const FilteredElement& h, int prec = 0);

/**
 * Constructive companion of in_indeterminacy.  On membership it carries the
 * witnessing constant, top-weight coordinates, and the leading coefficients
 * of the N-integral remainder; on failure, the first obstructed q-power and
 * the offending solve coordinate.
 */
struct MembershipCertificate {
    bool member = false;
    Rational constant;                          ///< witnessing constant term
    std::vector<Rational> weight_k_coords;      ///< on monomial_basis(filtration)
    std::vector<Rational> remainder_head;       ///< leading N-integral coefficients
    int obstruction_q_power = -1;               ///< failure only
    Rational obstruction_value;                 ///< offending coordinate
};

MembershipCertificate membership_certificate(const FilteredElement& h, int prec = 0);

/// Render a certificate for reports.
std::string to_string(const MembershipCertificate& cert, Level level, int filtration);

}  // namespace finv
