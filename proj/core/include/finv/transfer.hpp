#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finv/divcong.hpp"
#include "finv/flag_cohomology.hpp"

namespace finv {

/// Named reference class in the divided-congruence quotient, with its exact
/// torsion order there.
struct BetaEntry {
    std::string label;
    FilteredElement element;
    Int order;
};

/**
 * The level-3 beta-family representatives the classifier recognizes:
 *   beta_{4/4}   = (1/2) ((E4-1)/240)^2          filtration 8,  order 2
 *   beta_{4/2,2} = u^4/4 + u^3/2, u = (E1^2-1)/4  filtration 10, order 4
 *   beta_{4/2}   = 2 * beta_{4/2,2}               filtration 10, order 2
 */
const std::vector<BetaEntry>& beta_table();

/**
 * f-invariant of the double transfer attached to a pairing grid, by the
 * closed formula: with n the grid's formula degree and level its level,
 *
 *   f = sum_{k=1}^{n-1} (-1)^{n+1} B_{2k+2}/(k+1)
 *         * pairings[k] / ((2k)! (2n-2k)!) * G_{2n-2k+2}
 *
 * as an element of filtration 2n+4 (each G embedded into the level's ring).
 * Degree n = 1 gives the zero element; n = 0 is out of scope.  prec = 0 uses
 * the default policy for filtration 2n+4.
 */
FilteredElement f_formula(const ChernGrid& grid, int prec = 0);

/**
 * Independent geometric form of the same invariant: the pairing-weighted
 * double sum  sum_{a+b=n} pairings[b] * C_b * A_a  with
 *   A_0 = -E1^2/4 (level 3) or -2 delta/3 (level 2),
 *   A_a = (-1)^{a+1} (2/(2a)!) G_{2a+2} embedded, a >= 1,
 *   C_0 = -1/4 (level 3) or -1/6 (level 2),
 *   C_b = (-1)^{b+1} (-B_{2b+2}/(4b+4)) (2/(2b)!), b >= 1.
 * Congruent to f_formula modulo the indeterminacy; kept as a cross-check.
 */
FilteredElement f_oracle(const ChernGrid& grid, int prec = 0);

/**
 * Single-transfer e-invariant of an index-`index` class in degree 4n+3:
 * B_{2n+2}/(4n+4) * index, reduced into [0, 1).
 */
Rational e_single(int n, const Int& index);

struct Finding {
    enum class Severity { warning, violation };
    Severity severity;
    std::string message;
};

/**
 * Integrality checks a genuine transfer grid must satisfy:
 *   - (2n)!/2 divides the extremal pairings (entries 0 and n): violation;
 *   - n = 3: 12 divides pairings[1] + pairings[2]: violation;
 *   - even n: the sharper extremal bound (2n)! : warning only.
 */
std::vector<Finding> validate_divisibility(const ChernGrid& grid);

/**
 * Name of the class of `element` modulo the indeterminacy: "0", a (possibly
 * negated) beta_table label when level/filtration admit one, else
 * "unrecognized".
 */
std::string classify(const FilteredElement& element, int prec = 0);

struct TransferResult {
    ChernGrid grid;
    FilteredElement representative;
    std::string classification;
    Int torsion_order;
    std::vector<Finding> findings;
    int precision_used;
    bool stable_under_doubling;          ///< every verdict re-confirmed at 2P
    std::optional<bool> oracle_agrees;   ///< only when the oracle was requested
};

TransferResult transfer_report(const ChernGrid& grid, int prec = 0,
                               bool with_oracle = false);

/// taut_chern_grid followed by transfer_report.
TransferResult flag_report(int n, int i, int j, Level level = Level::three,
                           int prec = 0, bool with_oracle = false);

}  // namespace finv
