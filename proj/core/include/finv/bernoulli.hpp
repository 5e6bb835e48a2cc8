#pragma once

#include "finv/rational.hpp"

namespace finv {

/**
 * Bernoulli number B_m for even m >= 2, in the convention
 * B_2 = 1/6, B_4 = -1/30, B_12 = -691/2730.
 *
 * Computed by the Akiyama–Tanigawa transform (not the binomial-sum
 * recurrence, which the tests use as an independent oracle).
 *
 * Throws InvalidInputError for odd or non-positive m.
 */
Rational bernoulli(unsigned m);

/**
 * Bernoulli polynomial value B_m(1/3) for odd m >= 1, with the standard
 * B_1 = -1/2 convention, so B_1(1/3) = -1/6 and B_3(1/3) = 1/27.
 *
 * Throws InvalidInputError for even m or m == 0.
 */
Rational bernoulli_poly_third(unsigned m);

namespace detail {
/// B_m for any m >= 0 (B_1 = -1/2 convention); used by the polynomial values.
Rational bernoulli_any(unsigned m);
}  // namespace detail

}  // namespace finv
