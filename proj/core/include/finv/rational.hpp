#pragma once

#include <gmpxx.h>

#include <string>

namespace finv {

// Exact arithmetic is delegated to GMP: mpq_class keeps fractions in lowest
// terms with a positive denominator, which is exactly the invariant the rest
// of the library relies on.
using Int = mpz_class;
using Rational = mpq_class;

/** n! as an exact integer. */
Int factorial(unsigned long n);

/** Binomial coefficient C(n, k); zero for k > n. */
Int binomial(unsigned long n, unsigned long k);

/** base^exponent for a non-negative exponent. */
Int pow_ui(const Int& base, unsigned long exponent);

/** Largest divisor of |value| coprime to base (base >= 2); 0 maps to 0. */
Int base_free_part(Int value, unsigned base);

/** True iff value == base^e for some e >= 0 (so 1 qualifies). */
bool is_power_of(const Int& value, unsigned base);

/** True iff the denominator of q is a power of base. */
bool has_denominator_power_of(const Rational& q, unsigned base);

/** Parse "p" or "p/q" with optional sign; q must be nonzero. */
Rational parse_rational(const std::string& text);

/** Render as "p" or "p/q" in lowest terms. */
std::string to_fraction_string(const Rational& q);

/** Representative of q modulo 1 lying in [0, 1). */
Rational reduced_mod1(const Rational& q);

}  // namespace finv
