#include "finv/rational.hpp"

#include "finv/errors.hpp"

namespace finv {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_ui(const Int& base, unsigned long exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Int base_free_part(Int value, unsigned base) {
    if (base < 2) throw InvalidInputError("base_free_part: base must be >= 2");
    if (value == 0) return 0;
    value = abs(value);
    Int b(base);
    while (mpz_divisible_p(value.get_mpz_t(), b.get_mpz_t())) value /= b;
    return value;
}

bool is_power_of(const Int& value, unsigned base) {
    if (value <= 0) return false;
    return base_free_part(value, base) == 1;
}

bool has_denominator_power_of(const Rational& q, unsigned base) {
    return is_power_of(Int(q.get_den()), base);
}

Rational parse_rational(const std::string& text) {
    Rational q;
    // mpq set_str accepts "p/q"; validate separately so garbage is rejected.
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InvalidInputError("parse_rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw InvalidInputError("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_str();
}

Rational reduced_mod1(const Rational& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

}  // namespace finv
