#include "finv/bernoulli.hpp"

#include <vector>

#include "finv/errors.hpp"

namespace finv {

namespace detail {

Rational bernoulli_any(unsigned m) {
    // Akiyama–Tanigawa: seed a[j] = 1/(j+1), then fold a[j-1] = j*(a[j-1]-a[j]).
    // After processing row m the head entry is B_m with the B_1 = +1/2 sign;
    // flip that one value to land in the B_1 = -1/2 convention used here.
    std::vector<Rational> a(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        a[j] = Rational(1, j + 1);
        for (unsigned k = j; k >= 1; --k) a[k - 1] = Rational(k) * (a[k - 1] - a[k]);
    }
    if (m == 1) return -a[0];
    return a[0];
}

}  // namespace detail

Rational bernoulli(unsigned m) {
    if (m == 0 || m % 2 != 0)
        throw InvalidInputError("bernoulli: index must be even and positive, got " +
                                std::to_string(m));
    return detail::bernoulli_any(m);
}

Rational bernoulli_poly_third(unsigned m) {
    if (m == 0 || m % 2 == 0)
        throw InvalidInputError("bernoulli_poly_third: index must be odd, got " +
                                std::to_string(m));
    // B_m(x) = sum_k C(m,k) B_k x^(m-k) evaluated at x = 1/3.
    Rational third(1, 3);
    Rational value(0);
    Rational power(1);  // third^(m-k), built from the k=m end downward
    for (unsigned k = m + 1; k-- > 0;) {
        value += Rational(binomial(m, k)) * detail::bernoulli_any(k) * power;
        power *= third;
    }
    return value;
}

}  // namespace finv
