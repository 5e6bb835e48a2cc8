#include "finv/modforms.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <tuple>

#include "finv/bernoulli.hpp"
#include "finv/errors.hpp"
#include "finv/linalg.hpp"

namespace finv {

namespace testing {

namespace {
std::atomic<bool> g_corrupt_e3{false};
}

void set_e3_corruption(bool enabled) { g_corrupt_e3.store(enabled); }
bool e3_corruption_enabled() { return g_corrupt_e3.load(); }

}  // namespace testing

Level level_from_int(int level) {
    if (level == 2) return Level::two;
    if (level == 3) return Level::three;
    throw InvalidInputError("level must be 2 or 3, got " + std::to_string(level));
}

int level_to_int(Level level) { return static_cast<int>(level); }

GeneratorName generator_from_string(const std::string& name) {
    if (name == "E1") return GeneratorName::e1;
    if (name == "E3") return GeneratorName::e3;
    if (name == "delta4") return GeneratorName::delta4;
    if (name == "epsilon") return GeneratorName::epsilon;
    throw InvalidInputError("unknown generator name '" + name + "'");
}

namespace {

// chi(d): quadratic character mod 3.
int chi3(long d) {
    switch (d % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

QSeries series_e1(int prec) {
    QSeries s(prec);
    s.set_coeff(0, 1);
    for (int n = 1; n < prec; ++n) {
        long acc = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) acc += chi3(d);
        s.set_coeff(n, Rational(6 * acc));
    }
    return s;
}

QSeries series_e3(int prec) {
    QSeries s(prec);
    s.set_coeff(0, 1);
    for (int n = 1; n < prec; ++n) {
        Int acc = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) acc += Int(chi3(d)) * d * d;
        s.set_coeff(n, Rational(-9 * acc));
    }
    if (testing::e3_corruption_enabled() && prec > 1)
        s.set_coeff(1, s.coeff(1) + 1);
    return s;
}

QSeries series_delta4(int prec) {
    QSeries s(prec);
    s.set_coeff(0, 1);
    for (int n = 1; n < prec; ++n) {
        long acc = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0 && d % 2 == 1) acc += d;
        s.set_coeff(n, Rational(24 * acc));
    }
    return s;
}

QSeries series_epsilon(int prec) {
    // q * prod (1-q^{2n})^16 / (1-q^n)^8.  Numerator factors are binomial
    // expansions; each denominator factor is cleared by the geometric
    // identity 1/(1-q^n)^8 = prod over eight copies of sum_j q^{jn}.
    QSeries prod = QSeries::constant(1, prec);
    for (int n = 1; n < prec; ++n) {
        if (2 * n < prec) {
            QSeries numer(prec);
            for (int j = 0; 2 * j * n < prec && j <= 16; ++j) {
                Rational c((j % 2 == 0) ? binomial(16, j) : -binomial(16, j));
                numer.set_coeff(2 * j * n, c);
            }
            prod = prod * numer;
        }
        QSeries geom(prec);
        for (int j = 0; j * n < prec; ++j) geom.set_coeff(j * n, 1);
        prod = prod * geom.pow(8);
    }
    return QSeries::monomial(1, 1, prec) * prod;
}

}  // namespace

QSeries level_generator(Level level, GeneratorName name, int prec) {
    if (prec < 1) throw InvalidInputError("level_generator: precision must be positive");
    switch (name) {
        case GeneratorName::e1:
            if (level != Level::three)
                throw InvalidInputError("generator E1 lives at level 3");
            return series_e1(prec);
        case GeneratorName::e3:
            if (level != Level::three)
                throw InvalidInputError("generator E3 lives at level 3");
            return series_e3(prec);
        case GeneratorName::delta4:
            if (level != Level::two)
                throw InvalidInputError("generator delta4 lives at level 2");
            return series_delta4(prec);
        case GeneratorName::epsilon:
            if (level != Level::two)
                throw InvalidInputError("generator epsilon lives at level 2");
            return series_epsilon(prec);
    }
    throw InvalidInputError("level_generator: unreachable generator name");
}

QSeries eisenstein_G(int weight, int prec) {
    if (weight < 2 || weight % 2 != 0)
        throw InvalidInputError("eisenstein_G: weight must be even and >= 2, got " +
                                std::to_string(weight));
    QSeries s(prec);
    s.set_coeff(0, -bernoulli(static_cast<unsigned>(weight)) / Rational(2 * weight));
    for (int n = 1; n < prec; ++n) {
        Int acc = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) acc += pow_ui(Int(d), static_cast<unsigned>(weight - 1));
        s.set_coeff(n, Rational(acc));
    }
    return s;
}

QSeries eisenstein_E(int weight, int prec) {
    Rational scale = Rational(-2 * weight) / bernoulli(static_cast<unsigned>(weight));
    return scale * eisenstein_G(weight, prec);
}

// ---------------------------------------------------------------------------
// ModularForm

ModularForm ModularForm::constant(Level level, const Rational& value) {
    ModularForm f(level);
    f.insert({0, 0}, value);
    return f;
}

ModularForm ModularForm::monomial(Level level, int a, int b, const Rational& coeff) {
    if (a < 0 || b < 0) throw InvalidInputError("ModularForm: negative exponent");
    ModularForm f(level);
    f.insert({a, b}, coeff);
    return f;
}

void ModularForm::insert(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(key, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int ModularForm::monomial_weight(const Key& key) const {
    return level_ == Level::three ? key.first + 3 * key.second
                                  : 2 * key.first + 4 * key.second;
}

int ModularForm::max_weight() const {
    int w = 0;
    for (const auto& [key, c] : terms_) w = std::max(w, monomial_weight(key));
    return w;
}

bool ModularForm::is_homogeneous(int* weight) const {
    int w = -1;
    for (const auto& [key, c] : terms_) {
        int wk = monomial_weight(key);
        if (w == -1) w = wk;
        if (wk != w) return false;
    }
    if (weight != nullptr) *weight = (w == -1 ? 0 : w);
    return true;
}

ModularForm ModularForm::weight_part(int weight) const {
    ModularForm out(level_);
    for (const auto& [key, c] : terms_)
        if (monomial_weight(key) == weight) out.insert(key, c);
    return out;
}

std::vector<int> ModularForm::weights() const {
    std::vector<int> ws;
    for (const auto& [key, c] : terms_) {
        int w = monomial_weight(key);
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

namespace {

// Cache of monomial q-expansions keyed by (level, a, b, prec); bypassed while
// the fault-injection hook is active so corrupted series never stick.
using MonoKey = std::tuple<int, int, int, int>;
std::map<MonoKey, QSeries>& mono_cache() {
    static std::map<MonoKey, QSeries> cache;
    return cache;
}
std::mutex& mono_mutex() {
    static std::mutex m;
    return m;
}

QSeries monomial_expansion(Level level, int a, int b, int prec) {
    MonoKey key{level_to_int(level), a, b, prec};
    if (!testing::e3_corruption_enabled()) {
        std::lock_guard<std::mutex> lock(mono_mutex());
        auto it = mono_cache().find(key);
        if (it != mono_cache().end()) return it->second;
    }
    QSeries value(prec);
    if (level == Level::three) {
        QSeries e1 = level_generator(level, GeneratorName::e1, prec);
        QSeries e3 = level_generator(level, GeneratorName::e3, prec);
        value = e1.pow(static_cast<unsigned>(a)) * e3.pow(static_cast<unsigned>(b));
    } else {
        // delta = delta4 / 4.
        QSeries d4 = level_generator(level, GeneratorName::delta4, prec);
        QSeries eps = level_generator(level, GeneratorName::epsilon, prec);
        value = d4.pow(static_cast<unsigned>(a)) * eps.pow(static_cast<unsigned>(b));
        value = value / Rational(pow_ui(4, static_cast<unsigned>(a)));
    }
    if (!testing::e3_corruption_enabled()) {
        std::lock_guard<std::mutex> lock(mono_mutex());
        mono_cache().emplace(key, value);
    }
    return value;
}

}  // namespace

QSeries ModularForm::expand(int prec) const {
    QSeries out(prec);
    for (const auto& [key, c] : terms_)
        out = out + c * monomial_expansion(level_, key.first, key.second, prec);
    return out;
}

ModularForm ModularForm::operator-() const {
    ModularForm out(level_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

ModularForm& ModularForm::operator+=(const ModularForm& o) {
    if (level_ != o.level_) throw InvalidInputError("ModularForm: level mismatch");
    for (const auto& [key, c] : o.terms_) insert(key, c);
    return *this;
}

ModularForm& ModularForm::operator-=(const ModularForm& o) {
    if (level_ != o.level_) throw InvalidInputError("ModularForm: level mismatch");
    for (const auto& [key, c] : o.terms_) insert(key, -c);
    return *this;
}

ModularForm operator*(const ModularForm& a, const ModularForm& b) {
    if (a.level_ != b.level_) throw InvalidInputError("ModularForm: level mismatch");
    ModularForm out(a.level_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

ModularForm operator*(const Rational& c, const ModularForm& f) {
    ModularForm out(f.level_);
    if (c == 0) return out;
    for (const auto& [key, coeff] : f.terms_) out.terms_.emplace(key, c * coeff);
    return out;
}

ModularForm operator/(const ModularForm& f, const Rational& c) {
    if (c == 0) throw InvalidInputError("ModularForm: division by zero");
    return Rational(1) / c * f;
}

ModularForm ModularForm::pow(unsigned e) const {
    ModularForm result = constant(level_, 1);
    ModularForm base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string monomial_name(Level level, int a, int b) {
    const char* first = level == Level::three ? "E1" : "delta";
    const char* second = level == Level::three ? "E3" : "epsilon";
    std::ostringstream out;
    if (a == 0 && b == 0) return "1";
    if (a > 0) {
        out << first;
        if (a > 1) out << "^" << a;
        if (b > 0) out << "*";
    }
    if (b > 0) {
        out << second;
        if (b > 1) out << "^" << b;
    }
    return out.str();
}

std::string to_string(const ModularForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse map order leads with the first-generator-heaviest monomial.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [key, c] = *it;
        Rational coeff = c;
        bool neg = coeff < 0;
        if (first) {
            if (neg) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) coeff = -coeff;
        }
        std::string name = monomial_name(f.level(), key.first, key.second);
        if (name == "1") {
            out << to_fraction_string(coeff);
        } else if (coeff == 1) {
            out << name;
        } else {
            out << to_fraction_string(coeff) << "*" << name;
        }
        first = false;
    }
    return out.str();
}

std::vector<ModularForm> monomial_basis(int weight, Level level) {
    if (weight < 0) throw InvalidInputError("monomial_basis: negative weight");
    std::vector<ModularForm> basis;
    if (level == Level::three) {
        for (int b = 0; 3 * b <= weight; ++b)
            basis.push_back(ModularForm::monomial(level, weight - 3 * b, b));
    } else {
        if (weight % 2 != 0) return basis;  // no odd-weight monomials at level 2
        for (int b = 0; 4 * b <= weight; ++b) {
            int rest = weight - 4 * b;
            basis.push_back(ModularForm::monomial(level, rest / 2, b));
        }
    }
    return basis;
}

ModularForm embed_level1(const QSeries& target, int weight, Level level, int prec) {
    if (weight < 0) throw InvalidInputError("embed_level1: negative weight");
    if (prec < 2 * weight + 8)
        throw InsufficientPrecisionError(
            "embed_level1: need precision >= " + std::to_string(2 * weight + 8) +
            ", got " + std::to_string(prec));
    if (target.precision() < prec)
        throw InsufficientPrecisionError("embed_level1: target has fewer coefficients "
                                         "than the requested solve precision");

    std::vector<ModularForm> basis = monomial_basis(weight, level);
    if (basis.empty()) {
        if (target.truncated(prec).is_zero()) return ModularForm(level);
        throw NotAModularFormError("embed_level1: no forms of weight " +
                                   std::to_string(weight) + " at this level");
    }

    linalg::QMatrix columns;
    columns.reserve(basis.size());
    for (const ModularForm& m : basis) {
        QSeries e = m.expand(prec);
        std::vector<Rational> col(static_cast<size_t>(prec));
        for (int j = 0; j < prec; ++j) col[static_cast<size_t>(j)] = e.coeff(j);
        columns.push_back(std::move(col));
    }
    std::vector<Rational> rhs(static_cast<size_t>(prec));
    for (int j = 0; j < prec; ++j) rhs[static_cast<size_t>(j)] = target.coeff(j);

    linalg::SolveOutcome outcome = linalg::solve_exact(columns, rhs);
    if (outcome.status == linalg::SolveStatus::underdetermined)
        throw InsufficientPrecisionError(
            "embed_level1: basis expansions not independent at this precision");
    if (outcome.status == linalg::SolveStatus::inconsistent)
        throw NotAModularFormError("embed_level1: expansion is not a weight-" +
                                   std::to_string(weight) + " form at this level");

    ModularForm result(level);
    for (size_t i = 0; i < basis.size(); ++i)
        result += outcome.solution[i] * basis[i];
    return result;
}

}  // namespace finv
