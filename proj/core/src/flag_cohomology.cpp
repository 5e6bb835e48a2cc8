#include "finv/flag_cohomology.hpp"

#include <cctype>

#include "finv/errors.hpp"

namespace finv {

namespace {

int checked_n(int n) {
    if (n < 1) throw InvalidInputError("CoinvariantPoly: need at least one variable");
    return n;
}

void accumulate(std::map<CoinvariantPoly::Monomial, Int>& into,
                const CoinvariantPoly::Monomial& mono, const Int& coeff) {
    auto it = into.find(mono);
    if (it == into.end()) {
        if (coeff != 0) into.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) into.erase(it);
}

/// 1-based index of the largest variable whose staircase bound is exceeded,
/// or 0 when the monomial is already in normal form.
int violating_var(const CoinvariantPoly::Monomial& mono, int n) {
    for (int k = n; k >= 1; --k)
        if (mono[k - 1] > n - k) return k;
    return 0;
}

/// All exponent tuples (b_1..b_parts) >= 0 with sum `total`.
void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = 0; head <= total; ++head) {
        prefix.push_back(head);
        compositions(total - head, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

CoinvariantPoly::CoinvariantPoly(int n) : n_(checked_n(n)) {}

CoinvariantPoly CoinvariantPoly::constant(int n, const Int& value) {
    CoinvariantPoly p(n);
    p.insert(Monomial(n, 0), value);
    return p;
}

CoinvariantPoly CoinvariantPoly::variable(int n, int index) {
    CoinvariantPoly p(n);
    if (index < 1 || index > n)
        throw InvalidInputError("CoinvariantPoly: variable index " + std::to_string(index) +
                                " outside 1.." + std::to_string(n));
    Monomial mono(n, 0);
    mono[index - 1] = 1;
    p.insert(mono, 1);
    return p;
}

CoinvariantPoly CoinvariantPoly::monomial(int n, const Monomial& exponents, const Int& coeff) {
    CoinvariantPoly p(n);
    if (static_cast<int>(exponents.size()) != n)
        throw InvalidInputError("CoinvariantPoly: exponent tuple has wrong length");
    for (int e : exponents)
        if (e < 0) throw InvalidInputError("CoinvariantPoly: negative exponent");
    p.insert(exponents, coeff);
    return p;
}

void CoinvariantPoly::insert(const Monomial& mono, const Int& coeff) {
    accumulate(terms_, mono, coeff);
}

bool CoinvariantPoly::is_reduced() const {
    for (const auto& [mono, coeff] : terms_)
        if (violating_var(mono, n_) != 0) return false;
    return true;
}

CoinvariantPoly CoinvariantPoly::reduce() const {
    std::map<Monomial, Int> work = terms_;
    CoinvariantPoly out(n_);
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Monomial& mono = node.key();
        const Int& coeff = node.mapped();
        if (coeff == 0) continue;
        int k = violating_var(mono, n_);
        if (k == 0) {
            out.insert(mono, coeff);
            continue;
        }
        // h_{n-k+1}(t_1..t_k) = 0 trades t_k^{n-k+1} for the other terms of
        // the complete homogeneous sum, all with smaller t_k exponent.
        int drop = n_ - k + 1;
        Monomial base = mono;
        base[k - 1] -= drop;
        std::vector<std::vector<int>> parts;
        std::vector<int> prefix;
        compositions(drop, k, prefix, parts);
        for (const std::vector<int>& b : parts) {
            if (b[k - 1] == drop) continue;  // the traded power itself
            Monomial next = base;
            for (int v = 0; v < k; ++v) next[v] += b[v];
            accumulate(work, next, -coeff);
        }
    }
    return out;
}

CoinvariantPoly CoinvariantPoly::operator-() const {
    CoinvariantPoly out(n_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

CoinvariantPoly& CoinvariantPoly::operator+=(const CoinvariantPoly& o) {
    if (n_ != o.n_) throw InvalidInputError("CoinvariantPoly: mixed variable counts");
    for (const auto& [mono, coeff] : o.terms_) insert(mono, coeff);
    return *this;
}

CoinvariantPoly& CoinvariantPoly::operator-=(const CoinvariantPoly& o) {
    if (n_ != o.n_) throw InvalidInputError("CoinvariantPoly: mixed variable counts");
    for (const auto& [mono, coeff] : o.terms_) insert(mono, -coeff);
    return *this;
}

CoinvariantPoly operator*(const CoinvariantPoly& a, const CoinvariantPoly& b) {
    if (a.n_ != b.n_) throw InvalidInputError("CoinvariantPoly: mixed variable counts");
    CoinvariantPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            CoinvariantPoly::Monomial mono(a.n_);
            for (int v = 0; v < a.n_; ++v) mono[v] = ma[v] + mb[v];
            out.insert(mono, ca * cb);
        }
    return out;
}

CoinvariantPoly operator*(const Int& c, const CoinvariantPoly& p) {
    CoinvariantPoly out(p.n_);
    if (c == 0) return out;
    for (const auto& [mono, coeff] : p.terms_) out.terms_.emplace(mono, c * coeff);
    return out;
}

CoinvariantPoly CoinvariantPoly::pow(unsigned e) const {
    CoinvariantPoly result = constant(n_, 1);
    CoinvariantPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Int top_pairing(const CoinvariantPoly& p) {
    CoinvariantPoly normal = p.reduce();
    CoinvariantPoly::Monomial top(p.n());
    for (int i = 0; i < p.n(); ++i) top[i] = p.n() - 1 - i;
    auto it = normal.terms().find(top);
    return it == normal.terms().end() ? Int(0) : it->second;
}

namespace {

/// Recursive-descent parser for integer polynomials in t_1..t_n.
class PolyParser {
  public:
    PolyParser(int n, const std::string& text) : n_(n), text_(text) {}

    CoinvariantPoly run() {
        CoinvariantPoly p = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    CoinvariantPoly parse_expr() {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = take() == '-';
        CoinvariantPoly p = parse_term();
        if (negate) p = -p;
        while (true) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return p;
            take();
            CoinvariantPoly t = parse_term();
            if (c == '+')
                p += t;
            else
                p -= t;
        }
    }

    CoinvariantPoly parse_term() {
        CoinvariantPoly p = parse_factor();
        while (true) {
            skip_space();
            if (peek() != '*') return p;
            take();
            p = p * parse_factor();
        }
    }

    CoinvariantPoly parse_factor() {
        CoinvariantPoly p = parse_atom();
        skip_space();
        if (peek() != '^') return p;
        take();
        unsigned long e = parse_number_ul("exponent");
        return p.pow(static_cast<unsigned>(e));
    }

    CoinvariantPoly parse_atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
            take();
            CoinvariantPoly p = parse_expr();
            skip_space();
            if (peek() != ')') fail("missing ')'");
            take();
            return p;
        }
        if (c == 't') {
            take();
            unsigned long index = parse_number_ul("variable index");
            if (index < 1 || index > static_cast<unsigned long>(n_))
                fail("variable t" + std::to_string(index) + " outside t1..t" +
                     std::to_string(n_));
            return CoinvariantPoly::variable(n_, static_cast<int>(index));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = take_digits();
            return CoinvariantPoly::constant(n_, Int(digits));
        }
        fail("expected number, variable or '('");
        return CoinvariantPoly(n_);  // unreachable
    }

    unsigned long parse_number_ul(const std::string& what) {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what);
        return std::stoul(take_digits());
    }

    std::string take_digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
        return out;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInputError("polynomial parse error at position " +
                                std::to_string(pos_) + ": " + what);
    }

    int n_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

CoinvariantPoly parse_poly(int n, const std::string& text) {
    return PolyParser(n, text).run();
}

std::string to_string(const CoinvariantPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Reverse map order leads with the t_1-heaviest monomial.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        Int mag = coeff < 0 ? Int(-coeff) : coeff;
        if (out.empty())
            out += coeff < 0 ? "-" : "";
        else
            out += coeff < 0 ? " - " : " + ";
        std::vector<std::string> factors;
        for (int v = 0; v < p.n(); ++v) {
            if (mono[v] == 0) continue;
            std::string f = "t" + std::to_string(v + 1);
            if (mono[v] > 1) f += "^" + std::to_string(mono[v]);
            factors.push_back(f);
        }
        if (mag != 1 || factors.empty()) {
            out += mag.get_str();
            if (!factors.empty()) out += "*";
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += "*";
            out += factors[i];
        }
    }
    return out;
}

ChernGrid taut_chern_grid(int n, int i, int j, Level level) {
    if (n < 2) throw InvalidInputError("taut_chern_grid: need n >= 2");
    if (i < 1 || i > n || j < 1 || j > n)
        throw InvalidInputError("taut_chern_grid: indices must lie in 1.." +
                                std::to_string(n));
    if (i == j) throw InvalidInputError("taut_chern_grid: indices must be distinct");
    int dim = n * (n - 1) / 2;
    ChernGrid grid{dim, level, {}};
    grid.pairings.reserve(dim + 1);
    CoinvariantPoly ti = CoinvariantPoly::variable(n, i);
    CoinvariantPoly tj = CoinvariantPoly::variable(n, j);
    for (int k = 0; k <= dim; ++k)
        grid.pairings.push_back(top_pairing(ti.pow(k) * tj.pow(dim - k)));
    return grid;
}

}  // namespace finv
