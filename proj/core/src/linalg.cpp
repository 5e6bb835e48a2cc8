#include "finv/linalg.hpp"

#include <algorithm>

#include "finv/errors.hpp"

namespace finv::linalg {

namespace {

size_t width_of(const QMatrix& rows) { return rows.empty() ? 0 : rows.front().size(); }

void check_rect(const QMatrix& rows) {
    for (const auto& r : rows)
        if (r.size() != width_of(rows))
            throw InvalidInputError("linalg: ragged matrix");
}

void check_rect(const ZMatrix& rows) {
    size_t w = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != w) throw InvalidInputError("linalg: ragged matrix");
}

// row_i -= c * row_j, elementwise.
template <typename T, typename S>
void submul(std::vector<T>& target, const S& c, const std::vector<T>& source) {
    for (size_t k = 0; k < target.size(); ++k) target[k] -= c * source[k];
}

Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Rref rref(QMatrix rows) {
    check_rect(rows);
    const size_t n = rows.size();
    const size_t m = width_of(rows);

    QMatrix transform(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) transform[i][i] = 1;

    Rref out;
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t pivot = rank;
        while (pivot < n && rows[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(transform[pivot], transform[rank]);

        Rational inv = Rational(1) / rows[rank][col];
        for (auto& v : rows[rank]) v *= inv;
        for (auto& v : transform[rank]) v *= inv;

        for (size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational c = rows[i][col];
            submul(rows[i], c, rows[rank]);
            submul(transform[i], c, transform[rank]);
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++rank;
    }
    out.rows.assign(rows.begin(), rows.begin() + static_cast<long>(rank));
    out.transform.assign(transform.begin(), transform.begin() + static_cast<long>(rank));
    return out;
}

namespace {

// Shared HNF driver; the transform stack is optional.
ZMatrix hnf_impl(ZMatrix rows, ZMatrix* transform_out) {
    check_rect(rows);
    const size_t n = rows.size();
    const size_t m = n == 0 ? 0 : rows.front().size();

    ZMatrix transform;
    if (transform_out != nullptr) {
        transform.assign(n, std::vector<Int>(n, 0));
        for (size_t i = 0; i < n; ++i) transform[i][i] = 1;
    }
    auto apply = [&](auto&& op) {
        if (transform_out != nullptr) op(transform);
    };

    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        // Euclid on the column entries below the current rank line until one
        // nonzero survives.
        while (true) {
            size_t best = n;
            for (size_t i = rank; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                if (best == n || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0) best = i;
            }
            if (best == n) break;  // column is zero below the line
            std::swap(rows[best], rows[rank]);
            apply([&](ZMatrix& t) { std::swap(t[best], t[rank]); });

            bool cleared = true;
            for (size_t i = rank + 1; i < n; ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floordiv(rows[i][col], rows[rank][col]);
                submul(rows[i], q, rows[rank]);
                apply([&](ZMatrix& t) { submul(t[i], q, t[rank]); });
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[rank][col] == 0) continue;

        if (rows[rank][col] < 0) {
            for (auto& v : rows[rank]) v = -v;
            apply([&](ZMatrix& t) {
                for (auto& v : t[rank]) v = -v;
            });
        }
        // Reduce the entries above the new pivot into [0, pivot).
        for (size_t i = 0; i < rank; ++i) {
            if (rows[i][col] == 0) continue;
            Int q = floordiv(rows[i][col], rows[rank][col]);
            if (q == 0) continue;
            submul(rows[i], q, rows[rank]);
            apply([&](ZMatrix& t) { submul(t[i], q, t[rank]); });
        }
        ++rank;
    }

    rows.resize(rank);
    if (transform_out != nullptr) {
        transform.resize(rank);
        *transform_out = std::move(transform);
    }
    return rows;
}

}  // namespace

ZMatrix hnf(ZMatrix rows) { return hnf_impl(std::move(rows), nullptr); }

HnfTransform hnf_with_transform(ZMatrix rows) {
    HnfTransform out;
    out.h = hnf_impl(std::move(rows), &out.transform);
    return out;
}

std::optional<std::vector<Rational>> solve_row_echelon(const ZMatrix& h,
                                                       const std::vector<Rational>& target) {
    check_rect(h);
    const size_t k = h.size();
    const size_t m = k == 0 ? target.size() : h.front().size();
    if (target.size() != m) throw InvalidInputError("solve_row_echelon: size mismatch");

    std::vector<int> pivot_col(k);
    for (size_t i = 0; i < k; ++i) {
        size_t c = 0;
        while (c < m && h[i][c] == 0) ++c;
        if (c == m) throw InvalidInputError("solve_row_echelon: zero row in echelon basis");
        pivot_col[i] = static_cast<int>(c);
    }

    std::vector<Rational> x(k, 0);
    size_t next_row = 0;
    for (size_t col = 0; col < m; ++col) {
        Rational acc = target[col];
        for (size_t i = 0; i < next_row; ++i) {
            if (h[i][col] == 0) continue;
            acc -= x[i] * Rational(h[i][col]);
        }
        if (next_row < k && pivot_col[next_row] == static_cast<int>(col)) {
            x[next_row] = acc / Rational(h[next_row][col]);
            ++next_row;
        } else if (acc != 0) {
            return std::nullopt;
        }
    }
    return x;
}

SolveOutcome solve_exact(const QMatrix& columns, const std::vector<Rational>& rhs) {
    check_rect(columns);
    const size_t d = columns.size();
    const size_t p = width_of(columns);
    if (rhs.size() != p) throw InvalidInputError("solve_exact: size mismatch");

    // Row-reduce the transposed system [columns | rhs] as rows of length d+1.
    QMatrix rows(p, std::vector<Rational>(d + 1, 0));
    for (size_t j = 0; j < p; ++j) {
        for (size_t i = 0; i < d; ++i) rows[j][i] = columns[i][j];
        rows[j][d] = rhs[j];
    }
    Rref r = rref(std::move(rows));

    size_t rank_a = 0;
    for (int pc : r.pivot_cols)
        if (pc < static_cast<int>(d)) ++rank_a;
    if (rank_a < r.pivot_cols.size()) return {SolveStatus::inconsistent, {}};
    if (rank_a < d) return {SolveStatus::underdetermined, {}};

    std::vector<Rational> x(d, 0);
    for (size_t i = 0; i < r.rows.size(); ++i) x[static_cast<size_t>(r.pivot_cols[i])] = r.rows[i][d];
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace finv::linalg
