#include "dimcalc/intlinalg.hpp"

#include <algorithm>
#include <utility>

#include "dimcalc/error.hpp"

namespace dimcalc {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) throw Error(Errc::LengthMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    const std::size_t nrows = cols.empty() ? rows : cols.front().size();
    IntMatrix m(nrows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != nrows) throw Error(Errc::LengthMismatch, "ragged matrix columns");
        for (std::size_t r = 0; r < nrows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    if (c >= cols_) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(c));
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
    IntMatrix m(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(cols[j]));
        for (std::size_t r = 0; r < rows_; ++r) m(r, j) = (*this)(r, cols[j]);
    }
    return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

std::optional<std::size_t> find_pivot(const IntMatrix& m, std::size_t from_row, std::size_t col) {
    for (std::size_t r = from_row; r < m.rows(); ++r)
        if (sgn(m(r, col)) != 0) return r;
    return std::nullopt;
}

// Bareiss elimination to row echelon form. Every entry stays a minor of the
// input, so the division by the previous pivot is exact. Returns the rank and
// the parity of the row swaps performed.
std::pair<std::size_t, bool> bareiss_echelon(IntMatrix& m) {
    Integer prev = 1;
    std::size_t rank = 0;
    bool odd_swaps = false;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        auto p = find_pivot(m, rank, c);
        if (!p) continue;
        if (*p != rank) {
            swap_rows(m, *p, rank);
            odd_swaps = !odd_swaps;
        }
        const Integer pivot = m(rank, c);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Integer t = pivot * m(i, j) - m(i, c) * m(rank, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return {rank, odd_swaps};
}

void divide_row_by_content(IntMatrix& m, std::size_t r) {
    Integer g = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(r, c).get_mpz_t());
    if (g <= 1) return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), g.get_mpz_t());
}

} // namespace

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

std::size_t rank_int(const IntMatrix& m) {
    IntMatrix work = m;
    return bareiss_echelon(work).first;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::LengthMismatch, "determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix work = m;
    auto [rank, odd_swaps] = bareiss_echelon(work);
    if (rank < m.rows()) return 0;
    // With full rank the last pivot is the determinant up to the swap sign.
    Integer det = work(m.rows() - 1, m.cols() - 1);
    return odd_swaps ? Integer(-det) : det;
}

bool columns_independent(const IntMatrix& m, std::span<const std::size_t> cols) {
    IntMatrix sub = m.select_columns(cols);
    return rank_int(sub) == cols.size();
}

std::vector<IntVector> nullspace_primitive(const IntMatrix& m) {
    // Fraction-free Gauss-Jordan: clear each pivot column above and below with
    // integer row combinations, keeping rows primitive as we go.
    IntMatrix work = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        auto p = find_pivot(work, r, c);
        if (!p) continue;
        swap_rows(work, *p, r);
        divide_row_by_content(work, r);
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i == r || sgn(work(i, c)) == 0) continue;
            const Integer a = work(r, c);
            const Integer b = work(i, c);
            for (std::size_t j = 0; j < work.cols(); ++j) work(i, j) = a * work(i, j) - b * work(r, j);
            divide_row_by_content(work, i);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    Integer scale = 1;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
        Integer d = abs(work(p, pivot_cols[p]));
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }

    std::vector<IntVector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < work.cols(); ++f) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        IntVector v(work.cols(), Integer(0));
        v[f] = scale;
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            Integer t = -work(p, f) * scale;
            mpz_divexact(v[pivot_cols[p]].get_mpz_t(), t.get_mpz_t(), work(p, pivot_cols[p]).get_mpz_t());
        }
        const Integer g = content(v);
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<DependenceWitness> solve_dependence(const IntVector& target,
                                                  const std::vector<IntVector>& cols) {
    for (const auto& c : cols)
        if (c.size() != target.size())
            throw Error(Errc::LengthMismatch, "dependence columns must match the target length");

    const IntMatrix basis = IntMatrix::from_columns(cols, target.size());
    if (rank_int(basis) != cols.size())
        throw Error(Errc::DependentColumns, "the given columns are not independent");

    std::vector<IntVector> all;
    all.reserve(cols.size() + 1);
    all.push_back(target);
    all.insert(all.end(), cols.begin(), cols.end());
    const auto kernel = nullspace_primitive(IntMatrix::from_columns(all, target.size()));
    if (kernel.empty()) return std::nullopt;

    // Independent columns leave at most one kernel direction, and it must
    // involve the target.
    const IntVector& v = kernel.front();
    DependenceWitness w;
    w.k = v[0];
    w.coeffs.reserve(cols.size());
    for (std::size_t j = 1; j < v.size(); ++j) w.coeffs.push_back(-v[j]);
    if (sgn(w.k) < 0) {
        w.k = -w.k;
        for (auto& c : w.coeffs) c = -c;
    }
    return w;
}

std::optional<std::vector<Rational>> solve_square(const IntMatrix& a, const IntVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw Error(Errc::LengthMismatch, "solve_square needs a square system");
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
        aug[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(aug[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(aug[p], aug[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(aug[i][c]) == 0) continue;
            const Rational f = aug[i][c] / aug[c][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
    return x;
}

} // namespace dimcalc
