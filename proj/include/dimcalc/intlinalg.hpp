#pragma once

// Exact integer linear algebra on small dense matrices.
//
// Everything here works over arbitrary-precision integers and only uses
// integer-preserving row operations, so ranks, kernels and dependence
// witnesses are exact. Matrices in this project rarely exceed 10x10.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace dimcalc {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    /// All columns must share one length. An empty list gives a 0x0 matrix
    /// unless `rows` says otherwise.
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntMatrix select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// k * target = sum_j coeffs[j] * cols[j], with k > 0 and gcd(k, coeffs...) = 1.
struct DependenceWitness {
    Integer k;
    IntVector coeffs;

    friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;
};

/// Rank over the rationals, by Bareiss fraction-free elimination.
std::size_t rank_int(const IntMatrix& m);

/// Determinant of a square matrix (Bareiss). Throws LengthMismatch if not square.
Integer determinant(const IntMatrix& m);

/// True iff the selected columns are linearly independent. Throws
/// IndexOutOfRange for a bad column index.
bool columns_independent(const IntMatrix& m, std::span<const std::size_t> cols);

/// Canonical dependence of `target` on the independent columns `cols`, or
/// nothing when target is outside their span. Throws DependentColumns if
/// `cols` is itself dependent and LengthMismatch on ragged input.
std::optional<DependenceWitness> solve_dependence(const IntVector& target,
                                                  const std::vector<IntVector>& cols);

/// Primitive integer basis of the rational kernel, one vector per free column
/// in increasing column order. Each vector has content 1 and a positive entry
/// at its free column.
std::vector<IntVector> nullspace_primitive(const IntMatrix& m);

/// Unique rational solution of a nonsingular square system, or nothing if singular.
std::optional<std::vector<Rational>> solve_square(const IntMatrix& a, const IntVector& b);

/// gcd of all entries (non-negative; 0 for the zero vector).
Integer content(std::span<const Integer> v);

} // namespace dimcalc
