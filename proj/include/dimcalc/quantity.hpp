#pragma once

// Quantities as (measure, exponent vector) pairs over a fixed defining basis.
//
// A space is described by its ordered basis names and its scalar system. A
// quantity mu * b1^k1 * ... * bn^kn is stored as the exact rational mu and the
// integer exponents k. Equidimensional quantities are exactly those with equal
// exponent vectors, so the exponent vector doubles as the dimension.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dimcalc/intlinalg.hpp"

namespace dimcalc {

/// Which scalars measures may take: all rationals, non-negative ones, or
/// strictly positive ones.
enum class ScalarMode { Real, NonNegative, Positive };

std::string_view mode_name(ScalarMode mode) noexcept;

class Space {
public:
    /// Throws DuplicateName for repeated or empty basis names.
    Space(std::vector<std::string> base_names, ScalarMode mode);

    const std::vector<std::string>& base_names() const noexcept { return base_names_; }
    std::size_t dim() const noexcept { return base_names_.size(); }
    ScalarMode mode() const noexcept { return mode_; }
    bool admits(const Rational& measure) const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    std::vector<std::string> base_names_;
    ScalarMode mode_;
};

using SpacePtr = std::shared_ptr<const Space>;

SpacePtr make_space(std::vector<std::string> base_names, ScalarMode mode = ScalarMode::Positive);

/// Integer exponent vector; the concrete form of a dimension.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::size_t n) : e_(n, Integer(0)) {}
    explicit ExpVec(IntVector e) : e_(std::move(e)) {}
    ExpVec(std::initializer_list<long> e);

    std::size_t size() const noexcept { return e_.size(); }
    const Integer& operator[](std::size_t i) const { return e_[i]; }
    Integer& operator[](std::size_t i) { return e_[i]; }
    const IntVector& values() const noexcept { return e_; }
    bool is_zero() const;

    ExpVec& operator+=(const ExpVec& o);
    ExpVec& operator-=(const ExpVec& o);
    ExpVec& operator*=(const Integer& s);
    friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
    friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
    friend ExpVec operator*(const Integer& s, ExpVec a) { return a *= s; }
    friend ExpVec operator-(ExpVec a) { return a *= Integer(-1); }

    friend bool operator==(const ExpVec&, const ExpVec&) = default;

private:
    IntVector e_;
};

std::string to_string(const ExpVec& e);

class Quantity {
public:
    const Rational& measure() const noexcept { return measure_; }
    const ExpVec& exps() const noexcept { return exps_; }
    const SpacePtr& space() const noexcept { return space_; }

    /// Same space, same measure, same exponents.
    friend bool operator==(const Quantity& a, const Quantity& b);

private:
    Quantity(Rational measure, ExpVec exps, SpacePtr space)
        : measure_(std::move(measure)), exps_(std::move(exps)), space_(std::move(space)) {}

    friend Quantity q_new(Rational measure, ExpVec exps, SpacePtr space);

    Rational measure_;
    ExpVec exps_;
    SpacePtr space_;
};

/// Throws InadmissibleMeasure when the measure violates the space's scalar
/// system and LengthMismatch when the exponent count is wrong.
Quantity q_new(Rational measure, ExpVec exps, SpacePtr space);
Quantity unit_quantity(const SpacePtr& space);

bool same_space(const Space& a, const Space& b);

Quantity mul(const Quantity& p, const Quantity& q);
Quantity smul(const Rational& a, const Quantity& q);
Quantity inv(const Quantity& q);
Quantity powi(const Quantity& q, long c);
bool equidim(const Quantity& p, const Quantity& q);
Quantity add(const Quantity& p, const Quantity& q);
Quantity sub(const Quantity& p, const Quantity& q);

inline const Rational& measure_of(const Quantity& q) { return q.measure(); }
inline const ExpVec& dimension_of(const Quantity& q) { return q.exps(); }

/// Re-express q over `new_basis`, n invertible quantities of q's space whose
/// exponent matrix is unimodular. The result lives in `target` (whose basis
/// element j is identified with new_basis[j]); when `target` is null a space
/// with basis names u1..un and the same scalar system is created.
///
/// Throws NotABasis, NotInvertible or SpaceMismatch.
Quantity rebase(const Quantity& q, std::span<const Quantity> new_basis, SpacePtr target = nullptr);

/// Exact k-th root. Refuses irrational roots rather than approximating them.
Quantity kth_root(const Quantity& q, unsigned long k);

/// coeff * prod args[i]^exps[i]; an empty product is coeff * 1_Q.
Quantity monomial_eval(const SpacePtr& space, const Rational& coeff, std::span<const Quantity> args,
                       std::span<const long> exps);

/// Integer power of a rational; throws NotInvertible for 0 to a negative power.
Rational rational_pow(const Rational& base, long e);

} // namespace dimcalc
