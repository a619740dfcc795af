#include "dimcalc/quantity.hpp"

#include <set>

#include "dimcalc/error.hpp"

namespace dimcalc {

std::string_view mode_name(ScalarMode mode) noexcept {
    switch (mode) {
    case ScalarMode::Real: return "real";
    case ScalarMode::NonNegative: return "nonnegative";
    case ScalarMode::Positive: return "positive";
    }
    return "?";
}

Space::Space(std::vector<std::string> base_names, ScalarMode mode)
    : base_names_(std::move(base_names)), mode_(mode) {
    std::set<std::string> seen;
    for (const auto& n : base_names_) {
        if (n.empty()) throw Error(Errc::DuplicateName, "empty basis name");
        if (!seen.insert(n).second) throw Error(Errc::DuplicateName, "basis name '" + n + "' repeated");
    }
}

bool Space::admits(const Rational& measure) const {
    switch (mode_) {
    case ScalarMode::Real: return true;
    case ScalarMode::NonNegative: return sgn(measure) >= 0;
    case ScalarMode::Positive: return sgn(measure) > 0;
    }
    return false;
}

SpacePtr make_space(std::vector<std::string> base_names, ScalarMode mode) {
    return std::make_shared<const Space>(std::move(base_names), mode);
}

ExpVec::ExpVec(std::initializer_list<long> e) {
    e_.reserve(e.size());
    for (long x : e) e_.emplace_back(x);
}

bool ExpVec::is_zero() const {
    for (const auto& x : e_)
        if (sgn(x) != 0) return false;
    return true;
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
    if (o.size() != size()) throw Error(Errc::LengthMismatch, "exponent vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

ExpVec& ExpVec::operator-=(const ExpVec& o) {
    if (o.size() != size()) throw Error(Errc::LengthMismatch, "exponent vectors of different length");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

ExpVec& ExpVec::operator*=(const Integer& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

std::string to_string(const ExpVec& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += e[i].get_str();
    }
    return s + ")";
}

bool same_space(const Space& a, const Space& b) { return &a == &b || a == b; }

bool operator==(const Quantity& a, const Quantity& b) {
    return same_space(*a.space_, *b.space_) && a.measure_ == b.measure_ && a.exps_ == b.exps_;
}

Quantity q_new(Rational measure, ExpVec exps, SpacePtr space) {
    if (!space) throw Error(Errc::SpaceMismatch, "quantity without a space");
    if (exps.size() != space->dim())
        throw Error(Errc::LengthMismatch, "expected " + std::to_string(space->dim()) + " exponents, got " +
                                              std::to_string(exps.size()));
    measure.canonicalize();
    if (!space->admits(measure))
        throw Error(Errc::InadmissibleMeasure,
                    measure.get_str() + " is not a " + std::string(mode_name(space->mode())) + " scalar");
    return Quantity(std::move(measure), std::move(exps), std::move(space));
}

Quantity unit_quantity(const SpacePtr& space) { return q_new(1, ExpVec(space->dim()), space); }

namespace {

void require_same_space(const Quantity& p, const Quantity& q) {
    if (!same_space(*p.space(), *q.space())) throw Error(Errc::SpaceMismatch, "quantities from different spaces");
}

void require_equidim(const Quantity& p, const Quantity& q) {
    if (!equidim(p, q))
        throw Error(Errc::NotEquidimensional, to_string(p.exps()) + " vs " + to_string(q.exps()));
}

} // namespace

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (sgn(base) == 0) throw Error(Errc::NotInvertible, "zero raised to a negative power");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational r;
    const auto ue = static_cast<unsigned long>(e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), ue);
    r.canonicalize();
    return r;
}

Quantity mul(const Quantity& p, const Quantity& q) {
    require_same_space(p, q);
    return q_new(p.measure() * q.measure(), p.exps() + q.exps(), p.space());
}

Quantity smul(const Rational& a, const Quantity& q) { return q_new(a * q.measure(), q.exps(), q.space()); }

Quantity inv(const Quantity& q) {
    if (sgn(q.measure()) == 0) throw Error(Errc::NotInvertible, "zero quantity has no inverse");
    return q_new(Rational(1) / q.measure(), -q.exps(), q.space());
}

Quantity powi(const Quantity& q, long c) {
    if (c == 0) return unit_quantity(q.space());
    return q_new(rational_pow(q.measure(), c), Integer(c) * q.exps(), q.space());
}

bool equidim(const Quantity& p, const Quantity& q) {
    require_same_space(p, q);
    return p.exps() == q.exps();
}

Quantity add(const Quantity& p, const Quantity& q) {
    require_equidim(p, q);
    return q_new(p.measure() + q.measure(), p.exps(), p.space());
}

Quantity sub(const Quantity& p, const Quantity& q) {
    require_equidim(p, q);
    if (p.space()->mode() != ScalarMode::Real)
        throw Error(Errc::ModeForbidsNegation,
                    "subtraction needs -1 in the scalar system (mode is " +
                        std::string(mode_name(p.space()->mode())) + ")");
    return q_new(p.measure() - q.measure(), p.exps(), p.space());
}

Quantity rebase(const Quantity& q, std::span<const Quantity> new_basis, SpacePtr target) {
    const std::size_t n = q.space()->dim();
    if (new_basis.size() != n)
        throw Error(Errc::NotABasis, "need " + std::to_string(n) + " basis quantities, got " +
                                         std::to_string(new_basis.size()));
    IntMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        require_same_space(q, new_basis[j]);
        if (sgn(new_basis[j].measure()) == 0) throw Error(Errc::NotInvertible, "basis quantity with zero measure");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = new_basis[j].exps()[i];
    }
    if (abs(determinant(a)) != 1) throw Error(Errc::NotABasis, "exponent matrix is not unimodular");

    if (!target) {
        std::vector<std::string> names;
        for (std::size_t j = 0; j < n; ++j) names.push_back("u" + std::to_string(j + 1));
        target = make_space(std::move(names), q.space()->mode());
    } else if (target->dim() != n) {
        throw Error(Errc::SpaceMismatch, "target space has the wrong dimension");
    }

    // Unimodular, so the rational solution is integral.
    const auto sol = solve_square(a, q.exps().values());
    IntVector k(n);
    Rational measure = q.measure();
    for (std::size_t j = 0; j < n; ++j) {
        k[j] = (*sol)[j].get_num();
        measure /= rational_pow(new_basis[j].measure(), k[j].get_si());
    }
    return q_new(std::move(measure), ExpVec(std::move(k)), std::move(target));
}

Quantity kth_root(const Quantity& q, unsigned long k) {
    if (k == 0) throw Error(Errc::ExponentsNotDivisible, "root index must be positive");
    if (sgn(q.measure()) <= 0) throw Error(Errc::NonPositiveMeasure, "root of " + q.measure().get_str());
    IntVector e(q.exps().size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!mpz_divisible_ui_p(q.exps()[i].get_mpz_t(), k))
            throw Error(Errc::ExponentsNotDivisible, to_string(q.exps()) + " by " + std::to_string(k));
        mpz_divexact_ui(e[i].get_mpz_t(), q.exps()[i].get_mpz_t(), k);
    }
    Rational root;
    const bool exact_num = mpz_root(root.get_num_mpz_t(), q.measure().get_num_mpz_t(), k) != 0;
    const bool exact_den = mpz_root(root.get_den_mpz_t(), q.measure().get_den_mpz_t(), k) != 0;
    if (!exact_num || !exact_den)
        throw Error(Errc::MeasureNotPerfectPower,
                    q.measure().get_str() + " has no rational root of order " + std::to_string(k));
    root.canonicalize();
    return q_new(std::move(root), ExpVec(std::move(e)), q.space());
}

Quantity monomial_eval(const SpacePtr& space, const Rational& coeff, std::span<const Quantity> args,
                       std::span<const long> exps) {
    if (args.size() != exps.size()) throw Error(Errc::LengthMismatch, "one exponent per argument");
    Quantity result = q_new(coeff, ExpVec(space->dim()), space);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!same_space(*space, *args[i].space())) throw Error(Errc::SpaceMismatch, "monomial argument");
        if (exps[i] < 0 && sgn(args[i].measure()) == 0)
            throw Error(Errc::NotInvertible, "argument " + std::to_string(i + 1) + " has zero measure");
        result = mul(result, powi(args[i], exps[i]));
    }
    return result;
}

} // namespace dimcalc
