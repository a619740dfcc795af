#include <optional>

#include <doctest.h>

#include "dimcalc/quantity.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dimcalc;
using testutil::error_of;
using testutil::q;

namespace {

const SpacePtr lt_real = make_space({"L", "T"}, ScalarMode::Real);
const SpacePtr lt_pos = make_space({"L", "T"}, ScalarMode::Positive);
const SpacePtr ltm_pos = make_space({"L", "T", "M"}, ScalarMode::Positive);

Quantity Q(const Rational& mu, ExpVec e, const SpacePtr& s = lt_real) { return q_new(mu, std::move(e), s); }

std::vector<Quantity> as_quantities(const std::vector<oracle::Vec>& cols, const SpacePtr& space, oracle::Rng& rng) {
    std::vector<Quantity> out;
    for (const auto& c : cols) out.push_back(q_new(rng.positive_rational(), ExpVec(oracle::to_int(c)), space));
    return out;
}

} // namespace

TEST_SUITE("quantity") {

TEST_CASE("spaces") {
    CHECK(lt_real->dim() == 2);
    CHECK(mode_name(ScalarMode::NonNegative) == "nonnegative");
    CHECK(error_of([] { make_space({"L", "L"}); }) == Errc::DuplicateName);
    CHECK(error_of([] { make_space({"L", ""}); }) == Errc::DuplicateName);
    CHECK(make_space({})->dim() == 0);
    CHECK(lt_pos->admits(q(1, 3)));
    CHECK_FALSE(lt_pos->admits(q(0)));
    CHECK(make_space({"L"}, ScalarMode::NonNegative)->admits(q(0)));
    CHECK_FALSE(make_space({"L"}, ScalarMode::NonNegative)->admits(q(-1)));
}

TEST_CASE("q_new") {
    const auto one = Q(1, ExpVec{0, 0});
    CHECK(one == unit_quantity(lt_real));
    CHECK(measure_of(one) == 1);
    CHECK(error_of([] { Q(-2, ExpVec{1, 0}, lt_pos); }) == Errc::InadmissibleMeasure);
    CHECK(error_of([] { Q(0, ExpVec{1, 0}, lt_pos); }) == Errc::InadmissibleMeasure);
    const auto three_b1 = Q(3, ExpVec{1, 0});
    CHECK(measure_of(three_b1) == 3);
    CHECK(dimension_of(three_b1) == ExpVec{1, 0});
    CHECK(error_of([] { Q(1, ExpVec{1, 0, 0}); }) == Errc::LengthMismatch);
}

TEST_CASE("mul") {
    CHECK(mul(Q(2, {1, 0}), Q(3, {0, 1})) == Q(6, {1, 1}));
    const auto x = Q(q(7, 2), {1, -2});
    CHECK(mul(x, unit_quantity(lt_real)) == x);
    CHECK(mul(Q(2, {1, 0}), Q(q(1, 2), {-1, 0})) == unit_quantity(lt_real));
    CHECK(error_of([] { mul(Q(1, {1, 0}), Q(1, {1, 0}, lt_pos)); }) == Errc::SpaceMismatch);
}

TEST_CASE("smul") {
    CHECK(smul(5, Q(2, {1, 0})) == Q(10, {1, 0}));
    const auto x = Q(q(7, 2), {1, -2});
    CHECK(smul(1, x) == x);
    CHECK(smul(0, Q(1, {0, 1})) == Q(0, {0, 1}));
    CHECK(error_of([] { smul(-1, Q(1, {0, 1}, lt_pos)); }) == Errc::InadmissibleMeasure);
}

TEST_CASE("inv and powi") {
    CHECK(inv(Q(2, {1, 0})) == Q(q(1, 2), {-1, 0}));
    CHECK(inv(unit_quantity(lt_real)) == unit_quantity(lt_real));
    CHECK(error_of([] { inv(Q(0, {1, 0})); }) == Errc::NotInvertible);

    CHECK(powi(Q(2, {1, 0}), 3) == Q(8, {3, 0}));
    CHECK(powi(Q(q(7, 2), {1, -2}), 0) == unit_quantity(lt_real));
    CHECK(powi(Q(0, {1, 0}), 0) == unit_quantity(lt_real));
    CHECK(powi(Q(2, {1, 0}), -1) == Q(q(1, 2), {-1, 0}));
    CHECK(powi(Q(2, {1, 0}), -1) == inv(Q(2, {1, 0})));
    CHECK(error_of([] { powi(Q(0, {1, 0}), -2); }) == Errc::NotInvertible);
}

TEST_CASE("equidim") {
    CHECK(equidim(Q(2, {1, 0}), Q(10, {1, 0})));
    CHECK(equidim(Q(1, {0, 1}), Q(0, {0, 1})));
    const auto lm_real = make_space({"L", "M"}, ScalarMode::Real);
    CHECK_FALSE(equidim(Q(0, {1, 0}, lm_real), Q(0, {0, 1}, lm_real)));
    CHECK(error_of([] { equidim(Q(1, {1, 0}), Q(1, {1, 0}, lt_pos)); }) == Errc::SpaceMismatch);
}

TEST_CASE("add and sub") {
    CHECK(add(Q(2, {1, 0}), Q(3, {1, 0})) == Q(5, {1, 0}));
    const auto x = Q(q(7, 2), {1, -2});
    CHECK(add(x, smul(0, x)) == x);
    CHECK(add(smul(0, x), x) == x);
    CHECK(error_of([] { add(Q(2, {1, 0}), Q(1, {0, 1})); }) == Errc::NotEquidimensional);

    CHECK(sub(Q(5, {1, 0}), Q(2, {1, 0})) == Q(3, {1, 0}));
    CHECK(sub(x, x) == smul(0, x));
    CHECK(sub(Q(2, {1, 0}), Q(5, {1, 0})) == Q(-3, {1, 0}));
    CHECK(error_of([] { sub(Q(5, {1, 0}, lt_pos), Q(2, {1, 0}, lt_pos)); }) == Errc::ModeForbidsNegation);
    CHECK(error_of([] { sub(Q(5, {1, 0}), Q(2, {0, 1})); }) == Errc::NotEquidimensional);
}

TEST_CASE("measure and dimension") {
    const auto ltm = make_space({"L", "T", "M"}, ScalarMode::Real);
    CHECK(measure_of(Q(q(7, 2), {1, -2, 0}, ltm)) == q(7, 2));
    CHECK(measure_of(unit_quantity(ltm)) == 1);
    CHECK(measure_of(Q(0, {1, 0, 0}, ltm)) == 0);
    CHECK(dimension_of(Q(3, {1, -1})) == ExpVec{1, -1});
    CHECK(dimension_of(Q(0, {1, 0, 0}, ltm)) == ExpVec{1, 0, 0});
    CHECK(dimension_of(mul(Q(3, {1, -1}), Q(2, {-1, 1}))).is_zero());
}

TEST_CASE("rebase examples") {
    const auto cm_space = make_space({"cm"});
    const auto cm200 = q_new(200, ExpVec{1}, cm_space);
    const Quantity metre[] = {q_new(100, ExpVec{1}, cm_space)};
    const auto in_m = rebase(cm200, metre, make_space({"m"}));
    CHECK(measure_of(in_m) == 2);
    CHECK(dimension_of(in_m) == ExpVec{1});
    CHECK(in_m.space()->base_names() == std::vector<std::string>{"m"});

    const auto x = Q(q(7, 2), {1, -2}, lt_pos);
    const Quantity own[] = {Q(1, {1, 0}, lt_pos), Q(1, {0, 1}, lt_pos)};
    CHECK(rebase(x, own, lt_pos) == x);

    const Quantity skew[] = {Q(1, {1, 1}, lt_pos), Q(1, {0, 1}, lt_pos)};
    const auto y = rebase(Q(1, {1, 1}, lt_pos), skew);
    CHECK(dimension_of(y) == ExpVec{1, 0});
    CHECK(measure_of(y) == 1);
    CHECK(y.space()->base_names() == std::vector<std::string>{"u1", "u2"});
}

TEST_CASE("rebase errors") {
    const auto x = Q(1, {1, 0});
    const Quantity singular[] = {Q(1, {1, 1}), Q(1, {2, 2})};
    CHECK(error_of([&] { rebase(x, singular); }) == Errc::NotABasis);
    const Quantity scaled[] = {Q(1, {2, 0}), Q(1, {0, 1})};
    CHECK(error_of([&] { rebase(x, scaled); }) == Errc::NotABasis);
    const Quantity too_few[] = {Q(1, {1, 0})};
    CHECK(error_of([&] { rebase(x, too_few); }) == Errc::NotABasis);
    const Quantity zero[] = {Q(0, {1, 0}), Q(1, {0, 1})};
    CHECK(error_of([&] { rebase(x, zero); }) == Errc::NotInvertible);
    const Quantity other[] = {Q(1, {1, 0}, lt_pos), Q(1, {0, 1}, lt_pos)};
    CHECK(error_of([&] { rebase(x, other); }) == Errc::SpaceMismatch);
}

TEST_CASE("kth_root") {
    CHECK(kth_root(Q(9, {2, 0}), 2) == Q(3, {1, 0}));
    CHECK(kth_root(Q(q(8, 27), {3, -6}), 3) == Q(q(2, 3), {1, -2}));
    CHECK(kth_root(unit_quantity(lt_pos), 5) == unit_quantity(lt_pos));
    CHECK(error_of([] { kth_root(Q(2, {2, 0}), 2); }) == Errc::MeasureNotPerfectPower);
    CHECK(error_of([] { kth_root(Q(9, {1, 0}), 2); }) == Errc::ExponentsNotDivisible);
    CHECK(error_of([] { kth_root(Q(-9, {2, 0}), 2); }) == Errc::NonPositiveMeasure);
    CHECK(error_of([] { kth_root(Q(0, {2, 0}), 2); }) == Errc::NonPositiveMeasure);
    CHECK(error_of([] { kth_root(Q(9, {2, 0}), 0); }) == Errc::ExponentsNotDivisible);
}

TEST_CASE("monomial_eval") {
    const Quantity args[] = {Q(2, {1, 0}), Q(3, {0, 1})};
    const long exps[] = {1, -1};
    CHECK(monomial_eval(lt_real, 1, args, exps) == Q(q(2, 3), {1, -1}));
    CHECK(monomial_eval(lt_real, q(5, 4), {}, {}) == Q(q(5, 4), {0, 0}));

    const auto ltm = make_space({"L", "T", "M"});
    const Quantity mc[] = {q_new(2, ExpVec{0, 0, 1}, ltm), q_new(3, ExpVec{1, -1, 0}, ltm)};
    const long e_mc2[] = {1, 2};
    const auto energy = monomial_eval(ltm, 1, mc, e_mc2);
    CHECK(dimension_of(energy) == ExpVec{2, -2, 1});
    CHECK(measure_of(energy) == 18);

    const Quantity zero[] = {Q(0, {1, 0})};
    const long neg[] = {-1};
    CHECK(error_of([&] { monomial_eval(lt_real, 1, zero, neg); }) == Errc::NotInvertible);
    const long two[] = {1, 2};
    CHECK(error_of([&] { monomial_eval(lt_real, 1, zero, two); }) == Errc::LengthMismatch);
}

TEST_CASE("homomorphism and cancellation properties") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = Q(rng.rational(), rng.expvec(2));
        const auto r = Q(rng.rational(), rng.expvec(2));
        const auto a = rng.rational();
        CHECK(measure_of(mul(p, r)) == measure_of(p) * measure_of(r));
        CHECK(measure_of(smul(a, p)) == a * measure_of(p));
        const auto same_dim = Q(rng.rational(), dimension_of(p));
        CHECK(measure_of(add(p, same_dim)) == measure_of(p) + measure_of(same_dim));
        CHECK(add(p, same_dim) == add(same_dim, p));

        // scalar cancellation
        const auto b = rng.rational();
        if (measure_of(p) != 0) CHECK((smul(a, p) == smul(b, p)) == (a == b));

        // congruence
        const auto p2 = Q(rng.rational(), dimension_of(p));
        const auto r2 = Q(rng.rational(), dimension_of(r));
        CHECK(equidim(mul(p, r), mul(p2, r2)));
    }
}

TEST_CASE("rebase properties") {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 3));
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
        const auto space = make_space(names);
        const auto basis = as_quantities(rng.unimodular(n), space, rng);
        const auto fresh = rebase(unit_quantity(space), basis);
        const auto& new_space = fresh.space();

        // quasiscalars keep their measure
        const auto qs = q_new(rng.positive_rational(), ExpVec(n), space);
        CHECK(measure_of(rebase(qs, basis, new_space)) == measure_of(qs));

        // round trip through the new basis and back
        const auto x = q_new(rng.positive_rational(), rng.expvec(n), space);
        const auto there = rebase(x, basis, new_space);
        std::vector<Quantity> old_in_new;
        for (std::size_t i = 0; i < n; ++i) {
            ExpVec e(n);
            e[i] = 1;
            old_in_new.push_back(rebase(q_new(1, e, space), basis, new_space));
        }
        CHECK(rebase(there, old_in_new, space) == x);

        // monomials commute with rebasing
        const auto nargs = static_cast<std::size_t>(rng.integer(0, 3));
        std::vector<Quantity> args, rebased;
        std::vector<long> exps;
        for (std::size_t i = 0; i < nargs; ++i) {
            args.push_back(q_new(rng.positive_rational(), rng.expvec(n), space));
            rebased.push_back(rebase(args.back(), basis, new_space));
            exps.push_back(rng.integer(-3, 3));
        }
        const auto coeff = rng.positive_rational();
        CHECK(rebase(monomial_eval(space, coeff, args, exps), basis, new_space) ==
              monomial_eval(new_space, coeff, rebased, exps));
    }
}

TEST_CASE("root inversion") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = static_cast<unsigned long>(rng.integer(1, 4));
        const auto base = q_new(rng.positive_rational(), rng.expvec(3), ltm_pos);
        const auto power = powi(base, static_cast<long>(k));
        CHECK(kth_root(power, k) == base);
        const auto nudged = smul(q(rng.integer(2, 9)), power);
        std::optional<Quantity> root;
        try {
            root = kth_root(nudged, k);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::MeasureNotPerfectPower);
        }
        if (root) CHECK(powi(*root, static_cast<long>(k)) == nudged);
    }
}

} // TEST_SUITE
