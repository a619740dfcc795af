#include <doctest.h>

#include "dimcalc/dimension.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dimcalc;
using testutil::error_of;
using testutil::iv;

namespace {

using Index = std::vector<std::size_t>;

DimSet make_set(std::size_t n, std::vector<std::pair<std::string, ExpVec>> members) {
    DimSet s(n);
    for (auto& [name, dim] : members) s.add(name, dim);
    return s;
}

DimSet pendulum() {
    return make_set(3, {{"t", {0, 1, 0}}, {"l", {1, 0, 0}}, {"m", {0, 0, 1}}, {"theta", {0, 0, 0}}, {"g", {1, -2, 0}}});
}

DimSet three_models() {
    return make_set(2, {{"q", {1, 0}}, {"q1", {1, 1}}, {"q2", {2, 0}}, {"q3", {0, 1}}});
}

} // namespace

TEST_SUITE("dimension") {

TEST_CASE("DimSet basics") {
    auto s = pendulum();
    CHECK(s.size() == 5);
    CHECK(s.index_of("g") == 4);
    CHECK_FALSE(s.find("x"));
    CHECK(error_of([&] { s.index_of("x"); }) == Errc::UnknownName);
    CHECK(error_of([&] { s.add("t", ExpVec{0, 0, 0}); }) == Errc::DuplicateName);
    CHECK(error_of([&] { s.add("u", ExpVec{0, 0}); }) == Errc::LengthMismatch);
    const auto sub = s.subset({1, 4});
    CHECK(sub.names() == std::vector<std::string>{"l", "g"});
    CHECK(s.matrix().rows() == 3);
    CHECK(s.matrix().cols() == 5);
}

TEST_CASE("depends_on") {
    const auto p = pendulum();
    auto w = depends_on(p.dim(0), p.subset({1, 2, 4}));
    REQUIRE(w);
    CHECK(w->k == 2);
    CHECK(w->coeffs == iv({1, 0, -1}));

    w = depends_on(ExpVec{0, 0}, DimSet(2));
    REQUIRE(w);
    CHECK(w->k == 1);
    CHECK(w->coeffs.empty());

    const auto first = make_set(2, {{"q1", {1, 1}}});
    CHECK_FALSE(depends_on(ExpVec{1, 0}, first));

    const auto dependent = make_set(2, {{"a", {1, 1}}, {"b", {2, 2}}});
    CHECK(error_of([&] { depends_on(ExpVec{1, 0}, dependent); }) == Errc::DependentColumns);
}

TEST_CASE("independent_set and group_rank") {
    CHECK(independent_set(make_set(2, {{"q1", {1, 1}}, {"q2", {2, 0}}})));
    CHECK_FALSE(independent_set(make_set(3, {{"d", {1, 0, 0}}, {"m1", {0, 0, 1}}, {"m2", {0, 0, 1}}})));
    CHECK(independent_set(DimSet(3)));

    CHECK(group_rank(three_models()) == 2);
    CHECK(group_rank(pendulum()) == 3);
    CHECK(group_rank(make_set(2, {{"z", {0, 0}}})) == 0);
}

TEST_CASE("maximal independent subsets") {
    CHECK(maximal_independent_subsets_excluding(three_models(), "q") ==
          std::vector<Index>{{2, 3}, {1, 3}, {1, 2}});

    const auto first = make_set(2, {{"q", {1, 0}}, {"q1", {1, 1}}});
    CHECK(maximal_independent_subsets_excluding(first, "q").empty());

    const auto rect = make_set(1, {{"a", {2}}, {"l", {1}}, {"s", {1}}});
    const auto sets = maximal_independent_subsets_excluding(rect, "a");
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == Index{2});
    CHECK(sets[1] == Index{1});

    CHECK(maximal_independent_subsets_excluding(pendulum(), "t") == std::vector<Index>{{1, 2, 4}});
    CHECK(error_of([] { maximal_independent_subsets_excluding(pendulum(), "x"); }) == Errc::UnknownName);

    // quasiscalar dependent with nothing else: the empty set qualifies
    const auto lone = make_set(1, {{"pi", {0}}});
    CHECK(maximal_independent_subsets_excluding(lone, "pi") == std::vector<Index>{{}});
}

TEST_CASE("quantity dependence matches dimension dependence") {
    // Construct invertible quantities q_j and p = lambda * prod q_j^{k_j}, then
    // p^k for the witness. Dimension dependence must find the same witness.
    oracle::Rng rng(404);
    const auto space = make_space({"A", "B", "C"});
    int hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<std::size_t>(rng.integer(0, 3));
        std::vector<oracle::Vec> cols;
        for (std::size_t j = 0; j < r; ++j) cols.push_back(rng.vec(3, -2, 2));
        if (!oracle::brute_independent(cols, 3)) continue;
        DimSet s(3);
        std::vector<Quantity> qs;
        for (std::size_t j = 0; j < r; ++j) {
            s.add("q" + std::to_string(j), ExpVec(oracle::to_int(cols[j])));
            qs.push_back(q_new(rng.positive_rational(), ExpVec(oracle::to_int(cols[j])), space));
        }

        // a quantity whose k-th power is a monomial in the q_j
        const long k = rng.integer(1, 3);
        ExpVec dim(3);
        for (std::size_t j = 0; j < r; ++j) dim += Integer(rng.integer(-2, 2)) * ExpVec(oracle::to_int(cols[j]));
        bool divisible = true;
        for (std::size_t i = 0; i < 3; ++i) divisible = divisible && mpz_divisible_ui_p(dim[i].get_mpz_t(), k);
        if (divisible)
            for (std::size_t i = 0; i < 3; ++i) mpz_divexact_ui(dim[i].get_mpz_t(), dim[i].get_mpz_t(), k);

        const auto w = depends_on(dim, s);
        REQUIRE(w);
        ++hits;
        // The quantity-level statement: p^k / prod q_j^{k_j} is a scalar multiple of 1_Q.
        const auto p = q_new(rng.positive_rational(), dim, space);
        std::vector<long> exps;
        for (const auto& c : w->coeffs) exps.push_back(-c.get_si());
        auto rest = mul(powi(p, w->k.get_si()), monomial_eval(space, 1, qs, exps));
        CHECK(dimension_of(rest).is_zero());

        // and a perturbed dimension outside the span has no witness at quantity level either
        ExpVec off = dim;
        off[static_cast<std::size_t>(rng.integer(0, 2))] += 1;
        const auto w_off = depends_on(off, s);
        if (!w_off) {
            for (long kk = 1; kk <= 4; ++kk) {
                const auto pk = powi(q_new(1, off, space), kk);
                bool found = false;
                for (long a = -3; a <= 3 && !found; ++a)
                    for (long b = -3; b <= 3 && !found; ++b)
                        for (long c = -3; c <= 3 && !found; ++c) {
                            const long e[] = {a, b, c};
                            auto m = monomial_eval(space, 1, qs, std::span<const long>(e, r));
                            found = equidim(pk, m);
                        }
                CHECK_FALSE(found);
            }
        }
    }
    CHECK(hits > 50);
}

TEST_CASE("family properties on random heads") {
    oracle::Rng rng(8080);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 3));
        const auto nheads = static_cast<std::size_t>(rng.integer(1, 5));
        DimSet heads(rows);
        for (std::size_t j = 0; j < nheads; ++j) heads.add("h" + std::to_string(j), ExpVec(oracle::to_int(rng.vec(rows, -2, 2))));
        const auto sets = maximal_independent_subsets_excluding(heads, "h0");
        std::vector<std::size_t> pool;
        for (std::size_t j = 1; j < nheads; ++j) pool.push_back(j);
        const auto r = group_rank(heads.subset(pool));
        for (const auto& s : sets) {
            CHECK(s.size() == r);
            const auto sub = heads.subset(s);
            CHECK(independent_set(sub));
            for (std::size_t j = 0; j < nheads; ++j) {
                const auto w = depends_on(heads.dim(j), sub);
                REQUIRE(w);
                for (std::size_t i = 0; i < rows; ++i) {
                    Integer sum = 0;
                    for (std::size_t c = 0; c < s.size(); ++c) sum += w->coeffs[c] * sub.dim(c)[i];
                    CHECK(sum == w->k * heads.dim(j)[i]);
                }
            }
        }
        // nonempty exactly when the excluded head lies in the span of the others
        const auto h0_dependent = rank_int(heads.matrix()) == r;
        CHECK(sets.empty() != h0_dependent);
    }
}

} // TEST_SUITE
