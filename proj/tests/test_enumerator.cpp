#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "walkgf/enumerator.hpp"

using namespace walkgf;

namespace {

std::vector<StepSet> nontrivial_subsets(int lo, int hi) {
    std::vector<int> universe;
    for (int s = lo; s <= hi; ++s) universe.push_back(s);
    std::vector<StepSet> out;
    for (unsigned mask = 1; mask < (1u << universe.size()); ++mask) {
        std::vector<int> steps;
        for (std::size_t k = 0; k < universe.size(); ++k)
            if (mask & (1u << k)) steps.push_back(universe[k]);
        StepSet S(steps);
        if (S.nontrivial()) out.push_back(S);
    }
    return out;
}

} // namespace

TEST_CASE("interleaved Catalan counts") {
    MomentTable mt = moment_table(StepSet({1, -1}), 6, 0);
    std::vector<long> expected = {1, 0, 1, 0, 2, 0, 5};
    for (int n = 0; n <= 6; ++n) CHECK(mt.moment(n, 0) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("five-step sum of areas prefix") {
    MomentTable mt = moment_table(StepSet({2, 1, 0, -1, -2}), 6, 1);
    std::vector<long> expected = {0, 0, 3, 18, 113, 636, 3487};
    for (int n = 0; n <= 6; ++n) CHECK(mt.moment(n, 1) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("strict Dyck areas are powers of four") {
    MomentTable mt = moment_table(StepSet({1, -1}), 10, 1, /*strict=*/true);
    for (int n = 1; n <= 5; ++n) {
        CHECK(mt.moment(2 * n, 1) == Rational(pow(Integer(4), static_cast<unsigned long>(n - 1))));
        CHECK(mt.moment(2 * n - 1, 1) == 0);
    }
}

TEST_CASE("Dyck area at length four") {
    // UUDD has area 4, UDUD has area 2
    CHECK(moment_table(StepSet({1, -1}), 4, 1).moment(4, 1) == 6);
}

TEST_CASE("brute force walks") {
    SECTION("single up-down walk") {
        auto walks = brute_force_walks(StepSet({1, -1}), 2);
        REQUIRE(walks.size() == 1);
        CHECK(walks[0].steps == std::vector<int>{1, -1});
        CHECK(walks[0].area == 1);
    }
    SECTION("three walks of length two for the five-step set") {
        auto walks = brute_force_walks(StepSet({2, 1, 0, -1, -2}), 2);
        CHECK(walks.size() == 3);
        Rational total(0);
        for (const auto& w : walks) total += w.area;
        CHECK(total == 3);
    }
    SECTION("parity leaves nothing at odd length") {
        CHECK(brute_force_walks(StepSet({1, -1}), 3).empty());
    }
    SECTION("guard rejects oversized searches") {
        CHECK_THROWS_AS(brute_force_walks(StepSet({1, 0, -1}), 20), UsageError);
    }
    SECTION("no one-step strict excursion") {
        CHECK(brute_force_walks(StepSet({1, 0, -1}), 1, true).empty());
        CHECK(brute_force_walks(StepSet({1, 0, -1}), 1, false).size() == 1);
    }
}

TEST_CASE("series vectors") {
    SECTION("Motzkin numbers") {
        auto v = series_vector(StepSet({1, 0, -1}), 5, 0);
        std::vector<long> expected = {1, 1, 2, 4, 9, 21};
        for (std::size_t k = 0; k < expected.size(); ++k) CHECK(v[k] == expected[k]);
    }
    SECTION("strict Motzkin areas, t^2/(1-2t-3t^2)") {
        auto v = series_vector(StepSet({1, 0, -1}), 6, 1, true);
        std::vector<long> expected = {0, 0, 1, 2, 7, 20, 61};
        for (std::size_t k = 0; k < expected.size(); ++k) CHECK(v[k] == expected[k]);
    }
    SECTION("empty walk") {
        for (auto S : {StepSet({1, -1}), StepSet({2, 0, -1}), StepSet({3})})
            CHECK(series_vector(S, 0, 0)[0] == 1);
    }
}

TEST_CASE("oracle equivalence on small step sets") {
    for (const StepSet& S : nontrivial_subsets(-2, 2)) {
        for (bool strict : {false, true}) {
            MomentTable mt = moment_table(S, 7, 2, strict);
            for (int n = 0; n <= 7; ++n) {
                auto walks = brute_force_walks(S, n, strict);
                Rational count(0), area(0), area2(0);
                for (const auto& w : walks) {
                    count += 1;
                    area += w.area;
                    area2 += w.area * w.area;
                }
                CHECK(mt.moment(n, 0) == count);
                CHECK(mt.moment(n, 1) == area);
                CHECK(mt.moment(n, 2) == area2);
            }
        }
    }
}

TEST_CASE("reversal symmetry") {
    for (const StepSet& S :
         {StepSet({2, -1}), StepSet({1, 2, -1}), StepSet({2, 0, -1}), StepSet({1, -2})}) {
        for (bool strict : {false, true}) {
            MomentTable a = moment_table(S, 9, 2, strict);
            MomentTable b = moment_table(S.reversed(), 9, 2, strict);
            for (int n = 0; n <= 9; ++n)
                for (int r = 0; r <= 2; ++r) CHECK(a.moment(n, r) == b.moment(n, r));
        }
    }
}

TEST_CASE("monotone support") {
    for (const StepSet& S : nontrivial_subsets(-2, 2)) {
        MomentTable mt = moment_table(S, 8, 2);
        for (int n = 0; n <= 8; ++n)
            if (mt.moment(n, 0) == 0)
                for (int r = 1; r <= 2; ++r) CHECK(mt.moment(n, r) == 0);
    }
}

TEST_CASE("weak walks decompose into flat steps and strict excursions") {
    // F_weak = 1 / (1 - [0 in S] t - G_strict) as truncated series
    const int N = 12;
    for (const StepSet& S : nontrivial_subsets(-2, 2)) {
        auto weak = series_vector(S, N, 0, false);
        auto strict = series_vector(S, N, 0, true);
        std::vector<Rational> denom(N + 1, Rational(0));
        denom[0] = 1;
        if (S.has_zero()) denom[1] -= 1;
        for (int n = 0; n <= N; ++n) denom[static_cast<std::size_t>(n)] -= strict[static_cast<std::size_t>(n)];
        // convolution weak * denom should be 1
        for (int n = 0; n <= N; ++n) {
            Rational acc(0);
            for (int k = 0; k <= n; ++k)
                acc += weak[static_cast<std::size_t>(k)] * denom[static_cast<std::size_t>(n - k)];
            CHECK(acc == (n == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("trivial step sets") {
    SECTION("only a flat step: every length has one walk of area zero") {
        MomentTable mt = moment_table(StepSet({0}), 5, 1);
        for (int n = 0; n <= 5; ++n) {
            CHECK(mt.moment(n, 0) == 1);
            CHECK(mt.moment(n, 1) == 0);
        }
        MomentTable st = moment_table(StepSet({0}), 5, 1, true);
        for (int n = 0; n <= 5; ++n) CHECK(st.moment(n, 0) == 0);
    }
    SECTION("only rising steps: nothing but the empty walk") {
        MomentTable mt = moment_table(StepSet({1, 2}), 5, 0);
        CHECK(mt.moment(0, 0) == 1);
        for (int n = 1; n <= 5; ++n) CHECK(mt.moment(n, 0) == 0);
    }
    SECTION("empty step set") {
        MomentTable mt = moment_table(StepSet({}), 3, 0);
        CHECK(mt.moment(0, 0) == 1);
        CHECK(mt.moment(1, 0) == 0);
    }
}

TEST_CASE("strict table boundary cells") {
    MomentTable mt = moment_table(StepSet({1, -1}), 3, 2, true);
    CHECK(mt.moment(0, 0) == 0); // the empty walk is not a strict excursion
    CHECK(mt.moment(1, 0) == 0);
    CHECK(mt.moment(2, 0) == 1);
}
