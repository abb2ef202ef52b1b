#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "walkgf/groebner.hpp"

using namespace walkgf;

namespace {

Polynomial random_poly(std::mt19937& rng, const TablePtr& table) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> e;
        for (std::size_t v = 0; v < table->size(); ++v)
            e.push_back(static_cast<std::uint32_t>(exp(rng)));
        terms.push_back({Monomial(std::move(e)), Rational(coef(rng))});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

// The elimination worked out in full: plex(Y,Z,X) on the made-up system
// {X=Y^2+Z^2+1, Y=X^2+3Z^2+t, Z=XYZ+t+1} yields this degree-12 relation.
const char* kDegree12 =
    "X^12 + 6*X^11 + 4*t*X^10 + 3*X^10 + 18*t*X^9 - 21*X^9 + 6*t^2*X^8 - 8*X^8"
    " + 18*t^2*X^7 - 44*t*X^7 - 9*X^7"
    " + 4*t^3*X^6 + 9*t^2*X^6 + 20*t*X^6 + 60*X^6"
    " + 6*t^3*X^5 + 29*t^2*X^5 + 96*t*X^5 + 43*X^5"
    " + t^4*X^4 + 30*t^3*X^4 + 16*t^2*X^4 - 14*t*X^4 - 24*X^4"
    " + 52*t^3*X^3 + 177*t^2*X^3 + 232*t*X^3 + 50*X^3"
    " + 18*t^4*X^2 - 12*t^3*X^2 + 89*t^2*X^2 + 242*t*X^2 + 149*X^2"
    " + 54*t^3*X + 12*t^2*X - 150*t*X - 105*X"
    " + 81*t^4 + 378*t^3 + 612*t^2 + 396*t + 99";

std::vector<Polynomial> worked_example(const TablePtr& table) {
    return {Polynomial::parse(table, "X - Y^2 - Z^2 - 1"),
            Polynomial::parse(table, "Y - X^2 - 3*Z^2 - t"),
            Polynomial::parse(table, "Z - X*Y*Z - t - 1")};
}

} // namespace

TEST_CASE("s-polynomial basics") {
    TablePtr table = VariableTable::make({"x", "y"});
    Polynomial x2 = Polynomial::parse(table, "x^2");
    Polynomial xy = Polynomial::parse(table, "x*y");
    CHECK(s_polynomial(x2, xy).is_zero());
    CHECK(s_polynomial(Polynomial::parse(table, "x - 1"), Polynomial::parse(table, "x - 2")) ==
          Polynomial::constant(table, Rational(1)));
    std::mt19937 rng(5);
    for (int k = 0; k < 20; ++k) {
        Polynomial f = random_poly(rng, table);
        if (f.is_zero()) continue;
        CHECK(s_polynomial(f, f).is_zero());
    }
    CHECK_THROWS_AS(s_polynomial(Polynomial(table), x2), UsageError);
}

TEST_CASE("reduction normal form") {
    TablePtr table = VariableTable::make({"x", "y"});
    Polynomial x = Polynomial::parse(table, "x");
    CHECK(reduce(Polynomial::parse(table, "x^2"), std::vector<Polynomial>{x}).is_zero());
    // substitute x -> y under lex x > y
    CHECK(reduce(Polynomial::parse(table, "x^2 + y"),
                 std::vector<Polynomial>{Polynomial::parse(table, "x - y")}) ==
          Polynomial::parse(table, "y^2 + y"));
    Polynomial f = Polynomial::parse(table, "3*x^2*y - 1/2*x + 4");
    CHECK(reduce(f, std::vector<Polynomial>{}) == f);
}

TEST_CASE("reduction keeps f - r in the ideal") {
    TablePtr table = VariableTable::make({"x", "y"});
    Polynomial g = Polynomial::parse(table, "2*x - 1");
    Polynomial f = Polynomial::parse(table, "x");
    Polynomial r = reduce(f, std::vector<Polynomial>{g});
    CHECK(r == Polynomial::constant(table, Rational(1, 2)));
    // f - r = (1/2) * g
    CHECK(f - r == g * Rational(1, 2));
}

TEST_CASE("buchberger on tiny systems") {
    TablePtr table = VariableTable::make({"y", "x", "t"});
    SECTION("chain of substitutions") {
        std::vector<Polynomial> gens = {Polynomial::parse(table, "x - t"),
                                        Polynomial::parse(table, "y - x")};
        IdealBasis basis = buchberger(gens);
        CHECK(basis.is_groebner);
        REQUIRE(basis.generators.size() == 2);
        CHECK(basis.generators[0] == Polynomial::parse(table, "x - t"));
        CHECK(basis.generators[1] == Polynomial::parse(table, "y - t"));
        for (const auto& g : gens) CHECK(reduce(g, basis).is_zero());
    }
    SECTION("ideal membership collapses generators") {
        std::vector<Polynomial> gens = {Polynomial::parse(table, "x^2 - 1"),
                                        Polynomial::parse(table, "x - 1")};
        IdealBasis basis = buchberger(gens);
        REQUIRE(basis.generators.size() == 1);
        CHECK(basis.generators[0] == Polynomial::parse(table, "x - 1"));
    }
    SECTION("unit ideal") {
        IdealBasis basis = buchberger({Polynomial::constant(table, Rational(1))});
        REQUIRE(basis.generators.size() == 1);
        CHECK(basis.generators[0] == Polynomial::constant(table, Rational(1)));
    }
}

TEST_CASE("groebner property and membership on random ideals") {
    TablePtr table = VariableTable::make({"x", "y", "z"});
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            Polynomial p = random_poly(rng, table);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        IdealBasis basis = buchberger(gens);
        // every input generator lies in the ideal of the output
        for (const auto& g : gens) CHECK(reduce(g, basis).is_zero());
        // every pairwise S-polynomial reduces to zero
        if (basis.generators.size() <= 12) {
            for (std::size_t i = 0; i < basis.generators.size(); ++i)
                for (std::size_t j = i + 1; j < basis.generators.size(); ++j)
                    CHECK(reduce(s_polynomial(basis.generators[i], basis.generators[j]), basis)
                              .is_zero());
        }
        // leading monomials of a reduced basis do not divide one another
        for (std::size_t i = 0; i < basis.generators.size(); ++i)
            for (std::size_t j = 0; j < basis.generators.size(); ++j)
                if (i != j)
                    CHECK_FALSE(basis.generators[i].leading_monomial().divides(
                        basis.generators[j].leading_monomial()));
    }
}

TEST_CASE("determinism of completion") {
    TablePtr table = VariableTable::make({"Y", "Z", "X", "t"});
    auto gens = worked_example(table);
    auto a = buchberger(gens);
    auto b = buchberger(gens);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        CHECK(a.generators[i] == b.generators[i]);
}

TEST_CASE("elimination of a triangular pair") {
    TablePtr table = VariableTable::make({"y", "x", "t"});
    std::vector<Polynomial> gens = {Polynomial::parse(table, "x - y"),
                                    Polynomial::parse(table, "y - t")};
    auto kept = eliminate(gens, std::vector<std::string>{"x", "t"});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == Polynomial::parse(table, "x - t"));
}

TEST_CASE("elimination yields the Dyck quadratic") {
    TablePtr table = VariableTable::make({"g", "f", "t"});
    std::vector<Polynomial> gens = {Polynomial::parse(table, "f - 1 - g*f"),
                                    Polynomial::parse(table, "g - t^2*f")};
    auto kept = eliminate(gens, std::vector<std::string>{"f", "t"});
    REQUIRE(!kept.empty());
    CHECK(kept[0] == Polynomial::parse(table, "t^2*f^2 - f + 1"));
}

TEST_CASE("elimination reproduces the degree-12 worked example") {
    TablePtr table = VariableTable::make({"Y", "Z", "X", "t"});
    auto gens = worked_example(table);
    SECTION("with presubstitution") {
        auto kept = eliminate(gens, std::vector<std::string>{"X", "t"});
        REQUIRE(!kept.empty());
        CHECK(kept[0] == Polynomial::parse(table, kDegree12));
    }
    SECTION("plain completion, no presubstitution") {
        EliminateOptions options;
        options.presubstitute = false;
        auto kept = eliminate(gens, std::vector<std::string>{"X", "t"}, options);
        REQUIRE(!kept.empty());
        CHECK(kept[0] == Polynomial::parse(table, kDegree12));
    }
}

TEST_CASE("kept variables must be smallest in the order") {
    TablePtr table = VariableTable::make({"y", "x", "t"});
    std::vector<Polynomial> gens = {Polynomial::parse(table, "x - y")};
    CHECK_THROWS_AS(eliminate(gens, std::vector<std::string>{"y", "t"}), UsageError);
}

TEST_CASE("budget errors carry statistics") {
    TablePtr table = VariableTable::make({"Y", "Z", "X", "t"});
    auto gens = worked_example(table);
    EliminateOptions options;
    options.presubstitute = false;
    options.budget.max_pairs = 3;
    try {
        eliminate(gens, std::vector<std::string>{"X", "t"}, options);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.stats.pairs_considered >= 3);
    }
    options.budget = {};
    options.budget.max_total_degree = 2;
    CHECK_THROWS_AS(eliminate(gens, std::vector<std::string>{"X", "t"}, options), BudgetError);
}
