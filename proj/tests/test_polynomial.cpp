#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "walkgf/polynomial.hpp"

using namespace walkgf;

namespace {

TablePtr xyt() {
    static TablePtr t = VariableTable::make({"x", "y", "t"});
    return t;
}

Polynomial random_poly(std::mt19937& rng, const TablePtr& table, int max_terms = 5,
                       int max_exp = 3, int coef_range = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> num(-coef_range, coef_range);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        std::vector<std::uint32_t> e;
        for (std::size_t v = 0; v < table->size(); ++v)
            e.push_back(static_cast<std::uint32_t>(exp(rng)));
        Rational c(num(rng), den(rng));
        c.canonicalize();
        terms.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return Polynomial::from_terms(table, std::move(terms));
}

} // namespace

TEST_CASE("cancellation to zero") {
    auto table = xyt();
    Polynomial a = Polynomial::parse(table, "x + 1");
    Polynomial b = Polynomial::parse(table, "-x - 1");
    CHECK((a + b).is_zero());
}

TEST_CASE("expansion of t^2*X^2 times (4t^2-1)^2") {
    TablePtr table = VariableTable::make({"X", "t"});
    Polynomial a = Polynomial::parse(table, "t^2*X^2");
    Polynomial f = Polynomial::parse(table, "4*t^2 - 1");
    Polynomial expected = Polynomial::parse(table, "16*t^6*X^2 - 8*t^4*X^2 + t^2*X^2");
    CHECK(a * f * f == expected);
}

TEST_CASE("multiplicative identity") {
    auto table = xyt();
    std::mt19937 rng(12345);
    Polynomial one = Polynomial::constant(table, Rational(1));
    for (int k = 0; k < 20; ++k) {
        Polynomial p = random_poly(rng, table);
        CHECK(p * one == p);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto table = xyt();
    std::mt19937 rng(99);
    for (int k = 0; k < 40; ++k) {
        Polynomial a = random_poly(rng, table);
        Polynomial b = random_poly(rng, table);
        Polynomial c = random_poly(rng, table);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("formal derivative") {
    TablePtr table = VariableTable::make({"X", "t"});
    Polynomial p = Polynomial::parse(table, "t^2*X^2 - X + 1");
    CHECK(p.derivative("t") == Polynomial::parse(table, "2*t*X^2"));
    CHECK(p.derivative("X") == Polynomial::parse(table, "2*t^2*X - 1"));
    CHECK(Polynomial::constant(table, Rational(7)).derivative("t").is_zero());
    CHECK_THROWS_AS(p.derivative("z"), UsageError);
}

TEST_CASE("derivative satisfies the product rule") {
    auto table = xyt();
    std::mt19937 rng(7);
    for (int k = 0; k < 25; ++k) {
        Polynomial a = random_poly(rng, table);
        Polynomial b = random_poly(rng, table);
        for (std::size_t v = 0; v < table->size(); ++v)
            CHECK((a * b).derivative(v) == a * b.derivative(v) + b * a.derivative(v));
    }
}

TEST_CASE("primitive part") {
    auto table = xyt();
    Polynomial p = Polynomial::parse(table, "2/3*x - 4/3");
    CHECK((-p).primitive_part() == Polynomial::parse(table, "x - 2"));
    CHECK(Polynomial::parse(table, "6*x^2 + 9").primitive_part() ==
          Polynomial::parse(table, "2*x^2 + 3"));
    Polynomial q = Polynomial::parse(table, "3*x*y - 2*t + 1");
    CHECK(q.primitive_part() == q);
    CHECK(q.primitive_part().primitive_part() == q.primitive_part());
    CHECK_THROWS_AS(Polynomial(table).primitive_part(), UsageError);
}

TEST_CASE("primitive part ignores rational scaling") {
    auto table = xyt();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(1, 9);
    for (int k = 0; k < 25; ++k) {
        Polynomial p = random_poly(rng, table);
        if (p.is_zero()) continue;
        Rational c(num(rng), num(rng));
        c.canonicalize();
        CHECK((p * c).primitive_part() == p.primitive_part());
        CHECK((p * -c).primitive_part() == p.primitive_part());
    }
}

TEST_CASE("mismatched tables are rejected") {
    TablePtr t1 = VariableTable::make({"x", "y"});
    TablePtr t2 = VariableTable::make({"y", "x"});
    Polynomial a = Polynomial::variable(t1, "x");
    Polynomial b = Polynomial::variable(t2, "x");
    CHECK_THROWS_AS(a + b, UsageError);
    CHECK_THROWS_AS(a * b, UsageError);
}

TEST_CASE("structurally equal tables interoperate") {
    TablePtr t1 = VariableTable::make({"x", "y"});
    TablePtr t2 = VariableTable::make({"x", "y"});
    Polynomial a = Polynomial::variable(t1, "x");
    Polynomial b = Polynomial::variable(t2, "x");
    CHECK((a - b).is_zero());
}

TEST_CASE("rendering follows decreasing monomial order") {
    TablePtr table = VariableTable::make({"X", "t"});
    Polynomial p = Polynomial::parse(table, "1 - X + t^2*X^2");
    CHECK(p.to_string() == "t^2*X^2 - X + 1");
    CHECK(Polynomial(table).to_string() == "0");
    CHECK(Polynomial::parse(table, "-X - 1/2").to_string() == "-X - 1/2");
}

TEST_CASE("parse round-trips rendered text") {
    auto table = xyt();
    std::mt19937 rng(31337);
    for (int k = 0; k < 40; ++k) {
        Polynomial p = random_poly(rng, table);
        CHECK(Polynomial::parse(table, p.to_string()) == p);
    }
    CHECK_THROWS_AS(Polynomial::parse(table, "x + + y"), UsageError);
    CHECK_THROWS_AS(Polynomial::parse(table, "w"), UsageError);
}

TEST_CASE("lex order and monomial helpers") {
    Monomial a(std::vector<std::uint32_t>{2, 0, 1});
    Monomial b(std::vector<std::uint32_t>{1, 5, 0});
    CHECK(a > b); // first exponent dominates
    CHECK(Monomial::lcm(a, b) == Monomial(std::vector<std::uint32_t>{2, 5, 1}));
    CHECK(Monomial(std::vector<std::uint32_t>{1, 0, 0}).divides(a));
    CHECK_FALSE(a.divides(b));
    CHECK((a * b) / b == a);
    CHECK(a.total_degree() == 3);
}

TEST_CASE("substitution") {
    auto table = xyt();
    Polynomial p = Polynomial::parse(table, "x^2*y + x - 3");
    Polynomial v = Polynomial::parse(table, "t + 1");
    Polynomial expected = Polynomial::parse(table, "t^2*y + 2*t*y + y + t - 2");
    CHECK(p.substituted(table->index_of("x"), v) == expected);
    // substituting a variable that does not occur is the identity
    CHECK(p.substituted(table->index_of("t"), v) == p);
}
