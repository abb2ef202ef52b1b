#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "walkgf/algebraic_equation.hpp"
#include "walkgf/groebner.hpp"
#include "walkgf/polynomial.hpp"
#include "walkgf/step_set.hpp"

namespace walkgf {

namespace detail {

// Quantities referenced by the defining equation of q; the same references
// drive both the plain and the q-weighted constructions.
inline std::vector<QuantityRef> equation_references(const StepSet& S, const QuantityRef& q) {
    std::vector<QuantityRef> out;
    if (q.kind == QuantityKind::F) {
        if (q.a > 0 && q.b > 0) {
            out.push_back({QuantityKind::G, q.a, 0});
            out.push_back({QuantityKind::F, 0, q.b});
            out.push_back({QuantityKind::F, q.a - 1, q.b - 1});
        } else if (q.a > 0) {
            out.push_back({QuantityKind::G, q.a, 0});
            out.push_back({QuantityKind::F, 0, 0});
        } else if (q.b > 0) {
            out.push_back({QuantityKind::F, 0, 0});
            out.push_back({QuantityKind::G, 0, q.b});
        } else {
            out.push_back({QuantityKind::G, 0, 0});
            out.push_back({QuantityKind::F, 0, 0});
        }
    } else {
        if (q.a == 0 && q.b > 0) {
            for (int i : S.positive()) out.push_back({QuantityKind::F, q.a + i - 1, q.b - 1});
        } else if (q.a > 0 && q.b == 0) {
            for (int j : S.negative()) out.push_back({QuantityKind::F, q.a - 1, q.b - j - 1});
        } else {
            for (int i : S.positive())
                for (int j : S.negative())
                    out.push_back({QuantityKind::F, q.a + i - 1, q.b - j - 1});
        }
    }
    return out;
}

} // namespace detail

// Least set of quantities containing the target (f[0,0] weak, g[0,0] strict)
// and closed under the construction rules, in deterministic order: all F
// quantities first, lexicographic in (a, b), then all G quantities.
inline std::vector<QuantityRef> required_quantities(const StepSet& S, bool strict) {
    if (!S.nontrivial()) throw UsageError("required_quantities needs a nontrivial step set");
    QuantityRef target{strict ? QuantityKind::G : QuantityKind::F, 0, 0};
    std::set<QuantityRef> seen{target};
    std::deque<QuantityRef> work{target};
    while (!work.empty()) {
        QuantityRef q = work.front();
        work.pop_front();
        assert(q.a < S.max_up() && q.b < S.max_down());
        assert(!(q.kind == QuantityKind::G && q.a > 0 && q.b > 0));
        for (const QuantityRef& r : detail::equation_references(S, q))
            if (seen.insert(r).second) work.push_back(r);
    }
    return {seen.begin(), seen.end()}; // QuantityRef ordering is F-first, lex (a,b)
}

// Straight-enumeration equation system over the variable table
// (non-target g's, non-target f's, target, t); equations are stored as
// (quantity - rhs) and are parallel to `quantities`.
struct EquationSystem {
    TablePtr table;
    std::vector<QuantityRef> quantities;
    std::vector<Polynomial> equations;
    QuantityRef target;

    std::size_t var_of(const QuantityRef& q) const { return table->index_of(q.name()); }
    std::size_t t_index() const { return table->size() - 1; }

    // Renders "f[0,0] = 1 + t*f[0,0] + ..." per quantity.
    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < quantities.size(); ++k) {
            Polynomial rhs =
                Polynomial::variable(table, var_of(quantities[k])) - equations[k];
            out += quantities[k].name() + " = " + rhs.to_string() + "\n";
        }
        return out;
    }
};

namespace detail {

inline TablePtr straight_system_table(const std::vector<QuantityRef>& quantities,
                                      const QuantityRef& target) {
    std::vector<std::string> names;
    for (const auto& q : quantities)
        if (q.kind == QuantityKind::G && q != target) names.push_back(q.name());
    for (const auto& q : quantities)
        if (q.kind == QuantityKind::F && q != target) names.push_back(q.name());
    names.push_back(target.name());
    names.push_back("t");
    return VariableTable::make(std::move(names));
}

inline void require_in_closure(const StepSet& S, const QuantityRef& q) {
    auto closure = required_quantities(S, false);
    if (std::find(closure.begin(), closure.end(), q) == closure.end())
        throw UsageError("quantity " + q.name() + " is outside the closure for " +
                         S.to_string());
}

} // namespace detail

// Defining polynomial (f[a,b] - rhs) of a weak-walk quantity.
inline Polynomial make_f_equation(const StepSet& S, int a, int b, const TablePtr& table) {
    detail::require_in_closure(S, {QuantityKind::F, a, b});
    auto var = [&](const QuantityRef& q) { return Polynomial::variable(table, q.name()); };
    Polynomial t = Polynomial::variable(table, "t");
    Polynomial lhs = var({QuantityKind::F, a, b});
    if (a > 0 && b > 0)
        return lhs - var({QuantityKind::G, a, 0}) * var({QuantityKind::F, 0, b}) -
               var({QuantityKind::F, a - 1, b - 1});
    if (a > 0) return lhs - var({QuantityKind::G, a, 0}) * var({QuantityKind::F, 0, 0});
    if (b > 0) return lhs - var({QuantityKind::F, 0, 0}) * var({QuantityKind::G, 0, b});
    Polynomial rhs = Polynomial::constant(table, Rational(1)) +
                     var({QuantityKind::G, 0, 0}) * var({QuantityKind::F, 0, 0});
    if (S.has_zero()) rhs += t * var({QuantityKind::F, 0, 0}); // flat first step
    return lhs - rhs;
}

// Defining polynomial (g[a,b] - rhs) of a strict-walk quantity; g[a,b] with
// a > 0 and b > 0 is declared zero and never generated.
inline Polynomial make_g_equation(const StepSet& S, int a, int b, const TablePtr& table) {
    if (a > 0 && b > 0)
        throw UsageError("g[a,b] with a > 0 and b > 0 is identically zero");
    detail::require_in_closure(S, {QuantityKind::G, a, b});
    auto var = [&](const QuantityRef& q) { return Polynomial::variable(table, q.name()); };
    Polynomial t = Polynomial::variable(table, "t");
    Polynomial lhs = var({QuantityKind::G, a, b});
    Polynomial rhs(table);
    if (a == 0 && b > 0) {
        for (int i : S.positive()) rhs += var({QuantityKind::F, a + i - 1, b - 1});
        return lhs - t * rhs;
    }
    if (a > 0 && b == 0) {
        for (int j : S.negative()) rhs += var({QuantityKind::F, a - 1, b - j - 1});
        return lhs - t * rhs;
    }
    for (int i : S.positive())
        for (int j : S.negative()) rhs += var({QuantityKind::F, i - 1, -j - 1});
    return lhs - t * t * rhs;
}

// One defining equation per quantity in the closure; the target is f[0,0]
// (weak) or g[0,0] (strict).
inline EquationSystem build_straight_system(const StepSet& S, bool strict) {
    EquationSystem sys;
    sys.target = {strict ? QuantityKind::G : QuantityKind::F, 0, 0};
    sys.quantities = required_quantities(S, strict);
    sys.table = detail::straight_system_table(sys.quantities, sys.target);
    sys.equations.reserve(sys.quantities.size());
    for (const auto& q : sys.quantities)
        sys.equations.push_back(q.kind == QuantityKind::F
                                    ? make_f_equation(S, q.a, q.b, sys.table)
                                    : make_g_equation(S, q.a, q.b, sys.table));
    return sys;
}

namespace detail {

// Rewrites an elimination result over (..., quantity, t) as a polynomial over
// the canonical (X, t) table.
inline Polynomial to_xt(const Polynomial& p, std::size_t var_index, std::size_t t_index) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& term : p.terms())
        terms.push_back({Monomial(std::vector<std::uint32_t>{term.mono.exponent(var_index),
                                                             term.mono.exponent(t_index)}),
                         term.coef});
    return Polynomial::from_terms(AlgebraicEquation::table(), std::move(terms));
}

inline AlgebraicEquation first_relation(const std::vector<Polynomial>& relations,
                                        std::size_t var_index, std::size_t t_index,
                                        EquationTarget target) {
    for (const auto& r : relations)
        if (r.degree_in(var_index) > 0)
            return AlgebraicEquation(to_xt(r, var_index, t_index), std::move(target));
    throw BudgetError("elimination produced no relation involving the target", {});
}

} // namespace detail

// Pure algebraic equation Q(t, X) = 0 for the straight-enumeration generating
// function. Degenerate step sets short-circuit: with no positive or no
// negative steps only the empty walk (X = 1) or flat runs (X = 1/(1-t))
// survive weakly, and no strict excursion exists at all (X = 0).
inline AlgebraicEquation straight_equation(const StepSet& S, bool strict,
                                           const EliminateOptions& options = {},
                                           BuchbergerStats* stats = nullptr) {
    EquationTarget target{S, strict, 0};
    TablePtr xt = AlgebraicEquation::table();
    if (!S.nontrivial()) {
        if (strict)
            return AlgebraicEquation(Polynomial::variable(xt, "X"), target);
        Polynomial x = Polynomial::variable(xt, "X");
        Polynomial one = Polynomial::constant(xt, Rational(1));
        if (S.has_zero())
            return AlgebraicEquation(x - Polynomial::variable(xt, "t") * x - one, target);
        return AlgebraicEquation(x - one, target);
    }
    EquationSystem sys = build_straight_system(S, strict);
    std::size_t target_var = sys.var_of(sys.target);
    auto relations = eliminate(sys.equations, std::vector<std::size_t>{target_var, sys.t_index()},
                               options, stats);
    return detail::first_relation(relations, target_var, sys.t_index(), target);
}

} // namespace walkgf
