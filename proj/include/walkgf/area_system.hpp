#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "walkgf/algebraic_equation.hpp"
#include "walkgf/groebner.hpp"
#include "walkgf/step_set.hpp"
#include "walkgf/walk_system.hpp"

namespace walkgf {

enum class EvalArg { AtT, AtQT };

struct FunctionalFactor {
    QuantityRef quantity;
    EvalArg arg;
    friend bool operator==(const FunctionalFactor&, const FunctionalFactor&) = default;
};

// One product term of a q-weighted functional equation:
// coef * t^t_exp * q^(half_q_exp/2) * prod factors(t or qt).
// The q-exponent is stored in half-units so it stays an integer; a square
// root of q never enters the polynomial ring.
struct FunctionalTerm {
    Rational coef;
    unsigned t_exp = 0;
    int half_q_exp = 0;
    std::vector<FunctionalFactor> factors;
    friend bool operator==(const FunctionalTerm&, const FunctionalTerm&) = default;
};

struct FunctionalEquation {
    QuantityRef lhs; // evaluated at t
    Rational constant;
    std::vector<FunctionalTerm> rhs;

    std::string to_string() const;
    friend bool operator==(const FunctionalEquation&, const FunctionalEquation&) = default;
};

struct FunctionalSystem {
    StepSet steps;
    bool strict = false;
    std::vector<QuantityRef> quantities;
    std::vector<FunctionalEquation> equations; // parallel to quantities
    QuantityRef target;

    std::string to_string() const {
        std::string out;
        for (const auto& eq : equations) out += eq.to_string() + "\n";
        return out;
    }
};

namespace detail {

inline std::string q_power_text(int half) {
    if (half == 0) return "";
    if (half == 2) return "q";
    if (half % 2 == 0) return "q^" + std::to_string(half / 2);
    return "q^(" + std::to_string(half) + "/2)";
}

} // namespace detail

inline std::string FunctionalEquation::to_string() const {
    std::string out = lhs.name() + "(t) = ";
    bool first = true;
    if (constant != 0) {
        out += walkgf::to_string(constant);
        first = false;
    }
    for (const auto& term : rhs) {
        if (!first) out += " + ";
        first = false;
        std::vector<std::string> parts;
        if (term.coef != 1) parts.push_back(walkgf::to_string(term.coef));
        if (term.t_exp == 1) parts.push_back("t");
        else if (term.t_exp > 1) parts.push_back("t^" + std::to_string(term.t_exp));
        if (std::string qp = detail::q_power_text(term.half_q_exp); !qp.empty())
            parts.push_back(qp);
        for (const auto& f : term.factors)
            parts.push_back(f.quantity.name() + (f.arg == EvalArg::AtT ? "(t)" : "(q*t)"));
        if (parts.empty()) parts.push_back("1");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    if (first) out += "0";
    return out;
}

// q-weighted functional equation for f[a,b](t). The lowered-walk factor is
// evaluated at qt: lowering a length-n walk by one unit loses n units of area.
inline FunctionalEquation q_f_equation(const StepSet& S, int a, int b) {
    detail::require_in_closure(S, {QuantityKind::F, a, b});
    FunctionalEquation eq;
    eq.lhs = {QuantityKind::F, a, b};
    eq.constant = 0;
    if (a > 0 && b > 0) {
        eq.rhs.push_back({Rational(1), 0, 0,
                          {{{QuantityKind::G, a, 0}, EvalArg::AtT},
                           {{QuantityKind::F, 0, b}, EvalArg::AtT}}});
        eq.rhs.push_back({Rational(1), 0, 0, {{{QuantityKind::F, a - 1, b - 1}, EvalArg::AtQT}}});
    } else if (a > 0) {
        eq.rhs.push_back({Rational(1), 0, 0,
                          {{{QuantityKind::G, a, 0}, EvalArg::AtT},
                           {{QuantityKind::F, 0, 0}, EvalArg::AtT}}});
    } else if (b > 0) {
        eq.rhs.push_back({Rational(1), 0, 0,
                          {{{QuantityKind::F, 0, 0}, EvalArg::AtT},
                           {{QuantityKind::G, 0, b}, EvalArg::AtT}}});
    } else {
        eq.constant = 1;
        if (S.has_zero()) // flat first step at height 0 gains no area
            eq.rhs.push_back({Rational(1), 1, 0, {{{QuantityKind::F, 0, 0}, EvalArg::AtT}}});
        eq.rhs.push_back({Rational(1), 0, 0,
                          {{{QuantityKind::G, 0, 0}, EvalArg::AtT},
                           {{QuantityKind::F, 0, 0}, EvalArg::AtT}}});
    }
    return eq;
}

// q-weighted functional equation for g[a,b](t): removing the bounding steps
// costs q^(i/2), q^(-j/2) or q^((i-j)/2) of area, and the lowered remainder is
// evaluated at qt.
inline FunctionalEquation q_g_equation(const StepSet& S, int a, int b) {
    if (a > 0 && b > 0)
        throw UsageError("g[a,b] with a > 0 and b > 0 is identically zero");
    detail::require_in_closure(S, {QuantityKind::G, a, b});
    FunctionalEquation eq;
    eq.lhs = {QuantityKind::G, a, b};
    eq.constant = 0;
    if (a == 0 && b > 0) {
        for (int i : S.positive())
            eq.rhs.push_back(
                {Rational(1), 1, i, {{{QuantityKind::F, a + i - 1, b - 1}, EvalArg::AtQT}}});
    } else if (a > 0 && b == 0) {
        for (int j : S.negative())
            eq.rhs.push_back(
                {Rational(1), 1, -j, {{{QuantityKind::F, a - 1, b - j - 1}, EvalArg::AtQT}}});
    } else {
        for (int i : S.positive())
            for (int j : S.negative())
                eq.rhs.push_back({Rational(1), 2, i - j,
                                  {{{QuantityKind::F, a + i - 1, b - j - 1}, EvalArg::AtQT}}});
    }
    return eq;
}

inline FunctionalSystem build_functional_system(const StepSet& S, bool strict) {
    FunctionalSystem sys;
    sys.steps = S;
    sys.strict = strict;
    sys.target = {strict ? QuantityKind::G : QuantityKind::F, 0, 0};
    sys.quantities = required_quantities(S, strict);
    sys.equations.reserve(sys.quantities.size());
    for (const auto& q : sys.quantities)
        sys.equations.push_back(q.kind == QuantityKind::F ? q_f_equation(S, q.a, q.b)
                                                          : q_g_equation(S, q.a, q.b));
    return sys;
}

// First-order jet of the functional system about q = 1. Every quantity Q gets
// three polynomial variables: the order-0 value Q0, the order-1 coefficient
// Q1, and D(Q0) standing for the t-derivative of Q0. The equations come in
// three blocks, one of each per quantity, so the system stays square.
struct ExpandedSystem {
    TablePtr table;
    std::vector<QuantityRef> quantities;
    QuantityRef target;
    std::vector<Polynomial> order0;     // (q-1)^0 coefficients == straight system
    std::vector<Polynomial> order1;     // (q-1)^1 coefficients, linear in Q1 and D
    std::vector<Polynomial> derivative; // d/dt of order0 with dQ0/dt -> D(Q0)

    static std::string q0_name(const QuantityRef& q) {
        std::string n = q.name();
        n.insert(n.size() - 1, ",0");
        return n;
    }
    static std::string q1_name(const QuantityRef& q) {
        std::string n = q.name();
        n.insert(n.size() - 1, ",1");
        return n;
    }
    static std::string d_name(const QuantityRef& q) { return "D" + q0_name(q); }

    std::size_t q0_index(const QuantityRef& q) const { return table->index_of(q0_name(q)); }
    std::size_t q1_index(const QuantityRef& q) const { return table->index_of(q1_name(q)); }
    std::size_t d_index(const QuantityRef& q) const { return table->index_of(d_name(q)); }
    std::size_t t_index() const { return table->size() - 1; }

    std::vector<Polynomial> all_equations() const {
        std::vector<Polynomial> all = order0;
        all.insert(all.end(), order1.begin(), order1.end());
        all.insert(all.end(), derivative.begin(), derivative.end());
        return all;
    }
};

inline ExpandedSystem expand_first_order(const FunctionalSystem& sys) {
    ExpandedSystem ex;
    ex.quantities = sys.quantities;
    ex.target = sys.target;

    // elimination order: D's, then Q0 and Q1 of non-targets, then the target's
    // Q0, then the target's Q1 (the eventual X), then t; G's before F's within
    // each block, as in the straight system
    auto block_order = [&](auto&& emit) {
        for (const auto& q : sys.quantities)
            if (q.kind == QuantityKind::G) emit(q);
        for (const auto& q : sys.quantities)
            if (q.kind == QuantityKind::F) emit(q);
    };
    std::vector<std::string> names;
    block_order([&](const QuantityRef& q) { names.push_back(ExpandedSystem::d_name(q)); });
    block_order([&](const QuantityRef& q) {
        if (q != sys.target) names.push_back(ExpandedSystem::q0_name(q));
    });
    block_order([&](const QuantityRef& q) {
        if (q != sys.target) names.push_back(ExpandedSystem::q1_name(q));
    });
    names.push_back(ExpandedSystem::q0_name(sys.target));
    names.push_back(ExpandedSystem::q1_name(sys.target));
    names.push_back("t");
    ex.table = VariableTable::make(std::move(names));

    const TablePtr& table = ex.table;
    Polynomial t = Polynomial::variable(table, "t");
    auto v0 = [&](const QuantityRef& q) {
        return Polynomial::variable(table, ExpandedSystem::q0_name(q));
    };
    auto v1 = [&](const QuantityRef& q) {
        return Polynomial::variable(table, ExpandedSystem::q1_name(q));
    };
    auto vd = [&](const QuantityRef& q) {
        return Polynomial::variable(table, ExpandedSystem::d_name(q));
    };

    for (const auto& eq : sys.equations) {
        Polynomial rhs0 = Polynomial::constant(table, eq.constant);
        Polynomial rhs1(table);
        for (const auto& term : eq.rhs) {
            // q^(h/2) = 1 + (q-1) h/2 + O((q-1)^2)
            Polynomial p0 = Polynomial::constant(table, term.coef);
            for (unsigned k = 0; k < term.t_exp; ++k) p0 *= t;
            Polynomial p1 = p0 * Rational(term.half_q_exp, 2);
            for (const auto& f : term.factors) {
                // Q(t) = Q0 + (q-1) Q1 ; Q(qt) = Q0 + (q-1)(t D(Q0) + Q1)
                Polynomial f0 = v0(f.quantity);
                Polynomial f1 = f.arg == EvalArg::AtT ? v1(f.quantity)
                                                      : t * vd(f.quantity) + v1(f.quantity);
                Polynomial np0 = p0 * f0;
                Polynomial np1 = p1 * f0 + p0 * f1;
                p0 = std::move(np0);
                p1 = std::move(np1);
            }
            rhs0 += p0;
            rhs1 += p1;
        }
        Polynomial e0 = v0(eq.lhs) - rhs0;
        ex.order0.push_back(e0);
        ex.order1.push_back(v1(eq.lhs) - rhs1);
        Polynomial de = e0.derivative(ex.t_index());
        for (const auto& q : sys.quantities) {
            Polynomial partial = e0.derivative(ex.q0_index(q));
            if (!partial.is_zero()) de += partial * vd(q);
        }
        ex.derivative.push_back(std::move(de));
    }
    return ex;
}

// Pure algebraic equation for the sum-of-areas generating function: the
// order-1 jet coefficient of f[0,0] (weak) or g[0,0] (strict).
inline AlgebraicEquation area_equation(const StepSet& S, bool strict,
                                       const EliminateOptions& options = {},
                                       BuchbergerStats* stats = nullptr) {
    if (!S.nontrivial()) throw UsageError("area_equation needs a nontrivial step set");
    ExpandedSystem ex = expand_first_order(build_functional_system(S, strict));
    std::size_t target_var = ex.q1_index(ex.target);
    auto relations = eliminate(ex.all_equations(),
                               std::vector<std::size_t>{target_var, ex.t_index()}, options,
                               stats);
    return detail::first_relation(relations, target_var, ex.t_index(),
                                  EquationTarget{S, strict, 1});
}

} // namespace walkgf
