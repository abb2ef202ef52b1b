#pragma once

#include <string>

#include "walkgf/polynomial.hpp"
#include "walkgf/step_set.hpp"

namespace walkgf {

// What the unknown X of an AlgebraicEquation denotes.
struct EquationTarget {
    StepSet steps;
    bool strict = false;
    int moment = 0; // 0: walk counts, 1: sum of areas

    std::string describe() const {
        std::string what = moment == 0 ? "number" : "sum of areas";
        return what + " of " + (strict ? "strict " : "") + "walks with steps " +
               steps.to_string();
    }
};

// Normalized bivariate relation Q(t, X) = 0 for a designated generating
// function: primitive integer coefficients, positive leading coefficient under
// lex X > t, and X actually occurs.
class AlgebraicEquation {
public:
    static inline const std::vector<std::string> var_names = {"X", "t"};
    static constexpr std::size_t x_index = 0;
    static constexpr std::size_t t_index = 1;

    AlgebraicEquation(Polynomial poly, EquationTarget target)
        : poly_(std::move(poly)), target_(std::move(target)) {
        if (poly_.is_zero()) throw UsageError("algebraic equation must be nonzero");
        if (poly_.table()->size() != 2 || poly_.table()->name(0) != "X" ||
            poly_.table()->name(1) != "t")
            throw UsageError("algebraic equation must be over variables (X, t)");
        if (poly_.degree_in(x_index) == 0)
            throw UsageError("algebraic equation must involve X");
        poly_ = poly_.primitive_part();
    }

    static TablePtr table() {
        static const TablePtr t = VariableTable::make(var_names);
        return t;
    }

    static AlgebraicEquation parse(std::string_view text, EquationTarget target = {}) {
        std::string body(text);
        if (auto eq = body.find('='); eq != std::string::npos) body.resize(eq);
        return AlgebraicEquation(Polynomial::parse(table(), body), std::move(target));
    }

    const Polynomial& poly() const { return poly_; }
    const EquationTarget& target() const { return target_; }

    unsigned degree_in_x() const { return poly_.degree_in(x_index); }
    unsigned degree_in_t() const { return poly_.degree_in(t_index); }

    // Terms come out in decreasing X-degree, then decreasing t-degree.
    std::string to_string() const { return poly_.to_string() + " = 0"; }

    friend bool operator==(const AlgebraicEquation& a, const AlgebraicEquation& b) {
        return a.poly_ == b.poly_;
    }

private:
    Polynomial poly_;
    EquationTarget target_;
};

} // namespace walkgf
