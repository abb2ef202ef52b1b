#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkgf/errors.hpp"
#include "walkgf/rational.hpp"

namespace walkgf {

// Ordered list of distinct variable names. Index 0 is the greatest variable;
// the pure lexicographic monomial order is induced by this listing, so
// elimination orders are expressed by putting the variables to eliminate first.
class VariableTable {
public:
    explicit VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw UsageError("duplicate variable name: " + names_[i]);
    }

    static std::shared_ptr<const VariableTable> make(std::vector<std::string> names) {
        return std::make_shared<const VariableTable>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(std::string_view name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    std::size_t index_of(std::string_view name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            throw UsageError("unknown variable: '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - names_.begin());
    }

    friend bool operator==(const VariableTable& a, const VariableTable& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_table(const TablePtr& a, const TablePtr& b) {
    if (!same_table(a, b)) throw UsageError("mismatched variable tables");
}

// Exponent vector over a VariableTable, compared lexicographically with the
// table's first variable most significant.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps_.at(var) = e;
        return m;
    }

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    unsigned total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0u);
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && other.exps_[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
        return r;
    }

    // Pre: other.divides(*this).
    Monomial operator/(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i)
            r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
        return r;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<std::uint32_t> exps_;
};

struct Term {
    Monomial mono;
    Rational coef;
};

// Sparse multivariate polynomial with exact rational coefficients over a shared
// VariableTable. Terms are kept canonical: sorted in decreasing monomial order,
// no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(TablePtr table) : table_(std::move(table)) {}

    static Polynomial constant(TablePtr table, Rational c) {
        Polynomial p(std::move(table));
        if (c != 0) p.terms_.push_back({Monomial(p.table_->size()), std::move(c)});
        return p;
    }

    static Polynomial variable(TablePtr table, std::size_t var) {
        std::size_t n = table->size();
        Polynomial p(std::move(table));
        if (var >= n) throw UsageError("variable index out of range");
        p.terms_.push_back({Monomial::unit(n, var), Rational(1)});
        return p;
    }

    static Polynomial variable(const TablePtr& table, std::string_view name) {
        return variable(table, table->index_of(name));
    }

    static Polynomial term(TablePtr table, Monomial m, Rational c) {
        Polynomial p(std::move(table));
        if (m.size() != p.table_->size())
            throw UsageError("monomial size does not match variable table");
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    // Trusted fast path: `terms` must already be in strictly decreasing
    // monomial order with no zero coefficients.
    static Polynomial from_sorted_terms(TablePtr table, std::vector<Term> terms) {
        Polynomial p(std::move(table));
        p.terms_ = std::move(terms);
        return p;
    }

    static Polynomial from_terms(TablePtr table, std::vector<Term> terms) {
        Polynomial p(std::move(table));
        std::map<Monomial, Rational, std::greater<>> acc;
        for (auto& t : terms) {
            if (t.mono.size() != p.table_->size())
                throw UsageError("monomial size does not match variable table");
            acc[std::move(t.mono)] += t.coef;
        }
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    const TablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coef; }

    Rational coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.mono > k; });
        if (it != terms_.end() && it->mono == m) return it->coef;
        return Rational(0);
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
        return d;
    }

    bool uses(std::size_t var) const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.exponent(var) > 0; });
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_table(a.table_, b.table_);
        Polynomial r(a.table_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            auto cmp = ia->mono <=> ib->mono;
            if (cmp == std::strong_ordering::greater) {
                r.terms_.push_back(*ia++);
            } else if (cmp == std::strong_ordering::less) {
                r.terms_.push_back(*ib++);
            } else {
                Rational c = ia->coef + ib->coef;
                if (c != 0) r.terms_.push_back({ia->mono, std::move(c)});
                ++ia, ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    // a += c * mono * b, in place via linear merge. The workhorse of reduction.
    void add_scaled(const Rational& c, const Monomial& mono, const Polynomial& b) {
        require_same_table(table_, b.table_);
        if (c == 0 || b.is_zero()) return;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + b.terms_.size());
        auto ia = terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != terms_.end() && ib != b.terms_.end()) {
            Monomial mb = ib->mono * mono;
            auto cmp = ia->mono <=> mb;
            if (cmp == std::strong_ordering::greater) {
                merged.push_back(std::move(*ia++));
            } else if (cmp == std::strong_ordering::less) {
                merged.push_back({std::move(mb), c * ib->coef});
                ++ib;
            } else {
                Rational nc = ia->coef + c * ib->coef;
                if (nc != 0) merged.push_back({std::move(mb), std::move(nc)});
                ++ia, ++ib;
            }
        }
        merged.insert(merged.end(), std::make_move_iterator(ia),
                      std::make_move_iterator(terms_.end()));
        for (; ib != b.terms_.end(); ++ib) merged.push_back({ib->mono * mono, c * ib->coef});
        terms_ = std::move(merged);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_table(a.table_, b.table_);
        Polynomial r(a.table_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Monomial, Rational, std::greater<>> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) acc[ta.mono * tb.mono] += ta.coef * tb.coef;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, std::move(c)});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a.table_);
        if (c == 0) return r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back({t.mono, t.coef * c});
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
    Polynomial& operator*=(const Rational& c) { return *this = *this * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }

    // Total order refining the leading-monomial order; used only for
    // deterministic tie-breaking when sorting bases.
    friend std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
            if (a.terms_[i].coef < b.terms_[i].coef) return std::strong_ordering::less;
            if (a.terms_[i].coef > b.terms_[i].coef) return std::strong_ordering::greater;
        }
        return a.terms_.size() <=> b.terms_.size();
    }

    // Formal partial derivative with respect to the given variable.
    Polynomial derivative(std::size_t var) const {
        if (!table_ || var >= table_->size()) throw UsageError("unknown variable");
        Polynomial r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::uint32_t e = t.mono.exponent(var);
            if (e == 0) continue;
            auto exps = t.mono.exponents();
            exps[var] = e - 1;
            r.terms_.push_back({Monomial(std::move(exps)), t.coef * e});
        }
        return r;
    }

    Polynomial derivative(std::string_view var) const {
        if (!table_) throw UsageError("unknown variable");
        return derivative(table_->index_of(var));
    }

    // Positive rational c such that (*this) / c has integer coefficients with
    // gcd 1. For the zero polynomial this is meaningless and throws.
    Rational content() const {
        if (terms_.empty()) throw UsageError("content of zero polynomial");
        Integer den(1);
        for (const auto& t : terms_) den = lcm(den, denominator(t.coef));
        Integer num(0);
        for (const auto& t : terms_) {
            Integer scaled = numerator(t.coef) * (den / denominator(t.coef));
            num = gcd(num, scaled);
        }
        Rational c(num, den);
        c.canonicalize();
        return c;
    }

    // Integer coefficients, coefficient gcd 1, leading coefficient positive.
    Polynomial primitive_part() const {
        if (terms_.empty()) throw UsageError("primitive part of zero polynomial");
        Rational c = content();
        if (leading_coefficient() < 0) c = -c;
        Polynomial r(table_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef / c});
        return r;
    }

    // Replaces every occurrence of the given variable by `value` (Horner in
    // descending powers of the variable).
    Polynomial substituted(std::size_t var, const Polynomial& value) const {
        require_same_table(table_, value.table());
        // split into coefficient polynomials by the exponent of `var`
        std::map<std::uint32_t, std::vector<Term>> layers;
        for (const auto& t : terms_) {
            auto exps = t.mono.exponents();
            std::uint32_t e = exps[var];
            exps[var] = 0;
            layers[e].push_back({Monomial(std::move(exps)), t.coef});
        }
        Polynomial result(table_);
        std::uint32_t prev = 0;
        bool first = true;
        for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
            if (!first)
                for (std::uint32_t k = it->first; k < prev; ++k) result *= value;
            result += from_terms(table_, std::move(it->second));
            prev = it->first;
            first = false;
        }
        for (std::uint32_t k = 0; k < prev; ++k) result *= value;
        return result;
    }

    // Canonical text form: terms in decreasing monomial order; within a term
    // the factors are printed from the least variable up (so "t^2*X^2", not
    // "X^2*t^2"); unit coefficients are omitted next to variables.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coef;
            if (first) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            std::string factors;
            for (std::size_t k = t.mono.size(); k-- > 0;) {
                std::uint32_t e = t.mono.exponent(k);
                if (e == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += table_->name(k);
                if (e > 1) factors += "^" + std::to_string(e);
            }
            if (factors.empty()) {
                out += walkgf::to_string(c);
            } else {
                if (c != 1) out += walkgf::to_string(c) + "*";
                out += factors;
            }
        }
        return out;
    }

    // Parses the canonical text form (signs, `*`, `^`, integer or a/b
    // coefficients). Inverse of to_string on canonical output.
    static Polynomial parse(const TablePtr& table, std::string_view text);

private:
    TablePtr table_;
    std::vector<Term> terms_;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool is_var_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' || c == ']' ||
           c == ',' || c == '.';
}

} // namespace detail

inline Polynomial Polynomial::parse(const TablePtr& table, std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    detail::skip_ws(text, i);
    bool expect_term = true;
    int pending_sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        pending_sign = text[i] == '-' ? -1 : 1;
        ++i;
        detail::skip_ws(text, i);
    }
    while (i < text.size()) {
        if (expect_term) {
            Rational coef(pending_sign);
            Monomial mono(table->size());
            bool saw_factor = false;
            bool expect_factor = true;
            while (expect_factor) {
                detail::skip_ws(text, i);
                if (i >= text.size()) break;
                char c = text[i];
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    std::size_t j = i;
                    while (j < text.size() &&
                           (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                        ++j;
                    coef *= parse_rational(text.substr(i, j - i));
                    i = j;
                    saw_factor = true;
                } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    std::size_t j = i;
                    while (j < text.size() && detail::is_var_char(text[j])) ++j;
                    std::size_t var = table->index_of(text.substr(i, j - i));
                    i = j;
                    std::uint32_t e = 1;
                    detail::skip_ws(text, i);
                    if (i < text.size() && text[i] == '^') {
                        ++i;
                        detail::skip_ws(text, i);
                        std::size_t k = i;
                        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                            ++k;
                        if (k == i) throw UsageError("expected exponent in polynomial text");
                        e = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(i, k - i))));
                        i = k;
                    }
                    mono = mono * Monomial::unit(table->size(), var, e);
                    saw_factor = true;
                } else {
                    throw UsageError("unexpected character in polynomial text: '" +
                                     std::string(1, c) + "'");
                }
                detail::skip_ws(text, i);
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    expect_factor = true;
                } else {
                    expect_factor = false;
                }
            }
            if (!saw_factor) throw UsageError("empty term in polynomial text");
            terms.push_back({std::move(mono), std::move(coef)});
            expect_term = false;
        } else {
            char c = text[i];
            if (c == '+') {
                pending_sign = 1;
            } else if (c == '-') {
                pending_sign = -1;
            } else {
                throw UsageError("expected '+' or '-' in polynomial text");
            }
            ++i;
            detail::skip_ws(text, i);
            expect_term = true;
        }
    }
    if (expect_term && !terms.empty()) throw UsageError("dangling sign in polynomial text");
    return Polynomial::from_terms(table, std::move(terms));
}

} // namespace walkgf
