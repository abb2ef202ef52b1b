#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walkgf/enumerator.hpp"
#include "walkgf/rational.hpp"
#include "walkgf/step_set.hpp"

namespace walkgf {

// Dense univariate polynomial with integer coefficients, ascending powers.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero

    const Integer& leading() const {
        if (coeffs_.empty()) throw UsageError("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    Integer eval(long n) const {
        Integer acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * n + coeffs_[k];
        return acc;
    }

    std::string to_string(const std::string& var = "n") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0) {
                out += walkgf::to_string(mag);
            } else {
                if (mag != 1) out += walkgf::to_string(mag) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Integer> coeffs_;
};

// Linear recurrence sum_{i=0}^{d} p_i(n) a(n+i) = 0 with p_d != 0, integer
// coefficient polynomials with no common factor, sign-normalized so the
// leading coefficient of p_d is positive.
struct Recurrence {
    std::vector<UnivariatePoly> coeffs; // p_0 .. p_d
    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    std::string to_string() const {
        std::string out;
        for (int i = order(); i >= 0; --i) {
            const UnivariatePoly& p = coeffs[static_cast<std::size_t>(i)];
            if (p.is_zero()) continue;
            bool negate = p.leading() < 0;
            UnivariatePoly shown = p;
            if (negate) {
                std::vector<Integer> neg;
                for (const auto& c : p.coefficients()) neg.push_back(-c);
                shown = UnivariatePoly(std::move(neg));
            }
            std::string body = shown.to_string();
            bool wrap = shown.coefficients().size() > 1 ||
                        (shown.degree() >= 1 && shown.leading() != 1);
            std::string factor = wrap ? "(" + body + ")*" : (body == "1" ? "" : body + "*");
            if (out.empty()) {
                out += (negate ? "-" : "") + factor;
            } else {
                out += negate ? " - " : " + ";
                out += factor;
            }
            out += "a(n" + (i > 0 ? "+" + std::to_string(i) : "") + ")";
        }
        return out + " = 0";
    }

    friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

class SingularLeadingCoefficient : public std::runtime_error {
public:
    explicit SingularLeadingCoefficient(long n)
        : std::runtime_error("leading recurrence coefficient vanishes at n = " +
                             std::to_string(n)),
          n(n) {}
    long n;
};

namespace detail {

// Fraction-free (Bareiss) row echelon form of an integer matrix; returns the
// pivot column of each pivot row. Deterministic: first nonzero row is the
// pivot, columns scanned left to right.
inline std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    std::size_t rows = m.size(), cols = m[0].size();
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(num);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Nullspace basis vector for a chosen free column: back-substitution over Q.
inline std::vector<Rational> nullspace_vector(const std::vector<std::vector<Integer>>& m,
                                              const std::vector<std::size_t>& pivot_cols,
                                              std::size_t free_col, std::size_t cols) {
    std::vector<Rational> x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t pr = pivot_cols.size(); pr-- > 0;) {
        std::size_t pc = pivot_cols[pr];
        Rational acc(0);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (x[j] != 0) acc += Rational(m[pr][j]) * x[j];
        x[pc] = -acc / Rational(m[pr][pc]);
    }
    return x;
}

// Pseudo-remainder based primitive Euclid; both inputs and the result are
// primitive with positive leading coefficient.
inline UnivariatePoly upoly_primitive(const UnivariatePoly& p) {
    if (p.is_zero()) return p;
    Integer g(0);
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c / g);
    return UnivariatePoly(std::move(out));
}

inline UnivariatePoly upoly_pseudo_rem(UnivariatePoly a, const UnivariatePoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Integer la = a.leading(), lb = b.leading();
        std::vector<Integer> next(static_cast<std::size_t>(std::max(a.degree(), db + shift)) + 1,
                                  Integer(0));
        for (std::size_t k = 0; k < a.coefficients().size(); ++k)
            next[k] = lb * a.coefficients()[k];
        for (std::size_t k = 0; k < b.coefficients().size(); ++k)
            next[k + static_cast<std::size_t>(shift)] -= la * b.coefficients()[k];
        a = upoly_primitive(UnivariatePoly(std::move(next)));
    }
    return a;
}

inline UnivariatePoly upoly_gcd(UnivariatePoly a, UnivariatePoly b) {
    a = a.is_zero() ? a : upoly_primitive(a);
    b = b.is_zero() ? b : upoly_primitive(b);
    while (!b.is_zero()) {
        UnivariatePoly r = upoly_pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact quotient of primitive polynomials (remainder must be zero).
inline UnivariatePoly upoly_divide_exact(const UnivariatePoly& a, const UnivariatePoly& g) {
    std::vector<Rational> rem;
    for (const auto& c : a.coefficients()) rem.emplace_back(c);
    int dg = g.degree();
    std::vector<Rational> q(a.coefficients().size(), Rational(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
        Rational f = rem[static_cast<std::size_t>(k)] / Rational(g.leading());
        if (f == 0) continue;
        q[static_cast<std::size_t>(k - dg)] = f;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(k - dg + j)] -= f * Rational(g.coefficients()[static_cast<std::size_t>(j)]);
    }
    std::vector<Integer> out;
    out.reserve(q.size());
    for (const auto& c : q) out.push_back(numerator(c)); // exact by Gauss's lemma
    return UnivariatePoly(std::move(out));
}

} // namespace detail

// Fits a minimal P-recursive recurrence: candidate (order, degree) boxes are
// searched in increasing ansatz size (order+1)(degree+1), ties broken by the
// smaller order; a fit is accepted only if it also holds on every held-out
// term. Returns nothing when the search box is exhausted.
inline std::optional<Recurrence> guess_recurrence(std::span<const Rational> seq, int max_order,
                                                  int max_degree) {
    if (max_order < 1 || max_degree < 0)
        throw UsageError("guess_recurrence requires max_order >= 1 and max_degree >= 0");
    std::size_t need = static_cast<std::size_t>((max_order + 1) * (max_degree + 1) +
                                                max_order + 10);
    if (seq.size() < need)
        throw UsageError("guess_recurrence: too few terms (" + std::to_string(seq.size()) +
                         " given, " + std::to_string(need) + " required)");

    struct Box {
        int d, deg;
    };
    std::vector<Box> boxes;
    for (int d = 1; d <= max_order; ++d)
        for (int deg = 0; deg <= max_degree; ++deg) boxes.push_back({d, deg});
    std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        int sa = (a.d + 1) * (a.deg + 1), sb = (b.d + 1) * (b.deg + 1);
        if (sa != sb) return sa < sb;
        if (a.d != b.d) return a.d < b.d;
        return a.deg < b.deg;
    });

    long len = static_cast<long>(seq.size());
    for (const Box& box : boxes) {
        int d = box.d, deg = box.deg;
        std::size_t unknowns = static_cast<std::size_t>((d + 1) * (deg + 1));
        long fit_rows = len - d - 10; // hold back at least 10 verification rows
        if (fit_rows < static_cast<long>(unknowns)) continue;

        // row n: sum_{i,k} c_{i,k} n^k a(n+i) = 0, cleared to integers
        std::vector<std::vector<Integer>> m;
        m.reserve(static_cast<std::size_t>(fit_rows));
        for (long n = 0; n < fit_rows; ++n) {
            std::vector<Rational> row(unknowns);
            Integer den(1);
            for (int i = 0; i <= d; ++i) {
                const Rational& a = seq[static_cast<std::size_t>(n + i)];
                Rational npow(1);
                for (int k = 0; k <= deg; ++k) {
                    Rational cell = a * npow;
                    row[static_cast<std::size_t>(i * (deg + 1) + k)] = cell;
                    den = lcm(den, denominator(cell));
                    npow *= n;
                }
            }
            std::vector<Integer> irow(unknowns);
            for (std::size_t c = 0; c < unknowns; ++c) {
                Rational v = row[c] * Rational(den);
                v.canonicalize();
                irow[c] = numerator(v);
            }
            m.push_back(std::move(irow));
        }
        auto pivot_cols = detail::bareiss_echelon(m);
        if (pivot_cols.size() == unknowns) continue; // only the trivial solution

        std::vector<bool> is_pivot(unknowns, false);
        for (std::size_t c : pivot_cols) is_pivot[c] = true;
        for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
            if (is_pivot[free_col]) continue;
            auto x = detail::nullspace_vector(m, pivot_cols, free_col, unknowns);
            Integer den(1);
            for (const auto& v : x) den = lcm(den, denominator(v));
            std::vector<UnivariatePoly> ps;
            for (int i = 0; i <= d; ++i) {
                std::vector<Integer> cs;
                for (int k = 0; k <= deg; ++k) {
                    Rational v = x[static_cast<std::size_t>(i * (deg + 1) + k)] * Rational(den);
                    v.canonicalize();
                    cs.push_back(numerator(v));
                }
                ps.emplace_back(std::move(cs));
            }
            if (ps.back().is_zero()) continue;
            // verify on every available row, held-out tail included
            bool ok = true;
            for (long n = 0; ok && n + d < len; ++n) {
                Rational acc(0);
                for (int i = 0; i <= d; ++i)
                    acc += Rational(ps[static_cast<std::size_t>(i)].eval(n)) *
                           seq[static_cast<std::size_t>(n + i)];
                ok = acc == 0;
            }
            if (!ok) continue;
            // strip numeric content and any common polynomial factor
            UnivariatePoly g = ps[0];
            for (std::size_t i = 1; i < ps.size(); ++i) g = detail::upoly_gcd(g, ps[i]);
            if (!g.is_zero() && g.degree() >= 1)
                for (auto& p : ps)
                    p = p.is_zero() ? p : detail::upoly_divide_exact(p, g);
            Integer content(0);
            for (const auto& p : ps)
                for (const auto& c : p.coefficients()) content = gcd(content, c);
            if (ps.back().leading() < 0) content = -content;
            for (auto& p : ps) {
                std::vector<Integer> cs;
                for (const auto& c : p.coefficients()) cs.push_back(c / content);
                p = UnivariatePoly(std::move(cs));
            }
            return Recurrence{std::move(ps)};
        }
    }
    return std::nullopt;
}

// Exact extension of a seeded sequence to N total terms.
inline std::vector<Rational> extend_sequence(const Recurrence& rec,
                                             std::span<const Rational> seed, long N) {
    int d = rec.order();
    if (static_cast<long>(seed.size()) < d)
        throw UsageError("extend_sequence: seed shorter than the recurrence order");
    std::vector<Rational> out(seed.begin(), seed.end());
    if (static_cast<long>(out.size()) > N) out.resize(static_cast<std::size_t>(N));
    while (static_cast<long>(out.size()) < N) {
        long n = static_cast<long>(out.size()) - d;
        Integer lead = rec.coeffs.back().eval(n);
        if (lead == 0) throw SingularLeadingCoefficient(n);
        Rational acc(0);
        for (int i = 0; i < d; ++i)
            acc += Rational(rec.coeffs[static_cast<std::size_t>(i)].eval(n)) *
                   out[static_cast<std::size_t>(n + i)];
        out.push_back(-acc / Rational(lead));
    }
    return out;
}

// Estimates of the area constant: e(n) = m(n,1) / (m(n,0) n^{3/2}) over the
// support of the counting sequence, plus a Richardson-accelerated tail value.
// Convergence is reported, never asserted.
struct AreaConstantEstimates {
    std::vector<std::pair<long, Rational>> estimates; // (n, e(n)), support only
    std::optional<Rational> accelerated;
    long period = 1;
};

inline AreaConstantEstimates estimate_area_constants(const StepSet& S, int N) {
    if (!S.nontrivial()) throw UsageError("estimate_area_constants needs a nontrivial step set");
    if (N < 20) throw UsageError("estimate_area_constants needs N >= 20");
    MomentTable mt = moment_table(S, N, 1);
    AreaConstantEstimates out;
    Integer period(0);
    for (int n = 1; n <= N; ++n)
        if (mt.moment(n, 0) != 0) period = gcd(period, Integer(n));
    out.period = period == 0 ? 1 : period.get_si();
    const unsigned long bits = 96;
    Integer scale = pow(Integer(2), bits);
    for (int n = 1; n <= N; ++n) {
        if (mt.moment(n, 0) == 0) continue;
        // n^{3/2} = n * sqrt(n); sqrt(n) ~ isqrt(n * 4^bits) / 2^bits
        Integer root = isqrt(Integer(n) * scale * scale);
        Rational e = mt.moment(n, 1) * Rational(scale) /
                     (mt.moment(n, 0) * Rational(root) * Rational(n));
        e.canonicalize();
        out.estimates.emplace_back(n, std::move(e));
    }
    if (out.estimates.size() >= 2) {
        // with e(n) = L + c/n + o(1/n): L ~ (n e(n) - (n-p) e(n-p)) / p
        auto [n2, e2] = out.estimates.back();
        auto [n1, e1] = out.estimates[out.estimates.size() - 2];
        Rational acc = (Rational(n2) * e2 - Rational(n1) * e1) / Rational(n2 - n1);
        acc.canonicalize();
        out.accelerated = std::move(acc);
    }
    return out;
}

} // namespace walkgf
