#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "walkgf/polynomial.hpp"

namespace walkgf {

// Resource limits for basis completion. Elimination over Q[t] can blow up;
// these make it fail loudly instead of hanging.
struct Budget {
    std::size_t max_pairs = 200'000;
    unsigned max_total_degree = 120;
    std::size_t max_basis = 5'000;
    double timeout_seconds = 0.0; // 0 disables the wall-clock check
};

struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t reduction_steps = 0;
    unsigned max_degree_seen = 0;
    std::size_t basis_size = 0;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, BuchbergerStats stats)
        : std::runtime_error(msg), stats(stats) {}
    BuchbergerStats stats;
};

struct IdealBasis {
    std::vector<Polynomial> generators;
    bool is_groebner = false;
};

// S(f,g) = (lcm/lt(f))*f - (lcm/lt(g))*g; the leading terms cancel.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial of zero polynomial");
    require_same_table(f.table(), g.table());
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s(f.table());
    s.add_scaled(Rational(1) / f.leading_coefficient(), l / f.leading_monomial(), f);
    s.add_scaled(Rational(-1) / g.leading_coefficient(), l / g.leading_monomial(), g);
    return s;
}

namespace detail {

inline std::size_t find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!basis[k].is_zero() && basis[k].leading_monomial().divides(m)) return k;
    return basis.size();
}

// Internal variant: among applicable reducers prefer the sparsest (fewest
// terms, ties by index). Cuts merge and coefficient-growth cost; the final
// basis is unaffected since reduced bases are history-independent.
inline std::size_t find_best_reducer(const Monomial& m, std::span<const Polynomial> basis) {
    std::size_t best = basis.size();
    std::size_t best_terms = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].is_zero() || !basis[k].leading_monomial().divides(m)) continue;
        if (best == basis.size() || basis[k].term_count() < best_terms) {
            best = k;
            best_terms = basis[k].term_count();
        }
    }
    return best;
}

// Fraction-free normal form: returns the primitive part of a positive rational
// multiple of the true normal form (zero iff the true normal form is zero).
// Coefficients stay integral throughout; content is stripped at the end and
// periodically along the way to keep them small.
inline Polynomial reduce_primitive(Polynomial w, std::span<const Polynomial> basis,
                                   BuchbergerStats* stats = nullptr, bool top_only = false) {
    TablePtr table = w.table();
    if (!w.is_zero()) w = w.primitive_part(); // integral coefficients from here on
    std::vector<Term> done; // irreducible prefix, same running scale as w
    unsigned steps_since_strip = 0;
    while (!w.is_zero()) {
        const auto& ts = w.terms();
        std::size_t k = 0, red = basis.size();
        for (; k < ts.size(); ++k) {
            red = find_best_reducer(ts[k].mono, basis);
            if (red != basis.size()) break;
            if (top_only) break; // leading term irreducible: done
            done.push_back(ts[k]);
        }
        if (top_only && red == basis.size()) {
            done.insert(done.end(), ts.begin(), ts.end());
            break;
        }
        if (k == ts.size()) break; // fully irreducible
        Term lt = ts[k];
        w = Polynomial::from_sorted_terms(table,
                                          std::vector<Term>(ts.begin() + k, ts.end()));
        const Polynomial& g = basis[red];
        Integer a = numerator(lt.coef);
        Integer b = numerator(g.leading_coefficient());
        Integer d = gcd(a, b);
        Rational scale(b / d);
        if (scale != 1) {
            for (auto& t : done) t.coef *= scale;
            w *= scale;
        }
        w.add_scaled(Rational(-(a / d)), lt.mono / g.leading_monomial(), g);
        if (stats) ++stats->reduction_steps;
        if (++steps_since_strip >= 16) {
            steps_since_strip = 0;
            // joint content strip of prefix and tail keeps the scaling coherent
            Integer c(0);
            for (const auto& t : done) c = gcd(c, numerator(t.coef));
            for (const auto& t : w.terms()) c = gcd(c, numerator(t.coef));
            if (c > 1) {
                Rational inv(Integer(1), c);
                inv.canonicalize();
                for (auto& t : done) t.coef *= inv;
                w *= inv;
            }
        }
    }
    if (done.empty()) return Polynomial(table);
    Polynomial r = Polynomial::from_sorted_terms(table, std::move(done));
    return r.primitive_part();
}

struct PairKey {
    Monomial l;
    std::size_t i, j;
    bool operator<(const PairKey& other) const {
        if (auto c = l <=> other.l; c != 0) return c == std::strong_ordering::less;
        if (i != other.i) return i < other.i;
        return j < other.j;
    }
};

// Fraction-free S-polynomial with integral coefficients, already primitive.
inline Polynomial s_polynomial_primitive(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Integer a = numerator(f.leading_coefficient());
    Integer b = numerator(g.leading_coefficient());
    Integer d = gcd(a, b);
    Polynomial s(f.table());
    s.add_scaled(Rational(b / d), l / f.leading_monomial(), f);
    s.add_scaled(Rational(-(a / d)), l / g.leading_monomial(), g);
    if (s.is_zero()) return s;
    return s.primitive_part();
}

} // namespace detail

// Normal form of f modulo the basis: no monomial of the result is divisible by
// any generator's leading monomial, and f - result lies in the generated
// ideal. Deterministic: the greatest reducible monomial is always reduced by
// the first applicable generator in list order.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
    for (const auto& g : basis) require_same_table(f.table(), g.table());
    TablePtr table = f.table();
    std::vector<Term> done;
    Polynomial w = f;
    while (!w.is_zero()) {
        const auto& ts = w.terms();
        std::size_t k = 0, red = basis.size();
        for (; k < ts.size(); ++k) {
            red = detail::find_reducer(ts[k].mono, basis);
            if (red != basis.size()) break;
            done.push_back(ts[k]);
        }
        if (k == ts.size()) break;
        Term lt = ts[k];
        w = Polynomial::from_sorted_terms(table,
                                          std::vector<Term>(ts.begin() + k, ts.end()));
        const Polynomial& g = basis[red];
        w.add_scaled(-lt.coef / g.leading_coefficient(), lt.mono / g.leading_monomial(), g);
    }
    return Polynomial::from_sorted_terms(table, std::move(done));
}

inline Polynomial reduce(const Polynomial& f, const IdealBasis& basis) {
    return reduce(f, std::span<const Polynomial>(basis.generators));
}

inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    return reduce(f, std::span<const Polynomial>(basis));
}

// Buchberger completion with the Gebauer-Moeller pair update (coprimality and
// chain criteria) and normal pair selection (smallest lcm in the lex order).
// Returns the reduced Groebner basis: inter-reduced, primitive-normalized,
// sorted by increasing leading monomial — the canonical representative.
inline IdealBasis buchberger(std::vector<Polynomial> gens, const Budget& budget = {},
                             BuchbergerStats* stats_out = nullptr) {
    if (gens.empty()) throw UsageError("buchberger requires a nonempty generator list");
    for (const auto& g : gens) require_same_table(gens.front().table(), g.table());

    BuchbergerStats stats;
    auto started = std::chrono::steady_clock::now();
    auto publish = [&] {
        if (stats_out) *stats_out = stats;
    };
    auto check_time = [&] {
        if (budget.timeout_seconds > 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - started;
            if (dt.count() > budget.timeout_seconds) {
                publish();
                throw BudgetError("groebner: wall-clock budget exceeded", stats);
            }
        }
    };

    struct Entry {
        Polynomial poly;
        bool alive = true;
    };
    std::vector<Entry> store;

    std::set<detail::PairKey> pending;

    auto alive_reducers = [&] {
        std::vector<Polynomial> r;
        r.reserve(store.size());
        for (const auto& e : store)
            if (e.alive) r.push_back(e.poly);
        return r;
    };

    // Gebauer-Moeller update for a freshly stored element.
    auto update_pairs = [&](std::size_t t) {
        const Monomial& lt = store[t].poly.leading_monomial();
        struct Cand {
            Monomial l;
            std::size_t i;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i) {
            if (!store[i].alive) continue;
            const Monomial& li = store[i].poly.leading_monomial();
            cands.push_back({Monomial::lcm(li, lt), i, li.coprime(lt)});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (auto c = a.l <=> b.l; c != 0) return c == std::strong_ordering::less;
            return a.i < b.i;
        });
        std::vector<Cand> kept;
        for (std::size_t n = 0; n < cands.size(); ++n) {
            const Cand& c = cands[n];
            if (!c.coprime) {
                bool dominated = false;
                for (std::size_t m = n + 1; m < cands.size() && !dominated; ++m)
                    if (cands[m].l.divides(c.l)) dominated = true;
                for (const Cand& k : kept)
                    if (dominated) break;
                    else if (k.l.divides(c.l)) dominated = true;
                if (dominated) continue;
            }
            kept.push_back(c);
        }
        // chain criterion against the existing pair set
        for (auto it = pending.begin(); it != pending.end();) {
            const Monomial& li = store[it->i].poly.leading_monomial();
            const Monomial& lj = store[it->j].poly.leading_monomial();
            if (lt.divides(it->l) && Monomial::lcm(li, lt) != it->l &&
                Monomial::lcm(lj, lt) != it->l)
                it = pending.erase(it);
            else
                ++it;
        }
        for (const Cand& c : kept)
            if (!c.coprime) pending.insert({c.l, c.i, t});
        // newer head dominating an older one retires the older element
        for (std::size_t i = 0; i < t; ++i)
            if (store[i].alive && lt.divides(store[i].poly.leading_monomial()))
                store[i].alive = false;
    };

    auto admit = [&](Polynomial p) {
        unsigned deg = p.total_degree();
        stats.max_degree_seen = std::max(stats.max_degree_seen, deg);
        if (deg > budget.max_total_degree) {
            publish();
            throw BudgetError("groebner: total degree budget exceeded", stats);
        }
        store.push_back({std::move(p), true});
        stats.basis_size =
            std::count_if(store.begin(), store.end(), [](const Entry& e) { return e.alive; });
        if (stats.basis_size > budget.max_basis) {
            publish();
            throw BudgetError("groebner: basis size budget exceeded", stats);
        }
        update_pairs(store.size() - 1);
    };

    // normal forms from the start keep alive heads pairwise non-divisible
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial h = detail::reduce_primitive(g.primitive_part(), alive_reducers(), &stats);
        if (!h.is_zero()) admit(std::move(h));
    }

    while (!pending.empty()) {
        check_time();
        detail::PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        ++stats.pairs_considered;
        if (stats.pairs_considered > budget.max_pairs) {
            publish();
            throw BudgetError("groebner: pair budget exceeded", stats);
        }
        Polynomial s = detail::s_polynomial_primitive(store[pk.i].poly, store[pk.j].poly);
        std::vector<Polynomial> reducers = alive_reducers();
        Polynomial h = detail::reduce_primitive(std::move(s), reducers, &stats);
        ++stats.pairs_reduced;
        if (!h.is_zero()) admit(std::move(h));
    }

    // Reduced basis: heads are minimal already (normal forms never admit a
    // divisible head, and dominated elders were retired); one full-reduction
    // pass of each element modulo the rest yields the canonical form.
    std::vector<Polynomial> basis = alive_reducers();
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        if (auto c = a.leading_monomial() <=> b.leading_monomial(); c != 0)
            return c == std::strong_ordering::less;
        return compare(a, b) == std::strong_ordering::less;
    });
    for (std::size_t k = 0; k < basis.size();) {
        std::vector<Polynomial> rest;
        rest.reserve(basis.size() - 1);
        for (std::size_t m = 0; m < basis.size(); ++m)
            if (m != k) rest.push_back(basis[m]);
        Polynomial r = detail::reduce_primitive(basis[k], rest, &stats);
        if (r.is_zero()) {
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            basis[k] = std::move(r);
            ++k;
        }
    }
    stats.basis_size = basis.size();
    publish();
    return {std::move(basis), true};
}

struct EliminateOptions {
    Budget budget{};
    // Substitute away solved-form variables (v appearing only as a lone c*v
    // term) before running the completion; preserves the elimination ideal
    // exactly and shrinks the hard core of the computation.
    bool presubstitute = true;
};

namespace detail {

inline void presubstitute(std::vector<Polynomial>& gens, const std::vector<bool>& keep_mask) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < gens.size() && !changed; ++e) {
            const Polynomial& p = gens[e];
            if (p.is_zero()) continue;
            std::size_t nvars = p.table()->size();
            for (std::size_t v = 0; v < nvars && !changed; ++v) {
                if (keep_mask[v]) continue;
                // solved form: v occurs in exactly one term, which is v itself
                Rational c(0);
                bool solved = false;
                for (const auto& t : p.terms()) {
                    if (t.mono.exponent(v) == 0) continue;
                    if (solved || t.mono != Monomial::unit(nvars, v)) {
                        solved = false;
                        c = 0;
                        break;
                    }
                    solved = true;
                    c = t.coef;
                }
                if (!solved) continue;
                Polynomial value =
                    (Polynomial::term(p.table(), Monomial::unit(nvars, v), c) - p) *
                    (Rational(1) / c);
                std::vector<Polynomial> next;
                next.reserve(gens.size() - 1);
                for (std::size_t m = 0; m < gens.size(); ++m) {
                    if (m == e) continue;
                    Polynomial q = gens[m].uses(v) ? gens[m].substituted(v, value) : gens[m];
                    if (!q.is_zero()) next.push_back(std::move(q));
                }
                gens = std::move(next);
                changed = true;
            }
        }
    }
}

} // namespace detail

// Generators of the elimination ideal in the kept variables. The table must
// order every eliminated variable before (greater than) every kept one. The
// result is sorted by (degree in the greatest kept variable, total degree)
// and may be empty when no algebraic relation exists within budget.
inline std::vector<Polynomial> eliminate(std::vector<Polynomial> gens,
                                         const std::vector<std::size_t>& keep,
                                         const EliminateOptions& options = {},
                                         BuchbergerStats* stats = nullptr) {
    if (gens.empty()) throw UsageError("eliminate requires a nonempty generator list");
    TablePtr table = gens.front().table(); // keep alive across presubstitution
    for (const auto& g : gens) require_same_table(table, g.table());
    if (keep.empty()) throw UsageError("eliminate requires a nonempty kept-variable set");
    std::vector<bool> keep_mask(table->size(), false);
    for (std::size_t v : keep) {
        if (v >= table->size()) throw UsageError("kept variable index out of range");
        keep_mask[v] = true;
    }
    std::size_t first_kept = *std::min_element(keep.begin(), keep.end());
    for (std::size_t v = first_kept; v < table->size(); ++v)
        if (!keep_mask[v])
            throw UsageError("eliminated variables must precede kept variables in the table");

    if (options.presubstitute) detail::presubstitute(gens, keep_mask);
    if (gens.empty()) return {};

    IdealBasis basis = buchberger(std::move(gens), options.budget, stats);

    std::vector<Polynomial> kept;
    for (const auto& g : basis.generators) {
        bool ok = true;
        for (std::size_t v = 0; v < table->size() && ok; ++v)
            if (!keep_mask[v] && g.uses(v)) ok = false;
        if (ok && !g.is_zero()) kept.push_back(g);
    }
    std::size_t target = first_kept;
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree_in(target) != b.degree_in(target))
            return a.degree_in(target) < b.degree_in(target);
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return compare(a, b) == std::strong_ordering::less;
    });
    return kept;
}

inline std::vector<Polynomial> eliminate(std::vector<Polynomial> gens,
                                         const std::vector<std::string>& keep_names,
                                         const EliminateOptions& options = {},
                                         BuchbergerStats* stats = nullptr) {
    if (gens.empty()) throw UsageError("eliminate requires a nonempty generator list");
    std::vector<std::size_t> keep;
    keep.reserve(keep_names.size());
    for (const auto& n : keep_names) keep.push_back(gens.front().table()->index_of(n));
    return eliminate(std::move(gens), keep, options, stats);
}

} // namespace walkgf
