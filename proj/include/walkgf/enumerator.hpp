#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "walkgf/rational.hpp"
#include "walkgf/step_set.hpp"

namespace walkgf {

// Exact table of m(n, r) = sum over admissible walks of length n of area(w)^r,
// where area is the trapezoid area sum_k (y_k + y_{k+1})/2. Weak walks stay in
// y >= 0; strict walks additionally touch the axis only at their endpoints
// (the one-step flat walk at height 0 is not a strict excursion: the
// construction rules require a positive first step and a negative last step).
class MomentTable {
public:
    MomentTable(StepSet steps, int max_length, int max_power, bool strict,
                std::vector<std::vector<Rational>> cells)
        : steps_(std::move(steps)),
          max_length_(max_length),
          max_power_(max_power),
          strict_(strict),
          cells_(std::move(cells)) {}

    const StepSet& steps() const { return steps_; }
    int max_length() const { return max_length_; }
    int max_power() const { return max_power_; }
    bool strict() const { return strict_; }

    const Rational& moment(int n, int r) const {
        if (n < 0 || n > max_length_ || r < 0 || r > max_power_)
            throw UsageError("moment index out of range");
        return cells_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
    }

    // m(n, 0) is always a nonnegative integer: the walk count.
    Integer count(int n) const { return numerator(moment(n, 0)); }

    std::vector<Rational> column(int r) const {
        std::vector<Rational> out;
        out.reserve(cells_.size());
        for (const auto& row : cells_) out.push_back(row[static_cast<std::size_t>(r)]);
        return out;
    }

private:
    StepSet steps_;
    int max_length_;
    int max_power_;
    bool strict_;
    std::vector<std::vector<Rational>> cells_; // [n][r]
};

namespace detail {

// M'_j = sum_k C(j,k) w^{j-k} M_k : appending a step of doubled-area weight w
// to every walk in the bucket.
inline void accumulate_shifted(std::vector<Integer>& dst, const std::vector<Integer>& src,
                               long w, const std::vector<std::vector<Integer>>& binom) {
    int R = static_cast<int>(src.size()) - 1;
    std::vector<Integer> wpow(static_cast<std::size_t>(R) + 1);
    wpow[0] = 1;
    for (int m = 1; m <= R; ++m) wpow[static_cast<std::size_t>(m)] = wpow[m - 1] * w;
    for (int j = R; j >= 0; --j) {
        Integer acc(0);
        for (int k = 0; k <= j; ++k)
            acc += binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                   wpow[static_cast<std::size_t>(j - k)] * src[static_cast<std::size_t>(k)];
        dst[static_cast<std::size_t>(j)] += acc;
    }
}

inline std::vector<std::vector<Integer>> binomial_rows(int R) {
    std::vector<std::vector<Integer>> b(static_cast<std::size_t>(R) + 1);
    for (int j = 0; j <= R; ++j) {
        b[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(j) + 1);
        for (int k = 0; k <= j; ++k)
            b[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k));
    }
    return b;
}

} // namespace detail

// Dynamic-programming enumeration carrying the vector of doubled-area power
// sums M_r = sum (2*area)^r per (length, height) state; division by 2^r
// happens only when the table is reported. Heights are capped exactly: a walk
// of length <= N that still has to come back to 0 can never exceed
// min(k*max_up, (N-k)*max_down) at step k.
inline MomentTable moment_table(const StepSet& S, int N, int R, bool strict = false) {
    if (N < 0 || R < 0) throw UsageError("moment_table requires N >= 0 and R >= 0");
    auto binom = detail::binomial_rows(R);
    const long max_up = S.max_up(), max_down = S.max_down();
    std::vector<std::vector<Rational>> cells(
        static_cast<std::size_t>(N) + 1,
        std::vector<Rational>(static_cast<std::size_t>(R) + 1, Rational(0)));
    auto zero_bucket = [&] { return std::vector<Integer>(static_cast<std::size_t>(R) + 1); };
    // state[y] = power-sum vector over walks currently at height y
    std::map<long, std::vector<Integer>> state;

    auto settle = [&](int n, const std::vector<Integer>& M) {
        for (int r = 0; r <= R; ++r) {
            Rational v(M[static_cast<std::size_t>(r)], pow(Integer(2), static_cast<unsigned long>(r)));
            v.canonicalize();
            cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] += v;
        }
    };

    if (!strict) {
        auto start = zero_bucket();
        start[0] = 1; // empty walk: (2*area)^0 = 1, higher powers 0
        state[0] = start;
        settle(0, state[0]);
        for (int k = 1; k <= N; ++k) {
            long cap = std::min(static_cast<long>(k) * max_up,
                                static_cast<long>(N - k) * max_down);
            std::map<long, std::vector<Integer>> next;
            for (const auto& [y, M] : state) {
                for (int s : S.steps()) {
                    long y2 = y + s;
                    if (y2 < 0 || y2 > cap) continue;
                    auto [it, inserted] = next.try_emplace(y2, zero_bucket());
                    detail::accumulate_shifted(it->second, M, y + y2, binom);
                }
            }
            state = std::move(next);
            if (auto it = state.find(0); it != state.end()) settle(k, it->second);
        }
    } else {
        // seed with the first (positive) step, close with the final step to 0;
        // interior heights stay >= 1
        auto empty_walk = zero_bucket();
        empty_walk[0] = 1;
        for (int s : S.positive()) {
            if (N >= 2 && s <= static_cast<long>(N - 1) * max_down) {
                auto [it, inserted] = state.try_emplace(s, zero_bucket());
                detail::accumulate_shifted(it->second, empty_walk, s, binom);
            }
        }
        for (int k = 1; k < N; ++k) {
            // close walks of length k+1
            for (const auto& [y, M] : state) {
                if (S.contains(static_cast<int>(-y))) {
                    auto closed = zero_bucket();
                    detail::accumulate_shifted(closed, M, y, binom);
                    settle(k + 1, closed);
                }
            }
            if (k + 1 >= N) break;
            long cap = std::min(static_cast<long>(k + 1) * max_up,
                                static_cast<long>(N - k - 1) * max_down);
            std::map<long, std::vector<Integer>> next;
            for (const auto& [y, M] : state) {
                for (int s : S.steps()) {
                    long y2 = y + s;
                    if (y2 < 1 || y2 > cap) continue;
                    auto [it, inserted] = next.try_emplace(y2, zero_bucket());
                    detail::accumulate_shifted(it->second, M, y + y2, binom);
                }
            }
            state = std::move(next);
        }
    }
    return MomentTable(S, N, R, strict, std::move(cells));
}

struct WalkRecord {
    std::vector<int> steps;
    Rational area; // exact trapezoid area
};

// Exhaustive enumeration of admissible walks of length n with their areas.
// Test oracle: wildly slower than the DP but independent of it.
inline std::vector<WalkRecord> brute_force_walks(const StepSet& S, int n, bool strict = false) {
    if (n < 0) throw UsageError("walk length must be nonnegative");
    double total = std::pow(static_cast<double>(S.steps().size()), n);
    if (total > 1e7) throw UsageError("brute force guard: |S|^n exceeds 10^7");
    std::vector<WalkRecord> out;
    if (S.empty()) {
        if (n == 0 && !strict) out.push_back({{}, Rational(0)});
        return out;
    }
    if (n == 0) {
        if (!strict) out.push_back({{}, Rational(0)});
        return out;
    }
    if (strict && n < 2) return out; // no strict excursion is a single step
    std::vector<int> walk(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int k, long y, long doubled) -> void {
        if (k == n) {
            if (y == 0) {
                Rational a(doubled, 2);
                a.canonicalize();
                out.push_back({walk, std::move(a)});
            }
            return;
        }
        for (int s : S.steps()) {
            long y2 = y + s;
            long low = (strict && k + 1 < n) ? 1 : 0;
            if (y2 < low) continue;
            walk[static_cast<std::size_t>(k)] = s;
            self(self, k + 1, y2, doubled + y + y2);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

// Column r of the moment table: the exact series m(0,r), ..., m(N,r).
inline std::vector<Rational> series_vector(const StepSet& S, int N, int r, bool strict = false) {
    return moment_table(S, N, r, strict).column(r);
}

} // namespace walkgf
