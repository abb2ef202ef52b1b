#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "walkgf/errors.hpp"

namespace walkgf {

// Finite set of integer step heights S with its derived positive part P and
// negative part N. Walks take steps (1, s) for s in S, stay in y >= 0, and
// start/end on the x-axis.
class StepSet {
public:
    StepSet() = default;

    explicit StepSet(const std::vector<int>& steps) {
        std::set<int> uniq(steps.begin(), steps.end()); // duplicates collapse
        steps_.assign(uniq.begin(), uniq.end());
        for (int s : steps_) {
            if (s > 0) positive_.push_back(s);
            else if (s < 0) negative_.push_back(s);
            else has_zero_ = true;
        }
    }

    const std::vector<int>& steps() const { return steps_; }
    const std::vector<int>& positive() const { return positive_; }
    const std::vector<int>& negative() const { return negative_; }
    bool has_zero() const { return has_zero_; }
    bool empty() const { return steps_.empty(); }

    // Nontrivial means the walk family is not just the empty walk or flat runs.
    bool nontrivial() const { return !positive_.empty() && !negative_.empty(); }

    int max_up() const { return positive_.empty() ? 0 : positive_.back(); }
    int max_down() const { return negative_.empty() ? 0 : -negative_.front(); }

    bool contains(int s) const {
        return std::binary_search(steps_.begin(), steps_.end(), s);
    }

    StepSet reversed() const {
        std::vector<int> r;
        r.reserve(steps_.size());
        for (int s : steps_) r.push_back(-s);
        return StepSet(r);
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(steps_[i]);
        }
        return out + "}";
    }

    // Parses a comma-separated list like "1,-1" or "{2,1,0,-1,-2}".
    static StepSet parse(std::string_view text) {
        std::vector<int> vals;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) return;
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(cur, &pos);
            } catch (const std::exception&) {
                throw UsageError("invalid step value: '" + cur + "'");
            }
            if (pos != cur.size()) throw UsageError("invalid step value: '" + cur + "'");
            vals.push_back(v);
            cur.clear();
        };
        for (char c : text) {
            if (c == ',' || c == ' ' || c == '{' || c == '}') {
                flush();
            } else {
                cur += c;
            }
        }
        flush();
        return StepSet(vals);
    }

    friend bool operator==(const StepSet& a, const StepSet& b) = default;

private:
    std::vector<int> steps_;    // ascending
    std::vector<int> positive_; // ascending
    std::vector<int> negative_; // ascending
    bool has_zero_ = false;
};

enum class QuantityKind { F, G };

// One of the auxiliary weight enumerators f[a,b] / g[a,b]: walks from height a
// to height b, weakly (F) or strictly (G) above the x-axis.
struct QuantityRef {
    QuantityKind kind;
    int a = 0;
    int b = 0;

    std::string name() const {
        return (kind == QuantityKind::F ? "f[" : "g[") + std::to_string(a) + "," +
               std::to_string(b) + "]";
    }

    friend std::strong_ordering operator<=>(const QuantityRef& x, const QuantityRef& y) {
        if (x.kind != y.kind)
            return x.kind == QuantityKind::F ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        if (x.a != y.a) return x.a <=> y.a;
        return x.b <=> y.b;
    }
    friend bool operator==(const QuantityRef& x, const QuantityRef& y) = default;
};

} // namespace walkgf
