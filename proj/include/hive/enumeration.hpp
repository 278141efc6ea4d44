#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hive/border.hpp"
#include "hive/coords.hpp"
#include "hive/errors.hpp"
#include "hive/labeling.hpp"
#include "hive/partition.hpp"
#include "hive/rational.hpp"
#include "hive/rhombus.hpp"

namespace hive {

/// A hive polytope rho^{-1}(b) cap C presented with its fixed interior
/// search order (row-major).
struct HivePolytopeInstance {
    Border border;
    std::vector<HiveCoord> interior;

    explicit HivePolytopeInstance(Border b)
        : border(std::move(b)), interior(interior_coords(border.side())) {}
};

/// Interval implied for the next unassigned interior coordinate by every
/// rhombus whose other three vertices are already assigned (border values
/// plus the given prefix of the interior order).  Returns an empty map when
/// nothing is left to assign; an empty interval (lower > upper) signals a
/// dead branch.
inline std::map<HiveCoord, std::pair<Rational, Rational>> interior_bounds(
    const HivePolytopeInstance& inst, const std::map<HiveCoord, Rational>& partial) {
    int n = inst.border.side();
    std::size_t next = 0;
    while (next < inst.interior.size() && partial.count(inst.interior[next])) ++next;
    for (std::size_t j = next; j < inst.interior.size(); ++j)
        if (partial.count(inst.interior[j]))
            throw std::invalid_argument("partial assignment is not a prefix of the interior order");

    std::map<HiveCoord, std::pair<Rational, Rational>> out;
    if (next == inst.interior.size()) return out;
    HiveCoord target = inst.interior[next];

    auto value_of = [&](HiveCoord c) -> std::optional<Rational> {
        if (is_border(n, c)) return inst.border.at(c);
        auto it = partial.find(c);
        if (it != partial.end()) return it->second;
        return std::nullopt;
    };

    std::optional<Rational> lower, upper;
    for (const Rhombus& r : all_rhombi(n)) {
        auto obt = obtuse_vertices(r);
        auto acu = acute_vertices(r);
        bool target_obtuse = (obt[0] == target || obt[1] == target);
        bool target_acute = (acu[0] == target || acu[1] == target);
        if (!target_obtuse && !target_acute) continue;
        Rational rest = 0;
        bool all_known = true;
        for (HiveCoord c : {obt[0], obt[1]}) {
            if (c == target) continue;
            auto v = value_of(c);
            if (!v) { all_known = false; break; }
            rest += *v;
        }
        if (all_known)
            for (HiveCoord c : {acu[0], acu[1]}) {
                if (c == target) continue;
                auto v = value_of(c);
                if (!v) { all_known = false; break; }
                rest -= *v;
            }
        if (!all_known) continue;
        if (target_obtuse) {
            // target + rest >= 0
            Rational bound = -rest;
            if (!lower || bound > *lower) lower = bound;
        } else {
            // rest - target >= 0
            if (!upper || rest < *upper) upper = rest;
        }
    }
    if (!lower || !upper)
        throw InvariantViolation("interior coordinate missing a one-sided bound");
    out[target] = {*lower, *upper};
    return out;
}

namespace detail {

// Precomputed search plan over an integral border.  Each rhombus is charged
// to the last interior vertex it mentions (in row-major order); assigning
// that vertex turns the inequality into a one-sided integer bound, so every
// rhombus is enforced exactly once and no post-hoc check is needed.
struct SearchPlan {
    std::vector<HiveCoord> interior;
    struct BoundSpec {
        bool lower;                                       // target is obtuse
        Int border_part;                                  // signed border contribution
        std::vector<std::pair<int, int>> interior_terms;  // (sign, earlier slot)
    };
    std::vector<std::vector<BoundSpec>> steps;
};

// nullopt when an all-border rhombus already fails (empty polytope).
inline std::optional<SearchPlan> make_plan(const Border& b) {
    int n = b.side();
    SearchPlan plan;
    plan.interior = interior_coords(n);
    plan.steps.resize(plan.interior.size());

    std::map<HiveCoord, int> slot;
    for (std::size_t t = 0; t < plan.interior.size(); ++t)
        slot[plan.interior[t]] = static_cast<int>(t);

    for (const Rhombus& r : all_rhombi(n)) {
        auto obt = obtuse_vertices(r);
        auto acu = acute_vertices(r);
        int completion = -1;
        for (HiveCoord c : rhombus_vertices(r))
            if (!is_border(n, c)) completion = std::max(completion, slot.at(c));
        if (completion < 0) {
            if (b.at(obt[0]) + b.at(obt[1]) - b.at(acu[0]) - b.at(acu[1]) < 0)
                return std::nullopt;
            continue;
        }
        HiveCoord target = plan.interior[completion];
        SearchPlan::BoundSpec spec;
        spec.lower = (obt[0] == target || obt[1] == target);
        spec.border_part = 0;
        auto add = [&](HiveCoord c, int sign) {
            if (c == target) return;
            if (is_border(n, c))
                spec.border_part += sign * numerator(b.at(c));
            else
                spec.interior_terms.emplace_back(sign, slot.at(c));
        };
        add(obt[0], +1);
        add(obt[1], +1);
        add(acu[0], -1);
        add(acu[1], -1);
        plan.steps[completion].push_back(std::move(spec));
    }
    return plan;
}

// Depth-first over integral interior values, lexicographic in the row-major
// order.  The visitor returns false to stop the stream early.
inline bool search(const SearchPlan& plan, std::size_t t, std::vector<Int>& vals,
                   const std::function<bool(const std::vector<Int>&)>& visit) {
    if (t == plan.interior.size()) return visit(vals);
    std::optional<Int> lo, hi;
    for (const auto& spec : plan.steps[t]) {
        Int rest = spec.border_part;
        for (const auto& [sign, s] : spec.interior_terms) rest += sign * vals[s];
        if (spec.lower) {
            Int bound = -rest;
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || rest < *hi) hi = rest;
        }
    }
    if (!lo || !hi) throw InvariantViolation("unbounded interior coordinate");
    for (Int v = *lo; v <= *hi; ++v) {
        vals[t] = v;
        if (!search(plan, t + 1, vals, visit)) return false;
    }
    return true;
}

}  // namespace detail

/// Streams every integral hive over b in deterministic (lexicographic in the
/// row-major interior order) order.  The visitor returns false to stop.
inline void for_each_integral_hive(const Border& b,
                                   const std::function<bool(const Labeling&)>& visit) {
    if (!is_integral(b)) throw std::invalid_argument("border must be integral");
    auto plan = detail::make_plan(b);
    if (!plan) return;
    std::vector<Int> vals(plan->interior.size());
    detail::search(*plan, 0, vals, [&](const std::vector<Int>& interior_vals) {
        std::vector<Rational> interior_rats(interior_vals.begin(), interior_vals.end());
        return visit(labeling_from_border(b, interior_rats));
    });
}

/// Exact count of integral points of rho^{-1}(b) cap C; 0 when empty.
inline Int count_integral_hives(const Border& b) {
    Int count = 0;
    for_each_integral_hive(b, [&](const Labeling&) {
        ++count;
        return true;
    });
    return count;
}

inline std::vector<Labeling> enumerate_integral_hives(const Border& b) {
    std::vector<Labeling> out;
    for_each_integral_hive(b, [&](const Labeling& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

struct LRQuery {
    Partition lambda, mu, nu;
    int n;

    LRQuery(Partition l, Partition m, Partition v, int side)
        : lambda(std::move(l)), mu(std::move(m)), nu(std::move(v)), n(side) {
        if (n < 1) throw std::invalid_argument("side size must be at least 1");
        if (lambda.length() > static_cast<std::size_t>(n) ||
            mu.length() > static_cast<std::size_t>(n) ||
            nu.length() > static_cast<std::size_t>(n))
            throw std::invalid_argument("partition longer than side size");
    }

    LRQuery(const Partition& l, const Partition& m, const Partition& v)
        : LRQuery(l, m, v,
                  static_cast<int>(std::max(
                      {l.length(), m.length(), v.length(), std::size_t(1)}))) {}
};

/// c^nu_{lambda,mu} as the number of integral hives; 0 outright when the
/// weights do not add up.  Padding n does not change the value.
inline Int lr_coefficient(const LRQuery& q) {
    if (q.nu.weight() != q.lambda.weight() + q.mu.weight()) return 0;
    return count_integral_hives(border_from_triple(q.lambda, q.mu, q.nu, q.n));
}

inline Int lr_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
    return lr_coefficient(LRQuery(lambda, mu, nu));
}

}  // namespace hive
