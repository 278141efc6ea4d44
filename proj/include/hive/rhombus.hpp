#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <vector>

#include "hive/coords.hpp"
#include "hive/labeling.hpp"
#include "hive/rational.hpp"

namespace hive {

/// The three orientation families of rhombus inequalities, written in row
/// coordinates with a^i_k the label at (i, k):
///
///   R1 at (i,k):  a^{i+1}_k + a^i_k      >=  a^i_{k+1} + a^{i+1}_{k-1}
///   R2 at (i,k):  a^i_k + a^{i+1}_{k-1}  >=  a^i_{k-1} + a^{i+1}_k
///   R3 at (i,k):  a^i_k + a^i_{k-1}      >=  a^{i+1}_{k-1} + a^{i-1}_k
///
/// The left-hand vertices are the obtuse corners (the shared edge of the two
/// small triangles forming the rhombus), the right-hand ones the acute
/// corners.
enum class Orientation { R1, R2, R3 };

struct Rhombus {
    Orientation orientation = Orientation::R1;
    HiveCoord anchor;  // the (i, k) in the table above
    friend auto operator<=>(const Rhombus&, const Rhombus&) = default;
};

inline std::array<HiveCoord, 2> obtuse_vertices(const Rhombus& r) {
    int i = r.anchor.i, k = r.anchor.k;
    switch (r.orientation) {
        case Orientation::R1: return {HiveCoord{i + 1, k}, HiveCoord{i, k}};
        case Orientation::R2: return {HiveCoord{i, k}, HiveCoord{i + 1, k - 1}};
        case Orientation::R3: return {HiveCoord{i, k}, HiveCoord{i, k - 1}};
    }
    throw std::logic_error("unreachable");
}

inline std::array<HiveCoord, 2> acute_vertices(const Rhombus& r) {
    int i = r.anchor.i, k = r.anchor.k;
    switch (r.orientation) {
        case Orientation::R1: return {HiveCoord{i, k + 1}, HiveCoord{i + 1, k - 1}};
        case Orientation::R2: return {HiveCoord{i, k - 1}, HiveCoord{i + 1, k}};
        case Orientation::R3: return {HiveCoord{i + 1, k - 1}, HiveCoord{i - 1, k}};
    }
    throw std::logic_error("unreachable");
}

inline std::array<HiveCoord, 4> rhombus_vertices(const Rhombus& r) {
    auto o = obtuse_vertices(r);
    auto a = acute_vertices(r);
    return {o[0], o[1], a[0], a[1]};
}

/// Every rhombus inequality of the side-n triangle, each pair of adjacent
/// small triangles appearing exactly once; n(n-1)/2 per orientation family.
inline std::vector<Rhombus> all_rhombi(int n) {
    if (n < 0) throw std::invalid_argument("side size must be nonnegative");
    std::vector<Rhombus> out;
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n - i; ++k) out.push_back({Orientation::R1, {i, k}});
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n - i; ++k) out.push_back({Orientation::R2, {i, k}});
    for (int i = 2; i <= n; ++i)
        for (int k = 1; k <= n + 1 - i; ++k) out.push_back({Orientation::R3, {i, k}});
    return out;
}

/// Obtuse sum minus acute sum; the inequality holds iff this is >= 0 and is
/// tight iff it is 0.
inline Rational rhombus_slack(const Labeling& l, const Rhombus& r) {
    auto o = obtuse_vertices(r);
    auto a = acute_vertices(r);
    return l.at(o[0]) + l.at(o[1]) - l.at(a[0]) - l.at(a[1]);
}

struct RhombusViolation {
    Rhombus rhombus;
    Rational deficit;  // acute sum - obtuse sum, positive
};

/// Empty result iff the labeling is a hive.
inline std::vector<RhombusViolation> check_labeling(const Labeling& l) {
    std::vector<RhombusViolation> out;
    for (const Rhombus& r : all_rhombi(l.side())) {
        Rational s = rhombus_slack(l, r);
        if (s < 0) out.push_back({r, -s});
    }
    return out;
}

inline bool is_hive(const Labeling& l) { return check_labeling(l).empty(); }

}  // namespace hive
