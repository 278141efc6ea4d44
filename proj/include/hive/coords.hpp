#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hive {

/// Vertex (i, k) of the side-n hive triangle.  Row i = 1..n+1 numbers the
/// northwest-to-southeast rows, row 1 being the long boundary row; k =
/// 0..n+1-i runs along the row.  The k = 0 entries form one slanted side
/// (they carry the partial sums of nu), the row ends k = n+1-i form the
/// bottom side, and row 1 carries the partial sums of lambda.
struct HiveCoord {
    int i = 1;
    int k = 0;
    friend auto operator<=>(const HiveCoord&, const HiveCoord&) = default;
};

constexpr std::size_t vertex_count(int n) {
    return static_cast<std::size_t>(n + 1) * (n + 2) / 2;
}

constexpr bool valid_coord(int n, HiveCoord c) {
    return c.i >= 1 && c.i <= n + 1 && c.k >= 0 && c.k <= n + 1 - c.i;
}

constexpr bool is_border(int n, HiveCoord c) {
    return c.i == 1 || c.k == 0 || c.k == n + 1 - c.i;
}

/// Row-major offset of a coordinate; rows are stored consecutively.
constexpr std::size_t coord_index(int n, HiveCoord c) {
    std::size_t before = static_cast<std::size_t>(c.i - 1) * (n + 2) -
                         static_cast<std::size_t>(c.i - 1) * c.i / 2;
    return before + static_cast<std::size_t>(c.k);
}

inline std::vector<HiveCoord> all_coords(int n) {
    if (n < 0) throw std::invalid_argument("side size must be nonnegative");
    std::vector<HiveCoord> out;
    out.reserve(vertex_count(n));
    for (int i = 1; i <= n + 1; ++i)
        for (int k = 0; k <= n + 1 - i; ++k) out.push_back({i, k});
    return out;
}

inline std::vector<HiveCoord> border_coords(int n) {
    std::vector<HiveCoord> out;
    for (HiveCoord c : all_coords(n))
        if (is_border(n, c)) out.push_back(c);
    return out;
}

/// Interior coordinates in row-major order; this is the canonical search
/// order used by the enumerator.
inline std::vector<HiveCoord> interior_coords(int n) {
    std::vector<HiveCoord> out;
    for (HiveCoord c : all_coords(n))
        if (!is_border(n, c)) out.push_back(c);
    return out;
}

}  // namespace hive
