#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hive/coords.hpp"
#include "hive/labeling.hpp"
#include "hive/partition.hpp"
#include "hive/rational.hpp"

namespace hive {

/// Values on the boundary vertices of the side-n triangle.  Corners are
/// stored once; equality is value-wise on the 3n distinct border vertices.
class Border {
  public:
    Border(int n, std::vector<Rational> values_row_major)
        : n_(n), values_(std::move(values_row_major)) {
        if (n < 0) throw std::invalid_argument("side size must be nonnegative");
        if (values_.size() != border_count(n))
            throw std::invalid_argument("border has wrong number of values");
    }

    static std::size_t border_count(int n) {
        return n == 0 ? 1 : static_cast<std::size_t>(3 * n);
    }

    int side() const { return n_; }

    const Rational& at(HiveCoord c) const { return values_[index(c)]; }

    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Border& a, const Border& b) = default;

  private:
    std::size_t index(HiveCoord c) const {
        if (!valid_coord(n_, c) || !is_border(n_, c))
            throw std::invalid_argument("not a border coordinate");
        if (c.i == 1) return static_cast<std::size_t>(c.k);
        if (c.i == n_ + 1) return values_.size() - 1;
        // rows 2..n hold exactly the two side vertices each
        return static_cast<std::size_t>(n_ + 1) + 2 * (c.i - 2) + (c.k == 0 ? 0 : 1);
    }

    int n_;
    std::vector<Rational> values_;
};

/// Restriction map rho: forgets the interior of a labeling.
inline Border restrict_to_border(const Labeling& l) {
    int n = l.side();
    std::vector<Rational> vals;
    for (HiveCoord c : border_coords(n)) vals.push_back(l.at(c));
    return Border(n, std::move(vals));
}

/// Section of rho: assembles a full labeling from border values plus the
/// interior values in row-major interior order.
inline Labeling labeling_from_border(const Border& b,
                                     const std::vector<Rational>& interior_row_major) {
    int n = b.side();
    std::vector<Rational> vals(vertex_count(n));
    std::size_t next_interior = 0;
    for (HiveCoord c : all_coords(n)) {
        if (is_border(n, c)) {
            vals[coord_index(n, c)] = b.at(c);
        } else {
            if (next_interior >= interior_row_major.size())
                throw std::invalid_argument("too few interior values");
            vals[coord_index(n, c)] = interior_row_major[next_interior++];
        }
    }
    if (next_interior != interior_row_major.size())
        throw std::invalid_argument("too many interior values");
    return Labeling(n, std::move(vals));
}

/// Border of the hive polytope whose integral points count the
/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: row 1 carries the
/// partial sums of lambda, the k = 0 side the partial sums of nu, and the
/// bottom accumulates mu from the row-1 end leftwards.
inline Border border_from_triple(const Partition& lambda, const Partition& mu,
                                 const Partition& nu, int n) {
    if (n < 1) throw std::invalid_argument("side size must be at least 1");
    if (lambda.length() > static_cast<std::size_t>(n) ||
        mu.length() > static_cast<std::size_t>(n) ||
        nu.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("partition longer than side size");
    if (nu.weight() != lambda.weight() + mu.weight())
        throw std::invalid_argument("|nu| must equal |lambda| + |mu|");

    std::vector<Rational> out(Border::border_count(n));
    auto put = [&](HiveCoord c, const Rational& v) {
        // recompute the index the same way Border does
        std::size_t idx;
        if (c.i == 1)
            idx = static_cast<std::size_t>(c.k);
        else if (c.i == n + 1)
            idx = out.size() - 1;
        else
            idx = static_cast<std::size_t>(n + 1) + 2 * (c.i - 2) + (c.k == 0 ? 0 : 1);
        out[idx] = v;
    };

    Int acc = 0;
    put({1, 0}, Rational(acc));
    for (int k = 1; k <= n; ++k) {
        acc += lambda.part(k);
        put({1, k}, Rational(acc));
    }
    acc = 0;
    for (int i = 2; i <= n + 1; ++i) {
        acc += nu.part(i - 1);
        put({i, 0}, Rational(acc));
    }
    acc = lambda.weight();
    for (int i = 2; i <= n + 1; ++i) {
        acc += mu.part(i - 1);
        put({i, n + 1 - i}, Rational(acc));
    }
    return Border(n, std::move(out));
}

inline bool is_integral(const Border& b) {
    for (const Rational& v : b.values())
        if (!is_integer(v)) return false;
    return true;
}

namespace detail {
inline Partition partition_from_diffs(const std::vector<Rational>& seq, const char* side) {
    std::vector<long long> parts;
    for (std::size_t j = 1; j < seq.size(); ++j) {
        Rational d = seq[j] - seq[j - 1];
        if (!is_integer(d))
            throw std::invalid_argument(std::string(side) + " differences are not integers");
        parts.push_back(static_cast<long long>(numerator(d)));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(side) + " differences do not form a partition");
    }
}
}  // namespace detail

/// The three partitions encoded by a border (throws when the differences are
/// not weakly decreasing nonnegative integers).
inline Partition lambda_of(const Border& b) {
    std::vector<Rational> seq;
    for (int k = 0; k <= b.side(); ++k) seq.push_back(b.at({1, k}));
    return detail::partition_from_diffs(seq, "row-1");
}

inline Partition nu_of(const Border& b) {
    std::vector<Rational> seq;
    for (int i = 1; i <= b.side() + 1; ++i) seq.push_back(b.at({i, 0}));
    return detail::partition_from_diffs(seq, "k=0 side");
}

inline Partition mu_of(const Border& b) {
    std::vector<Rational> seq;
    int n = b.side();
    for (int i = 1; i <= n + 1; ++i) seq.push_back(b.at({i, n + 1 - i}));
    return detail::partition_from_diffs(seq, "bottom side");
}

/// Regular border: strict concavity at every border vertex, i.e. all three
/// partitions strictly decreasing as padded length-n vectors.
inline bool is_regular_border(const Border& b) {
    int n = b.side();
    auto strict_side = [&](auto coord_of) {
        for (int j = 0; j + 2 <= n; ++j) {
            Rational x = b.at(coord_of(j));
            Rational y = b.at(coord_of(j + 1));
            Rational z = b.at(coord_of(j + 2));
            if (!(y - x > z - y)) return false;
        }
        return true;
    };
    return strict_side([&](int j) { return HiveCoord{1, j}; }) &&
           strict_side([&](int j) { return HiveCoord{j + 1, 0}; }) &&
           strict_side([&](int j) { return HiveCoord{j + 1, n + 1 - (j + 1)}; });
}

}  // namespace hive
