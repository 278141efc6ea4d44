#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hive/coords.hpp"
#include "hive/rational.hpp"

namespace hive {

/// An assignment of exact rationals to every vertex of the side-n triangle.
/// Immutable after construction; whether it is a hive is a separate question
/// (see check_labeling).
class Labeling {
  public:
    Labeling(int n, std::vector<Rational> row_major_values)
        : n_(n), values_(std::move(row_major_values)) {
        if (n < 0) throw std::invalid_argument("side size must be nonnegative");
        if (values_.size() != vertex_count(n))
            throw std::invalid_argument("labeling has wrong number of values");
    }

    int side() const { return n_; }

    const Rational& at(HiveCoord c) const {
        if (!valid_coord(n_, c)) throw std::invalid_argument("coordinate out of range");
        return values_[coord_index(n_, c)];
    }

    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Labeling& a, const Labeling& b) = default;

  private:
    int n_;
    std::vector<Rational> values_;
};

inline bool is_integral(const Labeling& l) {
    for (const Rational& v : l.values())
        if (!is_integer(v)) return false;
    return true;
}

}  // namespace hive
