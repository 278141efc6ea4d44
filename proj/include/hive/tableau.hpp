#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hive/errors.hpp"
#include "hive/partition.hpp"

namespace hive {

/// A word over the positive integers.
using Word = std::vector<int>;

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// True iff for every division point, each letter i >= 2 occurs to the right
/// of it no more often than i-1 does.
inline bool is_reverse_lattice(const Word& w) {
    int max_letter = 0;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("word letters must be positive");
        max_letter = std::max(max_letter, x);
    }
    std::vector<long long> suffix_count(max_letter + 1, 0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        ++suffix_count[*it];
        if (*it >= 2 && suffix_count[*it] > suffix_count[*it - 1]) return false;
    }
    return true;
}

inline std::vector<long long> content_of(const Word& w) {
    std::vector<long long> counts;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("word letters must be positive");
        if (static_cast<std::size_t>(x) > counts.size()) counts.resize(x, 0);
        ++counts[x - 1];
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Straight-shape semistandard tableaux
// ---------------------------------------------------------------------------

/// Semistandard Young tableau of straight shape: rows top to bottom, weakly
/// increasing along rows, strictly increasing down columns.
class Tableau {
  public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) throw std::invalid_argument("empty tableau row");
            if (r > 0 && rows_[r].size() > rows_[r - 1].size())
                throw std::invalid_argument("tableau rows must weakly shorten");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] < 1) throw std::invalid_argument("tableau entries must be positive");
                if (c > 0 && rows_[r][c] < rows_[r][c - 1])
                    throw std::invalid_argument("tableau rows must weakly increase");
                if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    Partition shape() const {
        std::vector<long long> parts;
        for (const auto& row : rows_) parts.push_back(static_cast<long long>(row.size()));
        return Partition(std::move(parts));
    }

    friend bool operator==(const Tableau& a, const Tableau& b) = default;

  private:
    std::vector<std::vector<int>> rows_;
};

/// Row word: rows read left to right, bottom row first.
inline Word word_of(const Tableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// U(mu): the tableau of shape mu whose i-th row is filled with i.
inline Tableau superstandard(const Partition& mu) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(mu.part(i)), static_cast<int>(i));
    return Tableau(std::move(rows));
}

// ---------------------------------------------------------------------------
// Skew tableaux and the Littlewood-Richardson oracle
// ---------------------------------------------------------------------------

struct SkewShape {
    Partition outer, inner;

    SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
        if (!inner.contained_in(outer))
            throw std::invalid_argument("inner shape must be contained in outer shape");
    }

    long long cell_count() const { return outer.weight() - inner.weight(); }
};

/// Semistandard filling of a skew shape; rows_[r] holds the entries of row
/// r+1 in columns inner_{r+1}+1 .. outer_{r+1}.
class SkewTableau {
  public:
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        std::size_t nrows = shape_.outer.length();
        if (rows_.size() != nrows) throw std::invalid_argument("wrong number of skew rows");
        for (std::size_t r = 1; r <= nrows; ++r) {
            long long len = shape_.outer.part(r) - shape_.inner.part(r);
            if (static_cast<long long>(rows_[r - 1].size()) != len)
                throw std::invalid_argument("skew row has wrong length");
        }
        for (std::size_t r = 1; r <= nrows; ++r)
            for (long long c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) {
                int e = entry(r, c);
                if (e < 1) throw std::invalid_argument("entries must be positive");
                if (c > shape_.inner.part(r) + 1 && e < entry(r, c - 1))
                    throw std::invalid_argument("skew rows must weakly increase");
                if (r > 1 && c <= shape_.outer.part(r - 1) && c > shape_.inner.part(r - 1) &&
                    e <= entry(r - 1, c))
                    throw std::invalid_argument("skew columns must strictly increase");
            }
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// 1-based row and absolute column.
    int entry(std::size_t row, long long col) const {
        return rows_[row - 1][static_cast<std::size_t>(col - shape_.inner.part(row) - 1)];
    }

    friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
        return a.shape_.outer == b.shape_.outer && a.shape_.inner == b.shape_.inner &&
               a.rows_ == b.rows_;
    }

  private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Row word of a skew tableau (left to right, bottom to top), the reading
/// under which the Littlewood-Richardson condition is is_reverse_lattice.
inline Word word_of(const SkewTableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace detail {

// Cells in reading order (top row first, right to left), filled with a
// running ballot check: after each placement every letter i must have been
// seen at most as often as i-1.  This is the prefix view of the reverse
// lattice condition on the row word.
template <typename Visit>
void lr_skew_search(const SkewShape& shape, const Partition& content, Visit&& visit) {
    std::size_t nrows = shape.outer.length();
    struct Cell {
        std::size_t row;
        long long col;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 1; r <= nrows; ++r)
        for (long long c = shape.outer.part(r); c >= shape.inner.part(r) + 1; --c)
            cells.push_back({r, c});

    int letters = static_cast<int>(content.length());
    std::vector<long long> used(letters + 1, 0);
    // grid for column lookups: entry 0 = unfilled
    std::vector<std::vector<int>> grid(nrows + 1);
    for (std::size_t r = 1; r <= nrows; ++r)
        grid[r].assign(static_cast<std::size_t>(shape.outer.part(r)) + 1, 0);

    std::function<bool(std::size_t)> rec = [&](std::size_t t) -> bool {
        if (t == cells.size()) return visit(grid);
        auto [r, c] = cells[t];
        int right = (c < shape.outer.part(r)) ? grid[r][static_cast<std::size_t>(c + 1)] : 0;
        int above = 0;
        if (r > 1 && c <= shape.outer.part(r - 1) && c > shape.inner.part(r - 1))
            above = grid[r - 1][static_cast<std::size_t>(c)];
        int hi = right ? right : letters;
        for (int e = above + 1; e <= hi; ++e) {
            if (used[e] >= content.part(e)) continue;
            if (e >= 2 && used[e] + 1 > used[e - 1]) continue;  // ballot prune
            used[e]++;
            grid[r][static_cast<std::size_t>(c)] = e;
            bool keep_going = rec(t + 1);
            grid[r][static_cast<std::size_t>(c)] = 0;
            used[e]--;
            if (!keep_going) return false;
        }
        return true;
    };
    rec(0);
}

}  // namespace detail

/// All Littlewood-Richardson fillings of the skew shape with the given
/// content, in deterministic order.  Their number is c^outer_{inner,content}.
inline std::vector<SkewTableau> enumerate_lr_skew(const SkewShape& shape,
                                                  const Partition& content) {
    if (shape.cell_count() != content.weight())
        throw std::invalid_argument("content weight must match skew cell count");
    std::vector<SkewTableau> out;
    detail::lr_skew_search(shape, content, [&](const std::vector<std::vector<int>>& grid) {
        std::vector<std::vector<int>> rows;
        for (std::size_t r = 1; r <= shape.outer.length(); ++r) {
            std::vector<int> row;
            for (long long c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c)
                row.push_back(grid[r][static_cast<std::size_t>(c)]);
            rows.push_back(std::move(row));
        }
        out.emplace_back(shape, std::move(rows));
        return true;
    });
    return out;
}

/// Number of LR fillings without materializing them; the tableau-rule value
/// of c^nu_{lambda,mu}, used as the independent oracle for the hive count.
inline long long lr_count_tableau(const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!lambda.contained_in(nu)) return 0;
    long long count = 0;
    detail::lr_skew_search(SkewShape(nu, lambda), mu, [&](const auto&) {
        ++count;
        return true;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Contratableaux
// ---------------------------------------------------------------------------

/// Semistandard filling of the 180-degree rotated, right-aligned diagram of
/// its shape: row k (from the bottom) has shape_k cells; rows weakly increase
/// left to right and entries strictly increase toward lower rows within each
/// right-aligned column.
class ContraTableau {
  public:
    ContraTableau() = default;

    /// rows[k-1] is row k from the bottom, left to right.
    ContraTableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.length())
            throw std::invalid_argument("wrong number of contratableau rows");
        for (std::size_t k = 1; k <= rows_.size(); ++k) {
            if (static_cast<long long>(rows_[k - 1].size()) != shape_.part(k))
                throw std::invalid_argument("contratableau row has wrong length");
            for (std::size_t p = 0; p < rows_[k - 1].size(); ++p) {
                if (rows_[k - 1][p] < 1)
                    throw std::invalid_argument("entries must be positive");
                if (p > 0 && rows_[k - 1][p] < rows_[k - 1][p - 1])
                    throw std::invalid_argument("contratableau rows must weakly increase");
            }
        }
        // column condition in the rotated picture: the cell below (row k-1,
        // same distance from the right edge) must be strictly larger
        for (std::size_t k = 2; k <= rows_.size(); ++k)
            for (long long j = 1; j <= shape_.part(k); ++j)
                if (entry(k, j) >= entry(k - 1, j))
                    throw std::invalid_argument("contratableau columns must strictly increase downward");
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    /// Row k from the bottom, column j counted from the right edge.
    int entry(std::size_t k, long long j) const {
        long long len = shape_.part(k);
        return rows_[k - 1][static_cast<std::size_t>(len - j)];
    }

    std::vector<long long> content() const {
        std::vector<long long> counts;
        for (const auto& row : rows_)
            for (int e : row) {
                if (static_cast<std::size_t>(e) > counts.size()) counts.resize(e, 0);
                ++counts[e - 1];
            }
        return counts;
    }

    friend bool operator==(const ContraTableau& a, const ContraTableau& b) = default;

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Word of a contratableau: rows left to right, bottom row first.
inline Word word_of(const ContraTableau& t) {
    Word w;
    for (const auto& row : t.rows()) w.insert(w.end(), row.begin(), row.end());
    return w;
}

// ---------------------------------------------------------------------------
// Jeu de taquin and the plactic monoid
// ---------------------------------------------------------------------------

namespace detail {

// Mutable skew grid for taquin slides: grid[r][c], 1-based, 0 = no cell.
struct TaquinGrid {
    std::vector<long long> inner;  // inner shape per row (prefix of absent cells)
    std::vector<long long> outer;
    std::vector<std::vector<int>> grid;  // grid[r-1][c-1]

    bool has_cell(std::size_t r, long long c) const {
        return r >= 1 && r <= outer.size() && c > inner[r - 1] && c <= outer[r - 1];
    }
    int& at(std::size_t r, long long c) { return grid[r - 1][static_cast<std::size_t>(c - 1)]; }
    int at(std::size_t r, long long c) const {
        return grid[r - 1][static_cast<std::size_t>(c - 1)];
    }
};

// Inner corners: cells of the inner shape whose removal keeps it a partition.
inline std::vector<std::pair<std::size_t, long long>> inner_corners(const TaquinGrid& g) {
    std::vector<std::pair<std::size_t, long long>> out;
    for (std::size_t r = 1; r <= g.outer.size(); ++r) {
        long long c = g.inner[r - 1];
        if (c == 0) continue;
        if (r < g.outer.size() && g.inner[r] >= c) continue;
        out.push_back({r, c});
    }
    return out;
}

// One full inward slide starting at the given inner corner.
inline void slide(TaquinGrid& g, std::size_t r, long long c) {
    for (;;) {
        bool right = g.has_cell(r, c + 1);
        bool below = (r + 1 <= g.outer.size()) && g.has_cell(r + 1, c);
        if (!right && !below) break;
        bool move_below;
        if (!right) move_below = true;
        else if (!below) move_below = false;
        else move_below = g.at(r + 1, c) <= g.at(r, c + 1);
        if (move_below) {
            g.at(r, c) = g.at(r + 1, c);
            r += 1;
        } else {
            g.at(r, c) = g.at(r, c + 1);
            c += 1;
        }
    }
    // the hole stops at an outer corner of row r; shrink the shape there
    g.outer[r - 1] = c - 1;
    while (!g.outer.empty() && g.outer.back() == 0) {
        g.outer.pop_back();
        g.inner.pop_back();
        g.grid.pop_back();
    }
}

inline Tableau rectify_grid(TaquinGrid g, std::mt19937_64* rng) {
    // mark the vacated inner corner before each slide
    for (;;) {
        // the hole created by a slide merges into the inner shape only when
        // we track it; simplest is to recompute inner corners each round
        auto corners = inner_corners(g);
        if (corners.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = static_cast<std::size_t>((*rng)() % corners.size());
        auto [r, c] = corners[pick];
        g.inner[r - 1] = c - 1;  // open the hole
        slide(g, r, c);
    }
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 1; r <= g.outer.size(); ++r) {
        std::vector<int> row;
        for (long long c = 1; c <= g.outer[r - 1]; ++c) row.push_back(g.at(r, c));
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

inline TaquinGrid grid_of_contratableau(const ContraTableau& t) {
    TaquinGrid g;
    std::size_t nrows = t.shape().length();
    long long width = t.shape().part(1);
    for (std::size_t r = 1; r <= nrows; ++r) {
        std::size_t k = nrows + 1 - r;  // row k from the bottom sits at height r
        long long len = t.shape().part(k);
        g.inner.push_back(width - len);
        g.outer.push_back(width);
        std::vector<int> row(static_cast<std::size_t>(width), 0);
        for (std::size_t p = 0; p < t.rows()[k - 1].size(); ++p)
            row[static_cast<std::size_t>(width - len) + p] = t.rows()[k - 1][p];
        g.grid.push_back(std::move(row));
    }
    return g;
}

}  // namespace detail

/// Jeu-de-taquin rectification of a contratableau (its rotated diagram is a
/// right-aligned skew shape).  The slide order is irrelevant; passing an rng
/// randomizes it, which the tests use to check confluence.
inline Tableau rectify(const ContraTableau& t, std::mt19937_64* rng = nullptr) {
    if (t.empty()) return Tableau();
    return detail::rectify_grid(detail::grid_of_contratableau(t), rng);
}

/// Column insertion of x: in each column the topmost entry >= x is bumped to
/// the next column; prepends x to the word in the plactic monoid.
inline void column_insert(std::vector<std::vector<int>>& rows, int x) {
    std::size_t col = 0;
    for (;;) {
        std::size_t r = 0;
        bool bumped = false;
        for (; r < rows.size() && rows[r].size() > col; ++r) {
            if (rows[r][col] >= x) {
                std::swap(rows[r][col], x);
                bumped = true;
                break;
            }
        }
        if (!bumped) {
            if (r < rows.size()) {
                if (rows[r].size() != col)
                    throw InvariantViolation("column insertion produced a ragged shape");
                rows[r].push_back(x);
            } else {
                if (col != 0) throw InvariantViolation("column insertion fell off the shape");
                rows.push_back({x});
            }
            return;
        }
        ++col;
    }
}

/// Product in the plactic monoid: the entries of r, taken from the end of its
/// word backwards, are column-inserted into s.  word(r*s) is Knuth equivalent
/// to word(r) concatenated with word(s).
inline Tableau plactic_product(const Tableau& r, const Tableau& s) {
    std::vector<std::vector<int>> rows = s.rows();
    Word w = word_of(r);
    for (auto it = w.rbegin(); it != w.rend(); ++it) column_insert(rows, *it);
    return Tableau(std::move(rows));
}

/// Insertion tableau of a word; two words are Knuth equivalent iff their
/// insertion tableaux coincide.
inline Tableau tableau_from_word(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (auto it = w.rbegin(); it != w.rend(); ++it) column_insert(rows, *it);
    return Tableau(std::move(rows));
}

inline bool knuth_equivalent(const Word& a, const Word& b) {
    return tableau_from_word(a) == tableau_from_word(b);
}

}  // namespace hive
