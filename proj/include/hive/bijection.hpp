#pragma once

#include <cstddef>
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
#include "hive/tableau.hpp"

namespace hive {

/// Nested partitions lambda^(1) >= lambda^(2) >= ... read off the rows of an
/// integral hive via lambda^(i)_k = a^i_k - a^i_{k-1}; consecutive members
/// interlace.
struct PartitionChain {
    std::vector<Partition> chain;  // chain[i-1] = lambda^(i); the final empty member is implicit

    explicit PartitionChain(std::vector<Partition> members) : chain(std::move(members)) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const Partition& a = chain[i];
            const Partition& b = chain[i + 1];
            std::size_t len = std::max(a.length(), b.length()) + 1;
            for (std::size_t k = 1; k <= len; ++k)
                if (!(a.part(k) >= b.part(k) && b.part(k) >= a.part(k + 1)))
                    throw std::invalid_argument("chain members must interlace");
        }
    }

    friend bool operator==(const PartitionChain&, const PartitionChain&) = default;
};

namespace detail {
// Row differences of one hive row as integer parts, without the partition
// validation (callers decide what failure means).
inline std::vector<long long> row_diffs(const Labeling& h, int i) {
    int n = h.side();
    std::vector<long long> out;
    for (int k = 1; k <= n + 1 - i; ++k) {
        Rational d = h.at({i, k}) - h.at({i, k - 1});
        if (!is_integer(d)) throw std::invalid_argument("hive must be integral");
        out.push_back(static_cast<long long>(numerator(d)));
    }
    return out;
}
}  // namespace detail

/// Rows of an integral hive as a chain of partitions.  Requires inequality
/// families (1) and (2) (any hive qualifies) and an integral labeling.
inline PartitionChain hive_to_chain(const Labeling& h) {
    int n = h.side();
    std::vector<Partition> members;
    for (int i = 1; i <= n; ++i) {
        try {
            members.emplace_back(detail::row_diffs(h, i));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("row differences do not form partitions");
        }
    }
    return PartitionChain(std::move(members));
}

/// Fills the rotated diagram of lambda^(1) with i on lambda^(i) - lambda^(i+1).
inline ContraTableau chain_to_contratableau(const PartitionChain& c) {
    if (c.chain.empty()) return ContraTableau();
    const Partition& shape = c.chain.front();
    std::size_t depth = c.chain.size();
    std::vector<std::vector<int>> rows;
    for (std::size_t k = 1; k <= shape.length(); ++k) {
        std::vector<int> row(static_cast<std::size_t>(shape.part(k)));
        // column j from the right carries the letter i with
        // lambda^(i+1)_k < j <= lambda^(i)_k
        for (std::size_t i = 1; i <= depth; ++i) {
            long long hi = c.chain[i - 1].part(k);
            long long lo = (i < depth) ? c.chain[i].part(k) : 0;
            for (long long j = lo + 1; j <= hi; ++j)
                row[static_cast<std::size_t>(shape.part(k) - j)] = static_cast<int>(i);
        }
        rows.push_back(std::move(row));
    }
    return ContraTableau(shape, std::move(rows));
}

/// Chain of a contratableau: lambda^(i) is the shape of the cells >= i.
inline PartitionChain chain_of_contratableau(const ContraTableau& t, std::size_t depth) {
    std::vector<Partition> members;
    for (std::size_t i = 1; i <= depth; ++i) {
        std::vector<long long> parts;
        for (std::size_t k = 1; k <= t.shape().length(); ++k) {
            long long count = 0;
            for (long long j = 1; j <= t.shape().part(k); ++j)
                if (t.entry(k, j) >= static_cast<int>(i)) ++count;
            parts.push_back(count);
        }
        members.emplace_back(std::move(parts));
    }
    return PartitionChain(std::move(members));
}

/// Inverse of the forward map: rebuilds the hive rows from the chain of t,
/// with the row offsets fixed by nu_i = (count of i in t) + mu_i.  Rejects
/// inputs whose concatenated word is not a reverse lattice word (then no hive
/// with these data exists).
inline Labeling contratableau_to_hive(const ContraTableau& t, const Partition& mu, int n) {
    if (n < 1) throw std::invalid_argument("side size must be at least 1");
    if (t.shape().length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("contratableau has more rows than the side size");
    if (mu.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("mu longer than side size");
    for (const auto& row : t.rows())
        for (int e : row)
            if (e > n) throw std::invalid_argument("contratableau entry exceeds side size");

    if (!is_reverse_lattice(concat(word_of(t), word_of(superstandard(mu)))))
        throw std::invalid_argument("w(T).w(U(mu)) is not a reverse lattice word");

    auto counts = t.content();
    std::vector<long long> nu_parts;
    for (int i = 1; i <= n; ++i) {
        long long c = (static_cast<std::size_t>(i) <= counts.size()) ? counts[i - 1] : 0;
        nu_parts.push_back(c + mu.part(i));
    }
    Partition nu;
    try {
        nu = Partition(std::move(nu_parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("content of t plus mu is not weakly decreasing");
    }

    PartitionChain chain = chain_of_contratableau(t, static_cast<std::size_t>(n));
    std::vector<Rational> vals(vertex_count(n));
    Int offset = 0;
    for (int i = 1; i <= n + 1; ++i) {
        if (i > 1) offset += nu.part(i - 1);
        Int acc = offset;
        vals[coord_index(n, {i, 0})] = Rational(acc);
        for (int k = 1; k <= n + 1 - i; ++k) {
            acc += (i <= n) ? chain.chain[i - 1].part(k) : 0;
            vals[coord_index(n, {i, k})] = Rational(acc);
        }
    }
    return Labeling(n, std::move(vals));
}

/// Both routes of the family-(3) criterion for an integral labeling already
/// satisfying families (1) and (2): directly evaluating the R3 rhombi, and
/// the reverse-lattice test on w(T).w(U(mu)).  The bottom border must encode
/// a partition mu for the word route to make sense.
struct LatticeEquivalenceRoutes {
    bool by_rhombi;
    bool by_word;
};

inline LatticeEquivalenceRoutes lattice_equivalence_routes(const Labeling& h) {
    int n = h.side();
    for (const Rhombus& r : all_rhombi(n))
        if (r.orientation != Orientation::R3 && rhombus_slack(h, r) < 0)
            throw std::invalid_argument("labeling must satisfy families (1) and (2)");

    bool by_rhombi = true;
    for (const Rhombus& r : all_rhombi(n))
        if (r.orientation == Orientation::R3 && rhombus_slack(h, r) < 0) by_rhombi = false;

    Partition mu = mu_of(restrict_to_border(h));  // throws unless a partition
    ContraTableau t = chain_to_contratableau(hive_to_chain(h));
    bool by_word = is_reverse_lattice(concat(word_of(t), word_of(superstandard(mu))));
    return {by_rhombi, by_word};
}

/// True iff inequality family (3) holds.  The two routes are required to
/// agree; a disagreement would disprove the equivalence claim and surfaces as
/// an InvariantViolation.
inline bool lattice_equivalence_check(const Labeling& h) {
    auto routes = lattice_equivalence_routes(h);
    if (routes.by_rhombi != routes.by_word)
        throw InvariantViolation("family-(3) and reverse-lattice routes disagree");
    return routes.by_rhombi;
}

}  // namespace hive
