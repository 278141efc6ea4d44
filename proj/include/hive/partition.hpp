#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hive/rational.hpp"

namespace hive {

/// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
/// accepted on input and stripped, so (2,1) and (2,1,0) are the same
/// partition.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] < 0)
                throw std::invalid_argument("partition parts must be nonnegative");
            if (j > 0 && parts_[j] > parts_[j - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    /// Parses "4,2,1".  An empty string or "0" denotes the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<long long> parts;
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            if (token.empty()) throw std::invalid_argument("empty partition part in '" + text + "'");
            std::size_t pos = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid partition part '" + token + "'");
            }
            if (pos != token.size())
                throw std::invalid_argument("invalid partition part '" + token + "'");
            parts.push_back(value);
        }
        try {
            return Partition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
        }
    }

    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length read as 0.
    long long part(std::size_t i) const {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    const std::vector<long long>& parts() const { return parts_; }

    long long weight() const {
        long long s = 0;
        for (long long p : parts_) s += p;
        return s;
    }

    Partition scaled(long long factor) const {
        if (factor < 0) throw std::invalid_argument("scaling factor must be nonnegative");
        std::vector<long long> p(parts_);
        for (auto& v : p) v *= factor;
        return Partition(std::move(p));
    }

    /// Componentwise sum.
    Partition plus(const Partition& other) const {
        std::vector<long long> p;
        std::size_t len = std::max(length(), other.length());
        p.reserve(len);
        for (std::size_t i = 1; i <= len; ++i) p.push_back(part(i) + other.part(i));
        return Partition(std::move(p));
    }

    /// Componentwise containment (this is the inner shape).
    bool contained_in(const Partition& outer) const {
        for (std::size_t i = 1; i <= length(); ++i)
            if (part(i) > outer.part(i)) return false;
        return true;
    }

    /// Strictly decreasing as a length-n padded vector (the regular-border
    /// condition on one side of the triangle).
    bool strictly_decreasing_padded(std::size_t n) const {
        if (length() > n) return false;
        for (std::size_t i = 1; i + 1 <= n; ++i)
            if (part(i) <= part(i + 1)) return false;
        return true;
    }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::ostringstream out;
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (j) out << ',';
            out << parts_[j];
        }
        return out.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<long long> parts_;
};

}  // namespace hive
