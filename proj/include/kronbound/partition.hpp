#pragma once

#include "kronbound/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronbound {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a valid value (size 0, length 0). Immutable after construction.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InputError("partition parts must be positive: " + to_string());
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InputError("partition parts must be weakly decreasing: " + to_string());
            size_ += parts_[i];
        }
    }

    /// Sorts and drops zeros; for multisets such as table entries.
    static Partition from_multiset(std::vector<int> values) {
        std::erase(values, 0);
        std::sort(values.begin(), values.end(), std::greater<>());
        return Partition(std::move(values));
    }

    /// Parses "7,4,2". The empty string (or "0") denotes the empty partition.
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        if (text.empty() || text == "0" || text == "()") return Partition();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string_view token =
                text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (token.empty()) throw InputError("empty part in partition '" + std::string(text) + "'");
            int value = 0;
            for (char c : token) {
                if (c < '0' || c > '9')
                    throw InputError("invalid character in partition '" + std::string(text) + "'");
                value = value * 10 + (c - '0');
                if (value > 1000000) throw InputError("part too large in '" + std::string(text) + "'");
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// i-th part (0-based); zero beyond the length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << '(' << p.to_string() << ')';
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Column lengths: mu_j = #{i : lambda_i >= j}.
inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++cols[j];
    return Partition(std::move(cols));
}

/// lambda is dominated by mu: every prefix sum of lambda is at most mu's.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw InputError("dominance order compares partitions of equal size");
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

namespace detail {

template <typename Visitor>
void visit_partitions(int remaining, int max_part, int max_length, std::vector<int>& cur, Visitor& visit) {
    if (remaining == 0) {
        visit(cur);
        return;
    }
    if (max_length == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // the remaining parts can hold at most part*(max_length-1) more
        if (max_length > 0 && static_cast<long long>(part) * max_length < remaining) break;
        cur.push_back(part);
        visit_partitions(remaining - part, part, max_length < 0 ? -1 : max_length - 1, cur, visit);
        cur.pop_back();
    }
}

}  // namespace detail

/// Calls `visit(parts)` for every partition of n within the bounds, in
/// reverse lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit, std::optional<int> max_length = std::nullopt,
                        std::optional<int> max_part = std::nullopt) {
    if (n < 0) throw InputError("partition size must be non-negative");
    std::vector<int> cur;
    auto wrapped = [&](const std::vector<int>& parts) { visit(parts); };
    detail::visit_partitions(n, max_part.value_or(n), max_length.value_or(-1), cur, wrapped);
}

inline std::vector<Partition> generate_partitions(int n, std::optional<int> max_length = std::nullopt,
                                                  std::optional<int> max_part = std::nullopt) {
    std::vector<Partition> out;
    for_each_partition(
        n, [&](const std::vector<int>& parts) { out.emplace_back(parts); }, max_length, max_part);
    return out;
}

inline Partition staircase(int length) {
    if (length < 1) throw InputError("staircase length must be at least 1");
    std::vector<int> parts;
    for (int k = length; k >= 1; --k) parts.push_back(k);
    return Partition(std::move(parts));
}

/// alpha[n] = (n - |alpha|, alpha_1, alpha_2, ...).
inline Partition pad_first_row(const Partition& alpha, int n) {
    if (n < alpha.size() + alpha.first())
        throw InputError("pad_first_row needs n >= |alpha| + alpha_1 (" + std::to_string(n) + " < " +
                         std::to_string(alpha.size()) + " + " + std::to_string(alpha.first()) + ")");
    std::vector<int> parts;
    parts.push_back(n - alpha.size());
    parts.insert(parts.end(), alpha.parts().begin(), alpha.parts().end());
    return Partition(std::move(parts));
}

inline Partition add_partitions(const Partition& lambda, const Partition& mu) {
    const int len = std::max(lambda.length(), mu.length());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) parts[i] = lambda[i] + mu[i];
    return Partition(std::move(parts));
}

inline void require_same_size(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw InputError("size mismatch: |" + a.to_string() + "| = " + std::to_string(a.size()) + " but |" +
                         b.to_string() + "| = " + std::to_string(b.size()));
}

inline void require_same_size(const Partition& a, const Partition& b, const Partition& c) {
    require_same_size(a, b);
    require_same_size(a, c);
}

}  // namespace kronbound

template <>
struct std::hash<kronbound::Partition> {
    std::size_t operator()(const kronbound::Partition& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};
