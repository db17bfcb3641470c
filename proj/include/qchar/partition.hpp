#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchar {

/// Young diagram: weakly decreasing sequence of positive integers.
/// Trailing zeros are never stored; part(i) returns 0 past the stored
/// length, matching the lambda_{n+1} = 0 convention used everywhere.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 0-based row access with implicit zero padding.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// part(i) - part(i+1); the i-th fundamental-weight coordinate.
    int step(int i) const { return part(i) - part(i + 1); }

    Partition conjugate() const {
        std::vector<int> t;
        if (parts_.empty()) return Partition{};
        t.resize(static_cast<std::size_t>(parts_[0]));
        for (int col = 0; col < parts_[0]; ++col)
            t[static_cast<std::size_t>(col)] = static_cast<int>(std::count_if(
                parts_.begin(), parts_.end(), [col](int p) { return p >= col + 1; }));
        return Partition(std::move(t));
    }

    /// Lexicographic on the stored parts.  Restricted to partitions of one
    /// size this is reverse-lexicographic order, the enumeration order.
    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    /// Parses the CLI/JSON text format, e.g. "3,3,1"; "" is the empty
    /// partition.  Trailing zeros are accepted and dropped.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        if (!text.empty()) {
            std::istringstream is(text);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                std::size_t pos = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &pos);
                } catch (const std::exception&) {
                    throw std::invalid_argument("Partition: bad part '" + tok + "'");
                }
                if (pos != tok.size() || v < 0)
                    throw std::invalid_argument("Partition: bad part '" + tok + "'");
                parts.push_back(v);
            }
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// All partitions of N with at most max_len parts, in reverse-lexicographic
/// order: (N), (N-1,1), ..., deterministic.
inline std::vector<Partition> partitions_of(int n, int max_len) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    if (max_len <= 0) throw std::invalid_argument("partitions_of: max_len must be positive");
    std::vector<Partition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int bound, int slots) -> void {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            // a feasibility cut: slots parts of size <= p must reach remaining
            if (static_cast<long long>(p) * slots < remaining) break;
            stack.push_back(p);
            self(self, remaining - p, p, slots - 1);
            stack.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n, max_len);
    return out;
}

/// Dominance: true iff every prefix sum of mu is <= that of lambda.
/// Both partitions must have the same size.
inline bool dominance_leq(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    int len = std::max(mu.length(), la.length());
    long long smu = 0, sla = 0;
    for (int i = 0; i < len; ++i) {
        smu += mu.part(i);
        sla += la.part(i);
        if (smu > sla) return false;
    }
    return true;
}

inline bool dominance_lt(const Partition& mu, const Partition& la) {
    return mu != la && dominance_leq(mu, la);
}

/// d(lambda) = sum_i C(lambda_i, 2); number of same-row cell pairs.
inline long d_stat(const Partition& la) {
    long d = 0;
    for (int p : la.parts()) d += static_cast<long>(p) * (p - 1) / 2;
    return d;
}

}  // namespace qchar
