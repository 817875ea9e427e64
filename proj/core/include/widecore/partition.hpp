#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wide {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is valid and denotes the empty Young diagram.
class IntegerPartition {
public:
    IntegerPartition() = default;

    /// Throws std::invalid_argument unless parts are weakly decreasing and positive.
    explicit IntegerPartition(std::vector<int> parts);

    /// Sorts descending and drops zeros; negative entries are rejected.
    static IntegerPartition sorted_from(std::vector<int> parts);

    /// Parses "6,5,4,4,2,1"; the empty string is the empty partition.
    static std::optional<IntegerPartition> parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;
    int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// 0-based, zero-padded beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    IntegerPartition conjugate() const;
    int distinct_part_count() const;

    /// Lower subpartition: drop the `drop` largest parts.
    IntegerPartition lower_subpartition(int drop) const;

    std::string to_string() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    /// Lexicographic on the part sequences.
    friend std::strong_ordering operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Dominance order with zero padding: every prefix sum of `a` >= that of `b`.
bool dominates(const IntegerPartition& a, const IntegerPartition& b);

/// First 1-based prefix index where `a`'s prefix sum falls strictly below `b`'s,
/// or 0 when `a` dominates `b`.
int first_dominance_violation(const IntegerPartition& a, const IntegerPartition& b);

/// Componentwise sum (missing parts are zero).
IntegerPartition add(const IntegerPartition& a, const IntegerPartition& b);

/// Componentwise difference if it is a valid partition.
std::optional<IntegerPartition> subtract(const IntegerPartition& a, const IntegerPartition& b);

/// Visits every partition of n (parts <= max_part when given) in lexicographically
/// descending order; stops early when the visitor returns false.
void for_each_partition(int n, const std::function<bool(const IntegerPartition&)>& visit,
                        int max_part = -1);

std::vector<IntegerPartition> partitions_of(int n, int max_part = -1);

}  // namespace wide
