#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "widecore/partition.hpp"

namespace wide {

/// Failing lower subpartition together with the 1-based prefix index j where
/// sum_{k<=j} mu_k < sum_{k<=j} mu'_k.
struct WidenessWitness {
    IntegerPartition subpartition;
    int prefix_index = 0;
};

struct WidenessVerdict {
    bool wide = false;
    std::optional<WidenessWitness> witness;  // present exactly when !wide
};

/// Polynomial-time wideness test scanning only the lower subpartitions,
/// smallest first. The empty partition is wide.
WidenessVerdict is_wide(const IntegerPartition& lambda);

inline bool wideness(const IntegerPartition& lambda) { return is_wide(lambda).wide; }

/// Definitional test over every part submultiset. Test oracle only;
/// throws std::invalid_argument when length() > 24.
bool is_wide_oracle(const IntegerPartition& lambda);

/// lambda_{l-i} > i for 0 <= i < l (a necessary condition for wideness).
/// Throws std::invalid_argument on the empty partition.
bool lemma_waugh_holds(const IntegerPartition& lambda);

/// Splits a wide partition into two nonempty wide summands if possible.
/// Candidate summands are column-multiset splits, tried with the
/// lexicographically largest mu first; returns the first valid split.
/// Throws std::invalid_argument unless lambda is wide.
std::optional<std::pair<IntegerPartition, IntegerPartition>> decompose(
    const IntegerPartition& lambda);

/// All wide partitions of weight n, lexicographically descending.
std::vector<IntegerPartition> enumerate_wide(int n);

/// All wide partitions with weight in [1, max_cells], ascending weight then
/// lexicographically descending.
std::vector<IntegerPartition> enumerate_wide_up_to(int max_cells);

/// All wide partitions fitting in a max_rows x max_cols box, ascending weight
/// then lexicographically descending.
std::vector<IntegerPartition> enumerate_wide_in_box(int max_rows, int max_cols);

/// counts[n-1] = number of wide partitions of n, for n = 1..n_max.
std::vector<long long> wide_partition_counts(int n_max);

/// Reference counts for n = 1..65, cross-checked by wide_partition_counts.
extern const std::array<long long, 65> kWideCountReference;

/// Wide self-conjugate extension: a 2m x 2m square (m = lambda_1) with lambda
/// below and its conjugate to the right. Throws std::invalid_argument unless
/// lambda is wide.
IntegerPartition embed_self_conjugate(const IntegerPartition& lambda);

}  // namespace wide
