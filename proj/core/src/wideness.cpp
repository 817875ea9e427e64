#include "widecore/wideness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wide {

WidenessVerdict is_wide(const IntegerPartition& lambda) {
    // Lower subpartitions suffice; scan from the smallest so the witness is minimal.
    for (int drop = lambda.length(); drop >= 0; --drop) {
        IntegerPartition mu = lambda.lower_subpartition(drop);
        int j = first_dominance_violation(mu, mu.conjugate());
        if (j != 0) return {false, WidenessWitness{std::move(mu), j}};
    }
    return {true, std::nullopt};
}

bool is_wide_oracle(const IntegerPartition& lambda) {
    if (lambda.length() > 24)
        throw std::invalid_argument("is_wide_oracle: refusing partitions with more than 24 parts");
    // Distinct part values with multiplicities; an odometer walks every submultiset.
    std::vector<std::pair<int, int>> groups;  // value, multiplicity
    for (int p : lambda.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }
    std::vector<int> take(groups.size(), 0);
    for (;;) {
        std::vector<int> parts;
        for (size_t g = 0; g < groups.size(); ++g)
            for (int c = 0; c < take[g]; ++c) parts.push_back(groups[g].first);
        IntegerPartition mu = IntegerPartition::sorted_from(std::move(parts));
        if (!dominates(mu, mu.conjugate())) return false;
        size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
        if (g == groups.size()) break;
        ++take[g];
    }
    return true;
}

bool lemma_waugh_holds(const IntegerPartition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("lemma_waugh_holds: empty partition");
    int l = lambda.length();
    for (int i = 0; i < l; ++i)
        if (lambda.part(l - 1 - i) <= i) return false;
    return true;
}

namespace {

// Column heights of lambda as (height, multiplicity) pairs, tallest first.
std::vector<std::pair<int, int>> column_groups(const IntegerPartition& lambda) {
    std::vector<std::pair<int, int>> groups;
    for (int h : lambda.conjugate().parts()) {
        if (!groups.empty() && groups.back().first == h)
            ++groups.back().second;
        else
            groups.emplace_back(h, 1);
    }
    return groups;
}

}  // namespace

std::optional<std::pair<IntegerPartition, IntegerPartition>> decompose(
    const IntegerPartition& lambda) {
    if (!is_wide(lambda).wide) throw std::invalid_argument("decompose: input must be wide");
    auto groups = column_groups(lambda);

    // Submultisets of the columns; mu = conjugate of the taken columns.
    std::vector<std::pair<IntegerPartition, IntegerPartition>> candidates;
    std::vector<int> take(groups.size(), 0);
    for (;;) {
        std::vector<int> mu_cols, nu_cols;
        for (size_t g = 0; g < groups.size(); ++g) {
            for (int c = 0; c < take[g]; ++c) mu_cols.push_back(groups[g].first);
            for (int c = take[g]; c < groups[g].second; ++c) nu_cols.push_back(groups[g].first);
        }
        if (!mu_cols.empty() && !nu_cols.empty()) {
            IntegerPartition mu = IntegerPartition::sorted_from(std::move(mu_cols)).conjugate();
            IntegerPartition nu = IntegerPartition::sorted_from(std::move(nu_cols)).conjugate();
            candidates.emplace_back(std::move(mu), std::move(nu));
        }
        size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
        if (g == groups.size()) break;
        ++take[g];
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [mu, nu] : candidates)
        if (is_wide(mu).wide && is_wide(nu).wide) return std::make_pair(mu, nu);
    return std::nullopt;
}

namespace {

// Wideness is inherited: (p, tail) is wide iff tail is wide and the whole
// dominates its conjugate, so the wide partitions form a tree under
// prepending a new largest part.
void extend_wide(const std::vector<int>& tail, long long tail_weight, int max_cells,
                 const std::function<void(const std::vector<int>&)>& emit) {
    int lo = tail.empty() ? 1 : tail.front();
    for (int p = lo; tail_weight + p <= max_cells; ++p) {
        std::vector<int> parts;
        parts.reserve(tail.size() + 1);
        parts.push_back(p);
        parts.insert(parts.end(), tail.begin(), tail.end());
        IntegerPartition cand(parts);
        if (!dominates(cand, cand.conjugate())) continue;
        emit(parts);
        extend_wide(parts, tail_weight + p, max_cells, emit);
    }
}

}  // namespace

std::vector<long long> wide_partition_counts(int n_max) {
    std::vector<long long> counts(static_cast<size_t>(std::max(0, n_max)), 0);
    if (n_max <= 0) return counts;
    extend_wide({}, 0, n_max, [&](const std::vector<int>& parts) {
        long long w = 0;
        for (int p : parts) w += p;
        ++counts[static_cast<size_t>(w - 1)];
    });
    return counts;
}

std::vector<IntegerPartition> enumerate_wide(int n) {
    std::vector<IntegerPartition> out;
    if (n <= 0) return out;
    extend_wide({}, 0, n, [&](const std::vector<int>& parts) {
        long long w = 0;
        for (int p : parts) w += p;
        if (w == n) out.emplace_back(parts);
    });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<IntegerPartition> enumerate_wide_up_to(int max_cells) {
    std::vector<IntegerPartition> out;
    if (max_cells <= 0) return out;
    extend_wide({}, 0, max_cells, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
    });
    std::sort(out.begin(), out.end(), [](const IntegerPartition& a, const IntegerPartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    return out;
}

std::vector<IntegerPartition> enumerate_wide_in_box(int max_rows, int max_cols) {
    std::vector<IntegerPartition> out;
    if (max_rows <= 0 || max_cols <= 0) return out;
    // Partitions with at most max_rows parts, each at most max_cols.
    std::vector<int> acc;
    std::function<void()> rec = [&]() {
        if (!acc.empty()) {
            IntegerPartition cand(acc);
            if (is_wide(cand).wide) out.push_back(std::move(cand));
        }
        if (static_cast<int>(acc.size()) == max_rows) return;
        int hi = acc.empty() ? max_cols : acc.back();
        for (int p = hi; p >= 1; --p) {
            acc.push_back(p);
            rec();
            acc.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const IntegerPartition& a, const IntegerPartition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a > b;
    });
    return out;
}

IntegerPartition embed_self_conjugate(const IntegerPartition& lambda) {
    if (!is_wide(lambda).wide)
        throw std::invalid_argument("embed_self_conjugate: input must be wide");
    if (lambda.empty()) return lambda;
    int m = lambda.first_part();
    IntegerPartition conj = lambda.conjugate();
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(2 * m + lambda.length()));
    for (int i = 0; i < m; ++i) parts.push_back(2 * m + conj.part(i));
    for (int i = 0; i < m; ++i) parts.push_back(2 * m);
    for (int p : lambda.parts()) parts.push_back(p);
    return IntegerPartition(std::move(parts));
}

const std::array<long long, 65> kWideCountReference = {
    1,     1,     2,     3,     3,     5,     6,     9,     11,    14,    18,    23,    29,
    35,    45,    56,    68,    85,    103,   125,   150,   183,   217,   266,   315,   380,
    449,   534,   628,   745,   874,   1034,  1212,  1423,  1665,  1944,  2265,  2627,  3055,
    3536,  4099,  4735,  5479,  6309,  7273,  8358,  9599,  11012, 12605, 14421, 16480, 18825,
    21456, 24474, 27822, 31677, 35934, 40825, 46217, 52420, 59253, 67056, 75699, 85532, 96407};

}  // namespace wide
