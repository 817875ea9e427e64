#include "widecore/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace wide {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

IntegerPartition IntegerPartition::sorted_from(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return IntegerPartition(std::move(parts));
}

std::optional<IntegerPartition> IntegerPartition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return IntegerPartition(std::move(parts));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

long long IntegerPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

IntegerPartition IntegerPartition::conjugate() const {
    std::vector<int> cols(static_cast<size_t>(first_part()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
    return IntegerPartition(std::move(cols));
}

int IntegerPartition::distinct_part_count() const {
    int distinct = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++distinct;
    return distinct;
}

IntegerPartition IntegerPartition::lower_subpartition(int drop) const {
    if (drop < 0 || drop > length()) throw std::invalid_argument("lower_subpartition: bad drop");
    return IntegerPartition(std::vector<int>(parts_.begin() + drop, parts_.end()));
}

std::string IntegerPartition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int first_dominance_violation(const IntegerPartition& a, const IntegerPartition& b) {
    int n = std::max(a.length(), b.length());
    long long sa = 0, sb = 0;
    for (int j = 0; j < n; ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa < sb) return j + 1;
    }
    return 0;
}

bool dominates(const IntegerPartition& a, const IntegerPartition& b) {
    return first_dominance_violation(a, b) == 0;
}

IntegerPartition add(const IntegerPartition& a, const IntegerPartition& b) {
    int n = std::max(a.length(), b.length());
    std::vector<int> parts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = a.part(i) + b.part(i);
    return IntegerPartition(std::move(parts));
}

std::optional<IntegerPartition> subtract(const IntegerPartition& a, const IntegerPartition& b) {
    if (b.length() > a.length()) return std::nullopt;
    std::vector<int> diffs(static_cast<size_t>(a.length()));
    for (int i = 0; i < a.length(); ++i) {
        int d = a.part(i) - b.part(i);
        if (d < 0) return std::nullopt;
        if (i > 0 && diffs[static_cast<size_t>(i - 1)] < d) return std::nullopt;
        diffs[static_cast<size_t>(i)] = d;
    }
    while (!diffs.empty() && diffs.back() == 0) diffs.pop_back();
    return IntegerPartition(std::move(diffs));
}

namespace {

bool partition_rec(std::vector<int>& acc, int rest, int max_part,
                   const std::function<bool(const IntegerPartition&)>& visit) {
    if (rest == 0) return visit(IntegerPartition(acc));
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        acc.push_back(p);
        bool keep = partition_rec(acc, rest - p, p, visit);
        acc.pop_back();
        if (!keep) return false;
    }
    return true;
}

}  // namespace

void for_each_partition(int n, const std::function<bool(const IntegerPartition&)>& visit,
                        int max_part) {
    if (n < 0) return;
    if (n == 0) {
        visit(IntegerPartition{});
        return;
    }
    std::vector<int> acc;
    partition_rec(acc, n, max_part < 0 ? n : max_part, visit);
}

std::vector<IntegerPartition> partitions_of(int n, int max_part) {
    std::vector<IntegerPartition> out;
    for_each_partition(n, [&](const IntegerPartition& p) {
        out.push_back(p);
        return true;
    }, max_part);
    return out;
}

}  // namespace wide
