#pragma once

namespace wide {

/// Shared search-node budget. Searches call tick() per node and stop cleanly
/// when it returns false; exhausted() distinguishes "ran out" from "finished".
struct Budget {
    long long node_cap = 10'000'000;
    long long nodes_used = 0;

    bool tick() {
        ++nodes_used;
        return nodes_used <= node_cap;
    }
    bool exhausted() const { return nodes_used > node_cap; }
    long long remaining() const { return node_cap > nodes_used ? node_cap - nodes_used : 0; }
};

/// Default node cap, honoring the WIDE_BUDGET environment variable.
Budget default_budget();

}  // namespace wide
