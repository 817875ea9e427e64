#pragma once

#include <utility>
#include <vector>

namespace wide {

/// Dinic max-flow on small integer-capacity networks. Every solve checks its
/// value against the residual min cut and keeps integral arc flows.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count);

    int add_node();
    /// Returns an arc id usable with flow_on(). Capacity must be nonnegative.
    int add_arc(int from, int to, long long capacity);

    /// Computes the max flow and asserts the min-cut certificate. Repeated
    /// calls continue from the current flow (capacities may not change).
    long long max_flow(int source, int sink);

    long long flow_on(int arc_id) const;
    /// Source side of the certifying min cut from the last max_flow call.
    const std::vector<bool>& min_cut_side() const { return cut_side_; }
    long long last_value() const { return value_; }

    int node_count() const { return static_cast<int>(graph_.size()); }

private:
    struct Edge {
        int to;
        long long cap;       // residual
        long long original;  // forward arcs only; 0 marks a reverse arc
        int rev;
    };

    bool bfs(int source, int sink);
    long long dfs(int v, int sink, long long limit);

    std::vector<std::vector<Edge>> graph_;
    std::vector<std::pair<int, int>> arcs_;  // node, edge index of forward arcs
    std::vector<int> level_;
    std::vector<int> iter_;
    std::vector<bool> cut_side_;
    long long value_ = 0;
};

}  // namespace wide
