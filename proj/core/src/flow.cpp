#include "widecore/flow.hpp"

#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

namespace wide {

FlowNetwork::FlowNetwork(int node_count) : graph_(static_cast<size_t>(node_count)) {}

int FlowNetwork::add_node() {
    graph_.emplace_back();
    return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, long long capacity) {
    if (capacity < 0) throw std::invalid_argument("add_arc: negative capacity");
    auto& fwd = graph_[static_cast<size_t>(from)];
    auto& bwd = graph_[static_cast<size_t>(to)];
    fwd.push_back({to, capacity, capacity, static_cast<int>(bwd.size())});
    bwd.push_back({from, 0, 0, static_cast<int>(fwd.size()) - 1});
    arcs_.emplace_back(from, static_cast<int>(fwd.size()) - 1);
    return static_cast<int>(arcs_.size()) - 1;
}

bool FlowNetwork::bfs(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::queue<int> queue;
    level_[static_cast<size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (const Edge& e : graph_[static_cast<size_t>(v)]) {
            if (e.cap > 0 && level_[static_cast<size_t>(e.to)] < 0) {
                level_[static_cast<size_t>(e.to)] = level_[static_cast<size_t>(v)] + 1;
                queue.push(e.to);
            }
        }
    }
    return level_[static_cast<size_t>(sink)] >= 0;
}

long long FlowNetwork::dfs(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& i = iter_[static_cast<size_t>(v)]; i < static_cast<int>(graph_[static_cast<size_t>(v)].size()); ++i) {
        Edge& e = graph_[static_cast<size_t>(v)][static_cast<size_t>(i)];
        if (e.cap <= 0 || level_[static_cast<size_t>(e.to)] != level_[static_cast<size_t>(v)] + 1)
            continue;
        long long pushed = dfs(e.to, sink, std::min(limit, e.cap));
        if (pushed > 0) {
            e.cap -= pushed;
            graph_[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += pushed;
            return pushed;
        }
    }
    return 0;
}

long long FlowNetwork::max_flow(int source, int sink) {
    while (bfs(source, sink)) {
        iter_.assign(graph_.size(), 0);
        while (long long pushed = dfs(source, sink, std::numeric_limits<long long>::max()))
            value_ += pushed;
    }
    // Min-cut certificate: residual reachability from the source.
    cut_side_.assign(graph_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    cut_side_[static_cast<size_t>(source)] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (const Edge& e : graph_[static_cast<size_t>(v)]) {
            if (e.cap > 0 && !cut_side_[static_cast<size_t>(e.to)]) {
                cut_side_[static_cast<size_t>(e.to)] = true;
                queue.push(e.to);
            }
        }
    }
    long long cut_value = 0;
    for (size_t v = 0; v < graph_.size(); ++v) {
        if (!cut_side_[v]) continue;
        for (const Edge& e : graph_[v])
            if (e.original > 0 && !cut_side_[static_cast<size_t>(e.to)])
                cut_value += e.original;
    }
    if (cut_value != value_)
        throw std::logic_error("max-flow value does not equal the min-cut capacity");
    return value_;
}

long long FlowNetwork::flow_on(int arc_id) const {
    auto [node, idx] = arcs_[static_cast<size_t>(arc_id)];
    const Edge& e = graph_[static_cast<size_t>(node)][static_cast<size_t>(idx)];
    return e.original - e.cap;
}

}  // namespace wide
