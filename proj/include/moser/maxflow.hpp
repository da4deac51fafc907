#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "moser/error.hpp"

namespace moser {

// Capacitated flow network with paired forward/reverse arcs: the reverse
// of arc i sits at index i^1, so residual updates are a pair of writes.
// BFS augmenting paths (Edmonds-Karp); every network built here has unit
// bottlenecks on each path, so augmentation counts stay tiny.
class FlowNetwork {
  public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

    struct Arc {
        int to;
        int cap;
        int flow;
    };

    explicit FlowNetwork(int node_count) : adj_(node_count) {}

    int node_count() const { return int(adj_.size()); }

    // Adds from->to with the given capacity plus its zero-capacity reverse;
    // returns the forward arc index.
    int add_arc(int from, int to, int cap) {
        int idx = int(arcs_.size());
        arcs_.push_back({to, cap, 0});
        adj_[from].push_back(idx);
        arcs_.push_back({from, 0, 0});
        adj_[to].push_back(idx + 1);
        return idx;
    }

    int residual(int idx) const { return arcs_[idx].cap - arcs_[idx].flow; }
    const Arc& arc(int idx) const { return arcs_[idx]; }
    const std::vector<int>& arcs_from(int node) const { return adj_[node]; }

    void push(int idx, int amount) {
        arcs_[idx].flow += amount;
        arcs_[idx ^ 1].flow -= amount;
    }

    int max_flow(int source, int sink) {
        int total = 0;
        std::vector<int> parent_arc(node_count());
        while (true) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            parent_arc[source] = -2;
            std::queue<int> q;
            q.push(source);
            bool found = false;
            while (!q.empty() && !found) {
                int u = q.front();
                q.pop();
                for (int idx : adj_[u]) {
                    int v = arcs_[idx].to;
                    if (parent_arc[v] == -1 && residual(idx) > 0) {
                        parent_arc[v] = idx;
                        if (v == sink) {
                            found = true;
                            break;
                        }
                        q.push(v);
                    }
                }
            }
            if (!found) break;
            int bottleneck = kUnbounded;
            for (int v = sink; v != source;) {
                int idx = parent_arc[v];
                bottleneck = std::min(bottleneck, residual(idx));
                v = arcs_[idx ^ 1].to;
            }
            if (bottleneck >= kUnbounded)
                throw InternalError("max_flow: augmenting path with unbounded capacity; the network is malformed");
            for (int v = sink; v != source;) {
                int idx = parent_arc[v];
                push(idx, bottleneck);
                v = arcs_[idx ^ 1].to;
            }
            total += bottleneck;
        }
        return total;
    }

    // Nodes reachable from source in the residual graph; after max_flow
    // this is the source side of a minimum cut.
    std::vector<bool> residual_reachable(int source) const {
        std::vector<bool> seen(node_count(), false);
        seen[source] = true;
        std::vector<int> stack{source};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int idx : adj_[u]) {
                int v = arcs_[idx].to;
                if (!seen[v] && residual(idx) > 0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    }

  private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace moser
