#pragma once

#include <string>
#include <vector>

#include "graphcode/errors.hpp"
#include "graphcode/graph.hpp"

namespace graphcode {

/// Contiguous interval partition of 1..n into p = ceil(n/(r+1)) parts, each
/// of size between 2 and r+1. Size-1 parts never occur: when n mod (r+1) = 1
/// the last full part shrinks by one so the tail has two vertices.
struct PartitionPlan {
    struct Part {
        int first;
        int last;
        int size() const { return last - first + 1; }
    };

    std::vector<Part> parts;

    int p() const { return static_cast<int>(parts.size()); }
};

namespace detail {

inline void check_locality_params(int n, int r, const char* who) {
    if (n < 2)
        throw parameter_error(std::string(who) + ": need n >= 2, got n = " + std::to_string(n));
    if (r < 2 || r > n - 1)
        throw parameter_error(std::string(who) + ": need 2 <= r <= n-1, got r = " +
                              std::to_string(r) + " for n = " + std::to_string(n));
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace detail

inline PartitionPlan partition_plan(int n, int r) {
    detail::check_locality_params(n, r, "partition_plan");
    const int p = detail::ceil_div(n, r + 1);
    PartitionPlan plan;
    plan.parts.reserve(static_cast<std::size_t>(p));
    if (n % (r + 1) != 1) {
        for (int i = 1; i <= p - 1; ++i)
            plan.parts.push_back({(i - 1) * (r + 1) + 1, i * (r + 1)});
        plan.parts.push_back({(p - 1) * (r + 1) + 1, n});
    } else {
        // Remainder 1 would leave a lone vertex; steal one from the previous
        // part so the tail sizes become r and 2.
        for (int i = 1; i <= p - 2; ++i)
            plan.parts.push_back({(i - 1) * (r + 1) + 1, i * (r + 1)});
        plan.parts.push_back({(p - 2) * (r + 1) + 1, (p - 1) * (r + 1) - 1});
        plan.parts.push_back({(p - 1) * (r + 1), n});
    }
    return plan;
}

/// Disjoint union of cliques on the partition_plan parts. Locality at most r,
/// rank of the augmented adjacency exactly p.
inline Graph clique_partition(int n, int r) {
    detail::check_locality_params(n, r, "clique_partition");
    const PartitionPlan plan = partition_plan(n, r);
    std::vector<Graph::Edge> edges;
    for (const PartitionPlan::Part& part : plan.parts)
        for (int u = part.first; u <= part.last; ++u)
            for (int v = u + 1; v <= part.last; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// Connected variant: parts of size r+1 (remainder in the last), each part a
/// clique minus the edge between its first and last vertex, consecutive parts
/// joined by a bridge between last-of-part and first-of-next. A 2-vertex tail
/// keeps its internal edge; a 1-vertex tail hangs off the bridge alone.
/// Connected, locality at most r, rank at most 3p.
inline Graph connected_chain(int n, int r) {
    detail::check_locality_params(n, r, "connected_chain");
    const int p = detail::ceil_div(n, r + 1);
    std::vector<Graph::Edge> edges;

    auto near_clique = [&edges](int first, int last) {
        // All pairs except (first, last).
        for (int u = first; u <= last; ++u)
            for (int v = u + 1; v <= last; ++v)
                if (!(u == first && v == last)) edges.emplace_back(u, v);
    };

    for (int i = 1; i <= p - 1; ++i) near_clique((i - 1) * (r + 1) + 1, i * (r + 1));

    const int tail_first = (p - 1) * (r + 1) + 1;
    const int tail_size = n - tail_first + 1;
    if (tail_size >= 3) {
        near_clique(tail_first, n);
    } else if (tail_size == 2) {
        edges.emplace_back(tail_first, n);
    }
    // tail_size == 1: vertex n is attached only by the bridge below.

    for (int i = 1; i <= p - 1; ++i) edges.emplace_back(i * (r + 1), i * (r + 1) + 1);

    return Graph::from_edge_list(n, edges);
}

inline Graph complete(int n) {
    if (n < 2) throw parameter_error("complete: need n >= 2, got n = " + std::to_string(n));
    std::vector<Graph::Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

} // namespace graphcode
