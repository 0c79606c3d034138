#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/bitmat.hpp"
#include "graphcode/errors.hpp"

namespace graphcode {

/// Simple undirected graph on vertices 1..n. Vertex labels are 1-indexed so
/// the interval arithmetic of the clique constructions can be used verbatim.
/// Immutable once built; duplicate edges in the input are dropped, self-loops
/// are rejected.
class Graph {
public:
    using Edge = std::pair<int, int>;

    static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
        if (n < 1) throw parameter_error("Graph: vertex count must be at least 1");
        Graph g;
        g.n_ = n;
        g.adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
        for (const Edge& e : edges) {
            const int u = e.first;
            const int v = e.second;
            if (u < 1 || u > n || v < 1 || v > n)
                throw parameter_error("Graph: vertex label out of range 1.." + std::to_string(n));
            if (u == v)
                throw parameter_error("Graph: self-loop at vertex " + std::to_string(u));
            g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
            g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (std::size_t v = 1; v < g.adjacency_.size(); ++v) {
            std::vector<int>& nbrs = g.adjacency_[v];
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        return g;
    }

    int n() const { return n_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        const std::vector<int>& nbrs = neighbors(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    int max_degree() const {
        int best = 0;
        for (int v = 1; v <= n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    bool has_isolated_vertex() const {
        for (int v = 1; v <= n_; ++v)
            if (adjacency_[static_cast<std::size_t>(v)].empty()) return true;
        return false;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 1; v <= n_; ++v) twice += adjacency_[static_cast<std::size_t>(v)].size();
        return twice / 2;
    }

    bool is_connected() const {
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        std::vector<int> queue{1};
        seen[1] = true;
        std::size_t head = 0;
        std::size_t reached = 1;
        while (head < queue.size()) {
            const int v = queue[head++];
            for (int u : adjacency_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                    ++reached;
                }
            }
        }
        return reached == static_cast<std::size_t>(n_);
    }

    /// Adjacency matrix with all diagonal entries forced to 1: entry (u,v) is
    /// 1 iff u = v or u and v are adjacent.
    BitMatrix augmented_adjacency() const {
        BitMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
        for (int v = 1; v <= n_; ++v) {
            const std::size_t row = static_cast<std::size_t>(v - 1);
            m.set(row, row, true);
            for (int u : adjacency_[static_cast<std::size_t>(v)])
                m.set(row, static_cast<std::size_t>(u - 1), true);
        }
        return m;
    }

    /// Each undirected edge once, with u < v, ordered lexicographically.
    std::vector<Edge> to_edge_list() const {
        std::vector<Edge> edges;
        for (int u = 1; u <= n_; ++u)
            for (int v : adjacency_[static_cast<std::size_t>(u)])
                if (u < v) edges.emplace_back(u, v);
        return edges;
    }

    /// Edge-list file format: header "n m", then one "u v" line per edge.
    std::string to_edge_list_text() const {
        const std::vector<Edge> edges = to_edge_list();
        std::ostringstream os;
        os << n_ << ' ' << edges.size() << '\n';
        for (const Edge& e : edges) os << e.first << ' ' << e.second << '\n';
        return os.str();
    }

    static Graph parse_edge_list(std::istream& in) {
        long long n = 0;
        long long m = 0;
        if (!(in >> n >> m) || n < 1 || m < 0)
            throw format_error("edge list: bad header, expected \"n m\"");
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (long long k = 0; k < m; ++k) {
            int u = 0;
            int v = 0;
            if (!(in >> u >> v))
                throw format_error("edge list: expected " + std::to_string(m) +
                                   " edges, got " + std::to_string(k));
            edges.emplace_back(u, v);
        }
        try {
            return from_edge_list(static_cast<int>(n), edges);
        } catch (const parameter_error& e) {
            // Bad labels inside a file are an input-format problem.
            throw format_error(std::string("edge list: ") + e.what());
        }
    }

    static Graph parse_edge_list(const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    }

    std::string to_dot() const {
        std::ostringstream os;
        os << "graph G {\n";
        for (int v = 1; v <= n_; ++v)
            if (adjacency_[static_cast<std::size_t>(v)].empty()) os << "  " << v << ";\n";
        for (const Edge& e : to_edge_list())
            os << "  " << e.first << " -- " << e.second << ";\n";
        os << "}\n";
        return os.str();
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adjacency_ == other.adjacency_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    Graph() = default;

    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw parameter_error("Graph: vertex " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::vector<int>> adjacency_; // index 0 unused
};

} // namespace graphcode
