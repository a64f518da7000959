/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef KEM_GUARD_KEM_GRAPH_HH
#define KEM_GUARD_KEM_GRAPH_HH 1

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kem
{
    /// Signalled when a graph, record, or request violates a precondition.
    class InvalidInput : public std::invalid_argument
    {
        public:
            explicit InvalidInput(const std::string & what);
    };

    /// Signalled when an input exceeds a configured size cap.
    class CapExceeded : public std::runtime_error
    {
        public:
            explicit CapExceeded(const std::string & what);
    };

    struct Edge
    {
        int u, v;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * Simple undirected graph on vertices 0..p-1. Edges are stored with
     * u < v and sorted, so two Graph values compare equal exactly when they
     * are the same labelled graph.
     */
    class Graph
    {
        private:
            int _p = 0;
            std::vector<Edge> _edges;

        public:
            Graph() = default;

            /// Validates and normalises. Throws InvalidInput naming the offending pair.
            Graph(int p, const std::vector<std::pair<int, int> > & edges);

            [[nodiscard]] auto p() const -> int { return _p; }
            [[nodiscard]] auto q() const -> int { return int(_edges.size()); }
            [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }

            [[nodiscard]] auto has_edge(int u, int v) const -> bool;
            [[nodiscard]] auto edge_index(int u, int v) const -> int;
            [[nodiscard]] auto degrees() const -> std::vector<int>;
            [[nodiscard]] auto adjacency() const -> std::vector<std::vector<int> >;

            /// The graph with vertex v renamed to perm[v].
            [[nodiscard]] auto relabelled(const std::vector<int> & perm) const -> Graph;

            auto operator== (const Graph &) const -> bool = default;
    };

    auto graph_from_edges(int p, const std::vector<std::pair<int, int> > & edges) -> Graph;

    /// Nonincreasing list of vertex degrees.
    auto degree_sequence(const Graph & g) -> std::vector<int>;

    auto is_connected(const Graph & g) -> bool;
}

#endif
