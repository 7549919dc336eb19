#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tmkit
{
    using Vertex = int;

    /// Unordered pair stored with first < second.
    using Edge = std::pair<Vertex, Vertex>;

    auto make_edge(Vertex u, Vertex v) -> Edge;

    /// Immutable simple undirected graph on the vertices 0..n-1.
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(int vertex_count);

            /// Throws InvalidInput on out-of-range endpoints, loops or repeated pairs.
            Graph(int vertex_count, std::span<const Edge> edges);

            /// Like the constructor, but silently drops repeated pairs.
            static auto from_edges_dedup(int vertex_count, std::span<const Edge> edges) -> Graph;

            auto vertex_count() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

            /// Sorted lexicographically.
            auto edges() const -> const std::vector<Edge> & { return _edges; }

            /// Sorted ascending.
            auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adj[v]; }

            auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }
            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto has_vertex(Vertex v) const -> bool { return v >= 0 && v < _n; }

            /// Number of degree-0 vertices.
            auto isolated_count() const -> int;
            auto max_degree() const -> int;

            auto operator== (const Graph &) const -> bool = default;

        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adj;
    };

    /// A derived graph together with the vertex correspondence to its source.
    template <typename G_>
    struct Renamed
    {
        G_ graph;
        /// source vertex -> new vertex, or -1 when the vertex was dropped
        std::vector<Vertex> old_to_new;
        /// new vertex -> source vertex
        std::vector<Vertex> new_to_old;
    };

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Renamed<Graph>;
    auto delete_vertices(const Graph & g, std::span<const Vertex> gone) -> Renamed<Graph>;

    /// Subgraph formed by the given edges and their endpoints.
    auto edge_subgraph(const Graph & g, std::span<const Edge> edges) -> Renamed<Graph>;

    auto add_edges(const Graph & g, std::span<const Edge> extra) -> Graph;
    auto remove_edges(const Graph & g, std::span<const Edge> gone) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    /// Component id per vertex, ids numbered by smallest member.
    auto component_ids(const Graph & g) -> std::vector<int>;
    auto component_count(const Graph & g) -> int;
    auto is_connected(const Graph & g) -> bool;

    /// Vertices reachable from sources without entering blocked vertices
    /// (blocked sources are not started from).
    auto reachable(const Graph & g, std::span<const Vertex> sources, const std::vector<char> & blocked) -> std::vector<char>;

    /// Undirected graph with injectively labelled roots. Label 0 means
    /// "not a root"; roots carry positive labels.
    class RootedGraph
    {
        public:
            RootedGraph() = default;
            explicit RootedGraph(Graph g);

            /// Throws InvalidInput unless labels.size() == n, labels >= 0 and
            /// positive labels are pairwise distinct.
            RootedGraph(Graph g, std::vector<int> labels);

            auto graph() const -> const Graph & { return _graph; }
            auto vertex_count() const -> int { return _graph.vertex_count(); }
            auto label(Vertex v) const -> int { return _labels[v]; }
            auto labels() const -> const std::vector<int> & { return _labels; }
            auto is_root(Vertex v) const -> bool { return _labels[v] > 0; }

            /// Root vertices in increasing vertex order.
            auto roots() const -> std::vector<Vertex>;

            /// Root labels in increasing order.
            auto root_labels() const -> std::vector<int>;

            auto root_count() const -> int;
            auto vertex_with_label(int label) const -> std::optional<Vertex>;

            auto operator== (const RootedGraph &) const -> bool = default;

        private:
            Graph _graph;
            std::vector<int> _labels;
    };

    auto induced_subgraph(const RootedGraph & g, std::span<const Vertex> keep) -> Renamed<RootedGraph>;
    auto delete_vertices(const RootedGraph & g, std::span<const Vertex> gone) -> Renamed<RootedGraph>;

    /// Same graph with all roots removed.
    auto unrooted(const RootedGraph & g) -> RootedGraph;

    /// Adds the edges of X, a graph whose vertices are addressed by root label.
    auto with_root_edges(const RootedGraph & g, std::span<const std::pair<int, int>> label_edges) -> RootedGraph;
}
