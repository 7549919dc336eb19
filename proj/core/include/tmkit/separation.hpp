#pragma once

#include <tmkit/graph.hpp>

#include <span>
#include <vector>

namespace tmkit
{
    /// A pair of subgraphs (left, right) of a rooted parent whose union is the
    /// parent and which share no edge.
    class Separation
    {
        public:
            /// Throws InvalidInput when the sides do not cover the parent, share
            /// an edge, or use a vertex pair that is not a parent edge.
            Separation(RootedGraph parent, std::vector<Vertex> left_vertices, std::vector<Edge> left_edges,
                    std::vector<Vertex> right_vertices, std::vector<Edge> right_edges);

            /// Splits by vertex sets; each edge goes to the left if both ends are
            /// left vertices, otherwise to the right.
            static auto from_vertex_sets(RootedGraph parent, std::vector<Vertex> left_vertices,
                    std::vector<Vertex> right_vertices) -> Separation;

            auto parent() const -> const RootedGraph & { return _parent; }
            auto left_vertices() const -> const std::vector<Vertex> & { return _left_vertices; }
            auto right_vertices() const -> const std::vector<Vertex> & { return _right_vertices; }
            auto left_edges() const -> const std::vector<Edge> & { return _left_edges; }
            auto right_edges() const -> const std::vector<Edge> & { return _right_edges; }

            /// Common vertices, sorted.
            auto separator() const -> std::vector<Vertex>;
            auto order() const -> int { return static_cast<int>(separator().size()); }

            /// Left side as a rooted graph in its own vertex numbering (sorted
            /// parent vertices); labels come from the parent.
            auto left() const -> Renamed<RootedGraph>;
            auto right() const -> Renamed<RootedGraph>;

        private:
            RootedGraph _parent;
            std::vector<Vertex> _left_vertices, _right_vertices;
            std::vector<Edge> _left_edges, _right_edges;
    };

    /// Result of replacing the left side: the new graph, where each vertex
    /// of it came from (left replacement or parent), and the maps.
    struct Replaced
    {
        RootedGraph graph;
        /// replacement vertex -> new vertex
        std::vector<Vertex> from_replacement;
        /// parent vertex -> new vertex (-1 for left-only vertices; separator
        /// vertices map to their label-matched replacement vertex)
        std::vector<Vertex> from_parent;
    };

    /// G1' ∪ G2: the left side is swapped for a compatible rooted graph, the
    /// separator's role taken over by the equally-labelled replacement roots.
    /// Requires every separator vertex to be a root of the parent. Right-side
    /// edges with both ends in the separator are kept (relabelled).
    auto replace(const Separation & sep, const RootedGraph & left_replacement) -> Replaced;
}
