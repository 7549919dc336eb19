#pragma once

#include <tmkit/graph.hpp>
#include <tmkit/random.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace tmkit
{
    using Point = std::pair<double, double>;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;

    /// Centre 0, leaves 1..leaves.
    auto star_graph(int leaves) -> Graph;
    auto petersen_graph() -> Graph;

    /// a rows by b columns; vertex (i, j), 0-based, is i * b + j.
    auto generate_grid(int a, int b) -> Graph;
    auto grid_vertex(int b, int i, int j) -> Vertex;

    /// A vertex layout of a graph isomorphic to a grid: at[i * cols + j] is
    /// the vertex in row i, column j.
    struct GridLayout
    {
        int rows = 0, cols = 0;
        std::vector<Vertex> at;
    };

    /// Recognises graphs isomorphic to generate_grid(a, b) for some a <= b.
    auto recognize_grid(const Graph & g) -> std::optional<GridLayout>;

    /// Straight-line planar drawing of generate_grid(a, b): (j, -i).
    auto grid_coordinates(int a, int b) -> std::vector<Point>;

    /// Each edge replaced by a path with `times` new interior vertices,
    /// appended after the original vertices in edge order.
    auto subdivide_edges(const Graph & g, int times) -> Graph;
    auto subdivide_coordinates(const Graph & g, const std::vector<Point> & coords, int times) -> std::vector<Point>;

    auto random_graph(int n, int edge_num, int edge_den, Rng & rng) -> Graph;
    auto random_tree(int n, Rng & rng) -> Graph;

    /// Random subgraph of a random k-tree: every edge of the k-tree survives
    /// with probability keep_num/keep_den, so treewidth is at most k.
    auto random_partial_ktree(int n, int k, int keep_num, int keep_den, Rng & rng) -> Graph;

    /// Labels 1..roots placed on distinct random vertices.
    auto random_rooted(const Graph & g, int roots, Rng & rng) -> RootedGraph;

    /// Random graph with at most max_edges edges and no requirement of
    /// connectivity; vertices are 0..n-1.
    auto random_small_pattern(int n, int max_edges, Rng & rng) -> Graph;
}
