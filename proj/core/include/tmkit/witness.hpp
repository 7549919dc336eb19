#pragma once

#include <tmkit/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tmkit
{
    /// Embedding of a pattern H as a topological minor of a host G.
    /// branch[h] is the image of pattern vertex h; paths[i] is the host path
    /// realising the i-th pattern edge (in h.graph().edges() order), listed
    /// from branch[first] to branch[second].
    struct Witness
    {
        std::vector<Vertex> branch;
        std::vector<std::vector<Vertex>> paths;

        auto operator== (const Witness &) const -> bool = default;
    };

    /// Reason the witness is invalid, or nullopt if it satisfies all four
    /// conditions (endpoints, internal disjointness, no branch vertex inside
    /// a path, root labels) and every path is a simple host path.
    auto witness_problem(const RootedGraph & g, const RootedGraph & h, const Witness & w) -> std::optional<std::string>;

    auto is_valid_witness(const RootedGraph & g, const RootedGraph & h, const Witness & w) -> bool;

    /// The identity embedding of a graph into itself.
    auto identity_witness(const Graph & g) -> Witness;

    /// Certificate that host contains a subdivision of pattern (labels ignored).
    auto verify_subdivision(const Graph & host, const Graph & pattern, const Witness & certificate) -> bool;

    /// Vertices used by the witness: branch images and path interiors.
    auto witness_vertices(const Witness & w) -> std::vector<Vertex>;

    /// A minor model: branch_sets[h] is the connected host vertex set of h.
    struct MinorModel
    {
        std::vector<std::vector<Vertex>> branch_sets;

        auto operator== (const MinorModel &) const -> bool = default;
    };

    auto minor_model_problem(const Graph & host, const Graph & pattern, const MinorModel & model) -> std::optional<std::string>;
    auto verify_minor_model(const Graph & host, const Graph & pattern, const MinorModel & model) -> bool;

    /// Minor model of the rows x cols grid; branch set of grid vertex (i, j)
    /// (0-based) is branch_sets[i * cols + j].
    struct GridModel
    {
        int rows = 0, cols = 0;
        std::vector<std::vector<Vertex>> branch_sets;

        auto operator== (const GridModel &) const -> bool = default;
    };

    auto verify_grid_model(const Graph & host, const GridModel & model) -> bool;
}
