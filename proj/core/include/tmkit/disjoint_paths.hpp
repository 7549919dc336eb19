#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace tmkit
{
    struct DisjointPathsInstance
    {
        Graph graph;
        /// terminal pairs (s_i, t_i); all 2k terminals distinct
        std::vector<std::pair<Vertex, Vertex>> pairs;
    };

    using Linkage = std::vector<std::vector<Vertex>>;

    /// Throws InvalidInput on repeated or out-of-range terminals.
    auto validate_instance(const DisjointPathsInstance & inst) -> void;

    /// Exhaustive search over all path systems, organised as a dynamic
    /// programme along an edge order: each state records, for the vertices
    /// still touching unprocessed edges, their degree in the partial solution
    /// and how the open path ends pair up or which terminal they lead back to.
    /// Returns vertex-disjoint paths, the i-th from s_i to t_i, or nullopt.
    auto disjoint_paths_brute(const DisjointPathsInstance & inst, const Ceilings & ceilings = {}) -> std::optional<Linkage>;

    auto verify_linkage(const DisjointPathsInstance & inst, const Linkage & paths) -> bool;
}
