#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tmkit
{
    struct DeletionInstance
    {
        RootedGraph graph;
        /// unrooted forbidden patterns
        std::vector<Graph> forbidden;
        int budget = 0;
        /// upper bound on the size of a forbidden pattern
        int h_star = 0;
    };

    /// Throws InvalidInput on a negative budget or a pattern larger than h_star.
    auto validate_instance(const DeletionInstance & inst) -> void;

    /// True iff g contains no forbidden pattern as a topological minor.
    auto is_free_of(const RootedGraph & g, const std::vector<Graph> & forbidden, const Ceilings & ceilings = {}) -> bool;

    /// Reason the set is not a solution, or nullopt: it must be a set of at
    /// most budget distinct non-root vertices whose removal leaves no
    /// forbidden topological minor.
    auto deletion_problem(const DeletionInstance & inst, const std::vector<Vertex> & s, const Ceilings & ceilings = {})
        -> std::optional<std::string>;

    /// A minimum solution found by trying all sets of non-root vertices by
    /// increasing size, or nullopt if none has at most budget vertices.
    auto tmdel_brute(const DeletionInstance & inst, const Ceilings & ceilings = {}) -> std::optional<std::vector<Vertex>>;
}
