#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace tmkit
{
    /// |E(H)| + number of isolated vertices of H.
    auto detail(const RootedGraph & h) -> int;
    auto detail(const Graph & h) -> int;

    /// A rooted pattern together with the detail budget it was drawn from.
    class Pattern
    {
        public:
            /// Throws InvalidInput if detail(graph) exceeds budget or budget < 1.
            Pattern(RootedGraph graph, int budget);

            auto graph() const -> const RootedGraph & { return _graph; }
            auto budget() const -> int { return _budget; }

        private:
            RootedGraph _graph;
            int _budget;
    };

    /// One rooted graph per root-label-preserving isomorphism class with
    /// detail <= delta, whose root labels form any subset of root_labels.
    /// The empty graph is included.
    auto enumerate_patterns(std::span<const int> root_labels, int delta, const Ceilings & ceilings = {}) -> std::vector<RootedGraph>;

    /// Subdivide every edge of h: once when the realising path has length 2,
    /// twice when it is longer, not at all for length 1. Without lengths
    /// every edge is subdivided twice. Lengths are indexed like h.graph().edges().
    auto subdivision_normal_form(const RootedGraph & h, std::optional<std::span<const int>> path_lengths = std::nullopt) -> RootedGraph;

    auto subdivision_normal_form(const Pattern & h, std::optional<std::span<const int>> path_lengths = std::nullopt) -> Pattern;
}
