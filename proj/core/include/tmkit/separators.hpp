#pragma once

#include <tmkit/graph.hpp>

#include <span>
#include <vector>

namespace tmkit
{
    // Separators never contain vertices of X or Y: S is an X-Y separator if
    // S avoids X and Y and no path joins X to Y in G - S.

    struct MinCut
    {
        int size = 0;
        /// the minimum separator closest to X
        std::vector<Vertex> separator;
    };

    /// Vertex-capacity max-flow. Throws InvalidInput if X and Y meet and
    /// PreconditionFailed if an edge joins them (no separator exists).
    auto min_cut(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> MinCut;

    /// Vertices reachable from X in G - S.
    auto reach_set(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> s) -> std::vector<Vertex>;

    auto is_separator(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool;

    /// A separator none of whose proper subsets separates.
    auto is_minimal_separator(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool;

    struct ImportantSeparator
    {
        std::vector<Vertex> vertices;
        /// reach_set(g, X, vertices)
        std::vector<Vertex> reach;

        auto operator== (const ImportantSeparator &) const -> bool = default;
    };

    /// The minimum separator pushed as far toward Y as possible.
    auto unique_min_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> ImportantSeparator;

    /// Minimal and not dominated by any other separator.
    auto is_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool;

    /// All important separators of size at most k, sorted lexicographically.
    /// Branches on a vertex v of the furthest minimum separator: v is deleted
    /// (budget k - 1), or v joins the source side together with everything
    /// the minimum separator cuts off from Y. Empty when X or Y is empty.
    auto enumerate_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, int k) -> std::vector<ImportantSeparator>;

    /// |s1| <= |s2| and reach(s2) is a proper subset of reach(s1). Throws
    /// PreconditionFailed unless both are minimal separators.
    auto dominates(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s1,
            std::span<const Vertex> s2) -> bool;

    struct SupreachReport
    {
        /// vertices outside the component of G - X (resp. G - Y) containing V'
        std::vector<Vertex> a_x, a_y;
        bool holds = false;
    };

    /// For minimal Z-V' separators X and Y with Y dominating X and G[V']
    /// connected, checks that V(A_X) is a proper subset of V(A_Y). Throws
    /// PreconditionFailed when the hypotheses fail.
    auto supreach_check(const Graph & g, std::span<const Vertex> z, std::span<const Vertex> inner, std::span<const Vertex> x,
            std::span<const Vertex> y) -> SupreachReport;
}
