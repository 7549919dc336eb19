#pragma once

#include <tmkit/config.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/pattern.hpp>
#include <tmkit/witness.hpp>

#include <optional>

namespace tmkit
{
    struct TmcOptions
    {
        /// Only accept realisations using at most this many subdivision vertices.
        std::optional<int> max_internal;
    };

    /// Exhaustive topological-minor search: branch vertices are placed lazily
    /// while paths are grown edge by edge (pattern edges in decreasing
    /// endpoint degree), failed partial states are memoised. Isolated
    /// unrooted pattern vertices are matched last by counting.
    auto tmc_brute(const RootedGraph & g, const RootedGraph & h, const Ceilings & ceilings = {}, const TmcOptions & options = {})
        -> std::optional<Witness>;

    auto tmc_brute(const RootedGraph & g, const Pattern & h, const Ceilings & ceilings = {}, const TmcOptions & options = {})
        -> std::optional<Witness>;

    /// Number of subdivision (path-interior) vertices of a witness.
    auto internal_vertex_count(const Witness & w) -> int;
}
