#pragma once

#include <tmkit/config.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/pattern.hpp>
#include <tmkit/treewidth.hpp>
#include <tmkit/witness.hpp>

#include <optional>

namespace tmkit
{
    struct DpStats
    {
        /// largest table over all nodes
        long long max_table = 0;
        long long total_states = 0;
    };

    /// Topological-minor containment by dynamic programming over a nice tree
    /// decomposition of g. A bag vertex is free, a branch vertex or a path
    /// interior of one pattern edge; each pattern edge keeps its partial
    /// path segments as explicit end pairings. Host edges are decided when
    /// their first endpoint is forgotten. Unrooted isolated pattern vertices
    /// are matched by counting unused host vertices.
    auto tmc_dp(const RootedGraph & g, const RootedGraph & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings = {},
            DpStats * stats = nullptr) -> std::optional<Witness>;

    auto tmc_dp(const RootedGraph & g, const Pattern & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings = {},
            DpStats * stats = nullptr) -> std::optional<Witness>;

    /// Extended delta-folio of g: the roots are added to every inner bag so
    /// that each graph on the roots is covered, then every candidate pattern
    /// is decided by tmc_dp.
    auto folio_dp(const RootedGraph & g, int delta, const NiceTreeDecomposition & ntd, const Ceilings & ceilings = {}) -> ExtendedFolio;

    struct RepresentativeResult
    {
        RootedGraph graph;
        NiceTreeDecomposition decomposition;
        int splices = 0;
    };

    /// A graph with the same roots and the same extended delta-folio. With
    /// the roots in every bag, each node u defines G_u (everything below u)
    /// rooted at its bag. Whenever an ancestor u and a descendant v have
    /// extended folios that agree under a bijection of their bags fixing the
    /// roots, G_u is replaced by G_v. Deepest v first, then highest u.
    auto representative(const RootedGraph & g, int delta, const NiceTreeDecomposition & ntd, const Ceilings & ceilings = {})
        -> RepresentativeResult;

    /// Exact decomposition when g is within the treewidth ceiling, min-fill otherwise, made nice.
    auto nice_decomposition(const Graph & g, const Ceilings & ceilings = {}) -> NiceTreeDecomposition;
}
