#pragma once

#include <tmkit/config.hpp>
#include <tmkit/disjoint_paths.hpp>
#include <tmkit/embedding.hpp>
#include <tmkit/wall.hpp>
#include <tmkit/witness.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tmkit
{
    /// Cycles are vertex lists in cyclic order, consecutive vertices adjacent.
    using Cycle = std::vector<Vertex>;

    /// Rotated to start at its smallest vertex, then oriented so that the
    /// second vertex is smaller than the last.
    auto normalize_cycle(Cycle c) -> Cycle;

    /// Vertices strictly inside the cycle, i.e. on the side away from the
    /// outer face of its component. Other components count as outside.
    auto cycle_interior(const EmbeddedGraph & eg, std::span<const Vertex> cycle) -> std::vector<Vertex>;

    /// The innermost cycle avoiding `region` whose interior contains all of
    /// `region`, using only vertices of `allowed` (empty span: everything
    /// outside the region). Smallest interior wins, ties go to the
    /// lexicographically smallest vertex set.
    auto innermost_enclosing_cycle(const EmbeddedGraph & eg, std::span<const Vertex> region, std::span<const Vertex> allowed = {})
        -> std::optional<Cycle>;

    /// C_0, ..., C_s around a protected centre vertex: pairwise disjoint,
    /// the centre strictly inside C_0 and each C_i strictly inside C_{i+1}.
    /// Tight when each C_i is the only cycle in its closed disc that avoids
    /// and encloses the previous layer (the centre for C_0).
    struct CycleSequence
    {
        Vertex center = -1;
        std::vector<Cycle> cycles;
        bool tight = false;

        auto operator== (const CycleSequence &) const -> bool = default;
    };

    auto concentric_problem(const EmbeddedGraph & eg, const CycleSequence & cs) -> std::optional<std::string>;

    /// Checks tightness by enumerating every cycle of each closed disc minus
    /// the previous layer. Throws CeilingExceeded on tightness_vertices.
    auto tightness_problem(const EmbeddedGraph & eg, const CycleSequence & cs, const Ceilings & ceilings = {})
        -> std::optional<std::string>;

    /// Onion peeling: each layer is the innermost cycle enclosing everything
    /// inside the previous one.
    auto concentric_cycles(const EmbeddedGraph & eg, Vertex center, int s) -> std::optional<CycleSequence>;

    /// Same depth around the same centre, each cycle replaced by the
    /// innermost one inside it. Throws InvalidInput on a non-concentric input.
    auto tighten(const EmbeddedGraph & eg, const CycleSequence & cs) -> CycleSequence;

    struct IrrelevantVertex
    {
        Vertex vertex = -1;
        /// C_0, ..., C_r with vertex strictly inside C_0 and every terminal outside C_r
        CycleSequence certificate;
    };

    /// A vertex insulated from all terminals by a tight sequence of r + 1
    /// cycles. Candidates are tried by decreasing distance to the terminals,
    /// then by index. The graph of the instance must be the embedded graph.
    auto dp_irrelevant_vertex(const EmbeddedGraph & eg, const DisjointPathsInstance & inst, int r) -> std::optional<IrrelevantVertex>;

    /// An r x r grid minor model. Subdivided grids are recognised after
    /// suppressing degree-2 chains; small graphs fall back to
    /// minor_model_brute. nullopt only when the exact treewidth is at most
    /// 6r - 6; anything undecided throws CeilingExceeded.
    auto grid_minor_planar(const EmbeddedGraph & eg, int r, const Ceilings & ceilings = {}) -> std::optional<GridModel>;

    struct IrrelevanceChain
    {
        /// side of W_0, ..., W_{k+1}
        std::vector<int> sides;
        /// host vertices of W_0, ..., W_{k+1}
        std::vector<std::vector<Vertex>> walls;
        /// vertices of W_{k+1}
        std::vector<Vertex> irrelevant;
    };

    /// Nested centred square sub-walls, each side the previous one divided by
    /// shrink. Requires min(height, width) >= shrink^(k + 2), otherwise
    /// throws PreconditionFailed.
    auto irrelevance_chain(const Wall & w, int delta, int k, int shrink) -> IrrelevanceChain;
}
