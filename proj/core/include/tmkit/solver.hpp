#pragma once

#include <tmkit/config.hpp>
#include <tmkit/deletion.hpp>
#include <tmkit/embedding.hpp>
#include <tmkit/witness.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace tmkit
{
    enum class Engine
    {
        dp,
        brute,
    };

    auto engine_name(Engine e) -> const char *;

    struct SolverConfig
    {
        /// containment test used to detect a forbidden pattern before a
        /// realization is extracted
        Engine engine = Engine::brute;
        /// delete certified irrelevant vertices first (needs an embedding)
        bool irrelevant_vertices = false;
        /// a candidate irrelevant vertex needs r + 1 concentric cycles around it
        int r = 1;
        /// embedding of the instance graph, used by the preprocessing
        std::optional<EmbeddedGraph> embedding;
        /// failure memo keyed by canonical residual graph and budget
        bool memo = true;
        int memo_vertices = 10;
        Ceilings ceilings;
    };

    struct SearchStep
    {
        int depth = 0;
        /// index into the forbidden family
        int pattern = -1;
        /// vertices of the realization branched on, in instance numbering
        std::vector<Vertex> realization;
    };

    struct SearchTrace
    {
        long long nodes = 0;
        long long memo_hits = 0;
        /// vertices removed by the preprocessing, in instance numbering
        std::vector<Vertex> irrelevant;
        std::vector<SearchStep> steps;
    };

    struct SolveResult
    {
        std::optional<std::vector<Vertex>> solution;
        SearchTrace trace;
    };

    /// Branches on the non-root vertices of a minimum realization of the
    /// first forbidden pattern (by edge count) still present. The returned
    /// set is sorted.
    auto solve(const DeletionInstance & inst, const SolverConfig & cfg = {}) -> SolveResult;

    /// A minimum-size realization of some forbidden pattern in g, trying
    /// patterns by increasing edge count; the index refers to `forbidden`.
    auto find_realization(const RootedGraph & g, const std::vector<Graph> & forbidden, Engine engine, const Ceilings & ceilings = {})
        -> std::optional<std::pair<int, Witness>>;

    auto verify_solution(const DeletionInstance & inst, const std::vector<Vertex> & s, const Ceilings & ceilings = {}) -> bool;
}
