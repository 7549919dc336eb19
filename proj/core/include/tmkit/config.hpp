#pragma once

namespace tmkit
{
    /// Every resource guard used by the oracles and solvers. Exceeding one of
    /// these raises CeilingExceeded; nothing silently falls back to a weaker
    /// method.
    struct Ceilings
    {
        /// vertices of a graph passed to canonical_form
        int canonical_vertices = 16;
        /// detail budget accepted by enumerate_patterns
        int pattern_detail = 4;
        /// number of root labels accepted by enumerate_patterns
        int pattern_roots = 4;
        /// host size for tmc_brute and the folio oracles
        int tmc_brute_vertices = 14;
        /// pattern size for tmc_brute and the tree-decomposition DP
        int pattern_vertices = 12;
        /// host size for disjoint_paths_brute
        int disjoint_paths_vertices = 30;
        /// number of terminal pairs for disjoint_paths_brute
        int disjoint_paths_pairs = 4;
        /// frontier states kept by disjoint_paths_brute in one layer
        long long disjoint_paths_states = 4'000'000;
        /// host size for minor_model_brute
        int minor_brute_vertices = 12;
        /// pattern size for minor_model_brute
        int minor_brute_pattern = 5;
        /// host size for tmdel_brute
        int tmdel_vertices = 12;
        /// budget for tmdel_brute
        int tmdel_budget = 3;
        /// host size for is_dk_irrelevant_brute
        int irrelevance_vertices = 10;
        /// deletion budget k for is_dk_irrelevant_brute
        int irrelevance_budget = 2;
        /// detail budget for is_dk_irrelevant_brute
        int irrelevance_detail = 2;
        /// host size for exact treewidth
        int treewidth_vertices = 20;
        /// subsets visited by the exact treewidth search
        long long treewidth_states = 2'000'000;
        /// width accepted by the tree-decomposition DP (after root injection)
        int dp_width = 6;
        /// states in one DP table
        long long dp_table_states = 2'000'000;
        /// number of roots accepted by the folio computations (|R| <= 16 delta^2 is also enforced)
        int folio_roots = 6;
        /// vertices searched by the exhaustive tightness validator for one ring
        int tightness_vertices = 30;
    };

    /// |R(G)| bound for the folio problems.
    constexpr auto alpha(int delta) -> long long
    {
        return 16LL * delta * delta;
    }
}
