#pragma once

#include <tmkit/config.hpp>
#include <tmkit/embedding.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/witness.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tmkit
{
    struct TreeDecomposition
    {
        std::vector<std::vector<Vertex>> bags;
        /// parent node, -1 for the root
        std::vector<int> parent;
        int root = -1;

        auto node_count() const -> int { return static_cast<int>(bags.size()); }
        /// largest bag size minus one (-1 for no bags or only empty bags)
        auto width() const -> int;
        auto children() const -> std::vector<std::vector<int>>;
    };

    /// Reason the decomposition is invalid for g, or nullopt: the parent
    /// links form one tree, bags are sorted sets of vertices of g, every
    /// vertex and edge is covered and the nodes containing a vertex are
    /// connected.
    auto decomposition_problem(const Graph & g, const TreeDecomposition & td) -> std::optional<std::string>;
    auto is_valid_decomposition(const Graph & g, const TreeDecomposition & td) -> bool;

    /// Greedy min-fill elimination order (ties: smaller degree, then smaller vertex).
    auto min_fill_order(const Graph & g) -> std::vector<Vertex>;

    /// The decomposition induced by eliminating vertices in the given order.
    auto decomposition_from_order(const Graph & g, std::span<const Vertex> order) -> TreeDecomposition;

    /// Minor-min-width lower bound: repeatedly contract a minimum-degree
    /// vertex into its smallest-degree neighbour.
    auto treewidth_lower_bound(const Graph & g) -> int;

    /// A decomposition of width at most t, or nullopt if the treewidth
    /// exceeds t. Min-fill and the lower bound settle easy cases; otherwise a
    /// depth-first search over sets of eliminated vertices decides exactly.
    auto treewidth_exact(const Graph & g, int t, const Ceilings & ceilings = {}) -> std::optional<TreeDecomposition>;

    /// Exact treewidth with an optimal decomposition.
    struct TreewidthResult
    {
        int width;
        TreeDecomposition decomposition;
    };

    auto treewidth(const Graph & g, const Ceilings & ceilings = {}) -> TreewidthResult;

    enum class NodeKind
    {
        Leaf,
        Introduce,
        Forget,
        Join
    };

    auto node_kind_name(NodeKind kind) -> const char *;

    /// Node ids are ordered so that every child precedes its parent.
    struct NiceTreeDecomposition
    {
        TreeDecomposition tree;
        std::vector<NodeKind> kind;
        /// introduced or forgotten vertex, -1 otherwise
        std::vector<Vertex> vertex;
        std::vector<std::vector<int>> children;

        auto node_count() const -> int { return tree.node_count(); }
        auto width() const -> int { return tree.width(); }
    };

    /// Nice decomposition of the same width; `everywhere` is added to every
    /// bag except the leaves and the root, which stay empty.
    auto make_nice(const TreeDecomposition & td, std::span<const Vertex> everywhere = {}) -> NiceTreeDecomposition;

    auto nice_problem(const Graph & g, const NiceTreeDecomposition & ntd) -> std::optional<std::string>;
    auto is_valid_nice(const Graph & g, const NiceTreeDecomposition & ntd) -> bool;

    /// Text format: "td <nodes> <width>", then "b <node> <vertices...>" per
    /// node, "t <parent> <child>" per tree edge, and for nice decompositions
    /// "k <node> Leaf|I <v>|F <v>|J".
    auto write_decomposition(std::ostream & out, const TreeDecomposition & td) -> void;
    auto write_decomposition(std::ostream & out, const NiceTreeDecomposition & ntd) -> void;
    auto format_decomposition(const TreeDecomposition & td) -> std::string;
    auto format_decomposition(const NiceTreeDecomposition & ntd) -> std::string;

    struct DecompositionFile
    {
        TreeDecomposition tree;
        /// present when every node carries a kind line
        std::optional<NiceTreeDecomposition> nice;
    };

    auto read_decomposition(std::istream & in) -> DecompositionFile;
    auto parse_decomposition(const std::string & text) -> DecompositionFile;

    /// Edge-induced subgraph H of g with t < tw(H) <= 2t, found by halving:
    /// edges are split into a fixed part F with tw(F) <= t and an active part
    /// A with tw(F + A) > t; half of A moves into F or is discarded each round.
    struct CertifiedWindow
    {
        Renamed<Graph> window;
        /// edges of g forming the window
        std::vector<Edge> edges;
        int rounds = 0;
        /// exact treewidth of the window
        int treewidth = 0;
    };

    /// Throws PreconditionFailed if tw(g) <= t.
    auto certified_window(const Graph & g, int t, const Ceilings & ceilings = {}) -> CertifiedWindow;

    enum class ThresholdVerdict
    {
        Vacuous,
        Holds,
        Violated,
        Undetermined
    };

    auto verdict_name(ThresholdVerdict v) -> const char *;

    /// Checks "tw > 6r - 5 implies an r x r grid minor" on one planar graph.
    struct ThresholdReport
    {
        int r = 0;
        int threshold = 0;
        /// certified bounds on the treewidth
        int lower = 0, upper = 0;
        ThresholdVerdict verdict = ThresholdVerdict::Undetermined;
        std::optional<GridModel> model;
    };

    auto planar_grid_threshold_check(const EmbeddedGraph & g, int r, const Ceilings & ceilings = {}) -> ThresholdReport;

    /// Treewidth bounds certified by a grid layout (tw of an a x b grid,
    /// a <= b, is a) together with a matching path decomposition.
    auto grid_decomposition(int rows, int cols) -> TreeDecomposition;
}
