#include <tmkit/pattern.hpp>
#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace tmkit
{
    auto detail(const Graph & h) -> int
    {
        return h.edge_count() + h.isolated_count();
    }

    auto detail(const RootedGraph & h) -> int
    {
        return detail(h.graph());
    }

    Pattern::Pattern(RootedGraph graph, int budget) :
        _graph(std::move(graph)),
        _budget(budget)
    {
        if (budget < 1)
            throw InvalidInput("pattern detail budget must be positive");
        if (detail(_graph) > budget)
            throw InvalidInput("pattern detail " + std::to_string(detail(_graph)) + " exceeds budget " + std::to_string(budget));
    }

    namespace
    {
        // Unlabelled graphs with exactly m edges and no isolated vertices, one per class.
        auto edge_only_graphs(int max_edges, const Ceilings & ceilings) -> std::vector<std::vector<Graph>>
        {
            std::vector<std::vector<Graph>> by_edges(max_edges + 1);
            by_edges[0].push_back(Graph(0));
            for (int m = 1 ; m <= max_edges ; ++m) {
                std::set<std::string> seen;
                for (auto & base : by_edges[m - 1]) {
                    int n = base.vertex_count();
                    auto try_add = [&] (int total, Vertex u, Vertex v) {
                        if (u == v)
                            return;
                        Graph bigger(total, base.edges());
                        if (bigger.adjacent(u, v))
                            return;
                        std::vector<Edge> extra{ make_edge(u, v) };
                        auto g = add_edges(bigger, extra);
                        if (seen.insert(canonical_form(g, ceilings)).second)
                            by_edges[m].push_back(std::move(g));
                    };
                    for (Vertex u = 0 ; u < n ; ++u)
                        for (Vertex v = u + 1 ; v < n ; ++v)
                            try_add(n, u, v);
                    for (Vertex u = 0 ; u < n ; ++u)
                        try_add(n + 1, u, n);
                    try_add(n + 2, n, n + 1);
                }
            }
            return by_edges;
        }

        auto assign_labels(const Graph & g, std::span<const int> labels, std::set<std::string> & seen,
                std::vector<RootedGraph> & out, const Ceilings & ceilings) -> void
        {
            int n = g.vertex_count();
            std::vector<int> current(n, 0);
            // each label either unused or placed on a distinct vertex
            auto recurse = [&] (auto & self, int i) -> void {
                if (i == int(labels.size())) {
                    RootedGraph r(g, current);
                    if (seen.insert(canonical_form(r, ceilings)).second)
                        out.push_back(std::move(r));
                    return;
                }
                self(self, i + 1);
                for (Vertex v = 0 ; v < n ; ++v)
                    if (current[v] == 0) {
                        current[v] = labels[i];
                        self(self, i + 1);
                        current[v] = 0;
                    }
            };
            recurse(recurse, 0);
        }
    }

    auto enumerate_patterns(std::span<const int> root_labels, int delta, const Ceilings & ceilings) -> std::vector<RootedGraph>
    {
        if (delta < 1)
            throw InvalidInput("enumerate_patterns: delta must be positive");
        check_ceiling("pattern_detail", ceilings.pattern_detail, delta);
        check_ceiling("pattern_roots", ceilings.pattern_roots, static_cast<long long>(root_labels.size()));
        std::vector<int> labels(root_labels.begin(), root_labels.end());
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end() || (! labels.empty() && labels.front() <= 0))
            throw InvalidInput("enumerate_patterns: root labels must be distinct positive integers");

        auto cores = edge_only_graphs(delta, ceilings);
        std::set<std::string> seen;
        std::vector<RootedGraph> out;
        for (int m = 0 ; m <= delta ; ++m)
            for (auto & core : cores[m])
                for (int iso = 0 ; m + iso <= delta ; ++iso) {
                    Graph g(core.vertex_count() + iso, core.edges());
                    assign_labels(g, labels, seen, out, ceilings);
                }
        return out;
    }

    auto subdivision_normal_form(const RootedGraph & h, std::optional<std::span<const int>> path_lengths) -> RootedGraph
    {
        const auto & edges = h.graph().edges();
        if (path_lengths && path_lengths->size() != edges.size())
            throw InvalidInput("subdivision_normal_form: one path length per edge required");
        int n = h.vertex_count();
        std::vector<Edge> out;
        std::vector<int> labels = h.labels();
        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            int len = path_lengths ? (*path_lengths)[i] : 3;
            if (len < 1)
                throw InvalidInput("subdivision_normal_form: path lengths must be positive");
            int cuts = std::min(len - 1, 2);
            Vertex prev = edges[i].first;
            for (int c = 0 ; c < cuts ; ++c) {
                out.emplace_back(prev, n);
                labels.push_back(0);
                prev = n++;
            }
            out.emplace_back(prev, edges[i].second);
        }
        return RootedGraph(Graph(n, out), labels);
    }

    auto subdivision_normal_form(const Pattern & h, std::optional<std::span<const int>> path_lengths) -> Pattern
    {
        auto g = subdivision_normal_form(h.graph(), path_lengths);
        return Pattern(std::move(g), std::max(h.budget() * 4, 1));
    }
}
