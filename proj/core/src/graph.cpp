#include <tmkit/graph.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <string>

namespace tmkit
{
    auto make_edge(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{ u, v } : Edge{ v, u };
    }

    Graph::Graph(int vertex_count) :
        _n(vertex_count),
        _adj(vertex_count)
    {
        if (vertex_count < 0)
            throw InvalidInput("negative vertex count");
    }

    Graph::Graph(int vertex_count, std::span<const Edge> edges) :
        Graph(vertex_count)
    {
        _edges.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= _n || v >= _n)
                throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InvalidInput("self-loop at vertex " + std::to_string(u));
            _edges.push_back(make_edge(u, v));
        }
        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw InvalidInput("repeated edge");
        for (auto [u, v] : _edges) {
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (auto & a : _adj)
            std::sort(a.begin(), a.end());
    }

    auto Graph::from_edges_dedup(int vertex_count, std::span<const Edge> edges) -> Graph
    {
        std::vector<Edge> clean;
        clean.reserve(edges.size());
        for (auto [u, v] : edges)
            clean.push_back(make_edge(u, v));
        std::sort(clean.begin(), clean.end());
        clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
        return Graph(vertex_count, clean);
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        if (! has_vertex(u) || ! has_vertex(v))
            return false;
        auto & a = _adj[u].size() < _adj[v].size() ? _adj[u] : _adj[v];
        return std::binary_search(a.begin(), a.end(), &a == &_adj[u] ? v : u);
    }

    auto Graph::isolated_count() const -> int
    {
        return static_cast<int>(std::count_if(_adj.begin(), _adj.end(), [] (const auto & a) { return a.empty(); }));
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (auto & a : _adj)
            best = std::max(best, static_cast<int>(a.size()));
        return best;
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Renamed<Graph>
    {
        Renamed<Graph> result;
        result.old_to_new.assign(g.vertex_count(), -1);
        std::vector<Vertex> sorted(keep.begin(), keep.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto v : sorted) {
            if (! g.has_vertex(v))
                throw InvalidInput("induced_subgraph: vertex out of range");
            result.old_to_new[v] = static_cast<Vertex>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (result.old_to_new[u] >= 0 && result.old_to_new[v] >= 0)
                edges.emplace_back(result.old_to_new[u], result.old_to_new[v]);
        result.graph = Graph(static_cast<int>(result.new_to_old.size()), edges);
        return result;
    }

    auto delete_vertices(const Graph & g, std::span<const Vertex> gone) -> Renamed<Graph>
    {
        std::vector<char> dead(g.vertex_count(), 0);
        for (auto v : gone)
            if (g.has_vertex(v))
                dead[v] = 1;
        std::vector<Vertex> keep;
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            if (! dead[v])
                keep.push_back(v);
        return induced_subgraph(g, keep);
    }

    auto edge_subgraph(const Graph & g, std::span<const Edge> edges) -> Renamed<Graph>
    {
        Renamed<Graph> result;
        result.old_to_new.assign(g.vertex_count(), -1);
        std::vector<Vertex> ends;
        for (auto [u, v] : edges) {
            if (! g.adjacent(u, v))
                throw InvalidInput("edge_subgraph: not an edge of the host");
            ends.push_back(u);
            ends.push_back(v);
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        for (auto v : ends) {
            result.old_to_new[v] = static_cast<Vertex>(result.new_to_old.size());
            result.new_to_old.push_back(v);
        }
        std::vector<Edge> mapped;
        for (auto [u, v] : edges)
            mapped.emplace_back(result.old_to_new[u], result.old_to_new[v]);
        result.graph = Graph::from_edges_dedup(static_cast<int>(ends.size()), mapped);
        return result;
    }

    auto add_edges(const Graph & g, std::span<const Edge> extra) -> Graph
    {
        std::vector<Edge> all = g.edges();
        all.insert(all.end(), extra.begin(), extra.end());
        return Graph::from_edges_dedup(g.vertex_count(), all);
    }

    auto remove_edges(const Graph & g, std::span<const Edge> gone) -> Graph
    {
        std::vector<Edge> drop;
        for (auto [u, v] : gone)
            drop.push_back(make_edge(u, v));
        std::sort(drop.begin(), drop.end());
        std::vector<Edge> keep;
        for (auto & e : g.edges())
            if (! std::binary_search(drop.begin(), drop.end(), e))
                keep.push_back(e);
        return Graph(g.vertex_count(), keep);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        std::vector<Edge> edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
        return Graph(a.vertex_count() + b.vertex_count(), edges);
    }

    auto component_ids(const Graph & g) -> std::vector<int>
    {
        std::vector<int> id(g.vertex_count(), -1);
        int next = 0;
        std::vector<Vertex> stack;
        for (Vertex s = 0 ; s < g.vertex_count() ; ++s) {
            if (id[s] != -1)
                continue;
            id[s] = next;
            stack.push_back(s);
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : g.neighbours(v))
                    if (id[w] == -1) {
                        id[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return id;
    }

    auto component_count(const Graph & g) -> int
    {
        auto id = component_ids(g);
        return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return component_count(g) <= 1;
    }

    auto reachable(const Graph & g, std::span<const Vertex> sources, const std::vector<char> & blocked) -> std::vector<char>
    {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<Vertex> stack;
        for (auto s : sources)
            if (! blocked[s] && ! seen[s]) {
                seen[s] = 1;
                stack.push_back(s);
            }
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (! blocked[w] && ! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return seen;
    }

    RootedGraph::RootedGraph(Graph g) :
        _graph(std::move(g)),
        _labels(_graph.vertex_count(), 0)
    {
    }

    RootedGraph::RootedGraph(Graph g, std::vector<int> labels) :
        _graph(std::move(g)),
        _labels(std::move(labels))
    {
        if (static_cast<int>(_labels.size()) != _graph.vertex_count())
            throw InvalidInput("label vector size does not match vertex count");
        std::vector<int> seen;
        for (auto l : _labels) {
            if (l < 0)
                throw InvalidInput("negative root label");
            if (l > 0)
                seen.push_back(l);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InvalidInput("root labels are not injective");
    }

    auto RootedGraph::roots() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (Vertex v = 0 ; v < vertex_count() ; ++v)
            if (_labels[v] > 0)
                result.push_back(v);
        return result;
    }

    auto RootedGraph::root_labels() const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto l : _labels)
            if (l > 0)
                result.push_back(l);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto RootedGraph::root_count() const -> int
    {
        return static_cast<int>(std::count_if(_labels.begin(), _labels.end(), [] (int l) { return l > 0; }));
    }

    auto RootedGraph::vertex_with_label(int label) const -> std::optional<Vertex>
    {
        for (Vertex v = 0 ; v < vertex_count() ; ++v)
            if (_labels[v] == label && label > 0)
                return v;
        return std::nullopt;
    }

    namespace
    {
        auto carry_labels(const RootedGraph & g, Renamed<Graph> && r) -> Renamed<RootedGraph>
        {
            std::vector<int> labels;
            labels.reserve(r.new_to_old.size());
            for (auto old : r.new_to_old)
                labels.push_back(g.label(old));
            return Renamed<RootedGraph>{ RootedGraph(std::move(r.graph), std::move(labels)), std::move(r.old_to_new), std::move(r.new_to_old) };
        }
    }

    auto induced_subgraph(const RootedGraph & g, std::span<const Vertex> keep) -> Renamed<RootedGraph>
    {
        return carry_labels(g, induced_subgraph(g.graph(), keep));
    }

    auto delete_vertices(const RootedGraph & g, std::span<const Vertex> gone) -> Renamed<RootedGraph>
    {
        return carry_labels(g, delete_vertices(g.graph(), gone));
    }

    auto unrooted(const RootedGraph & g) -> RootedGraph
    {
        return RootedGraph(g.graph());
    }

    auto with_root_edges(const RootedGraph & g, std::span<const std::pair<int, int>> label_edges) -> RootedGraph
    {
        std::vector<Edge> extra;
        for (auto [a, b] : label_edges) {
            auto u = g.vertex_with_label(a), v = g.vertex_with_label(b);
            if (! u || ! v)
                throw InvalidInput("root edge refers to a missing label");
            extra.push_back(make_edge(*u, *v));
        }
        return RootedGraph(add_edges(g.graph(), extra), g.labels());
    }
}
