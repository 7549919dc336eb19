#include <tmkit/minor_brute.hpp>
#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <unordered_set>

namespace tmkit
{
    auto find_subgraph(const Graph & g, const Graph & h) -> std::optional<std::vector<Vertex>>
    {
        int k = h.vertex_count(), n = g.vertex_count();
        if (k > n || h.edge_count() > g.edge_count())
            return std::nullopt;
        std::vector<Vertex> order(k);
        for (Vertex x = 0 ; x < k ; ++x)
            order[x] = x;
        std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        std::vector<Vertex> map(k, -1);
        std::vector<char> used(n, 0);
        auto rec = [&] (auto & self, int i) -> bool {
            if (i == k)
                return true;
            Vertex x = order[i];
            for (Vertex v = 0 ; v < n ; ++v) {
                if (used[v] || g.degree(v) < h.degree(x))
                    continue;
                bool ok = true;
                for (auto y : h.neighbours(x))
                    if (map[y] != -1 && ! g.adjacent(v, map[y])) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                map[x] = v;
                used[v] = 1;
                if (self(self, i + 1))
                    return true;
                used[v] = 0;
                map[x] = -1;
            }
            return false;
        };
        if (! rec(rec, 0))
            return std::nullopt;
        return map;
    }

    namespace
    {
        struct Quotient
        {
            Graph graph;
            std::vector<std::vector<Vertex>> parts;
        };

        auto contract(const Quotient & q, Vertex a, Vertex b) -> Quotient
        {
            int n = q.graph.vertex_count();
            std::vector<Vertex> rename(n);
            for (Vertex v = 0, next = 0 ; v < n ; ++v)
                rename[v] = v == b ? -1 : next++;
            rename[b] = rename[a];
            std::vector<Edge> edges;
            for (auto [u, v] : q.graph.edges())
                if (rename[u] != rename[v])
                    edges.push_back(make_edge(rename[u], rename[v]));
            Quotient out{ Graph::from_edges_dedup(n - 1, edges), std::vector<std::vector<Vertex>>(n - 1) };
            for (Vertex v = 0 ; v < n ; ++v) {
                auto & part = out.parts[rename[v]];
                part.insert(part.end(), q.parts[v].begin(), q.parts[v].end());
            }
            for (auto & part : out.parts)
                std::sort(part.begin(), part.end());
            return out;
        }
    }

    auto minor_model_brute(const Graph & g, const Graph & h, const Ceilings & ceilings) -> std::optional<MinorModel>
    {
        check_ceiling("minor_brute_vertices", ceilings.minor_brute_vertices, g.vertex_count());
        check_ceiling("minor_brute_pattern", ceilings.minor_brute_pattern, h.vertex_count());

        std::unordered_set<std::string> failed;
        std::optional<MinorModel> found;
        auto rec = [&] (auto & self, const Quotient & q) -> bool {
            if (q.graph.vertex_count() < h.vertex_count() || q.graph.edge_count() < h.edge_count())
                return false;
            auto key = canonical_form(q.graph, ceilings);
            if (failed.contains(key))
                return false;
            if (auto map = find_subgraph(q.graph, h)) {
                MinorModel model;
                for (auto v : *map)
                    model.branch_sets.push_back(q.parts[v]);
                found = std::move(model);
                return true;
            }
            for (auto [a, b] : q.graph.edges())
                if (self(self, contract(q, a, b)))
                    return true;
            failed.insert(std::move(key));
            return false;
        };

        Quotient start{ g, {} };
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            start.parts.push_back({ v });
        rec(rec, start);
        if (found && ! verify_minor_model(g, h, *found))
            throw Error("minor_model_brute produced an invalid model");
        return found;
    }
}
