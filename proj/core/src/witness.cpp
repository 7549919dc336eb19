#include <tmkit/witness.hpp>
#include <tmkit/generators.hpp>

#include <algorithm>

namespace tmkit
{
    namespace
    {
        auto problem_unlabelled(const Graph & g, const Graph & h, const Witness & w) -> std::optional<std::string>
        {
            if (int(w.branch.size()) != h.vertex_count())
                return "branch map has " + std::to_string(w.branch.size()) + " entries, pattern has " + std::to_string(h.vertex_count()) + " vertices";
            if (int(w.paths.size()) != h.edge_count())
                return "path map has wrong size";

            std::vector<int> use(g.vertex_count(), 0);
            for (auto v : w.branch) {
                if (! g.has_vertex(v))
                    return "branch image out of range";
                if (use[v]++)
                    return "branch map is not injective";
            }

            const auto & edges = h.edges();
            for (std::size_t i = 0 ; i < edges.size() ; ++i) {
                const auto & p = w.paths[i];
                if (p.size() < 2)
                    return "path " + std::to_string(i) + " is too short";
                auto [a, b] = edges[i];
                bool forward = p.front() == w.branch[a] && p.back() == w.branch[b];
                bool backward = p.front() == w.branch[b] && p.back() == w.branch[a];
                if (! forward && ! backward)
                    return "path " + std::to_string(i) + " has wrong endpoints";
                for (std::size_t j = 0 ; j + 1 < p.size() ; ++j)
                    if (! g.adjacent(p[j], p[j + 1]))
                        return "path " + std::to_string(i) + " uses a non-edge";
                for (std::size_t j = 1 ; j + 1 < p.size() ; ++j) {
                    if (! g.has_vertex(p[j]))
                        return "path vertex out of range";
                    if (use[p[j]]++)
                        return "path " + std::to_string(i) + " interior meets a branch vertex or another path";
                }
            }
            return std::nullopt;
        }
    }

    auto witness_problem(const RootedGraph & g, const RootedGraph & h, const Witness & w) -> std::optional<std::string>
    {
        if (auto p = problem_unlabelled(g.graph(), h.graph(), w))
            return p;
        for (Vertex v = 0 ; v < h.vertex_count() ; ++v)
            if (h.is_root(v) && h.label(v) != g.label(w.branch[v]))
                return "root label of pattern vertex " + std::to_string(v) + " not preserved";
        return std::nullopt;
    }

    auto is_valid_witness(const RootedGraph & g, const RootedGraph & h, const Witness & w) -> bool
    {
        return ! witness_problem(g, h, w).has_value();
    }

    auto identity_witness(const Graph & g) -> Witness
    {
        Witness w;
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            w.branch.push_back(v);
        for (auto [u, v] : g.edges())
            w.paths.push_back({ u, v });
        return w;
    }

    auto verify_subdivision(const Graph & host, const Graph & pattern, const Witness & certificate) -> bool
    {
        return ! problem_unlabelled(host, pattern, certificate).has_value();
    }

    auto witness_vertices(const Witness & w) -> std::vector<Vertex>
    {
        std::vector<Vertex> vs = w.branch;
        for (auto & p : w.paths)
            for (std::size_t j = 1 ; j + 1 < p.size() ; ++j)
                vs.push_back(p[j]);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    auto minor_model_problem(const Graph & host, const Graph & pattern, const MinorModel & model) -> std::optional<std::string>
    {
        if (int(model.branch_sets.size()) != pattern.vertex_count())
            return "model has wrong number of branch sets";
        std::vector<int> owner(host.vertex_count(), -1);
        for (int h = 0 ; h < pattern.vertex_count() ; ++h) {
            const auto & set = model.branch_sets[h];
            if (set.empty())
                return "branch set " + std::to_string(h) + " is empty";
            for (auto v : set) {
                if (! host.has_vertex(v))
                    return "branch set vertex out of range";
                if (owner[v] != -1)
                    return "branch sets overlap at vertex " + std::to_string(v);
                owner[v] = h;
            }
            std::vector<char> blocked(host.vertex_count(), 1);
            for (auto v : set)
                blocked[v] = 0;
            std::vector<Vertex> start{ set.front() };
            auto seen = reachable(host, start, blocked);
            for (auto v : set)
                if (! seen[v])
                    return "branch set " + std::to_string(h) + " is not connected";
        }
        for (auto [a, b] : pattern.edges()) {
            bool found = false;
            for (auto u : model.branch_sets[a]) {
                for (auto w : host.neighbours(u))
                    if (owner[w] == b) {
                        found = true;
                        break;
                    }
                if (found)
                    break;
            }
            if (! found)
                return "no host edge between branch sets " + std::to_string(a) + " and " + std::to_string(b);
        }
        return std::nullopt;
    }

    auto verify_minor_model(const Graph & host, const Graph & pattern, const MinorModel & model) -> bool
    {
        return ! minor_model_problem(host, pattern, model).has_value();
    }

    auto verify_grid_model(const Graph & host, const GridModel & model) -> bool
    {
        if (model.rows < 1 || model.cols < 1)
            return false;
        return verify_minor_model(host, generate_grid(model.rows, model.cols), MinorModel{ model.branch_sets });
    }
}
