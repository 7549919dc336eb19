#include <tmkit/deletion.hpp>
#include <tmkit/error.hpp>
#include <tmkit/tmc_brute.hpp>

#include <algorithm>

namespace tmkit
{
    auto validate_instance(const DeletionInstance & inst) -> void
    {
        if (inst.budget < 0)
            throw InvalidInput("budget must be non-negative");
        for (auto & f : inst.forbidden)
            if (f.vertex_count() > inst.h_star)
                throw InvalidInput("forbidden pattern has more than h_star vertices");
    }

    auto is_free_of(const RootedGraph & g, const std::vector<Graph> & forbidden, const Ceilings & ceilings) -> bool
    {
        auto host = unrooted(g);
        for (auto & f : forbidden)
            if (tmc_brute(host, RootedGraph(f), ceilings))
                return false;
        return true;
    }

    auto deletion_problem(const DeletionInstance & inst, const std::vector<Vertex> & s, const Ceilings & ceilings)
        -> std::optional<std::string>
    {
        if (static_cast<int>(s.size()) > inst.budget)
            return "more than " + std::to_string(inst.budget) + " vertices";
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return "repeated vertex";
        for (auto v : sorted) {
            if (! inst.graph.graph().has_vertex(v))
                return "vertex " + std::to_string(v) + " out of range";
            if (inst.graph.is_root(v))
                return "vertex " + std::to_string(v) + " is a root";
        }
        if (! is_free_of(delete_vertices(inst.graph, sorted).graph, inst.forbidden, ceilings))
            return "a forbidden topological minor survives";
        return std::nullopt;
    }

    auto tmdel_brute(const DeletionInstance & inst, const Ceilings & ceilings) -> std::optional<std::vector<Vertex>>
    {
        validate_instance(inst);
        check_ceiling("tmdel_vertices", ceilings.tmdel_vertices, inst.graph.vertex_count());
        check_ceiling("tmdel_budget", ceilings.tmdel_budget, inst.budget);

        std::vector<Vertex> candidates;
        for (Vertex v = 0 ; v < inst.graph.vertex_count() ; ++v)
            if (! inst.graph.is_root(v))
                candidates.push_back(v);
        int m = static_cast<int>(candidates.size());

        std::vector<Vertex> s;
        auto rec = [&] (auto & self, int from, int size) -> bool {
            if (static_cast<int>(s.size()) == size)
                return is_free_of(delete_vertices(inst.graph, s).graph, inst.forbidden, ceilings);
            for (int i = from ; i < m ; ++i) {
                s.push_back(candidates[i]);
                if (self(self, i + 1, size))
                    return true;
                s.pop_back();
            }
            return false;
        };
        for (int size = 0 ; size <= std::min(inst.budget, m) ; ++size)
            if (rec(rec, 0, size))
                return s;
        return std::nullopt;
    }
}
