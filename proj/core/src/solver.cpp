#include <tmkit/solver.hpp>
#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/planar.hpp>
#include <tmkit/tmc_brute.hpp>
#include <tmkit/twdp.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace tmkit
{
    namespace
    {
        auto isolated_count(const Graph & g) -> int
        {
            int count = 0;
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (g.degree(v) == 0)
                    ++count;
            return count;
        }

        struct Search
        {
            const DeletionInstance & inst;
            const SolverConfig & cfg;
            SearchTrace & trace;
            std::unordered_map<std::string, int> failed;

            auto run(const RootedGraph & g, const std::vector<Vertex> & names, int budget, int depth)
                -> std::optional<std::vector<Vertex>>
            {
                ++trace.nodes;
                std::string key;
                if (cfg.memo && g.vertex_count() <= cfg.memo_vertices) {
                    key = canonical_form(g, cfg.ceilings);
                    if (auto it = failed.find(key) ; it != failed.end() && it->second >= budget) {
                        ++trace.memo_hits;
                        return std::nullopt;
                    }
                }
                auto found = find_realization(g, inst.forbidden, cfg.engine, cfg.ceilings);
                if (! found)
                    return std::vector<Vertex>{};
                auto vs = witness_vertices(found->second);
                SearchStep step{ depth, found->first, {} };
                for (auto v : vs)
                    step.realization.push_back(names[v]);
                std::sort(step.realization.begin(), step.realization.end());
                trace.steps.push_back(std::move(step));

                if (budget > 0)
                    for (auto u : vs) {
                        if (g.is_root(u))
                            continue;
                        Vertex gone[] = { u };
                        auto sub = delete_vertices(g, gone);
                        std::vector<Vertex> sub_names(sub.new_to_old.size());
                        for (std::size_t i = 0 ; i < sub_names.size() ; ++i)
                            sub_names[i] = names[sub.new_to_old[i]];
                        if (auto s = run(sub.graph, sub_names, budget - 1, depth + 1)) {
                            s->push_back(names[u]);
                            return s;
                        }
                    }
                if (! key.empty()) {
                    auto & b = failed[key];
                    b = std::max(b, budget);
                }
                return std::nullopt;
            }
        };
    }

    auto engine_name(Engine e) -> const char *
    {
        return e == Engine::dp ? "dp" : "brute";
    }

    auto find_realization(const RootedGraph & g, const std::vector<Graph> & forbidden, Engine engine, const Ceilings & ceilings)
        -> std::optional<std::pair<int, Witness>>
    {
        std::vector<int> order(forbidden.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                [&] (int a, int b) { return forbidden[a].edge_count() < forbidden[b].edge_count(); });

        auto host = unrooted(g);
        std::optional<NiceTreeDecomposition> ntd;
        for (int i : order) {
            RootedGraph f(forbidden[i]);
            if (engine == Engine::dp) {
                if (! ntd)
                    ntd = nice_decomposition(host.graph(), ceilings);
                if (! tmc_dp(host, f, *ntd, ceilings))
                    continue;
            }
            else if (! tmc_brute(host, f, ceilings))
                continue;
            for (int extra = 0 ; extra <= host.vertex_count() ; ++extra)
                if (auto w = tmc_brute(host, f, ceilings, TmcOptions{ extra }))
                    return std::pair{ i, std::move(*w) };
            throw Error("internal error: realization vanished under a length limit");
        }
        return std::nullopt;
    }

    auto solve(const DeletionInstance & inst, const SolverConfig & cfg) -> SolveResult
    {
        validate_instance(inst);
        for (auto & f : inst.forbidden)
            check_ceiling("pattern_vertices", cfg.ceilings.pattern_vertices, f.vertex_count());
        if (cfg.r < 0)
            throw InvalidInput("r must be non-negative");

        SolveResult out;
        auto g = inst.graph;
        std::vector<Vertex> names(g.vertex_count());
        std::iota(names.begin(), names.end(), 0);

        if (cfg.irrelevant_vertices) {
            if (! cfg.embedding)
                throw InvalidInput("irrelevant-vertex preprocessing needs an embedding");
            if (! (cfg.embedding->graph() == g.graph()))
                throw InvalidInput("the embedding is not of the instance graph");
            int delta = 1;
            for (auto & f : inst.forbidden)
                delta = std::max(delta, f.edge_count() + isolated_count(f));
            auto eg = *cfg.embedding;
            for (bool progress = true ; progress ;) {
                progress = false;
                for (Vertex v = 0 ; v < g.vertex_count() && ! progress ; ++v) {
                    if (g.is_root(v) || ! concentric_cycles(eg, v, cfg.r))
                        continue;
                    if (! is_dk_irrelevant_brute(unrooted(g), v, delta, inst.budget, cfg.ceilings))
                        continue;
                    Vertex gone[] = { v };
                    out.trace.irrelevant.push_back(names[v]);
                    auto sub = delete_vertices(g, gone);
                    eg = delete_vertices(eg, gone).graph;
                    std::vector<Vertex> sub_names(sub.new_to_old.size());
                    for (std::size_t i = 0 ; i < sub_names.size() ; ++i)
                        sub_names[i] = names[sub.new_to_old[i]];
                    g = std::move(sub.graph);
                    names = std::move(sub_names);
                    progress = true;
                }
            }
            std::sort(out.trace.irrelevant.begin(), out.trace.irrelevant.end());
        }

        Search search{ inst, cfg, out.trace, {} };
        out.solution = search.run(g, names, inst.budget, 0);
        if (out.solution)
            std::sort(out.solution->begin(), out.solution->end());
        return out;
    }

    auto verify_solution(const DeletionInstance & inst, const std::vector<Vertex> & s, const Ceilings & ceilings) -> bool
    {
        return ! deletion_problem(inst, s, ceilings);
    }
}
