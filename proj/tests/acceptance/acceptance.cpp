#include <tmkit/deletion.hpp>
#include <tmkit/disjoint_paths.hpp>
#include <tmkit/error.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/planar.hpp>
#include <tmkit/random.hpp>
#include <tmkit/separators.hpp>
#include <tmkit/solver.hpp>
#include <tmkit/tmc_brute.hpp>
#include <tmkit/treewidth.hpp>
#include <tmkit/twdp.hpp>
#include <tmkit/wall.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace tmkit;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;
        /// first few failures, printed below the verdict line
        std::vector<std::string> notes;

        auto fail(const std::string & note) -> void
        {
            pass = false;
            if (notes.size() < 5)
                notes.push_back(note);
        }
    };

    struct Criterion
    {
        std::string name;
        std::function<Outcome ()> run;
    };

    auto seconds_since(std::chrono::steady_clock::time_point t0) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    auto fixed(double x, int digits = 1) -> std::string
    {
        std::ostringstream ss;
        ss << std::fixed << std::setprecision(digits) << x;
        return ss.str();
    }

    auto list(const std::vector<Vertex> & vs) -> std::string
    {
        std::string s = "{";
        for (std::size_t i = 0 ; i < vs.size() ; ++i)
            s += (i ? "," : "") + std::to_string(vs[i]);
        return s + "}";
    }

    // tmc_dp against tmc_brute: 200 hosts of treewidth at most 3 on at most
    // 10 vertices, patterns with at most 4 edges, within 300 seconds
    auto tmc_equivalence() -> Outcome
    {
        Outcome out;
        const int instances = 200;
        const double limit = 300;
        auto t0 = std::chrono::steady_clock::now();
        Rng rng(20240101);
        int disagreements = 0, positives = 0;
        for (int i = 0 ; i < instances ; ++i) {
            int n = static_cast<int>(rng.uniform(4, 10));
            int t = static_cast<int>(rng.uniform(1, 3));
            auto host = random_partial_ktree(n, t, 2, 3, rng);
            RootedGraph g = rng.chance(1, 4) ? random_rooted(host, 1, rng) : RootedGraph(host);
            auto pattern = random_small_pattern(static_cast<int>(rng.uniform(1, 5)), 4, rng);
            RootedGraph h(pattern);
            if (g.root_count() > 0 && rng.chance(1, 2)) {
                std::vector<int> labels(pattern.vertex_count(), 0);
                labels[0] = g.root_labels().front();
                h = RootedGraph(pattern, labels);
            }
            auto ntd = nice_decomposition(g.graph());
            if (ntd.width() > 3 || pattern.edge_count() > 4)
                out.fail("instance " + std::to_string(i) + " outside the range");
            auto dp = tmc_dp(g, h, ntd);
            auto brute = tmc_brute(g, h);
            if (dp.has_value() != brute.has_value()) {
                ++disagreements;
                out.fail("instance " + std::to_string(i) + ": dp " + (dp ? "yes" : "no") + ", brute " + (brute ? "yes" : "no"));
            }
            if (dp) {
                ++positives;
                if (! is_valid_witness(g, h, *dp))
                    out.fail("instance " + std::to_string(i) + ": dp witness invalid");
            }
        }
        double elapsed = seconds_since(t0);
        if (elapsed >= limit)
            out.fail("runtime " + fixed(elapsed) + "s over the " + fixed(limit, 0) + "s limit");
        out.detail = std::to_string(instances) + " instances, " + std::to_string(positives) + " contained, " + std::to_string(disagreements)
                + " disagreements (tolerance 0), " + fixed(elapsed) + "s (limit " + fixed(limit, 0) + "s)";
        return out;
    }

    auto folio_equivalence() -> Outcome
    {
        Outcome out;
        const int instances = 100;
        Rng rng(20240202);
        int disagreements = 0;
        long long patterns = 0;
        for (int i = 0 ; i < instances ; ++i) {
            int n = static_cast<int>(rng.uniform(2, 9));
            int delta = static_cast<int>(rng.uniform(1, 2));
            int roots = static_cast<int>(rng.uniform(0, std::min(2, n)));
            auto g = random_rooted(random_partial_ktree(n, static_cast<int>(rng.uniform(1, 3)), 2, 3, rng), roots, rng);
            auto dp = folio_dp(g, delta, nice_decomposition(g.graph()));
            auto brute = extended_folio_brute(g, delta);
            for (auto & [mask, f] : brute.entries)
                patterns += static_cast<long long>(f.patterns.size());
            if (! (dp == brute)) {
                ++disagreements;
                out.fail("instance " + std::to_string(i) + " (n " + std::to_string(n) + ", delta " + std::to_string(delta) + ") differs");
            }
        }
        out.detail = std::to_string(instances) + " instances, " + std::to_string(patterns) + " folio members, " + std::to_string(disagreements)
                + " disagreements (tolerance 0)";
        return out;
    }

    auto representative_correctness() -> Outcome
    {
        Outcome out;
        const int instances = 50;
        Rng rng(20240303);
        int fired = 0, violations = 0;
        for (int i = 0 ; i < instances ; ++i) {
            int n = static_cast<int>(rng.uniform(3, 9));
            int delta = i % 5 == 4 ? 2 : 1;
            auto g = random_rooted(random_partial_ktree(n, static_cast<int>(rng.uniform(1, 2)), 3, 4, rng),
                    static_cast<int>(rng.uniform(0, 2)), rng);
            auto rep = representative(g, delta, nice_decomposition(g.graph()));
            bool ok = extended_folio_brute(rep.graph, delta) == extended_folio_brute(g, delta) && rep.graph.root_labels() == g.root_labels();
            if (rep.splices > 0) {
                ++fired;
                ok = ok && rep.graph.vertex_count() < g.vertex_count();
            }
            if (! ok) {
                ++violations;
                out.fail("instance " + std::to_string(i) + " (n " + std::to_string(n) + ", delta " + std::to_string(delta) + ")");
            }
        }
        if (fired == 0)
            out.fail("no splice fired on any instance");
        out.detail = std::to_string(instances) + " instances, " + std::to_string(fired) + " with splices, " + std::to_string(violations)
                + " violations (tolerance 0)";
        return out;
    }

    auto subset(std::uint32_t mask) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (int v = 0 ; mask ; ++v, mask >>= 1)
            if (mask & 1)
                out.push_back(v);
        return out;
    }

    auto includes(const std::vector<Vertex> & a, const std::vector<Vertex> & b) -> bool
    {
        return std::includes(a.begin(), a.end(), b.begin(), b.end());
    }

    // the important separators by the definition: minimal separators not
    // dominated by any separator of at most the same size
    auto important_by_definition(const Graph & g, const std::vector<Vertex> & x, const std::vector<Vertex> & y)
        -> std::vector<std::vector<Vertex>>
    {
        std::uint32_t blocked = 0;
        for (auto v : x)
            blocked |= 1u << v;
        for (auto v : y)
            blocked |= 1u << v;
        std::vector<std::vector<Vertex>> separators, reaches, important;
        for (std::uint32_t m = 0 ; m < (1u << g.vertex_count()) ; ++m)
            if (! (m & blocked) && is_separator(g, x, y, subset(m))) {
                separators.push_back(subset(m));
                reaches.push_back(reach_set(g, x, separators.back()));
            }
        for (std::size_t i = 0 ; i < separators.size() ; ++i) {
            auto & s = separators[i];
            bool minimal = std::none_of(separators.begin(), separators.end(),
                    [&] (auto & t) { return t.size() < s.size() && includes(s, t); });
            bool dominated = false;
            for (std::size_t j = 0 ; j < separators.size() && ! dominated ; ++j)
                dominated = separators[j].size() <= s.size() && reaches[j].size() > reaches[i].size() && includes(reaches[j], reaches[i]);
            if (minimal && ! dominated)
                important.push_back(s);
        }
        std::sort(important.begin(), important.end());
        return important;
    }

    auto important_separators() -> Outcome
    {
        Outcome out;
        const int instances = 100, max_k = 4;
        Rng rng(20240404);
        int mismatches = 0, over_bound = 0, unique_failures = 0, with_separators = 0;
        std::size_t largest = 0;
        for (int i = 0 ; i < instances ; ++i) {
            int n = static_cast<int>(rng.uniform(4, 10));
            auto g = random_graph(n, static_cast<int>(rng.uniform(1, 3)), 5, rng);
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            int a = static_cast<int>(rng.uniform(1, 2)), b = static_cast<int>(rng.uniform(1, 2));
            std::vector<Vertex> x(order.begin(), order.begin() + a), y(order.begin() + a, order.begin() + a + b);
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            auto expected = important_by_definition(g, x, y);
            for (int k = 0 ; k <= max_k ; ++k) {
                std::vector<std::vector<Vertex>> want, got;
                for (auto & s : expected)
                    if (static_cast<int>(s.size()) <= k)
                        want.push_back(s);
                for (auto & s : enumerate_important(g, x, y, k))
                    got.push_back(s.vertices);
                largest = std::max(largest, got.size());
                if (got != want) {
                    ++mismatches;
                    out.fail("instance " + std::to_string(i) + ", k " + std::to_string(k) + ": " + std::to_string(got.size())
                            + " enumerated, " + std::to_string(want.size()) + " by definition");
                }
                if (static_cast<double>(got.size()) > std::pow(4.0, k)) {
                    ++over_bound;
                    out.fail("instance " + std::to_string(i) + ", k " + std::to_string(k) + ": more than 4^k separators");
                }
            }
            if (expected.empty())
                continue;
            ++with_separators;
            std::size_t lambda = expected.front().size();
            for (auto & s : expected)
                lambda = std::min(lambda, s.size());
            auto smallest = std::count_if(expected.begin(), expected.end(), [&] (auto & s) { return s.size() == lambda; });
            auto unique = unique_min_important(g, x, y).vertices;
            if (smallest != 1 || ! std::binary_search(expected.begin(), expected.end(), unique) || unique.size() != lambda) {
                ++unique_failures;
                out.fail("instance " + std::to_string(i) + ": minimum important separator not unique or not " + list(unique));
            }
        }
        out.detail = std::to_string(instances) + " instances x k = 0.." + std::to_string(max_k) + ", " + std::to_string(mismatches) + " mismatches, "
                + std::to_string(over_bound) + " over 4^k, " + std::to_string(unique_failures) + " unique-minimum failures over "
                + std::to_string(with_separators) + " separable instances (tolerance 0); largest output " + std::to_string(largest);
        return out;
    }

    auto tm_deletion() -> Outcome
    {
        Outcome out;
        const int instances = 200;
        Rng rng(20240505);
        int disagreements = 0, unverified = 0, missed = 0, yes = 0;
        for (int i = 0 ; i < instances ; ++i) {
            bool dp = i % 4 == 3;
            int n = static_cast<int>(rng.uniform(3, 10));
            auto g = dp ? random_partial_ktree(n, 2, 3, 4, rng)
                        : rng.chance(1, 2) ? random_graph(n, 2, 5, rng) : random_partial_ktree(n, 3, 3, 4, rng);
            RootedGraph host = rng.chance(1, 4) ? random_rooted(g, 1, rng) : RootedGraph(g);
            DeletionInstance inst{ host, {}, static_cast<int>(rng.uniform(0, 3)), 4 };
            int count = static_cast<int>(rng.uniform(1, 2));
            for (int j = 0 ; j < count ; ++j) {
                Graph f;
                do
                    f = random_small_pattern(static_cast<int>(rng.uniform(2, 4)), 4, rng);
                while (f.edge_count() == 0);
                inst.forbidden.push_back(f);
            }
            SolverConfig cfg;
            cfg.engine = dp ? Engine::dp : Engine::brute;
            auto result = solve(inst, cfg);
            auto brute = tmdel_brute(inst);
            if (result.solution.has_value() != brute.has_value()) {
                ++disagreements;
                out.fail("instance " + std::to_string(i) + ": solve " + (result.solution ? "yes" : "no") + ", tmdel_brute " + (brute ? "yes" : "no"));
            }
            if (result.solution) {
                ++yes;
                if (static_cast<int>(result.solution->size()) > inst.budget || ! verify_solution(inst, *result.solution)) {
                    ++unverified;
                    out.fail("instance " + std::to_string(i) + ": " + list(*result.solution) + " fails verify_solution");
                }
            }
            if (brute && ! result.trace.steps.empty()) {
                auto & r = result.trace.steps.front().realization;
                bool hits = std::any_of(brute->begin(), brute->end(), [&] (Vertex v) { return std::binary_search(r.begin(), r.end(), v); });
                if (! hits) {
                    ++missed;
                    out.fail("instance " + std::to_string(i) + ": brute solution misses the first realization");
                }
            }
        }
        out.detail = std::to_string(instances) + " instances (" + std::to_string(yes) + " yes), " + std::to_string(disagreements) + " disagreements, "
                + std::to_string(unverified) + " unverified solutions, " + std::to_string(missed) + " realizations missed (tolerance 0)";
        return out;
    }

    // shortest path from s to t avoiding blocked vertices
    auto shortest_path(const Graph & g, Vertex s, Vertex t, const std::vector<char> & blocked) -> std::vector<Vertex>
    {
        std::vector<Vertex> prev(g.vertex_count(), -2);
        std::deque<Vertex> queue{ s };
        prev[s] = -1;
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            if (u == t)
                break;
            for (auto w : g.neighbours(u))
                if (prev[w] == -2 && (! blocked[w] || w == t)) {
                    prev[w] = u;
                    queue.push_back(w);
                }
        }
        if (prev[t] == -2)
            return {};
        std::vector<Vertex> path;
        for (Vertex v = t ; v != -1 ; v = prev[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // shortest paths routed one pair at a time, over every pair order
    auto greedy_linkage(const DisjointPathsInstance & inst) -> std::optional<Linkage>
    {
        int k = static_cast<int>(inst.pairs.size());
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<char> blocked(inst.graph.vertex_count(), 0);
            for (auto [s, t] : inst.pairs)
                blocked[s] = blocked[t] = 1;
            Linkage paths(k);
            bool ok = true;
            for (int i : order) {
                auto [s, t] = inst.pairs[i];
                paths[i] = shortest_path(inst.graph, s, t, blocked);
                if (paths[i].empty()) {
                    ok = false;
                    break;
                }
                for (auto v : paths[i])
                    blocked[v] = 1;
            }
            if (ok && verify_linkage(inst, paths))
                return paths;
        } while (std::next_permutation(order.begin(), order.end()));
        return std::nullopt;
    }

    // two pairs alternating around the outer cycle cannot be linked in a plane graph
    auto crossing_pairs(const DisjointPathsInstance & inst, const std::vector<int> & position) -> bool
    {
        for (std::size_t i = 0 ; i < inst.pairs.size() ; ++i)
            for (std::size_t j = i + 1 ; j < inst.pairs.size() ; ++j) {
                auto [a, b] = std::minmax(position[inst.pairs[i].first], position[inst.pairs[i].second]);
                int c = position[inst.pairs[j].first], d = position[inst.pairs[j].second];
                if ((a < c && c < b) != (a < d && d < b))
                    return true;
            }
        return false;
    }

    enum class Decided
    {
        linkage,
        crossing,
        brute,
    };

    struct Decision
    {
        bool linked;
        Decided by;
    };

    auto decide(const DisjointPathsInstance & inst, const std::vector<int> & position, const Ceilings & ceilings) -> Decision
    {
        if (greedy_linkage(inst))
            return { true, Decided::linkage };
        if (crossing_pairs(inst, position))
            return { false, Decided::crossing };
        auto paths = disjoint_paths_brute(inst, ceilings);
        if (paths && ! verify_linkage(inst, *paths))
            throw Error("disjoint_paths_brute returned an invalid linkage");
        return { paths.has_value(), Decided::brute };
    }

    auto outer_cycle(int n) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (int j = 0 ; j < n - 1 ; ++j)
            out.push_back(grid_vertex(n, 0, j));
        for (int i = 0 ; i < n - 1 ; ++i)
            out.push_back(grid_vertex(n, i, n - 1));
        for (int j = n - 1 ; j > 0 ; --j)
            out.push_back(grid_vertex(n, n - 1, j));
        for (int i = n - 1 ; i > 0 ; --i)
            out.push_back(grid_vertex(n, i, 0));
        return out;
    }

    // every instance on a (2r + 5)-grid is also solved by disjoint_paths_brute
    // when r <= brute_r; larger ones use a verified greedy linkage or the
    // crossing certificate, and disjoint_paths_brute otherwise
    auto planar_irrelevance() -> Outcome
    {
        Outcome out;
        const int instances = 100, brute_r = 2;
        Ceilings wide;
        wide.disjoint_paths_vertices = 200;
        Rng rng(20240606);
        int violations = 0, missing = 0, yes = 0, cross_checked = 0, by_brute = 0, by_certificate = 0;
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0 ; i < instances ; ++i) {
            int r = 2 + i % 3;
            int n = 2 * r + 5;
            auto grid = embedded_grid(n, n);
            auto cycle = outer_cycle(n);
            std::vector<int> position(n * n, -1);
            for (std::size_t p = 0 ; p < cycle.size() ; ++p)
                position[cycle[p]] = static_cast<int>(p);
            auto ends = cycle;
            rng.shuffle(ends);
            int k = static_cast<int>(rng.uniform(1, 3));
            DisjointPathsInstance inst{ grid.graph(), {} };
            for (int j = 0 ; j < k ; ++j)
                inst.pairs.emplace_back(ends[2 * j], ends[2 * j + 1]);
            auto found = dp_irrelevant_vertex(grid, inst, r);
            if (! found) {
                ++missing;
                out.fail("instance " + std::to_string(i) + ": no irrelevant vertex for r " + std::to_string(r));
                continue;
            }
            if (auto problem = concentric_problem(grid, found->certificate))
                out.fail("instance " + std::to_string(i) + ": certificate " + *problem);

            Vertex gone[] = { found->vertex };
            auto reduced_graph = delete_vertices(inst.graph, gone);
            DisjointPathsInstance reduced{ reduced_graph.graph, {} };
            for (auto [s, t] : inst.pairs)
                reduced.pairs.emplace_back(reduced_graph.old_to_new[s], reduced_graph.old_to_new[t]);
            std::vector<int> reduced_position(reduced.graph.vertex_count(), -1);
            for (Vertex v = 0 ; v < inst.graph.vertex_count() ; ++v)
                if (reduced_graph.old_to_new[v] >= 0)
                    reduced_position[reduced_graph.old_to_new[v]] = position[v];

            bool before, after;
            if (r <= brute_r) {
                before = disjoint_paths_brute(inst, wide).has_value();
                after = disjoint_paths_brute(reduced, wide).has_value();
                by_brute += 2;
                auto cb = decide(inst, position, wide), ca = decide(reduced, reduced_position, wide);
                ++cross_checked;
                if (cb.linked != before || ca.linked != after)
                    out.fail("instance " + std::to_string(i) + ": certificates disagree with disjoint_paths_brute");
            }
            else {
                auto db = decide(inst, position, wide), da = decide(reduced, reduced_position, wide);
                before = db.linked;
                after = da.linked;
                by_brute += (db.by == Decided::brute) + (da.by == Decided::brute);
                by_certificate += (db.by != Decided::brute) + (da.by != Decided::brute);
            }
            yes += before;
            if (before != after) {
                ++violations;
                out.fail("instance " + std::to_string(i) + ": vertex " + std::to_string(found->vertex) + " changes the answer");
            }
        }
        out.detail = std::to_string(instances) + " grids (r = 2, 3, 4; k <= 3), " + std::to_string(yes) + " linkable, " + std::to_string(violations)
                + " violations, " + std::to_string(missing) + " without a vertex (tolerance 0); " + std::to_string(by_brute)
                + " answers by disjoint_paths_brute, " + std::to_string(by_certificate) + " by verified certificate, "
                + std::to_string(cross_checked) + " certificate cross-checks, " + fixed(seconds_since(t0)) + "s";
        return out;
    }

    auto irrelevance_chains() -> Outcome
    {
        Outcome out;
        Ceilings wide;
        wide.irrelevance_vertices = 200;
        wide.tmc_brute_vertices = 200;
        struct Shape
        {
            int h, r, shrink, subdivide;
        };
        const Shape k0[] = { { 4, 4, 2, 0 }, { 4, 5, 2, 0 }, { 5, 4, 2, 0 }, { 5, 5, 2, 0 }, { 4, 4, 2, 1 }, { 9, 9, 3, 0 } };
        const Shape k1[] = { { 8, 8, 2, 0 } };
        int walls = 0, vertices = 0, checks = 0, violations = 0;
        auto check = [&] (const Shape & s, int delta, int k, int roots) {
            auto w = subdivide_wall(generate_elementary_wall(s.h, s.r), s.subdivide);
            auto chain = irrelevance_chain(w, delta, k, s.shrink);
            std::vector<int> labels(w.graph.vertex_count(), 0);
            for (int i = 0 ; i < roots ; ++i)
                labels[w.peg_order[i * w.peg_order.size() / roots]] = i + 1;
            RootedGraph g(w.graph, labels);
            ++walls;
            for (auto v : chain.irrelevant) {
                ++checks;
                if (! is_dk_irrelevant_brute(g, v, delta, k, wide)) {
                    ++violations;
                    out.fail("wall " + std::to_string(s.h) + "x" + std::to_string(s.r) + " delta " + std::to_string(delta) + " k "
                            + std::to_string(k) + " roots " + std::to_string(roots) + ": vertex " + std::to_string(v));
                }
            }
            vertices += static_cast<int>(chain.irrelevant.size());
        };
        for (auto & s : k0)
            for (int delta = 1 ; delta <= 2 ; ++delta)
                for (int roots = 0 ; roots <= 2 ; ++roots)
                    check(s, delta, 0, roots);
        // two roots at delta 2 on the 8 x 8 wall exhaust the containment oracle
        for (auto & s : k1)
            for (int delta = 1 ; delta <= 2 ; ++delta)
                for (int roots = 0 ; roots <= 3 - delta ; ++roots)
                    check(s, delta, 1, roots);
        out.detail = std::to_string(walls) + " chains (delta <= 2, k <= 1), " + std::to_string(checks) + " oracle checks, " + std::to_string(violations)
                + " violations (tolerance 0)";
        return out;
    }

    auto structural_certificates() -> Outcome
    {
        Outcome out;
        int walls = 0, windows = 0;
        for (int h = 2 ; h <= 5 ; ++h)
            for (int r = 1 ; r <= 5 ; ++r) {
                auto wg = wall_in_grid(h, r);
                if (wg.grid.vertex_count() != h * 2 * r || ! verify_subdivision(wg.grid, wg.wall.elementary, wg.certificate))
                    out.fail("wall_in_grid(" + std::to_string(h) + ", " + std::to_string(r) + ") invalid");
                auto w = generate_elementary_wall(h, r);
                auto model = grid_minor_of_wall(w);
                if (model.rows != h || model.cols != r || ! verify_grid_model(w.graph, model))
                    out.fail("grid_minor_of_wall(" + std::to_string(h) + ", " + std::to_string(r) + ") invalid");
                ++walls;
            }
        Ceilings wide;
        wide.treewidth_vertices = 40;
        const int t = 2;
        for (int side : { 5, 6 }) {
            auto g = generate_grid(side, side);
            auto window = certified_window(g, t, wide);
            bool inside = std::all_of(window.edges.begin(), window.edges.end(), [&] (Edge e) { return g.adjacent(e.first, e.second); });
            auto exact = treewidth(window.window.graph, wide).width;
            if (! inside || exact != window.treewidth || exact <= t || exact > 2 * t)
                out.fail(std::to_string(side) + "x" + std::to_string(side) + " window: treewidth " + std::to_string(exact) + " reported "
                        + std::to_string(window.treewidth));
            ++windows;
        }
        out.detail = std::to_string(walls) + " wall_in_grid and grid_minor_of_wall pairs (2 <= h <= 5, 1 <= r <= 5), " + std::to_string(windows)
                + " windows with t = 2 checked exactly";
        return out;
    }

    auto treewidth_ground_truths() -> Outcome
    {
        Outcome out;
        int checked = 0;
        auto expect = [&] (const std::string & name, const Graph & g, int want) {
            auto got = treewidth(g);
            ++checked;
            if (got.width != want || ! is_valid_decomposition(g, got.decomposition) || got.decomposition.width() != want)
                out.fail(name + ": " + std::to_string(got.width) + ", expected " + std::to_string(want));
        };
        for (int n = 1 ; n <= 7 ; ++n)
            expect("K" + std::to_string(n), complete_graph(n), n - 1);
        for (int n = 3 ; n <= 10 ; ++n)
            expect("C" + std::to_string(n), cycle_graph(n), 2);
        for (int g = 2 ; g <= 4 ; ++g)
            expect(std::to_string(g) + "x" + std::to_string(g) + " grid", generate_grid(g, g), g);
        out.detail = std::to_string(checked) + " graphs, exact equality";
        return out;
    }
}

auto main() -> int
{
    const std::vector<Criterion> criteria{
        { "oracle-equivalence-tmc", tmc_equivalence },
        { "oracle-equivalence-folio", folio_equivalence },
        { "representative-correctness", representative_correctness },
        { "important-separators", important_separators },
        { "tm-deletion", tm_deletion },
        { "planar-irrelevance", planar_irrelevance },
        { "irrelevance-chain", irrelevance_chains },
        { "structural-certificates", structural_certificates },
        { "treewidth-ground-truths", treewidth_ground_truths },
    };
    int failed = 0;
    for (auto & c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << fixed(seconds_since(t0)) << "s]\n";
        for (auto & note : o.notes)
            std::cout << "     " << note << "\n";
        std::cout.flush();
        failed += ! o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
