#include <tmkit/planar.hpp>
#include <tmkit/error.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/minor_brute.hpp>
#include <tmkit/treewidth.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace tmkit
{
    namespace
    {
        auto mask_of(int n, std::span<const Vertex> vs) -> std::vector<char>
        {
            std::vector<char> m(n, 0);
            for (auto v : vs) {
                if (v < 0 || v >= n)
                    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
                m[v] = 1;
            }
            return m;
        }

        auto members(const std::vector<char> & mask) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (Vertex v = 0 ; v < static_cast<Vertex>(mask.size()) ; ++v)
                if (mask[v])
                    out.push_back(v);
            return out;
        }

        auto check_cycle(const Graph & g, std::span<const Vertex> cycle) -> void
        {
            if (cycle.size() < 3)
                throw InvalidInput("a cycle needs at least three vertices");
            std::vector<char> seen(g.vertex_count(), 0);
            for (std::size_t i = 0 ; i < cycle.size() ; ++i) {
                auto v = cycle[i];
                if (! g.has_vertex(v))
                    throw InvalidInput("cycle vertex out of range");
                if (seen[v])
                    throw InvalidInput("cycle repeats vertex " + std::to_string(v));
                seen[v] = 1;
                if (! g.adjacent(v, cycle[(i + 1) % cycle.size()]))
                    throw InvalidInput("cycle uses a missing edge");
            }
        }

        // splits a closed walk at repeated vertices into its simple cycles
        auto walk_cycles(const std::vector<Vertex> & walk, int n) -> std::vector<Cycle>
        {
            std::vector<Cycle> out;
            if (walk.size() < 3)
                return out;
            std::vector<int> pos(n, -1);
            std::vector<Vertex> stack;
            auto visit = [&] (Vertex v) {
                if (pos[v] >= 0) {
                    std::size_t from = pos[v];
                    if (stack.size() - from >= 3)
                        out.emplace_back(stack.begin() + from, stack.end());
                    for (std::size_t i = from + 1 ; i < stack.size() ; ++i)
                        pos[stack[i]] = -1;
                    stack.resize(from + 1);
                }
                else {
                    pos[v] = static_cast<int>(stack.size());
                    stack.push_back(v);
                }
            };
            for (auto v : walk)
                visit(v);
            visit(walk.front());
            return out;
        }

        auto closed_disc(const EmbeddedGraph & eg, const Cycle & c) -> std::vector<char>
        {
            auto disc = mask_of(eg.graph().vertex_count(), c);
            for (auto v : cycle_interior(eg, c))
                disc[v] = 1;
            return disc;
        }

        auto innermost(const EmbeddedGraph & eg, const std::vector<char> & region, const std::vector<char> & allowed) -> std::optional<Cycle>
        {
            const auto & g = eg.graph();
            int n = g.vertex_count();
            std::vector<Vertex> gone;
            for (Vertex v = 0 ; v < n ; ++v)
                if (! allowed[v] || region[v])
                    gone.push_back(v);
            auto h = delete_vertices(eg, gone);

            // the face of h that swallowed the region touches every surviving neighbour of it
            std::set<int> faces;
            for (Vertex p = 0 ; p < n ; ++p) {
                if (! region[p])
                    continue;
                for (auto u : g.neighbours(p)) {
                    auto nu = h.old_to_new[u];
                    if (nu < 0)
                        continue;
                    for (auto w : h.graph.graph().neighbours(nu)) {
                        faces.insert(h.graph.face_of(nu, w));
                        faces.insert(h.graph.face_of(w, nu));
                    }
                }
            }

            std::set<Cycle> candidates;
            for (auto f : faces) {
                std::vector<Vertex> walk;
                for (auto v : h.graph.faces()[f].vertices)
                    walk.push_back(h.new_to_old[v]);
                for (auto & c : walk_cycles(walk, n))
                    candidates.insert(normalize_cycle(c));
            }

            std::optional<Cycle> best;
            std::size_t best_size = 0;
            std::vector<Vertex> best_set;
            for (auto & c : candidates) {
                auto inside = mask_of(n, cycle_interior(eg, c));
                bool encloses = true;
                for (Vertex v = 0 ; v < n && encloses ; ++v)
                    if (region[v] && ! inside[v])
                        encloses = false;
                if (! encloses)
                    continue;
                auto size = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), 1));
                std::vector<Vertex> set(c);
                std::sort(set.begin(), set.end());
                if (! best || size < best_size || (size == best_size && set < best_set)) {
                    best = c;
                    best_size = size;
                    best_set = set;
                }
            }
            return best;
        }

        auto same_cycle(const Cycle & a, const Cycle & b) -> bool
        {
            return normalize_cycle(a) == normalize_cycle(b);
        }

        // every cycle of g[keep], each reported once
        template <typename F_>
        auto for_each_cycle(const Graph & g, const std::vector<char> & keep, F_ && f) -> bool
        {
            int n = g.vertex_count();
            std::vector<Vertex> path;
            std::vector<char> on(n, 0);
            for (Vertex s = 0 ; s < n ; ++s) {
                if (! keep[s])
                    continue;
                auto dfs = [&] (auto & self, Vertex v) -> bool {
                    for (auto w : g.neighbours(v)) {
                        if (w == s && path.size() >= 3 && path[1] < path.back()) {
                            if (! f(path))
                                return false;
                            continue;
                        }
                        if (w <= s || ! keep[w] || on[w])
                            continue;
                        on[w] = 1;
                        path.push_back(w);
                        bool go = self(self, w);
                        path.pop_back();
                        on[w] = 0;
                        if (! go)
                            return false;
                    }
                    return true;
                };
                path = { s };
                on[s] = 1;
                bool go = dfs(dfs, s);
                on[s] = 0;
                if (! go)
                    return false;
            }
            return true;
        }

        auto grid_block(const GridLayout & layout, const std::vector<std::vector<Vertex>> & sets, int r) -> GridModel
        {
            GridModel m{ r, r, {} };
            for (int i = 0 ; i < r ; ++i)
                for (int j = 0 ; j < r ; ++j)
                    m.branch_sets.push_back(sets[layout.at[i * layout.cols + j]]);
            for (auto & b : m.branch_sets)
                std::sort(b.begin(), b.end());
            return m;
        }

        struct Suppressed
        {
            Graph graph;
            /// host vertices absorbed by each vertex of graph
            std::vector<std::vector<Vertex>> sets;
        };

        // Every maximal chain of degree-2 vertices becomes an edge whose
        // interior joins the first end. A chain keeps its middle vertex when
        // the edge would be parallel or would close a triangle.
        auto suppress_chains(const Graph & g) -> Suppressed
        {
            int n = g.vertex_count();
            struct Chain
            {
                Vertex a, b;
                std::vector<Vertex> inner;
            };
            std::vector<Chain> chains;
            std::vector<char> used(n, 0);
            for (Vertex a = 0 ; a < n ; ++a) {
                if (g.degree(a) == 2)
                    continue;
                for (auto first : g.neighbours(a)) {
                    if (g.degree(first) != 2 || used[first])
                        continue;
                    Chain c{ a, -1, {} };
                    Vertex prev = a, cur = first;
                    while (g.degree(cur) == 2) {
                        used[cur] = 1;
                        c.inner.push_back(cur);
                        auto & nb = g.neighbours(cur);
                        Vertex next = nb[0] == prev ? nb[1] : nb[0];
                        prev = cur;
                        cur = next;
                    }
                    c.b = cur;
                    chains.push_back(std::move(c));
                }
            }
            // components that are plain cycles keep four spread vertices
            std::vector<std::vector<Vertex>> rings;
            for (Vertex s = 0 ; s < n ; ++s) {
                if (g.degree(s) != 2 || used[s])
                    continue;
                std::vector<Vertex> ring;
                Vertex prev = -1, cur = s;
                do {
                    used[cur] = 1;
                    ring.push_back(cur);
                    auto & nb = g.neighbours(cur);
                    Vertex next = nb[0] == prev ? nb[1] : nb[0];
                    prev = cur;
                    cur = next;
                } while (cur != s);
                rings.push_back(std::move(ring));
            }

            std::vector<int> index(n, -1);
            Suppressed out;
            auto add_vertex = [&] (Vertex v) {
                index[v] = static_cast<int>(out.sets.size());
                out.sets.push_back({ v });
            };
            for (Vertex v = 0 ; v < n ; ++v)
                if (g.degree(v) != 2)
                    add_vertex(v);

            std::set<Edge> direct;
            for (auto [u, v] : g.edges())
                if (g.degree(u) != 2 && g.degree(v) != 2)
                    direct.insert(make_edge(index[u], index[v]));
            std::set<Edge> collapsed;
            std::vector<char> keep_middle(chains.size(), 0);
            for (std::size_t i = 0 ; i < chains.size() ; ++i) {
                auto & c = chains[i];
                if (c.a == c.b)
                    continue;
                auto e = make_edge(index[c.a], index[c.b]);
                if (direct.count(e) || collapsed.count(e))
                    keep_middle[i] = 1;
                else
                    collapsed.insert(e);
            }
            // longest chain of a triangle first
            auto longest_in_triangle = [&] () -> int {
                std::map<Edge, int> owner;
                for (auto & e : direct)
                    owner[e] = -1;
                for (std::size_t i = 0 ; i < chains.size() ; ++i)
                    if (chains[i].a != chains[i].b && ! keep_middle[i])
                        owner.emplace(make_edge(index[chains[i].a], index[chains[i].b]), static_cast<int>(i));
                std::vector<std::set<int>> adj(out.sets.size());
                for (auto & [e, i] : owner) {
                    adj[e.first].insert(e.second);
                    adj[e.second].insert(e.first);
                }
                for (auto & [e, i] : owner)
                    for (auto z : adj[e.first]) {
                        if (z == e.second || ! adj[e.second].count(z))
                            continue;
                        int best = -1;
                        for (int c : { i, owner[make_edge(e.first, z)], owner[make_edge(e.second, z)] })
                            if (c >= 0 && (best < 0 || chains[c].inner.size() > chains[best].inner.size()))
                                best = c;
                        if (best >= 0)
                            return best;
                    }
                return -1;
            };
            for (int i ; (i = longest_in_triangle()) >= 0 ;)
                keep_middle[i] = 1;

            std::vector<Edge> edges(direct.begin(), direct.end());
            std::set<Edge> placed(direct.begin(), direct.end());
            for (std::size_t i = 0 ; i < chains.size() ; ++i) {
                auto & c = chains[i];
                int x = index[c.a];
                if (c.a == c.b) {
                    for (auto v : c.inner)
                        out.sets[x].push_back(v);
                    continue;
                }
                int y = index[c.b];
                if (keep_middle[i]) {
                    std::size_t mid = c.inner.size() / 2;
                    add_vertex(c.inner[mid]);
                    int m = index[c.inner[mid]];
                    for (std::size_t j = 0 ; j < mid ; ++j)
                        out.sets[x].push_back(c.inner[j]);
                    for (std::size_t j = mid + 1 ; j < c.inner.size() ; ++j)
                        out.sets[y].push_back(c.inner[j]);
                    edges.push_back(make_edge(x, m));
                    edges.push_back(make_edge(m, y));
                }
                else {
                    for (auto v : c.inner)
                        out.sets[x].push_back(v);
                    if (placed.insert(make_edge(x, y)).second)
                        edges.push_back(make_edge(x, y));
                }
            }
            for (auto & ring : rings) {
                if (ring.size() < 4) {
                    for (auto v : ring)
                        add_vertex(v);
                    for (std::size_t j = 0 ; j < ring.size() ; ++j)
                        edges.push_back(make_edge(index[ring[j]], index[ring[(j + 1) % ring.size()]]));
                    continue;
                }
                std::size_t len = ring.size();
                std::vector<int> ids;
                for (std::size_t q = 0 ; q < 4 ; ++q) {
                    std::size_t from = q * len / 4, to = (q + 1) * len / 4;
                    add_vertex(ring[from]);
                    int id = index[ring[from]];
                    for (std::size_t j = from + 1 ; j < to ; ++j)
                        out.sets[id].push_back(ring[j]);
                    ids.push_back(id);
                }
                for (std::size_t q = 0 ; q < 4 ; ++q)
                    edges.push_back(make_edge(ids[q], ids[(q + 1) % 4]));
            }
            out.graph = Graph::from_edges_dedup(static_cast<int>(out.sets.size()), edges);
            return out;
        }
    }

    auto normalize_cycle(Cycle c) -> Cycle
    {
        if (c.empty())
            return c;
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        if (c.size() > 2 && c[1] > c.back())
            std::reverse(c.begin() + 1, c.end());
        return c;
    }

    auto cycle_interior(const EmbeddedGraph & eg, std::span<const Vertex> cycle) -> std::vector<Vertex>
    {
        const auto & g = eg.graph();
        check_cycle(g, cycle);
        int n = g.vertex_count();
        auto on = mask_of(n, cycle);
        std::set<Edge> cycle_edges;
        for (std::size_t i = 0 ; i < cycle.size() ; ++i)
            cycle_edges.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

        std::vector<std::vector<int>> dual(eg.face_count());
        for (auto [u, v] : g.edges()) {
            if (cycle_edges.count(make_edge(u, v)))
                continue;
            int a = eg.face_of(u, v), b = eg.face_of(v, u);
            dual[a].push_back(b);
            dual[b].push_back(a);
        }
        auto side = [&] (int start) {
            std::vector<char> seen(eg.face_count(), 0);
            std::vector<int> stack{ start };
            seen[start] = 1;
            while (! stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (auto h : dual[f])
                    if (! seen[h]) {
                        seen[h] = 1;
                        stack.push_back(h);
                    }
            }
            return seen;
        };
        auto faces = side(eg.face_of(cycle[0], cycle[1]));
        bool outer = false;
        for (int f = 0 ; f < eg.face_count() ; ++f)
            if (faces[f] && eg.is_outer(f))
                outer = true;
        if (outer)
            faces = side(eg.face_of(cycle[1], cycle[0]));

        std::vector<char> inside(n, 0);
        for (int f = 0 ; f < eg.face_count() ; ++f)
            if (faces[f])
                for (auto v : eg.faces()[f].vertices)
                    if (! on[v])
                        inside[v] = 1;
        return members(inside);
    }

    auto innermost_enclosing_cycle(const EmbeddedGraph & eg, std::span<const Vertex> region, std::span<const Vertex> allowed)
        -> std::optional<Cycle>
    {
        int n = eg.graph().vertex_count();
        if (region.empty())
            throw InvalidInput("the enclosed region must be non-empty");
        auto in_region = mask_of(n, region);
        auto ok = allowed.empty() ? std::vector<char>(n, 1) : mask_of(n, allowed);
        return innermost(eg, in_region, ok);
    }

    auto concentric_problem(const EmbeddedGraph & eg, const CycleSequence & cs) -> std::optional<std::string>
    {
        const auto & g = eg.graph();
        if (! g.has_vertex(cs.center))
            return "centre out of range";
        if (cs.cycles.empty())
            return "no cycles";
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t i = 0 ; i < cs.cycles.size() ; ++i) {
            try {
                check_cycle(g, cs.cycles[i]);
            }
            catch (const InvalidInput & e) {
                return "C_" + std::to_string(i) + ": " + e.what();
            }
            for (auto v : cs.cycles[i]) {
                if (owner[v] >= 0)
                    return "C_" + std::to_string(owner[v]) + " and C_" + std::to_string(i) + " share vertex " + std::to_string(v);
                owner[v] = static_cast<int>(i);
            }
        }
        if (owner[cs.center] >= 0)
            return "the centre lies on C_" + std::to_string(owner[cs.center]);
        auto inside = mask_of(g.vertex_count(), cycle_interior(eg, cs.cycles[0]));
        if (! inside[cs.center])
            return "the centre is not inside C_0";
        for (std::size_t i = 0 ; i + 1 < cs.cycles.size() ; ++i) {
            auto next = mask_of(g.vertex_count(), cycle_interior(eg, cs.cycles[i + 1]));
            for (auto v : cs.cycles[i])
                if (! next[v])
                    return "C_" + std::to_string(i) + " is not inside C_" + std::to_string(i + 1);
        }
        return std::nullopt;
    }

    auto tightness_problem(const EmbeddedGraph & eg, const CycleSequence & cs, const Ceilings & ceilings) -> std::optional<std::string>
    {
        if (auto why = concentric_problem(eg, cs))
            return why;
        const auto & g = eg.graph();
        int n = g.vertex_count();
        std::vector<char> previous(n, 0);
        previous[cs.center] = 1;
        for (std::size_t i = 0 ; i < cs.cycles.size() ; ++i) {
            auto disc = closed_disc(eg, cs.cycles[i]);
            std::vector<char> keep(n, 0);
            for (Vertex v = 0 ; v < n ; ++v)
                keep[v] = disc[v] && ! previous[v];
            check_ceiling("tightness_vertices", ceilings.tightness_vertices, std::count(keep.begin(), keep.end(), 1));
            std::optional<std::string> why;
            for_each_cycle(g, keep, [&] (const std::vector<Vertex> & c) {
                if (same_cycle(c, cs.cycles[i]))
                    return true;
                auto inside = mask_of(n, cycle_interior(eg, c));
                for (Vertex v = 0 ; v < n ; ++v)
                    if (previous[v] && ! inside[v])
                        return true;
                why = "C_" + std::to_string(i) + " is not innermost: a smaller enclosing cycle exists";
                return false;
            });
            if (why)
                return why;
            previous = disc;
        }
        return std::nullopt;
    }

    auto concentric_cycles(const EmbeddedGraph & eg, Vertex center, int s) -> std::optional<CycleSequence>
    {
        int n = eg.graph().vertex_count();
        if (! eg.graph().has_vertex(center))
            throw InvalidInput("centre out of range");
        if (s < 0)
            throw InvalidInput("s must be non-negative");
        CycleSequence out{ center, {}, true };
        std::vector<char> region(n, 0), everything(n, 1);
        region[center] = 1;
        for (int i = 0 ; i <= s ; ++i) {
            auto c = innermost(eg, region, everything);
            if (! c)
                return std::nullopt;
            for (auto v : members(closed_disc(eg, *c)))
                region[v] = 1;
            out.cycles.push_back(std::move(*c));
        }
        return out;
    }

    auto tighten(const EmbeddedGraph & eg, const CycleSequence & cs) -> CycleSequence
    {
        if (auto why = concentric_problem(eg, cs))
            throw InvalidInput("not a concentric sequence: " + *why);
        int n = eg.graph().vertex_count();
        CycleSequence out{ cs.center, {}, true };
        std::vector<char> region(n, 0);
        region[cs.center] = 1;
        for (auto & original : cs.cycles) {
            auto c = innermost(eg, region, closed_disc(eg, original));
            if (! c)
                throw Error("no enclosing cycle inside a cycle that encloses the region");
            region = closed_disc(eg, *c);
            out.cycles.push_back(std::move(*c));
        }
        return out;
    }

    auto dp_irrelevant_vertex(const EmbeddedGraph & eg, const DisjointPathsInstance & inst, int r) -> std::optional<IrrelevantVertex>
    {
        validate_instance(inst);
        if (r < 1)
            throw InvalidInput("r must be positive");
        const auto & g = eg.graph();
        if (! (inst.graph == g))
            throw InvalidInput("the instance graph differs from the embedded graph");
        int n = g.vertex_count();
        std::vector<char> terminal(n, 0);
        std::vector<Vertex> queue;
        for (auto [s, t] : inst.pairs) {
            terminal[s] = terminal[t] = 1;
            queue.push_back(s);
            queue.push_back(t);
        }
        constexpr int far = std::numeric_limits<int>::max();
        std::vector<int> dist(n, far);
        for (auto v : queue)
            dist[v] = 0;
        for (std::size_t i = 0 ; i < queue.size() ; ++i)
            for (auto w : g.neighbours(queue[i]))
                if (dist[w] == far) {
                    dist[w] = dist[queue[i]] + 1;
                    queue.push_back(w);
                }

        std::vector<Vertex> order;
        for (Vertex v = 0 ; v < n ; ++v)
            if (! terminal[v] && dist[v] >= r + 2)
                order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return dist[a] > dist[b]; });

        std::vector<char> everything(n, 1);
        for (auto v : order) {
            CycleSequence cs{ v, {}, true };
            std::vector<char> region(n, 0);
            region[v] = 1;
            bool ok = true;
            for (int i = 0 ; i <= r && ok ; ++i) {
                auto c = innermost(eg, region, everything);
                if (! c) {
                    ok = false;
                    break;
                }
                region = closed_disc(eg, *c);
                for (Vertex u = 0 ; u < n ; ++u)
                    if (region[u] && terminal[u])
                        ok = false;
                cs.cycles.push_back(std::move(*c));
            }
            if (ok)
                return IrrelevantVertex{ v, std::move(cs) };
        }
        return std::nullopt;
    }

    auto grid_minor_planar(const EmbeddedGraph & eg, int r, const Ceilings & ceilings) -> std::optional<GridModel>
    {
        if (r < 1)
            throw InvalidInput("r must be positive");
        const auto & g = eg.graph();
        int n = g.vertex_count();
        auto checked = [&] (GridModel m) -> std::optional<GridModel> {
            if (! verify_grid_model(g, m))
                throw Error("internal error: grid model failed verification");
            return m;
        };
        if (r == 1 && n > 0)
            return checked(GridModel{ 1, 1, { { 0 } } });

        if (auto layout = recognize_grid(g); layout && layout->rows >= r) {
            std::vector<std::vector<Vertex>> sets(n);
            for (Vertex v = 0 ; v < n ; ++v)
                sets[v] = { v };
            return checked(grid_block(*layout, sets, r));
        }
        auto suppressed = suppress_chains(g);
        if (auto layout = recognize_grid(suppressed.graph); layout && layout->rows >= r)
            return checked(grid_block(*layout, suppressed.sets, r));

        if (n < r * r || g.edge_count() < 2 * r * (r - 1))
            return std::nullopt;
        if (n <= ceilings.minor_brute_vertices && r * r <= ceilings.minor_brute_pattern) {
            if (auto m = minor_model_brute(g, generate_grid(r, r), ceilings))
                return checked(GridModel{ r, r, m->branch_sets });
            return std::nullopt;
        }
        check_ceiling("treewidth_vertices", ceilings.treewidth_vertices, n);
        if (treewidth(g, ceilings).width <= 6 * r - 6)
            return std::nullopt;
        throw CeilingExceeded("minor_brute_vertices", ceilings.minor_brute_vertices, n);
    }

    auto irrelevance_chain(const Wall & w, int delta, int k, int shrink) -> IrrelevanceChain
    {
        if (delta < 1)
            throw InvalidInput("delta must be positive");
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        if (shrink < 1)
            throw InvalidInput("shrink must be positive");
        int side = std::min(w.height, w.width);
        long long need = 1;
        for (int i = 0 ; i < k + 2 ; ++i)
            need *= shrink;
        if (side < need)
            throw PreconditionFailed("wall too small for the chain: side " + std::to_string(side) + ", need " + std::to_string(need));
        IrrelevanceChain out;
        for (int i = 0 ; i <= k + 1 ; ++i) {
            out.sides.push_back(side);
            out.walls.push_back(centred_subwall_vertices(w, side, side));
            side /= shrink;
        }
        out.irrelevant = out.walls.back();
        return out;
    }
}
