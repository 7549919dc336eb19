#include <tmkit/twdp.hpp>
#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>
#include <tmkit/separation.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace tmkit
{
    namespace
    {
        constexpr std::uint8_t end_a = 250, end_b = 251, no_partner = 255;
        constexpr std::uint8_t attached_a = 1, attached_b = 2, done = 4;

        // role 0 is free, 1 + h a branch vertex of h, 1 + k + e an interior vertex of the path for e
        struct State
        {
            std::vector<std::uint8_t> role, deg, partner;
            std::vector<std::uint8_t> flags;
            std::uint32_t forgotten = 0;
            int iso = 0;

            auto operator<=> (const State &) const = default;
        };

        struct Back
        {
            const State * first = nullptr;
            const State * second = nullptr;
            std::uint32_t chosen = 0;
        };

        using Table = std::map<State, Back>;

        class Engine
        {
            public:
                Engine(const RootedGraph & g, const RootedGraph & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings,
                        DpStats * stats) :
                    _g(g), _h(h), _ntd(ntd), _ceilings(ceilings), _stats(stats)
                {
                    _k = h.vertex_count();
                    _pe = h.graph().edges();
                    _m = static_cast<int>(_pe.size());
                    _incident.assign(_k, {});
                    for (int e = 0 ; e < _m ; ++e) {
                        _incident[_pe[e].first].push_back(e);
                        _incident[_pe[e].second].push_back(e);
                    }
                    _active.assign(_k, 0);
                    for (Vertex x = 0 ; x < _k ; ++x)
                        if (h.is_root(x) || h.graph().degree(x) > 0) {
                            _active[x] = 1;
                            _active_mask |= std::uint32_t(1) << x;
                        }
                        else
                            ++_iso_need;
                    _forced.assign(g.vertex_count(), -1);
                    for (Vertex x = 0 ; x < _k ; ++x)
                        if (h.is_root(x))
                            if (auto v = g.vertex_with_label(h.label(x)))
                                _forced[*v] = x;
                }

                auto run() -> std::optional<Witness>
                {
                    for (Vertex x = 0 ; x < _k ; ++x)
                        if (_h.is_root(x) && ! _g.vertex_with_label(_h.label(x)))
                            return std::nullopt;
                    if (_k > _g.vertex_count())
                        return std::nullopt;

                    int nodes = _ntd.node_count();
                    _tables.assign(nodes, {});
                    for (int x = 0 ; x < nodes ; ++x) {
                        switch (_ntd.kind[x]) {
                            case NodeKind::Leaf: leaf(x); break;
                            case NodeKind::Introduce: introduce(x); break;
                            case NodeKind::Forget: forget(x); break;
                            case NodeKind::Join: join(x); break;
                        }
                        if (_stats) {
                            _stats->max_table = std::max<long long>(_stats->max_table, static_cast<long long>(_tables[x].size()));
                            _stats->total_states += static_cast<long long>(_tables[x].size());
                        }
                        // children are no longer needed once every parent is built, except for reconstruction
                    }
                    const auto & top = _tables[_ntd.tree.root];
                    for (auto & [state, back] : top)
                        if (accepting(state))
                            return reconstruct(state);
                    return std::nullopt;
                }

            private:
                const RootedGraph & _g;
                const RootedGraph & _h;
                const NiceTreeDecomposition & _ntd;
                const Ceilings & _ceilings;
                DpStats * _stats;
                int _k = 0, _m = 0, _iso_need = 0;
                std::vector<Edge> _pe;
                std::vector<std::vector<int>> _incident;
                std::vector<char> _active;
                std::uint32_t _active_mask = 0;
                std::vector<int> _forced;
                std::vector<Table> _tables;

                auto branch_of(std::uint8_t r) const -> int { return r >= 1 && r <= _k ? r - 1 : -1; }
                auto path_of(std::uint8_t r) const -> int { return r > _k ? r - 1 - _k : -1; }
                auto branch_role(int x) const -> std::uint8_t { return static_cast<std::uint8_t>(1 + x); }
                auto path_role(int e) const -> std::uint8_t { return static_cast<std::uint8_t>(1 + _k + e); }

                auto accepting(const State & s) const -> bool
                {
                    if (s.forgotten != _active_mask || s.iso < _iso_need)
                        return false;
                    return std::all_of(s.flags.begin(), s.flags.end(), [] (auto f) { return (f & done) != 0; });
                }

                auto insert(int node, State && s, Back back) -> void
                {
                    auto & table = _tables[node];
                    if (table.emplace(std::move(s), back).second)
                        check_ceiling("dp_table_states", _ceilings.dp_table_states, static_cast<long long>(table.size()));
                }

                // union of the partial solutions of a and b on the same bag
                auto combine(const State & a, const State & b, State & out) const -> bool
                {
                    if (a.forgotten & b.forgotten)
                        return false;
                    int s = static_cast<int>(a.role.size());
                    out.role = a.role;
                    out.forgotten = a.forgotten | b.forgotten;
                    out.iso = std::min(a.iso + b.iso, _iso_need);
                    out.deg.assign(s, 0);
                    out.partner.assign(s, no_partner);
                    out.flags.assign(_m, 0);
                    for (int i = 0 ; i < s ; ++i) {
                        int d = a.deg[i] + b.deg[i];
                        if (d > 2)
                            return false;
                        out.deg[i] = static_cast<std::uint8_t>(d);
                    }
                    std::vector<std::pair<int, int>> segs;
                    std::vector<std::vector<int>> inc(s + 2);
                    std::vector<char> used;
                    for (int e = 0 ; e < _m ; ++e) {
                        std::uint8_t fa = a.flags[e], fb = b.flags[e];
                        if (fa & fb & (attached_a | attached_b))
                            return false;
                        bool closed = ((fa | fb) & done) != 0;
                        std::uint8_t flags = static_cast<std::uint8_t>((fa | fb) & (attached_a | attached_b));
                        auto rp = path_role(e);
                        segs.clear();
                        for (auto & l : inc)
                            l.clear();
                        auto collect = [&] (const State & st) {
                            for (int i = 0 ; i < s ; ++i) {
                                if (st.role[i] != rp || st.deg[i] != 1)
                                    continue;
                                int p = st.partner[i];
                                if (p == end_a)
                                    segs.emplace_back(i, s);
                                else if (p == end_b)
                                    segs.emplace_back(i, s + 1);
                                else if (p > i)
                                    segs.emplace_back(i, p);
                            }
                        };
                        collect(a);
                        collect(b);
                        for (int j = 0 ; j < static_cast<int>(segs.size()) ; ++j) {
                            inc[segs[j].first].push_back(j);
                            inc[segs[j].second].push_back(j);
                        }
                        used.assign(segs.size(), 0);
                        int walked = 0, pairs = 0;
                        bool joined = false;
                        for (int start = 0 ; start < s + 2 ; ++start) {
                            if (inc[start].size() != 1 || used[inc[start][0]])
                                continue;
                            int at = start, via = inc[start][0];
                            while (true) {
                                used[via] = 1;
                                ++walked;
                                at = segs[via].first == at ? segs[via].second : segs[via].first;
                                if (inc[at].size() != 2)
                                    break;
                                via = inc[at][0] == via ? inc[at][1] : inc[at][0];
                            }
                            int x = start, y = at;
                            ++pairs;
                            if (std::min(x, y) == s && std::max(x, y) == s + 1) {
                                joined = true;
                                continue;
                            }
                            auto code = [&] (int z) -> std::uint8_t {
                                return z == s ? end_a : z == s + 1 ? end_b : static_cast<std::uint8_t>(z);
                            };
                            if (x < s)
                                out.partner[x] = code(y);
                            if (y < s)
                                out.partner[y] = code(x);
                        }
                        if (walked != static_cast<int>(segs.size()))
                            return false;
                        if (joined || closed) {
                            if (pairs != (joined ? 1 : 0) || (joined && closed))
                                return false;
                            for (int i = 0 ; i < s ; ++i)
                                if (out.role[i] == rp && out.deg[i] < 2)
                                    return false;
                            flags |= done;
                        }
                        out.flags[e] = flags;
                    }
                    return true;
                }

                // the single host edge between bag positions p and q as a partial solution
                auto edge_delta(const State & s, int p, int q, State & d) const -> bool
                {
                    int size = static_cast<int>(s.role.size());
                    d.role = s.role;
                    d.deg.assign(size, 0);
                    d.partner.assign(size, no_partner);
                    d.flags.assign(_m, 0);
                    d.forgotten = 0;
                    d.iso = 0;
                    auto rp = s.role[p], rq = s.role[q];
                    int bp = branch_of(rp), bq = branch_of(rq), ep = path_of(rp), eq = path_of(rq);
                    if (bp >= 0 && bq >= 0) {
                        for (auto e : _incident[bp])
                            if (_pe[e].first == bq || _pe[e].second == bq) {
                                d.flags[e] = attached_a | attached_b | done;
                                return true;
                            }
                        return false;
                    }
                    if (ep >= 0 && eq >= 0) {
                        if (ep != eq)
                            return false;
                        d.deg[p] = d.deg[q] = 1;
                        d.partner[p] = static_cast<std::uint8_t>(q);
                        d.partner[q] = static_cast<std::uint8_t>(p);
                        return true;
                    }
                    if (bq >= 0 && ep >= 0) {
                        std::swap(p, q);
                        std::swap(bp, bq);
                        std::swap(ep, eq);
                    }
                    if (bp >= 0 && eq >= 0) {
                        if (_pe[eq].first != bp && _pe[eq].second != bp)
                            return false;
                        bool first = _pe[eq].first == bp;
                        d.deg[q] = 1;
                        d.partner[q] = first ? end_a : end_b;
                        d.flags[eq] = first ? attached_a : attached_b;
                        return true;
                    }
                    return false;
                }

                auto leaf(int x) -> void
                {
                    State s;
                    s.flags.assign(_m, 0);
                    insert(x, std::move(s), {});
                }

                auto introduce(int x) -> void
                {
                    int c = _ntd.children[x][0];
                    Vertex v = _ntd.vertex[x];
                    const auto & bag = _ntd.tree.bags[x];
                    int p = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
                    for (auto & [cs, back] : _tables[c]) {
                        State base = cs;
                        for (auto & q : base.partner)
                            if (q < end_a && q >= p)
                                ++q;
                        base.role.insert(base.role.begin() + p, 0);
                        base.deg.insert(base.deg.begin() + p, 0);
                        base.partner.insert(base.partner.begin() + p, no_partner);
                        auto present = [&] (std::uint8_t r) { return std::find(cs.role.begin(), cs.role.end(), r) != cs.role.end(); };
                        auto place = [&] (std::uint8_t r) {
                            State s = base;
                            s.role[p] = r;
                            insert(x, std::move(s), Back{ &cs, nullptr, 0 });
                        };
                        if (_forced[v] >= 0) {
                            int hx = _forced[v];
                            if (! (cs.forgotten >> hx & 1) && ! present(branch_role(hx)))
                                place(branch_role(hx));
                            continue;
                        }
                        place(0);
                        for (int hx = 0 ; hx < _k ; ++hx)
                            if (_active[hx] && ! _h.is_root(hx) && ! (cs.forgotten >> hx & 1) && ! present(branch_role(hx)))
                                place(branch_role(hx));
                        for (int e = 0 ; e < _m ; ++e)
                            if (! (cs.flags[e] & done))
                                place(path_role(e));
                    }
                }

                auto neighbour_positions(const State & s, const std::vector<Vertex> & bag, int p) const -> std::vector<int>
                {
                    std::vector<int> out;
                    if (s.role[p] == 0)
                        return out;
                    for (int q = 0 ; q < static_cast<int>(bag.size()) ; ++q)
                        if (q != p && s.role[q] != 0 && _g.graph().adjacent(bag[p], bag[q]))
                            out.push_back(q);
                    return out;
                }

                auto forget(int x) -> void
                {
                    int c = _ntd.children[x][0];
                    Vertex v = _ntd.vertex[x];
                    const auto & bag = _ntd.tree.bags[c];
                    int p = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
                    for (auto & [cs, back] : _tables[c]) {
                        auto nbrs = neighbour_positions(cs, bag, p);
                        auto finish = [&] (const State & s, std::uint32_t chosen) {
                            auto r = s.role[p];
                            State out = s;
                            if (r == 0)
                                out.iso = std::min(out.iso + 1, _iso_need);
                            else if (int hx = branch_of(r) ; hx >= 0) {
                                for (auto e : _incident[hx]) {
                                    auto need = _pe[e].first == hx ? attached_a : attached_b;
                                    if (! (s.flags[e] & need))
                                        return;
                                }
                                out.forgotten |= std::uint32_t(1) << hx;
                            }
                            else if (s.deg[p] != 2)
                                return;
                            out.role.erase(out.role.begin() + p);
                            out.deg.erase(out.deg.begin() + p);
                            out.partner.erase(out.partner.begin() + p);
                            for (auto & q : out.partner)
                                if (q < end_a && q > p)
                                    --q;
                            insert(x, std::move(out), Back{ &cs, nullptr, chosen });
                        };
                        auto rec = [&] (auto & self, std::size_t i, const State & s, std::uint32_t chosen) -> void {
                            if (i == nbrs.size()) {
                                finish(s, chosen);
                                return;
                            }
                            self(self, i + 1, s, chosen);
                            State d, next;
                            if (edge_delta(s, p, nbrs[i], d) && combine(s, d, next))
                                self(self, i + 1, next, chosen | std::uint32_t(1) << i);
                        };
                        rec(rec, 0, cs, 0);
                    }
                }

                auto join(int x) -> void
                {
                    int l = _ntd.children[x][0], r = _ntd.children[x][1];
                    std::map<std::vector<std::uint8_t>, std::vector<const State *>> by_roles;
                    for (auto & [rs, back] : _tables[r])
                        by_roles[rs.role].push_back(&rs);
                    for (auto & [ls, lback] : _tables[l]) {
                        auto it = by_roles.find(ls.role);
                        if (it == by_roles.end())
                            continue;
                        for (auto rs : it->second) {
                            State out;
                            if (combine(ls, *rs, out))
                                insert(x, std::move(out), Back{ &ls, rs, 0 });
                        }
                    }
                }

                auto reconstruct(const State & top) const -> Witness
                {
                    int n = _g.vertex_count();
                    std::vector<int> role_of(n, 0);
                    std::vector<Edge> chosen;
                    std::vector<std::pair<int, const State *>> stack{ { _ntd.tree.root, &top } };
                    while (! stack.empty()) {
                        auto [x, s] = stack.back();
                        stack.pop_back();
                        const auto & back = _tables[x].at(*s);
                        const auto & kids = _ntd.children[x];
                        switch (_ntd.kind[x]) {
                            case NodeKind::Leaf:
                                break;
                            case NodeKind::Introduce:
                                stack.emplace_back(kids[0], back.first);
                                break;
                            case NodeKind::Forget: {
                                Vertex v = _ntd.vertex[x];
                                const auto & bag = _ntd.tree.bags[kids[0]];
                                int p = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
                                role_of[v] = back.first->role[p];
                                auto nbrs = neighbour_positions(*back.first, bag, p);
                                for (std::size_t i = 0 ; i < nbrs.size() ; ++i)
                                    if (back.chosen >> i & 1)
                                        chosen.push_back(make_edge(v, bag[nbrs[i]]));
                                stack.emplace_back(kids[0], back.first);
                                break;
                            }
                            case NodeKind::Join:
                                stack.emplace_back(kids[0], back.first);
                                stack.emplace_back(kids[1], back.second);
                                break;
                        }
                    }

                    Witness w;
                    w.branch.assign(_k, -1);
                    std::vector<char> used(n, 0);
                    for (Vertex v = 0 ; v < n ; ++v)
                        if (role_of[v] != 0) {
                            used[v] = 1;
                            if (int hx = branch_of(static_cast<std::uint8_t>(role_of[v])) ; hx >= 0)
                                w.branch[hx] = v;
                        }
                    Vertex spare = 0;
                    for (int hx = 0 ; hx < _k ; ++hx) {
                        if (_active[hx])
                            continue;
                        while (used[spare])
                            ++spare;
                        w.branch[hx] = spare;
                        used[spare] = 1;
                    }

                    std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
                    for (auto [u, v] : chosen) {
                        int e = path_of(static_cast<std::uint8_t>(role_of[u]));
                        if (e < 0)
                            e = path_of(static_cast<std::uint8_t>(role_of[v]));
                        if (e < 0) {
                            int a = branch_of(static_cast<std::uint8_t>(role_of[u])), b = branch_of(static_cast<std::uint8_t>(role_of[v]));
                            for (int f = 0 ; f < _m ; ++f)
                                if (make_edge(a, b) == _pe[f])
                                    e = f;
                        }
                        adj[u].emplace_back(v, e);
                        adj[v].emplace_back(u, e);
                    }
                    w.paths.resize(_m);
                    for (int e = 0 ; e < _m ; ++e) {
                        Vertex at = w.branch[_pe[e].first], target = w.branch[_pe[e].second], prev = -1;
                        w.paths[e].push_back(at);
                        while (at != target) {
                            Vertex next = -1;
                            for (auto [y, f] : adj[at])
                                if (f == e && y != prev)
                                    next = y;
                            if (next == -1)
                                throw Error("tmc_dp: broken path during reconstruction");
                            prev = at;
                            at = next;
                            w.paths[e].push_back(at);
                            if (static_cast<int>(w.paths[e].size()) > n)
                                throw Error("tmc_dp: cyclic path during reconstruction");
                        }
                    }
                    if (auto problem = witness_problem(_g, _h, w))
                        throw Error("tmc_dp produced an invalid witness: " + *problem);
                    return w;
                }
        };

        auto check_dp_limits(const RootedGraph & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings) -> void
        {
            check_ceiling("pattern_vertices", ceilings.pattern_vertices, h.vertex_count());
            check_ceiling("pattern_vertices", 32, h.vertex_count());
            check_ceiling("dp_width", ceilings.dp_width, ntd.width());
            check_ceiling("dp_width", 31, ntd.width());
        }

        auto run_engine(const RootedGraph & g, const RootedGraph & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings,
                DpStats * stats) -> std::optional<Witness>
        {
            check_dp_limits(h, ntd, ceilings);
            Engine engine(g, h, ntd, ceilings, stats);
            return engine.run();
        }

        auto require_nice(const Graph & g, const NiceTreeDecomposition & ntd) -> void
        {
            if (auto problem = nice_problem(g, ntd))
                throw InvalidInput("invalid nice tree decomposition: " + *problem);
        }

        auto folio_with(const RootedGraph & g, int delta, const NiceTreeDecomposition & injected, const Ceilings & ceilings)
            -> ExtendedFolio
        {
            check_ceiling("dp_width", ceilings.dp_width, injected.width());
            ExtendedFolio result;
            result.delta = delta;
            result.labels = g.root_labels();
            auto patterns = enumerate_patterns(result.labels, delta, ceilings);
            auto pair_count = label_pairs(result.labels).size();
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t(1) << pair_count) ; ++mask) {
                auto gx = extend_by_mask(g, mask);
                Folio folio;
                folio.delta = delta;
                for (auto & h : patterns) {
                    if (h.vertex_count() > g.vertex_count())
                        continue;
                    if (run_engine(gx, h, injected, ceilings, nullptr))
                        folio.patterns.insert(canonical_form(h, ceilings));
                }
                result.entries.emplace(mask, std::move(folio));
            }
            return result;
        }
    }

    auto tmc_dp(const RootedGraph & g, const RootedGraph & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings,
            DpStats * stats) -> std::optional<Witness>
    {
        require_nice(g.graph(), ntd);
        return run_engine(g, h, ntd, ceilings, stats);
    }

    auto tmc_dp(const RootedGraph & g, const Pattern & h, const NiceTreeDecomposition & ntd, const Ceilings & ceilings,
            DpStats * stats) -> std::optional<Witness>
    {
        return tmc_dp(g, h.graph(), ntd, ceilings, stats);
    }

    auto folio_dp(const RootedGraph & g, int delta, const NiceTreeDecomposition & ntd, const Ceilings & ceilings) -> ExtendedFolio
    {
        if (delta < 1)
            throw InvalidInput("delta must be positive");
        check_folio_roots(g, delta, ceilings);
        require_nice(g.graph(), ntd);
        auto roots = g.roots();
        return folio_with(g, delta, make_nice(ntd.tree, roots), ceilings);
    }

    auto nice_decomposition(const Graph & g, const Ceilings & ceilings) -> NiceTreeDecomposition
    {
        if (g.vertex_count() <= ceilings.treewidth_vertices)
            return make_nice(treewidth(g, ceilings).decomposition);
        return make_nice(decomposition_from_order(g, min_fill_order(g)));
    }

    namespace
    {
        // the extended folio after renaming labels through map (labels absent from map are kept)
        auto relabel_folio(const ExtendedFolio & f, const std::map<int, int> & map, const Ceilings & ceilings) -> ExtendedFolio
        {
            auto image = [&] (int l) {
                auto it = map.find(l);
                return it == map.end() ? l : it->second;
            };
            ExtendedFolio out;
            out.delta = f.delta;
            out.labels = f.labels;
            auto pairs = label_pairs(f.labels);
            std::map<std::pair<int, int>, int> index;
            for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                index[pairs[i]] = static_cast<int>(i);
            for (auto & [mask, folio] : f.entries) {
                std::uint64_t moved = 0;
                for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                    if (mask >> i & 1) {
                        int a = image(pairs[i].first), b = image(pairs[i].second);
                        moved |= std::uint64_t(1) << index.at({ std::min(a, b), std::max(a, b) });
                    }
                Folio g;
                g.delta = folio.delta;
                for (auto & form : folio.patterns) {
                    auto h = decode_canonical(form);
                    auto labels = h.labels();
                    for (auto & l : labels)
                        if (l > 0)
                            l = image(l);
                    g.patterns.insert(canonical_form(RootedGraph(h.graph(), labels), ceilings));
                }
                out.entries.emplace(moved, std::move(g));
            }
            return out;
        }

        auto folio_signature(const ExtendedFolio & f) -> std::vector<std::size_t>
        {
            std::vector<std::size_t> sizes;
            for (auto & [mask, folio] : f.entries)
                sizes.push_back(folio.patterns.size());
            std::sort(sizes.begin(), sizes.end());
            return sizes;
        }

        class Splicer
        {
            public:
                Splicer(RootedGraph g, NiceTreeDecomposition ntd, int delta, const Ceilings & ceilings) :
                    _g(std::move(g)), _ntd(std::move(ntd)), _delta(delta), _ceilings(ceilings)
                {
                    _fresh_base = 0;
                    for (auto l : _g.root_labels())
                        _fresh_base = std::max(_fresh_base, l);
                }

                auto run() -> RepresentativeResult
                {
                    int splices = 0;
                    while (step())
                        ++splices;
                    return { _g, _ntd, splices };
                }

            private:
                RootedGraph _g;
                NiceTreeDecomposition _ntd;
                int _delta;
                const Ceilings & _ceilings;
                int _fresh_base;
                std::map<std::string, ExtendedFolio> _cache;

                struct NodeView
                {
                    std::vector<Vertex> below;
                    std::vector<Vertex> fresh;
                    int depth = 0;
                    bool eligible = false;
                    std::optional<ExtendedFolio> folio;
                };

                std::vector<NodeView> _views;

                // G_u rooted at bag(u): roots keep their labels, other bag vertices get fresh labels in vertex order
                auto side(int u) const -> std::pair<Renamed<RootedGraph>, std::vector<int>>
                {
                    auto sub = induced_subgraph(_g, _views[u].below);
                    auto labels = sub.graph.labels();
                    const auto & fresh = _views[u].fresh;
                    for (std::size_t i = 0 ; i < fresh.size() ; ++i)
                        labels[sub.old_to_new[fresh[i]]] = _fresh_base + 1 + static_cast<int>(i);
                    return { std::move(sub), std::move(labels) };
                }

                auto folio_of(int u) -> const ExtendedFolio &
                {
                    auto & view = _views[u];
                    if (view.folio)
                        return *view.folio;
                    auto [sub, labels] = side(u);
                    RootedGraph rooted(sub.graph.graph(), labels);
                    std::string key;
                    bool cacheable = rooted.vertex_count() <= _ceilings.canonical_vertices;
                    if (cacheable) {
                        key = canonical_form(rooted, _ceilings);
                        if (auto it = _cache.find(key) ; it != _cache.end()) {
                            view.folio = it->second;
                            return *view.folio;
                        }
                    }
                    // the subtree below u, renamed into G_u
                    std::vector<int> ids(_ntd.node_count(), -1);
                    TreeDecomposition td;
                    std::vector<int> order;
                    auto collect = [&] (auto & self, int x) -> void {
                        for (auto c : _ntd.children[x])
                            self(self, c);
                        ids[x] = static_cast<int>(order.size());
                        order.push_back(x);
                    };
                    collect(collect, u);
                    for (auto x : order) {
                        std::vector<Vertex> bag;
                        for (auto v : _ntd.tree.bags[x])
                            bag.push_back(sub.old_to_new[v]);
                        std::sort(bag.begin(), bag.end());
                        td.bags.push_back(std::move(bag));
                        td.parent.push_back(x == u ? -1 : ids[_ntd.tree.parent[x]]);
                    }
                    td.root = ids[u];
                    check_folio_roots(rooted, _delta, _ceilings);
                    auto folio = folio_with(rooted, _delta, make_nice(td, rooted.roots()), _ceilings);
                    if (cacheable)
                        _cache.emplace(key, folio);
                    view.folio = std::move(folio);
                    return *view.folio;
                }

                auto prepare() -> void
                {
                    int k = _ntd.node_count();
                    _views.assign(k, {});
                    auto roots = _g.roots();
                    for (int x = 0 ; x < k ; ++x) {
                        auto & view = _views[x];
                        const auto & bag = _ntd.tree.bags[x];
                        std::vector<Vertex> all = bag;
                        for (auto c : _ntd.children[x])
                            all.insert(all.end(), _views[c].below.begin(), _views[c].below.end());
                        std::sort(all.begin(), all.end());
                        all.erase(std::unique(all.begin(), all.end()), all.end());
                        view.below = std::move(all);
                        view.eligible = std::includes(bag.begin(), bag.end(), roots.begin(), roots.end());
                        for (auto v : bag)
                            if (! _g.is_root(v))
                                view.fresh.push_back(v);
                    }
                    for (int x = k - 1 ; x >= 0 ; --x)
                        if (_ntd.tree.parent[x] >= 0)
                            _views[x].depth = _views[_ntd.tree.parent[x]].depth + 1;
                }

                // a permutation of the fresh labels of v under which its folio equals that of u
                auto matching(int u, int v) -> std::optional<std::vector<int>>
                {
                    const auto & fu = folio_of(u);
                    const auto & fv = folio_of(v);
                    if (fu.labels != fv.labels || folio_signature(fu) != folio_signature(fv))
                        return std::nullopt;
                    std::vector<int> perm(_views[v].fresh.size());
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        std::map<int, int> map;
                        for (std::size_t i = 0 ; i < perm.size() ; ++i)
                            map[_fresh_base + 1 + static_cast<int>(i)] = _fresh_base + 1 + perm[i];
                        if (relabel_folio(fv, map, _ceilings) == fu)
                            return perm;
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    return std::nullopt;
                }

                auto step() -> bool
                {
                    prepare();
                    int k = _ntd.node_count();
                    std::vector<int> by_depth(k);
                    std::iota(by_depth.begin(), by_depth.end(), 0);
                    std::stable_sort(by_depth.begin(), by_depth.end(), [&] (int a, int b) { return _views[a].depth > _views[b].depth; });
                    for (auto v : by_depth) {
                        if (! _views[v].eligible)
                            continue;
                        std::vector<int> ancestors;
                        for (int u = _ntd.tree.parent[v] ; u >= 0 ; u = _ntd.tree.parent[u])
                            ancestors.push_back(u);
                        std::reverse(ancestors.begin(), ancestors.end());
                        for (auto u : ancestors) {
                            if (! _views[u].eligible || _ntd.tree.bags[u].size() != _ntd.tree.bags[v].size())
                                continue;
                            if (_views[u].below.size() <= _views[v].below.size())
                                continue;
                            if (auto perm = matching(u, v)) {
                                splice(u, v, *perm);
                                return true;
                            }
                        }
                    }
                    return false;
                }

                auto splice(int u, int v, const std::vector<int> & perm) -> void
                {
                    // parent graph with the separator bag(u) rooted
                    auto labels = _g.labels();
                    const auto & fresh_u = _views[u].fresh;
                    for (std::size_t i = 0 ; i < fresh_u.size() ; ++i)
                        labels[fresh_u[i]] = _fresh_base + 1 + static_cast<int>(i);
                    RootedGraph parent(_g.graph(), labels);

                    const auto & below_u = _views[u].below;
                    const auto & bag_u = _ntd.tree.bags[u];
                    std::vector<Vertex> right;
                    for (Vertex x = 0 ; x < _g.vertex_count() ; ++x)
                        if (! std::binary_search(below_u.begin(), below_u.end(), x) || std::binary_search(bag_u.begin(), bag_u.end(), x))
                            right.push_back(x);
                    auto sep = Separation::from_vertex_sets(parent, below_u, right);

                    auto [sub, sub_labels] = side(v);
                    const auto & fresh_v = _views[v].fresh;
                    for (std::size_t i = 0 ; i < fresh_v.size() ; ++i)
                        sub_labels[sub.old_to_new[fresh_v[i]]] = _fresh_base + 1 + perm[i];
                    RootedGraph replacement(sub.graph.graph(), sub_labels);
                    auto replaced = replace(sep, replacement);

                    // drop the temporary separator labels
                    auto final_labels = replaced.graph.labels();
                    for (auto & l : final_labels)
                        if (l > _fresh_base)
                            l = 0;
                    RootedGraph next(replaced.graph.graph(), final_labels);

                    // the decomposition: subtree of u swapped for the subtree of v
                    int k = _ntd.node_count();
                    std::vector<char> in_u(k, 0), in_v(k, 0);
                    for (int x = 0 ; x < k ; ++x)
                        for (int y = x ; y >= 0 ; y = _ntd.tree.parent[y]) {
                            if (y == v)
                                in_v[x] = 1;
                            if (y == u) {
                                in_u[x] = 1;
                                break;
                            }
                        }
                    std::vector<int> ids(k, -1);
                    int count = 0;
                    for (int x = 0 ; x < k ; ++x)
                        if (! in_u[x] || in_v[x])
                            ids[x] = count++;
                    NiceTreeDecomposition out;
                    out.tree.bags.resize(count);
                    out.tree.parent.assign(count, -1);
                    out.kind.resize(count);
                    out.vertex.resize(count);
                    out.children.resize(count);
                    auto map_vertex = [&] (int x, Vertex w) -> Vertex {
                        if (in_v[x])
                            return replaced.from_replacement[sub.old_to_new[w]];
                        return replaced.from_parent[w];
                    };
                    for (int x = 0 ; x < k ; ++x) {
                        if (ids[x] < 0)
                            continue;
                        int id = ids[x];
                        std::vector<Vertex> bag;
                        for (auto w : _ntd.tree.bags[x])
                            bag.push_back(map_vertex(x, w));
                        std::sort(bag.begin(), bag.end());
                        out.tree.bags[id] = std::move(bag);
                        int p = x == v ? _ntd.tree.parent[u] : _ntd.tree.parent[x];
                        out.tree.parent[id] = p < 0 ? -1 : ids[p];
                        out.kind[id] = _ntd.kind[x];
                        out.vertex[id] = _ntd.vertex[x] < 0 ? -1 : map_vertex(x, _ntd.vertex[x]);
                    }
                    for (int x = 0 ; x < k ; ++x) {
                        if (ids[x] < 0)
                            continue;
                        for (auto c : _ntd.children[x])
                            out.children[ids[x]].push_back(ids[c == u ? v : c]);
                    }
                    int root = _ntd.tree.root == u ? v : _ntd.tree.root;
                    out.tree.root = ids[root];
                    if (auto problem = nice_problem(next.graph(), out))
                        throw Error("representative: spliced decomposition is invalid: " + *problem);
                    if (next.vertex_count() >= _g.vertex_count())
                        throw Error("representative: splice did not shrink the graph");
                    _g = std::move(next);
                    _ntd = std::move(out);
                }
        };
    }

    auto representative(const RootedGraph & g, int delta, const NiceTreeDecomposition & ntd, const Ceilings & ceilings)
        -> RepresentativeResult
    {
        if (delta < 1)
            throw InvalidInput("delta must be positive");
        check_folio_roots(g, delta, ceilings);
        require_nice(g.graph(), ntd);
        auto injected = make_nice(ntd.tree, g.roots());
        check_ceiling("dp_width", ceilings.dp_width, injected.width());
        Splicer splicer(g, std::move(injected), delta, ceilings);
        return splicer.run();
    }
}
