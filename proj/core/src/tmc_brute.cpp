#include <tmkit/tmc_brute.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <unordered_set>

namespace tmkit
{
    namespace
    {
        struct Step
        {
            bool place;
            Vertex a, b;    // place: b is the vertex to place; edge: a placed earlier
            int edge;
        };

        class Search
        {
            public:
                Search(const RootedGraph & g, const RootedGraph & h, const TmcOptions & options) :
                    _g(g), _h(h), _gg(g.graph()), _hg(h.graph()), _options(options)
                {
                    plan();
                }

                auto run() -> std::optional<Witness>
                {
                    int n = _gg.vertex_count();
                    _used.assign(n, 0);
                    _phi.assign(_hg.vertex_count(), -1);
                    _paths.assign(_hg.edge_count(), {});
                    _pending.assign(_hg.vertex_count(), 0);
                    for (Vertex x = 0 ; x < _hg.vertex_count() ; ++x)
                        _pending[x] = _hg.degree(x);
                    _memo = n <= 64;
                    if (! step(0))
                        return std::nullopt;
                    Witness w;
                    w.branch = _phi;
                    w.paths = _paths;
                    // isolated unrooted pattern vertices take the lowest unused host vertices
                    for (Vertex x = 0 ; x < _hg.vertex_count() ; ++x)
                        if (w.branch[x] == -1)
                            for (Vertex v = 0 ; v < n ; ++v)
                                if (! _used[v]) {
                                    _used[v] = 1;
                                    w.branch[x] = v;
                                    break;
                                }
                    return w;
                }

            private:
                const RootedGraph & _g;
                const RootedGraph & _h;
                const Graph & _gg;
                const Graph & _hg;
                const TmcOptions & _options;

                std::vector<Step> _steps;
                int _isolated_free = 0;
                std::vector<int> _used;
                std::vector<Vertex> _phi;
                std::vector<std::vector<Vertex>> _paths;
                std::vector<int> _pending;
                int _internal = 0;
                bool _memo = false;
                std::unordered_set<std::string> _failed;

                auto plan() -> void
                {
                    int k = _hg.vertex_count();
                    std::vector<char> placed(k, 0);
                    std::vector<int> position(k, -1);
                    std::vector<Vertex> order;
                    for (Vertex x = 0 ; x < k ; ++x)
                        if (_hg.degree(x) == 0 && ! _h.is_root(x))
                            ++_isolated_free;
                    while (true) {
                        Vertex best = -1;
                        std::tuple<int, int, int> best_key{ -1, -1, -1 };
                        for (Vertex x = 0 ; x < k ; ++x) {
                            if (placed[x] || (_hg.degree(x) == 0 && ! _h.is_root(x)))
                                continue;
                            int placed_nb = 0;
                            for (auto y : _hg.neighbours(x))
                                placed_nb += placed[y];
                            std::tuple<int, int, int> key{ placed_nb, _h.is_root(x) ? 1 : 0, _hg.degree(x) };
                            if (best == -1 || key > best_key) {
                                best = x;
                                best_key = key;
                            }
                        }
                        if (best == -1)
                            break;
                        placed[best] = 1;
                        position[best] = static_cast<int>(order.size());
                        order.push_back(best);
                    }

                    const auto & edges = _hg.edges();
                    for (auto b : order) {
                        std::vector<std::pair<int, Vertex>> earlier;
                        for (auto a : _hg.neighbours(b))
                            if (position[a] < position[b])
                                earlier.emplace_back(position[a], a);
                        std::sort(earlier.begin(), earlier.end());
                        if (earlier.empty() || _h.is_root(b))
                            _steps.push_back(Step{ true, -1, b, -1 });
                        for (auto [_, a] : earlier) {
                            auto e = make_edge(a, b);
                            int idx = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
                            _steps.push_back(Step{ false, a, b, idx });
                        }
                    }
                }

                auto candidate(Vertex x, Vertex v) const -> bool
                {
                    if (_used[v])
                        return false;
                    if (_gg.degree(v) < _hg.degree(x))
                        return false;
                    if (_h.is_root(x))
                        return _g.label(v) == _h.label(x);
                    return true;
                }

                auto key(int s) const -> std::string
                {
                    std::string k;
                    k.reserve(16 + _phi.size() * 2);
                    k.push_back(static_cast<char>(s & 0xff));
                    k.push_back(static_cast<char>(s >> 8));
                    std::uint64_t mask = 0;
                    for (std::size_t v = 0 ; v < _used.size() ; ++v)
                        if (_used[v])
                            mask |= std::uint64_t(1) << v;
                    k.append(reinterpret_cast<const char *>(&mask), sizeof(mask));
                    for (std::size_t x = 0 ; x < _phi.size() ; ++x)
                        k.push_back(static_cast<char>(_pending[x] > 0 ? _phi[x] : -2));
                    if (_options.max_internal)
                        k.push_back(static_cast<char>(_internal));
                    return k;
                }

                // every placed pattern vertex still has room for its unrealised edges
                auto feasible() const -> bool
                {
                    for (Vertex x = 0 ; x < _hg.vertex_count() ; ++x) {
                        if (_phi[x] == -1 || _pending[x] == 0)
                            continue;
                        int room = 0;
                        for (auto w : _gg.neighbours(_phi[x])) {
                            if (! _used[w])
                                ++room;
                            else if (_used[w] == 1)
                                for (auto y : _hg.neighbours(x))
                                    if (_phi[y] == w && _paths[edge_index(x, y)].empty()) {
                                        ++room;
                                        break;
                                    }
                        }
                        if (room < _pending[x])
                            return false;
                    }
                    if (_options.max_internal && _internal > *_options.max_internal)
                        return false;
                    return true;
                }

                auto edge_index(Vertex x, Vertex y) const -> int
                {
                    const auto & edges = _hg.edges();
                    auto e = make_edge(x, y);
                    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
                }

                auto connectable(Vertex from, Vertex to) const -> bool
                {
                    if (_gg.adjacent(from, to))
                        return true;
                    std::vector<char> seen(_gg.vertex_count(), 0);
                    std::vector<Vertex> stack;
                    for (auto w : _gg.neighbours(from))
                        if (! _used[w] && ! seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                    while (! stack.empty()) {
                        auto v = stack.back();
                        stack.pop_back();
                        for (auto w : _gg.neighbours(v)) {
                            if (w == to)
                                return true;
                            if (! _used[w] && ! seen[w]) {
                                seen[w] = 1;
                                stack.push_back(w);
                            }
                        }
                    }
                    return false;
                }

                auto step(int s) -> bool
                {
                    if (s == static_cast<int>(_steps.size())) {
                        int free = 0;
                        for (auto u : _used)
                            free += (u == 0);
                        return free >= _isolated_free;
                    }
                    if (! feasible())
                        return false;
                    std::string k;
                    if (_memo) {
                        k = key(s);
                        if (_failed.contains(k))
                            return false;
                    }
                    bool ok = _steps[s].place ? place(s) : route(s);
                    if (! ok && _memo)
                        _failed.insert(std::move(k));
                    return ok;
                }

                auto place(int s) -> bool
                {
                    Vertex x = _steps[s].b;
                    if (_phi[x] != -1)
                        return step(s + 1);
                    for (Vertex v = 0 ; v < _gg.vertex_count() ; ++v) {
                        if (! candidate(x, v))
                            continue;
                        _phi[x] = v;
                        _used[v] = 1;
                        if (step(s + 1))
                            return true;
                        _used[v] = 0;
                        _phi[x] = -1;
                    }
                    return false;
                }

                auto route(int s) -> bool
                {
                    const auto & st = _steps[s];
                    Vertex from = _phi[st.a];
                    if (_phi[st.b] != -1 && ! connectable(from, _phi[st.b]))
                        return false;
                    std::vector<Vertex> path{ from };
                    bool leaf = _phi[st.b] == -1 && _hg.degree(st.b) == 1 && ! _h.is_root(st.b);
                    return extend(s, path, leaf);
                }

                auto finish_edge(int s, const std::vector<Vertex> & path) -> bool
                {
                    const auto & st = _steps[s];
                    _paths[st.edge] = path;
                    --_pending[st.a];
                    --_pending[st.b];
                    if (step(s + 1))
                        return true;
                    ++_pending[st.a];
                    ++_pending[st.b];
                    _paths[st.edge].clear();
                    return false;
                }

                auto extend(int s, std::vector<Vertex> & path, bool leaf) -> bool
                {
                    const auto & st = _steps[s];
                    Vertex cur = path.back();
                    Vertex target = _phi[st.b];
                    bool open = target == -1;
                    for (auto w : _gg.neighbours(cur)) {
                        if (! open) {
                            if (w == target) {
                                path.push_back(w);
                                bool ok = finish_edge(s, path);
                                path.pop_back();
                                if (ok)
                                    return true;
                                continue;
                            }
                        }
                        if (_used[w])
                            continue;
                        if (open && candidate(st.b, w)) {
                            _phi[st.b] = w;
                            _used[w] = 1;
                            path.push_back(w);
                            bool ok = finish_edge(s, path);
                            path.pop_back();
                            if (ok)
                                return true;
                            _used[w] = 0;
                            _phi[st.b] = -1;
                        }
                        if (leaf)
                            continue;
                        if (_options.max_internal && _internal + 1 > *_options.max_internal)
                            continue;
                        if (! open && ! connectable_via(w, target))
                            continue;
                        _used[w] = 2;
                        ++_internal;
                        path.push_back(w);
                        if (extend(s, path, leaf))
                            return true;
                        path.pop_back();
                        --_internal;
                        _used[w] = 0;
                    }
                    return false;
                }

                // can `to` be reached from unused vertex `from` through unused vertices
                auto connectable_via(Vertex from, Vertex to) -> bool
                {
                    _used[from] = 2;
                    bool ok = connectable(from, to);
                    _used[from] = 0;
                    return ok;
                }
        };
    }

    auto tmc_brute(const RootedGraph & g, const RootedGraph & h, const Ceilings & ceilings, const TmcOptions & options) -> std::optional<Witness>
    {
        check_ceiling("tmc_brute_vertices", ceilings.tmc_brute_vertices, g.vertex_count());
        check_ceiling("pattern_vertices", ceilings.pattern_vertices, h.vertex_count());
        if (h.vertex_count() > g.vertex_count())
            return std::nullopt;
        Search search(g, h, options);
        auto w = search.run();
        if (w && ! is_valid_witness(g, h, *w))
            throw Error("tmc_brute produced an invalid witness: " + *witness_problem(g, h, *w));
        return w;
    }

    auto tmc_brute(const RootedGraph & g, const Pattern & h, const Ceilings & ceilings, const TmcOptions & options) -> std::optional<Witness>
    {
        return tmc_brute(g, h.graph(), ceilings, options);
    }

    auto internal_vertex_count(const Witness & w) -> int
    {
        int total = 0;
        for (auto & p : w.paths)
            total += std::max(0, static_cast<int>(p.size()) - 2);
        return total;
    }
}
