#include <tmkit/disjoint_paths.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <queue>

namespace tmkit
{
    auto validate_instance(const DisjointPathsInstance & inst) -> void
    {
        std::vector<Vertex> all;
        for (auto [s, t] : inst.pairs) {
            if (! inst.graph.has_vertex(s) || ! inst.graph.has_vertex(t))
                throw InvalidInput("terminal out of range");
            all.push_back(s);
            all.push_back(t);
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw InvalidInput("terminals must be pairwise distinct");
    }

    namespace
    {
        constexpr int max_frontier = 31;
        constexpr int max_pairs = 8;

        // byte 0: finished pairs; byte 1 + i: slot i as degree | coloured << 2 | value << 3,
        // value being the colour or the partner id of an open end
        using Key = std::array<std::uint8_t, 32>;

        struct KeyHash
        {
            auto operator() (const Key & k) const -> std::size_t
            {
                std::uint64_t w[4];
                std::memcpy(w, k.data(), sizeof(w));
                std::uint64_t h = 0;
                for (auto x : w) {
                    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                    h *= 0xbf58476d1ce4e5b9ULL;
                    h ^= h >> 31;
                }
                return static_cast<std::size_t>(h);
            }
        };

        // open addressing over indices into a vector of keys
        class KeyIndex
        {
            public:
                explicit KeyIndex(std::vector<Key> & keys, std::size_t expected) :
                    _keys(keys)
                {
                    std::size_t cap = 16;
                    while (cap < 2 * expected)
                        cap *= 2;
                    _table.assign(cap, 0);
                }

                auto contains(const Key & k) const -> bool
                {
                    return slot(k) != nullptr && *slot(k) != 0;
                }

                // index of k, appending it when new; second is true for a new key
                auto insert(const Key & k) -> std::pair<std::uint32_t, bool>
                {
                    if (2 * (_keys.size() + 1) > _table.size())
                        grow();
                    auto * s = const_cast<std::uint32_t *>(slot(k));
                    if (*s != 0)
                        return { *s - 1, false };
                    _keys.push_back(k);
                    *s = static_cast<std::uint32_t>(_keys.size());
                    return { *s - 1, true };
                }

            private:
                std::vector<Key> & _keys;
                std::vector<std::uint32_t> _table;

                auto slot(const Key & k) const -> const std::uint32_t *
                {
                    std::size_t mask = _table.size() - 1;
                    for (std::size_t i = KeyHash{}(k) & mask ; ; i = (i + 1) & mask)
                        if (_table[i] == 0 || _keys[_table[i] - 1] == k)
                            return &_table[i];
                }

                auto grow() -> void
                {
                    std::vector<std::uint32_t> old(_table.size() * 2, 0);
                    old.swap(_table);
                    std::size_t mask = _table.size() - 1;
                    for (auto e : old)
                        if (e != 0) {
                            std::size_t i = KeyHash{}(_keys[e - 1]) & mask;
                            while (_table[i] != 0)
                                i = (i + 1) & mask;
                            _table[i] = e;
                        }
                }
        };

        constexpr auto degree_of(std::uint8_t b) -> int { return b & 3; }
        constexpr auto coloured(std::uint8_t b) -> bool { return (b & 4) != 0; }
        constexpr auto value_of(std::uint8_t b) -> int { return b >> 3; }
        constexpr auto make_slot(int deg, bool col, int value) -> std::uint8_t
        {
            return static_cast<std::uint8_t>(deg | (col ? 4 : 0) | (value << 3));
        }

        auto frontier_width(const Graph & g, const std::vector<int> & pos) -> int
        {
            int n = g.vertex_count();
            std::vector<int> first(n, -1), last(n, -1);
            std::vector<std::pair<int, int>> keys;
            for (auto [u, v] : g.edges())
                keys.emplace_back(std::max(pos[u], pos[v]), std::min(pos[u], pos[v]));
            std::sort(keys.begin(), keys.end());
            // a vertex is live from its first to its last edge in this order
            std::vector<int> delta(keys.size() + 1, 0);
            std::vector<int> first_i(n, -1), last_i(n, -1);
            std::vector<Vertex> at(n);
            for (Vertex v = 0 ; v < n ; ++v)
                at[pos[v]] = v;
            for (std::size_t i = 0 ; i < keys.size() ; ++i)
                for (int p : { keys[i].first, keys[i].second }) {
                    Vertex v = at[p];
                    if (first_i[v] == -1)
                        first_i[v] = static_cast<int>(i);
                    last_i[v] = static_cast<int>(i);
                }
            for (Vertex v = 0 ; v < n ; ++v)
                if (first_i[v] != -1) {
                    ++delta[first_i[v]];
                    --delta[last_i[v] + 1];
                }
            int best = 0, cur = 0;
            for (auto d : delta) {
                cur += d;
                best = std::max(best, cur);
            }
            return best;
        }

        auto choose_order(const Graph & g) -> std::vector<int>
        {
            int n = g.vertex_count();
            std::vector<int> best(n);
            for (int i = 0 ; i < n ; ++i)
                best[i] = i;
            int best_width = frontier_width(g, best);
            for (Vertex start = 0 ; start < n ; ++start) {
                std::vector<int> pos(n, -1);
                int next = 0;
                for (Vertex s0 = start, round = 0 ; round < n ; ++round, s0 = (s0 + 1) % n) {
                    if (pos[s0] != -1)
                        continue;
                    std::queue<Vertex> q;
                    q.push(s0);
                    pos[s0] = next++;
                    while (! q.empty()) {
                        auto v = q.front();
                        q.pop();
                        for (auto w : g.neighbours(v))
                            if (pos[w] == -1) {
                                pos[w] = next++;
                                q.push(w);
                            }
                    }
                }
                int width = frontier_width(g, pos);
                if (width < best_width) {
                    best_width = width;
                    best = pos;
                }
            }
            return best;
        }
    }

    auto disjoint_paths_brute(const DisjointPathsInstance & inst, const Ceilings & ceilings) -> std::optional<Linkage>
    {
        validate_instance(inst);
        const auto & g = inst.graph;
        int n = g.vertex_count();
        int k = static_cast<int>(inst.pairs.size());
        check_ceiling("disjoint_paths_vertices", ceilings.disjoint_paths_vertices, n);
        check_ceiling("disjoint_paths_pairs", std::min(ceilings.disjoint_paths_pairs, max_pairs), k);
        if (k == 0)
            return Linkage{};

        std::vector<int> colour(n, -1);
        for (int c = 0 ; c < k ; ++c) {
            colour[inst.pairs[c].first] = c;
            colour[inst.pairs[c].second] = c;
        }
        for (Vertex v = 0 ; v < n ; ++v)
            if (colour[v] != -1 && g.degree(v) == 0)
                return std::nullopt;

        auto pos = choose_order(g);
        std::vector<Edge> order = g.edges();
        std::sort(order.begin(), order.end(), [&] (const Edge & a, const Edge & b) {
            auto ka = std::make_pair(std::max(pos[a.first], pos[a.second]), std::min(pos[a.first], pos[a.second]));
            auto kb = std::make_pair(std::max(pos[b.first], pos[b.second]), std::min(pos[b.first], pos[b.second]));
            return ka < kb;
        });
        int m = static_cast<int>(order.size());
        std::vector<int> first(n, -1), last(n, -1);
        for (int i = 0 ; i < m ; ++i)
            for (auto v : { order[i].first, order[i].second }) {
                if (first[v] == -1)
                    first[v] = i;
                last[v] = i;
            }

        std::vector<Vertex> frontier;
        std::vector<char> terminal_slot;
        auto slot_of = [&] (Vertex v) {
            return static_cast<int>(std::find(frontier.begin(), frontier.end(), v) - frontier.begin());
        };

        // layers[i][j] = predecessor index in layer i - 1, times two, plus one if edge i-1 was taken
        std::vector<std::vector<std::uint32_t>> layers;
        std::vector<Key> current{ Key{} };
        layers.push_back({ 0 });
        const int full = (1 << k) - 1;

        for (int i = 0 ; i < m ; ++i) {
            auto [u, v] = order[i];
            std::vector<char> fresh(frontier.size() + 2, 0);
            for (auto x : { u, v })
                if (first[x] == i) {
                    auto it = std::lower_bound(frontier.begin(), frontier.end(), x, [&] (Vertex a, Vertex b) { return pos[a] < pos[b]; });
                    int at = static_cast<int>(it - frontier.begin());
                    frontier.insert(it, x);
                    terminal_slot.insert(terminal_slot.begin() + at, colour[x] != -1);
                    fresh.insert(fresh.begin() + at, 1);
                }
            int width = static_cast<int>(frontier.size());
            if (width > max_frontier)
                throw CeilingExceeded("disjoint_paths_frontier", max_frontier, width);
            fresh.resize(width);

            std::vector<char> forgotten(width, 0);
            std::vector<Vertex> next_frontier;
            std::vector<char> next_terminal;
            for (int s = 0 ; s < width ; ++s) {
                if (last[frontier[s]] == i)
                    forgotten[s] = 1;
                else {
                    next_frontier.push_back(frontier[s]);
                    next_terminal.push_back(terminal_slot[s]);
                }
            }

            auto open = [&] (int s, std::uint8_t b) {
                return terminal_slot[s] ? degree_of(b) == 0 : degree_of(b) == 1;
            };

            std::vector<Key> next_states;
            KeyIndex index(next_states, current.size() * 2);
            std::vector<std::uint32_t> preds;
            int su = slot_of(u), sv = slot_of(v);

            auto emit = [&] (const std::uint8_t * d, int done, std::uint32_t pred, bool took) {
                Key out{};
                out[0] = static_cast<std::uint8_t>(done);
                int remap[16];
                std::fill(std::begin(remap), std::end(remap), -1);
                int next = 0, o = 1;
                for (int s = 0 ; s < width ; ++s) {
                    auto b = d[s];
                    int deg = degree_of(b);
                    if (forgotten[s]) {
                        bool ok = terminal_slot[s] ? deg == 1 : (deg == 0 || deg == 2);
                        if (! ok)
                            return;
                        continue;
                    }
                    if (! open(s, b))
                        b = static_cast<std::uint8_t>(deg);
                    else if (! coloured(b)) {
                        int & id = remap[value_of(b)];
                        if (id == -1)
                            id = next++;
                        b = make_slot(deg, false, id);
                    }
                    out[o++] = b;
                }
                if (index.insert(out).second)
                    preds.push_back(pred * 2 + (took ? 1 : 0));
            };

            std::uint8_t base[max_frontier], d[max_frontier];
            for (std::uint32_t j = 0 ; j < current.size() ; ++j) {
                const auto & cur = current[j];
                int done = cur[0];
                for (int s = 0, q = 1 ; s < width ; ++s) {
                    if (fresh[s])
                        base[s] = terminal_slot[s] ? make_slot(0, true, colour[frontier[s]]) : 0;
                    else
                        base[s] = cur[q++];
                }

                // a vertex-minimum linkage has no chords: an edge between two ends already
                // known to lie on one path must be taken, and two ends of one floating
                // segment can never be adjacent
                bool forced = false;
                if (open(su, base[su]) && open(sv, base[sv]) && value_of(base[su]) == value_of(base[sv])) {
                    if (! coloured(base[su]) && ! coloured(base[sv]))
                        continue;
                    forced = coloured(base[su]) && coloured(base[sv]);
                }
                if (! forced)
                    emit(base, done, j, false);

                auto can_take = [&] (int s) {
                    return terminal_slot[s] ? degree_of(base[s]) == 0 : degree_of(base[s]) < 2;
                };
                if (! can_take(su) || ! can_take(sv))
                    continue;

                std::copy(base, base + width, d);
                // the far end of a side: (0, slot) for a segment end or the vertex itself, (1, colour) for a coloured end
                auto far_end = [&] (int s) -> std::pair<int, int> {
                    auto b = d[s];
                    if (! terminal_slot[s] && degree_of(b) == 0)
                        return { 0, s };
                    if (coloured(b))
                        return { 1, value_of(b) };
                    for (int t = 0 ; t < width ; ++t)
                        if (t != s && open(t, d[t]) && ! coloured(d[t]) && value_of(d[t]) == value_of(b))
                            return { 0, t };
                    throw Error("disjoint_paths_brute: dangling segment end");
                };
                auto fu = far_end(su), fv = far_end(sv);
                if (fu.first == 0 && fu.second == sv && ! (! terminal_slot[su] && degree_of(d[su]) == 0))
                    continue;
                d[su] = static_cast<std::uint8_t>(d[su] + 1);
                d[sv] = static_cast<std::uint8_t>(d[sv] + 1);
                int next_done = done;
                if (fu.first == 1 && fv.first == 1) {
                    if (fu.second != fv.second)
                        continue;
                    next_done |= 1 << fu.second;
                }
                else if (fu.first == 1 || fv.first == 1) {
                    auto colour_end = fu.first == 1 ? fu : fv;
                    auto slot_end = fu.first == 1 ? fv : fu;
                    auto & target = d[slot_end.second];
                    target = make_slot(degree_of(target), true, colour_end.second);
                }
                else {
                    d[fu.second] = make_slot(degree_of(d[fu.second]), false, 15);
                    d[fv.second] = make_slot(degree_of(d[fv.second]), false, 15);
                }
                emit(d, next_done, j, true);
            }

            // a used inner vertex (degree 2) is dominated by the same state with that vertex unused
            std::vector<Key> kept;
            std::vector<std::uint32_t> kept_preds;
            int next_width = static_cast<int>(next_frontier.size());
            // key positions of the two endpoints when they stay on the frontier
            int touched[2] = { -1, -1 };
            for (int t = 0 ; t < 2 ; ++t) {
                Vertex x = t == 0 ? u : v;
                auto it = std::find(next_frontier.begin(), next_frontier.end(), x);
                if (it != next_frontier.end())
                    touched[t] = 1 + static_cast<int>(it - next_frontier.begin());
            }
            for (std::size_t j = 0 ; j < next_states.size() ; ++j) {
                const auto & key = next_states[j];
                bool dominated = false;
                Key all = key;
                for (int s = 1 ; s <= next_width ; ++s)
                    if (key[s] == 2)
                        all[s] = 0;
                for (int s : touched)
                    if (! dominated && s >= 0 && key[s] == 2) {
                        Key variant = key;
                        variant[s] = 0;
                        dominated = index.contains(variant);
                    }
                if (! dominated && all != key)
                    dominated = index.contains(all);
                if (dominated)
                    continue;
                kept.push_back(key);
                kept_preds.push_back(preds[j]);
            }

            check_ceiling("disjoint_paths_states", ceilings.disjoint_paths_states, static_cast<long long>(kept.size()));
            current = std::move(kept);
            layers.push_back(std::move(kept_preds));
            frontier = std::move(next_frontier);
            terminal_slot = std::move(next_terminal);
        }

        std::optional<std::uint32_t> final_state;
        for (std::uint32_t j = 0 ; j < current.size() ; ++j)
            if (current[j][0] == full) {
                final_state = j;
                break;
            }
        if (! final_state)
            return std::nullopt;

        std::vector<std::vector<Vertex>> adj(n);
        std::uint32_t j = *final_state;
        for (int i = m ; i >= 1 ; --i) {
            auto p = layers[i][j];
            if (p & 1) {
                auto [a, b] = order[i - 1];
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            j = p / 2;
        }
        Linkage paths;
        for (auto [s, t] : inst.pairs) {
            std::vector<Vertex> path{ s };
            Vertex prev = -1, cur = s;
            while (cur != t) {
                Vertex nxt = -1;
                for (auto w : adj[cur])
                    if (w != prev) {
                        nxt = w;
                        break;
                    }
                if (nxt == -1)
                    throw Error("disjoint_paths_brute: broken reconstruction");
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            paths.push_back(std::move(path));
        }
        if (! verify_linkage(inst, paths))
            throw Error("disjoint_paths_brute: reconstructed linkage fails verification");
        return paths;
    }

    auto verify_linkage(const DisjointPathsInstance & inst, const Linkage & paths) -> bool
    {
        if (paths.size() != inst.pairs.size())
            return false;
        std::vector<char> used(inst.graph.vertex_count(), 0);
        for (std::size_t i = 0 ; i < paths.size() ; ++i) {
            const auto & p = paths[i];
            if (p.empty() || p.front() != inst.pairs[i].first || p.back() != inst.pairs[i].second)
                return false;
            for (std::size_t j = 0 ; j < p.size() ; ++j) {
                if (! inst.graph.has_vertex(p[j]) || used[p[j]])
                    return false;
                used[p[j]] = 1;
                if (j + 1 < p.size() && ! inst.graph.adjacent(p[j], p[j + 1]))
                    return false;
            }
        }
        return true;
    }
}
