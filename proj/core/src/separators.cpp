#include <tmkit/separators.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <set>

namespace tmkit
{
    namespace
    {
        constexpr int infinite = 1 << 29;

        auto as_mask(const Graph & g, std::span<const Vertex> set, const char * what) -> std::vector<char>
        {
            std::vector<char> mask(g.vertex_count(), 0);
            for (auto v : set) {
                if (! g.has_vertex(v))
                    throw InvalidInput(std::string(what) + " contains a vertex out of range");
                mask[v] = 1;
            }
            return mask;
        }

        auto members(const std::vector<char> & mask) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (Vertex v = 0 ; v < static_cast<Vertex>(mask.size()) ; ++v)
                if (mask[v])
                    out.push_back(v);
            return out;
        }

        auto sorted_set(std::span<const Vertex> s) -> std::vector<Vertex>
        {
            std::vector<Vertex> out(s.begin(), s.end());
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }

        auto reach_mask(const Graph & g, const std::vector<char> & from, const std::vector<char> & blocked) -> std::vector<char>
        {
            std::vector<char> seen(g.vertex_count(), 0);
            std::vector<Vertex> stack;
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (from[v] && ! blocked[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : g.neighbours(v))
                    if (! seen[w] && ! blocked[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return seen;
        }

        // X and Y joined by an edge or sharing a vertex: nothing separates them
        auto touching(const Graph & g, const std::vector<char> & x, const std::vector<char> & y, const std::vector<char> & removed) -> bool
        {
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
                if (! x[v] || removed[v])
                    continue;
                if (y[v])
                    return true;
                for (auto w : g.neighbours(v))
                    if (y[w] && ! removed[w])
                        return true;
            }
            return false;
        }

        // unit vertex capacities outside X and Y, vertex v split into 2v -> 2v + 1
        class Flow
        {
            public:
                Flow(const Graph & g, const std::vector<char> & x, const std::vector<char> & y, const std::vector<char> & removed) :
                    _n(g.vertex_count())
                {
                    _adj.assign(2 * _n + 2, {});
                    for (Vertex v = 0 ; v < _n ; ++v) {
                        if (removed[v])
                            continue;
                        add(2 * v, 2 * v + 1, x[v] || y[v] ? infinite : 1);
                        if (x[v])
                            add(source(), 2 * v, infinite);
                        if (y[v])
                            add(2 * v + 1, sink(), infinite);
                    }
                    for (auto [u, v] : g.edges()) {
                        if (removed[u] || removed[v])
                            continue;
                        add(2 * u + 1, 2 * v, infinite);
                        add(2 * v + 1, 2 * u, infinite);
                    }
                }

                // augments until no path remains or the flow exceeds limit
                auto run(int limit) -> int
                {
                    int flow = 0;
                    while (flow <= limit && augment())
                        ++flow;
                    return flow;
                }

                // vertices whose split arc is saturated with the tail reachable from the source
                auto cut_near_source() const -> std::vector<Vertex>
                {
                    auto seen = residual_from_source();
                    std::vector<Vertex> cut;
                    for (Vertex v = 0 ; v < _n ; ++v)
                        if (seen[2 * v] && ! seen[2 * v + 1])
                            cut.push_back(v);
                    return cut;
                }

                auto cut_near_sink() const -> std::vector<Vertex>
                {
                    auto seen = residual_to_sink();
                    std::vector<Vertex> cut;
                    for (Vertex v = 0 ; v < _n ; ++v)
                        if (! seen[2 * v] && seen[2 * v + 1])
                            cut.push_back(v);
                    return cut;
                }

            private:
                struct Arc
                {
                    int to, cap, rev;
                };

                int _n;
                std::vector<std::vector<Arc>> _adj;

                auto source() const -> int { return 2 * _n; }
                auto sink() const -> int { return 2 * _n + 1; }

                auto add(int a, int b, int cap) -> void
                {
                    _adj[a].push_back({ b, cap, static_cast<int>(_adj[b].size()) });
                    _adj[b].push_back({ a, 0, static_cast<int>(_adj[a].size()) - 1 });
                }

                auto augment() -> bool
                {
                    std::vector<std::pair<int, int>> from(_adj.size(), { -1, -1 });
                    std::vector<int> queue{ source() };
                    from[source()] = { source(), -1 };
                    for (std::size_t i = 0 ; i < queue.size() && from[sink()].first < 0 ; ++i) {
                        int a = queue[i];
                        for (int j = 0 ; j < static_cast<int>(_adj[a].size()) ; ++j) {
                            auto & arc = _adj[a][j];
                            if (arc.cap > 0 && from[arc.to].first < 0) {
                                from[arc.to] = { a, j };
                                queue.push_back(arc.to);
                            }
                        }
                    }
                    if (from[sink()].first < 0)
                        return false;
                    for (int b = sink() ; b != source() ; ) {
                        auto [a, j] = from[b];
                        auto & arc = _adj[a][j];
                        arc.cap -= 1;
                        _adj[b][arc.rev].cap += 1;
                        b = a;
                    }
                    return true;
                }

                auto residual_from_source() const -> std::vector<char>
                {
                    std::vector<char> seen(_adj.size(), 0);
                    std::vector<int> stack{ source() };
                    seen[source()] = 1;
                    while (! stack.empty()) {
                        int a = stack.back();
                        stack.pop_back();
                        for (auto & arc : _adj[a])
                            if (arc.cap > 0 && ! seen[arc.to]) {
                                seen[arc.to] = 1;
                                stack.push_back(arc.to);
                            }
                    }
                    return seen;
                }

                auto residual_to_sink() const -> std::vector<char>
                {
                    std::vector<char> seen(_adj.size(), 0);
                    std::vector<int> stack{ sink() };
                    seen[sink()] = 1;
                    while (! stack.empty()) {
                        int b = stack.back();
                        stack.pop_back();
                        for (auto & back : _adj[b]) {
                            // residual arc back.to -> b exists when the forward arc has capacity left
                            const auto & forward = _adj[back.to][back.rev];
                            if (forward.cap > 0 && ! seen[back.to]) {
                                seen[back.to] = 1;
                                stack.push_back(back.to);
                            }
                        }
                    }
                    return seen;
                }
        };

        struct Query
        {
            std::vector<char> x, y;
        };

        auto make_query(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> Query
        {
            Query q{ as_mask(g, x, "X"), as_mask(g, y, "Y") };
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (q.x[v] && q.y[v])
                    throw InvalidInput("X and Y must be disjoint");
            return q;
        }

        auto check_candidate(const Graph & g, const Query & q, std::span<const Vertex> s) -> std::vector<char>
        {
            auto mask = as_mask(g, s, "separator");
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (mask[v] && (q.x[v] || q.y[v]))
                    throw InvalidInput("a separator may not contain vertices of X or Y");
            return mask;
        }

        auto separates(const Graph & g, const Query & q, const std::vector<char> & s) -> bool
        {
            auto seen = reach_mask(g, q.x, s);
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (seen[v] && q.y[v])
                    return false;
            return true;
        }

        auto minimal(const Graph & g, const Query & q, std::vector<char> s) -> bool
        {
            if (! separates(g, q, s))
                return false;
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v) {
                if (! s[v])
                    continue;
                s[v] = 0;
                bool still = separates(g, q, s);
                s[v] = 1;
                if (still)
                    return false;
            }
            return true;
        }

        auto furthest(const Graph & g, const std::vector<char> & x, const std::vector<char> & y, const std::vector<char> & removed,
                int limit) -> std::pair<int, std::vector<Vertex>>
        {
            Flow flow(g, x, y, removed);
            int value = flow.run(limit);
            if (value > limit)
                return { value, {} };
            return { value, flow.cut_near_sink() };
        }

        auto important(const Graph & g, const Query & q, const std::vector<char> & s) -> bool
        {
            if (! minimal(g, q, s))
                return false;
            int size = static_cast<int>(std::count(s.begin(), s.end(), 1));
            auto reach = reach_mask(g, q.x, s);
            std::vector<char> none(g.vertex_count(), 0);
            auto [value, cut] = furthest(g, reach, q.y, none, size);
            return value == size && cut == members(s);
        }
    }

    auto min_cut(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> MinCut
    {
        auto q = make_query(g, x, y);
        std::vector<char> none(g.vertex_count(), 0);
        if (touching(g, q.x, q.y, none))
            throw PreconditionFailed("an edge joins X and Y; no separator exists");
        Flow flow(g, q.x, q.y, none);
        MinCut out;
        out.size = flow.run(g.vertex_count());
        out.separator = flow.cut_near_source();
        return out;
    }

    auto reach_set(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> s) -> std::vector<Vertex>
    {
        return members(reach_mask(g, as_mask(g, x, "X"), as_mask(g, s, "separator")));
    }

    auto is_separator(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool
    {
        auto q = make_query(g, x, y);
        auto mask = as_mask(g, s, "separator");
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            if (mask[v] && (q.x[v] || q.y[v]))
                return false;
        return separates(g, q, mask);
    }

    auto is_minimal_separator(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool
    {
        if (! is_separator(g, x, y, s))
            return false;
        return minimal(g, make_query(g, x, y), as_mask(g, s, "separator"));
    }

    auto unique_min_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> ImportantSeparator
    {
        auto q = make_query(g, x, y);
        std::vector<char> none(g.vertex_count(), 0);
        if (touching(g, q.x, q.y, none))
            throw PreconditionFailed("an edge joins X and Y; no separator exists");
        auto [value, cut] = furthest(g, q.x, q.y, none, g.vertex_count());
        ImportantSeparator out;
        out.vertices = cut;
        out.reach = reach_set(g, x, cut);
        return out;
    }

    auto is_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s) -> bool
    {
        auto q = make_query(g, x, y);
        auto mask = as_mask(g, s, "separator");
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            if (mask[v] && (q.x[v] || q.y[v]))
                return false;
        return important(g, q, mask);
    }

    auto enumerate_important(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, int k) -> std::vector<ImportantSeparator>
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        auto q = make_query(g, x, y);
        if (x.empty() || y.empty())
            return {};
        std::set<std::vector<Vertex>> found;
        std::vector<char> removed(g.vertex_count(), 0);
        std::vector<Vertex> chosen;
        auto rec = [&] (auto & self, const std::vector<char> & source, int budget) -> void {
            if (touching(g, source, q.y, removed))
                return;
            auto [value, cut] = furthest(g, source, q.y, removed, budget);
            if (value > budget)
                return;
            if (value == 0) {
                found.insert(sorted_set(chosen));
                return;
            }
            Vertex v = cut.front();
            removed[v] = 1;
            chosen.push_back(v);
            self(self, source, budget - 1);
            chosen.pop_back();
            removed[v] = 0;

            auto blocked = removed;
            for (auto c : cut)
                blocked[c] = 1;
            auto grown = reach_mask(g, source, blocked);
            grown[v] = 1;
            self(self, grown, budget);
        };
        rec(rec, q.x, k);

        std::vector<ImportantSeparator> out;
        for (auto & s : found) {
            auto mask = as_mask(g, s, "separator");
            if (important(g, q, mask))
                out.push_back({ s, reach_set(g, x, s) });
        }
        return out;
    }

    auto dominates(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y, std::span<const Vertex> s1,
            std::span<const Vertex> s2) -> bool
    {
        auto q = make_query(g, x, y);
        auto m1 = check_candidate(g, q, s1), m2 = check_candidate(g, q, s2);
        if (! minimal(g, q, m1) || ! minimal(g, q, m2))
            throw PreconditionFailed("dominates expects two minimal separators");
        auto r1 = reach_mask(g, q.x, m1), r2 = reach_mask(g, q.x, m2);
        auto size1 = std::count(m1.begin(), m1.end(), 1), size2 = std::count(m2.begin(), m2.end(), 1);
        if (size1 > size2 || r1 == r2)
            return false;
        for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
            if (r2[v] && ! r1[v])
                return false;
        return true;
    }

    auto supreach_check(const Graph & g, std::span<const Vertex> z, std::span<const Vertex> inner, std::span<const Vertex> x,
            std::span<const Vertex> y) -> SupreachReport
    {
        auto q = make_query(g, z, inner);
        if (inner.empty())
            throw PreconditionFailed("V' must be non-empty");
        {
            std::vector<char> outside(g.vertex_count(), 1);
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (q.y[v])
                    outside[v] = 0;
            std::vector<char> start(g.vertex_count(), 0);
            start[inner.front()] = 1;
            auto seen = reach_mask(g, start, outside);
            if (seen != q.y)
                throw PreconditionFailed("G[V'] must be connected");
        }
        auto mx = check_candidate(g, q, x), my = check_candidate(g, q, y);
        if (! minimal(g, q, mx) || ! minimal(g, q, my))
            throw PreconditionFailed("X and Y must be minimal Z-V' separators");
        if (! dominates(g, z, inner, y, x))
            throw PreconditionFailed("Y must dominate X");

        auto side = [&] (const std::vector<char> & s) {
            auto c = reach_mask(g, q.y, s);
            std::vector<Vertex> a;
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                if (! c[v])
                    a.push_back(v);
            return a;
        };
        SupreachReport report;
        report.a_x = side(mx);
        report.a_y = side(my);
        report.holds = report.a_x.size() < report.a_y.size()
            && std::includes(report.a_y.begin(), report.a_y.end(), report.a_x.begin(), report.a_x.end());
        return report;
    }
}
