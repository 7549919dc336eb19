#include <tmkit/treewidth.hpp>
#include <tmkit/error.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/minor_brute.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tmkit
{
    auto TreeDecomposition::width() const -> int
    {
        int w = -1;
        for (auto & b : bags)
            w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }

    auto TreeDecomposition::children() const -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out(bags.size());
        for (int x = 0 ; x < node_count() ; ++x)
            if (parent[x] >= 0)
                out[parent[x]].push_back(x);
        return out;
    }

    auto decomposition_problem(const Graph & g, const TreeDecomposition & td) -> std::optional<std::string>
    {
        int k = td.node_count(), n = g.vertex_count();
        if (static_cast<int>(td.parent.size()) != k)
            return "parent list and bag list differ in length";
        if (k == 0)
            return n == 0 ? std::nullopt : std::optional<std::string>("no bags");
        if (td.root < 0 || td.root >= k || td.parent[td.root] != -1)
            return "root is not a parentless node";
        for (int x = 0 ; x < k ; ++x) {
            if (x != td.root && (td.parent[x] < 0 || td.parent[x] >= k))
                return "node " + std::to_string(x) + " has no valid parent";
            const auto & b = td.bags[x];
            for (std::size_t i = 0 ; i < b.size() ; ++i) {
                if (! g.has_vertex(b[i]))
                    return "bag " + std::to_string(x) + " holds a non-vertex";
                if (i > 0 && b[i - 1] >= b[i])
                    return "bag " + std::to_string(x) + " is not a sorted set";
            }
        }
        // every node reaches the root without cycles
        std::vector<int> state(k, 0);
        for (int x = 0 ; x < k ; ++x) {
            std::vector<int> trail;
            int y = x;
            while (y != -1 && state[y] == 0) {
                state[y] = 1;
                trail.push_back(y);
                y = td.parent[y];
            }
            if (y != -1 && state[y] == 1)
                return "parent links contain a cycle";
            for (auto z : trail)
                state[z] = 2;
        }

        auto in_bag = [&] (int x, Vertex v) { return std::binary_search(td.bags[x].begin(), td.bags[x].end(), v); };
        std::vector<int> tops(n, 0), seen(n, 0);
        for (int x = 0 ; x < k ; ++x)
            for (auto v : td.bags[x]) {
                ++seen[v];
                if (td.parent[x] == -1 || ! in_bag(td.parent[x], v))
                    ++tops[v];
            }
        for (Vertex v = 0 ; v < n ; ++v) {
            if (seen[v] == 0)
                return "vertex " + std::to_string(v) + " is in no bag";
            if (tops[v] != 1)
                return "bags containing vertex " + std::to_string(v) + " are not connected";
        }
        for (auto [u, v] : g.edges()) {
            bool covered = false;
            for (int x = 0 ; x < k && ! covered ; ++x)
                covered = in_bag(x, u) && in_bag(x, v);
            if (! covered)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
        }
        return std::nullopt;
    }

    auto is_valid_decomposition(const Graph & g, const TreeDecomposition & td) -> bool
    {
        return ! decomposition_problem(g, td);
    }

    auto min_fill_order(const Graph & g) -> std::vector<Vertex>
    {
        int n = g.vertex_count();
        std::vector<std::set<Vertex>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<char> gone(n, 0);
        std::vector<Vertex> order;
        for (int step = 0 ; step < n ; ++step) {
            Vertex best = -1;
            std::pair<long long, int> best_key{ 0, 0 };
            for (Vertex v = 0 ; v < n ; ++v) {
                if (gone[v])
                    continue;
                long long fill = 0;
                for (auto a : adj[v])
                    for (auto b : adj[v])
                        if (a < b && ! adj[a].contains(b))
                            ++fill;
                std::pair<long long, int> key{ fill, static_cast<int>(adj[v].size()) };
                if (best == -1 || key < best_key) {
                    best = v;
                    best_key = key;
                }
            }
            for (auto a : adj[best])
                for (auto b : adj[best])
                    if (a != b)
                        adj[a].insert(b);
            for (auto a : adj[best])
                adj[a].erase(best);
            adj[best].clear();
            gone[best] = 1;
            order.push_back(best);
        }
        return order;
    }

    auto decomposition_from_order(const Graph & g, std::span<const Vertex> order) -> TreeDecomposition
    {
        int n = g.vertex_count();
        if (static_cast<int>(order.size()) != n)
            throw InvalidInput("elimination order must list every vertex once");
        TreeDecomposition td;
        if (n == 0) {
            td.bags.push_back({});
            td.parent.push_back(-1);
            td.root = 0;
            return td;
        }
        std::vector<int> pos(n, -1);
        for (int i = 0 ; i < n ; ++i) {
            if (! g.has_vertex(order[i]) || pos[order[i]] != -1)
                throw InvalidInput("elimination order must list every vertex once");
            pos[order[i]] = i;
        }
        std::vector<std::set<Vertex>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        td.bags.resize(n);
        td.parent.assign(n, -1);
        for (int i = 0 ; i < n ; ++i) {
            Vertex v = order[i];
            std::vector<Vertex> later(adj[v].begin(), adj[v].end());
            auto bag = later;
            bag.push_back(v);
            std::sort(bag.begin(), bag.end());
            td.bags[i] = bag;
            int parent = -1;
            for (auto w : later)
                if (parent == -1 || pos[w] < parent)
                    parent = pos[w];
            td.parent[i] = parent;
            for (auto a : later)
                for (auto b : later)
                    if (a != b)
                        adj[a].insert(b);
            for (auto a : later)
                adj[a].erase(v);
        }
        td.root = n - 1;
        for (int i = 0 ; i < n - 1 ; ++i)
            if (td.parent[i] == -1)
                td.parent[i] = n - 1;
        return td;
    }

    auto treewidth_lower_bound(const Graph & g) -> int
    {
        int n = g.vertex_count();
        std::vector<std::set<Vertex>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<char> alive(n, 1);
        int lb = 0, left = n;
        while (left > 1) {
            Vertex v = -1;
            for (Vertex x = 0 ; x < n ; ++x)
                if (alive[x] && (v == -1 || adj[x].size() < adj[v].size()))
                    v = x;
            lb = std::max(lb, static_cast<int>(adj[v].size()));
            if (adj[v].empty()) {
                alive[v] = 0;
                --left;
                continue;
            }
            Vertex u = -1;
            for (auto w : adj[v])
                if (u == -1 || adj[w].size() < adj[u].size())
                    u = w;
            // contract v into u
            for (auto w : adj[v])
                if (w != u) {
                    adj[w].erase(v);
                    adj[w].insert(u);
                    adj[u].insert(w);
                }
            adj[u].erase(v);
            adj[v].clear();
            alive[v] = 0;
            --left;
        }
        return lb;
    }

    namespace
    {
        using Mask = std::uint64_t;

        auto bit(int v) -> Mask
        {
            return Mask(1) << v;
        }

        class ExactSearch
        {
            public:
                ExactSearch(const Graph & g, int t, const Ceilings & ceilings) :
                    _n(g.vertex_count()), _t(t), _limit(ceilings.treewidth_states)
                {
                    _adj.assign(_n, 0);
                    for (auto [u, v] : g.edges()) {
                        _adj[u] |= bit(v);
                        _adj[v] |= bit(u);
                    }
                    _all = _n == 64 ? ~Mask(0) : bit(_n) - 1;
                }

                auto run() -> std::optional<std::vector<Vertex>>
                {
                    if (! dfs(0))
                        return std::nullopt;
                    return _order;
                }

            private:
                int _n, _t;
                long long _limit, _visited = 0;
                Mask _all;
                std::vector<Mask> _adj;
                std::unordered_set<Mask> _failed;
                std::vector<Vertex> _order;

                // vertices outside s reachable from v through eliminated vertices
                auto q(Mask s, int v) const -> Mask
                {
                    Mask seen = bit(v), out = 0;
                    std::vector<int> stack{ v };
                    while (! stack.empty()) {
                        int x = stack.back();
                        stack.pop_back();
                        Mask nb = _adj[x] & ~seen;
                        seen |= nb;
                        out |= nb & ~s;
                        for (Mask m = nb & s ; m ; m &= m - 1)
                            stack.push_back(std::countr_zero(m));
                    }
                    return out;
                }

                auto dfs(Mask s) -> bool
                {
                    Mask rest = _all & ~s;
                    if (std::popcount(rest) <= _t + 1) {
                        for (Mask m = rest ; m ; m &= m - 1)
                            _order.push_back(std::countr_zero(m));
                        return true;
                    }
                    if (_failed.contains(s))
                        return false;
                    if (++_visited > _limit)
                        throw CeilingExceeded("treewidth_states", _limit, _visited);

                    std::vector<Mask> qs(_n, 0);
                    std::vector<std::pair<int, int>> cands;
                    for (Mask m = rest ; m ; m &= m - 1) {
                        int v = std::countr_zero(m);
                        qs[v] = q(s, v);
                        int d = std::popcount(qs[v]);
                        if (d <= _t)
                            cands.emplace_back(d, v);
                    }
                    std::sort(cands.begin(), cands.end());

                    auto clique = [&] (Mask set) {
                        for (Mask m = set ; m ; m &= m - 1) {
                            int u = std::countr_zero(m);
                            if ((set & ~bit(u) & ~qs[u]) != 0)
                                return false;
                        }
                        return true;
                    };
                    // simplicial and almost simplicial vertices of degree <= t are eliminated without branching
                    for (auto [d, v] : cands) {
                        bool safe = clique(qs[v]);
                        for (Mask m = qs[v] ; m && ! safe ; m &= m - 1)
                            safe = clique(qs[v] & ~bit(std::countr_zero(m)));
                        if (safe) {
                            _order.push_back(v);
                            if (dfs(s | bit(v)))
                                return true;
                            _order.pop_back();
                            _failed.insert(s);
                            return false;
                        }
                    }
                    for (auto [d, v] : cands) {
                        _order.push_back(v);
                        if (dfs(s | bit(v)))
                            return true;
                        _order.pop_back();
                    }
                    _failed.insert(s);
                    return false;
                }
        };
    }

    auto treewidth_exact(const Graph & g, int t, const Ceilings & ceilings) -> std::optional<TreeDecomposition>
    {
        if (t < 0)
            throw InvalidInput("width bound must be non-negative");
        int n = g.vertex_count();
        if (n <= t + 1) {
            std::vector<Vertex> order(n);
            for (int i = 0 ; i < n ; ++i)
                order[i] = i;
            return decomposition_from_order(g, order);
        }
        if (treewidth_lower_bound(g) > t)
            return std::nullopt;
        auto heuristic = decomposition_from_order(g, min_fill_order(g));
        if (heuristic.width() <= t)
            return heuristic;
        check_ceiling("treewidth_vertices", ceilings.treewidth_vertices, n);
        if (n > 64)
            throw CeilingExceeded("treewidth_vertices", 64, n);
        ExactSearch search(g, t, ceilings);
        auto order = search.run();
        if (! order)
            return std::nullopt;
        auto td = decomposition_from_order(g, *order);
        if (td.width() > t || ! is_valid_decomposition(g, td))
            throw Error("treewidth_exact built an invalid decomposition");
        return td;
    }

    auto treewidth(const Graph & g, const Ceilings & ceilings) -> TreewidthResult
    {
        auto heuristic = decomposition_from_order(g, min_fill_order(g));
        int lb = std::max(0, treewidth_lower_bound(g));
        for (int t = lb ; t < heuristic.width() ; ++t)
            if (auto td = treewidth_exact(g, t, ceilings))
                return { td->width(), std::move(*td) };
        return { heuristic.width(), std::move(heuristic) };
    }

    auto node_kind_name(NodeKind kind) -> const char *
    {
        switch (kind) {
            case NodeKind::Leaf: return "Leaf";
            case NodeKind::Introduce: return "I";
            case NodeKind::Forget: return "F";
            case NodeKind::Join: return "J";
        }
        return "?";
    }

    auto make_nice(const TreeDecomposition & td, std::span<const Vertex> everywhere) -> NiceTreeDecomposition
    {
        if (td.node_count() == 0 || td.root < 0)
            throw InvalidInput("make_nice needs a rooted decomposition");
        NiceTreeDecomposition out;
        auto add = [&] (std::vector<Vertex> bag, NodeKind kind, Vertex v, std::vector<int> kids) {
            int id = out.tree.node_count();
            out.tree.bags.push_back(std::move(bag));
            out.tree.parent.push_back(-1);
            out.kind.push_back(kind);
            out.vertex.push_back(v);
            std::sort(kids.begin(), kids.end());
            for (auto c : kids)
                out.tree.parent[c] = id;
            out.children.push_back(std::move(kids));
            return id;
        };
        // walk from a node with bag `from` to one with bag `to`: forgets first, then introduces
        auto transition = [&] (int node, const std::vector<Vertex> & to) {
            auto bag = out.tree.bags[node];
            for (auto v : std::vector<Vertex>(bag)) {
                if (std::binary_search(to.begin(), to.end(), v))
                    continue;
                bag.erase(std::find(bag.begin(), bag.end(), v));
                node = add(bag, NodeKind::Forget, v, { node });
            }
            for (auto v : to) {
                if (std::binary_search(bag.begin(), bag.end(), v))
                    continue;
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                node = add(bag, NodeKind::Introduce, v, { node });
            }
            return node;
        };

        std::vector<Vertex> extra(everywhere.begin(), everywhere.end());
        std::sort(extra.begin(), extra.end());
        extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
        auto kids = td.children();

        auto build = [&] (auto & self, int x) -> int {
            std::vector<Vertex> bag;
            std::set_union(td.bags[x].begin(), td.bags[x].end(), extra.begin(), extra.end(), std::back_inserter(bag));
            std::vector<int> tops;
            for (auto c : kids[x])
                tops.push_back(transition(self(self, c), bag));
            if (tops.empty())
                return transition(add({}, NodeKind::Leaf, -1, {}), bag);
            int cur = tops[0];
            for (std::size_t i = 1 ; i < tops.size() ; ++i)
                cur = add(bag, NodeKind::Join, -1, { cur, tops[i] });
            return cur;
        };
        int top = build(build, td.root);
        top = transition(top, {});
        out.tree.root = top;
        return out;
    }

    auto nice_problem(const Graph & g, const NiceTreeDecomposition & ntd) -> std::optional<std::string>
    {
        if (auto p = decomposition_problem(g, ntd.tree))
            return p;
        int k = ntd.node_count();
        if (static_cast<int>(ntd.kind.size()) != k || static_cast<int>(ntd.vertex.size()) != k || static_cast<int>(ntd.children.size()) != k)
            return "kind, vertex and children lists must cover every node";
        if (! ntd.tree.bags[ntd.tree.root].empty())
            return "root bag is not empty";
        for (int x = 0 ; x < k ; ++x) {
            const auto & bag = ntd.tree.bags[x];
            const auto & kids = ntd.children[x];
            for (auto c : kids)
                if (c < 0 || c >= k || ntd.tree.parent[c] != x || c >= x)
                    return "children of node " + std::to_string(x) + " disagree with the parent links";
            std::string where = "node " + std::to_string(x) + ": ";
            Vertex v = ntd.vertex[x];
            switch (ntd.kind[x]) {
                case NodeKind::Leaf:
                    if (! kids.empty() || ! bag.empty())
                        return where + "leaf must be childless with an empty bag";
                    break;
                case NodeKind::Introduce:
                case NodeKind::Forget: {
                    if (kids.size() != 1)
                        return where + "introduce and forget nodes have one child";
                    auto child = ntd.tree.bags[kids[0]];
                    auto expected = child;
                    bool introduce = ntd.kind[x] == NodeKind::Introduce;
                    bool in_child = std::binary_search(child.begin(), child.end(), v);
                    if (introduce == in_child)
                        return where + (introduce ? "introduced vertex already present" : "forgotten vertex absent");
                    if (introduce)
                        expected.insert(std::upper_bound(expected.begin(), expected.end(), v), v);
                    else
                        expected.erase(std::find(expected.begin(), expected.end(), v));
                    if (expected != bag)
                        return where + "bag differs from the child by more than the named vertex";
                    break;
                }
                case NodeKind::Join:
                    if (kids.size() != 2 || ntd.tree.bags[kids[0]] != bag || ntd.tree.bags[kids[1]] != bag)
                        return where + "join needs two children with identical bags";
                    break;
            }
        }
        int counted = 0;
        for (auto & kids : ntd.children)
            counted += static_cast<int>(kids.size());
        if (counted != k - 1)
            return "children lists do not describe the tree";
        return std::nullopt;
    }

    auto is_valid_nice(const Graph & g, const NiceTreeDecomposition & ntd) -> bool
    {
        return ! nice_problem(g, ntd);
    }

    namespace
    {
        auto write_core(std::ostream & out, const TreeDecomposition & td) -> void
        {
            out << "td " << td.node_count() << ' ' << td.width() << '\n';
            for (int x = 0 ; x < td.node_count() ; ++x) {
                out << "b " << x;
                for (auto v : td.bags[x])
                    out << ' ' << v;
                out << '\n';
            }
            for (int x = 0 ; x < td.node_count() ; ++x)
                if (td.parent[x] >= 0)
                    out << "t " << td.parent[x] << ' ' << x << '\n';
        }
    }

    auto write_decomposition(std::ostream & out, const TreeDecomposition & td) -> void
    {
        write_core(out, td);
    }

    auto write_decomposition(std::ostream & out, const NiceTreeDecomposition & ntd) -> void
    {
        write_core(out, ntd.tree);
        for (int x = 0 ; x < ntd.node_count() ; ++x) {
            out << "k " << x << ' ' << node_kind_name(ntd.kind[x]);
            if (ntd.kind[x] == NodeKind::Introduce || ntd.kind[x] == NodeKind::Forget)
                out << ' ' << ntd.vertex[x];
            out << '\n';
        }
    }

    auto format_decomposition(const TreeDecomposition & td) -> std::string
    {
        std::ostringstream out;
        write_decomposition(out, td);
        return out.str();
    }

    auto format_decomposition(const NiceTreeDecomposition & ntd) -> std::string
    {
        std::ostringstream out;
        write_decomposition(out, ntd);
        return out.str();
    }

    auto read_decomposition(std::istream & in) -> DecompositionFile
    {
        std::string line;
        int line_no = 0, nodes = -1, declared_width = 0;
        DecompositionFile file;
        auto & td = file.tree;
        std::vector<std::pair<int, int>> links;
        std::vector<std::optional<std::pair<NodeKind, Vertex>>> kinds;
        std::vector<char> has_bag;

        auto fail = [&] (const std::string & why) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
        };
        auto read_node = [&] (std::istringstream & s) {
            long long x;
            if (! (s >> x))
                fail("expected a node index");
            if (x < 0 || x >= nodes)
                fail("node index out of range");
            return static_cast<int>(x);
        };
        auto read_vertex = [&] (std::istringstream & s) {
            long long v;
            if (! (s >> v))
                fail("expected a vertex");
            if (v < 0 || v > 2147483647LL)
                fail("vertex out of range");
            return static_cast<Vertex>(v);
        };

        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream s(line);
            std::string tag;
            if (! (s >> tag) || tag[0] == '#')
                continue;
            if (tag == "td") {
                if (nodes != -1)
                    fail("repeated header");
                long long k;
                if (! (s >> k >> declared_width) || k < 0 || k > 10'000'000)
                    fail("bad header");
                nodes = static_cast<int>(k);
                td.bags.assign(nodes, {});
                td.parent.assign(nodes, -1);
                kinds.assign(nodes, std::nullopt);
                has_bag.assign(nodes, 0);
                continue;
            }
            if (nodes == -1)
                fail("missing 'td <nodes> <width>' header");
            if (tag == "b") {
                int x = read_node(s);
                if (has_bag[x])
                    fail("bag given twice");
                has_bag[x] = 1;
                std::vector<Vertex> bag;
                long long v;
                while (s >> v) {
                    if (v < 0 || v > 2147483647LL)
                        fail("vertex out of range");
                    bag.push_back(static_cast<Vertex>(v));
                }
                if (! s.eof())
                    fail("bad vertex in bag");
                std::sort(bag.begin(), bag.end());
                if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                    fail("repeated vertex in bag");
                td.bags[x] = std::move(bag);
                continue;
            }
            else if (tag == "t") {
                int p = read_node(s), c = read_node(s);
                if (td.parent[c] != -1)
                    fail("node has two parents");
                if (p == c)
                    fail("tree edge is a loop");
                td.parent[c] = p;
                links.emplace_back(p, c);
            }
            else if (tag == "k") {
                int x = read_node(s);
                std::string name;
                if (! (s >> name))
                    fail("expected a node kind");
                if (kinds[x])
                    fail("kind given twice");
                if (name == "Leaf")
                    kinds[x] = std::make_pair(NodeKind::Leaf, Vertex(-1));
                else if (name == "J")
                    kinds[x] = std::make_pair(NodeKind::Join, Vertex(-1));
                else if (name == "I")
                    kinds[x] = std::make_pair(NodeKind::Introduce, read_vertex(s));
                else if (name == "F")
                    kinds[x] = std::make_pair(NodeKind::Forget, read_vertex(s));
                else
                    fail("unknown node kind '" + name + "'");
            }
            else
                fail("unknown line type '" + tag + "'");
            std::string extra;
            if (s >> extra && extra[0] != '#')
                fail("trailing text '" + extra + "'");
        }
        if (nodes == -1)
            throw InvalidInput("missing 'td <nodes> <width>' header");
        for (int x = 0 ; x < nodes ; ++x)
            if (td.parent[x] == -1) {
                if (td.root != -1)
                    throw InvalidInput("decomposition has more than one root");
                td.root = x;
            }
        if (nodes > 0 && td.root == -1)
            throw InvalidInput("decomposition has no root");
        if (td.width() != declared_width && nodes > 0)
            throw InvalidInput("declared width " + std::to_string(declared_width) + " differs from the bags (" + std::to_string(td.width()) + ")");

        int with_kind = static_cast<int>(std::count_if(kinds.begin(), kinds.end(), [] (auto & k) { return k.has_value(); }));
        if (with_kind > 0) {
            if (with_kind != nodes)
                throw InvalidInput("kind lines must be given for every node or none");
            NiceTreeDecomposition ntd;
            ntd.tree = td;
            ntd.children.assign(nodes, {});
            for (auto [p, c] : links)
                ntd.children[p].push_back(c);
            for (auto & k : kinds) {
                ntd.kind.push_back(k->first);
                ntd.vertex.push_back(k->second);
            }
            file.nice = std::move(ntd);
        }
        return file;
    }

    auto parse_decomposition(const std::string & text) -> DecompositionFile
    {
        std::istringstream in(text);
        return read_decomposition(in);
    }

    auto certified_window(const Graph & g, int t, const Ceilings & ceilings) -> CertifiedWindow
    {
        if (t < 1)
            throw InvalidInput("window parameter t must be positive");
        if (g.vertex_count() <= ceilings.treewidth_vertices && treewidth_exact(g, t, ceilings))
            throw PreconditionFailed("treewidth is at most t; no window exists");
        auto exceeds = [&] (const std::vector<Edge> & edges, int bound) {
            return ! treewidth_exact(edge_subgraph(g, edges).graph, bound, ceilings);
        };
        std::vector<Edge> fixed, active = g.edges();
        int rounds = 0;
        while (true) {
            std::vector<Edge> both = fixed;
            both.insert(both.end(), active.begin(), active.end());
            if (! exceeds(both, 2 * t))
                break;
            if (active.size() < 2)
                throw Error("certified_window: halving invariant broken");
            ++rounds;
            std::size_t half = active.size() / 2;
            std::vector<Edge> first(active.begin(), active.begin() + half), second(active.begin() + half, active.end());
            auto trial = fixed;
            trial.insert(trial.end(), first.begin(), first.end());
            if (exceeds(trial, t))
                active = std::move(first);
            else {
                fixed = std::move(trial);
                active = std::move(second);
            }
        }
        CertifiedWindow out;
        out.edges = fixed;
        out.edges.insert(out.edges.end(), active.begin(), active.end());
        std::sort(out.edges.begin(), out.edges.end());
        out.window = edge_subgraph(g, out.edges);
        out.rounds = rounds;
        out.treewidth = treewidth(out.window.graph, ceilings).width;
        if (out.treewidth <= t)
            throw PreconditionFailed("treewidth is at most t; no window exists");
        if (out.treewidth > 2 * t)
            throw Error("certified_window: window treewidth outside (t, 2t]");
        return out;
    }

    auto verdict_name(ThresholdVerdict v) -> const char *
    {
        switch (v) {
            case ThresholdVerdict::Vacuous: return "vacuous";
            case ThresholdVerdict::Holds: return "holds";
            case ThresholdVerdict::Violated: return "violated";
            case ThresholdVerdict::Undetermined: return "undetermined";
        }
        return "?";
    }

    auto grid_decomposition(int rows, int cols) -> TreeDecomposition
    {
        if (rows < 1 || cols < 1)
            throw InvalidInput("grid dimensions must be positive");
        TreeDecomposition td;
        int n = rows * cols;
        int a = std::min(rows, cols);
        bool by_column = rows <= cols;
        // vertices in column-major order along the short side, a + 1 consecutive per bag
        std::vector<Vertex> sweep;
        if (by_column) {
            for (int j = 0 ; j < cols ; ++j)
                for (int i = 0 ; i < rows ; ++i)
                    sweep.push_back(grid_vertex(cols, i, j));
        }
        else {
            for (int i = 0 ; i < rows ; ++i)
                for (int j = 0 ; j < cols ; ++j)
                    sweep.push_back(grid_vertex(cols, i, j));
        }
        int span = std::min(a + 1, n);
        for (int k = 0 ; k + span <= n ; ++k) {
            std::vector<Vertex> bag(sweep.begin() + k, sweep.begin() + k + span);
            std::sort(bag.begin(), bag.end());
            td.bags.push_back(std::move(bag));
            td.parent.push_back(k == 0 ? -1 : k - 1);
        }
        td.root = 0;
        return td;
    }

    auto planar_grid_threshold_check(const EmbeddedGraph & eg, int r, const Ceilings & ceilings) -> ThresholdReport
    {
        if (r < 1)
            throw InvalidInput("grid side must be positive");
        const auto & g = eg.graph();
        ThresholdReport report;
        report.r = r;
        report.threshold = 6 * r - 5;
        report.lower = std::max(0, treewidth_lower_bound(g));
        report.upper = decomposition_from_order(g, min_fill_order(g)).width();

        auto layout = recognize_grid(g);
        if (layout) {
            int a = layout->rows;
            int side = (a == 1 && layout->cols == 1) ? 0 : a;
            report.upper = std::min(report.upper, side);
            report.lower = std::max(report.lower, side);
        }
        if (g.vertex_count() <= ceilings.treewidth_vertices) {
            auto exact = treewidth(g, ceilings).width;
            report.lower = report.upper = exact;
        }
        report.lower = std::min(report.lower, report.upper);

        if (report.upper <= report.threshold) {
            report.verdict = ThresholdVerdict::Vacuous;
            return report;
        }
        if (report.lower <= report.threshold) {
            report.verdict = ThresholdVerdict::Undetermined;
            return report;
        }
        if (layout && layout->rows >= r) {
            GridModel model{ r, r, {} };
            for (int i = 0 ; i < r ; ++i)
                for (int j = 0 ; j < r ; ++j)
                    model.branch_sets.push_back({ layout->at[i * layout->cols + j] });
            report.model = std::move(model);
        }
        else if (g.vertex_count() <= ceilings.minor_brute_vertices && r * r <= ceilings.minor_brute_pattern) {
            if (auto m = minor_model_brute(g, generate_grid(r, r), ceilings)) {
                GridModel model{ r, r, m->branch_sets };
                report.model = std::move(model);
            }
            else {
                report.verdict = ThresholdVerdict::Violated;
                return report;
            }
        }
        else {
            report.verdict = ThresholdVerdict::Undetermined;
            return report;
        }
        if (! verify_grid_model(g, *report.model))
            throw Error("planar_grid_threshold_check built an invalid grid model");
        report.verdict = ThresholdVerdict::Holds;
        return report;
    }
}
