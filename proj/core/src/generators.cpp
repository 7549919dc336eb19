#include <tmkit/generators.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <iterator>

namespace tmkit
{
    auto path_graph(int n) -> Graph
    {
        std::vector<Edge> es;
        for (int i = 0 ; i + 1 < n ; ++i)
            es.emplace_back(i, i + 1);
        return Graph(n, es);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidInput("cycle needs at least 3 vertices");
        std::vector<Edge> es;
        for (int i = 0 ; i < n ; ++i)
            es.push_back(make_edge(i, (i + 1) % n));
        return Graph(n, es);
    }

    auto complete_graph(int n) -> Graph
    {
        std::vector<Edge> es;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                es.emplace_back(i, j);
        return Graph(n, es);
    }

    auto star_graph(int leaves) -> Graph
    {
        std::vector<Edge> es;
        for (int i = 1 ; i <= leaves ; ++i)
            es.emplace_back(0, i);
        return Graph(leaves + 1, es);
    }

    auto petersen_graph() -> Graph
    {
        std::vector<Edge> es;
        for (int i = 0 ; i < 5 ; ++i) {
            es.push_back(make_edge(i, (i + 1) % 5));
            es.push_back(make_edge(i, i + 5));
            es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        }
        return Graph(10, es);
    }

    auto grid_vertex(int b, int i, int j) -> Vertex
    {
        return i * b + j;
    }

    auto generate_grid(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw InvalidInput("grid dimensions must be positive");
        std::vector<Edge> es;
        for (int i = 0 ; i < a ; ++i)
            for (int j = 0 ; j < b ; ++j) {
                if (j + 1 < b)
                    es.emplace_back(grid_vertex(b, i, j), grid_vertex(b, i, j + 1));
                if (i + 1 < a)
                    es.emplace_back(grid_vertex(b, i, j), grid_vertex(b, i + 1, j));
            }
        return Graph(a * b, es);
    }

    namespace
    {
        // rebuilds the layout column by column from a corner and its two neighbours
        auto layout_from_corner(const Graph & g, Vertex corner, Vertex right, Vertex down) -> std::optional<GridLayout>
        {
            int n = g.vertex_count();
            std::vector<char> placed(n, 0);
            auto place = [&] (Vertex v) { placed[v] = 1; return v; };
            auto only_unplaced = [&] (const std::vector<Vertex> & cands) -> Vertex {
                Vertex found = -1;
                for (auto c : cands)
                    if (! placed[c]) {
                        if (found != -1)
                            return -2;
                        found = c;
                    }
                return found;
            };
            auto common = [&] (Vertex a, Vertex b) {
                std::vector<Vertex> out;
                std::set_intersection(g.neighbours(a).begin(), g.neighbours(a).end(),
                        g.neighbours(b).begin(), g.neighbours(b).end(), std::back_inserter(out));
                return out;
            };

            // first two columns, row by row
            std::vector<std::vector<Vertex>> columns(2);
            columns[0].push_back(place(corner));
            columns[1].push_back(place(right));
            Vertex next = down;
            while (next >= 0) {
                columns[0].push_back(place(next));
                auto up = columns[1].back();
                auto v = only_unplaced(common(up, next));
                if (v < 0)
                    return std::nullopt;
                columns[1].push_back(place(v));
                next = only_unplaced(g.neighbours(next));
                if (next == -2)
                    return std::nullopt;
            }
            int rows = static_cast<int>(columns[0].size());
            if (n % rows != 0)
                return std::nullopt;
            int cols = n / rows;
            for (int j = 2 ; j < cols ; ++j) {
                std::vector<Vertex> col;
                auto top = only_unplaced(g.neighbours(columns[j - 1][0]));
                if (top < 0)
                    return std::nullopt;
                col.push_back(place(top));
                for (int i = 1 ; i < rows ; ++i) {
                    auto v = only_unplaced(common(col.back(), columns[j - 1][i]));
                    if (v < 0)
                        return std::nullopt;
                    col.push_back(place(v));
                }
                columns.push_back(std::move(col));
            }

            GridLayout layout{ rows, cols, std::vector<Vertex>(n, -1) };
            std::vector<Vertex> pos(n, -1);
            for (int i = 0 ; i < rows ; ++i)
                for (int j = 0 ; j < cols ; ++j) {
                    layout.at[i * cols + j] = columns[j][i];
                    pos[columns[j][i]] = i * cols + j;
                }
            auto expected = generate_grid(rows, cols);
            if (expected.edge_count() != g.edge_count())
                return std::nullopt;
            for (auto [u, v] : expected.edges())
                if (! g.adjacent(layout.at[u], layout.at[v]))
                    return std::nullopt;
            if (rows > cols) {
                GridLayout t{ cols, rows, std::vector<Vertex>(n, -1) };
                for (int i = 0 ; i < rows ; ++i)
                    for (int j = 0 ; j < cols ; ++j)
                        t.at[j * rows + i] = layout.at[i * cols + j];
                return t;
            }
            return layout;
        }
    }

    auto recognize_grid(const Graph & g) -> std::optional<GridLayout>
    {
        int n = g.vertex_count();
        if (n == 0 || ! is_connected(g))
            return std::nullopt;
        if (n == 1)
            return GridLayout{ 1, 1, { 0 } };
        if (g.edge_count() == n - 1 && g.max_degree() <= 2) {
            Vertex end = 0;
            while (g.degree(end) != 1)
                ++end;
            GridLayout line{ 1, n, { end } };
            Vertex prev = -1, cur = end;
            while (static_cast<int>(line.at.size()) < n) {
                Vertex nxt = g.neighbours(cur)[0] == prev ? g.neighbours(cur).back() : g.neighbours(cur)[0];
                prev = cur;
                cur = nxt;
                line.at.push_back(cur);
            }
            return line;
        }
        for (Vertex c = 0 ; c < n ; ++c) {
            if (g.degree(c) != 2)
                continue;
            auto & nb = g.neighbours(c);
            for (int flip = 0 ; flip < 2 ; ++flip)
                if (auto layout = layout_from_corner(g, c, nb[flip], nb[1 - flip]))
                    return layout;
            // any corner works when the graph is a grid
            return std::nullopt;
        }
        return std::nullopt;
    }

    auto grid_coordinates(int a, int b) -> std::vector<Point>
    {
        std::vector<Point> c;
        for (int i = 0 ; i < a ; ++i)
            for (int j = 0 ; j < b ; ++j)
                c.emplace_back(double(j), -double(i));
        return c;
    }

    auto subdivide_edges(const Graph & g, int times) -> Graph
    {
        if (times < 0)
            throw InvalidInput("subdivision count must be non-negative");
        int n = g.vertex_count();
        std::vector<Edge> es;
        for (auto [u, v] : g.edges()) {
            Vertex prev = u;
            for (int t = 0 ; t < times ; ++t) {
                es.emplace_back(prev, n);
                prev = n++;
            }
            es.push_back(make_edge(prev, v));
        }
        return Graph(n, es);
    }

    auto subdivide_coordinates(const Graph & g, const std::vector<Point> & coords, int times) -> std::vector<Point>
    {
        auto out = coords;
        for (auto [u, v] : g.edges())
            for (int t = 1 ; t <= times ; ++t) {
                double f = double(t) / double(times + 1);
                out.emplace_back(coords[u].first + f * (coords[v].first - coords[u].first),
                        coords[u].second + f * (coords[v].second - coords[u].second));
            }
        return out;
    }

    auto random_graph(int n, int edge_num, int edge_den, Rng & rng) -> Graph
    {
        std::vector<Edge> es;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (rng.chance(edge_num, edge_den))
                    es.emplace_back(i, j);
        return Graph(n, es);
    }

    auto random_tree(int n, Rng & rng) -> Graph
    {
        std::vector<Edge> es;
        for (int i = 1 ; i < n ; ++i)
            es.emplace_back(static_cast<Vertex>(rng.uniform(0, i - 1)), i);
        return Graph(n, es);
    }

    auto random_partial_ktree(int n, int k, int keep_num, int keep_den, Rng & rng) -> Graph
    {
        if (k < 1)
            throw InvalidInput("k-tree needs k >= 1");
        std::vector<int> perm(n);
        for (int i = 0 ; i < n ; ++i)
            perm[i] = i;
        rng.shuffle(perm);

        std::vector<Edge> es;
        std::vector<std::vector<Vertex>> cliques;
        int base = std::min(n, k + 1);
        std::vector<Vertex> first;
        for (int i = 0 ; i < base ; ++i) {
            for (int j = 0 ; j < i ; ++j)
                es.push_back(make_edge(perm[i], perm[j]));
            first.push_back(perm[i]);
        }
        if (base == k + 1)
            for (int drop = 0 ; drop <= k ; ++drop) {
                std::vector<Vertex> c;
                for (int i = 0 ; i <= k ; ++i)
                    if (i != drop)
                        c.push_back(first[i]);
                cliques.push_back(std::move(c));
            }
        for (int i = base ; i < n ; ++i) {
            auto c = cliques[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(cliques.size()) - 1))];
            Vertex v = perm[i];
            for (auto w : c)
                es.push_back(make_edge(v, w));
            for (int drop = 0 ; drop < k ; ++drop) {
                std::vector<Vertex> nc{ v };
                for (int j = 0 ; j < k ; ++j)
                    if (j != drop)
                        nc.push_back(c[j]);
                cliques.push_back(std::move(nc));
            }
        }
        std::vector<Edge> kept;
        for (auto & e : es)
            if (rng.chance(keep_num, keep_den))
                kept.push_back(e);
        return Graph(n, kept);
    }

    auto random_rooted(const Graph & g, int roots, Rng & rng) -> RootedGraph
    {
        if (roots > g.vertex_count())
            throw InvalidInput("more roots than vertices");
        std::vector<int> perm(g.vertex_count());
        for (int i = 0 ; i < g.vertex_count() ; ++i)
            perm[i] = i;
        rng.shuffle(perm);
        std::vector<int> labels(g.vertex_count(), 0);
        for (int i = 0 ; i < roots ; ++i)
            labels[perm[i]] = i + 1;
        return RootedGraph(g, labels);
    }

    auto random_small_pattern(int n, int max_edges, Rng & rng) -> Graph
    {
        std::vector<Edge> all;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                all.emplace_back(i, j);
        rng.shuffle(all);
        int m = static_cast<int>(rng.uniform(0, std::min<long long>(max_edges, static_cast<long long>(all.size()))));
        all.resize(m);
        return Graph(n, all);
    }
}
