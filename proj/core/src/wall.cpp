#include <tmkit/wall.hpp>
#include <tmkit/error.hpp>

#include <algorithm>

namespace tmkit
{
    auto Wall::embedding() const -> EmbeddedGraph
    {
        return embed_from_coordinates(graph, coordinates);
    }

    namespace
    {
        auto find_pegs(Wall & w) -> void
        {
            auto eg = w.embedding();
            const auto & walk = eg.faces()[eg.outer_face()].vertices;
            auto start = std::find(walk.begin(), walk.end(), w.certificate.branch.front());
            std::vector<Vertex> rotated(start, walk.end());
            rotated.insert(rotated.end(), walk.begin(), start);

            std::vector<char> is_peg_image(w.graph.vertex_count(), 0);
            for (Vertex x = 0 ; x < w.elementary.vertex_count() ; ++x)
                if (w.elementary.degree(x) == 2)
                    is_peg_image[w.certificate.branch[x]] = 1;

            w.pegs.clear();
            w.peg_order.clear();
            std::vector<char> seen(w.graph.vertex_count(), 0);
            for (auto v : rotated)
                if (is_peg_image[v] && ! seen[v]) {
                    seen[v] = 1;
                    w.peg_order.push_back(v);
                    w.pegs.push_back(v);
                }
            std::sort(w.pegs.begin(), w.pegs.end());
        }
    }

    auto generate_elementary_wall(int h, int r) -> Wall
    {
        if (h < 2)
            throw InvalidInput("elementary wall needs height at least 2");
        if (r < 1)
            throw InvalidInput("elementary wall needs width at least 1");
        int cols = 2 * r;
        auto id = [&] (int i, int j) { return (i - 1) * cols + (j - 1); };

        std::vector<Edge> grid_edges;
        for (int i = 1 ; i <= h ; ++i)
            for (int j = 1 ; j <= cols ; ++j) {
                if (j < cols)
                    grid_edges.emplace_back(id(i, j), id(i, j + 1));
                if (i < h && (i % 2) == (j % 2))
                    grid_edges.emplace_back(id(i, j), id(i + 1, j));
            }
        Graph thinned(h * cols, grid_edges);

        std::vector<Vertex> doomed;
        for (Vertex v = 0 ; v < thinned.vertex_count() ; ++v)
            if (thinned.degree(v) == 1)
                doomed.push_back(v);
        auto kept = delete_vertices(thinned, doomed);

        Wall w;
        w.height = h;
        w.width = r;
        w.elementary = kept.graph;
        w.graph = kept.graph;
        for (auto old : kept.new_to_old) {
            int i = old / cols + 1, j = old % cols + 1;
            w.elementary_position.emplace_back(i, j);
            w.coordinates.emplace_back(double(j), -double(i));
        }
        w.certificate = identity_witness(w.elementary);
        w.anchor.resize(w.graph.vertex_count());
        for (Vertex v = 0 ; v < w.graph.vertex_count() ; ++v)
            w.anchor[v] = v;
        find_pegs(w);
        return w;
    }

    auto subdivide_wall(const Wall & w, int times) -> Wall
    {
        Wall out = w;
        out.graph = subdivide_edges(w.graph, times);
        out.coordinates = subdivide_coordinates(w.graph, w.coordinates, times);
        int n = w.graph.vertex_count();
        const auto & host_edges = w.graph.edges();

        auto expand = [&] (Vertex a, Vertex b, std::vector<Vertex> & into) {
            auto e = make_edge(a, b);
            auto k = static_cast<int>(std::lower_bound(host_edges.begin(), host_edges.end(), e) - host_edges.begin());
            std::vector<Vertex> mid;
            for (int t = 0 ; t < times ; ++t)
                mid.push_back(n + k * times + t);
            if (a > b)
                std::reverse(mid.begin(), mid.end());
            into.insert(into.end(), mid.begin(), mid.end());
        };

        out.anchor.assign(out.graph.vertex_count(), -1);
        for (Vertex v = 0 ; v < n ; ++v)
            out.anchor[v] = w.anchor[v];
        const auto & el_edges = w.elementary.edges();
        for (std::size_t k = 0 ; k < el_edges.size() ; ++k) {
            const auto & old_path = w.certificate.paths[k];
            std::vector<Vertex> path{ old_path.front() };
            for (std::size_t s = 0 ; s + 1 < old_path.size() ; ++s) {
                expand(old_path[s], old_path[s + 1], path);
                path.push_back(old_path[s + 1]);
            }
            auto [x, y] = el_edges[k];
            auto px = w.elementary_position[x], py = w.elementary_position[y];
            Vertex owner = (px.first == py.first) ? (px.second < py.second ? x : y) : (px.first < py.first ? x : y);
            for (std::size_t s = 1 ; s + 1 < path.size() ; ++s)
                out.anchor[path[s]] = owner;
            out.certificate.paths[k] = std::move(path);
        }
        find_pegs(out);
        return out;
    }

    auto wall_in_grid(int h, int r) -> WallInGrid
    {
        WallInGrid out;
        out.wall = generate_elementary_wall(h, r);
        out.grid = generate_grid(h, 2 * r);
        for (auto [i, j] : out.wall.elementary_position)
            out.certificate.branch.push_back(grid_vertex(2 * r, i - 1, j - 1));
        for (auto [a, b] : out.wall.elementary.edges())
            out.certificate.paths.push_back({ out.certificate.branch[a], out.certificate.branch[b] });
        return out;
    }

    auto grid_minor_of_wall(const Wall & w) -> GridModel
    {
        GridModel m;
        m.rows = w.height;
        m.cols = w.width;
        m.branch_sets.assign(m.rows * m.cols, {});
        for (Vertex v = 0 ; v < w.graph.vertex_count() ; ++v) {
            auto [i, j] = w.elementary_position[w.anchor[v]];
            m.branch_sets[(i - 1) * m.cols + (j - 1) / 2].push_back(v);
        }
        return m;
    }

    auto centred_subwall_vertices(const Wall & w, int side_h, int side_r) -> std::vector<Vertex>
    {
        if (side_h < 1 || side_r < 1 || side_h > w.height || side_r > w.width)
            throw InvalidInput("sub-wall does not fit inside the wall");
        int i0 = (w.height - side_h) / 2, j0 = (w.width - side_r) / 2;
        auto inside = [&] (Vertex x) {
            auto [i, j] = w.elementary_position[x];
            return i > i0 && i <= i0 + side_h && j > 2 * j0 && j <= 2 * (j0 + side_r);
        };
        std::vector<Vertex> out;
        for (Vertex x = 0 ; x < w.elementary.vertex_count() ; ++x)
            if (inside(x))
                out.push_back(w.certificate.branch[x]);
        const auto & el_edges = w.elementary.edges();
        for (std::size_t k = 0 ; k < el_edges.size() ; ++k)
            if (inside(el_edges[k].first) && inside(el_edges[k].second))
                for (std::size_t s = 1 ; s + 1 < w.certificate.paths[k].size() ; ++s)
                    out.push_back(w.certificate.paths[k][s]);
        std::sort(out.begin(), out.end());
        return out;
    }
}
