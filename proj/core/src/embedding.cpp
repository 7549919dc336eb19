#include <tmkit/embedding.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace tmkit
{
    namespace
    {
        auto index_in(const std::vector<Vertex> & sorted, Vertex w) -> int
        {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
            if (it == sorted.end() || *it != w)
                return -1;
            return static_cast<int>(it - sorted.begin());
        }
    }

    EmbeddedGraph::EmbeddedGraph(Graph g, std::vector<std::vector<Vertex>> rotation, std::vector<std::pair<Vertex, Vertex>> outer_darts) :
        _graph(std::move(g)),
        _rotation(std::move(rotation))
    {
        int n = _graph.vertex_count();
        if (static_cast<int>(_rotation.size()) != n)
            throw InvalidInput("rotation system must list every vertex");
        _rot_pos.resize(n);
        _dart_face.resize(n);
        for (Vertex v = 0 ; v < n ; ++v) {
            auto sorted = _rotation[v];
            std::sort(sorted.begin(), sorted.end());
            if (sorted != _graph.neighbours(v))
                throw InvalidInput("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
            _rot_pos[v].assign(_graph.degree(v), -1);
            for (int p = 0 ; p < int(_rotation[v].size()) ; ++p)
                _rot_pos[v][index_in(_graph.neighbours(v), _rotation[v][p])] = p;
            _dart_face[v].assign(_graph.degree(v), -1);
        }

        _isolated_face.assign(n, -1);
        for (Vertex v = 0 ; v < n ; ++v) {
            if (_graph.degree(v) == 0) {
                _isolated_face[v] = static_cast<int>(_faces.size());
                _faces.push_back(Face{ { v } });
                continue;
            }
            for (int i = 0 ; i < _graph.degree(v) ; ++i) {
                if (_dart_face[v][i] != -1)
                    continue;
                int id = static_cast<int>(_faces.size());
                Face f;
                Vertex a = v, b = _graph.neighbours(v)[i];
                while (true) {
                    int ai = index_in(_graph.neighbours(a), b);
                    if (_dart_face[a][ai] != -1)
                        break;
                    _dart_face[a][ai] = id;
                    f.vertices.push_back(a);
                    Vertex c = next_around(b, a);
                    a = b;
                    b = c;
                }
                _faces.push_back(std::move(f));
            }
        }

        auto comp = component_ids(_graph);
        int cc = component_count(_graph);
        std::vector<int> cv(cc, 0), ce(cc, 0), cf(cc, 0);
        for (Vertex v = 0 ; v < n ; ++v)
            ++cv[comp[v]];
        for (auto [u, v] : _graph.edges())
            ++ce[comp[u]];
        for (auto & f : _faces)
            ++cf[comp[f.vertices.front()]];
        for (int c = 0 ; c < cc ; ++c)
            if (ce[c] > 0 && cv[c] - ce[c] + cf[c] != 2)
                throw InvalidInput("rotation system violates Euler's formula (V - E + F = "
                        + std::to_string(cv[c] - ce[c] + cf[c]) + " on a component)");

        _outer.assign(_faces.size(), 0);
        std::vector<int> chosen(cc, -1);
        for (auto [u, v] : outer_darts) {
            if (! _graph.adjacent(u, v))
                throw InvalidInput("outer dart is not an edge");
            int f = face_of(u, v);
            chosen[comp[u]] = f;
        }
        for (int f = 0 ; f < int(_faces.size()) ; ++f) {
            int c = comp[_faces[f].vertices.front()];
            if (chosen[c] == -1)
                chosen[c] = f;
        }
        for (int c = 0 ; c < cc ; ++c)
            _outer[chosen[c]] = 1;
        if (cc > 0)
            _first_outer = chosen[comp[0]];
    }

    auto EmbeddedGraph::face_of(Vertex u, Vertex v) const -> int
    {
        int i = index_in(_graph.neighbours(u), v);
        if (i < 0)
            throw InvalidInput("face_of: not an edge");
        return _dart_face[u][i];
    }

    auto EmbeddedGraph::face_of_isolated(Vertex v) const -> int
    {
        return _isolated_face[v];
    }

    auto EmbeddedGraph::outer_face() const -> int
    {
        return _first_outer;
    }

    auto EmbeddedGraph::next_around(Vertex v, Vertex u) const -> Vertex
    {
        int p = _rot_pos[v][index_in(_graph.neighbours(v), u)];
        return _rotation[v][(p + 1) % _rotation[v].size()];
    }

    auto embed_from_coordinates(const Graph & g, std::span<const Point> coords) -> EmbeddedGraph
    {
        int n = g.vertex_count();
        if (static_cast<int>(coords.size()) != n)
            throw InvalidInput("one coordinate per vertex required");
        std::vector<std::vector<Vertex>> rotation(n);
        for (Vertex v = 0 ; v < n ; ++v) {
            rotation[v] = g.neighbours(v);
            auto angle = [&] (Vertex w) { return std::atan2(coords[w].second - coords[v].second, coords[w].first - coords[v].first); };
            std::sort(rotation[v].begin(), rotation[v].end(), [&] (Vertex a, Vertex b) { return angle(a) < angle(b); });
        }
        EmbeddedGraph provisional(g, rotation, {});

        auto comp = component_ids(g);
        std::map<int, std::pair<double, std::pair<Vertex, Vertex>>> best;
        for (const auto & f : provisional.faces()) {
            if (f.vertices.size() < 2)
                continue;
            double area = 0;
            for (std::size_t i = 0 ; i < f.vertices.size() ; ++i) {
                auto & p = coords[f.vertices[i]];
                auto & q = coords[f.vertices[(i + 1) % f.vertices.size()]];
                area += p.first * q.second - q.first * p.second;
            }
            int c = comp[f.vertices.front()];
            auto dart = std::make_pair(f.vertices[0], f.vertices[1]);
            if (! best.contains(c) || area > best[c].first + 1e-9)
                best[c] = { area, dart };
        }
        std::vector<std::pair<Vertex, Vertex>> outer;
        for (auto & [_, entry] : best)
            outer.push_back(entry.second);
        return EmbeddedGraph(g, std::move(rotation), std::move(outer));
    }

    namespace
    {
        auto rotation_from_walks(const Graph & g, std::span<const std::vector<Vertex>> faces, bool reversed)
            -> std::optional<std::vector<std::vector<Vertex>>>
        {
            int n = g.vertex_count();
            // succ[v][u] = w
            std::vector<std::map<Vertex, Vertex>> succ(n);
            for (auto walk : faces) {
                if (reversed)
                    std::reverse(walk.begin(), walk.end());
                std::size_t k = walk.size();
                if (k < 2)
                    continue;
                for (std::size_t i = 0 ; i < k ; ++i) {
                    Vertex u = walk[i], v = walk[(i + 1) % k], w = walk[(i + 2) % k];
                    if (! g.adjacent(u, v) || ! g.adjacent(v, w))
                        throw InvalidInput("face walk uses a non-edge");
                    if (succ[v].contains(u))
                        return std::nullopt;
                    succ[v][u] = w;
                }
            }
            std::vector<std::vector<Vertex>> rotation(n);
            for (Vertex v = 0 ; v < n ; ++v) {
                int d = g.degree(v);
                if (d == 0)
                    continue;
                if (static_cast<int>(succ[v].size()) != d)
                    return std::nullopt;
                Vertex start = g.neighbours(v).front(), cur = start;
                for (int i = 0 ; i < d ; ++i) {
                    rotation[v].push_back(cur);
                    cur = succ[v][cur];
                }
                if (cur != start)
                    return std::nullopt;
                auto sorted = rotation[v];
                std::sort(sorted.begin(), sorted.end());
                if (sorted != g.neighbours(v))
                    return std::nullopt;
            }
            return rotation;
        }
    }

    auto embed_from_faces(const Graph & g, std::span<const std::vector<Vertex>> faces) -> EmbeddedGraph
    {
        for (auto & walk : faces)
            for (auto v : walk)
                if (! g.has_vertex(v))
                    throw InvalidInput("face walk vertex out of range");
        for (bool reversed : { false, true }) {
            auto rotation = rotation_from_walks(g, faces, reversed);
            if (! rotation)
                continue;
            std::vector<std::pair<Vertex, Vertex>> outer;
            if (! faces.empty() && faces.front().size() >= 2) {
                auto walk = faces.front();
                if (reversed)
                    std::reverse(walk.begin(), walk.end());
                outer.emplace_back(walk[0], walk[1]);
            }
            EmbeddedGraph eg(g, std::move(*rotation), std::move(outer));
            std::size_t listed = 0;
            for (auto & walk : faces)
                if (walk.size() >= 2)
                    ++listed;
            std::size_t real = 0;
            for (auto & f : eg.faces())
                if (f.vertices.size() >= 2)
                    ++real;
            if (listed != real)
                throw InvalidInput("face list does not match the faces of the induced rotation system");
            return eg;
        }
        throw InvalidInput("face walks do not induce a consistent rotation system");
    }

    auto compute_faces(const EmbeddedGraph & eg) -> std::vector<Face>
    {
        return eg.faces();
    }

    auto face_walks(const EmbeddedGraph & eg) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        int outer = eg.outer_face();
        if (outer >= 0 && eg.faces()[outer].vertices.size() >= 2)
            out.push_back(eg.faces()[outer].vertices);
        for (int f = 0 ; f < eg.face_count() ; ++f)
            if (f != outer && eg.faces()[f].vertices.size() >= 2)
                out.push_back(eg.faces()[f].vertices);
        return out;
    }

    auto delete_vertices(const EmbeddedGraph & eg, std::span<const Vertex> gone) -> Renamed<EmbeddedGraph>
    {
        auto r = delete_vertices(eg.graph(), gone);
        int n = r.graph.vertex_count();
        std::vector<std::vector<Vertex>> rotation(n);
        for (Vertex v = 0 ; v < n ; ++v)
            for (auto w : eg.rotation(r.new_to_old[v]))
                if (r.old_to_new[w] >= 0)
                    rotation[v].push_back(r.old_to_new[w]);
        std::vector<std::pair<Vertex, Vertex>> outer;
        for (int f = 0 ; f < eg.face_count() ; ++f) {
            if (! eg.is_outer(f))
                continue;
            auto & walk = eg.faces()[f].vertices;
            for (std::size_t i = 0 ; i < walk.size() ; ++i) {
                Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
                if (walk.size() >= 2 && r.old_to_new[a] >= 0 && r.old_to_new[b] >= 0)
                    outer.emplace_back(r.old_to_new[a], r.old_to_new[b]);
            }
        }
        // darts of the old outer faces that survive still lie on the new outer face
        EmbeddedGraph sub(r.graph, std::move(rotation), std::move(outer));
        return Renamed<EmbeddedGraph>{ std::move(sub), std::move(r.old_to_new), std::move(r.new_to_old) };
    }

    auto embedded_grid(int a, int b) -> EmbeddedGraph
    {
        auto g = generate_grid(a, b);
        auto c = grid_coordinates(a, b);
        return embed_from_coordinates(g, c);
    }
}
