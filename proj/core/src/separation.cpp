#include <tmkit/separation.hpp>
#include <tmkit/error.hpp>

#include <algorithm>

namespace tmkit
{
    namespace
    {
        auto normalised_vertices(std::vector<Vertex> vs, const Graph & g) -> std::vector<Vertex>
        {
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            for (auto v : vs)
                if (! g.has_vertex(v))
                    throw InvalidInput("separation: vertex out of range");
            return vs;
        }

        auto normalised_edges(std::vector<Edge> es, const Graph & g, const std::vector<Vertex> & side) -> std::vector<Edge>
        {
            for (auto & e : es) {
                e = make_edge(e.first, e.second);
                if (! g.adjacent(e.first, e.second))
                    throw InvalidInput("separation: side edge is not a parent edge");
                if (! std::binary_search(side.begin(), side.end(), e.first) || ! std::binary_search(side.begin(), side.end(), e.second))
                    throw InvalidInput("separation: side edge leaves its side");
            }
            std::sort(es.begin(), es.end());
            es.erase(std::unique(es.begin(), es.end()), es.end());
            return es;
        }

        auto side_graph(const RootedGraph & parent, const std::vector<Vertex> & vs, const std::vector<Edge> & es) -> Renamed<RootedGraph>
        {
            Renamed<RootedGraph> r;
            r.old_to_new.assign(parent.vertex_count(), -1);
            std::vector<int> labels;
            for (auto v : vs) {
                r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
                r.new_to_old.push_back(v);
                labels.push_back(parent.label(v));
            }
            std::vector<Edge> mapped;
            for (auto [u, v] : es)
                mapped.emplace_back(r.old_to_new[u], r.old_to_new[v]);
            r.graph = RootedGraph(Graph(static_cast<int>(vs.size()), mapped), std::move(labels));
            return r;
        }
    }

    Separation::Separation(RootedGraph parent, std::vector<Vertex> left_vertices, std::vector<Edge> left_edges,
            std::vector<Vertex> right_vertices, std::vector<Edge> right_edges) :
        _parent(std::move(parent))
    {
        const auto & g = _parent.graph();
        _left_vertices = normalised_vertices(std::move(left_vertices), g);
        _right_vertices = normalised_vertices(std::move(right_vertices), g);
        _left_edges = normalised_edges(std::move(left_edges), g, _left_vertices);
        _right_edges = normalised_edges(std::move(right_edges), g, _right_vertices);

        std::vector<Vertex> all;
        std::set_union(_left_vertices.begin(), _left_vertices.end(), _right_vertices.begin(), _right_vertices.end(), std::back_inserter(all));
        if (static_cast<int>(all.size()) != g.vertex_count())
            throw InvalidInput("separation: sides do not cover all vertices");

        std::vector<Edge> common;
        std::set_intersection(_left_edges.begin(), _left_edges.end(), _right_edges.begin(), _right_edges.end(), std::back_inserter(common));
        if (! common.empty())
            throw InvalidInput("separation: sides share an edge");
        if (_left_edges.size() + _right_edges.size() != g.edges().size())
            throw InvalidInput("separation: sides do not cover all edges");
    }

    auto Separation::from_vertex_sets(RootedGraph parent, std::vector<Vertex> left_vertices, std::vector<Vertex> right_vertices) -> Separation
    {
        std::vector<char> in_left(parent.vertex_count(), 0);
        for (auto v : left_vertices)
            if (parent.graph().has_vertex(v))
                in_left[v] = 1;
        std::vector<Edge> le, re;
        for (auto e : parent.graph().edges())
            (in_left[e.first] && in_left[e.second] ? le : re).push_back(e);
        return Separation(std::move(parent), std::move(left_vertices), std::move(le), std::move(right_vertices), std::move(re));
    }

    auto Separation::separator() const -> std::vector<Vertex>
    {
        std::vector<Vertex> s;
        std::set_intersection(_left_vertices.begin(), _left_vertices.end(), _right_vertices.begin(), _right_vertices.end(), std::back_inserter(s));
        return s;
    }

    auto Separation::left() const -> Renamed<RootedGraph>
    {
        return side_graph(_parent, _left_vertices, _left_edges);
    }

    auto Separation::right() const -> Renamed<RootedGraph>
    {
        return side_graph(_parent, _right_vertices, _right_edges);
    }

    auto replace(const Separation & sep, const RootedGraph & left_replacement) -> Replaced
    {
        const auto & parent = sep.parent();
        auto sep_vertices = sep.separator();
        for (auto v : sep_vertices)
            if (! parent.is_root(v))
                throw PreconditionFailed("replace: separator vertex " + std::to_string(v) + " is not a root");

        auto left = sep.left().graph;
        if (left.root_labels() != left_replacement.root_labels())
            throw InvalidInput("replace: replacement is not compatible with the left side (root labels differ)");

        Replaced out;
        int n1 = left_replacement.vertex_count();
        out.from_replacement.resize(n1);
        for (Vertex v = 0 ; v < n1 ; ++v)
            out.from_replacement[v] = v;

        std::vector<char> in_left(parent.vertex_count(), 0), in_sep(parent.vertex_count(), 0);
        for (auto v : sep.left_vertices())
            in_left[v] = 1;
        for (auto v : sep_vertices)
            in_sep[v] = 1;

        out.from_parent.assign(parent.vertex_count(), -1);
        std::vector<int> labels = left_replacement.labels();
        Vertex next = n1;
        for (auto v : sep.right_vertices()) {
            if (in_sep[v]) {
                auto w = left_replacement.vertex_with_label(parent.label(v));
                out.from_parent[v] = *w;
            }
            else {
                out.from_parent[v] = next++;
                labels.push_back(parent.label(v));
            }
        }

        std::vector<Edge> edges = left_replacement.graph().edges();
        for (auto [u, v] : sep.right_edges())
            edges.emplace_back(out.from_parent[u], out.from_parent[v]);
        out.graph = RootedGraph(Graph::from_edges_dedup(next, edges), std::move(labels));
        return out;
    }
}
