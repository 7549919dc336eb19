#pragma once

#include <tmkit/generators.hpp>
#include <tmkit/graph.hpp>

#include <span>
#include <vector>

namespace tmkit
{
    /// A face as the closed walk of its boundary: the darts are
    /// (vertices[i] -> vertices[i + 1 mod size]). An isolated vertex has a
    /// single face with one vertex and no darts.
    struct Face
    {
        std::vector<Vertex> vertices;

        auto operator== (const Face &) const -> bool = default;
    };

    /// Graph with a rotation system. rotation(v) lists v's neighbours in
    /// counter-clockwise order; the face following dart u->v continues with
    /// v->w where w is the successor of u in rotation(v). Inner faces of a
    /// straight-line drawing are then walked clockwise.
    class EmbeddedGraph
    {
        public:
            EmbeddedGraph() = default;

            /// Throws InvalidInput if a rotation is not a permutation of the
            /// neighbourhood or Euler's formula fails. outer_faces holds, per
            /// connected component, a dart (u, v) lying on that component's
            /// outer face; missing components get their first face.
            EmbeddedGraph(Graph g, std::vector<std::vector<Vertex>> rotation, std::vector<std::pair<Vertex, Vertex>> outer_darts);

            auto graph() const -> const Graph & { return _graph; }
            auto rotation(Vertex v) const -> const std::vector<Vertex> & { return _rotation[v]; }
            auto faces() const -> const std::vector<Face> & { return _faces; }
            auto face_count() const -> int { return static_cast<int>(_faces.size()); }

            /// Face on which dart u->v lies.
            auto face_of(Vertex u, Vertex v) const -> int;

            /// Face of an isolated vertex.
            auto face_of_isolated(Vertex v) const -> int;

            auto is_outer(int face) const -> bool { return _outer[face]; }

            /// The outer face of the component containing vertex 0 (or of the
            /// first component).
            auto outer_face() const -> int;

            /// Successor of u in the rotation at v.
            auto next_around(Vertex v, Vertex u) const -> Vertex;

        private:
            Graph _graph;
            std::vector<std::vector<Vertex>> _rotation;
            std::vector<std::vector<int>> _dart_face;   // indexed like graph().neighbours(v)
            std::vector<std::vector<int>> _rot_pos;     // position of neighbours(v)[i] in rotation(v)
            std::vector<int> _isolated_face;
            std::vector<Face> _faces;
            std::vector<char> _outer;
            int _first_outer = -1;
    };

    /// Rotation from the angles of a straight-line drawing; the outer face of
    /// each component is its face of largest signed area.
    auto embed_from_coordinates(const Graph & g, std::span<const Point> coords) -> EmbeddedGraph;

    /// Rotation derived from a list of facial walks, the first being the
    /// outer face. Walks may be given in either global orientation.
    auto embed_from_faces(const Graph & g, std::span<const std::vector<Vertex>> faces) -> EmbeddedGraph;

    /// Faces of the embedding (Euler's formula is enforced on construction).
    auto compute_faces(const EmbeddedGraph & eg) -> std::vector<Face>;

    /// Walks of every face, outer face first, ready for serialisation.
    auto face_walks(const EmbeddedGraph & eg) -> std::vector<std::vector<Vertex>>;

    /// Sub-embedding with the rotation restricted to surviving vertices.
    auto delete_vertices(const EmbeddedGraph & eg, std::span<const Vertex> gone) -> Renamed<EmbeddedGraph>;

    auto embedded_grid(int a, int b) -> EmbeddedGraph;
}
