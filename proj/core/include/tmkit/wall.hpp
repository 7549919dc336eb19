#pragma once

#include <tmkit/embedding.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/witness.hpp>

#include <vector>

namespace tmkit
{
    /// A subdivision of the h x r elementary wall together with the data that
    /// makes it checkable: the elementary wall, where its vertices and edges
    /// went, a planar drawing, and the pegs.
    struct Wall
    {
        Graph graph;
        int height = 0, width = 0;

        /// images of the elementary wall's degree-2 outer-boundary vertices, sorted
        std::vector<Vertex> pegs;
        /// pegs in cyclic order along the outer boundary, starting at the top-left
        std::vector<Vertex> peg_order;

        Graph elementary;
        /// elementary vertex -> 1-based (row, column) in the h x 2r grid
        std::vector<std::pair<int, int>> elementary_position;
        /// elementary-wall certificate: branch images and one host path per elementary edge
        Witness certificate;
        /// host vertex -> elementary vertex whose grid-minor branch set absorbs it
        std::vector<Vertex> anchor;
        std::vector<Point> coordinates;

        auto embedding() const -> EmbeddedGraph;
    };

    /// The elementary wall: the h x 2r grid with alternate column
    /// edges removed and then every degree-1 vertex removed (one pass).
    auto generate_elementary_wall(int h, int r) -> Wall;

    /// Every edge of the wall replaced by a path with `times` interior vertices.
    auto subdivide_wall(const Wall & w, int times) -> Wall;

    struct WallInGrid
    {
        Graph grid;
        Wall wall;
        /// maps the elementary wall into the grid edge by edge
        Witness certificate;
    };

    /// The h x 2r grid and the elementary wall sitting inside it as a subgraph.
    auto wall_in_grid(int h, int r) -> WallInGrid;

    /// Model of the h x r grid as a minor of the wall: row i, columns 2j-1 and
    /// 2j of the underlying grid form branch set (i, j); subdivision vertices
    /// join the branch set of their anchor.
    auto grid_minor_of_wall(const Wall & w) -> GridModel;

    /// Host vertices of the centred sub-wall of the given height and width
    /// (elementary rows/brick-columns, off-by-one towards the top-left),
    /// including subdivision vertices on edges inside it.
    auto centred_subwall_vertices(const Wall & w, int side_h, int side_r) -> std::vector<Vertex>;
}
