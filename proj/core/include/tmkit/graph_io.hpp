#pragma once

#include <tmkit/embedding.hpp>
#include <tmkit/graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tmkit
{
    /// Contents of a graph file:
    ///   tm <n>
    ///   e <u> <v>          one per edge
    ///   r <v> <label>      one per root
    ///   f <v1> <v2> ...    optional facial walks, the first one the outer face
    /// Blank lines and lines starting with '#' are ignored. Indices are 0-based.
    struct GraphFile
    {
        RootedGraph graph;
        std::vector<std::vector<Vertex>> faces;

        auto has_embedding() const -> bool { return ! faces.empty(); }
        auto embedding() const -> EmbeddedGraph;
    };

    auto read_graph(std::istream & in) -> GraphFile;
    auto read_graph_file(const std::string & path) -> GraphFile;
    auto parse_graph(const std::string & text) -> GraphFile;

    auto write_graph(std::ostream & out, const RootedGraph & g, const std::vector<std::vector<Vertex>> & faces = {}) -> void;
    auto format_graph(const RootedGraph & g, const std::vector<std::vector<Vertex>> & faces = {}) -> std::string;
}
