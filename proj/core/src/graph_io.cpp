#include <tmkit/graph_io.hpp>
#include <tmkit/error.hpp>

#include <fstream>
#include <sstream>

namespace tmkit
{
    auto GraphFile::embedding() const -> EmbeddedGraph
    {
        return embed_from_faces(graph.graph(), faces);
    }

    auto read_graph(std::istream & in) -> GraphFile
    {
        std::string line;
        int line_no = 0, n = -1;
        std::vector<Edge> edges;
        std::vector<std::pair<Vertex, int>> roots;
        GraphFile file;

        auto fail = [&] (const std::string & why) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
        };
        auto read_int = [&] (std::istringstream & s) {
            long long v;
            if (! (s >> v))
                fail("expected an integer");
            if (v < -2147483647LL || v > 2147483647LL)
                fail("integer out of range");
            return static_cast<int>(v);
        };

        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream s(line);
            std::string tag;
            if (! (s >> tag) || tag[0] == '#')
                continue;
            if (tag == "tm") {
                if (n != -1)
                    fail("repeated header");
                n = read_int(s);
                if (n < 0)
                    fail("negative vertex count");
            }
            else {
                if (n == -1)
                    fail("missing 'tm <n>' header");
                if (tag == "e") {
                    int u = read_int(s), v = read_int(s);
                    edges.emplace_back(u, v);
                }
                else if (tag == "r") {
                    int v = read_int(s), label = read_int(s);
                    if (v < 0 || v >= n)
                        fail("root vertex out of range");
                    if (label <= 0)
                        fail("root labels must be positive");
                    roots.emplace_back(v, label);
                }
                else if (tag == "f") {
                    std::vector<Vertex> walk;
                    long long v;
                    while (s >> v) {
                        if (v < 0 || v >= n)
                            fail("face vertex out of range");
                        walk.push_back(static_cast<Vertex>(v));
                    }
                    if (walk.empty())
                        fail("empty face");
                    file.faces.push_back(std::move(walk));
                    continue;
                }
                else
                    fail("unknown line type '" + tag + "'");
            }
            std::string extra;
            if (s >> extra && extra[0] != '#')
                fail("trailing text '" + extra + "'");
        }
        if (n == -1)
            throw InvalidInput("missing 'tm <n>' header");

        std::vector<int> labels(n, 0);
        for (auto [v, label] : roots) {
            if (labels[v] != 0)
                throw InvalidInput("vertex " + std::to_string(v) + " rooted twice");
            labels[v] = label;
        }
        file.graph = RootedGraph(Graph(n, edges), std::move(labels));
        if (file.has_embedding())
            (void) file.embedding();
        return file;
    }

    auto read_graph_file(const std::string & path) -> GraphFile
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open graph file '" + path + "'");
        return read_graph(in);
    }

    auto parse_graph(const std::string & text) -> GraphFile
    {
        std::istringstream in(text);
        return read_graph(in);
    }

    auto write_graph(std::ostream & out, const RootedGraph & g, const std::vector<std::vector<Vertex>> & faces) -> void
    {
        out << "tm " << g.vertex_count() << '\n';
        for (auto [u, v] : g.graph().edges())
            out << "e " << u << ' ' << v << '\n';
        for (auto v : g.roots())
            out << "r " << v << ' ' << g.label(v) << '\n';
        for (auto & walk : faces) {
            out << 'f';
            for (auto v : walk)
                out << ' ' << v;
            out << '\n';
        }
    }

    auto format_graph(const RootedGraph & g, const std::vector<std::vector<Vertex>> & faces) -> std::string
    {
        std::ostringstream out;
        write_graph(out, g, faces);
        return out.str();
    }
}
