#include <tmkit/canonical.hpp>
#include <tmkit/error.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace tmkit
{
    namespace
    {
        // Ordered partition of the vertices into cells; refined until equitable.
        using Partition = std::vector<std::vector<Vertex>>;

        auto refine(const RootedGraph & g, Partition cells) -> Partition
        {
            const auto & graph = g.graph();
            int n = g.vertex_count();
            std::vector<int> cell_of(n);
            bool changed = true;
            while (changed) {
                changed = false;
                for (int c = 0 ; c < int(cells.size()) ; ++c)
                    for (auto v : cells[c])
                        cell_of[v] = c;

                Partition next;
                for (auto & cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::map<std::vector<int>, std::vector<Vertex>> split;
                    for (auto v : cell) {
                        std::vector<int> counts(cells.size(), 0);
                        for (auto w : graph.neighbours(v))
                            ++counts[cell_of[w]];
                        split[counts].push_back(v);
                    }
                    if (split.size() > 1)
                        changed = true;
                    for (auto & [_, part] : split)
                        next.push_back(std::move(part));
                }
                cells = std::move(next);
            }
            return cells;
        }

        auto leaf_string(const RootedGraph & g, const Partition & cells) -> std::string
        {
            int n = g.vertex_count();
            std::vector<Vertex> order;
            for (auto & c : cells)
                order.push_back(c.front());
            std::vector<int> pos(n);
            for (int i = 0 ; i < n ; ++i)
                pos[order[i]] = i;

            std::string s = std::to_string(n) + "|";
            for (int i = 0 ; i < n ; ++i) {
                if (i)
                    s += ',';
                s += std::to_string(g.label(order[i]));
            }
            s += '|';
            int nibble = 0, bits = 0;
            static const char hex[] = "0123456789abcdef";
            for (int i = 0 ; i < n ; ++i)
                for (int j = i + 1 ; j < n ; ++j) {
                    nibble = (nibble << 1) | (g.graph().adjacent(order[i], order[j]) ? 1 : 0);
                    if (++bits == 4) {
                        s += hex[nibble];
                        nibble = bits = 0;
                    }
                }
            if (bits) {
                nibble <<= (4 - bits);
                s += hex[nibble];
            }
            return s;
        }

        struct Search
        {
            const RootedGraph & g;
            std::string best;
            std::vector<Vertex> best_order;
            bool found = false;

            auto twins(Vertex u, Vertex w) const -> bool
            {
                if (g.label(u) != g.label(w))
                    return false;
                auto nu = g.graph().neighbours(u), nw = g.graph().neighbours(w);
                std::erase(nu, w);
                std::erase(nw, u);
                return nu == nw;
            }

            auto run(const Partition & cells) -> void
            {
                auto target = std::find_if(cells.begin(), cells.end(), [] (const auto & c) { return c.size() > 1; });
                if (target == cells.end()) {
                    auto s = leaf_string(g, cells);
                    if (! found || s < best) {
                        found = true;
                        best = std::move(s);
                        best_order.clear();
                        for (auto & c : cells)
                            best_order.push_back(c.front());
                    }
                    return;
                }

                auto idx = target - cells.begin();
                std::vector<Vertex> tried;
                for (auto v : *target) {
                    if (std::any_of(tried.begin(), tried.end(), [&] (Vertex t) { return twins(t, v); }))
                        continue;
                    tried.push_back(v);
                    Partition next;
                    for (int c = 0 ; c < int(cells.size()) ; ++c) {
                        if (c == idx) {
                            next.push_back({ v });
                            std::vector<Vertex> rest;
                            for (auto w : cells[c])
                                if (w != v)
                                    rest.push_back(w);
                            next.push_back(std::move(rest));
                        }
                        else
                            next.push_back(cells[c]);
                    }
                    run(refine(g, std::move(next)));
                }
            }
        };

        auto search(const RootedGraph & g, const Ceilings & ceilings) -> Search
        {
            check_ceiling("canonical_vertices", ceilings.canonical_vertices, g.vertex_count());
            Search s{ g, {}, {}, false };
            std::map<std::pair<int, int>, std::vector<Vertex>> initial;
            for (Vertex v = 0 ; v < g.vertex_count() ; ++v)
                initial[{ g.label(v) == 0 ? 0 : 1 + g.label(v), g.graph().degree(v) }].push_back(v);
            Partition cells;
            for (auto & [_, c] : initial)
                cells.push_back(std::move(c));
            if (cells.empty()) {
                s.best = leaf_string(g, cells);
                s.found = true;
                return s;
            }
            s.run(refine(g, std::move(cells)));
            return s;
        }
    }

    auto canonical_form(const RootedGraph & g, const Ceilings & ceilings) -> std::string
    {
        return search(g, ceilings).best;
    }

    auto canonical_form(const Graph & g, const Ceilings & ceilings) -> std::string
    {
        return canonical_form(RootedGraph(g), ceilings);
    }

    auto canonical_order(const RootedGraph & g, const Ceilings & ceilings) -> std::vector<Vertex>
    {
        return search(g, ceilings).best_order;
    }

    auto decode_canonical(const std::string & form) -> RootedGraph
    {
        auto bar1 = form.find('|'), bar2 = form.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
        if (bar1 == std::string::npos || bar2 == std::string::npos)
            throw InvalidInput("malformed canonical form: " + form);
        int n = std::stoi(form.substr(0, bar1));
        std::vector<int> labels;
        std::stringstream ls(form.substr(bar1 + 1, bar2 - bar1 - 1));
        for (std::string item ; std::getline(ls, item, ',') ; )
            if (! item.empty())
                labels.push_back(std::stoi(item));
        if (int(labels.size()) != n)
            throw InvalidInput("malformed canonical form labels: " + form);
        auto hexpart = form.substr(bar2 + 1);
        std::vector<Edge> edges;
        int bit = 0;
        auto get = [&] (int b) {
            int digit = b / 4;
            if (digit >= int(hexpart.size()))
                throw InvalidInput("malformed canonical form adjacency: " + form);
            char c = hexpart[digit];
            int value = (c >= 'a') ? c - 'a' + 10 : c - '0';
            return (value >> (3 - b % 4)) & 1;
        };
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (get(bit++))
                    edges.emplace_back(i, j);
        return RootedGraph(Graph(n, edges), labels);
    }
}
