#include <doctest.h>

#include <tmkit/canonical.hpp>
#include <tmkit/embedding.hpp>
#include <tmkit/error.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/graph.hpp>
#include <tmkit/graph_io.hpp>
#include <tmkit/pattern.hpp>
#include <tmkit/random.hpp>
#include <tmkit/separation.hpp>
#include <tmkit/wall.hpp>
#include <tmkit/witness.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace tmkit;

namespace
{
    // canonical string by trying every vertex permutation; independent of canonical_form
    auto brute_canonical(int n, const std::vector<Edge> & edges, const std::vector<int> & labels) -> std::string
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : edges)
            adj[u][v] = adj[v][u] = 1;
        std::string best;
        bool first = true;
        do {
            std::string s;
            for (int i = 0 ; i < n ; ++i)
                s += std::to_string(labels[perm[i]]) + ",";
            for (int i = 0 ; i < n ; ++i)
                for (int j = i + 1 ; j < n ; ++j)
                    s += adj[perm[i]][perm[j]] ? '1' : '0';
            if (first || s < best) {
                best = s;
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::to_string(n) + ":" + best;
    }

    auto brute_pattern_count(const std::vector<int> & root_labels, int delta) -> std::size_t
    {
        std::set<std::string> seen;
        int max_n = 2 * delta + static_cast<int>(root_labels.size());
        for (int n = 0 ; n <= max_n ; ++n) {
            std::vector<Edge> all;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    all.emplace_back(u, v);
            std::vector<Edge> chosen;
            auto with_labels = [&] (const std::vector<Edge> & edges) {
                Graph g(n, edges);
                if (detail(g) > delta)
                    return;
                std::vector<int> labels(n, 0);
                auto assign = [&] (auto & self, std::size_t i) -> void {
                    if (i == root_labels.size()) {
                        seen.insert(brute_canonical(n, edges, labels));
                        return;
                    }
                    self(self, i + 1);
                    for (int v = 0 ; v < n ; ++v)
                        if (labels[v] == 0) {
                            labels[v] = root_labels[i];
                            self(self, i + 1);
                            labels[v] = 0;
                        }
                };
                assign(assign, 0);
            };
            auto rec = [&] (auto & self, std::size_t from) -> void {
                with_labels(chosen);
                if (static_cast<int>(chosen.size()) == delta)
                    return;
                for (std::size_t i = from ; i < all.size() ; ++i) {
                    chosen.push_back(all[i]);
                    self(self, i + 1);
                    chosen.pop_back();
                }
            };
            rec(rec, 0);
        }
        return seen.size();
    }

    auto permuted(const RootedGraph & g, Rng & rng) -> RootedGraph
    {
        int n = g.vertex_count();
        std::vector<Vertex> p(n);
        std::iota(p.begin(), p.end(), 0);
        rng.shuffle(p);
        std::vector<Edge> edges;
        for (auto [u, v] : g.graph().edges())
            edges.push_back(make_edge(p[u], p[v]));
        std::vector<int> labels(n, 0);
        for (Vertex v = 0 ; v < n ; ++v)
            labels[p[v]] = g.label(v);
        return RootedGraph(Graph(n, edges), labels);
    }
}

TEST_SUITE("graph-core")
{
    TEST_CASE("graph construction rejects loops, repeats and bad endpoints")
    {
        std::vector<Edge> loop{ { 1, 1 } }, twice{ { 0, 1 }, { 1, 0 } }, far{ { 0, 3 } };
        CHECK_THROWS_AS(Graph(3, loop), InvalidInput);
        CHECK_THROWS_AS(Graph(3, twice), InvalidInput);
        CHECK_THROWS_AS(Graph(3, far), InvalidInput);
        CHECK(Graph::from_edges_dedup(3, twice).edge_count() == 1);
    }

    TEST_CASE("rooted graphs need injective positive labels")
    {
        CHECK_THROWS_AS(RootedGraph(path_graph(3), { 1, 1, 0 }), InvalidInput);
        CHECK_THROWS_AS(RootedGraph(path_graph(3), { -1, 0, 0 }), InvalidInput);
        RootedGraph g(path_graph(3), { 0, 5, 2 });
        CHECK(g.root_labels() == std::vector<int>{ 2, 5 });
        CHECK(g.vertex_with_label(5) == 1);
        CHECK(! g.vertex_with_label(3));
    }

    TEST_CASE("grid sizes")
    {
        CHECK(generate_grid(1, 1).vertex_count() == 1);
        CHECK(generate_grid(1, 1).edge_count() == 0);
        CHECK(generate_grid(2, 2).edge_count() == 4);
        CHECK(canonical_form(generate_grid(2, 2)) == canonical_form(cycle_graph(4)));
        CHECK(generate_grid(3, 4).vertex_count() == 12);
        CHECK(generate_grid(3, 4).edge_count() == 17);
        for (int a = 1 ; a <= 7 ; ++a)
            for (int b = 1 ; b <= 7 ; ++b)
                CHECK(generate_grid(a, b).edge_count() == a * (b - 1) + b * (a - 1));
    }

    TEST_CASE("vertex deletion returns the renaming")
    {
        auto r = delete_vertices(cycle_graph(5), std::vector<Vertex>{ 1, 3 });
        CHECK(r.graph.vertex_count() == 3);
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.old_to_new == std::vector<Vertex>{ 0, -1, 1, -1, 2 });
        CHECK(r.new_to_old == std::vector<Vertex>{ 0, 2, 4 });
    }

    TEST_CASE("elementary wall 2x1 is a single edge")
    {
        auto w = generate_elementary_wall(2, 1);
        CHECK(w.graph.vertex_count() == 2);
        CHECK(w.graph.edge_count() == 1);
        CHECK(w.pegs.empty());
        CHECK_THROWS_AS(generate_elementary_wall(1, 3), InvalidInput);
    }

    TEST_CASE("elementary wall 4x5")
    {
        auto w = generate_elementary_wall(4, 5);
        CHECK(w.graph.vertex_count() == 38);
        CHECK(w.graph.edge_count() == 49);
        CHECK(w.graph.max_degree() == 3);
        CHECK(w.pegs.size() == 16);
        CHECK(w.embedding().face_count() == 13);
        CHECK(w.peg_order.front() == 0);
    }

    TEST_CASE("walls of width at least two have degrees 2 and 3; pegs are the degree-2 vertices")
    {
        for (int h = 2 ; h <= 6 ; ++h)
            for (int r = 2 ; r <= 6 ; ++r) {
                auto w = generate_elementary_wall(h, r);
                std::vector<Vertex> deg2;
                for (Vertex v = 0 ; v < w.graph.vertex_count() ; ++v) {
                    CHECK((w.graph.degree(v) == 2 || w.graph.degree(v) == 3));
                    if (w.graph.degree(v) == 2)
                        deg2.push_back(v);
                }
                CHECK(w.pegs == deg2);
                CHECK(w.peg_order.size() == w.pegs.size());
                CHECK(w.embedding().face_count() == (h - 1) * (r - 1) + 1);
            }
    }

    TEST_CASE("wall in grid certificates")
    {
        for (int h = 2 ; h <= 5 ; ++h)
            for (int r = 1 ; r <= 5 ; ++r) {
                auto wg = wall_in_grid(h, r);
                CHECK(wg.grid.vertex_count() == h * 2 * r);
                CHECK(verify_subdivision(wg.grid, wg.wall.elementary, wg.certificate));
            }
        auto small = wall_in_grid(2, 1);
        CHECK(small.grid.vertex_count() == 4);
    }

    TEST_CASE("grid minor of a wall")
    {
        auto w22 = generate_elementary_wall(2, 2);
        auto m22 = grid_minor_of_wall(w22);
        CHECK(m22.branch_sets.size() == 4);
        CHECK(verify_grid_model(w22.graph, m22));

        auto w45 = generate_elementary_wall(4, 5);
        CHECK(verify_grid_model(w45.graph, grid_minor_of_wall(w45)));

        auto sub = subdivide_wall(w45, 1);
        CHECK(sub.graph.vertex_count() == 38 + 49);
        CHECK(verify_subdivision(sub.graph, sub.elementary, sub.certificate));
        auto m = grid_minor_of_wall(sub);
        CHECK(m.rows == 4);
        CHECK(m.cols == 5);
        CHECK(verify_grid_model(sub.graph, m));
        CHECK(sub.pegs.size() == 16);

        for (int h = 2 ; h <= 5 ; ++h)
            for (int r = 1 ; r <= 5 ; ++r)
                for (int t = 0 ; t <= 2 ; ++t) {
                    auto w = subdivide_wall(generate_elementary_wall(h, r), t);
                    CHECK(verify_grid_model(w.graph, grid_minor_of_wall(w)));
                }
    }

    TEST_CASE("grid model verification rejects broken models")
    {
        auto w = generate_elementary_wall(3, 3);
        auto m = grid_minor_of_wall(w);
        auto broken = m;
        broken.branch_sets[0].push_back(broken.branch_sets[1].front());
        CHECK(! verify_grid_model(w.graph, broken));
        auto swapped = m;
        std::swap(swapped.branch_sets[0], swapped.branch_sets[8]);
        CHECK(! verify_grid_model(w.graph, swapped));
    }

    TEST_CASE("replacing the left side by itself")
    {
        Rng rng(11);
        for (int round = 0 ; round < 30 ; ++round) {
            std::vector<Edge> keep;
            auto dense = random_graph(8, 2, 5, rng);
            for (auto [u, v] : dense.edges())
                if (! (u < 3 && v >= 5))
                    keep.emplace_back(u, v);
            Graph g(8, keep);
            std::vector<Vertex> left{ 0, 1, 2, 3, 4 }, right{ 3, 4, 5, 6, 7 };
            RootedGraph parent(g, { 0, 0, 0, 1, 2, 0, 0, 0 });
            auto sep = Separation::from_vertex_sets(parent, left, right);
            CHECK(sep.separator() == std::vector<Vertex>{ 3, 4 });
            auto out = replace(sep, sep.left().graph);
            CHECK(canonical_form(out.graph) == canonical_form(parent));
        }
    }

    TEST_CASE("replacing an edge by a path")
    {
        RootedGraph parent(path_graph(3), { 0, 1, 2 });
        auto sep = Separation::from_vertex_sets(parent, { 0, 1 }, { 1, 2 });
        RootedGraph longer(path_graph(3), { 0, 0, 1 });
        auto out = replace(sep, longer);
        CHECK(out.graph.vertex_count() == 4);
        CHECK(canonical_form(out.graph) == canonical_form(RootedGraph(path_graph(4), { 0, 0, 1, 2 })));
        CHECK(out.from_parent[2] != -1);
        CHECK(out.graph.label(out.from_parent[2]) == 2);
    }

    TEST_CASE("replacement preconditions")
    {
        RootedGraph parent(path_graph(3), { 0, 0, 2 });
        auto sep = Separation::from_vertex_sets(parent, { 0, 1 }, { 1, 2 });
        CHECK_THROWS_AS(replace(sep, RootedGraph(path_graph(2), { 0, 1 })), PreconditionFailed);

        RootedGraph rooted(path_graph(3), { 0, 1, 2 });
        auto sep2 = Separation::from_vertex_sets(rooted, { 0, 1 }, { 1, 2 });
        CHECK_THROWS_AS(replace(sep2, RootedGraph(path_graph(2), { 0, 3 })), InvalidInput);
    }

    TEST_CASE("separations must cover the parent without sharing edges")
    {
        RootedGraph p(cycle_graph(4));
        std::vector<Edge> all = p.graph().edges();
        CHECK_THROWS_AS(Separation(p, { 0, 1, 2, 3 }, all, { 0, 1 }, { { 0, 1 } }), InvalidInput);
        CHECK_THROWS_AS(Separation(p, { 0, 1 }, { { 0, 1 } }, { 2, 3 }, { { 2, 3 } }), InvalidInput);
        CHECK(Separation::from_vertex_sets(p, { 0, 1, 2 }, { 0, 2, 3 }).order() == 2);
    }

    TEST_CASE("pattern enumeration")
    {
        auto base = enumerate_patterns(std::vector<int>{}, 1);
        std::set<std::string> forms;
        for (auto & h : base)
            forms.insert(canonical_form(h));
        CHECK(forms == std::set<std::string>{ canonical_form(Graph(0)), canonical_form(Graph(1)), canonical_form(path_graph(2)) });

        for (int d = 1 ; d <= 3 ; ++d)
            CHECK(enumerate_patterns(std::vector<int>{}, d).size() == brute_pattern_count({}, d));
        CHECK(enumerate_patterns(std::vector<int>{}, 2).size() == 7);
        CHECK(enumerate_patterns(std::vector<int>{}, 3).size() == 16);
        CHECK(enumerate_patterns(std::vector<int>{ 1 }, 1).size() == brute_pattern_count({ 1 }, 1));
        CHECK(enumerate_patterns(std::vector<int>{ 1 }, 1).size() == 5);
        CHECK(enumerate_patterns(std::vector<int>{ 1 }, 2).size() == brute_pattern_count({ 1 }, 2));
        CHECK(enumerate_patterns(std::vector<int>{ 1, 2 }, 2).size() == brute_pattern_count({ 1, 2 }, 2));

        for (auto & h : enumerate_patterns(std::vector<int>{ 1, 2 }, 2)) {
            CHECK(detail(h) <= 2);
            CHECK(h.vertex_count() <= 2 * 2 + 2);
        }
        Ceilings tight;
        tight.pattern_detail = 2;
        CHECK_THROWS_AS(enumerate_patterns(std::vector<int>{}, 3, tight), CeilingExceeded);
    }

    TEST_CASE("patterns respect their budget")
    {
        CHECK_THROWS_AS(Pattern(RootedGraph(cycle_graph(3)), 2), InvalidInput);
        CHECK_THROWS_AS(Pattern(RootedGraph(Graph(1)), 0), InvalidInput);
        CHECK(detail(Graph(3)) == 3);
        CHECK(detail(star_graph(3)) == 3);
    }

    TEST_CASE("subdivision normal form")
    {
        // a 4-cycle with one chord, realised with path lengths 4, 3, 2, 1, 1
        Graph diamond(4, std::vector<Edge>{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 3 }, { 2, 3 } });
        std::vector<int> lengths{ 1, 3, 2, 4, 1 };
        auto h = subdivision_normal_form(RootedGraph(diamond), std::span<const int>(lengths));
        CHECK(h.vertex_count() == 9);
        CHECK(h.graph().edge_count() == 10);

        auto k4 = subdivision_normal_form(Pattern(RootedGraph(complete_graph(4)), 6));
        CHECK(k4.graph().vertex_count() == 16);
        CHECK(k4.budget() == 24);
        CHECK(detail(k4.graph()) <= 24);

        auto edge = subdivision_normal_form(RootedGraph(path_graph(2)));
        CHECK(canonical_form(edge) == canonical_form(path_graph(4)));
        auto point = subdivision_normal_form(RootedGraph(Graph(1)));
        CHECK(canonical_form(point) == canonical_form(Graph(1)));
    }

    TEST_CASE("canonical form examples")
    {
        Graph c5a = cycle_graph(5);
        Graph c5b(5, std::vector<Edge>{ { 0, 2 }, { 2, 4 }, { 4, 1 }, { 1, 3 }, { 3, 0 } });
        CHECK(canonical_form(c5a) == canonical_form(c5b));
        CHECK(canonical_form(c5a) != canonical_form(path_graph(5)));
        CHECK(canonical_form(RootedGraph(complete_graph(3), { 1, 0, 0 })) != canonical_form(RootedGraph(complete_graph(3), { 2, 0, 0 })));
        auto g = RootedGraph(petersen_graph(), { 0, 3, 0, 0, 0, 0, 0, 1, 0, 0 });
        CHECK(canonical_form(decode_canonical(canonical_form(g))) == canonical_form(g));
        Ceilings tight;
        tight.canonical_vertices = 4;
        CHECK_THROWS_AS(canonical_form(cycle_graph(5), tight), CeilingExceeded);
    }

    TEST_CASE("canonical form agrees with brute force on every graph up to five vertices")
    {
        for (int n = 1 ; n <= 5 ; ++n) {
            std::vector<Edge> all;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    all.emplace_back(u, v);
            std::map<std::string, std::string> ours_to_brute, brute_to_ours;
            for (int mask = 0 ; mask < (1 << all.size()) ; ++mask) {
                std::vector<Edge> edges;
                for (std::size_t i = 0 ; i < all.size() ; ++i)
                    if (mask >> i & 1)
                        edges.push_back(all[i]);
                std::vector<int> labels(n, 0);
                labels[0] = (mask % 3 == 0) ? 1 : 0;
                auto ours = canonical_form(RootedGraph(Graph(n, edges), labels));
                auto brute = brute_canonical(n, edges, labels);
                auto [a, fresh_a] = ours_to_brute.emplace(ours, brute);
                auto [b, fresh_b] = brute_to_ours.emplace(brute, ours);
                CHECK(a->second == brute);
                CHECK(b->second == ours);
            }
        }
    }

    TEST_CASE("canonical form is invariant under relabelling")
    {
        Rng rng(3);
        for (int round = 0 ; round < 200 ; ++round) {
            int n = static_cast<int>(rng.uniform(1, 9));
            auto g = random_rooted(random_graph(n, 1, 3, rng), static_cast<int>(rng.uniform(0, std::min(n, 3))), rng);
            CHECK(canonical_form(g) == canonical_form(permuted(g, rng)));
        }
    }

    TEST_CASE("graph text format round trip")
    {
        auto file = parse_graph("# triangle with a tail\ntm 4\ne 0 1\ne 1 2\ne 0 2\ne 2 3\nr 3 7\n");
        CHECK(file.graph.vertex_count() == 4);
        CHECK(file.graph.graph().edge_count() == 4);
        CHECK(file.graph.label(3) == 7);
        CHECK(! file.has_embedding());
        auto again = parse_graph(format_graph(file.graph));
        CHECK(again.graph == file.graph);
    }

    TEST_CASE("graph text format errors carry line numbers")
    {
        auto message = [] (const std::string & text) {
            try {
                parse_graph(text);
            }
            catch (const InvalidInput & e) {
                return std::string(e.what());
            }
            return std::string("no error");
        };
        CHECK(message("e 0 1\n").find("line 1") != std::string::npos);
        CHECK(message("tm 2\ne 0 x\n").find("line 2") != std::string::npos);
        CHECK(message("tm 2\nq 1\n").find("line 2") != std::string::npos);
        CHECK(message("tm 2\nr 0 0\n").find("line 2") != std::string::npos);
        CHECK(message("tm 2\ne 0 5\n") != "no error");
        CHECK(message("tm 2\ne 0 1\ne 1 0\n") != "no error");
        CHECK(message("tm 3\nr 0 1\nr 1 1\n") != "no error");
    }

    TEST_CASE("faces in the text format define an embedding")
    {
        auto eg = embedded_grid(3, 3);
        auto text = format_graph(RootedGraph(eg.graph()), face_walks(eg));
        auto file = parse_graph(text);
        REQUIRE(file.has_embedding());
        CHECK(file.embedding().face_count() == 5);
        CHECK_THROWS_AS(parse_graph("tm 3\ne 0 1\ne 1 2\ne 0 2\nf 0 1 2\n"), InvalidInput);
    }

    TEST_CASE("embedded grids")
    {
        for (int a = 2 ; a <= 5 ; ++a)
            for (int b = 2 ; b <= 5 ; ++b) {
                auto eg = embedded_grid(a, b);
                CHECK(eg.face_count() == (a - 1) * (b - 1) + 1);
                CHECK(eg.faces()[eg.outer_face()].vertices.size() == static_cast<std::size_t>(2 * (a + b) - 4));
                auto walks = face_walks(eg);
                auto back = embed_from_faces(eg.graph(), walks);
                CHECK(back.face_count() == eg.face_count());
                CHECK(back.faces()[back.outer_face()].vertices.size() == eg.faces()[eg.outer_face()].vertices.size());
            }
    }

    TEST_CASE("deleting vertices keeps a valid embedding")
    {
        auto eg = embedded_grid(4, 4);
        auto r = delete_vertices(eg, std::vector<Vertex>{ 5 });
        CHECK(r.graph.face_count() == 9 - 4 + 1 + 1);
        auto r2 = delete_vertices(eg, std::vector<Vertex>{ 0, 1, 2, 3 });
        CHECK(r2.graph.faces()[r2.graph.outer_face()].vertices.size() == 10);
    }
}
