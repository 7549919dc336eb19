#include <doctest.h>

#include <tmkit/error.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/planar.hpp>
#include <tmkit/random.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace tmkit;

namespace
{
    auto sorted(std::vector<Vertex> v) -> std::vector<Vertex>
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    /// vertices of the square ring at Chebyshev distance d from (ci, cj) in an n x n grid
    auto ring(int n, int ci, int cj, int d) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (int i = 0 ; i < n ; ++i)
            for (int j = 0 ; j < n ; ++j)
                if (std::max(std::abs(i - ci), std::abs(j - cj)) == d)
                    out.push_back(grid_vertex(n, i, j));
        return out;
    }

    /// ring in cyclic order, clockwise from the top-left corner
    auto ring_cycle(int n, int ci, int cj, int d) -> Cycle
    {
        Cycle out;
        for (int j = cj - d ; j < cj + d ; ++j)
            out.push_back(grid_vertex(n, ci - d, j));
        for (int i = ci - d ; i < ci + d ; ++i)
            out.push_back(grid_vertex(n, i, cj + d));
        for (int j = cj + d ; j > cj - d ; --j)
            out.push_back(grid_vertex(n, ci + d, j));
        for (int i = ci + d ; i > ci - d ; --i)
            out.push_back(grid_vertex(n, i, cj - d));
        return out;
    }

    /// centre 0, a 4-cycle and three 8-cycles drawn as concentric polygons,
    /// consecutive polygons joined by four spokes
    struct Onion
    {
        EmbeddedGraph eg;
        std::vector<Cycle> layers;
    };

    auto onion() -> Onion
    {
        std::vector<Point> pts{ { 0.0, 0.0 } };
        std::vector<Edge> edges;
        std::vector<Cycle> layers;
        auto polygon = [&] (int count, double radius) {
            Cycle c;
            for (int i = 0 ; i < count ; ++i) {
                double a = 2 * std::numbers::pi * i / count;
                c.push_back(static_cast<Vertex>(pts.size()));
                pts.emplace_back(radius * std::cos(a), radius * std::sin(a));
            }
            for (int i = 0 ; i < count ; ++i)
                edges.emplace_back(c[i], c[(i + 1) % count]);
            layers.push_back(c);
        };
        polygon(4, 1);
        for (int i = 0 ; i < 4 ; ++i)
            edges.emplace_back(0, layers[0][i]);
        for (int l = 1 ; l <= 3 ; ++l) {
            polygon(8, l + 1);
            for (int i = 0 ; i < 4 ; ++i) {
                auto step = layers[l - 1].size() == 4 ? 1 : 2;
                edges.emplace_back(layers[l - 1][i * step], layers[l][i * 2]);
            }
        }
        Graph g(static_cast<int>(pts.size()), edges);
        return { embed_from_coordinates(g, pts), layers };
    }

    auto same(const Cycle & a, const Cycle & b) -> bool
    {
        return normalize_cycle(a) == normalize_cycle(b);
    }

    auto instance_on(const Graph & g, std::vector<std::pair<Vertex, Vertex>> pairs) -> DisjointPathsInstance
    {
        return { g, std::move(pairs) };
    }

    auto without(const DisjointPathsInstance & inst, Vertex v) -> DisjointPathsInstance
    {
        Vertex gone[] = { v };
        auto h = delete_vertices(inst.graph, gone);
        DisjointPathsInstance out{ h.graph, {} };
        for (auto [s, t] : inst.pairs)
            out.pairs.emplace_back(h.old_to_new[s], h.old_to_new[t]);
        return out;
    }

    auto boundary(int n) -> std::vector<Vertex>
    {
        return ring(n, n / 2, n / 2, n / 2);
    }
}

TEST_SUITE("planar-irrelevant")
{
    TEST_CASE("faces of small embeddings")
    {
        std::vector<Point> square{ { 0, 0 }, { 1, 0 }, { 1, 1 }, { 0, 1 } };
        CHECK(embed_from_coordinates(cycle_graph(4), square).face_count() == 2);

        std::vector<Point> k4{ { 0, 0 }, { 4, 0 }, { 2, 4 }, { 2, 1 } };
        CHECK(embed_from_coordinates(complete_graph(4), k4).face_count() == 4);

        auto grid = embedded_grid(3, 3);
        CHECK(grid.face_count() == 5);
        int outer = 0;
        for (int f = 0 ; f < grid.face_count() ; ++f)
            if (grid.is_outer(f)) {
                ++outer;
                CHECK(grid.faces()[f].vertices.size() == 8);
            }
            else
                CHECK(grid.faces()[f].vertices.size() == 4);
        CHECK(outer == 1);
    }

    TEST_CASE("normalized cycles and interiors")
    {
        CHECK(normalize_cycle({ 5, 2, 7, 3 }) == Cycle{ 2, 5, 3, 7 });
        CHECK(normalize_cycle({ 3, 7, 2, 5 }) == Cycle{ 2, 5, 3, 7 });

        auto grid = embedded_grid(3, 3);
        CHECK(cycle_interior(grid, ring_cycle(3, 1, 1, 1)) == std::vector<Vertex>{ 4 });
        CHECK(cycle_interior(grid, Cycle{ 0, 1, 4, 3 }).empty());

        auto big = embedded_grid(5, 5);
        auto inside = sorted(cycle_interior(big, ring_cycle(5, 2, 2, 2)));
        auto expect = ring(5, 2, 2, 1);
        expect.push_back(12);
        CHECK(inside == sorted(expect));
        CHECK_THROWS_AS(cycle_interior(big, Cycle{ 0, 1, 2 }), InvalidInput);
    }

    TEST_CASE("innermost enclosing cycles")
    {
        auto grid = embedded_grid(5, 5);
        Vertex centre[] = { 12 };
        auto c = innermost_enclosing_cycle(grid, centre);
        REQUIRE(c);
        CHECK(sorted(*c) == ring(5, 2, 2, 1));

        auto disc = ring(5, 2, 2, 1);
        disc.push_back(12);
        auto c2 = innermost_enclosing_cycle(grid, disc);
        REQUIRE(c2);
        CHECK(sorted(*c2) == ring(5, 2, 2, 2));

        disc = sorted(disc);
        std::vector<Vertex> most;
        for (Vertex v = 0 ; v < 25 ; ++v)
            if (! std::binary_search(disc.begin(), disc.end(), v))
                most.push_back(v);
        most.pop_back();
        CHECK_FALSE(innermost_enclosing_cycle(grid, disc, most));

        Vertex corner[] = { 0 };
        CHECK_FALSE(innermost_enclosing_cycle(grid, corner));
    }

    TEST_CASE("concentric rings of odd grids")
    {
        for (int k = 1 ; k <= 3 ; ++k) {
            int n = 2 * k + 1;
            auto grid = embedded_grid(n, n);
            Vertex centre = grid_vertex(n, k, k);
            auto cs = concentric_cycles(grid, centre, k - 1);
            REQUIRE(cs);
            CHECK(cs->center == centre);
            CHECK(cs->tight);
            REQUIRE(static_cast<int>(cs->cycles.size()) == k);
            for (int d = 1 ; d <= k ; ++d) {
                CHECK(sorted(cs->cycles[d - 1]) == ring(n, k, k, d));
                CHECK(same(cs->cycles[d - 1], ring_cycle(n, k, k, d)));
            }
            CHECK_FALSE(concentric_problem(grid, *cs));
            CHECK_FALSE(concentric_cycles(grid, centre, k));
        }

        auto five = embedded_grid(5, 5);
        auto cs = concentric_cycles(five, 12, 1);
        REQUIRE(cs);
        CHECK_FALSE(tightness_problem(five, *cs));

        std::vector<Point> line;
        for (int i = 0 ; i < 6 ; ++i)
            line.emplace_back(i, 0);
        auto tree = embed_from_coordinates(path_graph(6), line);
        CHECK_FALSE(concentric_cycles(tree, 2, 0));
        CHECK_THROWS_AS(concentric_cycles(five, 12, -1), InvalidInput);
        CHECK_THROWS_AS(concentric_cycles(five, 25, 0), InvalidInput);
    }

    TEST_CASE("broken sequences are reported")
    {
        auto grid = embedded_grid(5, 5);
        CycleSequence reversed{ 12, { ring_cycle(5, 2, 2, 2), ring_cycle(5, 2, 2, 1) }, false };
        CHECK(concentric_problem(grid, reversed));
        CycleSequence on_centre{ 6, { ring_cycle(5, 2, 2, 1) }, false };
        CHECK(concentric_problem(grid, on_centre));
        CycleSequence off{ 0, { ring_cycle(5, 2, 2, 1) }, false };
        CHECK(concentric_problem(grid, off));
        CycleSequence broken{ 12, { Cycle{ 6, 7, 8, 13 } }, false };
        CHECK(concentric_problem(grid, broken));
        CHECK_THROWS_AS(tighten(grid, reversed), InvalidInput);
    }

    TEST_CASE("tightening a sequence with slack")
    {
        auto grid = embedded_grid(5, 5);
        CycleSequence loose{ 12, { ring_cycle(5, 2, 2, 2) }, false };
        CHECK_FALSE(concentric_problem(grid, loose));
        CHECK(tightness_problem(grid, loose));
        auto t = tighten(grid, loose);
        REQUIRE(t.cycles.size() == 1);
        CHECK(sorted(t.cycles[0]) == ring(5, 2, 2, 1));
        CHECK_FALSE(tightness_problem(grid, t));

        auto o = onion();
        CycleSequence slack{ 0, { o.layers[0], o.layers[2] }, false };
        CHECK_FALSE(concentric_problem(o.eg, slack));
        CHECK(tightness_problem(o.eg, slack));
        auto fixed = tighten(o.eg, slack);
        CHECK(fixed.tight);
        REQUIRE(fixed.cycles.size() == 2);
        CHECK(same(fixed.cycles[0], o.layers[0]));
        CHECK(same(fixed.cycles[1], o.layers[1]));
        CHECK_FALSE(tightness_problem(o.eg, fixed));
        CHECK(tighten(o.eg, fixed) == fixed);

        auto peeled = concentric_cycles(o.eg, 0, 3);
        REQUIRE(peeled);
        for (int i = 0 ; i < 4 ; ++i)
            CHECK(same(peeled->cycles[i], o.layers[i]));

        CycleSequence wide{ 0, { o.layers[0], o.layers[3] }, false };
        Ceilings small;
        small.tightness_vertices = 20;
        CHECK_THROWS_AS(tightness_problem(o.eg, wide, small), CeilingExceeded);
    }

    TEST_CASE("irrelevant vertex in a grid with corner terminals")
    {
        for (int r = 1 ; r <= 2 ; ++r) {
            int n = 2 * r + 5;
            auto grid = embedded_grid(n, n);
            auto corner = [&] (int i, int j) { return grid_vertex(n, i * (n - 1), j * (n - 1)); };
            auto inst = instance_on(grid.graph(), { { corner(0, 0), corner(1, 1) }, { corner(0, 1), corner(1, 0) } });
            auto found = dp_irrelevant_vertex(grid, inst, r);
            REQUIRE(found);
            int c = n / 2;
            CHECK(found->vertex == grid_vertex(n, c, c));
            CHECK(found->certificate.center == found->vertex);
            REQUIRE(static_cast<int>(found->certificate.cycles.size()) == r + 1);
            for (int d = 1 ; d <= r + 1 ; ++d)
                CHECK(sorted(found->certificate.cycles[d - 1]) == ring(n, c, c, d));
            CHECK_FALSE(concentric_problem(grid, found->certificate));
        }

        auto grid = embedded_grid(9, 9);
        auto inst = instance_on(grid.graph(), { { 40, 0 }, { 8, 80 } });
        CHECK_FALSE(dp_irrelevant_vertex(grid, inst, 2));

        CHECK_THROWS_AS(dp_irrelevant_vertex(grid, inst, 0), InvalidInput);
        auto other = instance_on(generate_grid(9, 8), { { 0, 1 } });
        CHECK_THROWS_AS(dp_irrelevant_vertex(grid, other, 1), InvalidInput);
    }

    TEST_CASE("deleting the irrelevant vertex keeps the answer")
    {
        Rng rng(2024);
        Ceilings wide;
        wide.disjoint_paths_vertices = 100;
        int found = 0, yes = 0;
        for (int round = 0 ; round < 40 ; ++round) {
            int r = 1 + round % 2;
            int n = 2 * r + 5;
            auto grid = embedded_grid(n, n);
            auto ends = boundary(n);
            rng.shuffle(ends);
            int k = static_cast<int>(rng.uniform(1, 3));
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (int i = 0 ; i < k ; ++i)
                pairs.emplace_back(ends[2 * i], ends[2 * i + 1]);
            auto inst = instance_on(grid.graph(), pairs);
            auto v = dp_irrelevant_vertex(grid, inst, r);
            REQUIRE(v);
            ++found;
            CHECK_FALSE(concentric_problem(grid, v->certificate));
            auto before = disjoint_paths_brute(inst, wide);
            auto reduced = without(inst, v->vertex);
            auto after = disjoint_paths_brute(reduced, wide);
            CHECK(bool(before) == bool(after));
            if (after) {
                ++yes;
                CHECK(verify_linkage(reduced, *after));
            }
        }
        CHECK(found == 40);
        CHECK(yes > 0);
        CHECK(yes < 40);
    }

    TEST_CASE("planar grid minors")
    {
        auto grid = embedded_grid(4, 4);
        for (int r = 1 ; r <= 4 ; ++r) {
            auto m = grid_minor_planar(grid, r);
            REQUIRE(m);
            CHECK(m->rows == r);
            CHECK(verify_grid_model(grid.graph(), *m));
        }

        auto g = generate_grid(3, 3);
        auto sub = subdivide_edges(g, 2);
        auto sub_eg = embed_from_coordinates(sub, subdivide_coordinates(g, grid_coordinates(3, 3), 2));
        auto m = grid_minor_planar(sub_eg, 3);
        REQUIRE(m);
        CHECK(verify_grid_model(sub, *m));

        std::vector<Point> circle;
        for (int i = 0 ; i < 20 ; ++i)
            circle.emplace_back(std::cos(2 * std::numbers::pi * i / 20), std::sin(2 * std::numbers::pi * i / 20));
        auto cyc = embed_from_coordinates(cycle_graph(20), circle);
        auto c2 = grid_minor_planar(cyc, 2);
        REQUIRE(c2);
        CHECK(verify_grid_model(cycle_graph(20), *c2));
        CHECK_FALSE(grid_minor_planar(cyc, 3));

        std::vector<Point> line;
        for (int i = 0 ; i < 8 ; ++i)
            line.emplace_back(i, 0);
        CHECK_FALSE(grid_minor_planar(embed_from_coordinates(path_graph(8), line), 2));

        std::vector<Point> k4{ { 0, 0 }, { 4, 0 }, { 2, 4 }, { 2, 1 } };
        auto k4m = grid_minor_planar(embed_from_coordinates(complete_graph(4), k4), 2);
        REQUIRE(k4m);
        CHECK(verify_grid_model(complete_graph(4), *k4m));

        CHECK_FALSE(grid_minor_planar(embedded_grid(5, 5), 6));
        auto strip = embedded_grid(3, 12);
        CHECK_THROWS_AS(grid_minor_planar(strip, 4), CeilingExceeded);
        Ceilings roomy;
        roomy.treewidth_vertices = 40;
        CHECK_FALSE(grid_minor_planar(strip, 4, roomy));
        auto s3 = grid_minor_planar(strip, 3, roomy);
        REQUIRE(s3);
        CHECK(verify_grid_model(strip.graph(), *s3));
        CHECK_THROWS_AS(grid_minor_planar(grid, 0), InvalidInput);

        auto wall = generate_elementary_wall(4, 4);
        auto wm = grid_minor_of_wall(wall);
        CHECK(verify_grid_model(wall.graph, wm));
    }

    TEST_CASE("irrelevance chains of walls")
    {
        auto nine = generate_elementary_wall(9, 9);
        auto chain = irrelevance_chain(nine, 1, 0, 3);
        CHECK(chain.sides == std::vector<int>{ 9, 3 });
        CHECK(chain.irrelevant == chain.walls.back());

        auto eight = generate_elementary_wall(8, 8);
        auto deep = irrelevance_chain(eight, 1, 1, 2);
        CHECK(deep.sides == std::vector<int>{ 8, 4, 2 });
        REQUIRE(deep.walls.size() == 3);
        for (std::size_t i = 0 ; i + 1 < deep.walls.size() ; ++i) {
            auto outer = sorted(deep.walls[i]), inner = sorted(deep.walls[i + 1]);
            CHECK(inner.size() < outer.size());
            CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
        }
        CHECK(static_cast<int>(deep.walls[0].size()) == eight.graph.vertex_count());

        CHECK_THROWS_AS(irrelevance_chain(eight, 1, 2, 2), PreconditionFailed);
        CHECK_THROWS_AS(irrelevance_chain(eight, 0, 0, 2), InvalidInput);
        CHECK_THROWS_AS(irrelevance_chain(eight, 1, -1, 2), InvalidInput);
    }

    TEST_CASE("chain vertices are irrelevant by the oracle")
    {
        Ceilings wide;
        wide.irrelevance_vertices = 100;
        wide.tmc_brute_vertices = 100;
        auto wall = generate_elementary_wall(4, 4);
        auto chain = irrelevance_chain(wall, 1, 0, 2);
        REQUIRE_FALSE(chain.irrelevant.empty());

        RootedGraph plain(wall.graph);
        std::vector<int> labels(wall.graph.vertex_count(), 0);
        labels[wall.peg_order.front()] = 1;
        labels[wall.peg_order[wall.peg_order.size() / 2]] = 2;
        RootedGraph rooted(wall.graph, labels);
        for (auto v : chain.irrelevant) {
            CHECK(is_dk_irrelevant_brute(plain, v, 1, 0, wide));
            CHECK(is_dk_irrelevant_brute(rooted, v, 1, 0, wide));
        }
    }
}
