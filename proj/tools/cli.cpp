#include "cli.hpp"

#include <tmkit/canonical.hpp>
#include <tmkit/disjoint_paths.hpp>
#include <tmkit/error.hpp>
#include <tmkit/folio.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/graph_io.hpp>
#include <tmkit/planar.hpp>
#include <tmkit/random.hpp>
#include <tmkit/separators.hpp>
#include <tmkit/solver.hpp>
#include <tmkit/tmc_brute.hpp>
#include <tmkit/treewidth.hpp>
#include <tmkit/twdp.hpp>
#include <tmkit/wall.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

namespace tmkit::cli
{
    namespace
    {
        using json = nlohmann::ordered_json;

        struct CeilingField
        {
            const char * name;
            std::variant<int Ceilings::*, long long Ceilings::*> field;
        };

        const CeilingField ceiling_fields[] = {
            { "canonical_vertices", &Ceilings::canonical_vertices },
            { "pattern_detail", &Ceilings::pattern_detail },
            { "pattern_roots", &Ceilings::pattern_roots },
            { "tmc_brute_vertices", &Ceilings::tmc_brute_vertices },
            { "pattern_vertices", &Ceilings::pattern_vertices },
            { "disjoint_paths_vertices", &Ceilings::disjoint_paths_vertices },
            { "disjoint_paths_pairs", &Ceilings::disjoint_paths_pairs },
            { "disjoint_paths_states", &Ceilings::disjoint_paths_states },
            { "minor_brute_vertices", &Ceilings::minor_brute_vertices },
            { "minor_brute_pattern", &Ceilings::minor_brute_pattern },
            { "tmdel_vertices", &Ceilings::tmdel_vertices },
            { "tmdel_budget", &Ceilings::tmdel_budget },
            { "irrelevance_vertices", &Ceilings::irrelevance_vertices },
            { "irrelevance_budget", &Ceilings::irrelevance_budget },
            { "irrelevance_detail", &Ceilings::irrelevance_detail },
            { "treewidth_vertices", &Ceilings::treewidth_vertices },
            { "treewidth_states", &Ceilings::treewidth_states },
            { "dp_width", &Ceilings::dp_width },
            { "dp_table_states", &Ceilings::dp_table_states },
            { "folio_roots", &Ceilings::folio_roots },
            { "tightness_vertices", &Ceilings::tightness_vertices },
        };

        auto flag_name(std::string name) -> std::string
        {
            std::replace(name.begin(), name.end(), '_', '-');
            return "--ceiling-" + name;
        }

        auto ceilings_json(const Ceilings & c) -> json
        {
            json out = json::object();
            for (auto & f : ceiling_fields)
                std::visit([&] (auto member) { out[f.name] = c.*member; }, f.field);
            return out;
        }

        /// A negative answer: reported with exit code 1.
        struct Negative
        {
        };

        auto braces(const std::vector<Vertex> & vs) -> std::string
        {
            std::string s = "{";
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                s += (i ? ", " : "") + std::to_string(vs[i]);
            return s + "}";
        }

        auto graph_json(const RootedGraph & g) -> json
        {
            return { { "vertices", g.vertex_count() }, { "edges", g.graph().edge_count() }, { "roots", g.root_count() } };
        }

        auto witness_json(const Witness & w) -> json
        {
            return { { "branch", w.branch }, { "paths", w.paths } };
        }

        auto witness_from_json(const json & j) -> Witness
        {
            Witness w;
            try {
                w.branch = j.at("branch").get<std::vector<Vertex>>();
                w.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
            }
            catch (const json::exception & e) {
                throw InvalidInput(std::string("malformed witness: ") + e.what());
            }
            return w;
        }

        auto decomposition_json(const TreeDecomposition & td) -> json
        {
            return { { "width", td.width() }, { "root", td.root }, { "bags", td.bags }, { "parent", td.parent } };
        }

        auto folio_json(const ExtendedFolio & f) -> json
        {
            json entries = json::array();
            for (auto & [mask, folio] : f.entries)
                entries.push_back({ { "mask", mask }, { "patterns", json(std::vector<std::string>(folio.patterns.begin(), folio.patterns.end())) } });
            return { { "delta", f.delta }, { "labels", f.labels }, { "entries", entries } };
        }

        auto write_text(const std::string & path, const std::string & text) -> void
        {
            std::ofstream file(path);
            if (! file)
                throw InvalidInput("cannot write " + path);
            file << text;
            if (! file)
                throw InvalidInput("cannot write " + path);
        }

        auto read_text(const std::string & path) -> std::string
        {
            std::ifstream file(path);
            if (! file)
                throw InvalidInput("cannot read " + path);
            std::stringstream ss;
            ss << file.rdbuf();
            return ss.str();
        }

        auto read_json(const std::string & path) -> json
        {
            try {
                return json::parse(read_text(path));
            }
            catch (const json::parse_error & e) {
                throw InvalidInput(path + ": " + e.what());
            }
        }

        auto require_vertices(const Graph & g, const std::vector<Vertex> & vs, const char * what) -> void
        {
            for (auto v : vs)
                if (! g.has_vertex(v))
                    throw InvalidInput(std::string(what) + " vertex " + std::to_string(v) + " out of range");
        }

        auto forbidden_patterns(const std::vector<std::string> & paths) -> std::vector<Graph>
        {
            std::vector<Graph> out;
            for (auto & p : paths) {
                auto file = read_graph_file(p);
                if (file.graph.root_count() > 0)
                    throw InvalidInput(p + ": forbidden patterns may not carry roots");
                out.push_back(file.graph.graph());
            }
            return out;
        }

        auto engine_of(const std::string & name) -> Engine
        {
            return name == "brute" ? Engine::brute : Engine::dp;
        }

        struct Options
        {
            std::string json_path;
            std::uint64_t seed = 1;
            Ceilings ceilings;

            std::string graph, output, engine = "dp";
            std::vector<std::string> patterns;
            std::vector<Vertex> x, y;
            int delta = 1, k = 0, r = 1;

            std::string gen_kind;
            std::vector<int> gen_params;
            int subdivide = 0, roots = 0;

            std::optional<int> window;
            bool count_only = false;
            bool irrelevant = false, no_memo = false;
            std::vector<int> wall;
            int shrink = 2;
            bool check = false;

            std::string td, witness;
            std::optional<std::string> solution, separator;
            bool embedding = false;
        };

        auto parse_list(const std::string & text) -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            std::string token;
            std::stringstream ss(text);
            while (ss >> token) {
                std::stringstream parts(token);
                std::string item;
                while (std::getline(parts, item, ','))
                    if (! item.empty()) {
                        std::size_t used = 0;
                        int v = -1;
                        try {
                            v = std::stoi(item, &used);
                        }
                        catch (const std::exception &) {
                            used = 0;
                        }
                        if (used != item.size())
                            throw InvalidInput("not a vertex: " + item);
                        out.push_back(v);
                    }
            }
            return out;
        }

        struct Context
        {
            Options & o;
            std::ostream & out;
            json & result;
        };

        auto cmd_gen(Context & c) -> void
        {
            auto & o = c.o;
            auto & p = o.gen_params;
            auto need = [&] (std::size_t count) {
                if (p.size() != count)
                    throw InvalidInput("gen " + o.gen_kind + " takes " + std::to_string(count) + " parameters");
                for (auto v : p)
                    if (v < 0)
                        throw InvalidInput("gen parameters must be non-negative");
            };
            if (o.subdivide < 0 || o.roots < 0)
                throw InvalidInput("--subdivide and --roots must be non-negative");
            Rng rng(o.seed);
            Graph g;
            std::optional<EmbeddedGraph> eg;
            const auto & kind = o.gen_kind;
            if (kind == "grid") {
                need(2);
                if (p[0] < 1 || p[1] < 1)
                    throw InvalidInput("grid sides must be positive");
                auto base = generate_grid(p[0], p[1]);
                g = subdivide_edges(base, o.subdivide);
                eg = embed_from_coordinates(g, subdivide_coordinates(base, grid_coordinates(p[0], p[1]), o.subdivide));
            }
            else if (kind == "wall") {
                need(2);
                auto w = subdivide_wall(generate_elementary_wall(p[0], p[1]), o.subdivide);
                g = w.graph;
                eg = w.embedding();
            }
            else {
                Graph base;
                if (kind == "path")
                    need(1), base = path_graph(p[0]);
                else if (kind == "cycle") {
                    need(1);
                    base = cycle_graph(p[0]);
                    std::vector<Point> pts;
                    for (int i = 0 ; i < p[0] ; ++i)
                        pts.emplace_back(std::cos(2 * std::numbers::pi * i / p[0]), std::sin(2 * std::numbers::pi * i / p[0]));
                    g = subdivide_edges(base, o.subdivide);
                    eg = embed_from_coordinates(g, subdivide_coordinates(base, pts, o.subdivide));
                }
                else if (kind == "complete")
                    need(1), base = complete_graph(p[0]);
                else if (kind == "star")
                    need(1), base = star_graph(p[0]);
                else if (kind == "petersen")
                    need(0), base = petersen_graph();
                else if (kind == "tree")
                    need(1), base = random_tree(p[0], rng);
                else if (kind == "random") {
                    need(3);
                    if (p[2] < 1 || p[1] > p[2])
                        throw InvalidInput("edge probability must be num/den with 0 <= num <= den");
                    base = random_graph(p[0], p[1], p[2], rng);
                }
                else if (kind == "ktree") {
                    need(4);
                    if (p[3] < 1 || p[2] > p[3])
                        throw InvalidInput("keep probability must be num/den with 0 <= num <= den");
                    base = random_partial_ktree(p[0], p[1], p[2], p[3], rng);
                }
                else
                    throw InvalidInput("unknown generator " + kind);
                if (! eg)
                    g = subdivide_edges(base, o.subdivide);
            }
            if (o.roots > g.vertex_count())
                throw InvalidInput("more roots than vertices");
            RootedGraph rooted = o.roots > 0 ? random_rooted(g, o.roots, rng) : RootedGraph(g);
            std::vector<std::vector<Vertex>> faces;
            if (eg)
                faces = face_walks(*eg);
            auto text = format_graph(rooted, faces);
            if (o.output.empty())
                c.out << text;
            else {
                write_text(o.output, text);
                c.out << "wrote " << kind << " with " << g.vertex_count() << " vertices and " << g.edge_count() << " edges to " << o.output << "\n";
            }
            c.result = { { "kind", kind }, { "parameters", p }, { "graph", graph_json(rooted) }, { "embedded", eg.has_value() },
                { "canonical", g.vertex_count() <= o.ceilings.canonical_vertices ? json(canonical_form(rooted, o.ceilings)) : json(nullptr) } };
        }

        auto cmd_tw(Context & c) -> void
        {
            auto file = read_graph_file(c.o.graph);
            const auto & g = file.graph.graph();
            auto tw = treewidth(g, c.o.ceilings);
            c.out << "treewidth " << tw.width << "\n";
            c.out << "decomposition with " << tw.decomposition.node_count() << " nodes\n";
            if (! c.o.output.empty())
                write_text(c.o.output, format_decomposition(tw.decomposition));
            c.result = { { "graph", graph_json(file.graph) }, { "width", tw.width }, { "lower_bound", treewidth_lower_bound(g) },
                { "decomposition", decomposition_json(tw.decomposition) }, { "valid", is_valid_decomposition(g, tw.decomposition) } };
            if (c.o.window) {
                auto w = certified_window(g, *c.o.window, c.o.ceilings);
                json edges = json::array();
                for (auto [u, v] : w.edges)
                    edges.push_back({ u, v });
                c.out << "window for t = " << *c.o.window << ": " << w.edges.size() << " edges, treewidth " << w.treewidth << "\n";
                c.result["window"] = { { "t", *c.o.window }, { "treewidth", w.treewidth }, { "rounds", w.rounds }, { "edges", edges } };
            }
        }

        auto cmd_nice(Context & c) -> void
        {
            auto file = read_graph_file(c.o.graph);
            const auto & g = file.graph.graph();
            auto ntd = nice_decomposition(g, c.o.ceilings);
            json counts = json::object();
            for (auto kind : { NodeKind::Leaf, NodeKind::Introduce, NodeKind::Forget, NodeKind::Join })
                counts[node_kind_name(kind)] = std::count(ntd.kind.begin(), ntd.kind.end(), kind);
            c.out << "nice decomposition of width " << ntd.width() << " with " << ntd.node_count() << " nodes\n";
            if (! c.o.output.empty())
                write_text(c.o.output, format_decomposition(ntd));
            c.result = { { "graph", graph_json(file.graph) }, { "width", ntd.width() }, { "nodes", ntd.node_count() }, { "kinds", counts },
                { "valid", is_valid_nice(g, ntd) } };
        }

        auto cmd_tmc(Context & c) -> void
        {
            if (c.o.patterns.size() != 1)
                throw InvalidInput("tmc takes exactly one pattern (-h)");
            auto g = read_graph_file(c.o.graph).graph;
            auto h = read_graph_file(c.o.patterns[0]).graph;
            std::optional<Witness> w;
            json stats = nullptr;
            if (engine_of(c.o.engine) == Engine::dp) {
                DpStats s;
                w = tmc_dp(g, h, nice_decomposition(g.graph(), c.o.ceilings), c.o.ceilings, &s);
                stats = { { "max_table", s.max_table }, { "total_states", s.total_states } };
            }
            else
                w = tmc_brute(g, h, c.o.ceilings);
            c.result = { { "engine", c.o.engine }, { "graph", graph_json(g) }, { "pattern", graph_json(h) }, { "contained", w.has_value() },
                { "witness", w ? witness_json(*w) : json(nullptr) }, { "dp_stats", stats } };
            if (! w) {
                c.out << "no: the pattern is not a topological minor\n";
                throw Negative{};
            }
            if (! is_valid_witness(g, h, *w))
                throw Error("internal error: witness failed verification");
            c.out << "yes: branch vertices " << braces(w->branch) << "\n";
            for (std::size_t i = 0 ; i < w->paths.size() ; ++i)
                c.out << "  edge " << i << ": " << braces(w->paths[i]) << "\n";
            if (! c.o.output.empty())
                write_text(c.o.output, witness_json(*w).dump(2) + "\n");
        }

        auto cmd_folio(Context & c) -> void
        {
            auto g = read_graph_file(c.o.graph).graph;
            if (c.o.delta < 1)
                throw InvalidInput("--delta must be positive");
            auto f = engine_of(c.o.engine) == Engine::dp ? folio_dp(g, c.o.delta, nice_decomposition(g.graph(), c.o.ceilings), c.o.ceilings)
                                                         : extended_folio_brute(g, c.o.delta, c.o.ceilings);
            c.out << "extended " << c.o.delta << "-folio over " << f.labels.size() << " roots, " << f.entries.size() << " entries\n";
            for (auto & [mask, folio] : f.entries)
                c.out << "  X = " << mask << ": " << folio.patterns.size() << " patterns\n";
            c.result = { { "engine", c.o.engine }, { "graph", graph_json(g) }, { "folio", folio_json(f) } };
            if (! c.o.output.empty())
                write_text(c.o.output, folio_json(f).dump(2) + "\n");
        }

        auto cmd_impsep(Context & c) -> void
        {
            auto g = read_graph_file(c.o.graph).graph.graph();
            require_vertices(g, c.o.x, "X");
            require_vertices(g, c.o.y, "Y");
            auto seps = enumerate_important(g, c.o.x, c.o.y, c.o.k);
            c.result = { { "X", c.o.x }, { "Y", c.o.y }, { "k", c.o.k }, { "count", seps.size() } };
            if (c.o.count_only)
                c.out << seps.size() << "\n";
            else {
                json list = json::array();
                for (auto & s : seps) {
                    c.out << braces(s.vertices) << "\n";
                    list.push_back(s.vertices);
                }
                c.result["separators"] = list;
            }
            if (seps.empty())
                throw Negative{};
        }

        auto cmd_tmdel(Context & c) -> void
        {
            if (c.o.patterns.empty())
                throw InvalidInput("tmdel needs at least one forbidden pattern (-h)");
            auto file = read_graph_file(c.o.graph);
            DeletionInstance inst{ file.graph, forbidden_patterns(c.o.patterns), c.o.k, 0 };
            for (auto & f : inst.forbidden)
                inst.h_star = std::max(inst.h_star, f.vertex_count());
            SolverConfig cfg;
            cfg.engine = engine_of(c.o.engine);
            cfg.irrelevant_vertices = c.o.irrelevant;
            cfg.r = c.o.r;
            cfg.memo = ! c.o.no_memo;
            cfg.ceilings = c.o.ceilings;
            if (c.o.irrelevant) {
                if (! file.has_embedding())
                    throw InvalidInput("--irrelevant needs face lines in the graph file");
                cfg.embedding = file.embedding();
            }
            auto res = solve(inst, cfg);
            c.result = { { "engine", c.o.engine }, { "graph", graph_json(file.graph) }, { "budget", c.o.k }, { "patterns", c.o.patterns.size() },
                { "solution", res.solution ? json(*res.solution) : json(nullptr) }, { "nodes", res.trace.nodes },
                { "memo_hits", res.trace.memo_hits }, { "irrelevant", res.trace.irrelevant } };
            if (! res.solution) {
                c.out << "no solution with at most " << c.o.k << " deletions\n";
                throw Negative{};
            }
            if (! verify_solution(inst, *res.solution, c.o.ceilings))
                throw Error("internal error: solution failed verification");
            c.out << "solution " << braces(*res.solution) << "\n";
            c.out << "search nodes " << res.trace.nodes << ", memo hits " << res.trace.memo_hits << "\n";
        }

        auto cmd_irrelevant_wall(Context & c) -> void
        {
            auto & o = c.o;
            if (o.wall.size() != 2)
                throw InvalidInput("--wall takes a height and a width");
            auto w = subdivide_wall(generate_elementary_wall(o.wall[0], o.wall[1]), o.subdivide);
            auto chain = irrelevance_chain(w, o.delta, o.k, o.shrink);
            c.out << "sides";
            for (auto s : chain.sides)
                c.out << " " << s;
            c.out << "\nirrelevant " << braces(chain.irrelevant) << "\n";
            c.result = { { "wall", o.wall }, { "delta", o.delta }, { "k", o.k }, { "shrink", o.shrink }, { "sides", chain.sides },
                { "irrelevant", chain.irrelevant } };
            if (o.check) {
                RootedGraph g(w.graph);
                int failed = 0;
                for (auto v : chain.irrelevant)
                    if (! is_dk_irrelevant_brute(g, v, o.delta, o.k, o.ceilings))
                        ++failed;
                c.out << "oracle check: " << failed << " violations\n";
                c.result["violations"] = failed;
                if (failed)
                    throw Error("irrelevance violated on " + std::to_string(failed) + " vertices");
            }
            if (! o.output.empty())
                write_text(o.output, format_graph(RootedGraph(w.graph), face_walks(w.embedding())));
        }

        auto cmd_irrelevant(Context & c) -> void
        {
            auto & o = c.o;
            if (! o.wall.empty())
                return cmd_irrelevant_wall(c);
            auto file = read_graph_file(o.graph);
            if (! file.has_embedding())
                throw InvalidInput("irrelevant needs face lines in the graph file");
            if (o.x.size() != o.y.size() || o.x.empty())
                throw InvalidInput("-X and -Y must list the same positive number of terminals");
            DisjointPathsInstance inst{ file.graph.graph(), {} };
            for (std::size_t i = 0 ; i < o.x.size() ; ++i)
                inst.pairs.emplace_back(o.x[i], o.y[i]);
            validate_instance(inst);
            auto found = dp_irrelevant_vertex(file.embedding(), inst, o.r);
            c.result = { { "r", o.r }, { "pairs", inst.pairs }, { "vertex", found ? json(found->vertex) : json(nullptr) },
                { "certificate", found ? json(found->certificate.cycles) : json(nullptr) } };
            if (! found) {
                c.out << "no insulated vertex for r = " << o.r << "\n";
                throw Negative{};
            }
            c.out << "irrelevant vertex " << found->vertex << "\n";
            for (std::size_t i = 0 ; i < found->certificate.cycles.size() ; ++i)
                c.out << "  C_" << i << ": " << braces(found->certificate.cycles[i]) << "\n";
            if (o.check) {
                auto before = disjoint_paths_brute(inst, o.ceilings);
                Vertex gone[] = { found->vertex };
                auto h = delete_vertices(inst.graph, gone);
                DisjointPathsInstance reduced{ h.graph, {} };
                for (auto [s, t] : inst.pairs)
                    reduced.pairs.emplace_back(h.old_to_new[s], h.old_to_new[t]);
                auto after = disjoint_paths_brute(reduced, o.ceilings);
                c.out << "linkage before " << (before ? "yes" : "no") << ", after " << (after ? "yes" : "no") << "\n";
                c.result["linked_before"] = before.has_value();
                c.result["linked_after"] = after.has_value();
                if (before.has_value() != after.has_value())
                    throw Error("irrelevance violated: the answer changed");
            }
        }

        auto cmd_verify(Context & c) -> void
        {
            auto & o = c.o;
            auto file = read_graph_file(o.graph);
            const auto & g = file.graph;
            std::optional<std::string> problem;
            std::string kind;
            int modes = ! o.td.empty() + ! o.witness.empty() + o.solution.has_value() + o.separator.has_value() + o.embedding;
            if (modes != 1)
                throw InvalidInput("verify needs exactly one of --td, --witness, --solution, --separator, --embedding");
            if (! o.td.empty()) {
                kind = "decomposition";
                auto d = parse_decomposition(read_text(o.td));
                problem = d.nice ? nice_problem(g.graph(), *d.nice) : decomposition_problem(g.graph(), d.tree);
                c.result["width"] = d.tree.width();
                c.result["nice"] = d.nice.has_value();
            }
            else if (! o.witness.empty()) {
                kind = "witness";
                if (o.patterns.size() != 1)
                    throw InvalidInput("--witness needs exactly one pattern (-h)");
                auto h = read_graph_file(o.patterns[0]).graph;
                problem = witness_problem(g, h, witness_from_json(read_json(o.witness)));
            }
            else if (o.solution) {
                kind = "solution";
                if (o.patterns.empty())
                    throw InvalidInput("--solution needs the forbidden patterns (-h)");
                DeletionInstance inst{ g, forbidden_patterns(o.patterns), o.k, 0 };
                for (auto & f : inst.forbidden)
                    inst.h_star = std::max(inst.h_star, f.vertex_count());
                problem = deletion_problem(inst, parse_list(*o.solution), o.ceilings);
            }
            else if (o.separator) {
                kind = "separator";
                auto s = parse_list(*o.separator);
                std::sort(s.begin(), s.end());
                require_vertices(g.graph(), o.x, "X");
                require_vertices(g.graph(), o.y, "Y");
                require_vertices(g.graph(), s, "separator");
                if (! is_separator(g.graph(), o.x, o.y, s))
                    problem = "does not separate X from Y";
                else if (! is_minimal_separator(g.graph(), o.x, o.y, s))
                    problem = "not minimal";
                else if (! is_important(g.graph(), o.x, o.y, s))
                    problem = "dominated by another separator";
            }
            else {
                kind = "embedding";
                if (! file.has_embedding())
                    problem = "no face lines";
                else
                    try {
                        auto eg = file.embedding();
                        c.result["faces"] = eg.face_count();
                    }
                    catch (const InvalidInput & e) {
                        problem = e.what();
                    }
            }
            c.result["kind"] = kind;
            c.result["valid"] = ! problem;
            c.result["problem"] = problem ? json(*problem) : json(nullptr);
            if (problem) {
                c.out << "invalid " << kind << ": " << *problem << "\n";
                throw Negative{};
            }
            c.out << "valid " << kind << "\n";
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        Options o;
        CLI::App app{ "Topological-minor toolkit: containment, folios, treewidth, separators, irrelevant vertices and TM-Deletion." };
        app.name("tmkit");
        app.set_help_flag("--help", "Print this help message and exit");
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--json", o.json_path, "Write a machine-readable report to this path");
        app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
        for (auto & f : ceiling_fields)
            std::visit([&] (auto member) {
                auto name = std::string(f.name);
                app.add_option(flag_name(name) + ",--ceiling_" + name, o.ceilings.*member, "Ceiling " + name)->capture_default_str();
            }, f.field);

        auto engines = CLI::IsMember({ "dp", "brute" });
        auto vertex_list = [] (CLI::App * sub, const char * flags, std::vector<Vertex> & target, const char * what) {
            sub->add_option(flags, target, what)->delimiter(',')->expected(0, CLI::detail::expected_max_vector_size);
        };

        auto gen = app.add_subcommand("gen", "Generate an instance: grid a b | wall h r | path n | cycle n | complete n | star l | petersen | tree n | random n num den | ktree n k num den");
        gen->add_option("kind", o.gen_kind, "Generator")->required()->check(CLI::IsMember({ "grid", "wall", "path", "cycle", "complete", "star", "petersen", "tree", "random", "ktree" }));
        gen->add_option("params", o.gen_params, "Generator parameters");
        gen->add_option("-o", o.output, "Output graph file (default: standard output)");
        gen->add_option("--subdivide", o.subdivide, "Subdivide every edge this many times");
        gen->add_option("--roots", o.roots, "Label this many random vertices as roots 1..m");

        auto tw = app.add_subcommand("tw", "Exact treewidth with an optimal decomposition");
        tw->add_option("-g", o.graph, "Graph file")->required();
        tw->add_option("-o", o.output, "Write the decomposition here");
        tw->add_option("--window", o.window, "Also extract a subgraph with t < tw <= 2t");

        auto nice = app.add_subcommand("nice", "Nice tree decomposition");
        nice->add_option("-g", o.graph, "Graph file")->required();
        nice->add_option("-o", o.output, "Write the decomposition here");

        auto tmc = app.add_subcommand("tmc", "Topological-minor containment (exit 0 contained, 1 not)");
        tmc->add_option("-g", o.graph, "Host graph file")->required();
        tmc->add_option("-h", o.patterns, "Pattern graph file")->required();
        tmc->add_option("--engine", o.engine, "dp or brute")->check(engines)->capture_default_str();
        tmc->add_option("-o", o.output, "Write the witness as JSON here");

        auto folio = app.add_subcommand("folio", "Extended delta-folio");
        folio->add_option("-g", o.graph, "Rooted graph file")->required();
        folio->add_option("--delta", o.delta, "Detail budget")->required();
        folio->add_option("--engine", o.engine, "dp or brute")->check(engines)->capture_default_str();
        folio->add_option("-o", o.output, "Write the folio as JSON here");

        auto impsep = app.add_subcommand("impsep", "Important X-Y separators of size at most k (exit 1 if none)");
        impsep->add_option("-g", o.graph, "Graph file")->required();
        vertex_list(impsep, "-X", o.x, "Source vertices");
        vertex_list(impsep, "-Y", o.y, "Sink vertices");
        impsep->add_option("-k", o.k, "Size bound")->required();
        impsep->add_flag("--count-only", o.count_only, "Print only the number of separators");

        auto tmdel = app.add_subcommand("tmdel", "TM-Deletion (exit 0 solution found, 1 none)");
        tmdel->add_option("-g", o.graph, "Graph file")->required();
        tmdel->add_option("-h", o.patterns, "Forbidden pattern files")->required();
        tmdel->add_option("-k", o.k, "Deletion budget")->required();
        tmdel->add_option("--engine", o.engine, "dp or brute")->check(engines)->capture_default_str();
        tmdel->add_flag("--irrelevant", o.irrelevant, "Delete certified irrelevant vertices first (needs face lines)");
        tmdel->add_option("-r", o.r, "Concentric cycles around an irrelevant candidate, minus one")->capture_default_str();
        tmdel->add_flag("--no-memo", o.no_memo, "Disable the failure memo");

        auto irrelevant = app.add_subcommand("irrelevant", "Irrelevant vertex for disjoint paths (-g -X -Y -r) or wall chain (--wall h r)");
        irrelevant->add_option("-g", o.graph, "Embedded graph file");
        vertex_list(irrelevant, "-X", o.x, "Terminals s_1..s_k");
        vertex_list(irrelevant, "-Y", o.y, "Terminals t_1..t_k");
        irrelevant->add_option("-r", o.r, "Insulation: r + 1 concentric cycles")->capture_default_str();
        irrelevant->add_option("--wall", o.wall, "Elementary wall height and width")->expected(2);
        irrelevant->add_option("--subdivide", o.subdivide, "Subdivide the wall");
        irrelevant->add_option("--shrink", o.shrink, "Side ratio between nested walls")->capture_default_str();
        irrelevant->add_option("--delta", o.delta, "Detail budget of the chain")->capture_default_str();
        irrelevant->add_option("-k", o.k, "Deletion budget of the chain")->capture_default_str();
        irrelevant->add_flag("--check", o.check, "Confirm with the exhaustive oracles");
        irrelevant->add_option("-o", o.output, "Write the wall graph here");

        auto verify = app.add_subcommand("verify", "Check a certificate against a graph (exit 0 valid, 1 invalid)");
        verify->add_option("-g", o.graph, "Graph file")->required();
        verify->add_option("--td", o.td, "Tree decomposition file");
        verify->add_option("-h", o.patterns, "Pattern file(s)");
        verify->add_option("--witness", o.witness, "Witness JSON for the pattern");
        verify->add_option("--solution", o.solution, "Deletion set, comma separated");
        verify->add_option("-k", o.k, "Deletion budget");
        verify->add_option("--separator", o.separator, "Separator, comma separated");
        vertex_list(verify, "-X", o.x, "Source vertices");
        vertex_list(verify, "-Y", o.y, "Sink vertices");
        verify->add_flag("--embedding", o.embedding, "Check the face lines of the graph file");

        std::vector<std::string> args;
        for (int i = argc - 1 ; i > 0 ; --i)
            args.emplace_back(argv[i]);
        try {
            app.parse(args);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }

        CLI::App * sub = app.get_subcommands().front();
        json report = { { "command", sub->get_name() }, { "seed", o.seed } };
        json result = json::object();
        int code = 0;
        std::string status = "ok";
        try {
            if (o.k < 0)
                throw InvalidInput("-k must be non-negative");
            if (o.r < 0)
                throw InvalidInput("-r must be non-negative");
            Context c{ o, out, result };
            const auto & name = sub->get_name();
            if (name == "gen")
                cmd_gen(c);
            else if (name == "tw")
                cmd_tw(c);
            else if (name == "nice")
                cmd_nice(c);
            else if (name == "tmc")
                cmd_tmc(c);
            else if (name == "folio")
                cmd_folio(c);
            else if (name == "impsep")
                cmd_impsep(c);
            else if (name == "tmdel")
                cmd_tmdel(c);
            else if (name == "irrelevant") {
                if (o.wall.empty() && o.graph.empty())
                    throw InvalidInput("irrelevant needs -g or --wall");
                cmd_irrelevant(c);
            }
            else
                cmd_verify(c);
        }
        catch (const Negative &) {
            code = 1;
            status = "negative";
        }
        catch (const CeilingExceeded & e) {
            err << "error: " << e.what() << " (raise it with " << flag_name(e.ceiling()) << ")\n";
            report["error"] = { { "message", e.what() }, { "ceiling", e.ceiling() } };
            code = 2;
            status = "error";
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            report["error"] = { { "message", e.what() }, { "ceiling", nullptr } };
            code = 2;
            status = "error";
        }
        report["status"] = status;
        report["exit_code"] = code;
        report["ceilings"] = ceilings_json(o.ceilings);
        report["result"] = result;
        if (! o.json_path.empty()) {
            try {
                write_text(o.json_path, report.dump(2) + "\n");
            }
            catch (const std::exception & e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
        }
        return code;
    }
}
