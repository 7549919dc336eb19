#include <doctest.h>

#include <cli.hpp>

#include <tmkit/canonical.hpp>
#include <tmkit/generators.hpp>
#include <tmkit/graph_io.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace tmkit;

namespace
{
    namespace fs = std::filesystem;

    struct Workdir
    {
        fs::path root;

        Workdir()
        {
            root = fs::temp_directory_path() / ("tmkit-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
            fs::create_directories(root);
        }

        ~Workdir()
        {
            std::error_code ec;
            fs::remove_all(root, ec);
        }

        auto path(const std::string & name) const -> std::string
        {
            return (root / name).string();
        }

        auto write(const std::string & name, const std::string & text) const -> std::string
        {
            std::ofstream(path(name)) << text;
            return path(name);
        }

        auto read(const std::string & name) const -> std::string
        {
            std::ifstream file(path(name));
            std::stringstream ss;
            ss << file.rdbuf();
            return ss.str();
        }
    };

    struct Outcome
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Outcome
    {
        args.insert(args.begin(), "tmkit");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return { code, out.str(), err.str() };
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("gen grid writes the shared format")
    {
        Workdir w;
        auto r = run({ "gen", "grid", "3", "3", "-o", w.path("g.tm") });
        REQUIRE(r.code == 0);
        auto file = read_graph_file(w.path("g.tm"));
        CHECK(file.graph.vertex_count() == 9);
        CHECK(file.graph.graph().edge_count() == 12);
        CHECK(file.has_embedding());
        CHECK(file.graph.graph() == generate_grid(3, 3));
    }

    TEST_CASE("generated instances round-trip")
    {
        Workdir w;
        for (std::string kind : { "path 6", "cycle 5", "complete 4", "star 3", "petersen", "tree 9", "random 8 1 2", "ktree 9 3 2 3", "wall 2 2" })
            for (int seed : { 1, 2 }) {
                std::vector<std::string> args{ "--seed", std::to_string(seed), "gen" };
                std::stringstream ss(kind);
                for (std::string t ; ss >> t ;)
                    args.push_back(t);
                args.insert(args.end(), { "--roots", "2" });
                auto r = run(args);
                REQUIRE(r.code == 0);
                auto parsed = parse_graph(r.out).graph;
                CHECK(canonical_form(parse_graph(format_graph(parsed)).graph) == canonical_form(parsed));
                CHECK(run(args).out == r.out);
            }
    }

    TEST_CASE("engines agree on containment")
    {
        Workdir w;
        auto g = w.path("g.tm"), h = w.path("h.tm");
        int agreements = 0;
        for (int seed = 1 ; seed <= 12 ; ++seed) {
            REQUIRE(run({ "--seed", std::to_string(seed), "gen", "ktree", "9", "2", "2", "3", "-o", g }).code == 0);
            REQUIRE(run({ "--seed", std::to_string(seed), "gen", seed % 2 ? "cycle" : "star", seed % 2 ? "4" : "3", "-o", h }).code == 0);
            auto dp = run({ "tmc", "-g", g, "-h", h, "--engine", "dp" });
            auto brute = run({ "tmc", "-g", g, "-h", h, "--engine", "brute" });
            REQUIRE(dp.code != 2);
            CHECK(dp.code == brute.code);
            agreements += dp.code == brute.code;
        }
        CHECK(agreements == 12);
    }

    TEST_CASE("important separator counts stay within 4^k")
    {
        Workdir w;
        auto g = w.path("g.tm");
        for (int seed = 1 ; seed <= 10 ; ++seed) {
            REQUIRE(run({ "--seed", std::to_string(seed), "gen", "random", "8", "1", "2", "-o", g }).code == 0);
            auto r = run({ "impsep", "-g", g, "-X", "0", "-Y", "3", "-k", "2", "--count-only" });
            REQUIRE(r.code != 2);
            CHECK(std::stoi(r.out) <= 16);
            CHECK((r.code == 0) == (std::stoi(r.out) > 0));
        }
    }

    TEST_CASE("tmdel exit codes and verification")
    {
        Workdir w;
        auto g = w.write("two.tm", "tm 6\ne 0 1\ne 1 2\ne 0 2\ne 3 4\ne 4 5\ne 3 5\n");
        auto k3 = w.write("k3.tm", "tm 3\ne 0 1\ne 1 2\ne 0 2\n");
        auto yes = run({ "--json", w.path("yes.json"), "tmdel", "-g", g, "-h", k3, "-k", "2" });
        CHECK(yes.code == 0);
        auto report = nlohmann::json::parse(w.read("yes.json"));
        CHECK(report["status"] == "ok");
        auto s = report["result"]["solution"].get<std::vector<int>>();
        CHECK(s.size() == 2);
        std::string list = std::to_string(s[0]) + "," + std::to_string(s[1]);
        CHECK(run({ "verify", "-g", g, "-h", k3, "-k", "2", "--solution", list }).code == 0);
        CHECK(run({ "verify", "-g", g, "-h", k3, "-k", "2", "--solution", "0" }).code == 1);
        CHECK(run({ "tmdel", "-g", g, "-h", k3, "-k", "1" }).code == 1);

        auto rooted = w.write("rooted.tm", "tm 3\ne 0 1\ne 1 2\ne 0 2\nr 0 1\n");
        CHECK(run({ "tmdel", "-g", g, "-h", rooted, "-k", "2" }).code == 2);
    }

    TEST_CASE("tree decompositions verify")
    {
        Workdir w;
        auto g = w.path("p.tm");
        REQUIRE(run({ "gen", "petersen", "-o", g }).code == 0);
        auto tw = run({ "tw", "-g", g, "-o", w.path("p.td") });
        REQUIRE(tw.code == 0);
        CHECK(tw.out.find("treewidth 4") != std::string::npos);
        CHECK(run({ "verify", "-g", g, "--td", w.path("p.td") }).code == 0);
        REQUIRE(run({ "nice", "-g", g, "-o", w.path("p.ntd") }).code == 0);
        CHECK(run({ "verify", "-g", g, "--td", w.path("p.ntd") }).code == 0);
        auto k10 = w.path("k10.tm");
        REQUIRE(run({ "gen", "complete", "10", "-o", k10 }).code == 0);
        CHECK(run({ "verify", "-g", k10, "--td", w.path("p.td") }).code == 1);
    }

    TEST_CASE("errors exit with 2")
    {
        Workdir w;
        auto g = w.path("g.tm");
        REQUIRE(run({ "gen", "grid", "5", "5", "-o", g }).code == 0);
        auto r = run({ "--json", w.path("e.json"), "tw", "-g", g, "--ceiling-treewidth-vertices", "10" });
        CHECK(r.code == 2);
        CHECK(r.err.find("treewidth_vertices") != std::string::npos);
        CHECK(r.err.find("--ceiling-treewidth-vertices") != std::string::npos);
        auto report = nlohmann::json::parse(w.read("e.json"));
        CHECK(report["error"]["ceiling"] == "treewidth_vertices");
        CHECK(report["exit_code"] == 2);

        CHECK(run({ "tw", "-g", g, "--ceiling_treewidth_vertices", "30" }).code == 0);
        CHECK(run({}).code == 2);
        CHECK(run({ "frobnicate" }).code == 2);
        CHECK(run({ "tmc", "-g", g }).code == 2);
        CHECK(run({ "tmc", "-g", g, "-h", g, "--engine", "quantum" }).code == 2);
        CHECK(run({ "tmc", "-g", w.path("missing.tm"), "-h", g }).code == 2);
        CHECK(run({ "gen", "grid", "3" }).code == 2);
        CHECK(run({ "impsep", "-g", g, "-X", "0", "-Y", "99", "-k", "1" }).code == 2);
        CHECK(run({ "verify", "-g", g }).code == 2);
        w.write("bad.tm", "tm 2\ne 0 5\n");
        CHECK(run({ "tw", "-g", w.path("bad.tm") }).code == 2);
        CHECK(run({ "--help" }).code == 0);
    }

    TEST_CASE("irrelevant vertex on a grid")
    {
        Workdir w;
        auto g = w.path("g.tm");
        REQUIRE(run({ "gen", "grid", "7", "7", "-o", g }).code == 0);
        auto r = run({ "--json", w.path("i.json"), "irrelevant", "-g", g, "-X", "0", "-Y", "6", "-r", "1", "--check", "--ceiling-disjoint-paths-vertices", "60" });
        REQUIRE(r.code == 0);
        auto report = nlohmann::json::parse(w.read("i.json"));
        CHECK(report["result"]["vertex"].is_number());
        CHECK(report["result"]["certificate"].size() == 2);
        CHECK(report["result"]["linked_before"] == report["result"]["linked_after"]);
        CHECK(run({ "irrelevant", "-g", g, "-X", "0", "-Y", "6", "-r", "3" }).code == 1);
        CHECK(run({ "irrelevant", "--wall", "4", "4", "--shrink", "2", "-k", "0", "--delta", "1" }).code == 0);
        CHECK(run({ "irrelevant", "--wall", "3", "3", "--shrink", "2", "-k", "0", "--delta", "1" }).code == 2);
    }
}
