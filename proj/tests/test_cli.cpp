#include <catch_amalgamated.hpp>

#include <extshift/cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

using namespace extshift;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = EXTSHIFT_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return data_dir + "/" + name; }

/// A file in a private temporary directory, removed with the fixture.
struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("extshift_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

} // namespace

TEST_CASE("text and json round trips") {
    std::mt19937_64 gen(5);
    for (int t = 0; t < 100; ++t) {
        cli::Instance inst;
        inst.n = static_cast<int>(gen() % 2) * 9;
        const int faces = 1 + static_cast<int>(gen() % 5);
        const bool uniform = gen() % 2 == 0;
        for (int i = 0; i < faces; ++i) {
            const int size = uniform ? 3 : 1 + static_cast<int>(gen() % 4);
            std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8, 9};
            std::shuffle(all.begin(), all.end(), gen);
            std::vector<int> f(all.begin(), all.begin() + size);
            std::sort(f.begin(), f.end());
            inst.faces.push_back(f);
        }
        REQUIRE(cli::parse_instance(cli::print_text(inst)) == inst);
        REQUIRE(cli::parse_instance(cli::print_json(inst)) == inst);
    }
}

TEST_CASE("parsing") {
    auto inst = cli::parse_instance("# comment\nn=5 k=2\n1 2  # trailing\n\n2 5\n");
    CHECK(inst.n == 5);
    CHECK(inst.faces == std::vector<std::vector<int>>{{1, 2}, {2, 5}});
    CHECK(cli::parse_instance("{\"faces\": [[1, 3], [2, 3]]}").ground_size() == 3);
    CHECK(cli::parse_instance("1 2\n1 3\n").n == 0);

    CHECK_THROWS_AS(cli::parse_instance(""), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("# nothing\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("1 x\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("0 1\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("1 1\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("n=3\n1 4\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("k=2\n1 2 3\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("1 2\nn=4\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("m=4\n1 2\n"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("{\"faces\": 3}"), cli::parse_error);
    CHECK_THROWS_AS(cli::parse_instance("{\"faces\": [[1, 2]"), cli::parse_error);
    CHECK_THROWS_AS(cli::to_hypergraph(cli::parse_instance("1 2\n1 2 3\n")), cli::parse_error);
}

TEST_CASE("bipartite generator") {
    CHECK(cli::gen_bipartite(2, 2).faces == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(cli::gen_bipartite(1, 1).faces == std::vector<std::vector<int>>{{1, 2}});
    auto k33 = cli::gen_bipartite(3, 3);
    CHECK(k33.faces.size() == 9);
    CHECK(k33.ground_size() == 6);
    CHECK_THROWS(cli::gen_bipartite(0, 2));
    auto r = call({"gen-bipartite", "2", "3"});
    CHECK(r.code == 0);
    CHECK(cli::parse_instance(r.out) == cli::gen_bipartite(2, 3));
    CHECK(call({"gen-bipartite", "0", "3"}).code == 2);
}

TEST_CASE("digest") {
    // published FNV-1a 64 test vectors
    CHECK(cli::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(cli::fnv1a_hex("foobar") == "85944171f73967e8");
    CHECK(cli::digest(UniformHypergraph(3, {KSet{1, 2}})) == cli::fnv1a_hex("{12}"));
}

TEST_CASE("is-shifted") {
    TempDir tmp;
    auto yes = call({"is-shifted", tmp.write("yes.txt", "1 2\n1 3\n1 4\n2 3\n")});
    CHECK(yes.code == 0);
    CHECK(yes.out == "true\n");
    auto no = call({"is-shifted", tmp.write("no.txt", "2 4\n")});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
    CHECK(call({"is-shifted", tmp.write("empty.txt", "")}).code == 2);
    CHECK(call({"is-shifted", tmp.write("mixed.txt", "1 2\n1 2 3\n")}).code == 2);
    CHECK(call({"is-shifted", (tmp.dir / "missing.txt").string()}).code == 2);
}

TEST_CASE("shift") {
    auto r = call({"shift", data("square.txt"), "--perm", "2 3 4 1", "--field", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("# algorithm=deterministic certified=true"));
    CHECK(r.out.find("time_ms") == std::string::npos);
    auto body = cli::parse_instance(r.out);
    CHECK(body.faces == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 4}});

    auto j = call({"shift", data("square.txt"), "--perm", "2 3 4 1", "--field", "2", "--output", "json"});
    REQUIRE(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["faces"] == nlohmann::json::parse("[[1,2],[1,3],[1,4],[2,4]]"));
    CHECK(parsed["certified"] == true);
    CHECK(parsed["field"] == "2");

    auto timed = call({"shift", data("square.txt"), "--timings"});
    CHECK(timed.out.find("time_ms=") != std::string::npos);

    auto full = call({"shift", data("square.txt")});
    CHECK(cli::parse_instance(full.out).faces == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}});

    CHECK(call({"shift", data("square.txt"), "--field", "4"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--field", "x"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--perm", "1 2"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--perm", "1 1 2 3"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--algorithm", "magic"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--engine", "fast"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--output", "xml"}).code == 2);
    CHECK(call({"shift", data("square.txt"), "--bogus"}).code == 2);
}

TEST_CASE("las vegas exit codes and reruns") {
    const std::vector<std::string> small{"shift", data("five_edges.txt"), "--perm", "1 4 3 2 5 6", "--field", "2",
                                         "--algorithm", "las-vegas", "--rounds", "1"};
    auto r = call(small);
    CHECK(r.code == 3);
    CHECK(r.err.find("field may be too small") != std::string::npos);

    std::vector<std::string> ext = small;
    ext[5] = "2^2";
    ext.insert(ext.end(), {"--seed", "7", "--output", "json"});
    auto a = call(ext), b = call(ext);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["certified"] == true);
    CHECK(j["faces"] == nlohmann::json::parse("[[1,2],[1,3],[2,3],[2,5],[2,6]]"));

    // a different seed may take a different number of trials but not a different answer
    ext[ext.size() - 3] = "8";
    auto c = call(ext);
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["faces"] == j["faces"]);
}

TEST_CASE("seed from the environment") {
    const std::vector<std::string> args{"shift", data("five_edges.txt"), "--perm", "1 4 3 2 5 6", "--field", "2^2",
                                        "--algorithm", "monte-carlo", "--output", "json"};
    ::setenv("EXTSHIFT_SEED", "11", 1);
    auto env = call(args);
    ::unsetenv("EXTSHIFT_SEED");
    std::vector<std::string> explicit_seed = args;
    explicit_seed.insert(explicit_seed.end(), {"--seed", "11"});
    auto flag = call(explicit_seed);
    REQUIRE(env.code == 0);
    CHECK(env.out == flag.out);

    ::setenv("EXTSHIFT_SEED", "eleven", 1);
    CHECK(call(args).code == 2);
    ::unsetenv("EXTSHIFT_SEED");
}

TEST_CASE("verify") {
    const std::vector<std::string> base{"verify", data("square.txt"), "--perm", "2 3 4 1", "--field", "2", "--claimed"};
    auto with = [&](const std::string& file) {
        auto v = base;
        v.push_back(data(file));
        return call(v);
    };
    auto yes = with("square_shift.txt");
    CHECK(yes.code == 0);
    CHECK(yes.out == "true\n");
    auto no = with("square_wrong.txt");
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");
    CHECK(call({"verify", data("square.txt"), "--perm", "id", "--claimed", data("square.txt")}).code == 0);
    CHECK(call({"verify", data("square.txt"), "--claimed", data("five_edges.txt")}).code == 2);
    CHECK(call({"verify", data("square.txt")}).code == 2);
}

TEST_CASE("comb-shift") {
    auto r = call({"comb-shift", data("square.txt"), "--transposition", "1", "2"});
    CHECK(r.code == 0);
    auto until = call({"comb-shift", data("square.txt"), "--until-shifted"});
    REQUIRE(until.code == 0);
    auto s = cli::to_hypergraph(cli::parse_instance(until.out));
    CHECK(is_shifted(s));
    CHECK(s.size() == 4);
    CHECK(call({"comb-shift", data("square.txt")}).code == 2);
    CHECK(call({"comb-shift", data("square.txt"), "--transposition", "2", "2"}).code == 2);
}

TEST_CASE("search-genericity") {
    auto r = call({"search-genericity", data("five_edges.txt"), "--perm", "1 4 3 2 5 6", "--field", "2^2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("assignments 64\n") != std::string::npos);
    CHECK(r.out.find("verifying 18\n") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
    auto none = call({"search-genericity", data("five_edges.txt"), "--perm", "1 4 3 2 5 6", "--field", "2"});
    CHECK(none.code == 1);
    CHECK(none.out.find("verifying 0\n") != std::string::npos);
    CHECK(call({"search-genericity", data("five_edges.txt"), "--field", "q"}).code == 2);
}

TEST_CASE("complex shifts from the command line") {
    auto r = call({"shift", data("octahedron.txt"), "--complex", "--output", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["levels"].size() == 3);
    std::size_t triangles = 0;
    for (const auto& f : j["facets"]) triangles += f.size() == 3 ? 1 : 0;
    CHECK(triangles == 8);
}

TEST_CASE("bench") {
    TempDir tmp;
    const std::string csv = (tmp.dir / "out.csv").string();
    auto r = call({"bench", "--max-side", "2", "--csv", csv});
    REQUIRE(r.code == 0);
    std::ifstream in(csv);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    REQUIRE(lines.size() == 1 + 3 * 4);
    CHECK(lines[0] == cli::detail::csv_header);
    std::map<std::string, std::set<std::string>> digests;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> cols;
        std::stringstream ss(lines[i]);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        REQUIRE(cols.size() == 12);
        CHECK(std::stod(cols[5]) + std::stod(cols[6]) <= std::stod(cols[4]) + 1e-3);
        if (cols[2] == "las-vegas") CHECK(cols[7] == "1");
        digests[cols[0]].insert(cols[11]);
    }
    for (const auto& [id, d] : digests) CHECK(d.size() == 1);

    auto stdout_run = call({"bench", "--max-side", "1", "--algorithms", "deterministic", "--engines", "lazy"});
    CHECK(stdout_run.code == 0);
    CHECK(stdout_run.out.starts_with(std::string(cli::detail::csv_header) + "\nK_1_1,q,deterministic,lazy,"));

    CHECK(call({"bench", "--csv", (tmp.dir / "no" / "such" / "dir.csv").string()}).code == 2);
    CHECK(call({"bench", "--suite", "nope"}).code == 2);
    CHECK(call({"bench", "--suite", "files"}).code == 2);
    auto files = call({"bench", "--suite", "files", "--file", data("square.txt"), "--fields", "2,3",
                       "--algorithms", "deterministic", "--engines", "eager"});
    CHECK(files.code == 0);
    CHECK(files.out.find("square,3,deterministic,eager,") != std::string::npos);
}

TEST_CASE("usage") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    auto help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("gen-bipartite") != std::string::npos);
}
