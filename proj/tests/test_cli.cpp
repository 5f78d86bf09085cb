#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_radokit;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_radokit + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
    auto r = run(args + " --format json");
    CHECK(r.code == expect_code);
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE(!j.is_discarded());
    return j;
}

} // namespace

TEST_CASE("documented examples run with the stated exit codes") {
    auto w = run("witness --graph bit --u 0,1 --v 2");
    CHECK(w.code == 0);
    CHECK(w.out == "11\n");

    auto t = run("truncate --graph bit --n 3 --format edges");
    CHECK(t.code == 0);
    CHECK(t.out == "0 1\n1 2\n");

    CHECK(run("truncate --graph bogus --n 3").code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);                       // missing subcommand
    CHECK(run("witness").code == 2);                // missing --graph
    CHECK(run("logic parse --sentence \"x ~\"").code == 2);
    CHECK(run("logic decide --sentence \"x ~ y\"").code == 2); // free variables
    CHECK(run("groups sqrt --group z2 --a 4").code == 2);      // arity mismatch
    CHECK(run("groups cayley --group q --n 4").code == 2);
    CHECK(run("fraisse check --class Kn:1").code == 2);
}

TEST_CASE("witness status maps to exit codes") {
    // magnitude guard in the bit oracle: adjacency to a huge vertex
    auto huge = run("witness --graph prime --u 0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,"
                    "16,17,18,19,20,21,22,23,24,25 --bound 10");
    CHECK(huge.code == 3);

    auto uns = run("fraisse witness --class Kn:3 --u 0,2 --henson 3");
    CHECK(uns.code == 1);
    CHECK(uns.out.find("unsatisfiable") != std::string::npos);
}

TEST_CASE("json output parses everywhere") {
    CHECK(run_json("construct --graph closure").contains("name"));
    CHECK(run_json("truncate --graph bit --n 4")["n"] == 4);
    CHECK(run_json("witness --graph bit --u 0,1 --v 2")["vertex"] == "11");
    auto ext = run_json("extcheck --graph bit --pool 6 --size 2");
    CHECK(ext["failed"] == 0);
    CHECK(run_json("iso --g1 shift:concat --g2 seeded:1 --rounds 6")["pairs"].size() == 6);
    CHECK(run_json("embed --src bit --tgt seeded:2 --n 5")["pairs"].size() == 5);
    auto cl = run_json("clique --graph bit --steps 5");
    CHECK(cl["vertices"] == nlohmann::json({"0", "1", "3", "11", "2059"}));
    CHECK(run_json("switch --graph bit --set 0 --n 4").contains("edges"));
    CHECK(run_json("edit --graph bit --delete 0 --n 4").contains("edges"));
    CHECK(run_json("pigeonhole --graph bit --parts 2 --pool 5 --size 2")["found"] == true);
    CHECK(run_json("logic sigma --m 1 --n 1").contains("sentence"));
    CHECK(run_json("logic decide --sentence \"exists x (exists y (x ~ y))\"")["value"] == true);
    CHECK(run_json("groups sumfree --seed 3 --prefix 50")["triangle_free"] == true);
    CHECK(run_json("groups cyclic --s1 concat --s2 concat")["equal"] == true);
    CHECK(run_json("groups sqrt --group z --a 4")["roots"] == nlohmann::json({"2"}));
    CHECK(run_json("fraisse check --class Kn:2").contains("checked"));
    CHECK(run_json("fraisse limit --class Kn:2 --n 8")["edges"].empty());
    CHECK(run_json("fraisse witness --class Kn:3 --u 0,1 --v 2")["vertex"] == "6");
}

TEST_CASE("logic pipeline on files") {
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    std::string gp = dir + "/radokit_test_p3.edges";
    std::string fp = dir + "/radokit_test_family.json";
    std::ofstream(gp) << "0 1\n1 2\n";
    std::ofstream(fp) << R"({"graphs":[{"n":2,"edges":[[0,1]]}]})";

    auto ev = run("logic eval --sentence \"exists x (exists y (x ~ y))\" --graph-file " + gp);
    CHECK(ev.code == 0);
    CHECK(ev.out == "true\n");

    auto hy = run_json("logic hyper --sentence \"exists x (exists y (E(x,y)))\""
                       " --family-file " + fp + " --graph-file " + gp);
    CHECK(hy["value"] == true);
    CHECK(hy["hyperedges"] == 2);

    auto tr = run("logic hyper --sentence \"exists x (exists y (E(x,y)))\""
                  " --family-file " + fp + " --translate");
    CHECK(tr.code == 0);
    CHECK(tr.out.find("x ~ y") != std::string::npos);

    auto zo = run_json("logic zeroone --sentence \"exists x (exists y (x ~ y))\""
                       " --n 12 --samples 16 --seed 4");
    CHECK(zo["rate"] == 1.0);

    std::remove(gp.c_str());
    std::remove(fp.c_str());
}

TEST_CASE("verification failures exit 1") {
    // the complete-graph class on two vertices amalgamates, but forbidding
    // both two-vertex graphs leaves a class that cannot amalgamate freely
    std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
    std::string cp = dir + "/radokit_test_class.json";
    std::ofstream(cp) << R"({"forbidden":[{"n":3,"edges":[]},{"n":3,"edges":[[0,1]]},)"
                      << R"({"n":3,"edges":[[0,1],[1,2]]},{"n":3,"edges":[[0,1],[1,2],[0,2]]}]})";
    std::ifstream in(cp);
    std::string cls((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto r = run("fraisse check --class '" + cls + "' --bound 2");
    CHECK(r.code == 1);
    std::remove(cp.c_str());
}

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (argv[i][0] != '-') g_radokit = argv[i];
    if (g_radokit.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-radokit>\n");
        return 1;
    }
    doctest::Context ctx;
    return ctx.run();
}
