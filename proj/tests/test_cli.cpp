// Exercises the installed CLI binary end to end (path in $EXOTIC_CLI).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("EXOTIC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "EXOTIC_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/exotic_cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("enumerate cone text output") {
    const RunResult r = run("enumerate cone -p 3 -q 1 -k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5 orbits") != std::string::npos);
    CHECK(r.out.find("((1,0), I)") != std::string::npos);
    CHECK(r.out.find("+|-\n::+\n::+") != std::string::npos);
    CHECK(r.out.find("((0,0), II0)") != std::string::npos);
    CHECK(r.out.find("+|\n+|\n+|\n:|-") != std::string::npos);
}

TEST_CASE("enumerate grassmannian") {
    const RunResult r = run("enumerate grassmannian -p 3 -q 1 -k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5 orbits") != std::string::npos);
    CHECK(r.out.find("(00/0/2, i=2)") != std::string::npos);

    const RunResult single = run("enumerate cone -p 1 -q 0 -k 0");
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("1 orbits") != std::string::npos);
}

TEST_CASE("invalid ambient exits 2") {
    CHECK(run("enumerate cone -p 3 -q 1 -k 9").exit_code == 2);
    CHECK(run("enumerate cone -p 0 -q 1 -k 0").exit_code == 2);
    CHECK(run("correspond -p 2 -q 1 -k 7").exit_code == 2);
}

TEST_CASE("correspond determinism and formats") {
    const std::string cmd = "correspond -p 3 -q 1 -k 2 --seed 0";
    const RunResult a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical for identical (command, seed)
    CHECK(a.out.find("bijective: no") != std::string::npos);

    const RunResult parallel = run(cmd + " --parallel");
    CHECK(parallel.out == a.out);

    const RunResult json = run("correspond -p 2 -q 2 -k 2 --seed 0 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"bijective\": true") != std::string::npos);

    const RunResult csv = run("correspond -p 3 -q 1 -k 1 --seed 0 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("p,q,k,n1,n2,ell,mark,r,s,type,lambda\n", 0) == 0);

    const RunResult latex = run("correspond -p 3 -q 1 -k 1 --seed 0 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out.find("\\markedtableau{00/0/2}{2}") != std::string::npos);
    CHECK(latex.out.find("\\stripeddiagram{+|-,::+,::+}") != std::string::npos);
}

TEST_CASE("seed environment variable, overridden by --seed") {
    const std::string with_env =
        "EXOTIC_ORBITS_SEED=5 " + cli_path() + " correspond -p 3 -q 1 -k 1 --format json";
    FILE* pipe = popen((with_env + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string env_out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        env_out.append(buf, got);
    pclose(pipe);
    const RunResult seed5 = run("correspond -p 3 -q 1 -k 1 --seed 5 --format json");
    CHECK(env_out == seed5.out);
}

TEST_CASE("classify flag pair and exotic point") {
    const std::string pair_path = write_temp(
        "pair.json",
        R"({"kind":"flag_pair","p":3,"q":1,"k":1,
            "W":{"rows":1,"cols":4,"entries":["1","0","0","0"]},
            "L":{"rows":1,"cols":4,"entries":["1","0","0","0"]}})");
    const RunResult pair = run("classify " + pair_path);
    CHECK(pair.exit_code == 0);
    CHECK(pair.out.find("(00/0/2, i=2)") != std::string::npos);

    const std::string point_path = write_temp(
        "point.json",
        R"({"kind":"exotic_point","p":3,"q":1,"k":1,
            "L":{"rows":1,"cols":4,"entries":["1","0","0","0"]},
            "a":{"rows":3,"cols":1,"entries":["0","0","0"]},
            "b":{"rows":1,"cols":3,"entries":["0","0","0"]}})");
    const RunResult point = run("classify " + point_path);
    CHECK(point.exit_code == 0);
    CHECK(point.out.find("((0,0), II0)") != std::string::npos);
}

TEST_CASE("classify error contracts") {
    const std::string bad_json = write_temp("bad.json", "{not json");
    CHECK(run("classify " + bad_json).exit_code == 2);

    const std::string untagged = write_temp("untagged.json", R"({"p":3,"q":1,"k":1})");
    CHECK(run("classify " + untagged).exit_code == 2);

    // ab != 0 must name the two-step violation and exit 5
    const std::string twostep = write_temp(
        "twostep.json",
        R"({"kind":"exotic_point","p":2,"q":2,"k":2,
            "L":{"rows":1,"cols":4,"entries":["1","0","0","0"]},
            "a":{"rows":2,"cols":2,"entries":["1","0","0","0"]},
            "b":{"rows":2,"cols":2,"entries":["1","0","0","0"]}})");
    const RunResult r = run("classify " + twostep, /*merge_stderr=*/true);
    CHECK(r.exit_code == 5);
    CHECK(r.out.find("two-step") != std::string::npos);
}

TEST_CASE("check command validates its range") {
    CHECK(run("check --max-n 1").exit_code == 2);
    const RunResult r = run("check --max-n 3 --seed 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT PASS") != std::string::npos);
}
