#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "goldens.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int rc = -1;
};

// NFLAB_EXE is injected by the build; stderr is folded in only on request.
RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(NFLAB_EXE) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/nflab_cli_" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("form prints the golden strings") {
    for (const auto& e : goldens::kAll) {
        RunResult r = run(std::string("form ") + e.label);
        CHECK(r.rc == 0);
        CHECK(r.out == std::string(e.form) + "\n");
    }
}

TEST_CASE("form point evaluation") {
    CHECK(run("form cbrt2 --eval 1,0,1").out == "5\n");
    CHECK(run("form zeta5 --eval 1,1,1,1").out == "1\n");
    CHECK(run("form q_sqrt2 --eval 1,1").out == "-1\n");
}

TEST_CASE("split emits one compact json line per prime") {
    RunResult r = run("split q_i 13");
    CHECK(r.rc == 0);
    CHECK(r.out == "{\"p\":13,\"pairs\":[[1,1],[1,1]],\"exceptional\":false,\"class\":\"low\"}\n");

    CHECK(run("split q_sqrt5 2").out ==
          "{\"p\":2,\"pairs\":[],\"exceptional\":true,\"class\":\"exceptional\"}\n");
}

TEST_CASE("split range in tsv") {
    RunResult r = run("split cbrt2 --upto 12 --tsv");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "p\tpairs\texceptional\tclass\n"
          "2\t(3,1)\tno\tlow\n"
          "3\t(3,1)\tno\tlow\n"
          "5\t(1,1)(1,2)\tno\tlow\n"
          "7\t(1,3)\tno\thigh\n"
          "11\t(1,1)(1,2)\tno\tlow\n");
}

TEST_CASE("classify range in tsv") {
    RunResult r = run("classify zeta5 --upto 12 --tsv");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "p\tclass\n"
          "2\thigh\n"
          "3\thigh\n"
          "5\tlow\n"
          "7\thigh\n"
          "11\tlow\n");
}

TEST_CASE("bound reports the unreduced product") {
    RunResult r = run("bound --primes 3,7");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["primes"] == json::array({3, 7}));
    CHECK(j["bound"] == "301/441");
    CHECK(j["value"].get<double>() == doctest::Approx(301.0 / 441.0).epsilon(1e-12));
}

TEST_CASE("represent verdicts over json") {
    json yes = json::parse(run("represent q_i 13").out);
    CHECK(yes["n"] == 13);
    CHECK(yes["verdict"] == "yes");
    CHECK(yes["witness"] == json::array({3, 2}));
    CHECK(yes["route"] == "quadratic-forms");
    CHECK(yes["sign"] == 0);

    json no = json::parse(run("represent q_i 21").out);
    CHECK(no["verdict"] == "no");
    CHECK(no["witness"].is_null());

    json cube = json::parse(run("represent cbrt2 9").out);
    CHECK(cube["verdict"] == "yes");
    CHECK(cube["witness"] == json::array({1, -1, 1}));
    CHECK(cube["route"] == "class-number-one");
    CHECK_FALSE(cube.contains("sign")); // only quadratic fields report a sign
}

TEST_CASE("classgroup output shapes") {
    json g20 = json::parse(run("classgroup -- -20").out);
    CHECK(g20["D"] == -20);
    CHECK(g20["h"] == 2);
    CHECK(g20["h_narrow"] == 2);
    CHECK(g20["reps"] == json::array({json::array({1, 0, 5}), json::array({2, 2, 3})}));
    CHECK(g20["principal"] == json::array({1, 0, 5}));
    CHECK_FALSE(g20.contains("s_principal")); // meaningless for definite forms

    json g12 = json::parse(run("classgroup 12").out);
    CHECK(g12["h"] == 1);
    CHECK(g12["h_narrow"] == 2);
    CHECK(g12["s_principal"] == false);
    CHECK(g12["reps"] == json::array({json::array({-2, 2, 1}), json::array({-1, 2, 2})}));

    json g40 = json::parse(run("classgroup 40").out);
    CHECK(g40["h"] == 2);
    CHECK(g40["h_narrow"] == 2);
    CHECK(g40["s_principal"] == true);
    CHECK(g40["principal"] == json::array({-1, 6, 1}));

    json g229 = json::parse(run("classgroup 229").out);
    CHECK(g229["h"] == 3);
    CHECK(g229["reps"].size() == 3);

    json g8 = json::parse(run("classgroup 8").out);
    CHECK(g8["h"] == 1);
    CHECK(g8["reps"] == json::array({json::array({-1, 2, 1})}));
}

TEST_CASE("density json and tsv") {
    json j = json::parse(run("density q_i --bound 10000").out);
    CHECK(j["label"] == "q_i");
    CHECK(j["kind"] == "primes");
    CHECK(j["bound"] == 10000);
    CHECK(j["count"] == 610);
    CHECK(j["total"] == 1229);
    CHECK(j["skipped"] == 0);
    CHECK(j["ratio"].get<double>() == doctest::Approx(610.0 / 1229.0).epsilon(1e-12));

    RunResult tsv = run("density q_i --bound 10000 --integers --tsv");
    CHECK(tsv.out ==
          "count\ttotal\tskipped\tratio\n"
          "2749\t10000\t0\t0.2749\n");
}

TEST_CASE("chebotarev json") {
    json j = json::parse(run("chebotarev q_i --bound 1000").out);
    CHECK(j["total"] == 167);
    CHECK(j["skipped"] == 1);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["type"] == "1,1");
    CHECK(j["rows"][0]["count"] == 80);
    CHECK(j["rows"][0]["theoretical"] == "1/2");
    CHECK(j["rows"][1]["type"] == "2");
    CHECK(j["rows"][1]["count"] == 87);
    CHECK(j["d_high_empirical"].get<double>() == doctest::Approx(87.0 / 167.0).epsilon(1e-12));
    CHECK(j["d_high_theoretical"] == "1/2");
}

TEST_CASE("divergence json") {
    json j = json::parse(run("diverge q_i --checkpoints 100,1000").out);
    REQUIRE(j["points"].size() == 2);
    CHECK(j["points"][0]["x"] == 100);
    CHECK(j["points"][0]["count"] == 13);
    CHECK(j["points"][0]["sum"].get<double>() ==
          doctest::Approx(0.8106653344689393).epsilon(1e-12));
    CHECK(j["points"][1]["count"] == 87);
}

TEST_CASE("ap search json") {
    json j = json::parse(run("ap q_i --k 4 --bound 50").out);
    CHECK(j["found"] == true);
    CHECK(j["primes"] == false);
    CHECK(j["a"] == 1);
    CHECK(j["q"] == 4);
    CHECK(j["members"] == json::array({1, 5, 9, 13}));

    json jp = json::parse(run("ap q_i --k 4 --bound 50 --primes").out);
    CHECK(jp["primes"] == true);
    CHECK(jp["a"] == 5);
    CHECK(jp["q"] == 12);
    CHECK(jp["members"] == json::array({5, 17, 29, 41}));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("split q_i 12").rc == 1);       // composite p
    CHECK(run("classgroup 45").rc == 1);      // non-fundamental
    CHECK(run("classgroup 2000000004").rc == 1);
    CHECK(run("form /nonexistent.json").rc == 1);
    CHECK(run("nosuch").rc == 1);
    CHECK(run("").rc == 1);
}

TEST_CASE("spec errors exit 2") {
    std::string reducible = write_temp("red.json", R"({"poly":[-1,0,1],"label":"r"})");
    RunResult r1 = run("form " + reducible, true);
    CHECK(r1.rc == 2);
    CHECK(r1.out.find("spec error:") != std::string::npos);
    CHECK(r1.out.find("reducible") != std::string::npos);

    std::string garbage = write_temp("garbage.json", "not json");
    RunResult r2 = run("form " + garbage, true);
    CHECK(r2.rc == 2);
    CHECK(r2.out.find("not valid JSON") != std::string::npos);

    std::string linear = write_temp("lin.json", R"({"poly":[1,1],"label":"l"})");
    RunResult r3 = run("form " + linear, true);
    CHECK(r3.rc == 2);
    CHECK(r3.out.find("degree >= 2") != std::string::npos);

    std::string nonmonic = write_temp("nm.json", R"({"poly":[1,0,2],"label":"n"})");
    RunResult r4 = run("form " + nonmonic, true);
    CHECK(r4.rc == 2);
    CHECK(r4.out.find("monic") != std::string::npos);
}

TEST_CASE("guard errors exit 3") {
    RunResult r = run("classgroup 100000005", true);
    CHECK(r.rc == 3);
    CHECK(r.out.find("guard tripped") != std::string::npos);
}

TEST_CASE("result cache replays byte-identical output") {
    std::string cache = "/tmp/nflab_cli_cache.jsonl";
    std::remove(cache.c_str());

    RunResult a = run("density q_i --bound 10000 --cache " + cache);
    RunResult b = run("density q_i --bound 10000 --cache " + cache);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);

    std::ifstream in(cache);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 1); // second run replayed, nothing appended

    json row = json::parse(lines[0]);
    CHECK(row["result"].is_string());
    json m = row["manifest"];
    CHECK(m["label"] == "q_i");
    CHECK(m["subcommand"] == "density");
    CHECK(m["version"] == "0.1.0");
    CHECK(m["params"]["bound"] == 10000);
    CHECK(m["params"]["kind"] == "primes");
    CHECK(m["params"]["format"] == "json");
    CHECK(m["key"].get<std::string>().size() == 16);
    CHECK(m.contains("digest"));
    CHECK(m.contains("wall_ms"));

    // a changed parameter or seed misses the cache and appends
    run("density q_i --bound 20000 --cache " + cache);
    run("density q_i --bound 10000 --seed 7 --cache " + cache);
    std::ifstream in2(cache);
    int count = 0;
    for (std::string line; std::getline(in2, line);) ++count;
    CHECK(count == 3);
}

TEST_CASE("thread count does not change output bytes") {
    RunResult t1 = run("density q_i --bound 100000 --threads 1");
    RunResult t4 = run("density q_i --bound 100000 --threads 4");
    CHECK(t1.rc == 0);
    CHECK(t1.out == t4.out);

    RunResult c1 = run("chebotarev cbrt2 --bound 100000 --threads 1");
    RunResult c4 = run("chebotarev cbrt2 --bound 100000 --threads 4");
    CHECK(c1.out == c4.out);
}
