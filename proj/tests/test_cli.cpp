#include "unimap/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unimap;
using cli::RunResult;
using nlohmann::json;

namespace {

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const RunResult r = cli::run(args);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("analyze one-vertex map") {
    const json env = run_json({"analyze", "--k", "3", "--y", "(0 3)(1 4)(2 5)"});
    CHECK(env["schema_version"] == "1");
    CHECK(env["command"] == "analyze");
    const json& res = env["result"];
    CHECK(res["profile"]["genus"] == 1);
    CHECK(res["profile"]["faces"] == 2);
    CHECK(res["aut"]["order"] == 6);
    CHECK(res["regular"] == true);
    CHECK(res["strictly_edge_transitive"] == false);
    CHECK(res["face_circuits"] == "(0 2 4)(1 3 5)");
}

TEST_CASE("analyze general map (torus example)") {
    const json env = run_json(
        {"analyze", "--degree", "24",
         "--x", "(0 1 2)(3 4 5)(6 7 8)(9 10 11)(12 13 14)(15 16 17)(18 19 20)(21 22 23)",
         "--y",
         "(0 10)(1 17)(2 3)(4 6)(5 13)(7 23)(8 9)(11 19)(12 22)(14 15)(16 18)(20 21)"});
    const json& p = env["result"]["profile"];
    CHECK(p["vertices"] == 8);
    CHECK(p["edges"] == 12);
    CHECK(p["faces"] == 4);
    CHECK(p["genus"] == 1);
    CHECK(p["map_type"] == json::array({3, 6}));
    CHECK(p["uniform"] == true);
}

TEST_CASE("analyze via map literal and trivial map") {
    const json env = run_json({"analyze", "--map", "k=1; y=(0 1)"});
    CHECK(env["result"]["profile"]["genus"] == 0);
    CHECK(env["result"]["profile"]["faces"] == 2);
}

TEST_CASE("analyze errors produce an error envelope and nonzero exit") {
    const RunResult r = cli::run({"analyze", "--k", "3", "--y", "(0 1)(2 3)", "--format", "json"});
    CHECK(r.exit_code == 1);
    const json env = json::parse(r.out);
    CHECK(env["schema_version"] == "1");
    CHECK(env.contains("error"));
    CHECK_FALSE(env.contains("result"));

    const RunResult text = cli::run({"analyze", "--k", "3", "--y", "(0 1)(2 3)"});
    CHECK(text.exit_code == 1);
    CHECK(text.err.find("error:") == 0);
}

TEST_CASE("census table for k = 3") {
    const json env = run_json({"census", "--k", "3", "--oracle", "--reps"});
    const json& rows = env["result"]["rows"];
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["p"] == 1);
    CHECK(rows[0]["nu_bar"] == "1");
    CHECK(rows[0]["nu"] == "1");
    CHECK(rows[0]["classes"] == "1");
    CHECK(rows[0]["match"] == true);
    CHECK(rows[0]["representatives"] == json::array({"(0 3)(1 4)(2 5)"}));
    CHECK(rows[1]["p"] == 2);
    CHECK(rows[1]["nu_bar"] == "3");
    CHECK(rows[1]["nu"] == "2");
    CHECK(rows[1]["classes"] == "1");
    CHECK(rows[1]["representatives"] == json::array({"(0 1)(2 3)(4 5)"}));
    CHECK(rows[2]["p"] == 3);
    CHECK(rows[2]["nu"] == "6");
    CHECK(rows[3]["p"] == 6);
    CHECK(rows[3]["nu"] == "6");
    for (const json& row : rows) CHECK(row["match"] == true);
    CHECK(env["warnings"] == json::array());
}

TEST_CASE("census single divisor and large-k formula path") {
    const json env = run_json({"census", "--k", "6", "--p", "2"});
    REQUIRE(env["result"]["rows"].size() == 1);
    CHECK(env["result"]["rows"][0]["classes"] == "3");

    const json big = run_json({"census", "--k", "20"});
    // (2*20-1)!! = 319830986772877770815625 needs more than 64 bits.
    bool found = false;
    for (const json& row : big["result"]["rows"])
        if (row["p"] == 40) {
            CHECK(row["nu_bar"] == "319830986772877770815625");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("census respects caps with helpful messages") {
    const RunResult oracle = cli::run({"census", "--k", "9", "--oracle", "--format", "json"});
    CHECK(oracle.exit_code == 1);
    CHECK(json::parse(oracle.out)["error"].get<std::string>().find("--brute-cap") !=
          std::string::npos);

    const RunResult reps = cli::run({"census", "--k", "11", "--reps", "--format", "json"});
    CHECK(reps.exit_code == 1);
    CHECK(json::parse(reps.out)["error"].get<std::string>().find("--gen-cap") !=
          std::string::npos);

    // The cap is configuration: lowering it blocks even small k, and the
    // default allows the same request.
    const RunResult lowered =
        cli::run({"census", "--k", "3", "--reps", "--gen-cap", "2", "--format", "json"});
    CHECK(lowered.exit_code == 1);
    const RunResult allowed = cli::run({"census", "--k", "3", "--reps", "--format", "json"});
    CHECK(allowed.exit_code == 0);
}

TEST_CASE("classify single, regular, and scan") {
    const json klein = run_json({"classify", "--k", "7", "--t", "2"});
    CHECK(klein["result"]["verdict"] == "KleinQuartic");
    CHECK(klein["result"]["aut_surface"]["name"] == "PSL_2(7)");
    CHECK(klein["result"]["aut_surface"]["order"] == 168);

    const json am = run_json({"classify", "--k", "6", "--t", "1"});
    CHECK(am["result"]["verdict"] == "AccolaMaclachlan");
    CHECK(am["result"]["genus"] == 2);
    CHECK(am["result"]["aut_surface"]["order"] == 24);

    const json regular = run_json({"classify", "--k", "5", "--regular"});
    CHECK(regular["result"]["verdict"] == "WimanI");
    CHECK(regular["result"]["regular"] == true);

    const json scan = run_json({"classify", "--scan", "3"});
    REQUIRE(scan["result"]["entries"].size() == 9);
    CHECK(scan["result"]["entries"][4]["verdict"] == "KleinQuartic");

    const RunResult bad = cli::run({"classify", "--k", "7", "--format", "json"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify command") {
    const RunResult r = cli::run({"verify", "--kmax", "4", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const json env = json::parse(r.out);
    CHECK(env["result"]["all_passed"] == true);
    CHECK(env["result"]["suites"].size() == 6);

    const RunResult text = cli::run({"verify", "--kmax", "4"});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("[PASS] partition-identity") != std::string::npos);
    CHECK(text.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("tampered census formula is detected, naming the counterexample") {
    const auto tampered = [](long long k, long long p) {
        BigInt v = nu_bar(k, p);
        if (k == 4 && p == 4) v += 1;
        return v;
    };
    const verify::SuiteResult r = verify::partition_identity(6, tampered);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("k=4") != std::string::npos);

    const verify::SuiteResult oracle = verify::oracle_equality(5, {}, tampered);
    CHECK_FALSE(oracle.passed);
    CHECK(oracle.detail.find("(k=4, p=") != std::string::npos);

    const verify::SuiteResult gen = verify::generator_completeness(5, {}, tampered);
    CHECK_FALSE(gen.passed);
    CHECK(gen.detail.find("k=4") != std::string::npos);
}

TEST_CASE("JSON output round-trips and text numbers match") {
    const std::vector<std::vector<std::string>> invocations = {
        {"analyze", "--k", "3", "--y", "(0 3)(1 4)(2 5)"},
        {"census", "--k", "4", "--oracle"},
        {"classify", "--k", "8", "--t", "5"},
        {"classify", "--scan", "2"},
    };
    for (std::vector<std::string> args : invocations) {
        const json env = run_json(args);
        CHECK(json::parse(env.dump()) == env);
        CHECK(env["schema_version"] == "1");
        CHECK(env.contains("result"));
        CHECK(env.contains("warnings"));
    }

    // Same numbers in both modes: the census row for k=3, p=6.
    const RunResult text = cli::run({"census", "--k", "3"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("15") != std::string::npos); // nu_bar(3, 6)
    const json env = run_json({"census", "--k", "3"});
    CHECK(env["result"]["rows"][3]["nu_bar"] == "15");
}

TEST_CASE("environment variables mirror flags, flags win") {
    // Env var alone selects JSON...
    setenv("UNIMAP_FORMAT", "json", 1);
    const RunResult via_env = cli::run({"census", "--k", "2"});
    CHECK(via_env.out.find("schema_version") != std::string::npos);
    // ...but an explicit flag beats it.
    const RunResult via_flag = cli::run({"census", "--k", "2", "--format", "text"});
    CHECK(via_flag.out.find("schema_version") == std::string::npos);
    unsetenv("UNIMAP_FORMAT");

    setenv("UNIMAP_BRUTE_CAP", "2", 1);
    const RunResult capped = cli::run({"census", "--k", "3", "--oracle", "--format", "json"});
    CHECK(capped.exit_code == 1);
    const RunResult uncapped =
        cli::run({"census", "--k", "3", "--oracle", "--brute-cap", "7", "--format", "json"});
    CHECK(uncapped.exit_code == 0);
    unsetenv("UNIMAP_BRUTE_CAP");
}
