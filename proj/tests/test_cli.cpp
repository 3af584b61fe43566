#include <doctest.h>

#include <cstdio>
#include <map>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SSCODES_BIN
#define SSCODES_BIN "sscodes"
#endif
#ifndef SSC_TEST_TMPDIR
#define SSC_TEST_TMPDIR "/tmp"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(SSC_TEST_TMPDIR) + "/cli_out.txt";
    std::string cmd = std::string(SSCODES_BIN) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return {WEXITSTATUS(rc), text};
}

std::string tmp_file(const std::string& name) {
    return std::string(SSC_TEST_TMPDIR) + "/" + name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gaussian subcommand") {
    auto r = run_cli("gaussian --n 4 --k 2 --q 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "35\n");
    auto r2 = run_cli("gaussian --n 6 --k 3 --q 2");
    CHECK(r2.out == "1395\n");
}

TEST_CASE("construct trinomial -> verify chain, exit codes") {
    std::string f = tmp_file("tri23.json");
    auto r = run_cli("construct trinomial --q 2 --k 3 -o " + f);
    CHECK(r.exit_code == 0);
    auto v = run_cli("verify --in " + f + " --json");
    CHECK(v.exit_code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["size_ok"] == true);
    CHECK(j["distance_ok"] == true);
    CHECK(j["distance_value"] == 4);
    CHECK(j["method"] == "exhaustive");
    CHECK(j["orbits"] == 1);
    CHECK(j["verified_size"] == "127");
    CHECK(j.contains("duration_ms"));
}

TEST_CASE("verify modes and a tampered file") {
    std::string f = tmp_file("tri23b.json");
    run_cli("construct trinomial --q 2 --k 3 -o " + f);
    for (const char* mode : {"exhaustive", "orbit", "sample"}) {
        auto v = run_cli("verify --in " + f + " --mode " + mode);
        CHECK(v.exit_code == 0);
    }
    // tamper with the claimed size
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"127\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\"128\"");
    std::string f2 = tmp_file("tri23_tampered.json");
    std::ofstream(f2) << text;
    auto v = run_cli("verify --in " + f2 + " --json");
    CHECK(v.exit_code == 1);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["size_ok"] == false);
}

TEST_CASE("census subcommand output and identity") {
    auto r = run_cli("census --q 2 --n 4 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("35 subspaces") != std::string::npos);
    CHECK(r.out.find("d=1: 2 orbit(s) x 15") != std::string::npos);
    CHECK(r.out.find("d=2: 1 orbit(s) x 5") != std::string::npos);
    CHECK(r.out.find("identity PASS") != std::string::npos);
    auto rj = run_cli("census --q 3 --n 4 --k 2 --json");
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["total"] == "130");
    CHECK(j["identity_ok"] == true);
}

TEST_CASE("search trinomial lists the k <= 7 family") {
    auto r = run_cli("search trinomial --q 2 --kmax 7 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 6);
    std::map<int, bool> expect{{2, true}, {3, true}, {4, true},
                               {5, false}, {6, true}, {7, true}};
    for (const auto& row : j) {
        CHECK(row["irreducible"] == expect[row["k"].get<int>()]);
    }
}

TEST_CASE("construct subfield / union / multiorbit / irreducible / embed") {
    std::string f = tmp_file("cd.json");
    CHECK(run_cli("construct subfield --q 2 --n 6 --k 3 --d 3 -o " + f).exit_code == 0);
    CHECK(run_cli("verify --in " + f).exit_code == 0);

    std::string fu = tmp_file("u.json");
    CHECK(run_cli("construct union --q 2 --n 6 --k 3 --divisors 1,3 -o " + fu).exit_code == 0);
    CHECK(run_cli("verify --in " + fu).exit_code == 0);

    std::string fm = tmp_file("mo.json");
    CHECK(run_cli("construct multiorbit --q 2 --n 3 --k 3 -o " + fm).exit_code == 0);
    CHECK(run_cli("verify --in " + fm + " --mode orbit").exit_code == 0);

    std::string fi = tmp_file("irr.json");
    CHECK(run_cli("construct irreducible --q 2 --k 3 --t 1 -o " + fi).exit_code == 0);
    CHECK(run_cli("verify --in " + fi).exit_code == 0);
    // k=5 is refused (reducible trinomial): CLI error path, exit 2
    CHECK(run_cli("construct irreducible --q 2 --k 5 --t 1").exit_code == 2);

    // embed G_4(2,1) down to G_2(4,2)
    std::string finner = tmp_file("inner.json");
    CHECK(run_cli("construct subfield --q 4 --n 2 --k 1 --d 1 -o " + finner).exit_code == 0);
    std::string fembed = tmp_file("embedded.json");
    CHECK(run_cli("embed --in " + finner + " --d 2 -o " + fembed).exit_code == 0);
    auto v = run_cli("verify --in " + fembed + " --json");
    CHECK(v.exit_code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["verified_size"] == "5");
    CHECK(j["distance_value"] == 4);
}

TEST_CASE("deterministic outputs: same spec, identical bytes") {
    std::string f1 = tmp_file("det1.json"), f2 = tmp_file("det2.json");
    run_cli("construct multiorbit --q 2 --n 3 --k 3 -o " + f1);
    run_cli("construct multiorbit --q 2 --n 3 --k 3 -o " + f2);
    std::ifstream a(f1), b(f2);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    CHECK_FALSE(sa.empty());
}

TEST_CASE("config file sets verification caps") {
    std::string cfg = tmp_file("caps.json");
    std::ofstream(cfg) << "{\"pair_budget\": 1, \"shift_budget\": 1, \"sample_pairs\": 100}\n";
    std::string f = tmp_file("tri23c.json");
    run_cli("construct trinomial --q 2 --k 3 -o " + f);
    // with both budgets forced to 1, auto mode falls through to sampling
    auto v = run_cli("--config " + cfg + " verify --in " + f + " --json");
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["method"] == "sampled");
    CHECK(j["distance_exact"] == false);
}

TEST_CASE("malformed inputs get diagnostics on stderr and exit 2") {
    std::string bad = tmp_file("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("verify --in " + bad).exit_code == 2);
    CHECK(run_cli("verify --in /nonexistent/path.json").exit_code == 2);
    CHECK(run_cli("construct trinomial --q 6 --k 3").exit_code == 2); // q not a prime power
    CHECK(run_cli("construct subfield --q 2 --n 4 --k 2 --d 3").exit_code == 2);
}

} // TEST_SUITE
