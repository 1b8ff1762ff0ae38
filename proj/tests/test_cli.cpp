#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SYMQ_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, n);
    const int rc = pclose(pipe);
    if (WIFEXITED(rc))
        res.status = WEXITSTATUS(rc);
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli product text output") {
    const CliResult r = run_cli("product --g 2 --d 2 --u 1 --v 1");
    CHECK(r.status == 0);
    CHECK(r.out == "et^2 + q*(th - et)\n");

    const CliResult deep = run_cli("product --g 10 --d 5 --u 2 --v 2");
    CHECK(deep.status == 0);
    CHECK(deep.out == "et^4\n");
}

TEST_CASE("cli product reports unknown orders with exit 2") {
    const CliResult r = run_cli("product --g 8 --d 6 --u 3 --v 3 --qmax 4");
    CHECK(r.status == 2);
    CHECK(contains(r.out, "q^3*(unknown)"));
    CHECK(contains(r.out, "q^4*(unknown)"));
}

TEST_CASE("cli product json output") {
    const CliResult r = run_cli("product --g 2 --d 2 --u 1 --v 1 --format json");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["g"].get<long>() == 2);
    CHECK(doc["d"].get<long>() == 2);
    CHECK(doc["u"].get<long>() == 1);
    CHECK(doc["v"].get<long>() == 1);
    CHECK(doc["qmax"].get<long>() == 5);
    REQUIRE(doc["orders"].is_array());
    REQUIRE(doc["orders"].size() == 2);
    CHECK(doc["orders"][0]["qpow"].get<long>() == 0);
    CHECK(doc["orders"][1]["qpow"].get<long>() == 1);
    CHECK(doc["orders"][1]["terms"].size() == 2);
}

TEST_CASE("cli gw output") {
    const CliResult catalan = run_cli("gw --g 4 --d 3 --e 1 --u 1 --v 1 --w 1");
    CHECK(catalan.status == 0);
    CHECK(catalan.out == "<et, et, et>_1 = 2\n");

    const CliResult above = run_cli("gw --g 5 --d 7 --e 3 --u 1 --v 1 --w 1");
    CHECK(above.status == 0);
    CHECK(contains(above.out, " = 0\n"));

    const CliResult open = run_cli("gw --g 8 --d 6 --e 3 --u 2 --v 2 --w 2");
    CHECK(open.status == 2);
    CHECK(contains(open.out, " = unknown\n"));
}

TEST_CASE("cli verify single-point suites") {
    const CliResult assoc = run_cli("verify --suite assoc --g 2 --d 2");
    CHECK(assoc.status == 0);
    CHECK(contains(assoc.out, "assoc g=2 d=2: ok"));
    CHECK(contains(assoc.out, "verify: PASS"));

    const CliResult rel = run_cli("verify --suite relations --g 3 --d 3 --qmax 6");
    CHECK(rel.status == 0);
    CHECK(contains(rel.out, "relations g=3 d=3: ok"));
    CHECK(contains(rel.out, "verify: PASS"));

    const CliResult oracle = run_cli("verify --suite oracle --g 3 --d 2");
    CHECK(oracle.status == 0);
    CHECK(contains(oracle.out, "oracle g=3 d=2: ok"));

    const CliResult grading = run_cli("verify --suite grading --g 8 --d 6");
    CHECK(grading.status == 0);
    CHECK(contains(grading.out, "grading g=8 d=6: ok"));
}

TEST_CASE("cli verify requires g and d together") {
    const CliResult r = run_cli("verify --suite assoc --g 2");
    CHECK(r.status == 1);
}

TEST_CASE("cli info output") {
    const CliResult flat = run_cli("info --g 2 --d 2");
    CHECK(flat.status == 0);
    CHECK(contains(flat.out, "g = 2, d = 2"));
    CHECK(contains(flat.out, "deg q = 2"));
    CHECK(contains(flat.out, "regime = q-linear only"));

    const CliResult series = run_cli("info --g 5 --d 4");
    CHECK(series.status == 0);
    CHECK(contains(series.out, "deg q = 0"));
    CHECK(contains(series.out, "hyperbola bound = infinite"));
    CHECK(contains(series.out, "regime = d = g-1 series"));

    const CliResult window = run_cli("info --g 8 --d 6");
    CHECK(window.status == 0);
    CHECK(contains(window.out, "hyperbola bound = 3"));
    CHECK(contains(window.out, "regime = unknown tail"));
}

TEST_CASE("cli table output") {
    const CliResult csv = run_cli("table --g 2 --d 2 --max 2");
    CHECK(csv.status == 0);
    CHECK(csv.out == "u,v,product\n1,1,et^2 + q*(th - et)\n");

    const CliResult json = run_cli("table --g 2 --d 2 --max 3 --format json");
    CHECK(json.status == 0);
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["format_version"].get<std::string>() == "1");
    CHECK(doc["rows"].size() == 3);

    const CliResult open = run_cli("table --g 8 --d 6 --max 2 --qmax 4");
    CHECK(open.status == 2);
    CHECK(contains(open.out, "q^3*(unknown)"));
}

TEST_CASE("cli usage errors exit 1") {
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("product --g 2 --d 2 --u 1").status == 1);
    CHECK(run_cli("product --g 2 --d 2 --u 1 --v 1 --format yaml").status == 1);
    CHECK(run_cli("product --g 2 --d 0 --u 1 --v 1").status == 1);
    CHECK(run_cli("product --g -1 --d 2 --u 1 --v 1").status == 1);
    CHECK(run_cli("gw --g 4 --d 3 --e 1 --u 1 --v 1").status == 1);
    CHECK(run_cli("verify --suite nonsense").status == 1);
    CHECK(run_cli("frobnicate").status == 1);
}

TEST_CASE("cli output is deterministic") {
    const std::string args = "table --g 5 --d 4 --max 4 --format json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}
