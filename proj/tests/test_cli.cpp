#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqd/cli.hpp"

#include <sstream>

using namespace uqd;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("qdim command") {
    auto r = run_cli({"qdim", "--algebra", "G2", "--k", "1", "--n", "0"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.json();
    CHECK(j.at("dimension") == "77");
    CHECK(j.at("terms").size() == 1);

    auto e8 = run_cli({"qdim", "--algebra", "E8", "--k", "2", "--n", "3"});
    REQUIRE(e8.code == cli::kOk);
    auto je = e8.json();
    CHECK(je.at("terms").size() == 1);
    // canonical value round-trips through the interchange format
    auto q = sinh_product_from_json(je.at("terms")[0].at("qdim"));
    CHECK(to_json(q) == je.at("terms")[0].at("qdim"));

    // the unitary family emits both conjugate components
    auto a4 = run_cli({"qdim", "--algebra", "A4", "--k", "1", "--n", "1"});
    REQUIRE(a4.code == cli::kOk);
    CHECK(a4.json().at("terms").size() == 2);
}

TEST_CASE("universal command") {
    auto zero = run_cli({"universal", "--algebra", "A1", "--k", "1", "--n", "5"});
    REQUIRE(zero.code == cli::kOk);
    CHECK(zero.json().at("class") == "zero");

    auto raw = run_cli({"universal", "--alpha", "-2", "--beta", "4", "--gamma", "4", "--k", "1",
                        "--n", "2", "--perm", "bag"});
    REQUIRE(raw.code == cli::kOk);
    CHECK(raw.json().at("class") == "indeterminate");

    auto reg = run_cli({"universal", "--algebra", "E8", "--k", "1", "--n", "0"});
    REQUIRE(reg.code == cli::kOk);
    CHECK(reg.json().at("class") == "regular");
    CHECK(reg.json().at("dimension") == "30380");

    auto text = run_cli({"--format", "text", "universal", "--algebra", "G2", "--k", "1", "--n",
                         "0"});
    REQUIRE(text.code == cli::kOk);
    CHECK(text.out.find("dimension 77") != std::string::npos);
}

TEST_CASE("limit command") {
    auto r = run_cli({"limit", "--algebra", "so8", "--k", "1", "--n", "3", "--perm", "bag",
                      "--line", "so"});
    REQUIRE(r.code == cli::kOk);
    auto j = r.json();
    CHECK(j.at("status") == "value");
    CHECK(j.at("value").at("coeff") == "-1");
    CHECK(j.at("value").at("num").empty());

    auto z = run_cli({"limit", "--algebra", "so8", "--k", "2", "--n", "0", "--perm", "bag",
                      "--line", "so"});
    REQUIRE(z.code == cli::kOk);
    CHECK(z.json().at("status") == "identically-zero");

    auto bad = run_cli({"limit", "--algebra", "so8", "--k", "1", "--n", "0", "--perm", "abg",
                        "--line", "sp"});
    CHECK(bad.code == cli::kUsage); // target not on that line
}

TEST_CASE("verify command") {
    auto r = run_cli({"verify", "--tables", "8", "--format", "text"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("mismatch 0") != std::string::npos);

    auto j = run_cli({"verify", "--tables", "3", "--max-k", "2", "--max-n", "2", "--jobs", "2"});
    REQUIRE(j.code == cli::kOk);
    auto doc = j.json();
    CHECK(doc.at("summary").at("match") == 45);
    CHECK(doc.at("summary").at("mismatch") == 0);
    CHECK(doc.at("records").size() == 45);
}

TEST_CASE("verify --out writes the report") {
    std::string path = "/tmp/uqd_report_test.json";
    auto r = run_cli({"verify", "--tables", "8", "--out", path});
    REQUIRE(r.code == cli::kOk);
    std::ifstream f(path);
    REQUIRE(f.good());
    Json doc = Json::parse(f);
    CHECK(doc.at("summary").at("match") == 28);
}

TEST_CASE("tables command") {
    auto r = run_cli({"tables"});
    REQUIRE(r.code == cli::kOk);
    auto doc = r.json();
    CHECK(doc.at("records").size() > 100);
    auto n = run_cli({"tables", "--numbering"});
    REQUIRE(n.code == cli::kOk);
    CHECK(n.json().at("algebras").size() == 10);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"qdim", "--algebra", "Q9", "--k", "0", "--n", "0"}).code == cli::kUsage);
    CHECK(run_cli({"qdim", "--k", "0", "--n", "0"}).code == cli::kUsage);
    CHECK(run_cli({"nonsense"}).code == cli::kUsage);
    CHECK(run_cli({"universal", "--k", "1", "--n", "0"}).code == cli::kUsage);
    CHECK(run_cli({"universal", "--algebra", "A2", "--k", "-1", "--n", "0"}).code == cli::kUsage);
    CHECK(run_cli({"limit", "--algebra", "so8", "--k", "1", "--n", "0", "--line", "nope"}).code ==
          cli::kUsage);
}

TEST_CASE("help is not an error") {
    auto r = run_cli({"--help"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("Usage") != std::string::npos);
}
