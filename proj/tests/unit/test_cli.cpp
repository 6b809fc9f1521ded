#include "igrr/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace igrr;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
    std::vector<nlohmann::json> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(nlohmann::json::parse(l));
    return out;
}

}  // namespace

TEST_CASE("gen todd") {
    const auto r = run({"gen", "todd", "--degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("TdNum_3 = c1*c2") != std::string::npos);
    CHECK(r.out.find("/ 24") != std::string::npos);
    const auto j = json_lines(run({"gen", "todd", "--degree", "3", "--json"}).out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["schema"] == "1");
    CHECK(j[0]["polynomial"] == "1/1 c1^1 c2^1\n");
    CHECK(j[0]["denominator"] == "24");
}

TEST_CASE("gen constants") {
    CHECK(run({"gen", "tm", "--m", "4"}).out == "T_4 = 720 = 2^4·3^2·5\n");
    CHECK(run({"gen", "ct", "--degree", "0"}).out.find("CT_0 = r\n") == 0);
    CHECK(run({"gen", "bernoulli", "--degree", "12"}).out == "B_12 = -691/2730\n");
    CHECK(run({"gen", "D", "--degree", "4"}).out == "D_4 = 120 = 2^3·3·5\n");
    CHECK(run({"gen", "L", "--degree", "2"}).out == "L_2 = 6 = 2·3\n");
    CHECK(run({"gen", "ch", "--degree", "2"}).out.find("s_2 = cp1^2 - 2*cp2") == 0);
    CHECK(run({"gen", "toddinv", "--degree", "3", "--rank", "2"}).out.find("TdInv_1(r=2) = -3*c1") == 0);
    CHECK(run({"gen", "q", "--degree", "2"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"gen", "nonsense", "--degree", "1"}).code == 2);
    CHECK(run({"gen", "todd"}).code == 2);
    CHECK(run({"gen", "todd", "--degree", "13"}).code == 2);
    CHECK(run({"gen", "todd", "--degree", "13", "--max-degree", "13"}).code == 0);
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"verify", "main-theorem", "--geometry", "P(trivial 3 over point"}).code == 2);
    const auto bad = run({"verify", "main-theorem", "--geometry", "P([0, k]) over (P(trivial 2) over point)"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("'k'") != std::string::npos);
    CHECK(run({"verify", "main-theorem", "--geometry", "P(trivial 8) over point"}).code == 2);
    CHECK(run({"verify", "kappa", "--sheaf", "O"}).code == 2);
    CHECK(run({"verify", "integrality", "--mutate", "todd:4"}).code == 2);
}

TEST_CASE("verify main-theorem on P^2 with O(h)") {
    const auto r = run({"verify", "main-theorem", "--geometry", "P(trivial 3) over point", "--sheaf", "O(h)", "-n", "0",
                        "--json"});
    CHECK(r.code == 0);
    const auto j = json_lines(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["verdict"] == "pass");
    CHECK(j[0]["identity"] == "main-theorem");
    CHECK(j[0]["lhs"] == j[0]["rhs"]);
    CHECK(j[0]["lhs"].get<std::string>().find("36/1") != std::string::npos);
    CHECK_FALSE(j[0].contains("millis"));
}

TEST_CASE("verify kappa -n 2 has right-hand side 0") {
    const auto r = run({"verify", "kappa", "-n", "2", "--json"});
    CHECK(r.code == 0);
    const auto j = json_lines(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["verdict"] == "pass");
    CHECK(j[0]["rhs"].get<std::string>().find("/") == std::string::npos);
}

TEST_CASE("timing only on request") {
    const auto r = run({"verify", "kappa", "-n", "3", "--json", "--timing"});
    CHECK(json_lines(r.out)[0].contains("millis"));
}

TEST_CASE("integrality suite passes and mutation makes it exit 1") {
    CHECK(run({"verify", "integrality", "--max-degree", "10"}).code == 0);
    const auto r = run({"verify", "integrality", "--mutate", "todd:4:c1*c3", "--json"});
    CHECK(r.code == 1);
    bool located = false;
    for (const auto& j : json_lines(r.out))
        if (j["verdict"] == "fail" && j["discrepancy"].get<std::string>().find("c1^1 c3^1") != std::string::npos)
            located = true;
    CHECK(located);
}

TEST_CASE("surface-det exits 1") {
    CHECK(run({"verify", "surface-det", "-n", "1"}).code == 0);
    CHECK(run({"verify", "surface-det", "-n", "2"}).code == 1);
}

TEST_CASE("report streams are deterministic across thread counts") {
    const auto a = run({"verify", "main-theorem", "--json", "--jobs", "1"});
    const auto b = run({"verify", "main-theorem", "--json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("the installed binary honours the exit-code contract") {
    const std::string cli = IGRR_CLI;
    CHECK(std::system((cli + " gen tm --m 4 > /dev/null").c_str()) == 0);
    CHECK(WEXITSTATUS(std::system((cli + " verify surface-det -n 3 > /dev/null").c_str())) == 1);
    CHECK(WEXITSTATUS(std::system((cli + " verify bogus > /dev/null 2>&1").c_str())) == 2);
}
