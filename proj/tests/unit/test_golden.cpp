#include "igrr/cli.hpp"
#include "igrr/universal.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace igrr;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(IGRR_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string with_newline(const std::string& s) { return s.empty() || s.back() == '\n' ? s : s + "\n"; }

// Monomials of a canonical polynomial file, as "c1^2*c2".
std::vector<std::string> monomials(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::istringstream words(line);
        std::string coeff, w, mono;
        words >> coeff;
        while (words >> w) mono += (mono.empty() ? "" : "*") + w;
        if (!mono.empty()) out.push_back(mono);
    }
    return out;
}

}  // namespace

TEST_CASE("golden polynomials are reproduced byte for byte") {
    const auto& t = ClassTable::shared();
    for (int m = 0; m <= 6; ++m) CHECK(with_newline(t.todd(m).to_canonical()) == slurp("todd_" + std::to_string(m) + ".txt"));
    for (int m = 0; m <= 4; ++m)
        CHECK(with_newline(t.chern_character(m).to_canonical()) == slurp("ch_" + std::to_string(m) + ".txt"));
    for (int m = 0; m <= 3; ++m) CHECK(with_newline(t.ct(m).to_canonical()) == slurp("ct_" + std::to_string(m) + ".txt"));
}

TEST_CASE("corrupting any golden coefficient makes the integrality suite exit 1") {
    for (const auto& [kind, top] : std::vector<std::pair<std::string, int>>{{"todd", 5}, {"ch", 4}}) {
        for (int m = 1; m <= top; ++m) {
            const std::string file = kind + "_" + std::to_string(m) + ".txt";
            for (const auto& mono : monomials(slurp(file))) {
                std::ostringstream out, err;
                const int code = run_cli({"verify", "integrality", "--max-degree", std::to_string(m), "--mutate",
                                          kind + ":" + std::to_string(m) + ":" + mono + ":-1"},
                                         out, err);
                CHECK_MESSAGE(code == 1, file << " " << mono << " " << err.str());
            }
        }
    }
}
