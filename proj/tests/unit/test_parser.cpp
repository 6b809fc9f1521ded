#include "igrr/parser.hpp"

#include <doctest.h>

#include <fstream>

using namespace igrr;

namespace {

std::vector<std::string> lines(const std::string& file) {
    std::ifstream in(std::string(IGRR_GOLDEN_DIR) + "/" + file);
    REQUIRE(in.good());
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);)
        if (!l.empty() && l[0] != '#') out.push_back(l);
    return out;
}

ParseError error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no ParseError");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("basic geometries") {
    CHECK(parse_tower("point")->level_count() == 0);
    const auto p2 = parse_tower("P(trivial 3) over point");
    CHECK(p2->dimension() == 2);
    CHECK(p2->name_of(0) == "ξ1");
    const auto f1 = parse_tower("P([0, h]) over (P(trivial 2) over point)");
    CHECK(f1->dimension() == 2);
    CHECK(f1->level(1).summands[1] == DivisorClass({1}));
    CHECK(f1->describe() == "P([0, ξ1]) as ξ2 over (P(trivial 2) as ξ1 over point)");
}

TEST_CASE("aliases and spellings of the default names") {
    const auto t = parse_tower("P([0, 2*a - xi1, ξ1]) as b over (P(trivial 3) as a over point)");
    CHECK(t->name_of(0) == "a");
    CHECK(t->name_of(1) == "b");
    CHECK(t->level(1).summands[1] == DivisorClass({1}));
    CHECK(t->level(1).summands[2] == DivisorClass({1}));
    CHECK_THROWS_AS(parse_tower("P([0, h]) over (P(trivial 2) as a over point)"), ParseError);
}

TEST_CASE("whitespace does not matter") {
    const auto a = parse_tower("P([0,h])over(P(trivial 2)over point)");
    const auto b = parse_tower("  P( [ 0 ,  h ] )\n over ( P ( trivial 2 ) over point ) ");
    CHECK(*a == *b);
}

TEST_CASE("describe parses back to the same tower") {
    for (const auto& g : lines("geometries.txt")) {
        const auto t = parse_tower(g);
        CHECK(*parse_tower(t->describe()) == *t);
    }
}

TEST_CASE("pretty-print round trip on the golden corpus") {
    for (const auto& g : lines("geometries.txt")) {
        const auto ast = parse_geometry(g);
        CHECK(parse_geometry(to_string(ast)) == ast);
        CHECK(to_string(parse_geometry(to_string(ast))) == to_string(ast));
    }
    for (const auto& c : lines("classes.txt")) {
        const auto ast = parse_class(c);
        CHECK(parse_class(to_string(ast)) == ast);
    }
}

TEST_CASE("class expressions") {
    const auto p2 = parse_tower("P(trivial 3) over point");
    CHECK(parse_sheaf("O(h)", p2) == KClass::line(p2, DivisorClass({1})));
    CHECK(parse_sheaf("O", p2) == KClass::trivial(p2, 1));
    CHECK(parse_sheaf("O - O(-h)", p2).to_string() == "-[O(-ξ1)] + [O]");
    CHECK(parse_sheaf("wedge(2, O + O(h))", p2) == KClass::line(p2, DivisorClass({1})));
    CHECK(parse_sheaf("sym(2, O + O(h))", p2).rank() == 3);
    CHECK(parse_sheaf("dual(O(2*h))", p2) == KClass::line(p2, DivisorClass({-2})));
    CHECK(parse_sheaf("twist(h, O(h) + O)", p2) == KClass::line(p2, DivisorClass({2})) + KClass::line(p2, DivisorClass({1})));
    CHECK(parse_sheaf("O - (O(h) - O(h))", p2) == KClass::trivial(p2, 1));
}

TEST_CASE("positioned syntax errors") {
    auto e = error_of([] { parse_geometry("P(trivial 3) over"); });
    CHECK(e.kind == ParseError::Kind::syntax);
    CHECK(e.at.line == 1);
    CHECK(e.at.column == 18);
    CHECK(std::string(e.what()).find("line 1, column 18") != std::string::npos);
    e = error_of([] { parse_geometry("P(trivial 3)\n  blah point"); });
    CHECK(e.at.line == 2);
    CHECK(e.at.column == 3);
    e = error_of([] { parse_class("O(h"); });
    CHECK(e.at.column == 4);
    e = error_of([] { parse_class("O + $"); });
    CHECK(e.at.column == 5);
    e = error_of([] { parse_geometry("P([0, 2 h]) over point"); });
    CHECK(e.kind == ParseError::Kind::syntax);
}

TEST_CASE("scope and type errors name the culprit") {
    auto e = error_of([] { parse_tower("P([0, k]) over (P(trivial 2) over point)"); });
    CHECK(e.kind == ParseError::Kind::scope);
    CHECK(e.message.find("'k'") != std::string::npos);
    CHECK(e.at.column == 7);
    e = error_of([] { parse_tower("P(trivial 2) over (P([0, ξ2]) over (P(trivial 2) over point))"); });
    CHECK(e.kind == ParseError::Kind::scope);
    e = error_of([] { parse_tower("P(trivial 2) as a over (P(trivial 2) as a over point)"); });
    CHECK(e.kind == ParseError::Kind::scope);
    e = error_of([] { parse_tower("P([0, 3]) over (P(trivial 2) over point)"); });
    CHECK(e.kind == ParseError::Kind::scope);
    const auto p2 = parse_tower("P(trivial 3) over point");
    e = error_of([&] { parse_sheaf("wedge(2, O - O(h))", p2); });
    CHECK(e.kind == ParseError::Kind::type);
    CHECK(e.at.column == 1);
    e = error_of([&] { parse_sheaf("O(q)", p2); });
    CHECK(e.kind == ParseError::Kind::scope);
}
