#pragma once

// Text front end for towers and K classes:
//   geom      := "point" | "P(" bundle ")" ("as" NAME)? "over" geom | "(" geom ")"
//   bundle    := "trivial" INT | "[" divisor ("," divisor)* "]"
//   divisor   := INT | term (("+"|"-") term)*      term := (INT "*")? NAME
//   classexpr := summand (("+"|"-") summand)*
//   summand   := "O" ("(" divisor ")")? | "dual(" classexpr ")" | "wedge(" INT "," classexpr ")"
//              | "sym(" INT "," classexpr ")" | "twist(" divisor "," classexpr ")" | "(" classexpr ")"
// Whitespace is insignificant. Unnamed levels are called ξ1, ξ2, ... from the
// bottom; a reference may also spell ξk as xik, and h means level 1 when
// level 1 has no alias.

#include "igrr/kclass.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace igrr {

struct SourcePosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, scope, type };
    ParseError(Kind kind, SourcePosition at, const std::string& message);
    Kind kind;
    SourcePosition at;
    std::string message;
};

struct DivisorTerm {
    long coefficient = 1;
    std::string name;
    SourcePosition at;
    friend bool operator==(const DivisorTerm& a, const DivisorTerm& b) {
        return a.coefficient == b.coefficient && a.name == b.name;
    }
};

struct DivisorAST {
    long constant = 0;  // only meaningful when terms is empty
    std::vector<DivisorTerm> terms;
    SourcePosition at;
    friend bool operator==(const DivisorAST& a, const DivisorAST& b) {
        return a.constant == b.constant && a.terms == b.terms;
    }
};

struct LevelAST {
    std::optional<long> trivial_rank;  // "trivial n"
    std::vector<DivisorAST> summands;  // "[...]"
    std::optional<std::string> alias;
    SourcePosition at;
    friend bool operator==(const LevelAST& a, const LevelAST& b) {
        return a.trivial_rank == b.trivial_rank && a.summands == b.summands && a.alias == b.alias;
    }
};

/// Levels bottom-up: levels[0] sits directly over the point.
struct GeometrySpecAST {
    std::vector<LevelAST> levels;
    friend bool operator==(const GeometrySpecAST&, const GeometrySpecAST&) = default;
};

struct ClassExprAST {
    enum class Op { line, sum, difference, dual, wedge, sym, twist };
    Op op = Op::line;
    long index = 0;                 // wedge/sym degree
    std::optional<DivisorAST> divisor;  // line (absent for plain O) and twist
    std::vector<std::shared_ptr<const ClassExprAST>> children;
    SourcePosition at;
    friend bool operator==(const ClassExprAST& a, const ClassExprAST& b);
};

GeometrySpecAST parse_geometry(const std::string& text);
ClassExprAST parse_class(const std::string& text);

/// Canonical text; parse_geometry(to_string(ast)) == ast.
std::string to_string(const GeometrySpecAST& ast);
std::string to_string(const DivisorAST& ast);
std::string to_string(const ClassExprAST& ast);

/// Resolves names and builds the tower; ParseError(scope) on unknown names or
/// references to levels that are not below.
TowerPtr build_tower(const GeometrySpecAST& ast);
DivisorClass resolve_divisor(const DivisorAST& ast, const Tower& tower, std::size_t visible_levels);
/// ParseError(scope) for unknown names, ParseError(type) for wedge/sym of a
/// virtual class.
KClass evaluate_class(const ClassExprAST& ast, const TowerPtr& tower);

TowerPtr parse_tower(const std::string& text);
KClass parse_sheaf(const std::string& text, const TowerPtr& tower);

}  // namespace igrr
