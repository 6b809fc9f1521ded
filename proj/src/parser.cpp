#include "igrr/parser.hpp"

#include <cctype>
#include <set>

namespace igrr {

namespace {

std::string located(SourcePosition at, const std::string& message) {
    return "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + message;
}

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    SourcePosition at;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    SourcePosition at;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++i) {
            const auto c = static_cast<unsigned char>(text[i]);
            if (c == '\n') {
                ++at.line;
                at.column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++at.column;
            }
        }
    };
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token t;
        t.at = at;
        std::size_t j = i;
        if (ident_start(c)) {
            while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::ident;
        } else if (std::isdigit(c)) {
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::integer;
        } else if (std::string("()[],+-*").find(static_cast<char>(c)) != std::string::npos) {
            j = i + 1;
            t.kind = Tok::punct;
        } else {
            throw ParseError(ParseError::Kind::syntax, at, std::string("unexpected character '") + text[i] + "'");
        }
        t.text = text.substr(i, j - i);
        out.push_back(std::move(t));
        advance(j - i);
    }
    Token end;
    end.at = at;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    GeometrySpecAST geometry() {
        GeometrySpecAST g;
        g.levels = geom();
        expect_end();
        return g;
    }

    ClassExprAST class_expr() {
        auto e = expr();
        expect_end();
        return *e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at_punct(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
    bool at_ident(const char* w) const { return peek().kind == Tok::ident && peek().text == w; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(ParseError::Kind::syntax, t.at, "expected " + expected + ", found " + found);
    }

    Token take() { return tokens_[pos_++]; }
    void expect_punct(const char* p) {
        if (!at_punct(p)) fail(std::string("'") + p + "'");
        ++pos_;
    }
    void expect_word(const char* w) {
        if (!at_ident(w)) fail(std::string("'") + w + "'");
        ++pos_;
    }
    void expect_end() const {
        if (peek().kind != Tok::end) fail("end of input");
    }
    long integer() {
        if (peek().kind != Tok::integer) fail("an integer");
        const Token t = take();
        try {
            return std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(ParseError::Kind::syntax, t.at, "integer out of range");
        }
    }
    std::string name() {
        if (peek().kind != Tok::ident) fail("a name");
        return take().text;
    }

    std::vector<LevelAST> geom() {
        if (at_ident("point")) {
            ++pos_;
            return {};
        }
        if (at_punct("(")) {
            ++pos_;
            auto inner = geom();
            expect_punct(")");
            return inner;
        }
        if (!at_ident("P")) fail("'point' or 'P('");
        LevelAST level;
        level.at = take().at;
        expect_punct("(");
        if (at_ident("trivial")) {
            ++pos_;
            const SourcePosition at = peek().at;
            level.trivial_rank = integer();
            if (*level.trivial_rank < 1)
                throw ParseError(ParseError::Kind::syntax, at, "a trivial bundle needs rank at least 1");
        } else if (at_punct("[")) {
            ++pos_;
            level.summands.push_back(divisor());
            while (at_punct(",")) {
                ++pos_;
                level.summands.push_back(divisor());
            }
            expect_punct("]");
        } else {
            fail("'trivial' or '['");
        }
        expect_punct(")");
        if (at_ident("as")) {
            ++pos_;
            level.alias = name();
        }
        expect_word("over");
        auto levels = geom();
        levels.push_back(std::move(level));
        return levels;
    }

    DivisorAST divisor() {
        DivisorAST d;
        d.at = peek().at;
        bool first = true;
        bool constant_seen = false;
        while (true) {
            long sign = 1;
            if (at_punct("+") || at_punct("-")) {
                sign = take().text == "-" ? -1 : 1;
            } else if (!first) {
                break;
            }
            const SourcePosition at = peek().at;
            if (peek().kind == Tok::integer) {
                const long c = integer();
                if (at_punct("*")) {
                    ++pos_;
                    d.terms.push_back({sign * c, name(), at});
                } else {
                    if (!first || at_punct("+") || at_punct("-")) fail("'*' after a coefficient");
                    d.constant = sign * c;
                    constant_seen = true;
                }
            } else if (peek().kind == Tok::ident) {
                d.terms.push_back({sign, name(), at});
            } else {
                fail("a divisor term");
            }
            if (constant_seen) break;
            first = false;
        }
        return d;
    }

    std::shared_ptr<const ClassExprAST> expr() {
        auto left = summand();
        while (at_punct("+") || at_punct("-")) {
            ClassExprAST node;
            node.at = peek().at;
            node.op = take().text == "+" ? ClassExprAST::Op::sum : ClassExprAST::Op::difference;
            node.children = {left, summand()};
            left = std::make_shared<const ClassExprAST>(std::move(node));
        }
        return left;
    }

    std::shared_ptr<const ClassExprAST> summand() {
        ClassExprAST node;
        node.at = peek().at;
        if (at_punct("(")) {
            ++pos_;
            auto inner = expr();
            expect_punct(")");
            return inner;
        }
        if (at_ident("O")) {
            ++pos_;
            node.op = ClassExprAST::Op::line;
            if (at_punct("(")) {
                ++pos_;
                node.divisor = divisor();
                expect_punct(")");
            }
        } else if (at_ident("dual")) {
            ++pos_;
            node.op = ClassExprAST::Op::dual;
            expect_punct("(");
            node.children = {expr()};
            expect_punct(")");
        } else if (at_ident("wedge") || at_ident("sym")) {
            node.op = take().text == "wedge" ? ClassExprAST::Op::wedge : ClassExprAST::Op::sym;
            expect_punct("(");
            const SourcePosition at = peek().at;
            node.index = integer();
            if (node.index < 0) throw ParseError(ParseError::Kind::syntax, at, "negative degree");
            expect_punct(",");
            node.children = {expr()};
            expect_punct(")");
        } else if (at_ident("twist")) {
            ++pos_;
            node.op = ClassExprAST::Op::twist;
            expect_punct("(");
            node.divisor = divisor();
            expect_punct(",");
            node.children = {expr()};
            expect_punct(")");
        } else {
            fail("a class ('O', 'O(...)', 'dual', 'wedge', 'sym', 'twist' or '(')");
        }
        return std::make_shared<const ClassExprAST>(std::move(node));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Level index named by `name`, given the level names bottom-up.
std::optional<std::size_t> lookup(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return k;
    for (const std::string prefix : {"ξ", "xi"}) {
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
            const std::string digits = name.substr(prefix.size());
            if (digits.find_first_not_of("0123456789") != std::string::npos || digits[0] == '0') continue;
            const std::size_t k = std::stoul(digits);
            if (k >= 1 && k <= names.size()) return k - 1;
        }
    }
    if (name == "h" && !names.empty() && names[0] == "ξ1") return 0;
    return std::nullopt;
}

DivisorClass resolve(const DivisorAST& ast, const std::vector<std::string>& names, std::size_t visible) {
    if (ast.terms.empty()) {
        if (ast.constant != 0)
            throw ParseError(ParseError::Kind::scope, ast.at,
                             "a divisor without names must be 0, found " + std::to_string(ast.constant));
        return DivisorClass{};
    }
    std::vector<long> c(visible, 0);
    for (const auto& t : ast.terms) {
        const auto k = lookup(names, t.name);
        if (!k) throw ParseError(ParseError::Kind::scope, t.at, "unknown hyperplane '" + t.name + "'");
        if (*k >= visible)
            throw ParseError(ParseError::Kind::scope, t.at,
                             "'" + t.name + "' names level " + std::to_string(*k + 1) + ", which is not below");
        c[*k] += t.coefficient;
    }
    return DivisorClass(std::move(c));
}

std::vector<std::string> tower_names(const Tower& t) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < t.level_count(); ++k) names.push_back(t.name_of(k));
    return names;
}

}  // namespace

ParseError::ParseError(Kind k, SourcePosition position, const std::string& msg)
    : std::runtime_error(located(position, msg)), kind(k), at(position), message(msg) {}

bool operator==(const ClassExprAST& a, const ClassExprAST& b) {
    if (a.op != b.op || a.index != b.index || a.divisor != b.divisor || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(*a.children[i] == *b.children[i])) return false;
    return true;
}

GeometrySpecAST parse_geometry(const std::string& text) { return Parser(text).geometry(); }
ClassExprAST parse_class(const std::string& text) { return Parser(text).class_expr(); }

std::string to_string(const DivisorAST& ast) {
    if (ast.terms.empty()) return std::to_string(ast.constant);
    std::string out;
    for (const auto& t : ast.terms) {
        if (!out.empty()) out += t.coefficient < 0 ? " - " : " + ";
        else if (t.coefficient < 0) out += "-";
        const long a = t.coefficient < 0 ? -t.coefficient : t.coefficient;
        if (a != 1) out += std::to_string(a) + "*";
        out += t.name;
    }
    return out;
}

std::string to_string(const GeometrySpecAST& ast) {
    std::string out = "point";
    for (std::size_t k = 0; k < ast.levels.size(); ++k) {
        const auto& level = ast.levels[k];
        std::string bundle;
        if (level.trivial_rank) {
            bundle = "trivial " + std::to_string(*level.trivial_rank);
        } else {
            bundle = "[";
            for (std::size_t i = 0; i < level.summands.size(); ++i)
                bundle += (i ? ", " : "") + to_string(level.summands[i]);
            bundle += "]";
        }
        out = "P(" + bundle + ")" + (level.alias ? " as " + *level.alias : "") + " over " +
              (k == 0 ? out : "(" + out + ")");
    }
    return out;
}

std::string to_string(const ClassExprAST& ast) {
    using Op = ClassExprAST::Op;
    auto child = [&](std::size_t i) { return to_string(*ast.children.at(i)); };
    switch (ast.op) {
    case Op::line:
        return ast.divisor ? "O(" + to_string(*ast.divisor) + ")" : "O";
    case Op::sum:
    case Op::difference: {
        const auto& right = *ast.children.at(1);
        const bool wrap = right.op == Op::sum || right.op == Op::difference;
        return child(0) + (ast.op == Op::sum ? " + " : " - ") + (wrap ? "(" + child(1) + ")" : child(1));
    }
    case Op::dual:
        return "dual(" + child(0) + ")";
    case Op::wedge:
        return "wedge(" + std::to_string(ast.index) + ", " + child(0) + ")";
    case Op::sym:
        return "sym(" + std::to_string(ast.index) + ", " + child(0) + ")";
    case Op::twist:
        return "twist(" + to_string(*ast.divisor) + ", " + child(0) + ")";
    }
    return {};
}

TowerPtr build_tower(const GeometrySpecAST& ast) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < ast.levels.size(); ++k) {
        const auto& level = ast.levels[k];
        const std::string n = level.alias ? *level.alias : "ξ" + std::to_string(k + 1);
        if (!seen.insert(n).second)
            throw ParseError(ParseError::Kind::scope, level.at, "hyperplane name '" + n + "' is used twice");
        names.push_back(n);
    }
    std::vector<TowerLevel> levels;
    for (std::size_t k = 0; k < ast.levels.size(); ++k) {
        const auto& level = ast.levels[k];
        TowerLevel out{{}, names[k]};
        if (level.trivial_rank) {
            out.summands.assign(static_cast<std::size_t>(*level.trivial_rank), DivisorClass{});
        } else {
            for (const auto& d : level.summands) out.summands.push_back(resolve(d, names, k));
        }
        levels.push_back(std::move(out));
    }
    return Tower::build(std::move(levels));
}

DivisorClass resolve_divisor(const DivisorAST& ast, const Tower& tower, std::size_t visible_levels) {
    return resolve(ast, tower_names(tower), visible_levels);
}

KClass evaluate_class(const ClassExprAST& ast, const TowerPtr& tower) {
    using Op = ClassExprAST::Op;
    const std::size_t all = tower->level_count();
    auto child = [&](std::size_t i) { return evaluate_class(*ast.children.at(i), tower); };
    switch (ast.op) {
    case Op::line:
        return KClass::line(tower, ast.divisor ? resolve_divisor(*ast.divisor, *tower, all) : DivisorClass{});
    case Op::sum:
        return child(0) + child(1);
    case Op::difference:
        return child(0) - child(1);
    case Op::dual:
        return child(0).dual();
    case Op::wedge:
    case Op::sym: {
        const KClass inner = child(0);
        if (!inner.is_effective())
            throw ParseError(ParseError::Kind::type, ast.at,
                             std::string(ast.op == Op::wedge ? "wedge" : "sym") + " of the virtual class " +
                                 inner.to_string());
        return ast.op == Op::wedge ? inner.wedge(static_cast<int>(ast.index)) : inner.sym(static_cast<int>(ast.index));
    }
    case Op::twist:
        return child(0).twist(resolve_divisor(*ast.divisor, *tower, all));
    }
    return KClass(tower);
}

TowerPtr parse_tower(const std::string& text) { return build_tower(parse_geometry(text)); }

KClass parse_sheaf(const std::string& text, const TowerPtr& tower) { return evaluate_class(parse_class(text), tower); }

}  // namespace igrr
