#include "igrr/cli.hpp"

#include "igrr/parser.hpp"
#include "igrr/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>

namespace igrr {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenArgs {
    std::string kind;
    std::optional<int> degree;
    std::optional<int> m;
    int rank = 1;
    bool json = false;
    int max_degree = 12;
};

struct VerifyArgs {
    std::string name;
    bool json = false;
    bool timing = false;
    int max_degree = 12;
    int max_dim = 6;
    std::optional<int> n;
    std::optional<std::string> geometry;
    std::optional<std::string> sheaf;
    std::optional<std::size_t> base_levels;
    unsigned jobs = 0;
    std::vector<std::string> mutations;
};

int index_of(const GenArgs& a) {
    if (a.degree && a.m && *a.degree != *a.m) throw UsageError("--degree and --m disagree");
    if (a.degree) return *a.degree;
    if (a.m) return *a.m;
    throw UsageError("gen " + a.kind + " needs --degree (or --m)");
}

void emit_class(std::ostream& out, const GenArgs& a, const std::string& name, const GradedPolynomial& p,
                const std::string& denominator, const std::string& meaning) {
    if (a.json) {
        nlohmann::ordered_json j;
        j["schema"] = "1";
        j["kind"] = a.kind;
        j["name"] = name;
        j["polynomial"] = p.to_canonical();
        j["text"] = p.to_string();
        j["denominator"] = denominator;
        out << j.dump() << "\n";
        return;
    }
    out << name << " = " << p.to_string() << "\n";
    if (!meaning.empty()) out << meaning << "\n";
}

void emit_number(std::ostream& out, const GenArgs& a, const std::string& name, const std::string& value,
                 const std::string& pretty) {
    if (a.json) {
        nlohmann::ordered_json j;
        j["schema"] = "1";
        j["kind"] = a.kind;
        j["name"] = name;
        j["value"] = value;
        j["text"] = pretty;
        out << j.dump() << "\n";
        return;
    }
    out << name << " = " << pretty << "\n";
}

int run_gen(const GenArgs& a, std::ostream& out) {
    const int m = index_of(a);
    if (m < 0) throw UsageError("degree must be non-negative");
    const ClassTable& table = ClassTable::shared();
    const auto guard = [&] {
        if (m > a.max_degree)
            throw UsageError("degree " + std::to_string(m) + " exceeds --max-degree " + std::to_string(a.max_degree));
    };
    const std::string ms = std::to_string(m);
    if (a.kind == "todd") {
        guard();
        const std::string t = todd_denominator(static_cast<unsigned>(m)).value().get_str();
        emit_class(out, a, "TdNum_" + ms, table.todd(m), t, "Td_" + ms + " = TdNum_" + ms + " / " + t + " (T_" + ms + ")");
    } else if (a.kind == "ch") {
        guard();
        const std::string f = factorial(static_cast<unsigned>(m)).get_str();
        emit_class(out, a, "s_" + ms, table.chern_character(m), f, "ch_" + ms + " = s_" + ms + " / " + f + " (" + ms + "!)");
    } else if (a.kind == "ct") {
        guard();
        emit_class(out, a, "CT_" + ms, table.ct(m), todd_denominator(static_cast<unsigned>(m)).value().get_str(),
                   "CT_" + ms + " = T_" + ms + " (ch Td)_" + ms);
    } else if (a.kind == "q") {
        guard();
        if (m < 1) throw UsageError("q needs degree at least 1");
        emit_class(out, a, "Q_" + ms, table.q(m), "1", "");
    } else if (a.kind == "toddinv") {
        guard();
        if (a.rank < 1 || a.rank > m) throw UsageError("toddinv needs 1 <= --rank <= degree");
        emit_class(out, a, "TdInv_" + std::to_string(m - a.rank) + "(r=" + std::to_string(a.rank) + ")",
                   table.todd_inverse(m, a.rank), "1",
                   ms + "! {prod_(i<=" + std::to_string(a.rank) + ") (1-e^-x_i)/x_i}_" + std::to_string(m - a.rank));
    } else if (a.kind == "tm") {
        const auto t = todd_denominator(static_cast<unsigned>(m));
        emit_number(out, a, "T_" + ms, t.value().get_str(), t.pretty());
    } else if (a.kind == "bernoulli") {
        const Rational b = bernoulli(static_cast<unsigned>(m));
        emit_number(out, a, "B_" + ms, to_string(b), to_string(b));
    } else if (a.kind == "D") {
        if (m < 2 || m % 2 != 0) throw UsageError("D needs an even degree 2g >= 2");
        const auto d = von_staudt_D(static_cast<unsigned>(m / 2));
        emit_number(out, a, "D_" + ms, d.value().get_str(), d.pretty());
    } else if (a.kind == "L") {
        if (m < 1) throw UsageError("L needs degree at least 1");
        const auto l = fulton_macpherson_L(static_cast<unsigned>(m));
        emit_number(out, a, "L_" + ms, l.value().get_str(), l.pretty());
    } else {
        throw UsageError("unknown kind '" + a.kind + "' (todd, ch, ct, q, toddinv, tm, bernoulli, D, L)");
    }
    return 0;
}

// KIND:DEGREE:TERM[:DELTA]
void apply_mutation(ClassTable& table, const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i)
        if (i == spec.size() || spec[i] == ':') {
            parts.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    if (parts.size() < 3 || parts.size() > 4) throw UsageError("--mutate expects KIND:DEGREE:TERM[:DELTA]");
    Rational delta = 1;
    try {
        if (parts.size() == 4) delta = Rational(parts[3]);
        delta.canonicalize();
        table.mutate(parse_kind(parts[0]), std::stoi(parts[1]), parts[2], delta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--mutate: ") + e.what());
    }
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.geometry && a.name != "main-theorem" && a.name != "all")
        throw UsageError("--geometry applies to main-theorem only");
    if ((a.sheaf || a.base_levels) && !a.geometry) throw UsageError("--sheaf and --base-levels need --geometry");
    ClassTable mutated;
    SuiteOptions o;
    o.max_degree = a.max_degree;
    o.max_dim = a.max_dim;
    o.n = a.n;
    o.geometry = a.geometry;
    o.sheaf = a.sheaf;
    o.base_levels = a.base_levels;
    o.threads = a.jobs;
    if (!a.mutations.empty()) {
        for (const auto& m : a.mutations) apply_mutation(mutated, m);
        o.table = &mutated;
    }
    const auto reports = run_suite(a.name, o);
    const bool ok = all_pass(reports);
    if (a.json) {
        out << reports_to_jsonl(reports, a.timing);
    } else {
        std::size_t failed = 0;
        for (const auto& r : reports) {
            out << r.to_text();
            if (a.timing && r.millis) out << "  (" << *r.millis << " ms)";
            out << "\n";
            if (reports.size() == 1) out << "lhs:\n" << r.lhs << "\nrhs:\n" << r.rhs << "\n";
            failed += r.pass ? 0 : 1;
        }
        out << reports.size() << " reports, " << failed << " failed\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral Riemann-Roch model checker", "igrr"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "print a universal class or constant");
    g->add_option("kind", gen.kind, "todd, ch, ct, q, toddinv, tm, bernoulli, D, L")->required();
    g->add_option("--degree,-d", gen.degree, "degree or index");
    g->add_option("--m", gen.m, "same as --degree");
    g->add_option("--rank,-r", gen.rank, "rank for toddinv");
    g->add_option("--max-degree", gen.max_degree, "degree guard (default 12)");
    g->add_flag("--json", gen.json, "JSON output");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "run a suite or a single identity");
    v->add_option("name", ver.name, "suite or identity name")->required();
    v->add_flag("--json", ver.json, "one JSON report per line");
    v->add_flag("--timing", ver.timing, "include per-report milliseconds");
    v->add_option("--max-degree", ver.max_degree, "degree guard (default 12)");
    v->add_option("--max-dim", ver.max_dim, "ambient dimension guard (default 6)");
    v->add_option("-n", ver.n, "degree n (m for surface-det)");
    v->add_option("--geometry", ver.geometry, "tower, e.g. \"P(trivial 3) over point\"");
    v->add_option("--base-levels", ver.base_levels, "levels kept in the target");
    v->add_option("--sheaf", ver.sheaf, "class on the geometry, e.g. \"O(h)\"");
    v->add_option("--jobs,-j", ver.jobs, "worker threads (0: all cores)");
    v->add_option("--mutate", ver.mutations, "KIND:DEGREE:TERM[:DELTA]")->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (g->parsed()) return run_gen(gen, out);
        return run_verify(ver, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace igrr
