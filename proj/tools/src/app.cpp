#include "regpart/cli/app.hpp"

#include "regpart/cli/json_io.hpp"
#include "regpart/cli/verify.hpp"
#include "regpart/kostka.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace regpart::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string moduli = "2,3";
    std::optional<int> n;
    std::optional<int> max_n;
    std::optional<int> j;
    std::optional<int> r;
    int index = 1;
    int degree = 64;
    std::string lambda;
    std::string mu;
    bool reduced = false;
    std::string format = "json";
    std::string out;
    int limit_n = 30;
    int limit_table_n = 8;
    int limit_degree = 400;
};

/// What a command produced: a JSON payload plus its text and CSV renderings.
struct Output {
    json params = json::object();
    json data;
    std::string text;
    std::optional<std::string> csv;
    int code = exit_ok;
};

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + ": " + text);
        }
    }
    return out;
}

ModulusTuple parse_moduli(const std::string& text)
{
    try {
        return ModulusTuple(parse_int_list(text, "moduli"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Partition parse_partition(const std::string& text, const char* what)
{
    try {
        return Partition::from_unsorted(parse_int_list(text, what));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int require(const std::optional<int>& value, const char* flag)
{
    if (!value) {
        throw UsageError(std::string("missing required flag ") + flag);
    }
    return *value;
}

void guard(int n, int limit, const char* what)
{
    if (n < 0) {
        throw UsageError(std::string(what) + " must be nonnegative");
    }
    if (n > limit) {
        throw UsageError(std::string(what) + " = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
    }
}

int modulus_r(const Config& c)
{
    const int r = c.r.value_or(2);
    if (r < 2) {
        throw UsageError("--r must be at least 2");
    }
    return r;
}

std::string join_partitions(const std::vector<Partition>& ps)
{
    std::string out;
    for (const auto& p : ps) {
        out += p.to_compact_string() + "\n";
    }
    return out;
}

std::string poly_text(const QPoly& p) { return p.to_string("t"); }

template <typename Coeff>
std::string symfunc_text(const SymFunc<Coeff>& f)
{
    if (f.is_zero()) {
        return "0\n";
    }
    std::string out;
    for (const auto& [rho, c] : f.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        if constexpr (std::is_same_v<Coeff, Rational>) {
            out += "(" + c.get_str() + ")";
        } else {
            out += "(" + c.to_string() + ")";
        }
        out += "*p" + rho.to_string();
    }
    return out + "\n";
}

Output cmd_enumerate(const std::string& kind, const Config& c)
{
    const auto moduli = parse_moduli(c.moduli);
    const int n = require(c.n, "--n");
    guard(n, c.limit_n, "n");
    const auto list = kind == "cp" ? enumerate_class_regular(moduli, n) : enumerate_regular(moduli, n);
    Output o;
    o.params = {{"moduli", moduli}, {"n", n}};
    o.data = list;
    o.text = join_partitions(list);
    return o;
}

Output stat_table_output(const StatisticTable& full, const std::optional<int>& j, json params)
{
    StatisticTable table = full;
    if (j) {
        auto it = full.values.find(*j);
        if (it == full.values.end()) {
            throw UsageError("--j out of range");
        }
        table.values = {{*j, it->second}};
        params["j"] = *j;
    }
    Output o;
    o.params = std::move(params);
    o.data = table;
    std::string csv = "statistic,moduli,n,j,value\n";
    for (const auto& [k, v] : table.values) {
        if (j) {
            o.text = v.get_str() + "\n";
        } else {
            o.text += std::to_string(k) + " " + v.get_str() + "\n";
        }
        csv += to_string(table.statistic) + ",\"" + table.moduli.to_string() + "\"," + std::to_string(table.n) + "," +
               std::to_string(k) + "," + v.get_str() + "\n";
    }
    o.csv = csv;
    return o;
}

Output cmd_stats(const std::string& kind, const Config& c)
{
    const int n = require(c.n, "--n");
    guard(n, c.limit_n, "n");
    if (kind == "X" || kind == "Y") {
        const int r = modulus_r(c);
        if (c.j && (*c.j < 1 || *c.j >= r)) {
            throw UsageError("--j must lie in 1..r-1");
        }
        const auto table = kind == "X" ? table_X(r, n) : table_Y(r, n);
        return stat_table_output(table, c.j, {{"r", r}, {"n", n}});
    }
    const auto moduli = parse_moduli(c.moduli);
    if (kind == "V" || kind == "W") {
        if (c.j && (*c.j < 1 || *c.j > std::max(n, 1))) {
            throw UsageError("--j must lie in 1..n");
        }
        auto table = kind == "V" ? table_V(moduli, n) : table_W(moduli, n);
        if (c.j && table.values.find(*c.j) == table.values.end()) {
            table.values[*c.j] = kind == "V" ? stat_V(moduli, *c.j, n) : stat_W(moduli, *c.j, n);
        }
        return stat_table_output(table, c.j, {{"moduli", moduli}, {"n", n}});
    }
    Output o;
    o.params = {{"moduli", moduli}, {"n", n}};
    Integer value;
    if (kind == "a") {
        value = stat_a(moduli, n);
    } else if (kind == "b") {
        value = stat_b(moduli, n);
    } else {
        if (c.index < 1 || static_cast<std::size_t>(c.index) > moduli.size()) {
            throw UsageError("--index must lie in 1..m");
        }
        value = stat_c(moduli, c.index, n);
        o.params["index"] = c.index;
    }
    o.data = {{"statistic", kind}, {"value", value}};
    o.text = value.get_str() + "\n";
    return o;
}

Output cmd_series(const std::string& kind, const Config& c)
{
    const auto moduli = parse_moduli(c.moduli);
    guard(c.degree, c.limit_degree, "degree");
    const int N = c.degree;
    Output o;
    o.params = {{"moduli", moduli}, {"degree", N}};
    std::optional<TruncatedSeries> s;
    if (kind == "phi") {
        s = phi(moduli, N);
    } else if (kind == "rp") {
        s = series_RP(moduli, N);
    } else if (kind == "c") {
        if (c.index < 1 || static_cast<std::size_t>(c.index) > moduli.size()) {
            throw UsageError("--index must lie in 1..m");
        }
        s = series_c(moduli, c.index, N);
        o.params["index"] = c.index;
    } else {
        const int j = require(c.j, "--j");
        if (j < 1) {
            throw UsageError("--j must be positive");
        }
        if (kind == "v" && !moduli.coprime_to_all(j)) {
            throw UsageError("--j must not be divisible by any modulus");
        }
        s = kind == "v" ? series_V(moduli, j, N) : series_W(moduli, j, N);
        o.params["j"] = j;
    }
    o.data = *s;
    for (int k = 0; k <= N; ++k) {
        o.text += std::to_string(k) + " " + (*s)[k].get_str() + "\n";
    }
    return o;
}

Output cmd_glaisher(const std::string& kind, const Config& c)
{
    const auto moduli = parse_moduli(c.moduli);
    const auto lambda = parse_partition(c.lambda, "--lambda");
    guard(lambda.weight(), c.limit_n, "weight");
    Output o;
    o.params = {{"moduli", moduli}, {"lambda", lambda}};
    if (kind == "gstats") {
        if (!is_class_regular(lambda, moduli)) {
            throw UsageError("gstats needs a class-regular partition");
        }
        const auto g = g_statistics(lambda, moduli.first());
        json by_j = json::object();
        for (const auto& [k, v] : g.by_j) {
            by_j[std::to_string(k)] = v;
            o.text += "G_" + std::to_string(k) + " " + std::to_string(v) + "\n";
        }
        o.data = {{"by_j", by_j}, {"total", g.total}};
        o.text += "G " + std::to_string(g.total) + "\n";
        return o;
    }
    GlaisherTrace trace;
    try {
        trace = kind == "forward" ? glaisher_forward(lambda, moduli) : glaisher_inverse(lambda, moduli);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    o.data = trace;
    o.text = trace.input.to_compact_string() + " -> " + trace.output.to_compact_string() + " (" +
             std::to_string(trace.steps) + (trace.steps == 1 ? " step)\n" : " steps)\n");
    return o;
}

Output cmd_kostka(const Config& c)
{
    Output o;
    if (!c.lambda.empty() || !c.mu.empty()) {
        const auto lambda = parse_partition(c.lambda, "--lambda");
        const auto mu = parse_partition(c.mu, "--mu");
        guard(lambda.weight(), c.limit_table_n, "weight");
        if (lambda.weight() != mu.weight()) {
            throw UsageError("--lambda and --mu must have the same weight");
        }
        const auto k = kostka_foulkes(lambda, mu);
        o.params = {{"lambda", lambda}, {"mu", mu}};
        o.data = k;
        o.text = poly_text(k) + "\n";
        return o;
    }
    const int n = require(c.n, "--n");
    guard(n, c.limit_table_n, "n");
    const auto all = enumerate_partitions(n);
    const auto& k = kostka_foulkes_matrix(n);
    json rows = json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < all.size(); ++j) {
            row.push_back(k(i, j));
            o.text += all[i].to_compact_string() + " | " + all[j].to_compact_string() + " : " + poly_text(k(i, j)) + "\n";
        }
        rows.push_back(row);
    }
    o.params = {{"n", n}};
    o.data = {{"partitions", all}, {"entries", rows}};
    return o;
}

Output cmd_hl(const std::string& kind, const Config& c)
{
    const auto lambda = parse_partition(c.lambda, "--lambda");
    guard(lambda.weight(), c.limit_table_n, "weight");
    const auto f = kind == "p" ? hl_P(lambda) : kind == "q" ? hl_Q(lambda) : hl_Qprime(lambda);
    Output o;
    o.params = {{"lambda", lambda}};
    if (!c.r) {
        if (c.reduced) {
            throw UsageError("--reduced needs --r");
        }
        o.data = f;
        o.text = symfunc_text(f);
        return o;
    }
    const int r = modulus_r(c);
    auto g = specialize_t(f, r);
    if (c.reduced) {
        g = r_reduce(g, r);
    }
    o.params["r"] = r;
    o.params["reduced"] = c.reduced;
    o.data = g;
    o.text = symfunc_text(g);
    return o;
}

Output cmd_chartable(const std::string& kind, const Config& c)
{
    const int n = require(c.n, "--n");
    guard(n, c.limit_table_n, "n");
    Output o;
    CharacterTable table;
    if (kind == "full") {
        table = character_table(n);
        o.params = {{"n", n}};
    } else {
        const int r = modulus_r(c);
        table = regular_character_table(r, n);
        o.params = {{"r", r}, {"n", n}};
    }
    const Integer det = table_determinant(table);
    o.data = {{"table", table}, {"determinant", det}};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        o.text += table.rows[i].to_compact_string() + " :";
        for (std::size_t j = 0; j < table.cols.size(); ++j) {
            o.text += " " + table.entries(i, j).get_str();
        }
        o.text += "\n";
    }
    o.text += "det " + det.get_str() + "\n";
    return o;
}

int default_max_n(const std::string& suite)
{
    static const std::vector<std::string> symmetric = {"lem44", "prop45", "prop43", "prop48", "thm49", "detchain"};
    if (std::find(symmetric.begin(), symmetric.end(), suite) != symmetric.end()) {
        return 5;
    }
    return suite == "thm410" ? 8 : 20;
}

bool is_table_suite(const std::string& suite) { return default_max_n(suite) != 20; }

Output cmd_verify(const std::string& suite, const Config& c)
{
    VerifyParams p;
    p.moduli = parse_moduli(c.moduli);
    p.r = modulus_r(c);
    if (c.n) {
        p.min_n = p.max_n = *c.n;
    } else {
        p.max_n = c.max_n.value_or(default_max_n(suite));
    }
    guard(p.max_n, is_table_suite(suite) ? c.limit_table_n : c.limit_n, "n");
    const auto report = run_suite(suite, p);
    Output o;
    o.params = report.params;
    o.data = report;
    o.text = suite + ": " + (report.passed ? "PASS" : "FAIL") + " (" + std::to_string(report.checked) + " checks)\n";
    if (report.counterexample) {
        o.text += "first counterexample: " + *report.counterexample + "\n";
    }
    o.code = report.passed ? exit_ok : exit_verification_failed;
    return o;
}

void add_common(CLI::App* sub, Config& c)
{
    sub->add_option("--moduli", c.moduli, "comma-separated pairwise coprime moduli")->capture_default_str();
    sub->add_option("--n", c.n, "partition size");
    sub->add_option("--max-n", c.max_n, "largest n for verification ranges");
    sub->add_option("--j", c.j, "part or residue index");
    sub->add_option("--r", c.r, "single modulus / root-of-unity order");
    sub->add_option("--index", c.index, "1-based modulus index for c")->capture_default_str();
    sub->add_option("--degree", c.degree, "series truncation degree")->capture_default_str();
    sub->add_option("--lambda", c.lambda, "partition, comma separated");
    sub->add_option("--mu", c.mu, "second partition, comma separated");
    sub->add_flag("--reduced", c.reduced, "drop p_k with r | k");
    sub->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the report to this path");
    sub->add_option("--limit-n", c.limit_n, "largest n for enumerative commands")->capture_default_str();
    sub->add_option("--limit-table-n", c.limit_table_n, "largest n for table and symmetric-function commands")
        ->capture_default_str();
    sub->add_option("--limit-degree", c.limit_degree, "largest series degree")->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Regular and class-regular partitions, Hall-Littlewood functions at roots of unity", "regpart"};
    app.require_subcommand(1);
    Config c;
    std::string kind;
    std::string command;

    const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
        {"enumerate", {"cp", "rp"}},
        {"stats", {"V", "W", "X", "Y", "a", "b", "c"}},
        {"series", {"phi", "v", "w", "c", "rp"}},
        {"glaisher", {"forward", "inverse", "gstats"}},
        {"kostka", {}},
        {"hl", {"p", "q", "qprime"}},
        {"chartable", {"full", "regular"}},
        {"verify", suite_names()},
    };
    for (const auto& [name, kinds] : commands) {
        auto* sub = app.add_subcommand(name);
        if (!kinds.empty()) {
            sub->add_option("kind", kind)->required()->check(CLI::IsMember(kinds));
        }
        add_common(sub, c);
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Output o;
    try {
        if (command == "enumerate") {
            o = cmd_enumerate(kind, c);
        } else if (command == "stats") {
            o = cmd_stats(kind, c);
        } else if (command == "series") {
            o = cmd_series(kind, c);
        } else if (command == "glaisher") {
            o = cmd_glaisher(kind, c);
        } else if (command == "kostka") {
            o = cmd_kostka(c);
        } else if (command == "hl") {
            o = cmd_hl(kind, c);
        } else if (command == "chartable") {
            o = cmd_chartable(kind, c);
        } else {
            o = cmd_verify(kind, c);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    std::string payload;
    if (c.format == "json") {
        const std::string label = command == "kostka" ? command : command + " " + kind;
        payload = envelope(label, o.params, o.data).dump(2) + "\n";
    } else if (c.format == "text") {
        payload = o.text;
    } else if (o.csv) {
        payload = *o.csv;
    } else {
        err << "error: csv output is only available for stats V, W, X and Y\n";
        return exit_usage;
    }

    if (c.out.empty()) {
        out << payload;
    } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << c.out << "\n";
            return exit_usage;
        }
        file << payload;
    }
    return o.code;
}

} // namespace regpart::cli
