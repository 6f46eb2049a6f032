#include "wsp/cli.hpp"

#include "wsp/constructor.hpp"
#include "wsp/format.hpp"
#include "wsp/search.hpp"
#include "wsp/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace wsp::cli {

namespace {

using nlohmann::json;

/// Input or usage problem that maps to exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Globals
{
    bool json = false;
    bool quiet = false;
    std::string threads = "1";
};

struct Io
{
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    const Globals& globals;

    void info(const std::string& message) const
    {
        if (!globals.quiet && !globals.json)
            err << message << '\n';
    }
};

unsigned thread_count(const std::string& spec)
{
    if (spec == "auto")
        return 0;
    try {
        std::size_t used = 0;
        const auto k = std::stoul(spec, &used);
        if (used == spec.size() && k >= 1 && k <= 1024)
            return static_cast<unsigned>(k);
    } catch (const std::exception&) {
    }
    throw UsageError("--threads expects a positive integer or 'auto', got '" + spec + "'");
}

std::string read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw UsageError("cannot write '" + path + "'");
}

Partition load(const std::string& path, std::istream& in)
{
    const auto text = read_input(path, in);
    try {
        return parse_partition(text);
    } catch (const ParseError& e) {
        // Re-thrown with the file name for the diagnostic.
        throw ParseError(e.kind(), e.line(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.detail());
    }
}

std::string big(const BigInt& v)
{
    return v.str();
}

/// "1 2 4..9 12"
std::string compact(const std::vector<Element>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1)
            ++j;
        if (!out.empty())
            out += ' ';
        out += std::to_string(values[i]);
        if (j >= i + 2) {
            out += "..";
            out += std::to_string(values[j]);
        } else if (j == i + 1) {
            out += ' ';
            out += std::to_string(values[j]);
        }
        i = j + 1;
    }
    return out;
}

json violation_json(const Violation& v)
{
    json j;
    j["kind"] = std::string(to_string(v.kind));
    j["subset_index"] = v.subset_index ? json(*v.subset_index) : json(nullptr);
    j["witness"] = std::vector<std::uint64_t>(v.values().begin(), v.values().end());
    return j;
}

json report_json(const ViolationReport& r)
{
    json j;
    j["violations"] = json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back(violation_json(v));
    j["checked_conditions"] = r.checked_conditions;
    j["skipped_conditions"] = r.skipped_conditions;
    return j;
}

std::string describe(const Violation& v)
{
    std::ostringstream s;
    if (v.subset_index)
        s << "subset " << *v.subset_index << ": ";
    s << to_string(v.kind);
    const auto w = v.values();
    switch (v.kind) {
    case ViolationKind::weak_sum:
    case ViolationKind::strong_sum:
    case ViolationKind::condition3_sumfree:
        s << ' ' << w[0] << " + " << w[1] << " = " << w[2];
        break;
    case ViolationKind::double_element:
        s << ' ' << w[0] << " and " << w[1];
        break;
    default:
        for (auto x : w)
            s << ' ' << x;
    }
    return s.str();
}

json trace_json(const ConstructionTrace& t)
{
    json j;
    j["input_order"] = t.input_order;
    j["output_order"] = t.output_order;
    j["injected"] = t.injected;
    j["reflected_per_subset"] = t.reflected_per_subset;
    j["new_subset"] = t.new_subset.to_vector();
    return j;
}

void print_trace(std::ostream& os, std::size_t step, const ConstructionTrace& t)
{
    os << "step " << step << ": order " << t.input_order << " -> " << t.output_order << '\n';
    os << "  injected into subset 1: " << t.injected[0] << ' ' << t.injected[1] << '\n';
    for (std::size_t i = 0; i < t.reflected_per_subset.size(); ++i)
        os << "  reflected into subset " << i + 1 << ": " << compact(t.reflected_per_subset[i]) << '\n';
    os << "  new subset " << t.reflected_per_subset.size() + 1 << ": " << compact(t.new_subset.to_vector()) << '\n';
}

int cmd_verify(const Io& io, const std::string& path, const std::string& conditions, bool first_only)
{
    ConditionSet which = ConditionSet::all();
    try {
        which = ConditionSet::parse(conditions);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--conditions: ") + e.what());
    }
    const auto p = load(path, io.in);
    const auto report = verify(p, which, {first_only, thread_count(io.globals.threads)});
    if (io.globals.json) {
        io.out << report_json(report).dump() << '\n';
    } else {
        for (const auto& v : report.violations)
            io.out << describe(v) << '\n';
        if (report.empty())
            io.out << "ok: s=" << p.s() << " n=" << p.n() << '\n';
        else
            io.out << report.violations.size() << " violation(s)\n";
    }
    return report.empty() ? ok : violations;
}

int cmd_generate(const Io& io, unsigned target, const std::string& seed_path, const std::string& out_path,
    bool trace)
{
    const Partition seed = seed_path.empty() ? base_partition_p3() : load(seed_path, io.in);
    if (target < seed.s())
        throw UsageError("--s " + std::to_string(target) + " is below the seed's subset count "
            + std::to_string(seed.s()));
    const std::size_t steps = target - seed.s();
    const VerifyOptions options{false, thread_count(io.globals.threads)};
    std::vector<Step> chain;
    try {
        chain = iterate(seed, steps, options);
    } catch (const PreconditionError& e) {
        if (io.globals.json)
            io.out << json{{"error", e.what()}, {"step", e.step()}, {"report", report_json(e.report())}}.dump() << '\n';
        else
            io.err << "error: " << e.what() << '\n';
        return violations;
    }
    if (steps == 0 && !seed_path.empty()) {
        // A zero-step chain still requires a valid seed.
        if (verify(seed, ConditionSet::all(), options).has_blocking()) {
            io.err << "error: seed fails conditions 1-3\n";
            return violations;
        }
    }
    const Partition& result = chain.empty() ? seed : chain.back().partition;
    const auto text = serialize_partition(result);
    if (!out_path.empty())
        write_file(out_path, text);

    if (io.globals.json) {
        json j;
        j["s"] = result.s();
        j["n"] = result.n();
        j["out"] = out_path.empty() ? json(nullptr) : json(out_path);
        if (out_path.empty())
            j["partition"] = text;
        if (trace) {
            j["steps"] = json::array();
            for (const auto& step : chain)
                j["steps"].push_back(trace_json(step.trace));
        }
        io.out << j.dump() << '\n';
        return ok;
    }
    std::ostream& trace_stream = out_path.empty() ? io.err : io.out;
    if (trace)
        for (std::size_t k = 0; k < chain.size(); ++k)
            print_trace(trace_stream, k + 1, chain[k].trace);
    if (out_path.empty())
        io.out << text;
    else
        io.info("wrote " + out_path + " (s=" + std::to_string(result.s()) + " n=" + std::to_string(result.n()) + ")");
    return ok;
}

int cmd_bound(const Io& io, unsigned s)
{
    if (s < 3)
        throw UsageError("--s must be at least 3");
    const auto value = bound(s);
    if (io.globals.json)
        io.out << json{{"s", s}, {"bound", big(value)}}.dump() << '\n';
    else
        io.out << big(value) << '\n';
    return ok;
}

int cmd_table(const Io& io, unsigned max_s, bool markdown)
{
    if (max_s < 3)
        throw UsageError("--max-s must be at least 3");
    const auto seq = bound_table(max_s);
    auto literature_text = [](unsigned s) {
        std::string text;
        for (const auto& v : literature_values(s)) {
            if (!text.empty())
                text += ", ";
            text += std::to_string(v.order) + " (" + v.kind + ")";
        }
        return text;
    };
    if (io.globals.json) {
        json rows = json::array();
        for (std::size_t k = 0; k < seq.orders.size(); ++k) {
            const unsigned s = seq.start_s + static_cast<unsigned>(k);
            json lit = json::array();
            for (const auto& v : literature_values(s))
                lit.push_back({{"order", v.order}, {"kind", v.kind}});
            rows.push_back({{"s", s}, {"this_construction", big(seq.orders[k])}, {"literature", lit}});
        }
        io.out << json{{"rows", rows}}.dump() << '\n';
        return ok;
    }
    if (markdown) {
        io.out << "| s | this construction | literature |\n|---|---|---|\n";
        for (std::size_t k = 0; k < seq.orders.size(); ++k) {
            const unsigned s = seq.start_s + static_cast<unsigned>(k);
            io.out << "| " << s << " | " << big(seq.orders[k]) << " | " << literature_text(s) << " |\n";
        }
        return ok;
    }
    std::size_t width = std::string("this construction").size();
    for (const auto& o : seq.orders)
        width = std::max(width, big(o).size());
    io.out << std::left << std::setw(4) << "s" << "  " << std::setw(static_cast<int>(width)) << "this construction"
           << "  literature\n";
    for (std::size_t k = 0; k < seq.orders.size(); ++k) {
        const unsigned s = seq.start_s + static_cast<unsigned>(k);
        std::string line;
        {
            std::ostringstream row;
            row << std::left << std::setw(4) << s << "  " << std::setw(static_cast<int>(width)) << big(seq.orders[k])
                << "  " << literature_text(s);
            line = row.str();
        }
        line.erase(line.find_last_not_of(' ') + 1);
        io.out << line << '\n';
    }
    return ok;
}

int cmd_search_ws(const Io& io, unsigned s, std::uint64_t cap, std::uint64_t node_budget, const std::string& out_path)
{
    if (s == 0)
        throw UsageError("--s must be positive");
    const auto r = compute_ws(s, cap, node_budget);
    if (!out_path.empty() && r.witness)
        write_file(out_path, serialize_partition(*r.witness));
    const bool budget_hit = r.mode == SearchMode::capped && r.best_n < cap;
    if (io.globals.json) {
        json j;
        j["s"] = r.s;
        j["mode"] = r.mode == SearchMode::exact ? "exact" : "capped";
        j["best_n"] = r.best_n;
        j["exhausted"] = r.exhausted;
        j["nodes_visited"] = r.nodes_visited;
        j["witness"] = r.witness ? json(serialize_partition(*r.witness)) : json(nullptr);
        j["source"] = "search";
        io.out << j.dump() << '\n';
    } else {
        io.out << "WS(" << s << (r.mode == SearchMode::exact ? ") = " : ") >= ")
               << r.best_n << " (" << (r.mode == SearchMode::exact ? "exact" : "capped")
               << ", source: search, nodes: " << r.nodes_visited << ")\n";
        if (r.witness && out_path.empty())
            io.out << serialize_partition(*r.witness);
    }
    return budget_hit ? budget : ok;
}

int cmd_search_seeds(const Io& io, unsigned s, std::uint64_t n, std::size_t limit, std::uint64_t node_budget,
    const std::string& prefix, bool conditions_only)
{
    if (s == 0 || n == 0)
        throw UsageError("--s and --n must be positive");
    const auto r = find_seeds(s, n, limit, node_budget,
        conditions_only ? SeedPredicate::conditions_only : SeedPredicate::iterable);
    std::vector<std::string> files;
    if (!prefix.empty())
        for (std::size_t k = 0; k < r.seeds.size(); ++k) {
            std::ostringstream name;
            name << prefix << '_' << std::setw(3) << std::setfill('0') << k + 1 << ".wsp";
            write_file(name.str(), serialize_partition(r.seeds[k]));
            files.push_back(name.str());
        }
    if (io.globals.json) {
        json j;
        j["s"] = s;
        j["n"] = n;
        j["count"] = r.seeds.size();
        j["complete"] = r.complete;
        j["budget_exhausted"] = r.budget_exhausted;
        j["nodes_visited"] = r.nodes_visited;
        j["files"] = files;
        io.out << j.dump() << '\n';
    } else {
        io.out << r.seeds.size() << " seed(s) for s=" << s << " n=" << n << (r.complete ? " (search complete" : " (search cut short")
               << ", nodes: " << r.nodes_visited << ")\n";
        if (prefix.empty())
            for (const auto& seed : r.seeds)
                io.out << serialize_partition(seed);
    }
    if (!r.seeds.empty())
        return ok;
    return r.budget_exhausted ? budget : violations;
}

void report_error(const Io& io, std::string_view kind, const std::string& message, std::optional<std::size_t> line = {})
{
    if (io.globals.json) {
        json j{{"error", {{"kind", kind}, {"message", message}}}};
        if (line)
            j["error"]["line"] = *line;
        io.err << j.dump() << '\n';
    } else {
        io.err << "error: " << message << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak Schur partitions: construct, verify, bound and search", "wsp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("wsp ") + version + " (wsp format " + std::to_string(format_version) + ")");

    Globals globals;
    app.add_flag("--json", globals.json, "Machine-readable output");
    app.add_flag("--quiet", globals.quiet, "Suppress informational messages");
    app.add_option("--threads", globals.threads, "Worker threads: a count or 'auto'")->capture_default_str();

    std::string verify_file, conditions = "all";
    bool first_only = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check a .wsp partition");
    verify_cmd->add_option("file", verify_file, "Partition file ('-' for stdin)")->required();
    verify_cmd->add_option("--conditions", conditions, "1,2,3 or all")->capture_default_str();
    verify_cmd->add_flag("--first-only", first_only, "Stop each check at its first violation");

    unsigned gen_s = 0;
    std::string seed_file, out_file;
    bool trace = false;
    auto* gen_cmd = app.add_subcommand("generate", "Iterate the construction up to s subsets");
    gen_cmd->add_option("--s", gen_s, "Target subset count")->required();
    gen_cmd->add_option("--seed", seed_file, "Seed partition (default: built-in order-21 partition)");
    gen_cmd->add_option("--out", out_file, "Output .wsp file (default: stdout)");
    gen_cmd->add_flag("--trace", trace, "Show where each new element came from");

    unsigned bound_s = 0;
    auto* bound_cmd = app.add_subcommand("bound", "Order of the constructed partition into s subsets");
    bound_cmd->add_option("--s", bound_s, "Subset count (>= 3)")->required();

    unsigned max_s = 0;
    bool markdown = false;
    auto* table_cmd = app.add_subcommand("table", "Orders for s = 3..max-s with literature values");
    table_cmd->add_option("--max-s", max_s, "Largest subset count")->required();
    table_cmd->add_flag("--markdown", markdown, "Markdown table");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive backtracking search");
    search_cmd->require_subcommand(1);
    unsigned ws_s = 0;
    std::uint64_t ws_cap = 1000, ws_budget = default_node_budget;
    std::string ws_out;
    auto* ws_cmd = search_cmd->add_subcommand("ws", "Compute a weak Schur number");
    ws_cmd->add_option("--s", ws_s, "Subset count")->required();
    ws_cmd->add_option("--cap", ws_cap, "Largest order to try")->capture_default_str();
    ws_cmd->add_option("--budget", ws_budget, "Node budget")->capture_default_str();
    ws_cmd->add_option("--out", ws_out, "Write the witness to this .wsp file");

    unsigned seeds_s = 0;
    std::uint64_t seeds_n = 0, seeds_budget = default_node_budget;
    std::size_t seeds_limit = 10;
    std::string seeds_prefix;
    bool seeds_loose = false;
    auto* seeds_cmd = search_cmd->add_subcommand("seeds", "Find partitions usable as construction seeds");
    seeds_cmd->add_option("--s", seeds_s, "Subset count")->required();
    seeds_cmd->add_option("--n", seeds_n, "Order")->required();
    seeds_cmd->add_option("--limit", seeds_limit, "Maximum number of seeds")->capture_default_str();
    seeds_cmd->add_option("--budget", seeds_budget, "Node budget")->capture_default_str();
    seeds_cmd->add_option("--out-prefix", seeds_prefix, "Write seeds to <prefix>_NNN.wsp");
    seeds_cmd->add_flag("--conditions-only", seeds_loose, "Require Conditions 1-3 only, without the look-ahead checks");

    const Io io{in, out, err, globals};
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return ok;
    } catch (const CLI::ParseError& e) {
        report_error(io, "usage", e.what());
        return usage;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(io, verify_file, conditions, first_only);
        if (gen_cmd->parsed())
            return cmd_generate(io, gen_s, seed_file, out_file, trace);
        if (bound_cmd->parsed())
            return cmd_bound(io, bound_s);
        if (table_cmd->parsed())
            return cmd_table(io, max_s, markdown);
        if (ws_cmd->parsed())
            return cmd_search_ws(io, ws_s, ws_cap, ws_budget, ws_out);
        if (seeds_cmd->parsed())
            return cmd_search_seeds(io, seeds_s, seeds_n, seeds_limit, seeds_budget, seeds_prefix, seeds_loose);
    } catch (const ParseError& e) {
        report_error(io, to_string(e.kind()), e.what(), e.line());
        return usage;
    } catch (const UsageError& e) {
        report_error(io, "usage", e.what());
        return usage;
    } catch (const std::overflow_error& e) {
        report_error(io, "overflow", e.what());
        return usage;
    }
    return usage;
}

} // namespace wsp::cli
