// spcrit: command-line front end for the spcrit library.
//
// Structured output (JSON or the chosen graph format) goes to stdout or
// --output; human-readable notes go to stderr.
// Exit codes: 0 success/affirmative, 1 negative decision, 2 usage or parse
// error, 3 guard refusal.

#include "spcrit/spcrit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using namespace spcrit;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_guard = 3;

struct RunConfig {
    int k = 2;
    int max_vertices = 10;
    int max_edges = 16;
    std::string format = "json";
    std::string input_format = "auto";
    std::string output;
    int jobs = default_jobs();
    bool verbose = false;
    bool override_guards = false;
};

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InvalidArgument("cannot open " + path + " for writing");
        }
    }

    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

ParsedGraph load_graph(const std::string& path, const std::string& format)
{
    const std::string text = read_input(path);
    if (format == "edgelist")
        return parse_graph(text, GraphFormat::EdgeList);
    if (format == "graph6")
        return parse_graph(text, GraphFormat::Graph6);
    if (format == "dot")
        return parse_graph(text, GraphFormat::Dot);
    return parse_graph(text);
}

HomOptions hom_options(const RunConfig& cfg) { return HomOptions{cfg.override_guards}; }

// --- forced-set -------------------------------------------------------------

int run_forced_set(const RunConfig& cfg, const std::string& file, const std::vector<int>& terminals)
{
    const CycleOrder order(cfg.k);
    ParsedGraph pg = load_graph(file, cfg.input_format);
    if (terminals.size() == 2)
        pg.terminals = std::pair{terminals[0], terminals[1]};
    if (!pg.terminals)
        throw InvalidArgument("no terminals: give --terminals S T or put them in the input");
    const TerminalGraph tg(pg.graph, pg.terminals->first, pg.terminals->second);
    const HomOptions opts = hom_options(cfg);

    std::string method = "oracle";
    ForcedSetResult result{SymSet::empty(order), {}};
    try {
        const SpExpr e = recognize_sp(tg);
        method = "dp";
        result.set = forced_set_dp(e, order);
        for (int x : result.set.elements()) {
            auto phi = colouring_with(tg, order, x, opts);
            if (!phi)
                throw InvariantViolation("dp forced set has no witness for " + std::to_string(x));
            result.witness.emplace(x, std::move(*phi));
        }
    } catch (const NotSeriesParallel&) {
        result = forced_set_oracle(tg, order, opts);
    }
    Output out(cfg.output);
    out.out() << forced_set_to_json(result, tg, order, method).dump() << '\n';
    std::cerr << "forced set " << alias(result.set) << " (" << method << ")\n";
    return exit_ok;
}

// --- check-critical ---------------------------------------------------------

int run_check_critical(const RunConfig& cfg, const std::string& file)
{
    const CycleOrder order(cfg.k);
    const ParsedGraph pg = load_graph(file, cfg.input_format);
    const Graph& g = pg.graph;
    const CriticalityVerdict v = check_critical(g, order, hom_options(cfg));

    json j{{"schema", "spcrit.check-critical/1"}, {"k", cfg.k}, {"critical", v.critical()}};
    j["graph"] = graph_to_json(g);
    const bool sp = recognize_sp_any(g).has_value();
    j["series_parallel"] = sp;
    if (!sp)
        j["note"] = "not series-parallel; decided by the general oracle";
    if (v.report) {
        json wit = json::array();
        for (std::size_t i = 0; i < v.report->edge_witness.size(); ++i) {
            const auto [a, b] = g.edges()[i];
            wit.push_back({{"deleted", {a, b}}, {"colouring", colouring_to_json(v.report->edge_witness[i])}});
        }
        j["edge_witness"] = std::move(wit);
    } else if (v.colouring) {
        j["counterexample"] = {{"kind", "colouring"}, {"colouring", colouring_to_json(*v.colouring)}};
    } else if (v.redundant_edge) {
        j["counterexample"] = {{"kind", "redundant_edge"},
                               {"edge", {v.redundant_edge->first, v.redundant_edge->second}}};
    } else if (v.isolated_vertex) {
        j["counterexample"] = {{"kind", "isolated_vertex"}, {"vertex", *v.isolated_vertex}};
    }
    Output out(cfg.output);
    out.out() << j.dump() << '\n';
    std::cerr << (v.critical() ? "critical" : "not critical") << (sp ? "" : " (not series-parallel)") << '\n';
    return v.critical() ? exit_ok : exit_negative;
}

// --- enumerate-families -----------------------------------------------------

std::vector<FamilyTag> resolve_tags(CycleOrder order, const std::string& tag)
{
    if (tag == "all")
        return plain_tags(order);
    if (tag == "refined")
        return all_refined_tags(order);
    return {parse_family_tag(order, tag)};
}

void write_catalog(std::ostream& os, const FamilyCatalog& cat, const std::vector<FamilyTag>& tags)
{
    for (const auto& tag : tags)
        for (const auto& m : cat.members.at(tag))
            os << family_member_to_json(tag, m).dump() << '\n';
}

int run_enumerate_families(const RunConfig& cfg, const std::string& tag_text, const std::string& method,
                           bool inject_mismatch)
{
    const CycleOrder order(cfg.k);
    const SizeBound bound{cfg.max_vertices, cfg.max_edges};
    check_battery_guard(bound, cfg.override_guards);
    const auto tags = resolve_tags(order, tag_text);

    std::optional<FamilyCatalog> recursive, oracle;
    if (method != "oracle")
        recursive = RefinedFamilies(order, bound).catalog(tags);
    if (method != "recursive") {
        oracle = OracleFamilies(order, bound, cfg.jobs).catalog(tags);
        if (inject_mismatch)
            for (auto& [tag, list] : oracle->members)
                if (!list.empty()) {
                    list.erase(list.begin());
                    break;
                }
    }

    int code = exit_ok;
    if (recursive && oracle)
        for (const auto& tag : tags)
            if (recursive->keys(tag) != oracle->keys(tag)) {
                std::cerr << "mismatch for tag " << to_string(tag) << ": recursive " << recursive->keys(tag).size()
                          << ", oracle " << oracle->keys(tag).size() << '\n';
                code = exit_negative;
            }
    const FamilyCatalog& shown = recursive ? *recursive : *oracle;
    Output out(cfg.output);
    write_catalog(out.out(), shown, tags);
    std::size_t total = 0;
    for (const auto& tag : tags)
        total += shown.members.at(tag).size();
    std::cerr << total << " records, " << shown.union_members().size() << " distinct graphs ("
              << method << ")\n";
    return code;
}

// --- enumerate-critical -----------------------------------------------------

int run_enumerate_critical(const RunConfig& cfg, const std::string& method)
{
    const CycleOrder order(cfg.k);
    const SizeBound bound{cfg.max_vertices, cfg.max_edges};
    check_battery_guard(bound, cfg.override_guards);

    std::optional<CriticalCatalog> theorem, brute;
    if (method != "bruteforce")
        theorem = generate_critical(order, bound, cfg.jobs);
    if (method != "theorem")
        brute = filter_critical_bruteforce(order, bound, cfg.jobs);

    int code = exit_ok;
    if (theorem && !theorem->violations.empty()) {
        for (const auto& v : theorem->violations)
            std::cerr << v << '\n';
        code = exit_negative;
    }
    if (theorem && brute) {
        const auto d = compare_catalogs(*theorem, *brute);
        if (!d.empty()) {
            std::cerr << "catalogs differ: " << d.only_first.size() << " only generated, " << d.only_second.size()
                      << " only brute force\n";
            code = exit_negative;
        }
    }
    const CriticalCatalog& shown = theorem ? *theorem : *brute;
    Output out(cfg.output);
    out.out() << critical_catalog_to_json(shown, method).dump() << '\n';
    std::cerr << shown.members.size() << " critical graphs (" << method << ")\n";
    return code;
}

// --- verify -----------------------------------------------------------------

int run_verify(const RunConfig& cfg)
{
    const CycleOrder order(cfg.k);
    const SizeBound bound{cfg.max_vertices, cfg.max_edges};
    const BatteryResult res = run_battery(order, bound, cfg.jobs, cfg.override_guards);
    json checks = json::array();
    for (const auto& c : res.checks) {
        checks.push_back(verification_to_json(c));
        std::cerr << (c.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.checked << " checked)\n";
        if (cfg.verbose)
            for (const auto& v : c.violations)
                std::cerr << "  " << v << '\n';
    }
    const json j{{"schema", verify_schema},
                 {"k", cfg.k},
                 {"bound", {{"max_vertices", bound.max_vertices}, {"max_edges", bound.max_edges}}},
                 {"ok", res.ok()},
                 {"checks", std::move(checks)}};
    Output out(cfg.output);
    out.out() << j.dump() << '\n';
    return res.ok() ? exit_ok : exit_negative;
}

// --- atlas ------------------------------------------------------------------

int run_atlas(const RunConfig& cfg)
{
    if (cfg.k != 2)
        throw InvalidArgument("the base-graph atlas is defined for k = 2 only");
    const auto entries = base_atlas();
    Output out(cfg.output);
    std::ostream& os = out.out();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& a = entries[i];
        const TerminalGraph tg = realize(a.expr);
        if (cfg.format == "json") {
            os << atlas_entry_to_json(a).dump() << '\n';
        } else if (cfg.format == "dot") {
            os << emit_dot(tg, a.name);
        } else {
            if (i > 0)
                os << '\n';
            os << "# " << a.name << ' ' << to_string(a.tag) << '\n';
            os << (cfg.format == "graph6" ? emit_graph6(tg) : emit_edge_list(tg));
        }
        std::cerr << a.name << ": " << tg.graph.vertex_count() << " vertices, tag " << to_string(a.tag) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Forced sets, refined families and C_{2k+1}-critical series-parallel graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto formats = CLI::IsMember({"edgelist", "graph6", "dot", "json"});
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "cycle parameter; the target cycle has 2k+1 vertices")->check(CLI::Range(1, 30));
        sub->add_option("--jobs", cfg.jobs, "worker threads (default: SPCRIT_JOBS or 1)")->check(CLI::PositiveNumber);
        sub->add_flag("--override-guards", cfg.override_guards, "run past the desk-scale size guards");
        sub->add_option("-o,--output", cfg.output, "write structured output here instead of stdout");
        sub->add_flag("-v,--verbose", cfg.verbose, "more detail on stderr");
    };
    const auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--max-vertices", cfg.max_vertices, "vertex cap")->check(CLI::Range(2, 1000));
        sub->add_option("--max-edges", cfg.max_edges, "edge cap")->check(CLI::Range(1, 1000));
    };

    std::string file;
    std::vector<int> terminals;
    auto* forced = app.add_subcommand("forced-set", "forced set of a 2-terminal graph, with witnesses");
    add_common(forced);
    forced->add_option("--terminals", terminals, "terminal vertices s t")->expected(2);
    forced->add_option("--input-format", cfg.input_format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6", "dot"}));
    forced->add_option("file", file, "graph file, '-' for stdin")->required();

    auto* critical = app.add_subcommand("check-critical", "decide C_{2k+1}-criticality of a graph");
    add_common(critical);
    critical->add_option("--input-format", cfg.input_format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6", "dot"}));
    critical->add_option("file", file, "graph file, '-' for stdin")->required();

    std::string tag = "all";
    std::string fam_method = "recursive";
    bool inject = false;
    auto* families = app.add_subcommand("enumerate-families", "members of F_S^T within a bound, as JSON lines");
    add_common(families);
    add_bounds(families);
    families->add_option("--tag", tag, "S or S,T (e.g. s1, sb1,s1), 'all' for plain tags, 'refined' for every tag");
    families->add_option("--method", fam_method, "generation route")
        ->check(CLI::IsMember({"recursive", "oracle", "both"}));
    families->add_flag("--inject-mismatch", inject, "test mode: drop one oracle member")->group("");

    std::string crit_method = "theorem";
    auto* crit = app.add_subcommand("enumerate-critical", "critical series-parallel graphs within a bound");
    add_common(crit);
    add_bounds(crit);
    crit->add_option("--method", crit_method, "generation route")
        ->check(CLI::IsMember({"theorem", "bruteforce", "both"}));

    auto* verify = app.add_subcommand("verify", "run the full verification battery");
    add_common(verify);
    add_bounds(verify);

    auto* atlas = app.add_subcommand("atlas", "the base graphs H1..H6 (k = 2)");
    add_common(atlas);
    atlas->add_option("--format", cfg.format, "output format")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (forced->parsed())
            return run_forced_set(cfg, file, terminals);
        if (critical->parsed())
            return run_check_critical(cfg, file);
        if (families->parsed())
            return run_enumerate_families(cfg, tag, fam_method, inject);
        if (crit->parsed())
            return run_enumerate_critical(cfg, crit_method);
        if (verify->parsed())
            return run_verify(cfg);
        if (atlas->parsed())
            return run_atlas(cfg);
    } catch (const GuardRefusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return exit_guard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return exit_negative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
