#include "compiled_task.h"
#include "mpt_io.h"
#include "search.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace std;
using namespace mvplan;

namespace {

constexpr int EXIT_OK = 0;             // plan found / plan valid
constexpr int EXIT_UNSOLVABLE = 1;     // unsolvable / plan invalid
constexpr int EXIT_LIMIT = 2;          // resource limit hit
constexpr int EXIT_INPUT_ERROR = 3;    // bad flags or malformed input

void usage(ostream &out) {
    out << "usage:\n"
        << "  mvplan plan <task.mpt> [--engine gbfs|mhbfs|fibs|portfolio]\n"
        << "                         [--heuristic cg|ff|both]\n"
        << "                         [--preferred none|ht|ht+ha-fallback|ht+ha]\n"
        << "                         [--timeout <seconds>] [--plan-out <file>]\n"
        << "                         [--report-out <file>]\n"
        << "  mvplan compile <task.mpt> --dot cg|pruned-cg|dtg:<var>|xdtg:<var>\n"
        << "                         [--out <file>]\n"
        << "  mvplan validate <task.mpt> <plan>\n"
        << "  mvplan stats <task.mpt>\n";
}

struct Arguments {
    vector<string> positional;
    map<string, string> flags;
};

Arguments parse_arguments(int argc, char **argv, int first) {
    Arguments arguments;
    for (int i = first; i < argc; ++i) {
        string arg = argv[i];
        if (arg.rfind("--", 0) == 0) {
            if (i + 1 >= argc)
                throw runtime_error("flag " + arg + " needs a value");
            arguments.flags[arg.substr(2)] = argv[++i];
        } else {
            arguments.positional.push_back(arg);
        }
    }
    return arguments;
}

EngineKind parse_engine(const string &name) {
    if (name == "gbfs")
        return EngineKind::gbfs;
    if (name == "mhbfs")
        return EngineKind::mhbfs;
    if (name == "fibs")
        return EngineKind::fibs;
    if (name == "portfolio")
        return EngineKind::portfolio;
    throw runtime_error("unknown engine '" + name + "'");
}

HeuristicChoice parse_heuristic(const string &name) {
    if (name == "cg")
        return HeuristicChoice::cg;
    if (name == "ff")
        return HeuristicChoice::ff;
    if (name == "both")
        return HeuristicChoice::both;
    throw runtime_error("unknown heuristic '" + name + "'");
}

PreferredMode parse_preferred(const string &name) {
    if (name == "none")
        return PreferredMode::none;
    if (name == "ht")
        return PreferredMode::helpful_transitions;
    if (name == "ht+ha-fallback")
        return PreferredMode::ht_fallback_ha;
    if (name == "ht+ha")
        return PreferredMode::ht_and_ha;
    throw runtime_error("unknown preferred-operator mode '" + name + "'");
}

void write_file(const string &path, const string &content) {
    ofstream out(path, ios::binary);
    if (!out)
        throw runtime_error("cannot write " + path);
    out << content;
}

string machine_report(const SearchConfig &config, const SearchResult &result) {
    ostringstream out;
    out << "outcome=" << to_string(result.outcome) << "\n";
    out << "engine=" << to_string(config.engine) << "\n";
    out << "heuristic=" << to_string(config.heuristic) << "\n";
    out << "preferred=" << to_string(config.preferred) << "\n";
    out << "plan_length="
        << (result.outcome == Outcome::plan_found
                ? static_cast<long>(result.plan.size())
                : -1)
        << "\n";
    out << "expansions=" << result.stats.expansions << "\n";
    out << "generations=" << result.stats.generations << "\n";
    out << "evaluations=" << result.stats.evaluations << "\n";
    out << "restarted_with_ff=" << (result.stats.restarted_with_ff ? 1 : 0)
        << "\n";
    out << "fibs_protected_pass_failed="
        << (result.stats.fibs_protected_pass_failed ? 1 : 0) << "\n";
    out << "fibs_unprotected_pass_ran="
        << (result.stats.fibs_unprotected_pass_ran ? 1 : 0) << "\n";
    return out.str();
}

int run_plan(const Arguments &arguments) {
    if (arguments.positional.size() != 1)
        throw runtime_error("plan expects exactly one task file");

    SearchConfig config;    // defaults: mhbfs, both heuristics, ht+ha
    auto flag = [&](const string &name) -> const string * {
        auto it = arguments.flags.find(name);
        return it == arguments.flags.end() ? nullptr : &it->second;
    };
    if (const string *engine = flag("engine"))
        config.engine = parse_engine(*engine);
    if (const string *heuristic = flag("heuristic"))
        config.heuristic = parse_heuristic(*heuristic);
    else if (config.engine == EngineKind::gbfs)
        config.heuristic = HeuristicChoice::cg;
    if (const string *preferred = flag("preferred"))
        config.preferred = parse_preferred(*preferred);
    if (const string *timeout = flag("timeout"))
        config.limits.timeout_seconds = stod(*timeout);

    auto compile_start = chrono::steady_clock::now();
    Task task = parse_mpt_file(arguments.positional[0]);
    CompiledTask compiled(task);
    double compile_ms = chrono::duration<double, milli>(
                            chrono::steady_clock::now() - compile_start)
                            .count();

    auto search_start = chrono::steady_clock::now();
    SearchResult result = run_search(compiled, config);
    double search_ms = chrono::duration<double, milli>(
                           chrono::steady_clock::now() - search_start)
                           .count();

    if (result.outcome == Outcome::plan_found) {
        string plan_text = write_plan(task, result.plan);
        if (const string *plan_out = flag("plan-out"))
            write_file(*plan_out, plan_text);
        else
            cout << plan_text;
    }

    string report = machine_report(config, result);
    if (const string *report_out = flag("report-out"))
        write_file(*report_out, report);

    cout << report;
    cout << "compile_time_ms=" << static_cast<long>(compile_ms) << "\n";
    cout << "search_time_ms=" << static_cast<long>(search_ms) << "\n";

    switch (result.outcome) {
    case Outcome::plan_found:
        return EXIT_OK;
    case Outcome::unsolvable:
        return EXIT_UNSOLVABLE;
    case Outcome::resource_limit:
        return EXIT_LIMIT;
    }
    return EXIT_INPUT_ERROR;
}

int run_compile(const Arguments &arguments) {
    if (arguments.positional.size() != 1)
        throw runtime_error("compile expects exactly one task file");
    auto it = arguments.flags.find("dot");
    if (it == arguments.flags.end())
        throw runtime_error("compile needs --dot");

    Task task = parse_mpt_file(arguments.positional[0]);
    CompiledTask compiled(task);

    const string &spec = it->second;
    DotKind kind;
    string var;
    if (spec == "cg") {
        kind = DotKind::causal_graph;
    } else if (spec == "pruned-cg") {
        kind = DotKind::pruned_causal_graph;
    } else if (spec.rfind("dtg:", 0) == 0) {
        kind = DotKind::dtg;
        var = spec.substr(4);
    } else if (spec.rfind("xdtg:", 0) == 0) {
        kind = DotKind::extended_dtg;
        var = spec.substr(5);
    } else {
        throw runtime_error("unknown --dot kind '" + spec + "'");
    }

    string dot = export_dot(task, compiled, kind, var);
    auto out_it = arguments.flags.find("out");
    if (out_it != arguments.flags.end())
        write_file(out_it->second, dot);
    else
        cout << dot;
    return EXIT_OK;
}

int run_validate(const Arguments &arguments) {
    if (arguments.positional.size() != 2)
        throw runtime_error("validate expects a task file and a plan file");
    Task task = parse_mpt_file(arguments.positional[0]);
    Plan plan = parse_plan_file(arguments.positional[1], task);
    PlanCheck check = validate_plan(task, plan);
    if (check.ok) {
        cout << "valid plan_length=" << plan.size() << "\n";
        return EXIT_OK;
    }
    if (check.goal_failed)
        cout << "invalid goal_not_satisfied\n";
    else
        cout << "invalid failing_step=" << check.failing_step << "\n";
    return EXIT_UNSOLVABLE;
}

int run_stats(const Arguments &arguments) {
    if (arguments.positional.size() != 1)
        throw runtime_error("stats expects exactly one task file");
    Task task = parse_mpt_file(arguments.positional[0]);
    CompiledTask compiled(task);

    const CausalGraph &cg = compiled.causal_graph;
    long kept = 0;
    for (const CausalGraph::Arc &arc : cg.arcs)
        if (cg.level[arc.from] < cg.level[arc.to])
            ++kept;

    cout << "variables=" << task.num_variables() << "\n";
    cout << "fluents=" << task.num_fluents() << "\n";
    cout << "derived=" << task.derived().size() << "\n";
    cout << "operators=" << task.operators.size() << "\n";
    cout << "axioms=" << task.axioms.size() << "\n";
    cout << "axiom_layers=" << task.num_axiom_layers() << "\n";
    cout << "relevant_variables=" << compiled.task.num_variables() << "\n";
    cout << "cg_arcs=" << cg.arcs.size() << "\n";
    cout << "scc_count=" << cg.num_sccs << "\n";
    cout << "pruned_cg_arcs=" << kept << "\n";
    cout << "dropped_cg_arcs=" << cg.dropped_arcs.size() << "\n";
    return EXIT_OK;
}

}    // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        usage(cerr);
        return EXIT_INPUT_ERROR;
    }
    string command = argv[1];
    try {
        Arguments arguments = parse_arguments(argc, argv, 2);
        if (command == "plan")
            return run_plan(arguments);
        if (command == "compile")
            return run_compile(arguments);
        if (command == "validate")
            return run_validate(arguments);
        if (command == "stats")
            return run_stats(arguments);
        usage(cerr);
        return EXIT_INPUT_ERROR;
    } catch (const ParseError &error) {
        cerr << "error: " << error.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const exception &error) {
        cerr << "error: " << error.what() << "\n";
        usage(cerr);
        return EXIT_INPUT_ERROR;
    }
}
