#include "compiled_task.h"
#include "mpt_io.h"

#include <sstream>
#include <stdexcept>

using namespace std;

namespace mvplan {

namespace {

string quote(const string &s) {
    string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

string condition_label(const Task &task, const PartialAssignment &pa) {
    string out;
    for (const Fact &fact : pa) {
        if (!out.empty())
            out += ", ";
        out += task.variables[fact.var].name + "=" +
               task.variables[fact.var].values[fact.value];
    }
    return out;
}

void write_causal_graph(ostream &out, const Task &task, const CausalGraph &cg,
                        bool pruned) {
    out << "digraph G {\n";
    for (const Variable &variable : task.variables)
        out << "  " << quote(variable.name) << ";\n";
    for (const CausalGraph::Arc &arc : cg.arcs) {
        if (pruned && cg.level[arc.from] >= cg.level[arc.to])
            continue;
        out << "  " << quote(task.variables[arc.from].name) << " -> "
            << quote(task.variables[arc.to].name) << " [label=\"" << arc.weight
            << "\"];\n";
    }
    out << "}\n";
}

void write_dtg(ostream &out, const Task &task, const Dtg &dtg) {
    const Variable &variable = task.variables[dtg.var];
    out << "digraph G {\n";
    for (const string &value : variable.values)
        out << "  " << quote(value) << ";\n";
    for (const Transition &transition : dtg.transitions) {
        string label = condition_label(task, transition.condition);
        if (!label.empty())
            label += " ";
        label += "/ w=" + to_string(transition.weight);
        out << "  " << quote(variable.values[transition.from]) << " -> "
            << quote(variable.values[transition.to]) << " [label=" << quote(label)
            << "];\n";
    }
    out << "}\n";
}

}    // namespace

string export_dot(const Task &task, const CompiledTask &compiled, DotKind kind,
                  const string &var) {
    ostringstream out;
    switch (kind) {
    case DotKind::causal_graph:
        write_causal_graph(out, compiled.task, compiled.causal_graph, false);
        break;
    case DotKind::pruned_causal_graph:
        write_causal_graph(out, compiled.task, compiled.causal_graph, true);
        break;
    case DotKind::dtg:
    case DotKind::extended_dtg: {
        int var_id = -1;
        for (int v = 0; v < compiled.task.num_variables(); ++v) {
            if (compiled.task.variables[v].name == var) {
                var_id = v;
                break;
            }
        }
        if (var_id == -1)
            throw runtime_error("unknown variable '" + var +
                                "' (it may have been pruned as irrelevant)");
        if (kind == DotKind::dtg) {
            write_dtg(out, compiled.task, compiled.full_dtgs[var_id]);
        } else {
            if (!compiled.needs_extended_dtg(var_id))
                throw runtime_error("variable '" + var +
                                    "' has no extended graph: it is not a "
                                    "negatively used derived variable");
            write_dtg(out, compiled.task, compiled.extended_dtgs[var_id]);
        }
        break;
    }
    }
    (void)task;
    return out.str();
}

}    // namespace mvplan
