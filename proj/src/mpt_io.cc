#include "mpt_io.h"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <unordered_map>

using namespace std;

namespace mvplan {

namespace {

string trim(const string &s) {
    size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == string::npos)
        return "";
    size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

/*
  Line cursor over the input stream: skips blank and comment lines and
  tracks 1-based line numbers for diagnostics.
*/
class LineReader {
    istream &in;
    int line_no = 0;

public:
    explicit LineReader(istream &in) : in(in) {
    }

    int current_line() const {
        return line_no;
    }

    bool next(string &out) {
        string raw;
        while (getline(in, raw)) {
            ++line_no;
            string t = trim(raw);
            if (t.empty() || t[0] == '#')
                continue;
            out = t;
            return true;
        }
        return false;
    }

    string expect(const string &what) {
        string out;
        if (!next(out))
            throw ParseError(line_no + 1, "unexpected end of input, expected " + what);
        return out;
    }
};

vector<string> tokenize(const string &line) {
    vector<string> tokens;
    istringstream ss(line);
    string token;
    while (ss >> token)
        tokens.push_back(token);
    return tokens;
}

int parse_int(const string &token, int line, const string &what) {
    try {
        size_t pos = 0;
        int value = stoi(token, &pos);
        if (pos != token.size())
            throw invalid_argument(token);
        return value;
    } catch (const exception &) {
        throw ParseError(line, "expected integer for " + what + ", got '" + token + "'");
    }
}

/*
  Reads `count` (var, value) pairs from tokens starting at offset, checking
  ranges against the declared variables.
*/
PartialAssignment parse_pairs(const vector<string> &tokens, size_t offset,
                              int count, const Task &task, int line,
                              const string &what) {
    if (tokens.size() < offset + 2 * count)
        throw ParseError(line, "too few tokens in " + what);
    vector<Fact> facts;
    for (int i = 0; i < count; ++i) {
        int var = parse_int(tokens[offset + 2 * i], line, what);
        int value = parse_int(tokens[offset + 2 * i + 1], line, what);
        if (var < 0 || var >= task.num_variables())
            throw ParseError(line, what + ": variable index " + to_string(var) +
                                       " out of range");
        if (value < 0 || value >= task.variables[var].domain_size())
            throw ParseError(line, what + ": value index " + to_string(value) +
                                       " out of range for variable " +
                                       task.variables[var].name);
        facts.push_back({var, value});
    }
    string error;
    auto pa = make_partial_assignment(move(facts), &error);
    if (!pa)
        throw ParseError(line, what + ": " + error);
    return *pa;
}

int locus_line(const Violation &violation, const vector<int> &var_lines,
               const vector<int> &op_lines, const vector<int> &axiom_lines,
               int init_line, int goal_line) {
    switch (violation.locus) {
    case LocusKind::variable:
        if (violation.index >= 0 && violation.index < static_cast<int>(var_lines.size()))
            return var_lines[violation.index];
        break;
    case LocusKind::op:
        if (violation.index >= 0 && violation.index < static_cast<int>(op_lines.size()))
            return op_lines[violation.index];
        break;
    case LocusKind::axiom:
        if (violation.index >= 0 && violation.index < static_cast<int>(axiom_lines.size()))
            return axiom_lines[violation.index];
        break;
    case LocusKind::initial:
        return init_line;
    case LocusKind::goal:
        return goal_line;
    default:
        break;
    }
    return 1;
}

}    // namespace

Task parse_mpt(istream &in) {
    LineReader reader(in);
    Task task;
    vector<int> var_lines, op_lines, axiom_lines;
    int init_line = 1, goal_line = 1;

    {
        string header = reader.expect("header 'mpt 1'");
        if (header != "mpt 1")
            throw ParseError(reader.current_line(), "expected header 'mpt 1'");
    }

    {
        string line = reader.expect("'variables <N>'");
        vector<string> tokens = tokenize(line);
        if (tokens.size() != 2 || tokens[0] != "variables")
            throw ParseError(reader.current_line(), "expected 'variables <N>'");
        int count = parse_int(tokens[1], reader.current_line(), "variable count");
        if (count < 0)
            throw ParseError(reader.current_line(), "negative variable count");
        for (int i = 0; i < count; ++i) {
            string var_line = reader.expect("'var ...'");
            vector<string> vt = tokenize(var_line);
            if (vt.size() != 5 || vt[0] != "var")
                throw ParseError(reader.current_line(),
                                 "expected 'var <name> <fluent|derived> <layer|-> <domain-size>'");
            Variable variable;
            variable.name = vt[1];
            var_lines.push_back(reader.current_line());
            if (vt[2] == "fluent") {
                variable.is_derived = false;
                if (vt[3] != "-")
                    throw ParseError(reader.current_line(),
                                     "fluent variables take '-' as layer");
            } else if (vt[2] == "derived") {
                variable.is_derived = true;
                variable.axiom_layer =
                    parse_int(vt[3], reader.current_line(), "axiom layer");
                if (variable.axiom_layer < 1)
                    throw ParseError(reader.current_line(),
                                     "axiom layer must be at least 1");
            } else {
                throw ParseError(reader.current_line(),
                                 "variable kind must be 'fluent' or 'derived'");
            }
            int domain_size =
                parse_int(vt[4], reader.current_line(), "domain size");
            if (domain_size < 1)
                throw ParseError(reader.current_line(),
                                 "domain size must be at least 1");
            for (int d = 0; d < domain_size; ++d)
                variable.values.push_back(reader.expect("value name"));
            task.variables.push_back(move(variable));
        }
    }
    task.finalize();

    {
        string line = reader.expect("'init ...'");
        init_line = reader.current_line();
        vector<string> tokens = tokenize(line);
        if (tokens.empty() || tokens[0] != "init")
            throw ParseError(init_line, "expected 'init'");
        if (static_cast<int>(tokens.size()) - 1 != task.num_fluents())
            throw ParseError(init_line,
                             "init must list exactly one value per fluent (" +
                                 to_string(task.num_fluents()) + " expected)");
        for (int i = 0; i < task.num_fluents(); ++i) {
            int value = parse_int(tokens[i + 1], init_line, "initial value");
            int var = task.fluents()[i];
            if (value < 0 || value >= task.variables[var].domain_size())
                throw ParseError(init_line, "initial value out of range for variable " +
                                                task.variables[var].name);
            task.initial.values.push_back(value);
        }
    }

    {
        string line = reader.expect("'goal <M>'");
        goal_line = reader.current_line();
        vector<string> tokens = tokenize(line);
        if (tokens.size() != 2 || tokens[0] != "goal")
            throw ParseError(goal_line, "expected 'goal <M>'");
        int count = parse_int(tokens[1], goal_line, "goal count");
        vector<Fact> facts;
        for (int i = 0; i < count; ++i) {
            string pair_line = reader.expect("goal pair");
            vector<string> pt = tokenize(pair_line);
            if (pt.size() != 2)
                throw ParseError(reader.current_line(),
                                 "expected '<var-index> <value-index>'");
            PartialAssignment pa = parse_pairs(pt, 0, 1, task,
                                               reader.current_line(), "goal");
            facts.push_back(pa[0]);
        }
        string error;
        auto goal = make_partial_assignment(move(facts), &error);
        if (!goal)
            throw ParseError(goal_line, "goal: " + error);
        task.goal = *goal;
    }

    {
        string line = reader.expect("'operators <N>'");
        vector<string> tokens = tokenize(line);
        if (tokens.size() != 2 || tokens[0] != "operators")
            throw ParseError(reader.current_line(), "expected 'operators <N>'");
        int count = parse_int(tokens[1], reader.current_line(), "operator count");
        for (int i = 0; i < count; ++i) {
            Operator op;
            op.name = reader.expect("operator name");
            op_lines.push_back(reader.current_line());

            string pre_line = reader.expect("'pre <M> ...'");
            vector<string> pt = tokenize(pre_line);
            if (pt.size() < 2 || pt[0] != "pre")
                throw ParseError(reader.current_line(), "expected 'pre <M> ...'");
            int pre_count =
                parse_int(pt[1], reader.current_line(), "precondition count");
            if (static_cast<int>(pt.size()) != 2 + 2 * pre_count)
                throw ParseError(reader.current_line(),
                                 "precondition pair count mismatch");
            op.precondition = parse_pairs(pt, 2, pre_count, task,
                                          reader.current_line(),
                                          "precondition of " + op.name);

            string eff_line = reader.expect("'effects <K>'");
            vector<string> et = tokenize(eff_line);
            if (et.size() != 2 || et[0] != "effects")
                throw ParseError(reader.current_line(), "expected 'effects <K>'");
            int eff_count =
                parse_int(et[1], reader.current_line(), "effect count");
            for (int e = 0; e < eff_count; ++e) {
                string effect_line = reader.expect("effect");
                vector<string> ft = tokenize(effect_line);
                if (ft.empty())
                    throw ParseError(reader.current_line(), "empty effect line");
                int cond_count =
                    parse_int(ft[0], reader.current_line(), "effect condition count");
                if (static_cast<int>(ft.size()) != 1 + 2 * cond_count + 2)
                    throw ParseError(reader.current_line(),
                                     "effect token count mismatch");
                Effect effect;
                effect.condition = parse_pairs(ft, 1, cond_count, task,
                                               reader.current_line(),
                                               "effect condition of " + op.name);
                size_t offset = 1 + 2 * cond_count;
                effect.var = parse_int(ft[offset], reader.current_line(),
                                       "effect variable");
                effect.value = parse_int(ft[offset + 1], reader.current_line(),
                                         "effect value");
                if (effect.var < 0 || effect.var >= task.num_variables())
                    throw ParseError(reader.current_line(),
                                     "effect variable index out of range");
                if (effect.value < 0 ||
                    effect.value >= task.variables[effect.var].domain_size())
                    throw ParseError(reader.current_line(),
                                     "effect value out of range for variable " +
                                         task.variables[effect.var].name);
                op.effects.push_back(move(effect));
            }
            task.operators.push_back(move(op));
        }
    }

    {
        string line = reader.expect("'axioms <N>'");
        vector<string> tokens = tokenize(line);
        if (tokens.size() != 2 || tokens[0] != "axioms")
            throw ParseError(reader.current_line(), "expected 'axioms <N>'");
        int count = parse_int(tokens[1], reader.current_line(), "axiom count");
        for (int i = 0; i < count; ++i) {
            string axiom_line = reader.expect("axiom");
            axiom_lines.push_back(reader.current_line());
            vector<string> at = tokenize(axiom_line);
            if (at.empty())
                throw ParseError(reader.current_line(), "empty axiom line");
            int cond_count =
                parse_int(at[0], reader.current_line(), "axiom body count");
            if (static_cast<int>(at.size()) != 1 + 2 * cond_count + 2)
                throw ParseError(reader.current_line(), "axiom token count mismatch");
            Axiom axiom;
            axiom.body = parse_pairs(at, 1, cond_count, task,
                                     reader.current_line(), "axiom body");
            size_t offset = 1 + 2 * cond_count;
            axiom.var = parse_int(at[offset], reader.current_line(), "axiom head variable");
            axiom.value = parse_int(at[offset + 1], reader.current_line(), "axiom head value");
            if (axiom.var < 0 || axiom.var >= task.num_variables())
                throw ParseError(reader.current_line(),
                                 "axiom head variable index out of range");
            if (axiom.value < 0 ||
                axiom.value >= task.variables[axiom.var].domain_size())
                throw ParseError(reader.current_line(), "axiom head value out of range");
            task.axioms.push_back(move(axiom));
        }
    }

    string extra;
    if (reader.next(extra))
        throw ParseError(reader.current_line(), "trailing content: '" + extra + "'");

    vector<Violation> violations = validate_task(task);
    for (const Violation &violation : violations) {
        if (violation.is_error)
            throw ParseError(locus_line(violation, var_lines, op_lines,
                                        axiom_lines, init_line, goal_line),
                             violation.message);
    }
    return task;
}

Task parse_mpt(const string &text) {
    istringstream in(text);
    return parse_mpt(in);
}

Task parse_mpt_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open file " + path);
    return parse_mpt(in);
}

namespace {

void write_pairs(ostream &out, const PartialAssignment &pa) {
    out << pa.size();
    for (const Fact &fact : pa)
        out << ' ' << fact.var << ' ' << fact.value;
}

}    // namespace

string write_mpt(const Task &task) {
    ostringstream out;
    out << "mpt 1\n";
    out << "variables " << task.num_variables() << "\n";
    for (const Variable &variable : task.variables) {
        out << "var " << variable.name << ' '
            << (variable.is_derived ? "derived" : "fluent") << ' ';
        if (variable.is_derived)
            out << variable.axiom_layer;
        else
            out << '-';
        out << ' ' << variable.domain_size() << "\n";
        for (const string &value : variable.values)
            out << value << "\n";
    }
    out << "init";
    for (int value : task.initial.values)
        out << ' ' << value;
    out << "\n";
    out << "goal " << task.goal.size() << "\n";
    for (const Fact &fact : task.goal)
        out << fact.var << ' ' << fact.value << "\n";
    out << "operators " << task.operators.size() << "\n";
    for (const Operator &op : task.operators) {
        out << op.name << "\n";
        out << "pre ";
        write_pairs(out, op.precondition);
        out << "\n";
        out << "effects " << op.effects.size() << "\n";
        for (const Effect &effect : op.effects) {
            write_pairs(out, effect.condition);
            out << ' ' << effect.var << ' ' << effect.value << "\n";
        }
    }
    out << "axioms " << task.axioms.size() << "\n";
    for (const Axiom &axiom : task.axioms) {
        write_pairs(out, axiom.body);
        out << ' ' << axiom.var << ' ' << axiom.value << "\n";
    }
    return out.str();
}

Plan parse_plan(istream &in, const Task &task) {
    unordered_map<string, int> op_by_name;
    for (size_t i = 0; i < task.operators.size(); ++i)
        op_by_name.emplace(task.operators[i].name, static_cast<int>(i));

    LineReader reader(in);
    string line = reader.expect("'begin_plan'");
    if (line != "begin_plan")
        throw ParseError(reader.current_line(), "expected 'begin_plan'");
    Plan plan;
    while (true) {
        line = reader.expect("operator name or 'end_plan'");
        if (line == "end_plan")
            break;
        auto it = op_by_name.find(line);
        if (it == op_by_name.end())
            throw ParseError(reader.current_line(), "unknown operator '" + line + "'");
        plan.push_back(it->second);
    }
    return plan;
}

Plan parse_plan(const string &text, const Task &task) {
    istringstream in(text);
    return parse_plan(in, task);
}

Plan parse_plan_file(const string &path, const Task &task) {
    ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open file " + path);
    return parse_plan(in, task);
}

string write_plan(const Task &task, const Plan &plan) {
    ostringstream out;
    out << "begin_plan\n";
    for (int op_id : plan) {
        assert(op_id >= 0 && op_id < static_cast<int>(task.operators.size()));
        out << task.operators[op_id].name << "\n";
    }
    out << "end_plan\n";
    return out.str();
}

}    // namespace mvplan
