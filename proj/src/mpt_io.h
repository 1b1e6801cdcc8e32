#ifndef MVPLAN_MPT_IO_H
#define MVPLAN_MPT_IO_H

#include "mpt.h"

#include <iosfwd>
#include <stdexcept>
#include <string>

/*
  Textual task format, version tag "mpt 1". Line-oriented, UTF-8, `#`
  starts a comment line. All indices are 0-based.

    mpt 1
    variables <N>
      per variable:
        var <name> <fluent|derived> <layer|-> <domain-size>
        <value-name>                          (domain-size lines)
    init <i1> ... <iF>        (one value index per fluent, declaration order)
    goal <M>
    <var-index> <value-index>                 (M lines)
    operators <N>
      per operator:
        <name>
        pre <M> <var> <val> ...
        effects <K>
        <C> <cond var> <cond val> ... <var> <new-value>    (K lines)
    axioms <N>
    <C> <cond var> <cond val> ... <head-var> <head-value>  (N lines)

  Plans are one operator name per line between begin_plan/end_plan.
*/

namespace mvplan {

class CompiledTask;

struct ParseError : std::runtime_error {
    int line;    // 1-based

    ParseError(int line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {
    }
};

// Parses and validates; throws ParseError on syntax or semantic errors.
Task parse_mpt(std::istream &in);
Task parse_mpt(const std::string &text);
Task parse_mpt_file(const std::string &path);

// Canonical form; parse_mpt(write_mpt(task)) is structurally equal to task.
std::string write_mpt(const Task &task);

Plan parse_plan(std::istream &in, const Task &task);
Plan parse_plan(const std::string &text, const Task &task);
Plan parse_plan_file(const std::string &path, const Task &task);

std::string write_plan(const Task &task, const Plan &plan);

enum class DotKind {
    causal_graph,
    pruned_causal_graph,
    dtg,             // per-variable domain transition graph
    extended_dtg,    // with the arcs into the undefined value
};

/*
  Graphviz export of the compiled structures. Vertex and edge order follow
  declaration order, so the output is deterministic. `var` names the
  variable for the dtg kinds and is ignored otherwise.
*/
std::string export_dot(const Task &task, const CompiledTask &compiled,
                       DotKind kind, const std::string &var = "");

}    // namespace mvplan

#endif
