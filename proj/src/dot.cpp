#include "mptplan/dot.hpp"

#include <sstream>

namespace mptplan {

namespace {
std::string quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fact_label(const Task &task, const Fact &f) {
    const Variable &v = task.variables[f.var];
    return v.name + "=" + v.value_name(f.value);
}
}  // namespace

std::string export_dot(const Task &task, const DomainTransitionGraph &dtg) {
    const Variable &var = task.variables[dtg.var];
    std::ostringstream out;
    out << "digraph " << quote((dtg.extended ? "xdtg_" : "dtg_") + var.name) << " {\n";
    for (int d = 0; d < dtg.num_values(); ++d)
        out << "  v" << d << " [label=" << quote(var.value_name(d)) << "];\n";
    for (const auto &outgoing : dtg.transitions)
        for (const Transition &t : outgoing) {
            std::string label;
            for (const Fact &f : t.condition) {
                if (!label.empty())
                    label += ", ";
                label += fact_label(task, f);
            }
            out << "  v" << t.from << " -> v" << t.to << " [label=" << quote(label);
            if (t.weight == 0)
                out << ", style=dotted";
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

namespace {
void write_nodes(std::ostringstream &out, const Task &task) {
    for (int v = 0; v < task.num_variables(); ++v)
        out << "  n" << v << " [label=" << quote(task.variables[v].name) << "];\n";
}
}  // namespace

std::string export_dot(const Task &task, const CausalGraph &cg) {
    std::ostringstream out;
    out << "digraph causal_graph {\n";
    write_nodes(out, task);
    for (const auto &[arc, w] : cg.arcs())
        out << "  n" << arc.from << " -> n" << arc.to << " [label=\"" << w << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const Task &task, const CausalGraph &cg,
                       const PrunedCausalGraph &pruned) {
    std::ostringstream out;
    out << "digraph pruned_causal_graph {\n";
    write_nodes(out, task);
    for (const auto &[arc, w] : cg.arcs()) {
        out << "  n" << arc.from << " -> n" << arc.to << " [label=\"" << w << "\"";
        if (!pruned.graph().has_arc(arc.from, arc.to))
            out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mptplan
