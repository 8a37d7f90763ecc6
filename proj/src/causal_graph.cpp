#include "mptplan/causal_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace mptplan {

CausalGraph::CausalGraph(int num_variables)
    : successors_(num_variables), predecessors_(num_variables) {
}

void CausalGraph::add_arc(int from, int to, int weight) {
    if (from == to)
        throw std::invalid_argument("causal graph arcs must not be self-loops");
    int &w = weights_[Arc{from, to}];
    if (w == 0) {
        auto &succ = successors_[from];
        succ.insert(std::upper_bound(succ.begin(), succ.end(), to), to);
        auto &pred = predecessors_[to];
        pred.insert(std::upper_bound(pred.begin(), pred.end(), from), from);
    }
    w += weight;
}

int CausalGraph::weight(int from, int to) const {
    auto it = weights_.find(Arc{from, to});
    return it == weights_.end() ? 0 : it->second;
}

std::vector<std::vector<int>> CausalGraph::strongly_connected_components() const {
    // Tarjan's algorithm; emits components in reverse topological order.
    int n = num_variables();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;
    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : successors_[v]) {
            if (index[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> component;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1)
            visit(v);
    std::reverse(components.begin(), components.end());
    return components;
}

bool CausalGraph::is_acyclic() const {
    for (const auto &c : strongly_connected_components())
        if (c.size() > 1)
            return false;
    return true;
}

std::vector<bool> CausalGraph::ancestors_of(const std::vector<int> &targets) const {
    std::vector<bool> seen(num_variables(), false);
    std::deque<int> queue;
    for (int t : targets)
        if (!seen[t]) {
            seen[t] = true;
            queue.push_back(t);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : predecessors_[v])
            if (!seen[u]) {
                seen[u] = true;
                queue.push_back(u);
            }
    }
    return seen;
}

bool effect_can_fire(const Operator &op, const Effect &effect) {
    return merge(op.precondition, effect.condition).has_value();
}

CausalGraph build_causal_graph(const Task &task,
                               const std::vector<DomainTransitionGraph> &dtgs) {
    // Inducers are (kind, id) pairs so that each operator/axiom counts once per arc.
    std::map<Arc, std::set<std::pair<int, int>>> inducers;
    for (const DomainTransitionGraph &dtg : dtgs) {
        for (const auto &out : dtg.transitions)
            for (const Transition &t : out) {
                if (t.origin == TransitionOrigin::Synthetic)
                    continue;
                for (const Fact &f : t.condition)
                    if (f.var != dtg.var)
                        inducers[Arc{f.var, dtg.var}].insert(
                            {static_cast<int>(t.origin), t.origin_id});
            }
    }
    for (std::size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        std::set<int> affected;
        for (const Effect &e : op.effects)
            if (effect_can_fire(op, e))
                affected.insert(e.var);
        for (int u : affected)
            for (int v : affected)
                if (u != v)
                    inducers[Arc{u, v}].insert(
                        {static_cast<int>(TransitionOrigin::Operator), static_cast<int>(i)});
    }
    CausalGraph cg(task.num_variables());
    for (const auto &[arc, who] : inducers)
        cg.add_arc(arc.from, arc.to, static_cast<int>(who.size()));
    return cg;
}

CausalGraph build_causal_graph(const Task &task) {
    return build_causal_graph(task, build_dtgs(task));
}

PrunedCausalGraph::PrunedCausalGraph(CausalGraph retained, std::vector<int> order,
                                     std::vector<Arc> dropped)
    : retained_(std::move(retained)),
      order_(std::move(order)),
      level_(order_.size()),
      dropped_(std::move(dropped)),
      ancestors_(order_.size()) {
    for (std::size_t i = 0; i < order_.size(); ++i)
        level_[order_[i]] = static_cast<int>(i);
    for (int v = 0; v < retained_.num_variables(); ++v) {
        auto anc = retained_.ancestors_of({v});
        for (int u = 0; u < retained_.num_variables(); ++u)
            if (anc[u] && u != v)
                ancestors_[v].push_back(u);
    }
}

PrunedCausalGraph prune_causal_graph(const CausalGraph &cg) {
    std::vector<int> order;
    order.reserve(cg.num_variables());
    for (const auto &component : cg.strongly_connected_components()) {
        std::vector<int> remaining = component;
        while (!remaining.empty()) {
            int best = -1;
            long best_weight = std::numeric_limits<long>::max();
            for (int v : remaining) {
                long incoming = 0;
                for (int u : remaining)
                    if (u != v)
                        incoming += cg.weight(u, v);
                if (incoming < best_weight) {  // remaining is sorted: ties keep lowest id
                    best_weight = incoming;
                    best = v;
                }
            }
            order.push_back(best);
            remaining.erase(std::find(remaining.begin(), remaining.end(), best));
        }
    }

    std::vector<int> level(cg.num_variables());
    for (std::size_t i = 0; i < order.size(); ++i)
        level[order[i]] = static_cast<int>(i);
    CausalGraph retained(cg.num_variables());
    std::vector<Arc> dropped;
    for (const auto &[arc, w] : cg.arcs()) {
        if (level[arc.from] < level[arc.to])
            retained.add_arc(arc.from, arc.to, w);
        else
            dropped.push_back(arc);
    }
    return PrunedCausalGraph(std::move(retained), std::move(order), std::move(dropped));
}

namespace {
// Does this label/new-value pair give rise to at least one DTG transition?
bool yields_transition(const PartialAssignment &label, int var, int value) {
    auto pinned = label.value_of(var);
    return !pinned || *pinned != value;
}
}  // namespace

Plan RelevantTask::to_original(const Plan &plan) const {
    Plan out;
    out.steps.reserve(plan.steps.size());
    for (int id : plan.steps)
        out.steps.push_back(operator_map.at(id));
    return out;
}

RelevantTask prune_irrelevant(const Task &task, const CausalGraph &cg) {
    std::vector<int> goal_vars;
    for (const Fact &f : task.goal)
        goal_vars.push_back(f.var);
    std::vector<bool> relevant = cg.ancestors_of(goal_vars);

    RelevantTask out;
    std::vector<int> new_id(task.variables.size(), -1);
    for (int v = 0; v < task.num_variables(); ++v)
        if (relevant[v]) {
            new_id[v] = static_cast<int>(out.variable_map.size());
            out.variable_map.push_back(v);
        }

    auto remap = [&](const PartialAssignment &pa) {
        std::vector<Fact> facts;
        for (const Fact &f : pa) {
            if (new_id[f.var] < 0)
                throw std::logic_error("relevant element mentions an irrelevant variable");
            facts.push_back({new_id[f.var], f.value});
        }
        return PartialAssignment(std::move(facts));
    };

    // Compact the axiom layers of the surviving derived variables.
    std::set<int> layers;
    for (int v : out.variable_map)
        if (task.variables[v].is_derived())
            layers.insert(task.variables[v].axiom_layer);
    std::vector<int> layer_list(layers.begin(), layers.end());
    for (int v : out.variable_map) {
        Variable var = task.variables[v];
        if (var.is_derived())
            var.axiom_layer = static_cast<int>(
                std::lower_bound(layer_list.begin(), layer_list.end(), var.axiom_layer) -
                layer_list.begin());
        out.task.variables.push_back(std::move(var));
    }

    std::vector<int> init;
    for (int v : out.variable_map)
        init.push_back(task.init[v]);
    out.task.init = State{std::move(init)};
    out.task.goal = remap(task.goal);

    for (std::size_t i = 0; i < task.axioms.size(); ++i) {
        const Axiom &a = task.axioms[i];
        if (!relevant[a.head_var] || !yields_transition(a.body, a.head_var, a.head_value))
            continue;
        out.task.axioms.push_back({remap(a.body), new_id[a.head_var], a.head_value});
        out.axiom_map.push_back(static_cast<int>(i));
    }

    for (std::size_t i = 0; i < task.operators.size(); ++i) {
        const Operator &op = task.operators[i];
        std::vector<Effect> effects;
        for (const Effect &e : op.effects) {
            if (!relevant[e.var])
                continue;
            auto label = merge(op.precondition, e.condition);
            if (!label || !yields_transition(*label, e.var, e.value))
                continue;
            effects.push_back({remap(e.condition), new_id[e.var], e.value});
        }
        if (effects.empty())
            continue;
        out.task.operators.push_back({op.name, remap(op.precondition), std::move(effects)});
        out.operator_map.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace mptplan
