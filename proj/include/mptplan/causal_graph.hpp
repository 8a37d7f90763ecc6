#pragma once

#include "mptplan/dtg.hpp"
#include "mptplan/task.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mptplan {

struct Arc {
    int from = 0;
    int to = 0;

    friend auto operator<=>(const Arc &, const Arc &) = default;
};

class CausalGraph {
public:
    explicit CausalGraph(int num_variables = 0);

    // Registers one inducing operator/axiom for the arc.
    void add_arc(int from, int to, int weight = 1);

    int num_variables() const { return static_cast<int>(successors_.size()); }
    const std::map<Arc, int> &arcs() const { return weights_; }
    int weight(int from, int to) const;
    bool has_arc(int from, int to) const { return weight(from, to) > 0; }
    const std::vector<int> &successors(int var) const { return successors_[var]; }
    const std::vector<int> &predecessors(int var) const { return predecessors_[var]; }

    bool is_acyclic() const;
    // Strongly connected components; each sorted, listed in topological order.
    std::vector<std::vector<int>> strongly_connected_components() const;
    // Variables from which some variable in targets is reachable (targets included).
    std::vector<bool> ancestors_of(const std::vector<int> &targets) const;

private:
    std::map<Arc, int> weights_;
    std::vector<std::vector<int>> successors_;
    std::vector<std::vector<int>> predecessors_;
};

/*
  Arc (u, v) exists if a transition of DTG(v) has a condition on u, or some
  operator affects both u and v. Its weight counts the distinct operators and
  axioms inducing it, each counted once regardless of how many of its effects
  contribute.
*/
CausalGraph build_causal_graph(const Task &task);
CausalGraph build_causal_graph(const Task &task,
                               const std::vector<DomainTransitionGraph> &dtgs);

class PrunedCausalGraph {
public:
    PrunedCausalGraph() = default;
    PrunedCausalGraph(CausalGraph retained, std::vector<int> order,
                      std::vector<Arc> dropped);

    const CausalGraph &graph() const { return retained_; }
    // order()[i] is the variable with level i (lowest first).
    const std::vector<int> &order() const { return order_; }
    int level(int var) const { return level_[var]; }
    bool precedes(int a, int b) const { return level_[a] < level_[b]; }
    const std::vector<Arc> &dropped_arcs() const { return dropped_; }
    // Ancestors of var in the retained graph, excluding var, ascending ids.
    const std::vector<int> &ancestors(int var) const { return ancestors_[var]; }

private:
    CausalGraph retained_;
    std::vector<int> order_;
    std::vector<int> level_;
    std::vector<Arc> dropped_;
    std::vector<std::vector<int>> ancestors_;
};

/*
  Per strongly connected component, repeatedly gives the lowest remaining
  level to the vertex with minimal incoming weight from the remaining vertices
  of the component (ties: lowest id). Arcs against the resulting order are
  dropped.
*/
PrunedCausalGraph prune_causal_graph(const CausalGraph &cg);

struct RelevantTask {
    Task task;
    std::vector<int> variable_map;  // new id -> original id
    std::vector<int> operator_map;  // new id -> original id
    std::vector<int> axiom_map;     // new id -> original id

    Plan to_original(const Plan &plan) const;
};

// Removes every variable that is not a causal graph ancestor of a goal variable.
RelevantTask prune_irrelevant(const Task &task, const CausalGraph &cg);

// Does pre ∪ cond of this effect stay consistent?
bool effect_can_fire(const Operator &op, const Effect &effect);

}  // namespace mptplan
