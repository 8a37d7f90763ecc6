#pragma once

#include "mptplan/task.hpp"

#include <cstddef>
#include <vector>

namespace mptplan {

class PrunedCausalGraph;

enum class TransitionOrigin { Operator, Axiom, Synthetic };

struct Transition {
    int from = 0;
    int to = 0;
    PartialAssignment condition;
    int weight = 1;  // 1 for operator transitions, 0 otherwise
    TransitionOrigin origin = TransitionOrigin::Operator;
    // Operator id, axiom id, or disjunct index for synthetic arcs.
    int origin_id = 0;
    // Index of the effect within the operator; -1 otherwise.
    int effect = -1;

    friend bool operator==(const Transition &, const Transition &) = default;
};

struct DomainTransitionGraph {
    int var = 0;
    bool extended = false;
    // transitions[d] holds the outgoing transitions of value d.
    std::vector<std::vector<Transition>> transitions;

    int num_values() const { return static_cast<int>(transitions.size()); }
    std::size_t num_transitions() const;
    // Does the graph (ignoring conditions) connect every value to every other?
    bool is_strongly_connected() const;
};

/*
  Builds DTG(v). Effects whose precondition and effect condition disagree
  can never fire and contribute no transitions; neither do effects that pin
  the variable to the value they assign.
*/
DomainTransitionGraph build_dtg(const Task &task, int var);
std::vector<DomainTransitionGraph> build_dtgs(const Task &task);

struct UsagePolarity {
    bool positive = false;
    bool negative = false;
};

// Least fixpoint of the positive/negative usage rules for derived variables.
// Fluents always get {false, false}.
std::vector<UsagePolarity> compute_usage_polarity(const Task &task);

class DnfBlowup : public MptError {
public:
    using MptError::MptError;
};

inline constexpr std::size_t kMaxDnfDisjuncts = 10000;

/*
  Disjuncts of the simplified DNF describing when no axiom for the derived
  variable var fires, i.e. when var keeps its undefined value. Throws
  DnfBlowup if an intermediate DNF exceeds max_disjuncts.
*/
std::vector<PartialAssignment> undefined_value_conditions(
    const Task &task, int var, std::size_t max_disjuncts = kMaxDnfDisjuncts);

// DTG(v) plus synthetic weight-0 transitions into the undefined value.
DomainTransitionGraph build_extended_dtg(const Task &task, int var,
                                         std::size_t max_disjuncts = kMaxDnfDisjuncts);

/*
  Deletes conditions on variables ranked above the graph's variable in the
  pruned causal graph, then removes dominated and duplicate transitions
  between the same pair of values.
*/
DomainTransitionGraph prune_dtg(const DomainTransitionGraph &dtg,
                                const PrunedCausalGraph &pruned_cg);
std::vector<DomainTransitionGraph> prune_dtgs(
    const std::vector<DomainTransitionGraph> &dtgs, const PrunedCausalGraph &pruned_cg);

}  // namespace mptplan
