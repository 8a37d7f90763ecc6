#pragma once

#include "mptplan/axiom_evaluator.hpp"
#include "mptplan/causal_graph.hpp"
#include "mptplan/dtg.hpp"
#include "mptplan/successor_generator.hpp"
#include "mptplan/task.hpp"

#include <vector>

namespace mptplan {

/*
  Everything the search and the heuristics need about a task. The heuristic
  DTGs start out as the plain DTGs, get extended for negatively used derived
  variables and are then pruned against the pruned causal graph.
*/
struct CompiledTask {
    Task task;
    std::vector<DomainTransitionGraph> dtgs;
    std::vector<UsagePolarity> polarity;
    std::vector<DomainTransitionGraph> extended_dtgs;
    CausalGraph causal_graph;
    PrunedCausalGraph pruned_causal_graph;
    std::vector<DomainTransitionGraph> pruned_dtgs;
    SuccessorGenerator successor_generator;
    AxiomEvaluator axiom_evaluator;

    ExtendedState extended_state(const State &state) const {
        return axiom_evaluator.evaluate(state);
    }
    ExtendedState initial_state() const { return extended_state(task.init); }
};

// Throws DnfBlowup if some extended DTG cannot be built.
CompiledTask compile_task(Task task);

}  // namespace mptplan
