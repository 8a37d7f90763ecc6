#pragma once

#include "mptplan/causal_graph.hpp"
#include "mptplan/dtg.hpp"
#include "mptplan/task.hpp"

#include <string>

namespace mptplan {

// DTG edges carry their conditions (and weight 0 marks), CG edges their weights.
std::string export_dot(const Task &task, const DomainTransitionGraph &dtg);
std::string export_dot(const Task &task, const CausalGraph &cg);
// Retained arcs solid, dropped arcs dashed.
std::string export_dot(const Task &task, const CausalGraph &cg,
                       const PrunedCausalGraph &pruned);

}  // namespace mptplan
