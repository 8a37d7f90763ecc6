#pragma once

#include "mptplan/task.hpp"

#include <string>

namespace mptplan {

class PreconditionViolated : public MptError {
public:
    using MptError::MptError;
};

// Empty string if the task has an acyclic causal graph, strongly connected
// DTGs, no derived variables and no self-contradictory transition labels;
// otherwise a description of the first violation.
std::string easy_mpt_violation(const Task &task);

/*
  Backtrack-free planner for tasks meeting the conditions above. Goal
  variables are handled sinks first; each DTG path transition first has its
  conditions achieved recursively (descendants before ancestors, so later
  subgoals never disturb earlier ones).
*/
Plan solve_easy_mpt(const Task &task);

}  // namespace mptplan
