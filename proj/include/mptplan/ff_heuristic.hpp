#pragma once

#include "mptplan/heuristic.hpp"

#include <vector>

namespace mptplan {

struct RelaxedPlan {
    std::vector<int> steps;  // operator ids, in an order executable under relaxation
};

/*
  Relaxed exploration in which every variable accumulates a set of values.
  Derived variables start with their actual values and can gain further
  values through axioms and the synthetic transitions of extended DTGs; both
  are free. The heuristic value is the length of a relaxed plan extracted by
  backchaining over first achievers.
*/
class FFHeuristic : public Heuristic {
public:
    explicit FFHeuristic(const CompiledTask &task);

    HeuristicResult evaluate(const ExtendedState &state) override;
    std::string name() const override { return "ff"; }
    bool dead_ends_are_reliable() const override { return true; }

    // Relaxed plan of the last evaluated state (empty for dead ends).
    const RelaxedPlan &relaxed_plan() const { return plan_; }

private:
    struct Action {
        std::vector<int> pre;  // fact ids
        int effect = 0;        // fact id
        int op = -1;           // -1 for free actions (axioms, synthetic arcs)
    };

    int fact(int var, int value) const { return fact_offset_[var] + value; }

    const CompiledTask &task_;
    std::vector<int> fact_offset_;
    std::vector<Action> actions_;  // operator actions first, by operator id
    std::vector<std::vector<int>> precondition_of_;
    std::vector<int> empty_pre_actions_;

    std::vector<int> layer_;
    std::vector<int> achiever_;
    std::vector<int> counter_;
    RelaxedPlan plan_;
};

}  // namespace mptplan
