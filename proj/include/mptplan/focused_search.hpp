#pragma once

#include "mptplan/causal_graph.hpp"
#include "mptplan/compiled_task.hpp"
#include "mptplan/search.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace mptplan {

// Shortest causal graph distance from an affected variable of op to var;
// kInfinity if none of them reaches var.
int modification_distance(const Task &task, const Operator &op, int var,
                          const CausalGraph &cg);
// Distances of all operators with respect to var.
std::vector<int> modification_distances(const Task &task, int var, const CausalGraph &cg);
// Largest finite entry of distances (0 if there is none).
int max_threshold(const std::vector<int> &distances);

/*
  Resumable reach-one-goal search: for thresholds 0 .. max-threshold, a
  uniform-cost search restricted to operators within the threshold, where an
  operator costs 1 + its modification distance. With protection, operators
  that may assign a protected variable a different value are excluded.
*/
class ReachOneGoal {
public:
    enum class Status { Running, Solved, Failed };

    ReachOneGoal(const CompiledTask &task, const ExtendedState &start, Fact goal,
                 PartialAssignment cond, bool protect);
    ~ReachOneGoal();

    // Performs up to quantum expansions.
    Status step(long quantum);
    Status status() const { return status_; }
    const Plan &plan() const { return plan_; }
    Fact goal() const { return goal_; }
    long expansions() const { return expansions_; }
    long generated() const { return generated_; }
    int threshold() const { return threshold_; }
    int max_threshold() const { return max_threshold_; }
    std::size_t bytes() const;

private:
    struct Search;
    void start_threshold();

    const CompiledTask &task_;
    ExtendedState start_;
    Fact goal_;
    PartialAssignment cond_;
    std::vector<int> distance_;
    std::vector<bool> forbidden_;
    int threshold_ = 0;
    int max_threshold_ = 0;
    Status status_ = Status::Running;
    Plan plan_;
    long expansions_ = 0;
    long generated_ = 0;
    std::unique_ptr<Search> search_;
};

SearchResult reach_one_goal(const CompiledTask &task, const ExtendedState &start, Fact goal,
                            const PartialAssignment &cond, bool protect, Budget &budget);

struct FocusedOptions {
    long quantum = 1024;
    // Called after each committed one-goal plan with the phase (1 or 2),
    // the plan prefix so far and the goals achieved so far.
    std::function<void(int, const Plan &, const PartialAssignment &)> on_commit;
};

/*
  Phase 1 runs one reach-one-goal instance per open goal in round-robin
  quanta with goal protection; the first one to succeed commits its plan
  and its goal joins the protected set. If all instances of a round fail,
  phase 2 starts over from the initial state without protection.
*/
SearchResult focused_ibs(const CompiledTask &task, Budget &budget,
                         const FocusedOptions &options = {});

}  // namespace mptplan
