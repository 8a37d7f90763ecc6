#include "mptplan/easy_mpt.hpp"

#include "mptplan/causal_graph.hpp"
#include "mptplan/dtg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mptplan {

std::string easy_mpt_violation(const Task &task) {
    if (task.has_derived_variables())
        return "task has derived variables";
    for (const Operator &op : task.operators)
        for (const Effect &e : op.effects)
            if (!effect_can_fire(op, e))
                return "operator " + op.name + " has a contradictory effect condition";
    auto dtgs = build_dtgs(task);
    for (const auto &dtg : dtgs)
        if (!dtg.is_strongly_connected())
            return "DTG of " + task.variables[dtg.var].name + " is not strongly connected";
    if (!build_causal_graph(task, dtgs).is_acyclic())
        return "causal graph is cyclic";
    return {};
}

namespace {
class EasySolver {
public:
    explicit EasySolver(const Task &task)
        : task_(task), dtgs_(build_dtgs(task)), state_(task.init) {
        CausalGraph cg = build_causal_graph(task, dtgs_);
        topo_.assign(task.num_variables(), 0);
        auto components = cg.strongly_connected_components();
        for (std::size_t i = 0; i < components.size(); ++i)
            topo_[components[i].front()] = static_cast<int>(i);
    }

    Plan solve() {
        std::vector<Fact> goals(task_.goal.begin(), task_.goal.end());
        // Sinks (late in topological order) first.
        std::sort(goals.begin(), goals.end(),
                  [&](const Fact &a, const Fact &b) { return topo_[a.var] > topo_[b.var]; });
        for (const Fact &g : goals)
            achieve(g.var, g.value);
        if (!is_goal(task_, state_))
            throw std::logic_error("easy-MPT planner failed to reach the goal");
        return plan_;
    }

private:
    // Shortest DTG path (ignoring conditions) from the current value to target.
    std::vector<const Transition *> path(int var, int target) const {
        const DomainTransitionGraph &dtg = dtgs_[var];
        std::vector<const Transition *> reached_by(dtg.num_values(), nullptr);
        std::vector<bool> seen(dtg.num_values(), false);
        int source = state_[var];
        std::deque<int> queue{source};
        seen[source] = true;
        while (!queue.empty()) {
            int d = queue.front();
            queue.pop_front();
            for (const Transition &t : dtg.transitions[d])
                if (!seen[t.to]) {
                    seen[t.to] = true;
                    reached_by[t.to] = &t;
                    queue.push_back(t.to);
                }
        }
        if (!seen[target])
            throw std::logic_error("DTG path missing in a strongly connected DTG");
        std::vector<const Transition *> steps;
        for (int d = target; d != source; d = reached_by[d]->from)
            steps.push_back(reached_by[d]);
        std::reverse(steps.begin(), steps.end());
        return steps;
    }

    void achieve(int var, int value) {
        if (state_[var] == value)
            return;
        for (const Transition *t : path(var, value)) {
            std::vector<Fact> conditions(t->condition.begin(), t->condition.end());
            std::sort(conditions.begin(), conditions.end(), [&](const Fact &a, const Fact &b) {
                return topo_[a.var] > topo_[b.var];
            });
            for (const Fact &c : conditions)
                achieve(c.var, c.value);
            const Operator &op = task_.operators[t->origin_id];
            state_ = successor_state(task_, state_, op);
            plan_.steps.push_back(t->origin_id);
            if (state_[var] != t->to)
                throw std::logic_error("operator " + op.name + " did not make its transition");
        }
    }

    const Task &task_;
    std::vector<DomainTransitionGraph> dtgs_;
    std::vector<int> topo_;
    State state_;
    Plan plan_;
};
}  // namespace

Plan solve_easy_mpt(const Task &task) {
    std::string violation = easy_mpt_violation(task);
    if (!violation.empty())
        throw PreconditionViolated(violation);
    return EasySolver(task).solve();
}

}  // namespace mptplan
