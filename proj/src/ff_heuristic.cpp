#include "mptplan/ff_heuristic.hpp"

#include <algorithm>
#include <set>

namespace mptplan {

FFHeuristic::FFHeuristic(const CompiledTask &task) : task_(task) {
    const Task &t = task.task;
    int offset = 0;
    for (const Variable &v : t.variables) {
        fact_offset_.push_back(offset);
        offset += v.domain_size;
    }
    auto facts_of = [&](const PartialAssignment &pa) {
        std::vector<int> ids;
        for (const Fact &f : pa)
            ids.push_back(fact(f.var, f.value));
        return ids;
    };
    for (std::size_t i = 0; i < t.operators.size(); ++i) {
        const Operator &op = t.operators[i];
        for (const Effect &e : op.effects) {
            auto label = merge(op.precondition, e.condition);
            if (!label)
                continue;
            actions_.push_back({facts_of(*label), fact(e.var, e.value), static_cast<int>(i)});
        }
    }
    for (const Axiom &a : t.axioms)
        actions_.push_back({facts_of(a.body), fact(a.head_var, a.head_value), -1});
    for (const DomainTransitionGraph &dtg : task.extended_dtgs) {
        if (!dtg.extended)
            continue;
        // Synthetic arcs into the undefined value carry the same condition
        // from every source value, so one action per condition suffices.
        std::set<PartialAssignment> seen;
        for (const auto &out : dtg.transitions)
            for (const Transition &tr : out)
                if (tr.origin == TransitionOrigin::Synthetic && seen.insert(tr.condition).second)
                    actions_.push_back(
                        {facts_of(tr.condition), fact(dtg.var, kUndefinedValue), -1});
    }

    precondition_of_.resize(offset);
    for (std::size_t a = 0; a < actions_.size(); ++a) {
        if (actions_[a].pre.empty())
            empty_pre_actions_.push_back(static_cast<int>(a));
        for (int f : actions_[a].pre)
            precondition_of_[f].push_back(static_cast<int>(a));
    }
    layer_.resize(offset);
    achiever_.resize(offset);
    counter_.resize(actions_.size());
}

HeuristicResult FFHeuristic::evaluate(const ExtendedState &state) {
    const Task &t = task_.task;
    plan_.steps.clear();
    std::fill(layer_.begin(), layer_.end(), -1);
    std::fill(achiever_.begin(), achiever_.end(), -1);
    for (std::size_t a = 0; a < actions_.size(); ++a)
        counter_[a] = static_cast<int>(actions_[a].pre.size());

    std::vector<int> goal_facts;
    for (const Fact &g : t.goal)
        goal_facts.push_back(fact(g.var, g.value));
    auto goal_reached = [&] {
        return std::all_of(goal_facts.begin(), goal_facts.end(),
                           [&](int f) { return layer_[f] >= 0; });
    };

    // Facts reached in the current layer whose consequences are still pending.
    std::vector<int> frontier;
    std::vector<int> enabled_ops(empty_pre_actions_);  // operator actions ready to fire
    auto reach = [&](int f, int layer, int achiever) {
        if (layer_[f] >= 0)
            return;
        layer_[f] = layer;
        achiever_[f] = achiever;
        frontier.push_back(f);
    };
    for (int v = 0; v < t.num_variables(); ++v)
        reach(fact(v, state[v]), 0, -1);

    int layer = 0;
    std::vector<int> free_ready;
    for (int a : empty_pre_actions_)
        if (actions_[a].op < 0)
            free_ready.push_back(a);
    enabled_ops.erase(std::remove_if(enabled_ops.begin(), enabled_ops.end(),
                                     [&](int a) { return actions_[a].op < 0; }),
                      enabled_ops.end());
    while (true) {
        // Saturate the layer under free actions.
        std::size_t next_fact = 0;
        std::size_t next_free = 0;
        while (next_fact < frontier.size() || next_free < free_ready.size()) {
            if (next_free < free_ready.size()) {
                const Action &a = actions_[free_ready[next_free]];
                reach(a.effect, layer, free_ready[next_free]);
                ++next_free;
                continue;
            }
            int f = frontier[next_fact++];
            for (int a : precondition_of_[f])
                if (--counter_[a] == 0) {
                    if (actions_[a].op < 0)
                        free_ready.push_back(a);
                    else
                        enabled_ops.push_back(a);
                }
        }
        frontier.clear();
        free_ready.clear();
        if (goal_reached())
            break;
        std::sort(enabled_ops.begin(), enabled_ops.end());
        bool progress = false;
        for (int a : enabled_ops)
            if (layer_[actions_[a].effect] < 0) {
                reach(actions_[a].effect, layer + 1, a);
                progress = true;
            }
        enabled_ops.clear();
        if (!progress)
            return {kInfinity, {}};
        ++layer;
    }

    // Backchain from the goal over first achievers.
    std::set<std::pair<int, int>> steps;  // (layer, operator)
    std::vector<bool> marked(layer_.size(), false);
    std::vector<int> open = goal_facts;
    while (!open.empty()) {
        int f = open.back();
        open.pop_back();
        if (marked[f])
            continue;
        marked[f] = true;
        int a = achiever_[f];
        if (a < 0)
            continue;
        const Action &action = actions_[a];
        if (action.op >= 0)
            steps.insert({layer_[f] - 1, action.op});
        for (int p : action.pre)
            open.push_back(p);
    }

    HeuristicResult result;
    for (const auto &[l, op] : steps) {
        plan_.steps.push_back(op);
        if (t.operators[op].precondition.holds_in(state))
            result.preferred.push_back(op);
    }
    result.value = static_cast<int>(plan_.steps.size());
    std::sort(result.preferred.begin(), result.preferred.end());
    result.preferred.erase(std::unique(result.preferred.begin(), result.preferred.end()),
                           result.preferred.end());
    return result;
}

}  // namespace mptplan
