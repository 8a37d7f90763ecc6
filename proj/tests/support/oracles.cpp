#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace mptplan::testing {

ExtendedState saturate_axioms(const Task &task, const State &state) {
    std::vector<int> values = state.values;
    int layers = 0;
    for (const Variable &v : task.variables)
        if (v.is_derived()) {
            values[&v - task.variables.data()] = kUndefinedValue;
            layers = std::max(layers, v.axiom_layer + 1);
        }
    for (int layer = 0; layer < layers; ++layer) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Axiom &a : task.axioms) {
                if (task.variables[a.head_var].axiom_layer != layer)
                    continue;
                bool body = true;
                for (const Fact &f : a.body)
                    body = body && values[f.var] == f.value;
                if (body && values[a.head_var] != a.head_value) {
                    values[a.head_var] = a.head_value;
                    changed = true;
                }
            }
        }
    }
    return ExtendedState{values};
}

std::optional<State> naive_successor(const Task &task, const State &state, const Operator &op) {
    ExtendedState ext = saturate_axioms(task, state);
    for (const Fact &f : op.precondition)
        if (ext.values[f.var] != f.value)
            return std::nullopt;
    std::vector<int> next = state.values;
    std::map<int, int> assigned;
    for (const Effect &e : op.effects) {
        bool fires = true;
        for (const Fact &f : e.condition)
            fires = fires && ext.values[f.var] == f.value;
        if (!fires)
            continue;
        auto [it, fresh] = assigned.emplace(e.var, e.value);
        if (!fresh && it->second != e.value)
            return std::nullopt;
        next[e.var] = e.value;
    }
    return State{next};
}

std::vector<int> naive_applicable(const Task &task, const ExtendedState &state) {
    std::vector<int> ops;
    for (std::size_t i = 0; i < task.operators.size(); ++i) {
        bool ok = true;
        for (const Fact &f : task.operators[i].precondition)
            ok = ok && state.values[f.var] == f.value;
        if (ok)
            ops.push_back(static_cast<int>(i));
    }
    return ops;
}

StateSpace explore(const Task &task, std::size_t limit, const std::optional<State> &start) {
    StateSpace space;
    State first = start ? *start : task.init;
    space.states.push_back(first);
    space.index[first.values] = 0;
    space.distance.push_back(0);
    for (std::size_t i = 0; i < space.states.size(); ++i) {
        State s = space.states[i];
        ExtendedState ext = saturate_axioms(task, s);
        bool goal = true;
        for (const Fact &g : task.goal)
            goal = goal && ext.values[g.var] == g.value;
        if (goal && space.goal_distance < 0)
            space.goal_distance = space.distance[i];
        for (const Operator &op : task.operators) {
            auto next = naive_successor(task, s, op);
            if (!next || space.index.count(next->values))
                continue;
            if (space.states.size() >= limit) {
                space.complete = false;
                return space;
            }
            space.index[next->values] = static_cast<int>(space.states.size());
            space.states.push_back(*next);
            space.distance.push_back(space.distance[i] + 1);
        }
    }
    return space;
}

namespace {
using ValueSets = std::vector<std::set<int>>;

bool contains_all(const ValueSets &sets, const PartialAssignment &pa) {
    for (const Fact &f : pa)
        if (!sets[f.var].count(f.value))
            return false;
    return true;
}

// Can the undefined value of var be chosen, i.e. is there a selection from the
// sets that falsifies the body of every axiom for var not mentioning var?
bool can_be_undefined(const Task &task, const ValueSets &sets, int var) {
    std::vector<const Axiom *> axioms;
    std::vector<int> vars;
    for (const Axiom &a : task.axioms)
        if (a.head_var == var && !a.body.mentions(var)) {
            axioms.push_back(&a);
            for (const Fact &f : a.body)
                if (std::find(vars.begin(), vars.end(), f.var) == vars.end())
                    vars.push_back(f.var);
        }
    std::vector<int> choice(task.variables.size(), -1);
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == vars.size()) {
            for (const Axiom *a : axioms) {
                bool body = true;
                for (const Fact &f : a->body)
                    body = body && choice[f.var] == f.value;
                if (body)
                    return false;
            }
            return true;
        }
        for (int value : sets[vars[i]]) {
            choice[vars[i]] = value;
            if (search(i + 1))
                return true;
        }
        return false;
    };
    return search(0);
}

void close(const Task &task, ValueSets &sets) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Axiom &a : task.axioms)
            if (contains_all(sets, a.body) && sets[a.head_var].insert(a.head_value).second)
                changed = true;
        for (int v = 0; v < task.num_variables(); ++v)
            if (task.variables[v].is_derived() && !sets[v].count(kUndefinedValue) &&
                can_be_undefined(task, sets, v)) {
                sets[v].insert(kUndefinedValue);
                changed = true;
            }
    }
}
}  // namespace

bool relaxed_plan_reaches_goal(const Task &task, const ExtendedState &state,
                               const std::vector<int> &plan) {
    ValueSets sets(task.variables.size());
    for (std::size_t v = 0; v < sets.size(); ++v)
        sets[v].insert(state.values[v]);
    close(task, sets);
    for (int id : plan) {
        const Operator &op = task.operators[id];
        if (!contains_all(sets, op.precondition))
            return false;
        std::vector<Fact> added;
        for (const Effect &e : op.effects)
            if (contains_all(sets, e.condition))
                added.push_back({e.var, e.value});
        for (const Fact &f : added)
            sets[f.var].insert(f.value);
        close(task, sets);
    }
    return contains_all(sets, task.goal);
}

}  // namespace mptplan::testing
