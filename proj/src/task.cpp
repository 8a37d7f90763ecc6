#include "mptplan/task.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mptplan {

SyntaxError::SyntaxError(int line, const std::string &message)
    : MptError("line " + std::to_string(line) + ": " + message), line_(line) {
}

PartialAssignment::PartialAssignment(std::vector<Fact> facts)
    : facts_(std::move(facts)) {
    std::sort(facts_.begin(), facts_.end());
    for (std::size_t i = 1; i < facts_.size(); ++i) {
        if (facts_[i].var == facts_[i - 1].var)
            throw SemanticError("variable " + std::to_string(facts_[i].var) +
                                " occurs twice in a partial assignment");
    }
}

std::optional<int> PartialAssignment::value_of(int var) const {
    auto it = std::lower_bound(facts_.begin(), facts_.end(), Fact{var, 0},
                               [](const Fact &a, const Fact &b) { return a.var < b.var; });
    if (it != facts_.end() && it->var == var)
        return it->value;
    return std::nullopt;
}

bool PartialAssignment::is_subset_of(const PartialAssignment &other) const {
    return std::includes(other.facts_.begin(), other.facts_.end(), facts_.begin(),
                         facts_.end());
}

PartialAssignment PartialAssignment::without(int var) const {
    std::vector<Fact> rest;
    rest.reserve(facts_.size());
    for (const Fact &f : facts_)
        if (f.var != var)
            rest.push_back(f);
    return PartialAssignment(std::move(rest));
}

std::optional<PartialAssignment> merge(const PartialAssignment &a,
                                       const PartialAssignment &b) {
    std::vector<Fact> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->var < j->var)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->var < i->var) {
            out.push_back(*j++);
        } else {
            if (i->value != j->value)
                return std::nullopt;
            out.push_back(*i);
            ++i;
            ++j;
        }
    }
    return PartialAssignment(std::move(out));
}

std::string Variable::value_name(int value) const {
    if (value >= 0 && static_cast<std::size_t>(value) < value_names.size())
        return value_names[value];
    return std::to_string(value);
}

int Task::num_layers() const {
    int layers = 0;
    for (const Variable &v : variables)
        if (v.is_derived())
            layers = std::max(layers, v.axiom_layer + 1);
    return layers;
}

std::vector<std::vector<int>> Task::axioms_by_layer() const {
    std::vector<std::vector<int>> layers(num_layers());
    for (std::size_t i = 0; i < axioms.size(); ++i)
        layers[axiom_layer(axioms[i])].push_back(static_cast<int>(i));
    return layers;
}

bool Task::has_derived_variables() const {
    return std::any_of(variables.begin(), variables.end(),
                       [](const Variable &v) { return v.is_derived(); });
}

State Task::make_state(std::vector<int> values) const {
    for (std::size_t v = 0; v < values.size() && v < variables.size(); ++v)
        if (variables[v].is_derived())
            values[v] = kUndefinedValue;
    return State{std::move(values)};
}

State Task::reduce(const ExtendedState &state) const {
    return make_state(state.values);
}

namespace {
void check_fact(const Task &task, const Fact &f, const std::string &where) {
    if (f.var < 0 || f.var >= task.num_variables())
        throw SemanticError(where + ": variable index " + std::to_string(f.var) +
                            " out of range");
    const Variable &var = task.variables[f.var];
    if (f.value < 0 || f.value >= var.domain_size)
        throw SemanticError(where + ": value " + std::to_string(f.value) +
                            " out of range for variable " + var.name);
}

void check_assignment(const Task &task, const PartialAssignment &pa,
                      const std::string &where) {
    for (const Fact &f : pa)
        check_fact(task, f, where);
}

bool valid_name(const std::string &name) {
    if (name.empty())
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return c > ' ' && c < 127 && c != '#';
    });
}
}  // namespace

void Task::validate() const {
    std::set<int> layers;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const Variable &v = variables[i];
        std::string where = "variable " + std::to_string(i);
        if (!valid_name(v.name))
            throw SemanticError(where + ": invalid name '" + v.name + "'");
        if (v.domain_size < 1)
            throw SemanticError(where + ": empty domain");
        if (v.is_derived()) {
            if (v.axiom_layer < 0)
                throw SemanticError(where + ": derived variable without layer");
            layers.insert(v.axiom_layer);
        } else if (v.axiom_layer != -1) {
            throw SemanticError(where + ": fluent with an axiom layer");
        }
        if (!v.value_names.empty() &&
            v.value_names.size() != static_cast<std::size_t>(v.domain_size))
            throw SemanticError(where + ": value name count does not match domain");
        for (const std::string &n : v.value_names)
            if (!valid_name(n))
                throw SemanticError(where + ": invalid value name '" + n + "'");
    }
    int expected = 0;
    for (int layer : layers) {
        if (layer != expected)
            throw SemanticError("non-contiguous axiom layers: layer " +
                                std::to_string(expected) + " is missing");
        ++expected;
    }

    if (init.size() != variables.size())
        throw SemanticError("initial state has wrong width");
    for (std::size_t v = 0; v < variables.size(); ++v) {
        if (variables[v].is_derived()) {
            if (init[v] != kUndefinedValue)
                throw SemanticError("initial state assigns derived variable " +
                                    variables[v].name);
        } else {
            check_fact(*this, Fact{static_cast<int>(v), init[v]}, "initial state");
        }
    }
    check_assignment(*this, goal, "goal");

    // Layering property: per layer, the value each head variable is derived to.
    std::map<int, int> head_value;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom &a = axioms[i];
        std::string where = "axiom " + std::to_string(i);
        check_fact(*this, Fact{a.head_var, a.head_value}, where);
        check_assignment(*this, a.body, where);
        if (!variables[a.head_var].is_derived())
            throw SemanticError(where + ": head variable is not derived");
        if (a.head_value == kUndefinedValue)
            throw SemanticError(where + ": axiom derives the undefined value");
        auto [it, inserted] = head_value.emplace(a.head_var, a.head_value);
        if (!inserted && it->second != a.head_value)
            throw SemanticError(where + ": layering property violated (variable " +
                                variables[a.head_var].name +
                                " derived to two values)");
    }
    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom &a = axioms[i];
        int layer = axiom_layer(a);
        for (const Fact &f : a.body) {
            const Variable &bv = variables[f.var];
            if (!bv.is_derived())
                continue;
            if (bv.axiom_layer > layer)
                throw SemanticError("axiom " + std::to_string(i) +
                                    ": body refers to a higher axiom layer");
            if (bv.axiom_layer == layer) {
                auto it = head_value.find(f.var);
                if (it != head_value.end() && it->second != f.value)
                    throw SemanticError("axiom " + std::to_string(i) +
                                        ": layering property violated (variable " +
                                        bv.name + " used with a different value)");
            }
        }
    }

    std::set<std::string> names;
    for (std::size_t i = 0; i < operators.size(); ++i) {
        const Operator &op = operators[i];
        std::string where = "operator " + op.name;
        if (!valid_name(op.name))
            throw SemanticError("operator " + std::to_string(i) + ": invalid name");
        if (!names.insert(op.name).second)
            throw SemanticError("duplicate operator name " + op.name);
        check_assignment(*this, op.precondition, where);
        for (const Effect &e : op.effects) {
            check_fact(*this, Fact{e.var, e.value}, where);
            check_assignment(*this, e.condition, where);
            if (variables[e.var].is_derived())
                throw SemanticError(where + ": effect on derived variable " +
                                    variables[e.var].name);
        }
    }
}

namespace {
ExtendedState initial_extension(const Task &task, const State &state) {
    ExtendedState ext{state.values};
    for (std::size_t v = 0; v < task.variables.size(); ++v)
        if (task.variables[v].is_derived())
            ext.values[v] = kUndefinedValue;
    return ext;
}

bool can_fire(const Axiom &a, const ExtendedState &s) {
    return s[a.head_var] != a.head_value && a.body.holds_in(s);
}
}  // namespace

ExtendedState evaluate_axioms_reference(const Task &task, const State &state) {
    ExtendedState ext = initial_extension(task, state);
    for (const std::vector<int> &layer : task.axioms_by_layer()) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int id : layer) {
                const Axiom &a = task.axioms[id];
                if (can_fire(a, ext)) {
                    ext.values[a.head_var] = a.head_value;
                    changed = true;
                    break;
                }
            }
        }
    }
    return ext;
}

ExtendedState evaluate_axioms_reference(const Task &task, const State &state,
                                        std::mt19937 &rng) {
    ExtendedState ext = initial_extension(task, state);
    for (const std::vector<int> &layer : task.axioms_by_layer()) {
        while (true) {
            std::vector<int> ready;
            for (int id : layer)
                if (can_fire(task.axioms[id], ext))
                    ready.push_back(id);
            if (ready.empty())
                break;
            std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
            const Axiom &a = task.axioms[ready[pick(rng)]];
            ext.values[a.head_var] = a.head_value;
        }
    }
    return ext;
}

bool is_applicable(const Operator &op, const ExtendedState &state) {
    return op.precondition.holds_in(state);
}

State successor_state(const Task &task, const ExtendedState &state,
                      const Operator &op) {
    if (!is_applicable(op, state))
        throw InapplicableOperator("operator " + op.name + " is not applicable");
    State next = task.reduce(state);
    std::vector<int> assigned(task.variables.size(), -1);
    for (const Effect &e : op.effects) {
        if (!e.condition.holds_in(state))
            continue;
        if (assigned[e.var] != -1 && assigned[e.var] != e.value)
            throw ConflictingEffects("operator " + op.name +
                                     " assigns two values to variable " +
                                     task.variables[e.var].name);
        assigned[e.var] = e.value;
        next.values[e.var] = e.value;
    }
    return next;
}

State successor_state(const Task &task, const State &state, const Operator &op) {
    return successor_state(task, evaluate_axioms_reference(task, state), op);
}

bool is_goal(const Task &task, const ExtendedState &state) {
    return task.goal.holds_in(state);
}

bool is_goal(const Task &task, const State &state) {
    return is_goal(task, evaluate_axioms_reference(task, state));
}

std::string to_string(PlanFailure failure) {
    switch (failure) {
    case PlanFailure::None:
        return "valid";
    case PlanFailure::UnknownOperator:
        return "unknown operator";
    case PlanFailure::InapplicableOperator:
        return "inapplicable operator";
    case PlanFailure::ConflictingEffects:
        return "conflicting effects";
    case PlanFailure::GoalNotReached:
        return "goal not reached";
    }
    return "?";
}

Verdict validate_plan(const Task &task, const Plan &plan) {
    State current = task.init;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        int id = plan.steps[i];
        std::size_t step = i + 1;
        if (id < 0 || static_cast<std::size_t>(id) >= task.operators.size())
            return {PlanFailure::UnknownOperator, step,
                    "step " + std::to_string(step) + ": unknown operator id " +
                        std::to_string(id)};
        const Operator &op = task.operators[id];
        try {
            current = successor_state(task, current, op);
        } catch (const InapplicableOperator &) {
            return {PlanFailure::InapplicableOperator, step,
                    "step " + std::to_string(step) + ": operator " + op.name +
                        " is not applicable"};
        } catch (const ConflictingEffects &e) {
            return {PlanFailure::ConflictingEffects, step,
                    "step " + std::to_string(step) + ": " + e.what()};
        }
    }
    if (!is_goal(task, current))
        return {PlanFailure::GoalNotReached, plan.steps.size(),
                "goal not satisfied after step " + std::to_string(plan.steps.size())};
    return {};
}

int find_operator(const Task &task, const std::string &name) {
    for (std::size_t i = 0; i < task.operators.size(); ++i)
        if (task.operators[i].name == name)
            return static_cast<int>(i);
    return -1;
}

}  // namespace mptplan
