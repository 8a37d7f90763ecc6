#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mptplan {

// Errors ---------------------------------------------------------------------

class MptError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public MptError {
public:
    SyntaxError(int line, const std::string &message);
    int line() const { return line_; }

private:
    int line_;
};

class SemanticError : public MptError {
public:
    using MptError::MptError;
};

class InapplicableOperator : public MptError {
public:
    using MptError::MptError;
};

class ConflictingEffects : public MptError {
public:
    using MptError::MptError;
};

// Domain types ---------------------------------------------------------------

// The undefined value of every derived variable.
inline constexpr int kUndefinedValue = 0;

struct Fact {
    int var = 0;
    int value = 0;

    friend auto operator<=>(const Fact &, const Fact &) = default;
};

/*
  A set of variable/value pairs with at most one pair per variable, kept
  sorted by variable id. Used for preconditions, effect conditions, axiom
  bodies and the goal.
*/
class PartialAssignment {
public:
    PartialAssignment() = default;
    // Throws SemanticError if a variable occurs twice.
    PartialAssignment(std::vector<Fact> facts);
    PartialAssignment(std::initializer_list<Fact> facts)
        : PartialAssignment(std::vector<Fact>(facts)) {}

    const std::vector<Fact> &facts() const { return facts_; }
    std::size_t size() const { return facts_.size(); }
    bool empty() const { return facts_.empty(); }
    auto begin() const { return facts_.begin(); }
    auto end() const { return facts_.end(); }

    std::optional<int> value_of(int var) const;
    bool mentions(int var) const { return value_of(var).has_value(); }

    // True if every pair also occurs in other.
    bool is_subset_of(const PartialAssignment &other) const;
    PartialAssignment without(int var) const;

    template <typename Values>
    bool holds_in(const Values &values) const {
        for (const Fact &f : facts_)
            if (values[f.var] != f.value)
                return false;
        return true;
    }

    friend bool operator==(const PartialAssignment &, const PartialAssignment &) = default;
    friend auto operator<=>(const PartialAssignment &, const PartialAssignment &) = default;

private:
    std::vector<Fact> facts_;
};

// Merges two assignments. Returns nullopt if they disagree on some variable.
std::optional<PartialAssignment> merge(const PartialAssignment &a,
                                       const PartialAssignment &b);

enum class VariableKind { Fluent, Derived };

struct Variable {
    std::string name;
    int domain_size = 1;
    VariableKind kind = VariableKind::Fluent;
    int axiom_layer = -1;  // derived variables only
    // Optional human-readable value names; empty or exactly domain_size entries.
    std::vector<std::string> value_names;

    bool is_derived() const { return kind == VariableKind::Derived; }
    std::string value_name(int value) const;

    friend bool operator==(const Variable &, const Variable &) = default;
};

/*
  A reduced state. It has one slot per task variable so that it can be indexed
  by variable id; the slots of derived variables are always kUndefinedValue and
  carry no information.
*/
struct State {
    std::vector<int> values;

    int operator[](std::size_t var) const { return values[var]; }
    std::size_t size() const { return values.size(); }
    friend bool operator==(const State &, const State &) = default;
};

// A state together with the values of all derived variables.
struct ExtendedState {
    std::vector<int> values;

    int operator[](std::size_t var) const { return values[var]; }
    std::size_t size() const { return values.size(); }
    friend bool operator==(const ExtendedState &, const ExtendedState &) = default;
};

struct Axiom {
    PartialAssignment body;
    int head_var = 0;
    int head_value = 0;

    friend bool operator==(const Axiom &, const Axiom &) = default;
};

struct Effect {
    PartialAssignment condition;
    int var = 0;
    int value = 0;

    friend bool operator==(const Effect &, const Effect &) = default;
};

struct Operator {
    std::string name;
    PartialAssignment precondition;
    std::vector<Effect> effects;

    friend bool operator==(const Operator &, const Operator &) = default;
};

struct Task {
    std::vector<Variable> variables;
    State init;
    PartialAssignment goal;
    std::vector<Axiom> axioms;
    std::vector<Operator> operators;

    int num_variables() const { return static_cast<int>(variables.size()); }
    int num_layers() const;
    int axiom_layer(const Axiom &axiom) const {
        return variables[axiom.head_var].axiom_layer;
    }
    // Axiom ids grouped by layer, each group in ascending id order.
    std::vector<std::vector<int>> axioms_by_layer() const;
    bool has_derived_variables() const;

    // Builds a reduced state from one value per variable; derived slots are reset.
    State make_state(std::vector<int> values) const;
    State reduce(const ExtendedState &state) const;

    // Throws SemanticError on the first violated invariant.
    void validate() const;

    friend bool operator==(const Task &, const Task &) = default;
};

struct Plan {
    std::vector<int> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
    friend bool operator==(const Plan &, const Plan &) = default;
};

// Reference semantics -----------------------------------------------------------

/*
  Naive layer-by-layer fixpoint: all derived variables start at the undefined
  value, then each layer repeatedly fires the lowest-numbered axiom whose body
  holds and whose head differs from the current value.
*/
ExtendedState evaluate_axioms_reference(const Task &task, const State &state);

// Same fixpoint, but fires the applicable axioms in an order drawn from rng.
ExtendedState evaluate_axioms_reference(const Task &task, const State &state,
                                        std::mt19937 &rng);

bool is_applicable(const Operator &op, const ExtendedState &state);

// Throws InapplicableOperator or ConflictingEffects.
State successor_state(const Task &task, const State &state, const Operator &op);
State successor_state(const Task &task, const ExtendedState &state,
                      const Operator &op);

bool is_goal(const Task &task, const State &state);
bool is_goal(const Task &task, const ExtendedState &state);

// Plan validation ----------------------------------------------------------------

enum class PlanFailure { None, UnknownOperator, InapplicableOperator, ConflictingEffects, GoalNotReached };

struct Verdict {
    PlanFailure failure = PlanFailure::None;
    // 1-based index of the failing step; for GoalNotReached the plan length.
    std::size_t step = 0;
    std::string message;

    bool valid() const { return failure == PlanFailure::None; }
};

Verdict validate_plan(const Task &task, const Plan &plan);

std::string to_string(PlanFailure failure);

// Looks an operator up by name; returns -1 if absent.
int find_operator(const Task &task, const std::string &name);

}  // namespace mptplan
