#pragma once

#include "mptplan/task.hpp"

#include <vector>

namespace mptplan {

/*
  Counter-based marking algorithm for layered axioms. For every layer, an
  index maps each variable/value pair to the axioms of that layer whose body
  contains it; each axiom has a counter of body facts not yet derived, and
  axioms whose counter drops to zero are queued for firing.
*/
class AxiomEvaluator {
public:
    // Per-evaluation working memory; one per concurrent caller.
    struct Scratch {
        std::vector<int> counters;
        std::vector<int> queue;
    };

    AxiomEvaluator() = default;
    explicit AxiomEvaluator(const Task &task);

    ExtendedState evaluate(const State &state) const;
    ExtendedState evaluate(const State &state, Scratch &scratch) const;
    // Recomputes the derived slots of state in place.
    void evaluate_in_place(std::vector<int> &values, Scratch &scratch) const;

    int num_layers() const { return static_cast<int>(layers_.size()); }
    // Axioms of a layer whose body contains var=value.
    const std::vector<int> &axioms_with(int layer, int var, int value) const;

private:
    struct Layer {
        std::vector<int> axioms;
        std::vector<std::vector<int>> by_fact;  // indexed by fact offset
    };

    std::vector<int> fact_offset_;
    std::vector<int> derived_vars_;
    std::vector<int> body_size_;
    std::vector<int> head_var_;
    std::vector<int> head_value_;
    std::vector<Layer> layers_;
};

}  // namespace mptplan
