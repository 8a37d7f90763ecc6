#include "mptplan/axiom_evaluator.hpp"

namespace mptplan {

AxiomEvaluator::AxiomEvaluator(const Task &task) {
    int offset = 0;
    for (const Variable &v : task.variables) {
        fact_offset_.push_back(offset);
        offset += v.domain_size;
    }
    for (int v = 0; v < task.num_variables(); ++v)
        if (task.variables[v].is_derived())
            derived_vars_.push_back(v);

    layers_.resize(task.num_layers());
    for (Layer &layer : layers_)
        layer.by_fact.resize(offset);
    for (std::size_t i = 0; i < task.axioms.size(); ++i) {
        const Axiom &a = task.axioms[i];
        int id = static_cast<int>(i);
        body_size_.push_back(static_cast<int>(a.body.size()));
        head_var_.push_back(a.head_var);
        head_value_.push_back(a.head_value);
        Layer &layer = layers_[task.axiom_layer(a)];
        layer.axioms.push_back(id);
        for (const Fact &f : a.body)
            layer.by_fact[fact_offset_[f.var] + f.value].push_back(id);
    }
}

const std::vector<int> &AxiomEvaluator::axioms_with(int layer, int var, int value) const {
    return layers_[layer].by_fact[fact_offset_[var] + value];
}

void AxiomEvaluator::evaluate_in_place(std::vector<int> &values, Scratch &scratch) const {
    for (int v : derived_vars_)
        values[v] = kUndefinedValue;
    if (layers_.empty())
        return;
    scratch.counters.resize(body_size_.size());
    for (const Layer &layer : layers_) {
        scratch.queue.clear();
        for (int a : layer.axioms)
            scratch.counters[a] = body_size_[a];
        // Count the body facts that already hold.
        for (std::size_t v = 0; v < values.size(); ++v)
            for (int a : layer.by_fact[fact_offset_[v] + values[v]])
                --scratch.counters[a];
        for (int a : layer.axioms)
            if (scratch.counters[a] == 0)
                scratch.queue.push_back(a);
        for (std::size_t next = 0; next < scratch.queue.size(); ++next) {
            int a = scratch.queue[next];
            int var = head_var_[a];
            int value = head_value_[a];
            if (values[var] == value)
                continue;
            values[var] = value;
            for (int b : layer.by_fact[fact_offset_[var] + value])
                if (--scratch.counters[b] == 0)
                    scratch.queue.push_back(b);
        }
    }
}

ExtendedState AxiomEvaluator::evaluate(const State &state, Scratch &scratch) const {
    ExtendedState ext{state.values};
    evaluate_in_place(ext.values, scratch);
    return ext;
}

ExtendedState AxiomEvaluator::evaluate(const State &state) const {
    Scratch scratch;
    return evaluate(state, scratch);
}

}  // namespace mptplan
