#include "mptplan/compiled_task.hpp"

namespace mptplan {

CompiledTask compile_task(Task task) {
    CompiledTask ct;
    ct.task = std::move(task);
    const Task &t = ct.task;
    ct.dtgs = build_dtgs(t);
    ct.polarity = compute_usage_polarity(t);
    ct.extended_dtgs = ct.dtgs;
    for (int v = 0; v < t.num_variables(); ++v)
        if (t.variables[v].is_derived() && ct.polarity[v].negative)
            ct.extended_dtgs[v] = build_extended_dtg(t, v);
    ct.causal_graph = build_causal_graph(t, ct.dtgs);
    ct.pruned_causal_graph = prune_causal_graph(ct.causal_graph);
    ct.pruned_dtgs = prune_dtgs(ct.extended_dtgs, ct.pruned_causal_graph);
    ct.successor_generator = SuccessorGenerator(t, ct.pruned_causal_graph.order());
    ct.axiom_evaluator = AxiomEvaluator(t);
    return ct;
}

}  // namespace mptplan
