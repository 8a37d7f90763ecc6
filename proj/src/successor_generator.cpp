#include "mptplan/successor_generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mptplan {

SuccessorGenerator::SuccessorGenerator(const Task &task,
                                       const std::vector<int> &variable_order) {
    std::vector<int> ops(task.operators.size());
    std::iota(ops.begin(), ops.end(), 0);
    root_ = build(task, variable_order, 0, std::move(ops));
}

int SuccessorGenerator::build(const Task &task, const std::vector<int> &order,
                              std::size_t position, std::vector<int> ops) {
    // Skip variables no operator of this branch is conditioned on.
    while (position < order.size()) {
        int var = order[position];
        bool used = std::any_of(ops.begin(), ops.end(), [&](int op) {
            return task.operators[op].precondition.mentions(var);
        });
        if (used)
            break;
        ++position;
    }
    if (position == order.size()) {
        int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back(Generator{std::move(ops)});
        return id;
    }

    int var = order[position];
    int domain = task.variables[var].domain_size;
    std::vector<std::vector<int>> by_value(domain);
    std::vector<int> rest;
    for (int op : ops) {
        if (auto value = task.operators[op].precondition.value_of(var))
            by_value[*value].push_back(op);
        else
            rest.push_back(op);
    }
    Selector selector;
    selector.var = var;
    selector.children.assign(domain, kNoNode);
    for (int d = 0; d < domain; ++d)
        if (!by_value[d].empty())
            selector.children[d] = build(task, order, position + 1, std::move(by_value[d]));
    if (!rest.empty())
        selector.dont_care = build(task, order, position + 1, std::move(rest));
    int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back(std::move(selector));
    return id;
}

void SuccessorGenerator::applicable_operators(const ExtendedState &state,
                                              std::vector<int> &out) const {
    out.clear();
    if (root_ == kNoNode)
        return;
    std::vector<int> stack{root_};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        if (const auto *gen = std::get_if<Generator>(&nodes_[id])) {
            out.insert(out.end(), gen->operators.begin(), gen->operators.end());
            continue;
        }
        const auto &sel = std::get<Selector>(nodes_[id]);
        int child = sel.children[state[sel.var]];
        if (child != kNoNode)
            stack.push_back(child);
        if (sel.dont_care != kNoNode)
            stack.push_back(sel.dont_care);
    }
    std::sort(out.begin(), out.end());
}

std::vector<int> SuccessorGenerator::applicable_operators(const ExtendedState &state) const {
    std::vector<int> out;
    applicable_operators(state, out);
    return out;
}

SuccessorGenerator build_successor_generator(const Task &task,
                                             const std::vector<int> &variable_order) {
    std::vector<int> sorted = variable_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw std::invalid_argument("variable order is not a permutation");
    if (sorted.size() != task.variables.size())
        throw std::invalid_argument("variable order is not a permutation");
    return SuccessorGenerator(task, variable_order);
}

}  // namespace mptplan
