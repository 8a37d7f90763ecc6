#pragma once

#include "mptplan/task.hpp"

#include <variant>
#include <vector>

namespace mptplan {

/*
  Decision tree over operator preconditions. Selector nodes branch on one
  variable (one child per value plus a don't-care child); generator nodes list
  the operators whose preconditions match the path leading to them.
*/
class SuccessorGenerator {
public:
    static constexpr int kNoNode = -1;

    struct Selector {
        int var = 0;
        std::vector<int> children;  // per value; kNoNode if empty
        int dont_care = kNoNode;
    };
    struct Generator {
        std::vector<int> operators;  // ascending ids
    };
    using Node = std::variant<Selector, Generator>;

    SuccessorGenerator() = default;
    // Selection variables are considered in variable_order; variables on
    // which no operator of a branch has a precondition are skipped.
    SuccessorGenerator(const Task &task, const std::vector<int> &variable_order);

    // Operators whose precondition holds in state, ascending ids.
    std::vector<int> applicable_operators(const ExtendedState &state) const;
    void applicable_operators(const ExtendedState &state, std::vector<int> &out) const;

    int root() const { return root_; }
    const std::vector<Node> &nodes() const { return nodes_; }

private:
    int build(const Task &task, const std::vector<int> &order, std::size_t position,
              std::vector<int> ops);

    std::vector<Node> nodes_;
    int root_ = kNoNode;
};

// Convenience: lowest-level-first order of the pruned causal graph is the
// usual choice, but any permutation of the variables is accepted.
SuccessorGenerator build_successor_generator(const Task &task,
                                             const std::vector<int> &variable_order);

}  // namespace mptplan
