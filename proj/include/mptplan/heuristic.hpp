#pragma once

#include "mptplan/compiled_task.hpp"
#include "mptplan/task.hpp"

#include <limits>
#include <string>
#include <vector>

namespace mptplan {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct HeuristicResult {
    int value = 0;
    std::vector<int> preferred;  // ascending operator ids

    bool is_dead_end() const { return value == kInfinity; }
};

class Heuristic {
public:
    virtual ~Heuristic() = default;
    virtual HeuristicResult evaluate(const ExtendedState &state) = 0;
    virtual std::string name() const = 0;
    // May an infinite value be trusted as a proof that no plan exists?
    virtual bool dead_ends_are_reliable() const = 0;
};

// h = 0 everywhere; turns greedy search into breadth-first search.
class ConstantHeuristic : public Heuristic {
public:
    explicit ConstantHeuristic(int value = 0) : value_(value) {}
    HeuristicResult evaluate(const ExtendedState &) override { return {value_, {}}; }
    std::string name() const override { return "const"; }
    bool dead_ends_are_reliable() const override { return false; }

private:
    int value_;
};

// Saturating addition on {0, 1, ...} ∪ {kInfinity}.
inline int add_costs(int a, int b) {
    if (a == kInfinity || b == kInfinity)
        return kInfinity;
    long long sum = static_cast<long long>(a) + b;
    return sum >= kInfinity ? kInfinity : static_cast<int>(sum);
}

}  // namespace mptplan
