#pragma once

#include "mptplan/heuristic.hpp"

#include <deque>
#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace mptplan {

struct Transition;

// Priority queue over small non-negative integer keys, FIFO among equal keys.
// Keys must never be smaller than the last popped key.
class BucketQueue {
public:
    void push(int key, int value);
    std::pair<int, int> pop();
    bool empty() const { return size_ == 0; }
    void clear();

private:
    static constexpr int kMaxBuckets = 1 << 16;
    std::vector<std::vector<int>> buckets_;
    std::multimap<int, int> overflow_;
    std::size_t current_ = 0;
    std::size_t position_ = 0;
    std::size_t size_ = 0;
    std::size_t in_buckets_ = 0;
    std::size_t used_ = 0;
};

struct CGOptions {
    bool global_cache = true;
    // Variables with at most this many pruned causal graph ancestors share
    // cost tables across states.
    int global_cache_max_ancestors = 5;
};

class CausalGraphHeuristic : public Heuristic {
public:
    // cost_var(source, d) for every d, plus the transition that reached each d.
    struct CostTable {
        int var = 0;
        int source = 0;
        std::vector<int> cost;
        std::vector<const Transition *> reached_by;
    };

    explicit CausalGraphHeuristic(const CompiledTask &task, CGOptions options = {});

    HeuristicResult evaluate(const ExtendedState &state) override;
    std::string name() const override { return "cg"; }
    bool dead_ends_are_reliable() const override { return false; }

    const CostTable &cost_table(const ExtendedState &state, int var, int source);
    int cost(const ExtendedState &state, int var, int from, int to);

    long global_cache_hits() const { return global_hits_; }
    std::size_t global_cache_size() const { return global_cache_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<int> &key) const;
    };

    void begin_state();
    const CostTable &compute(const ExtendedState &state, int var, int source);
    CostTable sweep(const ExtendedState &state, int var, int source);
    void collect_helpful(const ExtendedState &state, int var, int from, int to,
                         std::set<std::tuple<int, int, int>> &visited,
                         std::vector<int> &helpful);

    const CompiledTask &task_;
    CGOptions options_;
    std::vector<int> fact_offset_;
    std::vector<std::vector<int>> predecessors_;   // pruned causal graph parents
    std::vector<std::vector<int>> pred_index_;     // var -> (parent var -> slot)
    std::vector<bool> globally_cached_;

    // Per-state memo: fact offset -> table, valid if stamp matches.
    std::vector<const CostTable *> memo_;
    std::vector<unsigned> memo_stamp_;
    unsigned stamp_ = 0;
    std::deque<CostTable> state_tables_;
    std::unordered_map<std::vector<int>, std::unique_ptr<CostTable>, KeyHash> global_cache_;
    long global_hits_ = 0;

    std::vector<BucketQueue> queues_;  // one per recursion depth
    int depth_ = 0;
};

}  // namespace mptplan
