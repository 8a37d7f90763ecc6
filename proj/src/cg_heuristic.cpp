#include "mptplan/cg_heuristic.hpp"

#include <algorithm>

namespace mptplan {

void BucketQueue::push(int key, int value) {
    ++size_;
    if (key >= kMaxBuckets) {
        overflow_.emplace(key, value);
        return;
    }
    std::size_t k = static_cast<std::size_t>(key);
    if (k >= buckets_.size())
        buckets_.resize(std::max(k + 1, buckets_.size() * 2));
    buckets_[k].push_back(value);
    used_ = std::max(used_, k + 1);
    ++in_buckets_;
}

std::pair<int, int> BucketQueue::pop() {
    --size_;
    if (in_buckets_ == 0) {
        auto it = overflow_.begin();
        auto entry = *it;
        overflow_.erase(it);
        return entry;
    }
    while (position_ >= buckets_[current_].size()) {
        buckets_[current_].clear();
        ++current_;
        position_ = 0;
    }
    --in_buckets_;
    return {static_cast<int>(current_), buckets_[current_][position_++]};
}

void BucketQueue::clear() {
    for (std::size_t k = 0; k < used_ && k < buckets_.size(); ++k)
        buckets_[k].clear();
    overflow_.clear();
    current_ = position_ = size_ = in_buckets_ = used_ = 0;
}

std::size_t CausalGraphHeuristic::KeyHash::operator()(const std::vector<int> &key) const {
    std::size_t h = key.size();
    for (int x : key)
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

CausalGraphHeuristic::CausalGraphHeuristic(const CompiledTask &task, CGOptions options)
    : task_(task), options_(options) {
    int n = task.task.num_variables();
    int offset = 0;
    for (const Variable &v : task.task.variables) {
        fact_offset_.push_back(offset);
        offset += v.domain_size;
    }
    memo_.assign(offset, nullptr);
    memo_stamp_.assign(offset, 0);
    const PrunedCausalGraph &pcg = task.pruned_causal_graph;
    predecessors_.resize(n);
    pred_index_.assign(n, std::vector<int>(n, -1));
    globally_cached_.resize(n);
    for (int v = 0; v < n; ++v) {
        predecessors_[v] = pcg.graph().predecessors(v);
        for (std::size_t i = 0; i < predecessors_[v].size(); ++i)
            pred_index_[v][predecessors_[v][i]] = static_cast<int>(i);
        globally_cached_[v] =
            options_.global_cache &&
            static_cast<int>(pcg.ancestors(v).size()) <= options_.global_cache_max_ancestors;
    }
}

void CausalGraphHeuristic::begin_state() {
    ++stamp_;
    if (stamp_ == 0) {
        std::fill(memo_stamp_.begin(), memo_stamp_.end(), 0);
        stamp_ = 1;
    }
    state_tables_.clear();
}

CausalGraphHeuristic::CostTable CausalGraphHeuristic::sweep(const ExtendedState &state,
                                                            int var, int source) {
    const DomainTransitionGraph &dtg = task_.pruned_dtgs[var];
    const std::vector<int> &preds = predecessors_[var];
    const std::vector<int> &slot = pred_index_[var];
    int num_values = dtg.num_values();

    CostTable table;
    table.var = var;
    table.source = source;
    table.cost.assign(num_values, kInfinity);
    table.reached_by.assign(num_values, nullptr);

    // Local states restricted to the parents of var, one per value.
    std::vector<std::vector<int>> local(num_values);
    local[source].reserve(preds.size());
    for (int p : preds)
        local[source].push_back(state[p]);
    std::vector<bool> done(num_values, false);

    if (static_cast<int>(queues_.size()) <= depth_)
        queues_.resize(depth_ + 1);
    table.cost[source] = 0;
    queues_[depth_].clear();
    queues_[depth_].push(0, source);
    while (!queues_[depth_].empty()) {
        auto [key, value] = queues_[depth_].pop();
        if (done[value] || key > table.cost[value])
            continue;
        done[value] = true;
        for (const Transition &t : dtg.transitions[value]) {
            if (done[t.to])
                continue;
            int transition_cost = t.weight;
            for (const Fact &f : t.condition) {
                int from = local[value][slot[f.var]];
                ++depth_;
                const CostTable &sub = compute(state, f.var, from);
                --depth_;
                transition_cost = add_costs(transition_cost, sub.cost[f.value]);
                if (transition_cost == kInfinity)
                    break;
            }
            int new_cost = add_costs(table.cost[value], transition_cost);
            if (new_cost < table.cost[t.to]) {
                table.cost[t.to] = new_cost;
                table.reached_by[t.to] = &t;
                local[t.to] = local[value];
                for (const Fact &f : t.condition)
                    local[t.to][slot[f.var]] = f.value;
                queues_[depth_].push(new_cost, t.to);
            }
        }
    }
    return table;
}

const CausalGraphHeuristic::CostTable &CausalGraphHeuristic::compute(
    const ExtendedState &state, int var, int source) {
    int index = fact_offset_[var] + source;
    if (memo_stamp_[index] == stamp_)
        return *memo_[index];

    const CostTable *result = nullptr;
    if (globally_cached_[var]) {
        std::vector<int> key{var, source};
        for (int a : task_.pruned_causal_graph.ancestors(var))
            key.push_back(state[a]);
        auto it = global_cache_.find(key);
        if (it != global_cache_.end()) {
            ++global_hits_;
            result = it->second.get();
        } else {
            auto table = std::make_unique<CostTable>(sweep(state, var, source));
            result = table.get();
            global_cache_.emplace(std::move(key), std::move(table));
        }
    } else {
        state_tables_.push_back(sweep(state, var, source));
        result = &state_tables_.back();
    }
    memo_[index] = result;
    memo_stamp_[index] = stamp_;
    return *result;
}

const CausalGraphHeuristic::CostTable &CausalGraphHeuristic::cost_table(
    const ExtendedState &state, int var, int source) {
    begin_state();
    return compute(state, var, source);
}

int CausalGraphHeuristic::cost(const ExtendedState &state, int var, int from, int to) {
    return cost_table(state, var, from).cost[to];
}

void CausalGraphHeuristic::collect_helpful(const ExtendedState &state, int var, int from,
                                           int to,
                                           std::set<std::tuple<int, int, int>> &visited,
                                           std::vector<int> &helpful) {
    if (from == to || !visited.insert({var, from, to}).second)
        return;
    const CostTable &table = compute(state, var, from);
    if (table.cost[to] == kInfinity)
        return;
    // Walk back to the first transition of the path.
    const Transition *first = table.reached_by[to];
    while (first->from != from)
        first = table.reached_by[first->from];

    if (first->origin == TransitionOrigin::Operator) {
        const Operator &op = task_.task.operators[first->origin_id];
        const Effect &effect = op.effects[first->effect];
        if (op.precondition.holds_in(state) && effect.condition.holds_in(state)) {
            helpful.push_back(first->origin_id);
            return;
        }
    }
    for (const Fact &f : first->condition)
        if (state[f.var] != f.value)
            collect_helpful(state, f.var, state[f.var], f.value, visited, helpful);
}

HeuristicResult CausalGraphHeuristic::evaluate(const ExtendedState &state) {
    begin_state();
    HeuristicResult result;
    for (const Fact &g : task_.task.goal) {
        const CostTable &table = compute(state, g.var, state[g.var]);
        result.value = add_costs(result.value, table.cost[g.value]);
        if (result.value == kInfinity)
            return result;
    }
    std::set<std::tuple<int, int, int>> visited;
    for (const Fact &g : task_.task.goal)
        collect_helpful(state, g.var, state[g.var], g.value, visited, result.preferred);
    std::sort(result.preferred.begin(), result.preferred.end());
    result.preferred.erase(std::unique(result.preferred.begin(), result.preferred.end()),
                           result.preferred.end());
    return result;
}

}  // namespace mptplan
