#include "mptplan/search.hpp"

#include "mptplan/cg_heuristic.hpp"
#include "mptplan/ff_heuristic.hpp"
#include "mptplan/focused_search.hpp"
#include "mptplan/portfolio.hpp"
#include "state_registry.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace mptplan {

const std::vector<Configuration> &single_configurations() {
    static const std::vector<Configuration> configs{
        Configuration::G, Configuration::GP, Configuration::GPPlus,
        Configuration::M, Configuration::MP, Configuration::F};
    return configs;
}

std::string to_string(Configuration config) {
    switch (config) {
    case Configuration::G: return "g";
    case Configuration::GP: return "gp";
    case Configuration::GPPlus: return "gp+";
    case Configuration::M: return "m";
    case Configuration::MP: return "mp";
    case Configuration::F: return "f";
    case Configuration::Any: return "any";
    }
    return "?";
}

std::optional<Configuration> parse_configuration(std::string_view text) {
    std::string lower;
    for (char c : text)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (Configuration c : single_configurations())
        if (to_string(c) == lower)
            return c;
    if (lower == "any")
        return Configuration::Any;
    return std::nullopt;
}

std::string to_string(SearchOutcome outcome) {
    switch (outcome) {
    case SearchOutcome::Solved: return "solved";
    case SearchOutcome::Unsolvable: return "unsolvable";
    case SearchOutcome::Timeout: return "timeout";
    case SearchOutcome::MemoryExceeded: return "memory";
    case SearchOutcome::Failed: return "failed";
    }
    return "?";
}

void SearchStats::accumulate(const SearchStats &other) {
    expansions += other.expansions;
    evaluations += other.evaluations;
    generated += other.generated;
    peak_frontier = std::max(peak_frontier, other.peak_frontier);
    seconds += other.seconds;
    dead_ends += other.dead_ends;
    unreliable_dead_ends += other.unreliable_dead_ends;
    restarts += other.restarts;
    max_threshold_used = std::max(max_threshold_used, other.max_threshold_used);
    phase = std::max(phase, other.phase);
}

Budget::Budget(const SearchLimits &limits)
    : limits_(limits), start_(std::chrono::steady_clock::now()) {
}

double Budget::elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

double Budget::remaining() const {
    return limits_.time_seconds - elapsed();
}

std::optional<SearchOutcome> Budget::exceeded(long expansions, std::size_t bytes_in_use) {
    if (limits_.max_expansions >= 0 && expansions > limits_.max_expansions)
        return SearchOutcome::Timeout;
    if (calls_++ % 1024 != 0)
        return std::nullopt;
    if (limits_.memory_mb > 0 && bytes_in_use > limits_.memory_mb * 1024 * 1024)
        return SearchOutcome::MemoryExceeded;
    if (elapsed() > limits_.time_seconds)
        return SearchOutcome::Timeout;
    return std::nullopt;
}

Plan trace_plan(const std::vector<int> &parent, const std::vector<int> &op, int node) {
    Plan plan;
    for (int n = node; parent[n] >= 0; n = parent[n])
        plan.steps.push_back(op[n]);
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
}

bool apply_operator(const CompiledTask &task, const std::vector<int> &parent,
                    const Operator &op, std::vector<int> &out) {
    out = parent;
    thread_local std::vector<int> assigned;
    assigned.assign(parent.size(), -1);
    for (const Effect &e : op.effects) {
        if (!e.condition.holds_in(parent))
            continue;
        if (assigned[e.var] >= 0 && assigned[e.var] != e.value)
            return false;
        assigned[e.var] = e.value;
        out[e.var] = e.value;
    }
    thread_local AxiomEvaluator::Scratch scratch;
    task.axiom_evaluator.evaluate_in_place(out, scratch);
    return true;
}

namespace {

class OpenList {
public:
    void push(int key, int entry) {
        buckets_[key].push_back(entry);
        ++size_;
    }
    int pop() {
        auto it = buckets_.begin();
        int entry = it->second.front();
        it->second.pop_front();
        if (it->second.empty())
            buckets_.erase(it);
        --size_;
        return entry;
    }
    bool empty() const { return size_ == 0; }
    std::size_t size() const { return size_; }

private:
    std::map<int, std::deque<int>> buckets_;
    std::size_t size_ = 0;
};

struct Evaluation {
    std::vector<int> values;
    std::vector<int> preferred;
    bool dead_end = false;
    bool unreliable = false;
};

}  // namespace

SearchResult best_first_search(const CompiledTask &ct, const BestFirstOptions &options,
                               Budget &budget) {
    const Task &task = ct.task;
    auto started = std::chrono::steady_clock::now();
    SearchResult result;
    SearchStats &stats = result.stats;
    auto finish = [&](SearchOutcome outcome) {
        result.outcome = outcome;
        stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    };

    const std::size_t num_h = options.heuristics.size();
    const std::size_t per_h = options.use_preferred ? 2 : 1;
    std::vector<OpenList> queues(num_h * per_h);
    struct Entry {
        int parent;
        int op;
    };
    std::vector<Entry> entries;
    StateRegistry registry(task.num_variables());
    std::vector<int> parent_of, op_of;

    auto evaluate = [&](const ExtendedState &state) {
        ++stats.evaluations;
        Evaluation ev;
        bool any_reliable_inf = false;
        bool all_inf = true;
        for (Heuristic *h : options.heuristics) {
            HeuristicResult r = h->evaluate(state);
            ev.values.push_back(r.value);
            if (r.is_dead_end()) {
                any_reliable_inf |= h->dead_ends_are_reliable();
            } else {
                all_inf = false;
            }
            if (options.use_preferred)
                ev.preferred.insert(ev.preferred.end(), r.preferred.begin(), r.preferred.end());
        }
        ev.dead_end = any_reliable_inf || all_inf;
        ev.unreliable = ev.dead_end && !any_reliable_inf;
        if (!ev.dead_end && options.use_preferred) {
            if (ev.preferred.empty() && options.preferred_fallback)
                ev.preferred = options.preferred_fallback->evaluate(state).preferred;
            std::sort(ev.preferred.begin(), ev.preferred.end());
            ev.preferred.erase(std::unique(ev.preferred.begin(), ev.preferred.end()),
                               ev.preferred.end());
        }
        return ev;
    };

    std::vector<int> applicable;
    std::size_t frontier = 0;
    auto expand = [&](int id, const ExtendedState &state, const Evaluation &ev) {
        if (options.on_expand)
            options.on_expand(state);
        ct.successor_generator.applicable_operators(state, applicable);
        for (int op : applicable) {
            int entry = static_cast<int>(entries.size());
            entries.push_back({id, op});
            ++stats.generated;
            bool preferred = options.use_preferred &&
                             std::binary_search(ev.preferred.begin(), ev.preferred.end(), op);
            for (std::size_t i = 0; i < num_h; ++i) {
                if (ev.values[i] == kInfinity)
                    continue;
                queues[i * per_h].push(ev.values[i], entry);
                ++frontier;
                if (preferred) {
                    queues[i * per_h + 1].push(ev.values[i], entry);
                    ++frontier;
                }
            }
        }
        stats.peak_frontier = std::max(stats.peak_frontier, frontier);
    };
    auto record_dead_end = [&](const Evaluation &ev) {
        ++stats.dead_ends;
        if (ev.unreliable)
            ++stats.unreliable_dead_ends;
    };

    ExtendedState init = ct.initial_state();
    registry.insert(init.values);
    parent_of.push_back(-1);
    op_of.push_back(-1);
    Evaluation root = evaluate(init);
    if (is_goal(task, init))
        return finish(SearchOutcome::Solved);
    ++stats.expansions;
    if (root.dead_end)
        record_dead_end(root);
    else
        expand(0, init, root);

    std::size_t cursor = 0;
    ExtendedState state;
    while (true) {
        std::size_t bytes = registry.bytes() + entries.size() * sizeof(Entry) +
                            frontier * 2 * sizeof(int) + parent_of.size() * 2 * sizeof(int);
        if (auto stop = budget.exceeded(stats.expansions, bytes))
            return finish(*stop);

        std::size_t q = 0;
        bool found = false;
        for (std::size_t k = 0; k < queues.size(); ++k) {
            q = (cursor + k) % queues.size();
            if (!queues[q].empty()) {
                found = true;
                break;
            }
        }
        if (!found)
            break;
        cursor = q + 1;
        Entry entry = entries[queues[q].pop()];
        --frontier;

        std::vector<int> parent_values = registry.values(entry.parent);
        if (!apply_operator(ct, parent_values, task.operators[entry.op], state.values))
            continue;
        auto [id, added] = registry.insert(state.values);
        if (!added)
            continue;
        parent_of.push_back(entry.parent);
        op_of.push_back(entry.op);
        if (is_goal(task, state)) {
            result.plan = trace_plan(parent_of, op_of, id);
            return finish(SearchOutcome::Solved);
        }
        Evaluation ev = evaluate(state);
        ++stats.expansions;
        if (ev.dead_end) {
            record_dead_end(ev);
            continue;
        }
        expand(id, state, ev);
    }
    return finish(SearchOutcome::Unsolvable);
}

SearchResult greedy_bfs(const CompiledTask &task, Heuristic &heuristic, PreferredMode mode,
                        Budget &budget, ExpansionCallback on_expand) {
    BestFirstOptions options;
    options.heuristics = {&heuristic};
    options.use_preferred = mode != PreferredMode::None;
    options.on_expand = std::move(on_expand);
    std::optional<FFHeuristic> ff;
    if (mode == PreferredMode::OwnThenHelpfulActions) {
        ff.emplace(task);
        options.preferred_fallback = &*ff;
    }
    return best_first_search(task, options, budget);
}

SearchResult multi_heuristic_bfs(const CompiledTask &task,
                                 const std::vector<Heuristic *> &heuristics,
                                 bool use_preferred, Budget &budget) {
    BestFirstOptions options;
    options.heuristics = heuristics;
    options.use_preferred = use_preferred;
    return best_first_search(task, options, budget);
}

FallbackDirective dead_end_fallback(const SearchResult &result) {
    if (result.outcome != SearchOutcome::Unsolvable)
        return FallbackDirective::None;
    if (result.stats.unreliable_dead_ends > 0)
        return FallbackDirective::RestartWithFF;
    return FallbackDirective::ReportUnsolvable;
}

SearchResult run_configuration(const CompiledTask &task, Configuration config,
                               Budget &budget) {
    switch (config) {
    case Configuration::G:
    case Configuration::GP:
    case Configuration::GPPlus: {
        PreferredMode mode = config == Configuration::G    ? PreferredMode::None
                             : config == Configuration::GP ? PreferredMode::Own
                                                           : PreferredMode::OwnThenHelpfulActions;
        SearchResult first;
        {
            CausalGraphHeuristic cg(task);
            first = greedy_bfs(task, cg, mode, budget);
        }
        if (dead_end_fallback(first) != FallbackDirective::RestartWithFF)
            return first;
        FFHeuristic ff(task);
        SearchResult second = greedy_bfs(
            task, ff, mode == PreferredMode::None ? PreferredMode::None : PreferredMode::Own,
            budget);
        second.stats.accumulate(first.stats);
        second.stats.restarts += 1;
        return second;
    }
    case Configuration::M:
    case Configuration::MP: {
        CausalGraphHeuristic cg(task);
        FFHeuristic ff(task);
        return multi_heuristic_bfs(task, {&cg, &ff}, config == Configuration::MP, budget);
    }
    case Configuration::F:
        return focused_ibs(task, budget);
    case Configuration::Any:
        return portfolio_any(task, budget);
    }
    return {};
}

}  // namespace mptplan
