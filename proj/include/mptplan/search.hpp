#pragma once

#include "mptplan/compiled_task.hpp"
#include "mptplan/heuristic.hpp"
#include "mptplan/task.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mptplan {

enum class Configuration { G, GP, GPPlus, M, MP, F, Any };

// The six single configurations in portfolio order.
const std::vector<Configuration> &single_configurations();
std::string to_string(Configuration config);
// Accepts g, gp, gp+, m, mp, f, any (case-insensitive).
std::optional<Configuration> parse_configuration(std::string_view text);

struct SearchLimits {
    double time_seconds = std::numeric_limits<double>::infinity();
    long max_expansions = -1;      // negative: unlimited
    std::size_t memory_mb = 0;     // 0: unlimited
};

enum class SearchOutcome { Solved, Unsolvable, Timeout, MemoryExceeded, Failed };
std::string to_string(SearchOutcome outcome);

struct SearchStats {
    long expansions = 0;
    long evaluations = 0;
    long generated = 0;
    std::size_t peak_frontier = 0;
    double seconds = 0;
    long dead_ends = 0;
    // Dead ends reported by heuristics whose infinite values are not trusted.
    long unreliable_dead_ends = 0;
    int restarts = 0;
    // Focused iterative broadening only.
    int max_threshold_used = -1;
    int phase = 0;

    void accumulate(const SearchStats &other);
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Failed;
    Plan plan;
    SearchStats stats;
    // Configuration that produced the outcome (set by the portfolio).
    std::string solver;
};

// Wall-clock, expansion and memory budget shared by the parts of one run.
class Budget {
public:
    explicit Budget(const SearchLimits &limits);
    double elapsed() const;
    double remaining() const;
    // Checked every expansion; polls the clock every 1024 calls.
    std::optional<SearchOutcome> exceeded(long expansions, std::size_t bytes_in_use);
    const SearchLimits &limits() const { return limits_; }

private:
    SearchLimits limits_;
    std::chrono::steady_clock::time_point start_;
    long calls_ = 0;
};

using ExpansionCallback = std::function<void(const ExtendedState &)>;

struct BestFirstOptions {
    // One open list (plus a preferred one if use_preferred) per heuristic.
    std::vector<Heuristic *> heuristics;
    bool use_preferred = false;
    // Source of preferred operators when the heuristics provide none.
    Heuristic *preferred_fallback = nullptr;
    ExpansionCallback on_expand;
};

/*
  Best-first search with a closed list and deferred evaluation: successors
  enter the open lists with the value of their parent and are only
  materialized and evaluated when selected. Open lists are used in
  round-robin order, each FIFO among equal values.
*/
SearchResult best_first_search(const CompiledTask &task, const BestFirstOptions &options,
                               Budget &budget);

enum class PreferredMode { None, Own, OwnThenHelpfulActions };

SearchResult greedy_bfs(const CompiledTask &task, Heuristic &heuristic, PreferredMode mode,
                        Budget &budget, ExpansionCallback on_expand = {});
SearchResult multi_heuristic_bfs(const CompiledTask &task,
                                 const std::vector<Heuristic *> &heuristics,
                                 bool use_preferred, Budget &budget);

enum class FallbackDirective { None, RestartWithFF, ReportUnsolvable };

// What to do after a best-first search came back without a plan.
FallbackDirective dead_end_fallback(const SearchResult &result);

// Runs one configuration, including the switch to the FF heuristic when the
// causal graph heuristic leaves only dead ends on the frontier.
SearchResult run_configuration(const CompiledTask &task, Configuration config,
                               Budget &budget);

// Extracts the operator sequence leading to a node (helper for the searches).
Plan trace_plan(const std::vector<int> &parent, const std::vector<int> &op, int node);

}  // namespace mptplan
