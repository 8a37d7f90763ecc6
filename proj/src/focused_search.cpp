#include "mptplan/focused_search.hpp"

#include "mptplan/ff_heuristic.hpp"
#include "state_registry.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <tuple>

namespace mptplan {

namespace {
// dist[u] = length of the shortest causal graph path from u to var.
std::vector<int> distances_to(const CausalGraph &cg, int var) {
    std::vector<int> dist(cg.num_variables(), kInfinity);
    std::deque<int> queue{var};
    dist[var] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : cg.predecessors(v))
            if (dist[u] == kInfinity) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

int distance_of(const Operator &op, const std::vector<int> &dist) {
    int best = kInfinity;
    for (const Effect &e : op.effects)
        if (effect_can_fire(op, e))
            best = std::min(best, dist[e.var]);
    return best;
}
}  // namespace

int modification_distance(const Task &, const Operator &op, int var, const CausalGraph &cg) {
    return distance_of(op, distances_to(cg, var));
}

std::vector<int> modification_distances(const Task &task, int var, const CausalGraph &cg) {
    auto dist = distances_to(cg, var);
    std::vector<int> out;
    out.reserve(task.operators.size());
    for (const Operator &op : task.operators)
        out.push_back(distance_of(op, dist));
    return out;
}

int max_threshold(const std::vector<int> &distances) {
    int best = 0;
    for (int d : distances)
        if (d != kInfinity)
            best = std::max(best, d);
    return best;
}

struct ReachOneGoal::Search {
    explicit Search(int width) : registry(width) {}

    using Item = std::tuple<int, long, int>;  // cost, insertion number, state id
    StateRegistry registry;
    std::vector<int> cost, parent, op;
    std::vector<bool> closed;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    long counter = 0;
};

ReachOneGoal::ReachOneGoal(const CompiledTask &task, const ExtendedState &start, Fact goal,
                           PartialAssignment cond, bool protect)
    : task_(task), start_(start), goal_(goal), cond_(std::move(cond)) {
    const Task &t = task.task;
    distance_ = modification_distances(t, goal.var, task.causal_graph);
    max_threshold_ = mptplan::max_threshold(distance_);
    forbidden_.assign(t.operators.size(), false);
    if (protect)
        for (std::size_t i = 0; i < t.operators.size(); ++i)
            for (const Effect &e : t.operators[i].effects) {
                auto protected_value = cond_.value_of(e.var);
                if (protected_value && *protected_value != e.value)
                    forbidden_[i] = true;
            }
    start_threshold();
}

ReachOneGoal::~ReachOneGoal() = default;

void ReachOneGoal::start_threshold() {
    search_ = std::make_unique<Search>(task_.task.num_variables());
    search_->registry.insert(start_.values);
    search_->cost.push_back(0);
    search_->parent.push_back(-1);
    search_->op.push_back(-1);
    search_->closed.push_back(false);
    search_->open.emplace(0, search_->counter++, 0);
}

std::size_t ReachOneGoal::bytes() const {
    if (!search_)
        return 0;
    return search_->registry.bytes() + search_->cost.size() * 4 * sizeof(int) +
           search_->open.size() * sizeof(Search::Item);
}

ReachOneGoal::Status ReachOneGoal::step(long quantum) {
    if (status_ != Status::Running)
        return status_;
    const Task &t = task_.task;
    std::vector<int> applicable;
    ExtendedState state, succ;
    for (long done = 0; done < quantum; ++done) {
        Search &s = *search_;
        if (s.open.empty()) {
            if (threshold_ >= max_threshold_) {
                status_ = Status::Failed;
                search_.reset();
                return status_;
            }
            ++threshold_;
            start_threshold();
            continue;
        }
        auto [g, order, id] = s.open.top();
        s.open.pop();
        (void)order;
        if (s.closed[id] || g > s.cost[id])
            continue;
        s.closed[id] = true;
        state.values = s.registry.values(id);
        if (state[goal_.var] == goal_.value && cond_.holds_in(state)) {
            plan_ = trace_plan(s.parent, s.op, id);
            status_ = Status::Solved;
            search_.reset();
            return status_;
        }
        ++expansions_;
        task_.successor_generator.applicable_operators(state, applicable);
        for (int op : applicable) {
            if (distance_[op] > threshold_ || forbidden_[op])
                continue;
            if (!apply_operator(task_, state.values, t.operators[op], succ.values))
                continue;
            ++generated_;
            int new_cost = g + 1 + distance_[op];
            auto [sid, added] = s.registry.insert(succ.values);
            if (added) {
                s.cost.push_back(new_cost);
                s.parent.push_back(id);
                s.op.push_back(op);
                s.closed.push_back(false);
            } else if (s.closed[sid] || new_cost >= s.cost[sid]) {
                continue;
            } else {
                s.cost[sid] = new_cost;
                s.parent[sid] = id;
                s.op[sid] = op;
            }
            s.open.emplace(new_cost, s.counter++, sid);
        }
    }
    return status_;
}

SearchResult reach_one_goal(const CompiledTask &task, const ExtendedState &start, Fact goal,
                            const PartialAssignment &cond, bool protect, Budget &budget) {
    auto started = std::chrono::steady_clock::now();
    SearchResult result;
    ReachOneGoal search(task, start, goal, cond, protect);
    while (search.status() == ReachOneGoal::Status::Running) {
        search.step(1024);
        if (auto stop = budget.exceeded(search.expansions(), search.bytes())) {
            result.outcome = *stop;
            break;
        }
    }
    if (search.status() == ReachOneGoal::Status::Solved) {
        result.outcome = SearchOutcome::Solved;
        result.plan = search.plan();
    } else if (search.status() == ReachOneGoal::Status::Failed) {
        result.outcome = SearchOutcome::Failed;
    }
    result.stats.expansions = search.expansions();
    result.stats.generated = search.generated();
    result.stats.max_threshold_used = search.threshold();
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

SearchResult focused_ibs(const CompiledTask &task, Budget &budget,
                         const FocusedOptions &options) {
    const Task &t = task.task;
    auto started = std::chrono::steady_clock::now();
    SearchResult result;
    SearchStats &stats = result.stats;
    auto finish = [&](SearchOutcome outcome) {
        result.outcome = outcome;
        stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    };

    // A relaxed dead end at the initial state is a proof of unsolvability.
    ExtendedState init = task.initial_state();
    {
        FFHeuristic ff(task);
        ++stats.evaluations;
        if (ff.evaluate(init).is_dead_end())
            return finish(SearchOutcome::Unsolvable);
    }

    for (int phase = 1; phase <= 2; ++phase) {
        stats.phase = phase;
        bool protect = phase == 1;
        ExtendedState state = init;
        Plan plan;
        std::vector<Fact> achieved;
        std::vector<Fact> open_goals(t.goal.begin(), t.goal.end());
        bool phase_failed = false;

        while (!open_goals.empty()) {
            PartialAssignment cond(achieved);
            std::vector<std::unique_ptr<ReachOneGoal>> instances;
            for (const Fact &g : open_goals)
                instances.push_back(std::make_unique<ReachOneGoal>(task, state, g, cond, protect));
            ReachOneGoal *winner = nullptr;
            while (!winner) {
                bool running = false;
                for (auto &inst : instances) {
                    if (inst->status() != ReachOneGoal::Status::Running)
                        continue;
                    long before = inst->expansions();
                    auto status = inst->step(options.quantum);
                    stats.expansions += inst->expansions() - before;
                    stats.max_threshold_used = std::max(stats.max_threshold_used, inst->threshold());
                    std::size_t bytes = 0;
                    for (auto &other : instances)
                        bytes += other->bytes();
                    if (auto stop = budget.exceeded(stats.expansions, bytes))
                        return finish(*stop);
                    if (status == ReachOneGoal::Status::Solved) {
                        winner = inst.get();
                        break;
                    }
                    if (status == ReachOneGoal::Status::Running)
                        running = true;
                }
                if (!winner && !running)
                    break;
            }
            for (auto &inst : instances)
                stats.generated += inst->generated();
            if (!winner) {
                phase_failed = true;
                break;
            }
            for (int op : winner->plan().steps) {
                std::vector<int> next;
                apply_operator(task, state.values, t.operators[op], next);
                state.values = std::move(next);
                plan.steps.push_back(op);
            }
            Fact goal = winner->goal();
            achieved.push_back(goal);
            open_goals.erase(std::find(open_goals.begin(), open_goals.end(), goal));
            if (options.on_commit)
                options.on_commit(phase, plan, PartialAssignment(achieved));
        }
        if (!phase_failed) {
            result.plan = std::move(plan);
            return finish(SearchOutcome::Solved);
        }
    }
    return finish(SearchOutcome::Failed);
}

}  // namespace mptplan
