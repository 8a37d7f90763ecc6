#include "mptplan/cg_heuristic.hpp"
#include "mptplan/compiled_task.hpp"
#include "mptplan/ff_heuristic.hpp"

#include "../support/domains.hpp"
#include "../support/oracles.hpp"
#include "../support/random_tasks.hpp"

#include <gtest/gtest.h>

using namespace mptplan;
using namespace mptplan::testing;

namespace {
constexpr int kR = 0, kK = 1;
constexpr int kCarried = 6;

bool is_subset(const std::vector<int> &small, const std::vector<int> &big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Task random_heuristic_task(std::mt19937 &rng, int round) {
    RandomTaskOptions options;
    options.num_fluents = 3 + round % 3;
    options.num_derived = round % 3;
    options.num_operators = 10;
    return random_task(rng, options);
}
}  // namespace

TEST(BucketQueue, FifoAmongEqualKeys) {
    BucketQueue q;
    q.push(2, 10);
    q.push(0, 20);
    q.push(2, 30);
    q.push(100000, 40);
    q.push(0, 50);
    EXPECT_EQ(q.pop(), std::make_pair(0, 20));
    EXPECT_EQ(q.pop(), std::make_pair(0, 50));
    EXPECT_EQ(q.pop(), std::make_pair(2, 10));
    q.push(2, 60);
    EXPECT_EQ(q.pop(), std::make_pair(2, 30));
    EXPECT_EQ(q.pop(), std::make_pair(2, 60));
    EXPECT_EQ(q.pop(), std::make_pair(100000, 40));
    EXPECT_TRUE(q.empty());
}

TEST(CGHeuristic, GridRobotCost) {
    CompiledTask ct = compile_task(grid_task());
    CausalGraphHeuristic h(ct);
    ExtendedState init = ct.initial_state();
    EXPECT_EQ(h.cost(init, kR, cell(1, 1), cell(3, 2)), 3);
    EXPECT_EQ(h.cost(init, kR, cell(1, 1), cell(2, 1)), 1);
}

TEST(CGHeuristic, GridKeyCostTrace) {
    // Hand trace: pickup at (3,2) costs 3 moves + 1, then dropping at (2,1)
    // costs 2 moves (robot now at (3,2)) + 1.
    CompiledTask ct = compile_task(grid_task());
    CausalGraphHeuristic h(ct);
    ExtendedState init = ct.initial_state();
    EXPECT_EQ(h.cost(init, kK, cell(3, 2), kCarried), 4);
    EXPECT_EQ(h.cost(init, kK, cell(3, 2), cell(2, 1)), 7);
    HeuristicResult result = h.evaluate(init);
    EXPECT_EQ(result.value, 7);
    // The cheapest robot path enters (2,1), which needs the door: no helpful
    // transition survives.
    EXPECT_TRUE(result.preferred.empty());
}

TEST(CGHeuristic, HelpfulTransitionsAfterPickup) {
    Task task = grid_task();
    CompiledTask ct = compile_task(task);
    CausalGraphHeuristic h(ct);
    // Robot at (3,2) carrying the key, door closed.
    ExtendedState s = ct.extended_state(task.make_state({cell(3, 2), kCarried, 0}));
    HeuristicResult result = h.evaluate(s);
    EXPECT_EQ(result.value, 3);
    ASSERT_FALSE(result.preferred.empty());
    for (int op : result.preferred)
        EXPECT_TRUE(is_applicable(task.operators[op], s));
}

TEST(CGHeuristic, DiagonalCostsAreZero) {
    std::mt19937 rng(29);
    for (int round = 0; round < 50; ++round) {
        Task task = random_heuristic_task(rng, round);
        CompiledTask ct = compile_task(task);
        CausalGraphHeuristic h(ct);
        for (int k = 0; k < 10; ++k) {
            ExtendedState s = ct.extended_state(random_state(task, rng));
            for (int v = 0; v < task.num_variables(); ++v)
                for (int d = 0; d < task.variables[v].domain_size; ++d)
                    ASSERT_EQ(h.cost(s, v, d, d), 0);
        }
    }
}

TEST(CGHeuristic, ZeroExactlyWhenGoalTargetsCostNothing) {
    std::mt19937 rng(31);
    int states = 0;
    for (int round = 0; round < 50; ++round) {
        Task task = random_heuristic_task(rng, round);
        CompiledTask ct = compile_task(task);
        CausalGraphHeuristic h(ct);
        for (int k = 0; k < 20; ++k, ++states) {
            ExtendedState s = ct.extended_state(random_state(task, rng));
            bool all_zero = true;
            for (const Fact &g : task.goal)
                all_zero = all_zero && h.cost(s, g.var, s[g.var], g.value) == 0;
            ASSERT_EQ(h.evaluate(s).value == 0, all_zero);
            if (is_goal(task, s))
                ASSERT_EQ(h.evaluate(s).value, 0);
        }
    }
    EXPECT_EQ(states, 1000);
}

TEST(CGHeuristic, GlobalCacheIsTransparent) {
    std::mt19937 rng(37);
    long hits = 0;
    for (int round = 0; round < 30; ++round) {
        Task task = random_heuristic_task(rng, round);
        CompiledTask ct = compile_task(task);
        CausalGraphHeuristic cached(ct);
        CausalGraphHeuristic plain(ct, CGOptions{false, 5});
        for (int k = 0; k < 40; ++k) {
            ExtendedState s = ct.extended_state(random_state(task, rng));
            HeuristicResult a = cached.evaluate(s);
            HeuristicResult b = plain.evaluate(s);
            ASSERT_EQ(a.value, b.value);
            ASSERT_EQ(a.preferred, b.preferred);
        }
        hits += cached.global_cache_hits();
        EXPECT_EQ(plain.global_cache_size(), 0u);
    }
    EXPECT_GT(hits, 0);
}

TEST(CGHeuristic, HelpfulTransitionsAreApplicable) {
    std::mt19937 rng(43);
    for (int round = 0; round < 40; ++round) {
        Task task = random_heuristic_task(rng, round);
        CompiledTask ct = compile_task(task);
        CausalGraphHeuristic h(ct);
        for (int k = 0; k < 20; ++k) {
            ExtendedState s = ct.extended_state(random_state(task, rng));
            HeuristicResult r = h.evaluate(s);
            ASSERT_TRUE(is_subset(r.preferred, ct.successor_generator.applicable_operators(s)));
        }
    }
}

TEST(CGHeuristic, BlindTaskIsInfiniteAtInit) {
    CompiledTask ct = compile_task(cg_blind_task());
    CausalGraphHeuristic cg(ct);
    FFHeuristic ff(ct);
    EXPECT_TRUE(cg.evaluate(ct.initial_state()).is_dead_end());
    EXPECT_FALSE(ff.evaluate(ct.initial_state()).is_dead_end());
}

TEST(CGHeuristic, DerivedGoalsUseAxiomArcs) {
    Task task = layered_chain_task();
    CompiledTask ct = compile_task(task);
    CausalGraphHeuristic h(ct);
    // x = 1, y = 0 makes v true and hence w undefined.
    ExtendedState s = ct.initial_state();
    ASSERT_EQ(s[4], 0);
    HeuristicResult r = h.evaluate(s);
    EXPECT_GT(r.value, 0);
    EXPECT_NE(r.value, kInfinity);
    EXPECT_EQ(h.evaluate(ct.extended_state(task.make_state({0, 0, 0, 0, 0}))).value, 0);
}

TEST(FFHeuristic, ChainLength) {
    for (int k : {1, 3, 8}) {
        CompiledTask ct = compile_task(chain_task(k));
        FFHeuristic h(ct);
        EXPECT_EQ(h.evaluate(ct.initial_state()).value, k);
    }
}

TEST(FFHeuristic, GridInit) {
    CompiledTask ct = compile_task(grid_task());
    FFHeuristic h(ct);
    HeuristicResult r = h.evaluate(ct.initial_state());
    EXPECT_GE(r.value, 5);
    EXPECT_LE(r.value, 8);
    EXPECT_TRUE(relaxed_plan_reaches_goal(ct.task, ct.initial_state(), h.relaxed_plan().steps));
    ASSERT_FALSE(r.preferred.empty());
    for (int op : r.preferred)
        EXPECT_TRUE(is_applicable(ct.task.operators[op], ct.initial_state()));
}

TEST(FFHeuristic, UnsolvableToyIsDeadEnd) {
    CompiledTask ct = compile_task(unsolvable_task());
    FFHeuristic h(ct);
    EXPECT_TRUE(h.evaluate(ct.initial_state()).is_dead_end());
}

TEST(FFHeuristic, RelaxedPlansAchieveGoalAndDeadEndsAreReal) {
    std::mt19937 rng(47);
    int checked = 0;
    int dead_ends = 0;
    for (int round = 0; round < 20; ++round) {
        Task task = random_heuristic_task(rng, round);
        CompiledTask ct = compile_task(task);
        FFHeuristic h(ct);
        StateSpace space = explore(task, 100000);
        ASSERT_TRUE(space.complete);
        for (int k = 0; k < 50; ++k) {
            const State &s = space.states[rng() % space.states.size()];
            ExtendedState ext = ct.extended_state(s);
            HeuristicResult r = h.evaluate(ext);
            ++checked;
            if (r.is_dead_end()) {
                ++dead_ends;
                EXPECT_LT(explore(task, 100000, s).goal_distance, 0);
                continue;
            }
            EXPECT_EQ(static_cast<int>(h.relaxed_plan().steps.size()), r.value);
            EXPECT_TRUE(relaxed_plan_reaches_goal(task, ext, h.relaxed_plan().steps));
            EXPECT_TRUE(is_subset(r.preferred, ct.successor_generator.applicable_operators(ext)));
        }
    }
    EXPECT_EQ(checked, 1000);
    RecordProperty("dead_ends", dead_ends);
}
