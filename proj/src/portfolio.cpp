#include "mptplan/portfolio.hpp"

#include <algorithm>
#include <cmath>

namespace mptplan {

SearchResult portfolio_any(const CompiledTask &task, Budget &budget,
                           const std::vector<Configuration> &order) {
    SearchResult result;
    result.outcome = SearchOutcome::Timeout;
    SearchStats total;
    bool memory_out = false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        SearchLimits slice = budget.limits();
        double left = budget.remaining();
        if (std::isfinite(left)) {
            if (left <= 0)
                break;
            slice.time_seconds = left / static_cast<double>(order.size() - i);
        }
        Budget member_budget(slice);
        SearchResult member = run_configuration(task, order[i], member_budget);
        total.accumulate(member.stats);
        if (member.outcome == SearchOutcome::Solved ||
            member.outcome == SearchOutcome::Unsolvable) {
            member.stats = total;
            member.solver = to_string(order[i]);
            return member;
        }
        memory_out |= member.outcome == SearchOutcome::MemoryExceeded;
    }
    result.stats = total;
    if (memory_out)
        result.outcome = SearchOutcome::MemoryExceeded;
    return result;
}

}  // namespace mptplan
