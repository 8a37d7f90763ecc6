#pragma once

#include "mptplan/compiled_task.hpp"
#include "mptplan/search.hpp"

#include <vector>

namespace mptplan {

/*
  Runs the configurations one after another. Each gets an equal share of the
  time that is left when it starts, so time unused by a member that stops
  early goes to the remaining ones. Returns the first plan, or Unsolvable as
  soon as a member proves it.
*/
SearchResult portfolio_any(const CompiledTask &task, Budget &budget,
                           const std::vector<Configuration> &order = single_configurations());

}  // namespace mptplan
