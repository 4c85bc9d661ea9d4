#pragma once

#include <functional>
#include <vector>

#include "relic/kanren.hpp"

namespace relic::mk {

// Bounded relational loop: the conjunction f(0), f(1), ..., f(n-1) with a
// succeed base case, each step behind an immature node so the whole loop is
// consumed as a delayed stream. builde(0, f) is succeed.
Goal builde(int n, std::function<Goal(int)> f);

// Nested builde over each dimension, outermost first; f receives one index
// per dimension in declaration order, enumerated lexicographically. An empty
// dims list applies f to no indices exactly once; any zero dimension makes
// the loop body empty, i.e. succeed.
Goal builde_nest(std::vector<int> dims,
                 std::function<Goal(const std::vector<int>&)> f);

}  // namespace relic::mk
