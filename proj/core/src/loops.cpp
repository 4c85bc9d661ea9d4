#include "relic/loops.hpp"

#include <memory>
#include <stdexcept>

namespace relic::mk {

namespace {

using IndexGoal = std::shared_ptr<const std::function<Goal(int)>>;

Goal builde_from(int m, int n, const IndexGoal& f) {
  if (m >= n) return succeed();
  return [m, n, f](const Subst& s) {
    return Stream::immature([m, n, f, s]() {
      return bind((*f)(m)(s), builde_from(m + 1, n, f));
    });
  };
}

Goal nest_from(const std::shared_ptr<const std::vector<int>>& dims,
               std::size_t depth, std::vector<int> indices,
               const std::shared_ptr<const std::function<Goal(const std::vector<int>&)>>& f) {
  if (depth == dims->size()) return (*f)(indices);
  int extent = (*dims)[depth];
  return builde(extent, [dims, depth, indices = std::move(indices), f](int i) {
    std::vector<int> next = indices;
    next.push_back(i);
    return nest_from(dims, depth + 1, std::move(next), f);
  });
}

}  // namespace

Goal builde(int n, std::function<Goal(int)> f) {
  if (n < 0) throw std::invalid_argument("builde: negative bound");
  return builde_from(0, n, std::make_shared<const std::function<Goal(int)>>(std::move(f)));
}

Goal builde_nest(std::vector<int> dims,
                 std::function<Goal(const std::vector<int>&)> f) {
  for (int d : dims) {
    if (d < 0) throw std::invalid_argument("builde_nest: negative dimension");
  }
  auto shared_dims = std::make_shared<const std::vector<int>>(std::move(dims));
  auto shared_f =
      std::make_shared<const std::function<Goal(const std::vector<int>&)>>(std::move(f));
  return nest_from(shared_dims, 0, {}, shared_f);
}

}  // namespace relic::mk
