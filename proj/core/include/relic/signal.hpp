#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relic/kanren.hpp"
#include "relic/rational.hpp"

// One-dimensional moving averages in four styles over exact numbers: a
// direct window sum, a self-referential lazy stream over the prefix-sum
// table, an on-demand memoized table, and a relational program that picks
// between a table shortcut and direct summation per output.
namespace relic::signal {

using Signal = std::vector<Rational>;

// Prefix sums: length n+1, t[0] = 0, t[m] = t[m-1] + v[m-1].
using SummedTable = std::vector<Rational>;

// window must satisfy 1 <= window <= v.size(); output has
// v.size() - window + 1 entries, each the exact mean of its window.
Signal moving_average_naive(const Signal& v, int window);

SummedTable summed_table(const Signal& v);

// Same contract as the naive version; internally the prefix table is a lazy
// stream defined in terms of itself, and outputs map (x - y) / window over
// the stream offset by `window` against itself.
Signal moving_average_stream(const Signal& v, int window);

// Prefix-sum table computed top-down on demand; each entry at most once.
class MemoSummedTable {
public:
  explicit MemoSummedTable(Signal v);

  // m in [0, size()-1].
  const Rational& at(std::size_t m);

  std::size_t size() const { return memo_.size(); }      // n + 1
  std::size_t computed() const { return computed_; }     // entries filled beyond t[0]

private:
  Signal v_;
  std::vector<std::optional<Rational>> memo_;
  std::size_t computed_ = 0;
};

Signal moving_average_memo(const Signal& v, int window);

struct StrategyStats {
  std::size_t shortcut_hits = 0;
  std::size_t direct_computations = 0;
};

struct RelationalAverage {
  Signal averages;                            // window sums / window
  std::vector<std::optional<Rational>> table; // reified t; nullopt = never bound
  Signal window_sums;                         // the r list of the run
  StrategyStats stats;                        // which branch produced each output
};

// Runs the relational program: t[0] = 0, an optional loop binding the whole
// prefix table, then one committed choice per output between the table
// shortcut (guarded by unified_varo on both table entries) and direct
// window summation. Both branches bind the window sum; averages divide by
// the window once at the end. With prebuild_table = false the table entries
// beyond t[0] stay fresh and every output takes the direct branch.
RelationalAverage moving_average_relational(const Signal& v, int window,
                                            bool prebuild_table = true);

// Same program with the committed-choice combinator swapped out, e.g.
// mk::conda for the inline form. The default overload routes through
// strategy_selecto.
using StrategySelector = std::function<mk::Goal(std::vector<mk::CondaClause>)>;
RelationalAverage moving_average_relational(const Signal& v, int window,
                                            bool prebuild_table,
                                            StrategySelector choose);

// Committed choice over strategies ordered cheapest-shortcut-first; the
// caller ends the list with a succeed-guarded fallback.
mk::Goal strategy_selecto(std::vector<mk::CondaClause> strategies);

// Whitespace-separated exact numbers ("-3", "7/2"); floats rejected.
Signal parse_signal_line(std::string_view line);
// One signal per non-blank line.
std::vector<Signal> parse_signals(std::istream& in);
std::string format_signal(const Signal& v);

}  // namespace relic::signal
