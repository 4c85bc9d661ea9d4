#include "relic/signal.hpp"

#include <istream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "relic/loops.hpp"

namespace relic::signal {

using mk::CondaClause;
using mk::Goal;
using mk::Subst;
using mk::Symbol;
using mk::Term;

namespace {

void validate_window(const Signal& v, int window) {
  if (window < 1 || static_cast<std::size_t>(window) > v.size()) {
    throw std::invalid_argument("moving average: window must satisfy 1 <= w <= signal length");
  }
}

}  // namespace

Signal moving_average_naive(const Signal& v, int window) {
  validate_window(v, window);
  const std::size_t n = v.size();
  const std::size_t w = static_cast<std::size_t>(window);
  Signal out;
  out.reserve(n - w + 1);
  for (std::size_t i = 0; i + w <= n; ++i) {
    Rational sum = 0;
    for (std::size_t j = 0; j < w; ++j) sum += v[i + j];
    out.push_back(sum / Rational(window));
  }
  return out;
}

SummedTable summed_table(const Signal& v) {
  SummedTable t;
  t.reserve(v.size() + 1);
  t.push_back(0);
  for (const Rational& x : v) t.push_back(t.back() + x);
  return t;
}

// ---------------------------------------------------------------------------
// Lazy-stream implementation

namespace {

// Scheme-style stream cell: the tail is delayed and memoized on first force.
struct Cell {
  Rational head;
  std::function<std::shared_ptr<Cell>()> gen;
  std::shared_ptr<Cell> memo;

  std::shared_ptr<Cell> tail() {
    if (gen) {
      memo = gen();
      gen = nullptr;
    }
    return memo;
  }
};
using CellPtr = std::shared_ptr<Cell>;

CellPtr stream_cons(Rational head, std::function<CellPtr()> gen) {
  auto c = std::make_shared<Cell>();
  c->head = std::move(head);
  c->gen = std::move(gen);
  return c;
}

CellPtr vector_stream(const std::shared_ptr<const Signal>& xs, std::size_t i) {
  if (i >= xs->size()) return nullptr;
  return stream_cons((*xs)[i], [xs, i]() { return vector_stream(xs, i + 1); });
}

CellPtr sum_helper(CellPtr summed, CellPtr rest) {
  return stream_cons(summed->head + rest->head, [summed, rest]() {
    return sum_helper(summed->tail(), rest->tail());
  });
}

}  // namespace

Signal moving_average_stream(const Signal& v, int window) {
  validate_window(v, window);
  const std::size_t n = v.size();
  const std::size_t w = static_cast<std::size_t>(window);

  // summed = 0 : zipWith (+) summed values — the table defined against
  // itself, one step behind.
  auto xs = std::make_shared<const Signal>(v);
  auto hole = std::make_shared<CellPtr>();
  CellPtr summed = stream_cons(Rational(0), [hole, xs]() {
    return sum_helper(*hole, vector_stream(xs, 0));
  });
  *hole = summed;

  CellPtr ahead = summed;
  for (std::size_t i = 0; i < w; ++i) ahead = ahead->tail();

  Signal out;
  out.reserve(n - w + 1);
  CellPtr behind = summed;
  for (std::size_t i = 0; i + w <= n; ++i) {
    out.push_back((ahead->head - behind->head) / Rational(window));
    if (i + w < n) {
      ahead = ahead->tail();
      behind = behind->tail();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Memoized implementation

MemoSummedTable::MemoSummedTable(Signal v)
    : v_(std::move(v)), memo_(v_.size() + 1) {
  memo_[0] = Rational(0);
}

const Rational& MemoSummedTable::at(std::size_t m) {
  if (m >= memo_.size()) throw std::out_of_range("MemoSummedTable: index past table end");
  if (!memo_[m]) {
    std::size_t j = m;
    while (!memo_[j]) --j;  // memo_[0] is always present
    for (std::size_t k = j + 1; k <= m; ++k) {
      memo_[k] = *memo_[k - 1] + v_[k - 1];
      ++computed_;
    }
  }
  return *memo_[m];
}

Signal moving_average_memo(const Signal& v, int window) {
  validate_window(v, window);
  const std::size_t n = v.size();
  const std::size_t w = static_cast<std::size_t>(window);
  MemoSummedTable table(v);
  Signal out;
  out.reserve(n - w + 1);
  for (std::size_t m = 0; m + w <= n; ++m) {
    out.push_back((table.at(m + w) - table.at(m)) / Rational(window));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relational implementation

mk::Goal strategy_selecto(std::vector<mk::CondaClause> strategies) {
  if (strategies.empty()) {
    throw std::invalid_argument("strategy_selecto: no strategies");
  }
  return mk::conda(std::move(strategies));
}

namespace {

const Symbol kShortcut{"shortcut"};
const Symbol kDirect{"direct"};

// The goal builders below capture everything by value (vectors of terms are
// cheap shared handles): the closures they create run later, while the
// answer stream is being forced, long after the builder itself returned.
using SignalPtr = std::shared_ptr<const Signal>;

// One table-building step: t[i+1] = t[i] + v[i], with t[i] projected into
// host arithmetic.
Goal table_step(std::vector<Term> t, SignalPtr v, int i) {
  return mk::fresh([t = std::move(t), v = std::move(v), i](Term t1) {
    return mk::conj(mk::eq(t1, t[i]),
                    mk::project(t1, [t, v, i](Term a) {
                      return mk::eq(t[i + 1], Term(mk::as_number(a) + (*v)[i]));
                    }));
  });
}

// Direct window summation through the intermediate list u:
// u[0] = v[i], u[j+1] = u[j] + v[i+j+1], and the output takes u[w-1].
Goal direct_sum(Term out, SignalPtr v, int w, int i) {
  return mk::fresh(w + 1, [out, v = std::move(v), w, i](const std::vector<Term>& u) {
    return mk::conj(
        mk::eq(u[0], Term((*v)[i])),
        mk::builde(w, [out, v, u, w, i](int j) {
          if (j == w - 1) return mk::eq(out, u[w - 1]);
          return mk::fresh([v, u, i, j](Term x) {
            return mk::conj(mk::eq(x, u[j]),
                            mk::project(x, [v, u, i, j](Term xv) {
                              return mk::eq(u[j + 1],
                                            Term(mk::as_number(xv) + (*v)[i + j + 1]));
                            }));
          });
        }));
  });
}

// The committed choice for one output: table shortcut when both entries are
// already computed, otherwise fall through to direct summation. Each branch
// also tags the output's marker variable so the caller can see which
// strategy fired.
Goal average_step(std::vector<Term> t, std::vector<Term> r, std::vector<Term> marks,
                  SignalPtr v, int w, int i, StrategySelector choose) {
  return mk::fresh([t = std::move(t), r = std::move(r), marks = std::move(marks),
                    v = std::move(v), w, i, choose = std::move(choose)](Term t1, Term t2) {
    std::vector<CondaClause> clauses;
    clauses.push_back(CondaClause{
        mk::conj(mk::unified_varo(t1), mk::unified_varo(t2)),
        mk::conj(mk::project(t1, t2,
                             [out = r[i]](Term a, Term b) {
                               return mk::eq(out, Term(mk::as_number(b) - mk::as_number(a)));
                             }),
                 mk::eq(marks[i], Term(kShortcut)))});
    clauses.push_back(CondaClause{
        mk::succeed(),
        mk::conj(direct_sum(r[i], v, w, i), mk::eq(marks[i], Term(kDirect)))});
    return mk::conj(mk::eq(t1, t[i]),
                    mk::conj(mk::eq(t2, t[i + w]), choose(std::move(clauses))));
  });
}

}  // namespace

RelationalAverage moving_average_relational(const Signal& v, int window,
                                            bool prebuild_table) {
  return moving_average_relational(v, window, prebuild_table, strategy_selecto);
}

RelationalAverage moving_average_relational(const Signal& v, int window,
                                            bool prebuild_table,
                                            StrategySelector choose) {
  validate_window(v, window);
  const int n = static_cast<int>(v.size());
  const int w = window;
  const int outputs = n - w + 1;
  auto values = std::make_shared<const Signal>(v);

  auto query = [values, n, w, outputs, prebuild_table,
                choose = std::move(choose)](Term q) {
    return mk::fresh(n + 1, [=](const std::vector<Term>& t) {
      return mk::fresh(outputs, [=](const std::vector<Term>& r) {
        return mk::fresh(outputs, [=](const std::vector<Term>& marks) {
          std::vector<Goal> goals;
          goals.push_back(mk::eq(t[0], Term(0)));
          if (prebuild_table) {
            goals.push_back(
                mk::builde(n, [values, t](int i) { return table_step(t, values, i); }));
          }
          goals.push_back(mk::builde(outputs, [=](int i) {
            return average_step(t, r, marks, values, w, i, choose);
          }));
          goals.push_back(mk::eq(
              q, Term::list({Term::list(t), Term::list(r), Term::list(marks)})));
          return mk::conj_all(std::move(goals));
        });
      });
    });
  };

  std::vector<Term> answers = mk::run_all(query);
  if (answers.size() != 1) {
    throw std::logic_error("moving_average_relational: expected exactly one answer, got " +
                           std::to_string(answers.size()));
  }

  auto parts = answers[0].proper_list();
  if (!parts || parts->size() != 3) {
    throw std::logic_error("moving_average_relational: malformed answer term");
  }
  auto t_items = (*parts)[0].proper_list();
  auto r_items = (*parts)[1].proper_list();
  auto m_items = (*parts)[2].proper_list();
  if (!t_items || !r_items || !m_items) {
    throw std::logic_error("moving_average_relational: malformed answer lists");
  }

  RelationalAverage result;
  result.table.reserve(t_items->size());
  for (const Term& entry : *t_items) {
    if (entry.is_number()) {
      result.table.push_back(entry.number());
    } else {
      result.table.push_back(std::nullopt);
    }
  }
  result.window_sums.reserve(r_items->size());
  result.averages.reserve(r_items->size());
  for (const Term& entry : *r_items) {
    if (!entry.is_number()) {
      throw std::logic_error("moving_average_relational: output left unbound");
    }
    result.window_sums.push_back(entry.number());
    result.averages.push_back(entry.number() / Rational(w));
  }
  for (const Term& mark : *m_items) {
    if (mark.is_symbol() && mark.symbol() == kShortcut) {
      ++result.stats.shortcut_hits;
    } else if (mark.is_symbol() && mark.symbol() == kDirect) {
      ++result.stats.direct_computations;
    } else {
      throw std::logic_error("moving_average_relational: malformed strategy marker");
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text format

Signal parse_signal_line(std::string_view line) {
  Signal out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view token = line.substr(i, j - i);
    auto value = Rational::parse(token);
    if (!value) {
      throw std::invalid_argument("signal: invalid exact number '" + std::string(token) +
                                  "' (floats are not accepted)");
    }
    out.push_back(*value);
    i = j;
  }
  return out;
}

std::vector<Signal> parse_signals(std::istream& in) {
  std::vector<Signal> out;
  std::string line;
  while (std::getline(in, line)) {
    Signal s = parse_signal_line(line);
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::string format_signal(const Signal& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += v[i].str();
  }
  return out;
}

}  // namespace relic::signal
