#include "relic/kanren.hpp"

#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace relic::mk {

// ---------------------------------------------------------------------------
// Symbols

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mu;
  static std::set<std::string, std::less<>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return &*it;
}

}  // namespace

Symbol::Symbol(std::string_view name) : name_(intern(name)) {}

// ---------------------------------------------------------------------------
// Terms

Term Term::cons(Term head, Term tail) {
  Term t;
  t.repr_ = std::make_shared<const Pair>(Pair{std::move(head), std::move(tail)});
  return t;
}

Term Term::list(const std::vector<Term>& items) {
  Term t = nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) t = cons(*it, t);
  return t;
}

bool Term::is_pair() const {
  return std::holds_alternative<std::shared_ptr<const Pair>>(repr_);
}

const Term& Term::head() const {
  return std::get<std::shared_ptr<const Pair>>(repr_)->head;
}

const Term& Term::tail() const {
  return std::get<std::shared_ptr<const Pair>>(repr_)->tail;
}

std::optional<std::vector<Term>> Term::proper_list() const {
  std::vector<Term> items;
  const Term* t = this;
  while (t->is_pair()) {
    items.push_back(t->head());
    t = &t->tail();
  }
  if (!t->is_nil()) return std::nullopt;
  return items;
}

bool operator==(const Term& a, const Term& b) {
  if (a.repr_.index() != b.repr_.index()) return false;
  if (a.is_pair()) return a.head() == b.head() && a.tail() == b.tail();
  return std::visit(
      [&](const auto& av) {
        using T = std::decay_t<decltype(av)>;
        if constexpr (std::is_same_v<T, std::shared_ptr<const Term::Pair>>) {
          return true;  // unreachable, pairs handled above
        } else {
          return av == std::get<T>(b.repr_);
        }
      },
      a.repr_);
}

std::string Term::str() const {
  if (is_nil()) return "()";
  if (is_var()) return "#<v" + std::to_string(var().id) + ">";
  if (is_number()) return number().str();
  if (is_symbol()) return symbol().name();
  if (is_bool()) return boolean() ? "#t" : "#f";
  std::string out = "(";
  const Term* t = this;
  bool first = true;
  while (t->is_pair()) {
    if (!first) out += ' ';
    out += t->head().str();
    first = false;
    t = &t->tail();
  }
  if (!t->is_nil()) {
    out += " . ";
    out += t->str();
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Substitutions

std::pair<Var, Subst> Subst::make_fresh() const {
  Subst next = *this;
  Var v{next.counter_++};
  return {v, next};
}

std::pair<std::vector<Term>, Subst> Subst::make_fresh(int k) const {
  Subst next = *this;
  std::vector<Term> vars;
  vars.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) vars.emplace_back(Var{next.counter_++});
  return {std::move(vars), next};
}

const Term* Subst::lookup(Var v) const {
  for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) {
    if (n->v == v) return &n->t;
  }
  return nullptr;
}

Subst Subst::extend(Var v, Term t) const {
  Subst next = *this;
  next.head_ = std::make_shared<const Node>(Node{v, std::move(t), head_});
  ++next.size_;
  return next;
}

Term walk(Term t, const Subst& s) {
  while (t.is_var()) {
    const Term* bound = s.lookup(t.var());
    if (bound == nullptr) return t;
    t = *bound;
  }
  return t;
}

Term deep_walk(Term t, const Subst& s) {
  t = walk(std::move(t), s);
  if (!t.is_pair()) return t;
  return Term::cons(deep_walk(t.head(), s), deep_walk(t.tail(), s));
}

std::optional<Subst> unify(const Term& a, const Term& b, const Subst& s) {
  Term u = walk(a, s);
  Term v = walk(b, s);
  if (u.is_var() && v.is_var() && u.var() == v.var()) return s;
  if (u.is_var()) return s.extend(u.var(), std::move(v));
  if (v.is_var()) return s.extend(v.var(), std::move(u));
  if (u.is_pair() && v.is_pair()) {
    auto s1 = unify(u.head(), v.head(), s);
    if (!s1) return std::nullopt;
    return unify(u.tail(), v.tail(), *s1);
  }
  if (u == v) return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Streams

const Subst& Stream::head() const {
  if (auto* single = std::get_if<Single>(&repr_)) return single->subst;
  return std::get<Cons>(repr_).first;
}

Stream Stream::force() const { return std::get<Immature>(repr_).thunk(); }

Stream Stream::rest() const {
  if (std::holds_alternative<Single>(repr_)) return empty();
  return std::get<Cons>(repr_).rest();
}

Stream mplus(Stream a, Stream::Thunk b) {
  switch (a.kind()) {
    case Stream::Kind::empty:
      return b();
    case Stream::Kind::immature:
      // Swap sides so the deferred arm cannot monopolize the search.
      return Stream::immature([a = std::move(a), b = std::move(b)]() {
        return mplus(b(), [a]() { return a.force(); });
      });
    case Stream::Kind::single:
      return Stream::cons(a.head(), std::move(b));
    case Stream::Kind::cons:
      return Stream::cons(a.head(), [a, b = std::move(b)]() {
        return mplus(b(), [a]() { return a.rest(); });
      });
  }
  return Stream::empty();  // unreachable
}

Stream bind(Stream s, Goal g) {
  switch (s.kind()) {
    case Stream::Kind::empty:
      return Stream::empty();
    case Stream::Kind::immature:
      return Stream::immature(
          [s = std::move(s), g = std::move(g)]() { return bind(s.force(), g); });
    case Stream::Kind::single:
      return g(s.head());
    case Stream::Kind::cons: {
      // Evaluate the head before the capture below moves s out from under it.
      Stream first = g(s.head());
      return mplus(std::move(first),
                   [s = std::move(s), g = std::move(g)]() { return bind(s.rest(), g); });
    }
  }
  return Stream::empty();  // unreachable
}

// ---------------------------------------------------------------------------
// Goal constructors

Goal eq(Term a, Term b) {
  return [a = std::move(a), b = std::move(b)](const Subst& s) {
    auto s1 = unify(a, b, s);
    return s1 ? Stream::single(*s1) : Stream::empty();
  };
}

Goal succeed() {
  return [](const Subst& s) { return Stream::single(s); };
}

Goal fail() {
  return [](const Subst&) { return Stream::empty(); };
}

Goal conj(Goal a, Goal b) {
  return [a = std::move(a), b = std::move(b)](const Subst& s) {
    return bind(a(s), b);
  };
}

Goal disj(Goal a, Goal b) {
  return [a = std::move(a), b = std::move(b)](const Subst& s) {
    return mplus(a(s), [b, s]() { return b(s); });
  };
}

Goal conj_all(std::vector<Goal> goals) {
  Goal acc = succeed();
  for (auto it = goals.rbegin(); it != goals.rend(); ++it) {
    acc = conj(std::move(*it), std::move(acc));
  }
  return acc;
}

Goal disj_all(std::vector<Goal> goals) {
  if (goals.empty()) return fail();
  Goal acc = std::move(goals.back());
  for (auto it = goals.rbegin() + 1; it != goals.rend(); ++it) {
    acc = disj(std::move(*it), std::move(acc));
  }
  return acc;
}

Goal fresh(int k, std::function<Goal(const std::vector<Term>&)> body) {
  if (k < 0) throw std::invalid_argument("fresh: negative variable count");
  return [k, body = std::move(body)](const Subst& s) {
    return Stream::immature([k, body, s]() {
      auto [vars, s1] = s.make_fresh(k);
      return body(vars)(s1);
    });
  };
}

Goal fresh(std::function<Goal(Term)> body) {
  return fresh(1, [body = std::move(body)](const std::vector<Term>& vs) {
    return body(vs[0]);
  });
}

Goal fresh(std::function<Goal(Term, Term)> body) {
  return fresh(2, [body = std::move(body)](const std::vector<Term>& vs) {
    return body(vs[0], vs[1]);
  });
}

Goal fresh(std::function<Goal(Term, Term, Term)> body) {
  return fresh(3, [body = std::move(body)](const std::vector<Term>& vs) {
    return body(vs[0], vs[1], vs[2]);
  });
}

namespace {

Stream conda_commit(const std::shared_ptr<const std::vector<CondaClause>>& clauses,
                    std::size_t index, const Subst& s) {
  if (index >= clauses->size()) return Stream::empty();
  Stream head = (*clauses)[index].head(s);
  for (;;) {
    switch (head.kind()) {
      case Stream::Kind::empty:
        return conda_commit(clauses, index + 1, s);
      case Stream::Kind::immature:
        head = head.force();
        break;
      case Stream::Kind::single:
      case Stream::Kind::cons:
        return bind(std::move(head), (*clauses)[index].body);
    }
  }
}

}  // namespace

Goal conda(std::vector<CondaClause> clauses) {
  if (clauses.empty()) throw std::invalid_argument("conda: no clauses");
  auto shared = std::make_shared<const std::vector<CondaClause>>(std::move(clauses));
  return [shared](const Subst& s) {
    return Stream::immature([shared, s]() { return conda_commit(shared, 0, s); });
  };
}

Goal unified_varo(Term v) {
  return [v = std::move(v)](const Subst& s) {
    return walk(v, s).is_var() ? Stream::empty() : Stream::single(s);
  };
}

Goal project(std::vector<Term> vars,
             std::function<Goal(const std::vector<Term>&)> body) {
  return [vars = std::move(vars), body = std::move(body)](const Subst& s) {
    std::vector<Term> walked;
    walked.reserve(vars.size());
    for (const Term& v : vars) walked.push_back(deep_walk(v, s));
    return body(walked)(s);
  };
}

Goal project(Term v, std::function<Goal(Term)> body) {
  return project(std::vector<Term>{std::move(v)},
                 [body = std::move(body)](const std::vector<Term>& ts) {
                   return body(ts[0]);
                 });
}

Goal project(Term a, Term b, std::function<Goal(Term, Term)> body) {
  return project(std::vector<Term>{std::move(a), std::move(b)},
                 [body = std::move(body)](const std::vector<Term>& ts) {
                   return body(ts[0], ts[1]);
                 });
}

const Rational& as_number(const Term& t) {
  if (t.is_var()) {
    throw ProjectionError("projected variable #<v" + std::to_string(t.var().id) +
                          "> is unbound; cannot use it in arithmetic");
  }
  if (!t.is_number()) {
    throw ProjectionError("projected term " + t.str() + " is not a number");
  }
  return t.number();
}

// ---------------------------------------------------------------------------
// run and reification

namespace {

Term reify_walked(const Term& t, std::map<int, int>& names) {
  if (t.is_var()) {
    auto [it, inserted] = names.emplace(t.var().id, static_cast<int>(names.size()));
    return Term(Symbol("_." + std::to_string(it->second)));
  }
  if (t.is_pair()) {
    Term head = reify_walked(t.head(), names);
    Term tail = reify_walked(t.tail(), names);
    return Term::cons(std::move(head), std::move(tail));
  }
  return t;
}

}  // namespace

Term reify(const Term& t, const Subst& s) {
  std::map<int, int> names;
  return reify_walked(deep_walk(t, s), names);
}

std::optional<int> reified_index(const Term& t) {
  if (!t.is_symbol()) return std::nullopt;
  const std::string& name = t.symbol().name();
  if (name.size() < 3 || name[0] != '_' || name[1] != '.') return std::nullopt;
  int value = 0;
  for (std::size_t i = 2; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    value = value * 10 + (name[i] - '0');
  }
  return value;
}

RunOutcome run_outcome(std::optional<std::size_t> max_answers,
                       const std::function<Goal(Term)>& query,
                       std::size_t max_steps) {
  RunOutcome out;
  if (max_answers && *max_answers == 0) {
    out.exhausted = false;
    return out;
  }
  auto [qvar, s0] = Subst().make_fresh();
  Term q(qvar);
  Stream stream = query(q)(s0);
  std::vector<Subst> found;
  for (;;) {
    switch (stream.kind()) {
      case Stream::Kind::empty:
        out.exhausted = true;
        goto done;
      case Stream::Kind::immature:
        if (out.forced_steps >= max_steps) goto done;
        ++out.forced_steps;
        stream = stream.force();
        break;
      case Stream::Kind::single:
        found.push_back(stream.head());
        out.exhausted = true;
        goto done;
      case Stream::Kind::cons:
        found.push_back(stream.head());
        if (max_answers && found.size() >= *max_answers) goto done;
        stream = stream.rest();
        break;
    }
    if (max_answers && found.size() >= *max_answers) goto done;
  }
done:
  out.answers.reserve(found.size());
  for (const Subst& s : found) out.answers.push_back(reify(q, s));
  return out;
}

std::vector<Term> run(std::size_t n, const std::function<Goal(Term)>& query) {
  return run_outcome(n, query).answers;
}

std::vector<Term> run_all(const std::function<Goal(Term)>& query) {
  return run_outcome(std::nullopt, query).answers;
}

}  // namespace relic::mk
