#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "relic/kanren.hpp"

// Shared machinery for the engine property tests: a random-term generator
// over a small universe and an occurs-checking reference unifier. The
// reference unifier is both the success/failure oracle and the filter that
// rejects pairs whose unification would have to build a cyclic term, which
// the engine (by design, like the rest of its family) does not defend
// against.
namespace relic::testsupport {

using mk::Subst;
using mk::Term;
using mk::Var;

enum class RefOutcome { ok, mismatch, occurs_violation };

// Triangular unifier over a std::map: the engine's algorithm plus the
// occurs check.
class RefUnifier {
public:
  Term walk(Term t) const {
    while (t.is_var()) {
      auto it = binding_.find(t.var().id);
      if (it == binding_.end()) break;
      t = it->second;
    }
    return t;
  }

  RefOutcome unify(const Term& a0, const Term& b0) {
    Term a = walk(a0);
    Term b = walk(b0);
    if (a.is_var() && b.is_var() && a.var() == b.var()) return RefOutcome::ok;
    if (a.is_var()) return bind(a.var(), b);
    if (b.is_var()) return bind(b.var(), a);
    if (a.is_pair() && b.is_pair()) {
      const RefOutcome heads = unify(a.head(), b.head());
      return heads == RefOutcome::ok ? unify(a.tail(), b.tail()) : heads;
    }
    return a == b ? RefOutcome::ok : RefOutcome::mismatch;
  }

private:
  bool occurs(int id, Term t) const {
    t = walk(t);
    if (t.is_var()) return t.var().id == id;
    if (t.is_pair()) return occurs(id, t.head()) || occurs(id, t.tail());
    return false;
  }

  RefOutcome bind(Var v, const Term& t) {
    if (occurs(v.id, t)) return RefOutcome::occurs_violation;
    binding_.emplace(v.id, t);
    return RefOutcome::ok;
  }

  std::map<int, Term> binding_;
};

// Random terms over a fixed variable pool, a handful of atoms, and pairs.
class TermGen {
public:
  TermGen(std::mt19937_64& rng, std::vector<Term> pool)
      : rng_(rng), pool_(std::move(pool)) {}

  Term gen(int depth) {
    std::uniform_int_distribution<int> shape(0, 9);
    const int roll = shape(rng_);
    if (depth > 0 && roll < 4) {
      Term head = gen(depth - 1);
      Term tail = gen(depth - 1);
      return Term::cons(std::move(head), std::move(tail));
    }
    if (roll < 7 && !pool_.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
      return pool_[pick(rng_)];
    }
    return atom();
  }

  Term atom() {
    std::uniform_int_distribution<int> pick(0, 6);
    switch (pick(rng_)) {
      case 0: return Term(0);
      case 1: return Term(1);
      case 2: return Term(2);
      case 3: return Term(Rational(1, 2));
      case 4: return Term(mk::Symbol("a"));
      case 5: return Term(mk::Symbol("b"));
      default: return Term::nil();
    }
  }

private:
  std::mt19937_64& rng_;
  std::vector<Term> pool_;
};

}  // namespace relic::testsupport
