#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "relic/rational.hpp"

// A small relational-programming engine in the miniKanren family.
//
// Terms are immutable values; substitutions are persistent triangular
// binding stores (extending one never touches the original); goals map a
// substitution to a lazy stream of substitutions whose explicit "immature"
// nodes carry the deferred search work. All values are safe to share across
// threads once constructed; forcing a single stream is sequential.
namespace relic::mk {

// ---------------------------------------------------------------------------
// Terms

struct Var {
  int id = -1;
  friend bool operator==(Var a, Var b) { return a.id == b.id; }
  friend bool operator!=(Var a, Var b) { return a.id != b.id; }
  friend bool operator<(Var a, Var b) { return a.id < b.id; }
};

// Interned symbol: equality is pointer equality on the interned name.
class Symbol {
public:
  explicit Symbol(std::string_view name);
  const std::string& name() const { return *name_; }
  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.name_ != b.name_; }

private:
  const std::string* name_;
};

struct Nil {
  friend bool operator==(Nil, Nil) { return true; }
};

// Logic variable | exact number | symbol | boolean | nil | pair.
// Proper lists are right-nested pairs ending in nil. Only pairs allocate.
class Term {
public:
  Term() : repr_(Nil{}) {}
  Term(Var v) : repr_(v) {}                 // NOLINT: implicit by intent
  Term(Rational n) : repr_(std::move(n)) {} // NOLINT
  Term(long long n) : repr_(Rational(n)) {} // NOLINT
  Term(int n) : repr_(Rational(n)) {}       // NOLINT
  Term(Symbol s) : repr_(s) {}              // NOLINT
  explicit Term(bool b) : repr_(b) {}

  static Term nil() { return Term(); }
  static Term cons(Term head, Term tail);
  static Term list(const std::vector<Term>& items);

  bool is_nil() const { return std::holds_alternative<Nil>(repr_); }
  bool is_var() const { return std::holds_alternative<Var>(repr_); }
  bool is_number() const { return std::holds_alternative<Rational>(repr_); }
  bool is_symbol() const { return std::holds_alternative<Symbol>(repr_); }
  bool is_bool() const { return std::holds_alternative<bool>(repr_); }
  bool is_pair() const;

  Var var() const { return std::get<Var>(repr_); }
  const Rational& number() const { return std::get<Rational>(repr_); }
  Symbol symbol() const { return std::get<Symbol>(repr_); }
  bool boolean() const { return std::get<bool>(repr_); }
  const Term& head() const;
  const Term& tail() const;

  // Collects a proper list into a vector; nullopt for improper lists.
  std::optional<std::vector<Term>> proper_list() const;

  // Structural equality. Undefined for cyclic terms (which unification
  // never creates; see unify).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Scheme-flavored rendering: (1 2 3), (a . b), 3/2, #t, sym, #<v7>.
  std::string str() const;

private:
  struct Pair;  // defined below; Term is incomplete here
  using Repr = std::variant<Nil, Var, Rational, Symbol, bool, std::shared_ptr<const Pair>>;
  Repr repr_;
};

struct Term::Pair {
  Term head;
  Term tail;
};

// ---------------------------------------------------------------------------
// Substitutions

// Persistent triangular substitution plus the fresh-variable counter.
// Bindings form a shared immutable chain; a bound term may contain variables
// bound elsewhere in the same substitution, so resolution is iterated walk.
// A variable is bound at most once, and only while unbound, which is what
// rules out binding cycles.
class Subst {
public:
  Subst() = default;

  int counter() const { return counter_; }
  std::size_t size() const { return size_; }

  std::pair<Var, Subst> make_fresh() const;
  std::pair<std::vector<Term>, Subst> make_fresh(int k) const;

  // The immediate binding of v, without walking.
  const Term* lookup(Var v) const;

  // Precondition: v is unbound in *this.
  Subst extend(Var v, Term t) const;

private:
  struct Node {
    Var v;
    Term t;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  int counter_ = 0;
  std::size_t size_ = 0;
};

// Resolves t through s until hitting a non-variable or an unbound variable.
Term walk(Term t, const Subst& s);

// walk, then recurse through pairs. Loops forever on user-created cyclic
// terms (engine-produced substitutions never contain them).
Term deep_walk(Term t, const Subst& s);

// Minimal extension of s making a and b equal under walk, or nullopt.
// No occurs check: binding a variable to a term containing itself is the
// caller's undefined behavior, as in the rest of the miniKanren family.
std::optional<Subst> unify(const Term& a, const Term& b, const Subst& s);

// ---------------------------------------------------------------------------
// Answer streams

// Lazy stream of substitutions. The four shapes mirror the four ways a
// search state can present itself: no answers, deferred work, exactly one
// answer, or an answer followed by more deferred work.
class Stream {
public:
  using Thunk = std::function<Stream()>;
  enum class Kind { empty, immature, single, cons };

  static Stream empty() { return Stream(Nothing{}); }
  static Stream single(Subst s) { return Stream(Single{std::move(s)}); }
  static Stream immature(Thunk t) { return Stream(Immature{std::move(t)}); }
  static Stream cons(Subst first, Thunk rest) {
    return Stream(Cons{std::move(first), std::move(rest)});
  }

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  bool is_empty() const { return kind() == Kind::empty; }
  bool is_immature() const { return kind() == Kind::immature; }

  // single | cons only.
  const Subst& head() const;
  // immature only: performs one step of deferred work.
  Stream force() const;
  // cons only: forces the tail thunk.
  Stream rest() const;

private:
  struct Nothing {};
  struct Immature {
    Thunk thunk;
  };
  struct Single {
    Subst subst;
  };
  struct Cons {
    Subst first;
    Thunk rest;
  };
  using Repr = std::variant<Nothing, Immature, Single, Cons>;
  explicit Stream(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

// Interleaving merge: immature nodes swap the two sides so neither arm can
// starve the other.
Stream mplus(Stream a, Stream::Thunk b);

// Monadic bind: feeds every answer of s through g. Both parameters are by
// value on purpose: a const Goal& overload would lose unqualified calls to
// std::bind (pulled in by ADL because Goal is a std::function, and a
// reference binding to the less-qualified deduced Goal& outranks one to
// const Goal&).
using Goal = std::function<Stream(const Subst&)>;
Stream bind(Stream s, Goal g);

// ---------------------------------------------------------------------------
// Goal constructors

Goal eq(Term a, Term b);
Goal succeed();
Goal fail();
Goal conj(Goal a, Goal b);
Goal disj(Goal a, Goal b);
Goal conj_all(std::vector<Goal> goals);
Goal disj_all(std::vector<Goal> goals);

// Allocates k fresh variables from the substitution's counter and delays
// the body, as fresh does.
Goal fresh(int k, std::function<Goal(const std::vector<Term>&)> body);
Goal fresh(std::function<Goal(Term)> body);
Goal fresh(std::function<Goal(Term, Term)> body);
Goal fresh(std::function<Goal(Term, Term, Term)> body);

// Committed choice: clauses are tried in order; the first whose head yields
// an answer is committed to, and its head answers run through its body.
// Later clauses are then unreachable. Forcing a head runs through immature
// nodes until an answer or exhaustion, so a diverging head diverges conda.
struct CondaClause {
  Goal head;
  Goal body;
};
Goal conda(std::vector<CondaClause> clauses);

// Succeeds (without extending the substitution) iff v currently resolves to
// a concrete term, i.e. walk does not end at an unbound variable.
Goal unified_varo(Term v);

// Deep-walks each var and hands the concrete terms to body, whose resulting
// goal runs against the unchanged substitution. Host arithmetic on a term
// that is still a variable must raise ProjectionError (see as_number).
Goal project(std::vector<Term> vars, std::function<Goal(const std::vector<Term>&)> body);
Goal project(Term v, std::function<Goal(Term)> body);
Goal project(Term a, Term b, std::function<Goal(Term, Term)> body);

class ProjectionError : public std::runtime_error {
public:
  explicit ProjectionError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric view of a projected term; throws ProjectionError naming the
// variable when the term is still unbound, or describing the term when it
// is not a number at all.
const Rational& as_number(const Term& t);

// ---------------------------------------------------------------------------
// run and reification

struct RunOutcome {
  std::vector<Term> answers;
  std::size_t forced_steps = 0;  // immature nodes forced
  bool exhausted = false;        // stream ran out before hitting any limit
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

// Applies the query goal to the empty substitution and pulls answers,
// reifying the query variable in each: deep-walk, then rename the remaining
// unbound variables _.0, _.1, ... in order of first appearance.
RunOutcome run_outcome(std::optional<std::size_t> max_answers,
                       const std::function<Goal(Term)>& query,
                       std::size_t max_steps = kNoLimit);
std::vector<Term> run(std::size_t n, const std::function<Goal(Term)>& query);
std::vector<Term> run_all(const std::function<Goal(Term)>& query);

Term reify(const Term& t, const Subst& s);

// Index of a reified-variable symbol: "_.3" -> 3.
std::optional<int> reified_index(const Term& t);

}  // namespace relic::mk
