#pragma once

// Cartesian monads on finite sets of tokens.
//
// A monad here is a rule-level object: unit, multiplication and the action on
// maps are given elementwise and never require materializing a carrier, so the
// free-monoid monad (whose carriers are infinite) works through fibers and
// length-bounded enumeration.  The identity and monoid-action monads have
// finite carriers and can be materialized outright.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tmcat/finset.hpp"
#include "tmcat/report.hpp"

namespace tmcat {

// T-carrier: either a concrete finite set or lists over another carrier.
// The recursive case types T(T(x)) for the free-monoid monad without ever
// enumerating it.
class Carrier {
 public:
  Carrier() : kind_(Kind::finite) {}

  static Carrier finite(FinSetObj xs);
  static Carrier lists_over(Carrier base);

  bool is_finite_set() const { return kind_ == Kind::finite; }
  const FinSetObj& set() const;    // finite carriers
  const Carrier& base() const;     // list carriers

  bool contains(const Elem& t) const;

  // true when no list layer occurs, i.e. enumerate() is exhaustive
  bool finitely_enumerable() const { return kind_ == Kind::finite; }

  // all elements whose every list layer has length <= length_bound;
  // exhaustive for finite carriers regardless of the bound
  std::vector<Elem> enumerate(int length_bound) const;

  std::string str() const;

 private:
  enum class Kind { finite, lists };
  Kind kind_;
  FinSetObj set_;
  std::shared_ptr<const Carrier> base_;
};

// A finite monoid given by its multiplication table.  The table rows/columns
// follow the order in which `elements` is passed; storage is canonicalized.
class MonoidTable {
 public:
  // checks closure, the unit laws and associativity; the error message names
  // the first failing pair or triple
  MonoidTable(std::vector<Elem> elements, Elem unit,
              std::vector<std::vector<Elem>> table);

  static MonoidTable zmod(int n);  // Z/n, additive, atoms "0".."n-1"

  const FinSetObj& elements() const { return elements_; }
  const Elem& unit() const { return unit_; }
  const Elem& product(const Elem& a, const Elem& b) const;

  // canonical serialization, used for monad signatures
  std::string str() const;

 private:
  FinSetObj elements_;
  Elem unit_;
  std::vector<std::vector<std::size_t>> table_;  // index form
};

// Elementwise monad interface.  `map_elem` is the action of T on an arbitrary
// rule, applied at one element; `fiber` is the preimage of T(u) over one
// element of T(cod u), always a finite set.
class Monad {
 public:
  virtual ~Monad() = default;

  const std::string& name() const { return name_; }
  // equality token: two monads act alike iff their signatures match
  const std::string& signature() const { return signature_; }
  bool finite_carriers() const { return finite_; }

  virtual Elem unit(const Elem& x) const = 0;
  virtual Elem mult(const Elem& tt) const = 0;
  virtual Elem map_elem(const std::function<Elem(const Elem&)>& rule,
                        const Elem& t) const = 0;
  virtual bool member(const std::function<bool(const Elem&)>& base_pred,
                      const Elem& t) const = 0;
  // bounded enumeration of T({values}); exhaustive for finite carriers
  virtual std::vector<Elem> enumerate_over(const std::vector<Elem>& values,
                                           int length_bound) const = 0;
  virtual FinSetObj fiber(const FinMap& u, const Elem& t) const = 0;
  virtual Carrier lift(const Carrier& c) const = 0;

  // the table of a monoid action monad; null for every other monad
  virtual const MonoidTable* monoid_table() const { return nullptr; }

  Elem map_elem(const FinMap& u, const Elem& t) const;

  // materializations, finite carriers only (throws otherwise)
  FinSetObj lift_set(const FinSetObj& x) const;
  FinMap lift_map(const FinMap& u) const;

  // tabulated T(u) restricted to the given elements of T(dom u)
  FinMap map_on(const FinMap& u, const FinSetObj& dom_subset,
                const FinSetObj& cod) const;

 protected:
  Monad(std::string name, std::string signature, bool finite)
      : name_(std::move(name)),
        signature_(std::move(signature)),
        finite_(finite) {}

 private:
  std::string name_, signature_;
  bool finite_;
};

using MonadPtr = std::shared_ptr<const Monad>;

MonadPtr identity_monad();
MonadPtr monoid_action_monad(MonoidTable m);  // T(x) = M x x
MonadPtr free_monoid_monad();                 // T(x) = lists over x

inline FinSetObj t_fiber(const Monad& T, const FinMap& u, const Elem& t) {
  return T.fiber(u, t);
}

// Pullback of f against T(u), computed by fibers:
//
//   apex --leg_p--> tab( subset of T(dom u) )
//    |                      |
//  leg_f                p = T(u) tabulated
//    v                      v
//  dom f -----f------> cod f ( subset of T(cod u) )
//
// apex elements are pairs (a, s) with a in dom f and s in the T(u)-fiber over
// f(a).  Note the component order: the f-side is first here, whereas
// chosen_pullback puts the p-side first; both orders are fixed per constructor.
PullbackSquare t_pullback(const Monad& T, const FinMap& f, const FinMap& u);

// Monad laws on all elements up to the bounds: unit laws and associativity of
// mult, plus naturality of unit and mult (as equations).
Report check_monad_laws(const Monad& T, int size_bound, int length_bound);

// Cartesianness on synthetic sets/maps up to the bounds: T preserves chosen
// pullbacks, and the naturality squares of unit and mult are pullbacks.
Report check_cartesian(const Monad& T, int size_bound, int length_bound);

// T preserves kernel pairs up to the bounds (automatic for pullback-preserving
// T; checked directly so the hypothesis can be reported on its own).
Report check_kernel_pair_preservation(const Monad& T, int size_bound,
                                      int length_bound = 3);

// T(f) surjective on bounded elements iff f surjective; used where T-level
// descent classes are reduced to map-level surjectivity.
bool t_reflects_surjectivity(const Monad& T, const FinMap& f,
                             int length_bound);

}  // namespace tmcat
