#pragma once

// Finite sets of structured tokens and total maps between them.
// Everything downstream (monads, multicategories, descent) is built from
// these four pieces: Elem, FinSetObj, FinMap, PullbackSquare.
//
// Determinism contract: sets are kept sorted in the element order, maps are
// stored aligned with their sorted domain, and every constructed object
// (pullback apexes, quotients, images) is canonical, so equal inputs give
// bit-for-bit equal outputs.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tmcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dom/cod mismatches, elements applied outside a domain, malformed tables
struct BoundaryError : Error {
  using Error::Error;
};

// a required equation failed; the message names the witness element
struct CommutationError : Error {
  using Error::Error;
};

// A structured token: an atom (named), an ordered pair, or a finite list.
// Pairs and lists are distinct constructors even when a list has length two.
// The order is total: atoms < pairs < lists, then lexicographic within a kind.
class Elem {
 public:
  enum class Kind : std::uint8_t { atom, pair, list };

  Elem() : kind_(Kind::atom) {}

  static Elem atom(std::string name);
  static Elem pair(Elem first, Elem second);
  static Elem list(std::vector<Elem> items);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::atom; }
  bool is_pair() const { return kind_ == Kind::pair; }
  bool is_list() const { return kind_ == Kind::list; }

  const std::string& name() const;               // atoms only
  const Elem& first() const;                     // pairs only
  const Elem& second() const;                    // pairs only
  const std::vector<Elem>& items() const;        // lists only

  std::strong_ordering operator<=>(const Elem& other) const;
  bool operator==(const Elem& other) const { return (*this <=> other) == 0; }

  // printable canonical form: a | (a,b) | [a,b,c]
  std::string str() const;

 private:
  Kind kind_;
  std::string atom_;
  std::vector<Elem> parts_;  // size 2 for pairs, arbitrary for lists
};

// A finite set: sorted, duplicate-free vector of tokens.
class FinSetObj {
 public:
  FinSetObj() = default;
  // sorts and drops duplicates, so any enumeration order is accepted
  explicit FinSetObj(std::vector<Elem> elems);

  static FinSetObj atoms(std::initializer_list<std::string> names);

  const std::vector<Elem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  bool contains(const Elem& e) const;
  std::optional<std::size_t> find(const Elem& e) const;
  std::size_t index_of(const Elem& e) const;  // throws BoundaryError if absent

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const FinSetObj&) const = default;
  auto operator<=>(const FinSetObj&) const = default;

  std::string str() const;

 private:
  std::vector<Elem> elems_;
};

FinSetObj set_union(const FinSetObj& a, const FinSetObj& b);
bool subset_of(const FinSetObj& a, const FinSetObj& b);

// A total map between finite sets. Images are stored aligned with the sorted
// domain; construction checks totality and that every image lies in the
// codomain, naming the offending element otherwise.
class FinMap {
 public:
  FinMap() = default;
  FinMap(FinSetObj dom, FinSetObj cod, std::vector<Elem> images_in_dom_order);

  static FinMap from_rule(FinSetObj dom, FinSetObj cod,
                          const std::function<Elem(const Elem&)>& rule);
  static FinMap from_pairs(FinSetObj dom, FinSetObj cod,
                           const std::vector<std::pair<Elem, Elem>>& graph);
  static FinMap identity(FinSetObj x);
  static FinMap constant(FinSetObj dom, FinSetObj cod, const Elem& value);

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }
  const std::vector<Elem>& images() const { return images_; }

  const Elem& apply(const Elem& x) const;
  const Elem& operator()(const Elem& x) const { return apply(x); }

  // same domain and same values; codomains may differ
  bool pointwise_equal(const FinMap& other) const;

  // reinterpret with a different codomain containing the image
  FinMap retarget(FinSetObj new_cod) const;

  bool operator==(const FinMap&) const = default;

  std::string str() const;

 private:
  FinSetObj dom_, cod_;
  std::vector<Elem> images_;
};

FinMap compose(const FinMap& g, const FinMap& f);  // g after f

bool is_surjective(const FinMap& f);
bool is_injective(const FinMap& f);
bool is_bijective(const FinMap& f);
FinMap inverse(const FinMap& f);  // bijections only
FinSetObj image(const FinMap& f);
FinSetObj fiber(const FinMap& f, const Elem& value);  // preimage of one element

// Chosen pullback of a cospan  dom(p) --p--> base <--f-- dom(f).
// The apex is the sorted set of pairs (a, b) with p(a) = f(b); leg_p extracts
// the first component, leg_f the second.  Seen as an object over dom(p),
// leg_p is the pulled-back map p*f and leg_f is the counit at f.
struct PullbackSquare {
  FinSetObj apex;
  FinMap leg_p;  // apex -> dom(p)
  FinMap leg_f;  // apex -> dom(f)
  FinMap f, p;   // the cospan, for reference
};

PullbackSquare chosen_pullback(const FinMap& f, const FinMap& p);

// Mediating map into a pullback apex: u into dom(p), v into dom(f), with
// p.u = f.v required (witness named otherwise).  The result is the unique
// map m with leg_p.m = u and leg_f.m = v.
FinMap pair_into(const PullbackSquare& sq, const FinMap& u, const FinMap& v);

// Functorial action of pulling back along p on slice morphisms over the base:
// given h with f = g.h, returns the induced map apex(f,p) -> apex(g,p)
// over dom(p), i.e. (a, b) |-> (a, h(b)).
FinMap transport_map(const FinMap& p, const FinMap& h, const FinMap& f,
                     const FinMap& g);

// Kernel pair of f as the chosen pullback of f against itself.
PullbackSquare kernel_pair(const FinMap& f);

// Coequalizer of the kernel pair = image factorization.  The quotient's
// elements are the least representatives of the same-image classes; proj is
// the canonical surjection and embed the induced injective comparison into
// cod(f), with embed . proj = f.
struct Coequalizer {
  FinSetObj quotient;
  FinMap proj;   // dom(f) -> quotient
  FinMap embed;  // quotient -> cod(f)
};

Coequalizer coequalizer_of_kernel_pair(const FinMap& f);

// The unique h with h . q_dom = q_cod . f, when q_dom identifies only
// elements that q_cod . f also identifies; otherwise nullopt, with the
// offending pair written to witness when given.  q_dom must be surjective
// and f a map between the quotient sources.
std::optional<FinMap> factor_map(const FinMap& f, const FinMap& q_dom,
                                 const FinMap& q_cod,
                                 std::string* witness = nullptr);

// ---- enumeration utilities (exhaustive small-instance checks) ----

// {prefix "1" .. prefix "n"} as atoms
FinSetObj canonical_atoms(const std::string& prefix, std::size_t n);

// all |cod|^|dom| total maps, in lexicographic order of image tuples;
// empty domain yields the single empty map, empty codomain with a nonempty
// domain yields none
std::vector<FinMap> all_maps(const FinSetObj& dom, const FinSetObj& cod);

// all bijections dom -> cod (empty when sizes differ)
std::vector<FinMap> all_bijections(const FinSetObj& dom, const FinSetObj& cod);

// one canonical surjection per set partition of xs (restricted-growth
// enumeration); each class is named by its least member
std::vector<FinMap> all_quotient_maps(const FinSetObj& xs);

}  // namespace tmcat
