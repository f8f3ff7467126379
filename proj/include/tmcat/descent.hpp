#pragma once

// Descent along a map: reindexing data on objects over the source, the
// comparison construction that produces such data from objects over the
// target, and checks for when every datum arises that way.  The set level
// is self-contained; the multicategory level runs the set machinery on each
// carrier and adds compatibility with the structure maps.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tmcat/finset.hpp"
#include "tmcat/monad.hpp"
#include "tmcat/multicat.hpp"
#include "tmcat/report.hpp"

namespace tmcat {

// ---- sets ----

// In finite sets the three descent properties of a map collapse to one
// question, so all three flags equal surjectivity.
struct DescentClasses {
  bool almost, plain, effective;
};

DescentClasses descent_classes(const FinMap& p);

// A datum along p: an anchor a : v -> dom p, and a reindexing gamma defined
// on the pairs (alpha, b) with p(alpha) = p(a(b)), satisfying
//   anchor:  a(gamma(alpha, b)) = alpha
//   unit:    gamma(a(b), b) = b
//   cocycle: gamma(alpha', b) = gamma(alpha', gamma(alpha, b))
struct SetDescentDatum {
  FinMap a;
  FinMap gamma;
};

// the square whose apex carries gamma
PullbackSquare reindex_square(const FinMap& p, const FinMap& a);

Report check_descent_datum(const FinMap& p, const SetDescentDatum& d);

// the datum induced by an object f over cod p: carrier apex(f, p), anchor
// the first projection, reindexing replaces the first component
SetDescentDatum comparison_datum(const FinMap& p, const FinMap& f);

// For surjective p, rebuild the object downstairs: f on the classes of the
// orbit relation b ~ gamma(alpha, b), with quot the class map and iso the
// verified bijection v -> apex(f, p) matching anchors and reindexings.
struct SetDescentInverse {
  FinMap f, quot, iso;
};

SetDescentInverse set_descent_inverse(const FinMap& p,
                                      const SetDescentDatum& d);

// isomorphism of data over p: a bijection of carriers commuting with the
// anchors and with the reindexings
bool data_isomorphic(const FinMap& p, const SetDescentDatum& x,
                     const SetDescentDatum& y);

// Given a bijection phi : apex(f, p) -> carrier matching anchors, does the
// transported reindexing leave the f-side component alone?  Exactly the
// data that pass this for some phi are the comparison data up to
// isomorphism.
bool image_condition(const FinMap& p, const FinMap& f,
                     const SetDescentDatum& d, const FinMap& phi);

std::optional<FinMap> find_comparison_match(const FinMap& p, const FinMap& f,
                                            const SetDescentDatum& d);

// all reindexings on the given anchor that satisfy the three laws; the unit
// law pins the diagonal, so the search runs over anchor fibers off it
std::vector<FinMap> enumerate_reindexings(const FinMap& p, const FinMap& a);

// ---- multicategories ----

struct CriterionResult {
  bool verdict = false;
  Report details;
};

// Sufficient condition via lifted levels: the lifts of the morphism- and
// pair-level maps are onto (witnessed within the length bound), and the
// triple-level map is onto.
CriterionResult lifted_cover_criterion(const TFunctor& p,
                                       int length_bound = 3);

// Sufficient condition via plain levels: the morphism-, pair-, and
// triple-level maps are onto.  Details record the side facts the condition
// rests on: the monad preserves kernel pairs (small bound), an onto
// morphism level forces an onto object level, and an onto morphism and pair
// level make the functor a quotient of its kernel pair.
CriterionResult level_cover_criterion(const TFunctor& p);

// p is the quotient of its kernel pair: both levels surjective and the
// induced multicategory on kernel classes is isomorphic to the target.
CriterionResult regular_epi_check(const TFunctor& p);

struct Classification {
  SurjectivityProfile profile;
  bool lifted_cover, level_cover;
};

Classification classify_functor(const TFunctor& p);

// A datum along a functor p : x -> y: a multicategory v anchored over x,
// with reindexings on both carriers that together form a functor from the
// paired-level multicategory.
struct MultiDescentDatum {
  MulticatPtr v;
  TFunctor a;        // v -> src p
  FinMap gamma0, gamma1;
};

Report check_multicat_datum(const TFunctor& p, const MultiDescentDatum& d);

MultiDescentDatum comparison_multicat_datum(const TFunctor& p,
                                            const TFunctor& f);

// Quotient inverse for levelwise-surjective p: w on the reindexing orbits,
// f : w -> tgt p, h : v -> w the class functor.  Throws CommutationError
// with a witness when the datum does not quotient to a multicategory.
struct MultiDescentQuotient {
  MulticatPtr w;
  TFunctor f;
  TFunctor h;
};

MultiDescentQuotient multicat_descent_quotient(const TFunctor& p,
                                               const MultiDescentDatum& d);

bool multicat_data_isomorphic(const TFunctor& p, const MultiDescentDatum& a,
                              const MultiDescentDatum& b);

// all data along p with carriers of size at most max_carrier, one
// representative per orbit of carrier relabelings
std::vector<MultiDescentDatum> enumerate_multicat_data(const TFunctor& p,
                                                       int max_carrier);

// Exhaustive effectivity check: every enumerated datum must be reachable
// from an object over the target, through the quotient when p covers
// levelwise and through direct search otherwise.  Also spot-checks that the
// comparison construction is full and faithful on small slice morphisms.
struct OracleOutcome {
  int bound = 0;
  int data_checked = 0;
  std::vector<std::string> failures;
  bool comparison_faithful = true;
  bool comparison_full = true;
  std::string status;  // "clean" | "counterexample" | "inconclusive"
};

OracleOutcome brute_force_oracle(const TFunctor& p, int max_carrier,
                                 int jobs = 1);

}  // namespace tmcat
