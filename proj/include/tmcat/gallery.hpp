#pragma once

// Worked examples and the bridge between two presentations of the same data.
//
// A structure over a monoid action monad is the same thing as a weighted
// category: every morphism carries a weight, composition multiplies them.
// weighted_to_slice unpacks the weights into a plain category plus
// a weight map, slice_to_weighted packs them back, and descent_transport
// confirms that classification questions give the same answer on either side
// of the translation.
//
// fixture_library() collects the small examples the command line tool and the
// tests share: free word examples, cyclic weight examples, linear orders, and
// two chain covers that are deliberately one level short of the sufficient
// conditions.

#include <functional>
#include <string>
#include <vector>

#include "tmcat/descent.hpp"
#include "tmcat/finset.hpp"
#include "tmcat/monad.hpp"
#include "tmcat/multicat.hpp"
#include "tmcat/report.hpp"

namespace tmcat {

// A finite category presented by carriers and structure maps.  Composable
// pairs are materialized as a pullback square whose apex holds tokens
// (g, f) with src g = tgt f; the outer morphism g sits in the first slot.
struct SmallCategory {
  FinSetObj objects;
  FinSetObj morphisms;
  FinMap src;
  FinMap tgt;
  FinMap ids;
  PullbackSquare pairs;
  FinMap comp;

  SmallCategory(FinSetObj objects_, FinSetObj morphisms_, FinMap src_, FinMap tgt_,
                FinMap ids_, const std::function<Elem(const Elem&)>& comp_rule);
};

// Boundary compatibility, unit laws, and associativity over all composable
// triples.  Seven entries, mirroring validate_multicategory.
Report validate_category(const SmallCategory& c);

// A category is exactly an identity-monad structure; these convert losslessly
// in both directions.  multicat_as_category insists on the identity monad.
MulticatPtr category_as_multicat(const SmallCategory& c);
SmallCategory multicat_as_category(const TMulticategory& m);

// A monoid-action structure unpacked: the underlying plain category plus the
// weight of every morphism.
struct WeightedPresentation {
  SmallCategory category;
  FinMap weight;
  MonoidTable monoid;
};

WeightedPresentation weighted_to_slice(const TMulticategory& m, const MonoidTable& monoid);
MulticatPtr slice_to_weighted(const WeightedPresentation& w);

// Classify a functor of weighted structures twice: once as given, once after
// stripping the weights into slice presentations.  The two answers should
// agree, and `agree` records whether they do.
struct TransportVerdict {
  Classification weighted;
  Classification plain;
  bool agree = false;
};

TransportVerdict descent_transport(const TFunctor& p, const MonoidTable& monoid);

// Building blocks for the fixture library, usable on their own.

// One object per name and nothing but identities, living under the word
// monad: the identity on a letter has the one-letter word as its source.
MulticatPtr discrete_word_multicat(const std::vector<std::string>& names);

// One object, one morphism per residue, composition adds weights mod n.
MulticatPtr cyclic_weighted_multicat(int n);

// Two objects joined by weight-one crossings over the two-element cyclic
// monoid; composing two crossings lands back on an identity.
MulticatPtr crossing_weighted_multicat();

// The linear order 0 <= 1 <= ... <= n as an identity-monad structure.
MulticatPtr chain_multicat(int n);

// A disjoint union of short chains, each mapped monotonely into the linear
// order of length n along the listed image positions.  Returns the covering
// functor onto chain_multicat(n).
TFunctor chains_over(int n, const std::vector<std::vector<int>>& images);

// A named example with a one-line description of what it exercises.
struct Fixture {
  std::string name;
  std::string summary;
  TFunctor functor;
};

const std::vector<Fixture>& fixture_library();

// Lookup by name; throws BoundaryError for unknown names.
const Fixture& fixture(const std::string& name);

}  // namespace tmcat
