#pragma once

// Internal multicategories for a fixed cartesian monad T on finite sets.
//
// The data is a graph x1 -> (x0, T x0) together with identities and a
// composition defined on the set of composable pairs.  Composable pairs and
// triples are materialized as pullback apexes against lifted maps, so every
// face and degeneracy between levels 0..3 is an honest FinMap that can be
// inspected, composed, and compared.
//
// Level elements:
//   x2: Pair(g, fs)  with fs in T(x1) and (T d0)(fs) = d1(g)
//   x3: Pair(xi, sigma) with sigma in T(x2) and (T x2_d0)(sigma) = x2_d2(xi)

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tmcat/finset.hpp"
#include "tmcat/monad.hpp"
#include "tmcat/report.hpp"

namespace tmcat {

class TMulticategory;
using MulticatPtr = std::shared_ptr<const TMulticategory>;

class TMulticategory {
 public:
  // comp is given either pointwise on the composable-pair tokens or as a rule
  // evaluated over them.  Construction materializes the pair and triple
  // levels; it throws only when the data is not even well-typed (a boundary
  // lands outside its carrier).  Law failures are left to
  // validate_multicategory, which reports them with witnesses.
  TMulticategory(MonadPtr monad, FinSetObj x0, FinSetObj x1, FinMap d0,
                 FinMap d1, FinMap s0,
                 const std::vector<std::pair<Elem, Elem>>& comp_graph);
  TMulticategory(MonadPtr monad, FinSetObj x0, FinSetObj x1, FinMap d0,
                 FinMap d1, FinMap s0,
                 const std::function<Elem(const Elem&)>& comp_rule);

  const MonadPtr& monad() const { return monad_; }
  const FinSetObj& x0() const { return x0_; }
  const FinSetObj& x1() const { return x1_; }
  const FinSetObj& x2() const { return pairs_.apex; }
  const FinSetObj& x3() const { return triples_.apex; }

  const FinMap& d0() const { return d0_; }
  const FinMap& d1() const { return d1_; }
  const FinMap& s0() const { return s0_; }
  const FinMap& comp() const { return comp_; }

  // the two pullback squares behind x2 and x3
  const PullbackSquare& pair_square() const { return pairs_; }
  const PullbackSquare& triple_square() const { return triples_; }

  // faces out of x2: outer morphism, composite, inner tail in T(x1)
  const FinMap& x2_d0() const { return pairs_.leg_f; }
  const FinMap& x2_d2() const { return pairs_.leg_p; }

  // degeneracies into x2; defined whenever the unit laws they rest on hold,
  // and throw a CommutationError naming the offender otherwise
  const FinMap& x2_s0() const;  // g |-> (g, lifted identities)
  const FinMap& x2_s1() const;  // g |-> (identity at d0 g, unit g)

  // faces out of x3
  const FinMap& x3_d0() const { return triples_.leg_f; }
  const FinMap& x3_d3() const { return triples_.leg_p; }
  const FinMap& x3_d1() const;  // compose inside the tail
  const FinMap& x3_d2() const;  // compose the outer pair

 private:
  void init_graph();
  void derive();

  MonadPtr monad_;
  FinSetObj x0_, x1_;
  FinMap d0_, d1_, s0_;
  PullbackSquare pairs_, triples_;
  FinMap comp_;
  std::optional<FinMap> x2_s0_, x2_s1_, x3_d1_, x3_d2_;
  std::string derive_error_;
};

// All the laws, each as its own report line: identities are two-sided units,
// boundaries of composites match the span data, and the two ways around every
// composable triple agree.
Report validate_multicategory(const TMulticategory& m);

MulticatPtr make_multicat(MonadPtr monad, FinSetObj x0, FinSetObj x1,
                          FinMap d0, FinMap d1, FinMap s0,
                          const std::vector<std::pair<Elem, Elem>>& comp_graph);
MulticatPtr make_multicat(MonadPtr monad, FinSetObj x0, FinSetObj x1,
                          FinMap d0, FinMap d1, FinMap s0,
                          const std::function<Elem(const Elem&)>& comp_rule);

struct TFunctor {
  MulticatPtr src, tgt;
  FinMap p0;  // on objects
  FinMap p1;  // on morphisms
};

Report validate_functor(const TFunctor& f);

// induced maps on composable pairs and triples
FinMap induced_on_pairs(const TFunctor& f);
FinMap induced_on_triples(const TFunctor& f);

struct SurjectivityProfile {
  bool p0, p1, p2, p3;
};

SurjectivityProfile surjectivity_profile(const TFunctor& f);

TFunctor identity_functor(MulticatPtr m);
TFunctor compose_functors(const TFunctor& g, const TFunctor& f);

// Levelwise pullback of a cospan of functors into the same target.  Carrier
// elements are pairs (a, b) ordered (dom f side, dom g side); d1 is induced
// by paired fibers, which is where cartesianness of the monad is spent.
struct MulticatPullbackSquare {
  MulticatPtr object;
  TFunctor to_f_source;
  TFunctor to_g_source;
};

MulticatPullbackSquare pullback_multicat(const TFunctor& f, const TFunctor& g);

// Isomorphism search over levelwise bijections; intended for small carriers.
std::optional<TFunctor> find_multicat_iso(MulticatPtr a, MulticatPtr b);

}  // namespace tmcat
