#pragma once

// A finite-limit presentation of the multicategory axioms, and the pseudo
// models of it that arise when the lifted levels are only required up to
// chosen isomorphism.
//
// The presentation has nine vertices: the four simplicial levels x0..x3, the
// lifted levels xp0..xp2 standing for T of the first three, and the doubly
// lifted xpp0, xpp1.  Edges are the faces, degeneracies, units into the
// lifted levels, lifted faces between them, and the collapse maps m0, m1
// from the doubly lifted levels.  A strict model interprets xp/xpp as honest
// lifts; a pseudo model carries a family of comparison bijections (iota)
// saying how its lifted levels sit over actual lifts.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tmcat/finset.hpp"
#include "tmcat/monad.hpp"
#include "tmcat/multicat.hpp"
#include "tmcat/report.hpp"

namespace tmcat {

struct SketchEdge {
  std::string id, src, tgt;
};

// lhs and rhs are edge paths with the first edge applied first; an empty
// path is the identity on the common source vertex
struct SketchRelation {
  std::string name;
  std::string at;  // source vertex of both paths
  std::vector<std::string> lhs, rhs;
};

// A pullback cone: proj_a and proj_b out of the apex, over the cospan
// side_a : tgt(proj_a) -> base <- tgt(proj_b) : side_b.  A model satisfies
// the cone when the square commutes and the induced comparison into the
// chosen pullback of the sides is a bijection.
struct SketchCone {
  std::string apex;
  std::string proj_a, proj_b;
  std::string side_a, side_b;
};

struct Sketch {
  std::vector<std::string> vertices;
  std::vector<SketchEdge> edges;
  std::vector<SketchRelation> relations;
  std::vector<SketchCone> cones;

  const SketchEdge& edge(const std::string& id) const;
  bool has_vertex(const std::string& v) const;
};

// the fixed presentation described above
const Sketch& multicat_sketch();

struct SketchModel {
  std::map<std::string, FinSetObj> vertex;
  std::map<std::string, FinMap> edge;

  const FinSetObj& at(const std::string& v) const;
  const FinMap& map_at(const std::string& e) const;
};

// compose a relation path in a model; empty path gives the identity at `at`
FinMap compose_path(const Sketch& s, const SketchModel& m,
                    const std::vector<std::string>& path,
                    const std::string& at);

// boundaries, relations, cones; one report line each
Report check_model(const Sketch& s, const SketchModel& m);

// Interpret a multicategory as a strict model: the lifted vertices are
// materialized lifts and every edge is the map it names.  Needs a monad with
// finite lifts.
SketchModel model_from_multicat(const TMulticategory& m);

// vertex-indexed components of a map between models
using ModelMorphism = std::map<std::string, FinMap>;

Report check_model_morphism(const Sketch& s, const SketchModel& src,
                            const SketchModel& tgt, const ModelMorphism& f);

// A model together with comparison bijections onto actual lifts:
//   iota_T_0..2 : xp0..xp2  -> T(x0..x2)
//   iota_T_3..4 : xpp0,xpp1 -> T(xp0),T(xp1)
//   iota_m0_0, iota_m1_0 : xpp0,xpp1 -> TT(x0),TT(x1)
//   iota_m0_1, iota_m1_1 : xp0,xp1   -> T(x0),T(x1)
//   iota_e0_0, iota_e1_0 : x0,x1     -> x0,x1
//   iota_e0_1, iota_e1_1 : xp0,xp1   -> T(x0),T(x1)
// Each comparison must commute with the edge it reinterprets: the lifted
// faces against lifts of faces, m0/m1 against the monad multiplication,
// e0/e1 against the unit.
using IotaFamily = std::map<std::string, FinMap>;

struct PseudoEqObject {
  MonadPtr monad;
  SketchModel model;
  IotaFamily iota;
};

extern const std::vector<std::string> kIotaNames;

// model validity + all comparisons bijective with the right boundaries +
// the eleven compatibility squares
Report check_pseudoeq_object(const PseudoEqObject& p);

// The strictness equations a pseudo object may or may not satisfy: the three
// comparison families agree where they overlap, the double comparisons
// factor as lifted single ones, and the object-level comparisons are
// identities.
Report check_coherence(const PseudoEqObject& p);

// strict pseudo object on a multicategory: identity comparisons throughout
PseudoEqObject strict_object(const TMulticategory& m);

// A morphism of pseudo objects out of a strict one: a model morphism whose
// lifted components match the target's comparisons against actual lifts of
// the lower components.  Thirteen matching slots, one per comparison map.
Report check_p_morphism(const PseudoEqObject& strict_src,
                        const PseudoEqObject& tgt, const ModelMorphism& f);

// Rebuild a multicategory from a pseudo object: keep the object and morphism
// carriers, reroute the source map through iota_T_0, and transport the
// composition along the induced bijection beta onto the materialized pair
// level.  iso is the resulting isomorphism from the strict object on
// `object` back to the input, with bijective components.
struct HatResult {
  MulticatPtr object;
  FinMap beta;   // input pair level -> materialized pair level
  ModelMorphism iso;
};

HatResult hat_construction(const PseudoEqObject& p);

// A deterministically relabeled pseudo object on m: every lifted carrier is
// replaced by fresh atoms and the comparisons remember the renaming.  The
// result is valid and coherent, and hat_construction undoes it.
PseudoEqObject coherent_relabel(const TMulticategory& m);

// Break coherence without breaking validity: conjugate the e0 comparison by
// a transposition of two objects.  Requires at least two objects.
PseudoEqObject incoherent_mutation(const PseudoEqObject& p);

// All valid pseudo objects receiving a levelwise-surjective morphism from
// the strict object on m, each with the morphism.  Quotients of the lifted
// levels are forced by bijectivity of the comparisons, so the search runs
// over partitions of x0..x3 only.
struct SurjectiveImage {
  PseudoEqObject object;
  ModelMorphism onto;
};

std::vector<SurjectiveImage> surjective_images(const TMulticategory& m);

// Premise check + conclusion check for one instance of the statement that a
// surjective image of a strict object is coherent.
Report epi_forces_coherence(const PseudoEqObject& strict_src,
                            const PseudoEqObject& tgt,
                            const ModelMorphism& f);

}  // namespace tmcat
