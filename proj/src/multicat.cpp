#include "tmcat/multicat.hpp"

#include <algorithm>
#include <utility>

namespace tmcat {

namespace {

bool same_multicat(const MulticatPtr& a, const MulticatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->monad()->signature() == b->monad()->signature() &&
         a->x0() == b->x0() && a->x1() == b->x1() && a->d0() == b->d0() &&
         a->d1() == b->d1() && a->s0() == b->s0() && a->comp() == b->comp();
}

}  // namespace

void TMulticategory::init_graph() {
  if (!monad_) throw Error("multicategory needs a monad");
  if (!(d0_.dom() == x1_ && d0_.cod() == x0_))
    throw BoundaryError("d0 must map morphisms to objects");
  if (!(s0_.dom() == x0_ && s0_.cod() == x1_))
    throw BoundaryError("s0 must map objects to morphisms");
  if (!(d1_.dom() == x1_))
    throw BoundaryError("d1 must be defined on morphisms");
  auto in_x0 = [this](const Elem& e) { return x0_.contains(e); };
  for (const Elem& g : x1_)
    if (!monad_->member(in_x0, d1_.apply(g)))
      throw BoundaryError("d1 value is not an element over the objects: " +
                          d1_.apply(g).str());
  pairs_ = t_pullback(*monad_, d1_, d0_);
}

TMulticategory::TMulticategory(
    MonadPtr monad, FinSetObj x0, FinSetObj x1, FinMap d0, FinMap d1,
    FinMap s0, const std::vector<std::pair<Elem, Elem>>& comp_graph)
    : monad_(std::move(monad)),
      x0_(std::move(x0)),
      x1_(std::move(x1)),
      d0_(std::move(d0)),
      d1_(std::move(d1)),
      s0_(std::move(s0)) {
  init_graph();
  comp_ = FinMap::from_pairs(pairs_.apex, x1_, comp_graph);
  triples_ = t_pullback(*monad_, pairs_.leg_p, pairs_.leg_f);
  derive();
}

TMulticategory::TMulticategory(MonadPtr monad, FinSetObj x0, FinSetObj x1,
                               FinMap d0, FinMap d1, FinMap s0,
                               const std::function<Elem(const Elem&)>& rule)
    : monad_(std::move(monad)),
      x0_(std::move(x0)),
      x1_(std::move(x1)),
      d0_(std::move(d0)),
      d1_(std::move(d1)),
      s0_(std::move(s0)) {
  init_graph();
  comp_ = FinMap::from_rule(pairs_.apex, x1_, rule);
  triples_ = t_pullback(*monad_, pairs_.leg_p, pairs_.leg_f);
  derive();
}

const FinMap& TMulticategory::x2_s0() const {
  if (!x2_s0_) throw CommutationError(derive_error_);
  return *x2_s0_;
}

const FinMap& TMulticategory::x2_s1() const {
  if (!x2_s1_) throw CommutationError(derive_error_);
  return *x2_s1_;
}

const FinMap& TMulticategory::x3_d1() const {
  if (!x3_d1_) throw CommutationError(derive_error_);
  return *x3_d1_;
}

const FinMap& TMulticategory::x3_d2() const {
  if (!x3_d2_) throw CommutationError(derive_error_);
  return *x3_d2_;
}

void TMulticategory::derive() {
  x2_s0_.reset();
  x2_s1_.reset();
  x3_d1_.reset();
  x3_d2_.reset();
  derive_error_.clear();
  try {
    x2_s0_ = FinMap::from_rule(x1_, pairs_.apex, [this](const Elem& g) {
      return Elem::pair(g, monad_->map_elem(s0_, d1_.apply(g)));
    });
    x2_s1_ = FinMap::from_rule(x1_, pairs_.apex, [this](const Elem& g) {
      return Elem::pair(s0_.apply(d0_.apply(g)), monad_->unit(g));
    });
    x3_d1_ =
        FinMap::from_rule(triples_.apex, pairs_.apex, [this](const Elem& z) {
          return Elem::pair(z.first().first(),
                            monad_->map_elem(comp_, z.second()));
        });
    x3_d2_ =
        FinMap::from_rule(triples_.apex, pairs_.apex, [this](const Elem& z) {
          Elem tails = monad_->map_elem(pairs_.leg_p, z.second());
          return Elem::pair(comp_.apply(z.first()), monad_->mult(tails));
        });
  } catch (const Error& e) {
    derive_error_ = e.what();
    x2_s0_.reset();
    x2_s1_.reset();
    x3_d1_.reset();
    x3_d2_.reset();
  }
}

Report validate_multicategory(const TMulticategory& m) {
  Report r;
  const Monad& T = *m.monad();

  bool base_ok = true;
  for (const Elem& x : m.x0()) {
    if (!(m.d0().apply(m.s0().apply(x)) == x)) {
      r.add("identity boundary: d0(s0 x) = x", false, x.str());
      base_ok = false;
      break;
    }
  }
  if (base_ok) r.add("identity boundary: d0(s0 x) = x", true);

  bool unit_ok = true;
  for (const Elem& x : m.x0()) {
    if (!(m.d1().apply(m.s0().apply(x)) == T.unit(x))) {
      r.add("identity source: d1(s0 x) = unit x", false, x.str());
      unit_ok = false;
      break;
    }
  }
  if (unit_ok) r.add("identity source: d1(s0 x) = unit x", true);

  bool target_ok = true, source_ok = true;
  for (const Elem& xi : m.x2()) {
    Elem c = m.comp().apply(xi);
    if (target_ok && !(m.d0().apply(c) == m.d0().apply(xi.first()))) {
      r.add("composite target: d0(comp xi) = d0(outer xi)", false, xi.str());
      target_ok = false;
    }
    Elem sources = T.map_elem(m.d1(), xi.second());
    if (source_ok && !(m.d1().apply(c) == T.mult(sources))) {
      r.add("composite source: d1(comp xi) = mult(lifted d1 of tail)", false,
            xi.str());
      source_ok = false;
    }
    if (!target_ok && !source_ok) break;
  }
  if (target_ok) r.add("composite target: d0(comp xi) = d0(outer xi)", true);
  if (source_ok)
    r.add("composite source: d1(comp xi) = mult(lifted d1 of tail)", true);

  if (!(base_ok && unit_ok && target_ok && source_ok)) return r;

  bool right_ok = true;
  for (const Elem& g : m.x1()) {
    if (!(m.comp().apply(m.x2_s0().apply(g)) == g)) {
      r.add("right unit: comp(g, lifted identities) = g", false, g.str());
      right_ok = false;
      break;
    }
  }
  if (right_ok) r.add("right unit: comp(g, lifted identities) = g", true);

  bool left_ok = true;
  for (const Elem& g : m.x1()) {
    if (!(m.comp().apply(m.x2_s1().apply(g)) == g)) {
      r.add("left unit: comp(identity, unit g) = g", false, g.str());
      left_ok = false;
      break;
    }
  }
  if (left_ok) r.add("left unit: comp(identity, unit g) = g", true);

  bool assoc_ok = true;
  for (const Elem& z : m.x3()) {
    Elem inner_first = m.comp().apply(m.x3_d1().apply(z));
    Elem outer_first = m.comp().apply(m.x3_d2().apply(z));
    if (!(inner_first == outer_first)) {
      r.add("associativity over composable triples", false, z.str());
      assoc_ok = false;
      break;
    }
  }
  if (assoc_ok) r.add("associativity over composable triples", true);

  return r;
}

MulticatPtr make_multicat(
    MonadPtr monad, FinSetObj x0, FinSetObj x1, FinMap d0, FinMap d1,
    FinMap s0, const std::vector<std::pair<Elem, Elem>>& comp_graph) {
  return std::make_shared<TMulticategory>(std::move(monad), std::move(x0),
                                          std::move(x1), std::move(d0),
                                          std::move(d1), std::move(s0),
                                          comp_graph);
}

MulticatPtr make_multicat(MonadPtr monad, FinSetObj x0, FinSetObj x1,
                          FinMap d0, FinMap d1, FinMap s0,
                          const std::function<Elem(const Elem&)>& comp_rule) {
  return std::make_shared<TMulticategory>(std::move(monad), std::move(x0),
                                          std::move(x1), std::move(d0),
                                          std::move(d1), std::move(s0),
                                          comp_rule);
}

Report validate_functor(const TFunctor& f) {
  Report r;
  if (!f.src || !f.tgt) {
    r.add("functor endpoints present", false, "null multicategory");
    return r;
  }
  const TMulticategory& a = *f.src;
  const TMulticategory& b = *f.tgt;

  r.add("monads agree",
        a.monad()->signature() == b.monad()->signature(),
        a.monad()->name() + " vs " + b.monad()->name());
  r.add("object map boundaries",
        f.p0.dom() == a.x0() && f.p0.cod() == b.x0());
  r.add("morphism map boundaries",
        f.p1.dom() == a.x1() && f.p1.cod() == b.x1());
  if (!r.ok()) return r;

  bool d0_ok = true, d1_ok = true;
  for (const Elem& g : a.x1()) {
    Elem pg = f.p1.apply(g);
    if (d0_ok && !(b.d0().apply(pg) == f.p0.apply(a.d0().apply(g)))) {
      r.add("targets preserved", false, g.str());
      d0_ok = false;
    }
    if (d1_ok &&
        !(b.d1().apply(pg) == a.monad()->map_elem(f.p0, a.d1().apply(g)))) {
      r.add("sources preserved", false, g.str());
      d1_ok = false;
    }
    if (!d0_ok && !d1_ok) break;
  }
  if (d0_ok) r.add("targets preserved", true);
  if (d1_ok) r.add("sources preserved", true);

  bool s0_ok = true;
  for (const Elem& x : a.x0()) {
    if (!(f.p1.apply(a.s0().apply(x)) == b.s0().apply(f.p0.apply(x)))) {
      r.add("identities preserved", false, x.str());
      s0_ok = false;
      break;
    }
  }
  if (s0_ok) r.add("identities preserved", true);

  if (!(d0_ok && d1_ok && s0_ok)) return r;

  try {
    FinMap p2 = induced_on_pairs(f);
    bool comp_ok = true;
    for (const Elem& xi : a.x2()) {
      if (!(b.comp().apply(p2.apply(xi)) == f.p1.apply(a.comp().apply(xi)))) {
        r.add("composition preserved", false, xi.str());
        comp_ok = false;
        break;
      }
    }
    if (comp_ok) r.add("composition preserved", true);
  } catch (const Error& e) {
    r.add("composition preserved", false, e.what());
  }
  return r;
}

FinMap induced_on_pairs(const TFunctor& f) {
  const MonadPtr& T = f.src->monad();
  return FinMap::from_rule(
      f.src->x2(), f.tgt->x2(), [&f, &T](const Elem& xi) {
        return Elem::pair(f.p1.apply(xi.first()),
                          T->map_elem(f.p1, xi.second()));
      });
}

FinMap induced_on_triples(const TFunctor& f) {
  const MonadPtr& T = f.src->monad();
  FinMap p2 = induced_on_pairs(f);
  return FinMap::from_rule(
      f.src->x3(), f.tgt->x3(), [&p2, &T](const Elem& z) {
        return Elem::pair(p2.apply(z.first()), T->map_elem(p2, z.second()));
      });
}

SurjectivityProfile surjectivity_profile(const TFunctor& f) {
  return {is_surjective(f.p0), is_surjective(f.p1),
          is_surjective(induced_on_pairs(f)),
          is_surjective(induced_on_triples(f))};
}

TFunctor identity_functor(MulticatPtr m) {
  FinMap p0 = FinMap::identity(m->x0());
  FinMap p1 = FinMap::identity(m->x1());
  return {m, std::move(m), std::move(p0), std::move(p1)};
}

TFunctor compose_functors(const TFunctor& g, const TFunctor& f) {
  if (!same_multicat(f.tgt, g.src))
    throw BoundaryError("functor composition endpoints do not match");
  return {f.src, g.tgt, compose(g.p0, f.p0), compose(g.p1, f.p1)};
}

MulticatPullbackSquare pullback_multicat(const TFunctor& f,
                                         const TFunctor& g) {
  if (!same_multicat(f.tgt, g.tgt))
    throw BoundaryError("pullback needs a cospan into one multicategory");
  const TMulticategory& a = *f.src;
  const TMulticategory& b = *g.src;
  const Monad& T = *a.monad();

  PullbackSquare lvl0 = chosen_pullback(g.p0, f.p0);
  PullbackSquare lvl1 = chosen_pullback(g.p1, f.p1);
  const FinMap& pr_a0 = lvl0.leg_p;
  const FinMap& pr_b0 = lvl0.leg_f;
  const FinMap& pr_a1 = lvl1.leg_p;
  const FinMap& pr_b1 = lvl1.leg_f;

  FinMap d0 = FinMap::from_rule(lvl1.apex, lvl0.apex, [&](const Elem& c) {
    return Elem::pair(a.d0().apply(c.first()), b.d0().apply(c.second()));
  });
  FinMap s0 = FinMap::from_rule(lvl0.apex, lvl1.apex, [&](const Elem& c) {
    return Elem::pair(a.s0().apply(c.first()), b.s0().apply(c.second()));
  });

  // d1 on a pair is the unique lifted element projecting to both given
  // sources; uniqueness is exactly the pullback property of the lifted square
  std::vector<Elem> d1_values;
  d1_values.reserve(lvl1.apex.size());
  for (const Elem& c : lvl1.apex) {
    Elem want_a = a.d1().apply(c.first());
    Elem want_b = b.d1().apply(c.second());
    std::vector<Elem> hits;
    for (const Elem& t : T.fiber(pr_a0, want_a))
      if (T.map_elem(pr_b0, t) == want_b) hits.push_back(t);
    if (hits.size() != 1)
      throw CommutationError(
          "paired source is not unique over " + c.str() + " (found " +
          std::to_string(hits.size()) + ")");
    d1_values.push_back(hits.front());
  }
  FinMap d1(lvl1.apex, FinSetObj(d1_values), d1_values);

  auto comp_rule = [&a, &b, &T, &pr_a1, &pr_b1](const Elem& xi) {
    const Elem& c = xi.first();
    const Elem& tail = xi.second();
    Elem in_a = a.comp().apply(
        Elem::pair(c.first(), T.map_elem(pr_a1, tail)));
    Elem in_b = b.comp().apply(
        Elem::pair(c.second(), T.map_elem(pr_b1, tail)));
    return Elem::pair(in_a, in_b);
  };

  MulticatPtr object =
      make_multicat(a.monad(), lvl0.apex, lvl1.apex, std::move(d0),
                    std::move(d1), std::move(s0), comp_rule);
  TFunctor to_a{object, f.src, pr_a0, pr_a1};
  TFunctor to_b{object, g.src, pr_b0, pr_b1};
  return {object, std::move(to_a), std::move(to_b)};
}

std::optional<TFunctor> find_multicat_iso(MulticatPtr a, MulticatPtr b) {
  if (a->monad()->signature() != b->monad()->signature()) return std::nullopt;
  if (a->x0().size() != b->x0().size() || a->x1().size() != b->x1().size())
    return std::nullopt;
  const Monad& T = *a->monad();
  for (const FinMap& b0 : all_bijections(a->x0(), b->x0())) {
    for (const FinMap& b1 : all_bijections(a->x1(), b->x1())) {
      bool good = true;
      for (const Elem& g : a->x1()) {
        Elem pg = b1.apply(g);
        if (!(b->d0().apply(pg) == b0.apply(a->d0().apply(g))) ||
            !(b->d1().apply(pg) == T.map_elem(b0, a->d1().apply(g)))) {
          good = false;
          break;
        }
      }
      if (!good) continue;
      for (const Elem& x : a->x0())
        if (!(b1.apply(a->s0().apply(x)) == b->s0().apply(b0.apply(x)))) {
          good = false;
          break;
        }
      if (!good) continue;
      for (const Elem& xi : a->x2()) {
        Elem moved = Elem::pair(b1.apply(xi.first()),
                                T.map_elem(b1, xi.second()));
        if (!(b->comp().apply(moved) == b1.apply(a->comp().apply(xi)))) {
          good = false;
          break;
        }
      }
      if (good) return TFunctor{a, b, b0, b1};
    }
  }
  return std::nullopt;
}

}  // namespace tmcat
