#include "tmcat/gallery.hpp"

#include <utility>

namespace tmcat {

SmallCategory::SmallCategory(FinSetObj objects_, FinSetObj morphisms_, FinMap src_,
                             FinMap tgt_, FinMap ids_,
                             const std::function<Elem(const Elem&)>& comp_rule)
    : objects(std::move(objects_)),
      morphisms(std::move(morphisms_)),
      src(std::move(src_)),
      tgt(std::move(tgt_)),
      ids(std::move(ids_)),
      pairs(chosen_pullback(tgt, src)),
      comp(FinMap::from_rule(pairs.apex, morphisms, comp_rule)) {}

Report validate_category(const SmallCategory& c) {
  Report r;

  bool id_src = true, id_tgt = true;
  std::string id_witness;
  for (const Elem& o : c.objects.elements()) {
    const Elem e = c.ids(o);
    if (!(c.src(e) == o)) {
      id_src = false;
      if (id_witness.empty()) id_witness = "identity of " + o.str();
    }
    if (!(c.tgt(e) == o)) {
      id_tgt = false;
      if (id_witness.empty()) id_witness = "identity of " + o.str();
    }
  }
  r.add("identity source is its object", id_src, id_src ? "" : id_witness);
  r.add("identity target is its object", id_tgt, id_tgt ? "" : id_witness);

  bool comp_tgt = true, comp_src = true;
  std::string b_witness;
  for (const Elem& t : c.pairs.apex.elements()) {
    const Elem gf = c.comp(t);
    if (!(c.tgt(gf) == c.tgt(t.first()))) {
      comp_tgt = false;
      if (b_witness.empty()) b_witness = "at " + t.str();
    }
    if (!(c.src(gf) == c.src(t.second()))) {
      comp_src = false;
      if (b_witness.empty()) b_witness = "at " + t.str();
    }
  }
  r.add("composite target is the target of the outer morphism", comp_tgt,
        comp_tgt ? "" : b_witness);
  r.add("composite source is the source of the inner morphism", comp_src,
        comp_src ? "" : b_witness);

  auto guarded = [&c](const Elem& g, const Elem& f, Elem* out) {
    const Elem t = Elem::pair(g, f);
    if (!c.pairs.apex.contains(t)) return false;
    *out = c.comp(t);
    return true;
  };

  bool runit = true, lunit = true;
  std::string u_witness;
  for (const Elem& g : c.morphisms.elements()) {
    Elem gr, gl;
    if (!guarded(g, c.ids(c.src(g)), &gr) || !(gr == g)) {
      runit = false;
      if (u_witness.empty()) u_witness = "at " + g.str();
    }
    if (!guarded(c.ids(c.tgt(g)), g, &gl) || !(gl == g)) {
      lunit = false;
      if (u_witness.empty()) u_witness = "at " + g.str();
    }
  }
  r.add("right unit law", runit, runit ? "" : u_witness);
  r.add("left unit law", lunit, lunit ? "" : u_witness);

  bool assoc = true;
  std::string a_witness;
  for (const Elem& t : c.pairs.apex.elements()) {
    const Elem& g = t.first();
    const Elem& f = t.second();
    const FinSetObj into_f = fiber(c.tgt, c.src(f));
    for (const Elem& h : into_f.elements()) {
      Elem lhs, rhs, inner;
      bool ok = guarded(c.comp(t), h, &lhs) && guarded(f, h, &inner) &&
                guarded(g, inner, &rhs) && lhs == rhs;
      if (!ok) {
        assoc = false;
        if (a_witness.empty())
          a_witness = "at " + g.str() + ", " + f.str() + ", " + h.str();
      }
    }
  }
  r.add("associativity over composable triples", assoc, assoc ? "" : a_witness);
  return r;
}

MulticatPtr category_as_multicat(const SmallCategory& c) {
  std::vector<std::pair<Elem, Elem>> graph;
  for (const Elem& t : c.pairs.apex.elements()) graph.push_back({t, c.comp(t)});
  return make_multicat(identity_monad(), c.objects, c.morphisms, c.tgt, c.src,
                       c.ids, graph);
}

SmallCategory multicat_as_category(const TMulticategory& m) {
  if (m.monad()->signature() != identity_monad()->signature())
    throw BoundaryError("multicat_as_category: the monad is " +
                        m.monad()->name() + ", not the identity");
  const FinMap& comp = m.comp();
  return SmallCategory(m.x0(), m.x1(), m.d1().retarget(m.x0()), m.d0(), m.s0(),
                       [&comp](const Elem& t) { return comp(t); });
}

WeightedPresentation weighted_to_slice(const TMulticategory& m,
                                       const MonoidTable& monoid) {
  MonadPtr T = monoid_action_monad(monoid);
  if (m.monad()->signature() != T->signature())
    throw BoundaryError(
        "weighted_to_slice: the structure is not weighted by the given monoid");
  FinMap src = FinMap::from_rule(m.x1(), m.x0(), [&m](const Elem& g) {
    return m.d1()(g).second();
  });
  FinMap weight = FinMap::from_rule(m.x1(), monoid.elements(),
                                    [&m](const Elem& g) {
                                      return m.d1()(g).first();
                                    });
  auto rule = [&m](const Elem& t) {
    const Elem& g = t.first();
    return m.comp()(Elem::pair(g, Elem::pair(m.d1()(g).first(), t.second())));
  };
  SmallCategory cat(m.x0(), m.x1(), std::move(src), m.d0(), m.s0(), rule);
  return {std::move(cat), std::move(weight), monoid};
}

MulticatPtr slice_to_weighted(const WeightedPresentation& w) {
  MonadPtr T = monoid_action_monad(w.monoid);
  const SmallCategory& c = w.category;
  std::vector<Elem> tagged;
  std::vector<std::pair<Elem, Elem>> d1g;
  for (const Elem& g : c.morphisms.elements()) {
    Elem v = Elem::pair(w.weight(g), c.src(g));
    tagged.push_back(v);
    d1g.push_back({g, v});
  }
  FinMap d1 = FinMap::from_pairs(c.morphisms, FinSetObj(tagged), d1g);
  auto rule = [&c](const Elem& xi) {
    return c.comp(Elem::pair(xi.first(), xi.second().second()));
  };
  return make_multicat(T, c.objects, c.morphisms, c.tgt, d1, c.ids, rule);
}

TransportVerdict descent_transport(const TFunctor& p, const MonoidTable& monoid) {
  WeightedPresentation ws = weighted_to_slice(*p.src, monoid);
  WeightedPresentation wt = weighted_to_slice(*p.tgt, monoid);
  TFunctor plain{category_as_multicat(ws.category),
                 category_as_multicat(wt.category), p.p0, p.p1};
  TransportVerdict out;
  out.weighted = classify_functor(p);
  out.plain = classify_functor(plain);
  out.agree = out.weighted.profile.p0 == out.plain.profile.p0 &&
              out.weighted.profile.p1 == out.plain.profile.p1 &&
              out.weighted.profile.p2 == out.plain.profile.p2 &&
              out.weighted.profile.p3 == out.plain.profile.p3 &&
              out.weighted.lifted_cover == out.plain.lifted_cover &&
              out.weighted.level_cover == out.plain.level_cover;
  return out;
}

MulticatPtr discrete_word_multicat(const std::vector<std::string>& names) {
  MonadPtr T = free_monoid_monad();
  std::vector<Elem> objs, ids, words;
  for (const auto& s : names) {
    objs.push_back(Elem::atom(s));
    ids.push_back(Elem::atom("id_" + s));
    words.push_back(Elem::list({Elem::atom(s)}));
  }
  FinSetObj x0(objs), x1(ids), tx0(words);
  std::vector<std::pair<Elem, Elem>> d0g, d1g, s0g;
  for (std::size_t i = 0; i < names.size(); ++i) {
    d0g.push_back({ids[i], objs[i]});
    d1g.push_back({ids[i], words[i]});
    s0g.push_back({objs[i], ids[i]});
  }
  return make_multicat(T, x0, x1, FinMap::from_pairs(x1, x0, d0g),
                       FinMap::from_pairs(x1, tx0, d1g),
                       FinMap::from_pairs(x0, x1, s0g),
                       [](const Elem& xi) { return xi.first(); });
}

MulticatPtr cyclic_weighted_multicat(int n) {
  if (n < 1) throw BoundaryError("cyclic_weighted_multicat needs n >= 1");
  const MonoidTable zn = MonoidTable::zmod(n);
  MonadPtr T = monoid_action_monad(zn);
  const Elem o = Elem::atom("o");
  FinSetObj x0({o});
  std::vector<Elem> mors, tagged;
  std::vector<std::pair<Elem, Elem>> d1g;
  for (int i = 0; i < n; ++i) {
    Elem f = Elem::atom("f" + std::to_string(i));
    Elem v = Elem::pair(Elem::atom(std::to_string(i)), o);
    mors.push_back(f);
    tagged.push_back(v);
    d1g.push_back({f, v});
  }
  FinSetObj x1(mors);
  auto rule = [n](const Elem& xi) {
    const int wg = std::stoi(xi.first().name().substr(1));
    const int wf = std::stoi(xi.second().second().name().substr(1));
    return Elem::atom("f" + std::to_string((wg + wf) % n));
  };
  return make_multicat(T, x0, x1, FinMap::constant(x1, x0, o),
                       FinMap::from_pairs(x1, FinSetObj(tagged), d1g),
                       FinMap::constant(x0, x1, Elem::atom("f0")), rule);
}

MulticatPtr crossing_weighted_multicat() {
  MonadPtr T = monoid_action_monad(MonoidTable::zmod(2));
  const Elem n1 = Elem::atom("n1"), n2 = Elem::atom("n2");
  const Elem e1 = Elem::atom("e1"), e2 = Elem::atom("e2");
  const Elem c12 = Elem::atom("c12"), c21 = Elem::atom("c21");
  const Elem w0 = Elem::atom("0"), w1 = Elem::atom("1");
  FinSetObj x0({n1, n2});
  FinSetObj x1({e1, e2, c12, c21});
  FinMap d0 = FinMap::from_pairs(
      x1, x0, {{e1, n1}, {e2, n2}, {c12, n2}, {c21, n1}});
  FinSetObj tx0({Elem::pair(w0, n1), Elem::pair(w0, n2), Elem::pair(w1, n1),
                 Elem::pair(w1, n2)});
  FinMap d1 = FinMap::from_pairs(x1, tx0,
                                 {{e1, Elem::pair(w0, n1)},
                                  {e2, Elem::pair(w0, n2)},
                                  {c12, Elem::pair(w1, n1)},
                                  {c21, Elem::pair(w1, n2)}});
  FinMap s0 = FinMap::from_pairs(x0, x1, {{n1, e1}, {n2, e2}});
  // a composite crosses exactly when its total weight is odd, and its target
  // is the target of the outer morphism; those two facts pin the answer
  auto rule = [](const Elem& xi) {
    const std::string g = xi.first().name();
    const std::string f = xi.second().second().name();
    const bool odd = ((g[0] == 'c') + (f[0] == 'c')) % 2 == 1;
    const bool to2 = g == "e2" || g == "c12";
    if (!odd) return Elem::atom(to2 ? "e2" : "e1");
    return Elem::atom(to2 ? "c12" : "c21");
  };
  return make_multicat(T, x0, x1, d0, d1, s0, rule);
}

MulticatPtr chain_multicat(int n) {
  if (n < 0) throw BoundaryError("chain_multicat needs n >= 0");
  std::vector<Elem> objs;
  for (int i = 0; i <= n; ++i) objs.push_back(Elem::atom(std::to_string(i)));
  std::vector<Elem> mors;
  std::vector<std::pair<Elem, Elem>> d0g, d1g, s0g;
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Elem m = Elem::pair(objs[i], objs[j]);
      mors.push_back(m);
      d0g.push_back({m, objs[j]});
      d1g.push_back({m, objs[i]});
    }
    s0g.push_back({objs[i], Elem::pair(objs[i], objs[i])});
  }
  FinSetObj x0(objs), x1(mors);
  return make_multicat(identity_monad(), x0, x1,
                       FinMap::from_pairs(x1, x0, d0g),
                       FinMap::from_pairs(x1, x0, d1g),
                       FinMap::from_pairs(x0, x1, s0g), [](const Elem& xi) {
                         return Elem::pair(xi.second().first(),
                                           xi.first().second());
                       });
}

TFunctor chains_over(int n, const std::vector<std::vector<int>>& images) {
  if (images.empty()) throw BoundaryError("chains_over needs at least one chain");
  MulticatPtr y = chain_multicat(n);
  std::vector<Elem> objs, mors;
  std::vector<std::pair<Elem, Elem>> d0g, d1g, s0g, p0g, p1g;
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto& img = images[k];
    if (img.empty()) throw BoundaryError("chains_over: empty chain");
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] < 0 || img[i] > n)
        throw BoundaryError("chains_over: position out of range");
      if (i > 0 && img[i - 1] >= img[i])
        throw BoundaryError("chains_over: chain positions must increase");
    }
    std::vector<Elem> local;
    for (std::size_t i = 0; i < img.size(); ++i) {
      Elem o = Elem::atom("k" + std::to_string(k) + "p" + std::to_string(i));
      local.push_back(o);
      objs.push_back(o);
      p0g.push_back({o, Elem::atom(std::to_string(img[i]))});
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = i; j < img.size(); ++j) {
        Elem m = Elem::pair(local[i], local[j]);
        mors.push_back(m);
        d0g.push_back({m, local[j]});
        d1g.push_back({m, local[i]});
        p1g.push_back({m, Elem::pair(Elem::atom(std::to_string(img[i])),
                                     Elem::atom(std::to_string(img[j])))});
      }
      s0g.push_back({local[i], Elem::pair(local[i], local[i])});
    }
  }
  FinSetObj x0(objs), x1(mors);
  MulticatPtr x = make_multicat(
      identity_monad(), x0, x1, FinMap::from_pairs(x1, x0, d0g),
      FinMap::from_pairs(x1, x0, d1g), FinMap::from_pairs(x0, x1, s0g),
      [](const Elem& xi) {
        return Elem::pair(xi.second().first(), xi.first().second());
      });
  return {x, y, FinMap::from_pairs(x0, y->x0(), p0g),
          FinMap::from_pairs(x1, y->x1(), p1g)};
}

namespace {

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;

  out.push_back({"word-identity",
                 "identity on the three letter example under the word monad",
                 identity_functor(discrete_word_multicat({"a", "b", "c"}))});

  {
    MulticatPtr src = discrete_word_multicat({"a", "b"});
    MulticatPtr tgt = discrete_word_multicat({"c"});
    TFunctor p{src, tgt, FinMap::constant(src->x0(), tgt->x0(), Elem::atom("c")),
               FinMap::constant(src->x1(), tgt->x1(), Elem::atom("id_c"))};
    out.push_back({"word-collapse",
                   "two letters collapsing onto one under the word monad", p});
  }

  {
    MulticatPtr src = discrete_word_multicat({"a"});
    MulticatPtr tgt = discrete_word_multicat({"a", "b"});
    TFunctor p{src, tgt,
               FinMap::from_pairs(src->x0(), tgt->x0(),
                                  {{Elem::atom("a"), Elem::atom("a")}}),
               FinMap::from_pairs(src->x1(), tgt->x1(),
                                  {{Elem::atom("id_a"), Elem::atom("id_a")}})};
    out.push_back({"word-inclusion",
                   "one letter sitting inside two under the word monad", p});
  }

  out.push_back({"z2-identity",
                 "identity on the one object example weighted by the two "
                 "element cyclic monoid",
                 identity_functor(cyclic_weighted_multicat(2))});

  out.push_back({"z3-identity",
                 "identity on the one object example weighted by the three "
                 "element cyclic monoid",
                 identity_functor(cyclic_weighted_multicat(3))});

  {
    MulticatPtr src = crossing_weighted_multicat();
    MulticatPtr tgt = cyclic_weighted_multicat(2);
    FinMap p0 = FinMap::constant(src->x0(), tgt->x0(), Elem::atom("o"));
    FinMap p1 = FinMap::from_rule(src->x1(), tgt->x1(), [](const Elem& g) {
      return Elem::atom(g.name()[0] == 'c' ? "f1" : "f0");
    });
    out.push_back({"torsor-collapse",
                   "two object crossing example folding onto the one object "
                   "example weighted by the two element cyclic monoid",
                   TFunctor{src, tgt, p0, p1}});
  }

  out.push_back({"chain-identity", "identity on a short linear order",
                 identity_functor(chain_multicat(2))});

  out.push_back({"chain-triple-gap",
                 "chain cover of the length three order that reaches every "
                 "composable pair but misses a composable triple",
                 chains_over(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}})});

  out.push_back({"chain-pair-gap",
                 "chain cover of the length three order that reaches every "
                 "morphism but misses a composable pair",
                 chains_over(3, {{0, 1, 2}, {1, 2, 3}, {0, 3}})});

  return out;
}

}  // namespace

const std::vector<Fixture>& fixture_library() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixture_library())
    if (f.name == name) return f;
  throw BoundaryError("no fixture named " + name);
}

}  // namespace tmcat
