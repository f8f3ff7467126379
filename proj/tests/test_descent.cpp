#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tmcat/descent.hpp"

using namespace tmcat;

namespace {

Elem a(const std::string& s) { return Elem::atom(s); }

// one object, morphisms carrying weights in Z/2, composition adds weights
MulticatPtr weighted_z2() {
  MonadPtr T = monoid_action_monad(MonoidTable::zmod(2));
  FinSetObj x0 = FinSetObj::atoms({"o"});
  FinSetObj x1 = FinSetObj::atoms({"f0", "f1"});
  FinMap d0 = FinMap::constant(x1, x0, a("o"));
  FinSetObj tx0({Elem::pair(a("0"), a("o")), Elem::pair(a("1"), a("o"))});
  FinMap d1 = FinMap::from_pairs(
      x1, tx0, {{a("f0"), Elem::pair(a("0"), a("o"))},
                {a("f1"), Elem::pair(a("1"), a("o"))}});
  FinMap s0 = FinMap::constant(x0, x1, a("f0"));
  auto rule = [](const Elem& xi) {
    int wg = xi.first().name() == "f1";
    int wf = xi.second().second().name() == "f1";
    return Elem::atom((wg + wf) % 2 ? "f1" : "f0");
  };
  return make_multicat(T, x0, x1, d0, d1, s0, rule);
}

// only identities over the given objects, under the word monad
MulticatPtr discrete_words(const std::vector<std::string>& names) {
  MonadPtr T = free_monoid_monad();
  std::vector<Elem> objs, ids, words;
  for (const auto& s : names) {
    objs.push_back(a(s));
    ids.push_back(a("id_" + s));
    words.push_back(Elem::list({a(s)}));
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

TFunctor collapse_functor() {
  MulticatPtr src = discrete_words({"a", "b"});
  MulticatPtr tgt = discrete_words({"c"});
  FinMap p0 = FinMap::constant(src->x0(), tgt->x0(), a("c"));
  FinMap p1 = FinMap::constant(src->x1(), tgt->x1(), a("id_c"));
  return {src, tgt, p0, p1};
}

TFunctor inclusion_functor() {
  MulticatPtr src = discrete_words({"a"});
  MulticatPtr tgt = discrete_words({"a", "b"});
  FinMap p0 = FinMap::from_pairs(src->x0(), tgt->x0(), {{a("a"), a("a")}});
  FinMap p1 =
      FinMap::from_pairs(src->x1(), tgt->x1(), {{a("id_a"), a("id_a")}});
  return {src, tgt, p0, p1};
}

// the running set example: two points over u, one over v
FinMap two_one_cover() {
  FinSetObj X = FinSetObj::atoms({"x1", "x2", "y1"});
  FinSetObj Y = FinSetObj::atoms({"u", "v"});
  return FinMap::from_pairs(X, Y, {{a("x1"), a("u")},
                                   {a("x2"), a("u")},
                                   {a("y1"), a("v")}});
}

}  // namespace

TEST_CASE("descent classes of a set map collapse to surjectivity") {
  FinMap p = two_one_cover();
  DescentClasses c = descent_classes(p);
  CHECK(c.almost);
  CHECK(c.plain);
  CHECK(c.effective);

  FinMap inj = FinMap::from_pairs(FinSetObj::atoms({"x"}),
                                  FinSetObj::atoms({"u", "v"}),
                                  {{a("x"), a("u")}});
  DescentClasses ci = descent_classes(inj);
  CHECK_FALSE(ci.almost);
  CHECK_FALSE(ci.plain);
  CHECK_FALSE(ci.effective);
}

TEST_CASE("comparison data satisfy the three laws") {
  FinMap p = two_one_cover();
  FinSetObj W = FinSetObj::atoms({"w1", "w2"});
  int seen = 0;
  for (const FinMap& f : all_maps(W, p.cod())) {
    SetDescentDatum d = comparison_datum(p, f);
    Report r = check_descent_datum(p, d);
    CHECK(r.ok());
    CHECK(r.entries.size() == 5);
    ++seen;
  }
  CHECK(seen == 4);
}

TEST_CASE("frozen comparison instance and its descent inverse") {
  FinMap p = two_one_cover();
  FinSetObj W = FinSetObj::atoms({"w1", "w2"});
  FinMap f = FinMap::from_pairs(W, p.cod(),
                                {{a("w1"), a("u")}, {a("w2"), a("v")}});
  SetDescentDatum d = comparison_datum(p, f);

  FinSetObj expected({Elem::pair(a("x1"), a("w1")),
                      Elem::pair(a("x2"), a("w1")),
                      Elem::pair(a("y1"), a("w2"))});
  CHECK(d.a.dom() == expected);
  CHECK(d.a.apply(Elem::pair(a("x2"), a("w1"))) == a("x2"));
  CHECK(d.gamma.dom().size() == 5);
  Elem cell = Elem::pair(a("x2"), Elem::pair(a("x1"), a("w1")));
  CHECK(d.gamma.apply(cell) == Elem::pair(a("x2"), a("w1")));

  SetDescentInverse inv = set_descent_inverse(p, d);
  CHECK(inv.f.dom().size() == 2);
  CHECK(inv.f.apply(Elem::pair(a("x1"), a("w1"))) == a("u"));
  CHECK(inv.f.apply(Elem::pair(a("y1"), a("w2"))) == a("v"));
  CHECK(inv.quot.apply(Elem::pair(a("x2"), a("w1"))) ==
        Elem::pair(a("x1"), a("w1")));

  bool matched = false;
  for (const FinMap& s : all_bijections(W, inv.f.dom()))
    if (compose(inv.f, s).pointwise_equal(f)) matched = true;
  CHECK(matched);
}

TEST_CASE("reindexing enumeration agrees with a direct filter") {
  FinMap p = two_one_cover();
  FinSetObj V = FinSetObj::atoms({"b1", "b2"});
  int nonempty = 0;
  for (const FinMap& anchor : all_maps(V, p.dom())) {
    PullbackSquare u = reindex_square(p, anchor);
    std::vector<std::string> direct;
    for (const FinMap& g : all_maps(u.apex, V))
      if (check_descent_datum(p, {anchor, g}).ok()) direct.push_back(g.str());
    std::vector<std::string> fast;
    for (const FinMap& g : enumerate_reindexings(p, anchor))
      fast.push_back(g.str());
    std::sort(direct.begin(), direct.end());
    std::sort(fast.begin(), fast.end());
    CHECK(direct == fast);
    if (!fast.empty()) ++nonempty;
  }
  CHECK(nonempty > 0);
}

TEST_CASE("uneven anchor fibers admit no reindexing") {
  FinSetObj X = FinSetObj::atoms({"x1", "x2"});
  FinSetObj Y = FinSetObj::atoms({"u"});
  FinMap p = FinMap::constant(X, Y, a("u"));
  FinSetObj V = FinSetObj::atoms({"b1", "b2", "b3"});
  FinMap anchor = FinMap::from_pairs(
      V, X, {{a("b1"), a("x1")}, {a("b2"), a("x1")}, {a("b3"), a("x2")}});
  CHECK(enumerate_reindexings(p, anchor).empty());
}

TEST_CASE("every datum along a surjection descends and comes back") {
  FinMap p = two_one_cover();
  int data = 0;
  for (int n = 0; n <= 2; ++n) {
    FinSetObj V = canonical_atoms("b", static_cast<std::size_t>(n));
    for (const FinMap& anchor : all_maps(V, p.dom())) {
      for (const FinMap& g : enumerate_reindexings(p, anchor)) {
        SetDescentDatum d{anchor, g};
        SetDescentInverse inv = set_descent_inverse(p, d);
        CHECK(data_isomorphic(p, d, comparison_datum(p, inv.f)));
        ++data;
      }
    }
  }
  CHECK(data >= 3);
}

TEST_CASE("descent inverse refuses a map that misses part of the base") {
  FinSetObj X = FinSetObj::atoms({"x"});
  FinSetObj Y = FinSetObj::atoms({"u", "v"});
  FinMap p = FinMap::from_pairs(X, Y, {{a("x"), a("u")}});
  FinSetObj V = FinSetObj::atoms({"b"});
  FinMap anchor = FinMap::constant(V, X, a("x"));
  std::vector<FinMap> gs = enumerate_reindexings(p, anchor);
  REQUIRE(gs.size() == 1);
  CHECK_THROWS_AS(set_descent_inverse(p, {anchor, gs[0]}), BoundaryError);
}

TEST_CASE("image condition singles out the comparison data") {
  FinMap p = two_one_cover();
  FinSetObj W = FinSetObj::atoms({"w1", "w2"});
  FinSetObj V = FinSetObj::atoms({"c1", "c2", "c3"});
  int agreements = 0, matches = 0;
  for (const FinMap& f : all_maps(W, p.cod())) {
    for (const FinMap& anchor : all_maps(V, p.dom())) {
      for (const FinMap& g : enumerate_reindexings(p, anchor)) {
        SetDescentDatum d{anchor, g};
        bool by_iso = data_isomorphic(p, d, comparison_datum(p, f));
        bool by_condition = find_comparison_match(p, f, d).has_value();
        CHECK(by_iso == by_condition);
        ++agreements;
        if (by_iso) ++matches;
      }
    }
  }
  CHECK(agreements > 0);
  CHECK(matches > 0);
}

TEST_CASE("image condition holds on the nose for a comparison datum") {
  FinMap p = two_one_cover();
  FinSetObj W = FinSetObj::atoms({"w1", "w2"});
  FinMap f = FinMap::from_pairs(W, p.cod(),
                                {{a("w1"), a("u")}, {a("w2"), a("v")}});
  SetDescentDatum d = comparison_datum(p, f);
  FinMap phi = FinMap::identity(d.a.dom());
  CHECK(image_condition(p, f, d, phi));

  // a rearrangement that scrambles the anchors is rejected outright
  FinMap bad = FinMap::from_rule(d.a.dom(), d.a.dom(), [&](const Elem& t) {
    if (t == Elem::pair(a("x1"), a("w1"))) return Elem::pair(a("y1"), a("w2"));
    if (t == Elem::pair(a("y1"), a("w2"))) return Elem::pair(a("x1"), a("w1"));
    return t;
  });
  CHECK_THROWS_AS(image_condition(p, f, d, bad), BoundaryError);
}

TEST_CASE("paired descent data choose matchings between fibers") {
  FinSetObj X = FinSetObj::atoms({"x1", "x2"});
  FinSetObj Y = FinSetObj::atoms({"u"});
  FinMap p = FinMap::constant(X, Y, a("u"));
  FinSetObj V = FinSetObj::atoms({"c1", "c2", "c3", "c4"});
  FinMap anchor = FinMap::from_pairs(V, X, {{a("c1"), a("x1")},
                                            {a("c2"), a("x1")},
                                            {a("c3"), a("x2")},
                                            {a("c4"), a("x2")}});
  std::vector<FinMap> gs = enumerate_reindexings(p, anchor);
  CHECK(gs.size() == 2);
  for (const FinMap& g : gs) {
    SetDescentInverse inv = set_descent_inverse(p, {anchor, g});
    CHECK(inv.f.dom().size() == 2);
    CHECK(data_isomorphic(p, {anchor, g}, comparison_datum(p, inv.f)));
  }
}

TEST_CASE("cover criteria pass for an identity functor") {
  TFunctor id = identity_functor(weighted_z2());
  CriterionResult lifted = lifted_cover_criterion(id);
  CHECK(lifted.verdict);
  CHECK(lifted.details.entries.size() == 3);
  CHECK(lifted.details.str().find("lift of the pair level is onto") !=
        std::string::npos);
  CriterionResult level = level_cover_criterion(id);
  CHECK(level.verdict);
  CHECK(level.details.entries.size() >= 5);
  CHECK(level.details.str().find("monad preserves kernel pairs") !=
        std::string::npos);

  Classification c = classify_functor(id);
  CHECK(c.lifted_cover);
  CHECK(c.level_cover);
  CHECK(c.profile.p0);
  CHECK(c.profile.p3);
}

TEST_CASE("cover criteria pass for the two letter collapse") {
  TFunctor p = collapse_functor();
  REQUIRE(validate_functor(p).ok());
  CHECK(lifted_cover_criterion(p).verdict);
  CHECK(level_cover_criterion(p).verdict);
  CHECK(regular_epi_check(p).verdict);
}

TEST_CASE("cover criteria fail for an inclusion") {
  TFunctor p = inclusion_functor();
  REQUIRE(validate_functor(p).ok());
  CriterionResult level = level_cover_criterion(p);
  CHECK_FALSE(level.verdict);
  CHECK(level.details.str().find("no preimage of") != std::string::npos);
  CHECK_FALSE(lifted_cover_criterion(p).verdict);
  CHECK_FALSE(regular_epi_check(p).verdict);

  Classification c = classify_functor(p);
  CHECK_FALSE(c.lifted_cover);
  CHECK_FALSE(c.level_cover);
  CHECK_FALSE(c.profile.p0);
}

TEST_CASE("comparison datum over a functor passes every check") {
  TFunctor p = collapse_functor();
  MulticatPtr w = discrete_words({"s", "t"});
  TFunctor f{w, p.tgt, FinMap::constant(w->x0(), p.tgt->x0(), a("c")),
             FinMap::constant(w->x1(), p.tgt->x1(), a("id_c"))};
  REQUIRE(validate_functor(f).ok());

  MultiDescentDatum d = comparison_multicat_datum(p, f);
  CHECK(d.v->x0().size() == 4);
  CHECK(d.v->x1().size() == 4);
  CHECK(d.gamma0.dom().size() == 8);
  CHECK(d.gamma1.dom().size() == 8);
  Report r = check_multicat_datum(p, d);
  CHECK(r.ok());
  CHECK(r.entries.size() >= 12);
  CHECK(r.str().find("objects: reindexing fixes the diagonal") !=
        std::string::npos);
}

TEST_CASE("quotient of a comparison datum recovers the object downstairs") {
  TFunctor p = collapse_functor();
  MulticatPtr w = discrete_words({"s", "t"});
  TFunctor f{w, p.tgt, FinMap::constant(w->x0(), p.tgt->x0(), a("c")),
             FinMap::constant(w->x1(), p.tgt->x1(), a("id_c"))};
  MultiDescentDatum d = comparison_multicat_datum(p, f);

  MultiDescentQuotient q = multicat_descent_quotient(p, d);
  CHECK(q.w->x0().size() == 2);
  CHECK(q.w->x1().size() == 2);
  CHECK(validate_functor(q.f).ok());
  CHECK(validate_functor(q.h).ok());
  CHECK(find_multicat_iso(q.w, w).has_value());
  CHECK(multicat_data_isomorphic(p, d, comparison_multicat_datum(p, q.f)));
}

TEST_CASE("a scrambled reindexing is rejected by the quotient") {
  TFunctor p = collapse_functor();
  MulticatPtr w = discrete_words({"s", "t"});
  TFunctor f{w, p.tgt, FinMap::constant(w->x0(), p.tgt->x0(), a("c")),
             FinMap::constant(w->x1(), p.tgt->x1(), a("id_c"))};
  MultiDescentDatum d = comparison_multicat_datum(p, f);
  Elem z = d.v->x0().elements()[0];
  MultiDescentDatum bad{d.v, d.a,
                        FinMap::constant(d.gamma0.dom(), d.gamma0.cod(), z),
                        d.gamma1};
  CHECK_FALSE(check_multicat_datum(p, bad).ok());
  CHECK_THROWS_AS(multicat_descent_quotient(p, bad), CommutationError);
}

TEST_CASE("oracle is clean on the identity functor") {
  TFunctor id = identity_functor(weighted_z2());
  OracleOutcome o = brute_force_oracle(id, 1);
  CHECK(o.status == "clean");
  CHECK(o.data_checked == 2);
  CHECK(o.failures.empty());
  CHECK(o.comparison_full);
  CHECK(o.comparison_faithful);
}

TEST_CASE("oracle is clean on the two letter collapse") {
  TFunctor p = collapse_functor();
  OracleOutcome o = brute_force_oracle(p, 2, 2);
  CHECK(o.status == "clean");
  CHECK(o.data_checked > 0);
  CHECK(o.failures.empty());
  CHECK(o.comparison_full);
  CHECK(o.comparison_faithful);
}

TEST_CASE("oracle stays inconclusive without a cover") {
  TFunctor p = inclusion_functor();
  OracleOutcome o = brute_force_oracle(p, 2);
  CHECK(o.status == "inconclusive");
  CHECK(o.failures.empty());

  OracleOutcome zero = brute_force_oracle(p, 0);
  CHECK(zero.status == "inconclusive");
  CHECK(zero.data_checked == 0);
}
