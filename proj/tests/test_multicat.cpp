#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tmcat/multicat.hpp"

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

// the linear order 0 <= 1 <= ... <= n as a category, plain-set monad
MulticatPtr chain_category(int n) {
  MonadPtr T = identity_monad();
  std::vector<Elem> objs;
  for (int i = 0; i <= n; ++i) objs.push_back(a(std::to_string(i)));
  std::vector<Elem> mors;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) mors.push_back(Elem::pair(objs[i], objs[j]));
  FinSetObj x0(objs), x1(mors);
  // target is the upper endpoint, source the lower
  FinMap d0 = FinMap::from_rule(x1, x0,
                                [](const Elem& m) { return m.second(); });
  FinMap d1 = FinMap::from_rule(x1, x0,
                                [](const Elem& m) { return m.first(); });
  FinMap s0 = FinMap::from_rule(x0, x1,
                                [](const Elem& o) { return Elem::pair(o, o); });
  auto rule = [](const Elem& xi) {
    return Elem::pair(xi.second().first(), xi.first().second());
  };
  return make_multicat(T, x0, x1, d0, d1, s0, rule);
}

}  // namespace

TEST_CASE("weighted one-object example: level sizes and laws") {
  MulticatPtr m = weighted_z2();
  CHECK(m->x2().size() == 4);
  CHECK(m->x3().size() == 8);
  Report r = validate_multicategory(*m);
  CHECK(r.ok());
  CHECK(r.entries.size() == 7);

  // weights add: f1 after a tail carrying f1 composes to f0
  Elem xi = Elem::pair(a("f1"),
                       Elem::pair(a("1"), a("f1")));
  CHECK(m->x2().contains(xi));
  CHECK(m->comp().apply(xi) == a("f0"));

  // degeneracies hit the pair level where they should
  CHECK(m->x2_s0().apply(a("f1")) ==
        Elem::pair(a("f1"), Elem::pair(a("1"), a("f0"))));
  CHECK(m->x2_s1().apply(a("f1")) ==
        Elem::pair(a("f0"), Elem::pair(a("0"), a("f1"))));
  for (const Elem& g : m->x1()) {
    CHECK(m->x2_d0().apply(m->x2_s0().apply(g)) == g);
    CHECK(m->comp().apply(m->x2_s1().apply(g)) == g);
  }
}

TEST_CASE("discrete word example: pairs are forced and laws hold") {
  MulticatPtr m = discrete_words({"a", "b"});
  CHECK(m->x2().size() == 2);
  CHECK(m->x3().size() == 2);
  CHECK(validate_multicategory(*m).ok());
}

TEST_CASE("chain category: composable chains count correctly") {
  MulticatPtr m = chain_category(2);
  CHECK(m->x1().size() == 6);
  CHECK(m->x2().size() == 10);
  CHECK(m->x3().size() == 15);
  CHECK(validate_multicategory(*m).ok());

  Elem g = Elem::pair(a("1"), a("2"));
  Elem f = Elem::pair(a("0"), a("1"));
  Elem xi = Elem::pair(g, f);
  CHECK(m->x2().contains(xi));
  CHECK(m->comp().apply(xi) == Elem::pair(a("0"), a("2")));
}

TEST_CASE("law failures are reported with witnesses, not thrown") {
  MonadPtr T = monoid_action_monad(MonoidTable::zmod(2));
  FinSetObj x0 = FinSetObj::atoms({"o"});
  FinSetObj x1 = FinSetObj::atoms({"f0", "f1"});
  FinMap d0 = FinMap::constant(x1, x0, a("o"));
  FinSetObj tx0({Elem::pair(a("0"), a("o")), Elem::pair(a("1"), a("o"))});
  FinMap d1 = FinMap::from_pairs(
      x1, tx0, {{a("f0"), Elem::pair(a("0"), a("o"))},
                {a("f1"), Elem::pair(a("1"), a("o"))}});

  // composition that ignores weights breaks the source equation
  TMulticategory bad(T, x0, x1, d0, d1, FinMap::constant(x0, x1, a("f0")),
                     [](const Elem&) { return Elem::atom("f0"); });
  Report r = validate_multicategory(bad);
  CHECK(!r.ok());
  CHECK(r.str().find("composite source") != std::string::npos);

  // an identity with the wrong weight breaks the unit source equation
  TMulticategory bad2(T, x0, x1, d0, d1, FinMap::constant(x0, x1, a("f1")),
                      [](const Elem& xi) { return xi.first(); });
  Report r2 = validate_multicategory(bad2);
  CHECK(!r2.ok());
  CHECK(r2.str().find("identity source") != std::string::npos);
}

TEST_CASE("ill-typed source data is rejected at construction") {
  MonadPtr T = identity_monad();
  FinSetObj x0 = FinSetObj::atoms({"o"});
  FinSetObj x1 = FinSetObj::atoms({"f"});
  FinSetObj other = FinSetObj::atoms({"z"});
  FinMap d0 = FinMap::constant(x1, x0, a("o"));
  FinMap s0 = FinMap::constant(x0, x1, a("f"));
  // d1 lands outside the object carrier
  FinMap d1 = FinMap::constant(x1, other, a("z"));
  CHECK_THROWS_AS(TMulticategory(T, x0, x1, d0, d1, s0,
                                 [](const Elem& xi) { return xi.first(); }),
                  BoundaryError);
}

TEST_CASE("functors: collapse of a discrete pair onto a point") {
  MulticatPtr src = discrete_words({"a", "b"});
  MulticatPtr tgt = discrete_words({"c"});
  FinMap p0 = FinMap::constant(src->x0(), tgt->x0(), a("c"));
  FinMap p1 = FinMap::constant(src->x1(), tgt->x1(), a("id_c"));
  TFunctor f{src, tgt, p0, p1};
  CHECK(validate_functor(f).ok());
  SurjectivityProfile prof = surjectivity_profile(f);
  CHECK(prof.p0);
  CHECK(prof.p1);
  CHECK(prof.p2);
  CHECK(prof.p3);
  CHECK(induced_on_pairs(f).cod().size() == 1);

  // when the morphism map is onto, so is the object map: targets of
  // morphisms cover the objects because identities exist upstairs
  CHECK((!prof.p1 || prof.p0));
}

TEST_CASE("functors: inclusion misses objects and morphisms") {
  MulticatPtr small = discrete_words({"a"});
  MulticatPtr big = discrete_words({"a", "b"});
  TFunctor inc{small, big,
               FinMap::from_pairs(small->x0(), big->x0(), {{a("a"), a("a")}}),
               FinMap::from_pairs(small->x1(), big->x1(),
                                  {{a("id_a"), a("id_a")}})};
  CHECK(validate_functor(inc).ok());
  SurjectivityProfile prof = surjectivity_profile(inc);
  CHECK(!prof.p0);
  CHECK(!prof.p1);
  CHECK(!prof.p2);
  CHECK(!prof.p3);
}

TEST_CASE("a non-functor is reported") {
  MulticatPtr m = weighted_z2();
  // swapping the two morphisms preserves boundaries but not identities
  FinMap p1 = FinMap::from_pairs(m->x1(), m->x1(),
                                 {{a("f0"), a("f1")}, {a("f1"), a("f0")}});
  TFunctor f{m, m, FinMap::identity(m->x0()), p1};
  Report r = validate_functor(f);
  CHECK(!r.ok());
  CHECK(r.str().find("sources preserved") != std::string::npos);
}

TEST_CASE("functor composition and identities") {
  MulticatPtr src = discrete_words({"a", "b"});
  MulticatPtr tgt = discrete_words({"c"});
  FinMap p0 = FinMap::constant(src->x0(), tgt->x0(), a("c"));
  FinMap p1 = FinMap::constant(src->x1(), tgt->x1(), a("id_c"));
  TFunctor f{src, tgt, p0, p1};
  TFunctor post = compose_functors(identity_functor(tgt), f);
  CHECK(post.p0 == f.p0);
  CHECK(post.p1 == f.p1);
  TFunctor pre = compose_functors(f, identity_functor(src));
  CHECK(pre.p0.pointwise_equal(f.p0));
  CHECK_THROWS_AS(compose_functors(f, f), BoundaryError);
}

TEST_CASE("pullback of the collapse cospan is discrete on four objects") {
  MulticatPtr src = discrete_words({"a", "b"});
  MulticatPtr tgt = discrete_words({"c"});
  FinMap p0 = FinMap::constant(src->x0(), tgt->x0(), a("c"));
  FinMap p1 = FinMap::constant(src->x1(), tgt->x1(), a("id_c"));
  TFunctor f{src, tgt, p0, p1};
  MulticatPullbackSquare sq = pullback_multicat(f, f);
  CHECK(sq.object->x0().size() == 4);
  CHECK(sq.object->x1().size() == 4);
  CHECK(validate_multicategory(*sq.object).ok());
  CHECK(validate_functor(sq.to_f_source).ok());
  CHECK(validate_functor(sq.to_g_source).ok());
  CHECK(find_multicat_iso(sq.object, discrete_words({"p", "q", "r", "s"}))
            .has_value());
}

TEST_CASE("pullback over a plain category cospan") {
  MulticatPtr chain = chain_category(1);  // 0 <= 1, three morphisms
  TFunctor idf = identity_functor(chain);
  MulticatPullbackSquare sq = pullback_multicat(idf, idf);
  CHECK(validate_multicategory(*sq.object).ok());
  // pulling back along the identity changes nothing but the token names
  CHECK(sq.object->x1().size() == chain->x1().size());
  CHECK(find_multicat_iso(sq.object, chain).has_value());
}

TEST_CASE("isomorphism search distinguishes weights from nothing") {
  MulticatPtr m = weighted_z2();
  CHECK(find_multicat_iso(m, m).has_value());
  CHECK(!find_multicat_iso(m, discrete_words({"a", "b"})).has_value());
  MulticatPtr relabeled = discrete_words({"u", "v"});
  CHECK(find_multicat_iso(discrete_words({"a", "b"}), relabeled).has_value());
  CHECK(!find_multicat_iso(discrete_words({"a"}), relabeled).has_value());
}
