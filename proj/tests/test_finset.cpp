#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tmcat/finset.hpp"

using namespace tmcat;

namespace {

Elem a(const char* s) { return Elem::atom(s); }

}  // namespace

TEST_CASE("element order is total: atoms, then pairs, then lists") {
  Elem x = a("x"), y = a("y");
  Elem p = Elem::pair(x, y);
  Elem l = Elem::list({x, y});
  CHECK(x < y);
  CHECK(x < p);
  CHECK(p < l);
  CHECK(Elem::pair(x, x) < Elem::pair(x, y));
  CHECK(Elem::list({x}) < Elem::list({x, x}));
  CHECK(Elem::list({x, y}) == Elem::list({x, y}));
  // pairs and two-element lists are distinct tokens
  CHECK(!(Elem::pair(x, y) == Elem::list({x, y})));
  CHECK(p.str() == "(x,y)");
  CHECK(l.str() == "[x,y]");
}

TEST_CASE("sets canonicalize: sorted, duplicate-free, order-insensitive") {
  FinSetObj s1({a("b"), a("a"), a("c"), a("a")});
  FinSetObj s2({a("c"), a("b"), a("a")});
  CHECK(s1 == s2);
  CHECK(s1.size() == 3);
  CHECK(s1.elements()[0] == a("a"));
  CHECK(s1.contains(a("b")));
  CHECK(!s1.contains(a("d")));
  CHECK(s1.index_of(a("c")) == 2);
  CHECK_THROWS_AS(s1.index_of(a("z")), BoundaryError);
}

TEST_CASE("maps check totality and codomain membership") {
  FinSetObj dom = FinSetObj::atoms({"x", "y"});
  FinSetObj cod = FinSetObj::atoms({"u"});
  FinMap f = FinMap::constant(dom, cod, a("u"));
  CHECK(f.apply(a("x")) == a("u"));
  CHECK_THROWS_AS(f.apply(a("z")), BoundaryError);
  CHECK_THROWS_AS(FinMap(dom, cod, {a("u")}), BoundaryError);
  CHECK_THROWS_AS(FinMap(dom, cod, {a("u"), a("v")}), BoundaryError);
  CHECK_THROWS_AS(
      FinMap::from_pairs(dom, cod, {{a("x"), a("u")}}), BoundaryError);
}

TEST_CASE("compose agrees with pointwise evaluation on all small maps") {
  for (std::size_t nx = 0; nx <= 3; ++nx)
    for (std::size_t ny = 0; ny <= 3; ++ny)
      for (std::size_t nz = 0; nz <= 3; ++nz) {
        FinSetObj X = canonical_atoms("x", nx);
        FinSetObj Y = canonical_atoms("y", ny);
        FinSetObj Z = canonical_atoms("z", nz);
        for (const FinMap& f : all_maps(X, Y))
          for (const FinMap& g : all_maps(Y, Z)) {
            FinMap gf = compose(g, f);
            for (const Elem& x : X)
              CHECK(gf.apply(x) == g.apply(f.apply(x)));
          }
      }
}

TEST_CASE("compose rejects mismatched boundaries") {
  FinMap f = FinMap::identity(FinSetObj::atoms({"x"}));
  FinMap g = FinMap::identity(FinSetObj::atoms({"y"}));
  CHECK_THROWS_AS(compose(g, f), BoundaryError);
}

TEST_CASE("chosen pullback of a fixed cospan") {
  // f : {d} -> {c},  p : {a,b} -> {c}
  FinSetObj W = FinSetObj::atoms({"d"});
  FinSetObj X = FinSetObj::atoms({"a", "b"});
  FinSetObj Y = FinSetObj::atoms({"c"});
  FinMap f = FinMap::constant(W, Y, a("c"));
  FinMap p = FinMap::constant(X, Y, a("c"));
  PullbackSquare sq = chosen_pullback(f, p);
  FinSetObj expected(
      {Elem::pair(a("a"), a("d")), Elem::pair(a("b"), a("d"))});
  CHECK(sq.apex == expected);
  CHECK(sq.leg_p.apply(Elem::pair(a("a"), a("d"))) == a("a"));
  CHECK(sq.leg_f.apply(Elem::pair(a("a"), a("d"))) == a("d"));
}

TEST_CASE("pullback apex size equals the fiber-count sum") {
  for (std::size_t nw = 0; nw <= 3; ++nw)
    for (std::size_t nx = 0; nx <= 3; ++nx)
      for (std::size_t ny = 0; ny <= 2; ++ny) {
        FinSetObj W = canonical_atoms("w", nw);
        FinSetObj X = canonical_atoms("x", nx);
        FinSetObj Y = canonical_atoms("y", ny);
        for (const FinMap& f : all_maps(W, Y))
          for (const FinMap& p : all_maps(X, Y)) {
            PullbackSquare sq = chosen_pullback(f, p);
            std::size_t want = 0;
            for (const Elem& c : Y)
              want += fiber(p, c).size() * fiber(f, c).size();
            CHECK(sq.apex.size() == want);
            // square commutes
            for (const Elem& e : sq.apex)
              CHECK(sq.p.apply(sq.leg_p.apply(e)) ==
                    sq.f.apply(sq.leg_f.apply(e)));
          }
      }
}

TEST_CASE("mediating maps exist uniquely for every cone (small exhaustive)") {
  // sizes <= 2 everywhere, with uniqueness checked by enumerating every map
  // into the apex
  for (std::size_t nw = 0; nw <= 2; ++nw)
    for (std::size_t nx = 0; nx <= 2; ++nx)
      for (std::size_t ny = 0; ny <= 2; ++ny)
        for (std::size_t nz = 0; nz <= 2; ++nz) {
          FinSetObj W = canonical_atoms("w", nw);
          FinSetObj X = canonical_atoms("x", nx);
          FinSetObj Y = canonical_atoms("y", ny);
          FinSetObj Z = canonical_atoms("z", nz);
          for (const FinMap& f : all_maps(W, Y))
            for (const FinMap& p : all_maps(X, Y)) {
              PullbackSquare sq = chosen_pullback(f, p);
              std::vector<FinMap> into_apex = all_maps(Z, sq.apex);
              for (const FinMap& u : all_maps(Z, X))
                for (const FinMap& v : all_maps(Z, W)) {
                  bool commutes = true;
                  for (const Elem& z : Z)
                    if (!(p.apply(u.apply(z)) == f.apply(v.apply(z)))) {
                      commutes = false;
                      break;
                    }
                  if (!commutes) {
                    CHECK_THROWS_AS(pair_into(sq, u, v), CommutationError);
                    continue;
                  }
                  FinMap med = pair_into(sq, u, v);
                  CHECK(compose(sq.leg_p, med).pointwise_equal(u));
                  CHECK(compose(sq.leg_f, med).pointwise_equal(v));
                  // uniqueness among all maps into the apex
                  std::size_t hits = 0;
                  for (const FinMap& m : into_apex)
                    if (compose(sq.leg_p, m).pointwise_equal(u) &&
                        compose(sq.leg_f, m).pointwise_equal(v)) {
                      ++hits;
                      CHECK(m == med);
                    }
                  CHECK(hits == 1);
                }
            }
        }
}

TEST_CASE("transport respects the counit and the anchor") {
  // h : dom f -> dom g a slice morphism over the base; the transported map
  // satisfies leg_f . transport = h . leg_f and leg_p . transport = leg_p
  for (std::size_t nb = 1; nb <= 2; ++nb) {
    FinSetObj B = canonical_atoms("b", nb);
    FinSetObj X = canonical_atoms("x", 2);
    FinSetObj V = canonical_atoms("v", 2);
    FinSetObj W = canonical_atoms("w", 2);
    for (const FinMap& p : all_maps(X, B))
      for (const FinMap& g : all_maps(W, B))
        for (const FinMap& h : all_maps(V, W)) {
          FinMap f = compose(g, h);
          FinMap t = transport_map(p, h, f, g);
          PullbackSquare from = chosen_pullback(f, p);
          PullbackSquare to = chosen_pullback(g, p);
          CHECK(compose(to.leg_f, t).pointwise_equal(
              compose(h, from.leg_f)));
          CHECK(compose(to.leg_p, t).pointwise_equal(from.leg_p));
        }
  }
}

TEST_CASE("transport rejects non-slice morphisms") {
  FinSetObj B = FinSetObj::atoms({"b1", "b2"});
  FinMap p = FinMap::identity(B);
  FinMap f = FinMap::identity(B);
  // h swaps the fibers, so g . h != f
  FinMap h = FinMap::from_pairs(B, B, {{a("b1"), a("b2")}, {a("b2"), a("b1")}});
  CHECK_THROWS_AS(transport_map(p, h, f, f), CommutationError);
}

TEST_CASE("kernel pair of a three-to-two map has five elements") {
  FinSetObj X = FinSetObj::atoms({"e1", "e2", "e3"});
  FinSetObj Y = FinSetObj::atoms({"x", "y"});
  FinMap f = FinMap::from_pairs(
      X, Y, {{a("e1"), a("x")}, {a("e2"), a("x")}, {a("e3"), a("y")}});
  CHECK(kernel_pair(f).apex.size() == 5);
}

TEST_CASE("coequalizer of the kernel pair is the image factorization") {
  FinSetObj X = FinSetObj::atoms({"e1", "e2", "e3"});
  FinSetObj Y = FinSetObj::atoms({"x", "y"});
  FinMap f = FinMap::from_pairs(
      X, Y, {{a("e1"), a("x")}, {a("e2"), a("x")}, {a("e3"), a("y")}});
  Coequalizer c = coequalizer_of_kernel_pair(f);
  CHECK(c.quotient == FinSetObj::atoms({"e1", "e3"}));
  CHECK(c.proj.apply(a("e2")) == a("e1"));
  CHECK(is_injective(c.embed));
  CHECK(compose(c.embed, c.proj) == f);

  // and as a property on all small maps
  for (std::size_t nx = 0; nx <= 3; ++nx)
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      FinSetObj Xs = canonical_atoms("x", nx);
      FinSetObj Ys = canonical_atoms("y", ny);
      for (const FinMap& g : all_maps(Xs, Ys)) {
        Coequalizer q = coequalizer_of_kernel_pair(g);
        CHECK(is_surjective(q.proj));
        CHECK(is_injective(q.embed));
        CHECK(compose(q.embed, q.proj) == g);
        CHECK(q.quotient.size() == image(g).size());
      }
    }
}

TEST_CASE("surjectivity is stable under pullback") {
  for (std::size_t nw = 0; nw <= 2; ++nw)
    for (std::size_t nx = 0; nx <= 2; ++nx)
      for (std::size_t ny = 1; ny <= 2; ++ny) {
        FinSetObj W = canonical_atoms("w", nw);
        FinSetObj X = canonical_atoms("x", nx);
        FinSetObj Y = canonical_atoms("y", ny);
        for (const FinMap& f : all_maps(W, Y))
          for (const FinMap& p : all_maps(X, Y)) {
            if (!is_surjective(p)) continue;
            PullbackSquare sq = chosen_pullback(f, p);
            // the pulled-back projection to dom f is again surjective
            CHECK(is_surjective(sq.leg_f));
          }
      }
}

TEST_CASE("predicates and inverse") {
  FinSetObj X = FinSetObj::atoms({"p", "q"});
  FinSetObj Y = FinSetObj::atoms({"u", "v"});
  FinMap swap_xy =
      FinMap::from_pairs(X, Y, {{a("p"), a("v")}, {a("q"), a("u")}});
  CHECK(is_bijective(swap_xy));
  FinMap back = inverse(swap_xy);
  CHECK(compose(back, swap_xy) == FinMap::identity(X));
  FinMap cst = FinMap::constant(X, Y, a("u"));
  CHECK(!is_injective(cst));
  CHECK(!is_surjective(cst));
  CHECK_THROWS_AS(inverse(cst), BoundaryError);
}

TEST_CASE("enumeration utilities have the expected counts") {
  FinSetObj s2 = canonical_atoms("s", 2);
  FinSetObj s3 = canonical_atoms("t", 3);
  CHECK(all_maps(s2, s3).size() == 9);
  CHECK(all_maps(FinSetObj{}, s3).size() == 1);
  CHECK(all_maps(s2, FinSetObj{}).empty());
  CHECK(all_bijections(s3, s3).size() == 6);
  CHECK(all_bijections(s2, s3).empty());
  // Bell numbers
  CHECK(all_quotient_maps(FinSetObj{}).size() == 1);
  CHECK(all_quotient_maps(canonical_atoms("q", 1)).size() == 1);
  CHECK(all_quotient_maps(s2).size() == 2);
  CHECK(all_quotient_maps(s3).size() == 5);
  CHECK(all_quotient_maps(canonical_atoms("q", 4)).size() == 15);
  for (const FinMap& q : all_quotient_maps(s3)) {
    CHECK(is_surjective(q));
    // each class is named by its least member
    for (const Elem& c : q.cod()) CHECK(q.apply(c) == c);
  }
}
