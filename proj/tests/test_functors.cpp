#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ziq/functors.hpp"
#include "ziq/gen.hpp"

using namespace ziq;

namespace {

NCat BZ(int k) { return deloop("Z/" + std::to_string(k), 1); }
NCat B2Z(int k) { return deloop("Z/" + std::to_string(k), 2); }

// Multiplication-by-two endomorphism of B(Z/4).
Morphism times_two() {
  Morphism m;
  m.dom = BZ(4);
  m.cod = BZ(4);
  m.label = "x2";
  m.map = {{0}, {0, 2, 0, 2}};
  return m;
}

}  // namespace

TEST_CASE("pi0 on categories", "[functors]") {
  SECTION("terminal categories collapse one dimension") {
    for (int n = 1; n <= 3; ++n) CHECK(pi0(terminal(n)) == terminal(n - 1));
  }

  SECTION("pair groupoid is connected") {
    NCat P = pi0(pair_groupoid(3));
    CHECK(P.n == 0);
    CHECK(P.size(0) == 1);
    CHECK(P.cells[0][0] == "p0");
    REQUIRE(P.point.has_value());
    CHECK(P.point->idx == 0);
  }

  SECTION("delooping of Z/2 twice has one component of arrows") {
    NCat P = pi0(B2Z(2));
    CHECK(P.n == 1);
    CHECK(P.size(0) == 1);
    CHECK(P.size(1) == 1);
    CHECK(validate(P).ok);
  }

  SECTION("non-groupoids are rejected") {
    CHECK_THROWS_AS(pi0(interval()), op_error);
    CHECK_THROWS_AS(pi0(deloop("M2", 1)), op_error);
    CHECK_THROWS_AS(pi0(discrete(2)), op_error);  // dimension zero
  }

  SECTION("pi0 after discretize is the identity") {
    for (const NCat& S : {BZ(4), pair_groupoid(2), B2Z(2)})
      CHECK(pi0(discretize(S)) == S);
  }

  SECTION("pi0 commutes with binary products, cell for cell") {
    NCat A = pair_groupoid(2), B = BZ(2);
    CHECK(pi0(product(A, B).cat) == product(pi0(A), pi0(B)).cat);

    NCat A2 = B2Z(2), B2 = discretize(BZ(2));
    CHECK(pi0(product(A2, B2).cat) == product(pi0(A2), pi0(B2)).cat);
  }
}

TEST_CASE("discretize builds valid categories with formal identities",
          "[functors]") {
  NCat E = discretize(BZ(2));
  CHECK(E.n == 2);
  CHECK(E.size(0) == 1);
  CHECK(E.size(1) == 2);
  CHECK(E.size(2) == 2);
  CHECK(validate(E).ok);
  CHECK(E.has_cell(2, "id(g1)"));
  for (int i = 0; i < E.size(2); ++i) CHECK(is_unit(E, {2, i}));
  REQUIRE(E.point.has_value());

  NCat E2 = discretize(pair_groupoid(2));
  CHECK(validate(E2).ok);
  CHECK(E2.size(2) == 4);
}

TEST_CASE("pi0 and discretize on functors and transformations", "[functors]") {
  Morphism q = quotient_functor(4, 2);

  SECTION("pi0 of a functor between connected groupoids") {
    Morphism g = pi0(q);
    CHECK(g.dom.n == 0);
    CHECK(validate_morphism(g).ok);
    CHECK(g.dom.size(0) == 1);
  }

  SECTION("discretize of a functor validates and acts by the base map") {
    Morphism Dq = discretize(q);
    CHECK(validate_morphism(Dq).ok);
    CHECK(Dq.dom.n == 2);
    CHECK(Dq.cod.name_of(Dq.apply(Dq.dom.cell(2, "id(g3)"))) == "id(g1)");
  }

  SECTION("pi0 of a transformation quotients its top components") {
    NCat E = discretize(BZ(2));  // 2-groupoid with two classes of arrows
    Morphism idE = identity_morphism(E);
    std::vector<Transf2> ts = enumerate_transf2(idE, idE);
    REQUIRE(ts.size() == 2);
    bool saw_nontrivial = false;
    for (const Transf2& a : ts) {
      Transf2 p = pi0(a);
      CHECK(validate_transf2(p).ok);
      if (p.comp[0][0] == 1) saw_nontrivial = true;
    }
    CHECK(saw_nontrivial);
  }

  SECTION("discretize of a transformation validates one dimension up") {
    NCat E = discretize(BZ(2));
    Morphism idE = identity_morphism(E);
    for (const Transf2& a : enumerate_transf2(idE, idE)) {
      Transf2 d = discretize(a);
      CHECK(d.dom().n == 3);
      CHECK(validate_transf2(d).ok);
    }
  }
}

TEST_CASE("eta is a unit with both triangle identities", "[functors]") {
  SECTION("triangles hold across the fixture catalogue") {
    for (const NCat& C :
         {BZ(2), BZ(4), pair_groupoid(2), pair_groupoid(3), B2Z(2),
          discretize(BZ(4)), product(B2Z(2), discretize(BZ(2))).cat}) {
      auto [e, r] = eta_and_triangles(C);
      INFO(C.label);
      CHECK(validate_morphism(e).ok);
      CHECK(r.ok);
    }
  }

  SECTION("eta collapses a connected groupoid onto one object") {
    Morphism e = eta(pair_groupoid(2));
    CHECK(e.cod.size(0) == 1);
    CHECK(e.map[0] == std::vector<int>{0, 0});
    CHECK(e.map[1] == std::vector<int>{0, 0, 0, 0});
  }

  SECTION("naturality in the base category") {
    Morphism q = quotient_functor(4, 2);
    CHECK(compose0(q, eta(q.cod)) == compose0(eta(q.dom), discretize(pi0(q))));

    Morphism m2 = times_two();
    CHECK(compose0(m2, eta(m2.cod)) ==
          compose0(eta(m2.dom), discretize(pi0(m2))));
  }

  SECTION("naturality on 2-morphisms") {
    NCat E = discretize(BZ(2));
    Morphism idE = identity_morphism(E);
    Morphism e = eta(E);
    for (const Transf2& a : enumerate_transf2(idE, idE))
      CHECK(whisker_right(a, e) == whisker_left(e, discretize(pi0(a))));
  }
}

TEST_CASE("path spaces and the loop monoid", "[functors]") {
  SECTION("paths in B(Z/2) between the basepoint and itself") {
    NCat B2 = BZ(2);
    LoopSpace L = path_space(B2, *B2.point, *B2.point);
    REQUIRE(L.monoidal);
    CHECK(L.pb.cat.size(0) == 2);
    CHECK(L.pb.cat.size(1) == 2);
    for (int i = 0; i < 2; ++i) CHECK(is_unit(L.pb.cat, {1, i}));
    CHECK(L.pb.cat.name_of(L.I) == "(*|g0|*)");

    Cell g1 = L.pb.cat.cell(0, "(*|g1|*)");
    CHECK(loop_tensor(L, g1, g1) == L.I);
    CHECK(loop_tensor(L, g1, L.I) == g1);
    CHECK(loop_middle(L, g1) == B2.cell(1, "g1"));
    CHECK(loop_cell(L, B2.cell(1, "g1")) == g1);
  }

  SECTION("no paths between distinct components") {
    NCat D = discrete(2, 1);
    LoopSpace L = path_space(D, D.cell(0, "x0"), D.cell(0, "x1"));
    CHECK_FALSE(L.monoidal);
    CHECK(L.pb.cat.size(0) == 0);
    CHECK(L.pb.cat.size(1) == 0);
  }

  SECTION("loops on a pointed terminal category are terminal") {
    NCat T = terminal(1);
    T.point = Cell{0, 0};
    LoopSpace L = omega(T);
    CHECK(L.monoidal);
    CHECK(L.pb.cat.size(0) == 1);
    CHECK(L.pb.cat.size(1) == 1);
    CHECK(*L.pb.cat.point == L.I);
  }

  SECTION("monoid laws hold on the standard loop spaces") {
    for (const NCat& C : {BZ(2), BZ(4), B2Z(2), B2Z(3), deloop("S3", 1)}) {
      Report r = loop_monoid_check(C);
      INFO(C.label);
      CHECK(r.ok);
      CHECK(r.checked > 0);
    }
  }

  SECTION("loop monoid checks reject non-groupoids") {
    NCat M = deloop("M2", 1);
    M.point = Cell{0, 0};
    CHECK_THROWS_AS(loop_monoid_check(M), op_error);
  }
}

TEST_CASE("omega on functors", "[functors]") {
  Morphism q = quotient_functor(4, 2);

  SECTION("loops on the reduction functor act on middles") {
    Morphism Oq = omega(q);
    CHECK(validate_morphism(Oq).ok);
    CHECK(Oq.dom.size(0) == 4);
    CHECK(Oq.cod.size(0) == 2);
    auto img = [&](const std::string& s) {
      return Oq.cod.name_of(Oq.apply(Oq.dom.cell(0, s)));
    };
    CHECK(img("(*|g0|*)") == "(*|g0|*)");
    CHECK(img("(*|g1|*)") == "(*|g1|*)");
    CHECK(img("(*|g2|*)") == "(*|g0|*)");
    CHECK(img("(*|g3|*)") == "(*|g1|*)");
  }

  SECTION("omega preserves identities and composition") {
    NCat B4 = BZ(4);
    CHECK(omega(identity_morphism(B4)) ==
          identity_morphism(omega(B4).pb.cat));
    Morphism m2 = times_two();
    CHECK(omega(compose0(m2, q)) == compose0(omega(m2), omega(q)));
  }

  SECTION("unpointed functors are rejected") {
    Morphism f = constant_morphism(BZ(2), BZ(2), Cell{0, 0});
    Morphism g = f;
    g.dom.point.reset();
    CHECK_THROWS_AS(omega(g), op_error);
  }
}

TEST_CASE("omega on transformations", "[functors]") {
  SECTION("pointedness is required") {
    NCat B4 = BZ(4);
    Morphism idB = identity_morphism(B4);
    std::vector<Transf2> ts = enumerate_transf2(idB, idB);
    REQUIRE(ts.size() == 4);
    int rejected = 0;
    for (const Transf2& a : ts) {
      if (is_unit(B4, a.at(*B4.point))) {
        Transf2 o = omega(a);
        CHECK(validate_transf2(o).ok);
        CHECK(o == id2(identity_morphism(omega(B4).pb.cat)));
      } else {
        CHECK_THROWS_AS(omega(a), op_error);
        ++rejected;
      }
    }
    CHECK(rejected == 3);
  }

  SECTION("the unique endo-transformation of B^2(Z/2) passes through") {
    NCat C = B2Z(2);
    Morphism idC = identity_morphism(C);
    std::vector<Transf2> ts = enumerate_transf2(idC, idC);
    REQUIRE(ts.size() == 1);
    Transf2 o = omega(ts[0]);
    CHECK(validate_transf2(o).ok);
    CHECK(o.F == omega(idC));
    CHECK(o.G == omega(idC));
  }
}

TEST_CASE("omega and discretize preserve h-pullbacks", "[functors]") {
  SECTION("omega of an h-pullback apex") {
    NCat B2 = BZ(2);
    Morphism q = quotient_functor(4, 2);
    HPullback pb = h_pullback(q, identity_morphism(B2));
    REQUIRE(pb.cat.point.has_value());
    LoopSpace LX = omega(pb.cat);
    HPullback pb2 = h_pullback(omega(q), omega(identity_morphism(B2)));
    CHECK(LX.pb.cat.size(0) == pb2.cat.size(0));
    CHECK(LX.pb.cat.size(1) == pb2.cat.size(1));
    CHECK(iso_search(LX.pb.cat, pb2.cat).has_value());
  }

  SECTION("discretize of an h-pullback apex") {
    NCat B2 = BZ(2);
    Morphism idB = identity_morphism(B2);
    NCat X = discretize(h_pullback(idB, idB).cat);
    HPullback pb2 = h_pullback(discretize(idB), discretize(idB));
    CHECK(X.size(0) == pb2.cat.size(0));
    CHECK(X.size(1) == pb2.cat.size(1));
    CHECK(X.size(2) == pb2.cat.size(2));
    CHECK(iso_search(X, pb2.cat).has_value());
  }
}

TEST_CASE("pi1 as pointed homs", "[functors]") {
  SECTION("fundamental group of B(Z/4)") {
    NCat P = pi1(BZ(4));
    CHECK(P.n == 0);
    CHECK(P.size(0) == 4);
    REQUIRE(P.point.has_value());
    CHECK(P.name_of(*P.point) == "g0");
  }

  SECTION("fundamental groupoid of B^2(Z/2)") {
    NCat P = pi1(B2Z(2));
    CHECK(P.n == 1);
    CHECK(P.size(0) == 1);
    CHECK(P.size(1) == 2);
    CHECK(P.cells[0][0] == "id(*)");
    CHECK(validate(P).ok);
    NCat B2p = BZ(2);
    CHECK(iso_search(P, B2p).has_value());
  }

  SECTION("pi1 on functors") {
    Morphism g = pi1(quotient_functor(4, 2));
    CHECK(validate_morphism(g).ok);
    CHECK(g.cod.name_of(g.apply(g.dom.cell(0, "g3"))) == "g1");
  }

  SECTION("pi1 on transformations reverses direction") {
    NCat C = B2Z(2);
    Morphism idC = identity_morphism(C);
    std::vector<Transf2> ts = enumerate_transf2(idC, idC);
    REQUIRE(ts.size() == 1);
    Transf2 p = pi1(ts[0]);
    CHECK(validate_transf2(p).ok);
    CHECK(p.dom().size(0) == 1);
    CHECK(p.cod().name_of(p.at(Cell{0, 0})) == "g0");
  }

  SECTION("pi1 and pi0 commute") {
    for (const NCat& C :
         {B2Z(2), B2Z(4), product(B2Z(2), discretize(BZ(2))).cat})
      CHECK(pi0(pi1(C)) == pi1(pi0(C)));
  }
}

TEST_CASE("the comparison morphism into the path space", "[functors]") {
  SECTION("bijective on B(Z/2)") {
    NCat B2 = BZ(2);
    ComparisonS s = comparison_S(B2, *B2.point, *B2.point);
    CHECK(s.report.ok);
    CHECK(s.S.dom.size(0) == 2);
    CHECK(s.S.cod.size(0) == 2);
    CHECK(s.S.cod.name_of(s.S.apply(s.S.dom.cell(0, "g1"))) == "(*|g1|*)");
  }

  SECTION("bijective on B^2(Z/2)") {
    NCat C = B2Z(2);
    ComparisonS s = comparison_S(C, *C.point, *C.point);
    CHECK(s.report.ok);
    for (int k = 0; k <= 2; ++k)
      CHECK(s.S.dom.size(k) == s.S.cod.size(k));
  }

  SECTION("naturality against omega") {
    Morphism q = quotient_functor(4, 2);
    NCat B4 = BZ(4), B2 = BZ(2);
    ComparisonS s4 = comparison_S(B4, *B4.point, *B4.point);
    ComparisonS s2 = comparison_S(B2, *B2.point, *B2.point);
    CHECK(compose0(discretize(pi1(q)), s2.S) == compose0(s4.S, omega(q)));
  }

  SECTION("pi0 of the comparison relates pi1 to pi0 of loops") {
    NCat B4 = BZ(4);
    ComparisonS s = comparison_S(B4, *B4.point, *B4.point);
    Morphism t = pi0(s.S);
    CHECK(validate_morphism(t).ok);
    CHECK(t.dom.size(0) == 4);
    std::vector<int> sorted = t.map[0];
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3});
  }
}
