#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ziq/exactness.hpp"
#include "ziq/gen.hpp"

using namespace ziq;

namespace {

NCat BZ(int k) { return deloop("Z/" + std::to_string(k), 1); }
NCat B2Z(int k) { return deloop("Z/" + std::to_string(k), 2); }

NCat pointed_terminal(int n) {
  NCat T = terminal(n);
  T.point = Cell{0, 0};
  return T;
}

// The index-two inclusion B(Z/2) -> B(Z/4), g1 |-> g2.
Morphism doubling_inclusion() {
  Morphism m;
  m.dom = BZ(2);
  m.cod = BZ(4);
  m.label = "incl2";
  m.map = {{0}, {0, 2}};
  return m;
}

std::vector<int> object_sizes(const ZRow& row) {
  std::vector<int> out;
  for (const NCat& c : row.objects) out.push_back(c.size(0));
  return out;
}

}  // namespace

TEST_CASE("classifying functors", "[exactness]") {
  SECTION("identities are equivalences") {
    for (const NCat& C : {BZ(4), pair_groupoid(3), B2Z(2)}) {
      MorphismClass cls = classify(identity_morphism(C));
      CHECK(cls.equivalence);
      CHECK(cls.h_surjective);
      CHECK(cls.faithful);
      CHECK(cls.witness.empty());
    }
  }
  SECTION("the quotient is h-surjective but not faithful") {
    MorphismClass cls = classify(quotient_functor(4, 2));
    CHECK(cls.h_surjective);
    CHECK_FALSE(cls.faithful);
    CHECK_FALSE(cls.equivalence);
    CHECK(cls.witness == "hom(*,*) g0,g2");
  }
  SECTION("the doubled quotient behaves the same one level up") {
    MorphismClass cls = classify(quotient_functor(4, 2, 2));
    CHECK(cls.h_surjective);
    CHECK_FALSE(cls.faithful);
  }
  SECTION("an inclusion of a contractible subcategory is an equivalence") {
    NCat P = pair_groupoid(2);
    Morphism incl;
    incl.dom = pointed_terminal(1);
    incl.cod = P;
    incl.label = "incl";
    incl.map = {{0}, {P.unit[0][0]}};
    REQUIRE(validate_morphism(incl).ok);
    CHECK(classify(incl).equivalence);
  }
  SECTION("essential surjectivity fails into a discrete category") {
    Morphism j;
    j.dom = pointed_terminal(1);
    j.cod = discrete(2, 1);
    j.label = "j";
    j.map = {{0}, {0}};
    REQUIRE(validate_morphism(j).ok);
    MorphismClass cls = classify(j);
    CHECK_FALSE(cls.h_surjective);
    CHECK(cls.faithful);
    CHECK_FALSE(cls.witness.empty());
  }
  SECTION("the index-two inclusion is faithful but not h-surjective") {
    MorphismClass cls = classify(doubling_inclusion());
    CHECK(cls.faithful);
    CHECK_FALSE(cls.h_surjective);
  }
}

TEST_CASE("the groupoid predicate agrees with the filler conditions",
          "[exactness]") {
  SECTION("groupoids pass both") {
    std::vector<NCat> good = {BZ(2),
                              BZ(4),
                              deloop("S3", 1),
                              pair_groupoid(3),
                              B2Z(2),
                              B2Z(3),
                              terminal(2),
                              chaotic_deloop2(named_table("Z/2")),
                              h_pullback(quotient_functor(4, 2),
                                         identity_morphism(BZ(2)))
                                  .cat};
    for (const NCat& C : good) {
      INFO(C.label);
      CHECK(is_ngroupoid(C).ok);
      CHECK(kv_condition(C).ok);
    }
  }
  SECTION("non-groupoids fail both, with witnesses") {
    NCat SI = suspension_tilde(interval());
    REQUIRE(validate(SI).ok);
    std::vector<NCat> bad = {interval(), deloop("M2", 1), SI};
    for (const NCat& C : bad) {
      INFO(C.label);
      Report g = is_ngroupoid(C);
      Report k = kv_condition(C);
      CHECK_FALSE(g.ok);
      CHECK_FALSE(k.ok);
      REQUIRE_FALSE(g.violations.empty());
      REQUIRE_FALSE(k.violations.empty());
      CHECK_FALSE(k.violations.front().cells.empty());
    }
  }
  SECTION("the probe agrees on the identified defect") {
    NCat I = interval();
    detail::GroupoidProbe probe(I);
    Cell bad = probe.defect();
    REQUIRE(bad.valid());
    CHECK(I.name_of(bad) == "f");
  }
}

TEST_CASE("weak inverses and adjoint triangles", "[exactness]") {
  SECTION("top-dimensional cells get strict inverses") {
    InverseSystem S = weak_inverses(BZ(4));
    REQUIRE(S.report.ok);
    REQUIRE(S.at[1].size() == 4);
    CHECK(S.at[1][1].strict);
    CHECK(S.at[1][1].inv == Cell{1, 3});  // g1^-1 = g3
    CHECK(S.at[1][2].inv == Cell{1, 2});  // g2 is an involution
  }
  SECTION("mid-dimensional cells get adjointified inverse systems") {
    NCat C = B2Z(2);
    InverseSystem S = weak_inverses(C);
    REQUIRE(S.report.ok);
    REQUIRE(S.at[1].size() == 1);
    const InvEntry& E = S.at[1][0];
    CHECK_FALSE(E.strict);
    CHECK(E.inv == E.cell);  // the identity 1-cell is self-inverse
    CHECK(C.src_of(E.t1) == E.cell);
    CHECK(C.tgt_of(E.t1) == E.cell);
    REQUIRE(S.at[2].size() == 2);
    CHECK(S.at[2][0].strict);
    CHECK(S.at[2][1].inv == Cell{2, 1});  // g1 + g1 = 0 in Z/2
  }
  SECTION("the chaotic suspension admits inverses for every 1-cell") {
    NCat C = chaotic_deloop2(named_table("Z/2"));
    InverseSystem S = weak_inverses(C);
    REQUIRE(S.report.ok);
    for (const InvEntry& E : S.at[1]) {
      CHECK(E.inv.valid());
      CHECK(C.src_of(E.t1) == E.cell);
      CHECK(C.tgt_of(E.t2) == E.inv);
    }
  }
  SECTION("adjointify rebuilds the triangle cells explicitly") {
    NCat C = chaotic_deloop2(named_table("Z/2"));
    InverseSystem S = weak_inverses(C);
    for (const InvEntry& E : S.at[1]) {
      if (E.strict) continue;
      AdjointData ad = adjointify(C, E.cell, E.inv, E.i, E.e, E.i_star,
                                  E.e_star);
      CHECK(ad.i_adj == E.i_adj);
      CHECK(ad.t1 == E.t1);
      CHECK(ad.t2 == E.t2);
    }
  }
  SECTION("non-groupoids are rejected") {
    CHECK_THROWS_AS(weak_inverses(interval()), op_error);
  }
}

TEST_CASE("exact triples at the h-kernel", "[exactness]") {
  Morphism q = quotient_functor(4, 2);
  SECTION("the kernel inclusion itself is exact") {
    HPullback K = h_kernel(q);
    ExactTriple t = is_exact(K.Q, detail::kernel_phi(K, q), q);
    CHECK(t.exact);
    CHECK(t.cls.equivalence);  // the comparison is an iso here
    CHECK(t.report.ok);
    CHECK(t.witness.empty());
  }
  SECTION("zero into the quotient is not exact in the middle") {
    NCat T = pointed_terminal(1);
    Morphism z = zero_morphism(T, q.dom);
    ExactTriple t = is_exact(z, id2(zero_morphism(T, q.cod)), q);
    CHECK_FALSE(t.exact);
    CHECK_FALSE(t.witness.empty());
    CHECK(t.report.ok);  // the mediator equations still hold
  }
  SECTION("mismatched 2-cells are rejected") {
    NCat T = pointed_terminal(1);
    Morphism z = zero_morphism(T, q.dom);
    CHECK_THROWS_AS(is_exact(z, id2(z), q), op_error);
  }
}

TEST_CASE("the connecting construction", "[exactness]") {
  Morphism q = quotient_functor(4, 2);
  SECTION("based connecting data is exact and satisfies both equations") {
    ConnectingData conn = connecting(q, *q.dom.point, *q.dom.point);
    REQUIRE(conn.report.ok);
    REQUIRE(conn.triples.size() == 2);
    CHECK(conn.triples[0].exact);
    CHECK(conn.triples[1].exact);
    CHECK(conn.sigma.label == "sigma(mod2)");
    // nabla sends the loop (*|g1|*) to the fiber object with the same
    // connecting arrow and the base object in the last slot.
    const NCat& P = conn.paths_C.pb.cat;
    Cell loop = P.cell(0, "(*|g1|*)");
    REQUIRE(loop.valid());
    CHECK(conn.fiber.pb.cat.name_of(conn.nabla.apply(loop)) == "(*|g1|*)");
  }
  SECTION("free endpoints still satisfy the sigma equations") {
    NCat P2 = pair_groupoid(2);
    ConnectingData conn =
        connecting(identity_morphism(P2), Cell{0, 0}, Cell{0, 1});
    REQUIRE(conn.report.ok);
    CHECK(conn.triples.empty());
    REQUIRE_FALSE(conn.report.notes.empty());
    // the one path from p0 to p1 lands on the fiber cell over its own arrow
    REQUIRE(conn.paths_C.pb.cat.size(0) == 1);
    Cell path{0, 0};
    std::string img = conn.fiber.pb.cat.name_of(conn.nabla.apply(path));
    CHECK(img.find("(p0|p1)") != std::string::npos);
  }
  SECTION("endpoints must be objects") {
    CHECK_THROWS_AS(connecting(q, Cell{1, 0}, Cell{0, 0}), op_error);
  }
}

TEST_CASE("the fibration sequence of the quotient", "[exactness]") {
  Morphism q = quotient_functor(4, 2);
  FibrationSequence fs = fibration_sequence(q);
  CHECK(fs.report.ok);
  REQUIRE(fs.nodes.size() == 8);
  REQUIRE(fs.arrows.size() == 7);
  REQUIRE(fs.triples.size() == 6);
  for (const ExactTriple& t : fs.triples) CHECK(t.exact);
  // Loop spaces of 1-types truncate: double loops are trivial, single loops
  // recover the groups.
  CHECK(fs.nodes[0].size(0) == 1);  // Omega^2 B
  CHECK(fs.nodes[3].size(0) == 4);  // Omega B = Z/4
  CHECK(fs.nodes[4].size(0) == 2);  // Omega C = Z/2
  CHECK(fs.nodes[5].size(0) == 2);  // the h-kernel
  CHECK(fs.nodes[6] == q.dom);
  CHECK(fs.nodes[7] == q.cod);
  // chaining: each arrow ends where the next begins
  for (size_t j = 0; j + 1 < fs.arrows.size(); ++j)
    CHECK(fs.arrows[j].cod == fs.arrows[j + 1].dom);
}

TEST_CASE("the ziqqurath of the quotient is the six-term sequence",
          "[exactness]") {
  Morphism q = quotient_functor(4, 2);
  Ziqqurath Z = ziqqurath(q);
  CHECK(Z.report.ok);
  REQUIRE(Z.rows.size() == 2);
  CHECK(Z.rows[0].objects.size() == 3);
  CHECK(Z.rows[0].arrows.size() == 2);
  CHECK(Z.rows[0].cells.size() == 1);
  REQUIRE(Z.rows[0].triples.size() == 1);
  CHECK(Z.rows[0].triples[0].exact);

  const ZRow& bottom = Z.rows[1];
  CHECK(bottom.objects.size() == 6);
  CHECK(bottom.arrows.size() == 5);
  CHECK(bottom.cells.size() == 4);
  REQUIRE(bottom.triples.size() == 4);
  for (const ExactTriple& t : bottom.triples) CHECK(t.exact);
  CHECK(object_sizes(bottom) == std::vector<int>{2, 4, 2, 1, 1, 1});
  CHECK(bottom.annotations ==
        std::vector<std::string>{"group (verified)", "group (verified)",
                                 "group (verified)", "pointed", "pointed",
                                 "pointed"});
  // the leftmost arrow pi1(K) -> pi1(B) is injective
  CHECK(classify(bottom.arrows[0]).faithful);
  // and realises the kernel inclusion {0,2} < Z/4
  CHECK(bottom.arrows[0].dom.size(0) == 2);
  CHECK(bottom.arrows[0].cod.size(0) == 4);
}

TEST_CASE("the ziqqurath of the doubled quotient has three rows",
          "[exactness]") {
  Morphism q2 = quotient_functor(4, 2, 2);
  Ziqqurath Z = ziqqurath(q2);
  CHECK(Z.report.ok);
  REQUIRE(Z.rows.size() == 3);
  CHECK(Z.rows[0].objects.size() == 3);
  CHECK(Z.rows[1].objects.size() == 6);
  CHECK(Z.rows[2].objects.size() == 9);
  CHECK(Z.rows[1].arrows.size() == 5);
  CHECK(Z.rows[2].arrows.size() == 8);
  CHECK(Z.rows[2].cells.size() == 7);
  for (const ZRow& row : Z.rows)
    for (const ExactTriple& t : row.triples) {
      INFO("row " << row.depth);
      CHECK(t.exact);
    }
  REQUIRE(Z.rows[1].triples.size() == 4);
  REQUIRE(Z.rows[2].triples.size() == 7);

  const ZRow& bottom = Z.rows[2];
  CHECK(object_sizes(bottom) == std::vector<int>{2, 4, 2, 1, 1, 1, 1, 1, 1});
  CHECK(bottom.annotations ==
        std::vector<std::string>{
            "abelian group (verified)", "abelian group (verified)",
            "abelian group (verified)", "group (verified)",
            "group (verified)", "group (verified)", "pointed", "pointed",
            "pointed"});
  // upper rows carry the structural labels
  CHECK(Z.rows[1].annotations ==
        std::vector<std::string>{"monoidal", "monoidal", "monoidal",
                                 "pointed", "pointed", "pointed"});
}

TEST_CASE("star-surjectivity of 1-dimensional functors", "[exactness]") {
  CHECK(is_star_surjective(quotient_functor(4, 2)).ok);
  CHECK(is_star_surjective(identity_morphism(BZ(4))).ok);
  Report r = is_star_surjective(doubling_inclusion());
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().cells[1] == "g1");
  CHECK_THROWS_AS(is_star_surjective(identity_morphism(B2Z(2))), op_error);
}
