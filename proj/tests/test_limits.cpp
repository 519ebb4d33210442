#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ziq/gen.hpp"
#include "ziq/limits.hpp"

using namespace ziq;

namespace {

NCat BZ(int k) { return deloop("Z/" + std::to_string(k), 1); }
NCat B2Z(int k) { return deloop("Z/" + std::to_string(k), 2); }

}  // namespace

TEST_CASE("h-pullback of the identity cospan over B(Z/2)", "[limits]") {
  NCat B2 = BZ(2);
  HPullback pb = h_pullback(identity_morphism(B2), identity_morphism(B2));

  SECTION("cell counts and validity") {
    CHECK(pb.cat.size(0) == 2);  // an object per arrow of B(Z/2)
    CHECK(pb.cat.size(1) == 8);
    CHECK(validate(pb.cat).ok);
    CHECK(validate_morphism(pb.P).ok);
    CHECK(validate_morphism(pb.Q).ok);
    CHECK(validate_transf2(pb.eps).ok);
    CHECK(pb.cat.has_cell(0, "(*|g0|*)"));
    CHECK(pb.cat.has_cell(0, "(*|g1|*)"));
  }

  SECTION("the base point is the unit loop over the base points") {
    REQUIRE(pb.cat.point.has_value());
    CHECK(pb.cat.name_of(*pb.cat.point) == "(*|g0|*)");
  }

  SECTION("each object carries a Z/2 of loops and the two are connected") {
    for (int o = 0; o < 2; ++o) {
      int loops = 0;
      for (int f = 0; f < pb.cat.size(1); ++f)
        if (pb.cat.src[1][f] == o && pb.cat.tgt[1][f] == o) ++loops;
      CHECK(loops == 2);
    }
    int cross = 0;
    for (int f = 0; f < pb.cat.size(1); ++f)
      if (pb.cat.src[1][f] == 0 && pb.cat.tgt[1][f] == 1) ++cross;
    CHECK(cross == 2);
  }

  SECTION("mediating functors reproduce both lax cones over the cospan") {
    Morphism idB = identity_morphism(B2);
    std::vector<Transf2> cones = enumerate_transf2(idB, idB);
    REQUIRE(cones.size() == 2);
    for (const Transf2& omega : cones) {
      Morphism L = mediate(pb, idB, idB, omega);
      Report r = validate_morphism(L);
      if (omega.comp[0][0] == 0) {
        CHECK(r.ok);  // the unit cone is a pointed cone
      } else {
        // The other cone sends the base point to the g1 loop; everything but
        // point preservation holds.
        CHECK_FALSE(r.ok);
        CHECK(r.has("functor/point"));
        CHECK(r.violations.size() == 1);
      }
      CHECK(compose0(L, pb.P) == idB);
      CHECK(compose0(L, pb.Q) == idB);
      CHECK(whisker_left(L, pb.eps) == omega);
    }
  }

  SECTION("non-cones are rejected") {
    Morphism idB = identity_morphism(B2);
    Transf2 omega = enumerate_transf2(idB, idB).front();
    // A cone whose feet live in the wrong category.
    NCat B4 = BZ(4);
    CHECK_THROWS_AS(
        mediate(pb, identity_morphism(B4), identity_morphism(B4), omega),
        op_error);
  }
}

TEST_CASE("mediating functor is unique among all comparison functors",
          "[limits]") {
  NCat X = BZ(2);
  X.point.reset();  // unpointed copies so functor enumeration is unconstrained
  Morphism idX = identity_morphism(X);
  HPullback pb = h_pullback(idX, idX);
  REQUIRE_FALSE(pb.cat.point.has_value());

  std::vector<Transf2> cones = enumerate_transf2(idX, idX);
  REQUIRE(cones.size() == 2);
  std::vector<Morphism> all = enumerate_functors(X, pb.cat);
  for (const Transf2& omega : cones) {
    Morphism L = mediate(pb, idX, idX, omega);
    int hits = 0;
    for (const Morphism& K : all)
      if (compose0(K, pb.P) == idX && compose0(K, pb.Q) == idX &&
          whisker_left(K, pb.eps) == omega) {
        ++hits;
        CHECK(K == L);
      }
    CHECK(hits == 1);
  }
}

TEST_CASE("path space of B(Z/2) is the discrete group Z/2", "[limits]") {
  NCat B2 = BZ(2);
  NCat T = terminal(1);
  Morphism c = constant_morphism(T, B2, {0, 0});
  HPullback pb = h_pullback(c, c);
  CHECK(pb.cat.size(0) == 2);
  CHECK(pb.cat.size(1) == 2);
  for (int f = 0; f < pb.cat.size(1); ++f)
    CHECK(is_unit(pb.cat, {1, f}));
  CHECK(validate(pb.cat).ok);
  CHECK(validate_transf2(pb.eps).ok);
}

TEST_CASE("h-pullback of the mod-2 cospan B(Z/4) -> B(Z/2) <- B(Z/4)",
          "[limits]") {
  Morphism q = quotient_functor(4, 2);
  HPullback pb = h_pullback(q, q);
  CHECK(pb.cat.size(0) == 2);
  CHECK(pb.cat.size(1) == 32);
  CHECK(validate(pb.cat).ok);
  CHECK(validate_morphism(pb.P).ok);
  CHECK(validate_morphism(pb.Q).ok);
  CHECK(validate_transf2(pb.eps).ok);
}

TEST_CASE("h-pullback of the identity cospan over B2(Z/2)", "[limits]") {
  NCat B = B2Z(2);
  Morphism idB = identity_morphism(B);
  HPullback pb = h_pullback(idB, idB);

  SECTION("cell counts and validity") {
    CHECK(pb.cat.size(0) == 1);
    CHECK(pb.cat.size(1) == 2);
    CHECK(pb.cat.size(2) == 8);
    CHECK(validate(pb.cat).ok);
    CHECK(validate_morphism(pb.P).ok);
    CHECK(validate_morphism(pb.Q).ok);
    CHECK(validate_transf2(pb.eps).ok);
  }

  SECTION("mediating functor at n = 2") {
    std::vector<Transf2> cones = enumerate_transf2(idB, idB);
    REQUIRE(cones.size() == 1);
    Morphism L = mediate(pb, idB, idB, cones[0]);
    CHECK(validate_morphism(L).ok);
    CHECK(compose0(L, pb.P) == idB);
    CHECK(compose0(L, pb.Q) == idB);
    CHECK(whisker_left(L, pb.eps) == cones[0]);
  }
}

TEST_CASE("two-dimensional universal property over B(Z/2)", "[limits]") {
  NCat B2 = BZ(2);
  Morphism idB = identity_morphism(B2);
  HPullback pb = h_pullback(idB, idB);

  std::vector<Transf2> ts = enumerate_transf2(idB, idB);
  REQUIRE(ts.size() == 2);
  auto with = [&](int g) {
    return *std::find_if(ts.begin(), ts.end(),
                         [&](const Transf2& t) { return t.comp[0][0] == g; });
  };
  Transf2 omega = with(0), omega_hat = with(1);
  Transf2 alpha = with(1), beta = with(0);

  // Both pasted sides of the cone square have component g0 * g0 = g1 * g1.
  Transf2 lhs = vcompose(omega, whisker_right(beta, pb.G));
  Transf2 rhs = vcompose(whisker_right(alpha, pb.F), omega_hat);
  std::vector<Transf3> fillers = enumerate_transf3(lhs, rhs);
  REQUIRE(fillers.size() == 1);
  Transf3 Sigma = fillers[0];

  Transf2 lambda = mediate2(pb, alpha, beta, omega, omega_hat, Sigma);
  CHECK(validate_transf2(lambda).ok);
  CHECK(whisker_right(lambda, pb.P) == alpha);
  CHECK(whisker_right(lambda, pb.Q) == beta);
  CHECK(star_compose(lambda, pb.eps) == Sigma);

  // The component over the unique object crosses from the g0- to the
  // g1-object with outer parts (g1, g0).
  Cell l0 = lambda.at({0, 0});
  CHECK(pb.cat.name_of(pb.cat.src_of(l0)) == "(*|g0|*)");
  CHECK(pb.cat.name_of(pb.cat.tgt_of(l0)) == "(*|g1|*)");
  CHECK(pb.P.apply(l0) == B2.cell(1, "g1"));
  CHECK(pb.Q.apply(l0) == B2.cell(1, "g0"));

  // A modification that fills a different square is rejected.
  CHECK_THROWS_AS(mediate2(pb, alpha, beta, omega_hat, omega, Sigma), op_error);
}

TEST_CASE("h-pullback with a terminal leg collapses to the other domain",
          "[limits]") {
  NCat B4 = BZ(4);
  NCat T = terminal(1);
  Morphism bang;  // B(Z/4) -> terminal
  bang.dom = B4;
  bang.cod = T;
  bang.map = {{0}, {0, 0, 0, 0}};
  HPullback pb = h_pullback(bang, identity_morphism(T));
  CHECK(pb.cat.size(0) == 1);
  CHECK(pb.cat.size(1) == 4);
  CHECK(validate(pb.cat).ok);
  CHECK_FALSE(pb.cat.point.has_value());  // no point without pointed feet
  NCat B4u = B4;
  B4u.point.reset();
  CHECK(iso_search(pb.cat, B4u).has_value());
}

TEST_CASE("strict pullback of the mod-2 quotient along itself", "[limits]") {
  Morphism q = quotient_functor(4, 2);
  SPullback pb = strict_pullback(q, q);
  CHECK(pb.cat.size(0) == 1);
  CHECK(pb.cat.size(1) == 8);  // pairs (a, b) in Z/4 x Z/4 with a = b mod 2
  CHECK(validate(pb.cat).ok);
}

TEST_CASE("h_fiber wrapper records kind and base", "[limits]") {
  Morphism q = quotient_functor(4, 2);
  HFiber fib = h_fiber(q, {0, 0}, FiberKind::past);
  CHECK(fib.kind == FiberKind::past);
  CHECK(fib.base == Cell{0, 0});
  CHECK(fib.pb.cat.size(0) == 2);
  HFiber fut = h_fiber(q, {0, 0}, FiberKind::future);
  CHECK(fut.pb.cat.size(1) == 8);
}

TEST_CASE("strict pullback of the identity cospan is the diagonal",
          "[limits]") {
  NCat B2 = BZ(2);
  Morphism idB = identity_morphism(B2);
  SPullback pb = strict_pullback(idB, idB);
  CHECK(pb.cat.size(0) == 1);
  CHECK(pb.cat.size(1) == 2);
  CHECK(validate(pb.cat).ok);
  CHECK(validate_morphism(pb.P).ok);
  CHECK(validate_morphism(pb.Q).ok);
  REQUIRE(pb.cat.point.has_value());

  Morphism L = strict_mediate(pb, idB, idB);
  CHECK(compose0(L, pb.P) == idB);
  CHECK(compose0(L, pb.Q) == idB);

  // A cone that fails to equalise the cospan has no comparison functor.
  Morphism flip = quotient_functor(2, 1);  // collapses g1; disagrees with id
  Morphism back;
  back.dom = flip.cod;
  back.cod = B2;
  back.map = {{0}, {0}};  // the one functor B(Z/1) -> B(Z/2)
  Morphism other = compose0(flip, back); // trivial endofunctor of B(Z/2)
  CHECK_THROWS_AS(strict_mediate(pb, idB, other), op_error);
}

TEST_CASE("fibers and h-kernels of the mod-2 quotient", "[limits]") {
  Morphism q = quotient_functor(4, 2);

  SECTION("past fiber over the base object is B(Z/2)") {
    HPullback fib = h_fiber_past(q, {0, 0});
    CHECK(fib.cat.size(0) == 2);
    CHECK(fib.cat.size(1) == 8);
    CHECK(validate(fib.cat).ok);
    CHECK(validate_transf2(fib.eps).ok);
    // Loop count at each object is |ker| = 2, and the objects are connected.
    for (int o = 0; o < 2; ++o) {
      int loops = 0;
      for (int f = 0; f < fib.cat.size(1); ++f)
        if (fib.cat.src[1][f] == o && fib.cat.tgt[1][f] == o) ++loops;
      CHECK(loops == 2);
    }
  }

  SECTION("future fiber has the same size here") {
    HPullback fib = h_fiber_future(q, {0, 0});
    CHECK(fib.cat.size(0) == 2);
    CHECK(fib.cat.size(1) == 8);
    CHECK(validate(fib.cat).ok);
  }

  SECTION("the h-kernel is the pointed past fiber with kappa = eps") {
    HPullback ker = h_kernel(q);
    REQUIRE(ker.cat.point.has_value());
    CHECK(ker.cat.name_of(*ker.cat.point) == "(*|g0|*)");
    HPullback fib = h_fiber_past(q, {0, 0});
    CHECK(ker.cat == fib.cat);
    CHECK(ker.eps == fib.eps);
  }

  SECTION("h-kernel guards") {
    NCat T = terminal(1);
    CHECK_THROWS_AS(h_kernel(identity_morphism(T)), op_error);
  }
}
