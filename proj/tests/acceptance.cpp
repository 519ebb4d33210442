// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "ziq/exactness.hpp"
#include "ziq/gen.hpp"
#include "ziq/laws.hpp"

using namespace ziq;

namespace {

int g_failures = 0;

NCat BZ(int k) { return deloop("Z/" + std::to_string(k), 1); }
NCat B2Z(int k) { return deloop("Z/" + std::to_string(k), 2); }

// Runs one criterion; prints exactly one line.
void criterion(int idx, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::printf("criterion %2d: %s  %s%s%s  (%.2fs)\n", idx,
              ok ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : " — ", detail.c_str(), secs);
  if (!ok) ++g_failures;
}

std::vector<NCat> groupoid_fixtures() {
  return {terminal(1),  terminal(2),      terminal(3),
          pair_groupoid(3), BZ(2),        BZ(3),
          BZ(4),        B2Z(2),           B2Z(3),
          deloop("Z/2", 3)};
}

std::vector<NCat> pointed_fixtures() {
  return {pair_groupoid(3), BZ(2), BZ(3), BZ(4),
          B2Z(2),           B2Z(3), deloop("Z/2", 3)};
}

// ---------------------------------------------------------------------------
// criterion 1: validator on fixtures + 10 fault-injected mutants

bool c1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (const NCat& C : groupoid_fixtures()) ok &= validate(C).ok;
  ok &= validate(discrete(3)).ok && validate(interval()).ok;
  ok &= validate_morphism(quotient_functor(4, 2)).ok;
  ok &= validate_morphism(identity_morphism(BZ(4))).ok;
  ok &= validate_morphism(zero_morphism(BZ(4), BZ(2))).ok;

  int caught = 0;
  auto expect = [&](const NCat& M, const char* axiom) {
    Report r = validate(M);
    if (!r.ok && r.has(axiom)) ++caught;
  };
  {
    NCat C = interval();
    C.src[1][C.index[1].at("f")] = 99;
    expect(C, "shape/boundary");
  }
  {
    NCat C = interval();
    C.point = Cell{0, 17};
    expect(C, "shape/point");
  }
  {
    NCat C = interval();
    C.unit[0][C.index[0].at("a")] = C.index[1].at("f");
    expect(C, "reflexive");
  }
  {
    NCat S = suspension_tilde(pair_groupoid(2));
    S.src[2][S.cell(2, "(p0|p1)").idx] = S.cell(1, "id(*0)").idx;
    expect(S, "globular");
  }
  {
    NCat C = deloop("Z/4", 1);
    C.comp[1][0].erase(pair_key(1, 2));
    expect(C, "comp-missing");
  }
  {
    NCat C = interval();
    Cell f = C.cell(1, "f");
    C.comp[1][0][pair_key(f.idx, f.idx)] = f.idx;
    expect(C, "comp-extraneous");
  }
  {
    NCat C = pair_groupoid(2);
    Cell l = C.cell(1, "(p0|p1)"), r = C.cell(1, "(p1|p0)");
    C.comp[1][0][pair_key(l.idx, r.idx)] = l.idx;
    expect(C, "boundary-of-composite");
  }
  {
    NCat C = deloop("Z/4", 1);
    C.unit[0][0] = C.index[1].at("g1");
    expect(C, "unit-law");
  }
  {
    NCat C = deloop("Z/5", 1);
    C.comp[1][0][pair_key(1, 1)] = 1;
    expect(C, "associativity");
  }
  {
    NCat C = deloop("Z/2", 2);
    C.comp[2][0][pair_key(1, 1)] = 1;
    expect(C, "interchange");
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  detail = std::to_string(caught) + "/10 mutants rejected with the right axiom";
  return ok && caught == 10 && secs < 10.0;
}

// ---------------------------------------------------------------------------
// criterion 2: law suites

bool c2(std::string& detail) {
  LawReport a = law_suite(BZ(2), BZ(4), BZ(2));
  LawReport b = law_suite(B2Z(2), B2Z(2), B2Z(2));
  detail = std::to_string(a.total_instances()) + " + " +
           std::to_string(b.total_instances()) + " instances, " +
           std::to_string(a.total_failures() + b.total_failures()) +
           " failures";
  return a.ok() && b.ok() && a.total_instances() >= 1000 &&
         b.total_instances() >= 1000;
}

// ---------------------------------------------------------------------------
// criterion 3: h-pullback universal property

// Counts morphisms m: X -> pb.cat with m;P = M, m;Q = N and
// whisker_left(m, eps) = alpha, by exhaustive backtracking over cell images.
long long count_mediators(const HPullback& pb, const Morphism& M,
                          const Morphism& N, const Transf2& alpha) {
  const NCat& X = M.dom;
  std::vector<std::vector<std::vector<int>>> cand(X.n + 1);
  for (int k = 0; k <= X.n; ++k) {
    cand[k].resize(X.size(k));
    for (int i = 0; i < X.size(k); ++i)
      for (int j = 0; j < pb.cat.size(k); ++j)
        if (pb.parts[k][j][0] == M.map[k][i] &&
            pb.parts[k][j][2] == N.map[k][i])
          cand[k][i].push_back(j);
  }
  Morphism m;
  m.dom = X;
  m.cod = pb.cat;
  m.map.resize(X.n + 1);
  for (int k = 0; k <= X.n; ++k) m.map[k].assign(X.size(k), -1);
  long long count = 0;
  std::function<void(int, int)> go = [&](int k, int i) {
    if (k > X.n) {
      if (!validate_morphism(m).ok) return;
      if (!(compose0(m, pb.P) == M)) return;
      if (!(compose0(m, pb.Q) == N)) return;
      if (!(whisker_left(m, pb.eps) == alpha)) return;
      ++count;
      return;
    }
    if (i == X.size(k)) {
      go(k + 1, 0);
      return;
    }
    for (int j : cand[k][i]) {
      if (k >= 1 && (pb.cat.src[k][j] != m.map[k - 1][X.src[k][i]] ||
                     pb.cat.tgt[k][j] != m.map[k - 1][X.tgt[k][i]]))
        continue;
      m.map[k][i] = j;
      go(k, i + 1);
    }
    m.map[k][i] = -1;
  };
  go(0, 0);
  return count;
}

bool c3(std::string& detail) {
  NCat B2 = BZ(2), B3 = BZ(3), B4 = BZ(4);
  Morphism q = quotient_functor(4, 2);
  Morphism idB2 = identity_morphism(B2);
  Morphism z22 = zero_morphism(B2, B2);

  struct Case {
    Morphism F, G;   // the cospan
    Morphism M, N;   // a direct cone over it
    Transf2 A;
  };
  std::vector<Case> cases = {
      {idB2, idB2, idB2, idB2, id2(idB2)},
      {q, idB2, identity_morphism(B4), q, id2(q)},
      {z22, idB2, idB2, z22, id2(z22)},
      {to_terminal(B2), to_terminal(B3), idB2, zero_morphism(B2, B3),
       id2(to_terminal(B2))},
      {q, q, identity_morphism(B4), identity_morphism(B4), id2(q)},
  };

  bool ok = true;
  int cones = 0, unique_runs = 0;
  for (const Case& c : cases) {
    HPullback pb = h_pullback(c.F, c.G);
    long long total = c.F.dom.total_cells() + c.G.dom.total_cells() +
                      c.F.cod.total_cells();
    Morphism R2 = constant_morphism(pb.cat, pb.cat, Cell{0, 0});
    Morphism R3 = constant_morphism(terminal(pb.cat.n), pb.cat, Cell{0, 0});
    std::vector<std::tuple<Morphism, Morphism, Transf2>> cone_list = {
        {pb.P, pb.Q, pb.eps},
        {compose0(R2, pb.P), compose0(R2, pb.Q), whisker_left(R2, pb.eps)},
        {compose0(R3, pb.P), compose0(R3, pb.Q), whisker_left(R3, pb.eps)},
        {c.M, c.N, c.A}};
    for (const auto& [M, N, A] : cone_list) {
      ++cones;
      Morphism m = mediate(pb, M, N, A);
      ok &= compose0(m, pb.P) == M;
      ok &= compose0(m, pb.Q) == N;
      ok &= whisker_left(m, pb.eps) == A;
      if (total <= 12) {
        ++unique_runs;
        ok &= count_mediators(pb, M, N, A) == 1;
      }
    }
  }
  detail = std::to_string(cones) + " cones over " +
           std::to_string(cases.size()) + " cospans, uniqueness exhaustive on " +
           std::to_string(unique_runs);
  return ok && cones == 20 && unique_runs >= 16;
}

// ---------------------------------------------------------------------------
// criterion 4: the discretization adjunction

bool c4(std::string& detail) {
  bool ok = true;
  for (const NCat& S : {discrete(1), discrete(2), discrete(3), pi0(BZ(4)),
                        pi0(pair_groupoid(3))})
    ok &= pi0(discretize(S)) == S;
  int triangles = 0;
  std::vector<NCat> cats = groupoid_fixtures();
  cats.push_back(discretize(BZ(4)));
  cats.push_back(product(B2Z(2), discretize(BZ(2))).cat);
  for (const NCat& C : cats) {
    auto [e, r] = eta_and_triangles(C);
    ok &= r.ok;
    ++triangles;
  }
  detail = "strict counit on 5 sets, triangles on " +
           std::to_string(triangles) + " categories";
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 5: the comparison into the path space

bool c5(std::string& detail) {
  bool ok = true;
  int done = 0;
  for (const NCat& C : pointed_fixtures()) {
    ComparisonS s = comparison_S(C, *C.point, *C.point);
    ok &= s.report.ok;  // validity + per-dimension bijectivity
    Morphism t = pi0(s.S);  // pi1(C) -> pi0(Omega C)
    ok &= validate_morphism(t).ok;
    ok &= t.dom == pi1(C);
    for (int k = 0; k <= t.dom.n; ++k) {
      if (t.dom.size(k) != t.cod.size(k)) { ok = false; continue; }
      std::vector<char> hit(t.cod.size(k), 0);
      for (int v : t.map[k]) {
        if (hit[v]) ok = false;
        hit[v] = 1;
      }
    }
    ++done;
  }
  detail = std::to_string(done) + " pointed fixtures";
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 6: preservation theorems

bool c6(std::string& detail) {
  bool ok = true;
  NCat B2 = BZ(2);
  Morphism q = quotient_functor(4, 2);
  Morphism idB2 = identity_morphism(B2);

  // D preserves h-pullbacks (up to isomorphism)
  for (const auto& [F, G] :
       std::vector<std::pair<Morphism, Morphism>>{{idB2, idB2}, {q, idB2}}) {
    NCat X = discretize(h_pullback(F, G).cat);
    HPullback pb2 = h_pullback(discretize(F), discretize(G));
    for (int k = 0; k <= X.n; ++k) ok &= X.size(k) == pb2.cat.size(k);
    ok &= iso_search(X, pb2.cat).has_value();
  }

  // pi0 and Omega preserve exactness of the kernel triple (Omega reverses
  // the 2-cell; its strict inverse restores the original orientation).
  for (int level : {1, 2}) {
    Morphism f = quotient_functor(4, 2, level);
    HPullback K = h_kernel(f);
    Transf2 kappa = ziq::detail::kernel_phi(K, f);
    ok &= is_exact(K.Q, kappa, f).exact;
    ok &= is_exact(pi0(K.Q), pi0(kappa), pi0(f)).exact;

    Transf2 o = omega(kappa);
    ok &= o.F == compose0(omega(K.Q), omega(f));
    ok &= o.G == zero_morphism(omega(K.cat).pb.cat, omega(f.cod).pb.cat);
    ok &= is_exact(omega(K.Q), ziq::detail::invert_transf2(o), omega(f)).exact;
  }

  // pi0 pi1 = pi1 pi0
  int commuted = 0;
  for (const NCat& C : {B2Z(2), B2Z(3), deloop("Z/2", 3),
                        product(B2Z(2), discretize(BZ(2))).cat}) {
    ok &= pi0(pi1(C)) == pi1(pi0(C));
    ++commuted;
  }
  detail = "2 discretized cospans, 2 kernel triples under pi0 and Omega, " +
           std::to_string(commuted) + " commuting squares";
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 7: the six-term bottom row of the 1-dimensional tower

bool c7(std::string& detail) {
  Ziqqurath Z = ziqqurath(quotient_functor(4, 2));
  if (!Z.report.ok || Z.rows.size() != 2) return false;
  const ZRow& bottom = Z.rows[1];
  if (bottom.objects.size() != 6 || bottom.triples.size() != 4) return false;
  bool ok = true;
  std::vector<long long> sizes;
  for (const NCat& o : bottom.objects) sizes.push_back(o.total_cells());
  ok &= sizes == std::vector<long long>{2, 4, 2, 1, 1, 1};
  for (const ExactTriple& t : Z.rows[0].triples) ok &= t.exact;
  for (const ExactTriple& t : bottom.triples) ok &= t.exact;
  const Morphism& left = bottom.arrows[0];
  std::vector<char> hit(left.cod.size(0), 0);
  for (int v : left.map[0]) {
    if (hit[v]) ok = false;
    hit[v] = 1;
  }
  detail = "terms 2,4,2,1,1,1; leftmost arrow injective";
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 8: Eckmann-Hilton on double loop spaces

bool c8(std::string& detail) {
  Report a = loop_monoid_check(B2Z(2));
  Report b = loop_monoid_check(B2Z(3));
  detail = std::to_string(a.checked + b.checked) + " instances";
  return a.ok && b.ok;
}

// ---------------------------------------------------------------------------
// criterion 9: groupoid condition vs division conditions

bool c9(std::string& detail) {
  bool ok = true;
  int agree = 0;
  for (const NCat& C : groupoid_fixtures()) {
    bool g = is_ngroupoid(C).ok, k = kv_condition(C).ok;
    ok &= g && k;
    ++agree;
  }
  NCat I = interval();
  for (const NCat& C : {I, deloop("M2", 1), suspension_tilde(I)}) {
    bool g = is_ngroupoid(C).ok, k = kv_condition(C).ok;
    ok &= !g && !k;
    ++agree;
  }
  detail = std::to_string(agree) + " categories, 3 counterexamples";
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 10: the two-dimensional tower

bool c10(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  Ziqqurath Z = ziqqurath(quotient_functor(4, 2, 2));
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (!Z.report.ok || Z.rows.size() != 3) return false;
  bool ok = Z.rows[0].objects.size() == 3 && Z.rows[1].objects.size() == 6 &&
            Z.rows[2].objects.size() == 9;
  for (const ZRow& row : Z.rows)
    for (const ExactTriple& t : row.triples) ok &= t.exact;
  for (int p = 0; p < 3; ++p)
    ok &= Z.rows[2].annotations[p] == "abelian group (verified)";
  ok &= secs < 60.0;
  detail = "rows 3/6/9, leftmost bottom groups abelian";
  return ok;
}

}  // namespace

int main() {
  criterion(1, "validator accepts fixtures, rejects mutants", c1);
  criterion(2, "sesquifunctor law suites pass with >= 1000 instances", c2);
  criterion(3, "h-pullback mediators exact and unique", c3);
  criterion(4, "pi0 -| D: strict counit and both triangles", c4);
  criterion(5, "comparison S bijective; pi0(Omega) transports to pi1", c5);
  criterion(6, "D/pi0/Omega preservation and pi0-pi1 commutation", c6);
  criterion(7, "six-term bottom row of the Z/4 -> Z/2 tower", c7);
  criterion(8, "Eckmann-Hilton collapse on double loops", c8);
  criterion(9, "groupoid predicate matches division conditions", c9);
  criterion(10, "two-dimensional tower: rows 3/6/9, all exact", c10);
  return g_failures == 0 ? 0 : 1;
}
