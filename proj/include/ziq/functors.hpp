#pragma once
//
// functors.hpp
//
// The dimension-shifting sesqui-functors: the connected-component quotient
// pi0, the discretization D, the adjunction unit eta with its triangle
// identities, path spaces and the loop construction Omega, the fundamental
// groupoid pi1, the comparison isomorphism between the two, and the loop
// monoid checks (associativity, units, interchange, Eckmann-Hilton).
//
// pi0 demands n-groupoid input in every arity; the quotient composition is
// only well defined when top cells can be run backwards.  D accepts any
// category.
//

#include "limits.hpp"

#include <functional>
#include <numeric>

namespace ziq {

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ groupoid detection ~~~~~~~~~~

namespace detail {

// Weak invertibility probe.  A k-cell x: a -> b is weakly invertible when
// some y: b -> a exists with x *(k-1) y and y *(k-1) x connected to the
// respective units by weakly invertible (k+1)-cells; at the top dimension
// "connected" degenerates to equality.  Memoised per cell; recursion is on
// strictly increasing dimension, so it terminates.
class GroupoidProbe {
 public:
  explicit GroupoidProbe(const NCat& C) : C_(C) {
    memo_.resize(C.n + 1);
    for (int k = 0; k <= C.n; ++k) memo_[k].assign(C.size(k), 0);
  }

  bool invertible(Cell x) {
    if (x.dim == 0) return true;
    char& m = memo_[x.dim][x.idx];
    if (m) return m == 1;
    bool ok = search(x);
    m = ok ? 1 : 2;
    return ok;
  }

  // First non-invertible cell, if any.
  Cell defect() {
    for (int k = 1; k <= C_.n; ++k)
      for (int i = 0; i < C_.size(k); ++i)
        if (!invertible({k, i})) return {k, i};
    return {};
  }

  bool all() { return !defect().valid(); }

 private:
  bool connected(Cell u, Cell v) {
    if (u == v) return true;
    if (u.dim == C_.n) return false;
    for (int h = 0; h < C_.size(u.dim + 1); ++h)
      if (C_.src[u.dim + 1][h] == u.idx && C_.tgt[u.dim + 1][h] == v.idx &&
          invertible({u.dim + 1, h}))
        return true;
    return false;
  }

  bool search(Cell x) {
    int k = x.dim;
    Cell s = C_.src_of(x), t = C_.tgt_of(x);
    for (int y = 0; y < C_.size(k); ++y) {
      if (C_.src[k][y] != t.idx || C_.tgt[k][y] != s.idx) continue;
      Cell cy{k, y};
      if (!C_.has_comp(k - 1, x, cy) || !C_.has_comp(k - 1, cy, x)) continue;
      if (connected(C_.get_comp(k - 1, x, cy), C_.unit_of(s)) &&
          connected(C_.get_comp(k - 1, cy, x), C_.unit_of(t)))
        return true;
    }
    return false;
  }

  const NCat& C_;
  std::vector<std::vector<char>> memo_;
};

inline void require_groupoid(const NCat& C, const char* op) {
  GroupoidProbe probe(C);
  Cell bad = probe.defect();
  if (bad.valid())
    throw op_error(std::string(op) + ": not a groupoid (" + C.describe(bad) +
                   " has no weak inverse)");
}

// Connectivity classes of the top-dimensional cells one level down: cells of
// dimension n-1 are identified when some n-cell runs between them.  Classes
// are ordered and represented by their least member.
struct Quotient {
  std::vector<int> cls;   // old (n-1)-cell index -> class index
  std::vector<int> reps;  // class index -> least old index
};

inline Quotient top_classes(const NCat& C) {
  const int n = C.n;
  const int m = C.size(n - 1);
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int z = 0; z < C.size(n); ++z) {
    int a = find(C.src[n][z]), b = find(C.tgt[n][z]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Quotient q;
  q.cls.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (r == i) {
      q.cls[i] = static_cast<int>(q.reps.size());
      q.reps.push_back(i);
    }
  }
  for (int i = 0; i < m; ++i) q.cls[i] = q.cls[find(i)];
  return q;
}

}  // namespace detail

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ pi0 ~~~~~~~~

inline NCat pi0(const NCat& C) {
  if (C.n == 0) throw op_error("pi0: dimension must be at least 1");
  detail::require_groupoid(C, "pi0");
  const int n = C.n;
  detail::Quotient q = detail::top_classes(C);
  NCat P(n - 1, "pi0(" + C.label + ")");
  for (int k = 0; k <= n - 2; ++k)
    for (int i = 0; i < C.size(k); ++i) P.add_cell(k, C.cells[k][i]);
  for (int c = 0; c < static_cast<int>(q.reps.size()); ++c)
    P.add_cell(n - 1, C.cells[n - 1][q.reps[c]]);
  for (int k = 1; k <= n - 2; ++k)
    for (int i = 0; i < C.size(k); ++i)
      P.set_bnd({k, i}, {k - 1, C.src[k][i]}, {k - 1, C.tgt[k][i]});
  if (n - 1 >= 1)
    for (int c = 0; c < static_cast<int>(q.reps.size()); ++c) {
      int r = q.reps[c];
      // class members are parallel, so any representative's boundary works
      P.set_bnd({n - 1, c}, {n - 2, C.src[n - 1][r]}, {n - 2, C.tgt[n - 1][r]});
    }
  for (int k = 0; k < n - 1; ++k)
    for (int i = 0; i < C.size(k); ++i) {
      int u = C.unit[k][i];
      P.set_unit({k, i}, {k + 1, k + 1 == n - 1 ? q.cls[u] : u});
    }
  for (int k = 1; k <= n - 2; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : C.comp[k][m]) {
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        P.set_comp(m, {k, i}, {k, j}, {k, r});
      }
  if (n - 1 >= 1)
    for (int m = 0; m < n - 1; ++m)
      for (const auto& [key, r] : C.comp[n - 1][m]) {
        Cell a{n - 1, q.cls[static_cast<int>(key >> 32)]};
        Cell b{n - 1, q.cls[static_cast<int>(key & 0xffffffffLL)]};
        Cell res{n - 1, q.cls[r]};
        if (P.has_comp(m, a, b) && !(P.get_comp(m, a, b) == res))
          throw op_error("pi0: quotient composition is not well-defined");
        P.set_comp(m, a, b, res);
      }
  if (C.point)
    P.point = n - 1 == 0 ? Cell{0, q.cls[C.point->idx]} : *C.point;
  return P;
}

inline Morphism pi0(const Morphism& F) {
  if (F.dom.n == 0) throw op_error("pi0: dimension must be at least 1");
  detail::require_groupoid(F.dom, "pi0");
  detail::require_groupoid(F.cod, "pi0");
  const int n = F.dom.n;
  detail::Quotient qc = detail::top_classes(F.dom);
  detail::Quotient qd = detail::top_classes(F.cod);
  Morphism g;
  g.dom = pi0(F.dom);
  g.cod = pi0(F.cod);
  g.label = "pi0(" + F.label + ")";
  g.map.resize(n);
  for (int k = 0; k <= n - 2; ++k) g.map[k] = F.map[k];
  g.map[n - 1].resize(qc.reps.size());
  for (int c = 0; c < static_cast<int>(qc.reps.size()); ++c)
    g.map[n - 1][c] = qd.cls[F.map[n - 1][qc.reps[c]]];
  return g;
}

inline Transf2 pi0(const Transf2& a) {
  const NCat& C = a.F.dom;
  const NCat& D = a.F.cod;
  if (C.n == 0) throw op_error("pi0: dimension must be at least 1");
  detail::require_groupoid(C, "pi0");
  detail::require_groupoid(D, "pi0");
  detail::Quotient qd = detail::top_classes(D);
  Transf2 r = make_transf2(pi0(a.F), pi0(a.G), "pi0(" + a.label + ")");
  for (int k = 0; k + 1 <= C.n - 2; ++k) r.comp[k] = a.comp[k];
  if (C.n >= 2)
    for (int i = 0; i < C.size(C.n - 2); ++i)
      r.comp[C.n - 2][i] = qd.cls[a.comp[C.n - 2][i]];
  return r;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ discretization ~~~~~~

inline NCat discretize(const NCat& S) {
  const int n = S.n;
  NCat E(n + 1, "D(" + S.label + ")");
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i < S.size(k); ++i) E.add_cell(k, S.cells[k][i]);
  for (int i = 0; i < S.size(n); ++i)
    E.add_cell(n + 1, unit_name(S.cells[n][i]));
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < S.size(k); ++i)
      E.set_bnd({k, i}, {k - 1, S.src[k][i]}, {k - 1, S.tgt[k][i]});
  for (int i = 0; i < S.size(n); ++i) E.set_bnd({n + 1, i}, {n, i}, {n, i});
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < S.size(k); ++i) E.set_unit({k, i}, {k + 1, S.unit[k][i]});
  for (int i = 0; i < S.size(n); ++i) E.set_unit({n, i}, {n + 1, i});
  for (int k = 1; k <= n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : S.comp[k][m]) {
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        E.set_comp(m, {k, i}, {k, j}, {k, r});
      }
  // formal identities compose like their base cells, and trivially on top
  for (int m = 0; m < n; ++m)
    for (const auto& [key, r] : S.comp[n][m]) {
      int i = static_cast<int>(key >> 32);
      int j = static_cast<int>(key & 0xffffffffLL);
      E.set_comp(m, {n + 1, i}, {n + 1, j}, {n + 1, r});
    }
  for (int i = 0; i < S.size(n); ++i)
    E.set_comp(n, {n + 1, i}, {n + 1, i}, {n + 1, i});
  E.point = S.point;
  return E;
}

inline Morphism discretize(const Morphism& F) {
  const int n = F.dom.n;
  Morphism g;
  g.dom = discretize(F.dom);
  g.cod = discretize(F.cod);
  g.label = "D(" + F.label + ")";
  g.map = F.map;
  g.map.push_back(F.map[n]);  // identities map like their base cells
  return g;
}

inline Transf2 discretize(const Transf2& a) {
  const NCat& S = a.F.dom;
  const int n = S.n;
  Transf2 r = make_transf2(discretize(a.F), discretize(a.G), "D(" + a.label + ")");
  for (int k = 0; k <= n - 1; ++k) r.comp[k] = a.comp[k];
  ChainView v = a.view();
  r.comp[n].resize(S.size(n));
  for (int i = 0; i < S.size(n); ++i)
    // the two top chains agree; the new component is the formal identity on
    // their common value, which is indexed like its base cell
    r.comp[n][i] = chain_D(v, n, {n, i}).idx;
  return r;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ adjunction unit and triangles ~~~~

inline Morphism eta(const NCat& C) {
  if (C.n == 0) throw op_error("eta: dimension must be at least 1");
  detail::require_groupoid(C, "eta");
  const int n = C.n;
  detail::Quotient q = detail::top_classes(C);
  Morphism e;
  e.dom = C;
  e.cod = discretize(pi0(C));
  e.label = "eta(" + C.label + ")";
  e.map.resize(n + 1);
  for (int k = 0; k <= n - 2; ++k) {
    e.map[k].resize(C.size(k));
    std::iota(e.map[k].begin(), e.map[k].end(), 0);
  }
  e.map[n - 1].resize(C.size(n - 1));
  for (int i = 0; i < C.size(n - 1); ++i) e.map[n - 1][i] = q.cls[i];
  e.map[n].resize(C.size(n));
  for (int i = 0; i < C.size(n); ++i) e.map[n][i] = q.cls[C.src[n][i]];
  return e;
}

inline std::pair<Morphism, Report> eta_and_triangles(const NCat& C) {
  Morphism e = eta(C);
  Report r;
  r.merge(validate_morphism(e));
  NCat DS = e.cod;
  ++r.checked;
  if (!(eta(DS) == identity_morphism(DS)))
    r.fail("eta/triangle-discrete", {DS.label},
           "eta of a discretization is not the identity");
  ++r.checked;
  if (!(pi0(e) == identity_morphism(pi0(C))))
    r.fail("eta/triangle-pi0", {C.label},
           "pi0 of eta is not the identity on pi0");
  return {e, r};
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ path spaces and loops ~~~~~~~~~

struct LoopSpace {
  HPullback pb;
  Cell c0, c1;            // endpoints in the base category
  bool monoidal = false;  // set when both endpoints are the base point
  Cell I{};               // unit loop, when monoidal
};

inline LoopSpace path_space(const NCat& C, Cell c0, Cell c1) {
  C.check_cell(c0);
  C.check_cell(c1);
  if (c0.dim != 0 || c1.dim != 0)
    throw op_error("path_space: endpoints must be objects");
  if (C.n == 0) throw op_error("path_space: dimension must be at least 1");
  LoopSpace L;
  NCat T = terminal(C.n);
  L.pb = h_pullback(constant_morphism(T, C, c0), constant_morphism(T, C, c1));
  L.pb.cat.label =
      "P(" + C.label + ";" + C.name_of(c0) + "," + C.name_of(c1) + ")";
  L.c0 = c0;
  L.c1 = c1;
  if (C.point && c0 == *C.point && c1 == *C.point) {
    Cell p0 = L.pb.find(0, -1, -1, 0, C.unit[0][c0.idx], 0);
    if (!p0.valid()) throw op_error("path_space: missing unit loop (internal)");
    L.pb.cat.point = p0;
    L.monoidal = true;
    L.I = p0;
  }
  detail::hpb_resync(L.pb);
  return L;
}

// The base-category cell carried by a path-space cell below the top.
inline Cell loop_middle(const LoopSpace& L, Cell q) {
  L.pb.cat.check_cell(q);
  if (q.dim >= L.pb.cat.n)
    throw op_error("loop_middle: top cells carry no middle component");
  return {q.dim + 1, L.pb.parts[q.dim][q.idx][1]};
}

// The path-space cell carrying a given base cell with both 0-boundaries at
// the endpoints.
inline Cell loop_cell(const LoopSpace& L, Cell z) {
  const NCat& Q = L.pb.cat;
  L.pb.F.cod.check_cell(z);
  if (z.dim < 1 || z.dim > Q.n)
    throw op_error("loop_cell: base cell dimension out of range");
  std::function<Cell(Cell)> go = [&](Cell w) -> Cell {
    int k = w.dim - 1;
    int s = -1, t = -1;
    if (k >= 1) {
      s = go(L.pb.F.cod.src_of(w)).idx;
      t = go(L.pb.F.cod.tgt_of(w)).idx;
    }
    Cell r = L.pb.find(k, s, t, 0, w.idx, 0);
    if (!r.valid())
      throw op_error("loop_cell: cell is not a path between the endpoints");
    return r;
  };
  return go(z);
}

// Monoidal product: composition of the base category in direction 0,
// transported to the loop space.
inline Cell loop_tensor(const LoopSpace& L, Cell x, Cell y) {
  if (!L.monoidal) throw op_error("loop_tensor: path space is not monoidal");
  const NCat& Q = L.pb.cat;
  Q.check_cell(x);
  Q.check_cell(y);
  if (x.dim != y.dim) throw op_error("loop_tensor: dimensions differ");
  const NCat& C = L.pb.F.cod;
  const int n = Q.n;
  std::function<Cell(Cell, Cell)> go = [&](Cell a, Cell b) -> Cell {
    int k = a.dim;
    int s = -1, t = -1;
    if (k >= 1) {
      s = go(Q.src_of(a), Q.src_of(b)).idx;
      t = go(Q.tgt_of(a), Q.tgt_of(b)).idx;
    }
    int mid = -1;
    if (k < n)
      mid = C.get_comp(0, {k + 1, L.pb.parts[k][a.idx][1]},
                       {k + 1, L.pb.parts[k][b.idx][1]})
                .idx;
    Cell r = L.pb.find(k, s, t, 0, mid, 0);
    if (!r.valid())
      throw op_error("loop_tensor: missing composite loop (internal)");
    return r;
  };
  return go(x, y);
}

// The unique functor into the terminal n-category.
inline Morphism to_terminal(const NCat& X) {
  Morphism f;
  f.dom = X;
  f.cod = terminal(X.n);
  f.label = "!";
  f.map.resize(X.n + 1);
  for (int k = 0; k <= X.n; ++k) f.map[k].assign(X.size(k), 0);
  return f;
}

inline LoopSpace omega(const NCat& C) {
  if (!C.point) throw op_error("omega: category is not pointed");
  return path_space(C, *C.point, *C.point);
}

inline Morphism omega(const Morphism& F) {
  if (!F.dom.point || !F.cod.point)
    throw op_error("omega: functor is not pointed");
  if (!(F.apply(*F.dom.point) == *F.cod.point))
    throw op_error("omega: functor does not preserve the base point");
  LoopSpace LC = omega(F.dom);
  LoopSpace LD = omega(F.cod);
  Morphism bang = to_terminal(LC.pb.cat);
  Morphism r = mediate(LD.pb, bang, bang, whisker_right(LC.pb.eps, F));
  r.label = "omega(" + F.label + ")";
  return r;
}

// Loops on a 2-morphism.  The result reverses direction: omega(alpha):
// omega(G) => omega(F).  Built through the 2-dimensional universal property,
// which post-verifies the characterising equation
// star_compose(omega(alpha), eps_D) = star_compose(eps_C, alpha).
inline Transf2 omega(const Transf2& a) {
  const NCat& C = a.F.dom;
  const NCat& D = a.F.cod;
  if (!C.point || !D.point) throw op_error("omega: categories are not pointed");
  if (!(a.F.apply(*C.point) == *D.point) || !(a.G.apply(*C.point) == *D.point))
    throw op_error("omega: functors do not preserve the base point");
  if (!is_unit(D, a.at(*C.point)))
    throw op_error("omega: transformation is not pointed");
  detail::require_groupoid(C, "omega");
  detail::require_groupoid(D, "omega");
  LoopSpace LC = omega(C);
  LoopSpace LD = omega(D);
  Transf2 idb = id2(to_terminal(LC.pb.cat));
  Transf2 r = mediate2(LD.pb, idb, idb, whisker_right(LC.pb.eps, a.G),
                       whisker_right(LC.pb.eps, a.F),
                       star_compose(LC.pb.eps, a));
  r.label = "omega(" + a.label + ")";
  return r;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ pi1 ~~~~~~~~

inline NCat pi1(const NCat& C) {
  if (!C.point) throw op_error("pi1: category is not pointed");
  if (C.n == 0) throw op_error("pi1: dimension must be at least 1");
  NCat H = hom(C, *C.point, *C.point);
  H.label = "pi1(" + C.label + ")";
  H.point = H.cell(0, C.cells[1][C.unit[0][C.point->idx]]);
  return H;
}

inline Morphism pi1(const Morphism& F) {
  if (!F.dom.point || !F.cod.point)
    throw op_error("pi1: functor is not pointed");
  if (!(F.apply(*F.dom.point) == *F.cod.point))
    throw op_error("pi1: functor does not preserve the base point");
  NCat HC = pi1(F.dom);
  NCat HD = pi1(F.cod);
  Morphism g;
  g.dom = HC;
  g.cod = HD;
  g.label = "pi1(" + F.label + ")";
  g.map.resize(HC.n + 1);
  for (int k = 0; k <= HC.n; ++k) {
    g.map[k].resize(HC.size(k));
    for (int i = 0; i < HC.size(k); ++i) {
      Cell z = F.dom.cell(k + 1, HC.cells[k][i]);
      Cell img = F.apply(z);
      g.map[k][i] = HD.cell(k, F.cod.cells[k + 1][img.idx]).idx;
    }
  }
  return g;
}

// Contravariant on 2-morphisms: pi1(alpha): pi1(G) => pi1(F), with
// components the hom-reindexed components of alpha.
inline Transf2 pi1(const Transf2& a) {
  const NCat& C = a.F.dom;
  const NCat& D = a.F.cod;
  if (!C.point || !D.point) throw op_error("pi1: categories are not pointed");
  if (!(a.F.apply(*C.point) == *D.point) || !(a.G.apply(*C.point) == *D.point))
    throw op_error("pi1: functors do not preserve the base point");
  if (!is_unit(D, a.at(*C.point)))
    throw op_error("pi1: transformation is not pointed");
  NCat HC = pi1(C);
  NCat HD = pi1(D);
  Transf2 r = make_transf2(pi1(a.G), pi1(a.F), "pi1(" + a.label + ")");
  for (int k = 0; k + 1 <= HC.n; ++k)
    for (int i = 0; i < HC.size(k); ++i) {
      Cell z = C.cell(k + 1, HC.cells[k][i]);
      Cell w = a.at(z);
      r.comp[k][i] = HD.cell(k + 1, D.cells[k + 2][w.idx]).idx;
    }
  Report check = validate_transf2(r);
  if (!check.ok)
    throw op_error("pi1: hom components do not form a transformation");
  return r;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ comparison morphism ~~~~~~~~

struct ComparisonS {
  NCat hom_cat;     // hom(C, c0, c1); pointed at the unit loop when c0 = c1 = *
  LoopSpace path;   // P_{c0,c1}(C)
  Morphism S;       // discretize(hom_cat) -> path apex
  Report report;    // validity + per-dimension bijectivity
};

inline ComparisonS comparison_S(const NCat& C, Cell c0, Cell c1) {
  C.check_cell(c0);
  C.check_cell(c1);
  if (c0.dim != 0 || c1.dim != 0)
    throw op_error("comparison_S: endpoints must be objects");
  if (C.n == 0) throw op_error("comparison_S: dimension must be at least 1");
  const int n = C.n;
  ComparisonS out;
  out.hom_cat = hom(C, c0, c1);
  if (C.point && c0 == *C.point && c1 == *C.point)
    out.hom_cat.point =
        out.hom_cat.cell(0, C.cells[1][C.unit[0][c0.idx]]);
  out.path = path_space(C, c0, c1);
  NCat DH = discretize(out.hom_cat);
  Morphism S;
  S.dom = DH;
  S.cod = out.path.pb.cat;
  S.label = "S(" + C.label + ")";
  S.map.resize(n + 1);
  for (int k = 0; k <= n - 1; ++k) {
    S.map[k].resize(DH.size(k));
    for (int i = 0; i < DH.size(k); ++i) {
      int s = -1, t = -1;
      if (k >= 1) {
        s = S.map[k - 1][DH.src[k][i]];
        t = S.map[k - 1][DH.tgt[k][i]];
      }
      Cell z = C.cell(k + 1, out.hom_cat.cells[k][i]);
      Cell img = out.path.pb.find(k, s, t, 0, z.idx, 0);
      if (!img.valid())
        throw op_error("comparison_S: missing path cell (internal)");
      S.map[k][i] = img.idx;
    }
  }
  S.map[n].resize(DH.size(n));
  for (int i = 0; i < DH.size(n); ++i) {
    int s = S.map[n - 1][i];  // formal identities are indexed like their base
    Cell img = out.path.pb.find(n, s, s, 0, -1, 0);
    if (!img.valid())
      throw op_error("comparison_S: missing top path cell (internal)");
    S.map[n][i] = img.idx;
  }
  out.S = S;
  Report r;
  r.merge(validate_morphism(S));
  for (int k = 0; k <= n; ++k) {
    ++r.checked;
    if (DH.size(k) != out.path.pb.cat.size(k)) {
      r.fail("comparison/bijective", {std::to_string(k)},
             "dimension sizes differ");
      continue;
    }
    std::vector<char> hit(DH.size(k), 0);
    bool inj = true;
    for (int i = 0; i < DH.size(k); ++i) {
      if (hit[S.map[k][i]]) inj = false;
      hit[S.map[k][i]] = 1;
    }
    if (!inj)
      r.fail("comparison/bijective", {std::to_string(k)}, "map not injective");
  }
  out.report = r;
  return out;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ loop monoid checks ~~~~~~~~

// Verifies the strict monoidal structure on Omega(C): units, associativity,
// interchange with every loop-space composition, group-likeness of the
// objects, and the Eckmann-Hilton collapse on the doubly-degenerate cells
// (the component sets of Omega(Omega(C))), where tensor and the loop-space
// 0-composition must agree and be commutative.
inline Report loop_monoid_check(const NCat& C) {
  if (!C.point) throw op_error("loop_monoid_check: category is not pointed");
  detail::require_groupoid(C, "loop_monoid_check");
  LoopSpace L = omega(C);
  const NCat& Q = L.pb.cat;
  const int n = Q.n;
  Report r;

  for (int k = 0; k <= n; ++k) {
    Cell Ik = unit_cell(Q, L.I, k);
    for (int i = 0; i < Q.size(k); ++i) {
      Cell x{k, i};
      ++r.checked;
      if (!(loop_tensor(L, Ik, x) == x))
        r.fail("loop/unit-left", {Q.describe(x)}, "I (x) x differs from x");
      ++r.checked;
      if (!(loop_tensor(L, x, Ik) == x))
        r.fail("loop/unit-right", {Q.describe(x)}, "x (x) I differs from x");
    }
  }

  for (int k = 0; k <= n; ++k)
    for (int i = 0; i < Q.size(k); ++i)
      for (int j = 0; j < Q.size(k); ++j)
        for (int l = 0; l < Q.size(k); ++l) {
          Cell x{k, i}, y{k, j}, z{k, l};
          ++r.checked;
          if (!(loop_tensor(L, loop_tensor(L, x, y), z) ==
                loop_tensor(L, x, loop_tensor(L, y, z))))
            r.fail("loop/assoc",
                   {Q.describe(x), Q.describe(y), Q.describe(z)},
                   "tensor is not associative");
        }

  for (int k = 1; k <= n; ++k)
    for (int m = 0; m < k; ++m)
      for (int i = 0; i < Q.size(k); ++i)
        for (int j = 0; j < Q.size(k); ++j) {
          Cell x{k, i}, xp{k, j};
          if (!Q.has_comp(m, x, xp) || Q.bnd_tgt(x, m) != Q.bnd_src(xp, m))
            continue;
          for (int u = 0; u < Q.size(k); ++u)
            for (int w = 0; w < Q.size(k); ++w) {
              Cell y{k, u}, yp{k, w};
              if (!Q.has_comp(m, y, yp) || Q.bnd_tgt(y, m) != Q.bnd_src(yp, m))
                continue;
              ++r.checked;
              if (!(loop_tensor(L, Q.get_comp(m, x, xp), Q.get_comp(m, y, yp)) ==
                    Q.get_comp(m, loop_tensor(L, x, y),
                               loop_tensor(L, xp, yp))))
                r.fail("loop/interchange",
                       {Q.describe(x), Q.describe(xp), Q.describe(y),
                        Q.describe(yp)},
                       "tensor does not commute with *" + std::to_string(m));
            }
        }

  for (int i = 0; i < Q.size(0); ++i) {
    Cell q{0, i};
    bool inv = false;
    for (int j = 0; j < Q.size(0) && !inv; ++j) {
      Cell t = loop_tensor(L, q, {0, j});
      if (t == L.I) inv = true;
      for (int h = 0; h < Q.size(1) && !inv; ++h)
        if (Q.src[1][h] == t.idx && Q.tgt[1][h] == L.I.idx) inv = true;
    }
    ++r.checked;
    if (!inv)
      r.fail("loop/group-like", {Q.describe(q)},
             "object has no tensor inverse up to a loop arrow");
  }

  // Eckmann-Hilton: on cells with both low boundaries degenerate at the unit
  // loop, tensor equals the 0-composition of the loop space and both are
  // commutative.
  if (n == 1)
    r.note("loop dimension 1: Eckmann-Hilton range is trivial");
  for (int d = 1; d <= n; ++d) {
    std::vector<Cell> M;
    for (int i = 0; i < Q.size(d); ++i)
      if (Q.bnd_src({d, i}, 0) == L.I && Q.bnd_tgt({d, i}, 0) == L.I)
        M.push_back({d, i});
    for (Cell z : M)
      for (Cell zp : M) {
        Cell outer = Q.get_comp(0, z, zp);
        ++r.checked;
        if (!(outer == loop_tensor(L, z, zp)))
          r.fail("loop/eckmann-hilton", {Q.describe(z), Q.describe(zp)},
                 "tensor and loop 0-composition differ");
        ++r.checked;
        if (!(outer == Q.get_comp(0, zp, z)))
          r.fail("loop/eckmann-hilton", {Q.describe(z), Q.describe(zp)},
                 "composition of double loops is not commutative");
      }
  }
  return r;
}

}  // namespace ziq
