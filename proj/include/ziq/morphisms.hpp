#pragma once
//
// morphisms.hpp
//
// The higher algebra on top of core.hpp: validation of n-functors, lax
// n-transformations (with the boundary-chain, top, unit and composition
// laws), modifications between transformations, the whiskering and star
// composition operations at every level, exhaustive budgeted enumeration of
// functors/transformations/modifications between small categories, and an
// executable law suite that instantiates the sesquicategory axioms over a
// triple of categories and checks them by exact structural equality.
//
// Conventions are diagrammatic throughout: compose0(F, G) is "F then G",
// vcompose(a, b) composes a: F => G with b: G => H.
//

#include "core.hpp"

namespace ziq {

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ functor validation ~~~~~

inline Report validate_morphism(const Morphism& F) {
  Report rep;
  const NCat& A = F.dom;
  const NCat& B = F.cod;
  if (A.n != B.n) {
    rep.fail("functor/shape", {}, "ambient dimensions differ");
    return rep;
  }
  if (static_cast<int>(F.map.size()) != A.n + 1) {
    rep.fail("functor/shape", {}, "map has wrong number of dimensions");
    return rep;
  }
  for (int k = 0; k <= A.n; ++k) {
    if (static_cast<int>(F.map[k].size()) != A.size(k)) {
      rep.fail("functor/shape", {"dim " + std::to_string(k)},
               "map size mismatch");
      return rep;
    }
    for (int i = 0; i < A.size(k); ++i)
      if (F.map[k][i] < 0 || F.map[k][i] >= B.size(k)) {
        rep.fail("functor/shape", {A.describe({k, i})}, "image out of range");
        return rep;
      }
  }
  for (int k = 1; k <= A.n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      if (F.apply(A.src_of(x)) != B.src_of(F.apply(x)) ||
          F.apply(A.tgt_of(x)) != B.tgt_of(F.apply(x)))
        rep.fail("functor/boundary", {A.describe(x)},
                 "source/target not preserved");
    }
  for (int k = 0; k < A.n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      if (F.apply(A.unit_of(x)) != B.unit_of(F.apply(x)))
        rep.fail("functor/unit", {A.describe(x)}, "unit not preserved");
    }
  for (int k = 1; k <= A.n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : A.comp[k][m]) {
        Cell x{k, static_cast<int>(key >> 32)};
        Cell y{k, static_cast<int>(key & 0xffffffffLL)};
        if (A.bnd_tgt(x, m) != A.bnd_src(y, m)) continue;
        ++rep.checked;
        Cell fx = F.apply(x), fy = F.apply(y);
        if (!B.has_comp(m, fx, fy) ||
            B.get_comp(m, fx, fy) != F.apply(Cell{k, r}))
          rep.fail("functor/composite", {A.describe(x), A.describe(y)},
                   "composition not preserved along dim " + std::to_string(m));
      }
  if (A.point && B.point) {
    ++rep.checked;
    if (F.apply(*A.point) != *B.point)
      rep.fail("functor/point", {A.describe(*A.point)},
               "base point not preserved");
  }
  return rep;
}

// Diagrammatic composition: first F, then G.
inline Morphism compose0(const Morphism& F, const Morphism& G) {
  if (!(F.cod == G.dom))
    throw op_error("compose0: middle categories differ");
  Morphism H;
  H.dom = F.dom;
  H.cod = G.cod;
  H.map.resize(F.dom.n + 1);
  for (int k = 0; k <= F.dom.n; ++k) {
    H.map[k].resize(F.dom.size(k));
    for (int i = 0; i < F.dom.size(k); ++i)
      H.map[k][i] = G.map[k][F.map[k][i]];
  }
  H.label = F.label + ";" + G.label;
  return H;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ boundary chains and pastings ~~~~~~

// A "transformation-like" view: component assignment one dimension up over a
// domain category, with prescribed bottom chains.  Both lax transformations
// and the universal 2-cells of h-pullbacks are instances, so the chain and
// pasting recursions are written once against this view.
struct ChainView {
  const NCat* dom = nullptr;  // cells indexing components
  const NCat* cod = nullptr;  // ambient category of the component values
  std::function<Cell(Cell)> comp;  // x (dim k) -> component (dim k+1)
  std::function<Cell(Cell)> F0;    // chain floor D_0
  std::function<Cell(Cell)> G0;    // chain floor C_0
};

inline Cell chain_D(const ChainView& v, int j, Cell x);
inline Cell chain_C(const ChainView& v, int j, Cell x);

// D_j: D_0 = F0(x), D_{j+1}(x) = comp(s_j x) *j C_j(x).
inline Cell chain_D(const ChainView& v, int j, Cell x) {
  if (j == 0) return v.F0(x);
  return cm(*v.cod, j - 1, v.comp(v.dom->bnd_src(x, j - 1)),
            chain_C(v, j - 1, x));
}

// C_j: C_0 = G0(x), C_{j+1}(x) = D_j(x) *j comp(t_j x).
inline Cell chain_C(const ChainView& v, int j, Cell x) {
  if (j == 0) return v.G0(x);
  return cm(*v.cod, j - 1, chain_D(v, j - 1, x),
            v.comp(v.dom->bnd_tgt(x, j - 1)));
}

// The component a transformation-like structure must assign to x *j y,
// given its components on all cells of lower or equal dimension.
inline Cell paste_component(const ChainView& v, int j, Cell x, Cell y) {
  const NCat& A = *v.dom;
  const NCat& B = *v.cod;
  std::function<Cell(int, Cell, Cell)> P, Q;
  P = [&](int m, Cell u, Cell w) -> Cell {
    if (m == j + 1) return cm(B, j, v.comp(u), chain_C(v, j, w));
    return cm(B, m - 1, P(m - 1, A.bnd_src(u, m - 1), A.bnd_src(w, m - 1)),
              Q(m - 1, u, w));
  };
  Q = [&](int m, Cell u, Cell w) -> Cell {
    if (m == j + 1) return cm(B, j, chain_D(v, j, u), v.comp(w));
    return cm(B, m - 1, P(m - 1, u, w),
              Q(m - 1, A.bnd_tgt(u, m - 1), A.bnd_tgt(w, m - 1)));
  };
  int k = std::max(x.dim, y.dim);
  if (j >= k) throw op_error("paste_component: need j < dim");
  return cm(B, k, P(k, x, y), Q(k, x, y));
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ lax n-transformations ~~~~~~

struct Transf2 {
  Morphism F, G;  // parallel functors C -> D
  // comp[k][i] for 0 <= k <= n-1: index of the component (k+1)-cell in cod.
  std::vector<std::vector<int>> comp;
  std::string label;

  const NCat& dom() const { return F.dom; }
  const NCat& cod() const { return F.cod; }

  Cell at(Cell c) const {
    if (c.dim < 0 || c.dim >= static_cast<int>(comp.size()) || c.idx < 0 ||
        c.idx >= static_cast<int>(comp[c.dim].size()))
      throw op_error("transformation component out of range");
    int v = comp[c.dim][c.idx];
    if (v < 0) throw op_error("transformation component unassigned");
    return {c.dim + 1, v};
  }

  ChainView view() const {
    ChainView v;
    v.dom = &F.dom;
    v.cod = &F.cod;
    v.comp = [this](Cell c) { return at(c); };
    v.F0 = [this](Cell c) { return F.apply(c); };
    v.G0 = [this](Cell c) { return G.apply(c); };
    return v;
  }

  friend bool operator==(const Transf2& a, const Transf2& b) {
    return a.F == b.F && a.G == b.G && a.comp == b.comp;
  }
  friend bool operator!=(const Transf2& a, const Transf2& b) {
    return !(a == b);
  }
};

inline Transf2 make_transf2(const Morphism& F, const Morphism& G,
                            std::string label = "") {
  if (!(F.dom == G.dom) || !(F.cod == G.cod))
    throw op_error("make_transf2: functors are not parallel");
  Transf2 t;
  t.F = F;
  t.G = G;
  t.label = std::move(label);
  t.comp.resize(std::max(F.dom.n, 0));
  for (int k = 0; k < F.dom.n; ++k) t.comp[k].assign(F.dom.size(k), -1);
  return t;
}

inline Report validate_transf2(const Transf2& t) {
  Report rep;
  if (!(t.F.dom == t.G.dom) || !(t.F.cod == t.G.cod)) {
    rep.fail("transf/parallel", {}, "functors are not parallel");
    return rep;
  }
  const NCat& A = t.dom();
  const NCat& B = t.cod();
  int n = A.n;
  if (static_cast<int>(t.comp.size()) != std::max(n, 0)) {
    rep.fail("transf/shape", {}, "component table has wrong dimension count");
    return rep;
  }
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(t.comp[k].size()) != A.size(k)) {
      rep.fail("transf/shape", {"dim " + std::to_string(k)},
               "component table size mismatch");
      return rep;
    }
    for (int i = 0; i < A.size(k); ++i)
      if (t.comp[k][i] < 0 || t.comp[k][i] >= B.size(k + 1)) {
        rep.fail("transf/shape", {A.describe({k, i})},
                 "component out of range");
        return rep;
      }
  }
  ChainView v = t.view();
  // (B): components have the prescribed chain boundaries.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      try {
        Cell w = t.at(x);
        if (B.src_of(w) != chain_D(v, k, x) ||
            B.tgt_of(w) != chain_C(v, k, x))
          rep.fail("transf/boundary", {A.describe(x)},
                   "component has wrong source/target");
      } catch (const op_error& e) {
        rep.fail("transf/boundary", {A.describe(x)}, e.what());
      }
    }
  // (T): at the top dimension the two chains agree.
  for (int i = 0; i < A.size(n); ++i) {
    Cell x{n, i};
    ++rep.checked;
    try {
      if (chain_D(v, n, x) != chain_C(v, n, x))
        rep.fail("transf/top", {A.describe(x)},
                 "top-dimensional naturality fails");
    } catch (const op_error& e) {
      rep.fail("transf/top", {A.describe(x)}, e.what());
    }
  }
  // (U): components of units are units.
  for (int k = 0; k + 1 < n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      try {
        if (t.at(A.unit_of(x)) != B.unit_of(t.at(x)))
          rep.fail("transf/unit", {A.describe(x)},
                   "component of a unit is not a unit");
      } catch (const op_error& e) {
        rep.fail("transf/unit", {A.describe(x)}, e.what());
      }
    }
  // (C): components of composites follow the pasting recursion.
  for (int k = 1; k < n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : A.comp[k][m]) {
        Cell x{k, static_cast<int>(key >> 32)};
        Cell y{k, static_cast<int>(key & 0xffffffffLL)};
        if (A.bnd_tgt(x, m) != A.bnd_src(y, m)) continue;
        ++rep.checked;
        try {
          if (t.at(Cell{k, r}) != paste_component(v, m, x, y))
            rep.fail("transf/composite", {A.describe(x), A.describe(y)},
                     "component of composite is not the pasting");
        } catch (const op_error& e) {
          rep.fail("transf/composite", {A.describe(x), A.describe(y)},
                   e.what());
        }
      }
  return rep;
}

// A transformation is strict when all its components above dimension zero
// are (iterated) units.
inline bool is_strict(const Transf2& t) {
  for (int k = 1; k < static_cast<int>(t.comp.size()); ++k)
    for (int i = 0; i < static_cast<int>(t.comp[k].size()); ++i)
      if (!is_unit(t.cod(), t.at(Cell{k, i}))) return false;
  return true;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ operations on 2-morphisms ~~~~~~~

inline Transf2 id2(const Morphism& F) {
  Transf2 t = make_transf2(F, F, "1_" + F.label);
  for (int k = 0; k < F.dom.n; ++k)
    for (int i = 0; i < F.dom.size(k); ++i)
      t.comp[k][i] = F.cod.unit_of(F.apply(Cell{k, i})).idx;
  return t;
}

// Vertical composition a .1 b for a: F => G, b: G => H.
inline Transf2 vcompose(const Transf2& a, const Transf2& b) {
  if (!(a.G == b.F)) throw op_error("vcompose: middle functors differ");
  const NCat& A = a.dom();
  const NCat& B = a.cod();
  Transf2 g = make_transf2(a.F, b.G, "(" + a.label + ".1" + b.label + ")");
  std::function<Cell(int, Cell)> P, Q;
  P = [&](int j, Cell x) -> Cell {
    if (j == 0) return a.at(x);
    return cm(B, j - 1, P(j - 1, A.bnd_src(x, j - 1)), Q(j - 1, x));
  };
  Q = [&](int j, Cell x) -> Cell {
    if (j == 0) return b.at(x);
    return cm(B, j - 1, P(j - 1, x), Q(j - 1, A.bnd_tgt(x, j - 1)));
  };
  for (int k = 0; k < A.n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      g.comp[k][i] = cm(B, k, P(k, x), Q(k, x)).idx;
    }
  return g;
}

// Left whisker N .0 a: reindex the components along N.
inline Transf2 whisker_left(const Morphism& N, const Transf2& a) {
  if (!(N.cod == a.dom()))
    throw op_error("whisker_left: functor does not land in the domain");
  Transf2 t = make_transf2(compose0(N, a.F), compose0(N, a.G),
                           "(" + N.label + ".0" + a.label + ")");
  for (int k = 0; k < N.dom.n; ++k)
    for (int i = 0; i < N.dom.size(k); ++i)
      t.comp[k][i] = a.at(N.apply(Cell{k, i})).idx;
  return t;
}

// Right whisker a .0 L: push the components forward along L.
inline Transf2 whisker_right(const Transf2& a, const Morphism& L) {
  if (!(a.cod() == L.dom))
    throw op_error("whisker_right: functor does not start at the codomain");
  Transf2 t = make_transf2(compose0(a.F, L), compose0(a.G, L),
                           "(" + a.label + ".0" + L.label + ")");
  for (int k = 0; k < a.dom().n; ++k)
    for (int i = 0; i < a.dom().size(k); ++i)
      t.comp[k][i] = L.apply(a.at(Cell{k, i})).idx;
  return t;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ modifications ~~~~~

struct Transf3 {
  Transf2 a, b;  // parallel transformations F => G
  // comp[k][i] for 0 <= k <= n-2: index of the component (k+2)-cell in cod.
  std::vector<std::vector<int>> comp;
  std::string label;

  const NCat& dom() const { return a.dom(); }
  const NCat& cod() const { return a.cod(); }

  Cell at(Cell c) const {
    if (c.dim < 0 || c.dim >= static_cast<int>(comp.size()) || c.idx < 0 ||
        c.idx >= static_cast<int>(comp[c.dim].size()))
      throw op_error("modification component out of range");
    int v = comp[c.dim][c.idx];
    if (v < 0) throw op_error("modification component unassigned");
    return {c.dim + 2, v};
  }

  friend bool operator==(const Transf3& x, const Transf3& y) {
    return x.a == y.a && x.b == y.b && x.comp == y.comp;
  }
  friend bool operator!=(const Transf3& x, const Transf3& y) {
    return !(x == y);
  }
};

inline Transf3 make_transf3(const Transf2& a, const Transf2& b,
                            std::string label = "") {
  if (!(a.F == b.F) || !(a.G == b.G))
    throw op_error("make_transf3: transformations are not parallel");
  Transf3 t;
  t.a = a;
  t.b = b;
  t.label = std::move(label);
  int n = a.dom().n;
  t.comp.resize(std::max(n - 1, 0));
  for (int k = 0; k + 1 < n; ++k) t.comp[k].assign(a.dom().size(k), -1);
  return t;
}

namespace detail {

// The boundary formulas shared by (B-mod) and (T-mod): the source and target
// a modification component over x must have, expressed with the mixed
// whisker chains of the two transformations.
struct ModChains {
  const Transf3* t;
  const NCat* A;  // domain
  const NCat* B;  // codomain

  Cell Mb(int j, Cell y) const {  // cm(j-1, L(s_{j-1} y), C^b_{j-1}(y))
    return cm(*B, j - 1, t->at(A->bnd_src(y, j - 1)),
              chain_C(t->b.view(), j - 1, y));
  }
  Cell Wa(int j, Cell y) const {  // cm(j-1, D^a_{j-1}(y), L(t_{j-1} y))
    return cm(*B, j - 1, chain_D(t->a.view(), j - 1, y),
              t->at(A->bnd_tgt(y, j - 1)));
  }
  Cell TAU(int j, Cell x) const {
    if (j == 0) return t->b.at(x);
    return cm(*B, j, SIG(j - 1, x), Wa(j, A->bnd_tgt(x, j)));
  }
  Cell SIG(int j, Cell x) const {
    if (j == 0) return t->a.at(x);
    return cm(*B, j, Mb(j, A->bnd_src(x, j)), TAU(j - 1, x));
  }
  Cell mod_src(Cell x) const {
    if (x.dim == 0) return t->a.at(x);
    return cm(*B, x.dim, Mb(x.dim, x), TAU(x.dim - 1, x));
  }
  Cell mod_tgt(Cell x) const {
    if (x.dim == 0) return t->b.at(x);
    return cm(*B, x.dim, SIG(x.dim - 1, x), Wa(x.dim, x));
  }
};

}  // namespace detail

inline Report validate_transf3(const Transf3& t) {
  Report rep;
  if (!(t.a.F == t.b.F) || !(t.a.G == t.b.G)) {
    rep.fail("mod/parallel", {}, "transformations are not parallel");
    return rep;
  }
  const NCat& A = t.dom();
  const NCat& B = t.cod();
  int n = A.n;
  if (n == 0) {
    ++rep.checked;
    if (!(t.a == t.b))
      rep.fail("mod/top", {}, "0-dimensional modification needs equal sides");
    return rep;
  }
  if (static_cast<int>(t.comp.size()) != std::max(n - 1, 0)) {
    rep.fail("mod/shape", {}, "component table has wrong dimension count");
    return rep;
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (static_cast<int>(t.comp[k].size()) != A.size(k)) {
      rep.fail("mod/shape", {"dim " + std::to_string(k)},
               "component table size mismatch");
      return rep;
    }
    for (int i = 0; i < A.size(k); ++i)
      if (t.comp[k][i] < 0 || t.comp[k][i] >= B.size(k + 2)) {
        rep.fail("mod/shape", {A.describe({k, i})}, "component out of range");
        return rep;
      }
  }
  detail::ModChains ch{&t, &A, &B};
  // (B-mod)
  for (int k = 0; k + 1 < n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      try {
        Cell w = t.at(x);
        if (B.src_of(w) != ch.mod_src(x) || B.tgt_of(w) != ch.mod_tgt(x))
          rep.fail("mod/boundary", {A.describe(x)},
                   "component has wrong source/target");
      } catch (const op_error& e) {
        rep.fail("mod/boundary", {A.describe(x)}, e.what());
      }
    }
  // (T-mod): at dimension n-1 the source and target formulas agree.
  for (int i = 0; i < A.size(n - 1); ++i) {
    Cell x{n - 1, i};
    ++rep.checked;
    try {
      if (ch.mod_src(x) != ch.mod_tgt(x))
        rep.fail("mod/top", {A.describe(x)},
                 "top-dimensional modification square fails");
    } catch (const op_error& e) {
      rep.fail("mod/top", {A.describe(x)}, e.what());
    }
  }
  // (U-mod)
  for (int k = 0; k + 2 < n; ++k)
    for (int i = 0; i < A.size(k); ++i) {
      Cell x{k, i};
      ++rep.checked;
      try {
        if (t.at(A.unit_of(x)) != B.unit_of(t.at(x)))
          rep.fail("mod/unit", {A.describe(x)},
                   "component of a unit is not a unit");
      } catch (const op_error& e) {
        rep.fail("mod/unit", {A.describe(x)}, e.what());
      }
    }
  return rep;
}

inline Transf3 id3(const Transf2& a) {
  Transf3 t = make_transf3(a, a, "1_" + a.label);
  for (int k = 0; k + 1 < a.dom().n; ++k)
    for (int i = 0; i < a.dom().size(k); ++i)
      t.comp[k][i] = a.cod().unit_of(a.at(Cell{k, i})).idx;
  return t;
}

inline bool is_identity_transf3(const Transf3& t) {
  if (!(t.a == t.b)) return false;
  for (int k = 0; k < static_cast<int>(t.comp.size()); ++k)
    for (int i = 0; i < static_cast<int>(t.comp[k].size()); ++i)
      if (t.at(Cell{k, i}) != t.cod().unit_of(t.a.at(Cell{k, i})))
        return false;
  return true;
}

namespace detail {
inline void require_low_dim(const NCat& A, const char* op) {
  if (A.n > 3)
    throw op_error(std::string(op) +
                   ": 3-morphism pasting supported for ambient dimension <= 3");
}
}  // namespace detail

// Vertical composition of modifications L .2 S for L: a => b, S: b => c.
inline Transf3 compose2(const Transf3& L, const Transf3& S) {
  if (!(L.b == S.a)) throw op_error("compose2: middle transformations differ");
  const NCat& A = L.dom();
  const NCat& B = L.cod();
  detail::require_low_dim(A, "compose2");
  Transf3 t = make_transf3(L.a, S.b, "(" + L.label + ".2" + S.label + ")");
  const Morphism& F = L.a.F;
  const Morphism& G = L.a.G;
  for (int i = 0; i < (A.n >= 2 ? A.size(0) : 0); ++i) {
    Cell c0{0, i};
    t.comp[0][i] = cm(B, 1, L.at(c0), S.at(c0)).idx;
  }
  for (int i = 0; i < (A.n >= 3 ? A.size(1) : 0); ++i) {
    Cell x{1, i};
    Cell s0 = A.src_of(x), t0 = A.tgt_of(x);
    Cell lhs = cm(B, 1, cm(B, 0, L.at(s0), G.apply(x)), S.at(x));
    Cell rhs = cm(B, 1, L.at(x), cm(B, 0, F.apply(x), S.at(t0)));
    t.comp[1][i] = cm(B, 2, lhs, rhs).idx;
  }
  return t;
}

// Left 1-whisker w .1 L for w: E => F and L: a => b with a, b: F => G.
inline Transf3 whisker1_left(const Transf2& w, const Transf3& L) {
  if (!(w.G == L.a.F))
    throw op_error("whisker1_left: boundary functors differ");
  const NCat& A = L.dom();
  const NCat& B = L.cod();
  detail::require_low_dim(A, "whisker1_left");
  Transf3 t = make_transf3(vcompose(w, L.a), vcompose(w, L.b),
                           "(" + w.label + ".1" + L.label + ")");
  for (int i = 0; i < (A.n >= 2 ? A.size(0) : 0); ++i) {
    Cell c0{0, i};
    t.comp[0][i] = cm(B, 0, w.at(c0), L.at(c0)).idx;
  }
  for (int i = 0; i < (A.n >= 3 ? A.size(1) : 0); ++i) {
    Cell x{1, i};
    Cell s0 = A.src_of(x), t0 = A.tgt_of(x);
    t.comp[1][i] = cm(B, 1, cm(B, 0, w.at(s0), L.at(x)),
                      cm(B, 0, w.at(x), L.b.at(t0)))
                       .idx;
  }
  return t;
}

// Right 1-whisker L .1 s for L: a => b with a, b: E => F and s: F => G.
inline Transf3 whisker1_right(const Transf3& L, const Transf2& s) {
  if (!(L.a.G == s.F))
    throw op_error("whisker1_right: boundary functors differ");
  const NCat& A = L.dom();
  const NCat& B = L.cod();
  detail::require_low_dim(A, "whisker1_right");
  Transf3 t = make_transf3(vcompose(L.a, s), vcompose(L.b, s),
                           "(" + L.label + ".1" + s.label + ")");
  for (int i = 0; i < (A.n >= 2 ? A.size(0) : 0); ++i) {
    Cell c0{0, i};
    t.comp[0][i] = cm(B, 0, L.at(c0), s.at(c0)).idx;
  }
  for (int i = 0; i < (A.n >= 3 ? A.size(1) : 0); ++i) {
    Cell x{1, i};
    Cell s0 = A.src_of(x), t0 = A.tgt_of(x);
    t.comp[1][i] = cm(B, 1, cm(B, 0, L.a.at(s0), s.at(x)),
                      cm(B, 0, L.at(x), s.at(t0)))
                       .idx;
  }
  return t;
}

// 0-whiskers on modifications: pure reindexing, valid in any dimension.
inline Transf3 whisker0_left(const Morphism& E, const Transf3& L) {
  if (!(E.cod == L.dom()))
    throw op_error("whisker0_left: functor does not land in the domain");
  Transf3 t = make_transf3(whisker_left(E, L.a), whisker_left(E, L.b),
                           "(" + E.label + ".0" + L.label + ")");
  for (int k = 0; k + 1 < E.dom.n; ++k)
    for (int i = 0; i < E.dom.size(k); ++i)
      t.comp[k][i] = L.at(E.apply(Cell{k, i})).idx;
  return t;
}

inline Transf3 whisker0_right(const Transf3& L, const Morphism& H) {
  if (!(L.cod() == H.dom))
    throw op_error("whisker0_right: functor does not start at the codomain");
  Transf3 t = make_transf3(whisker_right(L.a, H), whisker_right(L.b, H),
                           "(" + L.label + ".0" + H.label + ")");
  for (int k = 0; k + 1 < L.dom().n; ++k)
    for (int i = 0; i < L.dom().size(k); ++i)
      t.comp[k][i] = H.apply(L.at(Cell{k, i})).idx;
  return t;
}

// Star composition of a: F => G: C -> D with b: H => K: D -> E.  The result
// is the modification a*b: (F.0b).1(a.0K) => (a.0H).1(G.0b) whose components
// are the compositions b(a(x)).
inline Transf3 star_compose(const Transf2& a, const Transf2& b) {
  if (!(a.cod() == b.dom()))
    throw op_error("star_compose: middle categories differ");
  Transf2 src = vcompose(whisker_left(a.F, b), whisker_right(a, b.G));
  Transf2 tgt = vcompose(whisker_right(a, b.F), whisker_left(a.G, b));
  Transf3 t = make_transf3(src, tgt, "(" + a.label + "*" + b.label + ")");
  for (int k = 0; k + 1 < a.dom().n; ++k)
    for (int i = 0; i < a.dom().size(k); ++i)
      t.comp[k][i] = b.at(a.at(Cell{k, i})).idx;
  return t;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ pairing into products ~~~~~~~

inline Morphism pair_functor(const Morphism& F, const Morphism& G,
                             const Product& P) {
  if (!(F.dom == G.dom)) throw op_error("pair_functor: domains differ");
  if (!(P.pr_left.cod == F.cod) || !(P.pr_right.cod == G.cod))
    throw op_error("pair_functor: product does not match the codomains");
  Morphism H;
  H.dom = F.dom;
  H.cod = P.cat;
  H.map.resize(F.dom.n + 1);
  for (int k = 0; k <= F.dom.n; ++k) {
    H.map[k].resize(F.dom.size(k));
    for (int i = 0; i < F.dom.size(k); ++i) {
      Cell x{k, i};
      const std::string nm = pair_name(F.cod.name_of(F.apply(x)),
                                       G.cod.name_of(G.apply(x)));
      H.map[k][i] = P.cat.cell(k, nm).idx;
    }
  }
  H.label = "<" + F.label + "," + G.label + ">";
  return H;
}

inline Transf2 pair_transf2(const Transf2& a, const Transf2& b,
                            const Product& P) {
  if (!(a.dom() == b.dom())) throw op_error("pair_transf2: domains differ");
  Transf2 t = make_transf2(pair_functor(a.F, b.F, P), pair_functor(a.G, b.G, P),
                           "<" + a.label + "," + b.label + ">");
  for (int k = 0; k < a.dom().n; ++k)
    for (int i = 0; i < a.dom().size(k); ++i) {
      Cell x{k, i};
      const std::string nm = pair_name(a.cod().name_of(a.at(x)),
                                       b.cod().name_of(b.at(x)));
      t.comp[k][i] = P.cat.cell(k + 1, nm).idx;
    }
  return t;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ enumeration ~~~~~~

// All functors X -> Y, searched dimension by dimension with units forced and
// composition tables checked per dimension.  Deterministic order; `budget`
// caps the number of search nodes.
inline std::vector<Morphism> enumerate_functors(const NCat& X, const NCat& Y,
                                                long long budget = 1000000) {
  if (X.n != Y.n)
    throw op_error("enumerate_functors: ambient dimensions differ");
  std::vector<Morphism> out;
  std::vector<std::vector<int>> map(X.n + 1);
  for (int k = 0; k <= X.n; ++k) map[k].assign(X.size(k), -1);
  // unit_base[k][i]: index of the cell one dimension down whose unit is i.
  std::vector<std::vector<int>> unit_base(X.n + 1);
  for (int k = 0; k <= X.n; ++k) unit_base[k].assign(X.size(k), -1);
  for (int k = 0; k < X.n; ++k)
    for (int i = 0; i < X.size(k); ++i)
      if (X.unit[k][i] >= 0) unit_base[k + 1][X.unit[k][i]] = i;
  long long nodes = 0;

  auto tables_ok = [&](int k) {
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : X.comp[k][m]) {
        Cell x{k, static_cast<int>(key >> 32)};
        Cell y{k, static_cast<int>(key & 0xffffffffLL)};
        if (X.bnd_tgt(x, m) != X.bnd_src(y, m)) continue;
        Cell fx{k, map[k][x.idx]}, fy{k, map[k][y.idx]};
        if (!Y.has_comp(m, fx, fy)) return false;
        if (Y.get_comp(m, fx, fy).idx != map[k][r]) return false;
      }
    return true;
  };

  std::function<void(int, int)> place = [&](int k, int i) {
    if (nodes > budget) return;
    if (k > X.n) {
      Morphism f;
      f.dom = X;
      f.cod = Y;
      f.map = map;
      f.label = "F" + std::to_string(out.size());
      out.push_back(std::move(f));
      return;
    }
    if (i == X.size(k)) {
      if (tables_ok(k)) place(k + 1, 0);
      return;
    }
    Cell x{k, i};
    if (unit_base[k][i] >= 0) {  // forced: image of a unit is a unit
      int base = map[k - 1][unit_base[k][i]];
      int img = Y.unit[k - 1][base];
      if (img < 0) return;
      map[k][i] = img;
      place(k, i + 1);
      map[k][i] = -1;
      return;
    }
    for (int j = 0; j < Y.size(k); ++j) {
      if (++nodes > budget) return;
      if (k >= 1 && (map[k - 1][X.src_of(x).idx] != Y.src[k][j] ||
                     map[k - 1][X.tgt_of(x).idx] != Y.tgt[k][j]))
        continue;
      if (k == 0 && X.point && Y.point && i == X.point->idx &&
          j != Y.point->idx)
        continue;
      map[k][i] = j;
      place(k, i + 1);
      map[k][i] = -1;
    }
  };
  place(0, 0);
  return out;
}

// All lax transformations F => G, searched dimension by dimension.  Unit
// components are forced, boundary conditions restrict the candidates, and
// the (T)/(C) laws filter at the end of each dimension.
inline std::vector<Transf2> enumerate_transf2(const Morphism& F,
                                              const Morphism& G,
                                              long long budget = 1000000) {
  if (!(F.dom == G.dom) || !(F.cod == G.cod))
    throw op_error("enumerate_transf2: functors are not parallel");
  const NCat& A = F.dom;
  const NCat& B = F.cod;
  int n = A.n;
  std::vector<Transf2> out;
  Transf2 t = make_transf2(F, G);
  std::vector<std::vector<int>> unit_base(n + 1);
  for (int k = 0; k <= n; ++k) unit_base[k].assign(A.size(k), -1);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < A.size(k); ++i)
      if (A.unit[k][i] >= 0) unit_base[k + 1][A.unit[k][i]] = i;
  long long nodes = 0;
  ChainView v = t.view();

  auto comps_ok = [&](int k) {  // (C) for composites of k-cells
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : A.comp[k][m]) {
        Cell x{k, static_cast<int>(key >> 32)};
        Cell y{k, static_cast<int>(key & 0xffffffffLL)};
        if (A.bnd_tgt(x, m) != A.bnd_src(y, m)) continue;
        try {
          if (t.at(Cell{k, r}) != paste_component(v, m, x, y)) return false;
        } catch (const op_error&) {
          return false;
        }
      }
    return true;
  };
  auto top_ok = [&]() {  // (T)
    for (int i = 0; i < A.size(n); ++i) {
      Cell x{n, i};
      try {
        if (chain_D(v, n, x) != chain_C(v, n, x)) return false;
      } catch (const op_error&) {
        return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> place = [&](int k, int i) {
    if (nodes > budget) return;
    if (k == n) {
      if (top_ok()) out.push_back(t);
      return;
    }
    if (i == A.size(k)) {
      if (comps_ok(k)) place(k + 1, 0);
      return;
    }
    Cell x{k, i};
    if (unit_base[k][i] >= 0) {
      int base = t.comp[k - 1][unit_base[k][i]];
      int img = B.unit[k][base];
      if (img < 0) return;
      t.comp[k][i] = img;
      place(k, i + 1);
      t.comp[k][i] = -1;
      return;
    }
    Cell want_s, want_t;
    try {
      want_s = chain_D(v, k, x);
      want_t = chain_C(v, k, x);
    } catch (const op_error&) {
      return;
    }
    for (int j = 0; j < B.size(k + 1); ++j) {
      if (++nodes > budget) return;
      if (B.src[k + 1][j] != want_s.idx || B.tgt[k + 1][j] != want_t.idx)
        continue;
      t.comp[k][i] = j;
      place(k, i + 1);
      t.comp[k][i] = -1;
    }
  };
  place(0, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].label = "a" + std::to_string(i);
  return out;
}

// All modifications a => b, same search scheme using the (B-mod) boundaries.
inline std::vector<Transf3> enumerate_transf3(const Transf2& a,
                                              const Transf2& b,
                                              long long budget = 1000000) {
  if (!(a.F == b.F) || !(a.G == b.G))
    throw op_error("enumerate_transf3: transformations are not parallel");
  const NCat& A = a.dom();
  const NCat& B = a.cod();
  int n = A.n;
  std::vector<Transf3> out;
  if (n <= 1) {
    if (a.comp == b.comp) {
      Transf3 t = make_transf3(a, b, "m0");
      out.push_back(std::move(t));
    }
    return out;
  }
  Transf3 t = make_transf3(a, b);
  detail::ModChains ch{&t, &A, &B};
  std::vector<std::vector<int>> unit_base(n + 1);
  for (int k = 0; k <= n; ++k) unit_base[k].assign(A.size(k), -1);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < A.size(k); ++i)
      if (A.unit[k][i] >= 0) unit_base[k + 1][A.unit[k][i]] = i;
  long long nodes = 0;

  auto top_ok = [&]() {  // (T-mod) at dimension n-1
    for (int i = 0; i < A.size(n - 1); ++i) {
      Cell x{n - 1, i};
      try {
        if (ch.mod_src(x) != ch.mod_tgt(x)) return false;
      } catch (const op_error&) {
        return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> place = [&](int k, int i) {
    if (nodes > budget) return;
    if (k == n - 1) {
      if (top_ok()) out.push_back(t);
      return;
    }
    if (i == A.size(k)) {
      place(k + 1, 0);
      return;
    }
    Cell x{k, i};
    if (unit_base[k][i] >= 0) {
      int base = t.comp[k - 1][unit_base[k][i]];
      int img = B.unit[k + 1][base];
      if (img < 0) return;
      t.comp[k][i] = img;
      place(k, i + 1);
      t.comp[k][i] = -1;
      return;
    }
    Cell want_s, want_t;
    try {
      want_s = ch.mod_src(x);
      want_t = ch.mod_tgt(x);
    } catch (const op_error&) {
      return;
    }
    for (int j = 0; j < B.size(k + 2); ++j) {
      if (++nodes > budget) return;
      if (B.src[k + 2][j] != want_s.idx || B.tgt[k + 2][j] != want_t.idx)
        continue;
      t.comp[k][i] = j;
      place(k, i + 1);
      t.comp[k][i] = -1;
    }
  };
  place(0, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].label = "m" + std::to_string(i);
  return out;
}

}  // namespace ziq
