#pragma once
//
// limits.hpp
//
// Homotopy pullbacks of cospans of n-functors, their strict counterparts,
// fibers and kernels.
//
// A k-cell of the h-pullback of F: A -> B <- C: G is a triple (a, b, c) with
// a in A_k, c in C_k and b a (k+1)-cell of B whose boundaries follow the same
// mixed whisker chains that govern lax transformation components; a top cell
// is a pair (a, c) whose two chains agree.  The universal 2-cell eps simply
// reads off the middle component, so it is a lax transformation by
// construction, and the composition tables of the h-pullback are forced by
// the transformation composite law.
//

#include "morphisms.hpp"

#include <array>
#include <map>

namespace ziq {

struct HPullback {
  NCat cat;        // the h-pullback n-category
  Morphism P, Q;   // projections onto the two feet
  Transf2 eps;     // P;F => Q;G
  Morphism F, G;   // the cospan
  // parts[k][i] = {a, b, c}: component indices of the i-th k-cell.  The b
  // entry is -1 at the top dimension (top cells store no middle component;
  // their invariant lives in the b-parts of their boundaries).
  std::vector<std::vector<std::array<int, 3>>> parts;

  // Reverse lookup: {src, tgt, a, b, c} -> cell index (src/tgt -1 at dim 0).
  std::vector<std::map<std::array<int, 5>, int>> rev;

  Cell find(int k, int s, int t, int a, int b, int c) const {
    auto it = rev[k].find({s, t, a, b, c});
    if (it == rev[k].end()) return {};
    return {k, it->second};
  }
};

namespace detail {

inline ChainView hpb_view(const HPullback& pb) {
  ChainView v;
  v.dom = &pb.cat;
  v.cod = &pb.F.cod;
  v.comp = [&pb](Cell x) -> Cell {
    if (x.dim < 0 || x.dim >= static_cast<int>(pb.parts.size()))
      throw op_error("h-pullback: component out of range");
    int b = pb.parts[x.dim][x.idx][1];
    if (b < 0) throw op_error("h-pullback: top cell has no middle component");
    return {x.dim + 1, b};
  };
  v.F0 = [&pb](Cell x) { return pb.F.apply({x.dim, pb.parts[x.dim][x.idx][0]}); };
  v.G0 = [&pb](Cell x) { return pb.G.apply({x.dim, pb.parts[x.dim][x.idx][2]}); };
  return v;
}

// Register a cell name, disambiguating collisions with the source-cell name
// and, failing that, a counter.
inline std::string hpb_name(const NCat& cat, int k, const std::string& base,
                            const std::string& src_name) {
  if (!cat.has_cell(k, base)) return base;
  std::string with_src = base;
  with_src.insert(with_src.size() - 1, "|" + src_name);
  if (!cat.has_cell(k, with_src)) return with_src;
  for (int i = 2;; ++i) {
    std::string numbered = with_src + "#" + std::to_string(i);
    if (!cat.has_cell(k, numbered)) return numbered;
  }
}

}  // namespace detail

inline HPullback h_pullback(const Morphism& F, const Morphism& G) {
  if (!(F.cod == G.cod))
    throw op_error("h_pullback: cospan feet land in different categories");
  const NCat& A = F.dom;
  const NCat& B = F.cod;
  const NCat& C = G.dom;
  if (A.n != B.n || C.n != B.n)
    throw op_error("h_pullback: ambient dimensions differ");
  const int n = B.n;

  HPullback pb;
  pb.F = F;
  pb.G = G;
  pb.cat = NCat(n, "hpb(" + F.label + "," + G.label + ")");
  pb.parts.assign(n + 1, {});
  pb.rev.assign(n + 1, {});
  NCat& P = pb.cat;
  ChainView v = detail::hpb_view(pb);

  auto record = [&](int k, int s, int t, int a, int b, int c) {
    pb.rev[k][{s, t, a, b, c}] = static_cast<int>(pb.parts[k].size()) - 1;
  };

  // Dimension 0.
  for (int a = 0; a < A.size(0); ++a)
    for (int c = 0; c < C.size(0); ++c) {
      if (n == 0) {
        if (F.apply({0, a}) != G.apply({0, c})) continue;
        P.add_cell(0, detail::hpb_name(
                          P, 0, "(" + A.cells[0][a] + "|" + C.cells[0][c] + ")",
                          ""));
        pb.parts[0].push_back({a, -1, c});
        record(0, -1, -1, a, -1, c);
        continue;
      }
      Cell fa = F.apply({0, a}), gc = G.apply({0, c});
      for (int b = 0; b < B.size(1); ++b) {
        if (B.src[1][b] != fa.idx || B.tgt[1][b] != gc.idx) continue;
        P.add_cell(0, detail::hpb_name(P, 0,
                                       "(" + A.cells[0][a] + "|" +
                                           B.cells[1][b] + "|" + C.cells[0][c] +
                                           ")",
                                       ""));
        pb.parts[0].push_back({a, b, c});
        record(0, -1, -1, a, b, c);
      }
    }

  // Dimensions 1..n: build cells over parallel pairs of boundary cells, then
  // units for the dimension below and composition tables.
  for (int k = 1; k <= n; ++k) {
    const int lower = P.size(k - 1);
    for (int xs = 0; xs < lower; ++xs)
      for (int xt = 0; xt < lower; ++xt) {
        if (k >= 2 && (P.src[k - 1][xs] != P.src[k - 1][xt] ||
                       P.tgt[k - 1][xs] != P.tgt[k - 1][xt]))
          continue;  // boundaries of a cell must be parallel
        const auto& ps = pb.parts[k - 1][xs];
        const auto& pt = pb.parts[k - 1][xt];
        for (int a = 0; a < A.size(k); ++a) {
          if (A.src[k][a] != ps[0] || A.tgt[k][a] != pt[0]) continue;
          for (int c = 0; c < C.size(k); ++c) {
            if (C.src[k][c] != ps[2] || C.tgt[k][c] != pt[2]) continue;
            // Provisional cell: boundaries and outer parts are enough to
            // evaluate the chains; the middle part is never consulted.
            Cell x = P.add_cell(k, "#provisional");
            P.set_bnd(x, {k - 1, xs}, {k - 1, xt});
            pb.parts[k].push_back({a, -1, c});
            bool kept = false;
            try {
              Cell want_s = chain_D(v, k, x);
              Cell want_t = chain_C(v, k, x);
              if (k == n) {
                kept = want_s == want_t;
                if (kept) {
                  std::string base = "(" + A.cells[k][a] + "|" +
                                     B.cells[k][ps[1]] + "|" + C.cells[k][c] +
                                     "|" + B.cells[k][pt[1]] + ")";
                  std::string nm = detail::hpb_name(P, k, base,
                                                    P.cells[k - 1][xs]);
                  P.cells[k][x.idx] = nm;
                  P.index[k].erase("#provisional");
                  P.index[k][nm] = x.idx;
                  record(k, xs, xt, a, -1, c);
                }
              } else {
                for (int b = 0; b < B.size(k + 1); ++b) {
                  if (B.src[k + 1][b] != want_s.idx ||
                      B.tgt[k + 1][b] != want_t.idx)
                    continue;
                  std::string base = "(" + A.cells[k][a] + "|" +
                                     B.cells[k + 1][b] + "|" + C.cells[k][c] +
                                     ")";
                  if (!kept) {
                    kept = true;
                    pb.parts[k][x.idx][1] = b;
                    std::string nm = detail::hpb_name(P, k, base,
                                                      P.cells[k - 1][xs]);
                    P.cells[k][x.idx] = nm;
                    P.index[k].erase("#provisional");
                    P.index[k][nm] = x.idx;
                    record(k, xs, xt, a, b, c);
                  } else {
                    Cell y = P.add_cell(
                        k, detail::hpb_name(P, k, base, P.cells[k - 1][xs]));
                    P.set_bnd(y, {k - 1, xs}, {k - 1, xt});
                    pb.parts[k].push_back({a, b, c});
                    record(k, xs, xt, a, b, c);
                  }
                }
              }
            } catch (const op_error&) {
              kept = false;
            }
            if (!kept) {  // retract the provisional cell
              P.cells[k].pop_back();
              P.index[k].erase("#provisional");
              P.src[k].pop_back();
              P.tgt[k].pop_back();
              P.unit[k].pop_back();
              pb.parts[k].pop_back();
            }
          }
        }
      }

    // Units for the cells one dimension down.
    for (int i = 0; i < P.size(k - 1); ++i) {
      const auto& p = pb.parts[k - 1][i];
      int ua = A.unit[k - 1][p[0]];
      int uc = C.unit[k - 1][p[2]];
      int ub = (k < n && p[1] >= 0) ? B.unit[k][p[1]] : -1;
      Cell u = pb.find(k, i, i, ua, k == n ? -1 : ub, uc);
      if (!u.valid())
        throw op_error("h_pullback: missing unit cell (internal)");
      P.set_unit({k - 1, i}, u);
    }

    // Composition tables at dimension k.
    for (int m = 0; m < k; ++m)
      for (int xi = 0; xi < P.size(k); ++xi)
        for (int yi = 0; yi < P.size(k); ++yi) {
          Cell x{k, xi}, y{k, yi};
          if (P.bnd_tgt(x, m) != P.bnd_src(y, m)) continue;
          const auto& px = pb.parts[k][xi];
          const auto& py = pb.parts[k][yi];
          Cell ar = A.get_comp(m, {k, px[0]}, {k, py[0]});
          Cell cr = C.get_comp(m, {k, px[2]}, {k, py[2]});
          int br = -1;
          if (k < n) br = paste_component(v, m, x, y).idx;
          int sr, tr;
          if (m == k - 1) {
            sr = P.src[k][xi];
            tr = P.tgt[k][yi];
          } else {
            sr = P.get_comp(m, P.src_of(x), P.src_of(y)).idx;
            tr = P.get_comp(m, P.tgt_of(x), P.tgt_of(y)).idx;
          }
          Cell r = pb.find(k, k >= 1 ? sr : -1, k >= 1 ? tr : -1, ar.idx, br,
                           cr.idx);
          if (!r.valid())
            throw op_error("h_pullback: missing composite cell (internal)");
          P.set_comp(m, x, y, r);
        }
  }

  // Canonical base cell: the unit loop over the basepoints, when available.
  // Must be settled before the projections copy the category.
  if (A.point && C.point && B.point) {
    Cell p0 = n == 0 ? pb.find(0, -1, -1, A.point->idx, -1, C.point->idx)
                     : pb.find(0, -1, -1, A.point->idx,
                               B.unit[0][B.point->idx], C.point->idx);
    if (p0.valid()) P.point = p0;
  }

  // Projections and the universal 2-cell.
  auto projection = [&](int slot, const NCat& target, const char* lbl) {
    Morphism M;
    M.dom = P;
    M.cod = target;
    M.label = lbl;
    M.map.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      M.map[k].resize(P.size(k));
      for (int i = 0; i < P.size(k); ++i) M.map[k][i] = pb.parts[k][i][slot];
    }
    return M;
  };
  pb.P = projection(0, A, "P");
  pb.Q = projection(2, C, "Q");
  pb.eps = make_transf2(compose0(pb.P, F), compose0(pb.Q, G), "eps");
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < P.size(k); ++i) pb.eps.comp[k][i] = pb.parts[k][i][1];
  return pb;
}

namespace detail {

// Re-synchronise the category copies held by the projections and the
// universal 2-cell after the base point (or label) of pb.cat changed.
inline void hpb_resync(HPullback& pb) {
  pb.P.dom = pb.cat;
  pb.Q.dom = pb.cat;
  pb.eps.F.dom = pb.cat;
  pb.eps.G.dom = pb.cat;
}

}  // namespace detail

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ universal properties ~~~~~~~~

// One-dimensional universal property: the comparison functor induced by a
// lax cone (M, N, omega) over the cospan.
inline Morphism mediate(const HPullback& pb, const Morphism& M,
                        const Morphism& N, const Transf2& omega) {
  if (!(M.cod == pb.F.dom) || !(N.cod == pb.G.dom) || !(M.dom == N.dom))
    throw op_error("mediate: cone feet do not match the cospan");
  if (!(omega.F == compose0(M, pb.F)) || !(omega.G == compose0(N, pb.G)))
    throw op_error("mediate: 2-cell is not a cone over the cospan");
  const NCat& X = M.dom;
  const int n = X.n;
  Morphism L;
  L.dom = X;
  L.cod = pb.cat;
  L.label = "med(" + M.label + "," + N.label + ")";
  L.map.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    L.map[k].assign(X.size(k), -1);
    for (int i = 0; i < X.size(k); ++i) {
      Cell x{k, i};
      int s = -1, t = -1;
      if (k >= 1) {
        s = L.map[k - 1][X.src[k][i]];
        t = L.map[k - 1][X.tgt[k][i]];
      }
      int b = k == n ? -1 : omega.at(x).idx;
      Cell img = pb.find(k, s, t, M.apply(x).idx, b, N.apply(x).idx);
      if (!img.valid())
        throw op_error("mediate: cone cell has no counterpart (at " +
                       X.describe(x) + ")");
      L.map[k][i] = img.idx;
    }
  }
  return L;
}

// Two-dimensional universal property: given transformations between two
// cones and a modification Sigma filling the pasted square, produce the
// unique transformation between the induced functors.  The correction data
// omega/omega_hat are the universal 2-cells of the two cones.
inline Transf2 mediate2(const HPullback& pb, const Transf2& alpha,
                        const Transf2& beta, const Transf2& omega,
                        const Transf2& omega_hat, const Transf3& Sigma) {
  if (!(alpha.dom() == beta.dom()))
    throw op_error("mediate2: transformation domains differ");
  if (!(Sigma.a == vcompose(omega, whisker_right(beta, pb.G))) ||
      !(Sigma.b == vcompose(whisker_right(alpha, pb.F), omega_hat)))
    throw op_error("mediate2: modification does not fill the cone square");
  Morphism L = mediate(pb, alpha.F, beta.F, omega);
  Morphism Lh = mediate(pb, alpha.G, beta.G, omega_hat);
  const NCat& X = alpha.dom();
  const int n = X.n;
  Transf2 t = make_transf2(L, Lh, "med2(" + alpha.label + "," + beta.label + ")");
  ChainView v = t.view();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < X.size(k); ++i) {
      Cell x{k, i};
      Cell want_s = chain_D(v, k, x);
      Cell want_t = chain_C(v, k, x);
      int b = k == n - 1 ? -1 : Sigma.at(x).idx;
      Cell img = pb.find(k + 1, want_s.idx, want_t.idx, alpha.at(x).idx, b,
                         beta.at(x).idx);
      if (!img.valid())
        throw op_error("mediate2: no component cell for " + X.describe(x));
      t.comp[k][i] = img.idx;
    }
  if (!(whisker_right(t, pb.P) == alpha) || !(whisker_right(t, pb.Q) == beta) ||
      !(star_compose(t, pb.eps) == Sigma))
    throw op_error("mediate2: verification of the universal equations failed");
  return t;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ strict pullbacks ~~~~~~~~~~

struct SPullback {
  NCat cat;
  Morphism P, Q;  // projections
  std::vector<std::map<std::array<int, 2>, int>> rev;

  Cell find(int k, int a, int c) const {
    auto it = rev[k].find({a, c});
    if (it == rev[k].end()) return {};
    return {k, it->second};
  }
};

inline SPullback strict_pullback(const Morphism& F, const Morphism& G) {
  if (!(F.cod == G.cod))
    throw op_error("strict_pullback: cospan feet land in different categories");
  const NCat& A = F.dom;
  const NCat& C = G.dom;
  if (A.n != F.cod.n || C.n != F.cod.n)
    throw op_error("strict_pullback: ambient dimensions differ");
  const int n = A.n;
  SPullback pb;
  pb.cat = NCat(n, "pb(" + F.label + "," + G.label + ")");
  pb.rev.assign(n + 1, {});
  NCat& P = pb.cat;
  for (int k = 0; k <= n; ++k) {
    for (int a = 0; a < A.size(k); ++a)
      for (int c = 0; c < C.size(k); ++c) {
        if (F.apply({k, a}) != G.apply({k, c})) continue;
        if (k >= 1) {
          Cell s = pb.find(k - 1, A.src[k][a], C.src[k][c]);
          Cell t = pb.find(k - 1, A.tgt[k][a], C.tgt[k][c]);
          if (!s.valid() || !t.valid()) continue;
          Cell x = P.add_cell(k, detail::hpb_name(
                                     P, k,
                                     pair_name(A.cells[k][a], C.cells[k][c]),
                                     P.cells[k - 1][s.idx]));
          P.set_bnd(x, s, t);
        } else {
          P.add_cell(0, detail::hpb_name(
                            P, 0, pair_name(A.cells[0][a], C.cells[0][c]), ""));
        }
        pb.rev[k][{a, c}] = P.size(k) - 1;
      }
    if (k >= 1) {
      for (const auto& [key, i] : pb.rev[k - 1]) {
        int ua = A.unit[k - 1][key[0]];
        int uc = C.unit[k - 1][key[1]];
        Cell u = pb.find(k, ua, uc);
        if (!u.valid())
          throw op_error("strict_pullback: missing unit (internal)");
        P.set_unit({k - 1, i}, u);
      }
      for (int m = 0; m < k; ++m)
        for (const auto& [kx, xi] : pb.rev[k])
          for (const auto& [ky, yi] : pb.rev[k]) {
            Cell x{k, xi}, y{k, yi};
            if (P.bnd_tgt(x, m) != P.bnd_src(y, m)) continue;
            Cell r = pb.find(k, A.get_comp(m, {k, kx[0]}, {k, ky[0]}).idx,
                             C.get_comp(m, {k, kx[1]}, {k, ky[1]}).idx);
            if (!r.valid())
              throw op_error("strict_pullback: missing composite (internal)");
            P.set_comp(m, x, y, r);
          }
    }
  }
  if (A.point && C.point) {
    Cell p0 = pb.find(0, A.point->idx, C.point->idx);
    if (p0.valid()) P.point = p0;
  }
  auto projection = [&](int slot, const NCat& target, const char* lbl) {
    Morphism M;
    M.dom = P;
    M.cod = target;
    M.label = lbl;
    M.map.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      M.map[k].assign(P.size(k), -1);
      for (const auto& [key, i] : pb.rev[k]) M.map[k][i] = key[slot];
    }
    return M;
  };
  pb.P = projection(0, A, "P");
  pb.Q = projection(1, C, "Q");
  return pb;
}

inline Morphism strict_mediate(const SPullback& pb, const Morphism& M,
                               const Morphism& N) {
  if (!(M.dom == N.dom))
    throw op_error("strict_mediate: cone feet have different domains");
  if (!(M.cod == pb.P.cod) || !(N.cod == pb.Q.cod))
    throw op_error("strict_mediate: cone feet do not match the cospan");
  const NCat& X = M.dom;
  Morphism L;
  L.dom = X;
  L.cod = pb.cat;
  L.label = "med(" + M.label + "," + N.label + ")";
  L.map.resize(X.n + 1);
  for (int k = 0; k <= X.n; ++k) {
    L.map[k].assign(X.size(k), -1);
    for (int i = 0; i < X.size(k); ++i) {
      Cell img = pb.find(k, M.map[k][i], N.map[k][i]);
      if (!img.valid())
        throw op_error("strict_mediate: cone does not equalise the cospan");
      L.map[k][i] = img.idx;
    }
  }
  return L;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ fibers and kernels ~~~~~~~~

// Past fiber of F over the 0-cell d of its codomain: cells (*, b, x) with
// b: d -> F(x).
inline HPullback h_fiber_past(const Morphism& F, Cell d) {
  const NCat& B = F.cod;
  B.check_cell(d);
  if (d.dim != 0) throw op_error("h_fiber: base cell must be an object");
  HPullback pb =
      h_pullback(constant_morphism(terminal(B.n), B, d), F);
  pb.cat.label = "fib<(" + F.label + ";" + B.name_of(d) + ")";
  if (F.dom.point && F.apply(*F.dom.point) == d) {
    Cell p0 = B.n == 0 ? pb.find(0, -1, -1, 0, -1, F.dom.point->idx)
                       : pb.find(0, -1, -1, 0, B.unit[0][d.idx],
                                 F.dom.point->idx);
    if (p0.valid()) pb.cat.point = p0;
  }
  detail::hpb_resync(pb);
  return pb;
}

// Future fiber of F over d: cells (x, b, *) with b: F(x) -> d.
inline HPullback h_fiber_future(const Morphism& F, Cell d) {
  const NCat& B = F.cod;
  B.check_cell(d);
  if (d.dim != 0) throw op_error("h_fiber: base cell must be an object");
  HPullback pb =
      h_pullback(F, constant_morphism(terminal(B.n), B, d));
  pb.cat.label = "fib>(" + F.label + ";" + B.name_of(d) + ")";
  if (F.dom.point && F.apply(*F.dom.point) == d) {
    Cell p0 = B.n == 0 ? pb.find(0, -1, -1, F.dom.point->idx, -1, 0)
                       : pb.find(0, -1, -1, F.dom.point->idx,
                                 B.unit[0][d.idx], 0);
    if (p0.valid()) pb.cat.point = p0;
  }
  detail::hpb_resync(pb);
  return pb;
}

enum class FiberKind { past, future };

struct HFiber {
  FiberKind kind;
  Cell base;      // the object of cod(F) the fiber sits over
  HPullback pb;
};

inline HFiber h_fiber(const Morphism& F, Cell d, FiberKind kind) {
  return {kind, d,
          kind == FiberKind::past ? h_fiber_past(F, d) : h_fiber_future(F, d)};
}

// The h-kernel of a pointed functor: the past fiber over the base point,
// pointed at the unit loop.  The universal cell kappa is pb.eps and the
// kernel inclusion is pb.Q.
inline HPullback h_kernel(const Morphism& F) {
  if (!F.cod.point) throw op_error("h_kernel: codomain is not pointed");
  if (!F.dom.point) throw op_error("h_kernel: domain is not pointed");
  if (!(F.apply(*F.dom.point) == *F.cod.point))
    throw op_error("h_kernel: functor does not preserve the base point");
  HPullback pb = h_fiber_past(F, *F.cod.point);
  pb.cat.label = "hker(" + F.label + ")";
  detail::hpb_resync(pb);
  if (!pb.cat.point)
    throw op_error("h_kernel: base cell is missing (internal)");
  return pb;
}

}  // namespace ziq
