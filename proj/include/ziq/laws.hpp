#pragma once
//
// laws.hpp
//
// Executable law suite for the 2- and 3-dimensional composition algebra.
// Given a triple of categories, the suite enumerates pools of functors,
// transformations and modifications among them, instantiates every axiom of
// the sesquicategory structure (whisker laws, vertical-category laws, the
// star-composition laws and their compatibility squares, and the product
// interchange), and checks each instance by exact structural equality.
//
// Every thrown precondition during an instantiation that should typecheck is
// counted as a failure, so a law whose stated boundaries are wrong cannot
// silently pass.  A law with zero instances is reported as skipped, never as
// passed.
//

#include "morphisms.hpp"

namespace ziq {

struct LawReport {
  struct Entry {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    std::string status() const {
      if (failures > 0) return "FAIL";
      if (instances == 0) return "skipped";
      return "passed";
    }
  };
  std::vector<Entry> laws;

  long long total_instances() const {
    long long t = 0;
    for (const auto& e : laws) t += e.instances;
    return t;
  }
  long long total_failures() const {
    long long t = 0;
    for (const auto& e : laws) t += e.failures;
    return t;
  }
  bool ok() const { return total_failures() == 0; }
  bool complete() const {
    for (const auto& e : laws)
      if (e.instances == 0) return false;
    return !laws.empty();
  }
  std::string summary() const {
    std::ostringstream os;
    os << (ok() ? (complete() ? "ok" : "ok (with skipped laws)") : "FAIL")
       << ": " << laws.size() << " laws, " << total_instances()
       << " instances, " << total_failures() << " failures";
    for (const auto& e : laws)
      os << "\n  " << e.status() << "  " << e.name << "  (" << e.instances
         << " instances" << (e.failures ? ", " + std::to_string(e.failures) +
                                              " failures"
                                        : std::string())
         << ")";
    return os.str();
  }
};

namespace detail {

struct LawPools {
  std::array<const NCat*, 3> cats;
  std::vector<Morphism> fns[3][3];
  std::vector<Transf2> tfs[3][3];
  std::vector<Transf3> mods[3][3];
};

inline LawPools build_pools(const NCat& C, const NCat& D, const NCat& E) {
  constexpr std::size_t kFnCap = 12, kTfCap = 18, kModCap = 12;
  LawPools p{{&C, &D, &E}, {}, {}, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      p.fns[i][j] = enumerate_functors(*p.cats[i], *p.cats[j]);
      if (p.fns[i][j].size() > kFnCap) p.fns[i][j].resize(kFnCap);
      for (const auto& F : p.fns[i][j])
        for (const auto& G : p.fns[i][j]) {
          if (p.tfs[i][j].size() >= kTfCap) break;
          for (auto& t : enumerate_transf2(F, G)) {
            if (p.tfs[i][j].size() >= kTfCap) break;
            p.tfs[i][j].push_back(std::move(t));
          }
        }
      for (const auto& a : p.tfs[i][j])
        for (const auto& b : p.tfs[i][j]) {
          if (p.mods[i][j].size() >= kModCap) break;
          if (!(a.F == b.F) || !(a.G == b.G)) continue;
          for (auto& m : enumerate_transf3(a, b)) {
            if (p.mods[i][j].size() >= kModCap) break;
            p.mods[i][j].push_back(std::move(m));
          }
        }
    }
  return p;
}

}  // namespace detail

inline LawReport law_suite(const NCat& C, const NCat& D, const NCat& E,
                           long long budget = 30000) {
  detail::LawPools p = detail::build_pools(C, D, E);
  LawReport rep;

  // Each law gets its own slice of the budget so that an expensive early law
  // cannot starve the later ones.
  constexpr int kLawCount = 50;
  const long long per_law = std::max<long long>(1, budget / kLawCount);

  LawReport::Entry* cur = nullptr;
  auto spent = [&]() { return cur->instances >= per_law; };
  auto check = [&](auto&& fn) {
    if (spent()) return;
    ++cur->instances;
    bool pass = false;
    try {
      pass = fn();
    } catch (const op_error&) {
      pass = false;
    }
    if (!pass) ++cur->failures;
  };
  auto law = [&](const std::string& name, auto&& body) {
    rep.laws.push_back({name, 0, 0});
    cur = &rep.laws.back();
    body();
  };

  auto id_of = [&](int i) { return identity_morphism(*p.cats[i]); };

  // Iteration helpers over the pools (slot indices range over the triple).
  auto each_tf = [&](auto&& f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& a : p.tfs[i][j]) {
          if (spent()) return;
          f(i, j, a);
        }
  };
  auto each_mod = [&](auto&& f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& m : p.mods[i][j]) {
          if (spent()) return;
          f(i, j, m);
        }
  };
  // Vertically composable pairs of transformations within one hom-pool.
  auto each_vpair = [&](auto&& f) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& a : p.tfs[i][j])
          for (const auto& b : p.tfs[i][j]) {
            if (spent()) return;
            if (a.G == b.F) f(i, j, a, b);
          }
  };

  // ~~~~~~~~~~~~ sesquicategory of functors and transformations ~~~~~~~~~~~~

  law("L1: 1.0a = a", [&] {
    each_tf([&](int i, int, const Transf2& a) {
      check([&] { return whisker_left(id_of(i), a) == a; });
    });
  });
  law("L2: (M.0N).0a = M.0(N.0a)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& M : p.fns[ia][ib])
              for (const auto& N : p.fns[ib][ic])
                for (const auto& a : p.tfs[ic][id]) {
                  if (spent()) return;
                  if (!(N.cod == a.dom())) continue;
                  check([&] {
                    return whisker_left(compose0(M, N), a) ==
                           whisker_left(M, whisker_left(N, a));
                  });
                }
  });
  law("L3: N.0(1_F) = 1_(N.0F)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& N : p.fns[ia][ib])
            for (const auto& F : p.fns[ib][ic]) {
              if (spent()) return;
              check([&] {
                return whisker_left(N, id2(F)) == id2(compose0(N, F));
              });
            }
  });
  law("L4: N.0(a.1b) = (N.0a).1(N.0b)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& N : p.fns[ia][ib])
            for (const auto& a : p.tfs[ib][ic])
              for (const auto& b : p.tfs[ib][ic]) {
                if (spent()) return;
                if (!(a.G == b.F)) continue;
                check([&] {
                  return whisker_left(N, vcompose(a, b)) ==
                         vcompose(whisker_left(N, a), whisker_left(N, b));
                });
              }
  });
  law("R1: a.01 = a", [&] {
    each_tf([&](int, int j, const Transf2& a) {
      check([&] { return whisker_right(a, id_of(j)) == a; });
    });
  });
  law("R2: (a.0L).0L' = a.0(L.0L')", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& a : p.tfs[ia][ib])
              for (const auto& L : p.fns[ib][ic])
                for (const auto& L2 : p.fns[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return whisker_right(whisker_right(a, L), L2) ==
                           whisker_right(a, compose0(L, L2));
                  });
                }
  });
  law("R3: (1_F).0L = 1_(F.0L)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& F : p.fns[ia][ib])
            for (const auto& L : p.fns[ib][ic]) {
              if (spent()) return;
              check([&] {
                return whisker_right(id2(F), L) == id2(compose0(F, L));
              });
            }
  });
  law("R4: (a.1b).0L = (a.0L).1(b.0L)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& b : p.tfs[ia][ib])
              for (const auto& L : p.fns[ib][ic]) {
                if (spent()) return;
                if (!(a.G == b.F)) continue;
                check([&] {
                  return whisker_right(vcompose(a, b), L) ==
                         vcompose(whisker_right(a, L), whisker_right(b, L));
                });
              }
  });
  law("LR5: (N.0a).0L = N.0(a.0L)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& N : p.fns[ia][ib])
              for (const auto& a : p.tfs[ib][ic])
                for (const auto& L : p.fns[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return whisker_right(whisker_left(N, a), L) ==
                           whisker_left(N, whisker_right(a, L));
                  });
                }
  });
  law("V-assoc: (a.1b).1c = a.1(b.1c)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& a : p.tfs[i][j])
          for (const auto& b : p.tfs[i][j])
            for (const auto& c : p.tfs[i][j]) {
              if (spent()) return;
              if (!(a.G == b.F) || !(b.G == c.F)) continue;
              check([&] {
                return vcompose(vcompose(a, b), c) ==
                       vcompose(a, vcompose(b, c));
              });
            }
  });
  law("V-unitL: 1_F.1a = a", [&] {
    each_tf([&](int, int, const Transf2& a) {
      check([&] { return vcompose(id2(a.F), a) == a; });
    });
  });
  law("V-unitR: a.1(1_G) = a", [&] {
    each_tf([&](int, int, const Transf2& a) {
      check([&] { return vcompose(a, id2(a.G)) == a; });
    });
  });

  // ~~~~~~~~~~~~~~~~~~~~ .1-whiskers on modifications ~~~~~~~~~~~~~~~~~~~~~~

  law("L1': 1_F.1L = L", [&] {
    each_mod([&](int, int, const Transf3& m) {
      check([&] { return whisker1_left(id2(m.a.F), m) == m; });
    });
  });
  law("R1': L.1(1_G) = L", [&] {
    each_mod([&](int, int, const Transf3& m) {
      check([&] { return whisker1_right(m, id2(m.a.G)) == m; });
    });
  });
  law("L2': (w.1w').1L = w.1(w'.1L)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& w : p.tfs[i][j])
          for (const auto& w2 : p.tfs[i][j])
            for (const auto& m : p.mods[i][j]) {
              if (spent()) return;
              if (!(w.G == w2.F) || !(w2.G == m.a.F)) continue;
              check([&] {
                return whisker1_left(vcompose(w, w2), m) ==
                       whisker1_left(w, whisker1_left(w2, m));
              });
            }
  });
  law("R2': L.1(s.1s') = (L.1s).1s'", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& m : p.mods[i][j])
          for (const auto& s : p.tfs[i][j])
            for (const auto& s2 : p.tfs[i][j]) {
              if (spent()) return;
              if (!(m.a.G == s.F) || !(s.G == s2.F)) continue;
              check([&] {
                return whisker1_right(m, vcompose(s, s2)) ==
                       whisker1_right(whisker1_right(m, s), s2);
              });
            }
  });
  law("L3': w.1(1_a) = 1_(w.1a)", [&] {
    each_vpair([&](int, int, const Transf2& w, const Transf2& a) {
      check([&] { return whisker1_left(w, id3(a)) == id3(vcompose(w, a)); });
    });
  });
  law("R3': (1_a).1s = 1_(a.1s)", [&] {
    each_vpair([&](int, int, const Transf2& a, const Transf2& s) {
      check([&] { return whisker1_right(id3(a), s) == id3(vcompose(a, s)); });
    });
  });
  law("L4': w.1(L.2S) = (w.1L).2(w.1S)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& w : p.tfs[i][j])
          for (const auto& m : p.mods[i][j])
            for (const auto& s : p.mods[i][j]) {
              if (spent()) return;
              if (!(m.b == s.a) || !(w.G == m.a.F)) continue;
              check([&] {
                return whisker1_left(w, compose2(m, s)) ==
                       compose2(whisker1_left(w, m), whisker1_left(w, s));
              });
            }
  });
  law("R4': (L.2S).1s = (L.1s).2(S.1s)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& m : p.mods[i][j])
          for (const auto& s : p.mods[i][j])
            for (const auto& w : p.tfs[i][j]) {
              if (spent()) return;
              if (!(m.b == s.a) || !(m.a.G == w.F)) continue;
              check([&] {
                return whisker1_right(compose2(m, s), w) ==
                       compose2(whisker1_right(m, w), whisker1_right(s, w));
              });
            }
  });
  law("LR5': (w.1L).1s = w.1(L.1s)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& w : p.tfs[i][j])
          for (const auto& m : p.mods[i][j])
            for (const auto& s : p.tfs[i][j]) {
              if (spent()) return;
              if (!(w.G == m.a.F) || !(m.a.G == s.F)) continue;
              check([&] {
                return whisker1_right(whisker1_left(w, m), s) ==
                       whisker1_left(w, whisker1_right(m, s));
              });
            }
  });
  law("VV-assoc: (L.2S).2X = L.2(S.2X)", [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& a : p.mods[i][j])
          for (const auto& b : p.mods[i][j])
            for (const auto& c : p.mods[i][j]) {
              if (spent()) return;
              if (!(a.b == b.a) || !(b.b == c.a)) continue;
              check([&] {
                return compose2(compose2(a, b), c) ==
                       compose2(a, compose2(b, c));
              });
            }
  });
  law("VV-unitL: 1_a.2L = L", [&] {
    each_mod([&](int, int, const Transf3& m) {
      check([&] { return compose2(id3(m.a), m) == m; });
    });
  });
  law("VV-unitR: L.2(1_b) = L", [&] {
    each_mod([&](int, int, const Transf3& m) {
      check([&] { return compose2(m, id3(m.b)) == m; });
    });
  });

  // ~~~~~~~~~~~~~~~~~~~~ .0-whiskers on modifications ~~~~~~~~~~~~~~~~~~~~~~

  law("L1'': 1.0L = L", [&] {
    each_mod([&](int i, int, const Transf3& m) {
      check([&] { return whisker0_left(id_of(i), m) == m; });
    });
  });
  law("L2'': (M.0N).0L = M.0(N.0L)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& M : p.fns[ia][ib])
              for (const auto& N : p.fns[ib][ic])
                for (const auto& m : p.mods[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return whisker0_left(compose0(M, N), m) ==
                           whisker0_left(M, whisker0_left(N, m));
                  });
                }
  });
  law("L3'': E.0(1_a) = 1_(E.0a)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& E : p.fns[ia][ib])
            for (const auto& a : p.tfs[ib][ic]) {
              if (spent()) return;
              check([&] {
                return whisker0_left(E, id3(a)) == id3(whisker_left(E, a));
              });
            }
  });
  law("L4'': E.0(L.2S) = (E.0L).2(E.0S)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& E : p.fns[ia][ib])
            for (const auto& m : p.mods[ib][ic])
              for (const auto& s : p.mods[ib][ic]) {
                if (spent()) return;
                if (!(m.b == s.a)) continue;
                check([&] {
                  return whisker0_left(E, compose2(m, s)) ==
                         compose2(whisker0_left(E, m), whisker0_left(E, s));
                });
              }
  });
  law("R1'': L.01 = L", [&] {
    each_mod([&](int, int j, const Transf3& m) {
      check([&] { return whisker0_right(m, id_of(j)) == m; });
    });
  });
  law("R2'': (L.0H).0H' = L.0(H.0H')", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& m : p.mods[ia][ib])
              for (const auto& H : p.fns[ib][ic])
                for (const auto& H2 : p.fns[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return whisker0_right(whisker0_right(m, H), H2) ==
                           whisker0_right(m, compose0(H, H2));
                  });
                }
  });
  law("R3'': (1_a).0H = 1_(a.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& H : p.fns[ib][ic]) {
              if (spent()) return;
              check([&] {
                return whisker0_right(id3(a), H) == id3(whisker_right(a, H));
              });
            }
  });
  law("R4'': (L.2S).0H = (L.0H).2(S.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& m : p.mods[ia][ib])
            for (const auto& s : p.mods[ia][ib])
              for (const auto& H : p.fns[ib][ic]) {
                if (spent()) return;
                if (!(m.b == s.a)) continue;
                check([&] {
                  return whisker0_right(compose2(m, s), H) ==
                         compose2(whisker0_right(m, H), whisker0_right(s, H));
                });
              }
  });
  law("LR5'': (E.0L).0H = E.0(L.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& E : p.fns[ia][ib])
              for (const auto& m : p.mods[ib][ic])
                for (const auto& H : p.fns[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return whisker0_right(whisker0_left(E, m), H) ==
                           whisker0_left(E, whisker0_right(m, H));
                  });
                }
  });

  // ~~~~~~~~~~~~~~~~ distribution of .0 over .1-whiskers ~~~~~~~~~~~~~~~~~~~

  law("LRW1a: E.0(w.1L) = (E.0w).1(E.0L)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& E : p.fns[ia][ib])
            for (const auto& w : p.tfs[ib][ic])
              for (const auto& m : p.mods[ib][ic]) {
                if (spent()) return;
                if (!(w.G == m.a.F)) continue;
                check([&] {
                  return whisker0_left(E, whisker1_left(w, m)) ==
                         whisker1_left(whisker_left(E, w),
                                       whisker0_left(E, m));
                });
              }
  });
  law("LRW1b: (w.1L).0H = (w.0H).1(L.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& w : p.tfs[ia][ib])
            for (const auto& m : p.mods[ia][ib])
              for (const auto& H : p.fns[ib][ic]) {
                if (spent()) return;
                if (!(w.G == m.a.F)) continue;
                check([&] {
                  return whisker0_right(whisker1_left(w, m), H) ==
                         whisker1_left(whisker_right(w, H),
                                       whisker0_right(m, H));
                });
              }
  });
  law("LRW2a: E.0(L.1s) = (E.0L).1(E.0s)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& E : p.fns[ia][ib])
            for (const auto& m : p.mods[ib][ic])
              for (const auto& s : p.tfs[ib][ic]) {
                if (spent()) return;
                if (!(m.a.G == s.F)) continue;
                check([&] {
                  return whisker0_left(E, whisker1_right(m, s)) ==
                         whisker1_right(whisker0_left(E, m),
                                        whisker_left(E, s));
                });
              }
  });
  law("LRW2b: (L.1s).0H = (L.0H).1(s.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& m : p.mods[ia][ib])
            for (const auto& s : p.tfs[ia][ib])
              for (const auto& H : p.fns[ib][ic]) {
                if (spent()) return;
                if (!(m.a.G == s.F)) continue;
                check([&] {
                  return whisker0_right(whisker1_right(m, s), H) ==
                         whisker1_right(whisker0_right(m, H),
                                        whisker_right(s, H));
                });
              }
  });

  // ~~~~~~~~~~~~~~~~~~~~~~~~~ star composition ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

  law("Star-bnd: a*b is a modification (F.0b).1(a.0K) => (a.0H).1(G.0b)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& b : p.tfs[ib][ic]) {
              if (spent()) return;
              check([&] {
                Transf3 s = star_compose(a, b);
                if (!(s.a == vcompose(whisker_left(a.F, b),
                                      whisker_right(a, b.G))))
                  return false;
                if (!(s.b == vcompose(whisker_right(a, b.F),
                                      whisker_left(a.G, b))))
                  return false;
                return validate_transf3(s).ok;
              });
            }
  });
  law("Star-LA: (E.0a)*b = E.0(a*b)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& E : p.fns[ia][ib])
              for (const auto& a : p.tfs[ib][ic])
                for (const auto& b : p.tfs[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return star_compose(whisker_left(E, a), b) ==
                           whisker0_left(E, star_compose(a, b));
                  });
                }
  });
  law("Star-RA: a*(b.0L) = (a*b).0L", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& a : p.tfs[ia][ib])
              for (const auto& b : p.tfs[ib][ic])
                for (const auto& L : p.fns[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return star_compose(a, whisker_right(b, L)) ==
                           whisker0_right(star_compose(a, b), L);
                  });
                }
  });
  law("Star-mid: a*(M.0b) = (a.0M)*b", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (int id = 0; id < 3; ++id)
            for (const auto& a : p.tfs[ia][ib])
              for (const auto& M : p.fns[ib][ic])
                for (const auto& b : p.tfs[ic][id]) {
                  if (spent()) return;
                  check([&] {
                    return star_compose(a, whisker_left(M, b)) ==
                           star_compose(whisker_right(a, M), b);
                  });
                }
  });
  law("Star-idL: 1_F*b = 1_(F.0b)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& F : p.fns[ia][ib])
            for (const auto& b : p.tfs[ib][ic]) {
              if (spent()) return;
              check([&] {
                return star_compose(id2(F), b) == id3(whisker_left(F, b));
              });
            }
  });
  law("Star-idR: a*1_H = 1_(a.0H)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& H : p.fns[ib][ic]) {
              if (spent()) return;
              check([&] {
                return star_compose(a, id2(H)) == id3(whisker_right(a, H));
              });
            }
  });
  law("Star-strict: b strict => a*b identity", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& b : p.tfs[ib][ic]) {
              if (spent()) return;
              if (!is_strict(b)) continue;
              check([&] {
                return is_identity_transf3(star_compose(a, b));
              });
            }
  });
  law("Sq-ivb: (a*b).2((L.0H).1(G.0b)) = ((F.0b).1(L.0K)).2(w*b)", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& m : p.mods[ia][ib])
            for (const auto& b : p.tfs[ib][ic]) {
              if (spent()) return;
              check([&] {
                const Transf2& a = m.a;
                const Transf2& w = m.b;
                Transf3 lhs = compose2(
                    star_compose(a, b),
                    whisker1_right(whisker0_right(m, b.F),
                                   whisker_left(a.G, b)));
                Transf3 rhs = compose2(
                    whisker1_left(whisker_left(a.F, b),
                                  whisker0_right(m, b.G)),
                    star_compose(w, b));
                return lhs == rhs;
              });
            }
  });
  law("Sq-ivc: ((L.0M').1(e.0G)).2(e*w) = (e*a).2((e.0F).1(M.0M'))", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& e : p.tfs[ia][ib])
            for (const auto& m : p.mods[ib][ic]) {
              if (spent()) return;
              check([&] {
                const Transf2& a = m.a;
                const Transf2& w = m.b;
                Transf3 lhs = compose2(
                    whisker1_right(whisker0_left(e.F, m),
                                   whisker_right(e, a.G)),
                    star_compose(e, w));
                Transf3 rhs = compose2(
                    star_compose(e, a),
                    whisker1_left(whisker_right(e, a.F),
                                  whisker0_left(e.G, m)));
                return lhs == rhs;
              });
            }
  });
  law("StarFn-a: (a.1b)*g = ((a*g).1(b.0L)).2((a.0K).1(b*g))", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& a : p.tfs[ia][ib])
            for (const auto& b : p.tfs[ia][ib])
              for (const auto& g : p.tfs[ib][ic]) {
                if (spent()) return;
                if (!(a.G == b.F)) continue;
                check([&] {
                  Transf3 lhs = star_compose(vcompose(a, b), g);
                  Transf3 rhs = compose2(
                      whisker1_right(star_compose(a, g),
                                     whisker_right(b, g.G)),
                      whisker1_left(whisker_right(a, g.F),
                                    star_compose(b, g)));
                  return lhs == rhs;
                });
              }
  });
  law("StarFn-b: w*(a.1b) = ((D.0a).1(w*b)).2((w*a).1(E.0b))", [&] {
    for (int ia = 0; ia < 3; ++ia)
      for (int ib = 0; ib < 3; ++ib)
        for (int ic = 0; ic < 3; ++ic)
          for (const auto& w : p.tfs[ia][ib])
            for (const auto& a : p.tfs[ib][ic])
              for (const auto& b : p.tfs[ib][ic]) {
                if (spent()) return;
                if (!(a.G == b.F)) continue;
                check([&] {
                  Transf3 lhs = star_compose(w, vcompose(a, b));
                  Transf3 rhs = compose2(
                      whisker1_left(whisker_left(w.F, a),
                                    star_compose(w, b)),
                      whisker1_right(star_compose(w, a),
                                     whisker_left(w.G, b)));
                  return lhs == rhs;
                });
              }
  });

  // ~~~~~~~~~~~~~~~~~~~~~~~ product interchange ~~~~~~~~~~~~~~~~~~~~~~~~~~~

  law("PI-interchange: <a,1>.1<1,b> = <1,b>.1<a,1> = <a,b>", [&] {
    for (int ix = 0; ix < 3; ++ix)
      for (int ia = 0; ia < 3; ++ia)
        for (int ib = 0; ib < 3; ++ib) {
          if (p.cats[ia]->n != p.cats[ib]->n) continue;
          Product P = product(*p.cats[ia], *p.cats[ib]);
          for (const auto& a : p.tfs[ix][ia])
            for (const auto& b : p.tfs[ix][ib]) {
              if (spent()) return;
              check([&] {
                Transf2 ab = pair_transf2(a, b, P);
                Transf2 left = vcompose(pair_transf2(a, id2(b.F), P),
                                        pair_transf2(id2(a.G), b, P));
                Transf2 right = vcompose(pair_transf2(id2(a.F), b, P),
                                         pair_transf2(a, id2(b.G), P));
                return left == ab && right == ab &&
                       validate_transf2(ab).ok;
              });
            }
        }
  });
  law("PI-proj: <a,b>.0pr = a resp. b", [&] {
    for (int ix = 0; ix < 3; ++ix)
      for (int ia = 0; ia < 3; ++ia)
        for (int ib = 0; ib < 3; ++ib) {
          if (p.cats[ia]->n != p.cats[ib]->n) continue;
          Product P = product(*p.cats[ia], *p.cats[ib]);
          for (const auto& a : p.tfs[ix][ia])
            for (const auto& b : p.tfs[ix][ib]) {
              if (spent()) return;
              check([&] {
                Transf2 ab = pair_transf2(a, b, P);
                return whisker_right(ab, P.pr_left) == a &&
                       whisker_right(ab, P.pr_right) == b;
              });
            }
        }
  });

  return rep;
}

}  // namespace ziq
