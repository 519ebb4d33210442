#pragma once
//
// gen.hpp
//
// Constructors for the standard example categories used throughout the test
// suite and exposed by the command-line generator: discrete categories,
// the walking arrow, pair groupoids, deloopings of groups and monoids at any
// level, the chaotic (indiscrete) 2-groupoid on a group, and quotient
// functors between deloopings of cyclic groups.
//

#include <array>
#include <numeric>

#include "core.hpp"

namespace ziq {

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ multiplication tables ~~~~~

struct MulTable {
  std::string name;
  std::vector<std::string> elems;      // elems[0] must be the identity
  std::vector<std::vector<int>> mul;   // mul[i][j] = index of elems[i]*elems[j]

  int size() const { return static_cast<int>(elems.size()); }

  bool is_associative() const {
    int s = size();
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k)
          if (mul[mul[i][j]][k] != mul[i][mul[j][k]]) return false;
    return true;
  }
  bool is_unital() const {
    for (int i = 0; i < size(); ++i)
      if (mul[0][i] != i || mul[i][0] != i) return false;
    return true;
  }
  bool is_commutative() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (mul[i][j] != mul[j][i]) return false;
    return true;
  }
  bool is_group() const {
    for (int i = 0; i < size(); ++i) {
      bool inv = false;
      for (int j = 0; j < size(); ++j)
        if (mul[i][j] == 0 && mul[j][i] == 0) inv = true;
      if (!inv) return false;
    }
    return true;
  }
};

inline MulTable cyclic_table(int k) {
  if (k < 1) throw op_error("cyclic_table: order must be positive");
  MulTable t;
  t.name = "Z/" + std::to_string(k);
  for (int i = 0; i < k; ++i) t.elems.push_back("g" + std::to_string(i));
  t.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.mul[i][j] = (i + j) % k;
  return t;
}

inline MulTable klein_table() {
  MulTable t;
  t.name = "klein4";
  t.elems = {"g0", "g1", "g2", "g3"};
  t.mul.assign(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t.mul[i][j] = i ^ j;
  return t;
}

inline MulTable symmetric3_table() {
  MulTable t;
  t.name = "S3";
  // Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int s = static_cast<int>(perms.size());
  for (int i = 0; i < s; ++i) t.elems.push_back("g" + std::to_string(i));
  t.mul.assign(s, std::vector<int>(s));
  auto find = [&](const std::array<int, 3>& q) {
    for (int i = 0; i < s; ++i)
      if (perms[i] == q) return i;
    throw op_error("symmetric3_table: internal");
  };
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      std::array<int, 3> q;
      for (int x = 0; x < 3; ++x) q[x] = perms[i][perms[j][x]];
      t.mul[i][j] = find(q);
    }
  return t;
}

// The two-element monoid ({0,1}, max): unital and associative but not a
// group, so its delooping is a category that is not a groupoid.
inline MulTable max_monoid_table() {
  MulTable t;
  t.name = "M2";
  t.elems = {"g0", "g1"};
  t.mul = {{0, 1}, {1, 1}};
  return t;
}

// Parses "Z/k", "klein4", "S3" or "M2".
inline MulTable named_table(const std::string& spec) {
  if (spec.rfind("Z/", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(spec.substr(2));
    } catch (...) {
      throw op_error("named_table: bad cyclic order in '" + spec + "'");
    }
    return cyclic_table(k);
  }
  if (spec == "klein4") return klein_table();
  if (spec == "S3") return symmetric3_table();
  if (spec == "M2") return max_monoid_table();
  throw op_error("named_table: unknown group/monoid '" + spec + "'");
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ simple categories ~~~~~~

// k objects and nothing but iterated units above them.
inline NCat discrete(int k, int n = 0) {
  if (k < 0 || n < 0) throw op_error("discrete: bad parameters");
  NCat C(n, "discrete" + std::to_string(k));
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < k; ++i) {
      std::string nm = "x" + std::to_string(i);
      for (int r = 0; r < d; ++r) nm = unit_name(nm);
      C.add_cell(d, nm);
    }
  for (int d = 1; d <= n; ++d)
    for (int i = 0; i < k; ++i)
      C.set_bnd({d, i}, {d - 1, i}, {d - 1, i});
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < k; ++i) C.set_unit({d, i}, {d + 1, i});
  for (int d = 1; d <= n; ++d)
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < k; ++i) C.set_comp(m, {d, i}, {d, i}, {d, i});
  return C;
}

// The walking arrow a -> b: a 1-category that is not a groupoid.
inline NCat interval() {
  NCat C(1, "interval");
  Cell a = C.add_cell(0, "a");
  Cell b = C.add_cell(0, "b");
  Cell ia = C.add_cell(1, "id(a)");
  Cell ib = C.add_cell(1, "id(b)");
  Cell f = C.add_cell(1, "f");
  C.set_bnd(ia, a, a);
  C.set_bnd(ib, b, b);
  C.set_bnd(f, a, b);
  C.set_unit(a, ia);
  C.set_unit(b, ib);
  C.set_comp(0, ia, ia, ia);
  C.set_comp(0, ib, ib, ib);
  C.set_comp(0, ia, f, f);
  C.set_comp(0, f, ib, f);
  return C;
}

// The chaotic (pair) groupoid on k objects: exactly one arrow between any
// ordered pair of objects.
inline NCat pair_groupoid(int k) {
  if (k < 1) throw op_error("pair_groupoid: need at least one object");
  NCat C(1, "pair" + std::to_string(k));
  for (int i = 0; i < k; ++i) C.add_cell(0, "p" + std::to_string(i));
  auto aidx = [&](int i, int j) { return i * k + j; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cell c = C.add_cell(1, pair_name(C.cells[0][i], C.cells[0][j]));
      C.set_bnd(c, {0, i}, {0, j});
    }
  for (int i = 0; i < k; ++i) C.set_unit({0, i}, {1, aidx(i, i)});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        C.set_comp(0, {1, aidx(i, j)}, {1, aidx(j, l)}, {1, aidx(i, l)});
  C.point = Cell{0, 0};
  return C;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ deloopings ~~~~~~

// The m-fold delooping of a monoid: one cell in every dimension below m, the
// monoid elements at dimension m, all compositions given by the monoid
// operation.  For m >= 2 the interchange law forces commutativity, which is
// checked up front.  The result is pointed at its unique object.
inline NCat delooping_table(const MulTable& t, int m) {
  if (m < 1) throw op_error("delooping: level must be at least 1");
  if (!t.is_unital() || !t.is_associative())
    throw op_error("delooping: table is not a monoid (identity must be first)");
  if (m >= 2 && !t.is_commutative())
    throw op_error("delooping: level >= 2 requires a commutative table");
  NCat C(m, "B^" + std::to_string(m) + "(" + t.name + ")");
  std::string nm = "*";
  C.add_cell(0, nm);
  for (int d = 1; d < m; ++d) {
    nm = unit_name(nm);
    C.add_cell(d, nm);
  }
  for (int i = 0; i < t.size(); ++i) C.add_cell(m, t.elems[i]);
  for (int d = 1; d < m; ++d) C.set_bnd({d, 0}, {d - 1, 0}, {d - 1, 0});
  for (int i = 0; i < t.size(); ++i)
    C.set_bnd({m, i}, {m - 1, 0}, {m - 1, 0});
  for (int d = 0; d + 1 < m; ++d) C.set_unit({d, 0}, {d + 1, 0});
  if (m >= 1) C.set_unit({m - 1, 0}, {m, 0});  // unit is the monoid identity
  for (int d = 1; d < m; ++d)
    for (int mm = 0; mm < d; ++mm) C.set_comp(mm, {d, 0}, {d, 0}, {d, 0});
  for (int mm = 0; mm < m; ++mm)
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j)
        C.set_comp(mm, {m, i}, {m, j}, {m, t.mul[i][j]});
  C.point = Cell{0, 0};
  return C;
}

inline NCat deloop(const std::string& spec, int m) {
  return delooping_table(named_table(spec), m);
}

// The chaotic 2-groupoid on a group: one object, the group elements as
// 1-cells, and exactly one 2-cell between every ordered pair of 1-cells.
// Vertical composition concatenates, horizontal composition multiplies
// boundaries pointwise.  Useful because weak inverses here are plentiful
// and need not be strict.
inline NCat chaotic_deloop2(const MulTable& t) {
  if (!t.is_unital() || !t.is_associative() || !t.is_group())
    throw op_error("chaotic_deloop2: table must be a group");
  int s = t.size();
  NCat C(2, "chaotic2(" + t.name + ")");
  C.add_cell(0, "*");
  for (int i = 0; i < s; ++i) C.add_cell(1, t.elems[i]);
  auto two = [&](int x, int y) { return x * s + y; };
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      C.add_cell(2, "(" + t.elems[x] + "=>" + t.elems[y] + ")");
  for (int i = 0; i < s; ++i) C.set_bnd({1, i}, {0, 0}, {0, 0});
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) C.set_bnd({2, two(x, y)}, {1, x}, {1, y});
  C.set_unit({0, 0}, {1, 0});
  for (int i = 0; i < s; ++i) C.set_unit({1, i}, {2, two(i, i)});
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      C.set_comp(0, {1, i}, {1, j}, {1, t.mul[i][j]});
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z)
        C.set_comp(1, {2, two(x, y)}, {2, two(y, z)}, {2, two(x, z)});
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v)
          C.set_comp(0, {2, two(x, y)}, {2, two(u, v)},
                     {2, two(t.mul[x][u], t.mul[y][v])});
  C.point = Cell{0, 0};
  return C;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ quotient functors ~~~~~

// The reduction functor B^m(Z/k) -> B^m(Z/d) for d dividing k.
inline Morphism quotient_functor(int k, int d, int m = 1) {
  if (d < 1 || k < 1 || k % d != 0)
    throw op_error("quotient_functor: need d | k");
  Morphism F;
  F.dom = deloop("Z/" + std::to_string(k), m);
  F.cod = deloop("Z/" + std::to_string(d), m);
  F.map.resize(m + 1);
  for (int dd = 0; dd < m; ++dd) F.map[dd] = {0};
  F.map[m].resize(k);
  for (int i = 0; i < k; ++i) F.map[m][i] = i % d;
  F.label = "mod" + std::to_string(d);
  return F;
}

}  // namespace ziq
