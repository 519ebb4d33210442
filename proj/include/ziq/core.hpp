#pragma once
//
// core.hpp
//
// Finite strict n-categories with canonical flat storage.
//
// A category is stored as an n-truncated reflexive globular set together with
// total composition tables: cells per dimension (identified by string names),
// single-step source/target maps, unit maps into the next dimension, and one
// table per pair (m, k) with m < k <= n giving the composite of two k-cells
// along their common m-boundary.  Everything is finite and value-semantic.
//
// This header provides the storage type, the exhaustive validator (every
// axiom instance is checked and failures are reported with cell witnesses,
// never thrown), boundary/unit/composition helpers, hom-categories, binary
// products, terminal objects, suspensions and a backtracking isomorphism
// search.  Higher structure (functors and beyond) lives in morphisms.hpp.
//

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ziq {

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ errors ~~~~

// Thrown for precondition violations on operations (bad arguments, missing
// structure).  Malformed *categories* are never reported this way: validate()
// returns a Report instead.
struct op_error : std::runtime_error {
  explicit op_error(const std::string& what) : std::runtime_error(what) {}
};

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ cells ~~~~

// A cell is addressed by (dimension, index into that dimension's table).
struct Cell {
  int dim = -1;
  int idx = -1;

  bool valid() const { return dim >= 0 && idx >= 0; }
  friend bool operator==(const Cell& a, const Cell& b) {
    return a.dim == b.dim && a.idx == b.idx;
  }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.idx < b.idx;
  }
};

inline long long pair_key(int i, int j) {
  return (static_cast<long long>(i) << 32) | static_cast<unsigned int>(j);
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ reports ~~~~

struct Violation {
  std::string axiom;               // stable identifier, e.g. "interchange"
  std::vector<std::string> cells;  // witness cell names (with dimensions)
  std::string detail;              // human-readable explanation
};

struct Report {
  bool ok = true;
  std::vector<Violation> violations;
  long long checked = 0;  // number of axiom instances examined
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxViolations = 64;

  void fail(std::string axiom, std::vector<std::string> cells,
            std::string detail) {
    ok = false;
    if (violations.size() < kMaxViolations)
      violations.push_back({std::move(axiom), std::move(cells),
                            std::move(detail)});
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
  void merge(const Report& other) {
    ok = ok && other.ok;
    checked += other.checked;
    for (const auto& v : other.violations)
      if (violations.size() < kMaxViolations) violations.push_back(v);
    for (const auto& s : other.notes) notes.push_back(s);
  }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
  std::string summary() const {
    std::ostringstream os;
    os << (ok ? "ok" : "FAIL") << " (" << checked << " instances checked";
    if (!ok) os << ", " << violations.size() << " violation(s) recorded";
    os << ")";
    for (const auto& v : violations) {
      os << "\n  [" << v.axiom << "]";
      for (const auto& c : v.cells) os << " " << c;
      if (!v.detail.empty()) os << " -- " << v.detail;
    }
    for (const auto& s : notes) os << "\n  note: " << s;
    return os.str();
  }
};

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ storage ~~~~

class NCat {
 public:
  int n = 0;                 // ambient dimension (cells live in dims 0..n)
  std::string label;         // informational only; ignored by equality
  std::optional<Cell> point; // base cell (dimension 0) if pointed

  // cells[k]   : names of the k-cells, index order is canonical
  // index[k]   : name -> index
  // src[k][i]  : for k >= 1, index of the source (k-1)-cell (src[0] empty)
  // tgt[k][i]  : likewise for targets
  // unit[k][i] : for k < n, index of the unit (k+1)-cell on cell i
  // comp[k][m] : for m < k, composite table of k-cells along dimension m
  std::vector<std::vector<std::string>> cells;
  std::vector<std::unordered_map<std::string, int>> index;
  std::vector<std::vector<int>> src, tgt, unit;
  std::vector<std::vector<std::unordered_map<long long, int>>> comp;

  NCat() { resize_dims(0); }
  explicit NCat(int dim, std::string lbl = "") : n(dim), label(std::move(lbl)) {
    if (dim < 0) throw op_error("NCat: negative dimension");
    resize_dims(dim);
  }

  void resize_dims(int dim) {
    n = dim;
    cells.assign(n + 1, {});
    index.assign(n + 1, {});
    src.assign(n + 1, {});
    tgt.assign(n + 1, {});
    unit.assign(n + 1, {});
    comp.assign(n + 1, {});
    for (int k = 0; k <= n; ++k) comp[k].assign(k, {});
  }

  int size(int k) const {
    return (k >= 0 && k <= n) ? static_cast<int>(cells[k].size()) : 0;
  }
  long long total_cells() const {
    long long t = 0;
    for (int k = 0; k <= n; ++k) t += size(k);
    return t;
  }

  Cell add_cell(int dim, const std::string& name) {
    if (dim < 0 || dim > n) throw op_error("add_cell: dimension out of range");
    if (name.empty()) throw op_error("add_cell: empty name");
    if (index[dim].count(name))
      throw op_error("add_cell: duplicate name '" + name + "' at dim " +
                     std::to_string(dim));
    int i = size(dim);
    cells[dim].push_back(name);
    index[dim].emplace(name, i);
    src[dim].push_back(-1);
    tgt[dim].push_back(-1);
    unit[dim].push_back(-1);
    return {dim, i};
  }

  bool has_cell(int dim, const std::string& name) const {
    return dim >= 0 && dim <= n && index[dim].count(name) > 0;
  }
  Cell cell(int dim, const std::string& name) const {
    if (!has_cell(dim, name))
      throw op_error("no cell '" + name + "' at dim " + std::to_string(dim));
    return {dim, index[dim].at(name)};
  }
  // Finds a cell by name in any dimension (errors if absent or ambiguous).
  Cell cell_named(const std::string& name) const {
    Cell found;
    for (int k = 0; k <= n; ++k)
      if (index[k].count(name)) {
        if (found.valid())
          throw op_error("cell name '" + name + "' is ambiguous across dims");
        found = {k, index[k].at(name)};
      }
    if (!found.valid()) throw op_error("no cell named '" + name + "'");
    return found;
  }
  const std::string& name_of(Cell c) const {
    check_cell(c);
    return cells[c.dim][c.idx];
  }
  std::string describe(Cell c) const {
    return name_of(c) + "@" + std::to_string(c.dim);
  }

  void set_bnd(Cell c, Cell s, Cell t) {
    check_cell(c);
    if (c.dim == 0) throw op_error("set_bnd: objects have no boundary");
    if (s.dim != c.dim - 1 || t.dim != c.dim - 1)
      throw op_error("set_bnd: boundary dimension mismatch");
    src[c.dim][c.idx] = s.idx;
    tgt[c.dim][c.idx] = t.idx;
  }
  void set_unit(Cell c, Cell u) {
    check_cell(c);
    if (c.dim >= n) throw op_error("set_unit: top cells have no unit");
    if (u.dim != c.dim + 1) throw op_error("set_unit: unit dimension mismatch");
    unit[c.dim][c.idx] = u.idx;
  }
  void set_comp(int m, Cell a, Cell b, Cell r) {
    if (a.dim != b.dim || r.dim != a.dim || m < 0 || m >= a.dim)
      throw op_error("set_comp: dimension mismatch");
    comp[a.dim][m][pair_key(a.idx, b.idx)] = r.idx;
  }

  bool has_comp(int m, Cell a, Cell b) const {
    if (a.dim != b.dim || m < 0 || m >= a.dim || a.dim > n) return false;
    return comp[a.dim][m].count(pair_key(a.idx, b.idx)) > 0;
  }
  Cell get_comp(int m, Cell a, Cell b) const {
    auto it = comp[a.dim][m].find(pair_key(a.idx, b.idx));
    if (it == comp[a.dim][m].end())
      throw op_error("missing composite " + describe(a) + " *" +
                     std::to_string(m) + " " + describe(b));
    return {a.dim, it->second};
  }

  Cell src_of(Cell c) const {
    check_cell(c);
    if (c.dim == 0 || src[c.dim][c.idx] < 0)
      throw op_error("src_of: no source for " + describe(c));
    return {c.dim - 1, src[c.dim][c.idx]};
  }
  Cell tgt_of(Cell c) const {
    check_cell(c);
    if (c.dim == 0 || tgt[c.dim][c.idx] < 0)
      throw op_error("tgt_of: no target for " + describe(c));
    return {c.dim - 1, tgt[c.dim][c.idx]};
  }
  Cell unit_of(Cell c) const {
    check_cell(c);
    if (c.dim >= n || unit[c.dim][c.idx] < 0)
      throw op_error("unit_of: no unit for " + describe(c));
    return {c.dim + 1, unit[c.dim][c.idx]};
  }

  // Iterated boundary down to dimension k.
  Cell bnd_src(Cell c, int k) const {
    while (c.dim > k) c = src_of(c);
    if (c.dim != k) throw op_error("bnd_src: cell below requested dim");
    return c;
  }
  Cell bnd_tgt(Cell c, int k) const {
    while (c.dim > k) c = tgt_of(c);
    if (c.dim != k) throw op_error("bnd_tgt: cell below requested dim");
    return c;
  }

  void check_cell(Cell c) const {
    if (c.dim < 0 || c.dim > n || c.idx < 0 || c.idx >= size(c.dim))
      throw op_error("invalid cell reference (dim " + std::to_string(c.dim) +
                     ", idx " + std::to_string(c.idx) + ")");
  }

  friend bool operator==(const NCat& A, const NCat& B) {
    if (A.n != B.n || A.cells != B.cells || A.src != B.src || A.tgt != B.tgt ||
        A.unit != B.unit || A.point != B.point)
      return false;
    // unordered_map comparison is order-insensitive, which is what we want.
    return A.comp == B.comp;
  }
  friend bool operator!=(const NCat& A, const NCat& B) { return !(A == B); }
};

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ units and composition ~~~~~~~~

// Iterated unit of c raised to dimension k >= dim(c).
inline Cell unit_cell(const NCat& C, Cell c, int k) {
  C.check_cell(c);
  if (k < c.dim) throw op_error("unit_cell: requested dim below cell dim");
  if (k > C.n) throw op_error("unit_cell: requested dim above ambient");
  while (c.dim < k) c = C.unit_of(c);
  return c;
}

// True when c is an iterated unit of some lower-dimensional cell.
inline bool is_unit(const NCat& C, Cell c) {
  if (c.dim == 0) return false;
  Cell s = C.src_of(c);
  if (s != C.tgt_of(c)) return false;
  return C.unit[s.dim][s.idx] == c.idx;
}

// Dimension-matched composition along dimension m: the lower-dimensional
// argument is raised with iterated units to the maximum of the two dimensions,
// then the stored table for that dimension is consulted.
inline Cell compose_cells(const NCat& C, int m, Cell a, Cell b) {
  int k = std::max(a.dim, b.dim);
  if (m < 0 || m >= k)
    throw op_error("compose_cells: need 0 <= m < max dim (m=" +
                   std::to_string(m) + ")");
  a = unit_cell(C, a, k);
  b = unit_cell(C, b, k);
  if (C.bnd_tgt(a, m) != C.bnd_src(b, m))
    throw op_error("compose_cells: boundary mismatch " + C.describe(a) + " *" +
                   std::to_string(m) + " " + C.describe(b));
  return C.get_comp(m, a, b);
}

// Short internal alias used pervasively by the pasting formulas.
inline Cell cm(const NCat& C, int m, Cell a, Cell b) {
  return compose_cells(C, m, a, b);
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ validation ~~~~

namespace detail {

// Structural pass: every index stored in the tables refers to an existing
// cell, names are unique and non-empty (uniqueness is enforced by add_cell,
// but data loaded from disk goes through here too).
inline void validate_shape(const NCat& C, Report& rep) {
  for (int k = 0; k <= C.n; ++k) {
    for (int i = 0; i < C.size(k); ++i) {
      const std::string tag = C.cells[k][i] + "@" + std::to_string(k);
      ++rep.checked;
      if (k >= 1) {
        if (C.src[k][i] < 0 || C.src[k][i] >= C.size(k - 1) ||
            C.tgt[k][i] < 0 || C.tgt[k][i] >= C.size(k - 1)) {
          rep.fail("shape/boundary", {tag}, "missing or dangling src/tgt");
          continue;
        }
      }
      if (k < C.n) {
        if (C.unit[k][i] < 0 || C.unit[k][i] >= C.size(k + 1))
          rep.fail("shape/unit", {tag}, "missing or dangling unit");
      }
    }
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : C.comp[k][m]) {
        ++rep.checked;
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        if (i < 0 || i >= C.size(k) || j < 0 || j >= C.size(k) || r < 0 ||
            r >= C.size(k))
          rep.fail("shape/comp", {"dim " + std::to_string(k)},
                   "composition entry with dangling cell index");
      }
  }
  if (C.point) {
    ++rep.checked;
    if (C.point->dim != 0 || C.point->idx < 0 || C.point->idx >= C.size(0))
      rep.fail("shape/point", {}, "base point is not a valid 0-cell");
  }
}

inline void validate_globular(const NCat& C, Report& rep) {
  for (int k = 2; k <= C.n; ++k)
    for (int i = 0; i < C.size(k); ++i) {
      Cell c{k, i};
      Cell s = C.src_of(c), t = C.tgt_of(c);
      ++rep.checked;
      if (C.src_of(s) != C.src_of(t) || C.tgt_of(s) != C.tgt_of(t))
        rep.fail("globular", {C.describe(c)},
                 "src/tgt of the two boundaries disagree");
    }
  for (int k = 0; k < C.n; ++k)
    for (int i = 0; i < C.size(k); ++i) {
      Cell c{k, i};
      Cell u{k + 1, C.unit[k][i]};
      if (u.idx < 0) continue;  // reported by shape pass
      ++rep.checked;
      if (C.src_of(u) != c || C.tgt_of(u) != c)
        rep.fail("reflexive", {C.describe(c)},
                 "unit cell does not start and end at its base");
    }
}

inline void validate_comp_tables(const NCat& C, Report& rep) {
  for (int k = 1; k <= C.n; ++k)
    for (int m = 0; m < k; ++m) {
      // Totality exactly on m-composable pairs.
      for (int i = 0; i < C.size(k); ++i)
        for (int j = 0; j < C.size(k); ++j) {
          Cell a{k, i}, b{k, j};
          bool composable = C.bnd_tgt(a, m) == C.bnd_src(b, m);
          bool present = C.comp[k][m].count(pair_key(i, j)) > 0;
          ++rep.checked;
          if (composable && !present)
            rep.fail("comp-missing", {C.describe(a), C.describe(b)},
                     "no composite along dim " + std::to_string(m));
          else if (!composable && present)
            rep.fail("comp-extraneous", {C.describe(a), C.describe(b)},
                     "table entry for a non-composable pair (dim " +
                         std::to_string(m) + ")");
        }
    }
}

// Lookup that reports failure by returning an invalid cell instead of
// throwing (used while auditing possibly-broken tables).
inline Cell cmSafe(const NCat& C, int m, Cell a, Cell b) {
  if (!a.valid() || !b.valid()) return {};
  int k = std::max(a.dim, b.dim);
  if (m < 0 || m >= k) return {};
  Cell ra = a, rb = b;
  while (ra.dim < k) {
    if (C.unit[ra.dim][ra.idx] < 0) return {};
    ra = {ra.dim + 1, C.unit[ra.dim][ra.idx]};
  }
  while (rb.dim < k) {
    if (C.unit[rb.dim][rb.idx] < 0) return {};
    rb = {rb.dim + 1, C.unit[rb.dim][rb.idx]};
  }
  if (!C.has_comp(m, ra, rb)) return {};
  auto it = C.comp[k][m].find(pair_key(ra.idx, rb.idx));
  return {k, it->second};
}

inline void validate_boundaries_of_composites(const NCat& C, Report& rep) {
  for (int k = 1; k <= C.n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, ridx] : C.comp[k][m]) {
        Cell a{k, static_cast<int>(key >> 32)};
        Cell b{k, static_cast<int>(key & 0xffffffffLL)};
        Cell r{k, ridx};
        if (C.bnd_tgt(a, m) != C.bnd_src(b, m)) continue;  // flagged already
        ++rep.checked;
        Cell es, et;
        if (m == k - 1) {
          es = C.src_of(a);
          et = C.tgt_of(b);
        } else {
          // One level down the pieces are still m-composable.
          es = cmSafe(C, m, C.src_of(a), C.src_of(b));
          et = cmSafe(C, m, C.tgt_of(a), C.tgt_of(b));
          if (!es.valid() || !et.valid()) continue;
        }
        if (k >= 1 && (C.src_of(r) != es || C.tgt_of(r) != et))
          rep.fail("boundary-of-composite",
                   {C.describe(a), C.describe(b), C.describe(r)},
                   "composite has wrong boundary along dim " +
                       std::to_string(m));
      }
}

inline void validate_units(const NCat& C, Report& rep) {
  // Unit laws, dimension-matched: e(s_m c) *m c = c = c *m e(t_m c).
  for (int k = 1; k <= C.n; ++k)
    for (int m = 0; m < k; ++m)
      for (int i = 0; i < C.size(k); ++i) {
        Cell c{k, i};
        Cell ls = C.bnd_src(c, m), rt = C.bnd_tgt(c, m);
        Cell left = cmSafe(C, m, ls, c);
        Cell right = cmSafe(C, m, c, rt);
        ++rep.checked;
        if (left != c)
          rep.fail("unit-law", {C.describe(c)},
                   "left unit law fails along dim " + std::to_string(m));
        ++rep.checked;
        if (right != c)
          rep.fail("unit-law", {C.describe(c)},
                   "right unit law fails along dim " + std::to_string(m));
      }
  // Units are multiplicative: e(a *m b) = e(a) *m e(b).
  for (int k = 1; k < C.n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [key, ridx] : C.comp[k][m]) {
        Cell a{k, static_cast<int>(key >> 32)};
        Cell b{k, static_cast<int>(key & 0xffffffffLL)};
        if (C.bnd_tgt(a, m) != C.bnd_src(b, m)) continue;
        if (C.unit[k][a.idx] < 0 || C.unit[k][b.idx] < 0 ||
            C.unit[k][ridx] < 0)
          continue;  // reported by shape pass
        ++rep.checked;
        Cell ua = C.unit_of(a), ub = C.unit_of(b);
        Cell ur = C.unit_of(Cell{k, ridx});
        if (cmSafe(C, m, ua, ub) != ur)
          rep.fail("unit-multiplicative", {C.describe(a), C.describe(b)},
                   "unit of composite differs from composite of units (dim " +
                       std::to_string(m) + ")");
      }
}

inline void validate_associativity(const NCat& C, Report& rep) {
  for (int k = 1; k <= C.n; ++k)
    for (int m = 0; m < k; ++m) {
      // Bucket cells by m-source for economical triple enumeration.
      std::unordered_map<int, std::vector<int>> by_src;
      for (int i = 0; i < C.size(k); ++i)
        by_src[C.bnd_src(Cell{k, i}, m).idx].push_back(i);
      for (int i = 0; i < C.size(k); ++i) {
        Cell a{k, i};
        auto itb = by_src.find(C.bnd_tgt(a, m).idx);
        if (itb == by_src.end()) continue;
        for (int j : itb->second) {
          Cell b{k, j};
          Cell ab = cmSafe(C, m, a, b);
          if (!ab.valid()) continue;
          auto itc = by_src.find(C.bnd_tgt(b, m).idx);
          if (itc == by_src.end()) continue;
          for (int l : itc->second) {
            Cell c{k, l};
            ++rep.checked;
            Cell lhs = cmSafe(C, m, ab, c);
            Cell bc = cmSafe(C, m, b, c);
            Cell rhs = bc.valid() ? cmSafe(C, m, a, bc) : Cell{};
            if (lhs != rhs || !lhs.valid())
              rep.fail("associativity",
                       {C.describe(a), C.describe(b), C.describe(c)},
                       "associativity fails along dim " + std::to_string(m));
          }
        }
      }
    }
}

inline void validate_interchange(const NCat& C, Report& rep) {
  for (int k = 2; k <= C.n; ++k)
    for (int q = 1; q < k; ++q)
      for (int p = 0; p < q; ++p) {
        // Collect q-composable pairs, then pair them p-composably.
        std::vector<std::pair<int, int>> qpairs;
        for (const auto& [key, ridx] : C.comp[k][q]) {
          (void)ridx;
          int i = static_cast<int>(key >> 32);
          int j = static_cast<int>(key & 0xffffffffLL);
          if (C.bnd_tgt(Cell{k, i}, q) == C.bnd_src(Cell{k, j}, q))
            qpairs.emplace_back(i, j);
        }
        for (const auto& [ci, cj] : qpairs) {
          Cell c{k, ci}, cp{k, cj};
          for (const auto& [di, dj] : qpairs) {
            Cell d{k, di}, dp{k, dj};
            if (C.bnd_tgt(c, p) != C.bnd_src(d, p)) continue;
            if (C.bnd_tgt(cp, p) != C.bnd_src(dp, p)) continue;
            ++rep.checked;
            Cell left = cmSafe(C, p, cmSafe(C, q, c, cp), cmSafe(C, q, d, dp));
            Cell right = cmSafe(C, q, cmSafe(C, p, c, d), cmSafe(C, p, cp, dp));
            if (left != right || !left.valid())
              rep.fail("interchange",
                       {C.describe(c), C.describe(cp), C.describe(d),
                        C.describe(dp)},
                       "interchange fails for dims (" + std::to_string(p) +
                           "," + std::to_string(q) + ")");
          }
        }
      }
}

}  // namespace detail

// Exhaustive validation of every axiom instance.  Malformed structure is
// reported with witnesses; nothing throws for semantic failures.
inline Report validate(const NCat& C) {
  Report rep;
  detail::validate_shape(C, rep);
  if (!rep.ok) return rep;  // index errors make further passes meaningless
  detail::validate_globular(C, rep);
  detail::validate_comp_tables(C, rep);
  detail::validate_boundaries_of_composites(C, rep);
  detail::validate_units(C, rep);
  detail::validate_associativity(C, rep);
  detail::validate_interchange(C, rep);
  return rep;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ morphisms ~~~~

// A (strict) n-functor between categories of equal ambient dimension, stored
// as per-dimension index maps.  Validation lives in morphisms.hpp.
struct Morphism {
  NCat dom, cod;
  std::vector<std::vector<int>> map;  // map[k][i] = image index at dim k
  std::string label;                  // informational; ignored by equality

  Cell apply(Cell c) const {
    dom.check_cell(c);
    return {c.dim, map[c.dim][c.idx]};
  }
  Cell operator()(Cell c) const { return apply(c); }

  friend bool operator==(const Morphism& F, const Morphism& G) {
    return F.dom == G.dom && F.cod == G.cod && F.map == G.map;
  }
  friend bool operator!=(const Morphism& F, const Morphism& G) {
    return !(F == G);
  }
};

inline Morphism identity_morphism(const NCat& C) {
  Morphism f;
  f.dom = C;
  f.cod = C;
  f.map.resize(C.n + 1);
  for (int k = 0; k <= C.n; ++k) {
    f.map[k].resize(C.size(k));
    for (int i = 0; i < C.size(k); ++i) f.map[k][i] = i;
  }
  f.label = "id";
  return f;
}

// The constant functor at a 0-cell: every k-cell goes to the iterated unit.
inline Morphism constant_morphism(const NCat& dom, const NCat& cod, Cell at) {
  cod.check_cell(at);
  if (at.dim != 0) throw op_error("constant_morphism: base must be a 0-cell");
  Morphism f;
  f.dom = dom;
  f.cod = cod;
  f.map.resize(dom.n + 1);
  for (int k = 0; k <= dom.n; ++k) {
    Cell u = unit_cell(cod, at, std::min(k, cod.n));
    if (k > cod.n) throw op_error("constant_morphism: dimension mismatch");
    f.map[k].assign(dom.size(k), u.idx);
  }
  f.label = "const(" + cod.name_of(at) + ")";
  return f;
}

// The zero morphism into a pointed category.
inline Morphism zero_morphism(const NCat& dom, const NCat& cod) {
  if (!cod.point) throw op_error("zero_morphism: codomain is not pointed");
  Morphism f = constant_morphism(dom, cod, *cod.point);
  f.label = "0";
  return f;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ hom categories ~~~~~

// hom(C, x, y): cells of dimension k+1 with 0-source x and 0-target y become
// k-cells; compositions shift down by one.  Cell names are preserved.
inline NCat hom(const NCat& C, Cell x, Cell y) {
  C.check_cell(x);
  C.check_cell(y);
  if (x.dim != 0 || y.dim != 0) throw op_error("hom: endpoints must be 0-cells");
  if (C.n == 0) throw op_error("hom: ambient dimension must be at least 1");
  NCat H(C.n - 1, "hom(" + C.label + ")");
  // old dim k+1 index -> new dim k index
  std::vector<std::unordered_map<int, int>> back(C.n + 1);
  for (int k = 1; k <= C.n; ++k)
    for (int i = 0; i < C.size(k); ++i) {
      Cell c{k, i};
      if (C.bnd_src(c, 0) == x && C.bnd_tgt(c, 0) == y) {
        Cell h = H.add_cell(k - 1, C.cells[k][i]);
        back[k][i] = h.idx;
      }
    }
  for (int k = 2; k <= C.n; ++k)
    for (const auto& [i, hi] : back[k]) {
      Cell c{k, i};
      H.set_bnd({k - 1, hi}, {k - 2, back[k - 1].at(C.src_of(c).idx)},
                {k - 2, back[k - 1].at(C.tgt_of(c).idx)});
    }
  for (int k = 1; k < C.n; ++k)
    for (const auto& [i, hi] : back[k])
      H.set_unit({k - 1, hi}, {k, back[k + 1].at(C.unit[k][i])});
  for (int k = 2; k <= C.n; ++k)
    for (int m = 1; m < k; ++m)
      for (const auto& [key, ridx] : C.comp[k][m]) {
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        auto ii = back[k].find(i), jj = back[k].find(j);
        if (ii == back[k].end() || jj == back[k].end()) continue;
        H.set_comp(m - 1, {k - 1, ii->second}, {k - 1, jj->second},
                   {k - 1, back[k].at(ridx)});
      }
  return H;
}

inline NCat hom(const NCat& C, const std::string& x, const std::string& y) {
  return hom(C, C.cell(0, x), C.cell(0, y));
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ product / terminal / etc ~~~~

inline std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "|" + b + ")";
}

struct Product {
  NCat cat;
  Morphism pr_left, pr_right;
};

inline Product product(const NCat& A, const NCat& B) {
  if (A.n != B.n) throw op_error("product: ambient dimensions differ");
  Product P;
  NCat& C = P.cat;
  C = NCat(A.n, "product");
  // Pair indexing: cell (i, j) gets index i * |B_k| + j.
  auto pidx = [&](int k, int i, int j) { return i * B.size(k) + j; };
  for (int k = 0; k <= A.n; ++k)
    for (int i = 0; i < A.size(k); ++i)
      for (int j = 0; j < B.size(k); ++j)
        C.add_cell(k, pair_name(A.cells[k][i], B.cells[k][j]));
  for (int k = 1; k <= A.n; ++k)
    for (int i = 0; i < A.size(k); ++i)
      for (int j = 0; j < B.size(k); ++j) {
        Cell a{k, i}, b{k, j};
        C.set_bnd({k, pidx(k, i, j)},
                  {k - 1, pidx(k - 1, A.src_of(a).idx, B.src_of(b).idx)},
                  {k - 1, pidx(k - 1, A.tgt_of(a).idx, B.tgt_of(b).idx)});
      }
  for (int k = 0; k < A.n; ++k)
    for (int i = 0; i < A.size(k); ++i)
      for (int j = 0; j < B.size(k); ++j)
        C.set_unit({k, pidx(k, i, j)},
                   {k + 1, pidx(k + 1, A.unit[k][i], B.unit[k][j])});
  for (int k = 1; k <= A.n; ++k)
    for (int m = 0; m < k; ++m)
      for (const auto& [ka, ra] : A.comp[k][m])
        for (const auto& [kb, rb] : B.comp[k][m]) {
          int ai = static_cast<int>(ka >> 32), aj = static_cast<int>(ka & 0xffffffffLL);
          int bi = static_cast<int>(kb >> 32), bj = static_cast<int>(kb & 0xffffffffLL);
          Cell x{k, pidx(k, ai, bi)}, y{k, pidx(k, aj, bj)};
          if (C.bnd_tgt(x, m) != C.bnd_src(y, m)) continue;
          C.set_comp(m, x, y, {k, pidx(k, ra, rb)});
        }
  if (A.point && B.point)
    C.point = Cell{0, pidx(0, A.point->idx, B.point->idx)};
  P.pr_left.dom = C;
  P.pr_left.cod = A;
  P.pr_left.label = "pr1";
  P.pr_right.dom = C;
  P.pr_right.cod = B;
  P.pr_right.label = "pr2";
  P.pr_left.map.resize(A.n + 1);
  P.pr_right.map.resize(A.n + 1);
  for (int k = 0; k <= A.n; ++k) {
    P.pr_left.map[k].resize(C.size(k));
    P.pr_right.map[k].resize(C.size(k));
    for (int i = 0; i < A.size(k); ++i)
      for (int j = 0; j < B.size(k); ++j) {
        P.pr_left.map[k][pidx(k, i, j)] = i;
        P.pr_right.map[k][pidx(k, i, j)] = j;
      }
  }
  return P;
}

inline NCat terminal(int n) {
  NCat T(n, "terminal");
  for (int k = 0; k <= n; ++k) T.add_cell(k, "*");
  for (int k = 1; k <= n; ++k) T.set_bnd({k, 0}, {k - 1, 0}, {k - 1, 0});
  for (int k = 0; k < n; ++k) T.set_unit({k, 0}, {k + 1, 0});
  for (int k = 1; k <= n; ++k)
    for (int m = 0; m < k; ++m) T.set_comp(m, {k, 0}, {k, 0}, {k, 0});
  return T;
}

inline std::string unit_name(const std::string& base) {
  return "id(" + base + ")";
}

// Suspension: two objects *0, *1; the cells of C reappear one dimension up as
// the cells from *0 to *1; the endo-homs on *0 and *1 contain only iterated
// units.  The result has ambient dimension C.n + 1.
inline NCat suspension_tilde(const NCat& C) {
  NCat S(C.n + 1, "susp(" + C.label + ")");
  Cell p0 = S.add_cell(0, "*0");
  Cell p1 = S.add_cell(0, "*1");
  std::vector<Cell> ch0{p0}, ch1{p1};  // unit chains on the two poles
  for (int k = 1; k <= S.n; ++k) {
    ch0.push_back(S.add_cell(k, unit_name(S.cells[k - 1][ch0[k - 1].idx])));
    ch1.push_back(S.add_cell(k, unit_name(S.cells[k - 1][ch1[k - 1].idx])));
  }
  // C-cells at dim k+1; remember index translation.
  std::vector<std::vector<int>> up(C.n + 1);
  for (int k = 0; k <= C.n; ++k) {
    up[k].resize(C.size(k));
    for (int i = 0; i < C.size(k); ++i) {
      if (S.has_cell(k + 1, C.cells[k][i]))
        throw op_error("suspension_tilde: name collision on '" +
                       C.cells[k][i] + "'");
      up[k][i] = S.add_cell(k + 1, C.cells[k][i]).idx;
    }
  }
  for (int k = 1; k <= S.n; ++k) {
    S.set_bnd(ch0[k], ch0[k - 1], ch0[k - 1]);
    S.set_bnd(ch1[k], ch1[k - 1], ch1[k - 1]);
  }
  for (int i = 0; i < C.size(0); ++i) S.set_bnd({1, up[0][i]}, p0, p1);
  for (int k = 1; k <= C.n; ++k)
    for (int i = 0; i < C.size(k); ++i) {
      Cell c{k, i};
      S.set_bnd({k + 1, up[k][i]}, {k, up[k - 1][C.src_of(c).idx]},
                {k, up[k - 1][C.tgt_of(c).idx]});
    }
  for (int k = 0; k < S.n; ++k) {
    S.set_unit(ch0[k], ch0[k + 1]);
    S.set_unit(ch1[k], ch1[k + 1]);
  }
  for (int k = 0; k < C.n; ++k)
    for (int i = 0; i < C.size(k); ++i)
      S.set_unit({k + 1, up[k][i]}, {k + 2, up[k + 1][C.unit[k][i]]});
  // Compositions along dims >= 1 are inherited from C (pole chains compose
  // with themselves); along dim 0 the unit laws force everything.
  for (int k = 2; k <= S.n; ++k)
    for (int m = 1; m < k; ++m) {
      for (const auto& [key, r] : C.comp[k - 1][m - 1]) {
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        S.set_comp(m, {k, up[k - 1][i]}, {k, up[k - 1][j]}, {k, up[k - 1][r]});
      }
      S.set_comp(m, ch0[k], ch0[k], ch0[k]);
      S.set_comp(m, ch1[k], ch1[k], ch1[k]);
    }
  for (int k = 1; k <= S.n; ++k) {
    S.set_comp(0, ch0[k], ch0[k], ch0[k]);
    S.set_comp(0, ch1[k], ch1[k], ch1[k]);
    for (int ci = 0; ci < C.size(k - 1); ++ci) {
      Cell z{k, up[k - 1][ci]};
      S.set_comp(0, ch0[k], z, z);
      S.set_comp(0, z, ch1[k], z);
    }
  }
  return S;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ isomorphism search ~~~~

// Backtracking search for an isomorphism A -> B commuting with src, tgt,
// units and composition.  Units follow their bases automatically, so only
// non-unit cells branch.  `budget` caps the number of search nodes.
inline std::optional<Morphism> iso_search(const NCat& A, const NCat& B,
                                          long long budget = 1000000) {
  if (A.n != B.n) return std::nullopt;
  for (int k = 0; k <= A.n; ++k)
    if (A.size(k) != B.size(k)) return std::nullopt;
  if (A.point.has_value() != B.point.has_value()) return std::nullopt;

  std::vector<std::vector<int>> map(A.n + 1);
  for (int k = 0; k <= A.n; ++k) map[k].assign(A.size(k), -1);
  std::vector<std::vector<bool>> used(A.n + 1);
  for (int k = 0; k <= A.n; ++k) used[k].assign(B.size(k), false);
  long long nodes = 0;

  auto check_dim_tables = [&](int k) {
    // All of dim <= k is assigned; verify the composition tables at dim k.
    for (int m = 0; m < k; ++m)
      for (const auto& [key, r] : A.comp[k][m]) {
        int i = static_cast<int>(key >> 32);
        int j = static_cast<int>(key & 0xffffffffLL);
        Cell bi{k, map[k][i]}, bj{k, map[k][j]};
        if (A.bnd_tgt(Cell{k, i}, m) != A.bnd_src(Cell{k, j}, m)) continue;
        if (!B.has_comp(m, bi, bj)) return false;
        if (B.get_comp(m, bi, bj).idx != map[k][r]) return false;
      }
    return true;
  };

  std::function<bool(int, int)> place = [&](int k, int i) -> bool {
    if (k > A.n) return true;
    if (i == A.size(k)) {
      if (!check_dim_tables(k)) return false;
      return place(k + 1, 0);
    }
    if (map[k][i] >= 0) return place(k, i + 1);  // already forced
    Cell a{k, i};
    for (int j = 0; j < B.size(k); ++j) {
      if (used[k][j]) continue;
      if (++nodes > budget) return false;
      Cell b{k, j};
      if (k >= 1 && (map[k - 1][A.src_of(a).idx] != B.src_of(b).idx ||
                     map[k - 1][A.tgt_of(a).idx] != B.tgt_of(b).idx))
        continue;
      if (A.point && k == 0 && i == A.point->idx && j != B.point->idx)
        continue;
      // Tentatively assign, propagating along unit chains.
      std::vector<std::pair<int, int>> placed;
      bool okchain = true;
      int ak = k, ai = i, bj = j;
      while (true) {
        map[ak][ai] = bj;
        used[ak][bj] = true;
        placed.emplace_back(ak, ai);
        if (ak >= A.n || A.unit[ak][ai] < 0 || B.unit[ak][bj] < 0) break;
        ai = A.unit[ak][ai];
        bj = B.unit[ak][bj];
        ++ak;
        if (map[ak][ai] >= 0) {  // already assigned: must agree
          okchain = map[ak][ai] == bj;
          break;
        }
        if (used[ak][bj]) {
          okchain = false;
          break;
        }
      }
      if (okchain && place(k, i + 1)) return true;
      for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
        used[it->first][map[it->first][it->second]] = false;
        map[it->first][it->second] = -1;
      }
    }
    return false;
  };

  if (!place(0, 0)) return std::nullopt;
  Morphism f;
  f.dom = A;
  f.cod = B;
  f.map = map;
  f.label = "iso";
  return f;
}

}  // namespace ziq
