#pragma once
//
// io.hpp
//
// JSON serialization for categories, functors, transformations and
// modifications, plus DOT export.  One schema for all kinds, discriminated
// by a "kind" key; canonical key ordering so that saving is deterministic
// and save(load(f)) is byte-identical.
//
// Composition tables are stored sparsely: entries forced by the strict unit
// laws (composing with the unit chain of the relevant boundary, or units
// composed with units) are omitted unless explicitly requested, and
// reconstructed on load.
//

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "core.hpp"
#include "morphisms.hpp"

namespace ziq {

using json = nlohmann::ordered_json;

namespace detail {

// Composites whose value is forced by the strict unit laws: one operand is
// the unit chain over the appropriate boundary of the other.
inline bool unit_forced(const NCat& C, int m, Cell a, Cell b) {
  return a == unit_cell(C, C.bnd_src(b, m), a.dim) ||
         b == unit_cell(C, C.bnd_tgt(a, m), b.dim);
}

// Reverse unit lookup: if c is the unit of some cell one dimension down,
// return that cell.
inline Cell unit_base(const NCat& C, Cell c) {
  if (c.dim == 0) return {};
  for (int i = 0; i < C.size(c.dim - 1); ++i)
    if (C.unit[c.dim - 1][i] == c.idx) return {c.dim - 1, i};
  return {};
}

inline std::string pair_key(const std::string& a, const std::string& b) {
  return a + "|" + b;
}

// Split "a|b" back into two cell names of dimension k.  Names may themselves
// contain '|' (pullback cells), so every split position is tried and must
// resolve to existing cells; exactly one split may qualify.
inline std::pair<Cell, Cell> split_pair_key(const NCat& C, int k,
                                            const std::string& key) {
  std::pair<Cell, Cell> out{{}, {}};
  int hits = 0;
  for (std::size_t p = 1; p + 1 < key.size() + 1; ++p) {
    if (key[p] != '|') continue;
    const std::string left = key.substr(0, p), right = key.substr(p + 1);
    if (C.has_cell(k, left) && C.has_cell(k, right)) {
      out = {C.cell(k, left), C.cell(k, right)};
      ++hits;
    }
  }
  if (hits == 0)
    throw op_error("composition key '" + key +
                   "' does not name a pair of dimension-" + std::to_string(k) +
                   " cells");
  if (hits > 1)
    throw op_error("composition key '" + key + "' is ambiguous");
  return out;
}

}  // namespace detail

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ categories ~~~~~~~~

inline json to_json(const NCat& C, bool explicit_identities = false) {
  json j;
  j["kind"] = "ncat";
  j["dim"] = C.n;
  if (!C.label.empty()) j["label"] = C.label;
  j["cells"] = json::array();
  for (int k = 0; k <= C.n; ++k) j["cells"].push_back(C.cells[k]);
  j["src"] = json::array();
  j["tgt"] = json::array();
  for (int k = 1; k <= C.n; ++k) {
    json s = json::object(), t = json::object();
    for (int i = 0; i < C.size(k); ++i) {
      s[C.cells[k][i]] = C.cells[k - 1][C.src[k][i]];
      t[C.cells[k][i]] = C.cells[k - 1][C.tgt[k][i]];
    }
    j["src"].push_back(std::move(s));
    j["tgt"].push_back(std::move(t));
  }
  j["id"] = json::array();
  for (int k = 0; k < C.n; ++k) {
    json u = json::object();
    for (int i = 0; i < C.size(k); ++i)
      u[C.cells[k][i]] = C.cells[k + 1][C.unit[k][i]];
    j["id"].push_back(std::move(u));
  }
  json comp = json::object();
  for (int k = 1; k <= C.n; ++k)
    for (int m = 0; m < k; ++m) {
      json table = json::object();
      for (int ia = 0; ia < C.size(k); ++ia)
        for (int ib = 0; ib < C.size(k); ++ib) {
          Cell a{k, ia}, b{k, ib};
          if (!C.has_comp(m, a, b)) continue;
          if (!explicit_identities) {
            if (detail::unit_forced(C, m, a, b)) continue;
            Cell ba = detail::unit_base(C, a), bb = detail::unit_base(C, b);
            if (ba.valid() && bb.valid() && m < k - 1 &&
                C.has_comp(m, ba, bb))
              continue;  // unit * unit = unit of the composite
          }
          table[detail::pair_key(C.cells[k][ia], C.cells[k][ib])] =
              C.cells[k][C.get_comp(m, a, b).idx];
        }
      if (!table.empty())
        comp[std::to_string(m) + "," + std::to_string(k)] = std::move(table);
    }
  j["comp"] = std::move(comp);
  if (C.point) j["point"] = C.name_of(*C.point);
  return j;
}

inline NCat ncat_from_json(const json& j) {
  if (j.value("kind", "") != "ncat")
    throw op_error("document is not an ncat (kind = '" +
                   j.value("kind", "<missing>") + "')");
  const int n = j.at("dim").get<int>();
  if (n < 0) throw op_error("ncat: negative dimension");
  NCat C(n, j.value("label", ""));
  const json& cells = j.at("cells");
  if (static_cast<int>(cells.size()) != n + 1)
    throw op_error("ncat: expected " + std::to_string(n + 1) +
                   " cell lists, found " + std::to_string(cells.size()));
  for (int k = 0; k <= n; ++k)
    for (const auto& nm : cells[k]) C.add_cell(k, nm.get<std::string>());
  for (int k = 1; k <= n; ++k) {
    const json& s = j.at("src").at(k - 1);
    const json& t = j.at("tgt").at(k - 1);
    for (int i = 0; i < C.size(k); ++i) {
      const std::string& nm = C.cells[k][i];
      if (!s.contains(nm) || !t.contains(nm))
        throw op_error("ncat: missing boundary for cell '" + nm + "'");
      C.set_bnd({k, i}, C.cell(k - 1, s.at(nm).get<std::string>()),
                C.cell(k - 1, t.at(nm).get<std::string>()));
    }
  }
  for (int k = 0; k < n; ++k) {
    const json& u = j.at("id").at(k);
    for (int i = 0; i < C.size(k); ++i) {
      const std::string& nm = C.cells[k][i];
      if (!u.contains(nm))
        throw op_error("ncat: missing identity for cell '" + nm + "'");
      C.set_unit({k, i}, C.cell(k + 1, u.at(nm).get<std::string>()));
    }
  }
  for (const auto& [dirkey, table] : j.at("comp").items()) {
    const auto comma = dirkey.find(',');
    if (comma == std::string::npos)
      throw op_error("ncat: malformed composition key '" + dirkey + "'");
    const int m = std::stoi(dirkey.substr(0, comma));
    const int k = std::stoi(dirkey.substr(comma + 1));
    if (m < 0 || k < 1 || k > n || m >= k)
      throw op_error("ncat: composition direction out of range in '" +
                     dirkey + "'");
    for (const auto& [pk, res] : table.items()) {
      auto [a, b] = detail::split_pair_key(C, k, pk);
      if (!C.has_cell(k, res.get<std::string>()))
        throw op_error("ncat: composite '" + res.get<std::string>() +
                       "' in entry '" + pk + "' is not a dimension-" +
                       std::to_string(k) + " cell");
      C.set_comp(m, a, b, C.cell(k, res.get<std::string>()));
    }
  }
  // Reconstruct the unit-forced entries that sparse saving omits, bottom-up
  // so that unit*unit entries can consult the completed lower table.
  for (int k = 1; k <= n; ++k)
    for (int m = 0; m < k; ++m)
      for (int ia = 0; ia < C.size(k); ++ia)
        for (int ib = 0; ib < C.size(k); ++ib) {
          Cell a{k, ia}, b{k, ib};
          if (C.has_comp(m, a, b)) continue;
          if (!(C.bnd_tgt(a, m) == C.bnd_src(b, m))) continue;
          if (a == unit_cell(C, C.bnd_src(b, m), k))
            C.set_comp(m, a, b, b);
          else if (b == unit_cell(C, C.bnd_tgt(a, m), k))
            C.set_comp(m, a, b, a);
          else {
            Cell ba = detail::unit_base(C, a), bb = detail::unit_base(C, b);
            if (ba.valid() && bb.valid() && m < k - 1 &&
                C.has_comp(m, ba, bb))
              C.set_comp(m, a, b,
                         {k, C.unit[k - 1][C.get_comp(m, ba, bb).idx]});
          }
        }
  if (j.contains("point"))
    C.point = C.cell(0, j.at("point").get<std::string>());
  return C;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ functors, transformations, mods ~~~~~~~~~

inline json to_json(const Morphism& F, bool explicit_identities = false) {
  json j;
  j["kind"] = "nfunctor";
  if (!F.label.empty()) j["label"] = F.label;
  j["dom"] = to_json(F.dom, explicit_identities);
  j["cod"] = to_json(F.cod, explicit_identities);
  j["map"] = json::array();
  for (int k = 0; k <= F.dom.n; ++k) {
    json mk = json::object();
    for (int i = 0; i < F.dom.size(k); ++i)
      mk[F.dom.cells[k][i]] = F.cod.cells[k][F.map[k][i]];
    j["map"].push_back(std::move(mk));
  }
  return j;
}

inline json to_json(const Transf2& t, bool explicit_identities = false) {
  json j;
  j["kind"] = "ntransformation";
  if (!t.label.empty()) j["label"] = t.label;
  j["dom"] = to_json(t.F, explicit_identities);
  j["cod"] = to_json(t.G, explicit_identities);
  j["comp"] = json::array();
  for (int k = 0; k + 1 <= t.dom().n; ++k) {
    json ck = json::object();
    for (int i = 0; i < t.dom().size(k); ++i)
      ck[t.dom().cells[k][i]] = t.cod().cells[k + 1][t.comp[k][i]];
    j["comp"].push_back(std::move(ck));
  }
  return j;
}

inline json to_json(const Transf3& t, bool explicit_identities = false) {
  json j;
  j["kind"] = "nmodification";
  if (!t.label.empty()) j["label"] = t.label;
  j["dom"] = to_json(t.a, explicit_identities);
  j["cod"] = to_json(t.b, explicit_identities);
  j["comp"] = json::array();
  for (int k = 0; k + 2 <= t.dom().n; ++k) {
    json ck = json::object();
    for (int i = 0; i < t.dom().size(k); ++i)
      ck[t.dom().cells[k][i]] = t.cod().cells[k + 2][t.comp[k][i]];
    j["comp"].push_back(std::move(ck));
  }
  return j;
}

inline json load_document(const std::filesystem::path& path);

namespace detail {

// Structure documents may reference their (co)domain either inline or by a
// path to another document, resolved relative to the referencing file.
inline NCat resolve_ncat(const json& j, const std::filesystem::path& base) {
  if (j.is_string())
    return ncat_from_json(
        load_document(base / j.get<std::string>()));
  return ncat_from_json(j);
}

}  // namespace detail

inline Morphism morphism_from_json(const json& j,
                                   const std::filesystem::path& base = {}) {
  if (j.value("kind", "") != "nfunctor")
    throw op_error("document is not an nfunctor (kind = '" +
                   j.value("kind", "<missing>") + "')");
  Morphism F;
  F.label = j.value("label", "");
  F.dom = detail::resolve_ncat(j.at("dom"), base);
  F.cod = detail::resolve_ncat(j.at("cod"), base);
  const json& map = j.at("map");
  if (static_cast<int>(map.size()) != F.dom.n + 1)
    throw op_error("nfunctor: expected " + std::to_string(F.dom.n + 1) +
                   " map levels, found " + std::to_string(map.size()));
  F.map.resize(F.dom.n + 1);
  for (int k = 0; k <= F.dom.n; ++k) {
    F.map[k].resize(F.dom.size(k));
    for (int i = 0; i < F.dom.size(k); ++i) {
      const std::string& nm = F.dom.cells[k][i];
      if (!map[k].contains(nm))
        throw op_error("nfunctor: missing image for cell '" + nm + "'");
      F.map[k][i] = F.cod.cell(k, map[k].at(nm).get<std::string>()).idx;
    }
  }
  return F;
}

namespace detail {

inline Morphism resolve_morphism(const json& j,
                                 const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path p = base / j.get<std::string>();
    return morphism_from_json(load_document(p), p.parent_path());
  }
  return morphism_from_json(j, base);
}

}  // namespace detail

inline Transf2 transf2_from_json(const json& j,
                                 const std::filesystem::path& base = {}) {
  if (j.value("kind", "") != "ntransformation")
    throw op_error("document is not an ntransformation (kind = '" +
                   j.value("kind", "<missing>") + "')");
  Transf2 t;
  t.label = j.value("label", "");
  t.F = detail::resolve_morphism(j.at("dom"), base);
  t.G = detail::resolve_morphism(j.at("cod"), base);
  if (!(t.F.dom == t.G.dom) || !(t.F.cod == t.G.cod))
    throw op_error("ntransformation: functors are not parallel");
  const json& comp = j.at("comp");
  const int n = t.dom().n;
  if (static_cast<int>(comp.size()) != n)
    throw op_error("ntransformation: expected " + std::to_string(n) +
                   " component levels, found " + std::to_string(comp.size()));
  t.comp.resize(n);
  for (int k = 0; k < n; ++k) {
    t.comp[k].resize(t.dom().size(k));
    for (int i = 0; i < t.dom().size(k); ++i) {
      const std::string& nm = t.dom().cells[k][i];
      if (!comp[k].contains(nm))
        throw op_error("ntransformation: missing component for cell '" + nm +
                       "'");
      t.comp[k][i] =
          t.cod().cell(k + 1, comp[k].at(nm).get<std::string>()).idx;
    }
  }
  return t;
}

inline Transf3 transf3_from_json(const json& j,
                                 const std::filesystem::path& base = {}) {
  if (j.value("kind", "") != "nmodification")
    throw op_error("document is not an nmodification (kind = '" +
                   j.value("kind", "<missing>") + "')");
  Transf3 t;
  t.label = j.value("label", "");
  auto load_transf = [&](const json& e) {
    if (e.is_string()) {
      std::filesystem::path p = base / e.get<std::string>();
      return transf2_from_json(load_document(p), p.parent_path());
    }
    return transf2_from_json(e, base);
  };
  t.a = load_transf(j.at("dom"));
  t.b = load_transf(j.at("cod"));
  const json& comp = j.at("comp");
  const int n = t.dom().n;
  if (static_cast<int>(comp.size()) != std::max(0, n - 1))
    throw op_error("nmodification: expected " +
                   std::to_string(std::max(0, n - 1)) +
                   " component levels, found " + std::to_string(comp.size()));
  t.comp.resize(std::max(0, n - 1));
  for (int k = 0; k + 1 < n; ++k) {
    t.comp[k].resize(t.dom().size(k));
    for (int i = 0; i < t.dom().size(k); ++i) {
      const std::string& nm = t.dom().cells[k][i];
      if (!comp[k].contains(nm))
        throw op_error("nmodification: missing component for cell '" + nm +
                       "'");
      t.comp[k][i] =
          t.cod().cell(k + 2, comp[k].at(nm).get<std::string>()).idx;
    }
  }
  return t;
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ files ~~~~~~~~~~~~~~~

inline json load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw op_error("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw op_error("parse error in '" + path.string() + "': " + e.what());
  }
}

inline void save_document(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out)
    throw op_error("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

// ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~ DOT export ~~~~~~~~~~

// Deterministic DOT rendering: objects as nodes, 1-cells as edges, 2-cells
// as edge-to-edge annotation comments.  `dims` selects which layers appear
// and may only mention 0, 1 and 2.
inline std::string export_dot(const NCat& C, const std::vector<int>& dims,
                              bool skip_identities = false) {
  bool want[3] = {false, false, false};
  for (int d : dims) {
    if (d < 0 || d > 2)
      throw op_error("export_dot: only dimensions 0, 1, 2 can be drawn");
    want[d] = true;
  }
  std::ostringstream os;
  os << "digraph \"" << (C.label.empty() ? "ncat" : C.label) << "\" {\n";
  if (want[0])
    for (int i = 0; i < C.size(0); ++i)
      os << "  \"" << C.cells[0][i] << "\";\n";
  if (want[1] && C.n >= 1)
    for (int i = 0; i < C.size(1); ++i) {
      if (skip_identities && detail::unit_base(C, {1, i}).valid()) continue;
      os << "  \"" << C.cells[0][C.src[1][i]] << "\" -> \""
         << C.cells[0][C.tgt[1][i]] << "\" [label=\"" << C.cells[1][i]
         << "\"];\n";
    }
  if (want[2] && C.n >= 2)
    for (int i = 0; i < C.size(2); ++i) {
      if (skip_identities && detail::unit_base(C, {2, i}).valid()) continue;
      os << "  // 2-cell \"" << C.cells[2][i] << "\": \""
         << C.cells[1][C.src[2][i]] << "\" => \"" << C.cells[1][C.tgt[2][i]]
         << "\"\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace ziq
