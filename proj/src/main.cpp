// ziqqurath — command-line front end for the ziq library.
//
// Subcommands operate on structured-text documents (see ziq/io.hpp for the
// schema).  Exit codes: 0 all requested checks pass, 1 a check failed
// (witnesses printed), 2 usage / parse / precondition errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ziq/exactness.hpp"
#include "ziq/gen.hpp"
#include "ziq/io.hpp"
#include "ziq/laws.hpp"

using namespace ziq;
namespace fs = std::filesystem;

namespace {

// Thrown after a failing report has been printed; mapped to exit code 1.
struct check_failed : std::runtime_error {
  check_failed() : std::runtime_error("check failed") {}
};

struct Options {
  bool json_out = false;
  bool no_validate = false;
  bool explicit_ids = false;
  std::string out;
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_flag("--json", opt.json_out, "emit machine-readable output");
  sub->add_flag("--no-validate", opt.no_validate,
                "skip axiom validation of loaded documents");
  sub->add_flag("--explicit-identities", opt.explicit_ids,
                "serialize full composition tables, identities included");
  sub->add_option("-o,--output", opt.out, "write the result document here");
}

// ---------------------------------------------------------------------------
// formatting helpers

std::string sizes_of(const NCat& C) {
  std::string s = "[";
  for (int k = 0; k <= C.n; ++k) s += (k ? "," : "") + std::to_string(C.size(k));
  return s + "]";
}

std::string cat_line(const NCat& C) {
  std::string s = (C.label.empty() ? std::string("(unnamed)") : C.label);
  s += "  dim=" + std::to_string(C.n) + "  cells=" + sizes_of(C);
  if (C.point) s += "  point=" + C.name_of(*C.point);
  return s;
}

std::string morphism_line(const Morphism& F) {
  std::string s = (F.label.empty() ? std::string("(unnamed)") : F.label);
  return s + ": " + (F.dom.label.empty() ? "?" : F.dom.label) + " " +
         sizes_of(F.dom) + " -> " + (F.cod.label.empty() ? "?" : F.cod.label) +
         " " + sizes_of(F.cod);
}

json cat_summary_json(const NCat& C) {
  json sz = json::array();
  for (int k = 0; k <= C.n; ++k) sz.push_back(C.size(k));
  json j = {{"label", C.label}, {"dim", C.n}, {"cells", sz}};
  if (C.point) j["point"] = C.name_of(*C.point);
  return j;
}

json report_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"axiom", x.axiom}, {"cells", x.cells}, {"detail", x.detail}});
  return {{"ok", r.ok},
          {"checked", r.checked},
          {"violations", v},
          {"notes", r.notes}};
}

void print_report(const std::string& head, const Report& r) {
  std::cout << head << ": " << (r.ok ? "ok" : "FAIL") << "  (" << r.checked
            << " instances checked)\n";
  for (const auto& v : r.violations) {
    std::cout << "  violation [" << v.axiom << "] " << v.detail << "\n";
    if (!v.cells.empty()) {
      std::cout << "    witness:";
      for (const auto& c : v.cells) std::cout << " " << c;
      std::cout << "\n";
    }
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

// Emits a report-style result: JSON and/or human text, exit code from ok.
int finish(const std::string& command, const Report& r, const Options& opt,
           json extra = json::object()) {
  json j = {{"kind", "report"}, {"command", command}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["report"] = report_json(r);
  if (!opt.out.empty()) save_document(opt.out, j);
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    print_report(command, r);
  return r.ok ? 0 : 1;
}

// Emits a produced document (category / functor / transformation).
void emit(const json& doc, const std::string& human, const Options& opt) {
  if (!opt.out.empty()) save_document(opt.out, doc);
  if (opt.json_out)
    std::cout << doc.dump(2) << "\n";
  else if (opt.out.empty())
    std::cout << human << "\n";
}

// ---------------------------------------------------------------------------
// loading helpers (validate unless --no-validate; refusal exits 1)

void refuse_if_invalid(const Report& r, const std::string& path,
                       const Options& opt) {
  if (opt.no_validate || r.ok) return;
  print_report("validate " + path, r);
  throw check_failed();
}

json load_kind(const std::string& path, const char* kind) {
  json j = load_document(path);
  std::string k = j.value("kind", "");
  if (k != kind)
    throw op_error("'" + path + "': expected a " + kind + " document, got '" +
                   k + "'");
  return j;
}

NCat load_ncat(const std::string& path, const Options& opt) {
  NCat C = ncat_from_json(load_kind(path, "ncat"));
  refuse_if_invalid(validate(C), path, opt);
  return C;
}

Morphism load_morphism(const std::string& path, const Options& opt) {
  Morphism F = morphism_from_json(load_kind(path, "nfunctor"),
                                  fs::path(path).parent_path());
  if (!opt.no_validate) {
    Report r = validate(F.dom);
    r.merge(validate(F.cod));
    r.merge(validate_morphism(F));
    refuse_if_invalid(r, path, opt);
  }
  return F;
}

Transf2 load_transf2(const std::string& path, const Options& opt) {
  Transf2 t = transf2_from_json(load_kind(path, "ntransformation"),
                                fs::path(path).parent_path());
  if (!opt.no_validate) {
    Report r = validate(t.F.dom);
    r.merge(validate(t.F.cod));
    r.merge(validate_morphism(t.F));
    r.merge(validate_morphism(t.G));
    r.merge(validate_transf2(t));
    refuse_if_invalid(r, path, opt);
  }
  return t;
}

// ---------------------------------------------------------------------------
// subcommand bodies

int cmd_validate(const std::string& path, const Options& opt) {
  json j = load_document(path);
  std::string kind = j.value("kind", "");
  fs::path base = fs::path(path).parent_path();
  Report r;
  if (kind == "ncat") {
    r = validate(ncat_from_json(j));
  } else if (kind == "nfunctor") {
    Morphism F = morphism_from_json(j, base);
    r = validate(F.dom);
    r.merge(validate(F.cod));
    r.merge(validate_morphism(F));
  } else if (kind == "ntransformation") {
    Transf2 t = transf2_from_json(j, base);
    r = validate(t.F.dom);
    r.merge(validate(t.F.cod));
    r.merge(validate_morphism(t.F));
    r.merge(validate_morphism(t.G));
    r.merge(validate_transf2(t));
  } else if (kind == "nmodification") {
    Transf3 m = transf3_from_json(j, base);
    r = validate_transf2(m.a);
    r.merge(validate_transf2(m.b));
    r.merge(validate_transf3(m));
  } else {
    throw op_error("validate: unknown document kind '" + kind + "'");
  }
  return finish("validate " + path, r, opt);
}

int cmd_structure(const std::string& which, const std::string& path,
                  const Options& opt) {
  json j = load_document(path);
  std::string kind = j.value("kind", "");
  fs::path base = fs::path(path).parent_path();
  if (kind == "ncat") {
    NCat C = ncat_from_json(j);
    refuse_if_invalid(validate(C), path, opt);
    NCat R = which == "pi0"   ? pi0(C)
             : which == "pi1" ? pi1(C)
                              : omega(C).pb.cat;
    emit(to_json(R, opt.explicit_ids), cat_line(R), opt);
    return 0;
  }
  if (kind == "nfunctor") {
    Morphism F = load_morphism(path, opt);
    Morphism R = which == "pi0"   ? pi0(F)
                 : which == "pi1" ? pi1(F)
                                  : omega(F);
    emit(to_json(R), morphism_line(R), opt);
    return 0;
  }
  if (kind == "ntransformation") {
    Transf2 t = load_transf2(path, opt);
    Transf2 R = which == "pi0"   ? pi0(t)
                : which == "pi1" ? pi1(t)
                                 : omega(t);
    emit(to_json(R), R.label + ": " + R.F.label + " => " + R.G.label, opt);
    return 0;
  }
  throw op_error(which + ": unsupported document kind '" + kind + "'");
}

int cmd_gen(const std::vector<std::string>& args, const Options& opt) {
  if (args.empty())
    throw op_error(
        "gen: missing fixture (terminal N | discrete K [N] | interval | "
        "pair-groupoid K | deloop SPEC M | quotient K D [M])");
  const std::string& f = args[0];
  auto want = [&](size_t lo, size_t hi) {
    if (args.size() - 1 < lo || args.size() - 1 > hi)
      throw op_error("gen: wrong number of arguments for '" + f + "'");
  };
  auto num = [&](size_t i) {
    try {
      return std::stoi(args.at(i));
    } catch (const std::exception&) {
      throw op_error("gen: '" + args.at(i) + "' is not a number");
    }
  };
  if (f == "quotient") {
    want(2, 3);
    Morphism q = quotient_functor(num(1), num(2), args.size() > 3 ? num(3) : 1);
    emit(to_json(q), morphism_line(q), opt);
    return 0;
  }
  NCat C;
  if (f == "terminal") {
    want(1, 1);
    C = terminal(num(1));
  } else if (f == "discrete") {
    want(1, 2);
    C = discrete(num(1), args.size() > 2 ? num(2) : 0);
  } else if (f == "interval") {
    want(0, 0);
    C = interval();
  } else if (f == "pair-groupoid" || f == "pair") {
    want(1, 1);
    C = pair_groupoid(num(1));
  } else if (f == "deloop" || f == "delooping") {
    want(2, 2);
    C = deloop(args[1], num(2));
  } else {
    throw op_error("gen: unknown fixture '" + f + "'");
  }
  emit(to_json(C, opt.explicit_ids), cat_line(C), opt);
  return 0;
}

json triple_json(const ExactTriple& t) {
  return {{"F", t.F.label},
          {"G", t.G.label},
          {"h_surjective", t.cls.h_surjective},
          {"faithful", t.cls.faithful},
          {"equivalence", t.cls.equivalence},
          {"exact", t.exact},
          {"witness", t.witness}};
}

void print_triple(const ExactTriple& t) {
  std::cout << "  " << (t.F.label.empty() ? "?" : t.F.label) << " ; "
            << (t.G.label.empty() ? "?" : t.G.label)
            << ": comparison h-surjective="
            << (t.cls.h_surjective ? "yes" : "no")
            << " faithful=" << (t.cls.faithful ? "yes" : "no")
            << "  =>  " << (t.exact ? "exact" : "INEXACT");
  if (!t.exact && !t.witness.empty()) std::cout << "  (missed: " << t.witness << ")";
  std::cout << "\n";
}

int cmd_exact(const std::string& pf, const std::string& pphi,
              const std::string& pg, const Options& opt) {
  Morphism F = load_morphism(pf, opt);
  Transf2 phi = load_transf2(pphi, opt);
  Morphism G = load_morphism(pg, opt);
  ExactTriple t = is_exact(F, phi, G);
  Report r = t.report;
  if (!t.exact)
    r.fail("exact", {t.witness},
           "kernel comparison is not h-surjective; sequence is not exact");
  if (!opt.json_out) print_triple(t);
  return finish("exact", r, opt, {{"triple", triple_json(t)}});
}

int cmd_connect(const std::string& path, const Options& opt) {
  Morphism F = load_morphism(path, opt);
  if (!F.dom.point) throw op_error("connect: domain is not pointed");
  ConnectingData c = connecting(F, *F.dom.point, *F.dom.point);
  if (!opt.json_out) {
    std::cout << "fiber:  " << cat_line(c.fiber.pb.cat) << "\n";
    std::cout << "paths:  " << cat_line(c.paths_C.pb.cat) << "\n";
    std::cout << "nabla:  " << morphism_line(c.nabla) << "\n";
    for (const auto& t : c.triples) print_triple(t);
  }
  json triples = json::array();
  for (const auto& t : c.triples) triples.push_back(triple_json(t));
  return finish("connect", c.report, opt,
                {{"fiber", cat_summary_json(c.fiber.pb.cat)},
                 {"paths", cat_summary_json(c.paths_C.pb.cat)},
                 {"triples", triples}});
}

int cmd_fibseq(const std::string& path, const Options& opt) {
  Morphism F = load_morphism(path, opt);
  FibrationSequence seq = fibration_sequence(F);
  if (!opt.json_out) {
    for (size_t i = 0; i < seq.nodes.size(); ++i) {
      std::cout << "node " << i << ": " << cat_line(seq.nodes[i]) << "\n";
      if (i < seq.arrows.size())
        std::cout << "   |  " << seq.arrows[i].label << "\n";
    }
    for (const auto& t : seq.triples) print_triple(t);
  }
  json nodes = json::array(), arrows = json::array(), triples = json::array();
  for (const auto& c : seq.nodes) nodes.push_back(cat_summary_json(c));
  for (const auto& a : seq.arrows) arrows.push_back(a.label);
  for (const auto& t : seq.triples) triples.push_back(triple_json(t));
  return finish(
      "fibseq", seq.report, opt,
      {{"nodes", nodes}, {"arrows", arrows}, {"triples", triples}});
}

int cmd_ziqqurath(const std::string& path, const Options& opt) {
  Morphism F = load_morphism(path, opt);
  Ziqqurath z = ziqqurath(F);
  json rows = json::array();
  for (const auto& row : z.rows) {
    if (!opt.json_out) std::cout << "row " << row.depth << ":\n";
    json objs = json::array(), arrows = json::array(), trs = json::array();
    for (size_t i = 0; i < row.objects.size(); ++i) {
      if (!opt.json_out)
        std::cout << "  " << cat_line(row.objects[i]) << "  ("
                  << row.annotations[i] << ")\n";
      json o = cat_summary_json(row.objects[i]);
      o["annotation"] = row.annotations[i];
      objs.push_back(o);
    }
    for (const auto& a : row.arrows) arrows.push_back(a.label);
    size_t exact_nodes = 0;
    for (const auto& t : row.triples) {
      trs.push_back(triple_json(t));
      if (t.exact) ++exact_nodes;
    }
    if (!opt.json_out)
      std::cout << "  exact at " << exact_nodes << "/" << row.triples.size()
                << " internal nodes\n";
    rows.push_back({{"depth", row.depth},
                    {"objects", objs},
                    {"arrows", arrows},
                    {"triples", trs}});
  }
  return finish("ziqqurath", z.report, opt, {{"rows", rows}});
}

int cmd_laws(const std::string& pc, const std::string& pd,
             const std::string& pe, long long budget, const Options& opt) {
  NCat C = load_ncat(pc, opt);
  NCat D = load_ncat(pd, opt);
  NCat E = load_ncat(pe, opt);
  LawReport lr = law_suite(C, D, E, budget);
  if (opt.json_out || !opt.out.empty()) {
    json arr = json::array();
    for (const auto& e : lr.laws)
      arr.push_back({{"law", e.name},
                     {"instances", e.instances},
                     {"failures", e.failures},
                     {"status", e.status()}});
    json j = {{"kind", "report"},
              {"command", "laws"},
              {"laws", arr},
              {"total_instances", lr.total_instances()},
              {"total_failures", lr.total_failures()},
              {"complete", lr.complete()},
              {"ok", lr.ok()}};
    if (!opt.out.empty()) save_document(opt.out, j);
    if (opt.json_out) std::cout << j.dump(2) << "\n";
  }
  if (!opt.json_out) std::cout << lr.summary();
  return lr.ok() ? 0 : 1;
}

int cmd_dot(const std::string& path, const std::vector<int>& dims,
            bool no_identities, const Options& opt) {
  NCat C = load_ncat(path, opt);
  std::string text = export_dot(C, dims, no_identities);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw op_error("cannot write '" + opt.out + "'");
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ziqqurath — finite strict n-categories: limits, homotopy invariants, "
      "exact sequences"};
  app.require_subcommand(1);
  Options opt;
  int code = 0;

  std::string file_a, file_b, file_c, arg_x, arg_y;
  std::vector<std::string> gen_args;
  std::vector<int> dims = {0, 1};
  bool no_identities = false;
  long long budget = 30000;

  auto* validate_c = app.add_subcommand(
      "validate", "check a document against the coherence axioms");
  validate_c->add_option("file", file_a, "document to check")->required();
  add_common(validate_c, opt);
  validate_c->callback([&] { code = cmd_validate(file_a, opt); });

  auto* hom_c =
      app.add_subcommand("hom", "hom (n-1)-category between two objects");
  hom_c->add_option("file", file_a, "ncat document")->required();
  hom_c->add_option("x", arg_x, "source object name")->required();
  hom_c->add_option("y", arg_y, "target object name")->required();
  add_common(hom_c, opt);
  hom_c->callback([&] {
    NCat C = load_ncat(file_a, opt);
    NCat H = hom(C, arg_x, arg_y);
    emit(to_json(H, opt.explicit_ids), cat_line(H), opt);
  });

  auto* product_c = app.add_subcommand("product", "binary product");
  product_c->add_option("a", file_a, "left factor (ncat)")->required();
  product_c->add_option("b", file_b, "right factor (ncat)")->required();
  add_common(product_c, opt);
  product_c->callback([&] {
    Product P = product(load_ncat(file_a, opt), load_ncat(file_b, opt));
    emit(to_json(P.cat, opt.explicit_ids), cat_line(P.cat), opt);
  });

  auto* hpb_c = app.add_subcommand("hpb", "h-pullback of a cospan F, G");
  hpb_c->add_option("F", file_a, "left leg (nfunctor)")->required();
  hpb_c->add_option("G", file_b, "right leg (nfunctor)")->required();
  add_common(hpb_c, opt);
  hpb_c->callback([&] {
    HPullback pb =
        h_pullback(load_morphism(file_a, opt), load_morphism(file_b, opt));
    json j = {{"kind", "hpullback"},
              {"cat", to_json(pb.cat, opt.explicit_ids)},
              {"p", to_json(pb.P)},
              {"q", to_json(pb.Q)},
              {"eps", to_json(pb.eps)}};
    emit(j, cat_line(pb.cat), opt);
  });

  auto* pb_c = app.add_subcommand("pb", "strict pullback of a cospan F, G");
  pb_c->add_option("F", file_a, "left leg (nfunctor)")->required();
  pb_c->add_option("G", file_b, "right leg (nfunctor)")->required();
  add_common(pb_c, opt);
  pb_c->callback([&] {
    SPullback pb =
        strict_pullback(load_morphism(file_a, opt), load_morphism(file_b, opt));
    json j = {{"kind", "pullback"},
              {"cat", to_json(pb.cat, opt.explicit_ids)},
              {"p", to_json(pb.P)},
              {"q", to_json(pb.Q)}};
    emit(j, cat_line(pb.cat), opt);
  });

  auto* hker_c =
      app.add_subcommand("hkernel", "h-kernel of a pointed functor");
  hker_c->add_option("F", file_a, "nfunctor document")->required();
  add_common(hker_c, opt);
  hker_c->callback([&] {
    HPullback pb = h_kernel(load_morphism(file_a, opt));
    json j = {{"kind", "hkernel"},
              {"cat", to_json(pb.cat, opt.explicit_ids)},
              {"q", to_json(pb.Q)},
              {"eps", to_json(pb.eps)}};
    emit(j, cat_line(pb.cat), opt);
  });

  for (const char* which : {"pi0", "pi1", "omega"}) {
    std::string name = which;
    std::string desc = name == "pi0"   ? "connected components functor"
                       : name == "pi1" ? "fundamental groupoid functor"
                                       : "loop space functor";
    auto* s = app.add_subcommand(name, desc);
    s->add_option("file", file_a, "ncat / nfunctor / ntransformation")
        ->required();
    add_common(s, opt);
    s->callback([&, name] { code = cmd_structure(name, file_a, opt); });
  }

  auto* eta_c = app.add_subcommand(
      "eta", "unit of the discretization adjunction, with triangle checks");
  eta_c->add_option("file", file_a, "ncat document")->required();
  add_common(eta_c, opt);
  eta_c->callback([&] {
    NCat C = load_ncat(file_a, opt);
    auto [unit_m, r] = eta_and_triangles(C);
    if (!opt.json_out) std::cout << morphism_line(unit_m) << "\n";
    code = finish("eta", r, opt, {{"eta", to_json(unit_m)}});
  });

  auto* laws_c = app.add_subcommand(
      "laws", "sesquifunctor law suite over a composable triple");
  laws_c->add_option("C", file_a, "first ncat")->required();
  laws_c->add_option("D", file_b, "second ncat")->required();
  laws_c->add_option("E", file_c, "third ncat")->required();
  laws_c->add_option("--budget", budget, "instance budget per law");
  add_common(laws_c, opt);
  laws_c->callback([&] { code = cmd_laws(file_a, file_b, file_c, budget, opt); });

  auto* grp_c =
      app.add_subcommand("groupoid", "test whether every cell is invertible");
  grp_c->add_option("file", file_a, "ncat document")->required();
  add_common(grp_c, opt);
  grp_c->callback(
      [&] { code = finish("groupoid", is_ngroupoid(load_ncat(file_a, opt)), opt); });

  auto* kv_c = app.add_subcommand(
      "kv", "Kapranov–Voevodsky style division conditions");
  kv_c->add_option("file", file_a, "ncat document")->required();
  add_common(kv_c, opt);
  kv_c->callback(
      [&] { code = finish("kv", kv_condition(load_ncat(file_a, opt)), opt); });

  auto* exact_c = app.add_subcommand(
      "exact", "test h-exactness of a triple (F, phi, G) at the middle");
  exact_c->add_option("F", file_a, "nfunctor document")->required();
  exact_c->add_option("phi", file_b, "ntransformation document")->required();
  exact_c->add_option("G", file_c, "nfunctor document")->required();
  add_common(exact_c, opt);
  exact_c->callback([&] { code = cmd_exact(file_a, file_b, file_c, opt); });

  auto* conn_c = app.add_subcommand(
      "connect", "fiber sequence data of a pointed functor (nabla, sigma)");
  conn_c->add_option("F", file_a, "nfunctor document")->required();
  add_common(conn_c, opt);
  conn_c->callback([&] { code = cmd_connect(file_a, opt); });

  auto* fib_c = app.add_subcommand(
      "fibseq", "eight-term fibration sequence of a pointed functor");
  fib_c->add_option("F", file_a, "nfunctor document")->required();
  add_common(fib_c, opt);
  fib_c->callback([&] { code = cmd_fibseq(file_a, opt); });

  auto* ziq_c = app.add_subcommand(
      "ziqqurath", "full tower of exact sequences of a pointed functor");
  ziq_c->add_option("F", file_a, "nfunctor document")->required();
  add_common(ziq_c, opt);
  ziq_c->callback([&] { code = cmd_ziqqurath(file_a, opt); });

  auto* gen_c = app.add_subcommand("gen", "generate a named fixture");
  gen_c->add_option("fixture", gen_args,
                    "terminal N | discrete K [N] | interval | pair-groupoid K "
                    "| deloop SPEC M | quotient K D [M]");
  add_common(gen_c, opt);
  gen_c->callback([&] { code = cmd_gen(gen_args, opt); });

  auto* dot_c = app.add_subcommand("dot", "export the 0/1/2-skeleton as DOT");
  dot_c->add_option("file", file_a, "ncat document")->required();
  dot_c->add_option("--dims", dims, "dimensions to render (subset of 0,1,2)")
      ->delimiter(',');
  dot_c->add_flag("--no-identities", no_identities, "suppress identity cells");
  add_common(dot_c, opt);
  dot_c->callback([&] { code = cmd_dot(file_a, dims, no_identities, opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const check_failed&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
