#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgpd/category.hpp"
#include "sgpd/correspondence.hpp"
#include "sgpd/enumeration.hpp"
#include "sgpd/examples.hpp"
#include "sgpd/inverse.hpp"
#include "sgpd/io.hpp"
#include "sgpd/lbec.hpp"
#include "sgpd/local_meet.hpp"
#include "sgpd/morphisms.hpp"
#include "sgpd/ordered.hpp"
#include "sgpd/report.hpp"
#include "sgpd/unary.hpp"

using namespace sgpd;
using nlohmann::json;

namespace {

StructureDoc load_structure(const std::string& path) {
  if (path.empty() || path == "-") return parse_structure(std::cin);
  return parse_structure_file(path);
}

UnaryStructure& as_sgpd(StructureDoc& doc) {
  if (!std::holds_alternative<UnaryStructure>(doc)) {
    throw InputError("this operation needs a sgpd document");
  }
  return std::get<UnaryStructure>(doc);
}

CatDoc& as_cat(StructureDoc& doc) {
  if (!std::holds_alternative<CatDoc>(doc)) {
    throw InputError("this operation needs a cat document");
  }
  return std::get<CatDoc>(doc);
}

int doc_size(const StructureDoc& doc) {
  if (std::holds_alternative<UnaryStructure>(doc)) {
    return std::get<UnaryStructure>(doc).size();
  }
  return std::get<CatDoc>(doc).cat.size();
}

BiorderedCategory to_biordered(const CatDoc& d) {
  if (d.leq_l) return {d.cat, *d.leq_l, *d.leq_r};
  if (d.leq) return {d.cat, *d.leq, *d.leq};
  OrderRel discrete = OrderRel::discrete(d.cat.size());
  return {d.cat, discrete, discrete};
}

OrderRel single_order(const CatDoc& d, const std::string& kind) {
  if (d.leq) return *d.leq;
  if (d.leq_l) {
    if (!(*d.leq_l == *d.leq_r)) throw InputError(kind + " needs a single order");
    return *d.leq_l;
  }
  return OrderRel::discrete(d.cat.size());
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json report_json(const Report& rep) {
  json out;
  out["pass"] = rep.pass();
  out["violations"] = json::array();
  for (const Violation& v : rep.violations()) {
    out["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"note", v.note}});
  }
  out["facts"] = json::object();
  for (const Fact& f : rep.facts()) out["facts"][f.name] = f.value;
  return out;
}

int finish(const Report& rep, bool machine, json extra = json::object()) {
  if (machine) {
    json out = report_json(rep);
    out.update(extra);
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [key, value] : extra.items()) {
      std::cout << key << " " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    std::cout << rep.to_text();
  }
  return rep.pass() ? 0 : 1;
}

std::string infer_kind(const StructureDoc& doc) {
  if (std::holds_alternative<UnaryStructure>(doc)) {
    const auto& u = std::get<UnaryStructure>(doc);
    if (u.plus && u.star) return "two-sided-ehresmann";
    if (u.plus) return "left-ehresmann";
    if (u.star) return "right-ehresmann";
    return "semigroupoid";
  }
  const auto& d = std::get<CatDoc>(doc);
  if (d.leq_l) return "lbec";
  if (d.leq) return "lic";
  return "category";
}

Report verify_kind(StructureDoc& doc, const std::string& kind) {
  auto unary_suite = [&](AxiomKind k) { return verify_structure(as_sgpd(doc), k); };
  if (kind == "semigroupoid") return check_associativity(as_sgpd(doc).table);
  if (kind == "left-ehresmann") return unary_suite(AxiomKind::LeftEhresmann);
  if (kind == "right-ehresmann") return unary_suite(AxiomKind::RightEhresmann);
  if (kind == "two-sided-ehresmann") return unary_suite(AxiomKind::TwoSidedEhresmann);
  if (kind == "left-restriction") return unary_suite(AxiomKind::LeftRestriction);
  if (kind == "right-restriction") return unary_suite(AxiomKind::RightRestriction);
  if (kind == "two-sided-restriction") return unary_suite(AxiomKind::TwoSidedRestriction);
  if (kind == "local-meet-semilattice") {
    return check_local_meet_semilattice(as_sgpd(doc).table).report;
  }
  if (kind == "inverse") {
    UnaryStructure& u = as_sgpd(doc);
    Report rep = check_associativity(u.table);
    InverseResult inv = check_inverse(u.table);
    rep.merge(inv.report);
    if (rep.pass() && inv.canonical) {
      for (Id s = 0; s < u.size(); ++s) {
        if (u.plus && (*u.plus)[s] != (*inv.canonical->plus)[s]) {
          rep.add("canonical-plus", {s}, "plus differs from s s'");
        }
        if (u.star && (*u.star)[s] != (*inv.canonical->star)[s]) {
          rep.add("canonical-star", {s}, "star differs from s' s");
        }
      }
    }
    return rep;
  }
  if (kind == "category") return check_category(as_cat(doc).cat);
  if (kind == "ordered") {
    CatDoc& d = as_cat(doc);
    return check_ordered(d.cat, single_order(d, kind), OrderedMode::Plain).report;
  }
  if (kind == "lbec") return check_lbec(to_biordered(as_cat(doc))).report;
  if (kind == "lic" || kind == "lig") {
    CatDoc& d = as_cat(doc);
    const LicGoal goal = kind == "lic" ? LicGoal::Category : LicGoal::Groupoid;
    return check_locally_inductive(d.cat, single_order(d, kind), goal).report;
  }
  throw InputError("unknown kind " + kind);
}

StructureClass parse_class(const std::string& name) {
  if (name == "semigroupoid") return StructureClass::Semigroupoid;
  if (name == "ehresmann") return StructureClass::Ehresmann;
  if (name == "restriction") return StructureClass::Restriction;
  if (name == "inverse") return StructureClass::Inverse;
  if (name == "lms" || name == "local-meet-semilattice") {
    return StructureClass::LocalMeetSemilattice;
  }
  if (name == "lbec") return StructureClass::Lbec;
  if (name == "lic") return StructureClass::Lic;
  if (name == "lig") return StructureClass::Lig;
  throw InputError("unknown class " + name);
}

StructureDoc to_doc(const EnumeratedStructure& e) {
  if (std::holds_alternative<UnaryStructure>(e)) return std::get<UnaryStructure>(e);
  const auto& bc = std::get<BiorderedCategory>(e);
  CatDoc d;
  d.cat = bc.cat;
  if (bc.leq_l == bc.leq_r) d.leq = bc.leq_l;
  else {
    d.leq_l = bc.leq_l;
    d.leq_r = bc.leq_r;
  }
  return d;
}

struct Options {
  std::string file = "-";
  std::string kind;
  std::string out;
  std::string map_path;
  std::string class_name;
  int size = 0;
  bool machine = false;
  bool dedup = false;
  bool inequality = false;
  int bx = -1;
  int chain = -1;
  bool z2 = false;
};

int run_verify(Options& opt) {
  StructureDoc doc = load_structure(opt.file);
  std::string kind = opt.kind.empty() ? infer_kind(doc) : opt.kind;
  Report rep = verify_kind(doc, kind);
  return finish(rep, opt.machine, {{"kind", kind}});
}

int run_classify(Options& opt) {
  StructureDoc doc = load_structure(opt.file);
  ClassifyResult res = classify(as_sgpd(doc));
  json extra = json::object();
  if (opt.machine) {
    extra["flags"] = {{"is_semigroupoid", res.flags.is_semigroupoid},
                      {"is_ehresmann", res.flags.is_ehresmann},
                      {"is_restriction", res.flags.is_restriction},
                      {"is_inverse", res.flags.is_inverse},
                      {"is_semigroup", res.flags.is_semigroup},
                      {"admits_category_structure", res.flags.admits_category_structure},
                      {"projections_meet_semilattice", res.flags.projections_meet_semilattice},
                      {"projections_locally_complete", res.flags.projections_locally_complete}};
  }
  return finish(res.report, opt.machine, extra);
}

int run_to_cat(Options& opt) {
  StructureDoc doc = load_structure(opt.file);
  BiorderedCategory bc = build_category(as_sgpd(doc));
  CatDoc out;
  out.cat = bc.cat;
  if (bc.leq_l == bc.leq_r) out.leq = bc.leq_l;
  else {
    out.leq_l = bc.leq_l;
    out.leq_r = bc.leq_r;
  }
  write_output(serialize_structure(out), opt.out);
  return 0;
}

int run_to_sgpd(Options& opt) {
  StructureDoc doc = load_structure(opt.file);
  UnaryStructure u = build_semigroupoid(to_biordered(as_cat(doc)));
  write_output(serialize_structure(u), opt.out);
  return 0;
}

int run_roundtrip(Options& opt) {
  StructureDoc doc = load_structure(opt.file);
  Report rep;
  if (std::holds_alternative<UnaryStructure>(doc)) {
    rep = roundtrip_verify(std::get<UnaryStructure>(doc));
  } else {
    rep = roundtrip_verify(to_biordered(std::get<CatDoc>(doc)));
  }
  return finish(rep, opt.machine);
}

int run_check_map(Options& opt) {
  MapDoc md;
  if (opt.map_path.empty() || opt.map_path == "-") md = parse_map(std::cin);
  else md = parse_map_file(opt.map_path);
  StructureDoc src = parse_structure_file(md.src_path);
  StructureDoc dst = parse_structure_file(md.dst_path);
  CarrierMap m = resolve_map(md, doc_size(src), doc_size(dst));

  const std::string& k = opt.kind;
  if (opt.inequality && k != "vee") throw InputError("--inequality only applies to kind vee");
  Report rep;
  if (k == "211" || k == "vee" || k == "wedge") {
    SgpdMapKind mk = k == "211"   ? SgpdMapKind::TwoOneOne
                     : k == "vee" ? SgpdMapKind::Vee
                                  : SgpdMapKind::Wedge;
    VeeVariant variant =
        opt.inequality ? VeeVariant::ProjectionInequality : VeeVariant::ProjectionEquality;
    rep = check_sgpd_map(as_sgpd(src), as_sgpd(dst), m, mk, variant);
  } else if (k == "ifunctor" || k == "ofunctor" || k == "iprefunctor") {
    CatMapKind mk = k == "ifunctor"   ? CatMapKind::Inductive
                    : k == "ofunctor" ? CatMapKind::Ordered
                                      : CatMapKind::Prefunctor;
    rep = check_cat_functor(to_biordered(as_cat(src)), to_biordered(as_cat(dst)), m, mk);
  } else if (k == "correspondence") {
    rep = verify_correspondence(as_sgpd(src), as_sgpd(dst), m).report;
  } else {
    throw InputError("unknown map kind " + k);
  }
  return finish(rep, opt.machine, {{"kind", k}});
}

int run_enumerate(Options& opt) {
  StructureClass cls = parse_class(opt.class_name);
  auto all = enumerate_structures(cls, opt.size, opt.dedup);
  std::vector<std::string> files;
  if (!opt.out.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.out);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::ostringstream name;
      name << opt.class_name << "-" << opt.size << "-" << std::setw(4) << std::setfill('0')
           << i << ".txt";
      fs::path p = fs::path(opt.out) / name.str();
      std::ofstream out(p);
      if (!out) throw InputError("cannot write " + p.string());
      out << serialize_structure(to_doc(all[i]));
      files.push_back(p.string());
    }
  }
  if (opt.machine) {
    json out = {{"class", opt.class_name},
                {"size", opt.size},
                {"dedup", opt.dedup},
                {"count", all.size()},
                {"files", files}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "count " << all.size() << "\n";
  }
  return 0;
}

int run_example(Options& opt) {
  int picked = (opt.bx >= 0) + (opt.chain >= 0) + opt.z2;
  if (picked != 1) throw InputError("pick exactly one of --bx, --chain, --z2");
  UnaryStructure u;
  if (opt.bx >= 0) u = relation_semigroup(opt.bx);
  else if (opt.chain >= 0) u = chain_semilattice(opt.chain);
  else u = cyclic_group_z2();
  write_output(serialize_structure(u), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker and constructor for Ehresmann semigroupoids and biordered categories"};
  app.require_subcommand(1);
  Options opt;

  auto* verify = app.add_subcommand("verify", "check the axioms of a structure file");
  verify->add_option("file", opt.file, "structure file, - for stdin");
  verify->add_option("--kind", opt.kind,
                     "semigroupoid | left/right/two-sided-ehresmann | "
                     "left/right/two-sided-restriction | local-meet-semilattice | inverse | "
                     "category | ordered | lbec | lic | lig (default: inferred)");
  verify->add_flag("--machine", opt.machine, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "classify a two-sided Ehresmann structure");
  classify_cmd->add_option("file", opt.file, "structure file, - for stdin");
  classify_cmd->add_flag("--machine", opt.machine, "JSON output");

  auto* to_cat = app.add_subcommand("to-cat", "construct the biordered category C(S)");
  to_cat->add_option("file", opt.file, "sgpd file, - for stdin");
  to_cat->add_option("-o,--out", opt.out, "output file (default stdout)");

  auto* to_sgpd = app.add_subcommand("to-sgpd", "construct the Ehresmann semigroupoid S(C)");
  to_sgpd->add_option("file", opt.file, "cat file, - for stdin");
  to_sgpd->add_option("-o,--out", opt.out, "output file (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "verify S(C(S)) = S resp. C(S(C)) = C");
  roundtrip->add_option("file", opt.file, "structure file, - for stdin");
  roundtrip->add_flag("--machine", opt.machine, "JSON output");

  auto* check_map = app.add_subcommand("check-map", "check a carrier map between two files");
  check_map->add_option("--map", opt.map_path, "map file, - for stdin")->required();
  check_map
      ->add_option("--kind", opt.kind,
                   "211 | vee | wedge | ifunctor | ofunctor | iprefunctor | correspondence")
      ->required();
  check_map->add_flag("--inequality", opt.inequality, "use the inequality form of vm2");
  check_map->add_flag("--machine", opt.machine, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate structures of a given size");
  enumerate
      ->add_option("--class", opt.class_name,
                   "semigroupoid | ehresmann | restriction | inverse | lms | lbec | lic | lig")
      ->required();
  enumerate->add_option("--size", opt.size, "carrier size")->required();
  enumerate->add_flag("--dedup", opt.dedup, "one representative per isomorphism class");
  enumerate->add_option("-o,--out", opt.out, "directory to write the structures into");
  enumerate->add_flag("--machine", opt.machine, "JSON output");

  auto* example = app.add_subcommand("example", "emit a built-in example structure");
  example->add_option("--bx", opt.bx, "binary relations on an x-element set (x = 1 or 2)");
  example->add_option("--chain", opt.chain, "chain meet-semilattice with n elements");
  example->add_flag("--z2", opt.z2, "two-element group");
  example->add_option("-o,--out", opt.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
    if (to_cat->parsed()) return run_to_cat(opt);
    if (to_sgpd->parsed()) return run_to_sgpd(opt);
    if (roundtrip->parsed()) return run_roundtrip(opt);
    if (check_map->parsed()) return run_check_map(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (example->parsed()) return run_example(opt);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n" << e.report.to_text();
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
