// fflat: build function-field lattices, report invariants, search
// automorphisms and run the verification suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "fflat/autgroup.hpp"
#include "fflat/builders.hpp"
#include "fflat/errors.hpp"
#include "fflat/io.hpp"
#include "fflat/verify.hpp"

using namespace fflat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct BuildOptions {
  long long p = 0;
  std::string f;
  std::string curve;
  std::string places = "ramified-inert";
  int n = 0;
  bool rational = false;
  std::string named;
  long scale = 1;
  std::string out;
};

struct CommonOptions {
  std::size_t max_enum = kDefaultMaxEnum;
  std::size_t max_perm_dim = kDefaultMaxPermDim;
};

void emit(const Json& j, const std::string& out) {
  const std::string text = dump_canonical(j);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

std::string sidecar_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + ".places.json";
  return out.substr(0, dot) + ".places.json";
}

std::vector<long long> parse_coefficients(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw InvalidInput("bad coefficient '" + item + "'");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty coefficient list");
  return out;
}

HyperellipticModel model_from_options(const BuildOptions& o) {
  if (!o.curve.empty()) return curve_from_json(read_json_file(o.curve));
  if (o.p == 0 || o.f.empty()) throw InvalidInput("curve needs --p and --f, or --curve");
  if (o.p < 3 || o.p > 2147483647LL) throw InvalidInput("p must be an odd prime below 2^31");
  return HyperellipticModel(static_cast<std::uint32_t>(o.p), parse_coefficients(o.f));
}

int cmd_build(const BuildOptions& o) {
  LatticeBundle bundle;
  if (!o.named.empty()) {
    if (o.n < 1) throw InvalidInput("--named needs --n >= 1");
    if (o.scale < 1) throw InvalidInput("--scale must be positive");
    IntegerLattice l;
    if (o.named == "a")
      l = root_lattice_a(o.n);
    else if (o.named == "barnes")
      l = barnes_lattice(o.n);
    else
      throw InvalidInput("unknown named lattice '" + o.named + "'");
    emit(lattice_to_json(scale(l, o.scale)), o.out);
    return kExitOk;
  }
  if (o.rational) {
    if (o.n < 1) throw InvalidInput("--rational needs --n >= 1");
    bundle = build_rational_lattice(o.n);
  } else {
    const auto selector = parse_selector(o.places);
    if (!selector) throw InvalidInput("unknown selector '" + o.places + "'");
    if (*selector == Selector::RationalField) throw InvalidInput("use --rational --n for the rational field");
    bundle = build_ff_lattice(model_from_options(o), *selector);
  }
  emit(lattice_to_json(bundle.lattice), o.out);
  if (!o.out.empty()) emit(places_to_json(bundle.places), sidecar_path(o.out));
  return kExitOk;
}

int cmd_invariants(const std::string& path, const std::string& what, const CommonOptions& c, const std::string& out) {
  const IntegerLattice l = lattice_from_json(read_json_file(path));
  const std::set<std::string> known{"det2", "minimum2", "lambda2", "kissing", "well_rounded", "minimal_vector_basis"};
  std::set<std::string> want;
  std::stringstream ss(what);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!known.count(item)) throw InvalidInput("unknown invariant '" + item + "'");
    want.insert(item);
  }
  Json r;
  r["rank"] = l.rank();
  r["ambient_dim"] = l.ambient_dim();
  if (want.count("det2")) r["det2"] = int_to_json(gram_and_det2(l).det2);
  if (want.count("minimum2")) r["minimum2"] = int_to_json(minimum2(l, c.max_enum));
  if (want.count("lambda2")) {
    Json a = Json::array();
    for (const auto& x : successive_minima2(l, c.max_enum).lambda2) a.push_back(int_to_json(x));
    r["lambda2"] = a;
  }
  if (want.count("kissing")) r["kissing"] = int_to_json(kissing_number(l, c.max_enum));
  if (want.count("well_rounded")) r["well_rounded"] = is_well_rounded(l, c.max_enum);
  if (want.count("minimal_vector_basis")) {
    const BasisSearch s = minimal_vector_basis(l, 2'000'000, c.max_enum);
    if (s.basis) {
      Json rows = Json::array();
      for (const auto& row : *s.basis) {
        Json jr = Json::array();
        for (const auto& x : row) jr.push_back(int_to_json(x));
        rows.push_back(jr);
      }
      r["minimal_vector_basis"] = rows;
    } else {
      r["minimal_vector_basis"] = "NotFound";
    }
  }
  emit(r, out);
  return kExitOk;
}

int cmd_aut(const std::string& path, const std::string& mode, const CommonOptions& c, const std::string& out) {
  const IntegerLattice l = lattice_from_json(read_json_file(path));
  IsometryReport rep;
  if (mode == "perm")
    rep = perm_report(perm_stabilizer(l, c.max_perm_dim, c.max_enum));
  else if (mode == "full")
    rep = isometry_group_order(l, 12, 20'000, 50'000'000, c.max_enum);
  else
    throw InvalidInput("mode must be perm or full");
  emit(isometry_report_to_json(rep), out);
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& names, bool all, bool list, const CommonOptions& c,
               const std::string& out) {
  if (list) {
    Json a = Json::array();
    for (const auto& ch : verify_registry())
      a.push_back({{"name", ch.name}, {"criterion", ch.criterion}, {"statement", ch.statement}});
    emit(a, out);
    return kExitOk;
  }
  std::vector<const CheckInfo*> todo;
  if (all) {
    for (const auto& ch : verify_registry()) todo.push_back(&ch);
  } else {
    if (names.empty()) throw InvalidInput("verify needs --check, --all or --list");
    for (const auto& n : names) {
      const CheckInfo* ch = find_check(n);
      if (!ch) throw InvalidInput("unknown check '" + n + "'");
      todo.push_back(ch);
    }
  }
  VerifyOptions vo;
  vo.max_enum = c.max_enum;
  vo.max_perm_dim = c.max_perm_dim;
  Json results = Json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const CheckInfo* ch : todo) {
    const CheckResult r = run_check(*ch, vo);
    std::cerr << ch->name << ": " << to_string(r.status);
    if (!r.reason.empty()) std::cerr << " (" << r.reason << ")";
    std::cerr << "\n";
    results.push_back(check_result_to_json(r));
    if (r.status == CheckStatus::Pass) ++passed;
    if (r.status == CheckStatus::Fail) ++failed;
    if (r.status == CheckStatus::Skipped) ++skipped;
  }
  emit({{"checks", results}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}, out);
  return failed ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices from function fields of hyperelliptic and elliptic curves"};
  app.require_subcommand(1);
  CommonOptions common;
  std::string out;

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build a lattice and write canonical JSON");
  b->add_option("--p", build.p, "Odd prime");
  b->add_option("--f", build.f, "Ascending coefficients of f, comma separated");
  b->add_option("--curve", build.curve, "Curve JSON file {\"p\", \"f\"}");
  b->add_option("--places", build.places, "rational | elliptic | ramified-inert | all-rational");
  b->add_option("--n", build.n, "Rank for --rational and --named");
  b->add_flag("--rational", build.rational, "Rational function field with n+1 places");
  b->add_option("--named", build.named, "Named lattice: a | barnes");
  b->add_option("--scale", build.scale, "Scale factor for --named");
  b->add_option("--out", build.out, "Output file; places go to a .places.json sidecar");

  std::string inv_path, inv_what = "det2,minimum2,lambda2,kissing,well_rounded,minimal_vector_basis";
  auto* inv = app.add_subcommand("invariants", "Report lattice invariants");
  inv->add_option("lattice", inv_path, "Lattice JSON file")->required();
  inv->add_option("--what", inv_what, "Comma-separated invariants");

  std::string aut_path, aut_mode = "full";
  auto* au = app.add_subcommand("aut", "Automorphism group search");
  au->add_option("lattice", aut_path, "Lattice JSON file")->required();
  au->add_option("--mode", aut_mode, "perm | full");

  std::vector<std::string> checks;
  bool all = false, list = false;
  auto* ve = app.add_subcommand("verify", "Run named verification checks");
  ve->add_option("--check", checks, "Check name (repeatable)");
  ve->add_flag("--all", all, "Run every check");
  ve->add_flag("--list", list, "List checks with their criterion numbers");

  for (auto* sc : {inv, au, ve}) sc->add_option("--out", out, "Output file");
  for (auto* sc : {b, inv, au, ve}) {
    sc->add_option("--max-enum", common.max_enum, "Enumeration cap")->check(CLI::PositiveNumber);
    sc->add_option("--max-perm-dim", common.max_perm_dim, "Permutation search dimension cap")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*b) return cmd_build(build);
    if (*inv) return cmd_invariants(inv_path, inv_what, common, out);
    if (*au) return cmd_aut(aut_path, aut_mode, common, out);
    if (*ve) return cmd_verify(checks, all, list, common, out);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitInput;
}
