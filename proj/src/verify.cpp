#include "fflat/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "fflat/autgroup.hpp"
#include "fflat/builders.hpp"
#include "fflat/errors.hpp"

namespace fflat {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

void CheckContext::expect(bool ok, const std::string& what) {
  if (!ok) failures_.push_back(what);
}

// ---------------------------------------------------------------- fixtures

IntMat f11_reference_basis() {
  std::vector<std::vector<long long>> rows{{-7, 1, 1, 1, 1, 1, 1, 1, 0, 0}};
  for (std::size_t k = 2; k < 10; ++k) {
    std::vector<long long> r(10, 0);
    r[0] = -2;
    r[k] = 2;
    rows.push_back(r);
  }
  return from_ll(rows);
}

HyperellipticModel f11_curve() { return HyperellipticModel(11, {9, 0, 2, 4, 9, 3, 5, 1}); }

std::vector<long long> poly_from_roots(std::uint32_t p, const std::vector<long long>& roots, long long lead) {
  const PrimeField F(p);
  FpPoly f = FpPoly::constant(F, lead);
  for (long long a : roots) f = f * FpPoly::linear_root(F, F.reduce(a));
  std::vector<long long> out;
  for (auto c : f.coeffs()) out.push_back(c);
  return out;
}

HyperellipticModel f7_genus2_split_curve() { return HyperellipticModel(7, poly_from_roots(7, {0, 1, 2, 3, 4})); }
HyperellipticModel f5_elliptic_curve() { return HyperellipticModel(5, {1, 1, 0, 1}); }
HyperellipticModel f37_genus2_curve() { return HyperellipticModel(37, {3, 1, 0, 0, 0, 1}); }

namespace {

Json ints_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Residue smallest_nonresidue(const PrimeField& F) {
  for (Residue a = 2; a < F.modulus(); ++a)
    if (legendre_symbol(a, F) == -1) return a;
  return 0;
}

// ---------------------------------------------------------------- non-split scan

// Squarefree, non-split polynomials of a given degree over F_p with leading
// coefficient in {1, nonresidue} and, when p does not divide the degree,
// vanishing subleading coefficient. Grouped by place counts (r, s).
struct ScanClass {
  int r = 0;
  int s = 0;
  std::vector<long long> f;
  long long count = 0;
};

struct ScanResult {
  std::uint32_t p = 0;
  int degree = 0;
  long long scanned = 0;
  long long accepted = 0;
  long long single_place = 0;  // r + s = 1: rank-0 lattice, excluded
  std::map<std::pair<int, int>, ScanClass> classes;
};

ScanResult scan_nonsplit(std::uint32_t p, int deg) {
  const PrimeField F(p);
  std::vector<int> legendre(p), inv(p, 0);
  for (Residue a = 0; a < p; ++a) {
    legendre[a] = legendre_symbol(a, F);
    if (a) inv[a] = static_cast<int>(F.inv(a));
  }
  ScanResult res;
  res.p = p;
  res.degree = deg;
  const bool depress = deg % static_cast<int>(p) != 0;
  const Residue leads[2] = {1, smallest_nonresidue(F)};
  std::array<std::uint32_t, 8> c{};
  std::vector<int> free_idx;
  for (int i = 0; i < deg; ++i)
    if (!(depress && i == deg - 1)) free_idx.push_back(i);

  // gcd(f, f') == 1 on fixed arrays
  auto squarefree = [&]() {
    std::array<int, 8> a{}, b{};
    int da = deg, db = deg - 1;
    for (int i = 0; i <= deg; ++i) a[i] = static_cast<int>(c[i]);
    for (int i = 0; i < deg; ++i) b[i] = static_cast<int>((static_cast<std::uint64_t>(i + 1) * c[i + 1]) % p);
    while (db >= 0 && b[db] == 0) --db;
    if (db < 0) return false;
    const int P = static_cast<int>(p);
    while (db >= 0) {
      while (da >= db) {
        const int q = static_cast<int>(static_cast<long long>(a[da]) * inv[b[db]] % P);
        for (int i = 0; i <= db; ++i) a[da - db + i] = (a[da - db + i] + P - q * b[i] % P) % P;
        while (da >= 0 && a[da] == 0) --da;
        if (da < 0) break;
      }
      std::swap(a, b);
      std::swap(da, db);
    }
    return da == 0;
  };

  for (Residue lead : leads) {
    c.fill(0);
    c[deg] = lead;
    for (;;) {
      ++res.scanned;
      int roots = 0, s = 0;
      for (Residue x = 0; x < p; ++x) {
        std::uint64_t v = c[deg];
        for (int i = deg - 1; i >= 0; --i) v = (v * x + c[i]) % p;
        const int l = legendre[v];
        if (l == 0) ++roots;
        if (l == -1) ++s;
      }
      if (roots < deg && squarefree()) {
        ++res.accepted;
        auto& cls = res.classes[{roots + 1, s}];
        if (cls.count++ == 0) {
          cls.r = roots + 1;
          cls.s = s;
          cls.f.assign(c.begin(), c.begin() + deg + 1);
        }
      }
      std::size_t k = 0;
      while (k < free_idx.size() && ++c[free_idx[k]] == p) c[free_idx[k++]] = 0;
      if (k == free_idx.size()) break;
    }
  }
  return res;
}

struct ClassCheck {
  std::uint32_t p;
  int degree;
  ScanClass cls;
  bool equals_2an = false;
  Int det2, expected_det2, h0, index;
};

struct NonsplitSurvey {
  std::vector<ScanResult> scans;
  std::vector<ClassCheck> checks;
};

const NonsplitSurvey& nonsplit_survey() {
  static NonsplitSurvey survey;
  static std::once_flag once;
  std::call_once(once, [] {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
      for (int deg : {5, 7}) {
        ScanResult sr = scan_nonsplit(p, deg);
        for (const auto& [key, cls] : sr.classes) {
          if (cls.r + cls.s < 2) {
            sr.single_place += cls.count;
            continue;
          }
          ClassCheck cc{p, deg, cls, false, 0, 0, 0, 0};
          const HyperellipticModel model(p, cls.f);
          const LatticeBundle b = build_ff_lattice(model, Selector::RamifiedInert);
          const int n = static_cast<int>(b.lattice.rank());
          cc.equals_2an = lattice_equal(b.lattice, scale(root_lattice_a(n), 2));
          cc.det2 = gram_and_det2(b.lattice).det2;
          cc.expected_det2 = pow2(2UL * static_cast<unsigned long>(n)) * (n + 1);
          cc.index = index_in(b.lattice, root_lattice_a(n));
          cc.h0 = derived_h0(b.lattice, b.places.degrees());
          survey.checks.push_back(std::move(cc));
        }
        survey.scans.push_back(std::move(sr));
      }
  });
  return survey;
}

// ---------------------------------------------------------------- checks

void check_rational_an(CheckContext& ctx) {
  Json rows = Json::array();
  for (int n = 2; n <= 20; ++n) {
    const LatticeBundle b = build_rational_lattice(n);
    const Int det2 = gram_and_det2(b.lattice).det2;
    const Int mu = minimum2(b.lattice, ctx.options().max_enum);
    const bool wr = is_well_rounded(b.lattice, ctx.options().max_enum);
    const bool eq = lattice_equal(b.lattice, root_lattice_a(n));
    ctx.expect(eq, "rational lattice differs from A_" + std::to_string(n));
    ctx.expect(det2 == n + 1, "det2 of A_" + std::to_string(n));
    ctx.expect(mu == 2, "minimum2 of A_" + std::to_string(n));
    ctx.expect(wr, "A_" + std::to_string(n) + " not well-rounded");
    rows.push_back({{"n", n}, {"equal_An", eq}, {"det2", int_to_json(det2)}, {"minimum2", int_to_json(mu)},
                    {"well_rounded", wr}});
  }
  ctx.details()["cases"] = rows;
}

void check_hyper_2an(CheckContext& ctx) {
  const auto& sv = nonsplit_survey();
  Json scans = Json::array();
  for (const auto& sr : sv.scans)
    scans.push_back({{"p", sr.p}, {"degree", sr.degree}, {"scanned", sr.scanned}, {"nonsplit_squarefree", sr.accepted},
                     {"rank0_excluded", sr.single_place},
                     {"place_classes", sr.classes.size()}});
  Json rows = Json::array();
  for (const auto& cc : sv.checks) {
    const std::string tag = "p=" + std::to_string(cc.p) + " deg=" + std::to_string(cc.degree) +
                            " r=" + std::to_string(cc.cls.r) + " s=" + std::to_string(cc.cls.s);
    ctx.expect(cc.equals_2an, tag + ": lattice differs from 2A_n");
    ctx.expect(cc.det2 == cc.expected_det2, tag + ": det2 differs from 4^n(n+1)");
    ctx.expect(cc.h0 == pow2(static_cast<unsigned long>(cc.cls.r - 1)), tag + ": h0 differs from 2^(r-1)");
    rows.push_back({{"p", cc.p}, {"degree", cc.degree}, {"r", cc.cls.r}, {"s", cc.cls.s}, {"polynomials", cc.cls.count},
                    {"equals_2An", cc.equals_2an}, {"det2", int_to_json(cc.det2)}, {"h0", int_to_json(cc.h0)}});
  }
  ctx.details()["scans"] = scans;
  ctx.details()["classes"] = rows;
}

void check_hyper_g3_split(CheckContext& ctx) {
  const auto model = f11_curve();
  const LatticeBundle b = build_ff_lattice(model, Selector::RamifiedInert);
  const IntegerLattice ref(f11_reference_basis());
  const bool eq = lattice_equal(b.lattice, ref);
  const Int mu = minimum2(b.lattice, ctx.options().max_enum);
  const bool wr = is_well_rounded(b.lattice, ctx.options().max_enum);
  const BasisSearch mvb = minimal_vector_basis(b.lattice, 2'000'000, ctx.options().max_enum);
  const Int idx = index_in(b.lattice, root_lattice_a(9));
  const Int h0 = derived_h0(b.lattice, b.places.degrees());
  ctx.expect(eq, "builder output differs from the printed basis");
  ctx.expect(mu == 8, "minimum2 != 8");
  ctx.expect(wr, "not well-rounded");
  ctx.expect(mvb.basis.has_value(), "no minimal-vector basis found");
  ctx.expect(idx == 256, "index in A_9 != 256");
  ctx.expect(h0 == 64, "h0 != 64");
  bool has_vstar = false;
  if (mvb.basis) {
    const IntVec vstar = from_ll({{-1, -1, -1, -1, -1, -1, -1, -1, 0, 0}})[0];
    for (const auto& row : *mvb.basis) {
      IntVec neg(row);
      for (auto& x : neg) x = -x;
      if (row == vstar || neg == vstar) has_vstar = true;
    }
  }
  ctx.details() = {{"equal_printed_basis", eq},
                   {"minimum2", int_to_json(mu)},
                   {"well_rounded", wr},
                   {"minimal_vector_basis", mvb.basis.has_value()},
                   {"basis_contains_v_star", has_vstar},
                   {"index_in_A9", int_to_json(idx)},
                   {"h0", int_to_json(h0)},
                   {"places", places_to_json(b.places)}};
}

void check_hyper_g2_minima(CheckContext& ctx) {
  const auto model = f7_genus2_split_curve();
  const LatticeBundle b = build_ff_lattice(model, Selector::RamifiedInert);
  const MinimaProfile prof = successive_minima2(b.lattice, ctx.options().max_enum);
  const bool wr = is_well_rounded(b.lattice, ctx.options().max_enum);
  const BasisSearch mvb = minimal_vector_basis(b.lattice, 2'000'000, ctx.options().max_enum);
  const std::vector<Int> expected{6, 6, 6, 6, 6, 8};
  ctx.expect(prof.lambda2 == expected, "lambda2 differs from (6,6,6,6,6,8)");
  ctx.expect(!wr, "lattice is well-rounded");
  ctx.expect(!mvb.basis.has_value(), "a minimal-vector basis was found");
  ctx.details() = {{"lambda2", ints_to_json(prof.lambda2)},
                   {"well_rounded", wr},
                   {"minimal_vector_basis", mvb.basis ? "found" : "NotFound"},
                   {"r", b.places.r},
                   {"s", b.places.s}};
}

void check_hyper_det_h0(CheckContext& ctx) {
  const auto& sv = nonsplit_survey();
  Json rows = Json::array();
  std::size_t genus2_jacobians = 0;
  for (const auto& cc : sv.checks) {
    const int n = cc.cls.r + cc.cls.s - 1;
    const std::string tag = "p=" + std::to_string(cc.p) + " deg=" + std::to_string(cc.degree) +
                            " r=" + std::to_string(cc.cls.r) + " s=" + std::to_string(cc.cls.s);
    const Int scaled = pow2(static_cast<unsigned long>(cc.cls.s)) * cc.h0;
    ctx.expect(cc.h0 == pow2(static_cast<unsigned long>(cc.cls.r - 1)), tag + ": h0 != 2^(r-1)");
    ctx.expect(cc.det2 == scaled * scaled * (n + 1), tag + ": det2 != (n+1)(2^s h0)^2");
    Json row = {{"p", cc.p}, {"degree", cc.degree}, {"r", cc.cls.r}, {"s", cc.cls.s}, {"h0", int_to_json(cc.h0)}};
    if (cc.degree == 5) {
      const long long h = class_number(HyperellipticModel(cc.p, cc.cls.f), ctx.options().jacobian);
      ++genus2_jacobians;
      ctx.expect(h % cc.h0.get_si() == 0, tag + ": h0 does not divide the class number");
      row["class_number"] = h;
    }
    rows.push_back(std::move(row));
  }
  const auto model = f11_curve();
  const LatticeBundle b = build_ff_lattice(model, Selector::RamifiedInert);
  const Int h0 = derived_h0(b.lattice, b.places.degrees());
  const Int det2 = gram_and_det2(b.lattice).det2;
  const Int scaled = pow2(static_cast<unsigned long>(b.places.s)) * h0;
  ctx.expect(h0 == pow2(2UL * static_cast<unsigned long>(model.genus())), "split F_11 curve: h0 != 2^(2g)");
  ctx.expect(det2 == scaled * scaled * static_cast<unsigned long>(b.places.size()), "split F_11 curve: det2 mismatch");
  ctx.details() = {{"nonsplit_classes", rows},
                   {"genus2_class_numbers_checked", genus2_jacobians},
                   {"split_f11", {{"h0", int_to_json(h0)}, {"det2", int_to_json(det2)}}}};
}

void check_hyper_rational_minima(CheckContext& ctx) {
  const auto model = f11_curve();
  const LatticeBundle b = build_ff_lattice(model, Selector::HyperellipticAllRational, ctx.options().jacobian);
  const MinimaProfile prof = successive_minima2(b.lattice, ctx.options().max_enum);
  ctx.expect(b.lattice.rank() == 11, "rank != 11");
  ctx.expect(b.places.t == 2 && b.places.r == 8, "expected t = 2 and r = 8");
  if (prof.lambda2.size() == 11) {
    ctx.expect(prof.lambda2[0] == 4, "lambda_1^2 != 4");
    for (std::size_t i = 1; i <= 8; ++i)
      ctx.expect(prof.lambda2[i] == 6, "lambda_" + std::to_string(i + 1) + "^2 != 6");
    for (std::size_t i = 9; i < 11; ++i)
      ctx.expect(prof.lambda2[i] >= 8, "lambda_" + std::to_string(i + 1) + "^2 < 8");
  }
  // vectors shorter than 2g+2 agree on every split pair
  const auto shorts = enumerate_short(b.lattice, 7, ctx.options().max_enum);
  std::size_t violations = 0;
  for (const auto& v : shorts)
    for (std::size_t i = 0; i + 1 < b.places.size(); ++i) {
      const auto& a = b.places.places[i];
      const auto& c = b.places.places[i + 1];
      if (a.kind == PlaceKind::Split && a.sheet == 1 && c.kind == PlaceKind::Split && c.x == a.x && v.v[i] != v.v[i + 1])
        ++violations;
    }
  ctx.expect(violations == 0, "split-pair coordinate property violated");
  ctx.details() = {{"lambda2", ints_to_json(prof.lambda2)},
                   {"rank", b.lattice.rank()},
                   {"vectors_below_8", shorts.size()},
                   {"split_pair_violations", violations},
                   {"places", places_to_json(b.places)}};
}

void check_elliptic_barnes(CheckContext& ctx) {
  const auto model = f5_elliptic_curve();
  const PointGroup pg = elliptic_point_group(model);
  long long max_order = 0;
  for (auto o : pg.element_orders) max_order = std::max(max_order, o);
  const bool cyclic9 = pg.points.size() == 9 && max_order == 9;
  ctx.details()["points"] = pg.points.size();
  ctx.details()["max_element_order"] = max_order;
  if (!cyclic9) throw ResourceLimit("point group is not cyclic of order 9");
  const LatticeBundle b = build_ff_lattice(model, Selector::EllipticAllRational);
  // coordinate of place k moves to its residue in Z/9
  std::vector<std::uint32_t> im;
  for (const auto& e : pg.embedding) im.push_back(static_cast<std::uint32_t>(e.at(0)));
  const Permutation relabel(im);
  IntMat rows;
  for (const auto& row : b.lattice.basis()) {
    IntVec w(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) w[relabel(i)] = row[i];
    rows.push_back(std::move(w));
  }
  const bool eq = lattice_equal(IntegerLattice(rows), barnes_lattice(8));
  const Int det2 = gram_and_det2(b.lattice).det2;
  const Int mu = minimum2(b.lattice, ctx.options().max_enum);
  ctx.expect(eq, "relabelled lattice differs from B_8");
  ctx.expect(det2 == 729, "det2 != 729");
  ctx.expect(mu == 4, "minimum2 != 4");
  ctx.details()["equals_B8"] = eq;
  ctx.details()["det2"] = int_to_json(det2);
  ctx.details()["minimum2"] = int_to_json(mu);
  ctx.details()["group"] = pg.group.to_string();
}

void check_elliptic_aut_subgroup(CheckContext& ctx) {
  const auto model = f5_elliptic_curve();
  const PointGroup pg = elliptic_point_group(model);
  const LatticeBundle b = build_ff_lattice(model, Selector::EllipticAllRational);
  const SubgroupCheck sc = elliptic_subgroup_check(b.lattice, pg.group, pg.embedding);
  const long long aut = abelian_automorphism_group(pg.group).order;
  // translations alone
  std::vector<Permutation> trans;
  for (const auto& q : pg.embedding) {
    std::vector<std::uint32_t> im;
    for (const auto& e : pg.embedding) {
      const GroupElement t = pg.group.add(e, q);
      std::size_t k = 0;
      while (pg.embedding[k] != t) ++k;
      im.push_back(static_cast<std::uint32_t>(k));
    }
    trans.emplace_back(im);
  }
  const Int trans_order = schreier_sims_order(pg.embedding.size(), trans);
  ctx.expect(sc.all_stabilize, sc.failure.empty() ? "induced permutation fails" : sc.failure);
  ctx.expect(sc.order == sc.expected, "generated order differs from |G| |Aut(G)|");
  ctx.expect(sc.order == 54, "verified order != 54");
  ctx.expect(aut == euler_phi(9), "|Aut(G)| != phi(9)");
  ctx.expect(trans_order == 9, "translation subgroup order != 9");
  ctx.details() = {{"group", pg.group.to_string()},
                   {"order", int_to_json(sc.order)},
                   {"expected", int_to_json(sc.expected)},
                   {"translation_order", int_to_json(trans_order)},
                   {"aut_order", aut},
                   {"permutations_checked", sc.generators_checked}};
}

void check_aut_an_and_scaled(CheckContext& ctx) {
  Json rows = Json::array();
  for (int n = 1; n <= 7; ++n) {
    const auto A = root_lattice_a(n);
    const Int o1 = perm_stabilizer(A, ctx.options().max_perm_dim, ctx.options().max_enum).order;
    const Int o2 = perm_stabilizer(scale(A, 2), ctx.options().max_perm_dim, ctx.options().max_enum).order;
    const Int f = factorial(static_cast<unsigned long>(n) + 1);
    ctx.expect(o1 == f, "perm order of A_" + std::to_string(n));
    ctx.expect(o2 == f, "perm order of 2A_" + std::to_string(n));
    rows.push_back({{"n", n}, {"perm_An", int_to_json(o1)}, {"perm_2An", int_to_json(o2)}});
  }
  const IsometryReport iso = isometry_group_order(root_lattice_a(2));
  ctx.expect(iso.order == 12, "isometry order of A_2 != 12");
  ctx.details() = {{"cases", rows}, {"isometry_A2", int_to_json(iso.order)}};
}

void check_aut_example_f11(CheckContext& ctx) {
  const auto model = f11_curve();
  const LatticeBundle b = build_ff_lattice(model, Selector::RamifiedInert);
  const IsometryReport iso = isometry_group_order(b.lattice);
  const std::vector<std::pair<Int, int>> fac{{2, 9}, {3, 2}, {5, 1}, {7, 1}};
  ctx.expect(iso.order == 161280, "isometry order != 161280");
  ctx.expect(iso.factored == fac, "factorization differs from [[2,9],[3,2],[5,1],[7,1]]");
  ctx.expect(iso.includes_minus_id, "-Id missing");
  const SubgroupCheck sc = hyperelliptic_subgroup_check(b.lattice, b.places);
  ctx.expect(sc.all_stabilize, sc.failure.empty() ? "transposition fails" : sc.failure);
  ctx.expect(sc.order == 80640, "S_8 x S_2 order != 80640");
  std::size_t mixing = 0, mixing_stable = 0;
  for (std::size_t i = 0; i < b.places.size(); ++i)
    for (std::size_t j = 0; j < b.places.size(); ++j) {
      const bool ri = b.places.places[i].kind != PlaceKind::Inert;
      const bool rj = b.places.places[j].kind == PlaceKind::Inert;
      if (!(ri && rj)) continue;
      ++mixing;
      if (stabilizes(b.lattice, Permutation::transposition(b.places.size(), i, j))) ++mixing_stable;
    }
  ctx.expect(mixing > 0 && mixing_stable == 0, "a ramified-inert transposition stabilizes the lattice");
  ctx.details() = {{"report", isometry_report_to_json(iso)},
                   {"shell_size", iso.shell_size},
                   {"search_nodes", iso.nodes},
                   {"subgroup_order", int_to_json(sc.order)},
                   {"mixing_transpositions", mixing},
                   {"mixing_stabilizing", mixing_stable}};
  ctx.details()["report"].erase("generators");
}

void check_barnes_aut_n11(CheckContext& ctx) {
  const IsometryReport iso = isometry_group_order(barnes_lattice(11));
  const Int expected(static_cast<long>(2 * 12 * euler_phi(12)));
  ctx.expect(iso.order == expected, "isometry order of B_11 != 96");
  const Int perm = perm_stabilizer(barnes_lattice(11), ctx.options().max_perm_dim, ctx.options().max_enum).order;
  ctx.expect(perm == static_cast<long>(12 * euler_phi(12)), "permutation part of B_11 != 48");
  Json extra = Json::array();
  for (int n = 6; n <= 10; ++n) {
    const IsometryReport r = isometry_group_order(barnes_lattice(n));
    const long long base = 2LL * (n + 1) * euler_phi(n + 1);
    extra.push_back({{"n", n}, {"order", int_to_json(r.order)}, {"base_order", base}, {"exceeds", r.order > static_cast<long>(base)}});
  }
  ctx.details() = {{"order", int_to_json(iso.order)},
                   {"expected", int_to_json(expected)},
                   {"perm_order", int_to_json(perm)},
                   {"B_n_6_to_10", extra}};
}

void check_dual_remark(CheckContext& ctx) {
  Json rows = Json::array();
  for (int n = 6; n <= 10; ++n) {
    const Int cb = dual_short_vector_count(barnes_lattice(n), n, n + 1, ctx.options().max_enum);
    const Int ca = dual_short_vector_count(root_lattice_a(n), n, n + 1, ctx.options().max_enum);
    ctx.expect(cb > ca, "B_" + std::to_string(n) + "^* does not exceed A_" + std::to_string(n) + "^*");
    ctx.expect(ca == 2 * (n + 1), "A_" + std::to_string(n) + "^* count != 2(n+1)");
    rows.push_back({{"n", n}, {"B_dual", int_to_json(cb)}, {"A_dual", int_to_json(ca)}});
  }
  ctx.details()["cases"] = rows;
}

void check_pgl2_embedding(CheckContext& ctx) {
  Json rows = Json::array();
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const MobiusGroup g = mobius_induced_perms(q);
    const long long expected = static_cast<long long>(q) * q * q - q;
    const auto A = root_lattice_a(static_cast<int>(q));
    std::size_t stable = 0;
    for (const auto& p : g.elements)
      if (stabilizes(A, p)) ++stable;
    ctx.expect(g.order == static_cast<long>(expected), "PGL_2 order for q=" + std::to_string(q));
    ctx.expect(static_cast<long long>(g.elements.size()) == expected, "distinct Mobius maps for q=" + std::to_string(q));
    ctx.expect(g.fixing_all == 1, "non-identity map fixes all places for q=" + std::to_string(q));
    ctx.expect(stable == g.elements.size(), "Mobius map fails to stabilize A_q for q=" + std::to_string(q));
    rows.push_back({{"q", q}, {"order", int_to_json(g.order)}, {"distinct", g.elements.size()}, {"fixing_all", g.fixing_all}});
  }
  ctx.details()["cases"] = rows;
}

void check_class_number_condition(CheckContext& ctx) {
  const auto model = f37_genus2_curve();
  const bool cond = hasse_weil_condition(model.p(), model.genus());
  ctx.expect(cond, "Hasse-Weil condition fails for the chosen curve");
  const Jacobian jac = jacobian_group(model, ctx.options().jacobian);
  const long long h = jac.group.order();
  const auto [lo, hi] = hasse_weil_interval(model.p(), model.genus());
  const LatticeBundle b = build_ff_lattice(model, Selector::HyperellipticAllRational, ctx.options().jacobian);
  const Int det2 = gram_and_det2(b.lattice).det2;
  const Int h0 = derived_h0(b.lattice, b.places.degrees());
  const auto n1 = static_cast<long>(b.places.size());
  ctx.expect(h >= lo && h <= hi, "class number outside the Hasse-Weil interval");
  const Int hz(static_cast<long>(h));
  ctx.expect(det2 == hz * hz * n1, "det2 != h^2 (n+1)");
  ctx.expect(h0 == hz, "h0 != h");
  ctx.details() = {{"curve", curve_to_json(model)},
                   {"class_number", h},
                   {"group", jac.group.to_string()},
                   {"hasse_weil_interval", {lo, hi}},
                   {"rational_places", n1},
                   {"det2", int_to_json(det2)},
                   {"h0", int_to_json(h0)}};
}

// Brute-force successive minima over a coefficient box |x_i| <= sqrt(B (G^-1)_ii).
std::optional<std::vector<Int>> box_minima_oracle(const IntMat& basis, double max_box) {
  const std::size_t n = basis.size();
  IntMat g(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = dot(basis[i], basis[j]);
  const Int det = bareiss_det(g);
  Int bound = 0;
  for (const auto& r : basis) bound = std::max(bound, Int(dot(r, r)));
  std::vector<long> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMat minor;
    for (std::size_t a = 0; a < n; ++a) {
      if (a == i) continue;
      IntVec row;
      for (std::size_t b = 0; b < n; ++b)
        if (b != i) row.push_back(g[a][b]);
      minor.push_back(std::move(row));
    }
    const Int cof = bareiss_det(minor);
    Int q = bound * cof / det, r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    radius[i] = r.get_si() + 1;
  }
  double box = 1;
  for (long r : radius) box *= 2.0 * static_cast<double>(r) + 1;
  if (box > max_box) return std::nullopt;
  struct Item {
    Int norm;
    IntVec v;
  };
  std::vector<Item> items;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -radius[i];
  for (;;) {
    IntVec v(basis[0].size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += x[i] * basis[i][c];
    const Int nv = dot(v, v);
    if (nv > 0 && nv <= bound) items.push_back({nv, v});
    std::size_t k = 0;
    for (; k < n && ++x[k] > radius[k]; ++k) x[k] = -radius[k];
    if (k == n) break;
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.norm < b.norm; });
  std::vector<Int> out;
  std::vector<IntVec> chosen;
  for (const auto& it : items) {
    chosen.push_back(it.v);
    if (rational_rank(chosen) == chosen.size())
      out.push_back(it.norm);
    else
      chosen.pop_back();
    if (out.size() == n) break;
  }
  return out;
}

void check_property_suites(CheckContext& ctx) {
  const auto& opt = ctx.options();
  Json& d = ctx.details();

  // evenness, generator norm bound, minimum >= 4 on hyperelliptic builds
  std::vector<std::pair<std::string, LatticeBundle>> builds;
  builds.emplace_back("F11 ramified-inert", build_ff_lattice(f11_curve(), Selector::RamifiedInert));
  builds.emplace_back("F11 all-rational", build_ff_lattice(f11_curve(), Selector::HyperellipticAllRational, opt.jacobian));
  builds.emplace_back("F7 g2 ramified-inert", build_ff_lattice(f7_genus2_split_curve(), Selector::RamifiedInert));
  builds.emplace_back("F7 g2 all-rational",
                      build_ff_lattice(f7_genus2_split_curve(), Selector::HyperellipticAllRational, opt.jacobian));
  builds.emplace_back("F5 elliptic", build_ff_lattice(f5_elliptic_curve(), Selector::EllipticAllRational));
  for (const auto& cc : nonsplit_survey().checks)
    if (cc.p == 13 && cc.degree == 5) {
      builds.emplace_back("F13 g2 non-split", build_ff_lattice(HyperellipticModel(13, cc.cls.f), Selector::RamifiedInert));
      break;
    }
  std::size_t vectors_checked = 0, odd = 0, generator_violations = 0, small_minimum = 0;
  for (const auto& [name, b] : builds) {
    const Int mu = minimum2(b.lattice, opt.max_enum);
    for (const auto& v : enumerate_short(b.lattice, mu + 4, opt.max_enum)) {
      ++vectors_checked;
      if (mpz_odd_p(v.norm2.get_mpz_t())) ++odd;
    }
    for (const auto& g : b.generators) {
      if (g.tag == GeneratorTag::GroupRelation) continue;
      Int pole = 0;
      for (const auto& x : g.v)
        if (x < 0) pole -= x;
      if (dot(g.v, g.v) < 2 * pole) ++generator_violations;
    }
    if (mu < 4) ++small_minimum;
  }
  ctx.expect(odd == 0, "odd norm found in a function-field lattice");
  ctx.expect(generator_violations == 0, "generator violates |Phi(z)|^2 >= 2 deg(z)");
  ctx.expect(small_minimum == 0, "hyperelliptic lattice with minimum2 < 4");
  d["evenness_vectors_checked"] = vectors_checked;
  d["generator_bound_violations"] = generator_violations;

  // successive minima vs coefficient-box oracle
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> entry(-3, 3), rank_d(1, 5), extra_d(0, 1);
  std::size_t cases = 0, mismatches = 0;
  while (cases < 20) {
    const int n = rank_d(rng);
    const int m = n + extra_d(rng);
    IntMat rows(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(m)));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    if (rank(rows) != rows.size()) continue;
    const auto oracle = box_minima_oracle(rows, 2e6);
    if (!oracle) continue;
    if (successive_minima2(IntegerLattice(rows), opt.max_enum).lambda2 != *oracle) ++mismatches;
    ++cases;
  }
  ctx.expect(mismatches == 0, "successive minima disagree with the box oracle");
  d["minima_oracle_cases"] = cases;

  // Cantor group law on small Jacobians
  std::size_t jacobians = 0;
  Json orders = Json::array();
  for (std::uint32_t p : {3u, 5u, 7u})
    for (const auto& f : std::vector<std::vector<long long>>{{1, 1, 0, 1}, {1, 0, 0, 0, 0, 1}, {2, 1, 0, 0, 0, 1},
                                                            {1, 2, 0, 1, 0, 1}, {0, 1, 0, 0, 0, 1}}) {
      std::unique_ptr<HyperellipticModel> model;
      try {
        model = std::make_unique<HyperellipticModel>(p, f);
      } catch (const InvalidInput&) {
        continue;
      }
      const Jacobian jac = jacobian_group(*model, opt.jacobian);
      const std::size_t N = jac.classes.size();
      if (N > 200) continue;
      std::vector<std::size_t> table(N * N);
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          table[a * N + b] = jac.index_of(cantor_add(*model, jac.classes[a], jac.classes[b]));
      bool ok = true;
      const std::size_t e = jac.identity_index;
      for (std::size_t a = 0; a < N && ok; ++a) {
        ok = table[a * N + e] == a && table[jac.index_of(mumford_negate(*model, jac.classes[a])) * N + a] == e;
        for (std::size_t b = 0; b < N && ok; ++b) {
          ok = table[a * N + b] == table[b * N + a];
          for (std::size_t c = 0; c < N && ok; ++c) ok = table[table[a * N + b] * N + c] == table[a * N + table[b * N + c]];
        }
      }
      ctx.expect(ok, "Cantor group law fails over F_" + std::to_string(p));
      ++jacobians;
      orders.push_back({{"p", p}, {"f", f}, {"order", N}});
    }
  ctx.expect(jacobians >= 5, "too few small Jacobians exercised");
  d["cantor_jacobians"] = orders;

  // generator lattice vs 2-torsion kernel lattice on split curves
  std::size_t split_curves = 0, cross_fail = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField F(p);
    for (int g = 1; g <= 3; ++g) {
      const int k = 2 * g + 1;
      if (k > static_cast<int>(p)) continue;
      std::vector<int> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
      for (;;) {
        for (Residue lead : {Residue{1}, smallest_nonresidue(F)}) {
          std::vector<long long> roots(pick.begin(), pick.end());
          const HyperellipticModel model(p, poly_from_roots(p, roots, lead));
          const auto gen = build_ff_lattice(model, Selector::RamifiedInert);
          if (!lattice_equal(gen.lattice, oracle_build_ramified_inert(model, opt.jacobian))) ++cross_fail;
          ++split_curves;
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(p) - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
      }
    }
  }
  ctx.expect(cross_fail == 0, "generator lattice differs from the 2-torsion kernel lattice");
  d["cross_construction_curves"] = split_curves;
  d["cross_construction_failures"] = cross_fail;
}

}  // namespace

const std::vector<CheckInfo>& verify_registry() {
  static const std::vector<CheckInfo> registry{
      {"rational_An", 1, "rational function field lattice equals A_n (n = 2..20)", check_rational_an},
      {"hyper_2An", 2, "non-split ramified-inert lattices equal 2A_n, p <= 13, deg 5 and 7", check_hyper_2an},
      {"hyper_g3_split", 3, "genus-3 split curve over F_11 reproduces the printed basis", check_hyper_g3_split},
      {"hyper_g2_minima", 4, "genus-2 split curve over F_7 has minima (6,6,6,6,6,8)", check_hyper_g2_minima},
      {"hyper_det_h0", 5, "index-derived h0 and determinant law for ramified-inert lattices", check_hyper_det_h0},
      {"hyper_rational_minima", 6, "all-rational-places lattice of the F_11 curve: minima and split pairs",
       check_hyper_rational_minima},
      {"elliptic_barnes", 7, "cyclic elliptic point group of order 9 gives B_8", check_elliptic_barnes},
      {"elliptic_aut_subgroup", 8, "translations and group automorphisms stabilize the elliptic lattice",
       check_elliptic_aut_subgroup},
      {"aut_An_and_scaled", 9, "coordinate permutation groups of A_n and 2A_n; isometries of A_2", check_aut_an_and_scaled},
      {"aut_example_F11", 10, "isometry group of the F_11 genus-3 lattice and its S_8 x S_2 subgroup",
       check_aut_example_f11},
      {"barnes_aut_n11", 11, "isometry group of B_11 has order 2 (n+1) phi(n+1)", check_barnes_aut_n11},
      {"dual_remark", 12, "B_n^* has more vectors at the A_n^* minimum, 6 <= n <= 10", check_dual_remark},
      {"pgl2_embedding", 13, "Mobius maps give PGL_2(F_q) inside the symmetric group of A_q", check_pgl2_embedding},
      {"class_number_condition", 14, "det2 = h^2 (n+1) for a genus-2 curve over F_37", check_class_number_condition},
      {"property_suites", 15, "evenness, norm bounds, minima oracle, Cantor laws, cross-construction",
       check_property_suites},
  };
  return registry;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : verify_registry())
    if (c.name == name) return &c;
  return nullptr;
}

CheckResult run_check(const CheckInfo& check, const VerifyOptions& options) {
  CheckResult res;
  res.name = check.name;
  CheckContext ctx(options);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    check.body(ctx);
    if (ctx.failures().empty()) {
      res.status = CheckStatus::Pass;
    } else {
      res.status = CheckStatus::Fail;
      res.reason = ctx.failures().front();
    }
  } catch (const ResourceLimit& e) {
    res.status = CheckStatus::Skipped;
    res.reason = e.what();
  } catch (const std::exception& e) {
    res.status = CheckStatus::Fail;
    res.reason = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.details = ctx.details();
  if (!ctx.failures().empty()) res.details["failures"] = ctx.failures();
  return res;
}

Json check_result_to_json(const CheckResult& result) {
  Json j;
  j["name"] = result.name;
  j["status"] = to_string(result.status);
  if (!result.reason.empty()) j["reason"] = result.reason;
  j["details"] = result.details;
  return j;
}

}  // namespace fflat
