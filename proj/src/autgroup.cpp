#include "fflat/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fflat/errors.hpp"

namespace fflat {

namespace {

using LVec = std::vector<long long>;

struct LVecHash {
  std::size_t operator()(const LVec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

LVec to_lvec(const IntVec& v) {
  LVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw ResourceLimit("lattice entry exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

IntVec to_intvec(const LVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

long long ldot(const LVec& a, const LVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec permute_coords(const IntVec& v, const Permutation& p) {
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[p(i)] = v[i];
  return w;
}

}  // namespace

// ---------------------------------------------------------------- generic search

BacktrackResult backtrack_automorphisms(const BacktrackProblem& pb, std::size_t max_nodes) {
  BacktrackResult res;
  const std::size_t levels = pb.base.size();
  std::vector<std::pair<std::size_t, Permutation>> found;  // (level, element)
  res.orbit_sizes.assign(levels, 1);

  std::function<std::optional<Permutation>(std::vector<std::size_t>&)> dfs =
      [&](std::vector<std::size_t>& images) -> std::optional<Permutation> {
    const std::size_t level = images.size();
    if (level == levels) return pb.complete(images);
    for (std::size_t c : pb.candidates(level, images)) {
      if (++res.nodes > max_nodes)
        throw ResourceLimit("automorphism search exceeded " + std::to_string(max_nodes) + " nodes");
      images.push_back(c);
      if (pb.partial_ok(level, images))
        if (auto g = dfs(images)) return g;
      images.pop_back();
    }
    return std::nullopt;
  };

  for (std::size_t k = levels; k-- > 0;) {
    auto stab_gens = [&] {
      std::vector<Permutation> g;
      for (const auto& [lv, p] : found)
        if (lv >= k) g.push_back(p);
      return g;
    };
    std::vector<Permutation> gens = stab_gens();
    std::vector<char> in_orbit(pb.points, 0), bad(pb.points, 0);
    std::size_t orbit_size = 0;
    auto refresh = [&] {
      for (auto y : orbit_of(pb.base[k], gens, pb.points)) {
        if (!in_orbit[y]) ++orbit_size;
        in_orbit[y] = 1;
      }
    };
    refresh();
    std::vector<std::size_t> prefix(pb.base.begin(), pb.base.begin() + static_cast<long>(k));
    for (std::size_t c : pb.candidates(k, prefix)) {
      if (in_orbit[c] || bad[c]) continue;
      std::vector<std::size_t> images = prefix;
      images.push_back(c);
      ++res.nodes;
      std::optional<Permutation> g;
      if (pb.partial_ok(k, images)) g = dfs(images);
      if (g) {
        found.emplace_back(k, *g);
        gens.push_back(*g);
        refresh();
      } else {
        for (auto y : orbit_of(c, gens, pb.points)) bad[y] = 1;
      }
    }
    res.orbit_sizes[k] = orbit_size;
  }
  res.order = 1;
  for (auto s : res.orbit_sizes) res.order *= static_cast<unsigned long>(s);
  for (auto& [lv, p] : found) res.generators.push_back(std::move(p));
  return res;
}

bool stabilizes(const IntegerLattice& lattice, const Permutation& perm) {
  if (perm.degree() != lattice.ambient_dim()) throw InvalidInput("permutation degree differs from ambient dimension");
  for (const auto& row : lattice.basis())
    if (!contains(lattice, permute_coords(row, perm))) return false;
  return true;
}

// ---------------------------------------------------------------- permutation mode

PermStabilizer perm_stabilizer(const IntegerLattice& lattice, std::size_t max_dim, std::size_t max_vectors) {
  const std::size_t m = lattice.ambient_dim();
  if (m > max_dim)
    throw ResourceLimit("permutation search limited to ambient dimension <= " + std::to_string(max_dim));
  std::vector<LVec> mins;
  for (const auto& v : minimal_vectors(lattice, max_vectors)) mins.push_back(to_lvec(v));
  std::unordered_set<LVec, LVecHash> minset;
  for (const auto& v : mins) {
    minset.insert(v);
    LVec w(v);
    for (auto& x : w) x = -x;
    minset.insert(std::move(w));
  }
  // per-coordinate multiset of entries over +-minimal vectors
  std::vector<std::vector<long long>> inv(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& v : mins) {
      inv[i].push_back(v[i]);
      inv[i].push_back(-v[i]);
    }
    std::sort(inv[i].begin(), inv[i].end());
  }
  std::vector<std::vector<const LVec*>> by_last(m);
  for (const auto& v : mins) {
    std::size_t last = m;
    for (std::size_t i = m; i-- > 0;)
      if (v[i] != 0) {
        last = i;
        break;
      }
    if (last < m) by_last[last].push_back(&v);
  }

  BacktrackProblem pb;
  pb.points = m;
  for (std::size_t i = 0; i < m; ++i) pb.base.push_back(i);
  pb.candidates = [&](std::size_t level, const std::vector<std::size_t>& images) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m; ++c) {
      if (std::find(images.begin(), images.end(), c) != images.end()) continue;
      if (inv[c] == inv[level]) out.push_back(c);
    }
    return out;
  };
  pb.partial_ok = [&](std::size_t level, const std::vector<std::size_t>& images) {
    LVec w(m);
    for (const LVec* v : by_last[level]) {
      std::fill(w.begin(), w.end(), 0);
      for (std::size_t i = 0; i <= level; ++i) w[images[i]] = (*v)[i];
      if (!minset.count(w)) return false;
    }
    return true;
  };
  pb.complete = [&](const std::vector<std::size_t>& images) -> std::optional<Permutation> {
    std::vector<std::uint32_t> im(images.begin(), images.end());
    Permutation p(std::move(im));
    if (!stabilizes(lattice, p)) return std::nullopt;
    return p;
  };
  BacktrackResult br = backtrack_automorphisms(pb, 100'000'000);
  PermutationGroup g(m, br.generators);
  if (g.order() != br.order) throw std::logic_error("perm_stabilizer: Schreier-Sims order differs from search order");
  return {std::move(g), br.order};
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n) {
  std::vector<std::pair<Int, int>> out;
  Int r = abs(n);
  for (unsigned long p = 2; p <= 1'000'000 && Int(p) * p <= r; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      ++e;
    }
    if (e) out.emplace_back(Int(p), e);
  }
  if (r > 1) out.emplace_back(r, 1);
  return out;
}

IsometryReport perm_report(const PermStabilizer& stab) {
  IsometryReport rep;
  rep.order = stab.order;
  rep.factored = factor_integer(stab.order);
  rep.includes_minus_id = false;
  for (const auto& g : stab.group.generators()) {
    IntMat row(1);
    for (auto x : g.image()) row[0].emplace_back(static_cast<unsigned long>(x));
    rep.generators.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------- full isometry mode

IsometryReport isometry_group_order(const IntegerLattice& lattice, std::size_t max_rank, std::size_t max_shell,
                                    std::size_t max_nodes, std::size_t max_vectors) {
  const std::size_t n = lattice.rank();
  const std::size_t m = lattice.ambient_dim();
  if (n == 0) throw InvalidInput("isometry group of the zero lattice");
  if (n > max_rank) throw ResourceLimit("isometry search limited to rank <= " + std::to_string(max_rank));

  // shell S = vectors of norm <= bound (both signs), grown until it generates L
  std::vector<LVec> S;
  Int bound = minimum2(lattice, max_vectors);
  for (;;) {
    const auto vs = enumerate_short(lattice, bound, max_vectors);
    if (2 * vs.size() > max_shell)
      throw ResourceLimit("isometry shell exceeds " + std::to_string(max_shell) + " vectors");
    IntMat rows;
    for (const auto& v : vs) rows.push_back(v.v);
    if (!rows.empty() && hnf(rows) == lattice.hnf_basis()) {
      S.clear();
      for (const auto& v : vs) {
        LVec a = to_lvec(v.v);
        LVec b(a);
        for (auto& x : b) x = -x;
        S.push_back(std::move(a));
        S.push_back(std::move(b));
      }
      break;
    }
    bound += 1;
  }
  const std::size_t N = S.size();
  std::unordered_map<LVec, std::size_t, LVecHash> index;
  for (std::size_t i = 0; i < N; ++i) index.emplace(S[i], i);

  std::vector<std::int32_t> ipm;
  const bool dense = N <= 4000;
  if (dense) {
    ipm.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) ipm[i * N + j] = ipm[j * N + i] = static_cast<std::int32_t>(ldot(S[i], S[j]));
  }
  auto ip = [&](std::size_t a, std::size_t b) -> long long {
    return dense ? ipm[a * N + b] : ldot(S[a], S[b]);
  };

  // fingerprint classes: multiset of inner products with S
  std::vector<int> cls(N);
  {
    std::map<LVec, int> ids;
    LVec fp(N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) fp[j] = ip(i, j);
      std::sort(fp.begin(), fp.end());
      cls[i] = ids.emplace(fp, static_cast<int>(ids.size())).first->second;
    }
  }
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < N; ++i) members[cls[i]].push_back(i);

  // base: n independent shell vectors, each minimizing the candidate count
  std::vector<std::size_t> base;
  {
    std::vector<IntVec> chosen;
    while (base.size() < n) {
      std::map<LVec, std::size_t> counts;
      auto key = [&](std::size_t v) {
        LVec k{cls[v]};
        for (auto b : base) k.push_back(ip(v, b));
        return k;
      };
      for (std::size_t v = 0; v < N; ++v) ++counts[key(v)];
      std::size_t best = N;
      std::size_t best_count = 0;
      for (std::size_t v = 0; v < N; ++v) {
        const std::size_t c = counts[key(v)];
        if (best != N && c >= best_count) continue;
        std::vector<IntVec> trial = chosen;
        trial.push_back(to_intvec(S[v]));
        if (rational_rank(trial) != trial.size()) continue;
        best = v;
        best_count = c;
      }
      base.push_back(best);
      chosen.push_back(to_intvec(S[best]));
    }
  }

  // coefficients of every shell vector in the base, scaled by a common D
  IntMat gs(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gs[i][j] = static_cast<long>(ip(base[i], base[j]));
  std::vector<std::vector<mpq_class>> ginv(n, std::vector<mpq_class>(n));
  {
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(gs[i][j]);
      a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      const mpq_class inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const mpq_class f = a[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ginv[i][j] = a[i][n + j];
  }
  auto base_coeffs = [&](const LVec& v) {
    std::vector<mpq_class> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = mpq_class(static_cast<long>(ldot(v, S[base[j]])));
    std::vector<mpq_class> a(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i] += r[j] * ginv[j][i];
    return a;
  };
  std::vector<std::vector<mpq_class>> coeffs(N);
  Int D = 1;
  for (std::size_t v = 0; v < N; ++v) {
    coeffs[v] = base_coeffs(S[v]);
    for (const auto& q : coeffs[v]) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!D.fits_slong_p()) throw ResourceLimit("base denominator exceeds 64 bits");
  const long long Dl = D.get_si();
  std::vector<LVec> A(N, LVec(n));
  std::vector<std::vector<std::size_t>> check(n);
  for (std::size_t v = 0; v < N; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      const mpq_class s = coeffs[v][i] * mpq_class(D);
      if (!s.get_num().fits_slong_p()) throw ResourceLimit("base coefficient exceeds 64 bits");
      A[v][i] = s.get_num().get_si();
    }
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (A[v][i] != 0) last = i;
    if (v % 2 == 0) check[last].push_back(v);  // S[v+1] = -S[v]
  }

  auto image_of = [&](std::size_t v, const std::vector<std::size_t>& images) -> std::optional<std::size_t> {
    LVec w(m);
    for (std::size_t c = 0; c < m; ++c) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < images.size(); ++i)
        if (A[v][i] != 0) acc += static_cast<__int128>(A[v][i]) * S[images[i]][c];
      if (acc % Dl != 0) return std::nullopt;
      w[c] = static_cast<long long>(acc / Dl);
    }
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  BacktrackProblem pb;
  pb.points = N;
  pb.base = base;
  pb.candidates = [&](std::size_t level, const std::vector<std::size_t>& images) {
    std::vector<std::size_t> out;
    const std::size_t s = base[level];
    for (std::size_t w : members[cls[s]]) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) ok = ip(w, images[j]) == ip(s, base[j]);
      if (ok) out.push_back(w);
    }
    return out;
  };
  pb.partial_ok = [&](std::size_t level, const std::vector<std::size_t>& images) {
    for (std::size_t v : check[level])
      if (!image_of(v, images)) return false;
    return true;
  };
  pb.complete = [&](const std::vector<std::size_t>& images) -> std::optional<Permutation> {
    std::vector<std::uint32_t> im(N);
    for (std::size_t v = 0; v < N; ++v) {
      auto w = image_of(v, images);
      if (!w) return std::nullopt;
      im[v] = static_cast<std::uint32_t>(*w);
    }
    try {
      return Permutation(std::move(im));
    } catch (const InvalidInput&) {
      return std::nullopt;
    }
  };

  BacktrackResult br = backtrack_automorphisms(pb, max_nodes);
  IsometryReport rep;
  rep.order = br.order;
  rep.factored = factor_integer(br.order);
  rep.shell_size = N;
  rep.nodes = br.nodes;
  {
    std::vector<std::size_t> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = base[i] ^ 1;
    rep.includes_minus_id = pb.complete(neg).has_value();
  }
  const auto& h = lattice.hnf_basis();
  for (const auto& g : br.generators) {
    IntMat mat;
    for (const auto& row : h) {
      const auto a = base_coeffs(to_lvec(row));
      std::vector<mpq_class> img(m, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) img[c] += a[i] * mpq_class(static_cast<long>(S[g(base[i])][c]));
      IntVec w(m);
      for (std::size_t c = 0; c < m; ++c) {
        if (img[c].get_den() != 1) throw std::logic_error("isometry maps a basis vector outside the lattice");
        w[c] = img[c].get_num();
      }
      auto coords = hnf_coordinates(lattice, w);
      if (!coords) throw std::logic_error("isometry image is not in the lattice");
      mat.push_back(std::move(*coords));
    }
    rep.generators.push_back(std::move(mat));
  }
  return rep;
}

// ---------------------------------------------------------------- abelian groups

AbelianAutomorphisms abelian_automorphism_group(const FiniteAbelianGroup& group) {
  const std::size_t k = group.rank();
  if (k > 2) throw ResourceLimit("abelian automorphisms limited to rank <= 2");
  if (group.order() > 10'000) throw ResourceLimit("abelian automorphisms limited to order <= 10^4");
  AbelianAutomorphisms out;
  if (k == 0) {
    out.order = 1;
    out.automorphisms.push_back({});
    return out;
  }
  const auto& nf = group.factors();
  std::vector<std::vector<GroupElement>> cands(k);
  for (long long idx = 0; idx < group.order(); ++idx) {
    const GroupElement x = group.element_at(idx);
    for (std::size_t j = 0; j < k; ++j)
      if (group.is_zero(group.times(x, nf[j]))) cands[j].push_back(x);
  }
  std::vector<GroupElement> pick(k);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      // surjective iff images and the relation rows generate Z^k
      IntMat rows;
      for (const auto& x : pick) {
        IntVec r;
        for (long long c : x) r.emplace_back(static_cast<long>(c));
        rows.push_back(std::move(r));
      }
      for (std::size_t i = 0; i < k; ++i) {
        IntVec r(k, 0);
        r[i] = static_cast<long>(nf[i]);
        rows.push_back(std::move(r));
      }
      if (hnf(rows) == identity_matrix(k)) out.automorphisms.push_back(pick);
      return;
    }
    for (const auto& x : cands[j]) {
      pick[j] = x;
      rec(j + 1);
    }
  };
  rec(0);
  out.order = static_cast<long long>(out.automorphisms.size());
  return out;
}

long long abelian_automorphism_order_formula(const FiniteAbelianGroup& group) {
  if (group.rank() > 2) throw InvalidInput("order formula covers rank <= 2");
  std::map<long long, std::vector<int>> exps;
  for (long long n : group.factors())
    for (const auto& [p, e] : factor_integer(Int(static_cast<long>(n)))) exps[p.get_si()].push_back(e);
  auto ipow = [](long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  long long total = 1;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end());
    if (es.size() == 1) {
      total *= euler_phi(ipow(p, es[0]));
    } else if (es[0] == es[1]) {
      const long long ph = euler_phi(ipow(p, es[0]));
      total *= ph * ph * ipow(p, 2 * es[0] - 1) * (p + 1);
    } else {
      total *= euler_phi(ipow(p, es[0])) * euler_phi(ipow(p, es[1])) * ipow(p, 2 * es[0]);
    }
  }
  return total;
}

SubgroupCheck elliptic_subgroup_check(const IntegerLattice& lattice, const FiniteAbelianGroup& group,
                                      const std::vector<GroupElement>& embedding) {
  const std::size_t m = embedding.size();
  if (m != lattice.ambient_dim()) throw InvalidInput("embedding length differs from ambient dimension");
  if (static_cast<long long>(m) != group.order()) throw InvalidInput("places must be exactly the group elements");
  std::vector<long long> pos(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    const long long idx = group.index_of(group.normalize(embedding[i]));
    if (pos[static_cast<std::size_t>(idx)] >= 0) throw InvalidInput("embedding is not injective");
    pos[static_cast<std::size_t>(idx)] = static_cast<long long>(i);
  }
  auto induced = [&](const std::function<GroupElement(const GroupElement&)>& f) {
    std::vector<std::uint32_t> im(m);
    for (std::size_t i = 0; i < m; ++i)
      im[i] = static_cast<std::uint32_t>(pos[static_cast<std::size_t>(group.index_of(f(embedding[i])))]);
    return Permutation(std::move(im));
  };

  SubgroupCheck res;
  res.all_stabilize = true;
  std::vector<Permutation> gens;
  for (std::size_t q = 0; q < m; ++q) {
    const GroupElement shift = embedding[q];
    gens.push_back(induced([&](const GroupElement& x) { return group.add(x, shift); }));
  }
  const AbelianAutomorphisms aut = abelian_automorphism_group(group);
  for (const auto& images : aut.automorphisms) {
    gens.push_back(induced([&](const GroupElement& x) {
      GroupElement y = group.zero();
      for (std::size_t j = 0; j < x.size(); ++j) y = group.add(y, group.times(images[j], x[j]));
      return y;
    }));
  }
  for (const auto& g : gens) {
    ++res.generators_checked;
    if (!stabilizes(lattice, g)) {
      res.all_stabilize = false;
      res.failure = "induced permutation " + g.to_string() + " does not stabilize the lattice";
      break;
    }
  }
  res.order = schreier_sims_order(m, gens);
  res.expected = Int(static_cast<long>(group.order())) * static_cast<long>(aut.order);
  return res;
}

MobiusGroup mobius_induced_perms(std::uint32_t q) {
  if (q > 50) throw ResourceLimit("Mobius enumeration limited to q <= 50");
  const PrimeField F(q);
  std::set<Permutation> perms;
  for (Residue a = 0; a < q; ++a)
    for (Residue b = 0; b < q; ++b)
      for (Residue c = 0; c < q; ++c)
        for (Residue d = 0; d < q; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          std::vector<std::uint32_t> im(q + 1);
          im[q] = c == 0 ? q : F.mul(a, F.inv(c));
          for (Residue x = 0; x < q; ++x) {
            const Residue den = F.add(F.mul(c, x), d);
            im[x] = den == 0 ? q : F.mul(F.add(F.mul(a, x), b), F.inv(den));
          }
          perms.insert(Permutation(std::move(im)));
        }
  MobiusGroup g;
  g.elements.assign(perms.begin(), perms.end());
  for (const auto& p : g.elements)
    if (p.is_identity()) ++g.fixing_all;
  g.order = schreier_sims_order(q + 1, g.elements);
  return g;
}

SubgroupCheck hyperelliptic_subgroup_check(const IntegerLattice& lattice, const PlaceSystem& system) {
  const std::size_t m = system.size();
  if (m != lattice.ambient_dim()) throw InvalidInput("place system differs from ambient dimension");
  std::vector<std::size_t> ram, inert;
  for (std::size_t i = 0; i < m; ++i) {
    if (system.places[i].kind == PlaceKind::Ramified) ram.push_back(i);
    if (system.places[i].kind == PlaceKind::Inert) inert.push_back(i);
  }
  std::vector<Permutation> gens;
  for (std::size_t a = 0; a < inert.size(); ++a)
    for (std::size_t b = a + 1; b < inert.size(); ++b) gens.push_back(Permutation::transposition(m, inert[a], inert[b]));
  for (std::size_t a = 0; a < ram.size(); ++a)
    for (std::size_t b = a + 1; b < ram.size(); ++b) gens.push_back(Permutation::transposition(m, ram[a], ram[b]));
  for (std::size_t a : ram) gens.push_back(Permutation::transposition(m, 0, a));

  SubgroupCheck res;
  res.all_stabilize = true;
  for (const auto& g : gens) {
    ++res.generators_checked;
    if (!stabilizes(lattice, g)) {
      res.all_stabilize = false;
      res.failure = "transposition " + g.to_string() + " does not stabilize the lattice";
      break;
    }
  }
  res.order = schreier_sims_order(m, gens);
  Int fr = 1, fs = 1;
  for (std::size_t i = 2; i <= ram.size() + 1; ++i) fr *= static_cast<unsigned long>(i);
  for (std::size_t i = 2; i <= inert.size(); ++i) fs *= static_cast<unsigned long>(i);
  res.expected = fr * fs;
  return res;
}

}  // namespace fflat
