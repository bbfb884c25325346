#include "fflat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fflat/errors.hpp"

namespace fflat {

namespace {

using Rat = mpq_class;

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sign_normalize(IntVec& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Incremental row echelon over Q with fraction-free integer rows.
class Echelon {
 public:
  bool add(IntVec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = piv_[k];
      if (v[p] == 0) continue;
      const Int a = rows_[k][p];
      const Int b = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows_[k][j];
      const Int g = gcd_all(v);
      if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  IntMat rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace

// ---------------------------------------------------------------- lattice value

IntegerLattice::IntegerLattice(IntMat basis, std::vector<std::string> labels, bool function_field)
    : basis_(std::move(basis)), labels_(std::move(labels)), function_field_(function_field) {
  ambient_ = basis_.empty() ? 0 : basis_[0].size();
  for (const auto& row : basis_)
    if (row.size() != ambient_) throw InvalidInput("basis rows have different lengths");
  if (!labels_.empty() && labels_.size() != ambient_) throw InvalidInput("label count differs from ambient dimension");
  hnf_ = hnf(basis_);
  if (hnf_.size() != basis_.size()) throw InvalidInput("basis rows are linearly dependent");
}

IntegerLattice IntegerLattice::from_generators(const IntMat& rows, std::size_t ambient_dim,
                                               std::vector<std::string> labels, bool function_field) {
  for (const auto& row : rows)
    if (row.size() != ambient_dim) throw InvalidInput("generator length differs from ambient dimension");
  IntegerLattice l(hnf(rows), {}, function_field);
  l.ambient_ = ambient_dim;
  if (!labels.empty() && labels.size() != ambient_dim) throw InvalidInput("label count differs from ambient dimension");
  l.labels_ = std::move(labels);
  return l;
}

IntegerLattice IntegerLattice::with_basis(IntMat basis) const {
  IntegerLattice l(std::move(basis), labels_, function_field_);
  if (l.hnf_ != hnf_) throw std::logic_error("with_basis: basis spans a different lattice");
  return l;
}

GramData gram_and_det2(const IntegerLattice& lattice) {
  GramData g;
  const auto& b = lattice.basis();
  const std::size_t n = b.size();
  g.gram.assign(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g.gram[i][j] = g.gram[j][i] = dot(b[i], b[j]);
  g.det2 = bareiss_det(g.gram);
  if (g.det2 <= 0) throw InvalidInput("Gram matrix is not positive definite");
  if (mpz_perfect_square_p(g.det2.get_mpz_t())) g.det = isqrt(g.det2);
  return g;
}

std::optional<IntVec> hnf_coordinates(const IntegerLattice& lattice, const IntVec& v) {
  if (v.size() != lattice.ambient_dim()) throw InvalidInput("vector length differs from ambient dimension");
  return solve_in_hnf(lattice.hnf_basis(), v);
}

bool contains(const IntegerLattice& lattice, const IntVec& v) { return hnf_coordinates(lattice, v).has_value(); }

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
  return a.ambient_dim() == b.ambient_dim() && a.hnf_basis() == b.hnf_basis();
}

Int index_in(const IntegerLattice& sub, const IntegerLattice& super) {
  if (sub.rank() != super.rank() || sub.ambient_dim() != super.ambient_dim())
    throw InvalidInput("index_in needs lattices of equal rank in the same space");
  IntMat coeff;
  for (const auto& row : sub.hnf_basis()) {
    auto c = hnf_coordinates(super, row);
    if (!c) throw InvalidInput("index_in: first lattice is not contained in the second");
    coeff.push_back(std::move(*c));
  }
  return abs(bareiss_det(coeff));
}

// ---------------------------------------------------------------- LLL

LllData lll_data(const IntMat& input, long delta_num, long delta_den) {
  if (delta_num * 4 < delta_den || delta_num >= delta_den) throw InvalidInput("LLL delta must lie in [1/4, 1)");
  LllData s;
  s.basis = input;
  auto& b = s.basis;
  const std::size_t n = b.size();
  s.d.assign(n + 1, 0);
  s.lambda.assign(n, std::vector<Int>(n, 0));
  auto& d = s.d;
  auto& lam = s.lambda;
  if (n == 0) return s;
  d[0] = 1;

  // d index shifted: d[i+1] belongs to row i
  auto red = [&](std::size_t k, std::size_t l) {
    Int twice = 2 * lam[k][l];
    if (abs(twice) <= d[l + 1]) return;
    const Int q = floor_div(twice + d[l + 1], 2 * d[l + 1]);
    for (std::size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
    lam[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  std::size_t kmax = 0;
  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Int u = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = d[i + 1] * u - lam[k][i] * lam[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
      }
      if (j < k)
        lam[k][j] = u;
      else
        d[k + 1] = u;
    }
    if (d[k + 1] == 0) throw InvalidInput("LLL input rows are linearly dependent");
  };
  auto swap = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Int l = lam[k][k - 1];
    Int bb = d[k - 1] * d[k + 1] + l * l;
    mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), d[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Int t = lam[i][k];
      Int nk = d[k + 1] * lam[i][k - 1] - l * t;
      mpz_divexact(nk.get_mpz_t(), nk.get_mpz_t(), d[k].get_mpz_t());
      lam[i][k] = nk;
      Int nk1 = bb * t + l * nk;
      mpz_divexact(nk1.get_mpz_t(), nk1.get_mpz_t(), d[k + 1].get_mpz_t());
      lam[i][k - 1] = nk1;
    }
    d[k] = bb;
  };

  gram_schmidt_row(0);
  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gram_schmidt_row(k);
    }
    red(k, k - 1);
    // delta d_{k-1}^2 > d_k d_{k-2} + lambda^2, scaled by den
    if (delta_den * d[k + 1] * d[k - 1] < delta_num * d[k] * d[k] - delta_den * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k);
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) red(k, l);
    ++k;
  }
  return s;
}

IntegerLattice lll_reduce(const IntegerLattice& lattice, long delta_num, long delta_den) {
  return lattice.with_basis(lll_data(lattice.basis(), delta_num, delta_den).basis);
}

// ---------------------------------------------------------------- enumeration

std::vector<LatticeVector> enumerate_short(const IntegerLattice& lattice, const Int& bound2, std::size_t max_vectors) {
  const std::size_t n = lattice.rank();
  const std::size_t m = lattice.ambient_dim();
  std::vector<LatticeVector> out;
  if (n == 0 || bound2 < 1) return out;
  const LllData s = lll_data(lattice.basis());
  const auto& d = s.d;
  const auto& lam = s.lambda;

  // |x|^2 = sum_i t_i^2 / (d[i] d[i+1]),  t_i = d[i+1] x_i + sum_{j>i} lam[j][i] x_j
  std::vector<Int> x(n, 0);
  std::vector<Int> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = d[i] * d[i + 1];

  std::function<void(std::size_t, const Rat&, bool)> walk = [&](std::size_t level, const Rat& residual, bool top_zero) {
    const std::size_t i = level - 1;
    Int sum = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) sum += lam[j][i] * x[j];
    Rat cap = residual * Rat(dd[i]);
    Int capz;
    mpz_fdiv_q(capz.get_mpz_t(), cap.get_num_mpz_t(), cap.get_den_mpz_t());
    const Int t_max = isqrt(capz);
    Int lo = ceil_div(-t_max - sum, d[i + 1]);
    const Int hi = floor_div(t_max - sum, d[i + 1]);
    if (top_zero && lo < 0) lo = 0;
    for (Int xi = lo; xi <= hi; ++xi) {
      const Int t = d[i + 1] * xi + sum;
      Rat rest = residual - Rat(t * t, dd[i]);
      if (rest < 0) continue;
      x[i] = xi;
      const bool zero = top_zero && xi == 0;
      if (i > 0) {
        walk(i, rest, zero);
      } else if (!zero) {
        IntVec v(m, 0);
        for (std::size_t r = 0; r < n; ++r) {
          if (x[r] == 0) continue;
          for (std::size_t c = 0; c < m; ++c) v[c] += x[r] * s.basis[r][c];
        }
        Int norm = dot(v, v);
        if (norm > bound2) throw std::logic_error("enumerate_short: norm exceeds bound");
        if (lattice.function_field() && mpz_odd_p(norm.get_mpz_t()))
          throw std::logic_error("enumerate_short: odd norm in a function-field lattice");
        sign_normalize(v);
        out.push_back({std::move(v), std::move(norm)});
        if (out.size() > max_vectors)
          throw ResourceLimit("short-vector enumeration exceeded " + std::to_string(max_vectors) + " vectors");
      }
    }
    x[i] = 0;
  };
  walk(n, Rat(bound2), true);
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) { return lex_less(a.v, b.v); });
  return out;
}

namespace {

Int min_row_norm(const IntMat& rows) {
  Int best = -1;
  for (const auto& r : rows) {
    const Int q = dot(r, r);
    if (best < 0 || q < best) best = q;
  }
  return best;
}

Int max_row_norm(const IntMat& rows) {
  Int best = 0;
  for (const auto& r : rows) best = std::max(best, Int(dot(r, r)));
  return best;
}

}  // namespace

Int minimum2(const IntegerLattice& lattice, std::size_t max_vectors) {
  if (lattice.rank() == 0) throw InvalidInput("minimum of the zero lattice");
  const Int cap = min_row_norm(lll_data(lattice.basis()).basis);
  Int bound = std::min(Int(2), cap);
  for (;;) {
    const auto vs = enumerate_short(lattice, bound, max_vectors);
    if (!vs.empty()) {
      Int best = vs[0].norm2;
      for (const auto& v : vs) best = std::min(best, v.norm2);
      return best;
    }
    bound = std::min(Int(2 * bound), cap);
  }
}

std::vector<IntVec> minimal_vectors(const IntegerLattice& lattice, std::size_t max_vectors) {
  const Int mu = minimum2(lattice, max_vectors);
  std::vector<IntVec> out;
  for (auto& v : enumerate_short(lattice, mu, max_vectors)) out.push_back(std::move(v.v));
  return out;
}

Int kissing_number(const IntegerLattice& lattice, std::size_t max_vectors) {
  return Int(static_cast<unsigned long>(2 * minimal_vectors(lattice, max_vectors).size()));
}

std::size_t rational_rank(const std::vector<IntVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.add(r);
  return e.size();
}

MinimaProfile successive_minima2(const IntegerLattice& lattice, std::size_t max_vectors) {
  const std::size_t n = lattice.rank();
  MinimaProfile prof;
  if (n == 0) return prof;
  const Int cap = max_row_norm(lll_data(lattice.basis()).basis);
  Int bound = std::min(minimum2(lattice, max_vectors), cap);
  for (;;) {
    auto vs = enumerate_short(lattice, bound, max_vectors);
    std::stable_sort(vs.begin(), vs.end(),
                     [](const LatticeVector& a, const LatticeVector& b) { return a.norm2 < b.norm2; });
    Echelon e;
    prof = {};
    for (const auto& v : vs) {
      if (!e.add(v.v)) continue;
      prof.lambda2.push_back(v.norm2);
      prof.witnesses.push_back(v.v);
      if (e.size() == n) return prof;
    }
    if (bound >= cap) throw std::logic_error("successive_minima2: LLL basis bound did not yield a full profile");
    bound = std::min(Int(2 * bound), cap);
  }
}

bool is_well_rounded(const IntegerLattice& lattice, std::size_t max_vectors) {
  return rational_rank(minimal_vectors(lattice, max_vectors)) == lattice.rank();
}

BasisSearch minimal_vector_basis(const IntegerLattice& lattice, std::size_t max_nodes, std::size_t max_vectors) {
  BasisSearch res;
  const std::size_t n = lattice.rank();
  const auto mins = minimal_vectors(lattice, max_vectors);
  if (rational_rank(mins) < n) return res;

  std::vector<IntVec> coeff;
  for (const auto& v : mins) coeff.push_back(*hnf_coordinates(lattice, v));

  // chosen rows extend to a basis of Z^n iff their Smith invariants are all 1
  auto primitive = [&](const IntMat& rows) {
    const auto diag = snf(rows).diagonal();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i >= diag.size() || diag[i] != 1) return false;
    return true;
  };

  IntMat chosen;
  std::vector<std::size_t> picks;
  std::function<bool(std::size_t)> search = [&](std::size_t start) {
    if (chosen.size() == n) return true;
    for (std::size_t idx = start; idx + (n - chosen.size()) <= coeff.size(); ++idx) {
      if (++res.nodes > max_nodes)
        throw ResourceLimit("minimal-vector basis search exceeded " + std::to_string(max_nodes) + " nodes");
      chosen.push_back(coeff[idx]);
      if (primitive(chosen)) {
        picks.push_back(idx);
        if (search(idx + 1)) return true;
        picks.pop_back();
      }
      chosen.pop_back();
    }
    return false;
  };
  if (search(0)) {
    IntMat basis;
    for (auto i : picks) basis.push_back(mins[i]);
    res.basis = std::move(basis);
  }
  return res;
}

ScaledDual scaled_dual(const IntegerLattice& lattice) {
  const std::size_t n = lattice.rank();
  const std::size_t m = lattice.ambient_dim();
  const auto& b = lattice.basis();
  const GramData g = gram_and_det2(lattice);
  // Gauss-Jordan on [G | B] over Q gives G^{-1} B
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(g.gram[i][j]);
    for (std::size_t j = 0; j < m; ++j) a[i][n + j] = Rat(b[i][j]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rat inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rat f = a[r][c];
      for (std::size_t j = c; j < n + m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[i][n + j].get_den_mpz_t());
  IntMat rows(n, IntVec(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rat v = a[i][n + j] * Rat(scale);
      rows[i][j] = v.get_num();
    }
  return {IntegerLattice(std::move(rows), lattice.labels()), scale};
}

Int dual_short_vector_count(const IntegerLattice& lattice, const Int& bound_num, const Int& bound_den,
                            std::size_t max_vectors) {
  if (bound_den <= 0 || bound_num < 0) throw InvalidInput("dual bound must be a nonnegative fraction");
  const ScaledDual sd = scaled_dual(lattice);
  const Int bound2 = floor_div(sd.scale * sd.scale * bound_num, bound_den);
  return Int(static_cast<unsigned long>(2 * enumerate_short(sd.lattice, bound2, max_vectors).size()));
}

}  // namespace fflat
