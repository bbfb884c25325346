#include "fflat/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fflat/errors.hpp"

namespace fflat {

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& a, std::size_t cols) {
  if (!a.empty()) cols = a[0].size();
  IntMat t(cols, IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (inner != b.size()) throw InvalidInput("matmul: dimension mismatch");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMat c(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec scaled(const IntVec& v, const Int& c) {
  IntVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntMat from_ll(const std::vector<std::vector<long long>>& rows) {
  IntMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    IntVec v;
    v.reserve(r.size());
    for (long long x : r) v.emplace_back(static_cast<long>(x));
    m.push_back(std::move(v));
  }
  return m;
}

std::vector<std::vector<long long>> to_ll(const IntMat& m) {
  std::vector<std::vector<long long>> out;
  out.reserve(m.size());
  for (const auto& r : m) {
    std::vector<long long> v;
    v.reserve(r.size());
    for (const auto& x : r) {
      if (!x.fits_slong_p()) throw ResourceLimit("integer entry exceeds 64 bits");
      v.push_back(x.get_si());
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + w*row_b (simultaneously)
void combine_rows(IntVec& ra, IntVec& rb, const Int& s, const Int& t, const Int& u, const Int& w) {
  for (std::size_t j = 0; j < ra.size(); ++j) {
    Int na = s * ra[j] + t * rb[j];
    Int nb = u * ra[j] + w * rb[j];
    ra[j] = std::move(na);
    rb[j] = std::move(nb);
  }
}

void axpy(IntVec& dst, const Int& k, const IntVec& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= k * src[j];
}

void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

IntMat hnf(const IntMat& input) {
  IntMat a = input;
  if (a.empty()) return a;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (a[r][c] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      Int g, s, t;
      xgcd(a[r][c], a[i][c], g, s, t);
      Int u = -a[i][c] / g;
      Int w = a[r][c] / g;
      combine_rows(a[r], a[i], s, t, u, w);
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0) axpy(a[i], q, a[r]);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<std::size_t> hnf_pivots(const IntMat& h) {
  std::vector<std::size_t> piv;
  for (const auto& row : h) {
    std::size_t j = 0;
    while (j < row.size() && row[j] == 0) ++j;
    piv.push_back(j);
  }
  return piv;
}

std::optional<IntVec> solve_in_hnf(const IntMat& h, const IntVec& v) {
  IntVec w = v;
  IntVec c(h.size(), 0);
  const auto piv = hnf_pivots(h);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::size_t p = piv[i];
    if (p >= w.size()) continue;
    if (!mpz_divisible_p(w[p].get_mpz_t(), h[i][p].get_mpz_t())) return std::nullopt;
    c[i] = w[p] / h[i][p];
    if (c[i] != 0) axpy(w, c[i], h[i]);
  }
  if (!is_zero(w)) return std::nullopt;
  return c;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < d.size() && i < (d.empty() ? 0 : d[0].size()); ++i) out.push_back(d[i][i]);
  return out;
}

SmithForm snf(const IntMat& a) {
  SmithForm s;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  s.d = a;
  s.u = identity_matrix(m);
  s.v = identity_matrix(n);
  auto& d = s.d;

  auto swap_cols = [&](IntMat& mat, std::size_t i, std::size_t j) {
    for (auto& row : mat) std::swap(row[i], row[j]);
  };
  // col_j -= k * col_i
  auto col_axpy = [&](IntMat& mat, std::size_t j, const Int& k, std::size_t i) {
    for (auto& row : mat) row[j] -= k * row[i];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (bi == m || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) goto done;
      std::swap(d[t], d[bi]);
      std::swap(s.u[t], s.u[bi]);
      swap_cols(d, t, bj);
      swap_cols(s.v, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        axpy(d[i], q, d[t]);
        axpy(s.u[i], q, s.u[t]);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        col_axpy(d, j, q, t);
        col_axpy(s.v, j, q, t);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[t][t].get_mpz_t())) {
            for (std::size_t k = 0; k < n; ++k) d[t][k] += d[i][k];
            for (std::size_t k = 0; k < m; ++k) s.u[t][k] += s.u[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
  }
done:
  return s;
}

Int bareiss_det(const IntMat& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  for (const auto& row : input)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  IntMat a = input;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::size_t rank(const IntMat& a) { return hnf(a).size(); }

IntMat left_kernel(const IntMat& a) {
  const std::size_t m = a.size();
  if (m == 0) return {};
  const std::size_t k = a[0].size();
  IntMat aug(m, IntVec(k + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = a[i][j];
    aug[i][k + i] = 1;
  }
  IntMat h = hnf(aug);
  IntMat ker;
  for (const auto& row : h) {
    bool left_zero = true;
    for (std::size_t j = 0; j < k; ++j)
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    if (left_zero) ker.emplace_back(row.begin() + static_cast<long>(k), row.end());
  }
  return hnf(ker);
}

Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

}  // namespace fflat
