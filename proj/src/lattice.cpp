#include "upos/lattice.hpp"

#include <algorithm>

#include "upos/errors.hpp"

namespace upos {

namespace {

void row_axpy(IntVector& dst, const Integer& f, const IntVector& src) {
  if (f == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += f * src[i];
}

bool is_zero_row(const IntVector& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

// Floor division rounding toward -inf.
Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row echelon reduction in place; `track` receives the same row operations.
// Returns the pivot columns in order.
std::vector<std::size_t> echelon(IntMatrix& m, std::size_t cols, IntMatrix* track) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    // Euclid on column c among rows >= row
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = row; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      if (track) std::swap((*track)[row], (*track)[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        const Integer f = -fdiv(m[i][c], m[row][c]);
        row_axpy(m[i], f, m[row]);
        if (track) row_axpy((*track)[i], f, (*track)[row]);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[row][c] == 0) continue;
    if (m[row][c] < 0) {
      for (Integer& x : m[row]) x = -x;
      if (track) {
        for (Integer& x : (*track)[row]) x = -x;
      }
    }
    for (std::size_t i = 0; i < row; ++i) {
      const Integer f = -fdiv(m[i][c], m[row][c]);
      row_axpy(m[i], f, m[row]);
      if (track) row_axpy((*track)[i], f, (*track)[row]);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), IntVector(cols, Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

IntMatrix hermite_form(const IntMatrix& rows, std::size_t cols) {
  IntMatrix m;
  for (const IntVector& r : rows) {
    if (r.size() != cols) throw InvalidInput("hermite_form: ragged matrix");
    if (!is_zero_row(r)) m.push_back(r);
  }
  const std::size_t rank = echelon(m, cols, nullptr).size();
  m.resize(rank);
  return m;
}

std::size_t lattice_rank(const IntMatrix& rows, std::size_t cols) { return hermite_form(rows, cols).size(); }

bool in_lattice(const IntMatrix& hermite, const IntVector& v) {
  IntVector r = v;
  for (const IntVector& row : hermite) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    for (std::size_t j = 0; j < c; ++j) {
      if (r[j] != 0) return false;
    }
    if (r[c] % row[c] != 0) return false;
    row_axpy(r, -(r[c] / row[c]), row);
  }
  return is_zero_row(r);
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t n) {
  IntMatrix m = a;
  for (const IntVector& r : m) {
    if (r.size() != n) throw InvalidInput("left_kernel: ragged matrix");
  }
  IntMatrix track = identity_matrix(a.size());
  const std::size_t rank = echelon(m, n, &track).size();
  IntMatrix kernel(track.begin() + static_cast<std::ptrdiff_t>(rank), track.end());
  return hermite_form(kernel, a.size());
}

SmithForm smith_form(const IntMatrix& a, std::size_t cols) {
  const std::size_t k = a.size();
  IntMatrix m = a;
  SmithForm out{identity_matrix(k), identity_matrix(cols), {}};
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (IntVector& r : m) std::swap(r[x], r[y]);
    for (IntVector& r : out.v) std::swap(r[x], r[y]);
  };
  auto col_axpy = [&](std::size_t dst, const Integer& f, std::size_t src) {
    for (IntVector& r : m) r[dst] += f * r[src];
    for (IntVector& r : out.v) r[dst] += f * r[src];
  };
  for (std::size_t t = 0; t < std::min(k, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t bi = k, bj = cols;
      for (std::size_t i = t; i < k; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (bi == k || abs(m[i][j]) < abs(m[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == k) break;
      std::swap(m[t], m[bi]);
      std::swap(out.u[t], out.u[bi]);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        if (m[i][t] == 0) continue;
        const Integer f = -fdiv(m[i][t], m[t][t]);
        row_axpy(m[i], f, m[t]);
        row_axpy(out.u[i], f, out.u[t]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_axpy(j, -fdiv(m[t][j], m[t][t]), t);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and go again
      std::size_t bad = k;
      for (std::size_t i = t + 1; i < k && bad == k; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == k) break;
      row_axpy(m[t], Integer(1), m[bad]);
      row_axpy(out.u[t], Integer(1), out.u[bad]);
    }
    if (m[t][t] == 0) break;
    if (m[t][t] < 0) {
      for (Integer& x : m[t]) x = -x;
      for (Integer& x : out.u[t]) x = -x;
    }
    out.diagonal.push_back(m[t][t]);
  }
  return out;
}

IntMatrix lll_reduce(IntMatrix b) {
  const std::size_t n = b.size();
  if (n == 0) return b;
  const std::size_t dim = b[0].size();
  // exact rational Gram-Schmidt data
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bstar_norm(n);
  std::vector<std::vector<Rational>> bstar(n, std::vector<Rational>(dim));
  auto recompute = [&](std::size_t from) {
    for (std::size_t i = from; i < n; ++i) {
      for (std::size_t t = 0; t < dim; ++t) bstar[i][t] = b[i][t];
      for (std::size_t j = 0; j < i; ++j) {
        Rational d = 0;
        for (std::size_t t = 0; t < dim; ++t) d += Rational(b[i][t]) * bstar[j][t];
        if (bstar_norm[j] == 0) throw InvalidInput("lll_reduce: dependent rows");
        mu[i][j] = d / bstar_norm[j];
        for (std::size_t t = 0; t < dim; ++t) bstar[i][t] -= mu[i][j] * bstar[j][t];
      }
      Rational s = 0;
      for (std::size_t t = 0; t < dim; ++t) s += bstar[i][t] * bstar[i][t];
      bstar_norm[i] = s;
    }
  };
  recompute(0);
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const Rational& m = mu[k][j];
      if (abs(m) * 2 <= 1) continue;
      // nearest integer
      Integer r = floor_div(m + Rational(1, 2));
      row_axpy(b[k], -r, b[j]);
      for (std::size_t t = 0; t <= j; ++t) {
        if (t == j) {
          mu[k][t] -= Rational(r);
        } else {
          mu[k][t] -= Rational(r) * mu[j][t];
        }
      }
    }
    if (bstar_norm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar_norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      recompute(k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace upos
