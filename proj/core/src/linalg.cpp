#include "toricreal/linalg.hpp"

#include <stdexcept>

namespace toricreal {

namespace {

// row_i -= q * row_j
void row_axpy(IntegerMatrix& M, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < M.cols(); ++c) M(i, c) -= q * M(j, c);
}

void col_axpy(IntegerMatrix& M, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t r = 0; r < M.rows(); ++r) M(r, i) -= q * M(r, j);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm out{A, IntegerMatrix::identity(m), IntegerMatrix::identity(n), 0};
  IntegerMatrix& D = out.D;
  IntegerMatrix& U = out.U;
  IntegerMatrix& V = out.V;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found_any = true;
    for (;;) {
      // Pivot: smallest nonzero |entry| in the active block, first in row-major order.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (pi == m || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        found_any = false;
        break;
      }
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = tdiv(D(i, t), D(t, t));
        row_axpy(D, i, t, q);
        row_axpy(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = tdiv(D(t, j), D(t, t));
        col_axpy(D, j, t, q);
        col_axpy(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            row_axpy(D, t, i, Integer(-1));
            row_axpy(U, t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (!found_any) break;
    if (D(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) D(t, c) = -D(t, c);
      for (std::size_t c = 0; c < m; ++c) U(t, c) = -U(t, c);
    }
    ++out.rank;
  }
  return out;
}

HermiteForm hermite_normal_form(const IntegerMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  HermiteForm out{A, IntegerMatrix::identity(m), 0};
  IntegerMatrix& H = out.H;
  IntegerMatrix& U = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    for (;;) {
      std::size_t pi = m;
      for (std::size_t i = r; i < m; ++i) {
        if (H(i, c) == 0) continue;
        if (pi == m || abs(H(i, c)) < abs(H(pi, c))) pi = i;
      }
      if (pi == m) break;
      H.swap_rows(r, pi);
      U.swap_rows(r, pi);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Integer q = tdiv(H(i, c), H(r, c));
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      for (std::size_t j = 0; j < n; ++j) H(r, j) = -H(r, j);
      for (std::size_t j = 0; j < m; ++j) U(r, j) = -U(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = fdiv(H(i, c), H(r, c));
      if (q != 0) {
        row_axpy(H, i, r, q);
        row_axpy(U, i, r, q);
      }
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<IntVector> integer_kernel(const IntegerMatrix& A) {
  const std::size_t n = A.cols();
  SmithForm snf = smith_normal_form(A);
  const std::size_t k = n - snf.rank;
  if (k == 0) return {};
  IntegerMatrix basis(k, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(j, i) = snf.V(i, snf.rank + j);
  HermiteForm hnf = hermite_normal_form(basis);
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(hnf.H.row_vector(j));
  return out;
}

RationalMatrix rref(RationalMatrix A, std::vector<std::size_t>* pivots) {
  const std::size_t m = A.rows(), n = A.cols();
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    if (p == m) continue;
    A.swap_rows(r, p);
    Rational inv = 1 / A(r, c);
    for (std::size_t j = c; j < n; ++j) A(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Rational f = A(i, c);
      for (std::size_t j = c; j < n; ++j) A(i, j) -= f * A(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return A;
}

std::size_t rank(const RationalMatrix& A) {
  std::vector<std::size_t> piv;
  rref(A, &piv);
  return piv.size();
}

std::size_t rank(const IntegerMatrix& A) { return rank(to_rational(A)); }

std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  RationalMatrix M(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = rows[i][j];
  return rank(M);
}

std::vector<RatVector> rational_kernel(const RationalMatrix& A) {
  std::vector<std::size_t> piv;
  RationalMatrix R = rref(A, &piv);
  const std::size_t n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RatVector> solve_rational(const RationalMatrix& A, const RatVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_rational: size mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  RationalMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> piv;
  RationalMatrix R = rref(aug, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = R(i, n);
  return x;
}

std::optional<IntVector> solve_integer(const IntegerMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_integer: size mismatch");
  SmithForm snf = smith_normal_form(A);
  IntVector ub = snf.U * b;
  IntVector y(A.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / snf.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V * y;
}

Rational determinant(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
  RationalMatrix M = A;
  const std::size_t n = M.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p == n) return 0;
    if (p != c) {
      M.swap_rows(p, c);
      det = -det;
    }
    det *= M(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      Rational f = M(i, c) / M(c, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& A) {
  Rational d = determinant(to_rational(A));
  return d.get_num();
}

std::optional<RationalMatrix> inverse(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = A.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  RationalMatrix R = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

IntegerMatrix unimodular_completion(const IntVector& u) {
  if (u.empty() || content(u) != 1) throw std::invalid_argument("unimodular_completion: u must be primitive");
  const std::size_t n = u.size();
  IntegerMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j) row(0, j) = u[j];
  SmithForm snf = smith_normal_form(row);
  // u * V = U^{-1} e_1^T, so the first row of V^{-1} is +-u.
  auto vinv = inverse(to_rational(snf.V));
  IntegerMatrix W(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) W(i, j) = (*vinv)(i, j).get_num();
  if (W.row_vector(0) != u)
    for (std::size_t j = 0; j < n; ++j) W(0, j) = -W(0, j);
  for (std::size_t i = 0; i + 1 < n; ++i) W.swap_rows(i, i + 1);
  return W;
}

}  // namespace toricreal
