#include "lensball/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lensball {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::symmetric() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::minor(std::size_t k) const {
  IntMatrix m(rows - 1, cols - 1);
  for (std::size_t i = 0, r = 0; i < rows; ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, c = 0; j < cols; ++j) {
      if (j == k) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::leading(std::size_t n) const {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows;
  if (n != m.cols) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t R = m.rows, C = m.cols, n = std::min(R, C);
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < C; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < R; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    bool again = true;
    while (again) {
      again = false;
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (m(i, j) != 0 && (pi == R || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == R) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      const BigInt piv = m(t, t);
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t j = t; j < C; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) again = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), piv.get_mpz_t());
        for (std::size_t i = t; i < R; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) again = true;
      }
      if (again) continue;
      // Divisibility: fold a row that the pivot does not divide into row t.
      for (std::size_t i = t + 1; i < R && !again; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m(i, j) % piv != 0) {
            for (std::size_t k = t; k < C; ++k) m(t, k) += m(i, k);
            again = true;
            break;
          }
    }
  }
  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = abs(m(i, i));
  // Zeros last; the nonzero prefix already divides in order.
  std::stable_partition(d.begin(), d.end(), [](const BigInt& x) { return x != 0; });
  return d;
}

}  // namespace lensball
