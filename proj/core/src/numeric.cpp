// Copyright 2025 The alcovekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alcovekit/numeric.hpp"

#include <limits>
#include <utility>

namespace alcovekit {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::transpose() const {
  IMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IMat operator*(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  IMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

IVec operator*(const IMat& m, const IVec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("matrix/vector shape mismatch");
  IVec out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

QVec operator*(const IMat& m, const QVec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("matrix/vector shape mismatch");
  QVec out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) out[i] += Rational(m(i, j)) * v[j];
  return out;
}

IMat inverse_unimodular(const IMat& m) {
  if (m.rows != m.cols) throw std::domain_error("non-square matrix");
  const int n = m.rows;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[c], a[piv]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  IMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& q = a[i][n + j];
      if (boost::multiprecision::denominator(q) != 1)
        throw std::domain_error("matrix is not unimodular");
      out(i, j) = boost::multiprecision::numerator(q);
    }
  return out;
}

Int determinant(const IMat& m) {
  if (m.rows != m.cols) throw std::domain_error("non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  // Bareiss elimination.
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IVec operator+(const IVec& x, const IVec& y) {
  IVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] += y.at(i);
  return z;
}
IVec operator-(const IVec& x, const IVec& y) {
  IVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y.at(i);
  return z;
}
IVec operator-(const IVec& x) {
  IVec z(x);
  for (auto& v : z) v = -v;
  return z;
}
IVec scale(const Int& s, const IVec& x) {
  IVec z(x);
  for (auto& v : z) v *= s;
  return z;
}
QVec operator+(const QVec& x, const QVec& y) {
  QVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] += y.at(i);
  return z;
}
QVec operator-(const QVec& x, const QVec& y) {
  QVec z(x);
  for (size_t i = 0; i < z.size(); ++i) z[i] -= y.at(i);
  return z;
}
QVec scale(const Rational& s, const QVec& x) {
  QVec z(x);
  for (auto& v : z) v *= s;
  return z;
}
QVec to_rational(const IVec& x) {
  QVec z;
  z.reserve(x.size());
  for (const auto& v : x) z.emplace_back(v);
  return z;
}
Int dot(const IVec& x, const IVec& y) {
  Int s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y.at(i);
  return s;
}
Rational dot(const IVec& x, const QVec& y) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += Rational(x[i]) * y.at(i);
  return s;
}
bool is_integral(const QVec& x) {
  for (const auto& v : x)
    if (boost::multiprecision::denominator(v) != 1) return false;
  return true;
}
IVec to_integral(const QVec& x) {
  IVec z;
  z.reserve(x.size());
  for (const auto& v : x) {
    if (boost::multiprecision::denominator(v) != 1)
      throw std::domain_error("vector is not integral");
    z.push_back(boost::multiprecision::numerator(v));
  }
  return z;
}
bool is_zero(const IVec& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

Int floor_q(const Rational& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Int ceil_q(const Rational& q) { return -floor_q(-q); }

Int mod_floor(const Int& a, const Int& m) {
  Int mm = m < 0 ? Int(-m) : m;
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rational& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(std::string_view s) {
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw std::invalid_argument("empty integer");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad integer");
    for (size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9')
        throw std::invalid_argument("bad integer: " + std::string(t));
    Int v(std::string(t.substr(i)));
    return t[0] == '-' ? Int(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(s.substr(0, slash)), d);
}

std::int64_t to_i64(const Int& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(z);
}

}  // namespace alcovekit
