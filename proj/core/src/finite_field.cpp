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

#include "alcovekit/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace alcovekit {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int k) : p_(p), k_(k), q_(1) {
  if (p < 2 || k < 1) throw std::invalid_argument("bad field parameters");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("characteristic not prime");
  for (int i = 0; i < k; ++i) {
    if (q_ > (std::int64_t{1} << 40) / p)
      throw std::invalid_argument("field too large");
    q_ *= p;
  }
  const auto factors = prime_factors(q_ - 1);
  // Enumerate monic candidates, top coefficient first.
  std::int64_t count = q_;  // p^k choices for the lower coefficients
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> f(k + 1, 0);
    f[k] = 1;
    std::int64_t t = idx;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = t % p;
      t /= p;
    }
    if (f[0] == 0 && k > 1) continue;
    modulus_ = f;
    FqElem g = generator();
    if (is_zero(g)) continue;
    if (pow(g, q_ - 1) != one()) continue;
    bool primitive = true;
    for (auto l : factors)
      if (pow(g, (q_ - 1) / l) == one()) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    // A reducible modulus has fewer than q - 1 units, so a primitive x
    // already certifies irreducibility.
    return;
  }
  throw std::logic_error("no primitive polynomial found");
}

FqElem FiniteField::from_int(std::int64_t v) const {
  FqElem e(k_, 0);
  e[0] = mod(v, p_);
  return e;
}

FqElem FiniteField::generator() const {
  if (k_ == 1) return from_int(-modulus_[0]);
  FqElem e(k_, 0);
  e[1] = 1;
  return e;
}

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
  FqElem c(k_);
  for (int i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
  return c;
}

FqElem FiniteField::sub(const FqElem& a, const FqElem& b) const {
  FqElem c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod(a[i] - b[i], p_);
  return c;
}

FqElem FiniteField::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
  std::vector<std::int64_t> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i)
      prod[d - k_ + i] = mod(prod[d - k_ + i] - c * modulus_[i], p_);
  }
  return FqElem(prod.begin(), prod.begin() + k_);
}

FqElem FiniteField::pow(FqElem a, std::int64_t e) const {
  FqElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem FiniteField::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::domain_error("zero is not invertible");
  return pow(a, q_ - 2);
}

bool FiniteField::is_zero(const FqElem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

std::string FiniteField::to_string(const FqElem& a) const {
  if (k_ == 1) {
    std::int64_t v = a[0];
    return std::to_string(v > p_ / 2 ? v - p_ : v);
  }
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FqMatrix FqMatrix::identity(std::shared_ptr<const FiniteField> f, int n) {
  FqMatrix m{f, n, std::vector<FqElem>(n * n, f->zero())};
  for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

FqMatrix FqMatrix::from_ints(std::shared_ptr<const FiniteField> f, int n,
                             const std::vector<std::int64_t>& entries) {
  if (static_cast<int>(entries.size()) != n * n)
    throw std::invalid_argument("wrong number of matrix entries");
  FqMatrix m{f, n, {}};
  for (auto v : entries) m.a.push_back(f->from_int(v));
  return m;
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < n; ++j) os << (j ? "," : "") << field->to_string(at(i, j));
  }
  os << "]";
  return os.str();
}

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  const auto& f = *x.field;
  FqMatrix z{x.field, x.n, std::vector<FqElem>(x.n * x.n, f.zero())};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < x.n; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return z;
}

FqMatrix inverse(const FqMatrix& m) {
  const auto& f = *m.field;
  const int n = m.n;
  FqMatrix a = m;
  FqMatrix inv = FqMatrix::identity(m.field, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!f.is_zero(a.at(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix over F_q");
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(c, j), a.at(piv, j));
      std::swap(inv.at(c, j), inv.at(piv, j));
    }
    FqElem s = f.inv(a.at(c, c));
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = f.mul(a.at(c, j), s);
      inv.at(c, j) = f.mul(inv.at(c, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || f.is_zero(a.at(r, c))) continue;
      FqElem t = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = f.sub(a.at(r, j), f.mul(t, a.at(c, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(t, inv.at(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace alcovekit
