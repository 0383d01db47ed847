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

#include "alcovekit/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace alcovekit {
namespace {

std::int64_t md(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      md(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

}  // namespace

MonomialMatrix MonomialMatrix::identity(int n, std::int64_t Q) {
  MonomialMatrix a;
  a.Q = Q;
  a.perm.resize(n);
  a.d.assign(n, MonoEntry{});
  for (int i = 0; i < n; ++i) a.perm[i] = i;
  return a;
}

MonomialMatrix MonomialMatrix::permutation(const std::vector<int>& sigma,
                                           std::int64_t Q) {
  MonomialMatrix a = identity(static_cast<int>(sigma.size()), Q);
  a.perm = sigma;
  return a;
}

MonomialMatrix MonomialMatrix::diagonal(const std::vector<MonoEntry>& entries,
                                        std::int64_t Q) {
  MonomialMatrix a = identity(static_cast<int>(entries.size()), Q);
  for (size_t i = 0; i < entries.size(); ++i)
    a.d[i] = {md(entries[i].z, Q), entries[i].m};
  return a;
}

bool MonomialMatrix::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm[i] != i || d[i].z != 0 || d[i].m != 0) return false;
  return true;
}

bool MonomialMatrix::is_u_free() const {
  for (const auto& e : d)
    if (e.m != 0) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (int i = 0; i < size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

std::string MonomialMatrix::to_string() const {
  const int n = size();
  std::vector<std::string> cell(n * n, "0");
  for (int c = 0; c < n; ++c) {
    std::ostringstream os;
    const auto& e = d[c];
    if (e.z == 0 && e.m == 0) {
      os << "1";
    } else {
      bool any = false;
      if (e.z != 0) {
        os << "g^" << e.z;
        any = true;
      }
      if (e.m != 0) os << (any ? " " : "") << "u^" << e.m;
    }
    cell[perm[c] * n + c] = os.str();
  }
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < n; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < n; ++c) os << (c ? ", " : "") << cell[r * n + c];
  }
  os << "]";
  return os.str();
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size() || a.Q != b.Q)
    throw std::invalid_argument("monomial matrix mismatch");
  MonomialMatrix c = MonomialMatrix::identity(a.size(), a.Q);
  for (int i = 0; i < a.size(); ++i) {
    int k = b.perm[i];
    c.perm[i] = a.perm[k];
    c.d[i] = {md(b.d[i].z + a.d[k].z, a.Q), b.d[i].m + a.d[k].m};
  }
  return c;
}

MonomialMatrix inverse(const MonomialMatrix& a) {
  MonomialMatrix c = MonomialMatrix::identity(a.size(), a.Q);
  for (int i = 0; i < a.size(); ++i) {
    int k = a.perm[i];
    c.perm[k] = i;
    c.d[k] = {md(-a.d[i].z, a.Q), -a.d[i].m};
  }
  return c;
}

MonomialMatrix power(const MonomialMatrix& a, std::int64_t k) {
  if (k < 0) return power(inverse(a), -k);
  MonomialMatrix r = MonomialMatrix::identity(a.size(), a.Q);
  MonomialMatrix b = a;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

MonomialMatrix conjugate_by_permutation(const MonomialMatrix& a,
                                        const std::vector<int>& tau) {
  MonomialMatrix c = MonomialMatrix::identity(a.size(), a.Q);
  for (int i = 0; i < a.size(); ++i) {
    c.perm[tau[i]] = tau[a.perm[i]];
    c.d[tau[i]] = a.d[i];
  }
  return c;
}

MonomialMatrix scale_u(const MonomialMatrix& a, std::int64_t k) {
  MonomialMatrix c = a;
  for (auto& e : c.d) e.z = md(e.z + mulmod(md(e.m, a.Q), k, a.Q), a.Q);
  return c;
}

MonomialMatrix reembed(const MonomialMatrix& a, std::int64_t new_Q) {
  if (new_Q % a.Q != 0)
    throw std::invalid_argument("new exponent modulus must be a multiple");
  MonomialMatrix c = a;
  c.Q = new_Q;
  for (auto& e : c.d) e.z = mulmod(e.z, new_Q / a.Q, new_Q);
  return c;
}

bool equal_mod_scalars(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix r = a * inverse(b);
  if (!r.is_diagonal()) return false;
  for (const auto& e : r.d)
    if (!(e == r.d[0])) return false;
  return true;
}

std::int64_t sign_exponent(std::int64_t p, std::int64_t Q) {
  return p == 2 ? 0 : Q / 2;
}

}  // namespace alcovekit
