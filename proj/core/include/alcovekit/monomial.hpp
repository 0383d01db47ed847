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

// Symbolic monomial matrices over F_q((u)).
//
// A nonzero entry is g^z u^m where g generates F_q^x, so z is read modulo
// Q = q - 1. The root of unity omega is g^{Q/e} and -1 is g^{Q/2}.

#ifndef ALCOVEKIT_MONOMIAL_HPP_
#define ALCOVEKIT_MONOMIAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace alcovekit {

struct MonoEntry {
  std::int64_t z = 0;  // exponent of the generator, modulo Q
  std::int64_t m = 0;  // exponent of u

  bool operator==(const MonoEntry&) const = default;
};

// Column i holds the entry d[i] in row perm[i].
struct MonomialMatrix {
  std::int64_t Q = 1;
  std::vector<int> perm;
  std::vector<MonoEntry> d;

  static MonomialMatrix identity(int n, std::int64_t Q);
  static MonomialMatrix permutation(const std::vector<int>& sigma,
                                    std::int64_t Q);
  static MonomialMatrix diagonal(const std::vector<MonoEntry>& entries,
                                 std::int64_t Q);

  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  bool is_u_free() const;
  bool is_diagonal() const;
  bool operator==(const MonomialMatrix&) const = default;
  // Rows of "g^z u^m" strings with zeros as "0".
  std::string to_string() const;
};

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix inverse(const MonomialMatrix& a);
MonomialMatrix power(const MonomialMatrix& a, std::int64_t k);
// Conjugation tau . a . tau^{-1} by the permutation matrix of tau.
MonomialMatrix conjugate_by_permutation(const MonomialMatrix& a,
                                        const std::vector<int>& tau);
// u -> g^k u.
MonomialMatrix scale_u(const MonomialMatrix& a, std::int64_t k);
// Reinterpret exponents for a larger field with Q' a multiple of Q.
MonomialMatrix reembed(const MonomialMatrix& a, std::int64_t new_Q);
// Equality modulo scalar matrices (used for PGL factors).
bool equal_mod_scalars(const MonomialMatrix& a, const MonomialMatrix& b);

std::int64_t sign_exponent(std::int64_t p, std::int64_t Q);

}  // namespace alcovekit

#endif  // ALCOVEKIT_MONOMIAL_HPP_
