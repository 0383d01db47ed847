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

#ifndef ALCOVEKIT_FINITE_FIELD_HPP_
#define ALCOVEKIT_FINITE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace alcovekit {

// Element of F_{p^k}: coefficients c_0 + c_1 x + ... + c_{k-1} x^{k-1}.
using FqElem = std::vector<std::int64_t>;

// F_p[x] / (f) with f the least monic primitive polynomial of degree k in
// the order comparing coefficient vectors from the top degree down.
class FiniteField {
 public:
  FiniteField(std::int64_t p, int k);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::int64_t order() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  FqElem zero() const { return FqElem(k_, 0); }
  FqElem one() const { return from_int(1); }
  FqElem from_int(std::int64_t v) const;
  FqElem generator() const;  // the class of x

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(FqElem a, std::int64_t e) const;
  FqElem inv(const FqElem& a) const;  // throws on zero
  FqElem frobenius(const FqElem& a) const { return pow(a, p_); }
  bool is_zero(const FqElem& a) const;
  std::string to_string(const FqElem& a) const;

 private:
  std::int64_t p_;
  int k_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;  // monic, length k + 1
};

struct FqMatrix {
  std::shared_ptr<const FiniteField> field;
  int n = 0;
  std::vector<FqElem> a;  // row-major

  static FqMatrix identity(std::shared_ptr<const FiniteField> f, int n);
  // Entries given as integers modulo p.
  static FqMatrix from_ints(std::shared_ptr<const FiniteField> f, int n,
                            const std::vector<std::int64_t>& entries);

  const FqElem& at(int i, int j) const { return a[i * n + j]; }
  FqElem& at(int i, int j) { return a[i * n + j]; }
  bool operator==(const FqMatrix& o) const { return n == o.n && a == o.a; }
  std::string to_string() const;
};

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y);
FqMatrix inverse(const FqMatrix& m);  // throws std::domain_error if singular

}  // namespace alcovekit

#endif  // ALCOVEKIT_FINITE_FIELD_HPP_
