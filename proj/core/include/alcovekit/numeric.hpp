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

#ifndef ALCOVEKIT_NUMERIC_HPP_
#define ALCOVEKIT_NUMERIC_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcovekit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rational>;

// Dense row-major integer matrix.
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
  bool operator==(const IMat& o) const = default;
  bool operator<(const IMat& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }

  static IMat identity(int n);
  IMat transpose() const;
};

IMat operator*(const IMat& x, const IMat& y);
IVec operator*(const IMat& m, const IVec& v);
QVec operator*(const IMat& m, const QVec& v);

// Inverse of a matrix that is invertible over the integers.
// Throws std::domain_error otherwise.
IMat inverse_unimodular(const IMat& m);
// Exact determinant by fraction-free elimination.
Int determinant(const IMat& m);

IVec operator+(const IVec& x, const IVec& y);
IVec operator-(const IVec& x, const IVec& y);
IVec operator-(const IVec& x);
IVec scale(const Int& s, const IVec& x);
QVec operator+(const QVec& x, const QVec& y);
QVec operator-(const QVec& x, const QVec& y);
QVec scale(const Rational& s, const QVec& x);
QVec to_rational(const IVec& x);
Int dot(const IVec& x, const IVec& y);
Rational dot(const IVec& x, const QVec& y);
bool is_integral(const QVec& x);
IVec to_integral(const QVec& x);  // throws if not integral
bool is_zero(const IVec& x);

Int floor_q(const Rational& q);
Int ceil_q(const Rational& q);
Int mod_floor(const Int& a, const Int& m);  // representative in [0, |m|)

// "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& q);
std::string to_string(const Int& z);
Rational parse_rational(std::string_view s);

std::int64_t to_i64(const Int& z);  // throws std::overflow_error

}  // namespace alcovekit

#endif  // ALCOVEKIT_NUMERIC_HPP_
