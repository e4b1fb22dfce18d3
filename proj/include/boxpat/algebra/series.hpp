/* Copyright 2026 The boxpat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "boxpat/algebra/bi_poly.hpp"

namespace boxpat {

/// Default truncation order for series computations.
inline constexpr std::size_t kDefaultSeriesOrder = 12;

/// Power series in t truncated after t^order; coefficient n is an IntPoly in x.
class TSeries {
 public:
  explicit TSeries(std::size_t order = kDefaultSeriesOrder) : coeffs_(order + 1) {}
  TSeries(std::size_t order, const BiPoly& p) : coeffs_(order + 1) {
    for (std::size_t n = 0; n <= order; ++n) coeffs_[n] = p.t_coeff(n);
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const IntPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  IntPoly& operator[](std::size_t n) { return coeffs_.at(n); }
  std::span<const IntPoly> coeffs() const { return coeffs_; }

  friend TSeries operator+(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a[n] + b[n];
    return out;
  }
  friend TSeries operator-(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = a[n] - b[n];
    return out;
  }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    TSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  TSeries truncated(std::size_t order) const {
    TSeries out(std::min(order, this->order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.coeffs_[n] = coeffs_[n];
    return out;
  }

  BiPoly to_bipoly() const { return BiPoly(coeffs_); }

  /// Integer sequence obtained by substituting x = value.
  std::vector<Integer> at_x(const Integer& value) const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(value));
    return out;
  }

  std::string to_string() const {
    return to_bipoly().to_string() + " + O(t^" + std::to_string(order() + 1) + ")";
  }

 private:
  std::vector<IntPoly> coeffs_;
};

/// Series order from the BOXPAT_SERIES_ORDER environment variable, else the
/// library default.
inline std::size_t default_series_order() {
  if (const char* env = std::getenv("BOXPAT_SERIES_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeriesOrder;
}

}  // namespace boxpat
