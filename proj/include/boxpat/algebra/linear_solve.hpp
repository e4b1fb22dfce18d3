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

#include <cstddef>
#include <utility>
#include <vector>

#include "boxpat/algebra/bi_poly.hpp"
#include "boxpat/algebra/rational.hpp"

namespace boxpat {

/// Dense row-major square matrix over Z[x,t].
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  BiPoly& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const BiPoly& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  std::vector<BiPoly> apply(const std::vector<BiPoly>& v) const {
    std::vector<BiPoly> out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  std::size_t n_;
  std::vector<BiPoly> cells_;
};

/// Solution of M s = b in Cramer form: s_i = numerators[i] / det.
struct CramerSolution {
  BiPoly det;
  std::vector<BiPoly> numerators;
};

/// Fraction-free (Bareiss) elimination on the augmented matrix [M | rhs]
/// followed by fraction-free back substitution. Every intermediate entry is
/// a minor of the augmented matrix, so all divisions are exact in Z[x,t].
///
/// Throws SingularSystem when the determinant is identically zero.
inline CramerSolution solve_cramer(PolyMatrix m, std::vector<BiPoly> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw PreconditionViolation("right-hand side has wrong length");
  if (n == 0) return {BiPoly(1), {}};

  BiPoly prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) throw SingularSystem("determinant polynomial is identically zero");
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(p, c));
      std::swap(rhs[k], rhs[p]);
    }
    const BiPoly& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BiPoly lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly v = pivot * m(i, j);
        if (!lead.is_zero() && !m(k, j).is_zero()) v -= lead * m(k, j);
        m(i, j) = v.exact_div(prev);
      }
      BiPoly v = pivot * rhs[i];
      if (!lead.is_zero() && !rhs[k].is_zero()) v -= lead * rhs[k];
      rhs[i] = v.exact_div(prev);
      m(i, k) = BiPoly();
    }
    prev = pivot;
  }

  CramerSolution sol{m(n - 1, n - 1), std::vector<BiPoly>(n)};
  for (std::size_t i = n; i-- > 0;) {
    BiPoly acc = sol.det * rhs[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!m(i, j).is_zero() && !sol.numerators[j].is_zero()) acc -= m(i, j) * sol.numerators[j];
    sol.numerators[i] = acc.exact_div(m(i, i));
  }
  return sol;
}

/// Exact solution vector of M s = rhs, one normalized rational function per
/// component.
inline std::vector<RationalGF> solve_polyring_system(const PolyMatrix& m,
                                                     const std::vector<BiPoly>& rhs) {
  CramerSolution c = solve_cramer(m, rhs);
  std::vector<RationalGF> out;
  out.reserve(c.numerators.size());
  for (auto& num : c.numerators) out.emplace_back(std::move(num), c.det);
  return out;
}

}  // namespace boxpat
