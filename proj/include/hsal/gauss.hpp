/*
 * Copyright 2026 The hsal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSAL_GAUSS_HPP
#define HSAL_GAUSS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace hsal {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
// Templated on the scalar so rules can be generated at MPFR precision: a
// node that is only double-accurate perturbs the huge oscillatory summands
// by ~1e-16 relative, which defeats the extra mantissa entirely.
template <class R>
void gauss_legendre(int n, std::vector<R>& x, std::vector<R>& w) {
  x.assign(n, R(0));
  w.assign(n, R(0));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    R z = R(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    R pp(0);
    // Quadratic convergence from the Chebyshev seed (~3 correct digits)
    // reaches 320-bit precision within 8 steps; 10 adds slack.
    for (int it = 0; it < 10; ++it) {
      R p0(1), p1(0);
      for (int j = 0; j < n; ++j) {
        R p2 = p1;
        p1 = p0;
        p0 = ((R(2 * j + 1) * z * p1) - R(j) * p2) / R(j + 1);
      }
      pp = R(n) * (z * p0 - p1) / (z * z - R(1));
      z = z - p0 / pp;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    R wi = R(2) / ((R(1) - z * z) * pp * pp);
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
}

}  // namespace hsal

#endif  // HSAL_GAUSS_HPP
