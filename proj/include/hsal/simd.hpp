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

// Inner reductions of the tensor-product contour quadratures. Every kernel
// family in this project factors its double integral as
//
//   sum_{i,j} g_i h_j rho(a_i, b_j)
//
// with per-node arrays g, a (z-axis) and h, b (w-axis) and a rational
// coupling rho. The couplings needed are 1/(a+b+c), (a-b)/(a+b+c) and
// (a-b)/(a+b+c)^2. Scalar reference implementations and AVX2 variants are
// selected at runtime and must agree to rounding noise (equivalence-tested).

#ifndef HSAL_SIMD_HPP
#define HSAL_SIMD_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace hsal::simd {

// Split complex storage (structure of arrays).
struct CVec {
  std::vector<double> re, im;

  CVec() = default;
  explicit CVec(std::size_t n) : re(n, 0.0), im(n, 0.0) {}
  std::size_t size() const { return re.size(); }
  void push_back(std::complex<double> z) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  std::complex<double> at(std::size_t i) const { return {re[i], im[i]}; }
};

enum class Coupling {
  inv_sum,   // 1/(a+b+c)
  ratio,     // (a-b)/(a+b+c)
  ratio_sq,  // (a-b)/(a+b+c)^2
};

std::complex<double> pair_reduce(Coupling k, const CVec& g, const CVec& a, const CVec& h,
                                 const CVec& b, std::complex<double> c);

// Weighted single sums sum_i g_i and sum_i g_i / (a_i + c); scalar-only,
// kept here so all reduction entry points live in one place.
std::complex<double> sum(const CVec& g);
std::complex<double> sum_inv(const CVec& g, const CVec& a, std::complex<double> c);

// Active backend name ("avx2" or "scalar"). The HSAL_SIMD environment
// variable ("scalar"/"avx2") overrides CPU detection; force_backend does the
// same programmatically (tests use it for equivalence runs).
std::string active_backend();
void force_backend(const std::string& name);

}  // namespace hsal::simd

#endif  // HSAL_SIMD_HPP
