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

#include "hsal/simd.hpp"

#include <atomic>
#include <cstdlib>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace hsal::simd {

namespace {

template <Coupling K>
std::complex<double> pair_reduce_scalar(const CVec& g, const CVec& a, const CVec& h, const CVec& b,
                                        std::complex<double> c) {
  const std::size_t ni = g.size(), nj = h.size();
  const double cr = c.real(), ci = c.imag();
  double acc_r = 0.0, acc_i = 0.0;
  for (std::size_t i = 0; i < ni; ++i) {
    const double gr = g.re[i], gi = g.im[i], ar = a.re[i], ai = a.im[i];
    double row_r = 0.0, row_i = 0.0;
    for (std::size_t j = 0; j < nj; ++j) {
      const double dr = ar + b.re[j] + cr;
      const double di = ai + b.im[j] + ci;
      const double d2 = dr * dr + di * di;
      // q = 1/(a+b+c)
      double qr = dr / d2, qi = -di / d2;
      if constexpr (K != Coupling::inv_sum) {
        const double nr = ar - b.re[j];
        const double nim = ai - b.im[j];
        const double tr = nr * qr - nim * qi;
        const double ti = nr * qi + nim * qr;
        qr = tr;
        qi = ti;
      }
      if constexpr (K == Coupling::ratio_sq) {
        const double sr = dr / d2, si = -di / d2;
        const double tr = qr * sr - qi * si;
        const double ti = qr * si + qi * sr;
        qr = tr;
        qi = ti;
      }
      const double hr = h.re[j], hi = h.im[j];
      const double pr = qr * hr - qi * hi;
      const double pi = qr * hi + qi * hr;
      row_r += pr;
      row_i += pi;
    }
    acc_r += gr * row_r - gi * row_i;
    acc_i += gr * row_i + gi * row_r;
  }
  return {acc_r, acc_i};
}

std::complex<double> dispatch_scalar(Coupling k, const CVec& g, const CVec& a, const CVec& h,
                                     const CVec& b, std::complex<double> c) {
  switch (k) {
    case Coupling::inv_sum:
      return pair_reduce_scalar<Coupling::inv_sum>(g, a, h, b, c);
    case Coupling::ratio:
      return pair_reduce_scalar<Coupling::ratio>(g, a, h, b, c);
    case Coupling::ratio_sq:
    default:
      return pair_reduce_scalar<Coupling::ratio_sq>(g, a, h, b, c);
  }
}

#if defined(__x86_64__)

template <Coupling K>
__attribute__((target("avx2,fma"))) std::complex<double> pair_reduce_avx2(
    const CVec& g, const CVec& a, const CVec& h, const CVec& b, std::complex<double> c) {
  const std::size_t ni = g.size(), nj = h.size();
  const std::size_t njv = nj - (nj % 4);
  const __m256d vcr = _mm256_set1_pd(c.real());
  const __m256d vci = _mm256_set1_pd(c.imag());
  double acc_r = 0.0, acc_i = 0.0;
  for (std::size_t i = 0; i < ni; ++i) {
    const double ar = a.re[i], ai = a.im[i];
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    __m256d vrow_r = _mm256_setzero_pd();
    __m256d vrow_i = _mm256_setzero_pd();
    for (std::size_t j = 0; j < njv; j += 4) {
      const __m256d br = _mm256_loadu_pd(&b.re[j]);
      const __m256d bi = _mm256_loadu_pd(&b.im[j]);
      const __m256d dr = _mm256_add_pd(_mm256_add_pd(var, br), vcr);
      const __m256d di = _mm256_add_pd(_mm256_add_pd(vai, bi), vci);
      const __m256d d2 = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
      __m256d qr = _mm256_div_pd(dr, d2);
      __m256d qi = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_div_pd(di, d2));
      if constexpr (K != Coupling::inv_sum) {
        const __m256d nr = _mm256_sub_pd(var, br);
        const __m256d nim = _mm256_sub_pd(vai, bi);
        const __m256d tr = _mm256_fmsub_pd(nr, qr, _mm256_mul_pd(nim, qi));
        const __m256d ti = _mm256_fmadd_pd(nr, qi, _mm256_mul_pd(nim, qr));
        qr = tr;
        qi = ti;
      }
      if constexpr (K == Coupling::ratio_sq) {
        const __m256d sr = _mm256_div_pd(dr, d2);
        const __m256d si = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_div_pd(di, d2));
        const __m256d tr = _mm256_fmsub_pd(qr, sr, _mm256_mul_pd(qi, si));
        const __m256d ti = _mm256_fmadd_pd(qr, si, _mm256_mul_pd(qi, sr));
        qr = tr;
        qi = ti;
      }
      const __m256d hr = _mm256_loadu_pd(&h.re[j]);
      const __m256d hi = _mm256_loadu_pd(&h.im[j]);
      const __m256d pr = _mm256_fmsub_pd(qr, hr, _mm256_mul_pd(qi, hi));
      const __m256d pi = _mm256_fmadd_pd(qr, hi, _mm256_mul_pd(qi, hr));
      vrow_r = _mm256_add_pd(vrow_r, pr);
      vrow_i = _mm256_add_pd(vrow_i, pi);
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, vrow_r);
    _mm256_store_pd(li, vrow_i);
    double row_r = (lr[0] + lr[1]) + (lr[2] + lr[3]);
    double row_i = (li[0] + li[1]) + (li[2] + li[3]);
    for (std::size_t j = njv; j < nj; ++j) {
      const double dr = ar + b.re[j] + c.real();
      const double di = ai + b.im[j] + c.imag();
      const double d2 = dr * dr + di * di;
      double qr = dr / d2, qi = -di / d2;
      if constexpr (K != Coupling::inv_sum) {
        const double nr = ar - b.re[j], nim = ai - b.im[j];
        const double tr = nr * qr - nim * qi, ti = nr * qi + nim * qr;
        qr = tr;
        qi = ti;
      }
      if constexpr (K == Coupling::ratio_sq) {
        const double sr = dr / d2, si = -di / d2;
        const double tr = qr * sr - qi * si, ti = qr * si + qi * sr;
        qr = tr;
        qi = ti;
      }
      row_r += qr * h.re[j] - qi * h.im[j];
      row_i += qr * h.im[j] + qi * h.re[j];
    }
    acc_r += g.re[i] * row_r - g.im[i] * row_i;
    acc_i += g.re[i] * row_i + g.im[i] * row_r;
  }
  return {acc_r, acc_i};
}

std::complex<double> dispatch_avx2(Coupling k, const CVec& g, const CVec& a, const CVec& h,
                                   const CVec& b, std::complex<double> c) {
  switch (k) {
    case Coupling::inv_sum:
      return pair_reduce_avx2<Coupling::inv_sum>(g, a, h, b, c);
    case Coupling::ratio:
      return pair_reduce_avx2<Coupling::ratio>(g, a, h, b, c);
    case Coupling::ratio_sq:
    default:
      return pair_reduce_avx2<Coupling::ratio_sq>(g, a, h, b, c);
  }
}

#endif  // __x86_64__

using Fn = std::complex<double> (*)(Coupling, const CVec&, const CVec&, const CVec&, const CVec&,
                                    std::complex<double>);

std::atomic<Fn> g_impl{nullptr};
std::atomic<const char*> g_name{"scalar"};

Fn resolve() {
#if defined(__x86_64__)
  const char* env = std::getenv("HSAL_SIMD");
  bool want_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (env) {
    std::string s(env);
    if (s == "scalar") want_avx2 = false;
    if (s == "avx2" && !want_avx2) want_avx2 = false;  // unsupported: stay scalar
  }
  if (want_avx2) {
    g_name.store("avx2");
    return &dispatch_avx2;
  }
#endif
  g_name.store("scalar");
  return &dispatch_scalar;
}

Fn impl() {
  Fn f = g_impl.load(std::memory_order_acquire);
  if (!f) {
    f = resolve();
    g_impl.store(f, std::memory_order_release);
  }
  return f;
}

}  // namespace

std::complex<double> pair_reduce(Coupling k, const CVec& g, const CVec& a, const CVec& h,
                                 const CVec& b, std::complex<double> c) {
  return impl()(k, g, a, h, b, c);
}

std::complex<double> sum(const CVec& g) {
  double r = 0.0, im = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r += g.re[i];
    im += g.im[i];
  }
  return {r, im};
}

std::complex<double> sum_inv(const CVec& g, const CVec& a, std::complex<double> c) {
  double accr = 0.0, acci = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double dr = a.re[i] + c.real(), di = a.im[i] + c.imag();
    const double d2 = dr * dr + di * di;
    const double qr = dr / d2, qi = -di / d2;
    accr += qr * g.re[i] - qi * g.im[i];
    acci += qr * g.im[i] + qi * g.re[i];
  }
  return {accr, acci};
}

std::string active_backend() {
  impl();
  return g_name.load();
}

void force_backend(const std::string& name) {
#if defined(__x86_64__)
  if (name == "avx2" && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    g_impl.store(&dispatch_avx2);
    g_name.store("avx2");
    return;
  }
#endif
  g_impl.store(&dispatch_scalar);
  g_name.store("scalar");
}

}  // namespace hsal::simd
