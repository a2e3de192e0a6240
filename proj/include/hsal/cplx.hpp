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

// Complex arithmetic over a generic real scalar. std::complex is only
// specified for the builtin floating types, so the contour integrands that
// also run at MPFR precision use this instead.

#ifndef HSAL_CPLX_HPP
#define HSAL_CPLX_HPP

#include <cmath>

namespace hsal {

template <class R>
struct Cplx {
  R re{};
  R im{};

  Cplx() = default;
  Cplx(R r) : re(std::move(r)), im(R(0)) {}  // NOLINT
  Cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o) { *this = *this * o; return *this; }

  friend Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
};

// exp(x+iy) = e^x (cos y + i sin y); uses ADL so mp::Real picks up its own
// exp/sin/cos.
template <class R>
Cplx<R> cexp(const Cplx<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  R m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

template <class R>
R cabs2(const Cplx<R>& z) {
  return z.re * z.re + z.im * z.im;
}

}  // namespace hsal

#endif  // HSAL_CPLX_HPP
