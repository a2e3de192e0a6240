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

// Truncated quadrature on wedge contours: the two rays apex + r*exp(+-i*angle),
// r in [0, half_length], oriented from the lower ray to the upper ray. All
// contour-integral kernels in this project are built on these rules.

#ifndef HSAL_QUAD_HPP
#define HSAL_QUAD_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "hsal/cplx.hpp"
#include "hsal/errors.hpp"
#include "hsal/gauss.hpp"

namespace hsal::quad {

struct WedgeContour {
  double apex = 0.0;         // real offset of the wedge tip
  double angle = M_PI / 3;   // ray angle in (0, pi)
  double half_length = 0.0;  // truncation radius per ray
  int nodes_per_ray = 256;
};

struct WedgeRule {
  std::vector<std::complex<double>> nodes;
  std::vector<std::complex<double>> weights;  // ray direction factors folded in
  WedgeContour source;
  double est_tail_bound = 0.0;  // tail bound for envelopes exp(-r^3/6)
};

struct QuadConfig {
  double tol = 1e-10;
  int nodes_per_ray = 256;
  int max_nodes = 1 << 16;
};

// Generic rule at any scalar precision. Nodes are emitted lower ray first
// (outermost point inward), then upper ray (apex outward), so conjugate pairs
// sit at mirrored positions and the rule follows the contour orientation.
template <class R>
struct BasicRule {
  std::vector<Cplx<R>> nodes;
  std::vector<Cplx<R>> weights;
};

namespace detail {

// Geometric panel boundaries on [0, len] graded toward 0, where the
// integrands peak and the 1/(z+w)-type factors vary fastest.
inline std::vector<double> panel_edges(double len) {
  std::vector<double> edges;
  double r = len;
  edges.push_back(r);
  const double ratio = 0.5;
  while (r * ratio > 0.25 && edges.size() < 14) {
    r *= ratio;
    edges.push_back(r);
  }
  edges.push_back(0.0);
  return edges;  // descending, ends at 0
}

template <class R>
void append_ray(BasicRule<R>& rule, const R& apex, const Cplx<R>& dir, const Cplx<R>& wfactor,
                const std::vector<double>& edges_desc, int nodes_per_panel, bool outside_in) {
  std::vector<R> gx, gw;
  gauss_legendre<R>(nodes_per_panel, gx, gw);
  const int np = static_cast<int>(edges_desc.size()) - 1;
  for (int p = 0; p < np; ++p) {
    int idx = outside_in ? p : (np - 1 - p);
    double hi = edges_desc[idx];
    double lo = edges_desc[idx + 1];
    R mid = R(0.5 * (hi + lo)), half = R(0.5 * (hi - lo));
    for (int k = 0; k < nodes_per_panel; ++k) {
      int kk = outside_in ? (nodes_per_panel - 1 - k) : k;
      R r = mid + half * gx[kk];
      rule.nodes.push_back(Cplx<R>(apex, R(0)) + Cplx<R>(dir.re * r, dir.im * r));
      rule.weights.push_back(Cplx<R>(wfactor.re * (gw[kk] * half), wfactor.im * (gw[kk] * half)));
    }
  }
}

// Two-ray wedge rule: integral from apex+len*exp(-i*angle) up to
// apex+len*exp(+i*angle).
template <class R>
BasicRule<R> make_wedge(const R& apex, double angle, double len, int nodes_per_ray) {
  using std::cos;
  using std::sin;
  BasicRule<R> rule;
  auto edges = panel_edges(len);
  int npanel = static_cast<int>(edges.size()) - 1;
  int per_panel = std::max(4, nodes_per_ray / npanel);
  R c = cos(R(angle)), s = sin(R(angle));
  Cplx<R> down{c, -s}, up{c, s};
  // Lower ray runs toward the apex: dz = -e^{-i angle} dr.
  append_ray(rule, apex, down, Cplx<R>(-down.re, -down.im), edges, per_panel, true);
  append_ray(rule, apex, up, up, edges, per_panel, false);
  return rule;
}

inline double cubic_truncation_radius(double tol, double envelope_c) {
  // Smallest R with -R^3/3 + c R^2 + margin < log(tol); the margin absorbs
  // the apex- and |x|-dependent constant of the default evaluation box.
  const double target = std::log(tol) - 30.0;
  double r = 2.0;
  while (-r * r * r / 3.0 + envelope_c * r * r > target && r < 200.0) r += 0.125;
  return r;
}

inline double gaussian_truncation_radius(double tol, double rate) {
  const double target = -std::log(tol) + 30.0;
  return std::sqrt(target / rate);
}

}  // namespace detail

// Wedge rule with truncation radius from the cubic decay envelope
// exp(-R^3/3 + c R^2) < tol (envelope constant for the default box
// |x|,|y| <= 10, s,t <= 10). Vertical contours (angle pi/2) have no cubic
// decay along the rays; there the envelope is Gaussian with rate set by the
// apex, which must then be positive.
WedgeRule build_wedge_rule(double apex, double angle, double tol, int max_nodes);

// Same geometry with an explicitly chosen radius; used by kernel families
// whose integrands decay at caller-known Gaussian rates.
WedgeRule build_wedge_rule_sized(double apex, double angle, double half_length, int nodes_per_ray,
                                 int max_nodes);

template <class F>
std::complex<double> integrate_single(F&& f, const WedgeRule& rule) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    std::complex<double> v = f(rule.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NonFiniteIntegrand("integrate_single: integrand not finite at a node");
    acc += rule.weights[i] * v;
  }
  return acc;
}

template <class F2>
std::complex<double> integrate_double(F2&& f, const WedgeRule& rule_z, const WedgeRule& rule_w) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < rule_z.nodes.size(); ++i) {
    std::complex<double> row = 0.0;
    for (std::size_t j = 0; j < rule_w.nodes.size(); ++j) {
      std::complex<double> v = f(rule_z.nodes[i], rule_w.nodes[j]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NonFiniteIntegrand("integrate_double: integrand not finite at a node pair");
      row += rule_w.weights[j] * v;
    }
    acc += rule_z.weights[i] * row;
  }
  return acc;
}

struct AirySuiteValue {
  double ai = 0.0;
  double ai_prime = 0.0;
  double tail_integral = 0.0;  // integral of Ai over [x, infinity)
};

// Ai, Ai' and the Airy tail integral by contour quadrature; the tail's inner
// integral over the level is done analytically as 1/z.
AirySuiteValue airy_suite(double x, const QuadConfig& cfg = {});

double heat_kernel(double t, double x, double y);

}  // namespace hsal::quad

#endif  // HSAL_QUAD_HPP
