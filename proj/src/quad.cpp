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

#include "hsal/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hsal::quad {

namespace {

WedgeRule finalize(double apex, double angle, double len, int nodes_per_ray, int max_nodes) {
  BasicRule<double> basic = detail::make_wedge<double>(apex, angle, len, nodes_per_ray);
  if (static_cast<int>(basic.nodes.size()) > max_nodes)
    throw BudgetExceeded("build_wedge_rule: " + std::to_string(basic.nodes.size()) +
                         " nodes exceed max_nodes=" + std::to_string(max_nodes));
  WedgeRule rule;
  rule.nodes.reserve(basic.nodes.size());
  rule.weights.reserve(basic.nodes.size());
  for (std::size_t i = 0; i < basic.nodes.size(); ++i) {
    rule.nodes.emplace_back(basic.nodes[i].re, basic.nodes[i].im);
    rule.weights.emplace_back(basic.weights[i].re, basic.weights[i].im);
  }
  rule.source = WedgeContour{apex, angle, len, nodes_per_ray};
  // Tail certificate for the canonical envelope exp(-r^3/6):
  // int_R^inf exp(-r^3/6) dr <= (2/R^2) exp(-R^3/6), doubled for two rays.
  rule.est_tail_bound = (4.0 / (len * len)) * std::exp(-len * len * len / 6.0);
  return rule;
}

}  // namespace

WedgeRule build_wedge_rule(double apex, double angle, double tol, int max_nodes) {
  if (!(angle > 0.0 && angle < M_PI))
    throw InvalidAngle("build_wedge_rule: angle must lie in (0, pi), got " +
                       std::to_string(angle));
  if (!(tol > 0.0)) throw QuadratureFailure("build_wedge_rule: tol must be positive");
  double len;
  if (std::abs(std::cos(3.0 * angle)) > 0.05) {
    len = detail::cubic_truncation_radius(tol, 6.0);
  } else {
    // Near-vertical rays: cubic term of exp(z^3/3) does not decay along the
    // contour; the Gaussian rate comes from the apex.
    if (apex <= 0.0)
      throw InvalidAngle("build_wedge_rule: vertical contour needs a positive apex");
    len = detail::gaussian_truncation_radius(tol, apex);
  }
  int per_ray = std::max(2, std::min(256, max_nodes / 2));
  return finalize(apex, angle, len, per_ray, max_nodes);
}

WedgeRule build_wedge_rule_sized(double apex, double angle, double half_length, int nodes_per_ray,
                                 int max_nodes) {
  if (!(angle > 0.0 && angle < M_PI))
    throw InvalidAngle("build_wedge_rule_sized: angle must lie in (0, pi)");
  if (!(half_length > 0.0) || nodes_per_ray < 2)
    throw QuadratureFailure("build_wedge_rule_sized: bad geometry");
  return finalize(apex, angle, half_length, nodes_per_ray, max_nodes);
}

namespace {

// Airy rules are reused across many kernel evaluations; cache them per
// (apex bucket, resolution).
const WedgeRule& airy_rule(double apex, const QuadConfig& cfg) {
  static std::map<std::pair<int, int>, WedgeRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(std::lround(apex * 16)), cfg.nodes_per_ray);
  auto it = cache.find(key);
  if (it == cache.end()) {
    double len = detail::cubic_truncation_radius(cfg.tol, 6.0);
    it = cache.emplace(key, finalize(apex, M_PI / 3, len, cfg.nodes_per_ray, cfg.max_nodes)).first;
  }
  return it->second;
}

}  // namespace

AirySuiteValue airy_suite(double x, const QuadConfig& cfg) {
  // Apex near the saddle sqrt(x) for x > 1 keeps the integrand peak flat.
  double apex = (x > 1.0) ? std::min(std::sqrt(x), 4.0) : 1.0;
  const WedgeRule& rule = airy_rule(apex, cfg);
  std::complex<double> ai = 0.0, aip = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    std::complex<double> z = rule.nodes[i];
    std::complex<double> e = std::exp(z * z * z / 3.0 - x * z) * rule.weights[i];
    ai += e;
    aip += -z * e;
    tail += e / z;
  }
  const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
  AirySuiteValue out;
  out.ai = (ai / two_pi_i).real();
  out.ai_prime = (aip / two_pi_i).real();
  out.tail_integral = (tail / two_pi_i).real();
  return out;
}

double heat_kernel(double t, double x, double y) {
  if (!(t > 0.0)) throw NonPositiveTime("heat_kernel: t must be positive");
  double d = x - y;
  return std::exp(-d * d / (2.0 * t)) / std::sqrt(2.0 * M_PI * t);
}

}  // namespace hsal::quad
