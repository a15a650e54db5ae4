// Copyright 2026 The photonq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonq/scattering.hpp"

#include <stdexcept>
#include <vector>

namespace photonq {

PureState scatter(const PureState& input, const Unitary& u,
                  int spectator_above) {
  const int n = int(u.dim());
  for (const auto& [f, a] : input.terms()) {
    for (const auto& [m, cnt] : f.occupations()) {
      if (spectator_above > 0 && m.port > spectator_above) continue;
      if (m.port < 1 || m.port > n)
        throw std::invalid_argument("occupied port outside the multiport");
    }
  }
  std::vector<ModeImage> images(n);
  ModeMap map = [&](ModeIndex m) -> std::span<const ModeImage> {
    if (spectator_above > 0 && m.port > spectator_above) {
      images[0] = ModeImage{m, 1.0};
      return {images.data(), 1};
    }
    for (int j = 0; j < n; ++j)
      images[j] = ModeImage{ModeIndex{j + 1, m.label}, u(j, m.port - 1)};
    return {images.data(), images.size()};
  };
  return apply_linear_map(input, map);
}

CoincidenceResult postselect_coincidence(const PureState& state,
                                         int spectator_above) {
  CoincidenceResult res;
  res.projected = PureState::zero(state.statistics());
  int nports = 0;
  for (const auto& [f, a] : state.terms()) {
    int n = 0;
    for (const auto& [m, cnt] : f.occupations())
      if (spectator_above <= 0 || m.port <= spectator_above) n += cnt;
    nports = std::max(nports, n);
  }
  for (const auto& [f, a] : state.terms()) {
    auto counts = f.port_counts();
    bool keep = true;
    for (int p = 1; p <= nports; ++p) {
      auto it = counts.find(p);
      if (it == counts.end() || it->second != 1) {
        keep = false;
        break;
      }
    }
    if (keep) res.projected.add_term(f, a);
  }
  res.probability = res.projected.squared_norm();
  return res;
}

Complex permanent_ryser(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
  const int n = int(m.rows());
  if (n > 24) throw std::length_error("permanent_ryser limited to N <= 24");
  if (n == 0) return 1.0;
  // Ryser with Gray-code subset iteration:
  // perm(M) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} M(i, j).
  std::vector<Complex> row_sum(n, Complex(0.0));
  Complex total = 0.0;
  std::uint32_t prev_gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const std::uint32_t gray = k ^ (k >> 1);
    const std::uint32_t diff = gray ^ prev_gray;
    int j = 0;
    while (!((diff >> j) & 1u)) ++j;
    if (gray & diff)
      for (int i = 0; i < n; ++i) row_sum[i] += m(i, j);
    else
      for (int i = 0; i < n; ++i) row_sum[i] -= m(i, j);
    prev_gray = gray;
    Complex prod = row_sum[0];
    for (int i = 1; i < n; ++i) prod *= row_sum[i];
    total += (__builtin_popcount(gray) % 2 ? -prod : prod);
  }
  return (n % 2 ? -total : total);
}

Complex permanent_bruteforce(const Eigen::Ref<const Eigen::MatrixXcd>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
  const int n = int(m.rows());
  if (n > 10) throw std::length_error("permanent_bruteforce refuses N > 10");
  if (n == 0) return 1.0;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Complex total = 0.0;
  do {
    Complex p = 1.0;
    for (int i = 0; i < n; ++i) p *= m(perm[i], i);
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

double coincidence_probability(const Unitary& u, Statistics statistics) {
  if (statistics == Statistics::Fermion)
    return std::norm(u.matrix().determinant());
  return std::norm(permanent_ryser(u.matrix()));
}

}  // namespace photonq
