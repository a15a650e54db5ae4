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

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "photonq/fock.hpp"
#include "photonq/rng.hpp"

namespace photonq {

inline constexpr double kUnitarityTolerance = 1e-9;

/// N x N complex transfer matrix, unitarity-checked on construction
/// (||U^dag U - I||_F < 1e-9).
class Unitary {
 public:
  explicit Unitary(Eigen::MatrixXcd entries);

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(Eigen::Index j, Eigen::Index i) const { return m_(j, i); }

 private:
  Eigen::MatrixXcd m_;
};

/// B(R, phi) = [[sqrt T, e^{i phi} sqrt R], [sqrt R, -e^{i phi} sqrt T]],
/// T = 1 - R.
Unitary beamsplitter(double reflectivity, double phase);

/// Discrete Fourier transform matrix U_ji = w_N^{(j-1)(i-1)} / sqrt N.
Unitary bell_multiport(int n);

/// One-parameter family of symmetric 4x4 multiports; phi = pi/2 recovers
/// bell_multiport(4).
Unitary symmetric4(double phase);

/// (1/2) [[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]]; its own inverse.
Unitary parity_multiport();

/// QR of a seeded complex Gaussian matrix with phase-fixed diagonal.
Unitary haar_random(int n, RandomStream& rng);

struct ReckLayer {
  int p = 0;  // ports coupled by this beamsplitter, 1-based
  int q = 0;
  double reflectivity = 0;
  double phase = 0;
};

/// Triangular mesh: at most N(N-1)/2 beamsplitter layers plus one phase
/// shifter per output port. recompose() applies output_phases first in
/// matrix order, i.e. U = diag(output_phases) * L_M * ... * L_1 with
/// L_k = embed(p_k, q_k) of the dagger of
/// [[e^{i phi} sqrt R, e^{i phi} sqrt T], [sqrt T, -sqrt R]].
struct ReckDecomposition {
  std::vector<ReckLayer> layers;
  std::vector<Complex> output_phases;
};

ReckDecomposition reck_decompose(const Unitary& u);
Unitary reck_recompose(const ReckDecomposition& d, int n);

/// True iff D1 * a * D2 = b for some unit-modulus diagonals (port-phase
/// equivalence).
bool phase_equivalent(const Unitary& a, const Unitary& b, double tol = 1e-9);

/// Row-major "re,im" pairs, one matrix row per line.
std::string unitary_to_csv(const Unitary& u);
Unitary unitary_from_csv(const std::string& text);

}  // namespace photonq
