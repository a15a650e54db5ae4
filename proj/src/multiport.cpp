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

#include "photonq/multiport.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace photonq {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
}  // namespace

Unitary::Unitary(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw std::invalid_argument("transfer matrix must be square, N >= 1");
  double defect =
      (m_.adjoint() * m_ - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols()))
          .norm();
  if (defect >= kUnitarityTolerance)
    throw std::invalid_argument("matrix fails the unitarity check");
}

Unitary beamsplitter(double reflectivity, double phase) {
  if (reflectivity < 0.0 || reflectivity > 1.0)
    throw std::domain_error("reflectivity outside [0, 1]");
  const double r = std::sqrt(reflectivity);
  const double t = std::sqrt(1.0 - reflectivity);
  const Complex e = std::exp(kI * phase);
  Eigen::Matrix2cd b;
  b << t, e * r, r, -e * t;
  return Unitary(b);
}

Unitary bell_multiport(int n) {
  if (n < 1) throw std::domain_error("multiport needs N >= 1");
  Eigen::MatrixXcd u(n, n);
  const double norm = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      u(j, i) = std::polar(norm, 2.0 * kPi * double((j * i) % n) / n);
  return Unitary(u);
}

Unitary symmetric4(double phase) {
  const Complex e = std::exp(kI * phase);
  Eigen::Matrix4cd u;
  u << 1, 1, 1, 1,
       1, e, -1, -e,
       1, -1, 1, -1,
       1, -e, -1, e;
  return Unitary(0.5 * u);
}

Unitary parity_multiport() {
  Eigen::Matrix4cd u;
  u << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, 1, -1,
       1, -1, -1, 1;
  return Unitary(0.5 * u);
}

Unitary haar_random(int n, RandomStream& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(j, i) = Complex(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1.0);
  }
  return Unitary(q);
}

namespace {

// Elimination rotation on ports (q, p): block
// [[e^{i phi} sqrt R, e^{i phi} sqrt T], [sqrt T, -sqrt R]], q row first.
Eigen::MatrixXcd embed_rotation(int n, const ReckLayer& l) {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(n, n);
  const double r = std::sqrt(l.reflectivity);
  const double tr = std::sqrt(1.0 - l.reflectivity);
  const Complex e = std::exp(kI * l.phase);
  t(l.q - 1, l.q - 1) = e * r;
  t(l.q - 1, l.p - 1) = e * tr;
  t(l.p - 1, l.q - 1) = tr;
  t(l.p - 1, l.p - 1) = -r;
  return t;
}

}  // namespace

ReckDecomposition reck_decompose(const Unitary& u) {
  const int n = int(u.dim());
  Eigen::MatrixXcd w = u.matrix();
  ReckDecomposition d;
  // Clear rows bottom-up, each row left to right, by mixing column q into
  // column p. An already-zero entry costs no layer, so the identity
  // decomposes into zero beamsplitters.
  for (int p = n; p >= 2; --p) {
    for (int q = 1; q < p; ++q) {
      Complex wq = w(p - 1, q - 1);
      if (std::abs(wq) < 1e-14) continue;
      Complex wp = w(p - 1, p - 1);
      ReckLayer layer;
      layer.p = p;
      layer.q = q;
      const double hyp = std::hypot(std::abs(wq), std::abs(wp));
      layer.reflectivity = std::norm(wp) / (hyp * hyp);
      layer.phase = std::arg(-wp) - std::arg(wq);
      Eigen::MatrixXcd t = embed_rotation(n, layer);
      w = w * t;
      d.layers.push_back(layer);
    }
  }
  d.output_phases.resize(n);
  for (int i = 0; i < n; ++i) d.output_phases[i] = w(i, i);
  return d;
}

Unitary reck_recompose(const ReckDecomposition& d, int n) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) u(i, i) = d.output_phases[i];
  for (auto it = d.layers.rbegin(); it != d.layers.rend(); ++it)
    u = u * embed_rotation(n, *it).adjoint();
  return Unitary(u);
}

bool phase_equivalent(const Unitary& a, const Unitary& b, double tol) {
  if (a.dim() != b.dim()) return false;
  const int n = int(a.dim());
  // Fix gauge on both matrices: make row 0 and column 0 real nonnegative.
  auto canonical = [n](Eigen::MatrixXcd m) {
    for (int i = 0; i < n; ++i) {
      Complex z = m(0, i);
      if (std::abs(z) > 1e-12) m.col(i) *= std::conj(z) / std::abs(z);
    }
    for (int j = 0; j < n; ++j) {
      Complex z = m(j, 0);
      if (std::abs(z) > 1e-12) m.row(j) *= std::conj(z) / std::abs(z);
    }
    return m;
  };
  return (canonical(a.matrix()) - canonical(b.matrix())).norm() < tol;
}

std::string unitary_to_csv(const Unitary& u) {
  std::string out;
  char buf[80];
  for (Eigen::Index j = 0; j < u.dim(); ++j) {
    for (Eigen::Index i = 0; i < u.dim(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", i ? "," : "",
                    u(j, i).real(), u(j, i).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Unitary unitary_from_csv(const std::string& text) {
  std::vector<std::vector<Complex>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> vals;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
    if (vals.size() % 2 != 0)
      throw std::invalid_argument("odd number of CSV fields in matrix row");
    std::vector<Complex> row;
    for (std::size_t k = 0; k + 1 < vals.size(); k += 2)
      row.emplace_back(vals[k], vals[k + 1]);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix CSV");
  Eigen::MatrixXcd m(rows.size(), rows[0].size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != rows[0].size())
      throw std::invalid_argument("ragged matrix CSV");
    for (std::size_t i = 0; i < rows[j].size(); ++i) m(j, i) = rows[j][i];
  }
  return Unitary(m);
}

}  // namespace photonq
