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

#include "photonq/stategen.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace photonq {

namespace {

// Deleting row j (1-based) and column 1 of U.
Eigen::MatrixXcd reduced_matrix(const Eigen::MatrixXcd& u, int j) {
  const int n = int(u.rows());
  Eigen::MatrixXcd red(n - 1, n - 1);
  int rr = 0;
  for (int r = 0; r < n; ++r) {
    if (r == j - 1) continue;
    for (int c = 1; c < n; ++c) red(rr, c - 1) = u(r, c);
    ++rr;
  }
  return red;
}

FockState one_per_port(int n, int plus_port) {
  std::vector<std::pair<ModeIndex, int>> occ;
  for (int p = 1; p <= n; ++p)
    occ.push_back({{p, p == plus_port ? Label::Plus : Label::Minus}, 1});
  return FockState(Statistics::Boson, std::move(occ));
}

PureState pattern_state(std::initializer_list<const char*> patterns,
                        std::initializer_list<double> amps) {
  PureState st(Statistics::Boson);
  auto a = amps.begin();
  for (const char* pat : patterns) {
    std::vector<std::pair<ModeIndex, int>> occ;
    for (int p = 0; pat[p]; ++p)
      occ.push_back({{p + 1, pat[p] == '+' ? Label::Plus : Label::Minus}, 1});
    st.add_term(FockState(Statistics::Boson, std::move(occ)), *a++);
  }
  return st;
}

}  // namespace

PureState product_input(const std::vector<std::array<Complex, 2>>& alphas) {
  PureState st = PureState::vacuum(Statistics::Boson);
  int port = 1;
  for (const auto& [ap, am] : alphas) {
    PureState next(Statistics::Boson);
    if (std::abs(ap) > 0) {
      PureState up = apply_creation(st, {port, Label::Plus});
      for (const auto& [f, c] : up.terms()) next.add_term(f, c * ap);
    }
    if (std::abs(am) > 0) {
      PureState dn = apply_creation(st, {port, Label::Minus});
      for (const auto& [f, c] : dn.terms()) next.add_term(f, c * am);
    }
    st = std::move(next);
    ++port;
  }
  st.set_normalized(true);
  return st;
}

Complex w_amplitude_via_permanent(int n, int j) {
  if (n < 2) throw std::domain_error("W amplitudes need N >= 2");
  const Eigen::MatrixXcd u = bell_multiport(n).matrix();
  return u(j - 1, 0) * permanent_ryser(reduced_matrix(u, j));
}

CoincidenceResult generate_w_state(int n) {
  if (n < 2 || n > 18)
    throw std::domain_error("W generation supports 2 <= N <= 18");
  if (n <= 11) {
    std::vector<std::array<Complex, 2>> alphas(n, {Complex(0), Complex(1)});
    alphas[0] = {Complex(1), Complex(0)};
    return postselect_coincidence(
        scatter(product_input(alphas), bell_multiport(n)));
  }
  // Permanent route: the expansion above stays exact but its term count
  // outgrows the budget, while Eq.-level amplitudes stay cheap.
  CoincidenceResult res;
  res.projected = PureState::zero(Statistics::Boson);
  for (int j = 1; j <= n; ++j) {
    Complex beta = w_amplitude_via_permanent(n, j);
    if (std::abs(beta) > kAmplitudePruneCutoff)
      res.projected.add_term(one_per_port(n, j), beta);
  }
  res.probability = res.projected.squared_norm();
  return res;
}

CoincidenceResult generate_ghz4() {
  return postselect_coincidence(scatter(
      product_input({{{1, 0}, {0, 1}, {1, 0}, {0, 1}}}), bell_multiport(4)));
}

CoincidenceResult generate_double_singlet() {
  return postselect_coincidence(scatter(
      product_input({{{1, 0}, {1, 0}, {0, 1}, {0, 1}}}), bell_multiport(4)));
}

PureState reference_w4() {
  return pattern_state({"+---", "-+--", "--+-", "---+"}, {0.5, -0.5, 0.5, -0.5});
}

PureState reference_w4_prime() {
  return pattern_state({"-+++", "+-++", "++-+", "+++-"}, {0.5, -0.5, 0.5, -0.5});
}

PureState reference_ghz4() {
  const double s = 1.0 / std::sqrt(2.0);
  return pattern_state({"+-+-", "-+-+"}, {s, -s});
}

PureState reference_double_singlet() {
  return pattern_state({"++--", "--++", "+--+", "-++-"}, {0.5, 0.5, -0.5, -0.5});
}

General4Projections decompose_general4(
    const std::array<std::array<Complex, 2>, 4>& alpha) {
  for (const auto& a : alpha)
    if (std::abs(std::norm(a[0]) + std::norm(a[1]) - 1.0) > kNormTolerance)
      throw std::invalid_argument("per-port input amplitudes not normalized");
  auto ap = [&](int i) { return alpha[i - 1][0]; };
  auto am = [&](int i) { return alpha[i - 1][1]; };
  const Complex g1 = ap(1) * ap(2) * am(3) * am(4);
  const Complex g2 = am(1) * am(2) * ap(3) * ap(4);
  const Complex g3 = am(1) * ap(2) * ap(3) * am(4);
  const Complex g4 = ap(1) * am(2) * am(3) * ap(4);
  const Complex g5 = ap(1) * am(2) * ap(3) * am(4);
  const Complex g6 = am(1) * ap(2) * am(3) * ap(4);
  const Complex g7 = ap(1) * am(2) * am(3) * am(4);
  const Complex g8 = am(1) * ap(2) * am(3) * am(4);
  const Complex g9 = am(1) * am(2) * ap(3) * am(4);
  const Complex g10 = am(1) * am(2) * am(3) * ap(4);
  const Complex g11 = am(1) * ap(2) * ap(3) * ap(4);
  const Complex g12 = ap(1) * am(2) * ap(3) * ap(4);
  const Complex g13 = ap(1) * ap(2) * am(3) * ap(4);
  const Complex g14 = ap(1) * ap(2) * ap(3) * am(4);
  General4Projections pr;
  pr.ds = Complex(0, 0.25) * (g1 + g2 - g3 - g4);
  pr.ghz = (g6 - g5) / (2.0 * std::sqrt(2.0));
  pr.w = 0.25 * (g8 + g10 - g7 - g9);
  pr.w_prime = 0.25 * (g12 + g14 - g11 - g13);
  return pr;
}

PureState sigma_z_even_ports(const PureState& state) {
  PureState out(state.statistics());
  for (const auto& [f, a] : state.terms()) {
    int minus_on_even = 0;
    for (const auto& [m, n] : f.occupations())
      if (m.port % 2 == 0 && m.label == Label::Minus) minus_on_even += n;
    out.add_term(f, minus_on_even % 2 ? -a : a);
  }
  out.set_normalized(state.normalized());
  return out;
}

PureState ghz_standard_form(const PureState& state) {
  const Complex i(0.0, 1.0);
  std::vector<ModeImage> buf(1);
  ModeMap paulis = [&buf, i](ModeIndex m) -> std::span<const ModeImage> {
    if (m.port == 1) {  // sigma_x
      buf[0] = {ModeIndex{1, m.label == Label::Plus ? Label::Minus
                                                    : Label::Plus},
                1.0};
    } else if (m.port == 3) {  // sigma_y
      buf[0] = m.label == Label::Plus
                   ? ModeImage{ModeIndex{3, Label::Minus}, i}
                   : ModeImage{ModeIndex{3, Label::Plus}, -i};
    } else {
      buf[0] = {m, 1.0};
    }
    return {buf.data(), 1};
  };
  return apply_linear_map(state, paulis);
}

std::vector<WSweepRow> wstate_sweep(int n_max) {
  if (n_max > 18) throw std::domain_error("sweep supports N <= 18");
  std::vector<WSweepRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    WSweepRow row;
    row.n = n;
    row.p_success = double(n) * std::norm(w_amplitude_via_permanent(n, 1));
    row.is_zero = row.p_success < 1e-12;
    rows.push_back(row);
  }
  return rows;
}

std::string wsweep_to_csv(const std::vector<WSweepRow>& rows) {
  std::string out = "N,p_success,is_zero\n";
  char buf[80];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%d\n", r.n, r.p_success,
                  r.is_zero ? 1 : 0);
    out += buf;
  }
  return out;
}

PureState atom_photon_joint(const Unitary& u) {
  const int n = int(u.dim());
  const double norm = 1.0 / std::sqrt(std::pow(2.0, n));
  PureState st = PureState::vacuum(Statistics::Boson);
  for (int i = 1; i <= n; ++i) {
    PureState next(Statistics::Boson);
    for (Label lab : {Label::Plus, Label::Minus}) {
      PureState pair = apply_creation(apply_creation(st, {n + i, lab}),
                                      {i, lab});
      for (const auto& [f, c] : pair.terms()) next.add_term(f, c);
    }
    st = std::move(next);
  }
  st = st * norm;
  st.set_normalized(true);
  PureState scattered = scatter(st, u, /*spectator_above=*/n);
  return postselect_coincidence(scattered, /*spectator_above=*/n).projected;
}

PureState project_atoms(const PureState& joint,
                        const std::vector<std::array<Complex, 2>>& syndrome) {
  const int n = int(syndrome.size());
  for (const auto& s : syndrome)
    if (std::norm(s[0]) + std::norm(s[1]) <= 0)
      throw std::invalid_argument("detection syndrome has an empty port");
  // Reference photon state |S> = prod_j sum_mu conj(alpha_{j mu}) b+_{j mu}.
  std::vector<std::array<Complex, 2>> conj_amps(syndrome.size());
  for (std::size_t j = 0; j < syndrome.size(); ++j)
    conj_amps[j] = {std::conj(syndrome[j][0]), std::conj(syndrome[j][1])};
  PureState ref = product_input(conj_amps);
  PureState atoms = partial_contract(
      joint, ref, [n](ModeIndex m) { return m.port <= n; });
  // Atom modes live on ports N+1..2N inside the joint state; shift back.
  PureState shifted(atoms.statistics());
  for (const auto& [f, a] : atoms.terms()) {
    std::vector<std::pair<ModeIndex, int>> occ;
    for (const auto& [m, cnt] : f.occupations())
      occ.push_back({{m.port - n, m.label}, cnt});
    shifted.add_term(FockState(atoms.statistics(), std::move(occ)), a);
  }
  return shifted;
}

}  // namespace photonq
