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

#include "photonq/qfilter.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace photonq {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Photon from an odd port keeps the port when V, crosses to the partner
// when H; mirrored for the even port. Eq.-level routing of the PBS.
std::span<const ModeImage> pbs_images(ModeIndex m, std::vector<ModeImage>& buf) {
  const bool odd = m.port % 2 == 1;
  const int partner = odd ? m.port + 1 : m.port - 1;
  buf.resize(1);
  if (m.label == Label::H)
    buf[0] = {ModeIndex{partner, Label::H}, 1.0};
  else if (m.label == Label::V)
    buf[0] = {ModeIndex{m.port, Label::V}, 1.0};
  else
    throw std::invalid_argument("PBS expects H/V labeled photons");
  return {buf.data(), 1};
}

PureState apply_pbs_bank(const PureState& st) {
  std::vector<ModeImage> buf;
  return apply_linear_map(
      st, [&buf](ModeIndex m) { return pbs_images(m, buf); });
}

// H -> (+ + -)/sqrt2, V -> (+ - -)/sqrt2 on even (detector) ports.
PureState to_pm_basis_on_even(const PureState& st) {
  std::vector<ModeImage> buf(2);
  ModeMap map = [&buf](ModeIndex m) -> std::span<const ModeImage> {
    if (m.port % 2 == 1) {
      buf[0] = {m, 1.0};
      return {buf.data(), 1};
    }
    const double sign = (m.label == Label::V) ? -1.0 : 1.0;
    if (m.label != Label::H && m.label != Label::V)
      throw std::invalid_argument("detector port carries a non-H/V label");
    buf[0] = {ModeIndex{m.port, Label::Plus}, kInvSqrt2};
    buf[1] = {ModeIndex{m.port, Label::Minus}, sign * kInvSqrt2};
    return {buf.data(), 2};
  };
  return apply_linear_map(st, map);
}

std::vector<DetectorReading> read_detectors(const FockState& f, int n) {
  std::vector<DetectorReading> syn(n, DetectorReading::Empty);
  std::vector<int> count(n, 0);
  std::vector<Label> label(n, Label::None);
  for (const auto& [m, cnt] : f.occupations()) {
    if (m.port % 2 == 1) continue;
    const int k = m.port / 2 - 1;
    count[k] += cnt;
    label[k] = m.label;
  }
  for (int k = 0; k < n; ++k) {
    if (count[k] == 0)
      syn[k] = DetectorReading::Empty;
    else if (count[k] > 1)
      syn[k] = DetectorReading::Multi;
    else
      syn[k] = label[k] == Label::Plus ? DetectorReading::Plus
                                       : DetectorReading::Minus;
  }
  return syn;
}

FockState odd_part(const FockState& f) {
  std::vector<std::pair<ModeIndex, int>> occ;
  for (const auto& p : f.occupations())
    if (p.first.port % 2 == 1) occ.push_back(p);
  return FockState(f.statistics(), std::move(occ));
}

enum class CorrectionRule { ParityFlip, PerDetectorZ };

std::vector<FilterOutcome> run_filter(const PureState& input,
                                      const PureState& ancilla, int n,
                                      CorrectionRule rule) {
  PureState joint = tensor(input, ancilla);
  PureState after = to_pm_basis_on_even(apply_pbs_bank(joint));

  std::map<std::vector<DetectorReading>, FilterOutcome> table;
  for (const auto& [f, a] : after.terms()) {
    auto syn = read_detectors(f, n);
    auto [it, fresh] = table.try_emplace(syn);
    FilterOutcome& o = it->second;
    if (fresh) {
      o.syndrome = syn;
      o.output = PureState::zero(Statistics::Boson);
      o.success = true;
      for (auto r : syn)
        if (r == DetectorReading::Empty || r == DetectorReading::Multi)
          o.success = false;
    }
    o.probability += std::norm(a);
    if (o.success) o.output.add_term(odd_part(f), a);
  }

  std::vector<FilterOutcome> out;
  for (auto& [syn, o] : table) {
    if (o.success && o.output.squared_norm() > 1e-300) {
      PureState corrected(Statistics::Boson);
      if (rule == CorrectionRule::ParityFlip) {
        int j = 0;
        for (auto r : syn)
          if (r == DetectorReading::Minus) ++j;
        for (const auto& [f, a] : o.output.terms()) {
          const bool flip = (j % 2 == 1) && f.occupation({1, Label::V}) == 1;
          corrected.add_term(f, flip ? -a : a);
        }
      } else {
        for (const auto& [f, a] : o.output.terms()) {
          double sign = 1.0;
          for (int k = 0; k < n; ++k)
            if (syn[k] == DetectorReading::Minus &&
                f.occupation({2 * k + 1, Label::V}) == 1)
              sign = -sign;
          corrected.add_term(f, sign * a);
        }
      }
      o.output = corrected.normalize();
    } else {
      o.success = false;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

std::string syndrome_string(const std::vector<DetectorReading>& s) {
  std::string str;
  for (auto r : s) {
    switch (r) {
      case DetectorReading::Plus: str += '+'; break;
      case DetectorReading::Minus: str += '-'; break;
      case DetectorReading::Empty: str += '0'; break;
      case DetectorReading::Multi: str += 'M'; break;
    }
  }
  return str;
}

PureState pbs_transform(const PureState& input) {
  for (const auto& [f, a] : input.terms())
    for (const auto& [m, cnt] : f.occupations())
      if (m.port != 1 && m.port != 2)
        throw std::invalid_argument("pbs_transform acts on ports (1,2)");
  return apply_pbs_bank(input);
}

PureState ghz_ancilla(int n) {
  std::vector<std::pair<ModeIndex, int>> h, v;
  for (int k = 1; k <= n; ++k) {
    h.push_back({{2 * k, Label::H}, 1});
    v.push_back({{2 * k, Label::V}, 1});
  }
  PureState st(Statistics::Boson);
  st.add_term(FockState(Statistics::Boson, std::move(h)), kInvSqrt2);
  st.add_term(FockState(Statistics::Boson, std::move(v)), kInvSqrt2);
  st.set_normalized(true);
  return st;
}

PureState cz_ancilla() {
  PureState st(Statistics::Boson);
  for (Label l2 : {Label::H, Label::V})
    for (Label l4 : {Label::H, Label::V}) {
      const double amp =
          (l2 == Label::V && l4 == Label::V) ? -0.5 : 0.5;
      st.add_term(FockState(Statistics::Boson, {{{2, l2}, 1}, {{4, l4}, 1}}),
                  amp);
    }
  st.set_normalized(true);
  return st;
}

std::vector<FilterOutcome> parity_filter(const PureState& input, int n) {
  PureState anc = ghz_ancilla(n);
  for (const auto& [f, a] : input.terms()) {
    auto counts = f.port_counts();
    for (int k = 1; k <= n; ++k) {
      auto it = counts.find(2 * k - 1);
      if (it == counts.end() || it->second != 1)
        throw std::invalid_argument(
            "parity filter expects one photon per odd input port");
    }
  }
  return run_filter(input, anc, n, CorrectionRule::ParityFlip);
}

std::vector<FilterOutcome> cz_filter(const PureState& input) {
  return run_filter(input, cz_ancilla(), 2, CorrectionRule::PerDetectorZ);
}

double filter_fidelity(double p_d) {
  if (p_d <= 0.0 || p_d > 1.0)
    throw std::domain_error("detection efficiency must lie in (0, 1]");
  return 1.0 / (5.0 - 6.0 * p_d + 2.0 * p_d * p_d);
}

PureState two_photon_input(Complex alpha, Complex beta, Complex gamma,
                           Complex delta) {
  PureState st(Statistics::Boson);
  auto term = [](Label l1, Label l3) {
    return FockState(Statistics::Boson, {{{1, l1}, 1}, {{3, l3}, 1}});
  };
  st.add_term(term(Label::H, Label::H), alpha);
  st.add_term(term(Label::V, Label::V), beta);
  st.add_term(term(Label::H, Label::V), gamma);
  st.add_term(term(Label::V, Label::H), delta);
  return st;
}

PureState uniform_input(int n) {
  const double amp = std::pow(0.5, 0.5 * n);
  PureState st(Statistics::Boson);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<std::pair<ModeIndex, int>> occ;
    for (int k = 0; k < n; ++k)
      occ.push_back(
          {{2 * k + 1, (mask >> k) & 1 ? Label::V : Label::H}, 1});
    st.add_term(FockState(Statistics::Boson, std::move(occ)), amp);
  }
  st.set_normalized(true);
  return st;
}

double filter_fidelity_povm(double p_d, Complex alpha, Complex beta,
                            Complex gamma, Complex delta) {
  if (p_d <= 0.0 || p_d > 1.0)
    throw std::domain_error("detection efficiency must lie in (0, 1]");
  PureState joint = tensor(two_photon_input(alpha, beta, gamma, delta),
                           ghz_ancilla(2));
  PureState after = to_pm_basis_on_even(apply_pbs_bank(joint));

  // Target of the ideal filter, on the odd output ports.
  PureState target(Statistics::Boson);
  target.add_term(
      FockState(Statistics::Boson, {{{1, Label::H}, 1}, {{3, Label::H}, 1}}),
      alpha);
  target.add_term(
      FockState(Statistics::Boson, {{{1, Label::V}, 1}, {{3, Label::V}, 1}}),
      beta);
  const double target_norm2 = target.squared_norm();
  if (target_norm2 <= 0) return 0.0;
  PureState target_hat = target.normalize();

  auto is_even = [](ModeIndex m) { return m.port % 2 == 0; };
  double num = 0.0, den = 0.0;
  // Detector-mode patterns the POVM passes: one or two + photons per port.
  for (int k2 : {1, 2}) {
    for (int k4 : {1, 2}) {
      PureState ref(Statistics::Boson);
      ref.add_term(FockState(Statistics::Boson,
                             {{{2, Label::Plus}, k2}, {{4, Label::Plus}, k4}}),
                   1.0);
      PureState phi = partial_contract(after, ref, is_even);
      const double w2 = k2 == 1 ? p_d : 2.0 * p_d * (1.0 - p_d);
      const double w4 = k4 == 1 ? p_d : 2.0 * p_d * (1.0 - p_d);
      const double w = w2 * w4;
      den += w * phi.squared_norm();
      num += w * std::norm(inner_product(target_hat, phi));
    }
  }
  return den > 0 ? num / den : 0.0;
}

}  // namespace photonq
