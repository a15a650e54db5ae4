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

#include <doctest.h>

#include <cmath>

#include "photonq/rng.hpp"
#include "photonq/stategen.hpp"

using namespace photonq;

namespace {

// State equality modulo global phase.
double overlap_modulus(const PureState& a, const PureState& b) {
  return std::abs(inner_product(a.normalize(), b.normalize()));
}

std::array<Complex, 2> random_port_state(RandomStream& rng) {
  Complex a(rng.gaussian(), rng.gaussian());
  Complex b(rng.gaussian(), rng.gaussian());
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

TEST_CASE("4-photon W state") {
  CoincidenceResult w = generate_w_state(4);
  CHECK(std::abs(w.probability - 1.0 / 16.0) < 1e-10);
  CHECK(w.projected.term_count() == 4);
  CHECK(overlap_modulus(w.projected, reference_w4()) > 1.0 - 1e-9);
}

TEST_CASE("W amplitudes are equal in modulus with alternating signs") {
  for (int n : {3, 4, 5, 7, 8}) {
    CoincidenceResult w = generate_w_state(n);
    std::vector<Complex> beta;
    for (const auto& [f, a] : w.projected.terms()) beta.push_back(a);
    REQUIRE(beta.size() == std::size_t(n));
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(std::abs(beta[j]) - std::abs(beta[0])) < 1e-10);
      const Complex ratio = beta[j] / beta[0];
      const double expected = (n % 2 == 1) ? 1.0 : (j % 2 == 0 ? 1.0 : -1.0);
      CHECK(std::abs(ratio - expected) < 1e-9);
    }
  }
}

TEST_CASE("W generation dies at N = 6 and N = 2 gives the singlet") {
  CHECK(generate_w_state(6).probability < 1e-12);

  CoincidenceResult two = generate_w_state(2);
  CHECK(std::abs(two.probability - 0.5) < 1e-12);
  PureState singlet(Statistics::Boson);
  const double s = 1.0 / std::sqrt(2.0);
  singlet.add_term(FockState(Statistics::Boson,
                             {{{1, Label::Plus}, 1}, {{2, Label::Minus}, 1}}),
                   s);
  singlet.add_term(FockState(Statistics::Boson,
                             {{{1, Label::Minus}, 1}, {{2, Label::Plus}, 1}}),
                   -s);
  CHECK(overlap_modulus(two.projected, singlet) > 1.0 - 1e-9);

  CHECK_THROWS_AS(generate_w_state(1), std::domain_error);
  CHECK_THROWS_AS(generate_w_state(19), std::domain_error);
}

TEST_CASE("permanent amplitudes match the scattering engine") {
  SUBCASE("moduli at N = 4: 1/8 each, total 1/16") {
    double total = 0;
    for (int j = 1; j <= 4; ++j) {
      const Complex b = w_amplitude_via_permanent(4, j);
      CHECK(std::abs(std::abs(b) - 0.125) < 1e-12);
      total += std::norm(b);
    }
    CHECK(std::abs(total - 1.0 / 16.0) < 1e-12);
  }
  SUBCASE("N = 2, j = 1 has modulus 1/2") {
    CHECK(std::abs(std::abs(w_amplitude_via_permanent(2, 1)) - 0.5) < 1e-12);
  }
  SUBCASE("cross-engine agreement for N = 3..7, every amplitude") {
    for (int n = 3; n <= 7; ++n) {
      CoincidenceResult w = generate_w_state(n);
      for (int j = 1; j <= n; ++j) {
        std::vector<std::pair<ModeIndex, int>> occ;
        for (int p = 1; p <= n; ++p)
          occ.push_back({{p, p == j ? Label::Plus : Label::Minus}, 1});
        const Complex direct =
            w.projected.amplitude(FockState(Statistics::Boson, occ));
        CHECK(std::abs(direct - w_amplitude_via_permanent(n, j)) < 1e-10);
      }
    }
  }
}

TEST_CASE("GHZ state from |+,-,+,->") {
  CoincidenceResult g = generate_ghz4();
  CHECK(std::abs(g.probability - 0.125) < 1e-10);
  CHECK(g.projected.term_count() == 2);
  for (const auto& [f, a] : g.projected.terms())
    CHECK(std::abs(std::abs(a) - std::sqrt(0.125 / 2.0)) < 1e-10);
  CHECK(overlap_modulus(g.projected, reference_ghz4()) > 1.0 - 1e-9);
}

TEST_CASE("double singlet from |+,+,-,->") {
  CoincidenceResult d = generate_double_singlet();
  CHECK(std::abs(d.probability - 1.0 / 16.0) < 1e-10);
  CHECK(overlap_modulus(d.projected, reference_double_singlet()) > 1.0 - 1e-9);

  // factorization: singlet on ports (1,3) tensor singlet on ports (2,4)
  auto singlet_pair = [](int p, int q) {
    PureState st(Statistics::Boson);
    const double s = 1.0 / std::sqrt(2.0);
    st.add_term(FockState(Statistics::Boson,
                          {{{p, Label::Plus}, 1}, {{q, Label::Minus}, 1}}),
                s);
    st.add_term(FockState(Statistics::Boson,
                          {{{p, Label::Minus}, 1}, {{q, Label::Plus}, 1}}),
                -s);
    return st;
  };
  PureState product = tensor(singlet_pair(1, 3), singlet_pair(2, 4));
  CHECK(overlap_modulus(d.projected, product) > 1.0 - 1e-9);

  PureState normalized = d.projected.normalize();
  CHECK(normalized.term_count() == 4);
  for (const auto& [f, a] : normalized.terms())
    CHECK(std::abs(std::abs(a) - 0.5) < 1e-10);
}

TEST_CASE("general 4-photon decomposition") {
  SUBCASE("W input excites only the W projection") {
    auto pr = decompose_general4({{{1, 0}, {0, 1}, {0, 1}, {0, 1}}});
    CHECK(std::abs(pr.w) > 0.1);
    CHECK(std::abs(pr.ds) < 1e-12);
    CHECK(std::abs(pr.ghz) < 1e-12);
    CHECK(std::abs(pr.w_prime) < 1e-12);
  }
  SUBCASE("GHZ input excites only the GHZ projection") {
    auto pr = decompose_general4({{{1, 0}, {0, 1}, {1, 0}, {0, 1}}});
    CHECK(std::abs(pr.ghz) > 0.1);
    CHECK(std::abs(pr.ds) < 1e-12);
    CHECK(std::abs(pr.w) < 1e-12);
    CHECK(std::abs(pr.w_prime) < 1e-12);
  }
  SUBCASE("random inputs match direct scattering and reconstruct") {
    RandomStream rng(123, "decompose");
    for (int t = 0; t < 100; ++t) {
      std::array<std::array<Complex, 2>, 4> alpha;
      std::vector<std::array<Complex, 2>> ports;
      for (auto& a : alpha) {
        a = random_port_state(rng);
        ports.push_back(a);
      }
      auto direct = postselect_coincidence(
          scatter(product_input(ports), bell_multiport(4)));
      auto pr = decompose_general4(alpha);
      CHECK(std::abs(inner_product(reference_double_singlet(),
                                   direct.projected) -
                     pr.ds) < 1e-9);
      CHECK(std::abs(inner_product(reference_ghz4(), direct.projected) -
                     pr.ghz) < 1e-9);
      CHECK(std::abs(inner_product(reference_w4(), direct.projected) - pr.w) <
            1e-9);
      CHECK(std::abs(inner_product(reference_w4_prime(), direct.projected) -
                     pr.w_prime) < 1e-9);
      // reconstruction residual
      PureState rebuilt = reference_double_singlet() * pr.ds +
                          reference_ghz4() * pr.ghz + reference_w4() * pr.w +
                          reference_w4_prime() * pr.w_prime;
      PureState diff = rebuilt + direct.projected * Complex(-1.0);
      CHECK(diff.squared_norm() < 1e-18);
    }
  }
  SUBCASE("non-normalized inputs are rejected") {
    CHECK_THROWS_AS(decompose_general4({{{2, 0}, {0, 1}, {0, 1}, {0, 1}}}),
                    std::invalid_argument);
  }
}

TEST_CASE("local corrections reach the standard forms") {
  SUBCASE("sigma_z on even ports equalizes the even-N W coefficients") {
    for (int n : {4, 8}) {
      PureState fixed = sigma_z_even_ports(generate_w_state(n).projected);
      Complex first = fixed.terms().begin()->second;
      for (const auto& [f, a] : fixed.terms())
        CHECK(std::abs(a - first) < 1e-12);
    }
  }
  SUBCASE("sigma_x and sigma_y carry the GHZ output to standard form") {
    PureState fixed = ghz_standard_form(generate_ghz4().projected);
    PureState standard(Statistics::Boson);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<std::pair<ModeIndex, int>> allp, allm;
    for (int p = 1; p <= 4; ++p) {
      allp.push_back({{p, Label::Plus}, 1});
      allm.push_back({{p, Label::Minus}, 1});
    }
    standard.add_term(FockState(Statistics::Boson, allp), s);
    standard.add_term(FockState(Statistics::Boson, allm), s);
    CHECK(overlap_modulus(fixed, standard) > 1.0 - 1e-10);
  }
}

TEST_CASE("input phases only move the global phase") {
  RandomStream rng(55, "phase-global");
  std::vector<std::array<Complex, 2>> ports;
  for (int i = 0; i < 4; ++i) ports.push_back(random_port_state(rng));
  auto base = postselect_coincidence(
      scatter(product_input(ports), bell_multiport(4)));
  auto phased_ports = ports;
  const Complex phase = std::polar(1.0, 1.234);
  phased_ports[2] = {ports[2][0] * phase, ports[2][1] * phase};
  auto shifted = postselect_coincidence(
      scatter(product_input(phased_ports), bell_multiport(4)));
  CHECK(std::abs(shifted.probability - base.probability) < 1e-12);
  CHECK(overlap_modulus(base.projected, shifted.projected) > 1.0 - 1e-10);
}

TEST_CASE("success-probability sweep") {
  auto rows = wstate_sweep(18);
  REQUIRE(rows.size() == 17);
  auto row = [&rows](int n) { return rows[n - 2]; };
  CHECK(row(6).is_zero);
  CHECK(row(12).is_zero);
  CHECK(row(6).p_success < 1e-12);
  CHECK(row(12).p_success < 1e-12);
  CHECK(row(13).p_success > row(9).p_success);
  CHECK(row(18).p_success > 1e-12);
  CHECK_FALSE(row(18).is_zero);
  CHECK(std::abs(row(2).p_success - 0.5) < 1e-12);
  CHECK(std::abs(row(4).p_success - 1.0 / 16.0) < 1e-12);
  for (const auto& r : rows) {
    CHECK(r.p_success >= 0.0);
    CHECK(r.p_success <= 1.0);
  }
}

TEST_CASE("sweep rows serialize to csv") {
  const std::string csv = wsweep_to_csv(wstate_sweep(6));
  CHECK(csv.rfind("N,p_success,is_zero\n", 0) == 0);
  CHECK(csv.find("4,0.0625,0\n") != std::string::npos);
  CHECK(csv.find("\n6,") != std::string::npos);
  CHECK(csv.find(",1\n") != std::string::npos);  // the N = 6 zero row
}

TEST_CASE("atom projection duality") {
  SUBCASE("W syndrome prepares the atomic W state") {
    PureState joint = atom_photon_joint(bell_multiport(4));
    std::vector<std::array<Complex, 2>> syndrome(4, {Complex(0), Complex(1)});
    syndrome[0] = {Complex(1), Complex(0)};
    PureState atoms = project_atoms(joint, syndrome);
    CHECK(atoms.squared_norm() > 1e-12);
    CHECK(overlap_modulus(atoms, generate_w_state(4).projected) > 1.0 - 1e-9);
  }
  SUBCASE("identical-polarization syndromes are impossible") {
    PureState joint = atom_photon_joint(bell_multiport(4));
    std::vector<std::array<Complex, 2>> syndrome(4, {Complex(1), Complex(0)});
    PureState atoms = project_atoms(joint, syndrome);
    CHECK(atoms.squared_norm() < 1e-20);
  }
  SUBCASE("two-port singlet syndrome leaves an atomic singlet") {
    PureState joint = atom_photon_joint(bell_multiport(2));
    PureState atoms = project_atoms(
        joint, {{Complex(1), Complex(0)}, {Complex(0), Complex(1)}});
    CHECK(overlap_modulus(atoms, generate_w_state(2).projected) > 1.0 - 1e-9);
  }
  SUBCASE("empty syndrome ports are rejected") {
    PureState joint = atom_photon_joint(bell_multiport(2));
    CHECK_THROWS_AS(
        project_atoms(joint, {{Complex(0), Complex(0)},
                              {Complex(1), Complex(0)}}),
        std::invalid_argument);
  }
}
