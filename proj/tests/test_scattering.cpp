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

#include "photonq/scattering.hpp"

using namespace photonq;

namespace {

PureState one_photon_per_port(int n, Statistics s,
                              Label label = Label::None) {
  PureState st = PureState::vacuum(s);
  for (int p = n; p >= 1; --p) st = apply_creation(st, {p, label});
  return st;
}

}  // namespace

TEST_CASE("identity scattering leaves states unchanged") {
  PureState in = one_photon_per_port(3, Statistics::Boson, Label::H);
  Unitary id(Eigen::MatrixXcd::Identity(3, 3));
  PureState out = scatter(in, id);
  CHECK(std::abs(inner_product(in, out) - Complex(1.0)) < 1e-12);
}

TEST_CASE("two identical bosons bunch on a 50:50 splitter") {
  PureState in = one_photon_per_port(2, Statistics::Boson);
  PureState out = scatter(in, beamsplitter(0.5, 0.0));
  // (|2,0> - |0,2>)/sqrt2 up to sign: no coincidence term
  CHECK(std::abs(out.amplitude(FockState(
            Statistics::Boson,
            {{{1, Label::None}, 1}, {{2, Label::None}, 1}}))) < 1e-14);
  const double a20 = std::abs(out.amplitude(
      FockState(Statistics::Boson, {{{1, Label::None}, 2}})));
  CHECK(std::abs(a20 - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("two identical fermions exit separately") {
  PureState in = one_photon_per_port(2, Statistics::Fermion);
  PureState out = scatter(in, beamsplitter(0.5, 0.0));
  CHECK(out.term_count() == 1);
  CHECK(std::abs(std::abs(out.terms().begin()->second) - 1.0) < 1e-12);
}

TEST_CASE("port out of range is rejected") {
  PureState in = one_photon_per_port(3, Statistics::Boson);
  CHECK_THROWS_AS(scatter(in, beamsplitter(0.5, 0.0)), std::invalid_argument);
}

TEST_CASE("postselection examples") {
  SUBCASE("four identical bosons never pass the 4x4 Bell multiport") {
    PureState in = one_photon_per_port(4, Statistics::Boson, Label::Plus);
    auto res = postselect_coincidence(scatter(in, bell_multiport(4)));
    CHECK(res.probability < 1e-12);
  }
  SUBCASE("|+,-> through a 50:50 splitter keeps half the weight") {
    PureState in = apply_creation(
        apply_creation(PureState::vacuum(), {2, Label::Minus}),
        {1, Label::Plus});
    auto res = postselect_coincidence(scatter(in, bell_multiport(2)));
    CHECK(std::abs(res.probability - 0.5) < 1e-12);
  }
  SUBCASE("fermions always produce full coincidence") {
    RandomStream rng(5, "fermion");
    for (int n : {2, 3, 4}) {
      PureState in = one_photon_per_port(n, Statistics::Fermion);
      auto res = postselect_coincidence(scatter(in, haar_random(n, rng)));
      CHECK(std::abs(res.probability - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("permanent of small matrices") {
  Eigen::Matrix2cd m;
  m << Complex(1, 2), Complex(0, 1), Complex(3, -1), Complex(2, 0);
  // ad + bc
  CHECK(std::abs(permanent_bruteforce(m) -
                 (m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0))) < 1e-15);
  CHECK(std::abs(permanent_ryser(m) - permanent_bruteforce(m)) < 1e-14);

  CHECK(std::abs(permanent_ryser(Eigen::MatrixXcd::Identity(5, 5)) - 1.0) <
        1e-14);
  CHECK(std::abs(permanent_bruteforce(Eigen::MatrixXcd::Identity(6, 6)) -
                 1.0) < 1e-14);
}

TEST_CASE("Bell multiport permanents") {
  CHECK(std::abs(permanent_ryser(bell_multiport(2).matrix())) < 1e-12);
  CHECK(std::abs(permanent_bruteforce(bell_multiport(4).matrix())) < 1e-12);
  // odd N = 3 stays finite; cross-check the two engines
  Complex p3 = permanent_bruteforce(bell_multiport(3).matrix());
  CHECK(std::abs(p3) > 0.1);
  CHECK(std::abs(p3 - permanent_ryser(bell_multiport(3).matrix())) < 1e-12);
  CHECK(std::abs(std::abs(p3) - 1.0 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("even-N vanishing up to N = 12") {
  for (int n : {2, 4, 6, 8, 10, 12})
    CHECK(std::abs(permanent_ryser(bell_multiport(n).matrix())) < 1e-10);
}

TEST_CASE("permanent is transpose invariant") {
  RandomStream rng(9, "perm-t");
  for (int n : {3, 5, 7}) {
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        m(j, i) = Complex(rng.gaussian(), rng.gaussian());
    CHECK(std::abs(permanent_ryser(m) -
                   permanent_ryser(m.transpose())) <
          1e-10 * std::max(1.0, std::abs(permanent_ryser(m))));
  }
}

TEST_CASE("cost guards") {
  CHECK_THROWS_AS(permanent_bruteforce(Eigen::MatrixXcd::Identity(11, 11)),
                  std::length_error);
  CHECK_THROWS_AS(permanent_ryser(Eigen::MatrixXcd::Identity(25, 25)),
                  std::length_error);
}

TEST_CASE("oracle equivalence of the three bosonic pipelines") {
  RandomStream rng(2024, "oracle");
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 5;
    Unitary u = haar_random(n, rng);
    PureState in = one_photon_per_port(n, Statistics::Boson);
    const double direct = postselect_coincidence(scatter(in, u)).probability;
    const double brute = std::norm(permanent_bruteforce(u.matrix()));
    const double fast = coincidence_probability(u, Statistics::Boson);
    CHECK(std::abs(direct - brute) < 1e-9);
    CHECK(std::abs(fast - brute) < 1e-9);
  }
}

TEST_CASE("scattering conserves the norm") {
  RandomStream rng(77, "norm");
  Unitary u = haar_random(3, rng);
  PureState in(Statistics::Boson);
  in.add_term(FockState(Statistics::Boson,
                        {{{1, Label::Plus}, 2}, {{2, Label::Minus}, 1}}),
              0.6);
  in.add_term(FockState(Statistics::Boson, {{{3, Label::Plus}, 3}}),
              Complex(0, 0.8));
  PureState out = scatter(in, u);
  CHECK(std::abs(out.squared_norm() - in.squared_norm()) < 1e-10);
}

TEST_CASE("fermion coincidence probability is one for any unitary") {
  RandomStream rng(31, "fermion-haar");
  for (int t = 0; t < 20; ++t) {
    Unitary u = haar_random(2 + t % 5, rng);
    CHECK(std::abs(coincidence_probability(u, Statistics::Fermion) - 1.0) <
          1e-10);
  }
}

TEST_CASE("symmetric multiport coincidence follows (1 + cos 2 phi)/8") {
  for (int k = 0; k < 10; ++k) {
    const double phi = 3.14159265358979 * k / 9.0;
    const double p = coincidence_probability(symmetric4(phi), Statistics::Boson);
    CHECK(std::abs(p - (1.0 + std::cos(2.0 * phi)) / 8.0) < 1e-12);
  }
}
