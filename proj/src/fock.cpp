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

#include "photonq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace photonq {

const char* label_name(Label l) {
  switch (l) {
    case Label::None: return "_";
    case Label::Plus: return "+";
    case Label::Minus: return "-";
    case Label::H: return "H";
    case Label::V: return "V";
    case Label::Early: return "E";
    case Label::Late: return "L";
  }
  return "?";
}

namespace {

Label label_from_name(char c) {
  switch (c) {
    case '_': return Label::None;
    case '+': return Label::Plus;
    case '-': return Label::Minus;
    case 'H': return Label::H;
    case 'V': return Label::V;
    case 'E': return Label::Early;
    case 'L': return Label::Late;
  }
  throw std::invalid_argument("unknown mode label in serialized state");
}

}  // namespace

FockState::FockState(Statistics s,
                     std::vector<std::pair<ModeIndex, int>> occupations)
    : stats_(s) {
  std::sort(occupations.begin(), occupations.end());
  for (auto& [m, n] : occupations) {
    if (n < 0) throw std::invalid_argument("negative occupation");
    if (n == 0) continue;
    if (s == Statistics::Fermion && n > 1)
      throw std::invalid_argument("fermionic occupation above 1");
    if (!occ_.empty() && occ_.back().first == m)
      throw std::invalid_argument("duplicate mode in occupation list");
    occ_.emplace_back(m, n);
  }
}

int FockState::occupation(ModeIndex m) const {
  auto it = std::lower_bound(
      occ_.begin(), occ_.end(), m,
      [](const auto& p, const ModeIndex& q) { return p.first < q; });
  return (it != occ_.end() && it->first == m) ? it->second : 0;
}

int FockState::total_particles() const {
  int t = 0;
  for (const auto& [m, n] : occ_) t += n;
  return t;
}

std::map<int, int> FockState::port_counts() const {
  std::map<int, int> c;
  for (const auto& [m, n] : occ_) c[m.port] += n;
  return c;
}

PureState PureState::vacuum(Statistics s) {
  PureState st(s);
  st.terms_.emplace(FockState(s), Complex(1.0, 0.0));
  st.normalized_ = true;
  return st;
}

PureState PureState::zero(Statistics s) { return PureState(s); }

PureState PureState::basis(const FockState& f, Complex amplitude) {
  PureState st(f.statistics());
  st.terms_.emplace(f, amplitude);
  st.normalized_ = std::abs(std::abs(amplitude) - 1.0) < kNormTolerance;
  return st;
}

Complex PureState::amplitude(const FockState& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double PureState::squared_norm() const {
  double s = 0;
  for (const auto& [f, a] : terms_) s += std::norm(a);
  return s;
}

PureState PureState::normalize() const {
  double n2 = squared_norm();
  if (n2 <= 0) throw std::domain_error("cannot normalize the zero vector");
  PureState out = *this * (1.0 / std::sqrt(n2));
  out.normalized_ = true;
  return out;
}

PureState PureState::pruned(double cutoff) const {
  PureState out(stats_);
  out.normalized_ = normalized_;
  for (const auto& [f, a] : terms_)
    if (std::abs(a) >= cutoff) out.terms_.emplace(f, a);
  return out;
}

PureState PureState::operator+(const PureState& other) const {
  if (stats_ != other.stats_)
    throw std::invalid_argument("statistics mismatch in state sum");
  PureState out = *this;
  out.normalized_ = false;
  for (const auto& [f, a] : other.terms_) out.add_term(f, a);
  return out;
}

PureState PureState::operator*(Complex scale) const {
  PureState out(stats_);
  for (const auto& [f, a] : terms_) out.terms_.emplace(f, a * scale);
  return out;
}

void PureState::add_term(const FockState& f, Complex amplitude) {
  auto [it, inserted] = terms_.emplace(f, amplitude);
  if (!inserted) {
    it->second += amplitude;
    if (std::abs(it->second) < kAmplitudePruneCutoff) terms_.erase(it);
  }
}

std::string PureState::serialize() const {
  std::string out;
  char buf[64];
  for (const auto& [f, a] : terms_) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g :", a.real(), a.imag());
    out += buf;
    for (const auto& [m, n] : f.occupations()) {
      std::snprintf(buf, sizeof buf, " %d.%s^%d", m.port, label_name(m.label),
                    n);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

PureState PureState::deserialize(const std::string& text, Statistics s) {
  PureState out(s);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double re, im;
    std::string colon;
    if (!(ls >> re >> im >> colon) || colon != ":")
      throw std::invalid_argument("malformed state line: " + line);
    std::vector<std::pair<ModeIndex, int>> occ;
    std::string tok;
    while (ls >> tok) {
      auto dot = tok.find('.');
      auto caret = tok.find('^');
      if (dot == std::string::npos || caret == std::string::npos ||
          caret < dot + 2)
        throw std::invalid_argument("malformed mode token: " + tok);
      ModeIndex m{std::stoi(tok.substr(0, dot)),
                  label_from_name(tok[dot + 1])};
      occ.emplace_back(m, std::stoi(tok.substr(caret + 1)));
    }
    out.add_term(FockState(s, std::move(occ)), Complex(re, im));
  }
  return out;
}

PureState apply_creation(const PureState& state, ModeIndex mode) {
  PureState out(state.statistics());
  const bool fermion = state.statistics() == Statistics::Fermion;
  for (const auto& [f, a] : state.terms()) {
    auto occ = f.occupations();
    auto it = std::lower_bound(
        occ.begin(), occ.end(), mode,
        [](const auto& p, const ModeIndex& q) { return p.first < q; });
    if (fermion) {
      if (it != occ.end() && it->first == mode) continue;  // Pauli exclusion
      int preceding = 0;
      for (auto j = occ.begin(); j != it; ++j) preceding += j->second;
      occ.insert(it, {mode, 1});
      double sign = (preceding % 2 == 0) ? 1.0 : -1.0;
      out.add_term(FockState(Statistics::Fermion, std::move(occ)), a * sign);
    } else {
      int n = 0;
      if (it != occ.end() && it->first == mode) {
        n = it->second;
        it->second += 1;
      } else {
        occ.insert(it, {mode, 1});
      }
      out.add_term(FockState(Statistics::Boson, std::move(occ)),
                   a * std::sqrt(double(n) + 1.0));
    }
  }
  return out;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.statistics() != b.statistics())
    throw std::invalid_argument("statistics mismatch in inner product");
  // iterate the smaller term list
  const PureState& small = a.term_count() <= b.term_count() ? a : b;
  const PureState& large = a.term_count() <= b.term_count() ? b : a;
  Complex s = 0;
  for (const auto& [f, amp] : small.terms()) {
    Complex other = large.amplitude(f);
    if (&small == &a)
      s += std::conj(amp) * other;
    else
      s += std::conj(other) * amp;
  }
  return s;
}

namespace {

// Sign of reordering (prod A)(prod B)|0> into canonical order, with A and B
// individually canonical and disjoint: (-1)^{# pairs a in A, b in B, a > b}.
int interleave_sign(const std::vector<std::pair<ModeIndex, int>>& a,
                    const std::vector<std::pair<ModeIndex, int>>& b) {
  long inversions = 0;
  for (const auto& [ma, na] : a) {
    for (const auto& [mb, nb] : b) {
      if (mb < ma) inversions += long(na) * nb;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

PureState tensor(const PureState& a, const PureState& b) {
  if (a.statistics() != b.statistics())
    throw std::invalid_argument("statistics mismatch in tensor product");
  const bool fermion = a.statistics() == Statistics::Fermion;
  PureState out(a.statistics());
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      std::vector<std::pair<ModeIndex, int>> merged;
      merged.reserve(fa.occupations().size() + fb.occupations().size());
      auto ia = fa.occupations().begin(), ea = fa.occupations().end();
      auto ib = fb.occupations().begin(), eb = fb.occupations().end();
      while (ia != ea && ib != eb) {
        if (ia->first == ib->first)
          throw std::invalid_argument("tensor factors share a mode");
        merged.push_back(ia->first < ib->first ? *ia++ : *ib++);
      }
      merged.insert(merged.end(), ia, ea);
      merged.insert(merged.end(), ib, eb);
      double sign =
          fermion ? interleave_sign(fa.occupations(), fb.occupations()) : 1;
      out.add_term(FockState(a.statistics(), std::move(merged)),
                   ca * cb * sign);
    }
  }
  out.set_normalized(a.normalized() && b.normalized());
  return out;
}

PureState apply_linear_map(const PureState& state, const ModeMap& map,
                           std::size_t term_budget) {
  PureState out(state.statistics());
  for (const auto& [f, amp] : state.terms()) {
    // |f> = prod_m (a_m^+)^n / sqrt(n!) |0>; substitute operators one by one,
    // rightmost (largest mode) first so fermionic signs come out canonical.
    double prefactor = 1.0;
    for (const auto& [m, n] : f.occupations())
      for (int k = 2; k <= n; ++k) prefactor /= std::sqrt(double(k));
    PureState cur = PureState::basis(FockState(state.statistics()),
                                     amp * prefactor);
    const auto& occ = f.occupations();
    for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
      auto images = map(it->first);
      for (int k = 0; k < it->second; ++k) {
        PureState nxt(state.statistics());
        for (const ModeImage& img : images) {
          if (std::abs(img.coefficient) < 1e-300) continue;
          PureState lifted = apply_creation(cur, img.target);
          for (const auto& [g, c] : lifted.terms())
            nxt.add_term(g, c * img.coefficient);
        }
        cur = std::move(nxt);
        if (cur.term_count() > term_budget)
          throw std::length_error("state expansion exceeds term budget");
      }
    }
    for (const auto& [g, c] : cur.terms()) out.add_term(g, c);
    if (out.term_count() > term_budget)
      throw std::length_error("state expansion exceeds term budget");
  }
  out.set_normalized(state.normalized());
  return out.pruned();
}

PureState partial_contract(const PureState& state, const PureState& reference,
                           const std::function<bool(ModeIndex)>& take) {
  if (state.statistics() != reference.statistics())
    throw std::invalid_argument("statistics mismatch in contraction");
  const bool fermion = state.statistics() == Statistics::Fermion;
  PureState out(state.statistics());
  for (const auto& [f, amp] : state.terms()) {
    std::vector<std::pair<ModeIndex, int>> taken, rest;
    for (const auto& p : f.occupations())
      (take(p.first) ? taken : rest).push_back(p);
    double sign = 1.0;
    if (fermion) {
      // move every taken operator left past the rest operators before it
      long inversions = 0;
      for (const auto& [mt, nt] : taken)
        for (const auto& [mr, nr] : rest)
          if (mr < mt) inversions += long(nt) * nr;
      sign = (inversions % 2 == 0) ? 1.0 : -1.0;
    }
    FockState ftaken(state.statistics(), std::move(taken));
    Complex overlap = std::conj(reference.amplitude(ftaken));
    if (std::abs(overlap) < 1e-300) continue;
    out.add_term(FockState(state.statistics(), std::move(rest)),
                 amp * overlap * sign);
  }
  return out.pruned();
}

}  // namespace photonq
