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

#include <cstdint>
#include <string_view>

namespace photonq {

/// Counter-based pseudorandom stream: every draw is a pure function of
/// (seed, stream name, counter), so identical seeds give identical
/// trajectories regardless of call interleaving across stages.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view stream_name);

  /// Uniform in [0, 1).
  double uniform();

  /// Standard normal (Box-Muller on two counter draws).
  double gaussian();

  std::uint64_t next_u64();

  /// Child stream with an independent counter, keyed off this stream.
  RandomStream substream(std::string_view name) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace photonq
