// Copyright 2026 The qecdist Authors
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
#ifndef QECDIST_RNG_HPP
#define QECDIST_RNG_HPP

#include <array>
#include <cstdint>

namespace qecdist {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Deterministic per-trial random stream.
///
/// The Philox key is the 64-bit master seed; the 128-bit counter is
/// (block index, trial index). A given (master_seed, trial_index) pair always
/// yields the same draw sequence regardless of which thread runs the trial or
/// in what order trials are scheduled.
class RngStream {
   public:
    RngStream(uint64_t master_seed, uint64_t trial_index);

    uint64_t master_seed() const { return seed_; }
    uint64_t trial_index() const { return trial_; }
    /// Number of 32-bit words consumed so far.
    uint64_t words_drawn() const { return words_; }

    uint32_t next_u32();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on the open interval (-1, 1); the endpoint -1 is rejected.
    double uniform_open_symmetric();

   private:
    void refill();

    uint64_t seed_;
    uint64_t trial_;
    uint64_t block_ = 0;
    uint64_t words_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int used_ = 4;
};

}  // namespace qecdist

#endif
