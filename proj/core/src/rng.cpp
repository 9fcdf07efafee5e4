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
#include "qecdist/rng.hpp"

namespace qecdist {

namespace {

constexpr uint32_t kMul0 = 0xD2511F53;
constexpr uint32_t kMul1 = 0xCD9E8D57;
constexpr uint32_t kWeyl0 = 0x9E3779B9;
constexpr uint32_t kWeyl1 = 0xBB67AE85;

}  // namespace

std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; round++) {
        uint64_t p0 = uint64_t{kMul0} * ctr[0];
        uint64_t p1 = uint64_t{kMul1} * ctr[2];
        auto hi0 = static_cast<uint32_t>(p0 >> 32);
        auto lo0 = static_cast<uint32_t>(p0);
        auto hi1 = static_cast<uint32_t>(p1 >> 32);
        auto lo1 = static_cast<uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

RngStream::RngStream(uint64_t master_seed, uint64_t trial_index) : seed_(master_seed), trial_(trial_index) {
}

void RngStream::refill() {
    std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(block_),
        static_cast<uint32_t>(block_ >> 32),
        static_cast<uint32_t>(trial_),
        static_cast<uint32_t>(trial_ >> 32)};
    std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed_), static_cast<uint32_t>(seed_ >> 32)};
    buffer_ = philox4x32_10(ctr, key);
    block_++;
    used_ = 0;
}

uint32_t RngStream::next_u32() {
    if (used_ == 4) {
        refill();
    }
    words_++;
    return buffer_[used_++];
}

double RngStream::uniform() {
    uint64_t hi = next_u32() >> 5;  // 27 bits
    uint64_t lo = next_u32() >> 6;  // 26 bits
    return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
}

double RngStream::uniform_open_symmetric() {
    while (true) {
        double u = uniform();
        if (u != 0.0) {
            return 2.0 * u - 1.0;
        }
    }
}

}  // namespace qecdist
