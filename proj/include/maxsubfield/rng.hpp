/*
   Copyright 2026 the maxsubfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXSUBFIELD_RNG_HPP
#define MAXSUBFIELD_RNG_HPP

#include <cstdint>

namespace msf {

/// Seed used by the CLI and by every search when the caller does not
/// override it. Reports echo the seed so runs can be replayed.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// splitmix64. Self-contained so streams are identical on every platform
/// (std:: distributions are not pinned by the standard).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound == 0 is treated as the full 64-bit range.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return next();
        // rejection sampling; no modulo bias
        std::uint64_t limit = bound * ((~0ull) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform integer in [lo, hi] (inclusive).
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Derive an independent stream (for sharding searches by trial range).
    Rng fork(std::uint64_t stream) {
        Rng child(state_ ^ (0xa0761d6478bd642full * (stream + 1)));
        child.next();
        return child;
    }

   private:
    std::uint64_t state_;
};

}  // namespace msf

#endif
