#pragma once
// Single uniform random stream per run. mt19937_64 is fully specified by the
// standard and the 53-bit mapping below avoids any library-dependent
// distribution code, so a (params, seed) pair reproduces bit-identically on
// every conforming implementation.

#include <cstdint>
#include <random>

namespace mark0 {

class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

  // uniform draw in [0, 1) with 53 random bits
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mark0
