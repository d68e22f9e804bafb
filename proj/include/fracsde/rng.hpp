#ifndef FRACSDE_RNG_HPP
#define FRACSDE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace fracsde {

// splitmix64 finalizer, used to decorrelate derived seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed stream for independent paths / modes: seed XOR hashed index.
// Documented splitting rule; identical inputs give identical streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return seed ^ splitmix64(index + 1);
}

// Deterministic normal generator: mt19937_64 + Box-Muller on explicit
// 53-bit uniforms.  std::normal_distribution is implementation-defined,
// so we roll the transform ourselves to keep outputs reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    double uniform01() {
        // (0,1]: avoids log(0) in Box-Muller.
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace fracsde

#endif
