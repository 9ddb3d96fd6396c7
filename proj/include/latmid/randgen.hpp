#pragma once

#include "latmid/rat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace latmid {

// Seeded deterministic generator. All sampling goes through below() so the
// stream is identical across platforms (std::uniform_int_distribution is not
// implementation-defined-free, mt19937_64 output is).
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    long below(long n) {
        if (n <= 0) return 0;
        uint64_t un = static_cast<uint64_t>(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<long>(x % un);
    }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); } // inclusive
    bool one_in(long n) { return below(n) == 0; }

private:
    std::mt19937_64 eng_;
};

// Nonzero rational of valuation 0 at p: num, den in [1, 9], both prime to p,
// random sign.
Rat random_unit(Rng& rng, long p);
// u * p^e with e in [vmin, vmax]; zero with probability 1/zero_odds (0 = never).
Rat random_scalar(Rng& rng, long p, long vmin, long vmax, long zero_odds);

class Lattice;
class RatMat;
struct GramForm;

// Invertible basis with entry valuations in [vmin, vmax].
Lattice random_lattice(Rng& rng, std::size_t n, long p, long vmin = -3, long vmax = 3);
RatMat random_invertible(Rng& rng, std::size_t n, long p, long vmin, long vmax);
// Nondegenerate ε-symmetric form (ε = -1 needs even n).
GramForm random_gram(Rng& rng, std::size_t n, int epsilon, long p, long vmin = -3, long vmax = 3);

} // namespace latmid
