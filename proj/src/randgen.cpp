#include "latmid/randgen.hpp"

#include "latmid/dvr.hpp"
#include "latmid/forms.hpp"
#include "latmid/lattice.hpp"

namespace latmid {

Rat random_unit(Rng& rng, long p) {
    long num, den;
    do {
        num = rng.range(1, 9);
    } while (num % p == 0);
    do {
        den = rng.range(1, 9);
    } while (den % p == 0);
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    if (rng.one_in(2)) r = -r;
    return r;
}

Rat random_scalar(Rng& rng, long p, long vmin, long vmax, long zero_odds) {
    if (zero_odds > 0 && rng.one_in(zero_odds)) return Rat(0);
    long e = rng.range(vmin, vmax);
    return random_unit(rng, p) * rat_pow(p, e);
}

RatMat random_invertible(Rng& rng, std::size_t n, long p, long vmin, long vmax) {
    for (;;) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, p, vmin, vmax, 3);
        if (n == 0 || m.det() != 0) return m;
    }
}

Lattice random_lattice(Rng& rng, std::size_t n, long p, long vmin, long vmax) {
    return Lattice(random_invertible(rng, n, p, vmin, vmax), p);
}

GramForm random_gram(Rng& rng, std::size_t n, int epsilon, long p, long vmin, long vmax) {
    if (epsilon == -1 && n % 2 != 0)
        throw InvalidArgument("random_gram: nondegenerate alternating forms need even dimension");
    for (;;) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat x = random_scalar(rng, p, vmin, vmax, 3);
                m.at(i, j) = x;
                m.at(j, i) = epsilon == 1 ? x : -x;
            }
            m.at(i, i) = epsilon == 1 ? random_scalar(rng, p, vmin, vmax, 4) : Rat(0);
        }
        if (n == 0 || m.det() != 0) return GramForm(std::move(m), epsilon);
    }
}

} // namespace latmid
