#pragma once

#include "latmid/errors.hpp"
#include "latmid/rat.hpp"

#include <utility>

namespace latmid {

bool is_prime(long n);

// K = Q with the p-adic valuation, R = Z localized at p, uniformizer pi = p,
// residue field k = F_p. Quadratic-form operations additionally require p odd;
// purely lattice-theoretic and alternating operations accept p = 2.
struct ValConfig {
    long p;
    explicit ValConfig(long p_) : p(p_) {
        if (p < 2 || !is_prime(p))
            throw InvalidArgument("ValConfig: p must be a prime >= 2, got " + std::to_string(p));
    }
    bool odd() const { return p != 2; }
};

// A valuation value: an integer or +infinity. Infinity is a tagged state,
// never a large sentinel integer.
class Val {
public:
    static Val infinity() {
        Val v;
        v.inf_ = true;
        return v;
    }
    static Val of(long n) {
        Val v;
        v.v_ = n;
        return v;
    }
    bool is_infinity() const { return inf_; }
    long value() const {
        if (inf_) throw InvalidArgument("Val: infinite valuation has no integer value");
        return v_;
    }
    bool operator==(const Val&) const = default;
    bool operator<(const Val& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Val& o) const { return *this < o || *this == o; }
    bool operator>=(const Val& o) const { return !(*this < o); }
    Val operator+(const Val& o) const {
        if (inf_ || o.inf_) return infinity();
        return of(v_ + o.v_);
    }

private:
    long v_ = 0;
    bool inf_ = false;
};

inline Val val_min(const Val& a, const Val& b) { return a < b ? a : b; }

// An element of the residue field F_p. A default-constructed value is an
// unbound zero that adopts the modulus of the other operand.
class Fp {
public:
    Fp() = default;
    Fp(long v, long p);

    long value() const { return v_; }
    long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp operator-() const;
    Fp inv() const;
    Fp pow(long e) const;
    bool is_square() const; // p odd; true for 0
    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    long v_ = 0;
    long p_ = 0;
    static long join(long pa, long pb);
};

// Exact power of p dividing x; +infinity iff x = 0.
Val valuation(const Rat& x, const ValConfig& cfg);
Val valuation(const Rat& x, long p);

// Image of x in F_p; requires valuation(x) >= 0, else NegativeValuation.
Fp residue(const Rat& x, const ValConfig& cfg);
Fp residue(const Rat& x, long p);

// (floor((x+y)/2), ceil((x+y)/2)).
std::pair<long, long> int_middles(long x, long y);

long floordiv(long a, long b);
long ceildiv(long a, long b);
long mod_pow(long base, long exp, long p);
long mod_inv(long a, long p);
// Smallest positive non-square mod p (p odd prime).
long smallest_nonsquare(long p);
// Square-class representative of nonzero v mod p: 1 or smallest_nonsquare(p).
long square_class(long v, long p);

} // namespace latmid
