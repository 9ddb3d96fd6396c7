#include "latmid/dvr.hpp"

namespace latmid {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Rat rat_pow(long base, long exp) {
    if (base == 0) throw InvalidArgument("rat_pow: zero base");
    Int b(base);
    Int num;
    mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rat r;
    if (exp >= 0)
        r = Rat(num);
    else {
        r = Rat(Int(1), num);
        r.canonicalize();
    }
    return r;
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InvalidArgument("rat_parse: zero denominator in \"" + s + "\"");
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidArgument("rat_parse: malformed rational \"" + s + "\"");
    }
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Val valuation(const Rat& x, long p) {
    if (x == 0) return Val::infinity();
    long v = 0;
    Int t = x.get_num();
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    if (v == 0) {
        t = x.get_den();
        while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
            --v;
        }
    }
    return Val::of(v);
}

Val valuation(const Rat& x, const ValConfig& cfg) { return valuation(x, cfg.p); }

Fp residue(const Rat& x, long p) {
    long num = static_cast<long>(mpz_fdiv_ui(x.get_num().get_mpz_t(), static_cast<unsigned long>(p)));
    long den = static_cast<long>(mpz_fdiv_ui(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)));
    if (den == 0)
        throw NegativeValuation("residue: v(" + rat_str(x) + ") < 0, not in R");
    return Fp(num, p) / Fp(den, p);
}

Fp residue(const Rat& x, const ValConfig& cfg) { return residue(x, cfg.p); }

long floordiv(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

long ceildiv(long a, long b) { return -floordiv(-a, b); }

std::pair<long, long> int_middles(long x, long y) {
    return {floordiv(x + y, 2), ceildiv(x + y, 2)};
}

long mod_pow(long base, long exp, long p) {
    unsigned long long b = static_cast<unsigned long long>(((base % p) + p) % p);
    unsigned long long r = 1 % static_cast<unsigned long long>(p);
    while (exp > 0) {
        if (exp & 1) r = r * b % static_cast<unsigned long long>(p);
        b = b * b % static_cast<unsigned long long>(p);
        exp >>= 1;
    }
    return static_cast<long>(r);
}

long mod_inv(long a, long p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw SingularMatrix("mod_inv: zero has no inverse mod " + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

long smallest_nonsquare(long p) {
    if (p == 2) throw EvenResidueChar("smallest_nonsquare: residue characteristic 2");
    for (long s = 2; s < p; ++s)
        if (mod_pow(s, (p - 1) / 2, p) == p - 1) return s;
    throw InvalidArgument("smallest_nonsquare: p not an odd prime");
}

long square_class(long v, long p) {
    v = ((v % p) + p) % p;
    if (v == 0) throw InvalidArgument("square_class: zero element");
    return mod_pow(v, (p - 1) / 2, p) == 1 ? 1 : smallest_nonsquare(p);
}

long Fp::join(long pa, long pb) {
    if (pa == 0) return pb;
    if (pb == 0 || pa == pb) return pa;
    throw InvalidArgument("Fp: mixed moduli " + std::to_string(pa) + " and " + std::to_string(pb));
}

Fp::Fp(long v, long p) : p_(p) {
    if (p < 2) throw InvalidArgument("Fp: modulus must be >= 2");
    v_ = ((v % p) + p) % p;
}

Fp Fp::operator+(const Fp& o) const {
    long p = join(p_, o.p_);
    if (p == 0) return Fp();
    return Fp(v_ + o.v_, p);
}

Fp Fp::operator-(const Fp& o) const {
    long p = join(p_, o.p_);
    if (p == 0) return Fp();
    return Fp(v_ - o.v_, p);
}

Fp Fp::operator*(const Fp& o) const {
    long p = join(p_, o.p_);
    if (p == 0) return Fp();
    return Fp(static_cast<long>(static_cast<unsigned long long>(v_) * static_cast<unsigned long long>(o.v_) %
                                static_cast<unsigned long long>(p)),
              p);
}

Fp Fp::operator/(const Fp& o) const { return *this * o.inv(); }

Fp Fp::operator-() const {
    if (p_ == 0) return Fp();
    return Fp(-v_, p_);
}

Fp Fp::inv() const {
    if (p_ == 0 || v_ == 0) throw SingularMatrix("Fp::inv: zero element");
    return Fp(mod_inv(v_, p_), p_);
}

Fp Fp::pow(long e) const {
    if (p_ == 0) throw InvalidArgument("Fp::pow: unbound zero");
    if (e < 0) return inv().pow(-e);
    return Fp(mod_pow(v_, e, p_), p_);
}

bool Fp::is_square() const {
    if (v_ == 0) return true;
    if (p_ == 2) throw EvenResidueChar("Fp::is_square: residue characteristic 2");
    return mod_pow(v_, (p_ - 1) / 2, p_) == 1;
}

bool Fp::operator==(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
    return v_ == o.v_;
}

} // namespace latmid
