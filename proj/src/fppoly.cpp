#include "latmid/fppoly.hpp"

#include "latmid/dvr.hpp"
#include "latmid/randgen.hpp"

#include <sstream>

namespace latmid {

namespace {
inline long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) %
                             static_cast<unsigned long long>(p));
}
} // namespace

FpPoly::FpPoly(long p_, std::vector<long> coeffs) : p(p_), c(std::move(coeffs)) {
    if (p < 2) throw InvalidArgument("FpPoly: modulus must be >= 2");
    for (long& x : c) x = ((x % p) + p) % p;
    normalize();
}

void FpPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    if (lead() == 1) return *this;
    long inv = mod_inv(lead(), p);
    FpPoly r = *this;
    for (long& x : r.c) x = mulmod(x, inv, p);
    return r;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r(p, {});
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = (r.c[i] + o.c[i]) % p;
    r.normalize();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r(p, {});
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = ((r.c[i] - o.c[i]) % p + p) % p;
    r.normalize();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p);
    FpPoly r(p, {});
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod(c[i], o.c[j], p)) % p;
    }
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& o) const {
    if (o.is_zero()) throw InvalidArgument("FpPoly: division by zero");
    FpPoly rem = *this;
    FpPoly quot(p, {});
    if (degree() >= o.degree()) quot.c.assign(degree() - o.degree() + 1, 0);
    long lead_inv = mod_inv(o.lead(), p);
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        long k = rem.degree() - o.degree();
        long f = mulmod(rem.lead(), lead_inv, p);
        quot.c[k] = f;
        for (size_t i = 0; i < o.c.size(); ++i)
            rem.c[k + i] = ((rem.c[k + i] - mulmod(f, o.c[i], p)) % p + p) % p;
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p, {});
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = mulmod(c[i], static_cast<long>(i % p), p);
    r.normalize();
    return r;
}

long FpPoly::eval(long x) const {
    x = ((x % p) + p) % p;
    long r = 0;
    for (size_t i = c.size(); i-- > 0;) r = (mulmod(r, x, p) + c[i]) % p;
    return r;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod) { return (a * b) % mod; }

FpPoly poly_powmod(const FpPoly& base, const Int& exp, const FpPoly& mod) {
    FpPoly r = FpPoly::constant(base.p, 1) % mod;
    FpPoly b = base % mod;
    size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = poly_mulmod(r, r, mod);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = poly_mulmod(r, b, mod);
    }
    return r;
}

namespace {

// f with zero derivative: every exponent divisible by p; over F_p the p-th
// root has the same coefficients at exponents divided by p.
FpPoly pth_root(const FpPoly& f) {
    FpPoly g(f.p, {});
    g.c.assign(f.c.size() / static_cast<size_t>(f.p) + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % static_cast<size_t>(f.p) != 0) throw InvalidArgument("pth_root: derivative not zero");
        g.c[i / static_cast<size_t>(f.p)] = f.c[i];
    }
    g.normalize();
    return g;
}

void squarefree_parts(const FpPoly& f, long base_mult, std::vector<std::pair<FpPoly, long>>& out) {
    if (f.degree() <= 0) return;
    FpPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_parts(pth_root(f), base_mult * f.p, out);
        return;
    }
    FpPoly t = poly_gcd(f, fp);
    FpPoly w = (f / t).monic();
    long i = 1;
    while (w.degree() > 0) {
        FpPoly y = poly_gcd(w, t);
        FpPoly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, base_mult * i);
        w = y;
        t = (t / y).monic();
        ++i;
    }
    if (t.degree() > 0) squarefree_parts(pth_root(t), base_mult * f.p, out);
}

// f monic squarefree; returns (product of irreducibles of degree d, d) parts.
std::vector<std::pair<FpPoly, long>> distinct_degree(FpPoly f) {
    std::vector<std::pair<FpPoly, long>> out;
    long p = f.p;
    FpPoly h = FpPoly::x(p) % f;
    long d = 1;
    while (f.degree() >= 2 * d) {
        h = poly_powmod(h, Int(p), f);
        FpPoly u = poly_gcd(h - FpPoly::x(p), f);
        if (u.degree() > 0) {
            out.emplace_back(u, d);
            f = (f / u).monic();
            h = h % f;
        }
        ++d;
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

FpPoly random_poly_below(long p, long deg, Rng& rng) {
    std::vector<long> c(static_cast<size_t>(deg), 0);
    for (long& x : c) x = rng.below(p);
    FpPoly r(p, std::move(c));
    return r;
}

// g = product of distinct irreducibles, all of degree d.
void equal_degree(const FpPoly& g, long d, Rng& rng, std::vector<FpPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    long p = g.p;
    for (;;) {
        FpPoly r = random_poly_below(p, g.degree(), rng);
        if (r.degree() < 1) continue;
        FpPoly s;
        if (p != 2) {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            s = poly_powmod(r, e, g) - FpPoly::constant(p, 1);
        } else {
            // trace map over F_2: r + r^2 + ... + r^(2^(d-1))
            s = r % g;
            FpPoly t = s;
            for (long i = 1; i < d; ++i) {
                t = poly_mulmod(t, t, g);
                s = s + t;
            }
        }
        FpPoly u = poly_gcd(s, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree((g / u).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<PolyFactor> poly_factor(const FpPoly& f, Rng& rng) {
    if (f.is_zero()) throw InvalidArgument("poly_factor: zero polynomial");
    std::vector<PolyFactor> result;
    FpPoly g = f.monic();
    if (g.degree() == 0) return result;
    std::vector<std::pair<FpPoly, long>> sqf;
    squarefree_parts(g, 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part.monic())) {
            std::vector<FpPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (FpPoly& q : irr) result.push_back({std::move(q), mult});
        }
    }
    // deterministic order: by degree, then lexicographic on coefficients
    std::sort(result.begin(), result.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (a.factor.c != b.factor.c) return a.factor.c < b.factor.c;
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

FpPoly charpoly(const FpMat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("charpoly: not square");
    long p = a.p();
    size_t n = a.rows();
    FpMat h = a;
    // Hessenberg reduction by similarity
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = 0;
        bool found = false;
        for (size_t i = j + 1; i < n; ++i)
            if (h.at(i, j) != 0) {
                piv = i;
                found = true;
                break;
            }
        if (!found) continue;
        if (piv != j + 1) {
            for (size_t k = 0; k < n; ++k) {
                long t = h.at(piv, k);
                h.set(piv, k, h.at(j + 1, k));
                h.set(j + 1, k, t);
            }
            for (size_t k = 0; k < n; ++k) {
                long t = h.at(k, piv);
                h.set(k, piv, h.at(k, j + 1));
                h.set(k, j + 1, t);
            }
        }
        long inv = mod_inv(h.at(j + 1, j), p);
        for (size_t i = j + 2; i < n; ++i) {
            if (h.at(i, j) == 0) continue;
            long m = mulmod(h.at(i, j), inv, p);
            for (size_t k = 0; k < n; ++k) h.set(i, k, h.at(i, k) - mulmod(m, h.at(j + 1, k), p));
            for (size_t k = 0; k < n; ++k) h.set(k, j + 1, h.at(k, j + 1) + mulmod(m, h.at(k, i), p));
        }
    }
    // determinant recurrence on the Hessenberg form
    std::vector<FpPoly> pk;
    pk.push_back(FpPoly::constant(p, 1));
    FpPoly x = FpPoly::x(p);
    for (size_t k = 1; k <= n; ++k) {
        FpPoly cur = (x - FpPoly::constant(p, h.at(k - 1, k - 1))) * pk[k - 1];
        long prod = 1;
        for (size_t i = k - 1; i >= 1; --i) {
            prod = mulmod(prod, h.at(i, i - 1), p);
            if (prod == 0) break;
            long coeff = mulmod(h.at(i - 1, k - 1), prod, p);
            if (coeff != 0) cur = cur - FpPoly::constant(p, coeff) * pk[i - 1];
        }
        pk.push_back(cur);
    }
    return pk[n];
}

FpMat eval_poly(const FpPoly& f, const FpMat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("eval_poly: not square");
    size_t n = a.rows();
    FpMat r(f.p, n, n);
    if (f.is_zero()) return r;
    for (size_t i = f.c.size(); i-- > 0;) {
        r = r * a;
        if (f.c[i] != 0) r = r + FpMat::identity(f.p, n).scaled(f.c[i]);
    }
    return r;
}

} // namespace latmid
