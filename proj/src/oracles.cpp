#include "latmid/oracles.hpp"

#include <algorithm>
#include <set>

namespace latmid {

Lattice intersection_via_duality(const Lattice& l, const Lattice& m) {
    if (l.dim() == 0) return l;
    GramForm std_form(RatMat::identity(l.dim()), 1);
    Lattice ld = dual_lattice(l, std_form);
    Lattice md = dual_lattice(m, std_form);
    return dual_lattice(lattice_sum(ld, md), std_form);
}

namespace {

using Elem = std::vector<long>;

struct ExplicitTorsion {
    long p;
    std::vector<long> exps;   // e_i
    std::vector<long> moduli; // p^{e_i}
    size_t order = 1;

    explicit ExplicitTorsion(const TorsionModule& t, long pp) : p(pp), exps(t.exponents) {
        for (long e : exps) {
            long m = 1;
            for (long k = 0; k < e; ++k) m *= p;
            moduli.push_back(m);
            order *= static_cast<size_t>(m);
        }
    }
    Elem element(size_t idx) const {
        Elem x(exps.size());
        for (size_t i = 0; i < exps.size(); ++i) {
            x[i] = static_cast<long>(idx % static_cast<size_t>(moduli[i]));
            idx /= static_cast<size_t>(moduli[i]);
        }
        return x;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
        return c;
    }
    Elem mul_pi(const Elem& a) const {
        Elem c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * p % moduli[i];
        return c;
    }
    Elem pi_pow(Elem a, long n) const {
        for (long k = 0; k < n; ++k) a = mul_pi(a);
        return a;
    }
};

std::set<Elem> close_under_addition(const ExplicitTorsion& t, std::set<Elem> seed) {
    seed.insert(Elem(t.exps.size(), 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Elem> cur(seed.begin(), seed.end());
        for (const Elem& a : cur)
            for (const Elem& b : cur)
                if (seed.insert(t.add(a, b)).second) grew = true;
    }
    return seed;
}

// invariant factors of a subgroup from the order statistics |{x : pi^k x = 0}|
TorsionModule type_from_orders(const ExplicitTorsion& t, const std::vector<size_t>& pk_kill_counts, long p) {
    std::vector<long> s; // s_k = log_p count_k
    for (size_t count : pk_kill_counts) {
        long lg = 0;
        size_t c = count;
        while (c > 1) {
            if (c % static_cast<size_t>(p) != 0) throw Error("torsion oracle: count not a p-power");
            c /= static_cast<size_t>(p);
            ++lg;
        }
        s.push_back(lg);
    }
    (void)t;
    std::vector<long> ge; // ge[k] = #{i : f_i >= k}, k >= 1
    for (size_t k = 1; k < s.size(); ++k) ge.push_back(s[k] - s[k - 1]);
    std::vector<long> exps;
    for (size_t k = 0; k < ge.size(); ++k) {
        long next = k + 1 < ge.size() ? ge[k + 1] : 0;
        for (long c = 0; c < ge[k] - next; ++c) exps.push_back(static_cast<long>(k + 1));
    }
    return TorsionModule(std::move(exps));
}

TorsionModule subgroup_type(const ExplicitTorsion& t, const std::set<Elem>& h, long top) {
    std::vector<size_t> counts;
    for (long k = 0; k <= top; ++k) {
        size_t c = 0;
        for (const Elem& x : h) {
            Elem y = t.pi_pow(x, k);
            if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) ++c;
        }
        counts.push_back(c);
    }
    return type_from_orders(t, counts, t.p);
}

TorsionModule quotient_type_of(const ExplicitTorsion& t, const std::set<Elem>& h, long top) {
    std::vector<size_t> counts;
    for (long k = 0; k <= top; ++k) {
        size_t c = 0;
        for (size_t idx = 0; idx < t.order; ++idx)
            if (h.count(t.pi_pow(t.element(idx), k))) ++c;
        counts.push_back(c / h.size());
    }
    return type_from_orders(t, counts, t.p);
}

} // namespace

TorsionBrute torsion_middles_bruteforce(const TorsionModule& t, long p) {
    ExplicitTorsion et(t, p);
    long top = t.exponent();
    // image and kernel of pi^n for each n
    std::set<Elem> lower_seed;
    std::set<Elem> upper;
    bool upper_init = false;
    for (long n = 0; n <= top + 1; ++n) {
        std::set<Elem> image, kernel;
        for (size_t idx = 0; idx < et.order; ++idx) {
            Elem x = et.element(idx);
            Elem y = et.pi_pow(x, n);
            bool in_kernel = std::all_of(y.begin(), y.end(), [](long v) { return v == 0; });
            image.insert(std::move(y));
            if (in_kernel) kernel.insert(x);
        }
        std::set<Elem> inter;
        for (const Elem& x : image)
            if (kernel.count(x)) inter.insert(x);
        for (const Elem& x : inter) lower_seed.insert(x);
        std::set<Elem> sum;
        for (const Elem& a : image)
            for (const Elem& b : kernel) sum.insert(et.add(a, b));
        if (!upper_init) {
            upper = std::move(sum);
            upper_init = true;
        } else {
            std::set<Elem> cut;
            for (const Elem& x : upper)
                if (sum.count(x)) cut.insert(x);
            upper = std::move(cut);
        }
    }
    std::set<Elem> lower = close_under_addition(et, std::move(lower_seed));

    TorsionBrute out;
    out.lower = subgroup_type(et, lower, top);
    out.upper = subgroup_type(et, upper, top);
    out.t_mod_lower = quotient_type_of(et, lower, top);
    out.t_mod_upper = quotient_type_of(et, upper, top);
    bool ok = true;
    for (const Elem& x : upper)
        if (!lower.count(et.mul_pi(x))) ok = false; // pi·m_+ ⊆ m_-
    for (const Elem& x : lower)
        if (!upper.count(x)) ok = false; // m_- ⊆ m_+
    out.sandwich_ok = ok;
    return out;
}

WittClass witt_class_bruteforce(const DiagFormFp& d) {
    long p = d.p;
    if (p == 2) throw EvenResidueChar("witt_class_bruteforce: residue characteristic 2");
    FpMat g(p, d.entries.size(), d.entries.size());
    for (size_t i = 0; i < d.entries.size(); ++i) {
        long v = ((d.entries[i] % p) + p) % p;
        if (v == 0) throw InvalidArgument("witt_class_bruteforce: zero entry");
        g.set(i, i, v);
    }
    for (;;) {
        size_t r = g.rows();
        if (r == 0) break;
        // exhaustive isotropic-vector search (first nonzero coordinate 1)
        bool found = false;
        std::vector<long> x(r, 0);
        for (size_t lead = 0; lead < r && !found; ++lead) {
            size_t count = 1;
            for (size_t i = lead + 1; i < r; ++i) count *= static_cast<size_t>(p);
            for (size_t idx = 0; idx < count && !found; ++idx) {
                std::fill(x.begin(), x.end(), 0);
                x[lead] = 1;
                size_t rest = idx;
                for (size_t i = lead + 1; i < r; ++i) {
                    x[i] = static_cast<long>(rest % static_cast<size_t>(p));
                    rest /= static_cast<size_t>(p);
                }
                long q = 0;
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < r; ++j) q = (q + x[i] * g.at(i, j) % p * x[j]) % p;
                if (q == 0) found = true;
            }
        }
        if (!found) break;
        // split off the hyperbolic plane spanned by x and some y with b(x,y) != 0
        FpMat xm = FpMat::from_col(p, x);
        FpMat bx = xm.transpose() * g; // 1 x r
        size_t ycol = r;
        for (size_t j = 0; j < r; ++j)
            if (bx.at(0, j) != 0) {
                ycol = j;
                break;
            }
        if (ycol == r) throw DegenerateForm("witt_class_bruteforce: degenerate block");
        std::vector<long> y(r, 0);
        y[ycol] = 1;
        FpMat ym = FpMat::from_col(p, y);
        FpMat by = ym.transpose() * g;
        FpMat pair(p, 2, r);
        for (size_t j = 0; j < r; ++j) {
            pair.set(0, j, bx.at(0, j));
            pair.set(1, j, by.at(0, j));
        }
        FpMat comp = pair.nullspace(); // r x (r-2)
        if (comp.cols() != r - 2) throw Error("witt_class_bruteforce: complement has wrong dimension");
        g = comp.transpose() * g * comp;
    }
    WittClass w;
    w.p = p;
    size_t r = g.rows();
    w.rank_parity = static_cast<int>(r % 2);
    if (r == 0) {
        w.disc = 0;
    } else {
        long det = g.det();
        if ((static_cast<long>(r) * (static_cast<long>(r) - 1) / 2) % 2 == 1) det = (p - det) % p;
        w.disc = square_class(det, p);
    }
    return w;
}

} // namespace latmid
