#include "latmid/modrep.hpp"

#include "latmid/meataxe.hpp"

#include <algorithm>

namespace latmid {

KGModule::KGModule(long p_, size_t dim_, std::vector<FpMat> gens)
    : p(p_), dim(dim_), generators(std::move(gens)) {
    if (!is_prime(p)) throw InvalidArgument("KGModule: p must be prime");
    for (const FpMat& g : generators) {
        if (g.p() != p) throw InvalidArgument("KGModule: generator modulus mismatch");
        if (g.rows() != dim || g.cols() != dim)
            throw DimensionMismatch("KGModule: generator is not dim x dim");
        if (dim > 0 && g.det() == 0) throw InvalidArgument("KGModule: generator not invertible over F_p");
    }
}

Lattice stable_lattice(const GroupRepK& rep, const Lattice& m0) {
    for (const RatMat& g : rep.generators)
        if (g.rows() != m0.dim() || g.cols() != m0.dim())
            throw DimensionMismatch("stable_lattice: generator dimension mismatch");
    Lattice l = m0;
    bool fixed = rep.generators.empty();
    for (long it = 0; it < rep.word_bound && !fixed; ++it) {
        Lattice next = l;
        for (const RatMat& g : rep.generators) next = lattice_sum(next, l.apply(g));
        if (next == l) {
            fixed = true;
            break;
        }
        l = next;
    }
    if (!is_stable(rep, l))
        throw UnboundedAction("stable_lattice: sum did not stabilize within word bound " +
                              std::to_string(rep.word_bound));
    return l;
}

bool is_stable(const GroupRepK& rep, const Lattice& l) {
    for (const RatMat& g : rep.generators)
        if (l.apply(g) != l) return false;
    return true;
}

KGModule reduce_mod_pi(const GroupRepK& rep, const Lattice& l) {
    long p = l.p();
    size_t n = l.dim();
    std::vector<FpMat> gens;
    gens.reserve(rep.generators.size());
    for (const RatMat& g : rep.generators) {
        RatMat c = l.basis_inverse() * g * l.basis();
        FpMat gp(p, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (valuation(c.at(i, j), p) < Val::of(0))
                    throw NotStable("reduce_mod_pi: lattice is not stable under a generator");
                gp.set(i, j, residue(c.at(i, j), p).value());
            }
        gens.push_back(std::move(gp));
    }
    return KGModule(p, n, std::move(gens));
}

std::vector<FpPoly> word_fingerprint(const KGModule& m) {
    std::vector<FpPoly> out;
    size_t r = m.generators.size();
    if (r == 0 || m.dim == 0) return out;
    const size_t cap = 12;
    std::vector<std::vector<size_t>> words;
    for (size_t len = 1; len <= 3 && words.size() < cap; ++len) {
        std::vector<size_t> w(len, 0);
        for (;;) {
            words.push_back(w);
            if (words.size() >= cap) break;
            size_t i = len;
            while (i > 0 && ++w[i - 1] == r) {
                w[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
    for (const auto& w : words) {
        FpMat prod = m.generators[w[0]];
        for (size_t k = 1; k < w.size(); ++k) prod = prod * m.generators[w[k]];
        out.push_back(charpoly(prod));
    }
    return out;
}

std::vector<FpMat> hom_space(const KGModule& a, const KGModule& b) {
    if (a.p != b.p) throw InvalidArgument("hom_space: mixed primes");
    if (a.generators.size() != b.generators.size())
        throw GeneratorCountMismatch("hom_space: generator counts differ");
    long p = a.p;
    size_t da = a.dim, db = b.dim;
    size_t unknowns = da * db;
    size_t r = a.generators.size();
    // X: db x da, vec index = i + db * j for X[i][j]; equations b_g X - X a_g = 0
    FpMat sys(p, r * unknowns == 0 ? 1 : r * unknowns, unknowns == 0 ? 1 : unknowns);
    if (unknowns == 0) return {};
    for (size_t g = 0; g < r; ++g) {
        const FpMat& ag = a.generators[g];
        const FpMat& bg = b.generators[g];
        for (size_t i = 0; i < db; ++i)
            for (size_t j = 0; j < da; ++j) {
                size_t row = g * unknowns + i + db * j;
                for (size_t k = 0; k < db; ++k)
                    sys.set(row, k + db * j, sys.at(row, k + db * j) + bg.at(i, k));
                for (size_t l = 0; l < da; ++l)
                    sys.set(row, i + db * l, sys.at(row, i + db * l) - ag.at(l, j));
            }
    }
    FpMat null = r == 0 ? FpMat::identity(p, unknowns) : sys.nullspace();
    std::vector<FpMat> basis;
    for (size_t c = 0; c < null.cols(); ++c) {
        FpMat x(p, db, da);
        for (size_t j = 0; j < da; ++j)
            for (size_t i = 0; i < db; ++i) x.set(i, j, null.at(i + db * j, c));
        basis.push_back(std::move(x));
    }
    return basis;
}

bool irreducible_isomorphic(const KGModule& a, const KGModule& b) {
    if (a.dim != b.dim) return false;
    if (word_fingerprint(a) != word_fingerprint(b)) return false;
    std::vector<FpMat> homs = hom_space(a, b);
    for (const FpMat& h : homs)
        if (!h.is_zero()) {
            if (a.dim > 0 && h.det() == 0)
                throw Error("irreducible_isomorphic: nonzero hom between irreducibles is singular");
            return true;
        }
    return false;
}

SSDecomp semisimplify(const KGModule& e, uint64_t seed) {
    Rng rng(seed);
    SSDecomp out;
    out.p = e.p;
    out.total_dim = e.dim;
    out.generator_count = e.generators.size();
    std::vector<KGModule> stack{e};
    std::vector<KGModule> irreducibles;
    while (!stack.empty()) {
        KGModule m = std::move(stack.back());
        stack.pop_back();
        if (m.dim == 0) continue;
        MeataxeStep step = meataxe_step(m, rng);
        if (step.irreducible) {
            irreducibles.push_back(std::move(m));
            continue;
        }
        stack.push_back(restrict_module(m, step.submodule));
        stack.push_back(quotient_module(m, step.submodule));
    }
    for (KGModule& irr : irreducibles) {
        bool merged = false;
        for (SSFactor& f : out.factors)
            if (irreducible_isomorphic(f.module, irr)) {
                ++f.multiplicity;
                merged = true;
                break;
            }
        if (!merged) {
            SSFactor f;
            f.fingerprint = word_fingerprint(irr);
            f.module = std::move(irr);
            f.multiplicity = 1;
            out.factors.push_back(std::move(f));
        }
    }
    // deterministic order: dimension, then fingerprint
    std::sort(out.factors.begin(), out.factors.end(), [](const SSFactor& x, const SSFactor& y) {
        if (x.module.dim != y.module.dim) return x.module.dim < y.module.dim;
        for (size_t i = 0; i < std::min(x.fingerprint.size(), y.fingerprint.size()); ++i)
            if (x.fingerprint[i].c != y.fingerprint[i].c) return x.fingerprint[i].c < y.fingerprint[i].c;
        return false;
    });
    return out;
}

bool ss_isomorphic(const SSDecomp& a, const SSDecomp& b) {
    if (a.generator_count != b.generator_count)
        throw GeneratorCountMismatch("ss_isomorphic: generator counts differ");
    if (a.p != b.p) throw InvalidArgument("ss_isomorphic: mixed primes");
    if (a.total_dim != b.total_dim) return false;
    if (a.factors.size() != b.factors.size()) return false;
    std::vector<bool> used(b.factors.size(), false);
    for (const SSFactor& fa : a.factors) {
        bool matched = false;
        for (size_t j = 0; j < b.factors.size(); ++j) {
            if (used[j]) continue;
            const SSFactor& fb = b.factors[j];
            if (fa.module.dim != fb.module.dim || fa.multiplicity != fb.multiplicity) continue;
            if (!irreducible_isomorphic(fa.module, fb.module)) continue;
            used[j] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}

bool brauer_nesbitt_check(const GroupRepK& rep, const Lattice& l, const Lattice& m, uint64_t seed) {
    SSDecomp a = semisimplify(reduce_mod_pi(rep, l), seed);
    SSDecomp b = semisimplify(reduce_mod_pi(rep, m), seed + 1);
    return ss_isomorphic(a, b);
}

KGModule dual_module(const KGModule& m) {
    std::vector<FpMat> gens;
    gens.reserve(m.generators.size());
    for (const FpMat& g : m.generators) gens.push_back(g.inverse().transpose());
    return KGModule(m.p, m.dim, std::move(gens));
}

KGModule direct_sum(const KGModule& a, const KGModule& b) {
    if (a.p != b.p) throw InvalidArgument("direct_sum: mixed primes");
    if (a.generators.size() != b.generators.size())
        throw GeneratorCountMismatch("direct_sum: generator counts differ");
    std::vector<FpMat> gens;
    for (size_t i = 0; i < a.generators.size(); ++i)
        gens.push_back(FpMat::block_diag(a.generators[i], b.generators[i]));
    if (a.generators.empty())
        return KGModule(a.p, a.dim + b.dim, {});
    return KGModule(a.p, a.dim + b.dim, std::move(gens));
}

KGModule module_of_decomp(const SSDecomp& d) {
    KGModule acc(d.p, 0, std::vector<FpMat>(d.generator_count, FpMat(d.p, 0, 0)));
    for (const SSFactor& f : d.factors)
        for (size_t k = 0; k < f.multiplicity; ++k) acc = direct_sum(acc, f.module);
    return acc;
}

} // namespace latmid
