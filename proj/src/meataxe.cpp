#include "latmid/meataxe.hpp"

namespace latmid {

namespace {

FpMat random_algebra_element(const KGModule& e, Rng& rng) {
    long p = e.p;
    size_t n = e.dim;
    FpMat theta = FpMat::identity(p, n).scaled(rng.below(p));
    if (!e.generators.empty()) {
        long terms = rng.range(1, 3);
        for (long t = 0; t < terms; ++t) {
            long len = rng.range(1, 3);
            FpMat w = e.generators[static_cast<size_t>(rng.below(static_cast<long>(e.generators.size())))];
            for (long k = 1; k < len; ++k)
                w = w * e.generators[static_cast<size_t>(rng.below(static_cast<long>(e.generators.size())))];
            theta = theta + w.scaled(rng.range(1, p - 1 > 0 ? p - 1 : 1));
        }
    }
    return theta;
}

// Exhaustive fallback for tiny modules: spin every projective point. Sound in
// both directions: a proper submodule contains a nonzero vector.
MeataxeStep exhaustive_step(const KGModule& e) {
    long p = e.p;
    size_t n = e.dim;
    std::vector<long> v(n, 0);
    // enumerate vectors with first nonzero coordinate 1
    for (size_t lead = 0; lead < n; ++lead) {
        std::vector<size_t> tail;
        for (size_t i = lead + 1; i < n; ++i) tail.push_back(i);
        size_t count = 1;
        for (size_t i = 0; i < tail.size(); ++i) count *= static_cast<size_t>(p);
        for (size_t idx = 0; idx < count; ++idx) {
            std::fill(v.begin(), v.end(), 0);
            v[lead] = 1;
            size_t rest = idx;
            for (size_t t = 0; t < tail.size(); ++t) {
                v[tail[t]] = static_cast<long>(rest % static_cast<size_t>(p));
                rest /= static_cast<size_t>(p);
            }
            FpMat s = spin(e.generators, FpMat::from_col(p, v));
            if (s.cols() < n) {
                MeataxeStep r;
                r.submodule = s;
                return r;
            }
        }
    }
    MeataxeStep r;
    r.irreducible = true;
    return r;
}

} // namespace

MeataxeStep meataxe_step(const KGModule& e, Rng& rng) {
    size_t n = e.dim;
    MeataxeStep res;
    if (n <= 1) {
        res.irreducible = true;
        return res;
    }
    std::vector<FpMat> gens_t;
    gens_t.reserve(e.generators.size());
    for (const FpMat& g : e.generators) gens_t.push_back(g.transpose());

    const int max_attempts = 120;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        FpMat theta = random_algebra_element(e, rng);
        FpPoly cp = charpoly(theta);
        std::vector<PolyFactor> factors = poly_factor(cp, rng);
        for (const PolyFactor& f : factors) {
            FpMat w = eval_poly(f.factor, theta);
            FpMat null = w.nullspace();
            if (null.cols() == 0) continue; // cannot happen for charpoly factors
            for (size_t j = 0; j < null.cols(); ++j) {
                FpMat s = spin(e.generators, null.col(j));
                if (s.cols() < n) {
                    res.submodule = s;
                    return res;
                }
            }
            if (null.cols() == static_cast<size_t>(f.factor.degree())) {
                // good case: Norton's criterion with one vector per side
                FpMat wt = eval_poly(f.factor, theta.transpose());
                FpMat null_t = wt.nullspace();
                FpMat st = spin(gens_t, null_t.col(0));
                if (st.cols() < n) {
                    // annihilator of the transpose-side submodule is invariant
                    FpMat perp = st.transpose().nullspace();
                    if (perp.cols() == 0 || perp.cols() >= n)
                        throw Error("meataxe_step: annihilator has unexpected dimension");
                    res.submodule = perp;
                    return res;
                }
                res.irreducible = true;
                return res;
            }
        }
    }
    // desk-scale safety net
    double size = 1;
    for (size_t i = 0; i < n; ++i) size *= static_cast<double>(e.p);
    if (size <= 500000.0) return exhaustive_step(e);
    throw Error("meataxe_step: failed to certify after max attempts");
}

KGModule restrict_module(const KGModule& e, const FpMat& basis) {
    std::vector<FpMat> gens;
    gens.reserve(e.generators.size());
    for (const FpMat& g : e.generators) gens.push_back(basis.solve(g * basis));
    return KGModule(e.p, basis.cols(), std::move(gens));
}

FpMat complete_basis(const FpMat& basis) {
    long p = basis.p();
    size_t n = basis.rows();
    SpinBasis sb(p, n);
    std::vector<size_t> keep;
    for (size_t j = 0; j < basis.cols(); ++j)
        if (!sb.insert(basis.col_vec(j)))
            throw InvalidArgument("complete_basis: dependent columns");
    FpMat full = basis;
    for (size_t i = 0; i < n && full.cols() < n; ++i) {
        std::vector<long> ei(n, 0);
        ei[i] = 1;
        if (sb.insert(ei)) full = FpMat::hcat(full, FpMat::from_col(p, ei));
    }
    if (full.cols() != n) throw Error("complete_basis: completion failed");
    return full;
}

KGModule quotient_module(const KGModule& e, const FpMat& basis) {
    size_t k = basis.cols(), n = e.dim;
    FpMat t = complete_basis(basis);
    FpMat tinv = t.inverse();
    std::vector<FpMat> gens;
    gens.reserve(e.generators.size());
    for (const FpMat& g : e.generators) {
        FpMat m = tinv * g * t;
        // invariance: lower-left block must vanish
        for (size_t i = k; i < n; ++i)
            for (size_t j = 0; j < k; ++j)
                if (m.at(i, j) != 0) throw InvalidArgument("quotient_module: subspace not invariant");
        gens.push_back(m.block(k, k, n - k, n - k));
    }
    return KGModule(e.p, n - k, std::move(gens));
}

} // namespace latmid
