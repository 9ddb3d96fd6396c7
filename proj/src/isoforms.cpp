#include "latmid/isoforms.hpp"

#include "latmid/meataxe.hpp"

namespace latmid {

FormedKGModule::FormedKGModule(KGModule m, FpGram f) : module(std::move(m)), form(std::move(f)) {
    if (form.dim() != module.dim) throw DimensionMismatch("FormedKGModule: form/module dimensions differ");
    if (module.dim > 0 && form.p() != module.p) throw InvalidArgument("FormedKGModule: mixed primes");
    if (form.epsilon == 1 && module.p == 2)
        throw IncompatibleForm("FormedKGModule: symmetric case requires p odd");
    if (!form.nondegenerate()) throw IncompatibleForm("FormedKGModule: form is degenerate");
    for (size_t k = 0; k < module.generators.size(); ++k) {
        const FpMat& g = module.generators[k];
        if (!(g.transpose() * form.mat * g == form.mat))
            throw IncompatibleForm("FormedKGModule: generator " + std::to_string(k) +
                                   " does not preserve the form");
    }
}

namespace {

FpMat orthogonal_of(const FpMat& s_basis, const FpMat& form, long p, size_t n) {
    if (s_basis.cols() == 0) return FpMat::identity(p, n);
    return (s_basis.transpose() * form).nullspace();
}

// Deterministic complement of span(inner) inside span(outer).
FpMat complement_of(const FpMat& inner, const FpMat& outer) {
    long p = outer.p();
    size_t n = outer.rows();
    SpinBasis sb(p, n);
    for (size_t j = 0; j < inner.cols(); ++j)
        if (!sb.insert(inner.col_vec(j))) throw InvalidArgument("complement_of: dependent inner columns");
    FpMat comp(p, n, 0);
    for (size_t j = 0; j < outer.cols(); ++j) {
        std::vector<long> v = outer.col_vec(j);
        if (sb.insert(v)) comp = FpMat::hcat(comp, FpMat::from_col(p, v));
    }
    return comp;
}

// Action and form of S_perp / S expressed on the complement columns.
FormedKGModule induced_on_complement(const FormedKGModule& f, const FpMat& s_basis, const FpMat& s_perp,
                                     const FpMat& comp) {
    long p = f.module.p;
    size_t m = comp.cols();
    (void)s_perp;
    FpMat frame = s_basis.cols() == 0 ? comp : FpMat::hcat(s_basis, comp);
    std::vector<FpMat> gens;
    gens.reserve(f.module.generators.size());
    for (const FpMat& g : f.module.generators) {
        FpMat coords = frame.solve(g * comp); // (s + m) x m
        gens.push_back(coords.block(s_basis.cols(), 0, m, m));
    }
    FpMat gram = comp.transpose() * f.form.mat * comp;
    KGModule mod(p, m, std::move(gens));
    return FormedKGModule(std::move(mod), FpGram(std::move(gram), f.form.epsilon));
}

// Searches the simple submodules of x for a totally isotropic one; fills
// image_basis (columns, in x's coordinates) when found.
bool find_isotropic_simple(const FormedKGModule& x, Rng& rng, FpMat* image_basis) {
    if (x.module.dim == 0) return false;
    long p = x.module.p;
    SSDecomp d = semisimplify(x.module, rng.next());
    for (const SSFactor& factor : d.factors) {
        const KGModule& w = factor.module;
        std::vector<FpMat> homs = hom_space(w, x.module);
        size_t h = homs.size();
        if (h == 0) continue;
        double count = 1;
        for (size_t i = 0; i < h; ++i) count *= static_cast<double>(p);
        if (count > 2000000.0) throw Error("find_isotropic_simple: hom space too large for exhaustive search");
        // nonzero coefficient vectors with first nonzero coordinate 1
        std::vector<long> c(h, 0);
        for (size_t lead = 0; lead < h; ++lead) {
            size_t tail = h - lead - 1;
            size_t total = 1;
            for (size_t i = 0; i < tail; ++i) total *= static_cast<size_t>(p);
            for (size_t idx = 0; idx < total; ++idx) {
                std::fill(c.begin(), c.end(), 0);
                c[lead] = 1;
                size_t rest = idx;
                for (size_t t = 0; t < tail; ++t) {
                    c[lead + 1 + t] = static_cast<long>(rest % static_cast<size_t>(p));
                    rest /= static_cast<size_t>(p);
                }
                FpMat phi(p, x.module.dim, w.dim);
                for (size_t i = 0; i < h; ++i)
                    if (c[i] != 0) phi = phi + homs[i].scaled(c[i]);
                if (phi.is_zero()) continue;
                if (phi.rank() != w.dim)
                    throw Error("find_isotropic_simple: non-injective hom from an irreducible");
                if ((phi.transpose() * x.form.mat * phi).is_zero()) {
                    if (image_basis) *image_basis = phi;
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

bool has_isotropic_simple(const FormedKGModule& x, uint64_t seed) {
    Rng rng(seed);
    return find_isotropic_simple(x, rng, nullptr);
}

IsotropicTower max_isotropic_tower(const FormedKGModule& f, uint64_t seed) {
    Rng rng(seed);
    long p = f.module.p;
    size_t n = f.module.dim;
    IsotropicTower tower;
    tower.s_basis = FpMat(p, n, 0);
    for (;;) {
        tower.s_perp_basis = orthogonal_of(tower.s_basis, f.form.mat, p, n);
        tower.complement_basis = complement_of(tower.s_basis, tower.s_perp_basis);
        tower.x = induced_on_complement(f, tower.s_basis, tower.s_perp_basis, tower.complement_basis);
        FpMat phi;
        if (!find_isotropic_simple(tower.x, rng, &phi)) break;
        FpMat lifted = tower.complement_basis * phi;
        tower.s_basis = FpMat::hcat(tower.s_basis, lifted);
        if (!(tower.s_basis.transpose() * f.form.mat * tower.s_basis).is_zero())
            throw Error("max_isotropic_tower: enlarged S lost isotropy");
    }
    if (!tower.x.form.nondegenerate()) throw Error("max_isotropic_tower: induced form degenerate");
    return tower;
}

FormedKGModule ss_with_form(const FormedKGModule& f, uint64_t seed) {
    IsotropicTower tower = max_isotropic_tower(f, seed);
    long p = f.module.p;
    size_t s = tower.s_basis.cols();
    if (s == 0) return tower.x;
    KGModule s_module = restrict_module(f.module, tower.s_basis);
    KGModule y = module_of_decomp(semisimplify(s_module, seed + 1));
    KGModule y_dual = dual_module(y);
    KGModule out_module = direct_sum(direct_sum(tower.x.module, y), y_dual);
    size_t xd = tower.x.module.dim;
    FpMat gram(p, xd + 2 * s, xd + 2 * s);
    for (size_t i = 0; i < xd; ++i)
        for (size_t j = 0; j < xd; ++j) gram.set(i, j, tower.x.form.mat.at(i, j));
    for (size_t i = 0; i < s; ++i) {
        gram.set(xd + i, xd + s + i, 1);
        gram.set(xd + s + i, xd + i, f.form.epsilon == 1 ? 1 : p - 1);
    }
    return FormedKGModule(std::move(out_module), FpGram(std::move(gram), f.form.epsilon));
}

} // namespace latmid
