#include "latmid/selftest.hpp"

#include "latmid/fixtures.hpp"
#include "latmid/oracles.hpp"
#include "latmid/pipeline.hpp"
#include "latmid/problem.hpp"
#include "latmid/randgen.hpp"

#include <chrono>
#include <sstream>

namespace latmid {

namespace {

long scaled(const SelfTestOptions& o, long dflt) { return o.cases < 0 ? dflt : o.cases; }

std::string paint(bool color, const char* code, const std::string& s) {
    if (!color) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string dump_pair(const Lattice& l, const Lattice& m) {
    std::ostringstream os;
    os << "p = " << l.p() << "\ndim = " << l.dim() << "\nlattice_l = " << serialize_matrix(l.basis())
       << "\nlattice_m = " << serialize_matrix(m.basis()) << "\n";
    return os.str();
}

std::string dump_form_case(const Lattice& l, const GramForm& b) {
    ProblemFile pf;
    pf.p = l.p();
    pf.epsilon = b.epsilon;
    pf.dim = static_cast<long>(l.dim());
    pf.gram = b.mat;
    pf.word_bound = 1;
    return serialize_problem(pf) + "# lattice = " + serialize_matrix(l.basis()) + "\n";
}

struct Runner {
    const SelfTestOptions& opt;
    CriterionResult res;

    explicit Runner(const SelfTestOptions& o, int index, std::string name) : opt(o) {
        res.index = index;
        res.name = std::move(name);
    }
    bool record(bool ok, const std::string& what, const std::string& dump) {
        ++res.cases_run;
        if (!ok && res.detail.empty()) res.detail = what + "\n" + dump;
        return ok;
    }
    CriterionResult finish(double secs) {
        res.pass = res.detail.empty();
        res.seconds = secs;
        return res;
    }
};

long pick_prime(const SelfTestOptions& o, Rng& rng) {
    return o.primes[static_cast<size_t>(rng.below(static_cast<long>(o.primes.size())))];
}

long pick_odd_prime(const SelfTestOptions& o, Rng& rng) {
    std::vector<long> odd;
    for (long p : o.primes)
        if (p != 2) odd.push_back(p);
    if (odd.empty()) throw InvalidArgument("selftest: need at least one odd prime");
    return odd[static_cast<size_t>(rng.below(static_cast<long>(odd.size())))];
}

// ---- criterion 1: middle-lattice laws -------------------------------------

std::string check_middle_laws(const Lattice& l, const Lattice& m, Rng& rng, bool with_oracle) {
    Lattice ml = middle_lower(l, m), mu = middle_upper(l, m);
    Lattice cap = lattice_intersection(l, m), cup = lattice_sum(l, m);
    if (!ml.contains(cap)) return "sandwich (1.2.2): L∩M not inside m-";
    if (!mu.contains(ml)) return "sandwich (1.2.2): m- not inside m+";
    if (!cup.contains(mu)) return "sandwich (1.2.2): m+ not inside L+M";
    if (!ml.contains(mu.twist(-1))) return "th. 1.2.4: pi·m+ not inside m-";
    if (middle_lower(m, l) != ml) return "symmetry of m-";
    if (middle_upper(m, l) != mu) return "symmetry of m+";
    if (middle_lower(l.twist(-1), m) != mu.twist(-1)) return "(1.2.6)";
    if (middle_upper(l.twist(-1), m) != ml) return "(1.2.7)";
    if (middle_lower(cup, cap) != ml) return "(1.2.8) lower";
    if (middle_upper(cup, cap) != mu) return "(1.2.8) upper";
    long x = rng.range(-2, 2), y = rng.range(-2, 2);
    auto [ilo, ihi] = int_middles(x, y);
    if (middle_lower(l.twist(x), l.twist(y)) != l.twist(ilo)) return "(1.1.5)/(1.1.6) lower twists";
    if (middle_upper(l.twist(x), l.twist(y)) != l.twist(ihi)) return "(1.1.5)/(1.1.7) upper twists";
    if (with_oracle && lattice_intersection(l, m) != intersection_via_duality(l, m))
        return "intersection disagrees with the duality oracle";
    return "";
}

CriterionResult criterion1(const SelfTestOptions& opt) {
    Runner r(opt, 1, "middle-lattice laws (1.2.1, 1.2.4, symmetry, (1.2.6)-(1.2.8), 1.1.5)");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 1);
    long target = scaled(opt, 1000);
    for (long i = 0; i < target; ++i) {
        long p = pick_prime(opt, rng);
        size_t n = static_cast<size_t>(rng.range(1, opt.max_dim));
        Lattice l = random_lattice(rng, n, p), m = random_lattice(rng, n, p);
        std::string err = check_middle_laws(l, m, rng, i % 5 == 0);
        r.record(err.empty(), err, dump_pair(l, m));
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 2: truncation oracle ----------------------------------------

CriterionResult criterion2(const SelfTestOptions& opt) {
    Runner r(opt, 2, "truncation soundness: n-range ceil(a/2) equals range 2a+2");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 2);
    long target = scaled(opt, 200);
    for (long i = 0; i < target; ++i) {
        long p = pick_prime(opt, rng);
        size_t n = static_cast<size_t>(rng.range(1, opt.max_dim));
        Lattice l = random_lattice(rng, n, p), m = random_lattice(rng, n, p);
        long a = codistance(l, m);
        bool ok = middle_lower(l, m).canonical_basis() == middle_lower(l, m, 2 * a + 2).canonical_basis() &&
                  middle_upper(l, m).canonical_basis() == middle_upper(l, m, 2 * a + 2).canonical_basis();
        r.record(ok, "widening the middle range changed the result", dump_pair(l, m));
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 3: torsion middles vs explicit enumeration ------------------

void partitions_up_to(long total, std::vector<std::vector<long>>& out) {
    out.push_back({});
    std::vector<long> cur;
    // nonincreasing sequences with positive parts, sum <= total
    struct Gen {
        long total;
        std::vector<std::vector<long>>& out;
        std::vector<long> cur;
        void go(long remaining, long maxpart) {
            for (long part = std::min(remaining, maxpart); part >= 1; --part) {
                cur.push_back(part);
                out.push_back(cur);
                go(remaining - part, part);
                cur.pop_back();
            }
        }
    } gen{total, out, {}};
    gen.go(total, total);
}

CriterionResult criterion3(const SelfTestOptions& opt) {
    Runner r(opt, 3, "torsion middles match brute-force enumeration; (1.3.4)-(1.3.6)");
    auto t0 = std::chrono::steady_clock::now();
    if (opt.cases != 0) {
        std::vector<std::vector<long>> parts;
        partitions_up_to(6, parts);
        for (const auto& e : parts) {
            TorsionModule t(e);
            auto [lo, hi] = torsion_middles(t);
            TorsionBrute brute = torsion_middles_bruteforce(t, 3);
            std::ostringstream os;
            os << "# torsion exponents =";
            for (long x : e) os << " " << x;
            std::string dump = os.str() + "\n";
            r.record(lo == brute.lower, "m- formula disagrees with enumeration", dump);
            r.record(hi == brute.upper, "m+ formula disagrees with enumeration", dump);
            r.record(brute.sandwich_ok, "(1.3.4) fails in the explicit group", dump);
            r.record(brute.upper == brute.t_mod_lower, "(1.3.5): m+(T) vs T/m-(T)", dump);
            r.record(brute.lower == brute.t_mod_upper, "(1.3.6): m-(T) vs T/m+(T)", dump);
        }
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 4: duality ---------------------------------------------------

CriterionResult criterion4(const SelfTestOptions& opt) {
    Runner r(opt, 4, "duality: (L')' = L, th. 3.1.1 dual identity, asd_via_middle output");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 4);
    long target = scaled(opt, 500);
    for (long i = 0; i < target; ++i) {
        long p = pick_prime(opt, rng);
        size_t n = static_cast<size_t>(rng.range(1, opt.max_dim));
        int eps = (n % 2 == 0 && rng.one_in(2)) ? -1 : 1;
        Lattice l = random_lattice(rng, n, p);
        GramForm b = random_gram(rng, n, eps, p);
        Lattice dual = dual_lattice(l, b);
        std::string dump = dump_form_case(l, b);
        r.record(dual_lattice(dual, b) == l, "(L')' != L", dump);
        r.record(dual_lattice(middle_lower(l, dual), b) == middle_upper(l, dual),
                 "dual of m-(L,L') is not m+(L,L')", dump);
        r.record(is_almost_self_dual(asd_via_middle(l, b), b), "asd_via_middle output not almost self-dual",
                 dump);
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 5: Thompson agreement ---------------------------------------

CriterionResult criterion5(const SelfTestOptions& opt) {
    Runner r(opt, 5, "asd_thompson equals asd_via_middle after rescaling");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 5);
    long target = scaled(opt, 200);
    for (long i = 0; i < target; ++i) {
        long p = pick_prime(opt, rng);
        size_t n = static_cast<size_t>(rng.range(1, opt.max_dim));
        int eps = (n % 2 == 0 && rng.one_in(2)) ? -1 : 1;
        Lattice l = random_lattice(rng, n, p);
        GramForm b = random_gram(rng, n, eps, p);
        bool ok = asd_thompson(l, b) == asd_via_middle(asd_rescale(l, b), b);
        r.record(ok, "Thompson iteration disagrees with the lower middle", dump_form_case(l, b));
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 6: Springer / Witt ------------------------------------------

CriterionResult criterion6(const SelfTestOptions& opt) {
    Runner r(opt, 6, "witt_class_k vs anisotropic-kernel oracle; th. 3.3.2 on random pairs");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 6);
    if (opt.cases != 0) {
        for (long p : {3L, 5L, 7L}) {
            long s = smallest_nonsquare(p);
            for (int rank = 0; rank <= 4; ++rank)
                for (int mask = 0; mask < (1 << rank); ++mask) {
                    DiagFormFp d;
                    d.p = p;
                    for (int k = 0; k < rank; ++k) d.entries.push_back((mask >> k) & 1 ? s : 1);
                    std::ostringstream os;
                    os << "# diagonal form over F_" << p << ":";
                    for (long e : d.entries) os << " " << e;
                    r.record(witt_class_k(d) == witt_class_bruteforce(d),
                             "canonical Witt class disagrees with the oracle", os.str() + "\n");
                }
        }
    }
    long target = scaled(opt, 100);
    for (long i = 0; i < target; ++i) {
        long p = pick_odd_prime(opt, rng);
        size_t n = static_cast<size_t>(rng.range(1, opt.max_dim));
        Lattice l0 = random_lattice(rng, n, p);
        GramForm b = random_gram(rng, n, 1, p);
        Lattice l = asd_via_middle(l0, b);
        r.record(verify_springer_vs_residuals(l, b), "th. 3.3.2 check failed", dump_form_case(l, b));
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 7: Brauer-Nesbitt -------------------------------------------

CriterionResult criterion7(const SelfTestOptions& opt) {
    Runner r(opt, 7, "Brauer-Nesbitt over the fixture corpus; semisimplify seed independence");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 7);
    long pairs = scaled(opt, 20);
    for (const GroupFixture& fix : fixture_groups()) {
        for (long p : opt.primes) {
            GroupRepK rep = fix.rep();
            size_t n = fix.generators[0].rows();
            for (long k = 0; k < pairs; ++k) {
                Lattice l = stable_lattice(rep, random_lattice(rng, n, p, -2, 2));
                Lattice m = stable_lattice(rep, random_lattice(rng, n, p, -2, 2));
                std::string dump = "# group " + fix.name + ", p = " + std::to_string(p) + "\n" +
                                   dump_pair(l, m);
                r.record(brauer_nesbitt_check(rep, l, m, rng.next()), "Brauer-Nesbitt check failed", dump);
            }
            if (pairs > 0) {
                KGModule e = reduce_mod_pi(rep, stable_lattice(rep, Lattice::standard(n, p)));
                SSDecomp s1 = semisimplify(e, opt.seed + 101);
                SSDecomp s2 = semisimplify(e, opt.seed + 202);
                SSDecomp s3 = semisimplify(e, opt.seed + 303);
                bool ok = ss_isomorphic(s1, s2) && ss_isomorphic(s2, s3);
                r.record(ok, "semisimplify output depends on the seed",
                         "# group " + fix.name + ", p = " + std::to_string(p) + "\n");
            }
        }
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 8: Theorem A/B end-to-end ------------------------------------

std::vector<GroupFixture> theorem_corpus() {
    std::vector<GroupFixture> corpus = fixture_groups();
    GroupFixture trivial;
    trivial.name = "trivial";
    trivial.generators = {};
    trivial.order = 1;
    trivial.invariant_gram = RatMat::identity(2);
    trivial.epsilon = 1;
    corpus.insert(corpus.begin(), trivial);
    return corpus;
}

CriterionResult criterion8(const SelfTestOptions& opt) {
    Runner r(opt, 8, "theorems A and B end-to-end; lattice-choice independence");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 8);
    long starts = std::min<long>(5, scaled(opt, 5));
    if (starts > 0) {
        for (const GroupFixture& fix : theorem_corpus()) {
            size_t n = fix.invariant_gram.rows();
            GroupRepK rep = fix.rep();
            GramForm b = fix.form();
            for (long p : opt.primes) {
                if (b.epsilon == 1 && p == 2) continue;
                ValConfig cfg(p);
                std::vector<ReductionReport> reports;
                for (long k = 0; k < starts; ++k) {
                    Lattice start = k == 0 ? Lattice::standard(n, p) : random_lattice(rng, n, p, -2, 2);
                    ProblemFile pf;
                    pf.p = p;
                    pf.epsilon = b.epsilon;
                    pf.dim = static_cast<long>(n);
                    pf.generators = fix.generators;
                    pf.gram = b.mat;
                    pf.word_bound = fix.order;
                    std::string dump = serialize_problem(pf) + "# start lattice = " +
                                       serialize_matrix(start.basis()) + "\n";
                    ReductionReport rr;
                    try {
                        rr = reduce_with_form_from(rep, b, cfg, start, rng.next());
                    } catch (const Error& e) {
                        r.record(false, std::string("pipeline raised: ") + e.what(), dump);
                        continue;
                    }
                    std::string failed;
                    for (const auto& [name, ok] : rr.checks)
                        if (!ok) failed = name;
                    r.record(failed.empty(), "pipeline check failed: " + failed, dump);
                    if (failed.empty()) reports.push_back(std::move(rr));
                }
                // lattice-choice independence of the contractual outputs
                for (size_t k = 1; k < reports.size(); ++k) {
                    bool witt_ok = !reports[0].orthogonal ||
                                   (reports[k].witt_q1 == reports[0].witt_q1 &&
                                    reports[k].witt_q2 == reports[0].witt_q2 &&
                                    reports[k].witt_total == reports[0].witt_total);
                    KGModule vk0 = direct_sum(reports[0].e1.module, reports[0].e2.module);
                    KGModule vkk = direct_sum(reports[k].e1.module, reports[k].e2.module);
                    bool mod_ok = ss_isomorphic(semisimplify(vk0, opt.seed + 11), semisimplify(vkk, opt.seed + 12));
                    r.record(witt_ok && mod_ok,
                             "reduction depends on the starting lattice (group " + fix.name + ", p = " +
                                 std::to_string(p) + ")",
                             "");
                }
            }
        }
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

// ---- criterion 9: forms on the semisimplification ---------------------------

FpMat random_fp_invertible(Rng& rng, long p, size_t n) {
    for (;;) {
        FpMat x(p, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) x.set(i, j, rng.below(p));
        if (n == 0 || x.det() != 0) return x;
    }
}

FormedKGModule conjugate_formed(const FormedKGModule& f, const FpMat& x) {
    FpMat xinv = x.inverse();
    std::vector<FpMat> gens;
    for (const FpMat& g : f.module.generators) gens.push_back(xinv * g * x);
    KGModule mod(f.module.p, f.module.dim, std::move(gens));
    return FormedKGModule(std::move(mod), FpGram(x.transpose() * f.form.mat * x, f.form.epsilon));
}

// E ⊕ E* with the standard hyperbolic ε-pairing; compatible for any module.
FormedKGModule hyperbolic_double(const KGModule& e, int eps) {
    KGModule d = direct_sum(e, dual_module(e));
    size_t n = e.dim;
    FpMat h(e.p, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        h.set(i, n + i, 1);
        h.set(n + i, i, eps == 1 ? 1 : e.p - 1);
    }
    return FormedKGModule(std::move(d), FpGram(std::move(h), eps));
}

FormedKGModule formed_direct_sum(const FormedKGModule& a, const FormedKGModule& b) {
    return FormedKGModule(direct_sum(a.module, b.module),
                          FpGram(FpMat::block_diag(a.form.mat, b.form.mat), a.form.epsilon));
}

CriterionResult criterion9(const SelfTestOptions& opt) {
    Runner r(opt, 9, "ss_with_form: validity and Witt/rank preservation");
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(opt.seed * 31 + 9);
    long target = scaled(opt, 100);
    const auto& fixtures = fixture_groups();
    for (long i = 0; i < target; ++i) {
        const GroupFixture& fix = fixtures[static_cast<size_t>(rng.below(static_cast<long>(fixtures.size())))];
        long p = fix.epsilon == 1 ? pick_odd_prime(opt, rng) : pick_prime(opt, rng);
        GroupRepK rep = fix.rep();
        size_t n = fix.generators[0].rows();
        // seed modules that provably carry compatible nondegenerate forms:
        // residual forms of an almost-self-dual stable lattice, their direct
        // sums, and hyperbolic doubles E ⊕ E*
        Lattice start = stable_lattice(rep, random_lattice(rng, n, p, -2, 2));
        GramForm b = fix.form();
        Lattice asd = asd_via_middle(start, b);
        ResidualForms rf = residual_forms(asd, b);
        RatMat finv = rf.basis_witness.basis.inverse();
        auto residual_part = [&](const std::vector<size_t>& idx, const FpGram& gram) {
            std::vector<FpMat> gens;
            for (const RatMat& g : rep.generators) {
                RatMat c = finv * g * rf.basis_witness.basis;
                FpMat sub(p, idx.size(), idx.size());
                for (size_t a2 = 0; a2 < idx.size(); ++a2)
                    for (size_t b2 = 0; b2 < idx.size(); ++b2)
                        sub.set(a2, b2, residue(c.at(idx[a2], idx[b2]), p).value());
                gens.push_back(std::move(sub));
            }
            return FormedKGModule(KGModule(p, idx.size(), std::move(gens)), gram);
        };
        FormedKGModule instance;
        long kind = rng.below(4);
        if (kind == 0 && !rf.idx1.empty())
            instance = residual_part(rf.idx1, rf.b1);
        else if (kind == 1 && !rf.idx2.empty())
            instance = residual_part(rf.idx2, rf.b2);
        else if (kind == 2 && !rf.idx1.empty() && !rf.idx2.empty())
            instance = formed_direct_sum(residual_part(rf.idx1, rf.b1), residual_part(rf.idx2, rf.b2));
        else
            instance = hyperbolic_double(reduce_mod_pi(rep, start), fix.epsilon);
        if (instance.module.dim > 8) instance = residual_part(rf.idx1.empty() ? rf.idx2 : rf.idx1,
                                                              rf.idx1.empty() ? rf.b2 : rf.b1);
        instance = conjugate_formed(instance, random_fp_invertible(rng, p, instance.module.dim));
        std::string dump = "# group " + fix.name + ", p = " + std::to_string(p) + ", dim = " +
                           std::to_string(instance.module.dim) + "\n";
        FormedKGModule out;
        try {
            out = ss_with_form(instance, rng.next());
        } catch (const Error& err) {
            r.record(false, std::string("ss_with_form raised: ") + err.what(), dump);
            continue;
        }
        bool valid = out.form.nondegenerate();
        for (const FpMat& g : out.module.generators)
            if (!(g.transpose() * out.form.mat * g == out.form.mat)) valid = false;
        r.record(valid, "output form not compatible/nondegenerate", dump);
        r.record(ss_isomorphic(semisimplify(out.module, opt.seed + 21), semisimplify(instance.module, opt.seed + 22)),
                 "output module is not the semisimplification", dump);
        if (fix.epsilon == 1) {
            r.record(witt_of_fpgram(out.form) == witt_of_fpgram(instance.form),
                     "Witt class not preserved (orthogonal case)", dump);
        } else {
            bool alt = out.module.dim == instance.module.dim;
            for (size_t d = 0; d < out.form.dim(); ++d)
                if (out.form.mat.at(d, d) != 0) alt = false;
            r.record(alt, "rank/alternating preservation failed", dump);
        }
    }
    return r.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

} // namespace

std::vector<CriterionResult> run_acceptance(const SelfTestOptions& opt, std::ostream& log, bool color) {
    bool saved_fault = testing::dual_lattice_sign_fault;
    testing::dual_lattice_sign_fault = opt.inject_dual_fault;
    std::vector<CriterionResult> results;
    CriterionResult (*criteria[])(const SelfTestOptions&) = {criterion1, criterion2, criterion3,
                                                             criterion4, criterion5, criterion6,
                                                             criterion7, criterion8, criterion9};
    int index = 0;
    for (auto* fn : criteria) {
        ++index;
        CriterionResult res;
        try {
            res = fn(opt);
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("criterion raised: ") + e.what();
        }
        if (res.index == 0) res.index = index;
        std::ostringstream line;
        line << (res.pass ? paint(color, "32", "[PASS]") : paint(color, "31", "[FAIL]")) << " criterion "
             << res.index << ": " << res.name << " (" << res.cases_run << " cases, " << res.seconds
             << " s)";
        log << line.str() << "\n";
        if (!res.pass && !res.detail.empty()) log << res.detail << "\n";
        results.push_back(std::move(res));
    }
    testing::dual_lattice_sign_fault = saved_fault;
    return results;
}

} // namespace latmid
