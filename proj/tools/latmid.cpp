#include "latmid/cli_commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"latmid: exact lattice middles over a discrete valuation ring, almost-self-dual "
                 "lattices, Springer residues, and mod-p reduction of orthogonal/symplectic "
                 "group representations"};
    app.require_subcommand(1);

    latmid::ReduceOptions ro;
    long long reduce_seed = -1;
    auto* reduce = app.add_subcommand("reduce", "run the reduction pipeline on a problem file");
    reduce->add_option("file", ro.path, "problem file")->required();
    reduce->add_flag("--json", ro.json, "emit a machine-readable JSON report");
    reduce->add_option("--seed", reduce_seed, "override the seed from the file");

    latmid::MiddlesOptions mo;
    auto* middles = app.add_subcommand("middles", "compute m-, m+, intersection and sum of two lattices");
    middles->add_option("file", mo.path, "file with p, dim, lattice_l, lattice_m");
    middles->add_flag("--verify", mo.verify, "re-check prop 1.2.1 and th. 1.2.4");
    middles->add_option("--random", mo.random_pairs, "verify this many seeded random pairs instead")
        ->group("");
    middles->add_option("--seed", mo.seed, "seed for --random")->group("");
    middles->add_option("--dim", mo.dim, "dimension for --random")->group("");
    middles->add_option("--prime", mo.prime, "prime for --random")->group("");

    latmid::SelfTestOptions so;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance-criteria suite");
    selftest->add_option("--seed", so.seed, "base seed");
    selftest->add_option("--cases", so.cases, "random cases per criterion (default: full scale)");
    selftest->add_option("--max-dim", so.max_dim, "maximum lattice dimension");
    selftest->add_option("--primes", so.primes, "primes to draw from")->delimiter(',');
    selftest->add_flag("--inject-dual-fault", so.inject_dual_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (reduce->parsed()) {
        if (reduce_seed >= 0) ro.seed = static_cast<uint64_t>(reduce_seed);
        return latmid::run_reduce(ro, std::cout, std::cerr);
    }
    if (middles->parsed()) {
        if (mo.path.empty() && mo.random_pairs <= 0) {
            std::cerr << "error: middles needs a file or --random N\n";
            return 2;
        }
        return latmid::run_middles(mo, std::cout, std::cerr);
    }
    if (selftest->parsed()) return latmid::run_selftest(so, std::cout);
    return 2;
}
