#include "latmid/cli_commands.hpp"

#include "latmid/problem.hpp"
#include "latmid/randgen.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef _WIN32
#else
#include <unistd.h>
#endif

namespace latmid {

using nlohmann::json;

bool color_enabled() {
    const char* v = std::getenv("LM_COLOR");
    if (v != nullptr && std::string(v) == "0") return false;
#ifndef _WIN32
    if (!isatty(fileno(stdout))) return false;
#endif
    return true;
}

namespace {

std::string paint(bool color, const char* code, const std::string& s) {
    if (!color) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string read_file(const std::string& path, std::ostream& err, bool& ok) {
    std::ifstream f(path);
    if (!f) {
        err << "error: cannot open " << path << "\n";
        ok = false;
        return "";
    }
    std::ostringstream os;
    os << f.rdbuf();
    ok = true;
    return os.str();
}

json mat_json(const RatMat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json fpmat_json(const FpMat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json witt_json(const WittClass& w) {
    return json{{"rank_parity", w.rank_parity}, {"disc", w.disc}};
}

json formed_json(const FormedKGModule& f) {
    json gens = json::array();
    for (const FpMat& g : f.module.generators) gens.push_back(fpmat_json(g));
    return json{{"dim", f.module.dim}, {"generators", std::move(gens)}, {"gram", fpmat_json(f.form.mat)}};
}

json report_json(const ProblemFile& pf, const ReductionReport& rr) {
    json gens = json::array();
    for (const RatMat& g : pf.generators) gens.push_back(mat_json(g));
    json checks = json::object();
    for (const auto& [name, ok] : rr.checks) checks[name] = ok;
    json witt;
    if (rr.orthogonal)
        witt = json{{"q1", witt_json(rr.witt_q1)},
                    {"q2", witt_json(rr.witt_q2)},
                    {"total", witt_json(rr.witt_total)}};
    return json{{"input", json{{"p", pf.p},
                               {"epsilon", pf.epsilon},
                               {"dim", pf.dim},
                               {"word_bound", pf.word_bound},
                               {"seed", pf.seed},
                               {"generators", std::move(gens)},
                               {"gram", mat_json(pf.gram)}}},
                {"asd_basis", mat_json(rr.asd.canonical_basis())},
                {"e1", formed_json(rr.e1)},
                {"e2", formed_json(rr.e2)},
                {"witt", std::move(witt)},
                {"checks", std::move(checks)}};
}

void print_report(std::ostream& out, const ReductionReport& rr, bool color) {
    out << "input: dim " << rr.dim << ", epsilon " << (rr.epsilon == 1 ? "+1" : "-1") << ", p " << rr.p
        << ", " << rr.generator_count << " generators\n";
    out << "almost-self-dual lattice (canonical basis): " << serialize_matrix(rr.asd.canonical_basis())
        << "\n";
    out << "E1: dim " << rr.e1.module.dim << ", gram " << rr.e1.form.mat.str() << "\n";
    out << "E2: dim " << rr.e2.module.dim << ", gram " << rr.e2.form.mat.str() << "\n";
    if (rr.orthogonal) {
        out << "Springer residues: d1 = " << rr.witt_q1.str() << ", d2 = " << rr.witt_q2.str()
            << ", sum = " << rr.witt_total.str() << "\n";
    }
    out << "checks:\n";
    for (const auto& [name, ok] : rr.checks)
        out << "  " << (ok ? paint(color, "32", "ok  ") : paint(color, "31", "FAIL")) << " " << name
            << "\n";
}

} // namespace

int run_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err) {
    bool ok = false;
    std::string text = read_file(o.path, err, ok);
    if (!ok) return 2;
    ProblemFile pf;
    try {
        pf = parse_problem(text);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
    try {
        validate_problem(pf);
    } catch (const Error& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    }
    if (o.seed) pf.seed = *o.seed;
    ReductionReport rr;
    try {
        rr = reduce_with_form(pf.rep(), GramForm(pf.gram, pf.epsilon), ValConfig(pf.p), pf.seed);
    } catch (const Error& e) {
        err << "pipeline failure: " << e.what() << "\n";
        err << "all inputs were validated; this indicates an implementation bug\n";
        return 1;
    }
    if (o.json)
        out << report_json(pf, rr).dump(2) << "\n";
    else
        print_report(out, rr, color_enabled());
    if (!rr.all_checks()) {
        err << "a theorem check failed; this indicates an implementation bug\n";
        return 1;
    }
    return 0;
}

namespace {

bool verify_pair(const Lattice& l, const Lattice& m, std::ostream& out, bool color) {
    Lattice ml = middle_lower(l, m), mu = middle_upper(l, m);
    Lattice cap = lattice_intersection(l, m), cup = lattice_sum(l, m);
    struct Row {
        const char* name;
        bool ok;
    } rows[] = {
        {"prop 1.2.1: L∩M ⊆ m-", ml.contains(cap)},
        {"prop 1.2.1: m- ⊆ m+", mu.contains(ml)},
        {"prop 1.2.1: m+ ⊆ L+M", cup.contains(mu)},
        {"th. 1.2.4: pi·m+ ⊆ m-", ml.contains(mu.twist(-1))},
        {"symmetry", middle_lower(m, l) == ml && middle_upper(m, l) == mu},
    };
    bool all = true;
    for (const Row& r : rows) {
        out << "  " << (r.ok ? paint(color, "32", "ok  ") : paint(color, "31", "FAIL")) << " " << r.name
            << "\n";
        all = all && r.ok;
    }
    return all;
}

} // namespace

int run_middles(const MiddlesOptions& o, std::ostream& out, std::ostream& err) {
    bool color = color_enabled();
    std::vector<std::pair<Lattice, Lattice>> pairs;
    if (o.random_pairs > 0) {
        Rng rng(o.seed);
        for (long i = 0; i < o.random_pairs; ++i)
            pairs.emplace_back(random_lattice(rng, static_cast<size_t>(o.dim), o.prime),
                               random_lattice(rng, static_cast<size_t>(o.dim), o.prime));
    } else {
        bool ok = false;
        std::string text = read_file(o.path, err, ok);
        if (!ok) return 2;
        MiddlesFile mf;
        try {
            mf = parse_middles(text);
        } catch (const ParseError& e) {
            err << "parse error: " << e.what() << "\n";
            return 2;
        }
        try {
            validate_middles(mf);
            pairs.emplace_back(Lattice(mf.lattice_l, mf.p), Lattice(mf.lattice_m, mf.p));
        } catch (const Error& e) {
            err << "precondition violated: " << e.what() << "\n";
            return 3;
        }
    }
    bool all_ok = true;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [l, m] = pairs[i];
        if (pairs.size() > 1) out << "pair " << i << " (p = " << l.p() << ", dim = " << l.dim() << ")\n";
        out << "m_minus       = " << serialize_matrix(middle_lower(l, m).canonical_basis()) << "\n";
        out << "m_plus        = " << serialize_matrix(middle_upper(l, m).canonical_basis()) << "\n";
        out << "intersection  = " << serialize_matrix(lattice_intersection(l, m).canonical_basis()) << "\n";
        out << "sum           = " << serialize_matrix(lattice_sum(l, m).canonical_basis()) << "\n";
        if (o.verify) all_ok = verify_pair(l, m, out, color) && all_ok;
    }
    if (!all_ok) {
        err << "a middle-lattice law failed; this indicates an implementation bug\n";
        return 1;
    }
    return 0;
}

int run_selftest(const SelfTestOptions& o, std::ostream& out) {
    bool color = color_enabled();
    std::vector<CriterionResult> results = run_acceptance(o, out, color);
    long cases = 0;
    bool pass = true;
    for (const CriterionResult& r : results) {
        cases += r.cases_run;
        pass = pass && r.pass;
    }
    out << (pass ? paint(color, "32", "all criteria passed") : paint(color, "31", "FAILURES")) << " ("
        << cases << " cases)\n";
    return pass ? 0 : 1;
}

} // namespace latmid
