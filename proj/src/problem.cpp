#include "latmid/problem.hpp"

#include <cctype>
#include <sstream>

namespace latmid {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line;
};

// key = value entries; a value continues across lines until '[' and ']' balance.
std::vector<Entry> split_entries(const std::string& text) {
    std::vector<Entry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int depth = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (depth == 0) {
            if (blank) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "", "expected `key = value`");
            Entry e;
            e.key = line.substr(0, eq);
            e.value = line.substr(eq + 1);
            e.line = lineno;
            // trim key
            while (!e.key.empty() && std::isspace(static_cast<unsigned char>(e.key.back()))) e.key.pop_back();
            while (!e.key.empty() && std::isspace(static_cast<unsigned char>(e.key.front()))) e.key.erase(0, 1);
            if (e.key.empty()) throw ParseError(lineno, "", "empty key");
            entries.push_back(e);
        } else {
            entries.back().value += " " + line;
        }
        depth = 0;
        if (!entries.empty()) {
            for (char ch : entries.back().value) {
                if (ch == '[') ++depth;
                if (ch == ']') --depth;
            }
            if (depth < 0) throw ParseError(lineno, entries.back().key, "unbalanced ']'");
        }
    }
    if (depth != 0 && !entries.empty())
        throw ParseError(entries.back().line, entries.back().key, "unbalanced '[' at end of file");
    return entries;
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line;
    std::string field;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(line, field, std::string("expected '") + c + "'");
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    Rat rational() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i == start) throw ParseError(line, field, "expected a rational number");
        try {
            return rat_parse(s.substr(start, i - start));
        } catch (const InvalidArgument& e) {
            throw ParseError(line, field, e.what());
        }
    }
};

RatMat parse_matrix(Cursor& c) {
    c.expect('[');
    std::vector<std::vector<Rat>> rows;
    if (!c.eat(']')) {
        for (;;) {
            c.expect('[');
            std::vector<Rat> row;
            if (!c.eat(']')) {
                for (;;) {
                    row.push_back(c.rational());
                    if (c.eat(']')) break;
                    c.expect(',');
                }
            }
            rows.push_back(std::move(row));
            if (c.eat(']')) break;
            c.expect(',');
        }
    }
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw ParseError(c.line, c.field, "ragged matrix rows");
    return RatMat::from_rows(rows);
}

std::vector<RatMat> parse_matrix_list(Cursor& c) {
    c.expect('[');
    std::vector<RatMat> mats;
    if (c.eat(']')) return mats;
    for (;;) {
        mats.push_back(parse_matrix(c));
        if (c.eat(']')) break;
        c.expect(',');
    }
    return mats;
}

long parse_integer(const Entry& e) {
    Cursor c{e.value, 0, e.line, e.key};
    c.skip_ws();
    size_t start = c.i;
    if (c.i < e.value.size() && (e.value[c.i] == '-' || e.value[c.i] == '+')) ++c.i;
    while (c.i < e.value.size() && std::isdigit(static_cast<unsigned char>(e.value[c.i]))) ++c.i;
    if (c.i == start) throw ParseError(e.line, e.key, "expected an integer");
    long v;
    try {
        v = std::stol(e.value.substr(start, c.i - start));
    } catch (const std::exception&) {
        throw ParseError(e.line, e.key, "integer out of range");
    }
    if (!c.done()) throw ParseError(e.line, e.key, "trailing characters after integer");
    return v;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    bool saw_p = false, saw_dim = false, saw_gram = false, saw_gens = false;
    for (const Entry& e : split_entries(text)) {
        pf.field_lines.emplace(e.key, e.line);
        if (e.key == "p") {
            pf.p = parse_integer(e);
            saw_p = true;
        } else if (e.key == "epsilon") {
            long v = parse_integer(e);
            if (v != 1 && v != -1) throw ParseError(e.line, e.key, "epsilon must be 1 or -1");
            pf.epsilon = static_cast<int>(v);
        } else if (e.key == "dim") {
            pf.dim = parse_integer(e);
            saw_dim = true;
        } else if (e.key == "word_bound") {
            pf.word_bound = parse_integer(e);
        } else if (e.key == "seed") {
            pf.seed = static_cast<uint64_t>(parse_integer(e));
        } else if (e.key == "generators") {
            Cursor c{e.value, 0, e.line, e.key};
            pf.generators = parse_matrix_list(c);
            if (!c.done()) throw ParseError(e.line, e.key, "trailing characters after list");
            saw_gens = true;
        } else if (e.key == "gram") {
            Cursor c{e.value, 0, e.line, e.key};
            pf.gram = parse_matrix(c);
            if (!c.done()) throw ParseError(e.line, e.key, "trailing characters after matrix");
            saw_gram = true;
        } else {
            throw ParseError(e.line, e.key, "unknown key");
        }
    }
    if (!saw_p) throw ParseError(0, "p", "missing required key");
    if (!saw_dim) throw ParseError(0, "dim", "missing required key");
    if (!saw_gram) throw ParseError(0, "gram", "missing required key");
    if (!saw_gens) throw ParseError(0, "generators", "missing required key");
    return pf;
}

void validate_problem(const ProblemFile& pf) {
    auto line_of = [&pf](const std::string& k) {
        auto it = pf.field_lines.find(k);
        return it == pf.field_lines.end() ? 0 : it->second;
    };
    if (pf.p < 2 || !is_prime(pf.p))
        throw InvalidArgument("p (line " + std::to_string(line_of("p")) + "): must be a prime >= 2");
    if (pf.dim < 0) throw InvalidArgument("dim: must be >= 0");
    if (pf.word_bound < 1)
        throw InvalidArgument("word_bound (line " + std::to_string(line_of("word_bound")) + "): must be >= 1");
    size_t n = static_cast<size_t>(pf.dim);
    if (pf.epsilon == 1 && pf.p == 2)
        throw WrongCharacteristic("p (line " + std::to_string(line_of("p")) +
                                  "): symmetric case requires p odd");
    if (pf.gram.rows() != n || pf.gram.cols() != n)
        throw DimensionMismatch("gram (line " + std::to_string(line_of("gram")) + "): expected " +
                                std::to_string(n) + "x" + std::to_string(n));
    GramForm b(pf.gram, pf.epsilon); // WrongEpsilon / DegenerateForm
    for (size_t k = 0; k < pf.generators.size(); ++k) {
        const RatMat& g = pf.generators[k];
        if (g.rows() != n || g.cols() != n)
            throw DimensionMismatch("generators (line " + std::to_string(line_of("generators")) +
                                    "): generator " + std::to_string(k) + " is not " + std::to_string(n) +
                                    "x" + std::to_string(n));
        if (n > 0 && g.det() == 0)
            throw SingularMatrix("generators (line " + std::to_string(line_of("generators")) +
                                 "): generator " + std::to_string(k) + " is singular");
        if (!(g.transpose() * b.mat * g == b.mat))
            throw NotInvariant("generators (line " + std::to_string(line_of("generators")) + "): generator " +
                               std::to_string(k) + " does not satisfy g^T B g = B");
    }
}

std::string serialize_matrix(const RatMat& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (size_t j = 0; j < m.cols(); ++j) {
            os << rat_str(m.at(i, j));
            if (j + 1 < m.cols()) os << ", ";
        }
        os << "]";
        if (i + 1 < m.rows()) os << ", ";
    }
    os << "]";
    return os.str();
}

std::string serialize_problem(const ProblemFile& pf) {
    std::ostringstream os;
    os << "p = " << pf.p << "\n";
    os << "epsilon = " << pf.epsilon << "\n";
    os << "dim = " << pf.dim << "\n";
    os << "word_bound = " << pf.word_bound << "\n";
    os << "seed = " << pf.seed << "\n";
    os << "generators = [";
    for (size_t k = 0; k < pf.generators.size(); ++k) {
        os << serialize_matrix(pf.generators[k]);
        if (k + 1 < pf.generators.size()) os << ", ";
    }
    os << "]\n";
    os << "gram = " << serialize_matrix(pf.gram) << "\n";
    return os.str();
}

MiddlesFile parse_middles(const std::string& text) {
    MiddlesFile mf;
    bool saw_p = false, saw_dim = false, saw_l = false, saw_m = false;
    for (const Entry& e : split_entries(text)) {
        mf.field_lines.emplace(e.key, e.line);
        if (e.key == "p") {
            mf.p = parse_integer(e);
            saw_p = true;
        } else if (e.key == "dim") {
            mf.dim = parse_integer(e);
            saw_dim = true;
        } else if (e.key == "lattice_l" || e.key == "lattice_m") {
            Cursor c{e.value, 0, e.line, e.key};
            RatMat m = parse_matrix(c);
            if (!c.done()) throw ParseError(e.line, e.key, "trailing characters after matrix");
            (e.key == "lattice_l" ? mf.lattice_l : mf.lattice_m) = m;
            (e.key == "lattice_l" ? saw_l : saw_m) = true;
        } else {
            throw ParseError(e.line, e.key, "unknown key");
        }
    }
    if (!saw_p) throw ParseError(0, "p", "missing required key");
    if (!saw_dim) throw ParseError(0, "dim", "missing required key");
    if (!saw_l) throw ParseError(0, "lattice_l", "missing required key");
    if (!saw_m) throw ParseError(0, "lattice_m", "missing required key");
    return mf;
}

void validate_middles(const MiddlesFile& mf) {
    if (mf.p < 2 || !is_prime(mf.p)) throw InvalidArgument("p: must be a prime >= 2");
    size_t n = static_cast<size_t>(mf.dim);
    for (const auto* m : {&mf.lattice_l, &mf.lattice_m}) {
        if (m->rows() != n || m->cols() != n)
            throw DimensionMismatch("lattice basis is not " + std::to_string(n) + "x" + std::to_string(n));
        if (n > 0 && m->det() == 0) throw SingularMatrix("lattice basis is singular");
    }
}

} // namespace latmid
