/// Text file formats: QCA (circulant arrays), QCPC (sparse binary parity
/// checks), DBM (diagonal block matrices, optionally class-compressed), and
/// whitespace-separated hex symbol vectors. All writers emit LF line
/// endings and lowercase hex; every reader reports line-precise errors.
#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcetd/codec.hpp"
#include "qcetd/galois.hpp"
#include "qcetd/qcldpc.hpp"
#include "qcetd/transform.hpp"

namespace qcetd {

struct ParseError : std::runtime_error {
    ParseError(const std::string& where, int line, const std::string& what)
        : std::runtime_error(where + ":" + std::to_string(line) + ": " + what) {}
};

namespace ioutil {

inline std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

inline std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline std::uint64_t parse_hex(const std::string& tok, const std::string& where, int line) {
    std::uint64_t v = 0;
    if (tok.empty()) throw ParseError(where, line, "empty hex token");
    for (char c : tok) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw ParseError(where, line, "bad hex token '" + tok + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

inline long parse_int(const std::string& tok, const std::string& where, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(where, line, "bad integer '" + tok + "'");
    }
}

/// "key=value" header fields.
inline std::string field_of(const std::vector<std::string>& toks, const std::string& key,
                            const std::string& where, int line) {
    for (const auto& t : toks) {
        if (t.size() > key.size() && t.compare(0, key.size(), key) == 0 && t[key.size()] == '=')
            return t.substr(key.size() + 1);
    }
    throw ParseError(where, line, "missing header field '" + key + "='");
}

inline elem check_symbol(std::uint64_t v, const Field& f, const std::string& where, int line) {
    if (v >= f.q())
        throw ParseError(where, line,
                         "symbol " + hex(v) + " out of range for q=" + std::to_string(f.q()));
    return static_cast<elem>(v);
}

inline int r_for_e(long e, const std::string& where) {
    for (int r = 1; r <= 16; ++r)
        if (((1L << r) - 1) == e) return r;
    throw std::runtime_error(where + ": e=" + std::to_string(e) + " is not of the form 2^r-1");
}

}  // namespace ioutil

// ---------------------------------------------------------------- QCA ----

/// QCA: header `QCA q=<q> e=<e> rows=<k> cols=<n> poly=<hex>`, then one
/// line `<row> <col> : <g_0> ... <g_{e-1}>` per nonzero circulant (hex
/// symbols); omitted cells are zero circulants.
inline void write_qca(std::ostream& os, const Field& f, const CirculantArray& A) {
    os << "QCA q=" << f.q() << " e=" << f.e() << " rows=" << A.rows << " cols=" << A.cols
       << " poly=" << ioutil::hex(f.poly()) << "\n";
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const Circulant& c = A.at(i, j);
            if (c.g.empty() || c.is_zero()) continue;
            os << i << " " << j << " :";
            for (elem x : c.g) os << " " << ioutil::hex(x);
            os << "\n";
        }
}

inline std::pair<Field, CirculantArray> read_qca(std::istream& is, const std::string& where) {
    std::string line;
    int lineno = 1;
    if (!std::getline(is, line)) throw ParseError(where, 1, "empty file");
    auto toks = ioutil::split(line);
    if (toks.empty() || toks[0] != "QCA") throw ParseError(where, 1, "expected QCA header");
    long q = ioutil::parse_int(ioutil::field_of(toks, "q", where, 1), where, 1);
    long e = ioutil::parse_int(ioutil::field_of(toks, "e", where, 1), where, 1);
    long rows = ioutil::parse_int(ioutil::field_of(toks, "rows", where, 1), where, 1);
    long cols = ioutil::parse_int(ioutil::field_of(toks, "cols", where, 1), where, 1);
    unsigned poly = static_cast<unsigned>(
        ioutil::parse_hex(ioutil::field_of(toks, "poly", where, 1), where, 1));
    int r = ioutil::r_for_e(e, where);
    if (q != (1L << r)) throw ParseError(where, 1, "q does not match e");
    Field f(r, poly);
    if (rows < 1 || cols < 1) throw ParseError(where, 1, "rows/cols must be positive");
    CirculantArray A(static_cast<int>(e), static_cast<int>(rows), static_cast<int>(cols));
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto t = ioutil::split(line);
        if (t.size() != static_cast<std::size_t>(e) + 3 || t[2] != ":")
            throw ParseError(where, lineno,
                             "expected '<row> <col> : <" + std::to_string(e) + " symbols>'");
        long i = ioutil::parse_int(t[0], where, lineno);
        long j = ioutil::parse_int(t[1], where, lineno);
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw ParseError(where, lineno, "cell index out of range");
        auto& g = A.at(static_cast<int>(i), static_cast<int>(j)).g;
        if (!g.empty()) throw ParseError(where, lineno, "duplicate cell");
        g.resize(static_cast<std::size_t>(e));
        for (long l = 0; l < e; ++l)
            g[static_cast<std::size_t>(l)] =
                ioutil::check_symbol(ioutil::parse_hex(t[3 + l], where, lineno), f, where, lineno);
    }
    return {f, A};
}

// --------------------------------------------------------------- QCPC ----

/// QCPC: header `QCPC e=<e> rows=<n-k> cols=<n>`, then one line
/// `<row> <col> : <positions>` per nonzero circulant (ascending shift
/// positions of the ones in the generator). Binary only.
inline void write_qcpc(std::ostream& os, const SparseParityCheck& H) {
    os << "QCPC e=" << H.e << " rows=" << H.rows << " cols=" << H.cols << "\n";
    for (int i = 0; i < H.rows; ++i)
        for (int j = 0; j < H.cols; ++j) {
            const auto& pos = H.at(i, j);
            if (pos.empty()) continue;
            os << i << " " << j << " :";
            for (int p : pos) os << " " << p;
            os << "\n";
        }
}

inline SparseParityCheck read_qcpc(std::istream& is, const std::string& where) {
    std::string line;
    int lineno = 1;
    if (!std::getline(is, line)) throw ParseError(where, 1, "empty file");
    auto toks = ioutil::split(line);
    if (toks.empty() || toks[0] != "QCPC") throw ParseError(where, 1, "expected QCPC header");
    long e = ioutil::parse_int(ioutil::field_of(toks, "e", where, 1), where, 1);
    long rows = ioutil::parse_int(ioutil::field_of(toks, "rows", where, 1), where, 1);
    long cols = ioutil::parse_int(ioutil::field_of(toks, "cols", where, 1), where, 1);
    if (e < 1 || rows < 1 || cols < 1) throw ParseError(where, 1, "bad dimensions");
    SparseParityCheck H(static_cast<int>(e), static_cast<int>(rows), static_cast<int>(cols));
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto t = ioutil::split(line);
        if (t.size() < 3 || t[2] != ":")
            throw ParseError(where, lineno, "expected '<row> <col> : <positions>'");
        long i = ioutil::parse_int(t[0], where, lineno);
        long j = ioutil::parse_int(t[1], where, lineno);
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw ParseError(where, lineno, "cell index out of range");
        auto& pos = H.at(static_cast<int>(i), static_cast<int>(j));
        if (!pos.empty()) throw ParseError(where, lineno, "duplicate cell");
        int prev = -1;
        for (std::size_t u = 3; u < t.size(); ++u) {
            long p = ioutil::parse_int(t[u], where, lineno);
            if (p < 0 || p >= e) throw ParseError(where, lineno, "position out of range [0,e)");
            if (p <= prev) throw ParseError(where, lineno, "positions must be strictly ascending");
            pos.push_back(static_cast<int>(p));
            prev = static_cast<int>(p);
        }
    }
    return H;
}

// ---------------------------------------------------------------- DBM ----

/// DBM: header `DBM q=<q> e=<e> n=<n> poly=<hex>` and a `sigma` line with
/// the e block row counts. Full form then lists every block:
///   block <t> / [info <cols...>] / sigma_t rows of n hex symbols.
/// Class-compressed form (binary codes) stores the class structure and only
/// the lambda representative blocks; systematic representatives store just
/// their parity columns, conjugate blocks are rebuilt by entrywise
/// squaring on read.
struct DbmFile {
    Field field;
    DiagonalBlockMatrix D;
    std::optional<ConjugacyClasses> classes;
    bool class_compressed = false;
};

namespace dbm_detail {

inline void write_rows(std::ostream& os, const Mat& M) {
    for (int s = 0; s < M.rows; ++s) {
        for (int j = 0; j < M.cols; ++j) os << (j ? " " : "") << ioutil::hex(M.at(s, j));
        os << "\n";
    }
}

}  // namespace dbm_detail

inline void write_dbm(std::ostream& os, const Field& f, const DiagonalBlockMatrix& D) {
    os << "DBM q=" << f.q() << " e=" << f.e() << " n=" << D.n
       << " poly=" << ioutil::hex(f.poly()) << "\n";
    os << "sigma";
    for (const auto& b : D.blocks) os << " " << b.rows;
    os << "\n";
    for (int t = 0; t < D.e; ++t) {
        os << "block " << t << "\n";
        if (D.systematic() && !D.info_cols[t].empty()) {
            os << "info";
            for (int c : D.info_cols[t]) os << " " << c;
            os << "\n";
        }
        dbm_detail::write_rows(os, D.blocks[t]);
    }
}

/// Class-compressed writer. Requires conjugacy-constrained blocks whose
/// class members share block shape and information columns.
inline void write_dbm_classes(std::ostream& os, const Field& f, const DiagonalBlockMatrix& D,
                              const ConjugacyClasses& cc) {
    if (!blocks_satisfy_conjugacy(f, D))
        throw std::invalid_argument(
            "write_dbm_classes: blocks do not satisfy the conjugacy constraint");
    os << "DBM q=" << f.q() << " e=" << f.e() << " n=" << D.n
       << " poly=" << ioutil::hex(f.poly()) << "\n";
    os << "sigma";
    for (const auto& b : D.blocks) os << " " << b.rows;
    os << "\n";
    os << "classes " << cc.lambda() << "\n";
    for (const auto& cls : cc.classes) {
        os << "class " << cls.rep << " :";
        for (elem b : cls.basis) os << " " << ioutil::hex(b);
        os << "\n";
    }
    for (const auto& cls : cc.classes) {
        const int t = cls.rep;
        const Mat& B = D.blocks[t];
        os << "rep " << t << "\n";
        if (D.systematic() && !D.info_cols[t].empty()) {
            const auto& info = D.info_cols[t];
            os << "info";
            for (int c : info) os << " " << c;
            os << "\n";
            std::vector<char> is_info(D.n, 0);
            for (int c : info) is_info[c] = 1;
            for (int s = 0; s < B.rows; ++s) {
                bool first = true;
                for (int j = 0; j < D.n; ++j) {
                    if (is_info[j]) continue;
                    os << (first ? "" : " ") << ioutil::hex(B.at(s, j));
                    first = false;
                }
                os << "\n";
            }
        } else {
            dbm_detail::write_rows(os, B);
        }
    }
}

inline DbmFile read_dbm(std::istream& is, const std::string& where) {
    std::string line;
    int lineno = 1;
    if (!std::getline(is, line)) throw ParseError(where, 1, "empty file");
    auto toks = ioutil::split(line);
    if (toks.empty() || toks[0] != "DBM") throw ParseError(where, 1, "expected DBM header");
    long q = ioutil::parse_int(ioutil::field_of(toks, "q", where, 1), where, 1);
    long e = ioutil::parse_int(ioutil::field_of(toks, "e", where, 1), where, 1);
    long n = ioutil::parse_int(ioutil::field_of(toks, "n", where, 1), where, 1);
    unsigned poly = static_cast<unsigned>(
        ioutil::parse_hex(ioutil::field_of(toks, "poly", where, 1), where, 1));
    int r = ioutil::r_for_e(e, where);
    if (q != (1L << r)) throw ParseError(where, 1, "q does not match e");
    DbmFile out{Field(r, poly), DiagonalBlockMatrix{}, std::nullopt, false};
    const Field& f = out.field;
    out.D.e = static_cast<int>(e);
    out.D.n = static_cast<int>(n);
    out.D.blocks.assign(static_cast<std::size_t>(e), Mat());
    out.D.info_cols.assign(static_cast<std::size_t>(e), {});

    if (!std::getline(is, line)) throw ParseError(where, 2, "missing sigma line");
    ++lineno;
    auto st = ioutil::split(line);
    if (st.size() != static_cast<std::size_t>(e) + 1 || st[0] != "sigma")
        throw ParseError(where, lineno, "expected 'sigma' line with e entries");
    std::vector<int> sigma(static_cast<std::size_t>(e));
    for (long t = 0; t < e; ++t) {
        long s = ioutil::parse_int(st[static_cast<std::size_t>(t) + 1], where, lineno);
        if (s < 0 || s > n) throw ParseError(where, lineno, "sigma out of range");
        sigma[static_cast<std::size_t>(t)] = static_cast<int>(s);
    }

    auto read_line = [&](const char* what) {
        if (!std::getline(is, line)) throw ParseError(where, lineno + 1, std::string("missing ") + what);
        ++lineno;
        return ioutil::split(line);
    };
    auto read_row = [&](Mat& M, int s, const std::vector<int>* cols) {
        auto t = read_line("matrix row");
        const std::size_t want = cols ? cols->size() : static_cast<std::size_t>(M.cols);
        if (t.size() != want)
            throw ParseError(where, lineno,
                             "expected " + std::to_string(want) + " symbols, got " +
                                 std::to_string(t.size()));
        for (std::size_t u = 0; u < want; ++u) {
            elem v = ioutil::check_symbol(ioutil::parse_hex(t[u], where, lineno), f, where, lineno);
            M.at(s, cols ? (*cols)[u] : static_cast<int>(u)) = v;
        }
    };

    auto first = read_line("block data");
    if (!first.empty() && first[0] == "classes") {
        out.class_compressed = true;
        if (first.size() != 2) throw ParseError(where, lineno, "expected 'classes <lambda>'");
        long lambda = ioutil::parse_int(first[1], where, lineno);
        ConjugacyClasses cc = conjugacy_partition(static_cast<int>(e));
        if (lambda != cc.lambda())
            throw ParseError(where, lineno, "class count does not match e");
        for (int ci = 0; ci < cc.lambda(); ++ci) {
            auto t = read_line("class line");
            if (t.size() < 3 || t[0] != "class" || t[2] != ":")
                throw ParseError(where, lineno, "expected 'class <rep> : <basis>'");
            long rep = ioutil::parse_int(t[1], where, lineno);
            if (rep != cc.classes[ci].rep) throw ParseError(where, lineno, "unexpected class representative");
            if (t.size() - 3 != cc.classes[ci].members.size())
                throw ParseError(where, lineno, "basis size != class size");
            for (std::size_t u = 3; u < t.size(); ++u)
                cc.classes[ci].basis.push_back(
                    ioutil::check_symbol(ioutil::parse_hex(t[u], where, lineno), f, where, lineno));
        }
        for (const auto& cls : cc.classes) {
            auto t = read_line("rep line");
            if (t.size() != 2 || t[0] != "rep" ||
                ioutil::parse_int(t[1], where, lineno) != cls.rep)
                throw ParseError(where, lineno, "expected 'rep " + std::to_string(cls.rep) + "'");
            const int sig = sigma[static_cast<std::size_t>(cls.rep)];
            Mat M(sig, static_cast<int>(n));
            std::vector<int> info;
            // peek for an info line
            std::streampos pos = is.tellg();
            auto t2 = read_line("rep block");
            if (!t2.empty() && t2[0] == "info") {
                for (std::size_t u = 1; u < t2.size(); ++u) {
                    long c = ioutil::parse_int(t2[u], where, lineno);
                    if (c < 0 || c >= n) throw ParseError(where, lineno, "info column out of range");
                    info.push_back(static_cast<int>(c));
                }
                if (static_cast<int>(info.size()) != sig)
                    throw ParseError(where, lineno, "info column count != sigma");
                std::vector<int> parity_cols;
                std::vector<char> is_info(static_cast<std::size_t>(n), 0);
                for (int c : info) is_info[static_cast<std::size_t>(c)] = 1;
                for (int c = 0; c < n; ++c)
                    if (!is_info[static_cast<std::size_t>(c)]) parity_cols.push_back(c);
                for (int s = 0; s < sig; ++s) {
                    M.at(s, info[static_cast<std::size_t>(s)]) = 1;
                    read_row(M, s, &parity_cols);
                }
            } else {
                is.seekg(pos);
                --lineno;
                for (int s = 0; s < sig; ++s) read_row(M, s, nullptr);
            }
            // place representative and derive conjugates
            Mat cur = M;
            out.D.blocks[static_cast<std::size_t>(cls.rep)] = cur;
            out.D.info_cols[static_cast<std::size_t>(cls.rep)] = info;
            for (std::size_t mu = 1; mu < cls.members.size(); ++mu) {
                Mat nxt = cur;
                for (auto& x : nxt.a) x = f.mul(x, x);
                const int t = cls.members[mu];
                if (sigma[static_cast<std::size_t>(t)] != sigma[static_cast<std::size_t>(cls.rep)])
                    throw ParseError(where, lineno, "sigma differs inside a conjugacy class");
                out.D.blocks[static_cast<std::size_t>(t)] = nxt;
                out.D.info_cols[static_cast<std::size_t>(t)] = info;
                cur = std::move(nxt);
            }
        }
        out.classes = std::move(cc);
    } else {
        // full form: `first` is the first 'block t' line
        auto block_line = first;
        for (long t = 0; t < e; ++t) {
            if (block_line.size() != 2 || block_line[0] != "block" ||
                ioutil::parse_int(block_line[1], where, lineno) != t)
                throw ParseError(where, lineno, "expected 'block " + std::to_string(t) + "'");
            const int sig = sigma[static_cast<std::size_t>(t)];
            Mat M(sig, static_cast<int>(n));
            if (sig > 0) {
                std::streampos pos = is.tellg();
                auto t2 = read_line("block body");
                if (!t2.empty() && t2[0] == "info") {
                    auto& info = out.D.info_cols[static_cast<std::size_t>(t)];
                    for (std::size_t u = 1; u < t2.size(); ++u) {
                        long c = ioutil::parse_int(t2[u], where, lineno);
                        if (c < 0 || c >= n) throw ParseError(where, lineno, "info column out of range");
                        info.push_back(static_cast<int>(c));
                    }
                    if (static_cast<int>(info.size()) != sig)
                        throw ParseError(where, lineno, "info column count != sigma");
                } else {
                    is.seekg(pos);
                    --lineno;
                }
                for (int s = 0; s < sig; ++s) read_row(M, s, nullptr);
            }
            out.D.blocks[static_cast<std::size_t>(t)] = std::move(M);
            if (t + 1 < e) block_line = read_line("block header");
        }
    }
    // info_cols is all-or-nothing in DiagonalBlockMatrix: drop when absent
    bool any_info = false, all_info = true;
    for (long t = 0; t < e; ++t) {
        if (!out.D.info_cols[static_cast<std::size_t>(t)].empty())
            any_info = true;
        else if (sigma[static_cast<std::size_t>(t)] > 0)
            all_info = false;
    }
    if (!any_info || !all_info) out.D.info_cols.clear();
    return out;
}

// -------------------------------------------------------------- hex vectors

inline void write_hex_vectors(std::ostream& os, const std::vector<std::vector<elem>>& vecs) {
    for (const auto& v : vecs) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << ioutil::hex(v[i]);
        os << "\n";
    }
}

inline std::vector<std::vector<elem>> read_hex_vectors(std::istream& is, const Field& f,
                                                       const std::string& where) {
    std::vector<std::vector<elem>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto toks = ioutil::split(line);
        std::vector<elem> v;
        v.reserve(toks.size());
        for (const auto& t : toks)
            v.push_back(ioutil::check_symbol(ioutil::parse_hex(t, where, lineno), f, where, lineno));
        out.push_back(std::move(v));
    }
    return out;
}

// ------------------------------------------------------------ file helpers

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << text;
}

}  // namespace qcetd
