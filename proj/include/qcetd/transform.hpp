/// Fourier transforms of e-tuples, circulant diagonalization, block index
/// permutations, the circulant-array <-> diagonal-block transformation, and
/// conjugacy-class partitioning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcetd/galois.hpp"

namespace qcetd {

/// e x e circulant over GF(2^r), stored as its generator (top row).
/// An empty generator denotes the zero circulant.
struct Circulant {
    std::vector<elem> g;

    bool is_zero() const {
        for (elem x : g)
            if (x) return false;
        return true;
    }
    bool is_identity() const {
        if (g.empty() || g[0] != 1) return false;
        for (std::size_t i = 1; i < g.size(); ++i)
            if (g[i]) return false;
        return true;
    }
};

/// rows x cols array of e x e circulants.
struct CirculantArray {
    int e = 0, rows = 0, cols = 0;
    std::vector<Circulant> cells;  // row-major

    CirculantArray() = default;
    CirculantArray(int e_, int rows_, int cols_)
        : e(e_), rows(rows_), cols(cols_), cells(static_cast<std::size_t>(rows_) * cols_) {}

    Circulant& at(int i, int j) { return cells[static_cast<std::size_t>(i) * cols + j]; }
    const Circulant& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }

    /// Generator coefficient l of cell (i, j); zero cells read as 0.
    elem coeff(int i, int j, int l) const {
        const auto& c = at(i, j);
        return c.g.empty() ? elem{0} : c.g[static_cast<std::size_t>(l)];
    }

    bool is_binary() const {
        for (const auto& c : cells)
            for (elem x : c.g)
                if (x > 1) return false;
        return true;
    }

    bool operator==(const CirculantArray& o) const {
        if (e != o.e || rows != o.rows || cols != o.cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                for (int l = 0; l < e; ++l)
                    if (coeff(i, j, l) != o.coeff(i, j, l)) return false;
        return true;
    }
};

/// Dense matrix over GF(2^r), row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    elem at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// Index permutation with its inverse. forward[u] is the source index of
/// output position u (gather convention).
struct Permutation {
    std::vector<std::uint32_t> forward, inverse;

    std::size_t size() const { return forward.size(); }

    template <typename T>
    std::vector<T> apply(const std::vector<T>& x) const {
        check(x.size());
        std::vector<T> out(x.size());
        for (std::size_t u = 0; u < x.size(); ++u) out[u] = x[forward[u]];
        return out;
    }
    template <typename T>
    std::vector<T> apply_inverse(const std::vector<T>& x) const {
        check(x.size());
        std::vector<T> out(x.size());
        for (std::size_t u = 0; u < x.size(); ++u) out[u] = x[inverse[u]];
        return out;
    }

private:
    void check(std::size_t n) const {
        if (n != forward.size())
            throw std::invalid_argument("Permutation: vector length " + std::to_string(n) +
                                        " != " + std::to_string(forward.size()));
    }
};

/// The block-diagonal form diag(D_0, ..., D_{e-1}); block i has sigma_i rows
/// and n columns. When the blocks are systematic, info_cols[i] lists the
/// column carrying the identity 1 of each row of block i (in row order).
struct DiagonalBlockMatrix {
    int e = 0, n = 0;
    std::vector<Mat> blocks;
    std::vector<std::vector<int>> info_cols;  // empty when not systematic

    bool systematic() const { return !info_cols.empty(); }

    std::vector<int> sigma() const {
        std::vector<int> s;
        s.reserve(blocks.size());
        for (const auto& b : blocks) s.push_back(b.rows);
        return s;
    }
    long total_rows() const {
        long k = 0;
        for (const auto& b : blocks) k += b.rows;
        return k;
    }
    bool operator==(const DiagonalBlockMatrix& o) const {
        return e == o.e && n == o.n && blocks == o.blocks;
    }
};

/// Partition of {0, ..., e-1} into orbits of t -> (2t) mod e. Each class
/// stores its representative (the orbit minimum), members in orbit order,
/// and optionally a GF(2)-basis of the subfield GF(2^eta).
struct ConjugacyClass {
    int rep = 0;
    std::vector<int> members;  // rep, (2 rep)_e, (4 rep)_e, ...
    std::vector<elem> basis;   // eta elements, or empty when no field attached

    int eta() const { return static_cast<int>(members.size()); }
};

struct ConjugacyClasses {
    int e = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<int> class_index;  // e entries: index into classes per position

    int lambda() const { return static_cast<int>(classes.size()); }
};

inline void expect_length(const std::vector<elem>& v, std::uint32_t e, const char* who) {
    if (v.size() != e)
        throw std::invalid_argument(std::string(who) + ": tuple length " +
                                    std::to_string(v.size()) + " != e=" + std::to_string(e));
}

/// Fourier transform of an e-tuple: d_t = sum_l w_l alpha^(-l t).
inline std::vector<elem> fourier(const Field& f, const std::vector<elem>& w,
                                 OpCounter* ops = nullptr) {
    const std::uint32_t e = f.e();
    expect_length(w, e, "fourier");
    std::vector<elem> d(e, 0);
    for (std::uint32_t t = 0; t < e; ++t) {
        elem acc = 0;
        std::uint32_t idx = 0;  // exponent of alpha^(-l t), stepped by -t
        for (std::uint32_t l = 0; l < e; ++l) {
            elem term = ops ? f.mul(w[l], f.exp_table()[idx], *ops)
                            : f.mul(w[l], f.exp_table()[idx]);
            if (l == 0)
                acc = term;
            else
                acc = ops ? f.add(acc, term, *ops) : f.add(acc, term);
            idx = idx >= t ? idx - t : idx + e - t;
        }
        d[t] = acc;
    }
    return d;
}

/// Inverse Fourier transform: w_l = sum_t d_t alpha^(l t). No scale factor
/// is needed since e is odd in characteristic 2.
inline std::vector<elem> inverse_fourier(const Field& f, const std::vector<elem>& d,
                                         OpCounter* ops = nullptr) {
    const std::uint32_t e = f.e();
    expect_length(d, e, "inverse_fourier");
    std::vector<elem> w(e, 0);
    for (std::uint32_t l = 0; l < e; ++l) {
        elem acc = 0;
        std::uint32_t idx = 0;  // exponent of alpha^(l t), stepped by +l
        for (std::uint32_t t = 0; t < e; ++t) {
            elem term = ops ? f.mul(d[t], f.exp_table()[idx], *ops)
                            : f.mul(d[t], f.exp_table()[idx]);
            if (t == 0)
                acc = term;
            else
                acc = ops ? f.add(acc, term, *ops) : f.add(acc, term);
            idx += l;
            if (idx >= e) idx -= e;
        }
        w[l] = acc;
    }
    return w;
}

/// Diagonal of V^-1 W V for W = circ(w): the Fourier transform of the
/// generator.
inline std::vector<elem> circulant_diag(const Field& f, const Circulant& c) {
    if (c.g.empty()) return std::vector<elem>(f.e(), 0);
    return fourier(f, c.g);
}

/// Orbits of t -> (2t) mod e. Representatives are orbit minima; orbit order
/// follows successive doubling from the representative.
inline ConjugacyClasses conjugacy_partition(int e) {
    if (e < 1) throw std::invalid_argument("conjugacy_partition: e must be positive");
    ConjugacyClasses cc;
    cc.e = e;
    cc.class_index.assign(e, -1);
    std::vector<bool> seen(e, false);
    for (int t = 0; t < e; ++t) {
        if (seen[t]) continue;
        ConjugacyClass cls;
        cls.rep = t;
        int x = t;
        while (!seen[x]) {
            seen[x] = true;
            cls.members.push_back(x);
            cc.class_index[x] = static_cast<int>(cc.classes.size());
            x = (2 * x) % e;
        }
        cc.classes.push_back(std::move(cls));
    }
    return cc;
}

/// Partition with per-class subfield bases attached (e taken from the field).
inline ConjugacyClasses conjugacy_partition(const Field& f) {
    ConjugacyClasses cc = conjugacy_partition(static_cast<int>(f.e()));
    for (auto& cls : cc.classes) cls.basis = f.subfield_basis(cls.eta());
    return cc;
}

/// One permutation of the index sequences [i, e+i, ..., (m-1)e+i] for
/// i = 0..e-1, concatenated: output position a*m+b gathers input b*e+a.
inline Permutation build_block_permutation(int e, int m) {
    if (e < 1 || m < 1) throw std::invalid_argument("build_block_permutation: dims must be positive");
    Permutation p;
    const std::size_t total = static_cast<std::size_t>(e) * m;
    p.forward.resize(total);
    p.inverse.resize(total);
    for (int a = 0; a < e; ++a)
        for (int b = 0; b < m; ++b) {
            std::uint32_t u = static_cast<std::uint32_t>(a) * m + b;
            std::uint32_t src = static_cast<std::uint32_t>(b) * e + a;
            p.forward[u] = src;
            p.inverse[src] = u;
        }
    return p;
}

/// Row permutation over e*k indices and column permutation over e*n indices.
inline std::pair<Permutation, Permutation> build_permutations(int e, int k, int n) {
    return {build_block_permutation(e, k), build_block_permutation(e, n)};
}

/// Matrix transformation of a circulant array: block t of the result is the
/// k x n matrix of t-th Fourier coefficients of the cell generators.
inline DiagonalBlockMatrix transform_array(const Field& f, const CirculantArray& G) {
    if (G.e != static_cast<int>(f.e()))
        throw std::invalid_argument("transform_array: array e does not match field");
    DiagonalBlockMatrix D;
    D.e = G.e;
    D.n = G.cols;
    D.blocks.assign(G.e, Mat(G.rows, G.cols));
    for (int i = 0; i < G.rows; ++i)
        for (int j = 0; j < G.cols; ++j) {
            const auto& cell = G.at(i, j);
            if (cell.g.empty()) continue;
            std::vector<elem> d = fourier(f, cell.g);
            for (int t = 0; t < G.e; ++t) D.blocks[t].at(i, j) = d[t];
        }
    return D;
}

/// Inverse matrix transformation. Requires all blocks of equal shape
/// (rank-deficient block stacks have no circulant-array preimage).
inline CirculantArray inverse_transform_array(const Field& f, const DiagonalBlockMatrix& D) {
    if (D.blocks.empty()) throw std::invalid_argument("inverse_transform_array: no blocks");
    const int k = D.blocks[0].rows;
    for (const auto& b : D.blocks)
        if (b.rows != k || b.cols != D.n)
            throw std::invalid_argument(
                "inverse_transform_array: blocks of unequal shape cannot be inverted");
    if (D.e != static_cast<int>(f.e()))
        throw std::invalid_argument("inverse_transform_array: e does not match field");
    CirculantArray G(D.e, k, D.n);
    std::vector<elem> d(D.e);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < D.n; ++j) {
            bool zero = true;
            for (int t = 0; t < D.e; ++t) {
                d[t] = D.blocks[t].at(i, j);
                if (d[t]) zero = false;
            }
            if (zero) continue;
            G.at(i, j).g = inverse_fourier(f, d);
        }
    return G;
}

/// Entrywise squaring relation D_{(2t)_e} = D_t^{o2} across all blocks.
inline bool blocks_satisfy_conjugacy(const Field& f, const DiagonalBlockMatrix& D) {
    const int e = D.e;
    for (int t = 0; t < e; ++t) {
        const Mat& a = D.blocks[t];
        const Mat& b = D.blocks[(2 * t) % e];
        if (a.rows != b.rows || a.cols != b.cols) return false;
        for (std::size_t i = 0; i < a.a.size(); ++i)
            if (b.a[i] != f.mul(a.a[i], a.a[i])) return false;
    }
    return true;
}

}  // namespace qcetd
