/// Transformed generator construction from QC(-LDPC) parity-check arrays:
/// per-index parity blocks, Gaussian systemization with rightmost pivots,
/// null-space generator blocks, and the rank profile of rank-deficient
/// parity checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcetd/codec.hpp"
#include "qcetd/galois.hpp"
#include "qcetd/transform.hpp"

namespace qcetd {

/// Sparse binary parity-check array: each circulant is stored as the set of
/// shift positions of the ones in its generator.
struct SparseParityCheck {
    int e = 0, rows = 0, cols = 0;
    std::vector<std::vector<int>> support;  // row-major, ascending positions per cell

    SparseParityCheck() = default;
    SparseParityCheck(int e_, int rows_, int cols_)
        : e(e_), rows(rows_), cols(cols_), support(static_cast<std::size_t>(rows_) * cols_) {}

    std::vector<int>& at(int i, int j) { return support[static_cast<std::size_t>(i) * cols + j]; }
    const std::vector<int>& at(int i, int j) const {
        return support[static_cast<std::size_t>(i) * cols + j];
    }

    CirculantArray to_array() const {
        CirculantArray H(e, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const auto& pos = at(i, j);
                if (pos.empty()) continue;
                auto& g = H.at(i, j).g;
                g.assign(e, 0);
                for (int p : pos) g[static_cast<std::size_t>(p)] = 1;
            }
        return H;
    }

    static SparseParityCheck from_array(const CirculantArray& H) {
        if (!H.is_binary())
            throw std::invalid_argument("SparseParityCheck: array is not binary");
        SparseParityCheck S(H.e, H.rows, H.cols);
        for (int i = 0; i < H.rows; ++i)
            for (int j = 0; j < H.cols; ++j)
                for (int l = 0; l < H.e; ++l)
                    if (H.coeff(i, j, l)) S.at(i, j).push_back(l);
        return S;
    }
};

/// Per-index ranks of the transformed parity check and the derived
/// generator block sizes sigma_i = n - rho_i; K is the code dimension.
struct RankProfile {
    std::vector<int> rho, sigma;
    long K = 0;
};

/// Result of Gaussian elimination on one parity block with pivot search
/// preferring the rightmost available columns. `rows` holds the reduced
/// nonzero rows ordered by ascending pivot column, so row s has a 1 in
/// pivot_cols[s], zeros in the other pivot columns, and the parity entries
/// P on the free columns.
struct SystemizedBlock {
    int n = 0, rank = 0;
    std::vector<int> pivot_cols;  // ascending
    std::vector<int> free_cols;   // ascending
    Mat rows;                     // rank x n, reduced

    /// P_i as a rank x (n - rank) matrix: the free-column entries.
    Mat parity_part() const {
        Mat P(rank, n - rank);
        for (int s = 0; s < rank; ++s)
            for (std::size_t c = 0; c < free_cols.size(); ++c)
                P.at(s, static_cast<int>(c)) = rows.at(s, free_cols[c]);
        return P;
    }
};

/// Transformed parity check: block t holds the evaluations of the cell
/// generators at alpha^(+t), i.e. B_t[u][v] = a_{u,v}(alpha^t). This is the
/// evaluation direction whose per-index null spaces generate the code when
/// codewords are produced by per-block inverse transforms. Binary arrays
/// give blocks satisfying B_{(2t)_e} = B_t^{o2}.
inline DiagonalBlockMatrix transform_parity(const Field& f, const CirculantArray& H) {
    if (H.e != static_cast<int>(f.e()))
        throw std::invalid_argument("transform_parity: array e does not match field");
    DiagonalBlockMatrix B;
    B.e = H.e;
    B.n = H.cols;
    B.blocks.assign(H.e, Mat(H.rows, H.cols));
    std::vector<elem> vals(H.e);
    for (int u = 0; u < H.rows; ++u)
        for (int v = 0; v < H.cols; ++v) {
            const Circulant& cell = H.at(u, v);
            if (cell.g.empty()) continue;
            for (int t = 0; t < H.e; ++t) {
                elem acc = 0;
                std::uint32_t idx = 0;  // exponent of alpha^(l t)
                for (int l = 0; l < H.e; ++l) {
                    if (cell.g[static_cast<std::size_t>(l)])
                        acc = f.add(acc, f.mul(cell.g[static_cast<std::size_t>(l)],
                                               f.exp_table()[idx]));
                    idx += static_cast<std::uint32_t>(t);
                    if (idx >= f.e()) idx -= f.e();
                }
                B.blocks[t].at(u, v) = acc;
            }
        }
    return B;
}

inline DiagonalBlockMatrix transform_parity(const Field& f, const SparseParityCheck& H) {
    return transform_parity(f, H.to_array());
}

/// Row reduction with pivots chosen right-to-left; within a column the
/// topmost not-yet-used row wins. Zero rows are dropped.
inline SystemizedBlock systemize(const Field& f, const Mat& B) {
    Mat M = B;
    const int rows = M.rows, n = M.cols;
    std::vector<int> pivot_row_of_col(n, -1);
    std::vector<char> used(rows, 0);
    int rank = 0;
    for (int c = n - 1; c >= 0 && rank < rows; --c) {
        int sel = -1;
        for (int i = 0; i < rows; ++i)
            if (!used[i] && M.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        const elem ia = f.inv(M.at(sel, c));
        for (int j = 0; j < n; ++j) M.at(sel, j) = f.mul(ia, M.at(sel, j));
        for (int i = 0; i < rows; ++i) {
            if (i == sel || !M.at(i, c)) continue;
            const elem co = M.at(i, c);
            for (int j = 0; j < n; ++j) M.at(i, j) = f.add(M.at(i, j), f.mul(co, M.at(sel, j)));
        }
        pivot_row_of_col[c] = sel;
        used[sel] = 1;
        ++rank;
    }
    SystemizedBlock sb;
    sb.n = n;
    sb.rank = rank;
    for (int c = 0; c < n; ++c)
        if (pivot_row_of_col[c] >= 0)
            sb.pivot_cols.push_back(c);
        else
            sb.free_cols.push_back(c);
    sb.rows = Mat(rank, n);
    for (int s = 0; s < rank; ++s) {
        const int src = pivot_row_of_col[sb.pivot_cols[s]];
        for (int j = 0; j < n; ++j) sb.rows.at(s, j) = M.at(src, j);
    }
    return sb;
}

/// Null-space generator block of a systemized parity block: sigma = n - rank
/// rows with the identity on the free columns and the transposed parity
/// entries on the pivot columns, so that D * B^T = 0 exactly.
inline Mat build_generator_block(const Field& /*f*/, const SystemizedBlock& sb) {
    const int n = sb.n, sigma = sb.n - sb.rank;
    Mat D(sigma, n);
    for (int s = 0; s < sigma; ++s) D.at(s, sb.free_cols[s]) = 1;
    for (int t = 0; t < sb.rank; ++t)
        for (int s = 0; s < sigma; ++s) D.at(s, sb.pivot_cols[t]) = sb.rows.at(t, sb.free_cols[s]);
    return D;
}

/// Transformed generator plus rank profile and class structure.
struct GeneratorBuild {
    DiagonalBlockMatrix Gd;
    RankProfile profile;
    ConjugacyClasses classes;
    bool binary = false;               // parity check was binary
    bool conjugates_derived = false;   // conjugate blocks derived by Frobenius
};

namespace detail {

inline bool block_orthogonal(const Field& f, const Mat& D, const Mat& B) {
    for (int u = 0; u < B.rows; ++u)
        for (int s = 0; s < D.rows; ++s) {
            elem acc = 0;
            for (int v = 0; v < D.cols; ++v) acc = f.add(acc, f.mul(D.at(s, v), B.at(u, v)));
            if (acc) return false;
        }
    return true;
}

}  // namespace detail

/// Builds the transformed generator from a parity-check array. For binary
/// arrays only the lambda class representatives are systemized; conjugate
/// blocks come from entrywise Frobenius powers, which preserves the pivot
/// pattern. Each derived block is still checked against its parity block
/// directly, with independent systemization as the fallback. Non-binary
/// arrays are systemized index by index.
inline GeneratorBuild build_transformed_generator(const Field& f, const CirculantArray& H) {
    GeneratorBuild out;
    const int e = H.e, n = H.cols;
    DiagonalBlockMatrix B = transform_parity(f, H);
    out.binary = H.is_binary();
    out.classes = conjugacy_partition(f);
    out.Gd.e = e;
    out.Gd.n = n;
    out.Gd.blocks.assign(e, Mat());
    out.Gd.info_cols.assign(e, {});
    out.profile.rho.assign(e, 0);
    out.profile.sigma.assign(e, 0);
    out.conjugates_derived = out.binary;

    auto place = [&](int t, Mat D, const std::vector<int>& info, int rank) {
        out.profile.rho[t] = rank;
        out.profile.sigma[t] = n - rank;
        out.Gd.info_cols[t] = info;
        out.Gd.blocks[t] = std::move(D);
    };

    if (out.binary) {
        for (const auto& cls : out.classes.classes) {
            SystemizedBlock sb = systemize(f, B.blocks[cls.rep]);
            Mat D = build_generator_block(f, sb);
            place(cls.rep, D, sb.free_cols, sb.rank);
            for (std::size_t mu = 1; mu < cls.members.size(); ++mu) {
                const int t = cls.members[mu];
                const Mat& prev = out.Gd.blocks[cls.members[mu - 1]];
                Mat Dt = prev;
                for (auto& x : Dt.a) x = f.mul(x, x);
                if (detail::block_orthogonal(f, Dt, B.blocks[t])) {
                    place(t, std::move(Dt), sb.free_cols, sb.rank);
                } else {
                    // pivot pattern did not carry over; systemize this index on its own
                    out.conjugates_derived = false;
                    SystemizedBlock sbt = systemize(f, B.blocks[t]);
                    Mat Dind = build_generator_block(f, sbt);
                    place(t, std::move(Dind), sbt.free_cols, sbt.rank);
                }
            }
        }
    } else {
        for (int t = 0; t < e; ++t) {
            SystemizedBlock sb = systemize(f, B.blocks[t]);
            Mat D = build_generator_block(f, sb);
            place(t, std::move(D), sb.free_cols, sb.rank);
        }
    }
    out.profile.K = 0;
    for (int s : out.profile.sigma) out.profile.K += s;
    return out;
}

inline GeneratorBuild build_transformed_generator(const Field& f, const SparseParityCheck& H) {
    return build_transformed_generator(f, H.to_array());
}

inline bool verify_parity(const Field& f, const Codeword& c, const SparseParityCheck& H) {
    return verify_parity_sparse(f, c, H.e, H.rows, H.cols, H.support);
}

}  // namespace qcetd
