// Test-only oracles, kept independent of the library's transform/encode
// paths: dense circulant expansion, dense matrix products, and plain
// left-to-right Gaussian elimination over GF(2) and GF(2^r).
#pragma once

#include <vector>

#include "qcetd/galois.hpp"
#include "qcetd/transform.hpp"

namespace testutil {

using qcetd::CirculantArray;
using qcetd::elem;
using qcetd::Field;
using qcetd::Mat;

// full (rows*e) x (cols*e) dense matrix of a circulant array
inline Mat expand_dense(const Field&, const CirculantArray& A) {
    const int e = A.e;
    Mat M(A.rows * e, A.cols * e);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            for (int s = 0; s < e; ++s)
                for (int t = 0; t < e; ++t)
                    M.at(i * e + s, j * e + t) = A.coeff(i, j, ((t - s) % e + e) % e);
    return M;
}

inline Mat dense_mul(const Field& f, const Mat& A, const Mat& B) {
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const elem a = A.at(i, k);
            if (!a) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(k, j)) C.at(i, j) = f.add(C.at(i, j), f.mul(a, B.at(k, j)));
        }
    return C;
}

inline std::vector<elem> dense_vec_mul(const Field& f, const std::vector<elem>& v, const Mat& A) {
    std::vector<elem> out(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < A.cols; ++j)
            if (A.at(i, j)) out[j] = f.add(out[j], f.mul(v[i], A.at(i, j)));
    }
    return out;
}

inline bool is_zero(const Mat& M) {
    for (elem x : M.a)
        if (x) return false;
    return true;
}

// rank of a 0/1 matrix by xor elimination (leftmost pivots)
inline int gf2_rank(std::vector<std::vector<int>> M) {
    if (M.empty()) return 0;
    const int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (M[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != rank && M[i][c])
                for (int j = 0; j < cols; ++j) M[i][j] ^= M[rank][j];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> to_gf2(const Mat& M) {
    std::vector<std::vector<int>> out(M.rows, std::vector<int>(M.cols, 0));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) out[i][j] = M.at(i, j) & 1;
    return out;
}

// null-space basis of a 0/1 matrix (vectors x with M x^T = 0), by
// elimination; returns the basis as rows
inline std::vector<std::vector<int>> gf2_null_space(std::vector<std::vector<int>> M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (M[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != rank && M[i][c])
                for (int j = 0; j < cols; ++j) M[i][j] ^= M[rank][j];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> x(cols, 0);
        x[fc] = 1;
        for (int s = 0; s < rank; ++s)
            if (M[s][fc]) x[pivot_col[s]] = 1;
        basis.push_back(std::move(x));
    }
    return basis;
}

// generic-field row reduction (leftmost pivots); returns rank, M becomes RREF
inline int field_rref(const Field& f, Mat& M) {
    int rank = 0;
    for (int c = 0; c < M.cols && rank < M.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < M.rows; ++i)
            if (M.at(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(rank, j), M.at(piv, j));
        const elem ia = f.inv(M.at(rank, c));
        for (int j = 0; j < M.cols; ++j) M.at(rank, j) = f.mul(ia, M.at(rank, j));
        for (int i = 0; i < M.rows; ++i) {
            if (i == rank || !M.at(i, c)) continue;
            const elem co = M.at(i, c);
            for (int j = 0; j < M.cols; ++j) M.at(i, j) = f.add(M.at(i, j), f.mul(co, M.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// true iff v lies in the row space of RREF'd matrix M (rank rows)
inline bool in_row_space(const Field& f, const Mat& rref, int rank, std::vector<elem> v) {
    // for each pivot column of rref, cancel v's entry
    for (int s = 0; s < rank; ++s) {
        int pc = -1;
        for (int j = 0; j < rref.cols; ++j)
            if (rref.at(s, j)) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        if (v[pc]) {
            const elem co = v[pc];
            for (int j = 0; j < rref.cols; ++j) v[j] = f.add(v[j], f.mul(co, rref.at(s, j)));
        }
    }
    for (elem x : v)
        if (x) return false;
    return true;
}

}  // namespace testutil
