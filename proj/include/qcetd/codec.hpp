/// Encoders for quasi-cyclic codes: the traditional generator-matrix oracle,
/// transform-domain encoding (ETD), and the binary ETD variant with its
/// subfield-basis pre/post-processing maps, plus message recovery and
/// parity verification.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcetd/galois.hpp"
#include "qcetd/transform.hpp"

namespace qcetd {

/// Transform-domain message: e blocks, block i of length sigma_i.
struct Message {
    std::vector<elem> symbols;
    std::vector<int> sigma;

    Message() = default;
    Message(std::vector<elem> syms, std::vector<int> sig)
        : symbols(std::move(syms)), sigma(std::move(sig)) {
        std::size_t total = 0;
        for (int s : sigma) total += static_cast<std::size_t>(s);
        if (total != symbols.size())
            throw std::invalid_argument("Message: symbol count " + std::to_string(symbols.size()) +
                                        " != sum of block lengths " + std::to_string(total));
        offsets_.reserve(sigma.size() + 1);
        std::size_t off = 0;
        for (int s : sigma) {
            offsets_.push_back(off);
            off += static_cast<std::size_t>(s);
        }
        offsets_.push_back(off);
    }

    static Message zero(std::vector<int> sig) {
        std::size_t total = 0;
        for (int s : sig) total += static_cast<std::size_t>(s);
        return Message(std::vector<elem>(total, 0), std::move(sig));
    }

    std::size_t size() const { return symbols.size(); }
    int blocks() const { return static_cast<int>(sigma.size()); }
    elem at(int block, int j) const { return symbols[offsets_[block] + j]; }
    elem& at(int block, int j) { return symbols[offsets_[block] + j]; }
    const elem* block_ptr(int block) const {
        return sigma[block] ? symbols.data() + offsets_[block] : nullptr;
    }

    bool is_binary() const {
        for (elem x : symbols)
            if (x > 1) return false;
        return true;
    }
    bool operator==(const Message& o) const { return symbols == o.symbols && sigma == o.sigma; }

private:
    std::vector<std::size_t> offsets_;
};

/// Length-en transformed codeword with its two block views:
/// cf(j, t) reads n blocks of length e, cfpi(i, j) reads e blocks of
/// length n; the views are tied by the block index permutation.
struct TransformedCodeword {
    int e = 0, n = 0;
    std::vector<elem> v;  // flat storage in the cf layout: v[j*e + t]

    TransformedCodeword() = default;
    TransformedCodeword(int e_, int n_) : e(e_), n(n_), v(static_cast<std::size_t>(e_) * n_, 0) {}

    elem cf(int j, int t) const { return v[static_cast<std::size_t>(j) * e + t]; }
    elem& cf(int j, int t) { return v[static_cast<std::size_t>(j) * e + t]; }
    elem cfpi(int i, int j) const { return v[static_cast<std::size_t>(j) * e + i]; }
    elem& cfpi(int i, int j) { return v[static_cast<std::size_t>(j) * e + i]; }

    bool operator==(const TransformedCodeword& o) const {
        return e == o.e && n == o.n && v == o.v;
    }
};

/// Flat length-en codeword, n blocks of length e.
using Codeword = std::vector<elem>;

/// Per-step operation counts for one encoding call.
struct StepCounters {
    OpCounter step1;       // transform-domain matrix products
    OpCounter postprocess; // subfield-basis mapping (binary ETD step 2)
    OpCounter transform;   // inverse Fourier transforms, reported separately
    OpCounter traditional; // symbol-domain generator product

    OpCounter total() const {
        OpCounter t = step1;
        t.merge(postprocess);
        t.merge(transform);
        t.merge(traditional);
        return t;
    }
    void merge(const StepCounters& o) {
        step1.merge(o.step1);
        postprocess.merge(o.postprocess);
        transform.merge(o.transform);
        traditional.merge(o.traditional);
    }
    bool operator==(const StepCounters& o) const {
        return step1 == o.step1 && postprocess == o.postprocess &&
               transform == o.transform && traditional == o.traditional;
    }
};

namespace detail {

inline void expect_sigma_match(const Message& m, const DiagonalBlockMatrix& Gd) {
    if (m.blocks() != Gd.e)
        throw std::invalid_argument("encode: message has " + std::to_string(m.blocks()) +
                                    " blocks, generator has " + std::to_string(Gd.e));
    for (int i = 0; i < Gd.e; ++i)
        if (m.sigma[i] != Gd.blocks[i].rows)
            throw std::invalid_argument("encode: message block " + std::to_string(i) + " has " +
                                        std::to_string(m.sigma[i]) + " symbols, block expects " +
                                        std::to_string(Gd.blocks[i].rows));
}

/// Row vector (length sigma) times one sigma x n block into out[0..n).
/// Systematic blocks copy the identity columns and spend sigma
/// multiplications and sigma-1 additions per remaining column; dense
/// blocks pay that on every column. Counting is structural: every issued
/// operation counts, whatever the operand values.
inline void row_times_block(const Field& f, const elem* m, const Mat& D,
                            const std::vector<int>* info, elem* out, OpCounter* ops) {
    const int sigma = D.rows, n = D.cols;
    for (int j = 0; j < n; ++j) out[j] = 0;
    if (sigma == 0) return;
    std::vector<char> is_info(n, 0);
    if (info) {
        for (int s = 0; s < sigma; ++s) {
            out[(*info)[s]] = m[s];
            is_info[(*info)[s]] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        if (info && is_info[j]) continue;
        elem acc = ops ? f.mul(m[0], D.at(0, j), *ops) : f.mul(m[0], D.at(0, j));
        for (int s = 1; s < sigma; ++s) {
            elem term = ops ? f.mul(m[s], D.at(s, j), *ops) : f.mul(m[s], D.at(s, j));
            acc = ops ? f.add(acc, term, *ops) : f.add(acc, term);
        }
        out[j] = acc;
    }
}

/// Binary variant: the message entries are bits, so each column costs
/// sigma additions and no multiplications (bit-masked accumulation).
inline void row_times_block_binary(const Field& f, const elem* m, const Mat& D,
                                   const std::vector<int>* info, elem* out, OpCounter* ops) {
    const int sigma = D.rows, n = D.cols;
    for (int j = 0; j < n; ++j) out[j] = 0;
    if (sigma == 0) return;
    std::vector<char> is_info(n, 0);
    if (info) {
        for (int s = 0; s < sigma; ++s) {
            out[(*info)[s]] = m[s];
            is_info[(*info)[s]] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        if (info && is_info[j]) continue;
        elem acc = 0;
        for (int s = 0; s < sigma; ++s) {
            elem term = m[s] ? D.at(s, j) : 0;
            acc = ops ? f.add(acc, term, *ops) : f.add(acc, term);
        }
        out[j] = acc;
    }
}

}  // namespace detail

/// Step 1 of transform-domain encoding: block i of the transformed codeword
/// is m_i * D_i.
inline TransformedCodeword etd_step1(const Field& f, const Message& m,
                                     const DiagonalBlockMatrix& Gd, OpCounter* ops = nullptr) {
    detail::expect_sigma_match(m, Gd);
    TransformedCodeword out(Gd.e, Gd.n);
    std::vector<elem> row(Gd.n);
    for (int i = 0; i < Gd.e; ++i) {
        const auto* info = Gd.systematic() ? &Gd.info_cols[i] : nullptr;
        detail::row_times_block(f, m.block_ptr(i), Gd.blocks[i], info, row.data(), ops);
        for (int j = 0; j < Gd.n; ++j) out.cfpi(i, j) = row[j];
    }
    return out;
}

/// Binary-message step 1 used by the binary encoder: within each conjugacy
/// class every member's message block multiplies the class representative's
/// generator block. Costs additions only.
inline TransformedCodeword etd_step1_binary(const Field& f, const Message& m,
                                            const DiagonalBlockMatrix& Gd,
                                            const ConjugacyClasses& cc,
                                            OpCounter* ops = nullptr) {
    detail::expect_sigma_match(m, Gd);
    TransformedCodeword out(Gd.e, Gd.n);
    std::vector<elem> row(Gd.n);
    for (const auto& cls : cc.classes) {
        const Mat& Drep = Gd.blocks[cls.rep];
        const auto* info = Gd.systematic() ? &Gd.info_cols[cls.rep] : nullptr;
        for (int t : cls.members) {
            if (m.sigma[t] != Drep.rows)
                throw std::invalid_argument("etd_step1_binary: block " + std::to_string(t) +
                                            " length differs from its class representative");
            detail::row_times_block_binary(f, m.block_ptr(t), Drep, info, row.data(), ops);
            for (int j = 0; j < Gd.n; ++j) out.cfpi(t, j) = row[j];
        }
    }
    return out;
}

/// Per-block inverse Fourier transforms: block j of the codeword is the
/// inverse transform of block j of the transformed codeword.
inline Codeword etd_inverse_transform(const Field& f, const TransformedCodeword& cF,
                                      OpCounter* ops = nullptr) {
    Codeword c(static_cast<std::size_t>(cF.e) * cF.n, 0);
    std::vector<elem> block(cF.e);
    for (int j = 0; j < cF.n; ++j) {
        for (int t = 0; t < cF.e; ++t) block[t] = cF.cf(j, t);
        std::vector<elem> w = inverse_fourier(f, block, ops);
        for (int l = 0; l < cF.e; ++l) c[static_cast<std::size_t>(j) * cF.e + l] = w[l];
    }
    return c;
}

/// Traditional encoding oracle: c = m * G with G expanded from circulants
/// cell by cell. Identity cells are accumulated copy-free, zero cells are
/// skipped; each remaining cell costs e^2 multiplications.
inline Codeword encode_traditional(const Field& f, const std::vector<elem>& m,
                                   const CirculantArray& G, OpCounter* ops = nullptr) {
    const int e = G.e;
    if (m.size() != static_cast<std::size_t>(e) * G.rows)
        throw std::invalid_argument("encode_traditional: message length " +
                                    std::to_string(m.size()) + " != e*k = " +
                                    std::to_string(static_cast<std::size_t>(e) * G.rows));
    Codeword c(static_cast<std::size_t>(e) * G.cols, 0);
    std::vector<int> contributions(G.cols, 0);
    for (int j = 0; j < G.cols; ++j) {
        elem* cj = &c[static_cast<std::size_t>(j) * e];
        for (int i = 0; i < G.rows; ++i) {
            const Circulant& cell = G.at(i, j);
            if (cell.g.empty() || cell.is_zero()) continue;
            const elem* mi = &m[static_cast<std::size_t>(i) * e];
            const bool first = contributions[j]++ == 0;
            if (cell.is_identity()) {
                for (int t = 0; t < e; ++t)
                    cj[t] = first ? mi[t] : (ops ? f.add(cj[t], mi[t], *ops) : f.add(cj[t], mi[t]));
                continue;
            }
            for (int t = 0; t < e; ++t) {
                elem acc = 0;
                for (int s = 0; s < e; ++s) {
                    elem w = cell.g[static_cast<std::size_t>(((t - s) % e + e) % e)];
                    elem term = ops ? f.mul(mi[s], w, *ops) : f.mul(mi[s], w);
                    acc = s == 0 ? term : (ops ? f.add(acc, term, *ops) : f.add(acc, term));
                }
                cj[t] = first ? acc : (ops ? f.add(cj[t], acc, *ops) : f.add(cj[t], acc));
            }
        }
    }
    return c;
}

/// Transform-domain encoding of a (possibly non-binary) message.
inline Codeword encode_etd(const Field& f, const Message& m, const DiagonalBlockMatrix& Gd,
                           StepCounters* ops = nullptr) {
    TransformedCodeword cF = etd_step1(f, m, Gd, ops ? &ops->step1 : nullptr);
    return etd_inverse_transform(f, cF, ops ? &ops->transform : nullptr);
}

/// Maps a binary message into the transform domain using the per-class
/// subfield bases: block (2^mu t_i)_e of the result is
/// (sum_l beta_{i,l} m_{(2^l t_i)_e})^(2^mu), applied entrywise.
/// Bijective, and the image satisfies the conjugacy recurrence.
inline Message preprocess_message(const Field& f, const Message& m, const ConjugacyClasses& cc) {
    if (!m.is_binary())
        throw std::invalid_argument("preprocess_message: message must be binary");
    if (m.blocks() != cc.e)
        throw std::invalid_argument("preprocess_message: block count != e");
    Message out = Message::zero(m.sigma);
    for (const auto& cls : cc.classes) {
        const int eta = cls.eta();
        const int sigma = m.sigma[cls.rep];
        for (int t : cls.members)
            if (m.sigma[t] != sigma)
                throw std::invalid_argument(
                    "preprocess_message: unequal block lengths inside a conjugacy class");
        for (int j = 0; j < sigma; ++j) {
            elem gamma = 0;
            for (int l = 0; l < eta; ++l)
                if (m.at(cls.members[l], j)) gamma = f.add(gamma, cls.basis[l]);
            elem v = gamma;
            for (int mu = 0; mu < eta; ++mu) {
                out.at(cls.members[mu], j) = v;
                v = f.mul(v, v);
            }
        }
    }
    return out;
}

/// Post-processing map on a transformed codeword produced by the binary
/// step 1: the representative position of each class combines the class
/// members through the subfield basis, conjugate positions are Frobenius
/// powers of the representative.
inline TransformedCodeword postprocess_codeword(const Field& f, const TransformedCodeword& cF,
                                                const ConjugacyClasses& cc,
                                                OpCounter* ops = nullptr) {
    TransformedCodeword out(cF.e, cF.n);
    for (const auto& cls : cc.classes) {
        const int eta = cls.eta();
        for (int j = 0; j < cF.n; ++j) {
            elem gamma = 0;
            for (int l = 0; l < eta; ++l) {
                elem term = ops ? f.mul(cls.basis[l], cF.cfpi(cls.members[l], j), *ops)
                                : f.mul(cls.basis[l], cF.cfpi(cls.members[l], j));
                gamma = l == 0 ? term : (ops ? f.add(gamma, term, *ops) : f.add(gamma, term));
            }
            elem v = gamma;
            for (int mu = 0; mu < eta; ++mu) {
                out.cfpi(cls.members[mu], j) = v;
                if (mu + 1 < eta) v = ops ? f.mul(v, v, *ops) : f.mul(v, v);
            }
        }
    }
    return out;
}

/// True iff every position satisfies c^F_{j,(2i)_e} = (c^F_{j,i})^2.
inline bool check_conjugacy(const Field& f, const TransformedCodeword& cF) {
    for (int j = 0; j < cF.n; ++j)
        for (int i = 0; i < cF.e; ++i)
            if (cF.cf(j, (2 * i) % cF.e) != f.mul(cF.cf(j, i), cF.cf(j, i))) return false;
    return true;
}

/// Binary transform-domain encoding (three steps: binary step 1 against the
/// class representatives, subfield-basis post-processing, per-block inverse
/// transforms). The generator blocks must satisfy the conjugacy constraint,
/// otherwise the output would not be binary.
inline Codeword encode_etd_binary(const Field& f, const Message& m,
                                  const DiagonalBlockMatrix& Gd, const ConjugacyClasses& cc,
                                  StepCounters* ops = nullptr) {
    if (!m.is_binary())
        throw std::invalid_argument("encode_etd_binary: message must be binary");
    if (!blocks_satisfy_conjugacy(f, Gd))
        throw std::invalid_argument(
            "encode_etd_binary: generator blocks violate the conjugacy constraint");
    TransformedCodeword cF = etd_step1_binary(f, m, Gd, cc, ops ? &ops->step1 : nullptr);
    TransformedCodeword hat = postprocess_codeword(f, cF, cc, ops ? &ops->postprocess : nullptr);
    return etd_inverse_transform(f, hat, ops ? &ops->transform : nullptr);
}

/// Recovers the message from an ETD codeword: forward Fourier transform of
/// each block, then read the information positions of each generator block.
/// With `binary` set, additionally inverts the subfield-basis map per class
/// (the codeword must be conjugacy-consistent).
inline Message recover_message(const Field& f, const Codeword& c, const DiagonalBlockMatrix& Gd,
                               const ConjugacyClasses& cc, bool binary) {
    if (!Gd.systematic())
        throw std::invalid_argument("recover_message: generator blocks carry no information columns");
    if (c.size() != static_cast<std::size_t>(Gd.e) * Gd.n)
        throw std::invalid_argument("recover_message: codeword length mismatch");
    TransformedCodeword cF(Gd.e, Gd.n);
    std::vector<elem> block(Gd.e);
    for (int j = 0; j < Gd.n; ++j) {
        for (int l = 0; l < Gd.e; ++l) block[l] = c[static_cast<std::size_t>(j) * Gd.e + l];
        std::vector<elem> d = fourier(f, block);
        for (int t = 0; t < Gd.e; ++t) cF.cf(j, t) = d[t];
    }
    Message m = Message::zero(Gd.sigma());
    if (!binary) {
        for (int i = 0; i < Gd.e; ++i)
            for (int s = 0; s < Gd.blocks[i].rows; ++s) m.at(i, s) = cF.cfpi(i, Gd.info_cols[i][s]);
        return m;
    }
    if (!check_conjugacy(f, cF))
        throw std::invalid_argument("recover_message: codeword is not conjugacy-consistent");
    for (const auto& cls : cc.classes) {
        const int eta = cls.eta();
        Field::Gf2Span span;
        for (elem b : cls.basis) span.insert(b);
        const auto& info = Gd.info_cols[cls.rep];
        for (int s = 0; s < Gd.blocks[cls.rep].rows; ++s) {
            elem gamma = cF.cfpi(cls.rep, info[s]);
            if (f.frobenius(gamma, eta) != gamma)
                throw std::invalid_argument(
                    "recover_message: recovered symbol lies outside the class subfield");
            std::uint32_t bits = span.coordinates(gamma);
            for (int l = 0; l < eta; ++l) m.at(cls.members[l], s) = (bits >> l) & 1u;
        }
    }
    return m;
}

/// c * H^T over the circulant support sets; true iff the syndrome is zero.
/// One's position p in cell (u, v) contributes c_{v,(s+p)_e} to syndrome
/// position (u, s).
inline bool verify_parity_sparse(const Field& f, const Codeword& c, int e, int rows, int cols,
                                 const std::vector<std::vector<int>>& support) {
    if (c.size() != static_cast<std::size_t>(e) * cols)
        throw std::invalid_argument("verify_parity: codeword length " + std::to_string(c.size()) +
                                    " != e*n = " + std::to_string(static_cast<std::size_t>(e) * cols));
    for (int u = 0; u < rows; ++u) {
        for (int s = 0; s < e; ++s) {
            elem syn = 0;
            for (int v = 0; v < cols; ++v) {
                const auto& pos = support[static_cast<std::size_t>(u) * cols + v];
                const elem* cv = &c[static_cast<std::size_t>(v) * e];
                for (int p : pos) {
                    int t = s + p;
                    if (t >= e) t -= e;
                    syn = f.add(syn, cv[t]);
                }
            }
            if (syn) return false;
        }
    }
    return true;
}

/// c * H^T over the circulant structure; true iff the syndrome is zero.
inline bool verify_parity(const Field& f, const Codeword& c, const CirculantArray& H) {
    const int e = H.e;
    if (c.size() != static_cast<std::size_t>(e) * H.cols)
        throw std::invalid_argument("verify_parity: codeword length " + std::to_string(c.size()) +
                                    " != e*n = " + std::to_string(static_cast<std::size_t>(e) * H.cols));
    for (int u = 0; u < H.rows; ++u) {
        for (int s = 0; s < e; ++s) {
            elem syn = 0;
            for (int v = 0; v < H.cols; ++v) {
                const Circulant& cell = H.at(u, v);
                if (cell.g.empty()) continue;
                const elem* cv = &c[static_cast<std::size_t>(v) * e];
                for (int t = 0; t < e; ++t) {
                    elem a = cell.g[static_cast<std::size_t>(((t - s) % e + e) % e)];
                    if (a && cv[t]) syn = f.add(syn, f.mul(cv[t], a));
                }
            }
            if (syn) return false;
        }
    }
    return true;
}

}  // namespace qcetd
