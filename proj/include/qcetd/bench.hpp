/// Operation-count benchmarking: assembled code instances, measured counts
/// per encoder and step, and the analytic complexity formulas with their
/// ratios.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcetd/codec.hpp"
#include "qcetd/galois.hpp"
#include "qcetd/qcldpc.hpp"
#include "qcetd/random.hpp"
#include "qcetd/transform.hpp"

namespace qcetd {

enum class EncodeMode { traditional, etd, etd_binary };

inline const char* mode_name(EncodeMode m) {
    switch (m) {
        case EncodeMode::traditional: return "traditional";
        case EncodeMode::etd: return "etd";
        case EncodeMode::etd_binary: return "etd-binary";
    }
    return "?";
}

/// A ready-to-encode code: the parity check, the transformed generator, and
/// (when the generator blocks have equal size) the circulant-array generator
/// for traditional encoding.
struct CodeInstance {
    Field field;
    CirculantArray H;
    DiagonalBlockMatrix Gd;
    ConjugacyClasses classes;
    RankProfile profile;
    bool binary = false;
    std::optional<CirculantArray> G;  // traditional generator, full-rank case only

    int e() const { return Gd.e; }
    int n() const { return Gd.n; }
    bool full_rank() const {
        for (std::size_t i = 1; i < profile.sigma.size(); ++i)
            if (profile.sigma[i] != profile.sigma[0]) return false;
        return true;
    }
};

/// Instance from a parity-check array (the QC-LDPC path).
inline CodeInstance make_instance(const Field& f, const CirculantArray& H) {
    GeneratorBuild gb = build_transformed_generator(f, H);
    CodeInstance inst{f, H, std::move(gb.Gd), std::move(gb.classes), std::move(gb.profile),
                      gb.binary, std::nullopt};
    if (inst.full_rank() && !inst.Gd.blocks.empty() && inst.Gd.blocks[0].rows > 0)
        inst.G = inverse_transform_array(f, inst.Gd);
    return inst;
}

/// Random full-rank instance built directly in the transform domain: each
/// block D_t = [I | P_t^T] with P_t drawn uniformly, parity blocks
/// B_t = [P_t | I], and the parity-check array recovered from the per-index
/// values (cell generator = Fourier transform of its value sequence).
inline CodeInstance make_random_full_rank_instance(const Field& f, int k, int n, Rng& rng) {
    if (k < 1 || n <= k) throw std::invalid_argument("make_random_full_rank_instance: need 1 <= k < n");
    const int e = static_cast<int>(f.e()), nk = n - k;
    DiagonalBlockMatrix Gd;
    Gd.e = e;
    Gd.n = n;
    Gd.blocks.assign(e, Mat(k, n));
    Gd.info_cols.assign(e, {});
    std::vector<Mat> B(e, Mat(nk, n));
    for (int t = 0; t < e; ++t) {
        Mat P(nk, k);
        for (auto& x : P.a) x = rng.symbol(f);
        Mat& D = Gd.blocks[t];
        for (int s = 0; s < k; ++s) D.at(s, s) = 1;
        for (int s = 0; s < k; ++s)
            for (int u = 0; u < nk; ++u) D.at(s, k + u) = P.at(u, s);
        Mat& Bt = B[t];
        for (int u = 0; u < nk; ++u) {
            for (int s = 0; s < k; ++s) Bt.at(u, s) = P.at(u, s);
            Bt.at(u, k + u) = 1;
        }
        auto& info = Gd.info_cols[t];
        info.resize(k);
        for (int s = 0; s < k; ++s) info[s] = s;
    }
    // cell generators from the per-index parity values
    CirculantArray H(e, nk, n);
    std::vector<elem> vals(e);
    for (int u = 0; u < nk; ++u)
        for (int v = 0; v < n; ++v) {
            bool zero = true;
            for (int t = 0; t < e; ++t) {
                vals[t] = B[t].at(u, v);
                if (vals[t]) zero = false;
            }
            if (zero) continue;
            H.at(u, v).g = fourier(f, vals);
        }
    CodeInstance inst{f, std::move(H), std::move(Gd), conjugacy_partition(f), RankProfile{},
                      false, std::nullopt};
    inst.profile.rho.assign(e, nk);
    inst.profile.sigma.assign(e, k);
    inst.profile.K = static_cast<long>(e) * k;
    inst.G = inverse_transform_array(f, inst.Gd);
    return inst;
}

/// Measured operation counts: seeded random messages, merged per-step
/// totals. Counting is structural, so totals are message-independent for a
/// fixed instance and scale linearly in `trials`.
inline StepCounters count_encode(const CodeInstance& inst, EncodeMode mode, int trials,
                                 std::uint64_t seed) {
    StepCounters total;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        StepCounters ops;
        switch (mode) {
            case EncodeMode::traditional: {
                if (!inst.G)
                    throw std::invalid_argument(
                        "count_encode: no circulant-array generator (rank-deficient instance)");
                std::vector<elem> m(static_cast<std::size_t>(inst.e()) * inst.G->rows);
                for (auto& x : m) x = inst.binary ? rng.bit() : rng.symbol(inst.field);
                encode_traditional(inst.field, m, *inst.G, &ops.traditional);
                break;
            }
            case EncodeMode::etd: {
                Message m = random_message(inst.field, inst.profile.sigma, rng, false);
                encode_etd(inst.field, m, inst.Gd, &ops);
                break;
            }
            case EncodeMode::etd_binary: {
                if (!inst.binary)
                    throw std::invalid_argument("count_encode: instance is not binary");
                Message m = random_message(inst.field, inst.profile.sigma, rng, true);
                encode_etd_binary(inst.field, m, inst.Gd, inst.classes, &ops);
                break;
            }
        }
        total.merge(ops);
    }
    return total;
}

/// Reference ratios reported in the literature for specific parameter sets,
/// echoed as metadata only (never asserted against measured values).
struct ReferenceRatio {
    double ratio;
    double percent;
};

inline std::optional<ReferenceRatio> reference_ratio(long e, int r, bool binary) {
    if (!binary && e == 63 && r == 6) return ReferenceRatio{63.0, 1.59};
    if (binary && e == 63 && r == 6) return ReferenceRatio{10.05, 9.52};
    if (binary && e == 511 && r == 9) return ReferenceRatio{56.78, 1.77};
    return std::nullopt;
}

inline long ceil_log2(long e) {
    long b = 0;
    while ((1L << b) < e) ++b;
    return b;
}

/// Analytic complexity figures. n and k are block counts; the traditional
/// baseline multiplies the message by the parity part of a systematic
/// generator.
struct ComplexityReport {
    long e = 0, n = 0, k = 0;
    int r = 0;

    // symbol operations
    long long traditional_symbol_ops = 0;  // e^2 k (n-k)
    long long etd_step1_symbol_ops = 0;    // e k (n-k)
    long long etd_transform_symbol_ops = 0;  // n e ceil(log2 e), fast-transform figure
    double ratio_step1 = 0;              // traditional / step1 = e
    double ratio_with_transform = 0;     // traditional / (step1 + transform)

    // bit operations, binary codes
    long long traditional_bit_ops = 0;  // e^2 k (n-k)
    long long binary_step1_bits = 0;    // e k (n-k) r
    long long binary_step2_bits = 0;    // n e (r^2 + r)
    long long binary_step3_bits = 0;    // n r^2 e ceil(log2 e)
    double ratio_binary = 0;            // traditional bits / (step1+step2+step3)
    double ratio_binary_step1_only = 0; // e / r

    long long memory_symbols = 0;  // e k (n-k), both encoders

    std::optional<ReferenceRatio> reference_nonbinary;
    std::optional<ReferenceRatio> reference_binary;
};

inline ComplexityReport analytic_report(long e, long n, long k, int r) {
    if (e < 1 || n < 1 || k < 1 || k >= n || r < 1)
        throw std::invalid_argument("analytic_report: need e,k >= 1 and k < n");
    ComplexityReport rep;
    rep.e = e;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    const long long nk = n - k;
    rep.traditional_symbol_ops = static_cast<long long>(e) * e * k * nk;
    rep.etd_step1_symbol_ops = static_cast<long long>(e) * k * nk;
    rep.etd_transform_symbol_ops = static_cast<long long>(n) * e * ceil_log2(e);
    rep.ratio_step1 =
        static_cast<double>(rep.traditional_symbol_ops) / static_cast<double>(rep.etd_step1_symbol_ops);
    rep.ratio_with_transform =
        static_cast<double>(rep.traditional_symbol_ops) /
        static_cast<double>(rep.etd_step1_symbol_ops + rep.etd_transform_symbol_ops);
    rep.traditional_bit_ops = rep.traditional_symbol_ops;
    rep.binary_step1_bits = static_cast<long long>(e) * k * nk * r;
    rep.binary_step2_bits = static_cast<long long>(n) * e * (static_cast<long long>(r) * r + r);
    rep.binary_step3_bits = static_cast<long long>(n) * r * r * e * ceil_log2(e);
    rep.ratio_binary = static_cast<double>(rep.traditional_bit_ops) /
                       static_cast<double>(rep.binary_step1_bits + rep.binary_step2_bits +
                                           rep.binary_step3_bits);
    rep.ratio_binary_step1_only = static_cast<double>(e) / static_cast<double>(r);
    rep.memory_symbols = static_cast<long long>(e) * k * nk;
    rep.reference_nonbinary = reference_ratio(e, r, false);
    rep.reference_binary = reference_ratio(e, r, true);
    return rep;
}

}  // namespace qcetd
