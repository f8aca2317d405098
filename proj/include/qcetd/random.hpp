/// Seeded random generation of circulant arrays and messages. All draws go
/// through mt19937_64 with explicit rejection sampling so outputs are
/// reproducible across platforms.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcetd/codec.hpp"
#include "qcetd/galois.hpp"
#include "qcetd/transform.hpp"

namespace qcetd {

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the draw unbiased and portable
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x;
        do {
            x = gen();
        } while (x > limit);
        return x % n;
    }
    bool chance(double p) { return static_cast<double>(gen() >> 11) * 0x1.0p-53 < p; }
    elem symbol(const Field& f) { return static_cast<elem>(below(f.q())); }
    elem bit() { return static_cast<elem>(below(2)); }
};

/// Random rows x cols circulant array. Binary cells draw each generator
/// coefficient with probability `density`; non-binary cells draw uniform
/// field symbols. All-zero generators collapse to zero cells.
inline CirculantArray random_circulant_array(const Field& f, int rows, int cols, Rng& rng,
                                             bool binary, double density = 0.5) {
    CirculantArray A(static_cast<int>(f.e()), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<elem> g(f.e(), 0);
            bool nonzero = false;
            for (std::uint32_t l = 0; l < f.e(); ++l) {
                elem x = binary ? (rng.chance(density) ? elem{1} : elem{0}) : rng.symbol(f);
                g[l] = x;
                nonzero |= x != 0;
            }
            if (nonzero) A.at(i, j).g = std::move(g);
        }
    return A;
}

inline Message random_message(const Field& f, const std::vector<int>& sigma, Rng& rng,
                              bool binary) {
    Message m = Message::zero(sigma);
    for (auto& x : m.symbols) x = binary ? rng.bit() : rng.symbol(f);
    return m;
}

}  // namespace qcetd
