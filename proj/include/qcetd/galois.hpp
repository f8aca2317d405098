/// Arithmetic in GF(2^r) with exp/log tables, Frobenius maps, subfield
/// bases, and exact operation counting.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcetd {

/// Field element in polynomial-basis representation: the value's bits are
/// the coefficients, so an element of GF(2^r) is an integer < 2^r.
using elem = std::uint16_t;

/// Tally of Galois-field operations. Every counted add/mul call increments
/// by one, so totals depend only on the structure of the computation, not
/// on the operand values. Counters merge componentwise.
struct OpCounter {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;

    void merge(const OpCounter& o) {
        additions += o.additions;
        multiplications += o.multiplications;
    }
    std::uint64_t total() const { return additions + multiplications; }
    bool operator==(const OpCounter& o) const {
        return additions == o.additions && multiplications == o.multiplications;
    }
};

/// GF(2^r), 1 <= r <= 16, built on a primitive polynomial so that alpha = x
/// has multiplicative order e = 2^r - 1. Tables are immutable after
/// construction and safe to share across threads.
class Field {
public:
    /// Builds GF(2^r). `poly` is the primitive polynomial encoded as an
    /// (r+1)-bit integer (e.g. 0b1011 for x^3+x+1); 0 selects the default
    /// polynomial for r. Throws std::invalid_argument if the polynomial is
    /// not primitive (detected when the power sequence of alpha repeats
    /// before step 2^r - 1 or fails to close).
    explicit Field(int r, unsigned poly = 0) : r_(r) {
        if (r < 1 || r > 16)
            throw std::invalid_argument("Field: r must be in [1, 16]");
        poly_ = poly ? poly : default_poly(r);
        if (poly_ >> r != 1u)
            throw std::invalid_argument("Field: polynomial degree must equal r");
        if ((poly_ & 1u) == 0)
            throw std::invalid_argument("Field: polynomial constant term must be 1");
        e_ = (1u << r) - 1u;
        q_ = 1u << r;
        exp_.assign(e_, 0);
        log_.assign(q_, 0);
        std::vector<bool> seen(q_, false);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (seen[x])
                throw std::invalid_argument("Field: polynomial is not primitive "
                                            "(power sequence repeats at step " +
                                            std::to_string(i) + ")");
            seen[x] = true;
            exp_[i] = static_cast<elem>(x);
            log_[x] = i;
            x <<= 1;
            if (x & q_) x ^= poly_;
        }
        if (x != 1)
            throw std::invalid_argument("Field: polynomial is not primitive (alpha^e != 1)");
    }

    int r() const { return r_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    unsigned poly() const { return poly_; }
    const std::vector<elem>& exp_table() const { return exp_; }

    elem add(elem a, elem b) const { return a ^ b; }
    elem add(elem a, elem b, OpCounter& ops) const {
        ++ops.additions;
        return a ^ b;
    }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= e_) s -= e_;
        return exp_[s];
    }
    elem mul(elem a, elem b, OpCounter& ops) const {
        ++ops.multiplications;
        return mul(a, b);
    }

    elem inv(elem a) const {
        if (a == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
        return exp_[(e_ - log_[a]) % e_];
    }

    /// alpha^k for any signed exponent.
    elem pow_alpha(long k) const {
        long m = k % static_cast<long>(e_);
        if (m < 0) m += e_;
        return exp_[static_cast<std::size_t>(m)];
    }

    std::uint32_t log(elem a) const {
        if (a == 0) throw std::invalid_argument("Field::log: log of zero");
        return log_[a];
    }

    /// a^(2^mu), the mu-th Frobenius power, by repeated squaring.
    elem frobenius(elem a, int mu) const {
        for (int i = 0, m = mu % r_; i < m; ++i) a = mul(a, a);
        return a;
    }
    /// Counted variant: each squaring is one multiplication.
    elem frobenius(elem a, int mu, OpCounter& ops) const {
        for (int i = 0, m = mu % r_; i < m; ++i) a = mul(a, a, ops);
        return a;
    }

    /// True iff a lies in the subfield GF(2^eta), i.e. a^(2^eta) = a.
    bool in_subfield(elem a, int eta) const { return frobenius(a, eta) == a; }

    /// Deterministic GF(2)-basis of the subfield GF(2^eta) <= GF(2^r):
    /// walks alpha^0, alpha^1, ... keeping subfield members that are
    /// GF(2)-independent of those already kept, until eta are found.
    /// Throws if eta does not divide r (no such subfield).
    std::vector<elem> subfield_basis(int eta) const {
        if (eta < 1 || r_ % eta != 0)
            throw std::invalid_argument("Field::subfield_basis: eta=" + std::to_string(eta) +
                                        " does not divide r=" + std::to_string(r_));
        std::vector<elem> basis;
        Gf2Span span;
        for (std::uint32_t i = 0; i < e_ && basis.size() < static_cast<std::size_t>(eta); ++i) {
            elem g = exp_[i];
            if (frobenius(g, eta) != g) continue;
            if (span.insert(g)) basis.push_back(g);
        }
        if (basis.size() != static_cast<std::size_t>(eta))
            throw std::logic_error("Field::subfield_basis: basis search failed");
        return basis;
    }

    /// Incremental GF(2) span of field elements viewed as bit vectors.
    /// insert() returns false when the element is already in the span;
    /// coordinates() decomposes an element over the inserted generators.
    struct Gf2Span {
        // parallel arrays: reduced[i] has a distinct leading bit; mask[i]
        // records which inserted generators sum to reduced[i]
        std::vector<std::uint32_t> reduced;
        std::vector<std::uint32_t> mask;
        int count = 0;

        bool insert(elem g) {
            std::uint32_t v = g, m = 0;
            reduce(v, m);
            if (v == 0) return false;
            m |= (1u << count);
            reduced.push_back(v);
            mask.push_back(m);
            ++count;
            return true;
        }
        /// Coordinates of g over the inserted generators, as a bit mask
        /// (bit l set => generator l participates). Throws if g is not in
        /// the span.
        std::uint32_t coordinates(elem g) const {
            std::uint32_t v = g, m = 0;
            reduce(v, m);
            if (v != 0) throw std::invalid_argument("Gf2Span: element outside span");
            return m;
        }

    private:
        void reduce(std::uint32_t& v, std::uint32_t& m) const {
            bool progress = true;
            while (v && progress) {
                progress = false;
                for (std::size_t i = 0; i < reduced.size(); ++i) {
                    if (top_bit(v) == top_bit(reduced[i])) {
                        v ^= reduced[i];
                        m ^= mask[i];
                        progress = true;
                        break;
                    }
                }
            }
        }
        static std::uint32_t top_bit(std::uint32_t x) {
            std::uint32_t b = 0;
            while (x >>= 1) ++b;
            return b;
        }
    };

    /// Default primitive polynomial for degree r. Fixed choices for the
    /// common degrees; elsewhere the lexicographically smallest primitive
    /// polynomial of degree r.
    static unsigned default_poly(int r) {
        switch (r) {
            case 1: return 0b11;
            case 2: return 0b111;            // x^2+x+1
            case 3: return 0b1011;           // x^3+x+1
            case 4: return 0b10011;          // x^4+x+1
            case 5: return 0b100101;         // x^5+x^2+1
            case 6: return 0b1000011;        // x^6+x+1
            case 8: return 0b100011101;      // x^8+x^4+x^3+x^2+1
            case 9: return 0b1000010001;     // x^9+x^4+1
            default: break;
        }
        for (unsigned p = (1u << r) + 1;; p += 2) {
            if (is_primitive(r, p)) return p;
        }
    }

    /// Primitivity test by building the power sequence of x mod poly.
    static bool is_primitive(int r, unsigned poly) {
        if (r < 1 || r > 16 || poly >> r != 1u || (poly & 1u) == 0) return false;
        const std::uint32_t q = 1u << r, e = q - 1;
        std::vector<bool> seen(q, false);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            if (seen[x]) return false;
            seen[x] = true;
            x <<= 1;
            if (x & q) x ^= poly;
        }
        return x == 1;
    }

private:
    int r_;
    unsigned poly_;
    std::uint32_t e_, q_;
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace qcetd
