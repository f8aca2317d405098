#include <catch2/catch_amalgamated.hpp>

#include "qcetd/bench.hpp"

using namespace qcetd;

TEST_CASE("zero trials give zero counters") {
    Field f(3);
    Rng rng(1);
    auto inst = make_random_full_rank_instance(f, 2, 4, rng);
    auto ops = count_encode(inst, EncodeMode::etd, 0, 7);
    REQUIRE(ops.total().total() == 0);
}

TEST_CASE("measured counts match the closed forms and scale with trials") {
    Field f(3);
    Rng rng(2);
    auto inst = make_random_full_rank_instance(f, 2, 4, rng);  // e=7, k=2, n=4
    auto one = count_encode(inst, EncodeMode::etd, 1, 3);
    REQUIRE(one.step1.multiplications == 7u * 2 * 2);       // e k (n-k)
    REQUIRE(one.step1.additions == 7u * 1 * 2);             // e (k-1)(n-k)
    auto ten = count_encode(inst, EncodeMode::etd, 10, 3);
    REQUIRE(ten.step1.multiplications == 10 * one.step1.multiplications);
    REQUIRE(ten.transform.multiplications == 10 * one.transform.multiplications);

    auto trad = count_encode(inst, EncodeMode::traditional, 1, 3);
    REQUIRE(trad.traditional.multiplications == 49u * 2 * 2);  // e^2 k (n-k)
}

TEST_CASE("counts are message independent across seeds") {
    Field f(3);
    Rng rng(4);
    auto inst = make_random_full_rank_instance(f, 2, 4, rng);
    auto base = count_encode(inst, EncodeMode::etd, 1, 0);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        REQUIRE(count_encode(inst, EncodeMode::etd, 1, seed) == base);
}

TEST_CASE("binary step 1 measures zero multiplications") {
    Field f(3);
    Rng rng(5);
    std::optional<CodeInstance> found;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
        auto H = random_circulant_array(f, 2, 4, rng, true);
        auto inst = make_instance(f, H);
        if (inst.binary && inst.profile.K == 14) found = std::move(inst);
    }
    REQUIRE(found.has_value());
    CodeInstance& inst = *found;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto ops = count_encode(inst, EncodeMode::etd_binary, 1, seed);
        REQUIRE(ops.step1.multiplications == 0);
        REQUIRE(ops.step1.additions == 7u * 2 * 2);
    }
}

TEST_CASE("analytic report reproduces the ratio R = e") {
    for (long e : {7L, 15L, 63L}) {
        int r = 0;
        while ((1L << r) - 1 != e) ++r;
        auto rep = analytic_report(e, 8, 4, r);
        REQUIRE(rep.ratio_step1 == Catch::Approx(static_cast<double>(e)).epsilon(0));
        REQUIRE(rep.traditional_symbol_ops == e * e * 4 * 4);
        REQUIRE(rep.etd_step1_symbol_ops == e * 4 * 4);
        REQUIRE(rep.memory_symbols == e * 4 * 4);
    }
}

TEST_CASE("ceil log2 convention") {
    REQUIRE(ceil_log2(7) == 3);
    REQUIRE(ceil_log2(8) == 3);
    REQUIRE(ceil_log2(63) == 6);
    REQUIRE(ceil_log2(511) == 9);
    REQUIRE(ceil_log2(1) == 0);
}

TEST_CASE("reference ratios are echoed for the known parameter sets") {
    auto rep1 = analytic_report(63, 65, 34, 6);
    REQUIRE(rep1.reference_nonbinary.has_value());
    REQUIRE(rep1.reference_nonbinary->ratio == Catch::Approx(63.0));
    // cost percentage: 1/R within 0.01 percentage points of the reported 1.59
    double pct = 100.0 / rep1.ratio_step1;
    REQUIRE(std::abs(pct - 1.59) < 0.01);
    REQUIRE(rep1.reference_binary.has_value());
    REQUIRE(rep1.reference_binary->ratio == Catch::Approx(10.05));

    auto rep3 = analytic_report(511, 16, 14, 9);
    REQUIRE(rep3.reference_binary.has_value());
    REQUIRE(rep3.reference_binary->ratio == Catch::Approx(56.78));
    REQUIRE(rep3.ratio_binary_step1_only == Catch::Approx(511.0 / 9.0));
    REQUIRE(!rep3.reference_nonbinary.has_value());

    REQUIRE(!analytic_report(7, 4, 2, 3).reference_binary.has_value());
}

TEST_CASE("analytic binary quotient uses the three step formulas") {
    auto rep = analytic_report(63, 8, 4, 6);
    long long s1 = 63LL * 4 * 4 * 6;
    long long s2 = 8LL * 63 * (36 + 6);
    long long s3 = 8LL * 36 * 63 * 6;
    REQUIRE(rep.binary_step1_bits == s1);
    REQUIRE(rep.binary_step2_bits == s2);
    REQUIRE(rep.binary_step3_bits == s3);
    REQUIRE(rep.ratio_binary ==
            Catch::Approx(static_cast<double>(63LL * 63 * 4 * 4) / static_cast<double>(s1 + s2 + s3)));
}

TEST_CASE("measured traditional to etd ratio approaches e on a larger instance") {
    Field f(6);
    Rng rng(6);
    auto inst = make_random_full_rank_instance(f, 4, 8, rng);  // e=63, k=4, n=8
    auto etd = count_encode(inst, EncodeMode::etd, 1, 1);
    auto trad = count_encode(inst, EncodeMode::traditional, 1, 1);
    double ratio = static_cast<double>(trad.traditional.multiplications) /
                   static_cast<double>(etd.step1.multiplications);
    REQUIRE(std::abs(ratio - 63.0) / 63.0 < 0.05);
}
