#include "doctest.h"

#include <bit>
#include <cmath>
#include <limits>

#include "qdc/coding.hpp"

using namespace qdc;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double h2(double p) { return (p > 0 ? -p * std::log2(p) : 0.0) + (1 - p > 0 ? -(1 - p) * std::log2(1 - p) : 0.0); }
double d2(double q, double p) { return q * std::log2(q / p) + (1 - q) * std::log2((1 - q) / (1 - p)); }

double ideal_length(const SymbolSeq &x, const ProbDist &model) {
    double bits = 0.0;
    for (uint8_t s : x) bits -= std::log2(model[s]);
    return bits;
}

// Brute-force expectation oracle: per-string probability by explicit
// symbol-wise product over the big-endian bits.
double block_rate_oracle(const ProbDist &q, const BlockBijection &code) {
    const int n = code.n;
    double acc = 0.0;
    for (uint32_t x = 0; x < (1u << n); ++x) {
        double prob = 1.0;
        for (int i = n - 1; i >= 0; --i) prob *= q[(x >> i) & 1u];
        acc += prob * significant_length(code, x);
    }
    return acc / n;
}

} // namespace

TEST_CASE("shannon entropy") {
    CHECK(shannon_entropy(ProbDist({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shannon_entropy(ProbDist({1.0, 0.0})) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(shannon_entropy(ProbDist({0.9, 0.1})) == doctest::Approx(h2(0.9)).epsilon(1e-12));
    CHECK(h2(0.9) == doctest::Approx(0.4690).epsilon(1e-4));
}

TEST_CASE("relative entropy") {
    ProbDist q({0.9, 0.1});
    CHECK(relative_entropy(q, q) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(relative_entropy(q, ProbDist({0.75, 0.25})) == doctest::Approx(d2(0.9, 0.75)).epsilon(1e-12));
    CHECK(d2(0.9, 0.75) == doctest::Approx(0.1045).epsilon(1e-3));
    CHECK(relative_entropy(ProbDist({1.0, 0.0}), ProbDist({0.0, 1.0})) == kInf);
    CHECK_THROWS_AS(relative_entropy(q, ProbDist({1.0})), DimensionMismatch);
}

TEST_CASE("iid sampling") {
    auto zeros = sample_iid(ProbDist({1.0, 0.0}), 1000, 42);
    for (uint8_t s : zeros) CHECK(s == 0);

    auto fair = sample_iid(ProbDist({0.5, 0.5}), 100000, 42);
    size_t ones = 0;
    for (uint8_t s : fair) ones += s;
    const double freq = static_cast<double>(ones) / fair.size();
    CHECK(freq > 0.49);
    CHECK(freq < 0.51);

    CHECK(sample_iid(ProbDist({0.3, 0.7}), 5000, 7) == sample_iid(ProbDist({0.3, 0.7}), 5000, 7));
}

TEST_CASE("arithmetic coder on the all-zero block") {
    ProbDist fair({0.5, 0.5});
    for (size_t n : {1u, 8u, 64u, 1000u}) {
        SymbolSeq x(n, 0);
        auto bits = arithmetic_encode(x, fair);
        CHECK(bits.size() >= n);
        CHECK(bits.size() <= n + 2);
        CHECK(arithmetic_decode(bits, fair, n) == x);
    }
}

TEST_CASE("arithmetic coder pays the mismatch penalty") {
    const size_t n = 100000;
    ProbDist q({0.9, 0.1});
    ProbDist p({0.75, 0.25});
    auto x = sample_iid(q, n, 0x5eedULL);
    auto bits = arithmetic_encode(x, p);
    const double rate = static_cast<double>(bits.size()) / n;
    const double target = h2(0.9) + d2(0.9, 0.75); // 0.57353374935
    CHECK(std::abs(rate - target) < 0.02);
    CHECK(arithmetic_decode(bits, p, n) == x);
}

TEST_CASE("matched arithmetic coder approaches the entropy") {
    const size_t n = 100000;
    SplitMix64 rng(0x11aaULL);
    for (double p1 : {0.5, 0.25, 0.1}) {
        ProbDist p({1.0 - p1, p1});
        auto x = sample_iid(p, n, rng.next_u64());
        const double rate = static_cast<double>(arithmetic_encode(x, p).size()) / n;
        CHECK(std::abs(rate - h2(1.0 - p1)) < 0.02);
        CHECK(rate >= h2(1.0 - p1) - 0.02); // prefix code cannot beat entropy on average
    }
}

TEST_CASE("arithmetic roundtrip and length bound on seeded pairs") {
    SplitMix64 rng(0x2b2bULL);
    for (int rep = 0; rep < 500; ++rep) {
        const double p1 = 0.02 + 0.96 * rng.next_u01();
        const size_t n = 1 + static_cast<size_t>(rng.next_u64() % 2048);
        ProbDist model({1.0 - p1, p1});
        const double q1 = 0.02 + 0.96 * rng.next_u01();
        auto x = sample_iid(ProbDist({1.0 - q1, q1}), n, rng.next_u64());
        auto bits = arithmetic_encode(x, model);
        REQUIRE(arithmetic_decode(bits, model, n) == x);
        CHECK(static_cast<double>(bits.size()) <= ideal_length(x, model) + 2.0);
    }
}

TEST_CASE("arithmetic coder rejects unsupported symbols") {
    ProbDist degenerate({1.0 - 1e-13, 1e-13});
    SymbolSeq x = {0, 1, 0};
    CHECK_THROWS_AS(arithmetic_encode(x, degenerate), ModelSupportViolation);
    CHECK_NOTHROW(arithmetic_encode(SymbolSeq{0, 0, 0}, degenerate));
}

TEST_CASE("rank code ordering") {
    // Uniform model: every string ties, lexicographic order, identity map.
    auto uniform = rank_code_build(ProbDist({0.5, 0.5}), 6);
    for (uint32_t x = 0; x < 64; ++x) CHECK(uniform.forward[x] == x);

    // (0.9,0.1), n=2: probabilities 0.81, 0.09, 0.09, 0.01 -> 00,01,10,11.
    auto skew = rank_code_build(ProbDist({0.9, 0.1}), 2);
    CHECK(skew.forward[0b00] == 0);
    CHECK(skew.forward[0b01] == 1);
    CHECK(skew.forward[0b10] == 2);
    CHECK(skew.forward[0b11] == 3);

    // Flipped model ranks the all-ones string first.
    auto flip = rank_code_build(ProbDist({0.1, 0.9}), 2);
    CHECK(flip.forward[0b11] == 0);
    CHECK(flip.forward[0b01] == 1);
    CHECK(flip.forward[0b10] == 2);
    CHECK(flip.forward[0b00] == 3);

    CHECK_THROWS_AS(rank_code_build(ProbDist({0.5, 0.5}), 21), BlockTooLarge);
    CHECK_THROWS_AS(rank_code_build(ProbDist({0.5, 0.5}), 0), BlockTooLarge);
}

TEST_CASE("rank code is a bijection") {
    SplitMix64 rng(0x3c3cULL);
    for (int n : {1, 2, 5, 8, 12}) {
        const double p1 = 0.02 + 0.96 * rng.next_u01();
        auto code = rank_code_build(ProbDist({1.0 - p1, p1}), n);
        for (uint32_t x = 0; x < (1u << n); ++x) CHECK(code.inverse[code.forward[x]] == x);
    }
}

TEST_CASE("significant length tracks rank and obeys the Wyner bound") {
    SplitMix64 rng(0x4d4dULL);
    for (int rep = 0; rep < 5; ++rep) {
        const double p1 = 0.05 + 0.9 * rng.next_u01();
        ProbDist model({1.0 - p1, p1});
        const int n = 12;
        auto code = rank_code_build(model, n);
        int prev = -1;
        for (uint32_t rank = 0; rank < (1u << n); ++rank) {
            const int sl = significant_length(code, code.inverse[rank]);
            CHECK(sl >= prev);
            prev = sl;
        }
        for (uint32_t x = 0; x < (1u << n); ++x) {
            double neg_log = 0.0;
            for (int i = n - 1; i >= 0; --i) neg_log -= std::log2(model[(x >> i) & 1u]);
            CHECK(significant_length(code, x) <= neg_log + 1.0);
        }
    }
}

TEST_CASE("expected block rate") {
    // Uniform source and model at n=8: closed enumeration over 256 ranks.
    auto uniform = rank_code_build(ProbDist({0.5, 0.5}), 8);
    double closed = 0.0;
    for (uint32_t k = 0; k < 256; ++k) closed += std::bit_width(k);
    closed /= 256.0 * 8.0;
    CHECK(expected_block_rate(ProbDist({0.5, 0.5}), uniform) == doctest::Approx(closed).epsilon(1e-15));

    // Exhaustive sum matches the independent per-string oracle.
    ProbDist q({0.9, 0.1});
    ProbDist p({0.75, 0.25});
    auto code16 = rank_code_build(p, 16);
    const double rate = expected_block_rate(q, code16);
    CHECK(rate == doctest::Approx(block_rate_oracle(q, code16)).epsilon(1e-12));

    // One-to-one codes may undercut H(q); the Wyner window still bounds above.
    CHECK(rate >= 0.0);
    CHECK(rate <= h2(0.9) + d2(0.9, 0.75) + 2.0 / 16);

    // Point-mass source, model ranking the all-zero string first.
    auto skew = rank_code_build(ProbDist({0.9, 0.1}), 8);
    CHECK(expected_block_rate(ProbDist({1.0, 0.0}), skew) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("block rate approaches H plus D from below as n grows") {
    for (auto [q1, p1] : {std::pair{0.1, 0.25}, std::pair{0.2, 0.5}, std::pair{0.3, 0.3}}) {
        ProbDist q({1.0 - q1, q1});
        ProbDist p({1.0 - p1, p1});
        const double hd = h2(1.0 - q1) + (p1 == q1 ? 0.0 : d2(1.0 - q1, 1.0 - p1));
        double prev_gap = kInf;
        for (int n : {8, 12, 16}) {
            auto code = rank_code_build(p, n);
            const double rate = expected_block_rate(q, code);
            CHECK(rate <= hd + 2.0 / n);
            const double gap = std::abs(rate - hd);
            CHECK(gap <= prev_gap + 1e-12);
            prev_gap = gap;
        }
    }
}

TEST_CASE("lz78 parsing") {
    SymbolSeq z = {0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
    auto parsed = lz78_parse(z);
    CHECK(parsed.phrase_count == 6);
    // phrases 0 | 1 | 01 | 010 | 10 | 1
    std::vector<std::pair<size_t, size_t>> expect = {{0, 1}, {1, 1}, {2, 2}, {4, 3}, {7, 2}, {9, 1}};
    CHECK(parsed.phrases == expect);

    CHECK_THROWS_AS(lz78_parse(SymbolSeq{}), EmptyInput);
}

TEST_CASE("cross parsing") {
    auto z = sample_iid(ProbDist({0.5, 0.5}), 4096, 0xaceULL);
    auto self = cross_parse(z, z);
    CHECK(self.phrase_count == 1); // whole sequence matches itself
    CHECK(self.phrase_count <= lz78_parse(z).phrase_count);

    SymbolSeq ones(64, 1), zeros(64, 0);
    CHECK(cross_parse(ones, zeros).phrase_count == 64);

    CHECK_THROWS_AS(cross_parse(SymbolSeq{}, ones), EmptyInput);
}

TEST_CASE("parsers partition the input") {
    SplitMix64 rng(0x5e5eULL);
    for (int rep = 0; rep < 10; ++rep) {
        const double p1 = 0.1 + 0.8 * rng.next_u01();
        auto z = sample_iid(ProbDist({1.0 - p1, p1}), 2000, rng.next_u64());
        auto x = sample_iid(ProbDist({0.5, 0.5}), 2000, rng.next_u64());
        for (const auto &parsed : {lz78_parse(z), cross_parse(z, x)}) {
            size_t pos = 0;
            for (auto [start, len] : parsed.phrases) {
                CHECK(start == pos);
                CHECK(len >= 1);
                pos += len;
            }
            CHECK(pos == z.size());
        }
    }
}

TEST_CASE("zm estimate basics") {
    const size_t n = 1u << 13;
    auto z = sample_iid(ProbDist({0.5, 0.5}), n, 101);
    auto x = sample_iid(ProbDist({0.5, 0.5}), n, 202);
    CHECK(zm_estimate(z, x) < 0.15); // true D = 0

    CHECK_THROWS_AS(zm_estimate(SymbolSeq{0}, SymbolSeq{1}), EmptyInput);
    CHECK_THROWS_AS(zm_estimate(z, SymbolSeq{0, 1}), DimensionMismatch);
}
