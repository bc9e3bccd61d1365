#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdc/prob.hpp"
#include "qdc/rng.hpp"

namespace qdc {

// Binary source sequence; each element is 0 or 1.
using SymbolSeq = std::vector<uint8_t>;
// Variable-length codeword bits.
using Bitstring = std::vector<uint8_t>;

// Deterministic i.i.d. sampling: symbol 1 with probability p[1].
SymbolSeq sample_iid(const ProbDist &p, size_t n, uint64_t seed);

// Static-model binary arithmetic coder. Model probabilities are quantized
// to 32-bit denominators; the per-sequence codeword length satisfies
// |encode(x)| <= -log2 Pr_model(x) + 2. decode needs the symbol count.
Bitstring arithmetic_encode(const SymbolSeq &x, const ProbDist &model);
SymbolSeq arithmetic_decode(const Bitstring &bits, const ProbDist &model, size_t n);

// Reversible block code on n-bit strings: forward(x) is the big-endian
// encoding of x's rank under descending model probability (ties broken
// lexicographically). Strings are identified with integers big-endian,
// so bit i of the index is symbol x_{n-i}.
struct BlockBijection {
    int n;
    std::vector<uint32_t> forward;
    std::vector<uint32_t> inverse;
    ProbDist model;
};

BlockBijection rank_code_build(const ProbDist &model, int n);

// Codeword size after stripping leading zeros: n minus the leading zero
// count of forward(x), i.e. bit_width of the rank.
int significant_length(const BlockBijection &code, uint32_t x);

// (1/n) sum over all 2^n strings of q^n(x) * significant_length(forward(x)).
double expected_block_rate(const ProbDist &q, const BlockBijection &code);

struct ParseResult {
    size_t phrase_count;
    std::vector<std::pair<size_t, size_t>> phrases; // (start, length) spans
};

// LZ78 incremental parsing into shortest never-seen phrases; a trailing
// phrase that duplicates a dictionary entry still counts.
ParseResult lz78_parse(const SymbolSeq &z);

// Sequential parsing of z into longest substrings occurring in x. A symbol
// absent from x forms a bare one-symbol phrase.
ParseResult cross_parse(const SymbolSeq &z, const SymbolSeq &x);

// Ziv-Merhav relative-entropy estimate
//   (1/n) [ c(z|x) log2 n  -  c(z) log2 c(z) ].
double zm_estimate(const SymbolSeq &z, const SymbolSeq &x);

} // namespace qdc
