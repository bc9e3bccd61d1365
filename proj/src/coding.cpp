#include "qdc/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qdc {

namespace {

void require_binary(const ProbDist &p, const char *where) {
    if (p.size() != 2) throw DimensionMismatch(std::string(where) + ": binary alphabet required");
}

} // namespace

SymbolSeq sample_iid(const ProbDist &p, size_t n, uint64_t seed) {
    require_binary(p, "sample_iid");
    SplitMix64 rng(seed);
    SymbolSeq out(n);
    const double p1 = p[1];
    for (size_t i = 0; i < n; ++i) out[i] = rng.next_u01() < p1 ? 1 : 0;
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic coder. 62-bit interval registers with the classic
// quarter-scaling renormalization and pending-bit carry handling; the
// symbol split uses a 32-bit quantized probability.
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kTop = 1ULL << 62;
constexpr uint64_t kHalf = 1ULL << 61;
constexpr uint64_t kQuarter = 1ULL << 60;
constexpr double kDenScale = 4294967296.0; // 2^32

uint64_t quantize_p1(const ProbDist &model) {
    const double p1 = model[1];
    auto c = static_cast<uint64_t>(std::llround(p1 * kDenScale));
    if (c < 1) c = 1;
    if (c > 0xFFFFFFFFULL) c = 0xFFFFFFFFULL;
    return c;
}

uint64_t split_width(uint64_t width, uint64_t c1) {
    auto r1 = static_cast<uint64_t>((static_cast<unsigned __int128>(width) * c1) >> 32);
    if (r1 < 1) r1 = 1;
    if (r1 > width - 1) r1 = width - 1;
    return r1;
}

struct BitSink {
    Bitstring bits;
    uint64_t pending = 0;
    void emit(uint8_t b) {
        bits.push_back(b);
        for (; pending > 0; --pending) bits.push_back(static_cast<uint8_t>(1 - b));
    }
};

} // namespace

Bitstring arithmetic_encode(const SymbolSeq &x, const ProbDist &model) {
    require_binary(model, "arithmetic_encode");
    for (uint8_t s : x) {
        if (s > 1) throw ValidationError("arithmetic_encode: symbol outside {0,1}");
        if (model[s] < 1e-12) throw ModelSupportViolation("arithmetic_encode: symbol has model probability < 1e-12");
    }
    const uint64_t c1 = quantize_p1(model);

    uint64_t low = 0, high = kTop - 1;
    BitSink out;
    for (uint8_t s : x) {
        const uint64_t width = high - low + 1;
        const uint64_t r1 = split_width(width, c1);
        const uint64_t r0 = width - r1;
        if (s == 0)
            high = low + r0 - 1;
        else
            low = low + r0;
        while (true) {
            if (high < kHalf) {
                out.emit(0);
            } else if (low >= kHalf) {
                out.emit(1);
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kHalf + kQuarter) {
                ++out.pending;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
    }
    ++out.pending;
    out.emit(low >= kQuarter ? 1 : 0);
    return out.bits;
}

SymbolSeq arithmetic_decode(const Bitstring &bits, const ProbDist &model, size_t n) {
    require_binary(model, "arithmetic_decode");
    const uint64_t c1 = quantize_p1(model);

    size_t pos = 0;
    auto next_bit = [&]() -> uint64_t { return pos < bits.size() ? bits[pos++] : 0; };

    uint64_t low = 0, high = kTop - 1, value = 0;
    for (int i = 0; i < 62; ++i) value = (value << 1) | next_bit();

    SymbolSeq out(n);
    for (size_t k = 0; k < n; ++k) {
        const uint64_t width = high - low + 1;
        const uint64_t r1 = split_width(width, c1);
        const uint64_t r0 = width - r1;
        const uint64_t threshold = low + r0;
        if (value < threshold) {
            out[k] = 0;
            high = threshold - 1;
        } else {
            out[k] = 1;
            low = threshold;
        }
        while (true) {
            if (high < kHalf) {
                // nothing to subtract
            } else if (low >= kHalf) {
                low -= kHalf;
                high -= kHalf;
                value -= kHalf;
            } else if (low >= kQuarter && high < kHalf + kQuarter) {
                low -= kQuarter;
                high -= kQuarter;
                value -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | next_bit();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank block code. The product probability of an n-bit string depends only
// on its popcount, so ranking by descending probability is ranking by
// popcount class (ascending when p1 < p0, descending when p1 > p0) with
// lexicographic order inside a class; exact equality of the two model
// weights makes every string tie, leaving plain lexicographic order.
// ---------------------------------------------------------------------------

BlockBijection rank_code_build(const ProbDist &model, int n) {
    require_binary(model, "rank_code_build");
    if (n < 1 || n > 20) throw BlockTooLarge("rank_code_build: block length must be in [1, 20]");
    const uint32_t size = 1u << n;
    BlockBijection code{n, std::vector<uint32_t>(size), std::vector<uint32_t>(size), model};

    if (model[0] == model[1]) {
        for (uint32_t x = 0; x < size; ++x) {
            code.forward[x] = x;
            code.inverse[x] = x;
        }
        return code;
    }

    std::vector<int> class_order(n + 1);
    for (int k = 0; k <= n; ++k) class_order[k] = (model[1] < model[0]) ? k : n - k;

    uint32_t rank = 0;
    for (int k : class_order) {
        if (k == 0) {
            code.forward[0] = rank;
            code.inverse[rank] = 0;
            ++rank;
            continue;
        }
        // Gosper's hack walks the popcount class in ascending order.
        uint32_t x = (1u << k) - 1;
        while (x < size) {
            code.forward[x] = rank;
            code.inverse[rank] = x;
            ++rank;
            const uint32_t c = x & (~x + 1);
            const uint32_t r = x + c;
            const uint32_t next = (((x ^ r) >> 2) / c) | r;
            if (next <= x) break; // class exhausted (overflow wrap)
            x = next;
        }
    }
    if (rank != size) throw ValidationError("rank_code_build: enumeration did not cover all strings");
    return code;
}

int significant_length(const BlockBijection &code, uint32_t x) {
    return static_cast<int>(std::bit_width(code.forward[x]));
}

double expected_block_rate(const ProbDist &q, const BlockBijection &code) {
    require_binary(q, "expected_block_rate");
    const int n = code.n;
    std::vector<double> pw0(n + 1, 1.0), pw1(n + 1, 1.0);
    for (int i = 1; i <= n; ++i) {
        pw0[i] = pw0[i - 1] * q[0];
        pw1[i] = pw1[i - 1] * q[1];
    }
    double acc = 0.0;
    const uint32_t size = 1u << n;
    for (uint32_t x = 0; x < size; ++x) {
        const int k = std::popcount(x);
        acc += pw0[n - k] * pw1[k] * static_cast<double>(std::bit_width(code.forward[x]));
    }
    return acc / n;
}

// ---------------------------------------------------------------------------
// LZ78 self-parsing and Ziv-Merhav cross-parsing.
// ---------------------------------------------------------------------------

ParseResult lz78_parse(const SymbolSeq &z) {
    if (z.empty()) throw EmptyInput("lz78_parse: empty sequence");
    struct Node {
        int32_t child[2] = {-1, -1};
    };
    std::vector<Node> trie(1);
    ParseResult out{0, {}};
    int32_t node = 0;
    size_t start = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        const uint8_t s = z[i];
        if (s > 1) throw ValidationError("lz78_parse: symbol outside {0,1}");
        const int32_t next = trie[node].child[s];
        if (next >= 0) {
            node = next;
        } else {
            trie[node].child[s] = static_cast<int32_t>(trie.size());
            trie.emplace_back();
            out.phrases.emplace_back(start, i - start + 1);
            node = 0;
            start = i + 1;
        }
    }
    if (start < z.size()) out.phrases.emplace_back(start, z.size() - start);
    out.phrase_count = out.phrases.size();
    return out;
}

namespace {

// Suffix automaton over {0,1}; accepts exactly the substrings of the build
// sequence, so a greedy walk from the root measures longest-match lengths.
class SuffixAutomaton {
  public:
    explicit SuffixAutomaton(const SymbolSeq &x) {
        nodes_.push_back({-1, 0, {-1, -1}});
        int last = 0;
        for (uint8_t ch : x) {
            if (ch > 1) throw ValidationError("cross_parse: symbol outside {0,1}");
            last = extend(last, ch);
        }
    }

    // Longest prefix of z[from..] that is a substring of the build sequence.
    size_t longest_match(const SymbolSeq &z, size_t from) const {
        int node = 0;
        size_t j = from;
        while (j < z.size()) {
            const int next = nodes_[node].next[z[j]];
            if (next < 0) break;
            node = next;
            ++j;
        }
        return j - from;
    }

  private:
    struct Node {
        int link;
        int len;
        int next[2];
    };
    std::vector<Node> nodes_;

    int extend(int last, uint8_t ch) {
        const int cur = static_cast<int>(nodes_.size());
        nodes_.push_back({-1, nodes_[last].len + 1, {-1, -1}});
        int p = last;
        while (p >= 0 && nodes_[p].next[ch] < 0) {
            nodes_[p].next[ch] = cur;
            p = nodes_[p].link;
        }
        if (p < 0) {
            nodes_[cur].link = 0;
        } else {
            const int q = nodes_[p].next[ch];
            if (nodes_[p].len + 1 == nodes_[q].len) {
                nodes_[cur].link = q;
            } else {
                const int clone = static_cast<int>(nodes_.size());
                nodes_.push_back(nodes_[q]);
                nodes_[clone].len = nodes_[p].len + 1;
                while (p >= 0 && nodes_[p].next[ch] == q) {
                    nodes_[p].next[ch] = clone;
                    p = nodes_[p].link;
                }
                nodes_[q].link = clone;
                nodes_[cur].link = clone;
            }
        }
        return cur;
    }
};

} // namespace

ParseResult cross_parse(const SymbolSeq &z, const SymbolSeq &x) {
    if (z.empty() || x.empty()) throw EmptyInput("cross_parse: empty sequence");
    SuffixAutomaton sam(x);
    ParseResult out{0, {}};
    size_t pos = 0;
    while (pos < z.size()) {
        size_t len = sam.longest_match(z, pos);
        if (len == 0) len = 1; // symbol never occurs in x
        out.phrases.emplace_back(pos, len);
        pos += len;
    }
    out.phrase_count = out.phrases.size();
    return out;
}

double zm_estimate(const SymbolSeq &z, const SymbolSeq &x) {
    if (z.size() != x.size()) throw DimensionMismatch("zm_estimate: sequence lengths differ");
    if (z.size() < 2) throw EmptyInput("zm_estimate: need length >= 2");
    const double n = static_cast<double>(z.size());
    const double cz = static_cast<double>(lz78_parse(z).phrase_count);
    const double czx = static_cast<double>(cross_parse(z, x).phrase_count);
    return (czx * std::log2(n) - cz * std::log2(cz)) / n;
}

} // namespace qdc
