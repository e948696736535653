#include "camoe/convcode.hpp"

#include <array>
#include <limits>

#include "camoe/errors.hpp"

namespace camoe {

namespace {

constexpr int kNumStates = 64;  // 2^(K-1)
constexpr int kFlushBits = kConvConstraintLength - 1;

inline unsigned parity(unsigned x) {
    x ^= x >> 4;
    x ^= x >> 2;
    x ^= x >> 1;
    return x & 1u;
}

// state = last 6 input bits, newest in bit 5; register = (input << 6) | state
inline unsigned output_pair(unsigned state, unsigned bit) {
    const unsigned reg = (bit << 6) | state;
    return (parity(reg & kConvGenerator1) << 1) | parity(reg & kConvGenerator2);
}

inline unsigned next_state(unsigned state, unsigned bit) { return (bit << 5) | (state >> 1); }

}  // namespace

BitStream conv_encode(const BitStream& bits) {
    BitStream out;
    out.reserve(2 * (bits.size() + kFlushBits));
    unsigned state = 0;
    auto push = [&out, &state](unsigned bit) {
        const unsigned pair = output_pair(state, bit);
        out.push_back(static_cast<std::uint8_t>((pair >> 1) & 1));
        out.push_back(static_cast<std::uint8_t>(pair & 1));
        state = next_state(state, bit);
    };
    for (std::uint8_t b : bits) push(b & 1);
    for (int i = 0; i < kFlushBits; ++i) push(0);
    return out;
}

BitStream viterbi_decode(const BitStream& coded) {
    if (coded.size() % 2 != 0 || coded.size() < 2 * (kFlushBits + 0) ||
        coded.size() < 12) {
        throw InvalidArgumentError("viterbi_decode: coded length must be even and >= 12");
    }
    const std::size_t steps = coded.size() / 2;
    const std::size_t msg_len = steps - kFlushBits;

    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::array<int, kNumStates> metric{};
    metric.fill(kInf);
    metric[0] = 0;

    // survivors[t][s] = input bit taken into state s at step t, or -1
    std::vector<std::array<std::int8_t, kNumStates>> survivor_bit(steps);
    std::vector<std::array<std::uint8_t, kNumStates>> survivor_prev(steps);

    std::array<int, kNumStates> next_metric{};
    for (std::size_t t = 0; t < steps; ++t) {
        next_metric.fill(kInf);
        survivor_bit[t].fill(-1);
        const unsigned r1 = coded[2 * t] & 1;
        const unsigned r0 = coded[2 * t + 1] & 1;
        const bool tail = t >= msg_len;
        for (unsigned s = 0; s < kNumStates; ++s) {
            if (metric[s] >= kInf) continue;
            const unsigned max_bit = tail ? 0u : 1u;
            for (unsigned b = 0; b <= max_bit; ++b) {
                const unsigned pair = output_pair(s, b);
                const int cost = static_cast<int>(((pair >> 1) ^ r1) + ((pair & 1) ^ r0));
                const unsigned ns = next_state(s, b);
                const int cand = metric[s] + cost;
                // strict '<' keeps the earlier (0-branch / lower-state) survivor on ties:
                // states are scanned in increasing s and b order
                if (cand < next_metric[ns]) {
                    next_metric[ns] = cand;
                    survivor_bit[t][ns] = static_cast<std::int8_t>(b);
                    survivor_prev[t][ns] = static_cast<std::uint8_t>(s);
                }
            }
        }
        metric = next_metric;
    }

    BitStream decoded(steps, 0);
    unsigned state = 0;  // terminated trellis
    for (std::size_t t = steps; t-- > 0;) {
        const std::int8_t b = survivor_bit[t][state];
        if (b < 0) throw DecodeError("viterbi_decode: no surviving path");
        decoded[t] = static_cast<std::uint8_t>(b);
        state = survivor_prev[t][state];
    }
    decoded.resize(msg_len);
    return decoded;
}

}  // namespace camoe
