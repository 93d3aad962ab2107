#ifndef GBT_CHANNEL_HPP
#define GBT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "gbt/bits.hpp"

namespace gbt {

// SplitMix64: the documented RNG behind every channel model, so error traces
// reproduce bit-exactly across implementations from the 64-bit seed alone.
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
// Uniform doubles take the top 53 bits: (x >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    double next_unit();  // [0,1)

private:
    uint64_t state_;
};

enum class ChannelKind : uint8_t { Bsc, Burst, Poisson, Awgn };

struct ChannelModel {
    ChannelKind kind = ChannelKind::Bsc;
    double p = 0.0;           // Bsc flip probability
    double event_rate = 0.0;  // Burst: per-bit burst start probability
    int burst_len = 1;        // Burst: bits flipped per event
    double lambda_per_bit = 0.0;  // Poisson
    double ebn0_db = 0.0;     // Awgn
    uint64_t seed = 1;

    static ChannelModel bsc(double p, uint64_t seed);
    static ChannelModel burst(double event_rate, int burst_len, uint64_t seed);
    static ChannelModel poisson(double lambda_per_bit, uint64_t seed);
    static ChannelModel awgn(double ebn0_db, uint64_t seed);
};

struct ErrorTrace {
    std::vector<uint64_t> flipped_positions;  // strictly increasing
    uint64_t total_bits = 0;
};

// Hard-decision BPSK over AWGN: p = Q(sqrt(2*Eb/N0)) = erfc(sqrt(Eb/N0))/2.
double ebn0_to_p(double ebn0_db);

// The Poisson model draws the flip count per 120-bit block (frame-sized;
// a final partial block uses its true length), positions uniform in the
// block. Double flips cancel; the trace always equals the net input/output
// diff.
constexpr int kPoissonBlockBits = 120;

// Stateful channel: the RNG stream and any in-flight burst persist across
// apply() calls, so feeding one long buffer or many short ones produces the
// same flips.
class Channel {
public:
    explicit Channel(ChannelModel model);

    // flips bits in place; returned positions are relative to this call
    ErrorTrace apply(BitVec& bits);
    void reset();

    const ChannelModel& model() const { return model_; }

private:
    double flip_probability() const;
    ChannelModel model_;
    SplitMix64 rng_;
    std::vector<int> active_bursts_;  // remaining lengths of in-flight bursts
    int poisson_block_fill_ = 0;      // unused bits of the current block (none carried; kept 0)
};

ErrorTrace apply_channel(Channel& ch, BitVec& bits);

}  // namespace gbt

#endif
