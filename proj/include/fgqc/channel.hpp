#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fgqc/cipher.hpp"

namespace fgqc {

enum class Modulation : uint8_t {
    Bpsk,
    Qpsk,  // two Gray-mapped rails; per-bit statistics identical to BPSK
};

struct ChannelSpec {
    double ebn0_db = 0.0;
    double code_rate = 1.0;
    Modulation modulation = Modulation::Qpsk;

    // sigma^2 = 1 / (2 R 10^(EbN0/10)) for unit-energy symbols
    double noise_variance() const;
};

// BPSK/QPSK over AWGN: bit 0 -> +1, bit 1 -> -1, y = x + noise,
// LLR_i = 2 y_i / sigma^2.  Deterministic for a given noise seed.
std::vector<double> transmit(const BitVec& bits, const ChannelSpec& chan, uint64_t noise_seed);

// uncoded BPSK error rate at the same Eb/N0: Q(sqrt(2 * 10^(EbN0/10)))
double uncoded_bpsk_ber(double ebn0_db);

struct SnrPoint {
    double ebn0_db = 0.0;
    uint64_t frames = 0;
    uint64_t bit_errors = 0;    // on message bits
    uint64_t frame_errors = 0;  // decoded message differs (or no convergence)
    double ber = 0.0;
    double fer = 0.0;
    double mean_iterations = 0.0;
};

struct BerReport {
    std::vector<SnrPoint> points;

    void print_table(std::ostream& os) const;
    void write_csv(std::ostream& os) const;  // ebn0_db, frames, ber, fer, mean_iters
};

// 95% Wilson score interval for a binomial proportion
struct Interval {
    double lo = 0.0, hi = 1.0;
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};
Interval wilson95(uint64_t successes, uint64_t trials);

struct SimConfig {
    uint64_t frames = 200;
    uint32_t max_iterations = 10;
    uint64_t noise_seed = 1;
    uint64_t message_seed = 2;
    bool secure = false;  // full encrypt/decrypt instead of plain encode/decode
    Modulation modulation = Modulation::Qpsk;
};

// Monte-Carlo sweep over Eb/N0 points.  Per-frame noise depends only on
// (noise_seed, frame index), so points share the same noise realizations
// scaled to their variance (common random numbers).
BerReport run_ber(const JointCipher& system, std::span<const double> ebn0_list, const SimConfig& cfg);

}  // namespace fgqc
