#include "fgqc/channel.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <random>

#include "fgqc/errors.hpp"

namespace fgqc {

namespace {

// splitmix64 finalizer; decorrelates nearby seeds
uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t frame_seed(uint64_t base, uint64_t frame) { return mix64(base ^ mix64(frame)); }

// Box-Muller over a fixed-width generator, so streams are identical across
// platforms (the distributions in <random> are not pinned by the standard)
class GaussianSource {
  public:
    explicit GaussianSource(uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = to_unit(rng_());
        if (u1 < 1e-300) u1 = 1e-300;  // keep log finite
        const double u2 = to_unit(rng_());
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    static double to_unit(uint64_t w) { return static_cast<double>(w >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

BitVec random_message(size_t k, uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitVec m(k);
    uint64_t word = 0;
    for (size_t i = 0; i < k; ++i) {
        if (i % 64 == 0) word = rng();
        m.set(i, (word >> (i % 64)) & 1);
    }
    return m;
}

}  // namespace

double ChannelSpec::noise_variance() const {
    if (code_rate <= 0.0 || code_rate > 1.0) throw BadParameter("code rate out of range");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return 1.0 / (2.0 * code_rate * ebn0);
}

std::vector<double> transmit(const BitVec& bits, const ChannelSpec& chan, uint64_t noise_seed) {
    // The two QPSK rails are independent unit-energy antipodal channels, so
    // the per-bit received statistic coincides with BPSK and one code path
    // serves both modulations.
    const double sigma2 = chan.noise_variance();
    const double sigma = std::sqrt(sigma2);
    GaussianSource noise(noise_seed);
    std::vector<double> llrs(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        const double x = bits.get(i) ? -1.0 : 1.0;
        const double y = x + sigma * noise.next();
        llrs[i] = 2.0 * y / sigma2;
    }
    return llrs;
}

double uncoded_bpsk_ber(double ebn0_db) {
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return 0.5 * std::erfc(std::sqrt(ebn0));
}

Interval wilson95(uint64_t successes, uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double nT = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nT;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nT;
    const double center = (phat + z2 / (2.0 * nT)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nT + z2 / (4.0 * nT * nT)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

BerReport run_ber(const JointCipher& system, std::span<const double> ebn0_list, const SimConfig& cfg) {
    if (cfg.frames == 0) throw BadParameter("frame count must be positive");
    const size_t n = system.code_length();
    const size_t k = system.message_length();
    const double rate = static_cast<double>(k) / static_cast<double>(n);

    DecoderConfig dcfg;
    dcfg.max_iterations = cfg.max_iterations;

    BerReport report;
    report.points.resize(ebn0_list.size());
    for (size_t s = 0; s < ebn0_list.size(); ++s) {
        report.points[s].ebn0_db = ebn0_list[s];
        report.points[s].frames = cfg.frames;
    }
    std::vector<uint64_t> iteration_sum(ebn0_list.size(), 0);

    for (uint64_t f = 0; f < cfg.frames; ++f) {
        const BitVec message = random_message(k, frame_seed(cfg.message_seed, f));
        const uint64_t counter = f;

        BitVec tx;
        BitVec perturbation;
        if (cfg.secure) {
            tx = system.encrypt(message, counter).payload;
            perturbation = system.perturbation(counter);
        } else {
            tx = system.encode(message);
        }

        // One noise seed per frame: every Eb/N0 point regenerates the same
        // standard normals and only the scale differs, so curves across
        // points (and across decoder configurations) are paired.
        const uint64_t seed = frame_seed(cfg.noise_seed, f);
        for (size_t s = 0; s < ebn0_list.size(); ++s) {
            const ChannelSpec chan{ebn0_list[s], rate, cfg.modulation};
            std::vector<double> llrs = transmit(tx, chan, seed);
            if (cfg.secure) {
                llrs = system.unpermute(llrs);
                for (size_t i : perturbation.support()) llrs[i] = -llrs[i];
            }
            const DecodeOutcome outcome = system.decode_codeword(llrs, dcfg);

            uint64_t bit_errors = 0;
            for (size_t i = 0; i < k; ++i) {
                bit_errors += outcome.bits.get(i) != message.get(i);
            }
            SnrPoint& pt = report.points[s];
            pt.bit_errors += bit_errors;
            pt.frame_errors += (!outcome.converged || bit_errors != 0) ? 1 : 0;
            iteration_sum[s] += outcome.iterations_used;
        }
    }

    for (size_t s = 0; s < report.points.size(); ++s) {
        SnrPoint& pt = report.points[s];
        pt.ber = static_cast<double>(pt.bit_errors) / (static_cast<double>(pt.frames) * static_cast<double>(k));
        pt.fer = static_cast<double>(pt.frame_errors) / static_cast<double>(pt.frames);
        pt.mean_iterations = static_cast<double>(iteration_sum[s]) / static_cast<double>(pt.frames);
    }
    return report;
}

void BerReport::print_table(std::ostream& os) const {
    os << "Eb/N0 (dB)    frames        BER        FER  mean iters\n";
    for (const SnrPoint& pt : points) {
        os << std::fixed << std::setprecision(2) << std::setw(10) << pt.ebn0_db << std::setw(10)
           << pt.frames << std::scientific << std::setprecision(3) << std::setw(11) << pt.ber
           << std::setw(11) << pt.fer << std::fixed << std::setprecision(2) << std::setw(12)
           << pt.mean_iterations << '\n';
    }
}

void BerReport::write_csv(std::ostream& os) const {
    os << "ebn0_db,frames,ber,fer,mean_iters\n";
    for (const SnrPoint& pt : points) {
        os << std::setprecision(10) << pt.ebn0_db << ',' << pt.frames << ',' << pt.ber << ','
           << pt.fer << ',' << pt.mean_iterations << '\n';
    }
}

}  // namespace fgqc
