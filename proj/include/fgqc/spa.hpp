#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fgqc/bitvec.hpp"
#include "fgqc/circulant.hpp"

namespace fgqc {

// Bipartite check/variable adjacency built from one block row of circulants:
// p checks, n = b*p variables, check degree b*rho, variable degree rho.
class TannerGraph {
  public:
    explicit TannerGraph(const BlockRowParityCheck& h);

    size_t check_count() const { return checks_; }
    size_t variable_count() const { return vars_; }
    size_t edge_count() const { return edge_var_.size(); }

    // edges of one check are contiguous: [check_offset(c), check_offset(c+1))
    size_t check_offset(size_t c) const { return check_off_[c]; }
    uint32_t edge_variable(size_t e) const { return edge_var_[e]; }
    // per-variable edge list (indices into the edge arrays)
    const std::vector<uint32_t>& variable_edges(uint32_t v) const { return var_edges_[v]; }

    bool syndrome_zero(const BitVec& hard) const;

  private:
    size_t checks_, vars_;
    std::vector<uint32_t> check_off_;
    std::vector<uint32_t> edge_var_;
    std::vector<std::vector<uint32_t>> var_edges_;
};

struct DecoderConfig {
    uint32_t max_iterations = 10;
    bool early_stop = true;
    double llr_clamp = 30.0;
};

struct DecodeOutcome {
    BitVec bits;           // hard decision, length n
    bool converged = false;  // syndrome reached zero
    uint32_t iterations_used = 0;
};

// log-domain sum-product decoding; positive LLR favors bit 0.  The hard
// decision of the raw channel values is checked before the first iteration,
// so a noiseless input converges with zero iterations used.
DecodeOutcome decode(const TannerGraph& graph, std::span<const double> llrs, const DecoderConfig& cfg = {});

}  // namespace fgqc
