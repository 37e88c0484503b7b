#include "fgqc/spa.hpp"

#include <algorithm>
#include <cmath>

#include "fgqc/errors.hpp"

namespace fgqc {

TannerGraph::TannerGraph(const BlockRowParityCheck& h) {
    const size_t p = h.dim();
    const size_t b = h.block_count();
    checks_ = p;
    vars_ = p * b;

    std::vector<std::vector<uint32_t>> supports;
    supports.reserve(b);
    for (const auto& blk : h.blocks) supports.push_back(blk.first_row().support());

    check_off_.reserve(p + 1);
    check_off_.push_back(0);
    var_edges_.assign(vars_, {});
    // check r sees variable (i, (r + s) mod p) for every support position s
    // of block i; kept sorted per check
    for (size_t r = 0; r < p; ++r) {
        std::vector<uint32_t> vars_of_check;
        for (size_t i = 0; i < b; ++i)
            for (uint32_t s : supports[i]) vars_of_check.push_back(uint32_t(i * p + (r + s) % p));
        std::sort(vars_of_check.begin(), vars_of_check.end());
        for (uint32_t v : vars_of_check) {
            var_edges_[v].push_back(uint32_t(edge_var_.size()));
            edge_var_.push_back(v);
        }
        check_off_.push_back(uint32_t(edge_var_.size()));
    }
}

bool TannerGraph::syndrome_zero(const BitVec& hard) const {
    for (size_t c = 0; c < checks_; ++c) {
        bool parity = false;
        for (size_t e = check_off_[c]; e < check_off_[c + 1]; ++e) parity ^= hard.get(edge_var_[e]);
        if (parity) return false;
    }
    return true;
}

namespace {

// 2 atanh(tanh(a/2) tanh(b/2)), computed in the stable min/log1p form
inline double boxplus(double a, double b) {
    double sgn = (a < 0) == (b < 0) ? 1.0 : -1.0;
    double m = std::min(std::fabs(a), std::fabs(b));
    return sgn * m + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

}  // namespace

DecodeOutcome decode(const TannerGraph& graph, std::span<const double> llrs, const DecoderConfig& cfg) {
    const size_t n = graph.variable_count();
    const size_t ne = graph.edge_count();
    if (llrs.size() != n) throw LengthMismatch("LLR vector length does not match the code length");
    if (cfg.max_iterations < 1) throw BadParameter("max_iterations must be >= 1");

    const double clamp = cfg.llr_clamp;
    auto clip = [clamp](double v) { return std::clamp(v, -clamp, clamp); };

    DecodeOutcome out;
    out.bits = BitVec(n);
    auto take_hard = [&](auto&& total_of) {
        for (size_t v = 0; v < n; ++v) out.bits.set(v, total_of(v) < 0.0);
    };

    take_hard([&](size_t v) { return llrs[v]; });
    if (cfg.early_stop && graph.syndrome_zero(out.bits)) {
        out.converged = true;
        return out;
    }

    std::vector<double> v2c(ne), c2v(ne, 0.0);
    for (size_t e = 0; e < ne; ++e) v2c[e] = clip(llrs[graph.edge_variable(e)]);

    std::vector<double> fwd, bwd;
    std::vector<double> total(n);

    for (uint32_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        // check pass: forward/backward partial combinations leave one edge out
        for (size_t c = 0; c < graph.check_count(); ++c) {
            size_t b0 = graph.check_offset(c), b1 = graph.check_offset(c + 1);
            size_t d = b1 - b0;
            if (d == 0) continue;
            if (d == 1) {
                c2v[b0] = clamp;  // a lone variable must satisfy the check by itself
                continue;
            }
            fwd.assign(d, 0.0);
            bwd.assign(d, 0.0);
            fwd[0] = v2c[b0];
            for (size_t j = 1; j < d; ++j) fwd[j] = boxplus(fwd[j - 1], v2c[b0 + j]);
            bwd[d - 1] = v2c[b1 - 1];
            for (size_t j = d - 1; j-- > 0;) bwd[j] = boxplus(bwd[j + 1], v2c[b0 + j]);
            for (size_t j = 0; j < d; ++j) {
                double m;
                if (j == 0)
                    m = bwd[1];
                else if (j == d - 1)
                    m = fwd[d - 2];
                else
                    m = boxplus(fwd[j - 1], bwd[j + 1]);
                c2v[b0 + j] = m;
            }
        }

        // variable pass
        for (size_t v = 0; v < n; ++v) {
            double t = llrs[v];
            for (uint32_t e : graph.variable_edges(uint32_t(v))) t += c2v[e];
            total[v] = t;
            for (uint32_t e : graph.variable_edges(uint32_t(v))) v2c[e] = clip(t - c2v[e]);
        }

        take_hard([&](size_t v) { return total[v]; });
        out.iterations_used = iter;
        if (cfg.early_stop && graph.syndrome_zero(out.bits)) {
            out.converged = true;
            return out;
        }
    }
    if (!cfg.early_stop) out.converged = graph.syndrome_zero(out.bits);
    return out;
}

}  // namespace fgqc
