#include "fgqc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fgqc/errors.hpp"
#include "fgqc/key.hpp"

namespace fgqc {

namespace {

constexpr GeometrySpec eg(uint32_t m, uint32_t q) {
    return GeometrySpec{GeometryKind::EuclideanNoOrigin, m, q};
}
constexpr GeometrySpec pg(uint32_t m, uint32_t q) {
    return GeometrySpec{GeometryKind::Projective, m, q};
}

// {geometry, n0, p, classes, n, R, r, log2 matrix count}
const ReferenceCodeRow kCodeRows[] = {
    {eg(6, 5), 4, 15624, 781, 62496, 0.75, 0.0003, 80.22},
    {eg(8, 3), 5, 6560, 1093, 32800, 0.80, 0.0005, 101.18},
    {eg(8, 2), 6, 255, 127, 1530, 0.8333, 0.0078, 81.73},
    {eg(6, 3), 6, 728, 121, 4368, 0.8333, 0.0041, 88.87},
    {eg(4, 7), 7, 2400, 57, 16800, 0.8571, 0.0029, 107.65},
    {eg(9, 2), 8, 511, 255, 4088, 0.8750, 0.0039, 126.78},
    {eg(10, 2), 9, 1023, 511, 9207, 0.8889, 0.0020, 160.86},
    {eg(10, 2), 15, 1023, 511, 15345, 0.9333, 0.0020, 274.64},
    {pg(6, 4), 5, 5461, 273, 27305, 0.8000, 0.0009, 90.07},
    {pg(8, 2), 6, 511, 85, 3066, 0.8333, 0.0059, 83.18},
    {pg(9, 2), 6, 1023, 170, 6138, 0.8333, 0.0029, 94.32},
    {pg(6, 3), 8, 1093, 91, 8744, 0.8750, 0.0037, 122.26},
    {pg(8, 2), 11, 511, 85, 5621, 0.9091, 0.0059, 159.50},
    {pg(5, 5), 13, 3906, 130, 50778, 0.9231, 0.0015, 233.57},
    {pg(7, 3), 15, 3280, 273, 49200, 0.9333, 0.0012, 284.34},
};

// {geometry, n0, l, matrix, permutation, seed, total, log2 spaces}
const ReferenceKeyCase kKeyCases[] = {
    {eg(6, 3), 6, 26, 92, 99, 128, 319, 88.87, 88.38},
    {eg(6, 3), 8, 52, 126, 249, 128, 503, 121.56, 225.58},
};

double log2_factorial(uint64_t l) { return std::lgamma(double(l) + 1.0) / std::log(2.0); }

bool close(double got, double expected, double tol) { return std::fabs(got - expected) <= tol; }

// tolerances for values published after rounding
constexpr double kTol4 = 5e-5 + 1e-9;   // 4 decimals
constexpr double kTol2 = 5e-3 + 1e-9;   // 2 decimals

const char* kind_name(GeometryKind kind) {
    return kind == GeometryKind::EuclideanNoOrigin ? "eg" : "pg";
}

}  // namespace

CodeParameters code_params(const GeometrySpec& spec, uint32_t block_count) {
    const uint64_t nc = class_count_of(spec);  // validates the spec
    if (block_count == 0 || block_count > nc) throw TooFewClasses("block count exceeds available classes");
    CodeParameters cp;
    cp.geometry = spec;
    cp.block_count = block_count;
    cp.block_dim = point_count_of(spec);
    cp.class_total = nc;
    cp.row_weight = line_weight_of(spec);
    cp.length = uint64_t(block_count) * cp.block_dim;
    cp.message_length = uint64_t(block_count - 1) * cp.block_dim;
    cp.rate = double(block_count - 1) / double(block_count);
    cp.density = double(cp.row_weight) / double(cp.block_dim);
    cp.log2_matrix_count = double(block_count - 1) * std::log2(double(cp.block_dim));
    for (uint32_t i = 0; i < block_count; ++i) cp.log2_matrix_count += std::log2(double(nc - i));
    return cp;
}

SecurityReport security_report(const CodeParameters& params, uint32_t l) {
    if (l < 2) throw BadParameter("permutation block length must be at least 2");
    const double n = double(params.length);
    const double k = double(params.message_length);
    const uint64_t redundancy = params.length - params.message_length;

    SecurityReport r;
    r.log2_matrix_count = params.log2_matrix_count;
    r.log2_permutation_count = log2_factorial(l);
    r.perturbation_exponent = redundancy;
    r.log2_cluster_workfactor =
        std::log2(k) + std::log2(n) + 2.0 * double(redundancy) + std::log2(double(redundancy));
    std::ostringstream expr;
    expr << params.message_length << " x " << params.length << " x 2^" << 2 * redundancy << " x "
         << redundancy;
    r.cluster_expression = expr.str();
    r.log2_voting_workfactor = k * double(redundancy);
    r.log2_voting_workfactor_alt = k * std::log2(double(redundancy));
    return r;
}

ComplexityReport complexity_report(const CodeParameters& params, double mean_iterations,
                                   uint32_t quant_bits) {
    if (mean_iterations < 1.0 || quant_bits < 1) throw BadParameter("complexity inputs out of range");
    const double n = double(params.length);
    const double redundancy = double(params.length - params.message_length);
    const double rho = double(params.row_weight);
    const double rate = params.rate;
    const double iters = mean_iterations;
    const double d = double(quant_bits);

    ComplexityReport r;
    r.mean_iterations = iters;
    r.quant_bits = quant_bits;
    r.enc_per_bit = (0.08 * n + 2.0) / rate;
    r.spa_ops = iters * n * (d * (8.0 * rho + 12.0 * rate - 11.0) + rho);
    // closed form of the per-bit decryption cost; at the default inputs
    // (10 iterations, 6 quantization bits) the coefficients are the published
    // 490, 720 and 110
    r.dec_per_bit = (2.0 + redundancy + double(params.block_count) * rho +
                     iters * (8.0 * d + 1.0) * rho + 12.0 * iters * d * rate - 11.0 * iters) /
                    rate;
    return r;
}

std::vector<CodeParameters> param_search(const SearchConstraints& constraints) {
    static constexpr uint32_t kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    std::vector<CodeParameters> hits;
    for (GeometryKind kind : {GeometryKind::EuclideanNoOrigin, GeometryKind::Projective}) {
        for (uint32_t q : kPrimePowers) {
            if (q > constraints.q_max) break;
            for (uint32_t m = 2; m <= constraints.m_max; ++m) {
                const GeometrySpec spec{kind, m, q};
                uint64_t p, nc;
                try {
                    p = point_count_of(spec);
                    nc = class_count_of(spec);
                } catch (const GeometryTooLarge&) {
                    break;  // still larger for bigger m
                }
                if (p > constraints.n_max) break;
                if (double(line_weight_of(spec)) / double(p) > constraints.density_max) continue;
                const uint32_t n0_cap = uint32_t(std::min<uint64_t>(nc, constraints.n0_max));
                for (uint32_t n0 = 2; n0 <= n0_cap; ++n0) {
                    if (uint64_t(n0) * p > constraints.n_max) break;
                    CodeParameters cp = code_params(spec, n0);
                    if (cp.length < constraints.n_min) continue;
                    if (cp.rate < constraints.rate_min || cp.rate > constraints.rate_max) continue;
                    if (cp.log2_matrix_count < constraints.min_log2_matrix_count) continue;
                    hits.push_back(std::move(cp));
                }
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const CodeParameters& a, const CodeParameters& b) {
        return std::tie(a.length, a.geometry.kind, a.geometry.q, a.geometry.m, a.block_count) <
               std::tie(b.length, b.geometry.kind, b.geometry.q, b.geometry.m, b.block_count);
    });
    return hits;
}

void print_code_table(std::span<const CodeParameters> rows, std::ostream& os) {
    os << "kind  n0   q   m       p  classes       n       R       r  log2(N)\n";
    for (const CodeParameters& cp : rows) {
        os << std::setw(4) << kind_name(cp.geometry.kind) << std::setw(4) << cp.block_count
           << std::setw(4) << cp.geometry.q << std::setw(4) << cp.geometry.m << std::setw(8)
           << cp.block_dim << std::setw(9) << cp.class_total << std::setw(8) << cp.length
           << std::fixed << std::setprecision(4) << std::setw(8) << cp.rate << std::setw(8)
           << cp.density << std::setprecision(2) << std::setw(9) << cp.log2_matrix_count << '\n';
        os.unsetf(std::ios::fixed);
    }
}

void write_code_csv(std::span<const CodeParameters> rows, std::ostream& os) {
    os << "kind,n0,q,m,p,classes,n,rate,density,log2_matrices\n";
    for (const CodeParameters& cp : rows) {
        os << kind_name(cp.geometry.kind) << ',' << cp.block_count << ',' << cp.geometry.q << ','
           << cp.geometry.m << ',' << cp.block_dim << ',' << cp.class_total << ',' << cp.length
           << ',' << std::setprecision(10) << cp.rate << ',' << cp.density << ','
           << cp.log2_matrix_count << '\n';
    }
}

std::span<const ReferenceCodeRow> reference_code_rows() { return kCodeRows; }
std::span<const ReferenceKeyCase> reference_key_cases() { return kKeyCases; }

bool check_reference_tables(std::ostream& os) {
    bool ok = true;
    auto fail = [&](const std::string& what) {
        os << "mismatch: " << what << '\n';
        ok = false;
    };

    for (const ReferenceCodeRow& row : reference_code_rows()) {
        std::ostringstream tag;
        tag << kind_name(row.geometry.kind) << " q=" << row.geometry.q << " m=" << row.geometry.m
            << " n0=" << row.block_count << ' ';
        const CodeParameters cp = code_params(row.geometry, row.block_count);
        if (cp.block_dim != row.block_dim) fail(tag.str() + "p");
        if (cp.class_total != row.class_total) fail(tag.str() + "classes");
        if (cp.length != row.length) fail(tag.str() + "n");
        if (!close(cp.rate, row.rate, kTol4)) fail(tag.str() + "rate");
        if (!close(cp.density, row.density, kTol4)) fail(tag.str() + "density");
        if (!close(cp.log2_matrix_count, row.log2_matrix_count, kTol2)) fail(tag.str() + "log2(N)");
    }

    for (const ReferenceKeyCase& kc : reference_key_cases()) {
        std::ostringstream tag;
        tag << "key case n0=" << kc.block_count << " l=" << kc.l << ' ';
        const KeySizeReport ks = key_size_report(kc.geometry, kc.block_count, kc.l);
        if (ks.matrix_bits != kc.matrix_bits) fail(tag.str() + "matrix bits");
        if (ks.permutation_bits != kc.permutation_bits) fail(tag.str() + "permutation bits");
        if (ks.seed_bits != kc.seed_bits) fail(tag.str() + "seed bits");
        if (ks.total_bits != kc.total_bits) fail(tag.str() + "total bits");
        const CodeParameters cp = code_params(kc.geometry, kc.block_count);
        if (!close(cp.log2_matrix_count, kc.log2_matrix_count, kTol2))
            fail(tag.str() + "log2 matrix space");
        if (!close(log2_factorial(kc.l), kc.log2_permutation_count, kTol2))
            fail(tag.str() + "log2 permutation space");
    }
    return ok;
}

}  // namespace fgqc
