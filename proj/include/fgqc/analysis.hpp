#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fgqc/geometry.hpp"

namespace fgqc {

// derived constants of the code a geometry + block count induce
struct CodeParameters {
    GeometrySpec geometry{};
    uint32_t block_count = 0;    // n0
    uint64_t block_dim = 0;      // p
    uint64_t class_total = 0;    // available cyclic classes
    uint32_t row_weight = 0;     // ones per circulant row (line weight)
    uint64_t length = 0;         // n = n0 * p
    uint64_t message_length = 0; // k = (n0 - 1) * p
    double rate = 0.0;           // (n0 - 1) / n0
    double density = 0.0;        // ones fraction of the parity-check matrix
    double log2_matrix_count = 0.0;
};

// closed forms only -- safe for parameter sweeps of any size
CodeParameters code_params(const GeometrySpec& spec, uint32_t block_count);

// work-factor estimates for the two known chosen-plaintext attacks on
// perturbation-style secret-key code systems, plus the key-space sizes
struct SecurityReport {
    double log2_matrix_count = 0.0;
    double log2_permutation_count = 0.0;  // log2 l!
    uint64_t perturbation_exponent = 0;   // n - k; perturbation space is 2^(n-k)
    // clustering attack: k * n * N_e^2 * log2(N_e) with N_e = 2^(n-k)
    double log2_cluster_workfactor = 0.0;
    std::string cluster_expression;       // "k x n x 2^(2(n-k)) x (n-k)"
    // majority-voting attack: N_e^k.  Two published readings of the base
    // exist (2^(n-k) and n-k itself); both are reported.
    double log2_voting_workfactor = 0.0;      // k * (n - k)
    double log2_voting_workfactor_alt = 0.0;  // k * log2(n - k)
};
SecurityReport security_report(const CodeParameters& params, uint32_t l);

// binary-operation counts per information bit
struct ComplexityReport {
    double mean_iterations = 0.0;  // I_avg input
    uint32_t quant_bits = 0;       // soft-value quantization width input
    double enc_per_bit = 0.0;      // (0.08 n + 2) / R
    double spa_ops = 0.0;          // I_avg * n * (d (8 rho + 12 R - 11) + rho)
    double dec_per_bit = 0.0;
};
ComplexityReport complexity_report(const CodeParameters& params, double mean_iterations = 10.0,
                                   uint32_t quant_bits = 6);

struct SearchConstraints {
    uint64_t n_min = 0;
    uint64_t n_max = UINT64_MAX;
    double rate_min = 0.0;
    double rate_max = 1.0;
    double density_max = 1.0;
    double min_log2_matrix_count = 0.0;
    uint32_t n0_max = 64;
    uint32_t q_max = 16;
    uint32_t m_max = 12;
};

// every (kind, prime power q <= q_max, 2 <= m <= m_max, 2 <= n0) meeting all
// constraints, sorted by length
std::vector<CodeParameters> param_search(const SearchConstraints& constraints);

void print_code_table(std::span<const CodeParameters> rows, std::ostream& os);
void write_code_csv(std::span<const CodeParameters> rows, std::ostream& os);

// Published reference values the closed forms must reproduce: fifteen code
// parameter rows and two key-size breakdowns.  Checks print one line per
// mismatching cell and return whether everything matched.
struct ReferenceCodeRow {
    GeometrySpec geometry{};
    uint32_t block_count = 0;
    uint64_t block_dim = 0;
    uint64_t class_total = 0;
    uint64_t length = 0;
    double rate = 0.0;     // rounded to 4 decimals
    double density = 0.0;  // rounded to 4 decimals
    double log2_matrix_count = 0.0;  // rounded to 2 decimals
};
std::span<const ReferenceCodeRow> reference_code_rows();

struct ReferenceKeyCase {
    GeometrySpec geometry{};
    uint32_t block_count = 0;
    uint32_t l = 0;
    uint64_t matrix_bits = 0;
    uint64_t permutation_bits = 0;
    uint64_t seed_bits = 0;
    uint64_t total_bits = 0;
    double log2_matrix_count = 0.0;      // rounded to 2 decimals
    double log2_permutation_count = 0.0; // rounded to 2 decimals
};
std::span<const ReferenceKeyCase> reference_key_cases();

bool check_reference_tables(std::ostream& os);

}  // namespace fgqc
