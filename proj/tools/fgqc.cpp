// fgqc: key generation, file encryption, parameter exploration, and BER
// simulation for the geometry-based QC-LDPC joint encryption-encoding scheme.
//
// Exit codes: 0 success, 2 usage error, 3 data or key error, 4 decode failure.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgqc/analysis.hpp"
#include "fgqc/channel.hpp"
#include "fgqc/cipher.hpp"
#include "fgqc/errors.hpp"
#include "fgqc/key.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDataError = 3;
constexpr int kDecodeFailure = 4;

struct GeometryFlags {
    std::string kind = "eg";
    uint32_t q = 0;
    uint32_t m = 0;

    fgqc::GeometrySpec spec() const {
        if (kind != "eg" && kind != "pg") throw CLI::ValidationError("--geometry must be eg or pg");
        return {kind == "eg" ? fgqc::GeometryKind::EuclideanNoOrigin : fgqc::GeometryKind::Projective,
                m, q};
    }
};

std::array<uint8_t, 16> parse_seed_hex(const std::string& hex) {
    if (hex.size() != 32) throw fgqc::BadParameter("--seed-hex needs exactly 32 hex digits");
    std::array<uint8_t, 16> seed{};
    for (size_t i = 0; i < 16; ++i) {
        unsigned v = 0;
        auto nibble = [&](char c) -> unsigned {
            if (c >= '0' && c <= '9') return unsigned(c - '0');
            if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
            if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
            throw fgqc::BadParameter("--seed-hex contains a non-hex character");
        };
        v = nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]);
        seed[i] = uint8_t(v);
    }
    return seed;
}

std::string seed_to_hex(const std::array<uint8_t, 16>& seed) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (uint8_t b : seed) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fgqc::Error("cannot open " + path);
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw fgqc::Error("read failed on " + path);
    return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw fgqc::Error("cannot create " + path);
    out.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
    if (!out) throw fgqc::Error("write failed on " + path);
}

void print_code_summary(const fgqc::CodeParameters& cp, std::ostream& os) {
    os << "geometry: " << (cp.geometry.kind == fgqc::GeometryKind::EuclideanNoOrigin ? "eg" : "pg")
       << " q=" << cp.geometry.q << " m=" << cp.geometry.m << '\n';
    std::ostringstream line;
    line << "code: C(" << cp.length << ',' << cp.message_length << ")  p=" << cp.block_dim
         << "  classes=" << cp.class_total << "  rate=" << std::fixed << std::setprecision(4)
         << cp.rate << "  density=" << cp.density;
    os << line.str() << '\n';
}

int cmd_keygen(const GeometryFlags& geo, uint32_t n0, uint32_t l, const std::string& out_path,
               const std::string& seed_hex) {
    const fgqc::GeometrySpec spec = geo.spec();
    std::array<uint8_t, 16> entropy_seed{};
    if (seed_hex.empty()) {
        entropy_seed = fgqc::system_seed();
        std::cout << "entropy seed (save to reproduce): " << seed_to_hex(entropy_seed) << '\n';
    } else {
        entropy_seed = parse_seed_hex(seed_hex);
    }
    fgqc::SeededEntropy entropy(entropy_seed);
    const fgqc::SecretKey key = fgqc::keygen(spec, n0, l, entropy);
    fgqc::write_key_file(key, out_path);

    const fgqc::CodeParameters cp = fgqc::code_params(spec, n0);
    const fgqc::SecurityReport sec = fgqc::security_report(cp, l);
    const fgqc::KeySizeReport sizes = fgqc::key_size_report(spec, n0, l);
    print_code_summary(cp, std::cout);
    std::cout << std::fixed << std::setprecision(2)  //
              << "matrix space: 2^" << sec.log2_matrix_count << " (" << sizes.matrix_bits
              << " key bits)\n"
              << "permutation space: 2^" << sec.log2_permutation_count << " ("
              << sizes.permutation_bits << " key bits)\n"
              << "seed bits: " << sizes.seed_bits << '\n'
              << "total key bits: " << sizes.total_bits << '\n'
              << "key written to: " << out_path << '\n';
    return kOk;
}

int cmd_encrypt(const std::string& key_path, const std::string& in_path, const std::string& out_path,
                uint64_t counter_start) {
    const fgqc::SecretKey key = fgqc::read_key_file(key_path);
    const fgqc::JointCipher cipher(key);
    const std::vector<uint8_t> plain = read_file(in_path);
    const std::vector<fgqc::BitVec> blocks = fgqc::split_into_blocks(plain, cipher.message_length());

    std::vector<uint8_t> out;
    uint64_t counter = counter_start;
    for (const fgqc::BitVec& block : blocks) {
        const fgqc::CiphertextFrame frame = cipher.encrypt(block, counter++);
        const std::vector<uint8_t> bytes = fgqc::frame_to_bytes(frame);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    write_file(out_path, out);
    std::cout << "encrypted " << plain.size() << " bytes into " << blocks.size() << " frames\n";
    return kOk;
}

int cmd_decrypt(const std::string& key_path, const std::string& in_path, const std::string& out_path,
                uint32_t max_iterations) {
    const fgqc::SecretKey key = fgqc::read_key_file(key_path);
    const fgqc::JointCipher cipher(key);
    const std::vector<uint8_t> data = read_file(in_path);

    fgqc::DecoderConfig cfg;
    cfg.max_iterations = max_iterations;
    std::vector<fgqc::BitVec> blocks;
    size_t offset = 0;
    size_t frame_index = 0;
    while (offset < data.size()) {
        const fgqc::CiphertextFrame frame = fgqc::frame_from_bytes(data, offset);
        std::optional<fgqc::BitVec> message = cipher.decrypt(frame, cfg);
        if (!message) {
            std::cerr << "decode failure on frame " << frame_index << " (counter " << frame.counter
                      << ")\n";
            return kDecodeFailure;
        }
        blocks.push_back(std::move(*message));
        ++frame_index;
    }
    const std::vector<uint8_t> plain = fgqc::join_blocks(blocks);
    write_file(out_path, plain);
    std::cout << "decrypted " << frame_index << " frames into " << plain.size() << " bytes\n";
    return kOk;
}

int cmd_params(bool reproduce, bool search, const fgqc::SearchConstraints& constraints,
               const std::string& csv_path) {
    if (reproduce) {
        if (!fgqc::check_reference_tables(std::cout)) {
            std::cerr << "reference tables: mismatch\n";
            return kDataError;
        }
        std::cout << "Tables 3,4,5,6: all cells match\n";
        return kOk;
    }
    if (!search) throw CLI::ValidationError("params needs --reproduce-tables or --search");
    const std::vector<fgqc::CodeParameters> rows = fgqc::param_search(constraints);
    fgqc::print_code_table(rows, std::cout);
    std::cout << rows.size() << " parameter sets\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) throw fgqc::Error("cannot create " + csv_path);
        fgqc::write_code_csv(rows, csv);
    }
    return kOk;
}

int cmd_simulate(const std::string& key_path, const GeometryFlags& geo, uint32_t n0, uint32_t l,
                 const std::string& seed_hex, const std::vector<double>& snr, fgqc::SimConfig cfg,
                 const std::string& mode, const std::string& csv_path) {
    if (mode == "secure") {
        cfg.secure = true;
    } else if (mode != "coded") {
        throw CLI::ValidationError("--mode must be coded or secure");
    }

    std::optional<fgqc::SecretKey> key;
    if (!key_path.empty()) {
        key = fgqc::read_key_file(key_path);
    } else {
        if (geo.q == 0 || geo.m == 0 || n0 == 0)
            throw CLI::ValidationError("simulate needs --key or --geometry/--q/--m/--n0");
        const fgqc::GeometrySpec spec = geo.spec();
        std::array<uint8_t, 16> entropy_seed{};
        if (seed_hex.empty()) {
            entropy_seed = fgqc::system_seed();
            std::cout << "entropy seed (save to reproduce): " << seed_to_hex(entropy_seed) << '\n';
        } else {
            entropy_seed = parse_seed_hex(seed_hex);
        }
        fgqc::SeededEntropy entropy(entropy_seed);
        const uint32_t block_len = l == 0 ? n0 : l;  // any divisor of n works
        key = fgqc::keygen(spec, n0, block_len, entropy);
    }

    const fgqc::JointCipher cipher(*key);
    const fgqc::CodeParameters cp =
        fgqc::code_params(key->geometry, key->block_count);
    print_code_summary(cp, std::cout);
    std::cout << "mode: " << mode << ", frames per point: " << cfg.frames
              << ", decoder iterations: " << cfg.max_iterations << '\n';

    const fgqc::BerReport report = fgqc::run_ber(cipher, snr, cfg);
    report.print_table(std::cout);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) throw fgqc::Error("cannot create " + csv_path);
        report.write_csv(csv);
    }
    return kOk;
}

uint64_t default_frames() {
    if (const char* env = std::getenv("FGQC_FRAMES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "ignoring malformed FGQC_FRAMES value\n";
    }
    return 200;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint encryption-encoding with geometry-based QC-LDPC codes"};
    app.require_subcommand(1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "generate and store a secret key");
    GeometryFlags kg_geo;
    uint32_t kg_n0 = 0, kg_l = 26;
    std::string kg_out, kg_seed_hex;
    keygen->add_option("--geometry", kg_geo.kind, "eg or pg")->required();
    keygen->add_option("--q", kg_geo.q, "subfield order (prime power)")->required();
    keygen->add_option("--m", kg_geo.m, "geometry dimension")->required();
    keygen->add_option("--n0", kg_n0, "circulant blocks per row")->required();
    keygen->add_option("--l", kg_l, "permutation block length (divides n)");
    keygen->add_option("--out", kg_out, "key file path")->required();
    keygen->add_option("--seed-hex", kg_seed_hex, "32 hex digits of entropy seed");

    // encrypt / decrypt
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file into ciphertext frames");
    std::string enc_key, enc_in, enc_out;
    uint64_t enc_counter = 0;
    encrypt->add_option("--key", enc_key)->required();
    encrypt->add_option("--in", enc_in)->required();
    encrypt->add_option("--out", enc_out)->required();
    encrypt->add_option("--counter-start", enc_counter, "first frame counter (default 0)");

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a file of ciphertext frames");
    std::string dec_key, dec_in, dec_out;
    uint32_t dec_iters = 10;
    decrypt->add_option("--key", dec_key)->required();
    decrypt->add_option("--in", dec_in)->required();
    decrypt->add_option("--out", dec_out)->required();
    decrypt->add_option("--iters", dec_iters, "decoder iteration cap (default 10)");

    // params
    auto* params = app.add_subcommand("params", "closed-form parameter exploration");
    bool reproduce = false, search = false;
    fgqc::SearchConstraints constraints;
    std::string params_csv;
    params->add_flag("--reproduce-tables", reproduce, "check the published reference values");
    params->add_flag("--search", search, "enumerate parameter sets under the constraints");
    params->add_option("--n-min", constraints.n_min);
    params->add_option("--n-max", constraints.n_max);
    params->add_option("--rate-min", constraints.rate_min);
    params->add_option("--rate-max", constraints.rate_max);
    params->add_option("--density-max", constraints.density_max);
    params->add_option("--min-log2-nfg", constraints.min_log2_matrix_count,
                       "minimum log2 of the matrix key space");
    params->add_option("--n0-max", constraints.n0_max);
    params->add_option("--csv", params_csv, "also write the rows as CSV");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo error-rate measurement");
    std::string sim_key, sim_seed_hex, sim_mode = "coded", sim_csv;
    GeometryFlags sim_geo;
    uint32_t sim_n0 = 0, sim_l = 0;
    std::vector<double> sim_snr;
    fgqc::SimConfig sim_cfg;
    sim_cfg.frames = default_frames();
    simulate->add_option("--key", sim_key, "key file (alternative to --geometry...)");
    simulate->add_option("--geometry", sim_geo.kind, "eg or pg");
    simulate->add_option("--q", sim_geo.q);
    simulate->add_option("--m", sim_geo.m);
    simulate->add_option("--n0", sim_n0);
    simulate->add_option("--l", sim_l, "permutation block length (default n0)");
    simulate->add_option("--seed-hex", sim_seed_hex, "32 hex digits of keygen entropy");
    simulate->add_option("--snr", sim_snr, "Eb/N0 points in dB")->required()->delimiter(',');
    simulate->add_option("--frames", sim_cfg.frames, "frames per point (env FGQC_FRAMES)");
    simulate->add_option("--iters", sim_cfg.max_iterations, "decoder iteration cap");
    simulate->add_option("--mode", sim_mode, "coded or secure");
    simulate->add_option("--noise-seed", sim_cfg.noise_seed);
    simulate->add_option("--msg-seed", sim_cfg.message_seed);
    simulate->add_option("--csv", sim_csv, "write the report as CSV");

    try {
        app.parse(argc, argv);
        if (keygen->parsed()) return cmd_keygen(kg_geo, kg_n0, kg_l, kg_out, kg_seed_hex);
        if (encrypt->parsed()) return cmd_encrypt(enc_key, enc_in, enc_out, enc_counter);
        if (decrypt->parsed()) return cmd_decrypt(dec_key, dec_in, dec_out, dec_iters);
        if (params->parsed()) return cmd_params(reproduce, search, constraints, params_csv);
        if (simulate->parsed())
            return cmd_simulate(sim_key, sim_geo, sim_n0, sim_l, sim_seed_hex, sim_snr, sim_cfg,
                                sim_mode, sim_csv);
        return kUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const fgqc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}
