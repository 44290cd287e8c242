#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcldpc/exponent_matrix.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// True code rate 1 - rank_GF2(H)/cols. For circulant lifts this exceeds the
/// design rate because the block rows are rank deficient.
Rational measured_rate(const SparseBinaryMatrix& h);

/// Deterministic counter-based stream: value depends only on the seed
/// sequence, never on call interleaving across threads.
class Splitmix64 {
public:
    explicit Splitmix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in (0, 1].
    double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
    /// Standard normal via Box-Muller.
    double gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Channel LLRs for BPSK over AWGN: bit 0 -> +1, bit 1 -> -1,
/// sigma^2 = 1/(2 R 10^(EbN0/10)), llr = 2 y / sigma^2.
std::vector<double> awgn_llr(std::span<const std::uint8_t> bits, double ebno_db, double rate,
                             Splitmix64& rng);

struct DecodeResult {
    std::vector<std::uint8_t> hard;
    int iterations = 0;
    bool syndrome_ok = false;
};

/// Flooding-schedule sum-product decoding with a syndrome stopping rule.
/// Messages are clamped to +-clamp; check updates use the exact tanh rule.
DecodeResult sum_product_decode(const SparseBinaryMatrix& h, std::span<const double> llr,
                                int max_iterations, double clamp = 30.0);

struct SimConfig {
    std::vector<double> ebno_db;
    int max_iterations = 100;
    std::uint64_t seed = 1;
    std::int64_t min_bit_errors = 100;  // per Eb/N0 point
    std::int64_t max_frames = 1000000;  // per Eb/N0 point
    enum class RateMode { design, measured } rate_mode = RateMode::measured;
    double llr_clamp = 30.0;
    int workers = 0;        // 0 = hardware concurrency (capped)
    bool uncoded = false;   // skip decoding; hard channel decisions at R = 1
    bool noiseless = false; // zero-noise override
};

struct SimPoint {
    double ebno_db = 0;
    std::int64_t frames = 0;
    std::int64_t bit_errors = 0;
    std::int64_t frame_errors = 0;
    double ber = 0;
    double fer = 0;
    double avg_iterations = 0;
};

struct SimResult {
    std::int64_t lifting = 0;
    std::int64_t block_length = 0;
    std::int64_t info_bits = 0;  // block_length - rank(H); BER denominator
    double rate_used = 0;        // rate in the Eb/N0 normalization
    int girth = 0;               // 0 if not computed
    bool girth_exceeds = false;
    std::vector<SimPoint> points;
};

/// Monte-Carlo BER/FER of the lifted code, all-zero codeword transmission.
/// Deterministic for a fixed config: every frame has its own RNG stream
/// derived from (seed, point, frame), so worker count cannot change results.
SimResult run_ber(const ExponentMatrix& e, std::int64_t n_lift, const SimConfig& cfg);

/// One CSV row per Eb/N0 point: ebno_db, frames, bit_errors, frame_errors,
/// ber, fer, avg_iters.
std::string to_csv(const SimResult& r);

}  // namespace qcldpc
