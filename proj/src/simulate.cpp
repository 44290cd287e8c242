#include "qcldpc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "qcldpc/gf2.hpp"
#include "qcldpc/girth.hpp"

namespace qcldpc {

Rational measured_rate(const SparseBinaryMatrix& h) {
    std::int64_t rank = gf2_rank(h);
    return Rational{h.cols() - rank, h.cols()};
}

double Splitmix64::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::vector<double> awgn_llr(std::span<const std::uint8_t> bits, double ebno_db, double rate,
                             Splitmix64& rng) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("rate must be in (0, 1]");
    double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0));
    double sigma = std::sqrt(sigma2);
    std::vector<double> llr(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        double x = bits[i] ? -1.0 : 1.0;
        double y = x + sigma * rng.gaussian();
        llr[i] = 2.0 * y / sigma2;
    }
    return llr;
}

namespace {

// Edge-oriented view of H for message passing.
struct DecoderGraph {
    std::int64_t checks, vars, edges;
    std::vector<std::int32_t> chk_begin;  // checks+1 offsets into edge arrays
    std::vector<std::int32_t> edge_var;   // per edge, the variable
    std::vector<std::vector<std::int32_t>> var_edges;

    explicit DecoderGraph(const SparseBinaryMatrix& h)
        : checks(h.rows()), vars(h.cols()), edges(0),
          var_edges(static_cast<std::size_t>(h.cols())) {
        chk_begin.reserve(static_cast<std::size_t>(checks) + 1);
        chk_begin.push_back(0);
        for (std::int64_t r = 0; r < checks; ++r) {
            for (std::int64_t c : h.row(r)) {
                edge_var.push_back(static_cast<std::int32_t>(c));
                var_edges[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(edges));
                ++edges;
            }
            chk_begin.push_back(static_cast<std::int32_t>(edges));
        }
    }
};

double clamp_mag(double v, double m) { return v > m ? m : (v < -m ? -m : v); }

DecodeResult decode_on(const DecoderGraph& g, std::span<const double> llr, int max_iterations,
                       double clamp) {
    const std::size_t ne = static_cast<std::size_t>(g.edges);
    std::vector<double> var_to_chk(ne), chk_to_var(ne, 0.0);
    std::vector<double> total(static_cast<std::size_t>(g.vars));
    DecodeResult res;
    res.hard.assign(static_cast<std::size_t>(g.vars), 0);

    auto hard_decide = [&] {
        for (std::int64_t v = 0; v < g.vars; ++v)
            res.hard[static_cast<std::size_t>(v)] = total[static_cast<std::size_t>(v)] < 0 ? 1 : 0;
    };
    auto syndrome_ok = [&] {
        for (std::int64_t c = 0; c < g.checks; ++c) {
            unsigned parity = 0;
            for (std::int32_t e = g.chk_begin[static_cast<std::size_t>(c)];
                 e < g.chk_begin[static_cast<std::size_t>(c) + 1]; ++e)
                parity ^= res.hard[static_cast<std::size_t>(g.edge_var[static_cast<std::size_t>(e)])];
            if (parity) return false;
        }
        return true;
    };

    for (std::int64_t v = 0; v < g.vars; ++v) total[static_cast<std::size_t>(v)] = llr[static_cast<std::size_t>(v)];
    hard_decide();
    if (syndrome_ok()) {
        res.iterations = 0;
        res.syndrome_ok = true;
        return res;
    }

    for (std::size_t e = 0; e < ne; ++e)
        var_to_chk[e] = clamp_mag(llr[static_cast<std::size_t>(g.edge_var[e])], clamp);

    std::vector<double> fwd;  // forward tanh partial products per check
    for (int iter = 1; iter <= max_iterations; ++iter) {
        // Check updates, exact tanh rule via forward/backward partials.
        for (std::int64_t c = 0; c < g.checks; ++c) {
            std::int32_t b = g.chk_begin[static_cast<std::size_t>(c)];
            std::int32_t e_end = g.chk_begin[static_cast<std::size_t>(c) + 1];
            int deg = e_end - b;
            if (deg <= 0) continue;
            fwd.assign(static_cast<std::size_t>(deg), 1.0);
            double acc = 1.0;
            for (int t = 0; t < deg; ++t) {
                fwd[static_cast<std::size_t>(t)] = acc;
                acc *= std::tanh(0.5 * var_to_chk[static_cast<std::size_t>(b + t)]);
            }
            double back = 1.0;
            for (int t = deg - 1; t >= 0; --t) {
                double prod = fwd[static_cast<std::size_t>(t)] * back;
                prod = std::clamp(prod, -0.999999999999, 0.999999999999);
                chk_to_var[static_cast<std::size_t>(b + t)] =
                    clamp_mag(2.0 * std::atanh(prod), clamp);
                back *= std::tanh(0.5 * var_to_chk[static_cast<std::size_t>(b + t)]);
            }
        }
        // Variable updates.
        for (std::int64_t v = 0; v < g.vars; ++v) {
            double sum = llr[static_cast<std::size_t>(v)];
            for (std::int32_t e : g.var_edges[static_cast<std::size_t>(v)])
                sum += chk_to_var[static_cast<std::size_t>(e)];
            total[static_cast<std::size_t>(v)] = sum;
            for (std::int32_t e : g.var_edges[static_cast<std::size_t>(v)])
                var_to_chk[static_cast<std::size_t>(e)] =
                    clamp_mag(sum - chk_to_var[static_cast<std::size_t>(e)], clamp);
        }
        hard_decide();
        res.iterations = iter;
        if (syndrome_ok()) {
            res.syndrome_ok = true;
            return res;
        }
    }
    res.syndrome_ok = false;
    return res;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t point, std::uint64_t frame) {
    Splitmix64 s(seed ^ (point * 0x9e3779b97f4a7c15ull) ^ (frame * 0xd1b54a32d192ed03ull));
    s.next();
    return s.next();
}

}  // namespace

DecodeResult sum_product_decode(const SparseBinaryMatrix& h, std::span<const double> llr,
                                int max_iterations, double clamp) {
    if (static_cast<std::int64_t>(llr.size()) != h.cols())
        throw std::invalid_argument("llr length must equal the number of columns");
    DecoderGraph g(h);
    return decode_on(g, llr, max_iterations, clamp);
}

SimResult run_ber(const ExponentMatrix& e, std::int64_t n_lift, const SimConfig& cfg) {
    if (cfg.ebno_db.empty()) throw std::invalid_argument("no Eb/N0 points");
    if (cfg.max_frames < 1) throw std::invalid_argument("max_frames must be >= 1");

    SparseBinaryMatrix h = lift(e, n_lift);
    DecoderGraph graph(h);

    SimResult result;
    result.lifting = n_lift;
    result.block_length = h.cols();
    std::int64_t rank = gf2_rank(h);
    result.info_bits = h.cols() - rank;
    double design_rate = 1.0 - static_cast<double>(e.row_count()) / e.col_count();
    double measured = static_cast<double>(result.info_bits) / static_cast<double>(h.cols());
    result.rate_used = cfg.uncoded ? 1.0
                       : (cfg.rate_mode == SimConfig::RateMode::design ? design_rate : measured);
    if (result.rate_used <= 0.0)
        throw std::invalid_argument("nonpositive code rate");
    if (e.row_count() == 4) {
        GirthReport rep = girth(e, n_lift);
        result.girth = rep.verdict.value;
        result.girth_exceeds = rep.verdict.exceeds;
    }

    const std::int64_t n = h.cols();
    // BER denominator: info bits per frame (all bits in uncoded mode).
    const std::int64_t info = cfg.uncoded ? n : std::max<std::int64_t>(result.info_bits, 1);
    int workers = cfg.workers > 0
                      ? cfg.workers
                      : std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);

    for (std::size_t pt = 0; pt < cfg.ebno_db.size(); ++pt) {
        double ebno = cfg.ebno_db[pt];
        double sigma2 = 1.0 / (2.0 * result.rate_used * std::pow(10.0, ebno / 10.0));
        double sigma = std::sqrt(sigma2);

        std::int64_t frames = 0, bit_errors = 0, frame_errors = 0, total_iters = 0;
        const std::int64_t batch = 256;

        while (frames < cfg.max_frames && bit_errors < cfg.min_bit_errors) {
            std::int64_t count = std::min(batch, cfg.max_frames - frames);
            struct Tally {
                std::int64_t bits = 0, frames_bad = 0, iters = 0;
            };
            std::vector<Tally> tally(static_cast<std::size_t>(workers));
            auto work = [&](int w) {
                Tally& t = tally[static_cast<std::size_t>(w)];
                std::vector<double> llr(static_cast<std::size_t>(n));
                for (std::int64_t f = w; f < count; f += workers) {
                    Splitmix64 rng(mix_seed(cfg.seed, pt, static_cast<std::uint64_t>(frames + f)));
                    if (cfg.noiseless) {
                        std::fill(llr.begin(), llr.end(), 1e9);
                    } else {
                        for (std::int64_t b = 0; b < n; ++b) {
                            double y = 1.0 + sigma * rng.gaussian();
                            llr[static_cast<std::size_t>(b)] = 2.0 * y / sigma2;
                        }
                    }
                    if (cfg.uncoded) {
                        std::int64_t errs = 0;
                        for (std::int64_t b = 0; b < info; ++b)
                            if (llr[static_cast<std::size_t>(b)] < 0) ++errs;
                        bool any = false;
                        for (std::int64_t b = 0; b < n && !any; ++b)
                            any = llr[static_cast<std::size_t>(b)] < 0;
                        t.bits += errs;
                        t.frames_bad += any ? 1 : 0;
                        continue;
                    }
                    DecodeResult d = decode_on(graph, llr, cfg.max_iterations, cfg.llr_clamp);
                    std::int64_t errs = 0;
                    for (std::int64_t b = 0; b < info; ++b)
                        errs += d.hard[static_cast<std::size_t>(b)];
                    bool any = false;
                    for (std::int64_t b = 0; b < n && !any; ++b)
                        any = d.hard[static_cast<std::size_t>(b)] != 0;
                    t.bits += errs;
                    t.frames_bad += any ? 1 : 0;
                    t.iters += d.iterations;
                }
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
                for (auto& th : pool) th.join();
            }
            for (const auto& t : tally) {
                bit_errors += t.bits;
                frame_errors += t.frames_bad;
                total_iters += t.iters;
            }
            frames += count;
        }

        SimPoint p;
        p.ebno_db = ebno;
        p.frames = frames;
        p.bit_errors = bit_errors;
        p.frame_errors = frame_errors;
        p.ber = static_cast<double>(bit_errors) / (static_cast<double>(frames) * info);
        p.fer = static_cast<double>(frame_errors) / static_cast<double>(frames);
        p.avg_iterations = cfg.uncoded ? 0.0 : static_cast<double>(total_iters) / frames;
        result.points.push_back(p);
    }
    return result;
}

std::string to_csv(const SimResult& r) {
    std::string out = "ebno_db,frames,bit_errors,frame_errors,ber,fer,avg_iters\n";
    char line[256];
    for (const SimPoint& p : r.points) {
        std::snprintf(line, sizeof line, "%.6g,%lld,%lld,%lld,%.10g,%.10g,%.6g\n", p.ebno_db,
                      static_cast<long long>(p.frames), static_cast<long long>(p.bit_errors),
                      static_cast<long long>(p.frame_errors), p.ber, p.fer, p.avg_iterations);
        out += line;
    }
    return out;
}

}  // namespace qcldpc
