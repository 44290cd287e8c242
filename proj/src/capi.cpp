#include "qcldpc.h"

#include <cstring>
#include <new>
#include <string>

#include "qcldpc/construct.hpp"
#include "qcldpc/formats.hpp"
#include "qcldpc/girth.hpp"
#include "qcldpc/simulate.hpp"

using namespace qcldpc;

struct qcldpc_matrix {
    ExponentMatrix m;
    std::int64_t lifting;  // 0 = free
};

struct qcldpc_sim {
    SimResult r;
    std::string csv;
};

namespace {

char *dup_string(const std::string &s) {
    char *out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &) {
        return QCLDPC_EPARSE;
    } catch (const ConstructError &) {
        return QCLDPC_ECONSTRUCT;
    } catch (const std::invalid_argument &) {
        return QCLDPC_EINVAL;
    } catch (const std::runtime_error &) {
        return QCLDPC_EIO;
    } catch (...) {
        return QCLDPC_EINTERNAL;
    }
}

}  // namespace

const char *qcldpc_strerror(int code) {
    switch (code) {
        case QCLDPC_OK: return "ok";
        case QCLDPC_EINVAL: return "invalid argument";
        case QCLDPC_EIO: return "i/o failure";
        case QCLDPC_EPARSE: return "malformed input file";
        case QCLDPC_ECONSTRUCT: return "construction search failed";
        case QCLDPC_EDISAGREE: return "girth methods disagree";
        case QCLDPC_EINTERNAL: return "internal error";
        default: return "unknown error";
    }
}

void qcldpc_string_free(char *s) { delete[] s; }

int qcldpc_construct(int girth, int nv, const char *strategy, uint64_t seed, int64_t bound,
                     qcldpc_matrix **out) {
    if (!out || !strategy) return QCLDPC_EINVAL;
    *out = nullptr;
    return guarded([&] {
        Strategy s;
        std::string kind = strategy;
        if (kind == "smallest")
            s = Strategy::smallest();
        else if (kind == "maxplus")
            s = Strategy::max_plus();
        else if (kind == "random")
            s = Strategy::random(seed, bound);
        else
            return QCLDPC_EINVAL;
        *out = new qcldpc_matrix{construct(girth, nv, s), 0};
        return QCLDPC_OK;
    });
}

int qcldpc_matrix_from_exponents(int nc, int nv, const int64_t *row_major, int64_t n,
                                 qcldpc_matrix **out) {
    if (!out || !row_major || nc < 1 || nv < 1 || n < 0) return QCLDPC_EINVAL;
    *out = nullptr;
    return guarded([&] {
        ExponentMatrix e(nc, nv);
        for (int r = 0; r < nc; ++r)
            for (int c = 0; c < nv; ++c) {
                std::int64_t v = row_major[static_cast<std::size_t>(r) * nv + c];
                if (n > 0 && (v < 0 || v >= n)) return QCLDPC_EINVAL;
                e.at(r, c) = v;
            }
        *out = new qcldpc_matrix{std::move(e), n};
        return QCLDPC_OK;
    });
}

int qcldpc_matrix_read(const char *path, qcldpc_matrix **out) {
    if (!out || !path) return QCLDPC_EINVAL;
    *out = nullptr;
    return guarded([&] {
        ExponentFile f = load_qcexp(path);
        *out = new qcldpc_matrix{std::move(f.matrix), f.lifting};
        return QCLDPC_OK;
    });
}

int qcldpc_matrix_write(const qcldpc_matrix *m, const char *path) {
    if (!m || !path) return QCLDPC_EINVAL;
    return guarded([&] {
        save_qcexp(path, m->m, m->lifting);
        return QCLDPC_OK;
    });
}

int qcldpc_matrix_nc(const qcldpc_matrix *m) { return m ? m->m.row_count() : 0; }
int qcldpc_matrix_nv(const qcldpc_matrix *m) { return m ? m->m.col_count() : 0; }
int64_t qcldpc_matrix_lifting(const qcldpc_matrix *m) { return m ? m->lifting : 0; }

int qcldpc_matrix_exponent(const qcldpc_matrix *m, int r, int c, int64_t *out) {
    if (!m || !out || r < 0 || r >= m->m.row_count() || c < 0 || c >= m->m.col_count())
        return QCLDPC_EINVAL;
    *out = m->m.at(r, c);
    return QCLDPC_OK;
}

int qcldpc_matrix_reduce_mod(const qcldpc_matrix *m, int64_t n, qcldpc_matrix **out) {
    if (!m || !out || n < 1) return QCLDPC_EINVAL;
    *out = nullptr;
    return guarded([&] {
        *out = new qcldpc_matrix{m->m.reduced_mod(n), n};
        return QCLDPC_OK;
    });
}

void qcldpc_matrix_free(qcldpc_matrix *m) { delete m; }

namespace {

int effective_lifting(const qcldpc_matrix *m, int64_t n, int64_t *out) {
    if (n < 0) return QCLDPC_EINVAL;
    *out = n != 0 ? n : m->lifting;
    return QCLDPC_OK;
}

}  // namespace

int qcldpc_girth(const qcldpc_matrix *m, int64_t n, const char *method, int *girth, int *exceeds,
                 char **witness) {
    if (!m || !method || !girth || !exceeds) return QCLDPC_EINVAL;
    if (witness) *witness = nullptr;
    return guarded([&]() -> int {
        int64_t lift_n = 0;
        if (int rc = effective_lifting(m, n, &lift_n)) return rc;
        std::string kind = method;

        if (lift_n == 0) {
            // Free matrix: only the set conditions apply (over the integers).
            if (kind != "sets") return QCLDPC_EINVAL;
            auto deg = LiftingDegree::free();
            const LiftingDegree d = deg;
            int value = 4;
            std::optional<SetCollision> w;
            if ((w = check_distinct_g6(m->m, d)))
                value = 4;
            else if ((w = check_distinct_g8(m->m, d)))
                value = 6;
            else if ((w = check_distinct_g10(m->m, d)))
                value = 8;
            else if ((w = check_distinct_g12(m->m, d)))
                value = 10;
            else {
                // All free-lift conditions hold: girth > 10 is certified; the
                // 12 vs GT12 split only exists for a finite lift.
                *girth = 10;
                *exceeds = 1;
                return QCLDPC_OK;
            }
            *girth = value;
            *exceeds = 0;
            if (witness && w) *witness = dup_string(w->describe());
            return QCLDPC_OK;
        }

        auto fill = [&](const GirthReport &r) {
            *girth = r.verdict.value;
            *exceeds = r.verdict.exceeds ? 1 : 0;
            if (witness && !r.verdict.exceeds) {
                std::string w = r.witness_text();
                if (!w.empty()) *witness = dup_string(w);
            }
        };

        if (kind == "sets") {
            fill(girth_via_sets(m->m, lift_n));
        } else if (kind == "ch") {
            fill(girth_via_ch(m->m, lift_n));
        } else if (kind == "bn") {
            fill(girth_via_bn(m->m, lift_n));
        } else if (kind == "oracle") {
            fill(girth_via_oracle(m->m, lift_n));
        } else if (kind == "all") {
            GirthReport s = girth_via_sets(m->m, lift_n);
            GirthReport ch = girth_via_ch(m->m, lift_n);
            GirthReport bn = girth_via_bn(m->m, lift_n);
            GirthReport orc = girth_via_oracle(m->m, lift_n);
            if (!(s.verdict == ch.verdict) || !(s.verdict == bn.verdict) ||
                !(s.verdict == orc.verdict)) {
                if (witness) {
                    std::string msg = "sets=" + s.verdict.to_string() +
                                      " ch=" + ch.verdict.to_string() +
                                      " bn=" + bn.verdict.to_string() +
                                      " oracle=" + orc.verdict.to_string();
                    *witness = dup_string(msg);
                }
                return QCLDPC_EDISAGREE;
            }
            fill(s);
        } else {
            return QCLDPC_EINVAL;
        }
        return QCLDPC_OK;
    });
}

int qcldpc_min_lift(const qcldpc_matrix *m, int girth, int64_t *n_out) {
    if (!m || !n_out) return QCLDPC_EINVAL;
    return guarded([&] {
        *n_out = min_lift(m->m, girth);
        return QCLDPC_OK;
    });
}

int qcldpc_export_alist(const qcldpc_matrix *m, int64_t n, const char *path) {
    if (!m || !path) return QCLDPC_EINVAL;
    return guarded([&]() -> int {
        int64_t lift_n = 0;
        if (int rc = effective_lifting(m, n, &lift_n)) return rc;
        if (lift_n < 1) return QCLDPC_EINVAL;
        save_alist(path, lift(m->m, lift_n));
        return QCLDPC_OK;
    });
}

void qcldpc_sim_config_init(qcldpc_sim_config *cfg) {
    if (!cfg) return;
    cfg->ebno_db = nullptr;
    cfg->ebno_count = 0;
    cfg->max_iterations = 100;
    cfg->seed = 1;
    cfg->min_bit_errors = 100;
    cfg->max_frames = 1000000;
    cfg->rate_measured = 1;
    cfg->llr_clamp = 30.0;
    cfg->workers = 0;
    cfg->uncoded = 0;
    cfg->noiseless = 0;
}

int qcldpc_simulate(const qcldpc_matrix *m, int64_t n, const qcldpc_sim_config *cfg,
                    qcldpc_sim **out) {
    if (!m || !cfg || !out || !cfg->ebno_db || cfg->ebno_count == 0) return QCLDPC_EINVAL;
    *out = nullptr;
    return guarded([&]() -> int {
        int64_t lift_n = 0;
        if (int rc = effective_lifting(m, n, &lift_n)) return rc;
        if (lift_n < 1) return QCLDPC_EINVAL;
        SimConfig c;
        c.ebno_db.assign(cfg->ebno_db, cfg->ebno_db + cfg->ebno_count);
        c.max_iterations = cfg->max_iterations;
        c.seed = cfg->seed;
        c.min_bit_errors = cfg->min_bit_errors;
        c.max_frames = cfg->max_frames;
        c.rate_mode = cfg->rate_measured ? SimConfig::RateMode::measured
                                         : SimConfig::RateMode::design;
        c.llr_clamp = cfg->llr_clamp;
        c.workers = cfg->workers;
        c.uncoded = cfg->uncoded != 0;
        c.noiseless = cfg->noiseless != 0;
        auto *sim = new qcldpc_sim{run_ber(m->m, lift_n, c), {}};
        sim->csv = to_csv(sim->r);
        *out = sim;
        return QCLDPC_OK;
    });
}

size_t qcldpc_sim_points(const qcldpc_sim *s) { return s ? s->r.points.size() : 0; }

int qcldpc_sim_point(const qcldpc_sim *s, size_t idx, double *ebno_db, int64_t *frames,
                     int64_t *bit_errors, int64_t *frame_errors, double *ber, double *fer,
                     double *avg_iters) {
    if (!s || idx >= s->r.points.size()) return QCLDPC_EINVAL;
    const SimPoint &p = s->r.points[idx];
    if (ebno_db) *ebno_db = p.ebno_db;
    if (frames) *frames = p.frames;
    if (bit_errors) *bit_errors = p.bit_errors;
    if (frame_errors) *frame_errors = p.frame_errors;
    if (ber) *ber = p.ber;
    if (fer) *fer = p.fer;
    if (avg_iters) *avg_iters = p.avg_iterations;
    return QCLDPC_OK;
}

int qcldpc_sim_meta(const qcldpc_sim *s, int64_t *block_length, int64_t *info_bits,
                    double *rate_used, int *girth, int *girth_exceeds) {
    if (!s) return QCLDPC_EINVAL;
    if (block_length) *block_length = s->r.block_length;
    if (info_bits) *info_bits = s->r.info_bits;
    if (rate_used) *rate_used = s->r.rate_used;
    if (girth) *girth = s->r.girth;
    if (girth_exceeds) *girth_exceeds = s->r.girth_exceeds ? 1 : 0;
    return QCLDPC_OK;
}

int qcldpc_sim_csv(const qcldpc_sim *s, char **csv) {
    if (!s || !csv) return QCLDPC_EINVAL;
    *csv = dup_string(s->csv);
    return *csv ? QCLDPC_OK : QCLDPC_EINTERNAL;
}

void qcldpc_sim_free(qcldpc_sim *s) { delete s; }
