// Command-line front end for libqcldpc. Construction, girth checks, minimal
// lifting degree search, alist export and BER simulation, all through the
// shared library's C API.
//
// Exit codes: 0 success, 1 usage/input error, 2 girth verification
// disagreement, 3 construction failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcldpc.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitConstruct = 3;

struct MatrixHandle {
    qcldpc_matrix* m = nullptr;
    ~MatrixHandle() { qcldpc_matrix_free(m); }
};

struct SimHandle {
    qcldpc_sim* s = nullptr;
    ~SimHandle() { qcldpc_sim_free(s); }
};

int fail(int rc, const std::string& what) {
    std::cerr << "error: " << what << ": " << qcldpc_strerror(rc) << "\n";
    if (rc == QCLDPC_EDISAGREE) return kExitDisagree;
    if (rc == QCLDPC_ECONSTRUCT) return kExitConstruct;
    return kExitUsage;
}

std::string girth_text(int girth, int exceeds) {
    return exceeds ? "GT" + std::to_string(girth) : std::to_string(girth);
}

json matrix_json(const qcldpc_matrix* m) {
    json rows = json::array();
    for (int r = 0; r < qcldpc_matrix_nc(m); ++r) {
        json row = json::array();
        for (int c = 0; c < qcldpc_matrix_nv(m); ++c) {
            int64_t v = 0;
            qcldpc_matrix_exponent(m, r, c, &v);
            row.push_back(v);
        }
        rows.push_back(row);
    }
    return json{{"nc", qcldpc_matrix_nc(m)},
                {"nv", qcldpc_matrix_nv(m)},
                {"n", qcldpc_matrix_lifting(m)},
                {"exponents", rows}};
}

void print_matrix(const qcldpc_matrix* m) {
    for (int r = 0; r < qcldpc_matrix_nc(m); ++r) {
        std::cout << " ";
        for (int c = 0; c < qcldpc_matrix_nv(m); ++c) {
            int64_t v = 0;
            qcldpc_matrix_exponent(m, r, c, &v);
            std::cout << " " << v;
        }
        std::cout << "\n";
    }
}

int run_construct(int girth, int nv, const std::string& strategy, std::uint64_t seed,
                  std::int64_t bound, const std::string& out_path, bool as_json) {
    MatrixHandle h;
    int rc = qcldpc_construct(girth, nv, strategy.c_str(), seed, bound, &h.m);
    if (rc != QCLDPC_OK) return fail(rc, "construct");
    if (!out_path.empty()) {
        rc = qcldpc_matrix_write(h.m, out_path.c_str());
        if (rc != QCLDPC_OK) return fail(rc, "write " + out_path);
    }
    int64_t min_n = 0;
    rc = qcldpc_min_lift(h.m, girth, &min_n);
    if (rc != QCLDPC_OK) return fail(rc, "min_lift");
    int g = 0, exceeds = 0;
    rc = qcldpc_girth(h.m, min_n, "sets", &g, &exceeds, nullptr);
    if (rc != QCLDPC_OK) return fail(rc, "girth");

    if (as_json) {
        json j = matrix_json(h.m);
        j["target_girth"] = girth;
        j["min_lift"] = min_n;
        j["girth_at_min_lift"] = girth_text(g, exceeds);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "constructed 4 x " << nv << " exponent matrix (free lift):\n";
        print_matrix(h.m);
        if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
        std::cout << "smallest N for girth " << girth << ": N = " << min_n << "\n";
        std::cout << "verified girth at N = " << min_n << ": girth " << girth_text(g, exceeds)
                  << "\n";
    }
    return kExitOk;
}

int run_girth(const std::string& in_path, std::int64_t n, const std::string& method,
              bool as_json) {
    MatrixHandle h;
    int rc = qcldpc_matrix_read(in_path.c_str(), &h.m);
    if (rc != QCLDPC_OK) return fail(rc, "read " + in_path);
    int g = 0, exceeds = 0;
    char* witness = nullptr;
    rc = qcldpc_girth(h.m, n, method.c_str(), &g, &exceeds, &witness);
    std::string wtext = witness ? witness : "";
    qcldpc_string_free(witness);
    if (rc != QCLDPC_OK) {
        if (rc == QCLDPC_EDISAGREE) std::cerr << "disagreement: " << wtext << "\n";
        return fail(rc, "girth " + in_path);
    }
    if (as_json) {
        json j{{"n", n != 0 ? n : qcldpc_matrix_lifting(h.m)},
               {"method", method},
               {"girth", girth_text(g, exceeds)}};
        if (!wtext.empty()) j["witness"] = wtext;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "girth " << girth_text(g, exceeds) << "\n";
        if (!wtext.empty()) std::cout << "witness: " << wtext << "\n";
    }
    return kExitOk;
}

int run_minlift(const std::string& in_path, int girth, bool as_json) {
    MatrixHandle h;
    int rc = qcldpc_matrix_read(in_path.c_str(), &h.m);
    if (rc != QCLDPC_OK) return fail(rc, "read " + in_path);
    int64_t n = 0;
    rc = qcldpc_min_lift(h.m, girth, &n);
    if (rc != QCLDPC_OK) return fail(rc, "min_lift " + in_path);
    if (as_json) {
        std::cout << json{{"girth", girth}, {"min_lift", n}}.dump(2) << "\n";
    } else {
        std::cout << "smallest N for girth " << girth << ": N = " << n << "\n";
    }
    return kExitOk;
}

int run_export(const std::string& in_path, std::int64_t n, const std::string& alist_path,
               bool as_json) {
    MatrixHandle h;
    int rc = qcldpc_matrix_read(in_path.c_str(), &h.m);
    if (rc != QCLDPC_OK) return fail(rc, "read " + in_path);
    rc = qcldpc_export_alist(h.m, n, alist_path.c_str());
    if (rc != QCLDPC_OK) return fail(rc, "export " + alist_path);
    int64_t eff = n != 0 ? n : qcldpc_matrix_lifting(h.m);
    int64_t vars = static_cast<int64_t>(qcldpc_matrix_nv(h.m)) * eff;
    int64_t checks = static_cast<int64_t>(qcldpc_matrix_nc(h.m)) * eff;
    if (as_json) {
        std::cout << json{{"alist", alist_path}, {"n", eff}, {"variables", vars}, {"checks", checks}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "wrote " << alist_path << " (" << vars << " variables, " << checks
                  << " checks)\n";
    }
    return kExitOk;
}

int run_simulate(const std::string& in_path, std::int64_t n, const std::string& ebno_list,
                 std::uint64_t seed, std::int64_t max_frames, std::int64_t min_errors,
                 int max_iters, const std::string& rate_mode, int workers,
                 const std::string& csv_path, bool as_json) {
    MatrixHandle h;
    int rc = qcldpc_matrix_read(in_path.c_str(), &h.m);
    if (rc != QCLDPC_OK) return fail(rc, "read " + in_path);

    std::vector<double> points;
    std::stringstream ss(ebno_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            points.push_back(std::stod(tok));
        } catch (const std::exception&) {
            std::cerr << "error: bad --ebno entry '" << tok << "'\n";
            return kExitUsage;
        }
    }
    if (points.empty()) {
        std::cerr << "error: --ebno list is empty\n";
        return kExitUsage;
    }

    qcldpc_sim_config cfg;
    qcldpc_sim_config_init(&cfg);
    cfg.ebno_db = points.data();
    cfg.ebno_count = points.size();
    cfg.seed = seed;
    cfg.max_frames = max_frames;
    cfg.min_bit_errors = min_errors;
    cfg.max_iterations = max_iters;
    cfg.rate_measured = rate_mode == "design" ? 0 : 1;
    cfg.workers = workers;

    SimHandle sim;
    rc = qcldpc_simulate(h.m, n, &cfg, &sim.s);
    if (rc != QCLDPC_OK) return fail(rc, "simulate " + in_path);

    char* csv = nullptr;
    qcldpc_sim_csv(sim.s, &csv);
    std::string csv_text = csv ? csv : "";
    qcldpc_string_free(csv);

    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::trunc);
        if (!f) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return kExitUsage;
        }
        f << csv_text;
    }

    int64_t block = 0, info = 0;
    double rate = 0;
    int g = 0, gx = 0;
    qcldpc_sim_meta(sim.s, &block, &info, &rate, &g, &gx);

    if (as_json) {
        json pts = json::array();
        for (size_t i = 0; i < qcldpc_sim_points(sim.s); ++i) {
            double ebno, ber, fer, iters;
            int64_t frames, bits, fes;
            qcldpc_sim_point(sim.s, i, &ebno, &frames, &bits, &fes, &ber, &fer, &iters);
            pts.push_back(json{{"ebno_db", ebno},
                               {"frames", frames},
                               {"bit_errors", bits},
                               {"frame_errors", fes},
                               {"ber", ber},
                               {"fer", fer},
                               {"avg_iters", iters}});
        }
        json j{{"n", block},      {"info_bits", info}, {"rate", rate},
               {"girth", girth_text(g, gx)}, {"points", pts}};
        if (!csv_path.empty()) j["csv"] = csv_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "code: n = " << block << ", info bits = " << info << ", rate = " << rate
                  << ", girth " << girth_text(g, gx) << "\n";
        std::cout << csv_text;
        if (!csv_path.empty()) std::cout << "wrote " << csv_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic LDPC code construction and evaluation"};
    app.require_subcommand(1);
    bool as_json = false;

    // construct
    auto* c = app.add_subcommand("construct", "build an exponent matrix of target girth");
    int girth = 6, nv = 6;
    std::string strategy = "smallest", out_path;
    std::uint64_t seed = 1;
    std::int64_t bound = 1000;
    c->add_option("--girth", girth, "target girth (6, 8, 10, 12)")->required();
    c->add_option("--nv", nv, "number of block columns")->required();
    c->add_option("--strategy", strategy, "smallest | maxplus | random")
        ->check(CLI::IsMember({"smallest", "maxplus", "random"}));
    c->add_option("--seed", seed, "random strategy seed");
    c->add_option("--bound", bound, "random strategy candidate bound");
    c->add_option("--out", out_path, "output qcexp file");
    c->add_flag("--json", as_json, "machine-readable output");

    // girth
    auto* g = app.add_subcommand("girth", "verify the girth of a stored matrix");
    std::string in_path, method = "sets";
    std::int64_t n = 0;
    g->add_option("--in", in_path, "qcexp file")->required();
    g->add_option("--n", n, "lifting degree (0: use the file's, or free)");
    g->add_option("--method", method, "sets | ch | bn | oracle | all")
        ->check(CLI::IsMember({"sets", "ch", "bn", "oracle", "all"}));
    g->add_flag("--json", as_json, "machine-readable output");

    // minlift
    auto* ml = app.add_subcommand("minlift", "smallest N achieving the target girth");
    std::string ml_in;
    int ml_girth = 6;
    ml->add_option("--in", ml_in, "qcexp file")->required();
    ml->add_option("--girth", ml_girth, "target girth (6, 8, 10, 12)")->required();
    ml->add_flag("--json", as_json, "machine-readable output");

    // export
    auto* ex = app.add_subcommand("export", "write the lifted matrix as alist");
    std::string ex_in, ex_alist;
    std::int64_t ex_n = 0;
    ex->add_option("--in", ex_in, "qcexp file")->required();
    ex->add_option("--n", ex_n, "lifting degree (0: use the file's)");
    ex->add_option("--alist", ex_alist, "output alist file")->required();
    ex->add_flag("--json", as_json, "machine-readable output");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo BER/FER over BPSK/AWGN");
    std::string sim_in, ebno_list, csv_path, rate_mode = "measured";
    std::int64_t sim_n = 0, max_frames = 1000000, min_errors = 100;
    std::uint64_t sim_seed = 1;
    int max_iters = 100, workers = 0;
    sim->add_option("--in", sim_in, "qcexp file")->required();
    sim->add_option("--n", sim_n, "lifting degree (0: use the file's)");
    sim->add_option("--ebno", ebno_list, "comma-separated Eb/N0 list in dB")->required();
    sim->add_option("--seed", sim_seed, "simulation seed");
    sim->add_option("--max-frames", max_frames, "frame cap per point");
    sim->add_option("--min-errors", min_errors, "bit-error target per point");
    sim->add_option("--max-iters", max_iters, "decoder iteration cap");
    sim->add_option("--rate", rate_mode, "Eb/N0 normalization: measured | design")
        ->check(CLI::IsMember({"measured", "design"}));
    sim->add_option("--workers", workers, "worker threads (0: auto)");
    sim->add_option("--csv", csv_path, "also write the CSV to this path");
    sim->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (c->parsed()) return run_construct(girth, nv, strategy, seed, bound, out_path, as_json);
    if (g->parsed()) return run_girth(in_path, n, method, as_json);
    if (ml->parsed()) return run_minlift(ml_in, ml_girth, as_json);
    if (ex->parsed()) return run_export(ex_in, ex_n, ex_alist, as_json);
    if (sim->parsed())
        return run_simulate(sim_in, sim_n, ebno_list, sim_seed, max_frames, min_errors, max_iters,
                            rate_mode, workers, csv_path, as_json);
    return kExitUsage;
}
