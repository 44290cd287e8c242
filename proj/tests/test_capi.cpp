#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qcldpc.h"

namespace {

struct Matrix {
    qcldpc_matrix* m = nullptr;
    ~Matrix() { qcldpc_matrix_free(m); }
};

const std::int64_t kG6Smallest[4][6] = {
    {0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5}, {0, 2, 1, 5, 7, 3}, {0, 3, 5, 1, 9, 2}};

const std::int64_t kG6MaxPlus[4][6] = {
    {0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5}, {0, 2, 4, 6, 8, 10}, {0, 3, 6, 9, 12, 15}};

}  // namespace

TEST_CASE("construct matches the reference matrix through the C API") {
    Matrix h;
    REQUIRE(qcldpc_construct(6, 6, "smallest", 0, 0, &h.m) == QCLDPC_OK);
    CHECK(qcldpc_matrix_nc(h.m) == 4);
    CHECK(qcldpc_matrix_nv(h.m) == 6);
    CHECK(qcldpc_matrix_lifting(h.m) == 0);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) {
            std::int64_t v = -1;
            REQUIRE(qcldpc_matrix_exponent(h.m, r, c, &v) == QCLDPC_OK);
            CHECK(v == kG6Smallest[r][c]);
        }
    Matrix bad1, bad2;
    CHECK(qcldpc_construct(6, 6, "banana", 0, 0, &bad1.m) == QCLDPC_EINVAL);
    CHECK(qcldpc_construct(7, 6, "smallest", 0, 0, &bad2.m) == QCLDPC_EINVAL);

    // A bound of 1 starves the second column's j slot.
    Matrix dead;
    CHECK(qcldpc_construct(6, 6, "random", 9, 1, &dead.m) == QCLDPC_ECONSTRUCT);
}

TEST_CASE("round trip through the qcexp file format") {
    Matrix h;
    REQUIRE(qcldpc_matrix_from_exponents(4, 6, &kG6MaxPlus[0][0], 0, &h.m) == QCLDPC_OK);
    const char* path = "capi_roundtrip.qcexp";
    REQUIRE(qcldpc_matrix_write(h.m, path) == QCLDPC_OK);

    Matrix back;
    REQUIRE(qcldpc_matrix_read(path, &back.m) == QCLDPC_OK);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) {
            std::int64_t a = 0, b = 0;
            qcldpc_matrix_exponent(h.m, r, c, &a);
            qcldpc_matrix_exponent(back.m, r, c, &b);
            CHECK(a == b);
        }
    std::remove(path);

    Matrix missing;
    CHECK(qcldpc_matrix_read("no-such-file.qcexp", &missing.m) == QCLDPC_EIO);
}

TEST_CASE("girth methods and witnesses") {
    Matrix h;
    REQUIRE(qcldpc_matrix_from_exponents(4, 6, &kG6MaxPlus[0][0], 0, &h.m) == QCLDPC_OK);

    for (const char* method : {"sets", "ch", "bn", "oracle", "all"}) {
        int g = 0, exceeds = -1;
        char* witness = nullptr;
        REQUIRE(qcldpc_girth(h.m, 7, method, &g, &exceeds, &witness) == QCLDPC_OK);
        CHECK(g == 6);
        CHECK(exceeds == 0);
        // Condition checkers report the violated condition; the brute-force
        // oracle has no witness to give.
        if (std::strcmp(method, "oracle") != 0) CHECK(witness != nullptr);
        qcldpc_string_free(witness);
    }

    int g = 0, exceeds = 0;
    CHECK(qcldpc_girth(h.m, 7, "wat", &g, &exceeds, nullptr) == QCLDPC_EINVAL);
    // Free-lift check (n = 0 on a free matrix) works for the set method.
    REQUIRE(qcldpc_girth(h.m, 0, "sets", &g, &exceeds, nullptr) == QCLDPC_OK);
    CHECK(g == 6);
    CHECK(qcldpc_girth(h.m, 0, "oracle", &g, &exceeds, nullptr) == QCLDPC_EINVAL);
}

TEST_CASE("minimal lift and reduction") {
    Matrix h;
    REQUIRE(qcldpc_matrix_from_exponents(4, 6, &kG6MaxPlus[0][0], 0, &h.m) == QCLDPC_OK);
    std::int64_t n = 0;
    REQUIRE(qcldpc_min_lift(h.m, 6, &n) == QCLDPC_OK);
    CHECK(n == 7);

    Matrix red;
    REQUIRE(qcldpc_matrix_reduce_mod(h.m, 7, &red.m) == QCLDPC_OK);
    CHECK(qcldpc_matrix_lifting(red.m) == 7);
    std::int64_t v = -1;
    qcldpc_matrix_exponent(red.m, 3, 5, &v);
    CHECK(v == 15 % 7);

    // A reduced matrix uses its stored lifting degree when n = 0.
    int g = 0, exceeds = 0;
    REQUIRE(qcldpc_girth(red.m, 0, "all", &g, &exceeds, nullptr) == QCLDPC_OK);
    CHECK(g == 6);
}

TEST_CASE("alist export through the C API") {
    Matrix h;
    REQUIRE(qcldpc_matrix_from_exponents(4, 6, &kG6Smallest[0][0], 0, &h.m) == QCLDPC_OK);
    const char* path = "capi_export.alist";
    REQUIRE(qcldpc_export_alist(h.m, 10, path) == QCLDPC_OK);

    std::FILE* f = std::fopen(path, "rb");
    REQUIRE(f != nullptr);
    char head[16] = {0};
    REQUIRE(std::fread(head, 1, 8, f) == 8);
    std::fclose(f);
    CHECK(std::strncmp(head, "60 40\n4 ", 8) == 0);
    std::remove(path);

    CHECK(qcldpc_export_alist(h.m, 0, path) == QCLDPC_EINVAL);  // free matrix, no N
}

TEST_CASE("simulation through the C API") {
    Matrix h;
    REQUIRE(qcldpc_matrix_from_exponents(4, 6, &kG6Smallest[0][0], 0, &h.m) == QCLDPC_OK);

    double points[1] = {2.0};
    qcldpc_sim_config cfg;
    qcldpc_sim_config_init(&cfg);
    cfg.ebno_db = points;
    cfg.ebno_count = 1;
    cfg.noiseless = 1;
    cfg.max_frames = 20;
    cfg.min_bit_errors = 1;

    qcldpc_sim* sim = nullptr;
    REQUIRE(qcldpc_simulate(h.m, 10, &cfg, &sim) == QCLDPC_OK);
    CHECK(qcldpc_sim_points(sim) == 1);

    double ebno = 0, ber = 1, fer = 1, iters = 1;
    std::int64_t frames = 0, bits = 0, fes = 0;
    REQUIRE(qcldpc_sim_point(sim, 0, &ebno, &frames, &bits, &fes, &ber, &fer, &iters) == QCLDPC_OK);
    CHECK(ebno == 2.0);
    CHECK(bits == 0);
    CHECK(ber == 0.0);

    std::int64_t block = 0, info = 0;
    double rate = 0;
    int g = 0, gx = 0;
    REQUIRE(qcldpc_sim_meta(sim, &block, &info, &rate, &g, &gx) == QCLDPC_OK);
    CHECK(block == 60);
    CHECK(g == 6);

    char* csv = nullptr;
    REQUIRE(qcldpc_sim_csv(sim, &csv) == QCLDPC_OK);
    CHECK(std::string(csv).find("ebno_db,") == 0);
    qcldpc_string_free(csv);
    qcldpc_sim_free(sim);

    CHECK(qcldpc_sim_point(nullptr, 0, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr,
                           nullptr) == QCLDPC_EINVAL);
    CHECK(qcldpc_simulate(h.m, 10, nullptr, &sim) == QCLDPC_EINVAL);
}

TEST_CASE("error strings") {
    CHECK(std::string(qcldpc_strerror(QCLDPC_OK)) == "ok");
    CHECK(std::string(qcldpc_strerror(QCLDPC_EPARSE)).find("malformed") != std::string::npos);
    CHECK(std::string(qcldpc_strerror(999)) == "unknown error");
}
