#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <random>

#include "golden.hpp"
#include "qcldpc/formats.hpp"

using namespace qcldpc;

TEST_CASE("qcexp header and round trip") {
    auto text = write_qcexp(golden::g6_smallest(), 0);
    CHECK(text.rfind("qcexp v1 4 6 0\n", 0) == 0);

    auto parsed = parse_qcexp(text);
    CHECK(parsed.matrix == golden::g6_smallest());
    CHECK(parsed.lifting == 0);

    // Canonical files are fixed points of parse-then-serialize.
    CHECK(write_qcexp(parsed.matrix, parsed.lifting) == text);

    auto reduced = golden::g8_smallest().reduced_mod(85);
    auto text85 = write_qcexp(reduced, 85);
    auto parsed85 = parse_qcexp(text85);
    CHECK(parsed85.matrix == reduced);
    CHECK(parsed85.lifting == 85);
}

TEST_CASE("qcexp parse diagnostics carry the origin and line") {
    auto expect_error = [](const std::string& text, const char* needle) {
        try {
            parse_qcexp(text, "bad.qcexp");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            std::string msg = e.what();
            CHECK(msg.find("bad.qcexp:") == 0);
            CHECK(msg.find(needle) != std::string::npos);
        }
    };
    expect_error("qcexp v2 4 6 0\n0 0\n", "version");
    expect_error("nope v1 4 6 0\n", "magic");
    expect_error("qcexp v1 4 6 0\n1 2 3\n", "unexpected end of file");
    expect_error("qcexp v1 4 2 0\n0 0\n0 x\n0 0\n0 0\n", "expected integer");
    expect_error("qcexp v1 4 2 5\n0 0\n0 9\n0 1\n0 2\n", "out of [0, N)");
    expect_error("qcexp v1 0 2 0\n", "bad dimensions");
    std::string trailing = write_qcexp(golden::g6_smallest(), 0) + "7\n";
    expect_error(trailing, "trailing");
}

TEST_CASE("alist export of a lifted code") {
    auto h = lift(golden::g6_smallest(), 10);
    auto text = write_alist(h);
    CHECK(text.rfind("60 40\n4 6\n", 0) == 0);

    auto back = parse_alist(text);
    CHECK(back == h);
}

TEST_CASE("alist round trip on random lifts") {
    std::mt19937_64 rng(64);
    for (int t = 0; t < 12; ++t) {
        int nv = 4 + static_cast<int>(rng() % 3);
        std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 17);
        ExponentMatrix e(4, nv);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < nv; ++c)
                e.at(r, c) = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
        auto h = lift(e, n);
        CHECK(parse_alist(write_alist(h)) == h);
    }
}

TEST_CASE("alist accepts zero padding for irregular lists") {
    // 2x3 matrix with unequal row weights; padding appears in the column and
    // row sections.
    SparseBinaryMatrix h(2, 3);
    h.push_entry(0, 0);
    h.push_entry(0, 2);
    h.push_entry(1, 0);
    h.push_entry(1, 1);
    h.push_entry(1, 2);
    auto text = write_alist(h);
    CHECK(parse_alist(text) == h);
    CHECK(text.find(" 0") != std::string::npos);  // padded column list
}

TEST_CASE("alist parse diagnostics") {
    auto expect_error = [](const std::string& text, const char* needle) {
        try {
            parse_alist(text, "bad.alist");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("0 4\n", "bad alist dimensions");
    expect_error("2 2\n3 2\n1 1\n1 1\n1\n2\n1 2\n1 2\n", "weight bounds");
    expect_error("2 2\n1 2\n1 1\n1 1\n5\n2\n1 2\n1 2\n", "row index out of range");
    // Column list inconsistent with row lists.
    expect_error("2 2\n1 2\n1 1\n2 2\n1\n1\n1 2\n1 2\n", "disagrees");
}

TEST_CASE("file save and load") {
    std::string dir = "qcldpc_fmt_test.tmp";
    save_qcexp(dir + ".qcexp", golden::g8_smallest(), 0);
    auto f = load_qcexp(dir + ".qcexp");
    CHECK(f.matrix == golden::g8_smallest());

    auto h = lift(golden::g6_smallest(), 4);
    save_alist(dir + ".alist", h);
    CHECK(load_alist(dir + ".alist") == h);

    CHECK_THROWS(load_qcexp("does-not-exist.qcexp"));
    std::remove((dir + ".qcexp").c_str());
    std::remove((dir + ".alist").c_str());
}
