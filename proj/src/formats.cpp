#include "qcldpc/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace qcldpc {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

// Whitespace tokenizer that tracks line numbers for diagnostics.
class Tokens {
public:
    Tokens(const std::string& text, std::string origin)
        : in_(text), origin_(std::move(origin)) {}

    std::int64_t next_int(const char* what) {
        std::string tok = next(what);
        try {
            std::size_t used = 0;
            std::int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            fail(origin_, line_, std::string("expected integer for ") + what + ", got '" + tok + "'");
        }
    }

    std::string next(const char* what) {
        skip_space();
        if (pos_ >= in_.size()) fail(origin_, line_, std::string("unexpected end of file, expected ") + what);
        std::size_t start = pos_;
        while (pos_ < in_.size() && !std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        return in_.substr(start, pos_ - start);
    }

    bool at_end() {
        skip_space();
        return pos_ >= in_.size();
    }

    int line() const { return line_; }
    const std::string& origin() const { return origin_; }

private:
    void skip_space() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) {
            if (in_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string in_;
    std::string origin_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string write_qcexp(const ExponentMatrix& e, std::int64_t lifting) {
    std::ostringstream out;
    out << "qcexp v1 " << e.row_count() << " " << e.col_count() << " " << lifting << "\n";
    for (int r = 0; r < e.row_count(); ++r) {
        for (int c = 0; c < e.col_count(); ++c) out << (c ? " " : "") << e.at(r, c);
        out << "\n";
    }
    return out.str();
}

std::string write_qcexp_file(const ExponentFile& f) { return write_qcexp(f.matrix, f.lifting); }

ExponentFile parse_qcexp(const std::string& text, const std::string& origin) {
    Tokens t(text, origin);
    std::string magic = t.next("header");
    if (magic != "qcexp") fail(origin, t.line(), "not a qcexp file (bad magic '" + magic + "')");
    std::string version = t.next("version");
    if (version != "v1") fail(origin, t.line(), "unsupported qcexp version '" + version + "'");
    std::int64_t nc = t.next_int("n_c");
    std::int64_t nv = t.next_int("n_v");
    std::int64_t lifting = t.next_int("N");
    if (nc < 1 || nc > 64 || nv < 1 || nv > 4096)
        fail(origin, t.line(), "bad dimensions " + std::to_string(nc) + " x " + std::to_string(nv));
    if (lifting < 0) fail(origin, t.line(), "negative lifting degree");
    ExponentMatrix e(static_cast<int>(nc), static_cast<int>(nv));
    for (int r = 0; r < nc; ++r)
        for (int c = 0; c < nv; ++c) e.at(r, c) = t.next_int("exponent");
    if (!t.at_end()) fail(origin, t.line(), "trailing content after exponent rows");
    if (lifting > 0) {
        for (int r = 0; r < nc; ++r)
            for (int c = 0; c < nv; ++c)
                if (e.at(r, c) < 0 || e.at(r, c) >= lifting)
                    fail(origin, t.line(), "exponent out of [0, N) for finite N");
    }
    return ExponentFile{std::move(e), lifting};
}

void save_qcexp(const std::string& path, const ExponentMatrix& e, std::int64_t lifting) {
    spill(path, write_qcexp(e, lifting));
}

ExponentFile load_qcexp(const std::string& path) { return parse_qcexp(slurp(path), path); }

std::string write_alist(const SparseBinaryMatrix& h) {
    const std::int64_t rows = h.rows(), cols = h.cols();
    std::vector<std::vector<std::int64_t>> col_rows(static_cast<std::size_t>(cols));
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c : h.row(r)) col_rows[static_cast<std::size_t>(c)].push_back(r);

    std::int64_t max_col_w = 0, max_row_w = 0;
    for (const auto& v : col_rows) max_col_w = std::max<std::int64_t>(max_col_w, v.size());
    for (std::int64_t r = 0; r < rows; ++r)
        max_row_w = std::max<std::int64_t>(max_row_w, h.row(r).size());

    std::ostringstream out;
    out << cols << " " << rows << "\n";
    out << max_col_w << " " << max_row_w << "\n";
    for (std::int64_t c = 0; c < cols; ++c)
        out << (c ? " " : "") << col_rows[static_cast<std::size_t>(c)].size();
    out << "\n";
    for (std::int64_t r = 0; r < rows; ++r) out << (r ? " " : "") << h.row(r).size();
    out << "\n";
    for (std::int64_t c = 0; c < cols; ++c) {
        const auto& v = col_rows[static_cast<std::size_t>(c)];
        for (std::int64_t i = 0; i < max_col_w; ++i)
            out << (i ? " " : "")
                << (i < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(i)] + 1 : 0);
        out << "\n";
    }
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto& v = h.row(r);
        for (std::int64_t i = 0; i < max_row_w; ++i)
            out << (i ? " " : "")
                << (i < static_cast<std::int64_t>(v.size()) ? v[static_cast<std::size_t>(i)] + 1 : 0);
        out << "\n";
    }
    return out.str();
}

SparseBinaryMatrix parse_alist(const std::string& text, const std::string& origin) {
    Tokens t(text, origin);
    std::int64_t cols = t.next_int("column count");
    std::int64_t rows = t.next_int("row count");
    if (cols < 1 || rows < 1) fail(origin, t.line(), "bad alist dimensions");
    std::int64_t max_col_w = t.next_int("max column weight");
    std::int64_t max_row_w = t.next_int("max row weight");
    if (max_col_w < 0 || max_col_w > rows || max_row_w < 0 || max_row_w > cols)
        fail(origin, t.line(), "bad alist weight bounds");

    std::vector<std::int64_t> col_w(static_cast<std::size_t>(cols));
    for (auto& w : col_w) {
        w = t.next_int("column weight");
        if (w < 0 || w > max_col_w) fail(origin, t.line(), "column weight exceeds its maximum");
    }
    std::vector<std::int64_t> row_w(static_cast<std::size_t>(rows));
    for (auto& w : row_w) {
        w = t.next_int("row weight");
        if (w < 0 || w > max_row_w) fail(origin, t.line(), "row weight exceeds its maximum");
    }

    std::vector<std::vector<std::int64_t>> col_rows(static_cast<std::size_t>(cols));
    for (std::int64_t c = 0; c < cols; ++c) {
        for (std::int64_t i = 0; i < max_col_w; ++i) {
            std::int64_t r = t.next_int("row index");
            if (i < col_w[static_cast<std::size_t>(c)]) {
                if (r < 1 || r > rows) fail(origin, t.line(), "row index out of range");
                col_rows[static_cast<std::size_t>(c)].push_back(r - 1);
            } else if (r != 0) {
                fail(origin, t.line(), "expected 0 padding");
            }
        }
    }

    SparseBinaryMatrix h(rows, cols);
    std::vector<std::vector<std::int64_t>> row_cols(static_cast<std::size_t>(rows));
    for (std::int64_t r = 0; r < rows; ++r) {
        for (std::int64_t i = 0; i < max_row_w; ++i) {
            std::int64_t c = t.next_int("column index");
            if (i < row_w[static_cast<std::size_t>(r)]) {
                if (c < 1 || c > cols) fail(origin, t.line(), "column index out of range");
                row_cols[static_cast<std::size_t>(r)].push_back(c - 1);
            } else if (c != 0) {
                fail(origin, t.line(), "expected 0 padding");
            }
        }
    }
    if (!t.at_end()) fail(origin, t.line(), "trailing content after alist index lists");

    for (std::int64_t r = 0; r < rows; ++r) {
        auto& v = row_cols[static_cast<std::size_t>(r)];
        std::sort(v.begin(), v.end());
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1]) fail(origin, t.line(), "duplicate entry in row list");
        for (std::int64_t c : v) h.push_entry(r, c);
    }
    // Cross-check the column lists against the row lists.
    std::vector<std::vector<std::int64_t>> check(static_cast<std::size_t>(cols));
    for (std::int64_t r = 0; r < rows; ++r)
        for (std::int64_t c : h.row(r)) check[static_cast<std::size_t>(c)].push_back(r);
    for (std::int64_t c = 0; c < cols; ++c) {
        auto v = col_rows[static_cast<std::size_t>(c)];
        std::sort(v.begin(), v.end());
        if (v != check[static_cast<std::size_t>(c)])
            fail(origin, t.line(), "column list disagrees with row lists at column " +
                                       std::to_string(c + 1));
    }
    return h;
}

void save_alist(const std::string& path, const SparseBinaryMatrix& h) {
    spill(path, write_alist(h));
}

SparseBinaryMatrix load_alist(const std::string& path) { return parse_alist(slurp(path), path); }

}  // namespace qcldpc
