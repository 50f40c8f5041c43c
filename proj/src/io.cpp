#include "llr/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace llr {

namespace {

double parse_cell(const std::string& cell, long row, long col) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' ||
                           end[-1] == '\r')) --end;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("bad number in row " + std::to_string(row) +
                         ", column " + std::to_string(col) + ": '" + cell +
                         "'");
    return v;
}

}  // namespace

Matrix read_csv(std::istream& in, bool skip_header) {
    std::string line;
    if (skip_header) std::getline(in, line);
    std::vector<std::vector<double>> rows;
    long lineno = skip_header ? 1 : 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        long col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            row.push_back(parse_cell(cell, lineno, col));
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("row " + std::to_string(lineno) + " has " +
                             std::to_string(row.size()) +
                             " columns, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data rows");
    Matrix a(rows.size(), rows.front().size());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            a(i, j) = rows[i][j];
    return a;
}

Matrix read_csv_file(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_csv(in, skip_header);
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const Matrix& a) {
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            if (j) out << ',';
            out << format_real(a(i, j));
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const Matrix& a) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_csv(out, a);
}

namespace {

// Reads the next PGM header token, skipping whitespace and # comments.
std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) break;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw ParseError("truncated PGM header");
    return tok;
}

long pgm_int(std::istream& in) {
    std::string tok = pgm_token(in);
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad PGM header field '" + tok + "'");
    return v;
}

}  // namespace

Matrix read_pgm(std::istream& in) {
    std::string magic = pgm_token(in);
    if (magic != "P2" && magic != "P5")
        throw ParseError("unsupported PGM magic '" + magic + "'");
    long width = pgm_int(in);
    long height = pgm_int(in);
    long maxval = pgm_int(in);
    if (width < 1 || height < 1) throw ParseError("bad PGM dimensions");
    if (maxval < 1 || maxval > 65535)
        throw ParseError("PGM maxval " + std::to_string(maxval) +
                         " out of range");

    Matrix a(height, width);
    if (magic == "P2") {
        for (long i = 0; i < height; ++i)
            for (long j = 0; j < width; ++j)
                a(i, j) = static_cast<double>(pgm_int(in));
    } else {
        // Binary data starts right after the single whitespace ending maxval.
        bool two_bytes = maxval > 255;
        for (long i = 0; i < height; ++i)
            for (long j = 0; j < width; ++j) {
                int hi = in.get();
                if (hi == EOF) throw ParseError("truncated PGM data");
                long v = hi;
                if (two_bytes) {
                    int lo = in.get();
                    if (lo == EOF) throw ParseError("truncated PGM data");
                    v = (v << 8) | lo;  // big-endian per the format
                }
                a(i, j) = static_cast<double>(v);
            }
    }
    return a;
}

Matrix read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return read_pgm(in);
}

Matrix read_matrix_file(const std::string& path, bool skip_header) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".pgm")
        return read_pgm_file(path);
    return read_csv_file(path, skip_header);
}

void write_records_ndjson(std::ostream& out,
                          const std::vector<BenchRecord>& records) {
    for (const auto& r : records) {
        out << "{\"method\":\"" << r.method << "\""
            << ",\"n_rows\":" << r.n_rows
            << ",\"n_cols\":" << r.n_cols
            << ",\"target_rank\":" << r.target_rank
            << ",\"seed\":" << r.seed
            << ",\"elapsed_seconds\":" << format_real(r.elapsed_seconds)
            << ",\"kl_error\":" << format_real(r.kl_error)
            << ",\"ls_error\":" << format_real(r.ls_error)
            << ",\"phi_kl\":" << format_real(r.phi_kl)
            << ",\"phi_ls\":" << format_real(r.phi_ls) << "}\n";
    }
}

void write_records_csv(std::ostream& out,
                       const std::vector<BenchRecord>& records) {
    out << "method,n_rows,n_cols,target_rank,seed,elapsed_seconds,"
           "kl_error,ls_error,phi_kl,phi_ls\n";
    for (const auto& r : records) {
        out << r.method << ',' << r.n_rows << ',' << r.n_cols << ','
            << r.target_rank << ',' << r.seed << ','
            << format_real(r.elapsed_seconds) << ','
            << format_real(r.kl_error) << ',' << format_real(r.ls_error)
            << ',' << format_real(r.phi_kl) << ','
            << format_real(r.phi_ls) << '\n';
    }
}

}  // namespace llr
