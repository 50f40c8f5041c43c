#ifndef LLR_IO_HPP
#define LLR_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "llr/bench.hpp"
#include "llr/matrix_core.hpp"

namespace llr {

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Reads a CSV of reals, one row per line, locale-independent (dot decimal
/// separator, scientific notation accepted). `skip_header` drops the first
/// line. Throws ParseError naming the offending cell.
Matrix read_csv(std::istream& in, bool skip_header = false);
Matrix read_csv_file(const std::string& path, bool skip_header = false);

/// Writes CSV with 17 significant digits for lossless round trips.
void write_csv(std::ostream& out, const Matrix& a);
void write_csv_file(const std::string& path, const Matrix& a);

/// Reads a PGM image (P2 ASCII or P5 binary, maxval <= 65535) as a matrix
/// of pixel values.
Matrix read_pgm(std::istream& in);
Matrix read_pgm_file(const std::string& path);

/// Loads a matrix by extension: .pgm via read_pgm, anything else as CSV.
Matrix read_matrix_file(const std::string& path, bool skip_header = false);

/// Formats one real with 17 significant digits.
std::string format_real(double v);

/// Newline-delimited JSON, one object per record, exact BenchRecord field
/// names.
void write_records_ndjson(std::ostream& out,
                          const std::vector<BenchRecord>& records);

/// CSV with the fixed column order
/// method,n_rows,n_cols,target_rank,seed,elapsed_seconds,kl_error,ls_error,phi_kl,phi_ls
void write_records_csv(std::ostream& out,
                       const std::vector<BenchRecord>& records);

}  // namespace llr

#endif  // LLR_IO_HPP
