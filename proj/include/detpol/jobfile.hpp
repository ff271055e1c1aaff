// Job description files: a small line-oriented format that names a ring, a
// presentation matrix or an ideal, and the knobs a computation needs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detpol/error.hpp"
#include "detpol/matrix.hpp"
#include "detpol/poly.hpp"
#include "detpol/ring.hpp"
#include "detpol/rng.hpp"

namespace detpol {

// Parsed contents of a job/1 or ideal/1 file.
struct JobFile {
  bool is_ideal = false;
  std::string name = "job";
  std::vector<std::string> vars;    // fiber variables, in declaration order
  std::vector<std::string> params;  // deformation parameters (at most one)
  std::optional<uint64_t> seed;
  std::optional<uint64_t> second_seed;
  std::vector<long> weights;        // curve weights, one per fiber variable
  std::optional<long long> chi_slice;
  int minor_size = -1;              // -1: use the column count
  int fiber_dim = -1;               // -1: derive from the matrix
  std::string role = "test";       // "smoothing" or "test"
  std::string function;             // optional germ for relative conditions
  int rows = 0, cols = 0;
  std::vector<std::string> entries;            // matrix block, row major
  int srows = 0, scols = 0;
  std::vector<std::string> smoothing_entries;  // reference smoothing block
  std::vector<std::string> ideal_gens;         // ideal/1 generator block
  std::string raw;                  // original bytes, for the input hash
};

// Parses job text. Errors carry 1-based line positions in their message:
// SyntaxError for malformed lines and values, InputError for valid lines
// that violate the schema.
JobFile parse_job_text(const std::string& text);

// Reads and parses the file at `path`; InputError when unreadable.
JobFile load_job_file(const std::string& path);

// Ring spanned by the declared variables followed by the parameters,
// under graded reverse lexicographic order.
Rc job_ring(const JobFile& job);

namespace detail {
[[noreturn]] inline void rethrow_entry(const Error& e, const char* what,
                                       int row, int col) {
  fail(e.code(), std::string(what) + " entry (" + std::to_string(row + 1) +
                     "," + std::to_string(col + 1) + "): " + error_body(e));
}
}  // namespace detail

// Parses the matrix block over `ring`; entry errors keep their code and
// gain the (row, column) position.
template <class K>
PolyMatrix<K> job_matrix(const K& k, const JobFile& job, const Rc& ring) {
  PolyMatrix<K> m(ring, job.rows, job.cols);
  for (int i = 0; i < job.rows; ++i)
    for (int j = 0; j < job.cols; ++j) {
      try {
        m.at(i, j) =
            parse_poly(k, ring.get(), job.entries[(size_t)(i * job.cols + j)]);
      } catch (const Error& e) {
        detail::rethrow_entry(e, "matrix", i, j);
      }
    }
  return m;
}

// Parses the reference smoothing block over `ring`.
template <class K>
PolyMatrix<K> job_smoothing_matrix(const K& k, const JobFile& job,
                                   const Rc& ring) {
  PolyMatrix<K> m(ring, job.srows, job.scols);
  for (int i = 0; i < job.srows; ++i)
    for (int j = 0; j < job.scols; ++j) {
      try {
        m.at(i, j) = parse_poly(
            k, ring.get(), job.smoothing_entries[(size_t)(i * job.scols + j)]);
      } catch (const Error& e) {
        detail::rethrow_entry(e, "smoothing", i, j);
      }
    }
  return m;
}

// Parses the generator block of an ideal/1 file.
template <class K>
std::vector<Poly<K>> job_ideal_gens(const K& k, const JobFile& job,
                                    const Rc& ring) {
  std::vector<Poly<K>> out;
  for (size_t i = 0; i < job.ideal_gens.size(); ++i) {
    try {
      out.push_back(parse_poly(k, ring.get(), job.ideal_gens[i]));
    } catch (const Error& e) {
      fail(e.code(),
           "generator " + std::to_string(i + 1) + ": " + error_body(e));
    }
  }
  return out;
}

}  // namespace detpol
