#include "detpol/jobfile.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace detpol {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  fail(ErrCode::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void bad_schema(int line, const std::string& msg) {
  fail(ErrCode::InputError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  if (out.size() == 1 && out.front().empty()) out.clear();
  return out;
}

uint64_t parse_u64(const std::string& s, int line, const char* key) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    bad_line(line, std::string(key) + " expects a nonnegative integer");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    bad_line(line, std::string(key) + " is out of range");
  }
}

long long parse_i64(const std::string& s, int line, const char* key) {
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body = body.substr(1);
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    bad_line(line, std::string(key) + " expects an integer");
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    bad_line(line, std::string(key) + " is out of range");
  }
}

// Parses a block header of the form "matrix R C:" / "smoothing R C:" /
// "ideal:"; returns false when the line is not a block header.
bool parse_block_header(const std::string& line, int lineno, std::string& kind,
                        int& rows, int& cols) {
  if (line.empty() || line.back() != ':') return false;
  std::istringstream in(line.substr(0, line.size() - 1));
  std::string word;
  in >> word;
  if (word != "matrix" && word != "smoothing" && word != "ideal") return false;
  kind = word;
  rows = cols = 0;
  if (word == "ideal") {
    std::string extra;
    if (in >> extra) bad_line(lineno, "ideal block header takes no sizes");
    return true;
  }
  if (!(in >> rows >> cols))
    bad_line(lineno, kind + " block header needs row and column counts");
  std::string extra;
  if (in >> extra) bad_line(lineno, kind + " block header has trailing text");
  if (rows < 1 || cols < 1) bad_line(lineno, kind + " block needs positive sizes");
  if (rows < cols)
    bad_schema(lineno, kind + " block must have at least as many rows as "
                              "columns; transpose the presentation");
  return true;
}

}  // namespace

JobFile parse_job_text(const std::string& text) {
  JobFile job;
  job.raw = text;

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }

  auto is_skippable = [](const std::string& s) {
    std::string t = trim(s);
    return t.empty() || t[0] == '#';
  };

  size_t pos = 0;
  while (pos < lines.size() && is_skippable(lines[pos])) ++pos;
  if (pos == lines.size())
    fail(ErrCode::SyntaxError, "empty file: expected a job/1 or ideal/1 header");
  {
    std::string head = trim(lines[pos]);
    if (head == "job/1")
      job.is_ideal = false;
    else if (head == "ideal/1")
      job.is_ideal = true;
    else
      bad_line((int)pos + 1, "unknown header '" + head +
                                 "' (expected job/1 or ideal/1)");
    ++pos;
  }

  std::set<std::string> seen;
  bool saw_matrix = false, saw_smoothing = false, saw_ideal = false;

  auto read_matrix_block = [&](int headerline, int rows, int cols,
                               std::vector<std::string>& entries) {
    entries.clear();
    for (int r = 0; r < rows; ++r) {
      while (pos < lines.size() && is_skippable(lines[pos])) ++pos;
      if (pos == lines.size())
        bad_line(headerline, "block ends after " + std::to_string(r) + " of " +
                                 std::to_string(rows) + " rows");
      auto row = split_list(lines[pos]);
      if ((int)row.size() != cols)
        bad_line((int)pos + 1, "expected " + std::to_string(cols) +
                                   " comma-separated entries, found " +
                                   std::to_string(row.size()));
      for (const auto& e : row) {
        if (e.empty()) bad_line((int)pos + 1, "empty matrix entry");
        entries.push_back(e);
      }
      ++pos;
    }
  };

  while (pos < lines.size()) {
    if (is_skippable(lines[pos])) {
      ++pos;
      continue;
    }
    std::string line = trim(lines[pos]);
    int lineno = (int)pos + 1;

    std::string kind;
    int rows = 0, cols = 0;
    if (parse_block_header(line, lineno, kind, rows, cols)) {
      ++pos;
      if (kind == "matrix") {
        if (job.is_ideal) bad_schema(lineno, "matrix block in an ideal file");
        if (saw_matrix) bad_schema(lineno, "duplicate matrix block");
        saw_matrix = true;
        job.rows = rows;
        job.cols = cols;
        read_matrix_block(lineno, rows, cols, job.entries);
      } else if (kind == "smoothing") {
        if (job.is_ideal)
          bad_schema(lineno, "smoothing block in an ideal file");
        if (saw_smoothing) bad_schema(lineno, "duplicate smoothing block");
        saw_smoothing = true;
        job.srows = rows;
        job.scols = cols;
        read_matrix_block(lineno, rows, cols, job.smoothing_entries);
      } else {
        if (!job.is_ideal) bad_schema(lineno, "ideal block in a job file");
        if (saw_ideal) bad_schema(lineno, "duplicate ideal block");
        saw_ideal = true;
        while (pos < lines.size()) {
          if (is_skippable(lines[pos])) {
            ++pos;
            continue;
          }
          std::string gen = trim(lines[pos]);
          std::string k2;
          int r2, c2;
          if (parse_block_header(gen, (int)pos + 1, k2, r2, c2)) break;
          // Generators never contain '='; a key line ends the block.
          if (gen.find('=') != std::string::npos) break;
          job.ideal_gens.push_back(gen);
          ++pos;
        }
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos)
      bad_line(lineno, "expected 'key = value' or a block header");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) bad_line(lineno, "missing key before '='");
    if (!seen.insert(key).second) bad_schema(lineno, "duplicate key '" + key + "'");

    if (key == "name") {
      if (val.empty()) bad_line(lineno, "name must be nonempty");
      job.name = val;
    } else if (key == "vars") {
      job.vars = split_list(val);
      if (job.vars.empty()) bad_line(lineno, "vars must list at least one name");
      for (const auto& v : job.vars)
        if (v.empty()) bad_line(lineno, "empty name in vars");
    } else if (key == "params") {
      job.params = split_list(val);
      for (const auto& v : job.params)
        if (v.empty()) bad_line(lineno, "empty name in params");
      if (job.params.size() > 1)
        bad_schema(lineno, "at most one parameter is supported");
    } else if (key == "seed") {
      job.seed = parse_u64(val, lineno, "seed");
    } else if (key == "second_seed") {
      job.second_seed = parse_u64(val, lineno, "second_seed");
    } else if (key == "weights") {
      for (const auto& w : split_list(val)) {
        long long v = parse_i64(w, lineno, "weights");
        if (v < 1) bad_schema(lineno, "weights must be positive");
        job.weights.push_back((long)v);
      }
      if (job.weights.empty()) bad_line(lineno, "weights must be nonempty");
    } else if (key == "chi_slice") {
      job.chi_slice = parse_i64(val, lineno, "chi_slice");
    } else if (key == "minor_size") {
      long long v = parse_i64(val, lineno, "minor_size");
      if (v < 1) bad_schema(lineno, "minor_size must be positive");
      job.minor_size = (int)v;
    } else if (key == "dim") {
      long long v = parse_i64(val, lineno, "dim");
      if (v < 0) bad_schema(lineno, "dim must be nonnegative");
      job.fiber_dim = (int)v;
    } else if (key == "role") {
      if (val != "smoothing" && val != "test")
        bad_line(lineno, "role must be 'smoothing' or 'test'");
      job.role = val;
    } else if (key == "function") {
      if (val.empty()) bad_line(lineno, "function must be nonempty");
      job.function = val;
    } else {
      bad_schema(lineno, "unknown key '" + key + "'");
    }
    ++pos;
  }

  if (job.vars.empty())
    fail(ErrCode::InputError, "missing required key 'vars'");
  if (job.is_ideal) {
    if (!saw_ideal || job.ideal_gens.empty())
      fail(ErrCode::InputError, "ideal file needs a nonempty ideal block");
    if (!job.params.empty())
      fail(ErrCode::InputError, "ideal files take no parameters");
    if (!job.weights.empty() || job.chi_slice || job.minor_size != -1 ||
        job.fiber_dim != -1 || !job.function.empty() || seen.count("role"))
      fail(ErrCode::InputError,
           "ideal files accept only name, vars, seed and second_seed keys");
  } else {
    if (!saw_matrix) fail(ErrCode::InputError, "job file needs a matrix block");
    if (saw_smoothing && (job.srows != job.rows || job.scols != job.cols))
      fail(ErrCode::InputError,
           "smoothing block must match the matrix block's shape");
  }
  if (!job.weights.empty() && job.weights.size() != job.vars.size())
    fail(ErrCode::InputError, "weights must list one value per variable");
  return job;
}

JobFile load_job_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrCode::InputError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_text(buf.str());
}

Rc job_ring(const JobFile& job) {
  std::vector<std::string> names = job.vars;
  names.insert(names.end(), job.params.begin(), job.params.end());
  return make_ring(std::move(names), MonomialOrder::degrevlex(),
                   (int)job.params.size());
}

}  // namespace detpol
