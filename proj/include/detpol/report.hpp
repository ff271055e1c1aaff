// Deterministic plain-text reports: every line is derived from exact
// integers and fixed strings, so equal inputs give byte-identical output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detpol/detsing.hpp"
#include "detpol/family.hpp"

namespace detpol {

// Accumulates detpol-report/1 lines.
struct Report {
  std::vector<std::string> lines;
  bool cite = false;

  void line(std::string s) { lines.push_back(std::move(s)); }

  // "value: <name> <v>", with an optional formula tag under --cite.
  void value(const std::string& name, long long v,
             const std::string& tag = "");

  // "note: <name> <token>" for non-numeric results such as INFINITE.
  void note(const std::string& name, const std::string& token);

  // "gen:" / "stair:" lines for basis output.
  void gen(const std::string& poly_text);
  void stair(const std::string& mono_text);

  // One "check:" line per genericity stage.
  void check(const GenericityCheck& c);
  void checks(const GenericityLog& log);

  // "verdict:" line plus the verdict's detail values and gap, if any.
  void verdict(const Verdict& v);

  // Joined lines followed by the "end" terminator.
  std::string str() const;
};

// Header lines shared by every command.
Report make_report(const std::string& job_name, uint64_t input_hash,
                   const std::string& field_name, uint64_t seed,
                   uint64_t second_seed, bool cite);

}  // namespace detpol
