#include "detpol/report.hpp"

#include <sstream>

#include "detpol/jobfile.hpp"

namespace detpol {

void Report::value(const std::string& name, long long v,
                   const std::string& tag) {
  std::string s = "value: " + name + " " + std::to_string(v);
  if (cite && !tag.empty()) s += " cite=" + tag;
  lines.push_back(std::move(s));
}

void Report::note(const std::string& name, const std::string& token) {
  lines.push_back("note: " + name + " " + token);
}

void Report::gen(const std::string& poly_text) {
  lines.push_back("gen: " + poly_text);
}

void Report::stair(const std::string& mono_text) {
  lines.push_back("stair: " + mono_text);
}

void Report::check(const GenericityCheck& c) {
  std::ostringstream s;
  s << "check: " << c.stage << (c.ok ? " ok" : " FAIL");
  if (c.i >= 0) s << " i=" << c.i;
  if (c.j >= 0) s << " j=" << c.j;
  s << " value=" << c.value;
  if (!c.ok) s << " dim=" << c.actual_dim;
  if (c.retried) s << " retried";
  lines.push_back(s.str());
}

void Report::checks(const GenericityLog& log) {
  for (const auto& c : log) check(c);
}

void Report::verdict(const Verdict& v) {
  for (const auto& d : v.details) value(d.first, d.second);
  std::ostringstream s;
  s << "verdict: " << v.condition << " " << outcome_name(v.outcome);
  if (v.has_values)
    s << " base=" << v.value_base << " deformed=" << v.value_deformed;
  lines.push_back(s.str());
  if (!v.gap.empty()) lines.push_back("gap: " + v.gap);
}

std::string Report::str() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  out += "end\n";
  return out;
}

Report make_report(const std::string& job_name, uint64_t input_hash,
                   const std::string& field_name, uint64_t seed,
                   uint64_t second_seed, bool cite) {
  Report r;
  r.cite = cite;
  r.line("detpol-report/1");
  r.line("job: " + job_name);
  r.line("input-hash: " + hex64(input_hash));
  r.line("field: " + field_name);
  r.line("seed: " + std::to_string(seed));
  r.line("second-seed: " + std::to_string(second_seed));
  return r;
}

}  // namespace detpol
