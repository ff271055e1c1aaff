// Command line front end: reads a job description file, runs the requested
// computation over an exact coefficient field, and prints a deterministic
// plain-text report to stdout. Diagnostics go to stderr.
//
// Exit codes: 0 success, 1 input or internal error, 2 a tested condition
// failed (NOT_EQUISINGULAR or SPLIT), 3 undetermined or seed-suspect,
// 4 resource cap hit. When several apply, 1 > 4 > 2 > 3 > 0.
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detpol/detsing.hpp"
#include "detpol/family.hpp"
#include "detpol/jobfile.hpp"
#include "detpol/report.hpp"

using namespace detpol;

namespace {

struct CommonFlags {
  std::string job_path;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> second_seed;
  std::string field = "q";
  long step_cap = 0;  // 0 keeps the library default
  bool cite = false;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("job", f.job_path, "job description file")->required();
  sub->add_option("--seed", f.seed,
                  "primary seed (overrides the file and DETPOL_SEED)");
  sub->add_option("--second-seed", f.second_seed,
                  "seed of the agreement trail (default: derived)");
  sub->add_option("--field", f.field,
                  "coefficient field: q (rationals), fp, or fp:PRIME");
  sub->add_option("--step-cap", f.step_cap,
                  "cap on basis completion steps before CAP_EXCEEDED");
  sub->add_flag("--cite", f.cite, "append formula tags to value lines");
}

struct FieldSpec {
  bool rational = true;
  uint64_t prime = DEFAULT_CHECK_PRIME;
};

FieldSpec parse_field(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back((char)std::tolower((unsigned char)c));
  if (t == "q" || t == "qq") return {true, 0};
  if (t == "fp") return {false, DEFAULT_CHECK_PRIME};
  if (t.rfind("fp:", 0) == 0) {
    std::string digits = t.substr(3);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrCode::InputError, "--field fp: expects a prime number");
    uint64_t p = 0;
    try {
      p = std::stoull(digits);
    } catch (const std::exception&) {
      fail(ErrCode::InputError, "--field prime is out of range");
    }
    require(p >= 2, ErrCode::InputError, "--field prime must be at least 2");
    return {false, p};
  }
  fail(ErrCode::InputError,
       "unknown field '" + s + "' (expected q, fp, or fp:PRIME)");
}

std::string field_name(const FieldSpec& fs) {
  if (fs.rational) return RationalField{}.name();
  return PrimeField(fs.prime).name();
}

template <class F>
void with_field(const FieldSpec& fs, F&& f) {
  if (fs.rational) {
    RationalField k;
    f(k);
  } else {
    PrimeField k(fs.prime);
    f(k);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrCode::InputError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Seed resolve_seed(const CommonFlags& fl, const JobFile& job) {
  std::optional<uint64_t> env;
  if (const char* e = std::getenv("DETPOL_SEED")) {
    std::string s(e);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrCode::InputError, "DETPOL_SEED must be a nonnegative integer");
    env = std::stoull(s);
  }
  uint64_t primary = fl.seed    ? *fl.seed
                     : job.seed ? *job.seed
                     : env      ? *env
                                : DEFAULT_SEED;
  Seed seed(primary);
  if (fl.second_seed)
    seed.second = *fl.second_seed;
  else if (job.second_seed)
    seed.second = *job.second_seed;
  return seed;
}

int exit_for_error(ErrCode c) {
  switch (c) {
    case ErrCode::CapExceeded:
    case ErrCode::ResourceLimit:
      return 4;
    case ErrCode::GenericitySuspect:
      return 3;
    default:
      return 1;
  }
}

int exit_for_outcome(Outcome o) {
  switch (o) {
    case Outcome::NotEquisingular:
    case Outcome::Split:
      return 2;
    case Outcome::Undetermined:
      return 3;
    default:
      return 0;
  }
}

// Severity order of the exit codes: 1 > 4 > 2 > 3 > 0.
int combine_exit(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case 1: return 4;
      case 4: return 3;
      case 2: return 2;
      case 3: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

// ---------------------------------------------------------------------------
// invariants: numbers attached to one determinantal germ.

template <class K>
void cmd_invariants(const K& fld, const JobFile& job, const Seed& seed,
                    const GBOptions& opts, Report& rep) {
  require(!job.is_ideal, ErrCode::InputError,
          "the invariants command needs a job/1 file with a matrix block");
  require(job.params.empty(), ErrCode::InputError,
          "invariants jobs take no parameter; use the family command");
  Rc ring = job_ring(job);
  auto m = job_matrix(fld, job, ring);
  auto pm = make_presmat(fld, m);
  rep.value("n", pm.n);
  rep.value("k", pm.k);
  rep.value("q", pm.q);
  rep.value("d", pm.d);

  auto defin = defining_ideal(fld, pm);
  rep.value("defining_gens", (long long)defin.gens.size(), "maximal-minors");
  auto gb = buchberger(fld, defin, opts);
  rep.value("defining_dim", krull_dim(gb));

  bool nonempty = polar_nonempty_predicate(pm);
  rep.value("polar_nonempty", nonempty ? 1 : 0, "polar-size-bound");

  long long nd = 0;
  if (nonempty) {
    GenericityLog log;
    const int imax = std::min(pm.d, pm.n - 1);
    std::vector<long long> mixed;
    for (int i = 0; i <= imax; ++i)
      mixed.push_back(mixed_polar_degree(fld, pm, i, seed, &log, opts));
    std::map<std::pair<int, int>, long long> inter;
    for (const auto& c : log)
      if (c.stage == "intersection" && c.ok) inter[{c.i, c.j}] = c.value;
    for (const auto& [ij, v] : inter)
      rep.value("inter_i" + std::to_string(ij.first) + "_j" +
                    std::to_string(ij.second),
                v, "transverse-colength");
    for (int i = 0; i <= imax; ++i) {
      rep.value("mixed_polar_" + std::to_string(i), mixed[(size_t)i],
                "alternating-minor-colengths");
      nd += binom(pm.d + pm.k, i) * mixed[(size_t)i];
    }
    rep.checks(log);
  }
  rep.value("nd_polar_mult", nd, "binomial-polar-expansion");

  // Classical polar multiplicities of the germ, smallest slice first; the
  // top one equals the multiplicity of the germ itself.
  if (pm.d >= 1) {
    auto jm = jacobian_module(fld, pm, false);
    GenericityLog plog;
    std::vector<std::pair<int, long long>> pairs;
    for (int j = 1; j <= pm.d; ++j) {
      long long mj =
          polar_multiplicity(fld, jm, defin, pm.d - j, seed, &plog, opts);
      pairs.push_back({j, mj});
      rep.value("m" + std::to_string(j), mj, "generic-combination-polar");
    }
    rep.value("kt", kt_formula(0, pairs, pm.q - 1),
              "twist-multiplicity-expansion");
    rep.checks(plog);
  }

  if (!job.weights.empty()) {
    long long pair = curve_pair_multiplicity(fld, pm, job.weights);
    rep.value("pair", pair, "weighted-pullback-order");
    rep.value("e_gamma", pair + nd, "pair-plus-polar");
  }
}

// ---------------------------------------------------------------------------
// family: one-parameter families, verdicts and covers.

FamilyRole role_of(const JobFile& job) {
  return job.role == "smoothing" ? FamilyRole::Smoothing
                                 : FamilyRole::TestFamily;
}

template <class K>
long long detail_value(const Verdict& v, const std::string& name) {
  for (const auto& d : v.details)
    if (d.first == name) return d.second;
  fail(ErrCode::InvariantViolation, "missing verdict detail: " + name);
}

template <class K>
void cmd_family(const K& fld, const JobFile& job, FamilyMode mode,
                const Seed& seed, const GBOptions& opts, Report& rep,
                int& code) {
  require(!job.is_ideal, ErrCode::InputError,
          "the family command needs a job/1 file with a matrix block");
  require(job.params.size() == 1, ErrCode::InputError,
          "family jobs need exactly one parameter variable");
  Rc ring = job_ring(job);
  auto m = job_matrix(fld, job, ring);
  int msize = job.minor_size > 0 ? job.minor_size : m.cols;
  std::optional<Poly<K>> fun;
  if (!job.function.empty()) {
    try {
      fun = parse_poly(fld, ring.get(), job.function);
    } catch (const Error& e) {
      fail(e.code(), std::string("function: ") + error_body(e));
    }
  }
  const int pv = ring->nvars() - 1;

  if (job.role == "smoothing") {
    auto fam = make_family(fld, m, msize, FamilyRole::Smoothing, fun,
                           job.fiber_dim, opts);
    rep.value("fiber_dim", fam.fiber_dim);
    GenericityLog log;
    Verdict v = whitney_report(fld, fam, fam, mode, seed, &log, opts);
    rep.checks(log);
    if (job.chi_slice && mode == FamilyMode::WhitneyB) {
      rep.value("euler_base",
                euler_from_polar(detail_value<K>(v, "cover_at_origin_base"),
                                 *job.chi_slice, fam.fiber_dim),
                "polar-euler-exchange");
      rep.value(
          "euler_deformed",
          euler_from_polar(detail_value<K>(v, "cover_at_origin_deformed"),
                           *job.chi_slice, fam.fiber_dim),
          "polar-euler-exchange");
    }
    rep.verdict(v);
    code = combine_exit(code, exit_for_outcome(v.outcome));
    return;
  }

  // Test role: judge the family along its parameter. The Whitney comparison
  // needs a reference smoothing of the central member; the member at a
  // seeded parameter value is smoothed in the same direction.
  if (job.srows > 0) {
    auto sm = job_smoothing_matrix(fld, job, ring);
    PolyMatrix<K> central(ring, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        central.at(i, j) =
            poly_eval_var(fld, sm.at(i, j), pv, fld.from_long(0));
        require(poly_eq(fld, central.at(i, j),
                        poly_eval_var(fld, m.at(i, j), pv, fld.from_long(0))),
                ErrCode::InputError,
                "matrix and smoothing blocks disagree on the central member");
      }
    auto base = make_family(fld, sm, msize, FamilyRole::Smoothing, fun,
                            job.fiber_dim, opts);
    auto rng = Seed::stream(seed.primary, "test-member-value");
    long member = (long)rng.range(2, 97);
    rep.value("member_value", member);
    PolyMatrix<K> dm(ring, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j)
        dm.at(i, j) = poly_add(
            fld, poly_eval_var(fld, m.at(i, j), pv, fld.from_long(member)),
            poly_sub(fld, sm.at(i, j), central.at(i, j)));
    auto deformed = make_family(fld, dm, msize, FamilyRole::Smoothing, fun,
                                job.fiber_dim, opts);
    rep.value("fiber_dim", base.fiber_dim);
    GenericityLog log;
    Verdict v = whitney_report(fld, base, deformed, mode, seed, &log, opts);
    rep.checks(log);
    rep.verdict(v);
    code = combine_exit(code, exit_for_outcome(v.outcome));
  } else {
    bool constant = true;
    for (int i = 0; i < m.rows && constant; ++i)
      for (int j = 0; j < m.cols && constant; ++j)
        constant = poly_eq(
            fld, m.at(i, j),
            poly_eval_var(fld, m.at(i, j), pv, fld.from_long(0)));
    Verdict v;
    v.condition = mode_condition_name(mode);
    if (constant) {
      // A family that ignores its parameter is equisingular outright.
      rep.note("family", "constant");
      v.outcome = Outcome::Equisingular;
    } else {
      v.outcome = Outcome::Undetermined;
      v.gap =
          "a reference smoothing block is required for the Whitney comparison";
    }
    rep.verdict(v);
    code = combine_exit(code, exit_for_outcome(v.outcome));
  }

  // The singular set of the total space, watched along the parameter.
  auto tf = make_family(fld, m, msize, FamilyRole::TestFamily,
                        std::optional<Poly<K>>{}, job.fiber_dim, opts);
  GenericityLog elog;
  Verdict ev = entry_locus_report(fld, tf, seed, &elog, opts);
  rep.checks(elog);
  rep.verdict(ev);
  code = combine_exit(code, exit_for_outcome(ev.outcome));
}

// ---------------------------------------------------------------------------
// groebner: reduced bases, staircases, saturation and quotients.

template <class K>
void cmd_groebner(const K& fld, const JobFile& job, const GBOptions& opts,
                  Report& rep, bool saturate_origin,
                  const std::string& colon_expr) {
  require(job.is_ideal, ErrCode::InputError,
          "the groebner command needs an ideal/1 file");
  Rc ring = job_ring(job);
  Ideal<K> ideal(ring);
  ideal.gens = job_ideal_gens(fld, job, ring);
  if (saturate_origin)
    ideal = saturate(fld, ideal, origin_ideal(fld, ring), opts);
  if (!colon_expr.empty()) {
    Ideal<K> divisor(ring);
    try {
      divisor.gens.push_back(parse_poly(fld, ring.get(), colon_expr));
    } catch (const Error& e) {
      fail(e.code(), std::string("--colon: ") + error_body(e));
    }
    ideal = ideal_quotient(fld, ideal, divisor, opts);
  }
  auto gb = buchberger(fld, ideal, opts);
  for (const auto& g : gb.g) rep.gen(poly_str(fld, g));
  rep.value("basis_size", (long long)gb.g.size());
  rep.value("dim", krull_dim(gb));
  auto qd = quotient_dim(gb);
  if (qd) {
    rep.value("quotient_dim", *qd, "staircase-count");
    for (const auto& mono : standard_monomials(gb))
      rep.stair(ring->mono_str(mono));
  } else {
    rep.note("quotient_dim", "INFINITE");
  }
}

// ---------------------------------------------------------------------------

enum class Command { Invariants, Family, Groebner };

int run(const CommonFlags& fl, Command which, FamilyMode mode,
        bool saturate_origin, const std::string& colon_expr) {
  FieldSpec fs = parse_field(fl.field);

  std::string bytes = slurp(fl.job_path);
  JobFile job;
  try {
    job = parse_job_text(bytes);
  } catch (const Error& e) {
    Report rep = make_report("-", fnv1a64(bytes), field_name(fs), 0, 0, false);
    rep.line(std::string("status: error ") + e.what());
    std::fputs(rep.str().c_str(), stdout);
    std::fprintf(stderr, "%s\n", e.what());
    return exit_for_error(e.code());
  }

  Seed seed = resolve_seed(fl, job);
  Report rep = make_report(job.name, fnv1a64(bytes), field_name(fs),
                           seed.primary, seed.second, fl.cite);
  GBOptions opts;
  if (fl.step_cap > 0) opts.step_cap = fl.step_cap;

  int code = 0;
  try {
    with_field(fs, [&](const auto& fld) {
      switch (which) {
        case Command::Invariants:
          cmd_invariants(fld, job, seed, opts, rep);
          break;
        case Command::Family:
          cmd_family(fld, job, mode, seed, opts, rep, code);
          break;
        case Command::Groebner:
          cmd_groebner(fld, job, opts, rep, saturate_origin, colon_expr);
          break;
      }
    });
    rep.line("status: ok");
  } catch (const Error& e) {
    rep.line(std::string("status: error ") + e.what());
    std::fprintf(stderr, "%s\n", e.what());
    code = combine_exit(code, exit_for_error(e.code()));
  }
  std::fputs(rep.str().c_str(), stdout);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "detpol: exact invariants of determinantal singularities from "
      "presentation matrices"};
  app.require_subcommand(1);

  CommonFlags fl_inv, fl_fam, fl_gb;
  std::string mode_name = "whitney";
  bool saturate_origin = false;
  std::string colon_expr;

  auto* inv = app.add_subcommand(
      "invariants", "polar and pair invariants of one germ");
  add_common(inv, fl_inv);

  auto* fam = app.add_subcommand(
      "family", "equisingularity verdicts for a one-parameter family");
  add_common(fam, fl_fam);
  fam->add_option("--mode", mode_name,
                  "tested condition: whitney, af, or wf");

  auto* gb = app.add_subcommand(
      "groebner", "reduced basis and staircase of an ideal");
  add_common(gb, fl_gb);
  gb->add_flag("--saturate-origin", saturate_origin,
               "saturate by the maximal ideal of the origin first");
  gb->add_option("--colon", colon_expr,
                 "replace the ideal by its quotient by this polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (inv->parsed())
      return run(fl_inv, Command::Invariants, FamilyMode::WhitneyB, false, "");
    if (fam->parsed()) {
      FamilyMode mode;
      if (mode_name == "whitney")
        mode = FamilyMode::WhitneyB;
      else if (mode_name == "af")
        mode = FamilyMode::AF;
      else if (mode_name == "wf")
        mode = FamilyMode::WF;
      else
        fail(ErrCode::InputError,
             "unknown mode '" + mode_name + "' (expected whitney, af, or wf)");
      return run(fl_fam, Command::Family, mode, false, "");
    }
    return run(fl_gb, Command::Groebner, FamilyMode::WhitneyB, saturate_origin,
               colon_expr);
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return exit_for_error(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
