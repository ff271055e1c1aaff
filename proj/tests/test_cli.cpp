// Job file parsing and report formatting, the I/O layer behind the CLI.
#include "doctest.h"

#include <string>
#include <vector>

#include "detpol/error.hpp"
#include "detpol/jobfile.hpp"
#include "detpol/report.hpp"
#include "detpol/scalar.hpp"

using namespace detpol;

namespace {

// Asserts that `fn` throws an Error with the given code whose message
// contains `needle`.
template <typename Fn>
void expect_error(ErrCode code, const std::string& needle, Fn fn) {
  try {
    fn();
    FAIL_CHECK("expected an error containing '" << needle << "'");
  } catch (const Error& e) {
    CHECK(e.code() == code);
    CHECK(std::string(e.what()).find(needle) != std::string::npos);
  }
}

const char* kCurveJob =
    "job/1\n"
    "# comment line\n"
    "name = curve\n"
    "vars = x, y, z\n"
    "weights = 3, 5, 4\n"
    "\n"
    "matrix 3 2:\n"
    "z, x\n"
    "y, z\n"
    "x^2, y\n";

const char* kFamilyJob =
    "job/1\n"
    "name = fam\n"
    "vars = x1, x2\n"
    "params = t\n"
    "seed = 7\n"
    "second_seed = 11\n"
    "chi_slice = 3\n"
    "minor_size = 2\n"
    "dim = 1\n"
    "role = smoothing\n"
    "function = x1\n"
    "matrix 2 2:\n"
    "x1, x2\n"
    "x2, x1+t\n"
    "smoothing 2 2:\n"
    "x1, x2\n"
    "x2, x1+t\n";

const char* kIdealFile =
    "ideal/1\n"
    "name = fat\n"
    "vars = x, y\n"
    "ideal:\n"
    "x^2\n"
    "x*y\n"
    "y^2\n";

}  // namespace

TEST_CASE("job file: full matrix job round trip") {
  JobFile job = parse_job_text(kCurveJob);
  CHECK_FALSE(job.is_ideal);
  CHECK(job.name == "curve");
  CHECK(job.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(job.params.empty());
  CHECK(job.weights == std::vector<long>{3, 5, 4});
  CHECK_FALSE(job.seed.has_value());
  CHECK(job.rows == 3);
  CHECK(job.cols == 2);
  REQUIRE(job.entries.size() == 6);
  CHECK(job.entries[0] == "z");
  CHECK(job.entries[5] == "y");
  CHECK(job.role == "test");
  CHECK(job.minor_size == -1);
  CHECK(job.raw == kCurveJob);
}

TEST_CASE("job file: every optional key populates its field") {
  JobFile job = parse_job_text(kFamilyJob);
  CHECK(job.params == std::vector<std::string>{"t"});
  CHECK(job.seed == uint64_t{7});
  CHECK(job.second_seed == uint64_t{11});
  CHECK(job.chi_slice == 3);
  CHECK(job.minor_size == 2);
  CHECK(job.fiber_dim == 1);
  CHECK(job.role == "smoothing");
  CHECK(job.function == "x1");
  CHECK(job.srows == 2);
  CHECK(job.scols == 2);
  CHECK(job.smoothing_entries.size() == 4);
}

TEST_CASE("job file: ideal round trip") {
  JobFile job = parse_job_text(kIdealFile);
  CHECK(job.is_ideal);
  CHECK(job.name == "fat");
  CHECK(job.ideal_gens == std::vector<std::string>{"x^2", "x*y", "y^2"});
}

TEST_CASE("job file: header is mandatory and versioned") {
  expect_error(ErrCode::SyntaxError, "empty file",
               [] { parse_job_text(""); });
  expect_error(ErrCode::SyntaxError, "expected job/1 or ideal/1",
               [] { parse_job_text("job/2\nvars = x\n"); });
}

TEST_CASE("job file: malformed lines carry 1-based positions") {
  // Line 3 has no '=' and is not a block header.
  expect_error(ErrCode::SyntaxError, "line 3",
               [] { parse_job_text("job/1\nname = a\nbogus token\n"); });
  // Bad integers are rejected where they appear.
  expect_error(ErrCode::SyntaxError, "line 2", [] {
    parse_job_text("job/1\nseed = twelve\nvars = x\n");
  });
}

TEST_CASE("job file: duplicate keys are rejected") {
  expect_error(ErrCode::InputError, "duplicate", [] {
    parse_job_text("job/1\nname = a\nname = b\nvars = x\nmatrix 1 1:\nx\n");
  });
}

TEST_CASE("job file: wide matrices must be transposed") {
  expect_error(ErrCode::InputError, "transpose the presentation", [] {
    parse_job_text("job/1\nvars = x, y\nmatrix 2 3:\nx, y, x\ny, x, y\n");
  });
}

TEST_CASE("job file: matrix rows must match the declared width") {
  expect_error(ErrCode::SyntaxError, "line 5: expected 2", [] {
    parse_job_text("job/1\nvars = x, y\nmatrix 2 2:\nx, y\nx\n");
  });
  expect_error(ErrCode::SyntaxError, "found 3", [] {
    parse_job_text("job/1\nvars = x, y\nmatrix 2 2:\nx, y\nx, y, x\n");
  });
}

TEST_CASE("job file: schema validation") {
  // vars are required.
  expect_error(ErrCode::InputError, "vars",
               [] { parse_job_text("job/1\nmatrix 1 1:\nx\n"); });
  // A job file needs a matrix block.
  expect_error(ErrCode::InputError, "matrix",
               [] { parse_job_text("job/1\nvars = x\n"); });
  // At most one deformation parameter.
  expect_error(ErrCode::InputError, "param", [] {
    parse_job_text("job/1\nvars = x\nparams = s, t\nmatrix 1 1:\nx\n");
  });
  // Weights, when given, cover every variable and are positive.
  expect_error(ErrCode::InputError, "weights", [] {
    parse_job_text("job/1\nvars = x, y\nweights = 2\nmatrix 1 1:\nx\n");
  });
  expect_error(ErrCode::InputError, "positive", [] {
    parse_job_text("job/1\nvars = x\nweights = 0\nmatrix 1 1:\nx\n");
  });
  // Unknown role.
  expect_error(ErrCode::SyntaxError, "role", [] {
    parse_job_text("job/1\nvars = x\nrole = pilot\nmatrix 1 1:\nx\n");
  });
  // Smoothing block must match the matrix shape.
  expect_error(ErrCode::InputError, "shape", [] {
    parse_job_text(
        "job/1\nvars = x\nparams = t\nmatrix 2 1:\nx\nt\n"
        "smoothing 1 1:\nx\n");
  });
}

TEST_CASE("job file: ideal files accept only identification keys") {
  expect_error(ErrCode::InputError, "ideal", [] {
    parse_job_text("ideal/1\nvars = x\nrole = test\nideal:\nx\n");
  });
  expect_error(ErrCode::InputError, "param", [] {
    parse_job_text("ideal/1\nvars = x\nparams = t\nideal:\nx\n");
  });
  // Empty generator block.
  expect_error(ErrCode::InputError, "ideal",
               [] { parse_job_text("ideal/1\nvars = x\nideal:\n"); });
}

TEST_CASE("job file: ring spans variables then parameters") {
  JobFile job = parse_job_text(kFamilyJob);
  Rc ring = job_ring(job);
  CHECK(ring->nvars() == 3);
  CHECK(ring->nparams == 1);
  CHECK(ring->nfiber() == 2);
  CHECK(ring->vars[0] == "x1");
  CHECK(ring->vars[2] == "t");

  JobFile plain = parse_job_text(kCurveJob);
  Rc r2 = job_ring(plain);
  CHECK(r2->nvars() == 3);
  CHECK(r2->nparams == 0);
}

TEST_CASE("job file: matrix entries parse in the job ring") {
  RationalField k;
  JobFile job = parse_job_text(kCurveJob);
  Rc ring = job_ring(job);
  auto m = job_matrix(k, job, ring);
  CHECK(m.rows == 3);
  CHECK(m.cols == 2);
  CHECK(poly_str(k, m.at(2, 0)) == "x^2");
  CHECK(poly_eq(k, m.at(0, 1), poly_var(k, ring.get(), 0)));
}

TEST_CASE("job file: entry errors carry the matrix position once") {
  RationalField k;
  JobFile job = parse_job_text(
      "job/1\nvars = x, y\nmatrix 2 2:\nx, y\ny, x+\n");
  Rc ring = job_ring(job);
  try {
    job_matrix(k, job, ring);
    FAIL_CHECK("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::SyntaxError);
    std::string msg = e.what();
    CHECK(msg.find("matrix entry (2,2)") != std::string::npos);
    // The code name appears exactly once: the wrapped body is stripped.
    CHECK(msg.find("SYNTAX_ERROR") == msg.rfind("SYNTAX_ERROR"));
  }
  // Undeclared names keep their own category.
  JobFile j2 =
      parse_job_text("job/1\nvars = x\nmatrix 1 1:\nq\n");
  expect_error(ErrCode::UndeclaredVariable, "matrix entry (1,1)",
               [&] { job_matrix(k, j2, job_ring(j2)); });
}

TEST_CASE("job file: ideal generators parse with positions") {
  RationalField k;
  JobFile job = parse_job_text(kIdealFile);
  Rc ring = job_ring(job);
  auto gens = job_ideal_gens(k, job, ring);
  REQUIRE(gens.size() == 3);
  CHECK(poly_str(k, gens[1]) == "x*y");

  JobFile bad = parse_job_text("ideal/1\nvars = x\nideal:\nx\nx^\n");
  expect_error(ErrCode::SyntaxError, "generator 2",
               [&] { job_ideal_gens(k, bad, job_ring(bad)); });
}

TEST_CASE("report: header and terminator") {
  Report r = make_report("demo", 0x1234abcdULL, "Q", 42, 99, false);
  REQUIRE(r.lines.size() == 6);
  CHECK(r.lines[0] == "detpol-report/1");
  CHECK(r.lines[1] == "job: demo");
  CHECK(r.lines[2] == "input-hash: 000000001234abcd");
  CHECK(r.lines[3] == "field: Q");
  CHECK(r.lines[4] == "seed: 42");
  CHECK(r.lines[5] == "second-seed: 99");
  std::string s = r.str();
  CHECK(s.substr(s.size() - 4) == "end\n");
}

TEST_CASE("report: value lines cite only when asked") {
  Report quiet;
  quiet.value("nd", 4, "binomial-polar-expansion");
  CHECK(quiet.lines.back() == "value: nd 4");

  Report loud;
  loud.cite = true;
  loud.value("nd", 4, "binomial-polar-expansion");
  CHECK(loud.lines.back() == "value: nd 4 cite=binomial-polar-expansion");
  loud.value("m1", 9);
  CHECK(loud.lines.back() == "value: m1 9");
}

TEST_CASE("report: notes, generators and staircase lines") {
  Report r;
  r.note("quotient_dim", "INFINITE");
  r.gen("x^2 + y");
  r.stair("x*y");
  CHECK(r.lines[0] == "note: quotient_dim INFINITE");
  CHECK(r.lines[1] == "gen: x^2 + y");
  CHECK(r.lines[2] == "stair: x*y");
}

TEST_CASE("report: check lines show stage, indices and failures") {
  Report r;
  GenericityCheck ok;
  ok.stage = "intersection";
  ok.i = 1;
  ok.j = 0;
  ok.value = 2;
  r.check(ok);
  CHECK(r.lines.back() == "check: intersection ok i=1 j=0 value=2");

  GenericityCheck fail;
  fail.stage = "polar-slice";
  fail.i = 0;
  fail.ok = false;
  fail.actual_dim = 1;
  fail.value = 5;
  fail.retried = true;
  r.check(fail);
  CHECK(r.lines.back() == "check: polar-slice FAIL i=0 value=5 dim=1 retried");

  GenericityCheck bare;
  bare.stage = "index-bound";
  bare.value = 3;
  r.check(bare);
  CHECK(r.lines.back() == "check: index-bound ok value=3");
}

TEST_CASE("report: verdict prints details, values and gap") {
  Report r;
  Verdict v;
  v.condition = "WhitneyB";
  v.outcome = Outcome::Equisingular;
  v.has_values = true;
  v.value_base = 78;
  v.value_deformed = 78;
  v.details = {{"invariant_base", 78}, {"invariant_deformed", 78}};
  r.verdict(v);
  REQUIRE(r.lines.size() == 3);
  CHECK(r.lines[0] == "value: invariant_base 78");
  CHECK(r.lines[2] == "verdict: WhitneyB EQUISINGULAR base=78 deformed=78");

  Report r2;
  Verdict u;
  u.condition = "A_F";
  u.outcome = Outcome::Undetermined;
  u.gap = "a germ is required";
  r2.verdict(u);
  CHECK(r2.lines[0] == "verdict: A_F UNDETERMINED");
  CHECK(r2.lines[1] == "gap: a germ is required");
}
