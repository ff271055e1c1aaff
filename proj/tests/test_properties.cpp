// Randomized property suites at unit-test scale; the acceptance gate runs
// the same suites at full scale.
#include "doctest.h"

#include "property_suites.hpp"

using namespace detpol;

TEST_CASE("property: normal form idempotence and membership") {
  CHECK_NOTHROW(props::suite_normal_form(40, 42));
}

TEST_CASE("property: quotient dimension matches lattice counting") {
  CHECK_NOTHROW(props::suite_quotient_dim_brute(30, 42));
}

TEST_CASE("property: saturation idempotence and containment") {
  CHECK_NOTHROW(props::suite_saturation(12, 42));
}

TEST_CASE("property: fitting ideals ascend") {
  CHECK_NOTHROW(props::suite_fitting_chain(10, 42));
}

TEST_CASE("property: mixed polar degrees survive unimodular operations") {
  CHECK_NOTHROW(props::suite_unimodular_invariance(DETPOL_CORPUS_DIR,
                                                   {"xl_2", "c5_32"}, 2, 42));
}

TEST_CASE("property: polar multiplicities agree across seeds") {
  CHECK_NOTHROW(props::suite_two_seed(DETPOL_CORPUS_DIR, {"xl_2"},
                                      {42, 1234, 20260816}));
}
