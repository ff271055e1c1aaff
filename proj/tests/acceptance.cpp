// Acceptance gate: one line per criterion, FAIL anywhere means nonzero exit.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws on failure
};

std::vector<Criterion>& registry() {
  static std::vector<Criterion> r;
  return r;
}

struct Reg {
  Reg(std::string name, std::function<void()> fn) {
    registry().push_back({std::move(name), std::move(fn)});
  }
};

struct CheckFail : std::exception {
  std::string msg;
  explicit CheckFail(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFail(what);
}

template <class T, class U>
void expect_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == (T)want))
    throw CheckFail(what + ": got " + std::to_string(got) + ", want " +
                    std::to_string((T)want));
}

}  // namespace

#define ACCEPT(name)                                       \
  static void accept_fn_##name();                          \
  static Reg accept_reg_##name(#name, accept_fn_##name);   \
  static void accept_fn_##name()

#include "acceptance_cases.inc"

int main() {
  int failures = 0;
  for (const auto& c : registry()) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    } catch (...) {
      verdict = "FAIL";
      detail = "unknown exception";
      ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%s  %-34s  %6lld ms%s%s\n", verdict.c_str(), c.name.c_str(),
                (long long)ms, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n",
              failures ? "RED" : "GREEN", failures, registry().size());
  return failures ? 1 : 0;
}
