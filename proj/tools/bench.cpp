// Compares the serial reference kernels against the OpenMP paths and checks
// that both produce identical results while timing them.

#include <chrono>
#include <cstdio>

#include "ncnn/parallel.hpp"
#include "ncnn/signed_perm.hpp"
#include "ncnn/verify.hpp"

using namespace ncnn;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
  const int jobs = hardware_jobs();
  std::printf("parallel kernels vs serial reference (%d threads)\n\n", jobs);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  {
    GroupFamily g(Family::C, 6);
    std::vector<SignedPermutation> serial, parallel;
    double ts = time_ms([&] { serial = uniform_noncrossing(g, 1); });
    double tp = time_ms([&] { parallel = uniform_noncrossing(g, jobs); });
    std::printf("%-34s %12.1f %12.1f %8.2fx%s\n", "uniform interval filter C6",
                ts, tp, ts / tp, serial == parallel ? "" : "  MISMATCH");
  }

  {
    std::set<std::string> checks{"roundtrip"};
    VerificationReport serial, parallel;
    double ts = time_ms([&] { serial = run_verification(5, checks, 1); });
    double tp = time_ms([&] { parallel = run_verification(5, checks, jobs); });
    bool same = serial.checks.size() == parallel.checks.size();
    for (size_t i = 0; same && i < serial.checks.size(); ++i)
      same = serial.checks[i].name == parallel.checks[i].name &&
             serial.checks[i].observed == parallel.checks[i].observed &&
             serial.checks[i].pass == parallel.checks[i].pass;
    std::printf("%-34s %12.1f %12.1f %8.2fx%s\n",
                "roundtrip verification (rank 5)", ts, tp, ts / tp,
                same ? "" : "  MISMATCH");
  }

  {
    std::set<std::string> checks{"counts"};
    VerificationReport serial, parallel;
    double ts = time_ms([&] { serial = run_verification(5, checks, 1); });
    double tp = time_ms([&] { parallel = run_verification(5, checks, jobs); });
    bool same = serial.to_json()["checks"].size() ==
                parallel.to_json()["checks"].size();
    std::printf("%-34s %12.1f %12.1f %8.2fx%s\n",
                "count verification (rank 5)", ts, tp, ts / tp,
                same ? "" : "  MISMATCH");
  }
  return 0;
}
