// Times the claim kernels in the serial reference engine against the
// OpenMP one and reports per-claim speedups.
#include <chrono>
#include <cstdio>

#include "liaison/oracle.hpp"

using namespace liaison;

namespace {

double run_ms(const std::string& claim, const SearchWindow& w, RunMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimReport r = check_claim(claim, w, mode);
  auto t1 = std::chrono::steady_clock::now();
  if (!r.ok()) std::printf("  !! %zu counterexamples\n", r.counterexamples.size());
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  SearchWindow w{0, 5, 3, 3};
  if (argc > 1 && std::string(argv[1]) == "--wide") w = SearchWindow{0, 6, 3, 3};
  std::printf("window [%lld, %lld], |values| <= %lld, heights <= %lld\n",
              static_cast<long long>(w.lo), static_cast<long long>(w.hi),
              static_cast<long long>(w.max_abs), static_cast<long long>(w.max_height));
  std::printf("%-28s %12s %12s %8s\n", "claim", "serial[ms]", "parallel[ms]", "speedup");
  for (const auto& name : claim_names()) {
    double serial = run_ms(name, w, RunMode::serial);
    double parallel = run_ms(name, w, RunMode::parallel);
    std::printf("%-28s %12.1f %12.1f %7.2fx\n", name.c_str(), serial, parallel,
                serial / parallel);
  }
  return 0;
}
