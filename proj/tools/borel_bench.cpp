// Compares the serial reference enumeration kernels against the OpenMP
// worksharing variants on instances big enough to time, and checks that the
// two produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "borel/enumerate.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

using namespace borel;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

Monomial staircase(int d) {
  std::vector<int> idx(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<size_t>(i)] = i + 1;
  return Monomial::from_factorization(d, idx);
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-34s %10.2f %10.2f %9.2fx   %s\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
  int scale = 13;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--big") scale = 14;
    if (arg == "--small") scale = 11;
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel policy falls back to serial\n");
#endif
  std::printf("%-34s %10s %10s %10s\n", "kernel", "serial/ms", "omp/ms", "speedup");

  {
    Monomial shape = staircase(scale);
    std::vector<Monomial> serial, parallel;
    double s = time_ms([&] { serial = expand_orbit(shape, false, Exec::serial); });
    double p = time_ms([&] { parallel = expand_orbit(shape, false, Exec::parallel); });
    std::string name = "expand_orbit x1..x" + std::to_string(scale) + " (" +
                       std::to_string(serial.size()) + ")";
    report(name.c_str(), s, p, serial == parallel);
  }

  {
    Monomial shape = staircase(scale + 1);
    std::vector<std::uint64_t> serial, parallel;
    double s = time_ms([&] { serial = count_orbit_by_max(shape, false, Exec::serial); });
    double p = time_ms([&] { parallel = count_orbit_by_max(shape, false, Exec::parallel); });
    std::string name = "count_orbit_by_max x1..x" + std::to_string(scale + 1);
    report(name.c_str(), s, p, serial == parallel);
  }

  {
    const int n = 9, degree = scale + 1;
    BorelIdeal b = BorelIdeal::borel({Monomial(n, {0, 0, 2, 1, 2, 0, 0, 0, 0})}, n);
    auto outside = [&](const Monomial& m) { return !b.contains(m); };
    std::uint64_t serial = 0, parallel = 0;
    double s = time_ms([&] { serial = count_monomials_where(n, degree, outside, Exec::serial); });
    double p = time_ms([&] { parallel = count_monomials_where(n, degree, outside, Exec::parallel); });
    std::string name = "std-monomial scan n=9 deg=" + std::to_string(degree);
    report(name.c_str(), s, p, serial == parallel);
  }

  return 0;
}
