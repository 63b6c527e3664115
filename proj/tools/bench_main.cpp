// Times each parallel kernel against its serial reference and checks that
// they produce identical results.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "trispec/euclidean.hpp"
#include "trispec/numtheory.hpp"
#include "trispec/spherical.hpp"

namespace {

template <typename F>
double seconds(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

struct BenchCase {
  std::string name;
  std::function<bool(double& serial_s, double& parallel_s)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel comparison"};
  int jobs = 0;
  bool quick = false;
  app.add_option("--jobs", jobs, "worker thread count (0 = default)");
  app.add_flag("--quick", quick, "smaller problem sizes");
  CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not available, both columns run serially\n");
#endif

  using namespace trispec;
  const long long rep_max = quick ? 20000 : 200000;
  const long long sieve_max = quick ? 200000 : 2000000;
  const long long eis_l = quick ? 1000 : 5000;
  const long long charsum_l = quick ? 4000 : 20000;

  std::vector<BenchCase> cases;
  cases.push_back({"representation counts (hex, lambda <= " +
                       std::to_string(rep_max) + ")",
                   [&](double& s, double& p) {
                     std::vector<long long> a, b;
                     s = seconds([&] {
                       a = representation_counts_serial(kHexForm, rep_max);
                     });
                     p = seconds([&] {
                       b = representation_counts(kHexForm, rep_max);
                     });
                     return a == b;
                   }});
  cases.push_back({"divisor delta sieve (mod 3, lambda <= " +
                       std::to_string(sieve_max) + ")",
                   [&](double& s, double& p) {
                     std::vector<long long> a, b;
                     s = seconds([&] {
                       a = divisor_delta_table_serial(sieve_max, 3, 1, 2);
                     });
                     p = seconds(
                         [&] { b = divisor_delta_table(sieve_max, 3, 1, 2); });
                     return a == b;
                   }});
  cases.push_back({"sawtooth identity residual grid (l <= " +
                       std::to_string(eis_l) + ", n <= 200)",
                   [&](double& s, double& p) {
                     ResidualMax a, b;
                     s = seconds(
                         [&] { a = max_eisenstein_residual_serial(eis_l, 200); });
                     p = seconds([&] { b = max_eisenstein_residual(eis_l, 200); });
                     return a.value == b.value && a.l == b.l && a.n == b.n;
                   }});
  cases.push_back({"character sums ((2,2,60), l <= " +
                       std::to_string(charsum_l) + ")",
                   [&](double& s, double& p) {
                     std::vector<long long> a, b;
                     const TriangleSignature sig(2, 2, 60);
                     s = seconds([&] {
                       a = charsum_multiplicities_serial(sig, charsum_l);
                     });
                     p = seconds(
                         [&] { b = charsum_multiplicities(sig, charsum_l); });
                     return a == b;
                   }});
  cases.push_back({"orbifold multiplicities ((2,3,6), lambda <= " +
                       std::to_string(sieve_max) + ")",
                   [&](double& s, double& p) {
                     std::vector<long long> a, b;
                     const TriangleSignature sig(2, 3, 6);
                     s = seconds([&] {
                       a = orbifold_multiplicities_serial(sig, sieve_max);
                     });
                     p = seconds(
                         [&] { b = orbifold_multiplicities(sig, sieve_max); });
                     return a == b;
                   }});

  bool all_equal = true;
  std::printf("%-58s %10s %10s %8s %6s\n", "kernel", "serial[s]", "parallel[s]",
              "speedup", "equal");
  for (auto& bench : cases) {
    double s = 0.0, p = 0.0;
    const bool equal = bench.run(s, p);
    all_equal = all_equal && equal;
    std::printf("%-58s %10.3f %10.3f %7.2fx %6s\n", bench.name.c_str(), s, p,
                p > 0 ? s / p : 0.0, equal ? "yes" : "NO");
  }
  return all_equal ? 0 : 1;
}
