#include "trispec/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trispec {

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return x - Rational(floor_rat(x)) - Rational(1, 2);
}

long long divisor_count_mod(long long N, long long r, long long s) {
  if (N < 1) throw std::domain_error("divisor_count_mod requires N >= 1");
  if (s < 1 || r < 0 || r >= s)
    throw std::domain_error("divisor_count_mod requires 0 <= r < s");
  long long count = 0;
  for (long long d = 1; d * d <= N; ++d) {
    if (N % d != 0) continue;
    if (d % s == r) ++count;
    long long e = N / d;
    if (e != d && e % s == r) ++count;
  }
  return count;
}

long long divisor_count(long long N) {
  if (N < 1) throw std::domain_error("divisor_count requires N >= 1");
  long long count = 0;
  for (long long d = 1; d * d <= N; ++d) {
    if (N % d != 0) continue;
    count += (N / d == d) ? 1 : 2;
  }
  return count;
}

double QuadraticForm::min_eigenvalue() const {
  double ad = double(a), bd = double(b), cd = double(c);
  return 0.5 * (ad + cd - std::sqrt((ad - cd) * (ad - cd) + bd * bd));
}

long long QuadraticForm::enumeration_bound(long long N) const {
  if (!positive_definite())
    throw std::invalid_argument("form must be positive definite");
  if (N <= 0) return 0;
  // form(m,n) >= lambda_min (m^2 + n^2), so |m| <= sqrt(N / lambda_min).
  return static_cast<long long>(std::ceil(std::sqrt(double(N) / min_eigenvalue()))) + 1;
}

long long representation_count(const QuadraticForm& form, long long N) {
  if (N < 0) return 0;
  if (N == 0) return 1;
  const long long B = form.enumeration_bound(N);
  long long count = 0;
  for (long long m = -B; m <= B; ++m)
    for (long long n = -B; n <= B; ++n)
      if (form(m, n) == N) ++count;
  return count;
}

std::vector<long long> representation_counts_serial(const QuadraticForm& form,
                                                    long long lambda_max) {
  if (lambda_max < 0) throw std::domain_error("lambda_max must be >= 0");
  const long long B = form.enumeration_bound(lambda_max);
  std::vector<long long> counts(lambda_max + 1, 0);
  for (long long m = -B; m <= B; ++m)
    for (long long n = -B; n <= B; ++n) {
      long long v = form(m, n);
      if (v <= lambda_max) ++counts[v];
    }
  return counts;
}

std::vector<long long> representation_counts(const QuadraticForm& form,
                                             long long lambda_max) {
  if (lambda_max < 0) throw std::domain_error("lambda_max must be >= 0");
  const long long B = form.enumeration_bound(lambda_max);
  std::vector<long long> counts(lambda_max + 1, 0);
#pragma omp parallel
  {
    std::vector<long long> local(lambda_max + 1, 0);
#pragma omp for nowait schedule(static)
    for (long long m = -B; m <= B; ++m)
      for (long long n = -B; n <= B; ++n) {
        long long v = form(m, n);
        if (v <= lambda_max) ++local[v];
      }
#pragma omp critical
    for (long long v = 0; v <= lambda_max; ++v) counts[v] += local[v];
  }
  return counts;
}

namespace {

// Adds the divisor deltas for outputs in [lo, hi).  Only the two residue
// progressions contribute, so step through them directly instead of scanning
// every candidate divisor.
void sieve_block(std::vector<long long>& delta, long long lo, long long hi,
                 long long s, long long rp, long long rm) {
  const auto progression = [&](long long first, long long inc) {
    if (first == 0) first = s;  // divisors start at 1
    for (long long d = first; d < hi; d += s) {
      long long k = std::max(d, ((lo + d - 1) / d) * d);
      for (; k < hi; k += d) delta[k] += inc;
    }
  };
  progression(rp, 1);
  progression(rm, -1);
}

void check_divisor_args(long long s, long long rp, long long rm) {
  if (s < 1 || rp < 0 || rp >= s || rm < 0 || rm >= s || rp == rm)
    throw std::domain_error("divisor delta requires distinct residues in [0, s)");
}

}  // namespace

std::vector<long long> divisor_delta_table_serial(long long lambda_max,
                                                  long long s, long long rp,
                                                  long long rm) {
  check_divisor_args(s, rp, rm);
  std::vector<long long> delta(std::max<long long>(lambda_max, 0) + 1, 0);
  sieve_block(delta, 1, lambda_max + 1, s, rp, rm);
  return delta;
}

std::vector<long long> divisor_delta_table(long long lambda_max, long long s,
                                           long long rp, long long rm) {
  check_divisor_args(s, rp, rm);
  std::vector<long long> delta(std::max<long long>(lambda_max, 0) + 1, 0);
  const long long block = std::max<long long>(4096, lambda_max / 64 + 1);
  const long long nblocks = (lambda_max + block) / block;
#pragma omp parallel for schedule(dynamic)
  for (long long bi = 0; bi < nblocks; ++bi) {
    long long lo = std::max<long long>(1, bi * block);
    long long hi = std::min(lambda_max + 1, (bi + 1) * block);
    if (lo < hi) sieve_block(delta, lo, hi, s, rp, rm);
  }
  return delta;
}

namespace {

// Max over l <= l_max of the residual for one fixed n; the cotangent table
// is shared across l so the serial and parallel sweeps compute identical
// floating-point values.
void eisenstein_row_max(long long n, long long l_max, double& best,
                        long long& best_l) {
  const double pi = std::numbers::pi;
  std::vector<double> cot(n), angle(n);
  for (long long s = 1; s < n; ++s) {
    double a = pi * double(s) / double(n);
    angle[s] = a;
    cot[s] = std::cos(a) / std::sin(a);
  }
  best = -1.0;
  best_l = 0;
  for (long long l = 0; l <= l_max; ++l) {
    double sum = 0.0;
    for (long long s = 1; s < n; ++s)
      sum += std::sin(2.0 * double(l) * angle[s]) * cot[s];
    double rhs = -sum / (2.0 * double(n));
    double lhs = to_double(sawtooth(Rational(l % n, n)));
    double res = std::abs(lhs - rhs);
    if (res > best) {
      best = res;
      best_l = l;
    }
  }
}

bool improves(const ResidualMax& cur, double value, long long l, long long n) {
  if (value != cur.value) return value > cur.value;
  if (n != cur.n) return n < cur.n;
  return l < cur.l;
}

}  // namespace

double eisenstein_residual(long long l, long long n) {
  if (n < 2) throw std::domain_error("eisenstein_residual requires n >= 2");
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (long long s = 1; s < n; ++s) {
    double a = pi * double(s) / double(n);
    sum += std::sin(2.0 * double(l) * a) * (std::cos(a) / std::sin(a));
  }
  double rhs = -sum / (2.0 * double(n));
  double lhs = to_double(sawtooth(Rational(l, n)));
  return std::abs(lhs - rhs);
}

ResidualMax max_eisenstein_residual_serial(long long l_max, long long n_max) {
  if (n_max < 2) throw std::domain_error("n_max must be >= 2");
  ResidualMax out;
  for (long long n = 2; n <= n_max; ++n) {
    double v;
    long long l;
    eisenstein_row_max(n, l_max, v, l);
    if (improves(out, v, l, n)) out = {v, l, n};
  }
  return out;
}

ResidualMax max_eisenstein_residual(long long l_max, long long n_max) {
  if (n_max < 2) throw std::domain_error("n_max must be >= 2");
  ResidualMax out;
#pragma omp parallel
  {
    ResidualMax local;
#pragma omp for nowait schedule(dynamic)
    for (long long n = 2; n <= n_max; ++n) {
      double v;
      long long l;
      eisenstein_row_max(n, l_max, v, l);
      if (improves(local, v, l, n)) local = {v, l, n};
    }
#pragma omp critical
    if (local.value >= 0 && improves(out, local.value, local.l, local.n))
      out = local;
  }
  return out;
}

}  // namespace trispec
