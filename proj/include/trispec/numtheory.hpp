#pragma once

#include <vector>

#include "trispec/rational.hpp"

namespace trispec {

// ((x)): 0 at integers, x - floor(x) - 1/2 otherwise. Exact.
Rational sawtooth(const Rational& x);

// d_{r,s}(N): number of divisors of N congruent to r mod s. Trial division.
long long divisor_count_mod(long long N, long long r, long long s);

long long divisor_count(long long N);

// Binary quadratic form a m^2 + b mn + c n^2 with integer coefficients.
struct QuadraticForm {
  long long a = 1, b = 0, c = 1;

  long long operator()(long long m, long long n) const {
    return a * m * m + b * m * n + c * n * n;
  }
  bool positive_definite() const { return a > 0 && 4 * a * c - b * b > 0; }

  // Smaller eigenvalue of [[a, b/2], [b/2, c]].
  double min_eigenvalue() const;

  // Every (m,n) with form value <= N satisfies |m|, |n| <= this bound.
  long long enumeration_bound(long long N) const;

  bool operator==(const QuadraticForm&) const = default;
};

inline constexpr QuadraticForm kHexForm{1, 1, 1};     // m^2 + mn + n^2
inline constexpr QuadraticForm kSquareForm{1, 0, 1};  // m^2 + n^2

// mu_T(lambda) = scale * (d_{plus,mod}(lambda) - d_{minus,mod}(lambda)).
struct DivisorFormula {
  long long scale;
  long long modulus;
  long long plus_residue;
  long long minus_residue;
};

// #{(m,n) in Z^2 : form(m,n) = N}, by exhaustive enumeration over the box.
long long representation_count(const QuadraticForm& form, long long N);

// counts[v] = #{(m,n) : form(m,n) = v} for 0 <= v <= lambda_max.
// The parallel and serial versions produce identical tables.
std::vector<long long> representation_counts(const QuadraticForm& form,
                                             long long lambda_max);
std::vector<long long> representation_counts_serial(const QuadraticForm& form,
                                                    long long lambda_max);

// delta[v] = d_{plus,s}(v) - d_{minus,s}(v) for 1 <= v <= lambda_max
// (delta[0] = 0). Sieve over arithmetic progressions of divisors.
std::vector<long long> divisor_delta_table(long long lambda_max, long long s,
                                           long long plus_residue,
                                           long long minus_residue);
std::vector<long long> divisor_delta_table_serial(long long lambda_max,
                                                  long long s,
                                                  long long plus_residue,
                                                  long long minus_residue);

// | ((l/n)) + (1/2n) sum_{s=1}^{n-1} sin(2 l s pi / n) cot(s pi / n) |.
// The left side is exact, the sum is evaluated in floating point.
double eisenstein_residual(long long l, long long n);

struct ResidualMax {
  double value = -1.0;
  long long l = 0;
  long long n = 0;
};

// Max residual over 0 <= l <= l_max, 2 <= n <= n_max. Deterministic
// tie-break on (n, l) so the parallel and serial sweeps agree exactly.
ResidualMax max_eisenstein_residual(long long l_max, long long n_max);
ResidualMax max_eisenstein_residual_serial(long long l_max, long long n_max);

}  // namespace trispec
