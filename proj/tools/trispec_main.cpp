#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "trispec/core.hpp"
#include "trispec/euclidean.hpp"
#include "trispec/output.hpp"
#include "trispec/spherical.hpp"
#include "trispec/verify.hpp"

namespace {

using namespace trispec;

// Usage-class problems (bad orders, unsupported geometry for the subcommand).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_order(const std::string& text) {
  if (text == "inf") return kUnboundedOrder;
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("order must be an integer >= 2 or 'inf', got '" + text +
                     "'");
  return value;
}

TriangleSignature make_signature(const std::string& p, const std::string& q,
                                 const std::string& r) {
  try {
    return TriangleSignature(parse_order(p), parse_order(q), parse_order(r));
  } catch (const NonCocompactError& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
}

TriangleSignature require_compact_geometry(const TriangleSignature& sig) {
  if (classify(sig) == GeometryClass::Hyperbolic)
    throw UsageError(
        "hyperbolic signatures are unsupported: their quotients have no "
        "integer spectrum of this form and are outside this calculator");
  return sig;
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

OutputRecord make_record(const TriangleSignature& sig) {
  OutputRecord record;
  record.group = {sig.p(), sig.q(), sig.r()};
  record.geometry = to_string(classify(sig));
  record.normalization = normalization_note(sig);
  return record;
}

int cmd_spectrum(const TriangleSignature& sig, long long max_value,
                 bool by_degree, bool include_zeros, const std::string& format) {
  require_compact_geometry(sig);
  OutputRecord record = make_record(sig);
  if (classify(sig) == GeometryClass::Spherical) {
    for (long long l = 0;; ++l) {
      const long long lambda = l * (l + 1);
      if (by_degree ? l > max_value : lambda > max_value) break;
      const long long mu = multiplicity_closed(sig, l);
      if (mu == 0 && !include_zeros) continue;
      record.entries.push_back({lambda, mu, int(l)});
    }
  } else {
    if (by_degree)
      throw UsageError("--by-degree applies to spherical signatures only");
    if (max_value < 0) throw UsageError("--max must be non-negative");
    const std::vector<long long> mu = orbifold_multiplicities(sig, max_value);
    for (long long lambda = 0; lambda <= max_value; ++lambda) {
      if (mu[lambda] == 0 && !include_zeros) continue;
      record.entries.push_back({lambda, mu[lambda], std::nullopt});
    }
  }
  std::cout << (format == "json" ? to_json(record) : to_csv(record));
  return 0;
}

int cmd_multiplicity(const TriangleSignature& sig,
                     const std::optional<std::string>& lambda_text,
                     const std::optional<long long>& degree) {
  require_compact_geometry(sig);
  const bool spherical = classify(sig) == GeometryClass::Spherical;
  if (degree) {
    if (!spherical)
      throw UsageError("--degree applies to spherical signatures only");
    if (*degree < 0) throw UsageError("--degree must be non-negative");
    std::cout << multiplicity_closed(sig, *degree) << "\n";
    return 0;
  }
  const std::string& text = *lambda_text;
  long long lambda = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), lambda);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    // The spectrum is integral under this normalization, so any non-integer
    // query has multiplicity zero; reject strings that are not numbers.
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(value))
      throw UsageError("--lambda must be a number, got '" + text + "'");
    if (value != std::floor(value) || std::abs(value) > 9e18) {
      std::cout << 0 << "\n";
      return 0;
    }
    lambda = static_cast<long long>(value);
  }
  if (lambda < 0) {
    std::cout << 0 << "\n";
    return 0;
  }
  if (spherical) {
    // lambda = l(l+1) for some integer l, otherwise multiplicity 0.
    const long long l = static_cast<long long>(std::llround(
        (std::sqrt(4.0 * static_cast<double>(lambda) + 1.0) - 1.0) / 2.0));
    std::cout << (l * (l + 1) == lambda ? multiplicity_closed(sig, l) : 0)
              << "\n";
  } else {
    std::cout << orbifold_multiplicity(sig, lambda) << "\n";
  }
  return 0;
}

int cmd_census(const TriangleSignature& sig) {
  require_compact_geometry(sig);
  if (classify(sig) == GeometryClass::Spherical) {
    std::cout << "turn,count\n";
    for (const auto& entry : angle_census(sig))
      std::cout << rational_str(entry.turn) << ',' << entry.count << '\n';
    return 0;
  }
  const LatticeModel model = lattice_model(sig);
  const bool hex = model.kind == LatticeKind::Hexagonal;
  std::cout << "lattice: " << (hex ? "hexagonal" : "square") << "\n"
            << "tau: " << (hex ? "(4*pi/sqrt(3), 0)" : "(2*pi, 0)") << " = ("
            << format_double(model.tau.x()) << ", "
            << format_double(model.tau.y()) << ")\n"
            << "sigma: " << (hex ? "(2*pi/sqrt(3), 2*pi)" : "(0, 2*pi)")
            << " = (" << format_double(model.sigma.x()) << ", "
            << format_double(model.sigma.y()) << ")\n"
            << "dual form: "
            << (hex ? "m^2 + m*n + n^2" : "m^2 + n^2") << "\n"
            << "quotient order: " << model.quotient_order << "\n"
            << "torus multiplicity: " << model.divisor_formula.scale << "*(d_{"
            << model.divisor_formula.plus_residue << " mod "
            << model.divisor_formula.modulus << "} - d_{"
            << model.divisor_formula.minus_residue << " mod "
            << model.divisor_formula.modulus << "})\n";
  return 0;
}

int cmd_count(const TriangleSignature& sig, long long max_value) {
  require_compact_geometry(sig);
  if (max_value < 0) throw UsageError("--max must be non-negative");
  if (classify(sig) == GeometryClass::Spherical) {
    const long long count = counting_spherical(sig, max_value);
    const double lead = double((max_value + 1) * (max_value + 1)) /
                        double(group_order(sig));
    std::cout << "count: " << count << "\n"
              << "weyl leading term (L+1)^2/|G|: " << format_double(lead)
              << "\n"
              << "remainder: " << format_double(double(count) - lead) << "\n";
  } else {
    const long long count = counting_euclidean(sig, max_value);
    const double lead =
        euclidean_weyl_coefficient(sig) * double(max_value);
    std::cout << "count: " << count << "\n"
              << "weyl leading term c*Lambda: " << format_double(lead) << "\n"
              << "remainder: " << format_double(double(count) - lead) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, long long max_value, int jobs,
               unsigned long long seed) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
  std::vector<std::string> to_run;
  if (suite == "all")
    to_run = suite_names();
  else
    to_run.push_back(suite);

  SuiteOptions options;
  options.max = max_value;
  options.seed = seed;
  bool all_passed = true;
  for (const auto& name : to_run) {
    const SuiteResult result = run_suite(name, options);
    all_passed = all_passed && result.passed();
    std::cout << "[" << result.name << "] "
              << (result.passed() ? "PASS" : "FAIL")
              << " checks=" << result.checks
              << " failures=" << result.failures;
    if (!result.summary.empty()) std::cout << " (" << result.summary << ")";
    std::cout << "\n";
    for (const auto& note : result.failure_notes)
      std::cout << "    " << note << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Laplace-Beltrami spectra of spherical and euclidean "
      "triangle-group quotient orbifolds"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string p, q, r;
  auto add_signature_args = [&](CLI::App* sub) {
    sub->add_option("p", p, "first generator order (or 'inf')")->required();
    sub->add_option("q", q, "second generator order (or 'inf')")->required();
    sub->add_option("r", r, "product order (or 'inf')")->required();
  };

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "geometry class of the signature");
  add_signature_args(classify_cmd);

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  add_signature_args(spectrum_cmd);
  long long spectrum_max = 0;
  bool by_degree = false, include_zeros = false;
  std::string format = "csv";
  spectrum_cmd->add_option("--max", spectrum_max,
                           "largest eigenvalue (or degree with --by-degree)")
      ->required();
  spectrum_cmd->add_flag("--by-degree", by_degree,
                         "interpret --max as the degree l (spherical only)");
  spectrum_cmd->add_flag("--include-zeros", include_zeros,
                         "keep zero-multiplicity rows");
  spectrum_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* multiplicity_cmd =
      app.add_subcommand("multiplicity", "single multiplicity value");
  add_signature_args(multiplicity_cmd);
  std::string lambda_text;
  long long degree_value = 0;
  CLI::Option* lambda_opt = multiplicity_cmd->add_option(
      "--lambda", lambda_text, "eigenvalue (non-integers have multiplicity 0)");
  CLI::Option* degree_opt = multiplicity_cmd->add_option(
      "--degree", degree_value, "spherical degree l (eigenvalue l(l+1))");
  lambda_opt->excludes(degree_opt);
  degree_opt->excludes(lambda_opt);

  CLI::App* census_cmd = app.add_subcommand(
      "census", "angle census (spherical) or lattice summary (euclidean)");
  add_signature_args(census_cmd);

  CLI::App* count_cmd =
      app.add_subcommand("count", "eigenvalue counting function and Weyl term");
  add_signature_args(count_cmd);
  long long count_max = 0;
  count_cmd
      ->add_option("--max", count_max,
                   "degree bound L (spherical) or eigenvalue bound (euclidean)")
      ->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the cross-verification suites");
  std::string suite = "all";
  long long verify_max = 0;
  int jobs = 0;
  unsigned long long seed = kDefaultEigenlabSeed;
  bool seed_given = false;
  verify_cmd->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember(
          {"all", "charsum", "lattice", "eisenstein", "relations", "weyl",
           "eigenlab"}));
  verify_cmd->add_option("--max", verify_max,
                         "override the suite's default sweep bound");
  verify_cmd->add_option("--jobs", jobs, "worker thread count (0 = default)");
  CLI::Option* seed_opt =
      verify_cmd->add_option("--seed", seed, "sampling seed");
  seed_opt->each([&](const std::string&) { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      try {
        std::cout << to_string(classify(make_signature(p, q, r))) << "\n";
        return 0;
      } catch (const UsageError& e) {
        // (2,2,inf) and friends: report the obstruction rather than a class.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    if (spectrum_cmd->parsed())
      return cmd_spectrum(make_signature(p, q, r), spectrum_max, by_degree,
                          include_zeros, format);
    if (multiplicity_cmd->parsed()) {
      if (lambda_opt->count() == 0 && degree_opt->count() == 0)
        throw UsageError("multiplicity requires --lambda or --degree");
      return cmd_multiplicity(
          make_signature(p, q, r),
          lambda_opt->count() ? std::optional<std::string>(lambda_text)
                              : std::nullopt,
          degree_opt->count() ? std::optional<long long>(degree_value)
                              : std::nullopt);
    }
    if (census_cmd->parsed()) return cmd_census(make_signature(p, q, r));
    if (count_cmd->parsed())
      return cmd_count(make_signature(p, q, r), count_max);
    if (verify_cmd->parsed()) {
      if (!seed_given) {
        if (const char* env = std::getenv("TRISPEC_SEED"))
          seed = std::strtoull(env, nullptr, 10);
      }
      return cmd_verify(suite, verify_max, jobs, seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
