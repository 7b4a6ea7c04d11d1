// Command-line front end: theta queries, row tables, verification sweeps
// against the enumeration oracle, valuation-pattern plots, and engine
// benchmarks. Data goes to stdout (or --out), diagnostics to stderr.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thetap/carry_dp.hpp"
#include "thetap/oracle.hpp"
#include "thetap/word_formula.hpp"

using namespace thetap;

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::uint64_t parse_u64_token(const std::string& token, const char* what) {
  Natural n = parse_natural(token);  // rejects signs and junk
  if (!n.fits_ulong_p())
    throw std::invalid_argument(std::string(what) + ": value out of range");
  return n.get_ui();
}

DigitVector digits_from_list(const std::string& text, PrimeModulus p) {
  std::vector<std::uint32_t> digits;
  for (const std::string& token : split_list(text)) {
    std::uint64_t v = parse_u64_token(token, "--digits");
    if (v >= p.value())
      throw std::invalid_argument("--digits: digit " + token +
                                  " out of range for base " +
                                  std::to_string(p.value()));
    digits.push_back(static_cast<std::uint32_t>(v));
  }
  return DigitVector(std::move(digits), p);
}

std::vector<PrimeModulus> parse_primes(const std::string& text) {
  std::vector<PrimeModulus> primes;
  for (const std::string& token : split_list(text))
    primes.emplace_back(parse_u64_token(token, "--primes"));
  if (primes.empty()) throw std::invalid_argument("--primes: empty list");
  return primes;
}

std::vector<std::string> to_strings(const std::vector<Natural>& counts) {
  std::vector<std::string> out;
  out.reserve(counts.size());
  for (const Natural& c : counts) out.push_back(to_decimal(c));
  return out;
}

std::uint64_t fnv1a(const std::string& text, std::uint64_t h) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t digest_counts(const std::vector<Natural>& counts) {
  std::uint64_t h = 14695981039346656037ull;
  for (const Natural& c : counts) h = fnv1a(to_decimal(c) + ",", h);
  return h;
}

// ----------------------------------------------------------------------
// theta

struct ThetaOptions {
  std::uint64_t p = 0;
  std::string n_text;
  std::string digits_text;
  long long j = -1;
  bool has_j = false;
  std::string engine = "auto";
  std::string format = "plain";
  bool force = false;
};

constexpr std::size_t kWordSumCap = 24;

int run_theta(const ThetaOptions& opt) {
  PrimeModulus p(opt.p);
  if (opt.n_text.empty() == opt.digits_text.empty())
    throw std::invalid_argument("theta: exactly one of --n or --digits required");
  DigitVector d = opt.digits_text.empty()
                      ? digits_base_p(parse_natural(opt.n_text), p)
                      : digits_from_list(opt.digits_text, p);
  if (opt.has_j && opt.j < 0)
    throw std::invalid_argument("theta: --j must be nonnegative");

  const std::string engine = opt.engine == "auto" ? "dp" : opt.engine;
  if (engine == "word-sum" && d.r() > kWordSumCap && !opt.force)
    throw std::invalid_argument(
        "theta: word-sum engine refused for r = " + std::to_string(d.r()) +
        " (> " + std::to_string(kWordSumCap) + "); use --force to override");

  std::vector<Natural> counts;
  if (opt.has_j) {
    counts.push_back(engine == "word-sum" ? theta_word_sum(d, opt.j)
                                          : theta_single_dp(d, opt.j));
  } else if (engine == "word-sum") {
    for (long j = 0; j <= static_cast<long>(d.r()); ++j)
      counts.push_back(theta_word_sum(d, j));
  } else {
    counts = theta_all_dp(d).counts;
  }

  const std::vector<std::string> theta = to_strings(counts);
  const std::string n_dec = to_decimal(natural_from_digits(d));

  if (opt.format == "plain") {
    for (std::size_t i = 0; i < theta.size(); ++i)
      std::cout << (i ? " " : "") << theta[i];
    std::cout << "\n";
  } else if (opt.format == "json") {
    nlohmann::json rec{{"n", n_dec},
                       {"p", p.value()},
                       {"r", d.r()},
                       {"theta", theta},
                       {"engine", engine}};
    if (opt.has_j) rec["j"] = opt.j;
    std::cout << rec.dump() << "\n";
  } else {  // csv
    if (opt.has_j) {
      std::cout << "n,p,r,j,value\n"
                << n_dec << "," << p.value() << "," << d.r() << "," << opt.j
                << "," << theta[0] << "\n";
    } else {
      std::cout << "n,p,r";
      for (std::size_t j = 0; j < theta.size(); ++j) std::cout << ",theta_" << j;
      std::cout << "\n" << n_dec << "," << p.value() << "," << d.r();
      for (const std::string& t : theta) std::cout << "," << t;
      std::cout << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::uint64_t max_n = 1024;
  std::string primes = "2,3,5,7,11,13";
  bool per_word = false;
  std::uint64_t per_word_max_n = 256;
  int jobs = 1;
  bool inject_fault = false;
};

std::uint64_t faulty_transition(std::uint32_t c, PrimeModulus p, bool carry_in,
                                bool carry_out) {
  if (!carry_in && carry_out) return p.value() - c;  // off by one
  return transition_factor(c, p, carry_in, carry_out);
}

int run_verify(const VerifyOptions& opt) {
  const std::vector<PrimeModulus> primes = parse_primes(opt.primes);
  const TransitionFactorFn factor =
      opt.inject_fault ? &faulty_transition : &transition_factor;
  std::uint64_t rows_checked = 0;

  for (PrimeModulus p : primes) {
    const long long count = static_cast<long long>(opt.max_n) + 1;
    long long first_bad = count;  // sentinel: nothing failed
#pragma omp parallel for schedule(dynamic, 16) num_threads(opt.jobs > 0 ? opt.jobs : omp_get_max_threads()) \
    reduction(min : first_bad) if (opt.jobs != 1)
    for (long long n = 0; n < count; ++n) {
      DigitVector d =
          digits_base_p(Natural(static_cast<unsigned long>(n)), p);
      if (theta_all_dp(d, factor).counts != brute_histogram_serial(d).counts)
        if (n < first_bad) first_bad = n;
    }
    if (first_bad < count) {
      DigitVector d = digits_base_p(
          Natural(static_cast<unsigned long>(first_bad)), p);
      const std::vector<Natural> formula = theta_all_dp(d, factor).counts;
      const std::vector<Natural> oracle = brute_histogram_serial(d).counts;
      for (std::size_t j = 0; j < formula.size(); ++j) {
        if (formula[j] != oracle[j]) {
          std::cout << "MISMATCH n=" << first_bad << " p=" << p.value()
                    << " j=" << j << " formula=" << to_decimal(formula[j])
                    << " oracle=" << to_decimal(oracle[j]) << "\n";
          break;
        }
      }
      return 1;
    }
    rows_checked += opt.max_n + 1;
    std::cout << "p=" << p.value()
              << ": theta vectors match the enumeration oracle for n in [0, "
              << opt.max_n << "]\n";
  }

  if (opt.per_word) {
    for (PrimeModulus p : primes) {
      for (std::uint64_t n = 0; n <= opt.per_word_max_n; ++n) {
        DigitVector d = digits_base_p(Natural(static_cast<unsigned long>(n)), p);
        for (const auto& [w, count] : per_word_counts(d)) {
          if (term_value(w, d) != count) {
            std::cout << "MISMATCH n=" << n << " p=" << p.value() << " word="
                      << format_word(w) << " term=" << to_decimal(term_value(w, d))
                      << " oracle=" << to_decimal(count) << "\n";
            return 1;
          }
        }
      }
      std::cout << "p=" << p.value()
                << ": per-word counts match term values for n in [0, "
                << opt.per_word_max_n << "]\n";
    }
  }

  std::cout << "verified " << rows_checked << " rows; all counts match\n";
  return 0;
}

// ----------------------------------------------------------------------
// table

struct TableOptions {
  std::uint64_t p = 0;
  std::string n_start;
  std::string n_end;
  std::string out_path;
  std::string format = "csv";
};

int run_table(const TableOptions& opt) {
  PrimeModulus p(opt.p);
  const Natural a = parse_natural(opt.n_start);
  const Natural b = parse_natural(opt.n_end);
  if (a > b) throw std::invalid_argument("table: --n-start exceeds --n-end");

  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) throw std::invalid_argument("table: cannot open " + opt.out_path);
  }
  std::ostream& out = opt.out_path.empty() ? std::cout : file;

  const std::size_t rmax = digits_base_p(b, p).r();
  const bool json = opt.format == "json";
  if (json) out << "[";
  bool first = true;
  for (Natural n = a; n <= b; ++n) {
    DigitVector d = digits_base_p(n, p);
    ThetaVector t = theta_all_dp(d);
    if (json) {
      nlohmann::json rec{{"n", to_decimal(n)},
                         {"p", p.value()},
                         {"r", d.r()},
                         {"theta", to_strings(t.counts)}};
      out << (first ? "\n" : ",\n") << rec.dump();
      first = false;
    } else {
      out << to_decimal(n) << "," << d.r();
      for (std::size_t j = 0; j <= rmax; ++j)
        out << "," << (j < t.counts.size() ? to_decimal(t.counts[j]) : "0");
      out << "\n";
    }
  }
  if (json) out << "\n]\n";
  return 0;
}

// ----------------------------------------------------------------------
// plot

struct PlotOptions {
  std::uint64_t p = 0;
  std::uint64_t rows = 0;
  std::string out_path;
};

int run_plot(const PlotOptions& opt) {
  PrimeModulus p(opt.p);
  if (opt.rows < 1 || opt.rows > 4096)
    throw std::invalid_argument("plot: --rows must lie in [1, 4096]");
  const std::size_t n_rows = static_cast<std::size_t>(opt.rows);

  std::vector<std::vector<std::uint8_t>> rows(n_rows);
  std::uint32_t max_val = 0;
  for (std::size_t n = 0; n < n_rows; ++n) {
    rows[n] = row_valuations(
        digits_base_p(Natural(static_cast<unsigned long>(n)), p));
    for (std::uint8_t v : rows[n]) max_val = std::max<std::uint32_t>(max_val, v);
  }
  const std::uint32_t background = max_val + 1;

  std::ofstream file(opt.out_path);
  if (!file) throw std::invalid_argument("plot: cannot open " + opt.out_path);
  file << "P2\n" << n_rows << " " << n_rows << "\n" << background << "\n";
  for (std::size_t n = 0; n < n_rows; ++n) {
    for (std::size_t k = 0; k < n_rows; ++k) {
      if (k) file << " ";
      file << (k < rows[n].size() ? static_cast<std::uint32_t>(rows[n][k])
                                  : background);
    }
    file << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------------
// bench

struct BenchOptions {
  std::uint64_t p = 0;
  std::string r_list;
  std::string engine_list = "word-sum,dp";
  std::uint64_t seed = 1;
  bool force = false;
};

int run_bench(const BenchOptions& opt) {
  PrimeModulus p(opt.p);
  std::vector<std::size_t> r_values;
  for (const std::string& token : split_list(opt.r_list))
    r_values.push_back(static_cast<std::size_t>(parse_u64_token(token, "--r-list")));
  if (r_values.empty()) throw std::invalid_argument("--r-list: empty list");
  const std::vector<std::string> engines = split_list(opt.engine_list);
  for (const std::string& engine : engines)
    if (engine != "word-sum" && engine != "dp")
      throw std::invalid_argument("bench: unknown engine \"" + engine + "\"");

  std::mt19937_64 rng(opt.seed);
  for (std::size_t r : r_values) {
    DigitVector d = random_digit_vector(p, r, rng);

    struct Timing {
      std::string engine;
      std::vector<Natural> counts;
      double ms = 0;
    };
    std::vector<Timing> timings;
    for (const std::string& engine : engines) {
      if (engine == "word-sum" && r > kWordSumCap && !opt.force) {
        std::cerr << "engine=word-sum r=" << r << " skipped: r > "
                  << kWordSumCap << " (use --force)\n";
        continue;
      }
      Timing t;
      t.engine = engine;
      const auto start = std::chrono::steady_clock::now();
      if (engine == "word-sum") {
        for (long j = 0; j <= static_cast<long>(r); ++j)
          t.counts.push_back(theta_word_sum(d, j));
      } else {
        t.counts = theta_all_dp(d).counts;
      }
      const auto stop = std::chrono::steady_clock::now();
      t.ms = std::chrono::duration<double, std::milli>(stop - start).count();
      timings.push_back(std::move(t));
    }

    for (std::size_t i = 1; i < timings.size(); ++i) {
      if (timings[i].counts != timings[0].counts) {
        std::cerr << "bench: engines disagree at r=" << r << " ("
                  << timings[0].engine << " vs " << timings[i].engine << ")\n";
        return 1;
      }
    }
    for (const Timing& t : timings) {
      char line[96];
      std::snprintf(line, sizeof line, "theta_digest=%016llx ms=%.3f",
                    static_cast<unsigned long long>(digest_counts(t.counts)), t.ms);
      std::cout << "engine=" << t.engine << " r=" << r << " " << line << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of binomial coefficients C(n,k) by the power of a prime dividing them"};
  app.require_subcommand(1);
  int rc = 0;

  ThetaOptions theta_opt;
  CLI::App* theta = app.add_subcommand(
      "theta", "Counts of C(n,k) with p-adic valuation exactly j, for one row n");
  theta->add_option("--p", theta_opt.p, "Prime base")->required();
  theta->add_option("--n", theta_opt.n_text, "Row index, decimal");
  theta->add_option("--digits", theta_opt.digits_text,
                    "Row index as little-endian base-p digits c0,c1,...,cr");
  CLI::Option* j_opt = theta->add_option("--j", theta_opt.j,
                                         "Report a single count instead of the whole vector");
  theta->add_option("--engine", theta_opt.engine, "auto | word-sum | dp")
      ->check(CLI::IsMember({"auto", "word-sum", "dp"}))
      ->capture_default_str();
  theta->add_option("--format", theta_opt.format, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  theta->add_flag("--force", theta_opt.force,
                  "Run the word-sum engine even above the r cap");
  theta->callback([&]() {
    theta_opt.has_j = j_opt->count() > 0;
    rc = run_theta(theta_opt);
  });

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Sweep rows and compare the evaluators against the enumeration oracle");
  verify->add_option("--max-n", verify_opt.max_n, "Top of the verified range")
      ->capture_default_str();
  verify->add_option("--primes", verify_opt.primes, "Comma-separated prime list")
      ->capture_default_str();
  verify->add_flag("--per-word", verify_opt.per_word,
                   "Also check every term against its per-word oracle count");
  verify->add_option("--per-word-max-n", verify_opt.per_word_max_n,
                     "Top of the per-word range")
      ->capture_default_str();
  verify->add_option("--jobs", verify_opt.jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();
  verify->add_flag("--inject-fault", verify_opt.inject_fault)->group("");
  verify->callback([&]() { rc = run_verify(verify_opt); });

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand("table", "Theta vectors for a range of rows");
  table->add_option("--p", table_opt.p, "Prime base")->required();
  table->add_option("--n-start", table_opt.n_start, "First row, decimal")->required();
  table->add_option("--n-end", table_opt.n_end, "Last row, decimal")->required();
  table->add_option("--out", table_opt.out_path, "Output path (default stdout)");
  table->add_option("--format", table_opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->callback([&]() { rc = run_table(table_opt); });

  PlotOptions plot_opt;
  CLI::App* plot = app.add_subcommand(
      "plot", "PGM raster of nu_p(C(n,k)) for the first N rows");
  plot->add_option("--p", plot_opt.p, "Prime base")->required();
  plot->add_option("--rows", plot_opt.rows, "Image size N (rows 0..N-1)")->required();
  plot->add_option("--out", plot_opt.out_path, "Output PGM path")->required();
  plot->callback([&]() { rc = run_plot(plot_opt); });

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time the evaluators on random rows of given digit lengths");
  bench->add_option("--p", bench_opt.p, "Prime base")->required();
  bench->add_option("--r-list", bench_opt.r_list,
                    "Comma-separated digit lengths minus one")->required();
  bench->add_option("--engine-list", bench_opt.engine_list, "Engines to time")
      ->capture_default_str();
  bench->add_option("--seed", bench_opt.seed, "Random seed for the digit vectors")
      ->capture_default_str();
  bench->add_flag("--force", bench_opt.force,
                  "Run the word-sum engine even above the r cap");
  bench->callback([&]() { rc = run_bench(bench_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
