// Copyright 2026 The qpurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations behind tools/qpurify. Each command turns a config
// struct into a Table; `run` does argument parsing, output and exit codes
// (0 ok, 1 I/O, 2 validation).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpurify/hashing.hpp"
#include "qpurify/io.hpp"
#include "qpurify/multipartite.hpp"
#include "qpurify/oracle.hpp"
#include "qpurify/recurrence.hpp"
#include "qpurify/states.hpp"

namespace qpurify::cli {

using Cell = std::variant<std::monostate, int64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidInput("unknown format '" + s + "' (csv|json)");
}

inline std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

inline nlohmann::json cell_json(const Cell& c) {
  struct V {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(int64_t v) const { return v; }
    // Same 12 significant digits as the CSV path.
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::strtod(format_number(v).c_str(), nullptr);
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(V{}, c);
}

inline void write_table(const Table& t, Format f, std::ostream& out) {
  if (f == Format::Csv) {
    for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

// ---- argument syntax ---------------------------------------------------------

inline double parse_double(const std::string& s, const char* what) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InvalidInput(std::string("bad number for ") + what + ": '" + s + "'");
  return v;
}

inline int parse_int(const std::string& s, const char* what) {
  const double v = parse_double(s, what);
  if (v != std::floor(v) || std::abs(v) > 2e9) throw InvalidInput(std::string("expected an integer for ") + what);
  return int(v);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

/// "a..b", "primes:a..b" or a comma list "2,3,5".
inline std::vector<int> parse_int_range(const std::string& spec) {
  std::string body = spec;
  bool primes_only = false;
  if (body.rfind("primes:", 0) == 0) {
    primes_only = true;
    body = body.substr(7);
  }
  std::vector<int> out;
  const auto dots = body.find("..");
  if (dots != std::string::npos) {
    const int a = parse_int(body.substr(0, dots), "range start");
    const int b = parse_int(body.substr(dots + 2), "range end");
    if (b < a) throw InvalidInput("empty range '" + spec + "'");
    for (int v = a; v <= b; ++v)
      if (!primes_only || is_prime(v)) out.push_back(v);
  } else {
    for (const auto& part : split(body, ',')) {
      const int v = parse_int(part, "list entry");
      if (primes_only && !is_prime(v)) throw InvalidInput(std::to_string(v) + " is not prime");
      out.push_back(v);
    }
  }
  if (out.empty()) throw InvalidInput("range '" + spec + "' is empty");
  return out;
}

/// "a:b:step" (inclusive), "a:b" with `default_step`, "x,y,z", or a single value.
inline std::vector<double> parse_grid(const std::string& spec, double default_step) {
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() < 2 || parts.size() > 3) throw InvalidInput("grid '" + spec + "' must be a:b[:step]");
    const double a = parse_double(parts[0], "grid start");
    const double b = parse_double(parts[1], "grid end");
    const double step = parts.size() == 3 ? parse_double(parts[2], "grid step") : default_step;
    if (!(step > 0.0) || b < a) throw InvalidInput("grid '" + spec + "' is empty or has a non-positive step");
    const auto count = int64_t(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw InvalidInput("grid '" + spec + "' is too large");
    std::vector<double> out(count);
    for (int64_t i = 0; i < count; ++i) out[i] = a + double(i) * step;
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(spec, ',')) out.push_back(parse_double(part, "grid entry"));
  return out;
}

/// "fixed:x", "npow:e" or "n_to_1".
inline DeltaPolicy parse_delta(const std::string& spec) {
  if (spec == "n_to_1") return DeltaPolicy::n_to_1();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const double v = parse_double(spec.substr(colon + 1), "delta");
    if (kind == "fixed") {
      if (!(v > 0.0)) throw InvalidInput("fixed delta must be > 0");
      return DeltaPolicy::fixed(v);
    }
    if (kind == "npow") {
      if (!(v < 0.0)) throw InvalidInput("npow exponent must be < 0");
      return DeltaPolicy::npow(v);
    }
  }
  throw InvalidInput("unknown delta policy '" + spec + "' (fixed:x | npow:e | n_to_1)");
}

/// Runs f(i) for i in [0, n) on up to `threads` workers. Results must be written by
/// index; if several calls throw, the lowest index's exception is rethrown.
template <class Fn>
void parallel_for(size_t n, unsigned threads, Fn&& f) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](size_t i) {
    try {
      f(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(n)));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < n; i += threads) guarded(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- recurrence-run ------------------------------------------------------------

struct RecurrenceConfig {
  std::optional<int> d;
  std::string preset = "isotropic";
  double F = 0.0;
  double x_weight = 0.25;
  std::string state_file;
  std::string protocol = "p1p2";
  double Q = 1.0;
  double epsilon = 1e-4;
  std::optional<double> F_target;
  int max_iters = 200;
};

inline CoeffMatrix initial_state(const RecurrenceConfig& c) {
  if (!c.state_file.empty()) return load_coeffs(c.state_file);
  if (!c.d) throw InvalidInput("need --d (or --state)");
  return make_preset({parse_preset_kind(c.preset), c.F, c.x_weight}, Dimension(*c.d));
}

inline Table cmd_recurrence_run(const RecurrenceConfig& c) {
  const Protocol protocol = parse_protocol(c.protocol);
  const CoeffMatrix s = initial_state(c);
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0,1)");
  const double target = c.F_target.value_or(1.0 - c.epsilon);
  if (!(target > 0.0 && target <= 1.0)) throw InvalidInput("F_target must lie in (0,1]");
  NoiseParams noise{c.Q, 1.0, 1.0};
  Table t{{"iter", "step", "F", "success_prob", "cum_yield"}, {}};
  t.rows.push_back({int64_t{0}, std::string("init"), s.fidelity(), 1.0, 1.0});
  if (s.fidelity() >= target) return t;
  const Trajectory traj = run_to_target(protocol, s, noise, target, c.max_iters);
  for (const auto& st : traj.steps) {
    t.rows.push_back(
        {int64_t{st.iter}, std::string(to_string(st.step)), st.state.fidelity(), st.success_prob, st.cumulative_yield});
  }
  return t;
}

// ---- thresholds ----------------------------------------------------------------

struct ThresholdsConfig {
  std::string protocol = "bbpssw";
  std::string d_range = "2..10";
  std::string Q_grid = "1";
  std::string preset = "isotropic";
  double x_weight = 0.25;
  unsigned threads = default_threads();
};

inline Table cmd_thresholds(const ThresholdsConfig& c) {
  const Protocol protocol = parse_protocol(c.protocol);
  const PresetKind kind = parse_preset_kind(c.preset);
  const std::vector<int> ds = parse_int_range(c.d_range);
  const std::vector<double> Qs = parse_grid(c.Q_grid, 0.01);
  for (int d : ds) (void)Dimension(d);
  for (double Q : Qs)
    if (!(Q > 0.0 && Q <= 1.0)) throw InvalidInput("Q must lie in (0,1]");

  const bool analytic = protocol == Protocol::BBPSSW;
  std::vector<double> qth(ds.size());
  parallel_for(ds.size(), c.threads, [&](size_t i) {
    const Dimension d(ds[i]);
    qth[i] = analytic ? bbpssw_threshold(d) : regime_threshold(protocol, d, kind, c.x_weight);
  });

  Table t{{"protocol", "d", "Q", "Q_th", "Q_th_asymptote", "F_min", "F_max", "purifiable"}, {}};
  t.rows.resize(ds.size() * Qs.size());
  parallel_for(t.rows.size(), c.threads, [&](size_t i) {
    const size_t di = i / Qs.size();
    const Dimension d(ds[di]);
    const double Q = Qs[i % Qs.size()];
    const PurificationRegime r = analytic ? bbpssw_fixed_points(d, Q) : regime_scan(protocol, d, Q, kind, c.x_weight);
    t.rows[i] = {std::string(to_string(protocol)),
                 int64_t{d.value()},
                 Q,
                 qth[di],
                 analytic ? Cell(bbpssw_threshold_asymptote(d)) : Cell(),
                 r.F_min,
                 r.F_max,
                 r.purifiable};
  });
  return t;
}

// ---- hashing -------------------------------------------------------------------

struct HashingConfig {
  std::optional<int> d;
  std::string d_range;
  std::optional<double> F;
  std::string F_grid;
  std::optional<double> n;
  std::string n_sweep;
  std::string delta = "npow:-0.25";
  bool fmin = false;
  bool threshold = false;
  std::string q_grid;
  double p = 1.0;
  bool montecarlo = false;
  int64_t trials = 100000;
  uint64_t seed = 1;
  unsigned threads = default_threads();
};

inline std::vector<int> hashing_dims(const HashingConfig& c) {
  std::vector<int> ds;
  if (!c.d_range.empty()) ds = parse_int_range(c.d_range);
  else if (c.d) ds = {*c.d};
  else throw InvalidInput("need --d or --d-range");
  for (int d : ds) require_prime(Dimension(d), "hashing");
  return ds;
}

inline Table cmd_hashing(const HashingConfig& c) {
  const std::vector<int> ds = hashing_dims(c);
  const int modes = int(c.fmin) + int(c.threshold) + int(c.montecarlo) + int(!c.q_grid.empty());
  if (modes > 1) throw InvalidInput("--fmin, --threshold, --montecarlo and --q-grid are exclusive");

  if (c.fmin) {
    Table t{{"d", "F_min"}, {}};
    t.rows.resize(ds.size());
    parallel_for(ds.size(), c.threads, [&](size_t i) { t.rows[i] = {int64_t{ds[i]}, min_fidelity(Dimension(ds[i]))}; });
    return t;
  }
  if (c.threshold) {
    Table t{{"d", "F_min", "p_min", "q_min", "q_universal"}, {}};
    t.rows.resize(ds.size());
    parallel_for(ds.size(), c.threads, [&](size_t i) {
      const Dimension d(ds[i]);
      const auto th = noisy_thresholds(d);
      t.rows[i] = {int64_t{ds[i]}, th.F_min, th.p_min, th.q_min, universal_threshold(d)};
    });
    return t;
  }
  if (c.montecarlo) {
    if (!c.n) throw InvalidInput("--montecarlo needs --n");
    Table t{{"d", "n", "trials", "hits", "rate", "expected", "sigma", "within_4sigma"}, {}};
    for (int d : ds) {
      const auto est = lemma1_montecarlo(Dimension(d), int(*c.n), c.trials, c.seed, c.threads);
      t.rows.push_back({int64_t{d}, int64_t(*c.n), est.trials, est.hits, est.rate, est.expected, est.sigma,
                        est.within(4.0)});
    }
    return t;
  }

  std::vector<double> Fs;
  if (!c.F_grid.empty()) Fs = parse_grid(c.F_grid, 0.01);
  else if (c.F) Fs = {*c.F};

  if (!c.q_grid.empty()) {
    const std::vector<double> qs = parse_grid(c.q_grid, 0.01);
    Table t{{"d", "p", "q", "F_eff", "yield"}, {}};
    for (int d : ds)
      for (double q : qs) {
        const Dimension dim(d);
        const double y = noisy_asymptotic_yield(dim, c.p, q);
        t.rows.push_back({int64_t{d}, c.p, q, fidelity_from_p(dim, c.p * q * q), y});
      }
    return t;
  }
  if (Fs.empty()) throw InvalidInput("need --F or --F-grid");

  if (c.n_sweep.empty() && !c.n) {
    Table t{{"d", "F", "S", "yield"}, {}};
    for (int d : ds)
      for (double F : Fs) {
        const Dimension dim(d);
        if (!(F > 1.0 / (double(d) * d) && F <= 1.0)) throw InvalidInput("F must lie in (1/d^2, 1]");
        const double S = isotropic_entropy(dim, F);
        t.rows.push_back({int64_t{d}, F, S, std::max(0.0, 1.0 - S)});
      }
    return t;
  }

  const DeltaPolicy policy = parse_delta(c.delta);
  const std::vector<double> ns = c.n_sweep.empty() ? std::vector<double>{*c.n} : parse_grid(c.n_sweep, 1.0);
  Table t{{"d", "n", "F", "delta_policy", "delta", "S", "r", "yield", "yield_raw", "p1_bound", "p2", "F_out_bound",
           "F_out_bound_raw", "feasible"},
          {}};
  for (int d : ds)
    for (double F : Fs)
      for (double n : ns) {
        const HashingReport r = finite_size_report(Dimension(d), n, F, policy);
        t.rows.push_back({int64_t{d}, r.n, r.F, policy.describe(), r.delta, r.S, r.r, r.yield, r.yield_raw, r.p1_bound,
                          r.p2, r.F_out_bound, r.F_out_bound_raw, r.feasible});
      }
  return t;
}

// ---- ghz -----------------------------------------------------------------------

struct GhzConfig {
  std::string d_list = "2";
  std::string N_list = "3";
  std::string F_grid = "0.9";
  std::string state_file;
};

inline Table cmd_ghz(const GhzConfig& c) {
  Table t{{"d", "N", "F", "H0", "Hmax_amp", "Y", "independent_marginals"}, {}};
  auto add = [&](const GhzCoeffs& s) {
    const auto e = index_entropies(s);
    t.rows.push_back({int64_t{s.d()}, int64_t{s.parties()}, s.fidelity(), e.H0, e.Hmax_amp, multipartite_yield(s),
                      e.independent_marginals});
  };
  if (!c.state_file.empty()) {
    add(load_ghz(c.state_file));
    return t;
  }
  const auto ds = parse_int_range(c.d_list);
  const auto Ns = parse_int_range(c.N_list);
  const auto Fs = parse_grid(c.F_grid, 0.01);
  for (int d : ds)
    for (int N : Ns)
      for (double F : Fs) {
        const Dimension dim(d);
        require_prime(dim, "ghz");
        if (ipow(d, N) > 5'000'000) throw InvalidInput("d^N too large for an explicit GHZ coefficient vector");
        add(ghz_isotropic(dim, N, F));
      }
  return t;
}

// ---- oracle-check --------------------------------------------------------------

struct OracleConfig {
  std::string d_list = "2,3";
  int samples = 50;
  uint64_t seed = 1;
};

inline CoeffMatrix random_coeffs(int d, std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> a(size_t(d) * d);
  double sum = 0.0;
  for (double& v : a) sum += (v = ex(rng));
  for (double& v : a) v /= sum;
  return CoeffMatrix(Dimension(d), std::move(a));
}

inline Table cmd_oracle_check(const OracleConfig& c) {
  if (c.samples < 1) throw InvalidInput("samples must be >= 1");
  const auto ds = parse_int_range(c.d_list);
  for (int d : ds)
    if (d < 2 || d > 3) throw oracle::SizeLimitError("oracle-check supports d in {2,3}, got " + std::to_string(d));

  Table t{{"d", "samples", "p1", "p2", "three_copy", "class_prob_sum", "depolarize_channel", "diagonalization_offdiag",
           "diagonalization_diag", "bgxor_mismatches", "bqft_mismatches", "pauli_mismatches", "mgxor_mismatches",
           "max_deviation", "pass"},
          {}};
  for (int d : ds) {
    std::seed_seq sq{uint32_t(c.seed), uint32_t(c.seed >> 32), uint32_t(d)};
    std::mt19937_64 rng(sq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dev_p1 = 0, dev_p2 = 0, dev_three = 0, dev_sum = 0, dev_noise = 0;
    for (int i = 0; i < c.samples; ++i) {
      const CoeffMatrix s = random_coeffs(d, rng);
      const auto two = oracle::build_bell_pairs(s, 2);
      const auto o1 = oracle::simulate_recurrence_step(two, oracle::Variant::P1);
      const auto o2 = oracle::simulate_recurrence_step(two, oracle::Variant::P2);
      const auto o3 = oracle::simulate_recurrence_step(oracle::build_bell_pairs(s, 3), oracle::Variant::ThreeCopy);
      const auto m1 = p1_map(s), m2 = p2_map(s), m3 = three_copy_map(s);
      dev_p1 = std::max({dev_p1, m1.state.max_abs_diff(o1.kept), std::abs(m1.success_prob - o1.success_prob)});
      dev_p2 = std::max({dev_p2, m2.state.max_abs_diff(o2.kept), std::abs(m2.success_prob - o2.success_prob)});
      dev_three = std::max({dev_three, m3.state.max_abs_diff(o3.kept), std::abs(m3.success_prob - o3.success_prob)});
      for (const auto* o : {&o1, &o3}) {
        double sum = 0.0;
        for (double p : o->class_probs) sum += p;
        dev_sum = std::max(dev_sum, std::abs(sum - 1.0));
      }
      const double retention = unit(rng);
      const oracle::Register pair{d, 2};
      const auto kraus = oracle::bell_coefficients(
          oracle::depolarize_qudit(oracle::bell_diagonal_matrix(s), pair, 1, retention), d);
      dev_noise = std::max(dev_noise, depolarize_channel(s, retention).max_abs_diff(kraus));
    }
    const auto diag = oracle::verify_depolarization_identity(d, c.samples, c.seed);

    int64_t bad_bgxor = 0, bad_bqft = 0, bad_pauli = 0;
    const Dimension dim(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const BellIndex x{a, b};
        const auto q = oracle::bqft_action(d, x);
        // The literal bilateral QFT lands on (b, -a): the swap up to negating one label.
        if (!q || !(*q == BellIndex{bqft_index_map(x).phase, mod_neg(bqft_index_map(x).amplitude, d)})) ++bad_bqft;
        for (int k = 0; k < d; ++k)
          for (int j = 0; j < d; ++j) {
            const BellIndex y{k, j};
            const auto g = oracle::bgxor_action(d, x, y);
            if (!g || *g != bgxor_index_map(x, y, dim)) ++bad_bgxor;
            const auto p = oracle::pauli_action(d, a, b, y);
            if (!p || !(*p == pauli_on_bell(a, b, y, dim))) ++bad_pauli;
          }
      }
    const auto mg = oracle::mgxor_check(d, oracle::MgxorMode::PreConjugated);

    const double max_dev = std::max({dev_p1, dev_p2, dev_three, dev_sum, dev_noise, diag.max_offdiag_after,
                                     diag.max_diag_change});
    const bool pass = max_dev < 1e-10 && bad_bgxor == 0 && bad_bqft == 0 && bad_pauli == 0 && mg.pass();
    t.rows.push_back({int64_t{d}, int64_t{c.samples}, dev_p1, dev_p2, dev_three, dev_sum, dev_noise,
                      diag.max_offdiag_after, diag.max_diag_change, bad_bgxor, bad_bqft, bad_pauli,
                      int64_t{mg.mismatches}, max_dev, pass});
  }
  return t;
}

// ---- driver --------------------------------------------------------------------

/// Parses argv, runs one subcommand, writes its table. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qudit entanglement purification toolkit"};
  app.require_subcommand(1);

  std::string output = "-";
  std::string format = "csv";
  uint64_t seed = 1;
  unsigned threads = default_threads();
  auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "output path, '-' for stdout");
    sub->add_option("--format", format, "csv | json");
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--threads", threads, "worker threads for grid sweeps");
  };

  RecurrenceConfig rc;
  auto* rec = app.add_subcommand("recurrence-run", "iterate a recurrence protocol, one row per iteration");
  int rc_d = 0;
  double rc_target = 0.0;
  rec->add_option("--d", rc_d, "local dimension");
  rec->add_option("--preset", rc.preset, "isotropic | x_only | z_only | xz_mixture");
  rec->add_option("--F", rc.F, "initial fidelity");
  rec->add_option("--x-weight", rc.x_weight, "X share of the error weight (xz_mixture)");
  rec->add_option("--state", rc.state_file, "JSON state file (overrides --d/--preset)");
  rec->add_option("--protocol", rc.protocol, "p1p2 | dejmps | bbpssw | three_copy");
  rec->add_option("--Q", rc.Q, "gate retention");
  rec->add_option("--epsilon", rc.epsilon, "stop at F >= 1 - epsilon");
  auto* target_opt = rec->add_option("--F-target", rc_target, "explicit target fidelity");
  rec->add_option("--max-iters", rc.max_iters, "iteration cap");
  common(rec);

  ThresholdsConfig tc;
  auto* thr = app.add_subcommand("thresholds", "noise thresholds and purification regimes");
  thr->add_option("--protocol", tc.protocol, "bbpssw | p1p2 | dejmps | three_copy");
  thr->add_option("--d-range", tc.d_range, "a..b or list");
  thr->add_option("--Q-grid", tc.Q_grid, "a:b:step or list");
  thr->add_option("--preset", tc.preset, "state family for numeric scans");
  thr->add_option("--x-weight", tc.x_weight, "X share (xz_mixture)");
  common(thr);

  HashingConfig hc;
  auto* hsh = app.add_subcommand("hashing", "hashing yields, finite-size bounds and thresholds");
  int hc_d = 0;
  double hc_F = 0.0, hc_n = 0.0;
  auto* hd = hsh->add_option("--d", hc_d, "prime dimension");
  hsh->add_option("--d-range", hc.d_range, "primes:a..b or list");
  auto* hF = hsh->add_option("--F", hc_F, "isotropic fidelity");
  hsh->add_option("--F-grid", hc.F_grid, "a:b:step or list");
  auto* hn = hsh->add_option("--n", hc_n, "number of pairs");
  hsh->add_option("--n-sweep", hc.n_sweep, "a:b[:step]");
  hsh->add_option("--delta", hc.delta, "fixed:x | npow:e | n_to_1");
  hsh->add_flag("--fmin", hc.fmin, "minimal fidelity per d");
  hsh->add_flag("--threshold", hc.threshold, "noisy measurement-based thresholds per d");
  hsh->add_option("--q-grid", hc.q_grid, "yield versus resource retention q");
  hsh->add_option("--p", hc.p, "transmission retention for --q-grid");
  hsh->add_flag("--montecarlo", hc.montecarlo, "subset-parity collision Monte Carlo");
  hsh->add_option("--trials", hc.trials, "Monte Carlo trials (>= 1e4)");
  common(hsh);

  GhzConfig gc;
  auto* ghz = app.add_subcommand("ghz", "multipartite hashing yields for GHZ-isotropic states");
  ghz->add_option("--d-list", gc.d_list, "prime dimensions");
  ghz->add_option("--N-list", gc.N_list, "party counts");
  ghz->add_option("--F-grid", gc.F_grid, "a:b:step or list");
  ghz->add_option("--state", gc.state_file, "JSON GHZ state file");
  common(ghz);

  OracleConfig oc;
  auto* orc = app.add_subcommand("oracle-check", "compare coefficient maps against the dense simulator");
  orc->add_option("--d-list", oc.d_list, "dimensions (2 and/or 3)");
  orc->add_option("--samples", oc.samples, "random states per d");
  common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    Table table;
    if (rec->parsed()) {
      if (rc_d != 0) rc.d = rc_d;
      if (target_opt->count() > 0) rc.F_target = rc_target;
      table = cmd_recurrence_run(rc);
    } else if (thr->parsed()) {
      tc.threads = threads;
      table = cmd_thresholds(tc);
    } else if (hsh->parsed()) {
      if (hd->count() > 0) hc.d = hc_d;
      if (hF->count() > 0) hc.F = hc_F;
      if (hn->count() > 0) hc.n = hc_n;
      hc.seed = seed;
      hc.threads = threads;
      table = cmd_hashing(hc);
    } else if (ghz->parsed()) {
      table = cmd_ghz(gc);
    } else {
      oc.seed = seed;
      table = cmd_oracle_check(oc);
    }

    if (output == "-") {
      write_table(table, fmt, out);
    } else {
      std::ofstream f(output);
      if (!f) throw IoError("cannot open '" + output + "' for writing");
      write_table(table, fmt, f);
      f.close();
      if (!f) throw IoError("error writing '" + output + "'");
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qpurify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data(), out, err);
}

}  // namespace qpurify::cli
