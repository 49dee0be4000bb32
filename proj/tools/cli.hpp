// Copyright 2026 The QFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. run_cli() holds all logic so that tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success, 1 invalid flags or input, 2 internal check failure.

#ifndef QFT_TOOLS_CLI_HPP_
#define QFT_TOOLS_CLI_HPP_

#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qft/qft.hpp"

namespace qft::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInternal = 2;

/// Raised when a computed result contradicts its prediction.
class check_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

inline TransformKind parse_kind(const std::string& text) {
  if (auto k = parse_transform(text)) return *k;
  throw std::invalid_argument("unknown transform '" + text + "'");
}

inline std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad size '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty size list");
  return out;
}

inline std::vector<std::complex<double>> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::vector<std::complex<double>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t comma = line.find(',');
    try {
      std::size_t pos = 0;
      const std::string re_text = line.substr(0, comma);
      const double re = std::stod(re_text, &pos);
      if (re_text.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument("");
      double im = 0.0;
      if (comma != std::string::npos) {
        const std::string im_text = line.substr(comma + 1);
        im = std::stod(im_text, &pos);
        if (im_text.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument("");
      }
      out.emplace_back(re, im);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed sample on line " + std::to_string(line_no) + " of '" +
                                  path + "'");
    }
  }
  return out;
}

struct TransformArgs {
  std::string algo = "improved";
  std::string transform = "cdft";
  std::size_t n = 0;
  std::string input;
  bool impulse = false;
  std::optional<std::uint64_t> random_seed;
};

inline int cmd_transform(const TransformArgs& a, std::ostream& out) {
  const TransformKind kind = parse_kind(a.transform);
  const SignalTypeId root = root_type(kind);
  if (a.algo != "classical" && a.algo != "improved" && a.algo != "naive") {
    throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
  }
  require_valid_periodization(root, a.n);
  if (a.n < min_transform_size(kind)) throw std::domain_error("N too small for transform");
  const std::size_t count = sto_n(root, a.n).size();
  const bool complex_input = kind == TransformKind::cdft;

  std::vector<std::complex<double>> s;
  const int sources = (a.input.empty() ? 0 : 1) + (a.impulse ? 1 : 0) + (a.random_seed ? 1 : 0);
  if (sources != 1) throw std::invalid_argument("give exactly one of --input, --impulse, --random");
  if (!a.input.empty()) {
    s = read_samples(a.input);
    if (s.size() != count) {
      throw std::invalid_argument("input has " + std::to_string(s.size()) + " samples, " +
                                  std::string(name(root)) + " N=" + std::to_string(a.n) +
                                  " needs " + std::to_string(count));
    }
    if (!complex_input) {
      for (const auto& x : s) {
        if (x.imag() != 0.0) throw std::invalid_argument("real transform given complex samples");
      }
    }
  } else if (a.impulse) {
    s.assign(count, {0.0, 0.0});
    s[0] = {1.0, 0.0};
  } else {
    s.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      s[i] = {uniform_centered(*a.random_seed, 0, i, 0),
              complex_input ? uniform_centered(*a.random_seed, 0, i, 1) : 0.0};
    }
  }

  std::vector<double> real(count);
  for (std::size_t i = 0; i < count; ++i) real[i] = s[i].real();

  std::vector<std::complex<double>> spectrum;
  if (a.algo == "naive") {
    switch (kind) {
      case TransformKind::cdft: spectrum = cdft_naive<double>(s); break;
      case TransformKind::rdft: spectrum = rdft_naive<double>(real); break;
      case TransformKind::dct0:
        for (double v : dct0_naive<double>(real, a.n)) spectrum.emplace_back(v, 0.0);
        break;
      case TransformKind::dst0:
        for (double v : dst0_naive<double>(real, a.n)) spectrum.emplace_back(v, 0.0);
        break;
    }
  } else {
    const Plan<double> plan(a.algo == "classical" ? Algorithm::classical : Algorithm::improved, a.n);
    switch (kind) {
      case TransformKind::cdft: spectrum = plan.cdft(s); break;
      case TransformKind::rdft: spectrum = plan.rdft(real); break;
      case TransformKind::dct0:
        for (double v : plan.dct0(real)) spectrum.emplace_back(v, 0.0);
        break;
      case TransformKind::dst0:
        for (double v : plan.dst0(real)) spectrum.emplace_back(v, 0.0);
        break;
    }
  }

  const IndexSet ks = sto_k(root, a.n);
  const bool print_imag = kind == TransformKind::cdft || kind == TransformKind::rdft;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    out << ks[i] << ',' << fmt17(spectrum[i].real());
    if (print_imag) out << ',' << fmt17(spectrum[i].imag());
    out << '\n';
  }
  return kOk;
}

inline std::vector<Algorithm> parse_algorithms(const std::string& text) {
  if (text == "both") return {Algorithm::classical, Algorithm::improved};
  if (text == "classical") return {Algorithm::classical};
  if (text == "improved") return {Algorithm::improved};
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

inline Algorithm parse_algorithm(const std::string& text) {
  if (text == "classical") return Algorithm::classical;
  if (text == "improved") return Algorithm::improved;
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

inline int cmd_cost_table(const std::string& transform, std::size_t n_min, std::size_t n_max,
                          const std::string& algo, std::ostream& out) {
  const TransformKind kind = parse_kind(transform);
  if (n_min < 4 || n_max > (std::size_t{1} << 16)) {
    throw std::domain_error("cost-table range must lie within 4..65536");
  }
  const std::vector<CostRow> rows = cost_table(parse_algorithms(algo), kind, n_min, n_max);
  write_cost_csv(out, rows);
  for (const CostRow& r : rows) {
    if (!r.matches()) {
      throw check_failure("measured cost differs from prediction for " +
                          std::string(name(r.algorithm)) + " N=" + std::to_string(r.N));
    }
  }
  return kOk;
}

inline int cmd_accuracy(const std::string& n_list, std::size_t trials, std::uint64_t seed,
                        const std::string& pipeline, std::ostream& out) {
  AccuracyConfig config;
  config.sizes = parse_size_list(n_list);
  config.trials = trials;
  config.seed = seed;
  if (pipeline == "two-tier") {
    config.pipeline = TrigPipeline::two_tier;
  } else if (pipeline == "single-tier") {
    config.pipeline = TrigPipeline::single_tier;
  } else {
    throw std::invalid_argument("unknown trig pipeline '" + pipeline + "'");
  }
  if (trials == 0) throw std::invalid_argument("--trials must be at least 1");
  write_accuracy_csv(out, accuracy_experiment<float, double>(config));
  return kOk;
}

inline int cmd_tree(const std::string& algo, const std::string& root, std::size_t n,
                    std::ostream& out) {
  const auto type = parse_signal_type(root);
  if (!type) throw std::invalid_argument("unknown root type '" + root + "'");
  const TreeRecorder tree = decomposition_tree(parse_algorithm(algo), *type, n);
  out << format_tree(tree);
  return kOk;
}

// Quick consistency pass over small sizes.
inline int cmd_selftest(std::ostream& out) {
  std::size_t failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };
  for (Algorithm a : {Algorithm::classical, Algorithm::improved}) {
    for (TransformKind kind : {TransformKind::cdft, TransformKind::rdft, TransformKind::dct0,
                               TransformKind::dst0}) {
      bool counts = true;
      double worst = 0.0;
      for (std::size_t N = 4; N <= 256; N *= 2) {
        counts = counts && measured_cost(a, kind, N) == predicted_cost(a, kind, N);
        const SignalTypeId root = root_type(kind);
        std::vector<double> cells = random_real_signal(buffer_length(root, N), 7, N);
        const SignalView<double> before(root, N, cells);
        const auto exact = pruned_naive(before);
        Plan<double>(a, N).execute(SignalView<double>(root, N, cells));
        std::vector<std::complex<double>> got;
        if (kind == TransformKind::cdft) {
          for (std::size_t k = 0; k < N; ++k) got.emplace_back(cells[2 * k], cells[2 * k + 1]);
        } else if (kind == TransformKind::rdft) {
          for (std::size_t k = 0; k <= N / 2; ++k) {
            got.emplace_back(cells[k], (k == 0 || k == N / 2) ? 0.0 : cells[N - k]);
          }
        } else {
          for (double v : cells) got.emplace_back(v, 0.0);
        }
        worst = std::max(worst, relative_rms_error<double>(got, exact));
      }
      const std::string label = std::string(name(a)) + " " + std::string(name(kind));
      report(counts, label + " operation counts N=4..256");
      report(worst < 1e-11, label + " oracle agreement N=4..256 (worst " + fmt17(worst) + ")");
    }
  }
  if (failures != 0) throw check_failure(std::to_string(failures) + " self-test checks failed");
  return kOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quick Fourier Transform toolkit", "qft"};
  app.require_subcommand(1);

  detail::TransformArgs t;
  CLI::App* transform = app.add_subcommand("transform", "Transform one signal");
  transform->add_option("--algo", t.algo, "classical, improved or naive")->capture_default_str();
  transform->add_option("--transform", t.transform, "cdft, rdft, dct0 or dst0")->capture_default_str();
  transform->add_option("--n", t.n, "Periodization N")->required();
  auto* input_opt = transform->add_option("--input", t.input, "File with one sample per line");
  auto* impulse_opt = transform->add_flag("--impulse", t.impulse, "Unit impulse at the first sample");
  std::uint64_t seed_value = 0;
  auto* random_opt = transform->add_option("--random", seed_value, "Seeded random input");
  input_opt->excludes(impulse_opt)->excludes(random_opt);
  impulse_opt->excludes(random_opt);

  std::string cost_transform = "cdft";
  std::size_t n_min = 4, n_max = 2048;
  std::string cost_algo = "both";
  CLI::App* cost = app.add_subcommand("cost-table", "Predicted and measured operation counts");
  cost->add_option("--transform", cost_transform)->capture_default_str();
  cost->add_option("--n-min", n_min)->capture_default_str();
  cost->add_option("--n-max", n_max)->capture_default_str();
  cost->add_option("--algo", cost_algo, "classical, improved or both")->capture_default_str();

  std::string n_list = "256,1024,4096";
  std::size_t trials = 200;
  std::uint64_t acc_seed = 1;
  std::string pipeline = "two-tier";
  CLI::App* acc = app.add_subcommand("accuracy", "Relative rms error against a wider oracle");
  acc->add_option("--n-list", n_list, "Comma-separated sizes")->capture_default_str();
  acc->add_option("--trials", trials)->capture_default_str();
  acc->add_option("--seed", acc_seed)->capture_default_str();
  acc->add_option("--pipeline", pipeline, "two-tier or single-tier")->capture_default_str();

  std::string tree_algo = "improved", tree_root = "re_tt";
  std::size_t tree_n = 0;
  CLI::App* tree = app.add_subcommand("tree", "Print a decomposition tree");
  tree->add_option("--algo", tree_algo)->capture_default_str();
  tree->add_option("--root", tree_root, "cx_tt, re_tt, dc_tt or ds_tt")->capture_default_str();
  tree->add_option("--n", tree_n)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Quick consistency checks");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("qft");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalid;
  }

  try {
    if (transform->parsed()) {
      if (random_opt->count() > 0) t.random_seed = seed_value;
      return detail::cmd_transform(t, out);
    }
    if (cost->parsed()) return detail::cmd_cost_table(cost_transform, n_min, n_max, cost_algo, out);
    if (acc->parsed()) return detail::cmd_accuracy(n_list, trials, acc_seed, pipeline, out);
    if (tree->parsed()) return detail::cmd_tree(tree_algo, tree_root, tree_n, out);
    if (selftest->parsed()) return detail::cmd_selftest(out);
  } catch (const check_failure& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalid;
}

}  // namespace qft::cli

#endif  // QFT_TOOLS_CLI_HPP_
