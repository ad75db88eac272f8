// Copyright 2026 The panpriv Authors
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

#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "panpriv/errors.hpp"
#include "panpriv/reduction.hpp"
#include "panpriv/sim.hpp"

namespace {

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw panpriv::ConfigError("cannot open output file: " + out_path);
  f << content;
}

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> v;
  v.reserve(s.size());
  for (char c : s) {
    if (c == ',') continue;
    if (c != '0' && c != '1') {
      throw panpriv::ConfigError("streams must be bit strings: " + s);
    }
    v.push_back(c == '1' ? 1 : 0);
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally pan-private telemetry simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run an end-to-end experiment");
  std::string protocol = "count", model = "single", group = "test65521";
  std::string stream = "bernoulli:0.1", out_path, format = "json";
  panpriv::ExperimentConfig cfg;
  double eps0 = std::nan("");
  bool serial = false;
  run->add_option("--protocol", protocol, "count | histogram | mean");
  run->add_option("--model", model, "single | two-server");
  run->add_option("--n", cfg.n, "number of clients");
  run->add_option("--T", cfg.T, "stream length");
  run->add_option("--k", cfg.k, "histogram / truncation bound");
  run->add_option("--eps0", eps0, "report randomized-response epsilon (inf = noiseless)");
  run->add_option("--eps", cfg.eps, "aggregator epsilon");
  run->add_option("--delta", cfg.delta, "aggregator delta");
  run->add_option("--variance", cfg.variance,
                  "mean-protocol per-client noise variance (<0 = calibrate)");
  run->add_option("--group", group, "test101 | test65521 | testN | crypto-default");
  run->add_option("--field", cfg.field, "two-server field prime (0 = group order)");
  run->add_option("--stream", stream,
                  "bernoulli:q | at-most-one:q | fixed-count:m | file:path");
  run->add_option("--seed", cfg.seed, "random seed");
  run->add_option("--trials", cfg.trials, "independent trials");
  run->add_option("--out", out_path, "output file (default stdout)");
  run->add_option("--format", format, "json");
  run->add_flag("--serial", serial, "disable the parallel client loop");

  // intrude
  auto* intrude = app.add_subcommand("intrude", "Intrusion trace comparison");
  std::string i_protocol = "count", i_group = "crypto-default";
  std::string stream_a, stream_b, i_out;
  int64_t i_k = 4;
  uint64_t i_seed = 1;
  bool check_dist = false, leaky = false;
  intrude->add_option("--protocol", i_protocol,
                      "count | histogram | mean | count-2s");
  intrude->add_option("--group", i_group, "group preset");
  intrude->add_option("--stream", stream_a, "first stream (bit string)")
      ->required();
  intrude->add_option("--stream-b", stream_b, "second stream (bit string)")
      ->required();
  intrude->add_option("--k", i_k, "histogram bound");
  intrude->add_option("--seed", i_seed, "random seed");
  intrude->add_option("--out", i_out, "output file (default stdout)");
  intrude->add_flag("--check-distribution", check_dist,
                    "exhaustive trace-distribution equality (test group, "
                    "count, T <= 3)");
  intrude->add_flag("--leaky-client", leaky,
                    "negative control: client state includes the plaintext "
                    "input bit");

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "Lower-bound numerics table");
  std::vector<int64_t> lb_T{2, 16, 64, 256};
  std::vector<double> lb_eps{0.5, 1.0, std::log(3.0)};
  int64_t lb_trials = 20000;
  uint64_t lb_seed = 1;
  std::string lb_out, lb_format = "csv";
  lb->add_option("--T", lb_T, "horizon grid");
  lb->add_option("--eps", lb_eps, "epsilon grid");
  lb->add_option("--trials", lb_trials, "Monte-Carlo trials per grid point");
  lb->add_option("--seed", lb_seed, "random seed");
  lb->add_option("--out", lb_out, "output file (default stdout)");
  lb->add_option("--format", lb_format, "csv");

  // reduce-pke
  auto* red = app.add_subcommand(
      "reduce-pke", "Bit-encryption round trips through the count pipeline");
  int64_t r_n = 200, r_T = 10, r_trials = 100;
  double r_eps0 = std::numeric_limits<double>::infinity();
  std::string r_group = "test65521", r_out;
  uint64_t r_seed = 1;
  red->add_option("--n", r_n, "simulated clients per ciphertext");
  red->add_option("--T", r_T, "pipeline horizon");
  red->add_option("--eps0", r_eps0, "report noise (inf = deterministic dec)");
  red->add_option("--group", r_group, "group preset");
  red->add_option("--trials", r_trials, "round trips");
  red->add_option("--seed", r_seed, "random seed");
  red->add_option("--out", r_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (format != "json") throw panpriv::ConfigError("run emits json only");
      if (model != "single" && model != "two-server") {
        throw panpriv::ConfigError("model must be single or two-server");
      }
      cfg.protocol = panpriv::protocol_from_string(protocol);
      if (model == "two-server") {
        if (cfg.protocol != panpriv::Protocol::kCount) {
          throw panpriv::ConfigError(
              "the two-server model supports the count protocol");
        }
        cfg.protocol = panpriv::Protocol::kCountTwoServer;
      }
      cfg.group = group;
      cfg.stream = panpriv::StreamGenSpec::parse(stream);
      cfg.parallel = !serial;
      if (!std::isnan(eps0)) {
        cfg.eps0 = eps0;
        cfg.eps0_is_set = true;
      } else if (run->count("--eps") > 0 || run->count("--delta") > 0) {
        cfg.eps0_is_set = false;
      }
      write_output(out_path, panpriv::run_experiment(cfg).to_json());
    } else if (intrude->parsed()) {
      panpriv::IntrusionConfig ic;
      ic.protocol = panpriv::protocol_from_string(i_protocol);
      ic.group = i_group;
      ic.stream_a = parse_bits(stream_a);
      ic.stream_b = parse_bits(stream_b);
      ic.k = i_k;
      ic.seed = i_seed;
      ic.check_distribution = check_dist;
      ic.leaky_client = leaky;
      const panpriv::IntrusionReport rep = panpriv::run_intrusion_check(ic);
      write_output(i_out, rep.to_json());
      if (!rep.structural_pass ||
          (rep.distribution_checked && !rep.distribution_pass)) {
        return 1;
      }
    } else if (lb->parsed()) {
      if (lb_format != "csv") {
        throw panpriv::ConfigError("lowerbound emits csv only");
      }
      write_output(lb_out,
                   panpriv::run_lowerbound_table(lb_T, lb_eps, lb_trials,
                                                 lb_seed));
    } else if (red->parsed()) {
      auto pipeline =
          panpriv::make_count_pipeline(r_group, r_T, r_eps0, r_seed);
      panpriv::Rng rng(r_seed + 1);
      panpriv::ReducedKeys keys = panpriv::reduced_keygen(pipeline, r_n, rng);
      int64_t failures = 0;
      for (int64_t i = 0; i < r_trials; ++i) {
        const int b = rng.bit() ? 1 : 0;
        panpriv::ReducedCiphertext c = panpriv::reduced_enc(b, keys, rng);
        const int64_t hops = static_cast<int64_t>(
            rng.below(static_cast<uint64_t>(r_T)));
        for (int64_t j = 0; j < hops; ++j) {
          c = panpriv::reduced_rerandomize(c, keys, rng);
        }
        if (panpriv::reduced_dec(c, keys, rng) != b) ++failures;
      }
      nlohmann::ordered_json j;
      j["schema_version"] = 1;
      j["n"] = r_n;
      j["T"] = r_T;
      j["eps0"] = std::isinf(r_eps0) ? nlohmann::ordered_json("inf")
                                     : nlohmann::ordered_json(r_eps0);
      j["trials"] = r_trials;
      j["failures"] = failures;
      j["error_rate"] =
          static_cast<double>(failures) / static_cast<double>(r_trials);
      write_output(r_out, j.dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
