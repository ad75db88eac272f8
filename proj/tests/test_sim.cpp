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

#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "panpriv/errors.hpp"
#include "panpriv/sim.hpp"

using namespace panpriv;

TEST_CASE("stream spec parsing round trip") {
  const StreamGenSpec b = StreamGenSpec::parse("bernoulli:0.25");
  CHECK(b.kind == StreamGenSpec::Kind::kBernoulli);
  CHECK(b.q == doctest::Approx(0.25));
  const StreamGenSpec f = StreamGenSpec::parse("fixed-count:3");
  CHECK(f.kind == StreamGenSpec::Kind::kFixedCount);
  CHECK(f.m == 3);
  CHECK_THROWS_AS(StreamGenSpec::parse("wat:1"), ConfigError);
  CHECK_THROWS_AS(StreamGenSpec::parse("bernoulli:1.5"), ConfigError);
}

TEST_CASE("stream generators respect their class") {
  Rng rng(100);
  for (int i = 0; i < 50; ++i) {
    const auto amo = generate_stream(StreamGenSpec::parse("at-most-one:0.7"),
                                     20, rng, i);
    CHECK(std::accumulate(amo.begin(), amo.end(), 0) <= 1);
    const auto fc = generate_stream(StreamGenSpec::parse("fixed-count:5"), 20,
                                    rng, i);
    CHECK(std::accumulate(fc.begin(), fc.end(), 0) == 5);
  }
}

TEST_CASE("adversarial stream file") {
  const std::string path = "test_streams_tmp.txt";
  {
    std::ofstream f(path);
    f << "0101\n1111\n";
  }
  StreamGenSpec spec = StreamGenSpec::parse("file:" + path);
  Rng rng(101);
  CHECK(generate_stream(spec, 4, rng, 0) == std::vector<int>{0, 1, 0, 1});
  CHECK(generate_stream(spec, 4, rng, 1) == std::vector<int>{1, 1, 1, 1});
  CHECK(generate_stream(spec, 4, rng, 2) == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(generate_stream(spec, 5, rng, 0), ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("noiseless count experiment is exact") {
  ExperimentConfig cfg;
  cfg.protocol = Protocol::kCount;
  cfg.n = 500;
  cfg.T = 10;
  cfg.eps0 = std::numeric_limits<double>::infinity();
  cfg.group = "test65521";
  cfg.stream = StreamGenSpec::parse("bernoulli:0.1");
  cfg.seed = 7;
  const ExperimentResult res = run_experiment(cfg);
  CHECK(res.mean_abs_error == 0.0);
}

TEST_CASE("experiment output is deterministic and parallel-invariant") {
  ExperimentConfig cfg;
  cfg.protocol = Protocol::kCount;
  cfg.n = 400;
  cfg.T = 8;
  cfg.eps0 = 1.0;
  cfg.group = "test65521";
  cfg.stream = StreamGenSpec::parse("bernoulli:0.2");
  cfg.seed = 9;
  cfg.trials = 3;
  const std::string a = run_experiment(cfg).to_json();
  const std::string b = run_experiment(cfg).to_json();
  CHECK(a == b);
  cfg.parallel = false;
  const std::string serial = run_experiment(cfg).to_json();
  CHECK(serial == a);
  cfg.seed = 10;
  CHECK(run_experiment(cfg).to_json() != a);
}

TEST_CASE("mean experiment with zero variance is exact") {
  ExperimentConfig cfg;
  cfg.protocol = Protocol::kMean;
  cfg.n = 200;
  cfg.T = 10;
  cfg.k = 8;
  cfg.variance = 0;
  cfg.eps0 = std::numeric_limits<double>::infinity();
  cfg.group = "test65521";
  cfg.stream = StreamGenSpec::parse("fixed-count:3");
  cfg.seed = 11;
  const ExperimentResult res = run_experiment(cfg);
  CHECK(res.trials[0].estimate == doctest::Approx(3.0));
  CHECK(res.mean_abs_error == doctest::Approx(0.0));
}

TEST_CASE("config validation messages") {
  ExperimentConfig cfg;
  cfg.n = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.n = 10;
  cfg.eps0 = -1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("intrusion structural check across protocols") {
  for (Protocol proto : {Protocol::kCount, Protocol::kHistogram}) {
    IntrusionConfig ic;
    ic.protocol = proto;
    ic.group = "test101";
    ic.stream_a = {0, 0, 0};
    ic.stream_b = {1, 1, 1};
    const IntrusionReport rep = run_intrusion_check(ic);
    CHECK(rep.structural_pass);
    CHECK(rep.first_diff == -1);
  }
}

TEST_CASE("intrusion structural check, crypto group") {
  IntrusionConfig ic;
  ic.protocol = Protocol::kCount;
  ic.group = "crypto-default";
  ic.stream_a = {0, 0};
  ic.stream_b = {1, 0};
  CHECK(run_intrusion_check(ic).structural_pass);
}

TEST_CASE("exact trace distribution equality where it holds") {
  // (1,0) and (1,1) induce the same per-step plaintext classes, so the full
  // joint state distribution matches exactly.
  IntrusionConfig ic;
  ic.protocol = Protocol::kCount;
  ic.group = "test5";
  ic.stream_a = {1, 0};
  ic.stream_b = {1, 1};
  ic.check_distribution = true;
  const IntrusionReport rep = run_intrusion_check(ic);
  CHECK(rep.distribution_checked);
  CHECK(rep.distribution_pass);
  CHECK(rep.first_component_pass);
}

TEST_CASE("leaky client is caught by the distribution check") {
  IntrusionConfig ic;
  ic.protocol = Protocol::kCount;
  ic.group = "test5";
  ic.stream_a = {1, 0};
  ic.stream_b = {1, 1};
  ic.check_distribution = true;
  ic.leaky_client = true;
  const IntrusionReport rep = run_intrusion_check(ic);
  CHECK(rep.structural_pass);  // sizes match; only the distribution differs
  CHECK_FALSE(rep.distribution_pass);
}

TEST_CASE("lowerbound table format and monotonicity") {
  const std::string csv =
      run_lowerbound_table({2, 8, 32}, {1.0}, 20000, 5);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "T,eps,p,tv_exact,demoivre,upper_bound,empirical_tv,ci_low,ci_high");
  double prev_tv = 1.0;
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(ls, tok, ',')) vals.push_back(std::stod(tok));
    REQUIRE(vals.size() == 9);
    const double tv_exact = vals[3];
    CHECK(tv_exact < prev_tv);  // decreasing in T at fixed eps
    prev_tv = tv_exact;
    CHECK(vals[3] <= vals[5] + 1e-12);       // tv <= upper bound
    CHECK(vals[6] <= vals[3] + 3 * (vals[8] - vals[7]) + 0.02);
  }
  CHECK(rows == 3);
}
