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

#include "panpriv/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "panpriv/baseline.hpp"
#include "panpriv/binomial.hpp"
#include "panpriv/client.hpp"
#include "panpriv/errors.hpp"
#include "panpriv/server.hpp"
#include "panpriv/two_server.hpp"

namespace panpriv {

Protocol protocol_from_string(const std::string& s) {
  if (s == "count") return Protocol::kCount;
  if (s == "histogram") return Protocol::kHistogram;
  if (s == "mean") return Protocol::kMean;
  if (s == "count-2s") return Protocol::kCountTwoServer;
  throw ConfigError("unknown protocol: " + s);
}

std::string protocol_to_string(Protocol p) {
  switch (p) {
    case Protocol::kCount:
      return "count";
    case Protocol::kHistogram:
      return "histogram";
    case Protocol::kMean:
      return "mean";
    case Protocol::kCountTwoServer:
      return "count-2s";
  }
  return "?";
}

StreamGenSpec StreamGenSpec::parse(const std::string& s) {
  const size_t colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string() : s.substr(colon + 1);
  StreamGenSpec spec;
  try {
    if (kind == "bernoulli") {
      spec.kind = Kind::kBernoulli;
      spec.q = arg.empty() ? 0.1 : std::stod(arg);
    } else if (kind == "at-most-one") {
      spec.kind = Kind::kAtMostOne;
      spec.q = arg.empty() ? 0.5 : std::stod(arg);
    } else if (kind == "fixed-count") {
      spec.kind = Kind::kFixedCount;
      spec.m = arg.empty() ? 1 : std::stoll(arg);
    } else if (kind == "file") {
      spec.kind = Kind::kAdversarialFile;
      spec.path = arg;
    } else {
      throw ConfigError("unknown stream kind: " + kind);
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad stream argument: " + s);
  }
  if ((spec.kind == Kind::kBernoulli || spec.kind == Kind::kAtMostOne) &&
      (spec.q < 0 || spec.q > 1)) {
    throw ConfigError("stream probability must be in [0, 1]");
  }
  if (spec.kind == Kind::kFixedCount && spec.m < 0) {
    throw ConfigError("fixed-count value must be >= 0");
  }
  if (spec.kind == Kind::kAdversarialFile && spec.path.empty()) {
    throw ConfigError("file stream needs a path");
  }
  return spec;
}

std::string StreamGenSpec::to_string() const {
  switch (kind) {
    case Kind::kBernoulli:
      return "bernoulli:" + std::to_string(q);
    case Kind::kAtMostOne:
      return "at-most-one:" + std::to_string(q);
    case Kind::kFixedCount:
      return "fixed-count:" + std::to_string(m);
    case Kind::kAdversarialFile:
      return "file:" + path;
  }
  return "?";
}

namespace {

const std::vector<std::string>& load_stream_file(const std::string& path) {
  static std::mutex mu;
  static std::map<std::string, std::vector<std::string>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it != cache.end()) return it->second;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stream file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (char c : line) {
      if (c != '0' && c != '1') {
        throw ConfigError("stream file lines must be bit strings: " + path);
      }
    }
    lines.push_back(line);
  }
  if (lines.empty()) throw ConfigError("empty stream file: " + path);
  return cache.emplace(path, std::move(lines)).first->second;
}

}  // namespace

std::vector<int> generate_stream(const StreamGenSpec& spec, int64_t T,
                                 Rng& rng, int64_t client_id) {
  std::vector<int> x(T, 0);
  switch (spec.kind) {
    case StreamGenSpec::Kind::kBernoulli:
      for (auto& v : x) v = rng.bernoulli(spec.q) ? 1 : 0;
      break;
    case StreamGenSpec::Kind::kAtMostOne:
      if (rng.bernoulli(spec.q)) x[rng.below(static_cast<uint64_t>(T))] = 1;
      break;
    case StreamGenSpec::Kind::kFixedCount: {
      if (spec.m > T) throw ConfigError("fixed-count exceeds horizon");
      // m distinct positions by partial shuffle
      std::vector<int64_t> pos(T);
      for (int64_t i = 0; i < T; ++i) pos[i] = i;
      for (int64_t i = 0; i < spec.m; ++i) {
        const int64_t j =
            i + static_cast<int64_t>(rng.below(static_cast<uint64_t>(T - i)));
        std::swap(pos[i], pos[j]);
        x[pos[i]] = 1;
      }
      break;
    }
    case StreamGenSpec::Kind::kAdversarialFile: {
      const auto& lines = load_stream_file(spec.path);
      const std::string& line = lines[client_id % lines.size()];
      if (static_cast<int64_t>(line.size()) != T) {
        throw ConfigError("stream file line length != T");
      }
      for (int64_t t = 0; t < T; ++t) x[t] = line[t] == '1' ? 1 : 0;
      break;
    }
  }
  return x;
}

void ExperimentConfig::validate() const {
  if (n < 1) throw ConfigError("n must be >= 1");
  if (T < 1) throw ConfigError("T must be >= 1");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (eps0_is_set) {
    if (!(eps0 > 0)) throw ConfigError("eps0 must be positive");
  } else {
    if (!(eps > 0)) throw ConfigError("eps must be positive");
    if (!(delta > 0) || delta >= 1) throw ConfigError("delta must be in (0,1)");
  }
  if (protocol == Protocol::kMean && variance < 0 &&
      (!(eps > 0) || !(delta > 0) || delta >= 1)) {
    throw ConfigError("mean protocol needs variance >= 0 or valid (eps, delta)");
  }
}

namespace {

constexpr uint64_t kKeyRngId = 0xfeed0001;
constexpr uint64_t kKey2RngId = 0xfeed0002;
constexpr uint64_t kChallengeRngBase = 0xfeed1000;
constexpr uint64_t kClientRngBase = 0x100000000ULL;

RRParams effective_rr(const ExperimentConfig& c) {
  if (c.eps0_is_set) {
    return std::isinf(c.eps0) || c.eps0 > 700 ? RRParams::noiseless()
                                              : RRParams::from_eps0(c.eps0);
  }
  return select_eps0_for_aggregator(c.eps, c.delta, c.n);
}

int64_t clipped_count(const std::vector<int>& x, int64_t k) {
  int64_t c = 0;
  for (int v : x) c += v;
  return std::min<int64_t>(c, k);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto t_start = std::chrono::steady_clock::now();
  GroupPtr spec = GroupSpec::preset(config.group);
  const Rng master(config.seed);
  Rng key_rng = master.derive(kKeyRngId);
  const KeyPair keys = keygen(spec, key_rng);
  const RRParams rr = effective_rr(config);
  const ClientOptions opt = ClientOptions::defaults_for(*spec);

  NoiseParams noise;
  noise.k = config.k;
  if (config.protocol == Protocol::kMean) {
    noise.sigma2 = config.variance >= 0
                       ? config.variance
                       : calibrate_mean_noise(config.eps, config.delta,
                                              config.k, config.n)
                             .sigma2;
  }

  // Two-server setup
  KeyPair keys2;
  FieldSpec field(config.field != 0
                      ? config.field
                      : (spec->kind == GroupKind::kTest
                             ? spec->q
                             : FieldSpec::kDefaultPrime));
  if (config.protocol == Protocol::kCountTwoServer) {
    if (spec->kind != GroupKind::kTest) {
      throw ConfigError("count-2s needs a test group preset");
    }
    Rng key2_rng = master.derive(kKey2RngId);
    keys2 = keygen(spec, key2_rng);
  }

  ExperimentResult result;
  result.config = config;
  result.trials.reserve(config.trials);

  const int64_t n = config.n;
  for (int64_t trial = 0; trial < config.trials; ++trial) {
    std::vector<std::vector<int>> streams(n);
    for (int64_t i = 0; i < n; ++i) {
      Rng srng = master.derive(kClientRngBase + 2 * (trial * n + i));
      streams[i] = generate_stream(config.stream, config.T, srng, i);
    }
    TrialRecord rec;
    switch (config.protocol) {
      case Protocol::kCount: {
        std::vector<Ciphertext> reports(n);
#pragma omp parallel for schedule(dynamic, 64) if (config.parallel)
        for (int64_t i = 0; i < n; ++i) {
          Rng crng = master.derive(kClientRngBase + 2 * (trial * n + i) + 1);
          CountClient client(keys.pub, config.T, opt, crng);
          for (int v : streams[i]) client.update(v, crng);
          reports[i] = client.report(rr, crng);
        }
        const CountEstimate est = estimate_count(reports, keys.priv, rr);
        int64_t truth = 0;
        for (const auto& x : streams) {
          truth += std::any_of(x.begin(), x.end(), [](int v) { return v; });
        }
        rec.true_value = static_cast<double>(truth);
        rec.estimate = est.estimate;
        break;
      }
      case Protocol::kHistogram: {
        std::vector<std::vector<Ciphertext>> reports(n);
#pragma omp parallel for schedule(dynamic, 16) if (config.parallel)
        for (int64_t i = 0; i < n; ++i) {
          Rng crng = master.derive(kClientRngBase + 2 * (trial * n + i) + 1);
          HistClient client(keys.pub, config.k, config.T, opt, crng);
          for (int v : streams[i]) client.update(v, crng);
          reports[i] = client.report(rr, crng);
        }
        const HistogramEstimate est = estimate_histogram(reports, keys.priv, rr);
        rec.true_buckets.assign(config.k + 1, 0.0);
        for (const auto& x : streams) {
          rec.true_buckets[clipped_count(x, config.k)] += 1;
        }
        rec.estimate_buckets = est.buckets;
        double worst = 0;
        for (int64_t j = 0; j <= config.k; ++j) {
          worst = std::max(worst,
                           std::abs(est.buckets[j] - rec.true_buckets[j]));
        }
        rec.true_value = 0;
        rec.estimate = 0;
        rec.abs_error = worst;
        break;
      }
      case Protocol::kMean: {
        std::vector<Ciphertext> reports(n);
#pragma omp parallel for schedule(dynamic, 16) if (config.parallel)
        for (int64_t i = 0; i < n; ++i) {
          Rng crng = master.derive(kClientRngBase + 2 * (trial * n + i) + 1);
          HistClient client(keys.pub, config.k, config.T, opt, crng);
          for (int v : streams[i]) client.update(v, crng);
          reports[i] = client.report_average(noise, crng);
        }
        uint64_t bound;
        if (spec->kind == GroupKind::kTest) {
          bound = (spec->q - 1) / 2;
        } else {
          bound = static_cast<uint64_t>(
              static_cast<double>(n * config.k) +
              20.0 * std::sqrt(static_cast<double>(n) * noise.sigma2) + 1000);
        }
        const MeanEstimate est =
            estimate_mean(reports, keys.priv, keys.pub, config.k, n, bound);
        int64_t clipped_sum = 0;
        for (const auto& x : streams) clipped_sum += clipped_count(x, config.k);
        rec.true_value =
            static_cast<double>(clipped_sum) / static_cast<double>(n);
        rec.estimate = est.mean;
        break;
      }
      case Protocol::kCountTwoServer: {
        std::vector<TsReport> reports(n);
#pragma omp parallel for schedule(dynamic, 16) if (config.parallel)
        for (int64_t i = 0; i < n; ++i) {
          Rng crng = master.derive(kClientRngBase + 2 * (trial * n + i) + 1);
          TsCountClient client(keys.pub, keys2.pub, field, config.T, opt,
                               crng);
          for (int v : streams[i]) client.update(v, crng);
          reports[i] = client.report(rr, crng);
        }
        Rng challenge_rng = master.derive(kChallengeRngBase + trial);
        const TsAggregateResult agg = ts_aggregate(
            reports, keys.priv, keys2.priv, rr, field, challenge_rng);
        int64_t truth = 0;
        for (const auto& x : streams) {
          truth += std::any_of(x.begin(), x.end(), [](int v) { return v; });
        }
        rec.true_value = static_cast<double>(truth);
        rec.estimate = agg.estimate.estimate;
        rec.accepted = agg.estimate.accepted;
        rec.rejected = agg.estimate.rejected;
        break;
      }
    }
    if (config.protocol != Protocol::kHistogram) {
      rec.abs_error = std::abs(rec.estimate - rec.true_value);
    }
    result.trials.push_back(std::move(rec));
  }

  double total = 0;
  for (const auto& rec : result.trials) total += rec.abs_error;
  result.mean_abs_error = total / static_cast<double>(result.trials.size());
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

std::string ExperimentResult::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["config"] = {
      {"protocol", protocol_to_string(config.protocol)},
      {"n", config.n},
      {"T", config.T},
      {"k", config.k},
      {"eps0", config.eps0_is_set
                   ? (std::isinf(config.eps0) ? nlohmann::ordered_json("inf")
                                              : nlohmann::ordered_json(
                                                    config.eps0))
                   : nlohmann::ordered_json(nullptr)},
      {"eps", config.eps},
      {"delta", config.delta},
      {"variance", config.variance},
      {"group", config.group},
      {"field", config.field},
      {"stream", config.stream.to_string()},
      {"seed", config.seed},
      {"trials", config.trials},
  };
  j["mean_abs_error"] = mean_abs_error;
  // wall clock deliberately not serialized: identical config + seed must
  // produce byte-identical output
  auto& arr = j["trials"] = nlohmann::ordered_json::array();
  for (const auto& rec : trials) {
    nlohmann::ordered_json r = {
        {"true_value", rec.true_value},
        {"estimate", rec.estimate},
        {"abs_error", rec.abs_error},
    };
    if (config.protocol == Protocol::kCountTwoServer) {
      r["accepted"] = rec.accepted;
      r["rejected"] = rec.rejected;
    }
    if (config.protocol == Protocol::kHistogram) {
      r["true_buckets"] = rec.true_buckets;
      r["estimate_buckets"] = rec.estimate_buckets;
    }
    arr.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

namespace {

// Exhaustive trace-distribution enumeration for the count protocol with the
// literal update rule (no fresh-encryption shortcut). Every random draw is a
// uniform exponent in [0, q); all leaves of one stream sit at the same depth,
// so the map values are exact leaf counts out of q^depth.
struct TraceDist {
  std::map<std::vector<uint64_t>, uint64_t> dist;
  uint64_t depth = 0;
};

int64_t draw_depth_count(const std::vector<int>& stream) {
  int64_t d = 1;  // initial enc
  for (size_t t = 0; t < stream.size(); ++t) {
    d += stream[t] ? static_cast<int64_t>(t) + 2 : 1;  // enc + t+1 rerands | 1
  }
  return d;
}

void enumerate_rec(const std::vector<int>& stream, size_t t,
                   const Ciphertext& ct, int running_bit, bool leaky,
                   const PublicKey& pub, std::vector<uint64_t>& key,
                   TraceDist& out) {
  key.push_back(ct.c1.u);
  key.push_back(ct.c2.u);
  if (leaky) key.push_back(static_cast<uint64_t>(running_bit));
  if (t == stream.size()) {
    ++out.dist[key];
  } else {
    const uint64_t q = pub.spec->q;
    const int x = stream[t];
    if (x == 1) {
      // fresh encryption of 1, then t+1 rerandomizations
      const size_t rerands = t + 1;
      std::vector<uint64_t> draws(rerands + 1, 0);
      for (;;) {
        Ciphertext c = enc_with_r(1, pub, draws[0]);
        for (size_t i = 0; i < rerands; ++i) {
          c = rerandomize_with_s(c, pub, draws[1 + i]);
        }
        enumerate_rec(stream, t + 1, c, x, leaky, pub, key, out);
        size_t pos = 0;
        while (pos < draws.size() && ++draws[pos] == q) draws[pos++] = 0;
        if (pos == draws.size()) break;
      }
    } else {
      for (uint64_t s = 0; s < q; ++s) {
        enumerate_rec(stream, t + 1, rerandomize_with_s(ct, pub, s), x, leaky,
                      pub, key, out);
      }
    }
  }
  key.resize(key.size() - (leaky ? 3 : 2));
}

TraceDist enumerate_traces(const std::vector<int>& stream, bool leaky,
                           const PublicKey& pub) {
  const uint64_t q = pub.spec->q;
  const int64_t d = draw_depth_count(stream);
  double leaves = 1;
  for (int64_t i = 0; i < d; ++i) leaves *= static_cast<double>(q);
  if (leaves > static_cast<double>(1ULL << 26)) {
    throw ConfigError(
        "trace enumeration needs q^depth <= 2^26; use a smaller test group "
        "or shorter streams");
  }
  TraceDist out;
  out.depth = static_cast<uint64_t>(d);
  std::vector<uint64_t> key;
  for (uint64_t r0 = 0; r0 < q; ++r0) {
    enumerate_rec(stream, 0, enc_with_r(0, pub, r0), 0, leaky, pub, key, out);
  }
  return out;
}

// Exact comparison of two leaf-count maps as probability distributions,
// rescaling to the common depth.
bool dist_equal(const TraceDist& a, const TraceDist& b, uint64_t q,
                std::string* why) {
  const uint64_t depth = std::max(a.depth, b.depth);
  auto scale = [&](const TraceDist& d) {
    uint64_t f = 1;
    for (uint64_t i = d.depth; i < depth; ++i) f *= q;
    return f;
  };
  const uint64_t fa = scale(a), fb = scale(b);
  auto ita = a.dist.begin();
  auto itb = b.dist.begin();
  while (ita != a.dist.end() || itb != b.dist.end()) {
    if (ita == a.dist.end() || itb == b.dist.end() ||
        ita->first != itb->first || ita->second * fa != itb->second * fb) {
      if (why) {
        std::ostringstream os;
        os << "trace distributions differ (support or mass mismatch; "
           << a.dist.size() << " vs " << b.dist.size() << " support points)";
        *why = os.str();
      }
      return false;
    }
    ++ita;
    ++itb;
  }
  return true;
}

TraceDist project_first_components(const TraceDist& src, bool leaky) {
  // trace keys are (c1, c2[, bit]) per step; keep c1 only
  const size_t stride = leaky ? 3 : 2;
  TraceDist out;
  out.depth = src.depth;
  for (const auto& [key, count] : src.dist) {
    std::vector<uint64_t> proj;
    proj.reserve(key.size() / stride);
    for (size_t i = 0; i < key.size(); i += stride) proj.push_back(key[i]);
    out.dist[proj] += count;
  }
  return out;
}

StateTrace run_count_trace(const PublicKey& pub, const std::vector<int>& x,
                           bool leaky, Rng& rng) {
  ClientOptions opt;
  opt.fresh_enc = false;
  opt.record_trace = true;
  CountClient client(pub, static_cast<int64_t>(x.size()), opt, rng);
  for (int v : x) client.update(v, rng);
  if (!leaky) return client.trace();
  // broken client: re-serialize each state with the plaintext input appended
  StateTrace t;
  int last = 0;
  for (size_t i = 0; i < client.trace().size(); ++i) {
    std::vector<uint8_t> blob = client.trace().blob(i);
    if (i > 0) last = x[i - 1];
    blob.push_back(static_cast<uint8_t>(last));
    t.add(std::move(blob));
  }
  return t;
}

StateTrace run_protocol_trace(Protocol protocol, const KeyPair& keys,
                              const KeyPair& keys2, const FieldSpec& field,
                              int64_t k, const std::vector<int>& x, bool leaky,
                              Rng& rng) {
  const int64_t T = static_cast<int64_t>(x.size());
  ClientOptions opt = ClientOptions::defaults_for(*keys.pub.spec);
  opt.record_trace = true;
  switch (protocol) {
    case Protocol::kCount:
      return run_count_trace(keys.pub, x, leaky, rng);
    case Protocol::kHistogram:
    case Protocol::kMean: {
      HistClient client(keys.pub, k, T, opt, rng);
      for (int v : x) client.update(v, rng);
      return client.trace();
    }
    case Protocol::kCountTwoServer: {
      TsCountClient client(keys.pub, keys2.pub, field, T, opt, rng);
      for (int v : x) client.update(v, rng);
      return client.trace();
    }
  }
  throw ConfigError("bad protocol");
}

}  // namespace

IntrusionReport run_intrusion_check(const IntrusionConfig& config) {
  if (config.stream_a.empty() || config.stream_b.empty()) {
    throw ConfigError("intrusion check needs two explicit streams");
  }
  if (config.stream_a.size() != config.stream_b.size()) {
    throw ConfigError("streams must have equal length");
  }
  GroupPtr spec = GroupSpec::preset(config.group);
  const Rng master(config.seed);
  Rng key_rng = master.derive(kKeyRngId);
  const KeyPair keys = keygen(spec, key_rng);
  KeyPair keys2;
  FieldSpec field(spec->kind == GroupKind::kTest ? spec->q
                                                 : FieldSpec::kDefaultPrime);
  if (config.protocol == Protocol::kCountTwoServer) {
    if (spec->kind != GroupKind::kTest) {
      throw ConfigError("count-2s needs a test group preset");
    }
    Rng key2_rng = master.derive(kKey2RngId);
    keys2 = keygen(spec, key2_rng);
  }

  IntrusionReport report;
  Rng rng_a = master.derive(10);
  Rng rng_b = master.derive(11);
  const StateTrace ta =
      run_protocol_trace(config.protocol, keys, keys2, field, config.k,
                         config.stream_a, config.leaky_client, rng_a);
  const StateTrace tb =
      run_protocol_trace(config.protocol, keys, keys2, field, config.k,
                         config.stream_b, config.leaky_client, rng_b);
  report.first_diff = trace_structural_diff(ta, tb);
  report.structural_pass = report.first_diff < 0;
  std::ostringstream detail;
  detail << "structural: "
         << (report.structural_pass
                 ? "identical shape"
                 : "first differing step " + std::to_string(report.first_diff));

  if (config.check_distribution) {
    if (config.protocol != Protocol::kCount) {
      throw ConfigError("distribution check supports the count protocol only");
    }
    if (spec->kind != GroupKind::kTest) {
      throw ConfigError("distribution check needs a test group");
    }
    if (config.stream_a.size() > 3) {
      throw ConfigError("distribution check supports T <= 3");
    }
    report.distribution_checked = true;
    const TraceDist da =
        enumerate_traces(config.stream_a, config.leaky_client, keys.pub);
    const TraceDist db =
        enumerate_traces(config.stream_b, config.leaky_client, keys.pub);
    std::string why;
    report.distribution_pass = dist_equal(da, db, spec->q, &why);
    report.first_component_pass =
        dist_equal(project_first_components(da, config.leaky_client),
                   project_first_components(db, config.leaky_client), spec->q,
                   nullptr);
    detail << "; joint state distribution: "
           << (report.distribution_pass ? "exactly equal" : why)
           << "; first-component joint distribution: "
           << (report.first_component_pass ? "exactly equal" : "differs");
  }
  report.detail = detail.str();
  return report;
}

std::string IntrusionReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["structural_pass"] = structural_pass;
  j["first_diff"] = first_diff;
  j["distribution_checked"] = distribution_checked;
  if (distribution_checked) {
    j["distribution_pass"] = distribution_pass;
    j["first_component_pass"] = first_component_pass;
  }
  j["detail"] = detail;
  return j.dump(2) + "\n";
}

std::string run_lowerbound_table(const std::vector<int64_t>& T_list,
                                 const std::vector<double>& eps_list,
                                 int64_t trials, uint64_t seed) {
  if (T_list.empty() || eps_list.empty()) {
    throw ConfigError("lowerbound grids must be nonempty");
  }
  std::ostringstream os;
  os.precision(12);
  os << "T,eps,p,tv_exact,demoivre,upper_bound,empirical_tv,ci_low,ci_high\n";
  const Rng master(seed);
  uint64_t point = 0;
  for (int64_t T : T_list) {
    for (double eps : eps_list) {
      const double p = 1.0 / (std::exp(eps) + 1.0);
      const TvReport tv = tv_shifted_binomial(T, p);
      Rng rng = master.derive(point++);
      const DistinguisherResult emp =
          run_distinguisher_experiment(T, eps, trials, rng);
      os << T << "," << eps << "," << p << "," << tv.tv_exact << ","
         << tv.demoivre_value << "," << tv.upper_bound << "," << emp.tv << ","
         << emp.ci_low << "," << emp.ci_high << "\n";
    }
  }
  return os.str();
}

}  // namespace panpriv
