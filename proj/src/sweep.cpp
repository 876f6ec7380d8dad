/*
 * Copyright 2026 The qcong Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qcong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "qcong/errors.hpp"

namespace qcong {
namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const auto item = trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (!item.empty()) out.push_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int64(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto item : split_list(text)) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int64(item));
      continue;
    }
    const std::int64_t lo = parse_int64(item.substr(0, dots));
    const std::int64_t hi = parse_int64(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + std::string(item) + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(std::string_view text) {
  text = trim(text);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int64(text), 1};
  const std::int64_t den = parse_int64(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return {parse_int64(text.substr(0, slash)), den};
}

bool is_known_check(std::string_view id) {
  return std::find(std::begin(kCheckIds), std::end(kCheckIds), id) != std::end(kCheckIds);
}

std::vector<std::string> expand_theorems(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id == "lemmas") {
      for (const char* lemma : {"lemma-sn", "lemma-sn1", "even-sign", "qcv"}) out.emplace_back(lemma);
    } else {
      out.push_back(id);
    }
  }
  return out;
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t i = 3; i * i <= p; i += 2) {
    if (p % i == 0) return false;
  }
  return true;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport bool_report(const CheckTask& task, bool holds) {
  CheckReport report;
  report.theorem = task.theorem;
  report.family = task.family ? task.family->name() : "";
  report.params = task.params;
  report.holds = holds;
  return report;
}

std::vector<std::int64_t> classical_sequence(std::int64_t seed, std::int64_t length) {
  SplitMix64 rng(static_cast<std::uint64_t>(seed));
  std::vector<std::int64_t> f;
  for (std::int64_t i = 0; i < length; ++i) f.push_back(rng.symmetric(10));
  return f;
}

CheckReport run_task(const CheckTask& task) {
  const auto& id = task.theorem;
  auto family = [&]() -> const FamilySpec& {
    if (!task.family) throw InvalidParameters(id + " needs a family");
    return *task.family;
  };
  if (id == "thm1.1" || id == "thm1.2" || id == "guo_zeng" || id == "sun_p") {
    const SymParams p = SymParams::make(task.param("n"), task.param("d"), task.param("r"));
    if (id == "thm1.1") return check_thm_1_1(p, family());
    if (id == "thm1.2") return check_thm_1_2(p, family());
    if (id == "guo_zeng") return check_guo_zeng(p);
    return check_sun_p_analogue(p);
  }
  if (id == "thm2.1") {
    return check_thm_2_1(AlphaParams::make(task.param("n"), task.param("a"), task.param("s")), family());
  }

  Stopwatch clock;
  CheckReport report;
  if (id == "s0") {
    report = bool_report(task, check_s0_identity(task.param("n"), task.param("a"), family()));
    report.a = task.param("a");
  } else if (id == "lemma-sn") {
    report = bool_report(task, check_lemma_sn_binom(task.param("n"), task.param("s"), task.param("j")));
  } else if (id == "lemma-sn1") {
    report = bool_report(task, check_lemma_sn_minus1(task.param("n"), task.param("s"), task.param("j")));
  } else if (id == "even-sign") {
    report = bool_report(task, check_even_sign_fact(task.param("n")));
  } else if (id == "qcv") {
    report = bool_report(task, check_q_chu_vandermonde(task.param("a"), task.param("b"), task.param("k")));
  } else if (id == "classical") {
    const std::int64_t p = task.param("p");
    const auto f = classical_sequence(task.param("seed"), p);
    report = bool_report(task, check_classical_sun(p, task.param("alpha_num"), task.param("alpha_den"), f));
  } else {
    throw InvalidParameters("unknown check '" + id + "'");
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

auto sort_key(const SweepRecord& rec) {
  const auto& r = rec.report;
  auto get = [&](std::string_view name) {
    for (const auto& p : r.params) {
      if (p.name == name) return p.value;
    }
    return std::numeric_limits<std::int64_t>::min();
  };
  std::vector<std::int64_t> rest;
  for (const auto& p : r.params) rest.push_back(p.value);
  return std::make_tuple(r.theorem, get("n"), get("d"), get("r"), r.family, rest);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::int64_t CheckTask::param(std::string_view name) const {
  for (const auto& p : params) {
    if (p.name == name) return p.value;
  }
  throw InvalidParameters(theorem + " needs parameter '" + std::string(name) + "'");
}

std::string to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::kPass:
      return "pass";
    case RecordStatus::kFail:
      return "fail";
    case RecordStatus::kError:
      return "error";
  }
  return "error";
}

SweepRecord execute(const CheckTask& task) {
  SweepRecord rec;
  try {
    rec.report = run_task(task);
    rec.status = rec.report.holds ? RecordStatus::kPass : RecordStatus::kFail;
  } catch (const std::exception& e) {
    rec.report = bool_report(task, false);
    rec.status = RecordStatus::kError;
    rec.error = e.what();
  }
  return rec;
}

int default_workers() {
  if (const char* env = std::getenv("QCONG_WORKERS")) {
    try {
      const auto v = parse_int64(env);
      if (v >= 1 && v <= 1024) return static_cast<int>(v);
    } catch (const std::invalid_argument&) {
    }
  }
  return 1;
}

void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "n") {
    cfg.n = parse_int_list(value);
  } else if (key == "d") {
    cfg.d = parse_int_list(value);
  } else if (key == "r") {
    cfg.r = parse_int_list(value);
  } else if (key == "s") {
    cfg.s = parse_int_list(value);
  } else if (key == "primes") {
    cfg.primes = parse_int_list(value);
  } else if (key == "qcv_a") {
    cfg.qcv_a = parse_int_list(value);
  } else if (key == "qcv_b") {
    cfg.qcv_b = parse_int_list(value);
  } else if (key == "qcv_k") {
    cfg.qcv_k = parse_int_list(value);
  } else if (key == "families") {
    cfg.families.clear();
    for (auto item : split_list(value)) cfg.families.push_back(parse_family(item));
  } else if (key == "theorems") {
    cfg.theorems.clear();
    for (auto item : split_list(value)) {
      if (item != "lemmas" && !is_known_check(item)) {
        throw std::invalid_argument("unknown theorem id '" + std::string(item) + "'");
      }
      cfg.theorems.emplace_back(item);
    }
  } else if (key == "alphas") {
    cfg.alphas.clear();
    for (auto item : split_list(value)) {
      parse_fraction(item);
      cfg.alphas.emplace_back(item);
    }
  } else if (key == "seeds") {
    cfg.seeds = parse_int64(value);
    if (cfg.seeds < 0) throw std::invalid_argument("seeds must be >= 0");
  } else if (key == "workers") {
    const auto w = parse_int64(value);
    if (w < 1 || w > 1024) throw std::invalid_argument("workers must be in [1, 1024]");
    cfg.workers = static_cast<int>(w);
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "format") {
    if (value == "jsonl" || value == "json-lines") {
      cfg.format = ReportFormat::kJsonLines;
    } else if (value == "csv") {
      cfg.format = ReportFormat::kCsv;
    } else {
      throw std::invalid_argument("format must be jsonl or csv");
    }
  } else if (key == "timing") {
    if (value != "true" && value != "false") throw std::invalid_argument("timing must be true or false");
    cfg.timing = value == "true";
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  cfg.workers = default_workers();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_setting(cfg, view.substr(0, eq), view.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

std::vector<CheckTask> expand_grid(const SweepConfig& cfg, std::int64_t& skipped) {
  std::vector<CheckTask> tasks;
  skipped = 0;
  for (const auto& id : expand_theorems(cfg.theorems)) {
    if (id == "thm1.1" || id == "thm1.2" || id == "guo_zeng" || id == "sun_p") {
      const bool per_family = id == "thm1.1" || id == "thm1.2";
      const std::size_t fams = per_family ? cfg.families.size() : 1;
      for (auto n : cfg.n) {
        for (auto d : cfg.d) {
          for (auto r : cfg.r) {
            const bool valid = n >= 2 && d >= 1 && std::gcd(n, d) == 1 &&
                               (id != "sun_p" || (n >= 3 && n % 2 == 1));
            for (std::size_t f = 0; f < fams; ++f) {
              const bool rational = per_family && cfg.families[f].tag() == VariableTag::kRational;
              if (!valid || (id == "thm1.1" && rational)) {
                ++skipped;
                continue;
              }
              CheckTask t{id, {{"n", n}, {"d", d}, {"r", r}}, std::nullopt};
              if (per_family) t.family = cfg.families[f];
              if (id == "guo_zeng") t.family = FamilySpec::monomial_x();
              if (id == "sun_p") t.family = FamilySpec::sun_p_x();
              tasks.push_back(std::move(t));
            }
          }
        }
      }
    } else if (id == "thm2.1" || id == "s0") {
      for (auto n : cfg.n) {
        if (n < 2) {
          skipped += static_cast<std::int64_t>(cfg.families.size());
          continue;
        }
        for (std::int64_t a = 0; a < n; ++a) {
          const std::vector<std::int64_t> svals = id == "s0" ? std::vector<std::int64_t>{0} : cfg.s;
          for (auto s : svals) {
            for (const auto& fam : cfg.families) {
              CheckTask t{id, {{"n", n}, {"a", a}}, fam};
              if (id == "thm2.1") t.params.push_back({"s", s});
              tasks.push_back(std::move(t));
            }
          }
        }
      }
    } else if (id == "lemma-sn" || id == "lemma-sn1") {
      for (auto n : cfg.n) {
        for (auto s : cfg.s) {
          if (n < 2 || (id == "lemma-sn" && s == 0)) {
            ++skipped;
            continue;
          }
          for (std::int64_t j = 1; j <= n - 1; ++j) tasks.push_back({id, {{"n", n}, {"s", s}, {"j", j}}, std::nullopt});
        }
      }
    } else if (id == "even-sign") {
      for (auto n : cfg.n) {
        if (n < 2 || n % 2 != 0) {
          ++skipped;
          continue;
        }
        tasks.push_back({id, {{"n", n}}, std::nullopt});
      }
    } else if (id == "qcv") {
      for (auto a : cfg.qcv_a) {
        for (auto b : cfg.qcv_b) {
          for (auto k : cfg.qcv_k) {
            if (k < 0) {
              ++skipped;
              continue;
            }
            tasks.push_back({id, {{"a", a}, {"b", b}, {"k", k}}, std::nullopt});
          }
        }
      }
    } else if (id == "classical") {
      for (auto p : cfg.primes) {
        for (const auto& alpha : cfg.alphas) {
          const auto [num, den] = parse_fraction(alpha);
          const bool valid = is_odd_prime(p) && (den % p != 0);
          for (std::int64_t seed = 0; seed < cfg.seeds; ++seed) {
            if (!valid) {
              ++skipped;
              continue;
            }
            tasks.push_back(
                {id, {{"p", p}, {"alpha_num", num}, {"alpha_den", den}, {"seed", seed}}, std::nullopt});
          }
        }
      }
    } else {
      throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
  }
  return tasks;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  Stopwatch clock;
  SweepResult result;
  const auto tasks = expand_grid(cfg, result.summary.skipped);
  result.records.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) result.records[i] = execute(tasks[i]);
  };
  const auto threads = static_cast<std::size_t>(std::max(1, cfg.workers));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, tasks.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const SweepRecord& x, const SweepRecord& y) { return sort_key(x) < sort_key(y); });

  auto& sum = result.summary;
  sum.total = static_cast<std::int64_t>(result.records.size());
  for (const auto& rec : result.records) {
    if (rec.status == RecordStatus::kPass) {
      ++sum.passed;
    } else {
      ++sum.failed;
      if (rec.status == RecordStatus::kError) ++sum.errors;
    }
  }
  sum.wall_ms = clock.elapsed_ms();
  return result;
}

std::string to_json_line(const SweepRecord& record, bool timing) {
  const auto& r = record.report;
  Json j;
  j["theorem"] = r.theorem;
  Json params = Json::object();
  for (const auto& p : r.params) params[p.name] = p.value;
  j["params"] = params;
  if (!r.family.empty()) j["family"] = r.family;
  j["status"] = to_string(record.status);
  j["holds"] = r.holds;
  if (r.a) j["a"] = *r.a;
  if (r.exponent) j[r.exponent_name] = *r.exponent;
  if (r.sign) j["sign"] = *r.sign;
  if (!r.branch.empty()) j["branch"] = r.branch;
  if (r.residual) j["residual"] = *r.residual;
  if (!record.error.empty()) j["error"] = record.error;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j.dump();
}

void write_report(std::ostream& out, const SweepResult& result, ReportFormat format, bool timing) {
  if (format == ReportFormat::kJsonLines) {
    for (const auto& rec : result.records) out << to_json_line(rec, timing) << '\n';
    return;
  }
  out << "theorem,family,params,status,holds,a,exponent,sign,branch";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const auto& rec : result.records) {
    const auto& r = rec.report;
    std::string params;
    for (const auto& p : r.params) {
      if (!params.empty()) params += ';';
      params += p.name + "=" + std::to_string(p.value);
    }
    out << csv_field(r.theorem) << ',' << csv_field(r.family) << ',' << csv_field(params) << ','
        << to_string(rec.status) << ',' << (r.holds ? "true" : "false") << ','
        << (r.a ? std::to_string(*r.a) : "") << ','
        << (r.exponent ? r.exponent_name + "=" + std::to_string(*r.exponent) : "") << ','
        << (r.sign ? std::to_string(*r.sign) : "") << ',' << r.branch;
    if (timing) out << ',' << r.wall_ms;
    out << '\n';
  }
}

SweepSummary run_sweep_to(const SweepConfig& cfg, std::ostream& fallback) {
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write report to '" + cfg.output + "'");
  }
  const SweepResult result = run_sweep(cfg);
  std::ostream& out = cfg.output.empty() ? fallback : file;
  write_report(out, result, cfg.format, cfg.timing);
  out.flush();
  if (!out) throw std::runtime_error("error while writing report");
  return result.summary;
}

}  // namespace qcong
