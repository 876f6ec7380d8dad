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

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/families.hpp"
#include "qcong/theorems.hpp"

namespace qcong {

/// Check identifiers accepted by `verify` and the `theorems` sweep key.
/// "lemmas" in a sweep expands to lemma-sn, lemma-sn1, even-sign and qcv.
inline constexpr std::string_view kCheckIds[] = {
    "thm1.1", "thm1.2",   "thm2.1",    "s0",        "guo_zeng", "sun_p",
    "lemma-sn", "lemma-sn1", "even-sign", "qcv", "classical"};

/// One cell of a sweep: a check id, its integer parameters in canonical
/// order, and a family where the check takes one.
struct CheckTask {
  std::string theorem;
  std::vector<CheckParam> params;
  std::optional<FamilySpec> family;

  std::int64_t param(std::string_view name) const;
};

enum class RecordStatus { kPass, kFail, kError };

struct SweepRecord {
  CheckReport report;
  RecordStatus status = RecordStatus::kError;
  std::string error;
};

/// Runs one check. Exceptions from the check become status kError.
SweepRecord execute(const CheckTask& task);

enum class ReportFormat { kJsonLines, kCsv };

struct SweepConfig {
  std::vector<std::int64_t> n{2, 3, 4, 5, 6};
  std::vector<std::int64_t> d{1, 2, 3};
  std::vector<std::int64_t> r{-2, -1, 0, 1, 2};
  std::vector<std::int64_t> s{-1, 0, 1};
  std::vector<FamilySpec> families{FamilySpec::ones()};
  std::vector<std::string> theorems{"thm1.1"};
  std::vector<std::int64_t> primes{3, 5, 7, 11};
  std::vector<std::string> alphas{"2", "1/2", "-1/3", "5/2"};
  std::int64_t seeds = 10;
  std::vector<std::int64_t> qcv_a{-8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::int64_t> qcv_b{-8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<std::int64_t> qcv_k{0, 1, 2, 3, 4, 5, 6, 7, 8};
  int workers = 1;
  std::string output;  // empty: standard output
  ReportFormat format = ReportFormat::kJsonLines;
  bool timing = false;  // per-record wall_ms; breaks byte-identical reports
};

/// Default worker count: $QCONG_WORKERS when set to a positive integer, else 1.
int default_workers();

/// Applies one `key = value` setting. Throws std::invalid_argument on unknown
/// keys or malformed values.
void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value);

/// Flat key-value file: one `key = value` per line, `#` starts a comment.
/// Lists are comma separated; integer lists also accept `lo..hi` ranges.
SweepConfig parse_sweep_config(std::istream& in);

/// Expands the grid in canonical order; hypothesis violations are counted in
/// `skipped` rather than emitted.
std::vector<CheckTask> expand_grid(const SweepConfig& cfg, std::int64_t& skipped);

struct SweepSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;  // includes errored checks
  std::int64_t errors = 0;
  std::int64_t skipped = 0;
  double wall_ms = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by (theorem, n, d, r, family, params)
  SweepSummary summary;
};

/// Runs every cell on cfg.workers threads and sorts the records; the order
/// never depends on scheduling.
SweepResult run_sweep(const SweepConfig& cfg);

std::string to_json_line(const SweepRecord& record, bool timing);
void write_report(std::ostream& out, const SweepResult& result, ReportFormat format, bool timing);

/// run_sweep then writes the report to cfg.output (or `fallback` when empty).
/// Throws std::runtime_error when the output path cannot be written.
SweepSummary run_sweep_to(const SweepConfig& cfg, std::ostream& fallback);

std::string to_string(RecordStatus status);

}  // namespace qcong
