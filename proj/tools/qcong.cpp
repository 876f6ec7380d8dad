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

// qcong: command-line front end for the q-congruence checkers.
//
// Exit status: 0 success / congruence holds, 1 a check failed, 2 usage or
// evaluation error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcong/congruence.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/errors.hpp"
#include "qcong/families.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/sweep.hpp"
#include "qcong/transforms.hpp"

namespace {

using namespace qcong;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

// "<num>" or "(<num>) / (<den>)"; num may be bivariate.
RatBi parse_expression(const std::string& text) {
  const auto split = text.rfind(") / (");
  if (split == std::string::npos || text.empty() || text.front() != '(' || text.back() != ')') {
    return RatBi(parse_bipoly(text));
  }
  const std::string num = text.substr(1, split - 1);
  const std::string den = text.substr(split + 5, text.size() - split - 6);
  return RatBi(parse_bipoly(num), parse_laurent(den));
}

std::string describe(const SweepRecord& rec) {
  const auto& r = rec.report;
  std::string line = r.theorem;
  for (const auto& p : r.params) line += " " + p.name + "=" + std::to_string(p.value);
  if (!r.family.empty()) line += " family=" + r.family;
  if (r.a) line += " a=" + std::to_string(*r.a);
  if (r.exponent) line += " " + r.exponent_name + "=" + std::to_string(*r.exponent);
  if (r.sign) line += " sign=" + std::to_string(*r.sign);
  if (!r.branch.empty()) line += " branch=" + r.branch;
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of symmetric q-congruences modulo cyclotomic squares"};
  app.require_subcommand(1);

  auto* cyclo = app.add_subcommand("cyclotomic", "Print Phi_n(q)");
  std::int64_t cyclo_n = 1;
  cyclo->add_option("n", cyclo_n, "Index n >= 1")->required();

  auto* qbin = app.add_subcommand("qbinom", "Print the q-binomial [alpha, k] (at base q^d)");
  std::int64_t qb_alpha = 0, qb_k = 0, qb_base = 1;
  qbin->add_option("alpha", qb_alpha)->required()->allow_extra_args(false);
  qbin->add_option("k", qb_k)->required();
  qbin->add_option("--base", qb_base, "Substitute q -> q^d");

  auto* qp = app.add_subcommand("qpoch", "Print (q^r; q^d)_k");
  std::int64_t qp_r = 0, qp_d = 1, qp_k = 0;
  qp->add_option("r", qp_r)->required();
  qp->add_option("d", qp_d)->required();
  qp->add_option("k", qp_k)->required();

  auto* tr = app.add_subcommand("transform", "Print the hat or tilde transform of a family");
  std::string tr_kind = "hat", tr_family = "ones";
  std::int64_t tr_length = 1;
  tr->add_option("--kind", tr_kind)->check(CLI::IsMember({"hat", "tilde"}));
  tr->add_option("--family", tr_family)->required();
  tr->add_option("--length", tr_length)->required();

  auto* cg = app.add_subcommand("congruent", "Decide lhs == rhs (mod Phi_n^m)");
  std::int64_t cg_n = 2, cg_m = 2;
  std::string cg_lhs, cg_rhs;
  cg->add_option("--n", cg_n)->required();
  cg->add_option("--m", cg_m);
  cg->add_option("--lhs", cg_lhs, "File holding the left expression")->required();
  cg->add_option("--rhs", cg_rhs, "File holding the right expression")->required();

  auto* vf = app.add_subcommand("verify", "Run one check");
  std::string vf_id;
  std::map<std::string, std::int64_t> vf_ints;
  std::string vf_family = "ones", vf_alpha = "2";
  bool vf_json = false;
  vf->add_option("check", vf_id, "thm1.1 thm1.2 thm2.1 s0 guo_zeng sun_p lemma-sn lemma-sn1 even-sign qcv classical")
      ->required();
  for (const char* name : {"n", "d", "r", "a", "s", "j", "b", "k", "p", "seed"}) {
    vf->add_option(std::string("--") + name, vf_ints[name]);
  }
  vf->add_option("--family", vf_family);
  vf->add_option("--alpha", vf_alpha, "Rational alpha for the classical check, e.g. -1/3");
  vf->add_flag("--json", vf_json, "Also print the JSON record");

  auto* sw = app.add_subcommand("sweep", "Run a parameter sweep and write a report");
  std::string sw_config;
  std::vector<std::string> sw_sets;
  std::map<std::string, std::string> sw_flags;
  sw->add_option("--config", sw_config, "Key-value config file");
  sw->add_option("--set", sw_sets, "Override: key=value (repeatable)");
  for (const char* key : {"n", "d", "r", "s", "families", "theorems", "primes", "alphas", "seeds", "qcv_a",
                          "qcv_b", "qcv_k", "workers", "output", "format", "timing"}) {
    sw->add_option(std::string("--") + key, sw_flags[key]);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cyclo) {
      std::cout << to_string(cyclotomic(cyclo_n)) << '\n';
    } else if (*qbin) {
      std::cout << to_string(qbinom_base(qb_alpha, qb_k, qb_base)) << '\n';
    } else if (*qp) {
      std::cout << to_string(qpoch(qp_r, qp_d, qp_k)) << '\n';
    } else if (*tr) {
      const auto kind = tr_kind == "hat" ? TransformKind::kHat : TransformKind::kTilde;
      const auto seq = generate(parse_family(tr_family), tr_length);
      std::visit(
          [&](const auto& v) {
            using Entry = typename std::decay_t<decltype(v)>::value_type;
            const auto out = transform(kind, std::span<const Entry>(v));
            for (std::size_t k = 0; k < out.size(); ++k) std::cout << k << ": " << to_string(out[k]) << '\n';
          },
          seq);
    } else if (*cg) {
      const RatBi lhs = parse_expression(read_file(cg_lhs));
      const RatBi rhs = parse_expression(read_file(cg_rhs));
      const BiPoly residual = congruence_residual(lhs, rhs, cg_n, cg_m);
      if (residual.is_zero()) {
        std::cout << "true\n";
        return 0;
      }
      // Univariate inputs give a residual free of x; print it as a Laurent polynomial.
      const bool univariate = residual.x_degree() == 0;
      std::cout << "false\nresidual: " << (univariate ? to_string(residual.coeff(0)) : to_string(residual)) << '\n';
      return kExitFail;
    } else if (*vf) {
      CheckTask task;
      task.theorem = vf_id;
      auto want = [&](std::initializer_list<const char*> names) {
        for (const char* name : names) {
          if (vf->count(std::string("--") + name) == 0) {
            throw InvalidParameters(vf_id + " needs --" + name);
          }
          task.params.push_back({name, vf_ints[name]});
        }
      };
      if (vf_id == "thm1.1" || vf_id == "thm1.2" || vf_id == "guo_zeng" || vf_id == "sun_p") {
        want({"n", "d", "r"});
      } else if (vf_id == "thm2.1") {
        want({"n", "a", "s"});
      } else if (vf_id == "s0") {
        want({"n", "a"});
      } else if (vf_id == "lemma-sn" || vf_id == "lemma-sn1") {
        want({"n", "s", "j"});
      } else if (vf_id == "even-sign") {
        want({"n"});
      } else if (vf_id == "qcv") {
        want({"a", "b", "k"});
      } else if (vf_id == "classical") {
        want({"p"});
        const auto slash = vf_alpha.find('/');
        const std::int64_t num = std::stoll(vf_alpha.substr(0, slash));
        const std::int64_t den = slash == std::string::npos ? 1 : std::stoll(vf_alpha.substr(slash + 1));
        task.params.push_back({"alpha_num", num});
        task.params.push_back({"alpha_den", den});
        task.params.push_back({"seed", vf_ints["seed"]});
      } else {
        throw InvalidParameters("unknown check '" + vf_id + "'");
      }
      if (vf_id == "thm1.1" || vf_id == "thm1.2" || vf_id == "thm2.1" || vf_id == "s0") {
        task.family = parse_family(vf_family);
      }
      const SweepRecord rec = execute(task);
      switch (rec.status) {
        case RecordStatus::kPass:
          std::cout << "PASS " << describe(rec) << '\n';
          break;
        case RecordStatus::kFail:
          std::cout << "FAIL " << describe(rec) << '\n';
          if (rec.report.residual) std::cout << "residual: " << *rec.report.residual << '\n';
          break;
        case RecordStatus::kError:
          std::cout << "ERROR " << describe(rec) << ": " << rec.error << '\n';
          break;
      }
      if (vf_json) std::cout << to_json_line(rec, true) << '\n';
      return rec.status == RecordStatus::kPass ? 0 : rec.status == RecordStatus::kFail ? kExitFail : kExitError;
    } else if (*sw) {
      SweepConfig cfg;
      cfg.workers = default_workers();
      if (!sw_config.empty()) {
        std::ifstream in(sw_config);
        if (!in) throw std::runtime_error("cannot read config '" + sw_config + "'");
        cfg = parse_sweep_config(in);
      }
      for (const auto& [key, value] : sw_flags) {
        if (sw->count("--" + key) != 0) apply_setting(cfg, key, value);
      }
      for (const auto& kv : sw_sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value");
        apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      const SweepSummary sum = run_sweep_to(cfg, std::cout);
      std::cerr << "total=" << sum.total << " passed=" << sum.passed << " failed=" << sum.failed
                << " errors=" << sum.errors << " skipped=" << sum.skipped << " wall_ms=" << sum.wall_ms << '\n';
      return sum.failed == 0 ? 0 : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
