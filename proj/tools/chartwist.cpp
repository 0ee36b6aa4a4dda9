/* Copyright (C) 2026 The chartwist authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
// Command-line front end; everything goes through the C API.

#include "chartwist/chartwist.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct Options {
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> order_cap, aut_cap, search_budget, seed, prime;

  std::string spec, spec2, file;
  bool all = false, check_group_induced = false, expect_iso = false, report = false;
  std::string subgroup = "auto", cocycle = "symplectic", action = "natural", versus;
};

struct ConfigHandle {
  cw_config *ptr = nullptr;
  ~ConfigHandle() { cw_config_free(ptr); }
};

struct ResultHandle {
  cw_result *ptr = nullptr;
  ~ResultHandle() { cw_result_free(ptr); }
};

int fail(cw_status s) {
  std::cerr << "chartwist: " << cw_status_name(s) << ": " << cw_last_error() << "\n";
  return cw_status_exit_code(s);
}

bool read_file(const std::string &path, std::string &text) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream os;
  os << in.rdbuf();
  text = os.str();
  return true;
}

int emit(const std::string &text, const std::string &out) {
  if (out.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "chartwist: cannot write " << out << "\n";
    return 2;
  }
  return 0;
}

cw_format format_of(const std::string &name) {
  if (name == "csv")
    return CW_FORMAT_CSV;
  if (name == "pretty")
    return CW_FORMAT_PRETTY;
  return CW_FORMAT_JSON;
}

// Renders a finished result; negative results exit 1 when `negative_fails`.
int finish(cw_status s, const ResultHandle &r, const Options &o, bool negative_fails) {
  if (s != CW_OK)
    return fail(s);
  const char *text = nullptr;
  if (cw_status rs = cw_result_render(r.ptr, format_of(o.format), &text); rs != CW_OK)
    return fail(rs);
  if (int e = emit(text, o.out))
    return e;
  return negative_fails && cw_result_negative(r.ptr) ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"chartwist: character tables, fusion semirings and twisted group algebras"};
  app.set_version_flag("--version", std::string(cw_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::Throw);
  app.add_option("--out", o.out, "Write output to a file instead of stdout");
  app.add_option("--order-cap", o.order_cap, "Largest group order to enumerate");
  app.add_option("--aut-cap", o.aut_cap, "Largest automorphism group to enumerate");
  app.add_option("--search-budget", o.search_budget, "Node budget for table isomorphism search");
  app.add_option("--seed", o.seed, "Seed for randomized steps (results are verified exactly)");
  app.add_option("--prime", o.prime, "Dixon prime; must be admissible");

  auto *table = app.add_subcommand("table", "Character table of a group");
  table->add_option("group", o.spec, "Group spec")->required();

  auto *iso = app.add_subcommand("iso", "Bijections between two character tables");
  iso->add_option("group1", o.spec, "First group spec")->required();
  iso->add_option("group2", o.spec2, "Second group spec")->required();
  iso->add_flag("--all", o.all, "List every bijection");
  iso->add_flag("--check-group-induced", o.check_group_induced, "Test each bijection against group isomorphisms");
  iso->add_flag("--expect-iso", o.expect_iso, "Exit 1 when the tables differ");

  auto *semiring = app.add_subcommand("semiring", "Fusion semirings");
  semiring->require_subcommand(1);
  auto *validate = semiring->add_subcommand("validate", "Check the semiring axioms of a JSON file");
  validate->add_option("file", o.file, "Semiring JSON")->required()->check(CLI::ExistingFile);
  auto *spectrum = semiring->add_subcommand("spectrum", "Points of the spectrum of a JSON semiring");
  spectrum->add_option("file", o.file, "Semiring JSON")->required()->check(CLI::ExistingFile);
  auto *fusion = semiring->add_subcommand("fusion", "Fusion semiring of a group's character table");
  fusion->add_option("group", o.spec, "Group spec")->required();

  auto *twist = app.add_subcommand("twist", "Twist k[G] by a cocycle on a normal abelian subgroup");
  twist->add_option("group", o.spec, "Group spec")->required();
  twist->add_option("--subgroup", o.subgroup, "'auto' or an index into the normal abelian subgroups");
  twist->add_option("--cocycle", o.cocycle, "Cocycle")->check(CLI::IsMember({"symplectic", "heisenberg", "trivial"}));
  twist->add_flag("--report", o.report, "Include F and the group-like elements");

  auto *hopf = app.add_subcommand("hopf", "Hopf algebra checks");
  hopf->require_subcommand(1);
  auto *hopf_check = hopf->add_subcommand("check", "Verify the Hopf axioms of k[G]");
  hopf_check->add_option("group", o.spec, "Group spec")->required();

  auto *permchar = app.add_subcommand("permchar", "Permutation character of an action");
  permchar->add_option("group", o.spec, "Group spec")->required();
  permchar->add_option("--action", o.action, "natural | regular | cosets:<generators>");
  permchar->add_option("--versus", o.versus, "Second action to compare with");

  auto *selftest = app.add_subcommand("selftest", "Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ConfigHandle config;
  if (cw_status s = cw_config_new(&config.ptr); s != CW_OK)
    return fail(s);
  const std::pair<std::optional<std::uint64_t> *, cw_setting> settings[] = {
      {&o.order_cap, CW_ORDER_CAP}, {&o.aut_cap, CW_AUT_CAP}, {&o.search_budget, CW_SEARCH_BUDGET},
      {&o.seed, CW_SEED},           {&o.prime, CW_PRIME}};
  for (const auto &[value, setting] : settings)
    if (*value)
      cw_config_set(config.ptr, setting, **value);

  ResultHandle r;
  if (*table)
    return finish(cw_table(config.ptr, o.spec.c_str(), &r.ptr), r, o, false);
  if (*iso) {
    const int flags = (o.all ? CW_ISO_ALL : 0) | (o.check_group_induced ? CW_ISO_CHECK_GROUP_INDUCED : 0);
    return finish(cw_iso(config.ptr, o.spec.c_str(), o.spec2.c_str(), flags, &r.ptr), r, o, o.expect_iso);
  }
  if (*semiring) {
    if (*fusion)
      return finish(cw_semiring_fusion(config.ptr, o.spec.c_str(), &r.ptr), r, o, false);
    std::string text;
    if (!read_file(o.file, text)) {
      std::cerr << "chartwist: cannot read " << o.file << "\n";
      return 2;
    }
    if (*validate)
      return finish(cw_semiring_validate(config.ptr, text.c_str(), &r.ptr), r, o, true);
    return finish(cw_semiring_spectrum(config.ptr, text.c_str(), &r.ptr), r, o, false);
  }
  if (*twist)
    return finish(cw_twist(config.ptr, o.spec.c_str(), o.subgroup.c_str(), o.cocycle.c_str(), o.report, &r.ptr), r,
                  o, true);
  if (*hopf)
    return finish(cw_hopf_check(config.ptr, o.spec.c_str(), &r.ptr), r, o, true);
  if (*permchar)
    return finish(cw_permchar(config.ptr, o.spec.c_str(), o.action.c_str(),
                              o.versus.empty() ? nullptr : o.versus.c_str(), &r.ptr),
                  r, o, true);
  if (*selftest) {
    std::string lines;
    int failed = 0;
    auto sink = [](void *user, int, int, const char *line) {
      auto *text = static_cast<std::string *>(user);
      *text += line;
      *text += "\n";
    };
    const bool to_stdout = o.out.empty();
    auto live = [](void *, int, int, const char *line) { std::cout << line << std::endl; };
    cw_status s = to_stdout ? cw_selftest(config.ptr, live, nullptr, &failed)
                            : cw_selftest(config.ptr, sink, &lines, &failed);
    if (s != CW_OK)
      return fail(s);
    if (!to_stdout)
      if (int e = emit(lines, o.out))
        return e;
    return failed ? 1 : 0;
  }
  return 2;
}
