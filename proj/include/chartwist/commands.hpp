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
#ifndef CHARTWIST_COMMANDS_HPP
#define CHARTWIST_COMMANDS_HPP

// One function per CLI subcommand. Each returns structured data plus its
// CSV and human renderings, so the C API and the CLI print the same bytes.

#include "chartwist/char_table.hpp"
#include "chartwist/error.hpp"


#include <optional>
#include <string>
#include <string_view>

namespace chartwist {

enum class Format { Json = 0, Csv = 1, Pretty = 2 }; // values match cw_format

std::optional<Format> parse_format(std::string_view name);

struct CommandResult {
  nlohmann::ordered_json data;
  std::string csv;
  std::string pretty;
  bool negative = false; // a computed "no" (failed check, empty result)

  std::string render(Format f) const;
};

/// 0 ok, 1 mathematical negative, 2 usage, 3 cap or budget exceeded.
int exit_code_for(ErrorCode code);

/// The table as a bordered grid: class names across, chi_i down.
std::string render_table_pretty(const CharacterTable &t, const std::string &title);
std::string render_table_csv(const CharacterTable &t);

CommandResult table_command(const std::string &spec, const Config &config);

struct IsoOptions {
  bool all = false;
  bool check_group_induced = false;
};
CommandResult iso_command(const std::string &spec1, const std::string &spec2, const IsoOptions &options,
                          const Config &config);

CommandResult semiring_validate_command(const std::string &json_text, const Config &config);
CommandResult semiring_spectrum_command(const std::string &json_text, const Config &config);
CommandResult semiring_fusion_command(const std::string &spec, const Config &config);

struct TwistOptions {
  std::string subgroup = "auto"; // "auto" or an index into the normal abelian subgroups
  std::string cocycle = "symplectic"; // symplectic | heisenberg | trivial
  bool report = false;                // include F and the group-like elements
};
CommandResult twist_command(const std::string &spec, const TwistOptions &options, const Config &config);

CommandResult hopf_command(const std::string &spec, const Config &config);

CommandResult permchar_command(const std::string &spec, const std::string &action,
                               const std::optional<std::string> &versus, const Config &config);

} // namespace chartwist

#endif
