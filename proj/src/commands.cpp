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
#include "chartwist/commands.hpp"

#include "chartwist/modular.hpp"
#include "chartwist/semiring.hpp"
#include "chartwist/table_iso.hpp"
#include "chartwist/twist_lab.hpp"

#include <algorithm>
#include <sstream>

namespace chartwist {

namespace {

// Full twist analysis (R_F, Galois checks) stays below this order.
constexpr std::size_t kTwistAnalysisLimit = 48;

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const nlohmann::ordered_json &j) {
  if (j.is_string())
    return j.get<std::string>();
  // cyclotomic values print in E(n) notation
  if (j.is_object() && j.contains("conductor") && j.contains("terms"))
    return Cyclotomic::from_json(nlohmann::json::parse(j.dump())).to_string();
  return j.dump();
}

bool is_leaf(const nlohmann::ordered_json &j) {
  return !j.is_structured() || (j.is_object() && j.contains("conductor") && j.contains("terms"));
}

void flatten(const nlohmann::ordered_json &j, const std::string &path, std::ostringstream &os) {
  if (is_leaf(j)) {
    os << csv_field(path) << "," << csv_field(scalar_text(j)) << "\n";
    return;
  }
  if (j.is_array()) {
    if (j.empty())
      os << csv_field(path) << ",\n";
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    return;
  }
  for (const auto &[k, v] : j.items())
    flatten(v, path.empty() ? k : path + "." + k, os);
}

// Leaves, and arrays of leaves, print on one line.
std::optional<std::string> inline_text(const nlohmann::ordered_json &j) {
  if (is_leaf(j))
    return scalar_text(j);
  if (!j.is_array() || !std::all_of(j.begin(), j.end(), [](const auto &x) { return is_leaf(x); }))
    return std::nullopt;
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i)
    s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void outline(const nlohmann::ordered_json &j, int depth, std::ostringstream &os) {
  const std::string pad(2 * depth, ' ');
  if (auto text = inline_text(j)) {
    os << pad << *text << "\n";
  } else if (j.is_object()) {
    for (const auto &[k, v] : j.items()) {
      if (auto t = inline_text(v)) {
        os << pad << k << ": " << *t << "\n";
      } else {
        os << pad << k << ":\n";
        outline(v, depth + 1, os);
      }
    }
  } else {
    for (const auto &v : j) {
      if (auto t = inline_text(v)) {
        os << pad << "- " << *t << "\n";
      } else {
        os << pad << "-\n";
        outline(v, depth + 1, os);
      }
    }
  }
}

CommandResult generic(nlohmann::ordered_json data, bool negative) {
  CommandResult r;
  std::ostringstream csv, pretty;
  flatten(data, "", csv);
  outline(data, 0, pretty);
  r.data = std::move(data);
  r.csv = csv.str();
  r.pretty = pretty.str();
  r.negative = negative;
  return r;
}

nlohmann::ordered_json report_json(const Report &r) {
  nlohmann::ordered_json j{{"ok", r.ok}};
  if (!r.ok) {
    j["message"] = r.message;
    j["witness"] = r.witness;
  }
  return j;
}

std::string short_spec(const std::string &spec) { return spec.size() > 24 ? spec.substr(0, 21) + "..." : spec; }

nlohmann::ordered_json cycles(const PermGroup &g, const std::vector<int> &elements) {
  auto j = nlohmann::ordered_json::array();
  for (int x : elements)
    j.push_back(g.element(x).to_cycle_string());
  return j;
}

int involution_count(const PermGroup &g) {
  int n = 0;
  for (int x = 1; x < static_cast<int>(g.order()); ++x)
    n += g.element_order(x) == 2;
  return n;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json")
    return Format::Json;
  if (name == "csv")
    return Format::Csv;
  if (name == "pretty")
    return Format::Pretty;
  return std::nullopt;
}

std::string CommandResult::render(Format f) const {
  switch (f) {
  case Format::Json:
    return data.dump(2) + "\n";
  case Format::Csv:
    return csv;
  case Format::Pretty:
    return pretty;
  }
  return {};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::ParseError:
  case ErrorCode::UnknownName:
  case ErrorCode::InvalidArgument:
    return 2;
  case ErrorCode::OrderCapExceeded:
  case ErrorCode::SearchBudgetExceeded:
    return 3;
  default:
    return 1;
  }
}

std::string render_table_pretty(const CharacterTable &t, const std::string &title) {
  const auto names = t.classes().names();
  const std::size_t r = t.size();
  std::vector<std::vector<std::string>> cells(r + 1, std::vector<std::string>(r + 1));
  cells[0][0] = title;
  for (std::size_t c = 0; c < r; ++c)
    cells[0][c + 1] = names[c];
  for (std::size_t i = 0; i < r; ++i) {
    cells[i + 1][0] = "chi_" + std::to_string(i + 1);
    for (std::size_t c = 0; c < r; ++c)
      cells[i + 1][c + 1] = t.irreducibles[i][c].to_string();
  }
  std::vector<std::size_t> width(r + 1, 0);
  for (const auto &row : cells)
    for (std::size_t c = 0; c <= r; ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string> &row) {
    os << std::string(width[0] - row[0].size(), ' ') << row[0] << " |";
    for (std::size_t c = 1; c <= r; ++c)
      os << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
    os << "\n";
  };
  line(cells[0]);
  std::size_t rule = 0;
  for (std::size_t c = 1; c <= r; ++c)
    rule += width[c] + 1;
  os << std::string(width[0] + 1, '-') << "+" << std::string(rule, '-') << "\n";
  for (std::size_t i = 1; i <= r; ++i)
    line(cells[i]);
  return os.str();
}

std::string render_table_csv(const CharacterTable &t) {
  const auto &cl = t.classes();
  const auto names = cl.names();
  std::ostringstream os;
  os << "class";
  for (const auto &n : names)
    os << "," << csv_field(n);
  os << "\norder";
  for (int o : cl.element_orders)
    os << "," << o;
  os << "\nsize";
  for (auto s : cl.sizes)
    os << "," << s;
  os << "\nrep";
  for (int rep : cl.representatives)
    os << "," << csv_field(t.group->element(rep).to_cycle_string());
  os << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "chi_" << i + 1;
    for (const auto &x : t.irreducibles[i])
      os << "," << csv_field(x.to_string());
    os << "\n";
  }
  return os.str();
}

CommandResult table_command(const std::string &spec, const Config &config) {
  auto g = named_group(spec, config.order_cap);
  auto t = character_table(g, config);
  CommandResult r;
  r.data = t.to_json();
  r.csv = render_table_csv(t);
  r.pretty = render_table_pretty(t, short_spec(spec));
  return r;
}

CommandResult iso_command(const std::string &spec1, const std::string &spec2, const IsoOptions &options,
                          const Config &config) {
  auto g1 = named_group(spec1, config.order_cap);
  auto g2 = named_group(spec2, config.order_cap);
  auto t1 = character_table(g1, config), t2 = character_table(g2, config);
  auto all = find_table_isomorphisms(t1, t2, config);
  if (!options.all && all.size() > 1)
    all.resize(1);
  nlohmann::ordered_json j;
  auto list = nlohmann::ordered_json::array();
  std::ostringstream pretty;
  const auto names1 = t1.classes().names(), names2 = t2.classes().names();
  pretty << (all.empty() ? "character tables differ\n" : "character tables agree\n");
  for (const auto &b : all) {
    nlohmann::ordered_json e{{"sigma", b.sigma}, {"tau", b.tau}};
    pretty << "sigma:";
    for (std::size_t i = 0; i < b.sigma.size(); ++i)
      pretty << " chi_" << i + 1 << "->chi_" << b.sigma[i] + 1;
    pretty << "\ntau:";
    for (std::size_t c = 0; c < b.tau.size(); ++c)
      pretty << " " << names1[c] << "->" << names2[b.tau[c]];
    pretty << "\n";
    if (options.check_group_induced) {
      const bool induced = is_group_induced(b, *g1, *g2, config.aut_cap).has_value();
      e["group_induced"] = induced;
      pretty << "group induced: " << (induced ? "yes" : "no") << "\n";
    }
    list.push_back(std::move(e));
  }
  j["bijections"] = std::move(list);
  if (options.check_group_induced) {
    const bool iso = is_isomorphic(*g1, *g2, config.aut_cap).has_value();
    j["groups_isomorphic"] = iso;
    pretty << "groups isomorphic: " << (iso ? "yes" : "no") << "\n";
  }
  CommandResult r = generic(j, all.empty());
  r.pretty = pretty.str();
  return r;
}

CommandResult semiring_validate_command(const std::string &json_text, const Config &) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::ParseError, std::string("semiring file: ") + e.what());
  }
  auto s = FusionSemiring::from_json(parsed);
  auto rep = validate(s);
  nlohmann::ordered_json j{{"labels", s.labels()}, {"validate", report_json(rep)}};
  bool negative = !rep.ok;
  if (rep.ok) {
    auto maps = degree_maps(s, 2);
    j["degree_map"] = maps.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(maps.front());
    j["degree_map_unique"] = maps.size() == 1;
    negative = maps.size() != 1;
  }
  return generic(j, negative);
}

CommandResult semiring_spectrum_command(const std::string &json_text, const Config &config) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::ParseError, std::string("semiring file: ") + e.what());
  }
  auto s = FusionSemiring::from_json(parsed);
  auto sp = spectrum(s, config);
  return generic(sp.to_json(s), false);
}

CommandResult semiring_fusion_command(const std::string &spec, const Config &config) {
  auto t = character_table(named_group(spec, config.order_cap), config);
  return generic(fusion_constants(t).to_json(), false);
}

CommandResult twist_command(const std::string &spec, const TwistOptions &options, const Config &config) {
  auto g = named_group(spec, config.order_cap);
  const std::size_t n = g->order();
  nlohmann::ordered_json j{{"group", spec}, {"order", n}, {"cocycle", options.cocycle}};

  Twist twist = make_twist(Tensor::one(g, 2));
  if (options.cocycle != "trivial") {
    std::vector<TwoCocycle> candidates;
    if (options.cocycle == "symplectic") {
      for (int k = 1; k <= 3 && (std::size_t{1} << (2 * k)) <= n; ++k)
        candidates.push_back(symplectic_cocycle(k));
    } else if (options.cocycle == "heisenberg") {
      for (int p = 2; static_cast<std::size_t>(p * p) <= n; ++p)
        if (modp::is_prime(static_cast<modp::u64>(p)) && n % static_cast<std::size_t>(p * p) == 0)
          candidates.push_back(heisenberg_cocycle(p));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown cocycle '" + options.cocycle + "'");
    }
    std::optional<std::pair<Subgroup, TwoCocycle>> chosen;
    if (options.subgroup == "auto") {
      for (const auto &a : candidates) {
        auto subs = matching_subgroups(*g, a.m, a.rank);
        if (!subs.empty()) {
          chosen.emplace(subs.front(), a);
          break;
        }
      }
    } else {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(options.subgroup, &used);
        if (used != options.subgroup.size())
          throw std::invalid_argument("trailing");
      } catch (const std::exception &) {
        throw Error(ErrorCode::InvalidArgument, "--subgroup takes 'auto' or a subgroup index");
      }
      auto subs = normal_abelian_subgroups(*g, config.aut_cap);
      if (idx >= subs.size())
        throw Error(ErrorCode::InvalidArgument, "subgroup index out of range (" + std::to_string(subs.size()) +
                                                    " normal abelian subgroups)");
      for (const auto &a : candidates)
        if (subs[idx].size() == a.size()) {
          chosen.emplace(subs[idx], a);
          break;
        }
    }
    if (!chosen)
      throw Error(ErrorCode::NoDualIdentification,
                  "no normal abelian subgroup of " + spec + " carries the " + options.cocycle + " cocycle");
    const auto &[sub, cocycle] = *chosen;
    auto basis = coordinate_basis(*g, sub, cocycle.m, cocycle.rank);
    j["subgroup"] = cycles(*g, sub);
    j["subgroup_basis"] = cycles(*g, basis);
    j["nondegenerate"] = is_nondegenerate(cocycle).ok;
    twist = twist_from_cocycle(g, cocycle, basis);
  }

  const Tensor one3 = Tensor::one(g, 3);
  const bool cocommutative = check_cocommutative(twist);
  j["eq2"] = check_symmetric(twist.f);
  j["eq2_cocommutative"] = cocommutative;
  j["eq3_phi1"] = check_dual_cocycle(twist.f, one3).ok;
  j["associator_trivial"] = associator(twist) == one3;

  std::optional<GroupLikes> gl;
  if (cocommutative) {
    gl = group_likes(twist, config);
    auto h = gl->as_group();
    auto name = identify_group(*h);
    j["group_likes"] = {{"order", gl->elements.size()},
                        {"involutions", involution_count(*h)},
                        {"table", gl->table},
                        {"isomorphic_to", name ? nlohmann::ordered_json(*name) : nlohmann::ordered_json(nullptr)},
                        {"isomorphic_to_group", is_isomorphic(*h, *g, config.aut_cap).has_value()}};
  } else {
    j["group_likes"] = nullptr;
  }

  if (n <= kTwistAnalysisLimit) {
    auto r = dual_algebra(twist);
    j["dual_algebra"] = {{"dim", r.dim},
                         {"associative", check_associative(r).ok},
                         {"commutative", is_commutative(r)},
                         {"unit", check_unit(r).ok},
                         {"action", check_action(r).ok}};
    nlohmann::ordered_json gal{{"translation", galois_check(r).to_json()}};
    if (gl) {
      r.action = group_likes_action(twist, *gl);
      gal["group_likes"] = galois_check(r).to_json();
    }
    j["galois"] = std::move(gal);
  } else {
    j["dual_algebra"] = nullptr;
    j["galois"] = nullptr;
  }

  if (options.report) {
    j["twist"] = twist.f.to_string();
    if (gl) {
      auto els = nlohmann::ordered_json::array();
      for (const auto &x : gl->elements)
        els.push_back(x.to_string());
      j["group_like_elements"] = std::move(els);
    }
  }
  return generic(j, !j["eq3_phi1"].get<bool>());
}

CommandResult hopf_command(const std::string &spec, const Config &config) {
  auto g = named_group(spec, config.order_cap);
  nlohmann::ordered_json j{{"group", spec}, {"order", g->order()}};
  bool all = true;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto &c : hopf_axioms(g)) {
    checks[c.name] = c.ok;
    all = all && c.ok;
  }
  j["checks"] = std::move(checks);
  j["ok"] = all;
  return generic(j, !all);
}

CommandResult permchar_command(const std::string &spec, const std::string &action,
                               const std::optional<std::string> &versus, const Config &config) {
  auto g = named_group(spec, config.order_cap);
  auto t = character_table(g, config);
  auto rep = PermutationRepresentation::from_action(g, action);
  auto chi = permutation_character(rep);
  auto names = t.classes().names();
  auto values = nlohmann::ordered_json::array();
  for (const auto &x : chi)
    values.push_back(x.to_integer().get_si());
  auto dec = nlohmann::ordered_json::array();
  for (const auto &m : decompose(t, chi))
    dec.push_back(m.get_si());
  nlohmann::ordered_json j{{"group", spec},   {"action", action},   {"degree", rep.degree()},
                           {"classes", names}, {"character", values}, {"decomposition", dec}};
  bool negative = false;
  if (versus) {
    auto other = PermutationRepresentation::from_action(g, *versus);
    auto cmp = same_permutation_character(rep, other);
    j["versus"] = {{"action", *versus}, {"same_character", cmp.ok}, {"message", cmp.message}};
    negative = !cmp.ok;
  }
  return generic(j, negative);
}

} // namespace chartwist
