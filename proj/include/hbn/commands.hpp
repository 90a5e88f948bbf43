// Copyright 2026 The hbn Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbn/differential.hpp"
#include "hbn/field.hpp"
#include "hbn/splitting.hpp"
#include "hbn/wood.hpp"
#include "json.hpp"

namespace hbn {

enum class OutputFormat { kJson, kCsv, kPretty };

/// Accepts json, csv, pretty.
OutputFormat parse_format(const std::string& name);

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitBadConfig = 1,
  kExitEmptyStratum = 2,
  kExitInconclusive = 3,
};

enum class Section5Mode { kAbundance, kOo, kGeneralCover, kTriple };

struct RunConfig {
  std::uint32_t p = PrimeField::kDefaultPrime;
  std::uint64_t seed = 0;
  HirzebruchClass cls{0, 2, 0};
  /// Inclusive bounds on the entries of e.
  std::optional<std::pair<int, int>> window;
  std::optional<SplittingType> e;
  std::optional<SplittingType> f;
  /// Degree and exact h^0 filters for enumerate.
  std::optional<int> degree;
  std::optional<int> sections;
  /// Retries for sample, trials for dominance. Defaults per command.
  std::optional<int> trials;
  Pattern pattern = Pattern::kFull;
  std::optional<Selector> selector;
  /// is, main or sq.
  std::optional<std::string> lemma;
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> out;

  Section5Mode section5 = Section5Mode::kAbundance;
  /// Window bound for abundance and the oo polytope.
  std::optional<int> bound;
  std::optional<int> genus;
  /// First type of a triple for the bound check.
  std::optional<SplittingType> d;

  /// Throws std::invalid_argument on a composite p or an invalid class.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Seed from HBN_SEED when set, otherwise 0. Throws std::invalid_argument on
/// a malformed value.
std::uint64_t seed_from_environment();

/// Comma-separated integers such as "-8,-4,-1".
std::vector<int> parse_int_list(const std::string& text);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Column name to the formula or statistic behind it.
  std::map<std::string, std::string> provenance;
};

struct CommandOutput {
  nlohmann::json json;
  Table table;
  int exit_code = kExitOk;
};

/// JSON is the canonical form; CSV prints the table with a header row;
/// pretty aligns columns and appends the provenance lines.
std::string render(const CommandOutput& out, OutputFormat format);

/// One row per stratum with all conditions true: e, f, u_e, u_f, nu, dim,
/// plus plane_dim for m = 1, delta = 0.
CommandOutput cmd_enumerate(const RunConfig& cfg);

/// Samples pairs on the (e, f) grid until a curve certifies smooth, then
/// checks connectedness, the discriminant and the cokernel rank. f defaults
/// to witness_f(e). Exit 2 on a forced-reducible stratum, 3 when retries run
/// out or a later check fails.
CommandOutput cmd_sample(const RunConfig& cfg);

/// Rank of the differential on the (e, f) grid. With a lemma, runs that
/// harness instead: is on T_CORNER, main on T_PRIME, sq on FULL over
/// strictly upper pairs. Throws std::invalid_argument on a selector that
/// does not match the lemma.
CommandOutput cmd_dominance(const RunConfig& cfg);

/// Abundance, the oo polytope, the general-cover witness or a triple bound
/// check, chosen by cfg.section5.
CommandOutput cmd_section5(const RunConfig& cfg);

}  // namespace hbn
