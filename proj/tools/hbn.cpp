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

// hbn: splitting-type experiments on Hirzebruch surfaces.
//
//   hbn enumerate --m 3 --k 3 --delta 2 --e=-8,-4,-1
//   hbn sample --m 3 --k 3 --delta 2 --e=-8,-4,-1 --f=-6,-4,-1 --seed 7
//   hbn dominance --m 3 --k 3 --delta 2 --e=-8,-4,-1 --f=-7,-4,0
//   hbn section5 --abundance --m 1 --delta 1 --k 4

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hbn/commands.hpp"

namespace {

hbn::SplittingType parse_type(const std::string& text) { return hbn::SplittingType(hbn::parse_int_list(text)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of line bundles on curves in Hirzebruch surfaces"};
  app.require_subcommand(1);

  hbn::RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string e_text, f_text, d_text, window_text, pattern = "FULL", selector, format = "json";
  int trials = 0;

  app.add_option("--p", cfg.p, "Prime for sampling")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed (falls back to HBN_SEED, then 0)");
  app.add_option("--m", cfg.cls.m, "Hirzebruch index m")->capture_default_str();
  app.add_option("--k", cfg.cls.k, "Covering degree k")->capture_default_str();
  app.add_option("--delta", cfg.cls.delta, "Intersection with the directrix")->capture_default_str();
  app.add_option("--e", e_text, "Type e, comma-separated (use --e=-8,-4,-1 for negatives)");
  app.add_option("--f", f_text, "Type f, comma-separated");
  app.add_option("--window", window_text, "Inclusive entry bounds lo,hi for e");
  app.add_option("--trials", trials, "Sampling retries or dominance trials");
  app.add_option("--pattern", pattern, "FULL, LU, SUT or IS-POINT")->capture_default_str();
  app.add_option("--selector", selector, "FULL, T_PRIME, T_DOUBLE_PRIME, T_CORNER or T_INDUCTIVE");
  app.add_option("--format", format, "json, csv or pretty")->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file");

  auto* enumerate = app.add_subcommand("enumerate", "Nonempty strata and their predicted dimensions");
  enumerate->add_option("--degree", cfg.degree, "Degree of the line bundle on C");
  enumerate->add_option("--sections", cfg.sections, "Exact number of sections");

  auto* sample = app.add_subcommand("sample", "Sample a curve on a stratum and certify it");

  auto* dominance = app.add_subcommand("dominance", "Rank of the differential on a stratum");
  dominance->add_option("--lemma", cfg.lemma, "Run a lemma harness: is, main or sq");

  auto* section5 = app.add_subcommand("section5", "Scrollar bounds, polytopes and abundance");
  auto* mode = section5->add_option_group("mode");
  auto* abundance = mode->add_flag("--abundance", "Abundance verdict for the class");
  auto* oo = mode->add_flag("--oo", "Subadditive scrollar invariants up to --bound");
  auto* cover = mode->add_flag("--general-cover", "Witness of non-abundance for a general cover");
  auto* triple = mode->add_flag("--triple", "Bound check for a triple d, e, f");
  mode->require_option(1);
  section5->add_option("--bound", cfg.bound, "Entry bound for the polytopes");
  section5->add_option("--g", cfg.genus, "Genus");
  section5->add_option("--d", d_text, "Type d for --triple");

  for (auto* sub : {enumerate, sample, dominance, section5}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.seed = seed ? *seed : hbn::seed_from_environment();
    if (!e_text.empty()) cfg.e = parse_type(e_text);
    if (!f_text.empty()) cfg.f = parse_type(f_text);
    if (!d_text.empty()) cfg.d = parse_type(d_text);
    if (!window_text.empty()) {
      const auto w = hbn::parse_int_list(window_text);
      if (w.size() != 2) throw std::invalid_argument("--window takes lo,hi");
      cfg.window = std::pair{w[0], w[1]};
    }
    if (trials != 0) cfg.trials = trials;
    cfg.pattern = hbn::parse_pattern(pattern);
    if (!selector.empty()) cfg.selector = hbn::parse_selector(selector);
    cfg.format = hbn::parse_format(format);
    if (*abundance) cfg.section5 = hbn::Section5Mode::kAbundance;
    if (*oo) cfg.section5 = hbn::Section5Mode::kOo;
    if (*cover) cfg.section5 = hbn::Section5Mode::kGeneralCover;
    if (*triple) cfg.section5 = hbn::Section5Mode::kTriple;

    hbn::CommandOutput result;
    if (enumerate->parsed()) {
      result = hbn::cmd_enumerate(cfg);
    } else if (sample->parsed()) {
      result = hbn::cmd_sample(cfg);
    } else if (dominance->parsed()) {
      result = hbn::cmd_dominance(cfg);
    } else {
      result = hbn::cmd_section5(cfg);
    }

    const std::string text = hbn::render(result, cfg.format);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + *cfg.out);
      file << text;
    } else {
      std::cout << text;
    }
    return result.exit_code;
  } catch (const std::exception& err) {
    std::cerr << "hbn: " << err.what() << '\n';
    return hbn::kExitBadConfig;
  }
}
