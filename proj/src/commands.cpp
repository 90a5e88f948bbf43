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

#include "hbn/commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hbn/curve.hpp"
#include "hbn/scrollar.hpp"
#include "hbn/surface.hpp"

namespace hbn {

namespace {

constexpr int kDefaultSampleRetries = 8;
constexpr int kDefaultDominanceTrials = 5;
constexpr int kCokernelPoints = 20;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string cell(int v) { return std::to_string(v); }
std::string cell(const SplittingType& t) { return t.to_string(); }
std::string cell(const Dimension& d) { return d ? std::to_string(*d) : "empty"; }
std::string cell(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

CommandOutput finish(const std::string& command, const RunConfig& cfg, nlohmann::json body, Table table,
                     int exit_code) {
  body["command"] = command;
  body["config"] = cfg.to_json();
  body["provenance"] = table.provenance;
  return {std::move(body), std::move(table), exit_code};
}

void require_length(const SplittingType& t, int k, const char* name) {
  if (t.size() != k) throw std::invalid_argument(std::string(name) + " must have k = " + std::to_string(k) + " entries");
}

// (e, f) for commands that act on a single stratum. f falls back to the
// partner built from e, which throws EmptyStratum if there is none.
std::pair<SplittingType, SplittingType> stratum_types(const RunConfig& cfg) {
  if (!cfg.e) throw std::invalid_argument("this command needs --e");
  const SplittingType e = *cfg.e;
  require_length(e, cfg.cls.k, "e");
  const SplittingType f = cfg.f ? *cfg.f : witness_f(e, cfg.cls);
  require_length(f, cfg.cls.k, "f");
  if (!check_conditions(e, f, cfg.cls).degree) {
    throw std::invalid_argument("sum(f) - sum(e) must equal delta = " + std::to_string(cfg.cls.delta));
  }
  return {e, f};
}

CommandOutput empty_stratum(const std::string& command, const RunConfig& cfg, const EmptyStratum& err) {
  Table t{{"e", "verdict"}, {{cfg.e ? cell(*cfg.e) : "", "EMPTY"}}, {{"verdict", "corollary_check"}}};
  return finish(command, cfg, {{"verdict", "EMPTY"}, {"reason", err.what()}}, std::move(t), kExitEmptyStratum);
}

nlohmann::json forced_json(const ForcedReducibility& forced) {
  nlohmann::json j{{"verdict", forced.verdict()}, {"divisible_by_y", forced.divisible_by_y}};
  j["block"] = forced.block ? nlohmann::json(*forced.block) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  const auto n = lower(name);
  if (n == "json") return OutputFormat::kJson;
  if (n == "csv") return OutputFormat::kCsv;
  if (n == "pretty") return OutputFormat::kPretty;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void RunConfig::validate() const {
  if (!is_prime(p) || p <= 2) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  cls.validate();
  if (trials && *trials < 1) throw std::invalid_argument("--trials must be positive");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j{{"p", p}, {"seed", seed}, {"m", cls.m}, {"k", cls.k}, {"delta", cls.delta},
                   {"pattern", to_string(pattern)}};
  if (window) j["window"] = {window->first, window->second};
  if (e) j["e"] = e->entries();
  if (f) j["f"] = f->entries();
  if (d) j["d"] = d->entries();
  if (degree) j["degree"] = *degree;
  if (sections) j["sections"] = *sections;
  if (trials) j["trials"] = *trials;
  if (selector) j["selector"] = to_string(*selector);
  if (lemma) j["lemma"] = *lemma;
  if (bound) j["bound"] = *bound;
  if (genus) j["g"] = *genus;
  return j;
}

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("HBN_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string s(raw);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("HBN_SEED is not an integer: " + s);
  return v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in '" + text + "'");
    const std::string tok = item.substr(first, last - first + 1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("'" + tok + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of integers");
  return out;
}

std::string render(const CommandOutput& out, OutputFormat format) {
  const Table& t = out.table;
  std::ostringstream s;
  switch (format) {
    case OutputFormat::kJson:
      s << out.json.dump(2) << '\n';
      break;
    case OutputFormat::kCsv: {
      auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_field(row[i]);
        s << '\n';
      };
      line(t.columns);
      for (const auto& row : t.rows) line(row);
      break;
    }
    case OutputFormat::kPretty: {
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      auto line = [&](const std::vector<std::string>& row) {
        std::string l;
        for (std::size_t i = 0; i < row.size(); ++i) {
          l += row[i];
          if (i + 1 < row.size()) l += std::string(width[i] - row[i].size() + 2, ' ');
        }
        s << l << '\n';
      };
      line(t.columns);
      for (const auto& row : t.rows) line(row);
      if (t.rows.empty()) s << "(no rows)\n";
      for (const auto& [col, src] : t.provenance) s << "# " << col << ": " << src << '\n';
      break;
    }
  }
  return s.str();
}

CommandOutput cmd_enumerate(const RunConfig& cfg) {
  cfg.validate();
  EnumerationOptions opts;
  opts.window = cfg.window;
  if (cfg.e) {
    require_length(*cfg.e, cfg.cls.k, "e");
    opts.e = cfg.e;
  }
  opts.degree = cfg.degree;
  opts.sections = cfg.sections;
  const auto reports = enumerate_strata(cfg.cls, opts);

  const bool plane = cfg.cls.m == 1 && cfg.cls.delta == 0;
  Table t;
  t.columns = {"e", "f", "u_e", "u_f", "nu", "dim"};
  t.provenance = {{"u_e", "expected_codimension(e)"},
                  {"u_f", "expected_codimension(f)"},
                  {"nu", "nu(e, f, m)"},
                  {"dim", "predicted_dim: (2k^2 + 2k delta + k^2 m + nu) - (2k^2 + u_e + u_f - 1) - (2k delta + k^2 m + 1 - g)"}};
  if (plane) {
    t.columns.push_back("plane_dim");
    t.provenance["plane_dim"] = "plane_curve_dim(e, g)";
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reports) {
    std::vector<std::string> row{cell(r.e), cell(r.f), cell(r.u_e), cell(r.u_f), cell(r.nu), cell(r.dim)};
    if (plane) row.push_back(r.plane_dim ? cell(*r.plane_dim) : "");
    t.rows.push_back(std::move(row));
    rows.push_back(to_json(r));
  }
  const auto window = cfg.window.value_or(default_window(cfg.cls));
  nlohmann::json body{{"genus", genus(cfg.cls)}, {"strata", rows}, {"count", reports.size()}};
  if (!cfg.degree) body["window"] = {window.first, window.second};
  return finish("enumerate", cfg, std::move(body), std::move(t), kExitOk);
}

CommandOutput cmd_sample(const RunConfig& cfg) {
  cfg.validate();
  std::pair<SplittingType, SplittingType> types{SplittingType({0}), SplittingType({0})};
  try {
    types = stratum_types(cfg);
  } catch (const EmptyStratum& err) {
    return empty_stratum("sample", cfg, err);
  }
  const auto& [e, f] = types;
  const PrimeField field(cfg.p);
  Rng rng(cfg.seed);
  const DegreeGrid grid(e, f, cfg.cls.m);
  const auto forced = forced_reducibility(grid);

  Table t;
  t.columns = {"attempt", "smoothness", "method", "h0_OC", "disc_degree", "disc_expected", "cokernel"};
  t.provenance = {{"smoothness", "Jacobian criterion per chart: resultant gcd, then candidate fibers over F_p^2"},
                  {"h0_OC", "1 + h^1(F_m, O(-C))"},
                  {"disc_degree", "deg Res(P_x, P_y) over both charts of the line"},
                  {"disc_expected", "2g + 2k - 2"},
                  {"cokernel", "rank(Ax + By) = k - 1 at " + std::to_string(kCokernelPoints) + " sampled points"}};
  nlohmann::json body{{"e", e.entries()}, {"f", f.entries()}, {"genus", genus(cfg.cls)}, {"forced", forced_json(forced)}};

  if (!forced.none()) {
    const auto pair = sample_pair(field, grid, cfg.pattern, rng);
    const auto curve = phi(pair);
    body["pair"] = to_json(pair);
    body["curve"] = to_json(curve);
    body["factor_verified"] = verify_forced_factor(pair, curve, forced);
    body["status"] = "FORCED_REDUCIBLE";
    t.rows.push_back({"1", forced.verdict(), "grid", "", "", "", ""});
    t.provenance["method"] = "forced_reducibility(degree grid)";
    return finish("sample", cfg, std::move(body), std::move(t), kExitEmptyStratum);
  }

  const int retries = cfg.trials.value_or(kDefaultSampleRetries);
  nlohmann::json attempts = nlohmann::json::array();
  std::optional<MatrixPair> pair;
  std::optional<BinaryFormCurve> curve;
  std::optional<SmoothnessCertificate> cert;
  for (int attempt = 1; attempt <= retries; ++attempt) {
    pair = sample_pair(field, grid, cfg.pattern, rng);
    curve = phi(*pair);
    if (curve->is_zero()) {
      attempts.push_back({{"attempt", attempt}, {"verdict", "ZERO"}});
      t.rows.push_back({cell(attempt), "ZERO", "", "", "", "", ""});
      cert.reset();
      continue;
    }
    cert = smoothness(*curve, rng);
    attempts.push_back({{"attempt", attempt}, {"smoothness", to_json(*cert, field)}});
    t.rows.push_back({cell(attempt), to_string(cert->verdict), to_string(cert->method), "", "", "", ""});
    if (cert->verdict == SmoothVerdict::kSmooth) break;
  }
  body["attempts"] = attempts;
  if (pair) body["pair"] = to_json(*pair);
  if (curve) body["curve"] = to_json(*curve);

  if (!cert || cert->verdict != SmoothVerdict::kSmooth) {
    body["status"] = "INCONCLUSIVE";
    return finish("sample", cfg, std::move(body), std::move(t), kExitInconclusive);
  }

  const int h0 = connectedness(cfg.cls);
  const auto disc = discriminant_check(*curve);
  const auto cokernel = cokernel_rank_check(*pair, *curve, kCokernelPoints, rng);
  body["smoothness"] = to_json(*cert, field);
  body["h0_OC"] = h0;
  body["discriminant"] = {{"degree", disc.degree}, {"expected", disc.expected}, {"separable", disc.separable}};
  body["cokernel"] = {{"points", kCokernelPoints},
                      {"ok", cokernel ? nlohmann::json(*cokernel) : nlohmann::json(nullptr)}};
  auto& last = t.rows.back();
  last[3] = cell(h0);
  last[4] = cell(disc.degree);
  last[5] = cell(disc.expected);
  last[6] = cokernel ? cell(*cokernel) : "no points";

  const bool certified = h0 == 1 && disc.ok() && cokernel.value_or(false);
  body["status"] = certified ? "CERTIFIED" : "INCONCLUSIVE";
  return finish("sample", cfg, std::move(body), std::move(t), certified ? kExitOk : kExitInconclusive);
}

CommandOutput cmd_dominance(const RunConfig& cfg) {
  cfg.validate();
  std::pair<SplittingType, SplittingType> types{SplittingType({0}), SplittingType({0})};
  try {
    types = stratum_types(cfg);
  } catch (const EmptyStratum& err) {
    return empty_stratum("dominance", cfg, err);
  }
  const auto& [e, f] = types;
  const PrimeField field(cfg.p);
  Rng rng(cfg.seed);
  const int trials = cfg.trials.value_or(kDefaultDominanceTrials);
  const DegreeGrid grid(e, f, cfg.cls.m);
  const auto forced = forced_reducibility(grid);
  nlohmann::json body{{"e", e.entries()}, {"f", f.entries()}, {"forced", forced_json(forced)}};

  if (!cfg.lemma) {
    if (cfg.selector && *cfg.selector != Selector::kFull) {
      throw std::invalid_argument("selector " + to_string(*cfg.selector) + " needs --lemma");
    }
    const auto r = dominance_rank(e, f, cfg.cls, trials, rng, field);
    body["dominance"] = to_json(r);
    Table t;
    t.columns = {"e", "f", "target", "source", "max_rank", "trials", "first_success", "verdict", "forced"};
    t.rows.push_back({cell(e), cell(f), cell(r.target_dim), cell(r.source_dim), cell(r.max_rank), cell(r.trials),
                      r.first_success ? cell(*r.first_success) : "", r.verdict(), forced.verdict()});
    t.provenance = {{"target", "sum over x-powers of (delta + (k - i) m + 1)"},
                    {"source", "sum (a_ij + 1)_+ + (b_ij + 1)_+"},
                    {"max_rank", "largest rank of dphi over " + std::to_string(r.trials) + " sampled FULL pairs"},
                    {"forced", "forced_reducibility(degree grid)"}};
    int code = kExitOk;
    if (!forced.none()) {
      code = kExitEmptyStratum;
    } else if (!r.dominant()) {
      code = kExitInconclusive;
    }
    return finish("dominance", cfg, std::move(body), std::move(t), code);
  }

  const std::string lemma = lower(*cfg.lemma);
  Selector required = Selector::kFull;
  if (lemma == "is") {
    required = Selector::kTCorner;
  } else if (lemma == "main") {
    required = Selector::kTPrime;
  } else if (lemma != "sq") {
    throw std::invalid_argument("unknown lemma '" + *cfg.lemma + "' (expected is, main or sq)");
  }
  if (cfg.selector && *cfg.selector != required) {
    throw std::invalid_argument("lemma " + lemma + " runs on " + to_string(required) + ", not " +
                                to_string(*cfg.selector));
  }

  int rank = 0;
  int target = 0;
  int used = 0;
  bool holds = false;
  if (lemma == "is") {
    const auto r = lemma_is_check(e, f, cfg.cls.m, rng, field, trials);
    rank = r.rank;
    target = r.target;
    used = r.attempts;
    holds = r.holds();
  } else {
    for (used = 1; used <= trials; ++used) {
      const auto pair = sample_pair(field, grid, Pattern::kStrictUpper, rng);
      if (lemma == "main") {
        const auto r = lemma_main_check(pair);
        body["contained"] = r.contained;
        rank = r.image_rank;
        target = r.subspace_dim;
        holds = r.holds();
      } else {
        const auto r = lemma_sq_check(pair);
        rank = r.rank;
        target = r.target;
        holds = r.holds();
      }
      if (holds) break;
    }
    used = std::min(used, trials);
  }
  body["lemma"] = {{"name", lemma}, {"selector", to_string(required)}, {"rank", rank}, {"target", target},
                   {"attempts", used}, {"holds", holds}};
  Table t;
  t.columns = {"e", "f", "lemma", "selector", "rank", "target", "attempts", "holds"};
  t.rows.push_back({cell(e), cell(f), lemma, to_string(required), cell(rank), cell(target), cell(used), cell(holds)});
  t.provenance = {{"rank", "rank of the lemma's restricted differential over sampled strictly upper pairs"},
                  {"target", lemma == "main" ? "dimension of the divisibility subspace" : "coefficient count"}};
  return finish("dominance", cfg, std::move(body), std::move(t), holds ? kExitOk : kExitInconclusive);
}

CommandOutput cmd_section5(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  nlohmann::json body;
  switch (cfg.section5) {
    case Section5Mode::kAbundance: {
      const int bound = cfg.bound.value_or(default_e_bound(cfg.cls));
      const auto r = abundance_verdict(cfg.cls, bound);
      body["abundance"] = to_json(r);
      t.columns = {"m", "k", "delta", "scrollar", "e_bound", "conjectured", "realizable", "verdict", "witness"};
      t.rows.push_back({cell(cfg.cls.m), cell(cfg.cls.k), cell(cfg.cls.delta), r.a.to_string(), cell(bound),
                        cell(r.conjectured), cell(r.realizable), r.abundant ? "ABUNDANT" : "NOT_ABUNDANT",
                        r.witness ? cell(*r.witness) : ""});
      t.provenance = {{"scrollar", "a_i = i m + delta"},
                      {"conjectured", "#{e : e_1 = 0, e_k <= e_bound, e_{i+j} <= a_i + e_j}"},
                      {"realizable", "#{e : e_1 = 0, e_k <= e_bound, corollary_check}"}};
      break;
    }
    case Section5Mode::kOo: {
      if (!cfg.bound) throw std::invalid_argument("--oo needs --bound");
      const auto poly = oo_polytope(cfg.cls.k, *cfg.bound);
      nlohmann::json pts = nlohmann::json::array();
      t.columns = {"scrollar"};
      for (const auto& a : poly) {
        pts.push_back(a.entries());
        t.rows.push_back({a.to_string()});
      }
      body["oo"] = {{"k", cfg.cls.k}, {"bound", *cfg.bound}, {"count", poly.size()}, {"points", pts}};
      t.provenance = {{"scrollar", "1 <= a_1 <= ... <= a_{k-1} <= bound with a_{i+j} <= a_i + a_j"}};
      break;
    }
    case Section5Mode::kGeneralCover: {
      if (!cfg.genus) throw std::invalid_argument("--general-cover needs --g");
      const auto w = general_cover_not_abundant(cfg.cls.k, *cfg.genus);
      body["general_cover"] = w ? to_json(*w) : nlohmann::json(nullptr);
      t.columns = {"k", "g", "scrollar", "witness", "u", "method"};
      if (w) {
        t.rows.push_back({cell(w->k), cell(w->genus), w->a.to_string(), cell(w->e), cell(w->u),
                          w->constructed ? "construction" : "search"});
      }
      t.provenance = {{"scrollar", "balanced: a_i in {d, d + 1} summing to g + k - 1"},
                      {"u", "expected_codimension(witness), exceeds g"}};
      break;
    }
    case Section5Mode::kTriple: {
      if (!cfg.d || !cfg.e || !cfg.f || !cfg.genus) throw std::invalid_argument("--triple needs --d, --e, --f and --g");
      const auto r = general_bound_check(*cfg.d, *cfg.e, *cfg.f, *cfg.genus);
      body["triple"] = to_json(r);
      t.columns = {"i", "j", "f_(i+j-k)", "d_i + e_j"};
      const int k = cfg.d->size();
      for (const auto& [i, j] : r.violations) {
        t.rows.push_back({cell(i), cell(j), cell((*cfg.f)[i + j - k - 1]), cell((*cfg.d)[i - 1] + (*cfg.e)[j - 1])});
      }
      t.provenance = {{"f_(i+j-k)", "violations of f_{i+j-k} >= d_i + e_j"}};
      break;
    }
  }
  return finish("section5", cfg, std::move(body), std::move(t), kExitOk);
}

}  // namespace hbn
