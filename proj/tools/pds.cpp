// pds: decide completeness of periodic dilation systems of step functions.
//
// Exit codes: 0 Complete, 1 Incomplete, 2 Undetermined (decide); scans and
// selftest use 0 for success, 1 for a law mismatch or failed suite, 2 when
// something stayed undetermined. Errors: 64 usage, 65 bad input data,
// 66 unreadable input, 70 internal failure, 73 unwritable output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pds/catalog.hpp"
#include "pds/error.hpp"
#include "pds/literal.hpp"
#include "pds/numoracle.hpp"
#include "pds/report.hpp"
#include "pds/selftest.hpp"

using namespace pds;

namespace {

constexpr int kUsage = 64, kData = 65, kNoInput = 66, kSoftware = 70, kCantCreate = 73;

struct ExitError {
  int code;
  std::string message;
};

struct RunConfig {
  std::string mode = "fast";
  int precision = 64;
  std::string margin = "1/10";
  int jobs = 1;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;

  DecideOptions decide() const {
    DecideOptions o;
    o.mode = mode == "certify" ? DecideMode::Certify : DecideMode::Fast;
    o.zero.precision = precision;
    o.zero.seed = seed;
    try {
      o.zero.margin = parse_rational(margin);
    } catch (const Error& e) {
      throw ExitError{kUsage, "--margin: " + std::string(e.what())};
    }
    return o;
  }
  ScanOptions scan() const { return {decide(), jobs}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kNoInput, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream o(cfg.out, std::ios::binary);
  if (!o) throw ExitError{kCantCreate, "cannot write " + cfg.out};
  o << text;
}

StepFunction load_step(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_step_json(text);
  } catch (const ParseError& e) {
    throw ExitError{kData, path + ": " + e.what()};
  } catch (const InvalidArgument& e) {
    throw ExitError{kData, path + ": " + e.what()};
  }
}

int verdict_exit(CompletenessStatus s) {
  switch (s) {
    case CompletenessStatus::Complete: return 0;
    case CompletenessStatus::Incomplete: return 1;
    case CompletenessStatus::Undetermined: return 2;
  }
  return kSoftware;
}

std::string render_verdict(const RunConfig& cfg, const CompletenessVerdict& v) {
  Json j = verdict_to_json(v);
  if (cfg.format == "json") return j.dump(2) + "\n";
  std::string kind = v.zero_verdict ? to_string(v.zero_verdict->certificate.kind) : "None";
  std::string reasons;
  for (const auto& r : j["reasons"]) reasons += (reasons.empty() ? "" : "; ") + r.get<std::string>();
  if (cfg.format == "csv")
    return "status,modulus,certificate,polynomial,reasons\n" + std::string(to_string(v.status)) + "," +
           (v.character ? std::to_string(v.character->modulus()) : "") + "," + kind + ",\"" +
           (v.theorem_polynomial ? v.theorem_polynomial->debug_string() : "") + "\",\"" + reasons + "\"\n";
  std::ostringstream s;
  s << "status       " << to_string(v.status) << "\n";
  s << "t            " << v.t << "\n";
  if (v.character)
    s << "character    modulus " << v.character->modulus() << ", index " << v.character->index() << "\n";
  if (v.theorem_polynomial) s << "polynomial   " << v.theorem_polynomial->debug_string() << "\n";
  s << "certificate  " << kind << "\n";
  if (!reasons.empty()) s << "reasons      " << reasons << "\n";
  return s.str();
}

int finish_scan(const RunConfig& cfg, const ScanReport& r) {
  std::string body = cfg.format == "json" ? scan_to_json(r).dump(2) + "\n"
                     : cfg.format == "csv" ? scan_to_csv(r)
                                           : scan_to_table(r);
  emit(cfg, body);
  std::string complete;
  for (const auto& d : r.complete()) complete += (complete.empty() ? "" : ",") + d;
  std::cerr << scan_summary(r) << "\ncomplete={" << complete << "}\n";
  if (!r.mismatches().empty()) {
    std::cerr << "mismatches with the expected law: " << r.mismatches().size() << "\n";
    return 1;
  }
  return r.undetermined.empty() ? 0 : 2;
}

DirichletCharacter parse_character(long q, const std::string& spec, int zeta_order) {
  if (spec == "legendre") {
    if (!is_prime(q) || q == 2) throw ExitError{kUsage, "legendre needs an odd prime modulus"};
    return legendre_character(q);
  }
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    const auto& cs = enumerate_characters(q);
    std::size_t k = std::stoul(spec);
    if (k >= cs.size()) throw ExitError{kUsage, "character index out of range"};
    return cs[k];
  }
  // "n=value,n=value" with values in the literal grammar over zeta_order
  std::vector<std::pair<long, CycloNumber>> values;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ExitError{kUsage, "character: expected n=value pairs"};
    values.emplace_back(std::stol(item.substr(0, eq)), parse_cyclo(item.substr(eq + 1), zeta_order));
  }
  return character_from_values(q, values);
}

std::vector<long> default_ks(long K) {
  std::vector<long> ks;
  for (long k = 1; k < K; k *= 2) ks.push_back(k);
  ks.push_back(K);
  return ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completeness of periodic dilation systems of rational step functions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--mode", cfg.mode, "fast or certify")->check(CLI::IsMember({"fast", "certify"}))->envname("PDS_MODE");
  app.add_option("--precision", cfg.precision, "working precision in bits")
      ->check(CLI::PositiveNumber)
      ->envname("PDS_PRECISION");
  app.add_option("--margin", cfg.margin, "interior margin for witness search, rational in (0,1)")->envname("PDS_MARGIN");
  app.add_option("--jobs", cfg.jobs, "worker threads for scans")->check(CLI::PositiveNumber)->envname("PDS_JOBS");
  app.add_option("--format", cfg.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->envname("PDS_FORMAT");
  app.add_option("--out", cfg.out, "output path (stdout if absent)")->envname("PDS_OUT");
  app.add_option("--seed", cfg.seed, "seed for numeric searches")->envname("PDS_SEED");

  std::string file;
  auto* decide = app.add_subcommand("decide", "decide completeness of a step-function file");
  decide->add_option("file", file, "step-function JSON")->required();

  auto* scan = app.add_subcommand("scan", "run a catalogue scan");
  scan->require_subcommand(1);
  long maxden = 6, p = 7, l = 1, range = 3;
  std::string family = "half";
  auto* s_int = scan->add_subcommand("intervals", "indicators of Farey intervals");
  s_int->add_option("--max-denominator", maxden)->check(CLI::PositiveNumber);
  auto* s_koz = scan->add_subcommand("kozlov", "indicators of (0, r)");
  s_koz->add_option("--max-denominator", maxden)->check(CLI::PositiveNumber);
  auto* s_pl = scan->add_subcommand("pl", "unions of cells of width p^-l");
  s_pl->add_option("--p", p)->check(CLI::PositiveNumber);
  s_pl->add_option("--l", l)->check(CLI::PositiveNumber);
  auto* s_sw = scan->add_subcommand("sweep", "two-coefficient families over the integer grid [-range, range]^2");
  s_sw->add_option("--family", family)->check(CLI::IsMember({"half", "third"}));
  s_sw->add_option("--range", range)->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "write a step-function file");
  construct->require_subcommand(1);
  long modulus = 5, n = 1, t = 3;
  int zeta_order = 1;
  std::string character = "legendre", variant;
  bool then_decide = false;
  auto* c_sn = construct->add_subcommand("sn", "S_n for a primitive even character");
  c_sn->add_option("--modulus", modulus)->check(CLI::PositiveNumber);
  c_sn->add_option("--character", character, "legendre, an index, or n=value pairs");
  c_sn->add_option("--zeta-order", zeta_order, "order for literal values in --character")->check(CLI::PositiveNumber);
  c_sn->add_option("--n", n)->check(CLI::PositiveNumber);
  auto* c_comb = construct->add_subcommand("comb", "alternating comb");
  c_comb->add_option("--t", t)->check(CLI::PositiveNumber);
  c_comb->add_option("--variant", variant, "V, V_complement or even_t (default by parity)")
      ->check(CLI::IsMember({"V", "V_complement", "even_t"}));
  auto* c_lad = construct->add_subcommand("ladder", "ladder for odd t");
  c_lad->add_option("--t", t)->check(CLI::PositiveNumber);
  for (auto* c : {c_sn, c_comb, c_lad}) c->add_flag("--decide", then_decide, "also decide and print the verdict");

  long K = 64, N = 512;
  std::string thresholds_path = "oracle-thresholds";
  auto* oracle = app.add_subcommand("oracle", "residual curve of the truncated dilation system");
  oracle->add_option("file", file, "step-function JSON")->required();
  oracle->add_option("--K", K)->check(CLI::PositiveNumber);
  oracle->add_option("--N", N)->check(CLI::PositiveNumber);
  oracle->add_option("--thresholds", thresholds_path, "calibrated thresholds to classify against");

  auto* calibrate_cmd = app.add_subcommand("calibrate", "calibrate oracle thresholds on the interval corpus");
  calibrate_cmd->add_option("--K", K)->check(CLI::PositiveNumber);
  calibrate_cmd->add_option("--N", N)->check(CLI::PositiveNumber);
  calibrate_cmd->add_option("--thresholds", thresholds_path, "where to write the thresholds");

  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "run the embedded identity suites");
  selftest->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*decide) {
      CompletenessVerdict v = decide_completeness(load_step(file), cfg.decide());
      emit(cfg, render_verdict(cfg, v));
      return verdict_exit(v.status);
    }
    if (*scan) {
      if (*s_int) return finish_scan(cfg, scan_intervals(maxden, cfg.scan()));
      if (*s_koz) return finish_scan(cfg, kozlov_scan(maxden, cfg.scan()));
      if (*s_pl) return finish_scan(cfg, enumerate_pl(p, l, cfg.scan()));
      std::vector<Rational> grid;
      for (long k = -range; k <= range; ++k) grid.push_back(make_rational(k));
      return finish_scan(cfg, coefficient_family_sweep(family, grid, cfg.scan()));
    }
    if (*construct) {
      StepFunction phi;
      if (*c_sn) phi = build_sn(parse_character(modulus, character, zeta_order), n);
      if (*c_comb) {
        CombVariant v = variant == "V_complement" ? CombVariant::VComplement
                        : variant == "even_t"     ? CombVariant::EvenT
                        : variant == "V"          ? CombVariant::V
                        : t % 2 == 0              ? CombVariant::EvenT
                                                  : CombVariant::V;
        phi = build_comb(t, v);
      }
      if (*c_lad) phi = build_ladder(t);
      emit(cfg, step_to_json(phi).dump(2) + "\n");
      if (!then_decide) return 0;
      CompletenessVerdict v = decide_completeness(phi, cfg.decide());
      std::cerr << render_verdict(RunConfig{cfg.mode, cfg.precision, cfg.margin, 1, "table"}, v);
      return verdict_exit(v.status);
    }
    if (*oracle) {
      StepFunction phi = load_step(file);
      ResidualCurve c = residual_curve(phi, default_ks(K), N);
      emit(cfg, to_csv(c));
      std::ifstream th(thresholds_path);
      if (th) {
        std::ostringstream s;
        s << th.rdbuf();
        OracleThresholds t0 = parse_thresholds(s.str());
        double last = c.residuals.back();
        const char* cls = classify(last, t0) == OracleClass::BelowCeiling ? "below complete ceiling"
                          : classify(last, t0) == OracleClass::AboveFloor ? "above incomplete floor"
                                                                          : "between thresholds";
        std::cerr << "residual " << last << ": " << cls << " (heuristic, never a verdict)\n";
      }
      return 0;
    }
    if (*calibrate_cmd) {
      Calibration c = calibrate(K, N);
      emit(cfg, to_csv(c));
      std::ofstream th(thresholds_path, std::ios::binary);
      if (!th) throw ExitError{kCantCreate, "cannot write " + thresholds_path};
      th << to_config(c.thresholds);
      std::cerr << "complete_ceiling=" << c.thresholds.complete_ceiling
                << " incomplete_floor=" << c.thresholds.incomplete_floor
                << " separated=" << (c.thresholds.separated() ? "true" : "false") << "\n";
      return 0;
    }
    if (*selftest) {
      auto results = run_selftest({cfg.seed, inject_fault});
      long passed = 0, failed = 0;
      for (const auto& r : results) {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed << " failed";
        if (!r.first_failure.empty()) std::cout << " (first: " << r.first_failure << ")";
        std::cout << "\n";
        passed += r.passed;
        failed += r.failed;
      }
      std::cout << "total: " << passed << " passed, " << failed << " failed\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const ExitError& e) {
    std::cerr << "pds: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "pds: " << e.what() << "\n";
    return kData;
  } catch (const InvalidArgument& e) {
    std::cerr << "pds: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "pds: internal error: " << e.what() << "\n";
    return kSoftware;
  }
  return kSoftware;
}
