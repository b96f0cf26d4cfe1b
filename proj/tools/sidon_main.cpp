// Command-line front end: construct / verify / bounds / search / table.
//
// Exit codes: 0 = success (verify: only trivial solutions), 1 = a verifier
// found a violation, 2 = malformed input or usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sidon/json_io.hpp"
#include "sidon/search.hpp"
#include "sidon/sidon.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    values.push_back(v);
  }
  return values;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Output {
  std::string subcommand;
  json parameters;
  std::string primary;  // exactly what goes to stdout
};

void finish(const Output& out, const std::string& manifest_path, double seconds) {
  std::cout << out.primary;
  if (!manifest_path.empty()) {
    json manifest{
        {"subcommand", out.subcommand},
        {"parameters", out.parameters},
        {"artifact_version", kVersion},
        {"wall_clock_seconds", seconds},
        {"output_digest", hex64(fnv1a64(out.primary))},
    };
    std::ofstream f(manifest_path);
    if (!f) throw std::invalid_argument("cannot write manifest file " + manifest_path);
    f << manifest.dump(2) << "\n";
  }
}

sidon::ResidueSet load_set(const std::string& inline_set, const std::string& set_file,
                           bool have_modulus, std::int64_t modulus, bool have_interval,
                           std::int64_t interval) {
  if (!set_file.empty()) {
    std::ifstream f(set_file);
    if (!f) throw std::invalid_argument("cannot read set file " + set_file);
    json j;
    f >> j;
    return sidon::residue_set_from_json(j);
  }
  std::vector<std::int64_t> elements = parse_int_list(inline_set);
  std::sort(elements.begin(), elements.end());
  if (have_modulus) return sidon::make_modular_set(modulus, std::move(elements));
  if (have_interval) return sidon::make_interval_set(interval, std::move(elements));
  throw std::invalid_argument("choose an ambient: --modulus N or --interval N");
}

int default_jobs() {
  if (const char* env = std::getenv("SIDON_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon set construction, verification, bounds, and exhaustive search"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "write a reproducibility manifest to this file");
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker thread cap (default $SIDON_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build the cycle-pruned dilate-free set in Z_{q^2-1}");
  std::int64_t cp = 3, ck_fold = 2, cm = 0, cr = 0, cii = 0;
  int ct = 1;
  std::string out_file;
  construct->add_option("--p", cp, "prime p")->required();
  construct->add_option("--t", ct, "field exponent t, q = p^t")->required();
  construct->add_option("--k", ck_fold, "dilate family order k")->required();
  construct->add_option("--M", cm, "regime margin M >= 2");
  construct->add_option("--r", cr, "regime prime r > M*k with t = r^i");
  construct->add_option("--i", cii, "regime exponent i");
  construct->add_option("--out", out_file, "also write the set file here");

  // verify
  auto* verify = app.add_subcommand("verify", "check a set against a dilate family or the full k-fold family");
  std::string vset, vset_file, vcoeffs;
  std::int64_t vmod = 0, vinterval = 0, vkfold = 0;
  verify->add_option("--set", vset, "comma-separated elements");
  verify->add_option("--set-file", vset_file, "set file (JSON)");
  verify->add_option("--modulus", vmod, "modular ambient Z_N");
  verify->add_option("--interval", vinterval, "interval ambient [1..N]");
  verify->add_option("--coeffs", vcoeffs, "dilate coefficients c_1<...<c_k");
  verify->add_option("--kfold", vkfold, "full k-fold family order");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate an upper bound");
  std::int64_t bn = 0, bk = 1, bck = 1;
  std::string bmode = "sharp", bformat = "json";
  bounds->add_option("--N", bn, "ambient size")->required();
  bounds->add_option("--k", bk, "number of dilate coefficients");
  bounds->add_option("--ck", bck, "largest coefficient c_k");
  bounds->add_option("--mode", bmode, "group | zn | closed | sweep | sharp");
  bounds->add_option("--format", bformat, "json | csv");

  // search
  auto* search = app.add_subcommand("search", "exhaustive maximum-set search");
  std::string scoeffs;
  std::int64_t smod = 0, sinterval = -1, skfold = 0, sbudget = 50'000'000;
  search->add_option("--modulus", smod, "modular ambient Z_N");
  search->add_option("--interval", sinterval, "interval ambient [1..N]");
  search->add_option("--coeffs", scoeffs, "dilate coefficients");
  search->add_option("--kfold", skfold, "full k-fold family order");
  search->add_option("--budget", sbudget, "node budget");

  // table
  auto* table = app.add_subcommand("table", "extremal values over a range of N");
  std::int64_t tfrom = 2, tto = 20, tkfold = 0, tbudget = 50'000'000;
  std::string tcoeffs, tformat = "csv", tambient = "modular";
  table->add_option("--from", tfrom, "first N")->required();
  table->add_option("--to", tto, "last N")->required();
  table->add_option("--ambient", tambient, "modular | interval");
  table->add_option("--coeffs", tcoeffs, "dilate coefficients");
  table->add_option("--kfold", tkfold, "full k-fold family order");
  table->add_option("--budget", tbudget, "node budget per row");
  table->add_option("--format", tformat, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (*construct) {
      sidon::ConstructionParams params;
      params.p = cp;
      params.t = ct;
      params.k = ck_fold;
      if (construct->count("--M")) params.m_margin = cm;
      if (construct->count("--r")) params.r = cr;
      if (construct->count("--i")) params.i = cii;
      const sidon::ConstructReport report = sidon::construct_dilate_free(params);
      if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::invalid_argument("cannot write " + out_file);
        f << sidon::to_json(sidon::make_modular_set(report.modulus, report.set)).dump(2) << "\n";
      }
      Output out;
      out.subcommand = "construct";
      out.parameters = {{"p", cp}, {"t", ct}, {"k", ck_fold}};
      if (params.m_margin) out.parameters["M"] = *params.m_margin;
      if (params.r) out.parameters["r"] = *params.r;
      if (params.i) out.parameters["i"] = *params.i;
      out.primary = sidon::to_json(report).dump(2) + "\n";
      finish(out, manifest_path, elapsed());
      return 0;
    }

    if (*verify) {
      const sidon::ResidueSet a =
          load_set(vset, vset_file, verify->count("--modulus") > 0, vmod,
                   verify->count("--interval") > 0, vinterval);
      std::optional<sidon::Violation> violation;
      json params{{"ambient", a.ambient == sidon::Ambient::kModular ? "modular" : "interval"},
                  {"n", a.n},
                  {"elements", a.elements}};
      if (vkfold > 0) {
        violation = sidon::verify_kfold(a, vkfold, jobs);
        params["kfold"] = vkfold;
      } else {
        const std::vector<std::int64_t> coeffs = parse_int_list(vcoeffs);
        violation = sidon::verify_dilate_family(a, coeffs);
        params["coeffs"] = coeffs;
      }
      Output out;
      out.subcommand = "verify";
      out.parameters = params;
      json result{{"verdict", violation ? "fail" : "pass"}};
      if (violation) result["violation"] = sidon::to_json(*violation);
      out.primary = result.dump(2) + "\n";
      finish(out, manifest_path, elapsed());
      return violation ? 1 : 0;
    }

    if (*bounds) {
      sidon::BoundReport report;
      if (bmode == "group") {
        report = sidon::group_bound(bn, bk);
      } else if (bmode == "zn") {
        report = sidon::sidon_zn_bound(bn);
      } else {
        sidon::IntervalBoundMode mode;
        if (bmode == "closed")
          mode = sidon::IntervalBoundMode::kClosedForm;
        else if (bmode == "sweep")
          mode = sidon::IntervalBoundMode::kSweep;
        else if (bmode == "sharp")
          mode = sidon::IntervalBoundMode::kSharp;
        else
          throw std::invalid_argument("unknown bounds mode '" + bmode + "'");
        report = sidon::interval_dilate_bound(bn, bk, bck, mode);
      }
      Output out;
      out.subcommand = "bounds";
      out.parameters = {{"N", bn}, {"k", bk}, {"ck", bck}, {"mode", bmode}};
      if (bformat == "csv") {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", report.value);
        out.primary = "N,k,ck,mode,value,integer_cap\n" + std::to_string(bn) + "," +
                      std::to_string(bk) + "," + std::to_string(bck) + "," + bmode + "," +
                      buf + "," + std::to_string(report.integer_cap) + "\n";
      } else if (bformat == "json") {
        out.primary = sidon::to_json(report).dump(2) + "\n";
      } else {
        throw std::invalid_argument("unknown format '" + bformat + "'");
      }
      finish(out, manifest_path, elapsed());
      return 0;
    }

    if (*search) {
      sidon::SearchTask task;
      task.ambient = smod > 0 ? sidon::Ambient::kModular : sidon::Ambient::kInterval;
      task.n = smod > 0 ? smod : sinterval;
      if (task.ambient == sidon::Ambient::kInterval && sinterval < 0)
        throw std::invalid_argument("choose an ambient: --modulus N or --interval N");
      task.node_budget = sbudget;
      if (skfold > 0) {
        task.family = sidon::Family::kFullKfold;
        task.k = skfold;
      } else {
        task.family = sidon::Family::kDilate;
        task.coeffs = parse_int_list(scoeffs);
      }
      const sidon::SearchResult result = sidon::max_set(task);
      Output out;
      out.subcommand = "search";
      out.parameters = {{"ambient", smod > 0 ? "modular" : "interval"},
                        {"n", task.n},
                        {"kfold", skfold},
                        {"coeffs", task.coeffs},
                        {"budget", sbudget}};
      out.primary = json{{"optimum", result.optimum},
                         {"witness", sidon::to_json(result.witness)},
                         {"nodes_explored", result.nodes_explored},
                         {"proven_optimal", result.proven_optimal}}
                        .dump(2) +
                    "\n";
      finish(out, manifest_path, elapsed());
      return 0;
    }

    if (*table) {
      sidon::SearchTask prototype;
      prototype.ambient =
          tambient == "interval" ? sidon::Ambient::kInterval : sidon::Ambient::kModular;
      prototype.node_budget = tbudget;
      if (tkfold > 0) {
        prototype.family = sidon::Family::kFullKfold;
        prototype.k = tkfold;
      } else {
        prototype.family = sidon::Family::kDilate;
        prototype.coeffs = parse_int_list(tcoeffs);
      }
      const auto rows = sidon::emit_table(tfrom, tto, prototype);
      Output out;
      out.subcommand = "table";
      out.parameters = {{"from", tfrom}, {"to", tto},     {"ambient", tambient},
                        {"kfold", tkfold}, {"coeffs", prototype.coeffs}, {"budget", tbudget}};
      if (tformat == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
          json j{{"N", row.n},     {"optimum", row.optimum}, {"ratio", row.ratio},
                 {"proven", row.proven}};
          if (row.group_cap) j["group_cap"] = *row.group_cap;
          if (row.interval_cap) j["interval_cap"] = *row.interval_cap;
          arr.push_back(j);
        }
        out.primary = arr.dump(2) + "\n";
      } else if (tformat == "csv") {
        out.primary = sidon::table_to_csv(rows);
      } else {
        throw std::invalid_argument("unknown format '" + tformat + "'");
      }
      finish(out, manifest_path, elapsed());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
