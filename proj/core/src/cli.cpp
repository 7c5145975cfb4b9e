#include "gring/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gring/cache.hpp"
#include "gring/dsl.hpp"
#include "gring/ideal.hpp"
#include "gring/maps.hpp"
#include "gring/registry.hpp"

namespace gring {
namespace {

using nlohmann::json;

struct CommonOpts {
  std::string out_path;
  std::string cache_dir;
  unsigned jobs = 1;
  std::uint64_t seed = EngineLimits{}.seed;
  bool timings = false;
};

int emit(const json& j, const CommonOpts& opts, std::ostream& out,
         std::ostream& err) {
  std::string text = j.dump(2) + "\n";
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) {
      err << "error: cannot write " << opts.out_path << "\n";
      return 2;
    }
    return 0;
  }
  out << text;
  return 0;
}

std::vector<ElemId> parse_id_csv(const std::string& csv, std::size_t ring_size) {
  std::vector<ElemId> ids;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad element id in --ideal: '" + tok + "'");
    }
    if (pos != tok.size() || v >= ring_size)
      throw std::invalid_argument("bad element id in --ideal: '" + tok + "'");
    ids.push_back(static_cast<ElemId>(v));
  }
  if (ids.empty()) throw std::invalid_argument("--ideal lists no element ids");
  return ids;
}

int run_check_cmd(const std::string& expr, const std::string& property,
                  const std::string& ideal_csv, const std::string& expect,
                  const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  auto prop = property_from_name(property);
  if (!prop) {
    err << "error: unknown property: " << property << "\n";
    return 2;
  }
  EngineLimits lm;
  lm.seed = opts.seed;
  lm.jobs = opts.jobs;
  std::string canonical = print_ring_expr(*parse_ring_expr(expr));

  std::optional<ResultCache> cache;
  if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir, &err);
  std::string op = "check:" + property + ":ideal=" + ideal_csv;
  std::string key;
  json result;
  bool have = false;
  if (cache && !opts.timings) {
    key = cache->key(canonical, op, lm);
    if (auto hit = cache->load(key)) {
      result = std::move(*hit);
      have = true;
    }
  }
  if (!have) {
    auto t0 = std::chrono::steady_clock::now();
    RingPtr r = build_ring(canonical, lm);
    Ideal target;
    if (ideal_csv.empty()) {
      target = zero_ideal(r);
    } else {
      std::vector<ElemId> gens = parse_id_csv(ideal_csv, r->size());
      target = ideal_closure(r, gens, lm);
    }
    PropertyReport rep = check_ideal_property(target, *prop, lm);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    result["expr"] = canonical;
    json ij;
    std::vector<ElemId> gens(target.generators().begin(), target.generators().end());
    ij["generators"] = gens;
    ij["size"] = target.size();
    result["ideal"] = ij;
    result["report"] = property_report_json(r, rep, opts.timings, ms);
    if (cache && !opts.timings) cache->store(key, result);
  }
  int rc = emit(result, opts, out, err);
  if (rc != 0) return rc;
  if (!expect.empty()) {
    bool want = expect == "true";
    bool got = result["report"]["holds"].get<bool>();
    if (want != got) {
      err << "expectation failed: " << property << " is "
          << (got ? "true" : "false") << ", expected " << expect << "\n";
      return 1;
    }
  }
  return 0;
}

int run_verify_cmd(const std::vector<std::string>& ids, const std::string& grid_path,
                   bool keep_going, const CommonOpts& opts, std::ostream& out,
                   std::ostream& err) {
  GridSpec grid = load_grid_file(grid_path);
  grid.limits.seed = opts.seed;
  grid.limits.jobs = opts.jobs;

  std::optional<ResultCache> cache;
  if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir, &err);
  std::string op = "verify:";
  for (const std::string& id : ids) op += id + ",";
  op += ":checks=";
  for (const std::string& id : grid.checks) op += id + ",";
  op += ":exprs=";
  for (const std::string& e : grid.exprs) op += e + ";";
  op += ":timeout=" + std::to_string(grid.timeout_per_instance_s);
  op += keep_going ? ":keep" : ":stop";
  std::string key;
  json result;
  bool have = false;
  if (cache && !opts.timings) {
    key = cache->key("grid", op, grid.limits);
    if (auto hit = cache->load(key)) {
      result = std::move(*hit);
      have = true;
    }
  }
  if (!have) {
    GridRunResult res = run_grid(ids, grid, keep_going);
    json reports = json::array();
    for (const CheckReport& rep : res.reports)
      reports.push_back(check_report_json(rep, opts.timings));
    result["grid"] = grid_path;
    result["instances"] = grid.exprs;
    result["reports"] = reports;
    json summary;
    summary["confirmed"] = res.confirmed;
    summary["vacuous"] = res.vacuous;
    summary["refuted"] = res.refuted;
    summary["undecided"] = res.undecided;
    summary["aborted"] = res.aborted;
    result["summary"] = summary;
    if (cache && !opts.timings) cache->store(key, result);
  }
  int rc = emit(result, opts, out, err);
  if (rc != 0) return rc;
  std::size_t refuted = result["summary"]["refuted"].get<std::size_t>();
  std::size_t undecided = result["summary"]["undecided"].get<std::size_t>();
  if (refuted > 0) return 1;
  if (undecided > 0) return 3;
  return 0;
}

int run_search_cmd(const std::string& target, const std::string& grid_path,
                   const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  GridSpec grid = load_grid_file(grid_path);
  grid.limits.seed = opts.seed;
  grid.limits.jobs = opts.jobs;

  std::optional<ResultCache> cache;
  if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir, &err);
  std::string op = "search:" + target + ":exprs=";
  for (const std::string& e : grid.exprs) op += e + ";";
  op += ":timeout=" + std::to_string(grid.timeout_per_instance_s);
  std::string key;
  json result;
  bool have = false;
  if (cache && !opts.timings) {
    key = cache->key("grid", op, grid.limits);
    if (auto hit = cache->load(key)) {
      result = std::move(*hit);
      have = true;
    }
  }
  if (!have) {
    SearchReport sr = search_counterexample(target, grid);
    result = search_report_json(sr);
    if (cache && !opts.timings) cache->store(key, result);
  }
  int rc = emit(result, opts, out, err);
  if (rc != 0) return rc;
  std::string verdict = result["verdict"].get<std::string>();
  if (verdict == "counterexample") return 1;
  if (verdict == "undecided-cap") return 3;
  return 0;
}

int run_info_cmd(const std::string& expr, const CommonOpts& opts,
                 std::ostream& out, std::ostream& err) {
  EngineLimits lm;
  lm.seed = opts.seed;
  lm.jobs = opts.jobs;
  std::string canonical = print_ring_expr(*parse_ring_expr(expr));
  RingPtr r = build_ring(canonical, lm);
  json j;
  j["expr"] = canonical;
  j["size"] = r->size();
  j["characteristic"] = r->characteristic();
  j["commutative"] = r->commutative();
  j["tabled"] = r->tabled();

  auto radical_entry = [&](auto&& fn) -> json {
    try {
      Ideal rad = fn();
      json e;
      e["size"] = rad.size();
      std::vector<ElemId> gens(rad.generators().begin(), rad.generators().end());
      e["generators"] = gens;
      return e;
    } catch (const CapExceeded& ex) {
      return json(std::string("cap-exceeded: ") + ex.what());
    }
  };
  j["pseudo_radical"] = radical_entry([&] { return prime_radical(r, lm); });
  j["jacobson_radical"] = radical_entry([&] { return jacobson_radical(r, lm); });
  try {
    j["principal_ideal_count"] = distinct_principal_ideals(r, lm).size();
  } catch (const CapExceeded& ex) {
    j["principal_ideal_count"] = json(std::string("cap-exceeded: ") + ex.what());
  }
  if (r->size() <= lm.oracle_cap) {
    j["ideal_count"] = enumerate_all_ideals(r, lm).size();
  }

  if (auto ctx = group_ring_context(r)) {
    json g;
    const GroupTable& grp = *ctx->group;
    g["name"] = grp.name();
    g["order"] = grp.order();
    g["abelian"] = grp.is_abelian();
    g["center_order"] = center(grp).order();
    g["subgroups"] = all_subgroups(grp, lm).size();
    g["normal_subgroups"] = normal_subgroups(grp, lm).size();
    j["group"] = g;
    j["coefficient_size"] = ctx->coeff->size();
    Ideal aug = augmentation_ideal(*ctx, lm);
    json a;
    a["size"] = aug.size();
    auto nil = ideal_nilpotency_index(aug, lm);
    a["nilpotency_index"] = nil ? json(*nil) : json(nullptr);
    j["aug_ideal"] = a;
  }
  return emit(j, opts, out, err);
}

int run_registry_cmd(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  json j;
  json arr = json::array();
  for (const TheoremCheck& c : list_registry()) {
    json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["mode"] = c.mode;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["count"] = list_registry().size();
  return emit(j, opts, out, err);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite group ring verification engine"};
  app.fallthrough();
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--out", opts.out_path, "write the JSON result to this file");
  app.add_option("--cache", opts.cache_dir, "content-addressed result cache directory");
  app.add_option("--jobs", opts.jobs, "parallel instance workers")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "seed for sampled validations");
  app.add_flag("--timings", opts.timings, "include runtime_ms fields (disables caching)");

  std::string expr, property, ideal_csv, expect, grid_path, target;
  std::vector<std::string> ids;
  bool keep_going = false;

  CLI::App* check = app.add_subcommand("check", "decide one ideal property on one ring");
  check->add_option("expr", expr, "ring expression, e.g. Z3[C6]")->required();
  check->add_option("--property", property, "prime|semiprime|nilary|p-nilary|right-primary|left-primary|essential")->required();
  check->add_option("--ideal", ideal_csv, "comma-separated generator element ids (default: zero ideal)");
  check->add_option("--expect", expect, "fail with exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* verify = app.add_subcommand("verify", "run registry checks over a grid");
  verify->add_option("ids", ids, "check ids (default: grid's checks, else all)");
  verify->add_option("--grid", grid_path, "grid file")->required();
  verify->add_flag("--keep-going", keep_going, "do not stop at the first refutation");

  CLI::App* search = app.add_subcommand("search", "hunt for counterexamples over a grid");
  search->add_option("target", target, "question1|question2|conjecture1")->required();
  search->add_option("--grid", grid_path, "grid file")->required();

  CLI::App* info = app.add_subcommand("info", "describe a ring instance");
  info->add_option("expr", expr, "ring expression")->required();

  app.add_subcommand("registry", "list the registered theorem checks");

  try {
    // CLI11's vector overload expects the arguments reversed
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed())
      return run_check_cmd(expr, property, ideal_csv, expect, opts, out, err);
    if (verify->parsed())
      return run_verify_cmd(ids, grid_path, keep_going, opts, out, err);
    if (search->parsed()) return run_search_cmd(target, grid_path, opts, out, err);
    if (info->parsed()) return run_info_cmd(expr, opts, out, err);
    return run_registry_cmd(opts, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gring
