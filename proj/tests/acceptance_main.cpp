// Acceptance gate: one line per criterion, "criterion N: PASS — ..." or
// "criterion N: FAIL — ...", exit 0 iff all pass. Each criterion recomputes
// its claim from scratch through the public API; nothing here is asserted
// from memory.

#include <json.hpp>

#include <gring/cli.hpp>
#include <gring/dsl.hpp>
#include <gring/maps.hpp>
#include <gring/registry.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gring;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f s", s);
  return buf;
}

GridSpec default_grid() {
  return load_grid_file(std::string(GRING_GRID_DIR) + "/default.grid");
}

bool is_group_ring(const std::string& expr) {
  return parse_ring_expr(expr)->kind == RingExpr::Kind::GroupRing;
}

// --- criterion 1: the flagship counterexample -------------------------------

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  int rc = cli_run({"check", "Z3[C6]", "--property", "nilary"}, out, err);
  double dt = seconds_since(t0);
  if (rc != 0) return {false, "exit code " + std::to_string(rc)};
  json j = json::parse(out.str());
  const json& rep = j["report"];
  if (rep["holds"] != false) return {false, "nilary(Z3[C6]) was not false"};
  const json& w = rep["witness"];
  if (w.is_null() || w["kind"] != "ideal-pair")
    return {false, "missing ideal-pair witness"};
  std::vector<std::string> labels = w["element_labels"];
  std::sort(labels.begin(), labels.end());
  if (labels != std::vector<std::string>{"2+2*x^3", "2+x^3"})
    return {false, "witness pair is not the idempotent pair 2+2*x^3, 2+x^3"};
  if (dt >= 60.0) return {false, "took " + fmt_seconds(dt)};
  return {true, "nilary(Z3[C6]) = false, witness pair 2+2*x^3 / 2+x^3 in " +
                    fmt_seconds(dt)};
}

// --- criterion 2: the nilpotency equivalence across the default grid --------

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  auto res = run_grid({"aug-ideal-nilpotency"}, default_grid(), true);
  double dt = seconds_since(t0);
  std::size_t instantiated = 0, hyp_true = 0, hyp_false = 0;
  for (const auto& r : res.reports) {
    if (!r.hypothesis.has_value()) continue;
    ++instantiated;
    (*r.hypothesis ? hyp_true : hyp_false)++;
  }
  std::string tally = std::to_string(instantiated) + " instances (" +
                      std::to_string(hyp_true) + " with a nilpotent kernel, " +
                      std::to_string(hyp_false) + " without), " +
                      std::to_string(res.refuted) + " refuted, " +
                      fmt_seconds(dt);
  if (res.refuted != 0 || res.undecided != 0) return {false, tally};
  if (instantiated < 20 || hyp_true == 0 || hyp_false == 0)
    return {false, "too few instances: " + tally};
  if (dt >= 600.0) return {false, "too slow: " + tally};
  return {true, tally};
}

// --- criterion 3: annihilator identities as exact set equalities ------------

Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  auto grid = default_grid();
  auto res = run_grid({"rel-aug-annihilator", "aug-annihilator-pair"}, grid,
                      true);
  double dt = seconds_since(t0);
  std::size_t confirmed = 0, expected = 0;
  for (const auto& r : res.reports) {
    if (!is_group_ring(r.instance)) continue;
    ++expected;
    if (r.verdict == "confirmed") ++confirmed;
  }
  std::string tally = std::to_string(confirmed) + "/" +
                      std::to_string(expected) +
                      " group-ring instances confirmed, " + fmt_seconds(dt);
  if (res.refuted != 0 || res.undecided != 0 || confirmed != expected)
    return {false, tally};
  return {true, tally};
}

// --- criterion 4: the coincidence suite --------------------------------------

Outcome criterion4() {
  const std::vector<std::string> exprs = {"Z2[C2]", "Z2[C2 x C2]", "Z2[C4]",
                                          "Z3[C3]", "Z2[D4]", "Z2[Q8]"};
  const std::vector<IdealProperty> props = {IdealProperty::Nilary,
                                            IdealProperty::RightPrimary,
                                            IdealProperty::LeftPrimary};
  for (const auto& expr : exprs) {
    Instance inst(expr, EngineLimits{});
    for (IdealProperty p : props) {
      if (!inst.property(p).holds)
        return {false, expr + " is not " + property_name(p)};
    }
  }
  return {true, "nilary = right-primary = left-primary = true on all 6 rings"};
}

// --- criterion 5: principal-pair decision vs exhaustive oracle --------------

Outcome criterion5() {
  const std::vector<IdealProperty> props = {
      IdealProperty::Prime,        IdealProperty::Semiprime,
      IdealProperty::Nilary,       IdealProperty::PNilary,
      IdealProperty::RightPrimary, IdealProperty::LeftPrimary,
      IdealProperty::Essential,
  };
  EngineLimits lm;
  std::size_t rings = 0, comparisons = 0;
  for (const auto& expr : default_grid().exprs) {
    auto r = build_ring(expr);
    if (r->size() > lm.oracle_cap) continue;
    ++rings;
    Ideal z = zero_ideal(r);
    for (IdealProperty p : props) {
      ++comparisons;
      bool engine = check_ideal_property(z, p, lm).holds;
      bool oracle = exhaustive_property_oracle(z, p, lm);
      if (engine != oracle)
        return {false, expr + ": " + property_name(p) + " engine=" +
                           (engine ? "true" : "false") + " oracle=" +
                           (oracle ? "true" : "false")};
    }
  }
  if (rings != 26)
    return {false, "expected 26 rings at or below the oracle cap, saw " +
                       std::to_string(rings)};
  return {true, std::to_string(comparisons) +
                    " engine/oracle comparisons over 26 rings, 0 disagreements"};
}

// --- criterion 6: prime = semiprime + nilary ---------------------------------

Outcome criterion6() {
  EngineLimits lm;
  std::size_t at_zero = 0, over_ideals = 0;
  for (const auto& expr : default_grid().exprs) {
    auto r = build_ring(expr);
    if (r->size() <= lm.property_cap) {
      Ideal z = zero_ideal(r);
      bool pr = check_ideal_property(z, IdealProperty::Prime, lm).holds;
      bool sp = check_ideal_property(z, IdealProperty::Semiprime, lm).holds;
      bool ni = check_ideal_property(z, IdealProperty::Nilary, lm).holds;
      bool pn = check_ideal_property(z, IdealProperty::PNilary, lm).holds;
      if (pr != (sp && ni) || pr != (sp && pn))
        return {false, expr + " violates the law at the zero ideal"};
      ++at_zero;
    }
    if (r->size() <= lm.oracle_cap) {
      for (const Ideal& i : enumerate_all_ideals(r, lm)) {
        bool pr = check_ideal_property(i, IdealProperty::Prime, lm).holds;
        bool sp = check_ideal_property(i, IdealProperty::Semiprime, lm).holds;
        bool ni = check_ideal_property(i, IdealProperty::Nilary, lm).holds;
        if (pr != (sp && ni))
          return {false, expr + " violates the law at an ideal of size " +
                             std::to_string(i.size())};
        ++over_ideals;
      }
    }
  }
  return {true, "law holds at 0 on " + std::to_string(at_zero) +
                    " rings and at " + std::to_string(over_ideals) +
                    " ideals of the small rings"};
}

// --- criterion 7: structural maps, four readings of the kernel --------------

Outcome criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  EngineLimits lm;
  std::size_t pairs = 0;
  for (const auto& expr : default_grid().exprs) {
    if (!is_group_ring(expr)) continue;
    auto r = build_ring(expr, lm);
    auto ctx = group_ring_context(r);
    if (!ctx) return {false, expr + " lost its group-ring structure"};
    ElemId one = r->one();
    for (const Subgroup& h : all_subgroups(*ctx->group, lm)) {
      if (!h.normal) continue;
      ++pairs;
      RingHom pi = relative_augmentation(*ctx, h);
      if (!pi.surjective) return {false, expr + ": quotient map not onto"};
      Ideal kernel = hom_kernel(pi, lm);
      Ideal named = relative_augmentation_ideal(*ctx, h, lm);
      if (!(kernel == named))
        return {false, expr + ": kernel differs from the named ideal"};

      std::vector<ElemId> one_minus;
      for (ElemId hh : h.members)
        one_minus.push_back(r->sub(one, ctx->group_elem(hh)));
      if (!(kernel == ideal_closure(r, one_minus, lm)))
        return {false, expr + ": kernel differs from <1-h>"};

      AdditiveSpan right = relative_augmentation_span(*ctx, h);
      if (right.members != kernel.bits())
        return {false, expr + ": kernel differs from the right span"};

      std::vector<ElemId> left_gens;
      for (ElemId g = 0; g < ctx->group->order(); ++g)
        for (ElemId hh : h.members)
          for (ElemId a = 1; a < ctx->coeff->size(); ++a)
            left_gens.push_back(r->mul(
                ctx->basis_elem(a, g), r->sub(one, ctx->group_elem(hh))));
      if (additive_span(r, left_gens).members != kernel.bits())
        return {false, expr + ": kernel differs from the left span"};

      std::size_t quotient_order = ctx->group->order() / h.order();
      std::size_t expected = 1;
      for (std::size_t k = 0; k < quotient_order; ++k)
        expected *= ctx->coeff->size();
      if (pi.target->size() != expected ||
          r->size() / kernel.size() != pi.target->size())
        return {false, expr + ": size arithmetic fails"};
    }
  }
  return {true, std::to_string(pairs) +
                    " (ring, normal subgroup) pairs, four kernel readings and "
                    "sizes agree, " +
                    fmt_seconds(seconds_since(t0))};
}

// --- criterion 8: the non-example is diagnosed, not just detected -----------

Outcome criterion8() {
  auto r = build_ring("Z2[S3]");
  if (exhaustive_property_oracle(zero_ideal(r), IdealProperty::Nilary))
    return {false, "oracle thinks Z2[S3] is nilary"};
  auto rep = run_check("normal-orders-nilpotent", "Z2[S3]", EngineLimits{});
  if (rep.conclusion != false)
    return {false, "check did not find a bad normal subgroup order"};
  if (rep.note.find("order 3") == std::string::npos)
    return {false, "note does not attribute the failure to the order-3 "
                   "subgroup: " +
                       rep.note};
  return {true,
          "oracle refutes nilary(Z2[S3]); attributed to a normal subgroup of "
          "order 3 not nilpotent over Z2"};
}

// --- criterion 9: the conjecture search really runs --------------------------

Outcome criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  auto grid = load_grid_file(std::string(GRING_GRID_DIR) + "/conjecture.grid");
  SearchReport rep = search_counterexample("conjecture1", grid);
  double dt = seconds_since(t0);
  if (dt >= 1800.0) return {false, "took " + fmt_seconds(dt)};
  const SearchRow* s3 = nullptr;
  for (const auto& row : rep.rows)
    if (row.instance == "Z3[S3]") s3 = &row;
  if (!s3) return {false, "Z3[S3] missing from the search rows"};
  if (s3->status != "confirmed" && s3->status != "counterexample")
    return {false, "Z3[S3] row is indefinite: " + s3->status};
  if (rep.verdict != "confirmed" && rep.verdict != "counterexample")
    return {false, "overall verdict is indefinite: " + rep.verdict};
  return {true, "verdict " + rep.verdict + ", Z3[S3] " + s3->status + ", " +
                    fmt_seconds(dt)};
}

// --- criterion 10: parser round-trip and diagnostics -------------------------

Outcome criterion10() {
  std::ifstream in(std::string(GRING_TEST_DATA_DIR) + "/expr_corpus.txt");
  if (!in.is_open()) return {false, "corpus file missing"};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  if (lines.size() != 50)
    return {false, "corpus has " + std::to_string(lines.size()) + " lines"};
  for (const auto& line : lines) {
    std::string printed;
    try {
      printed = print_ring_expr(*parse_ring_expr(line));
    } catch (const ParseError& e) {
      return {false, line + " failed to parse: " + e.what()};
    }
    if (printed != line) return {false, line + " round-tripped as " + printed};
  }

  const std::vector<std::pair<std::string, std::string>> bad = {
      {"Z1", "at offset 0"}, {"C2", "at offset 0"}, {"Z4[", "at offset 3"}};
  for (const auto& [input, needle] : bad) {
    std::ostringstream out, err;
    int rc = cli_run({"check", input, "--property", "nilary"}, out, err);
    if (rc != 2)
      return {false, input + " exited " + std::to_string(rc) + ", expected 2"};
    if (err.str().find(needle) == std::string::npos)
      return {false, input + " diagnostic lacks \"" + needle + "\""};
  }
  return {true, "50/50 expressions round-trip; malformed inputs exit 2 with "
                "byte offsets"};
}

}  // namespace

int main() {
  using Criterion = Outcome (*)();
  const std::vector<Criterion> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10,
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": "
              << (o.pass ? "PASS" : "FAIL") << " — " << o.detail << "\n"
              << std::flush;
  }
  return all ? 0 : 1;
}
