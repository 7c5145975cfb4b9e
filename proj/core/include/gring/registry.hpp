#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gring/dsl.hpp"
#include "gring/ideal.hpp"
#include "gring/maps.hpp"

namespace gring {

// One grid instance: a built ring plus memoized zero-ideal property verdicts
// so several checks against the same ring share engine runs (the principal
// cache already lives on the ring itself).
class Instance {
public:
  Instance(const std::string& expr, EngineLimits limits);

  const std::string& expr() const { return expr_; }
  const RingPtr& ring() const { return ring_; }
  // Present when the instance is a group ring A[G].
  const std::optional<GroupRingContext>& group_ctx() const { return ctx_; }
  const EngineLimits& limits() const { return limits_; }

  const Ideal& zero();
  const Ideal& aug_ideal();  // group rings only
  const PropertyReport& property(IdealProperty p);

private:
  std::string expr_;
  EngineLimits limits_;
  RingPtr ring_;
  std::optional<GroupRingContext> ctx_;
  std::optional<Ideal> zero_, aug_;
  std::map<int, PropertyReport> props_;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::string mode;  // "implication" | "equivalence" | "always"
};

// Stable registration order; at least 27 entries.
const std::vector<TheoremCheck>& list_registry();

struct CheckReport {
  std::string id;
  std::string instance;  // canonical expression
  std::string mode;
  std::string verdict;  // confirmed | vacuous | REFUTED | undecided-cap
  std::optional<bool> hypothesis;
  std::optional<bool> conclusion;
  nlohmann::json witness;  // null unless the verdict carries evidence
  std::string note;
  double runtime_ms = 0;
};

CheckReport run_check(const std::string& id, const std::string& expr,
                      const EngineLimits& limits, double timeout_s = 0);
CheckReport run_check(const std::string& id, Instance& inst);

struct GridRunResult {
  std::vector<CheckReport> reports;
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t refuted = 0;
  std::size_t undecided = 0;
  bool aborted = false;  // stopped at the first refutation
};

// Cross product of grid instances and checks (empty ids = all registered).
// Stops at the first REFUTED unless keep_going.
GridRunResult run_grid(const std::vector<std::string>& check_ids,
                       const GridSpec& grid, bool keep_going = false);

struct SearchRow {
  std::string instance;
  std::string status;  // hypothesis-fails | confirmed | counterexample | undecided-cap
  std::string note;
};

struct SearchReport {
  std::string target;
  // counterexample | confirmed (none in the grid) | vacuous | undecided-cap
  std::string verdict;
  std::vector<SearchRow> rows;
  nlohmann::json witness;  // the counterexample, when found
  std::string note;
};

// target: "question1" | "question2" | "conjecture1".
SearchReport search_counterexample(const std::string& target,
                                   const GridSpec& grid);

nlohmann::json check_report_json(const CheckReport& r, bool with_timings);
nlohmann::json search_report_json(const SearchReport& r);
nlohmann::json property_report_json(const RingPtr& ring, const PropertyReport& rep,
                                    bool with_timings, double runtime_ms);

}  // namespace gring
