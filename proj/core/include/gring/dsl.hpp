#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gring/ring.hpp"

namespace gring {

// Ring/group descriptor grammar:
//   ring  := term ( "x" term )*          (left-associative product)
//   term  := zmod ( "[" group "]" )*     (brackets bind tighter than "x")
//   zmod  := "Z" INT                     (INT >= 2)
//   group := atom ( "x" atom )*
//   atom  := "C" INT | "D" INT | "Q8" | "S" INT
// Whitespace is insignificant. Canonical form: single spaces around "x", no
// other spaces; printing a parsed expression reproduces its input's
// canonical form and re-parses to the same tree.

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
  enum class Kind { Cyclic, Dihedral, Quaternion8, Symmetric, Product };
  Kind kind{};
  unsigned n = 0;  // index for Cyclic/Dihedral/Symmetric
  GroupExprPtr left, right;
};

struct RingExpr;
using RingExprPtr = std::shared_ptr<const RingExpr>;

struct RingExpr {
  enum class Kind { Zmod, GroupRing, Product };
  Kind kind{};
  std::uint64_t modulus = 0;  // Zmod
  RingExprPtr left, right;    // GroupRing: left is the coefficient ring
  GroupExprPtr group;         // GroupRing
};

// Throws ParseError with a byte offset on malformed input.
RingExprPtr parse_ring_expr(std::string_view text);

std::string print_ring_expr(const RingExpr& e);
std::string print_group_expr(const GroupExpr& e);

GroupPtr build_group(const GroupExpr& e, const EngineLimits& limits = {});
RingPtr build_ring(const RingExpr& e, const EngineLimits& limits = {});
RingPtr build_ring(std::string_view text, const EngineLimits& limits = {});

// Instance list plus cap overrides for grid runs. JSON shape:
//   {"exprs": ["Z2[C2]", ...],
//    "checks": ["..."]?,                       // empty/absent = all
//    "caps": {"max_ring_size": N, "max_group_order": N, "max_oracle_size": N,
//             "property_cap": N, "timeout_per_instance_s": S}? }
struct GridSpec {
  std::vector<std::string> exprs;   // canonicalized on load
  std::vector<std::string> checks;  // check ids; empty = all registered
  EngineLimits limits;
  double timeout_per_instance_s = 0;  // 0 = unlimited
};

GridSpec parse_grid(const std::string& json_text);
GridSpec load_grid_file(const std::string& path);

}  // namespace gring
