#include <doctest.h>

#include <gring/dsl.hpp>

#include <fstream>
#include <string>
#include <vector>

using namespace gring;

namespace {

std::size_t offset_of(const char* text) {
  try {
    parse_ring_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("expression corpus round-trips") {
  std::ifstream in(std::string(GRING_TEST_DATA_DIR) + "/expr_corpus.txt");
  REQUIRE(in.is_open());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  CHECK(lines.size() == 50);

  for (const std::string& line : lines) {
    CAPTURE(line);
    auto tree = parse_ring_expr(line);
    std::string printed = print_ring_expr(*tree);
    CHECK(printed == line);  // corpus entries are canonical
    auto again = parse_ring_expr(printed);
    CHECK(print_ring_expr(*again) == printed);  // printing is a fixpoint
  }
}

TEST_CASE("whitespace is insignificant") {
  auto tree = parse_ring_expr("  Z2 [ C2x C2 ]  ");
  CHECK(print_ring_expr(*tree) == "Z2[C2 x C2]");
  CHECK(print_ring_expr(*parse_ring_expr("Z2xZ3")) == "Z2 x Z3");
}

TEST_CASE("products associate to the left") {
  auto tree = parse_ring_expr("Z2 x Z3 x Z5");
  REQUIRE(tree->kind == RingExpr::Kind::Product);
  CHECK(tree->right->kind == RingExpr::Kind::Zmod);
  CHECK(tree->right->modulus == 5);
  CHECK(tree->left->kind == RingExpr::Kind::Product);
}

TEST_CASE("iterated group rings nest outward") {
  auto tree = parse_ring_expr("Z2[C2][C3]");
  REQUIRE(tree->kind == RingExpr::Kind::GroupRing);
  CHECK(tree->group->kind == GroupExpr::Kind::Cyclic);
  CHECK(tree->group->n == 3);
  REQUIRE(tree->left->kind == RingExpr::Kind::GroupRing);
  CHECK(tree->left->group->n == 2);
}

TEST_CASE("malformed input reports byte offsets") {
  CHECK(offset_of("Z1") == 0);
  CHECK(offset_of("C2") == 0);
  CHECK(offset_of("Z4[") == 3);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("Z02") == 1);       // leading zero, offset points at it
  CHECK(offset_of("Z2[C0]") == 3);    // cyclic index must be >= 1
  CHECK(offset_of("Z2[D1]") == 3);    // dihedral index must be >= 2
  CHECK(offset_of("Z2[S5]") == 3);    // symmetric index capped at 4
  CHECK(offset_of("Z2[Q4]") == 3);    // only Q8 exists
  CHECK_THROWS_AS(parse_ring_expr("Z2]"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Z2[C2]junk"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Z2 x"), ParseError);
  CHECK_THROWS_AS(parse_ring_expr("Z999999999999"), ParseError);

  // the exception message carries the offset for CLI diagnostics
  try {
    parse_ring_expr("Z4[");
    REQUIRE(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at offset 3") != std::string::npos);
  }
}

TEST_CASE("builders respect caps") {
  auto tree = parse_ring_expr("Z2[S4]");  // |S4| = 24, fits
  CHECK(build_group(*tree->group)->order() == 24);

  EngineLimits tiny;
  tiny.group_order_cap = 8;
  CHECK_THROWS_AS(build_group(*tree->group, tiny), CapExceeded);

  EngineLimits small_ring;
  small_ring.ring_size_cap = 100;
  CHECK_THROWS_AS(build_ring("Z3[C6]", small_ring), CapExceeded);
}

TEST_CASE("grid parsing") {
  GridSpec g = parse_grid(R"({
    "exprs": ["Z2[C2]", "Z6"],
    "checks": ["aug-ideal-nilpotency"],
    "caps": {"timeout_per_instance_s": 60, "property_cap": 1024}
  })");
  CHECK(g.exprs == std::vector<std::string>{"Z2[C2]", "Z6"});
  CHECK(g.checks == std::vector<std::string>{"aug-ideal-nilpotency"});
  CHECK(g.timeout_per_instance_s == 60);
  CHECK(g.limits.property_cap == 1024);

  CHECK_THROWS_AS(parse_grid("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid(R"({"checks": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid(R"({"exprs": ["Z2"], "caps": {"bogus": 1}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_grid(R"({"exprs": ["Z2"], "bogus": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_grid_file("/nonexistent/grid.json"),
                  std::invalid_argument);
}
