#include "gring/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gring {
namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  // INT with no sign and no leading zeros beyond a bare "0".
  std::uint64_t read_int(std::size_t token_start) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) throw ParseError("expected an integer", pos);
    if (pos - start > 1 && text[start] == '0') {
      throw ParseError("integer has a leading zero", start);
    }
    if (pos - start > 9) throw ParseError("integer is too large", token_start);
    std::uint64_t value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
    }
    return value;
  }

  GroupExprPtr parse_group_atom() {
    skip_ws();
    const std::size_t start = pos;
    if (pos == text.size()) throw ParseError("expected a group expression", pos);
    const char c = text[pos];
    auto node = std::make_shared<GroupExpr>();
    switch (c) {
      case 'C': {
        ++pos;
        node->kind = GroupExpr::Kind::Cyclic;
        node->n = static_cast<unsigned>(read_int(start));
        if (node->n < 1) throw ParseError("cyclic index must be >= 1", start);
        break;
      }
      case 'D': {
        ++pos;
        node->kind = GroupExpr::Kind::Dihedral;
        node->n = static_cast<unsigned>(read_int(start));
        if (node->n < 2) throw ParseError("dihedral index must be >= 2", start);
        break;
      }
      case 'Q': {
        ++pos;
        if (pos == text.size() || text[pos] != '8') {
          throw ParseError("expected 'Q8'", start);
        }
        ++pos;
        node->kind = GroupExpr::Kind::Quaternion8;
        break;
      }
      case 'S': {
        ++pos;
        node->kind = GroupExpr::Kind::Symmetric;
        node->n = static_cast<unsigned>(read_int(start));
        if (node->n < 1 || node->n > 4) {
          throw ParseError("symmetric group index must be 1..4", start);
        }
        break;
      }
      default:
        throw ParseError("expected a group expression", pos);
    }
    return node;
  }

  GroupExprPtr parse_group() {
    GroupExprPtr lhs = parse_group_atom();
    while (peek() == 'x') {
      ++pos;
      auto node = std::make_shared<GroupExpr>();
      node->kind = GroupExpr::Kind::Product;
      node->left = std::move(lhs);
      node->right = parse_group_atom();
      lhs = std::move(node);
    }
    return lhs;
  }

  RingExprPtr parse_term() {
    skip_ws();
    const std::size_t start = pos;
    if (pos == text.size() || text[pos] != 'Z') {
      throw ParseError("expected a ring expression starting with 'Z'", pos);
    }
    ++pos;
    auto node = std::make_shared<RingExpr>();
    node->kind = RingExpr::Kind::Zmod;
    node->modulus = read_int(start);
    if (node->modulus < 2) throw ParseError("modulus must be >= 2", start);
    RingExprPtr out = std::move(node);
    while (peek() == '[') {
      ++pos;
      auto gr = std::make_shared<RingExpr>();
      gr->kind = RingExpr::Kind::GroupRing;
      gr->left = std::move(out);
      gr->group = parse_group();
      skip_ws();
      if (pos == text.size() || text[pos] != ']') {
        throw ParseError("expected ']'", pos);
      }
      ++pos;
      out = std::move(gr);
    }
    return out;
  }

  RingExprPtr parse_ring() {
    RingExprPtr lhs = parse_term();
    while (peek() == 'x') {
      ++pos;
      auto node = std::make_shared<RingExpr>();
      node->kind = RingExpr::Kind::Product;
      node->left = std::move(lhs);
      node->right = parse_term();
      lhs = std::move(node);
    }
    return lhs;
  }
};

}  // namespace

RingExprPtr parse_ring_expr(std::string_view text) {
  Parser p{text};
  RingExprPtr out = p.parse_ring();
  if (!p.at_end()) throw ParseError("unexpected trailing input", p.pos);
  return out;
}

std::string print_group_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return "C" + std::to_string(e.n);
    case GroupExpr::Kind::Dihedral: return "D" + std::to_string(e.n);
    case GroupExpr::Kind::Quaternion8: return "Q8";
    case GroupExpr::Kind::Symmetric: return "S" + std::to_string(e.n);
    case GroupExpr::Kind::Product:
      return print_group_expr(*e.left) + " x " + print_group_expr(*e.right);
  }
  return "?";
}

std::string print_ring_expr(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::Zmod: return "Z" + std::to_string(e.modulus);
    case RingExpr::Kind::GroupRing:
      return print_ring_expr(*e.left) + "[" + print_group_expr(*e.group) + "]";
    case RingExpr::Kind::Product:
      return print_ring_expr(*e.left) + " x " + print_ring_expr(*e.right);
  }
  return "?";
}

GroupPtr build_group(const GroupExpr& e, const EngineLimits& limits) {
  GroupTable table = [&] {
    switch (e.kind) {
      case GroupExpr::Kind::Cyclic: return GroupTable::cyclic(e.n);
      case GroupExpr::Kind::Dihedral: return GroupTable::dihedral(e.n);
      case GroupExpr::Kind::Quaternion8: return GroupTable::quaternion8();
      case GroupExpr::Kind::Symmetric: return GroupTable::symmetric(e.n);
      case GroupExpr::Kind::Product: {
        GroupPtr l = build_group(*e.left, limits);
        GroupPtr r = build_group(*e.right, limits);
        return GroupTable::product(*l, *r);
      }
    }
    throw std::logic_error("unreachable group kind");
  }();
  if (table.order() > limits.group_order_cap) {
    throw CapExceeded("group order", table.order(), limits.group_order_cap);
  }
  return std::make_shared<const GroupTable>(std::move(table));
}

RingPtr build_ring(const RingExpr& e, const EngineLimits& limits) {
  switch (e.kind) {
    case RingExpr::Kind::Zmod: return make_zmod(e.modulus, limits);
    case RingExpr::Kind::GroupRing:
      return make_group_ring(build_ring(*e.left, limits),
                             build_group(*e.group, limits), limits);
    case RingExpr::Kind::Product:
      return make_product_ring(build_ring(*e.left, limits),
                               build_ring(*e.right, limits), limits);
  }
  throw std::logic_error("unreachable ring kind");
}

RingPtr build_ring(std::string_view text, const EngineLimits& limits) {
  return build_ring(*parse_ring_expr(text), limits);
}

GridSpec parse_grid(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("grid is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("exprs") || !j["exprs"].is_array()) {
    throw std::invalid_argument("grid needs an \"exprs\" array");
  }
  GridSpec spec;
  for (const auto& item : j["exprs"]) {
    if (!item.is_string()) {
      throw std::invalid_argument("grid exprs must be strings");
    }
    // Canonicalize (and surface parse errors at load time).
    spec.exprs.push_back(
        print_ring_expr(*parse_ring_expr(item.get<std::string>())));
  }
  if (j.contains("checks")) {
    for (const auto& item : j["checks"]) {
      if (!item.is_string()) {
        throw std::invalid_argument("grid checks must be strings");
      }
      spec.checks.push_back(item.get<std::string>());
    }
  }
  if (j.contains("caps")) {
    const auto& caps = j["caps"];
    if (!caps.is_object()) throw std::invalid_argument("grid caps must be an object");
    for (const auto& [key, value] : caps.items()) {
      if (key == "timeout_per_instance_s") {
        spec.timeout_per_instance_s = value.get<double>();
      } else if (key == "max_ring_size") {
        spec.limits.ring_size_cap = value.get<std::size_t>();
      } else if (key == "max_group_order") {
        spec.limits.group_order_cap = value.get<std::size_t>();
      } else if (key == "max_oracle_size") {
        spec.limits.oracle_cap = value.get<std::size_t>();
      } else if (key == "property_cap") {
        spec.limits.property_cap = value.get<std::size_t>();
      } else if (key == "ideal_enum_cap") {
        spec.limits.ideal_enum_cap = value.get<std::size_t>();
      } else {
        throw std::invalid_argument("unknown grid cap \"" + key + "\"");
      }
    }
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "exprs" && key != "checks" && key != "caps") {
      throw std::invalid_argument("unknown grid field \"" + key + "\"");
    }
  }
  return spec;
}

GridSpec load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open grid file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grid(buf.str());
}

}  // namespace gring
