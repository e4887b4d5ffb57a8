#include "itsub/syntax.hpp"

#include <charconv>
#include <limits>

#include <json.hpp>

namespace itsub {

namespace {

using ordered_json = nlohmann::ordered_json;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ty parse_all() {
    Ty t = parse_type();
    skip_ws();
    if (pos_ != text_.size()) error({"\"->\"", "\"&\"", "end of input"});
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool eat_arrow() { return eat("->") || eat("→"); }
  bool eat_inter() { return eat("&") || eat("∩"); }

  [[noreturn]] void error(std::vector<std::string> expected) {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size()) ++end;
    std::string message = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) message += i + 1 == expected.size() ? " or " : ", ";
      message += expected[i];
    }
    throw ParseError({pos_, end}, std::move(expected), message);
  }

  Ty parse_type() {
    Ty left = parse_inter();
    if (eat_arrow()) return Ty::arrow(std::move(left), parse_type());
    return left;
  }

  Ty parse_inter() {
    Ty t = parse_prim();
    while (eat_inter()) t = Ty::inter(std::move(t), parse_prim());
    return t;
  }

  Ty parse_prim() {
    skip_ws();
    if (eat("(")) {
      Ty t = parse_type();
      if (!eat(")")) error({"\")\"", "\"->\"", "\"&\""});
      return t;
    }
    if (eat("U")) return Ty::top();
    if (pos_ < text_.size() && text_[pos_] == 'c') {
      const std::size_t start = pos_ + 1;
      std::size_t end = start;
      while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') ++end;
      if (end == start) {
        pos_ = start;
        error({"digits"});
      }
      std::uint64_t index = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, index);
      if (ec != std::errc{}) {
        pos_ = start;
        error({"a constant index that fits in 64 bits"});
      }
      pos_ = end;
      return Ty::constant(index);
    }
    error({"\"U\"", "\"c\" digits", "\"(\""});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const Ty& a, std::string& out);

void print_child(const Ty& a, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(a, out);
  if (parens) out += ')';
}

void print_into(const Ty& a, std::string& out) {
  switch (a.kind()) {
    case TyKind::Top:
      out += 'U';
      return;
    case TyKind::Const:
      out += 'c';
      out += std::to_string(a.index());
      return;
    case TyKind::Arrow:
      print_child(a.left(), a.left().is_arrow(), out);
      out += " -> ";
      print_child(a.right(), false, out);
      return;
    case TyKind::Inter:
      print_child(a.left(), a.left().is_arrow(), out);
      out += " & ";
      print_child(a.right(), !a.right().is_atom(), out);
      return;
  }
}

Ty type_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument(std::string("certificate node is missing string field \"") + key + "\"");
  try {
    return parse(j[key].get<std::string>());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("field \"") + key + "\": " + e.what());
  }
}

const ordered_json& premises_field(const ordered_json& j) {
  if (!j.contains("premises") || !j["premises"].is_array())
    throw std::invalid_argument("certificate node is missing array field \"premises\"");
  return j["premises"];
}

std::string rule_field(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate node is not an object");
  if (!j.contains("rule") || !j["rule"].is_string())
    throw std::invalid_argument("certificate node is missing string field \"rule\"");
  return j["rule"].get<std::string>();
}

ordered_json to_json(const Derivation& d) {
  ordered_json j;
  j["rule"] = rule_name(d.rule());
  j["lhs"] = print(d.lhs());
  j["rhs"] = print(d.rhs());
  if (d.witness()) j["witness"] = print(*d.witness());
  ordered_json premises = ordered_json::array();
  for (std::size_t i = 0; i < d.premise_count(); ++i) premises.push_back(to_json(d.premise(i)));
  j["premises"] = std::move(premises);
  return j;
}

ordered_json to_json(const BcdDerivation& d) {
  ordered_json j;
  j["rule"] = bcd_rule_name(d.rule());
  j["lhs"] = print(d.lhs());
  j["rhs"] = print(d.rhs());
  if (d.mid()) j["mid"] = print(*d.mid());
  ordered_json premises = ordered_json::array();
  for (std::size_t i = 0; i < d.premise_count(); ++i) premises.push_back(to_json(d.premise(i)));
  j["premises"] = std::move(premises);
  return j;
}

Derivation derivation_from(const ordered_json& j) {
  const std::string name = rule_field(j);
  auto rule = rule_from_name(name);
  if (!rule) throw std::invalid_argument("unknown rule \"" + name + "\"");
  std::optional<Ty> witness;
  if (j.contains("witness")) witness = type_field(j, "witness");
  std::vector<Derivation> premises;
  for (const auto& p : premises_field(j)) premises.push_back(derivation_from(p));
  if (premises.size() > 2) throw std::invalid_argument("too many premises");
  return Derivation::make(*rule, type_field(j, "lhs"), type_field(j, "rhs"), std::move(witness),
                          std::move(premises));
}

BcdDerivation bcd_derivation_from(const ordered_json& j) {
  const std::string name = rule_field(j);
  auto rule = bcd_rule_from_name(name);
  if (!rule) throw std::invalid_argument("unknown rule \"" + name + "\"");
  std::optional<Ty> mid;
  if (j.contains("mid")) mid = type_field(j, "mid");
  std::vector<BcdDerivation> premises;
  for (const auto& p : premises_field(j)) premises.push_back(bcd_derivation_from(p));
  if (premises.size() > 2) throw std::invalid_argument("too many premises");
  return BcdDerivation::make(*rule, type_field(j, "lhs"), type_field(j, "rhs"), std::move(mid),
                             std::move(premises));
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename D, typename NameFn>
void tree_into(const D& d, NameFn name, std::size_t indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += print(d.lhs());
  out += " <: ";
  out += print(d.rhs());
  out += "  [";
  out += name(d.rule());
  out += ']';
  out += '\n';
  for (std::size_t i = 0; i < d.premise_count(); ++i) tree_into(d.premise(i), name, indent + 1, out);
}

}  // namespace

Ty parse(std::string_view text) { return Parser{text}.parse_all(); }

std::string print(const Ty& a) {
  std::string out;
  print_into(a, out);
  return out;
}

std::string derivation_to_json(const Derivation& d) {
  if (auto r = validate(d); !r)
    throw std::invalid_argument("refusing to serialize an invalid certificate: " + r.path + ": " + r.reason);
  return to_json(d).dump();
}

std::string derivation_to_json(const BcdDerivation& d) {
  if (auto r = bcd_validate(d); !r)
    throw std::invalid_argument("refusing to serialize an invalid certificate: " + r.path + ": " + r.reason);
  return to_json(d).dump();
}

Derivation derivation_from_json(std::string_view json) { return derivation_from(parse_json(json)); }

BcdDerivation bcd_derivation_from_json(std::string_view json) {
  return bcd_derivation_from(parse_json(json));
}

std::string derivation_to_tree(const Derivation& d) {
  std::string out;
  tree_into(d, rule_name, 0, out);
  return out;
}

std::string derivation_to_tree(const BcdDerivation& d) {
  std::string out;
  tree_into(d, bcd_rule_name, 0, out);
  return out;
}

}  // namespace itsub
