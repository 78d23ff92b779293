#include "infralog/types.hpp"

#include <algorithm>

#include "infralog/errors.hpp"

namespace infralog {

Type Type::bracket(std::vector<Type> parents) {
  if (parents.empty()) throw TypeError("a bracket type needs at least one component");
  Type t;
  t.parents_ = std::move(parents);
  return t;
}

int Type::order() const {
  if (is_first_order()) return 1;
  int m = 0;
  for (const Type& p : parents_) m = std::max(m, p.order());
  return m + 1;
}

bool Type::is_second_order() const {
  if (is_first_order()) return false;
  return std::all_of(parents_.begin(), parents_.end(),
                     [](const Type& p) { return p.is_first_order(); });
}

std::string Type::to_string() const {
  if (is_first_order()) return "0";
  std::string out = "[";
  for (std::size_t i = 0; i < parents_.size(); ++i) {
    if (i > 0) out += ",";
    out += parents_[i].to_string();
  }
  out += "]";
  return out;
}

namespace {

Type parse_type_at(const std::string& s, std::size_t& i) {
  if (i >= s.size()) throw SyntaxError("expected a type", i);
  if (s[i] == '0') {
    ++i;
    return Type::first_order();
  }
  if (s[i] == '[') {
    ++i;
    std::vector<Type> parents;
    parents.push_back(parse_type_at(s, i));
    while (i < s.size() && s[i] == ',') {
      ++i;
      parents.push_back(parse_type_at(s, i));
    }
    if (i >= s.size() || s[i] != ']') throw SyntaxError("expected ']' in type", i);
    ++i;
    return Type::bracket(std::move(parents));
  }
  throw SyntaxError(std::string("unexpected character '") + s[i] + "' in type", i);
}

}  // namespace

Type Type::parse(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  Type t = parse_type_at(text, i);
  while (i < text.size() && text[i] == ' ') ++i;
  if (i != text.size()) throw SyntaxError("trailing characters after type", i);
  return t;
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.parents_.size() != b.parents_.size())
    return a.parents_.size() <=> b.parents_.size();
  for (std::size_t i = 0; i < a.parents_.size(); ++i) {
    auto c = a.parents_[i] <=> b.parents_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::set<Type> parents(const Type& t) {
  if (t.is_first_order()) return {t};  // formally p0 == 0
  return std::set<Type>(t.parent_types().begin(), t.parent_types().end());
}

Semitype Semitype::of_type(const Type& t) {
  if (t.is_first_order()) return first_order();
  Semitype s;
  s.kind_ = Kind::OfType;
  s.type_ = t;
  return s;
}

Semitype Semitype::product(std::vector<Semitype> factors) {
  if (factors.size() < 2) throw TypeError("a product semitype needs at least two factors");
  Semitype s;
  s.kind_ = Kind::Product;
  s.factors_ = std::move(factors);
  return s;
}

std::string Semitype::to_string() const {
  switch (kind_) {
    case Kind::FirstOrder:
      return "0";
    case Kind::OfType:
      return type_.to_string();
    case Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += ",";
        out += factors_[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

bool operator==(const Semitype& a, const Semitype& b) {
  return a.kind_ == b.kind_ && a.type_ == b.type_ && a.factors_ == b.factors_;
}

std::strong_ordering operator<=>(const Semitype& a, const Semitype& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (auto c = a.type_ <=> b.type_; c != std::strong_ordering::equal) return c;
  if (a.factors_.size() != b.factors_.size())
    return a.factors_.size() <=> b.factors_.size();
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    auto c = a.factors_[i] <=> b.factors_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Semitype semitype_of(const Type& t) {
  if (t.is_first_order()) return Semitype::first_order();
  const auto& ps = t.parent_types();
  if (ps.size() == 1) return Semitype::of_type(ps[0]);
  std::vector<Semitype> factors;
  factors.reserve(ps.size());
  for (const Type& p : ps) factors.push_back(Semitype::of_type(p));
  return Semitype::product(std::move(factors));
}

TypeDomain::TypeDomain(const std::vector<Type>& types) {
  for (const Type& t : types) add(t);
}

void TypeDomain::add(const Type& t) {
  if (types_.insert(t).second && t.is_bracket()) {
    for (const Type& p : t.parent_types()) add(p);
  }
}

std::vector<Type> TypeDomain::belonging_subdomain() const {
  std::vector<Type> out;
  for (const Type& t : types_)
    if (t.is_bracket()) out.push_back(t);
  return out;
}

}  // namespace infralog
