#include "infralog/signature.hpp"

#include <array>

#include "infralog/errors.hpp"

namespace infralog {

SignatureSpec::SignatureSpec(TypeDomain types,
                             std::map<Type, std::vector<std::string>> constants,
                             std::map<Type, std::vector<std::string>> variables)
    : types_(std::move(types)), constants_(std::move(constants)), variables_(std::move(variables)) {
  if (types_.empty()) throw ValidationError("signature needs a nonempty type domain");
  for (const Type& t : types_.types()) {
    if (t.order() > 2)
      throw ValidationError("type " + t.to_string() + " has order above 2; not usable in signatures");
  }
  std::map<std::string, Type> seen;
  for (const auto& [t, names] : constants_) {
    if (!types_.contains(t))
      throw ValidationError("constant type " + t.to_string() + " not in the type domain");
    for (const std::string& n : names) {
      if (!seen.emplace(n, t).second)
        throw ValidationError("duplicate constant name '" + n + "'");
    }
  }
  std::map<std::string, Type> var_seen;
  for (const auto& [t, names] : variables_) {
    if (!types_.contains(t))
      throw ValidationError("variable type " + t.to_string() + " not in the type domain");
    for (const std::string& n : names) {
      if (seen.count(n)) throw ValidationError("name '" + n + "' used for both constant and variable");
      if (!var_seen.emplace(n, t).second)
        throw ValidationError("duplicate variable name '" + n + "'");
    }
  }
  // Each type must be inhabited by a constant or a variable symbol.
  for (const Type& t : types_.types()) {
    bool has_const = constants_.count(t) && !constants_.at(t).empty();
    bool has_var = variables_.count(t) && !variables_.at(t).empty();
    if (!has_const && !has_var)
      throw ValidationError("type " + t.to_string() + " has neither constants nor variables");
  }
}

std::optional<Type> SignatureSpec::constant_type(const std::string& name) const {
  for (const auto& [t, names] : constants_)
    for (const std::string& n : names)
      if (n == name) return t;
  return std::nullopt;
}

std::optional<Type> SignatureSpec::variable_type(const std::string& name) const {
  for (const auto& [t, names] : variables_)
    for (const std::string& n : names)
      if (n == name) return t;
  return std::nullopt;
}

const std::vector<std::string>& SignatureSpec::constants_of(const Type& t) const {
  static const std::vector<std::string> kEmpty;
  auto it = constants_.find(t);
  return it == constants_.end() ? kEmpty : it->second;
}

std::string SignatureSpec::scheme_variable(const Type& t, std::size_t index) const {
  static const std::vector<std::string> kFallback = {"x", "y", "z"};
  auto it = variables_.find(t);
  const std::vector<std::string>& pool =
      (it != variables_.end() && !it->second.empty()) ? it->second : kFallback;
  if (index < pool.size()) return pool[index];
  std::size_t k = index - pool.size();
  return pool[k % pool.size()] + std::to_string(k / pool.size() + 1);
}

SignaturePtr make_signature(std::vector<Type> types,
                            std::map<Type, std::vector<std::string>> constants,
                            std::map<Type, std::vector<std::string>> variables) {
  static const std::array<std::vector<std::string>, 4> kPools = {{
      {"x", "y", "z"},
      {"u", "v", "w"},
      {"r", "s", "t"},
      {"l", "m", "n"},
  }};
  TypeDomain domain(types);
  std::size_t next_pool = 1;
  for (const Type& t : domain.types()) {
    if (variables.count(t)) continue;
    if (t.is_first_order()) {
      variables[t] = kPools[0];
    } else {
      variables[t] = kPools[std::min(next_pool, kPools.size() - 1)];
      ++next_pool;
    }
  }
  return std::make_shared<const SignatureSpec>(std::move(domain), std::move(constants),
                                               std::move(variables));
}

}  // namespace infralog
