#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "infralog/types.hpp"

namespace infralog {

// A signature with generalized equalities and belongings: a type domain,
// per-type constant names, one equality symbol per type, one belonging
// symbol per bracket type (both implicit), and per-type variable pools.
// Every type is restricted to order <= 2 for logic use.
class SignatureSpec {
 public:
  SignatureSpec(TypeDomain types,
                std::map<Type, std::vector<std::string>> constants,
                std::map<Type, std::vector<std::string>> variables);

  const TypeDomain& types() const { return types_; }
  const std::map<Type, std::vector<std::string>>& constants() const { return constants_; }
  const std::map<Type, std::vector<std::string>>& variables() const { return variables_; }

  std::optional<Type> constant_type(const std::string& name) const;
  std::optional<Type> variable_type(const std::string& name) const;
  bool has_constant(const std::string& name) const { return constant_type(name).has_value(); }

  const std::vector<std::string>& constants_of(const Type& t) const;

  // Deterministic name scheme: pool names first, then numbered extensions
  // of the pool's base names.
  std::string scheme_variable(const Type& t, std::size_t index) const;

  friend bool operator==(const SignatureSpec& a, const SignatureSpec& b) {
    return a.types_ == b.types_ && a.constants_ == b.constants_ && a.variables_ == b.variables_;
  }

 private:
  TypeDomain types_;
  std::map<Type, std::vector<std::string>> constants_;
  std::map<Type, std::vector<std::string>> variables_;
};

using SignaturePtr = std::shared_ptr<const SignatureSpec>;

// Convenience builder for the common domains: variable pools default to
// x,y,z for the first-order type and u,v,w / r,s,t / l,m,n for bracket
// types in domain order.
SignaturePtr make_signature(std::vector<Type> types,
                            std::map<Type, std::vector<std::string>> constants = {},
                            std::map<Type, std::vector<std::string>> variables = {});

}  // namespace infralog
