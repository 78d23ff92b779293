#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace infralog {

// A type is either the first-order type `0` or a bracket type
// `[t0,...,tk]` whose components t0..tk (its parents) are types again.
// Bracket types denote sets of tuples over the parent terminals.
class Type {
 public:
  Type() = default;  // first-order
  static Type first_order() { return Type(); }
  static Type bracket(std::vector<Type> parents);

  bool is_first_order() const { return parents_.empty(); }
  bool is_bracket() const { return !parents_.empty(); }

  // Components t0..tk of a bracket type. Empty for the first-order type.
  const std::vector<Type>& parent_types() const { return parents_; }

  // 1 for the first-order type, 1 + max parent order for bracket types.
  int order() const;
  bool is_second_order() const;

  std::string to_string() const;
  static Type parse(const std::string& text);

  friend bool operator==(const Type& a, const Type& b) { return a.parents_ == b.parents_; }
  // First-order sorts before brackets, brackets by arity then lexicographic.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  std::vector<Type> parents_;
};

// The set of parents of a type. For the first-order type this is {0}
// by convention.
std::set<Type> parents(const Type& t);

// A semitype is the first-order semitype, a type, or a product of at
// least two semitypes. Semitypes describe the shapes of terminal
// elements: atoms, sets, and tuples.
class Semitype {
 public:
  enum class Kind { FirstOrder, OfType, Product };

  Semitype() : kind_(Kind::FirstOrder) {}
  static Semitype first_order() { return Semitype(); }
  static Semitype of_type(const Type& t);
  static Semitype product(std::vector<Semitype> factors);

  Kind kind() const { return kind_; }
  const Type& type() const { return type_; }                      // Kind::OfType
  const std::vector<Semitype>& factors() const { return factors_; }  // Kind::Product

  std::string to_string() const;

  friend bool operator==(const Semitype& a, const Semitype& b);
  friend std::strong_ordering operator<=>(const Semitype& a, const Semitype& b);

 private:
  Kind kind_;
  Type type_;
  std::vector<Semitype> factors_;
};

// The semitype of a type: `0` for the first-order type, t0 for [t0],
// and the product (t0,...,tk) for [t0,...,tk] with k >= 1.
Semitype semitype_of(const Type& t);

// A finite set of types closed under parents. The belonging subdomain
// is the subset of bracket types.
class TypeDomain {
 public:
  TypeDomain() = default;
  explicit TypeDomain(const std::vector<Type>& types);

  // Inserts the type together with all its parents.
  void add(const Type& t);
  bool contains(const Type& t) const { return types_.count(t) != 0; }

  const std::set<Type>& types() const { return types_; }
  std::vector<Type> belonging_subdomain() const;

  bool empty() const { return types_.empty(); }

  friend bool operator==(const TypeDomain& a, const TypeDomain& b) = default;

 private:
  std::set<Type> types_;
};

}  // namespace infralog
