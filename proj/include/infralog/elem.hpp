#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "infralog/carrier.hpp"

namespace infralog {

// A terminal element: a carrier atom, a tuple of elements, or a finite
// set of elements. Values are immutable; copies share children. Sets keep
// their members sorted in the canonical element order, so iteration and
// printing are deterministic.
class Elem {
 public:
  enum class Kind : std::uint8_t { Atom, Tuple, Set };

  Elem() { *this = atom(0); }
  static Elem atom(int carrier_index);
  static Elem tuple(std::vector<Elem> parts);   // at least 2 parts
  static Elem set(std::vector<Elem> members);   // sorted and deduplicated

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }
  bool is_set() const { return kind_ == Kind::Set; }

  int atom_index() const { return atom_; }
  const std::vector<Elem>& parts() const { return *kids_; }    // Tuple
  const std::vector<Elem>& members() const { return *kids_; }  // Set
  std::size_t set_size() const { return kids_->size(); }

  // Set membership by binary search over the canonical order.
  bool contains(const Elem& e) const;

  std::uint64_t hash() const { return hash_; }

  std::string to_string(const Carrier& carrier) const;

  friend bool operator==(const Elem& a, const Elem& b);
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);

 private:
  struct Raw {};
  explicit Elem(Raw) {}

  Kind kind_ = Kind::Atom;
  std::int32_t atom_ = 0;
  std::shared_ptr<const std::vector<Elem>> kids_;
  std::uint64_t hash_ = 0;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return static_cast<std::size_t>(e.hash()); }
};

using ElemList = std::vector<Elem>;

}  // namespace infralog
