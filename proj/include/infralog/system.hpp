#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infralog/budget.hpp"
#include "infralog/carrier.hpp"
#include "infralog/elem.hpp"
#include "infralog/signature.hpp"
#include "infralog/terminal.hpp"

namespace infralog {

// A binary relation over terminal elements, stored either as an explicit
// pair set or as a predicate. Systems always join these with the base
// set-theoretic relation (= for equalities, membership for belongings),
// so the containment invariants hold by construction and an absent or
// empty relation means the canonical one.
class Relation {
 public:
  using Predicate = std::function<bool(const Elem&, const Elem&)>;

  Relation() = default;  // canonical: no extra pairs
  static Relation extensional(std::vector<std::pair<Elem, Elem>> pairs);
  static Relation intensional(Predicate predicate);

  bool holds(const Elem& a, const Elem& b) const {
    if (predicate_) return predicate_(a, b);
    return pairs_.count({a, b}) != 0;
  }

  bool is_intensional() const { return static_cast<bool>(predicate_); }
  const std::set<std::pair<Elem, Elem>>& pairs() const { return pairs_; }

 private:
  std::set<std::pair<Elem, Elem>> pairs_;
  Predicate predicate_;
};

// A finite mathematical system: a carrier with a superstructure giving
// constant structures, one generalized equality per type and one
// generalized belonging per bracket type. Terminals are materialized
// lazily under the budget. Immutable after construction.
class System {
 public:
  System(SignaturePtr sig, Carrier carrier, std::map<std::string, Elem> constants,
         std::map<Type, Relation> equalities, std::map<Type, Relation> belongings,
         Budget budget = {});

  // The system whose relations are exactly = and set membership.
  static std::shared_ptr<const System> canonical(SignaturePtr sig, Carrier carrier,
                                                 std::map<std::string, Elem> constants,
                                                 Budget budget = {});

  const SignaturePtr& signature() const { return sig_; }
  const Carrier& carrier() const { return carrier_; }
  const Budget& budget() const { return budget_; }

  const Elem& constant_value(const std::string& name) const;
  const std::map<std::string, Elem>& constant_values() const { return constants_; }

  // Generalized equality at a type; always contains =.
  bool eq_holds(const Type& t, const Elem& a, const Elem& b) const {
    if (a == b) return true;
    auto it = equalities_.find(t);
    return it != equalities_.end() && it->second.holds(a, b);
  }

  // Generalized belonging at a bracket type; always contains membership.
  bool in_holds(const Type& t, const Elem& p, const Elem& big) const {
    if (big.contains(p)) return true;
    auto it = belongings_.find(t);
    return it != belongings_.end() && it->second.holds(p, big);
  }

  // Componentwise equality on elements of the semitype of `t`.
  bool eq_semitype_holds(const Type& bracket_t, const Elem& a, const Elem& b) const;

  const std::map<Type, Relation>& equalities() const { return equalities_; }
  const std::map<Type, Relation>& belongings() const { return belongings_; }

  const ElemList& terminal_of(const Semitype& st) const;
  const ElemList& terminal_of(const Type& t) const { return terminal_of(Semitype::of_type(t)); }

  // Optional provenance note (a serialized generator stanza) kept so that
  // generated systems round-trip through files byte-exactly.
  const std::optional<std::string>& generator_note() const { return generator_note_; }
  void set_generator_note(std::string note) { generator_note_ = std::move(note); }

 private:
  SignaturePtr sig_;
  Carrier carrier_;
  std::map<std::string, Elem> constants_;
  std::map<Type, Relation> equalities_;
  std::map<Type, Relation> belongings_;
  Budget budget_;
  std::optional<std::string> generator_note_;
  mutable std::map<Semitype, std::unique_ptr<ElemList>> terminal_cache_;
};

using SystemPtr = std::shared_ptr<const System>;

}  // namespace infralog
