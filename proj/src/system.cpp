#include "infralog/system.hpp"

namespace infralog {

Relation Relation::extensional(std::vector<std::pair<Elem, Elem>> pairs) {
  Relation r;
  r.pairs_.insert(pairs.begin(), pairs.end());
  return r;
}

Relation Relation::intensional(Predicate predicate) {
  Relation r;
  r.predicate_ = std::move(predicate);
  return r;
}

System::System(SignaturePtr sig, Carrier carrier, std::map<std::string, Elem> constants,
               std::map<Type, Relation> equalities, std::map<Type, Relation> belongings,
               Budget budget)
    : sig_(std::move(sig)),
      carrier_(std::move(carrier)),
      constants_(std::move(constants)),
      equalities_(std::move(equalities)),
      belongings_(std::move(belongings)),
      budget_(budget) {
  if (!sig_) throw ValidationError("system needs a signature");
  for (const auto& [t, names] : sig_->constants()) {
    for (const std::string& name : names) {
      auto it = constants_.find(name);
      if (it == constants_.end())
        throw ValidationError("missing constant structure for '" + name + "'");
      if (!elem_matches(it->second, Semitype::of_type(t), carrier_.size()))
        throw ValidationError("constant '" + name + "' does not fit type " + t.to_string());
    }
  }
  for (const auto& [name, value] : constants_) {
    (void)value;
    if (!sig_->has_constant(name))
      throw ValidationError("constant '" + name + "' not declared in the signature");
  }
  for (const auto& [t, rel] : equalities_) {
    (void)rel;
    if (!sig_->types().contains(t))
      throw ValidationError("equality at type " + t.to_string() + " outside the type domain");
  }
  for (const auto& [t, rel] : belongings_) {
    (void)rel;
    if (!t.is_bracket() || !sig_->types().contains(t))
      throw ValidationError("belonging at type " + t.to_string() + " outside the belonging subdomain");
  }
}

std::shared_ptr<const System> System::canonical(SignaturePtr sig, Carrier carrier,
                                                std::map<std::string, Elem> constants,
                                                Budget budget) {
  return std::make_shared<const System>(std::move(sig), std::move(carrier), std::move(constants),
                                        std::map<Type, Relation>{}, std::map<Type, Relation>{},
                                        budget);
}

const Elem& System::constant_value(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw ValidationError("unknown constant '" + name + "'");
  return it->second;
}

bool System::eq_semitype_holds(const Type& bracket_t, const Elem& a, const Elem& b) const {
  const auto& parents = bracket_t.parent_types();
  if (parents.size() == 1) return eq_holds(parents[0], a, b);
  for (std::size_t i = 0; i < parents.size(); ++i)
    if (!eq_holds(parents[i], a.parts()[i], b.parts()[i])) return false;
  return true;
}

const ElemList& System::terminal_of(const Semitype& st) const {
  auto it = terminal_cache_.find(st);
  if (it == terminal_cache_.end()) {
    auto list = std::make_unique<ElemList>(terminal(st, carrier_, budget_));
    it = terminal_cache_.emplace(st, std::move(list)).first;
  }
  return *it->second;
}

}  // namespace infralog
