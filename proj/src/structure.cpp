#include "infralog/structure.hpp"

namespace infralog {

Elem Mapping::apply(const Elem& e) const {
  switch (e.kind()) {
    case Elem::Kind::Atom:
      return Elem::atom(apply_atom(e.atom_index()));
    case Elem::Kind::Tuple: {
      std::vector<Elem> parts;
      parts.reserve(e.parts().size());
      for (const Elem& p : e.parts()) parts.push_back(apply(p));
      return Elem::tuple(std::move(parts));
    }
    case Elem::Kind::Set: {
      std::vector<Elem> members;
      members.reserve(e.set_size());
      for (const Elem& m : e.members()) members.push_back(apply(m));
      return Elem::set(std::move(members));
    }
  }
  return e;
}

namespace {

// Pairwise enumeration passes refuse to thrash: the quadratic scans are
// capped independently of the terminal budget.
constexpr std::uint64_t kPairWorkCap = std::uint64_t{1} << 26;

void check_pair_work(std::size_t domain, const char* what) {
  std::uint64_t n = domain;
  if (n * n > kPairWorkCap) throw BudgetExceeded(what, n * n, kPairWorkCap);
}

}  // namespace

bool holds_equality_axioms(const System& system) {
  const auto& types = system.signature()->types();
  for (const Type& t : types.types()) {
    const ElemList& dom = system.terminal_of(t);
    check_pair_work(dom.size(), "equality-axiom enumeration too large");
    for (const Elem& a : dom)
      if (!system.eq_holds(t, a, a)) return false;
    for (const Elem& a : dom)
      for (const Elem& b : dom) {
        if (!system.eq_holds(t, a, b)) continue;
        if (!system.eq_holds(t, b, a)) return false;
        for (const Elem& c : dom)
          if (system.eq_holds(t, b, c) && !system.eq_holds(t, a, c)) return false;
      }
  }
  for (const Type& t : types.belonging_subdomain()) {
    const ElemList& sets = system.terminal_of(t);
    const ElemList& args = system.terminal_of(semitype_of(t));
    check_pair_work(sets.size(), "change-of-equals enumeration too large");
    check_pair_work(args.size(), "change-of-equals enumeration too large");
    for (const Elem& u : sets)
      for (const Elem& v : sets) {
        if (!system.eq_holds(t, u, v)) continue;
        for (const Elem& p : args)
          for (const Elem& q : args) {
            if (!system.eq_semitype_holds(t, p, q)) continue;
            if (system.in_holds(t, p, u) != system.in_holds(t, q, v)) return false;
          }
      }
  }
  return true;
}

namespace {

// Mutual approximation of two sets: every member of one has an
// equivalent member in the other, componentwise at the semitype.
bool mutually_approximate(const System& system, const Type& t, const Elem& P, const Elem& Q) {
  for (const Elem& p : P.members()) {
    bool hit = false;
    for (const Elem& q : Q.members())
      if (system.eq_semitype_holds(t, q, p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  for (const Elem& q : Q.members()) {
    bool hit = false;
    for (const Elem& p : P.members())
      if (system.eq_semitype_holds(t, p, q)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_balanced(const System& system) {
  for (const Type& t : system.signature()->types().belonging_subdomain()) {
    const ElemList& sets = system.terminal_of(t);
    check_pair_work(sets.size(), "balance enumeration too large");
    for (const Elem& P : sets)
      for (const Elem& Q : sets)
        if (system.eq_holds(t, P, Q) != mutually_approximate(system, t, P, Q)) return false;
  }
  return true;
}

bool is_regular(const System& system) {
  for (const Type& t : system.signature()->types().belonging_subdomain()) {
    const ElemList& sets = system.terminal_of(t);
    const ElemList& args = system.terminal_of(semitype_of(t));
    check_pair_work(std::max(sets.size(), args.size()), "regularity enumeration too large");
    for (const Elem& p : args)
      for (const Elem& P : sets) {
        bool witnessed = false;
        for (const Elem& q : P.members())
          if (system.eq_semitype_holds(t, p, q)) {
            witnessed = true;
            break;
          }
        if (system.in_holds(t, p, P) != witnessed) return false;
      }
  }
  return true;
}

bool is_extensional(const System& system) {
  for (const Type& t : system.signature()->types().belonging_subdomain()) {
    const ElemList& sets = system.terminal_of(t);
    const ElemList& args = system.terminal_of(semitype_of(t));
    check_pair_work(std::max(sets.size(), args.size()), "extensionality enumeration too large");
    for (const Elem& P : sets)
      for (const Elem& Q : sets) {
        bool included = true;
        for (const Elem& p : args) {
          if (system.in_holds(t, p, P) && !system.in_holds(t, p, Q)) {
            included = false;
            break;
          }
          if (system.in_holds(t, p, Q) && !system.in_holds(t, p, P)) {
            included = false;
            break;
          }
        }
        if (system.eq_holds(t, P, Q) != included) return false;
      }
  }
  return true;
}

bool is_homomorphism(const Mapping& u, const System& source, const System& target) {
  if (!(*source.signature() == *target.signature()))
    throw SignatureMismatch("homomorphism check needs a shared signature");
  const SignatureSpec& sig = *source.signature();
  for (const auto& [t, names] : sig.constants()) {
    for (const std::string& name : names) {
      if (t.is_first_order()) {
        if (u.apply(source.constant_value(name)) != target.constant_value(name)) return false;
      } else {
        const Elem& s = source.constant_value(name);
        const Elem& tgt = target.constant_value(name);
        for (const Elem& p : source.terminal_of(semitype_of(t))) {
          if (!source.in_holds(t, p, s)) continue;
          if (!target.in_holds(t, u.apply(p), tgt)) return false;
        }
      }
    }
  }
  return true;
}

bool approx_injective(const Mapping& u, const System& source, const System& target,
                      const Type& t) {
  const ElemList& dom = source.terminal_of(t);
  for (const Elem& p : dom)
    for (const Elem& q : dom) {
      if (!target.eq_holds(t, u.apply(p), u.apply(q))) continue;
      if (!source.eq_holds(t, p, q)) return false;
    }
  return true;
}

}  // namespace infralog
