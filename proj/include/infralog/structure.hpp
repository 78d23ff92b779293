#pragma once

#include <vector>

#include "infralog/system.hpp"

namespace infralog {

// A mapping between carriers, by atom index. Acts on arbitrary terminal
// elements structurally (atoms are remapped, tuples and sets recurse).
struct Mapping {
  std::vector<int> atom_map;
  int target_size = 0;

  int apply_atom(int i) const { return atom_map.at(static_cast<std::size_t>(i)); }
  Elem apply(const Elem& e) const;
};

// The relativized equality axioms, checked by enumeration: every type
// equality is an equivalence on its terminal and every bracket type
// satisfies the change-of-equals biconditional for its belonging.
bool holds_equality_axioms(const System& system);

// The structural coherence conditions tying second-order equalities and
// belongings to the first-order ones, each checked by full enumeration
// over the relevant terminals.
bool is_balanced(const System& system);
bool is_regular(const System& system);
bool is_extensional(const System& system);

// A homomorphism maps first-order constants onto their images exactly and
// preserves generalized belonging to every bracket-type constant.
bool is_homomorphism(const Mapping& u, const System& source, const System& target);

// Whether u reflects the generalized equality at type t: images related in
// the target only when the originals are related in the source.
bool approx_injective(const Mapping& u, const System& source, const System& target, const Type& t);

}  // namespace infralog
