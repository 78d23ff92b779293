#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "infralog/budget.hpp"
#include "infralog/carrier.hpp"
#include "infralog/elem.hpp"
#include "infralog/types.hpp"

namespace infralog {

// Cardinality of the terminal of `st` over a carrier of the given size,
// without materializing it. Throws BudgetExceeded when the count passes
// the cap (including the case where it does not fit in 64 bits).
std::uint64_t terminal_size(const Semitype& st, std::uint64_t carrier_size, const Budget& budget);

inline std::uint64_t terminal_size(const Type& t, std::uint64_t carrier_size, const Budget& budget) {
  return terminal_size(Semitype::of_type(t), carrier_size, budget);
}

// Materializes the terminal of `st` over the carrier, in a fixed canonical
// enumeration order: atoms by carrier index, products in lexicographic
// (row-major) order, power sets in bitmask order over the base enumeration.
ElemList terminal(const Semitype& st, const Carrier& carrier, const Budget& budget);

inline ElemList terminal(const Type& t, const Carrier& carrier, const Budget& budget) {
  return terminal(Semitype::of_type(t), carrier, budget);
}

// Whether `e` has the shape of an element of st(A) for a carrier of the
// given size (atoms in range, tuples of the right arity, sets of members
// of the base shape).
bool elem_matches(const Elem& e, const Semitype& st, int carrier_size);

// The terminal of a semitype over a mapping u : A -> B, as a function on
// elements: the identity action on atoms is u itself, bracket semitypes map
// sets to direct images, products act componentwise.
std::function<Elem(const Elem&)> terminal_map(const Semitype& st, std::vector<int> u);

}  // namespace infralog
