#pragma once

#include <vector>

#include "infralog/evaluation.hpp"
#include "infralog/filters.hpp"
#include "infralog/system.hpp"

namespace infralog {

// Shape bookkeeping for a product carrier: atoms of the product are
// choice tuples over the factor carriers, encoded mixed-radix with the
// first factor most significant.
struct ProductShape {
  std::vector<int> factor_sizes;

  std::uint64_t size() const;
  int project_atom(int atom, int factor) const;
  int atom_of(const std::vector<int>& choices) const;
};

// Projection of a product tuple to one factor: atoms project to their
// component, argument tuples componentwise.
Elem project_tuple(const ProductShape& shape, const Elem& p, int factor);

// Projection of a set of product tuples: the set of projections.
Elem project_set(const ProductShape& shape, const Elem& P, int factor);

// A collection of systems over one signature indexed by a finite set,
// optionally with per-factor evaluations.
struct IndexedFamily {
  std::vector<std::string> index_labels;
  std::vector<SystemPtr> factors;
  std::vector<Evaluation> evaluations;  // empty or one per factor

  void validate() const;
};

// The product system together with its shape and provenance.
struct InfraProduct {
  SystemPtr system;
  ProductShape shape;
  IndexedFamily family;
  FilterSpec filter;
};

// The infraproduct of the family under a filter: the carrier is the full
// choice-function product, first-order constants are pointwise, set
// constants collect the tuples pointwise inside every factor constant,
// and a relation instance holds when it holds on all factors of some
// filter member (tested over the inclusion-minimal members). Requires a
// filter containing the full index set.
InfraProduct infraproduct(const IndexedFamily& family, const FilterSpec& filter,
                          Budget budget = {});

// The crossing of the family's evaluations: pointwise tuples at first
// order, pointwise-membership boxes at second order.
Evaluation crossing(const InfraProduct& product);

// The infrapower: the infraproduct of |exponent| copies of one evaluated
// system.
InfraProduct infrapower(const SystemPtr& base, const Evaluation& base_eval,
                        const std::vector<std::string>& exponent_labels, const FilterSpec& filter,
                        Budget budget = {});

// Splits an evaluation on the product into per-factor evaluations (by
// projection) and their crossing.
struct DecomposedEvaluation {
  std::vector<Evaluation> per_factor;
  Evaluation crossed;
};
DecomposedEvaluation decompose_evaluation(const InfraProduct& product, const Evaluation& beta);

}  // namespace infralog
