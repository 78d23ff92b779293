#pragma once

#include <string>
#include <vector>

#include "infralog/axioms.hpp"
#include "infralog/infraproduct.hpp"
#include "infralog/structure.hpp"

namespace infralog {

// An iterated infrapower chain: level i+1 is the infrapower of level i
// with a fixed exponent and ultrafilter, together with the diagonal
// embeddings u_i (every coordinate of u_i(p) is p).
struct Tower {
  std::vector<SystemPtr> levels;
  std::vector<ProductShape> level_shapes;  // shape of level i+1 over level i
  std::vector<Evaluation> level_evals;
  std::vector<Mapping> embeddings;  // u_i : level i -> level i+1
  std::vector<std::string> exponent_labels;
  FilterSpec filter;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

Tower build_tower(SystemPtr base, Evaluation base_eval, std::vector<std::string> exponent_labels,
                  FilterSpec filter, int depth, Budget budget = {});

// The product of all tower levels under an ultrafilter on the level
// indices, with the maps w_i from each level into the product. w_i sends
// p to the choice function that is p at slot i, climbs with the diagonal
// embeddings above i, and descends through the anchor coordinate below i.
struct TowerLimit {
  SystemPtr limit;
  ProductShape limit_shape;
  Evaluation limit_eval;
  FilterSpec level_filter;
  int anchor_index = 0;
  std::vector<Mapping> w;  // per level: level i -> limit
};

TowerLimit build_limit(const Tower& tower, const FilterSpec& level_filter,
                       const std::string& anchor_label, Budget budget = {});

// Per-formula verdicts plus relation-restriction agreement for an
// embedded image. The submodel notion is reported piecewise rather than
// as one boolean.
struct SubmodelReport {
  struct FormulaVerdict {
    std::string name;
    bool source_sat = false;
    bool ambient_sat = false;
  };
  std::vector<FormulaVerdict> formulas;
  bool constants_realized = false;
  bool forward_equality_preserved = false;
  bool equality_reflected = false;
  bool belonging_restriction_agrees = false;

  bool preserved() const {
    for (const auto& v : formulas)
      if (v.source_sat && !v.ambient_sat) return false;
    return true;
  }
};

SubmodelReport check_submodel(const Mapping& u, const System& source, const System& ambient,
                              const std::vector<NamedFormula>& closed_formulas);

// Witness reports for the two axioms whose satisfaction at level i rests
// on the binary partition property: inversion (per element, split into
// zero and cozero coordinate sets, with an explicit inverse construction
// on the cozero branch) and order linearity (per pair, split into the
// le-set and the strict reverse set).
struct PartitionWitness {
  std::string subject;
  std::string branch;
  bool decided = false;     // the ultrafilter picked one side
  bool witness_ok = false;  // the constructed witness passes
};

struct RemarkReport {
  std::string axiom;
  int level = 0;
  std::vector<PartitionWitness> entries;
  bool all_ok = true;
};

RemarkReport inversion_partition_witnesses(const Tower& tower, int level);
RemarkReport order_partition_witnesses(const Tower& tower, int level);

// The signature {0,[0],[0,0]} with constants zero, one : 0 and inv,
// leq : [0,0], plus a two-element chain base interpreting them: the
// smallest system with enough order/inversion structure to drive the
// partition witnesses.
SignaturePtr order_signature();
SystemPtr make_order_base();

}  // namespace infralog
