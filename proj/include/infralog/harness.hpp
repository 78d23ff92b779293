#pragma once

#include <functional>
#include <string>
#include <vector>

#include "infralog/axioms.hpp"
#include "infralog/infraproduct.hpp"
#include "infralog/tower.hpp"

namespace infralog {

// One two-sided comparison. For equivalence-shaped checks `pass` means
// the sides agree; for searches the report records the found witness.
struct CheckReport {
  std::string id;
  std::string instance;
  bool lhs = false;
  bool rhs = false;
  bool pass = false;
};

// Aggregate outcome of one sweep section.
struct SweepStats {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  bool pass = false;
  std::string note;
  std::vector<CheckReport> samples;
};

// The filtration comparison for one (family, filter, formula) instance.
// The left side evaluates the formula on the product under the crossing;
// the right side never builds the product: it satisfies the formula on
// each factor and asks the filter about the resulting index set.
CheckReport check_infrafiltration(const InfraProduct& product, const Evaluation& crossed,
                                  const FormulaPtr& formula);
CheckReport check_infrafiltration(const IndexedFamily& family, const FilterSpec& filter,
                                  const FormulaPtr& formula, Budget budget = {});

// The same comparison in standard satisfaction mode (atoms read with =
// and membership, no quotient anywhere).
CheckReport check_standard_filtration(const InfraProduct& product, const Evaluation& crossed,
                                      const FormulaPtr& formula);

// The canonical evaluated-system pool used by the sweeps: small systems
// with true generalized equalities and belongings and nonempty set
// values. Deterministic.
struct PoolEntry {
  std::string name;
  SystemPtr system;
  Evaluation eval;
};
std::vector<PoolEntry> sweep_pool();

// First-order quotient comparison oracle: carriers are collapsed by
// almost-everywhere equality under the ultrafilter, relation constants
// induced memberwise. Built for first-order formulas over the order
// signature.
SystemPtr los_quotient(const IndexedFamily& family, const FilterSpec& ultra,
                       Evaluation* quotient_eval, const Evaluation& crossed, Budget budget = {});

struct EvaluatedModel {
  SystemPtr system;
  Evaluation eval;
};
using ModelProvider =
    std::function<EvaluatedModel(const std::vector<NamedFormula>& finite_subset)>;

// The compactness construction: index the nonempty finite subsets of the
// formula list, ask the provider for a model of each, generate the
// filter from the up-sets, extend it to an ultrafilter and build the
// infraproduct with the crossing. Verifies that the result models every
// formula and the equality axioms.
struct CompactnessResult {
  SystemPtr model;
  Evaluation eval;
  FilterSpec ultrafilter;
  std::vector<CheckReport> reports;
  bool pass = false;
};
CompactnessResult compactness_build(const std::vector<NamedFormula>& formulas,
                                    const ModelProvider& provider, Budget budget = {});

struct SuiteConfig {
  std::uint64_t seed = 2024;
  int max_index = 3;
  int formula_symbols = 3;
  int random_formulas = 1000;
  int normalization_triples = 10000;
  int evaluation_pairs = 1000;
  int tower_depth = 2;
  int tower_exponent = 2;
  int fraction_bound = 3;
  int segment_bound = 2;
  Budget budget;
};

SweepStats worked_example_checks(const SuiteConfig& config);
SweepStats exemplar_proposition_checks(const SuiteConfig& config);
SweepStats normalization_sweep(const SuiteConfig& config);
SweepStats evaluation_equivalence_sweep(const SuiteConfig& config);
SweepStats infrafiltration_sweep(const SuiteConfig& config);
SweepStats filter_boundary_sweep(const SuiteConfig& config);
SweepStats projection_lemma_sweep(const SuiteConfig& config);
SweepStats compactness_checks(const SuiteConfig& config);
SweepStats tower_checks(const SuiteConfig& config);
SweepStats remark_witness_checks(const SuiteConfig& config);
SweepStats standard_counterexample_search(const SuiteConfig& config);

struct SuiteResult {
  std::vector<SweepStats> sections;
  bool pass = false;
};

// Runs the named suites (empty list: all) in a fixed order.
SuiteResult run_suite(const SuiteConfig& config, const std::vector<std::string>& suites = {});
std::vector<std::string> suite_names();

}  // namespace infralog
