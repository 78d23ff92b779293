#include "doctest.h"

#include "helpers.hpp"
#include "infralog/harness.hpp"
#include "infralog/satisfaction.hpp"
#include "infralog/structure.hpp"

using namespace infralog;
using namespace testutil;

namespace {

SuiteConfig small_config() {
  SuiteConfig config;
  config.seed = 99;
  config.max_index = 2;
  config.formula_symbols = 2;
  config.random_formulas = 60;
  config.normalization_triples = 400;
  config.evaluation_pairs = 120;
  config.tower_depth = 1;
  config.tower_exponent = 2;
  config.fraction_bound = 1;
  config.segment_bound = 1;
  return config;
}

}  // namespace

TEST_CASE("sweep pool entries are sound") {
  auto pool = sweep_pool();
  CHECK(pool.size() >= 8);
  for (const PoolEntry& e : pool) {
    CAPTURE(e.name);
    CHECK(holds_equality_axioms(*e.system));
    // Set-valued entries are nonempty, keeping clear of the projection
    // boundary.
    for (const auto& [var, value] : e.eval.values())
      if (value.is_set()) CHECK(value.set_size() > 0);
  }
}

TEST_CASE("single filtration checks") {
  auto pool = sweep_pool();
  IndexedFamily fam;
  fam.index_labels = {"f1", "f2"};
  fam.factors = {pool[1].system, pool[4].system};
  fam.evaluations = {pool[1].eval, pool[4].eval};
  SignaturePtr sig = pool[1].system->signature();

  FilterSpec ultra = FilterSpec::principal_ultrafilter({"f1", "f2"}, "f2");
  for (const char* text : {"x =0 c", "E u:[0] . x in[0] u", "!(u =[0] C)"}) {
    CheckReport r = check_infrafiltration(fam, ultra, parse(text, *sig));
    CAPTURE(text);
    CHECK(r.pass);
  }
}

TEST_CASE("worked example suite") {
  SweepStats stats = worked_example_checks(small_config());
  CHECK(stats.pass);
  CHECK(stats.instances == 6);
  CHECK(stats.failures == 0);
}

TEST_CASE("exemplar proposition suite") {
  SuiteConfig config = small_config();
  config.fraction_bound = 2;  // exercises both routes
  SweepStats stats = exemplar_proposition_checks(config);
  CHECK(stats.pass);
  CHECK(stats.instances == 3);
  CHECK(stats.note.find("direct") != std::string::npos);
  CHECK(stats.note.find("class-quotient") != std::string::npos);
}

TEST_CASE("normalization suite") {
  SweepStats stats = normalization_sweep(small_config());
  CHECK(stats.pass);
  CHECK(stats.instances >= 400);
  CHECK(stats.failures == 0);
}

TEST_CASE("evaluation equivalence suite") {
  SweepStats stats = evaluation_equivalence_sweep(small_config());
  CHECK(stats.pass);
  CHECK(stats.instances >= 120);
}

TEST_CASE("infrafiltration suite") {
  SweepStats stats = infrafiltration_sweep(small_config());
  CHECK(stats.pass);
  CHECK(stats.instances > 2000);
  CHECK(stats.failures == 0);
}

TEST_CASE("filter boundary suite") {
  SweepStats stats = filter_boundary_sweep(small_config());
  CHECK(stats.pass);
  CHECK(stats.failures == 0);  // the positive fragment never fails
  CHECK(stats.note.find("negation failures") != std::string::npos);
  CHECK(stats.note.find(" 0 negation") == std::string::npos);
}

TEST_CASE("projection lemma suite") {
  SweepStats stats = projection_lemma_sweep(small_config());
  CHECK(stats.pass);
  CHECK(stats.failures == 0);
  CHECK(stats.note == "empty-constituent counterexamples recorded: 2");
}

TEST_CASE("compactness construction") {
  SignaturePtr sig = sweep_signature();
  std::vector<NamedFormula> phi = {{"A", parse("E x:0 . x =0 c", *sig)},
                                   {"B", parse("E u:[0] . c in[0] u", *sig)}};
  ModelProvider provider = [&](const std::vector<NamedFormula>& subset) {
    EvaluatedModel model;
    model.system = subset.size() == 1 ? canonical_system(2) : canonical_system(1);
    std::mt19937_64 rng(5);
    model.eval = random_sweep_eval(rng, *model.system);
    return model;
  };
  CompactnessResult result = compactness_build(phi, provider);
  CHECK(result.pass);
  CHECK(result.ultrafilter.classify() == FilterClass::Ultrafilter);
  // |F| = 3 nonempty subsets of a 2-element list.
  CHECK(result.ultrafilter.index_size() == 3);
  for (const auto& nf : phi) CHECK(satisfies(*result.model, nf.formula, result.eval));
  CHECK(holds_equality_axioms(*result.model));

  // A provider that fails its subset is rejected loudly.
  ModelProvider broken = [&](const std::vector<NamedFormula>&) {
    EvaluatedModel model;
    model.system = canonical_system(2);
    Evaluation ev;
    ev.set(Term::variable("x", t0), Elem::atom(1));  // c is atom 0
    ev.set(Term::variable("u", tset), Elem::set({Elem::atom(1)}));
    model.eval = ev;
    return model;
  };
  std::vector<NamedFormula> needs = {{"A", parse("x =0 c", *sig)}};
  CHECK_THROWS_AS(compactness_build(needs, broken), ProviderFailure);
}

TEST_CASE("compactness suite") {
  SweepStats stats = compactness_checks(small_config());
  CHECK(stats.pass);
  CHECK(stats.failures == 0);
}

TEST_CASE("tower suite") {
  SweepStats stats = tower_checks(small_config());
  CHECK(stats.pass);
  CHECK(stats.failures == 0);
  CHECK(stats.note.find("base-true closed formulas") != std::string::npos);
}

TEST_CASE("remark witness suite") {
  SweepStats stats = remark_witness_checks(small_config());
  CHECK(stats.pass);
  // 4 elements at level 1 plus 16 ordered pairs.
  CHECK(stats.instances == 4 + 16);
}

TEST_CASE("standard counterexample suite") {
  SweepStats stats = standard_counterexample_search(small_config());
  CHECK(stats.pass);
  CHECK(stats.failures == 0);  // generalized filtration never fails
  REQUIRE(stats.samples.size() >= 2);
  CHECK(stats.note.find("failures found") != std::string::npos);
}

TEST_CASE("suite runner composes sections and is deterministic") {
  SuiteConfig config = small_config();
  config.normalization_triples = 50;
  config.evaluation_pairs = 30;
  config.random_formulas = 20;
  std::vector<std::string> pick = {"worked-example", "projection-lemmas", "normalization"};
  SuiteResult a = run_suite(config, pick);
  SuiteResult b = run_suite(config, pick);
  CHECK(a.pass);
  REQUIRE(a.sections.size() == 3);
  REQUIRE(b.sections.size() == 3);
  for (std::size_t i = 0; i < a.sections.size(); ++i) {
    CHECK(a.sections[i].name == b.sections[i].name);
    CHECK(a.sections[i].instances == b.sections[i].instances);
    CHECK(a.sections[i].failures == b.sections[i].failures);
    CHECK(a.sections[i].note == b.sections[i].note);
  }
  CHECK(run_suite(config, {"bogus"}).sections.empty());
}
