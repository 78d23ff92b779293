#include "infralog/harness.hpp"

#include <algorithm>
#include <random>

#include "infralog/exemplars.hpp"
#include "infralog/generator.hpp"
#include "infralog/parser.hpp"
#include "infralog/satisfaction.hpp"
#include "infralog/structure.hpp"

namespace infralog {

namespace {

const Type kFirst = Type::first_order();
const Type kSet = Type::bracket({Type::first_order()});

SignaturePtr harness_signature() {
  static SignaturePtr sig =
      make_signature({kFirst, kSet}, {{kFirst, {"c"}}, {kSet, {"C"}}});
  return sig;
}

Evaluation make_eval(int x, int y, std::vector<int> u, std::vector<int> v) {
  Evaluation ev;
  ev.set(Term::variable("x", kFirst), Elem::atom(x));
  ev.set(Term::variable("y", kFirst), Elem::atom(y));
  auto set_of = [](const std::vector<int>& atoms) {
    std::vector<Elem> members;
    for (int a : atoms) members.push_back(Elem::atom(a));
    return Elem::set(std::move(members));
  };
  ev.set(Term::variable("u", kSet), set_of(u));
  ev.set(Term::variable("v", kSet), set_of(v));
  return ev;
}

std::map<std::string, Elem> harness_constants(int c, std::vector<int> big) {
  std::vector<Elem> members;
  for (int a : big) members.push_back(Elem::atom(a));
  return {{"c", Elem::atom(c)}, {"C", Elem::set(std::move(members))}};
}

void record(SweepStats& stats, const CheckReport& report, std::size_t sample_cap = 5) {
  ++stats.instances;
  if (!report.pass) {
    ++stats.failures;
    if (stats.samples.size() < sample_cap) stats.samples.push_back(report);
  }
}

std::string family_name(const std::vector<const PoolEntry*>& entries) {
  std::string out;
  for (const PoolEntry* e : entries) {
    if (!out.empty()) out += "|";
    out += e->name;
  }
  return out;
}

IndexedFamily assemble(const std::vector<const PoolEntry*>& entries) {
  IndexedFamily fam;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    fam.index_labels.push_back("f" + std::to_string(i + 1));
    fam.factors.push_back(entries[i]->system);
    fam.evaluations.push_back(entries[i]->eval);
  }
  return fam;
}

}  // namespace

std::vector<PoolEntry> sweep_pool() {
  SignaturePtr sig = harness_signature();
  std::vector<PoolEntry> pool;

  auto canonical = [&](const std::string& name, int n, int c, std::vector<int> big,
                       Evaluation ev) {
    pool.push_back({name,
                    System::canonical(sig,
                                      Carrier([n] {
                                        std::vector<std::string> ls;
                                        for (int i = 0; i < n; ++i)
                                          ls.push_back(std::string(1, char('a' + i)));
                                        return ls;
                                      }()),
                                      harness_constants(c, std::move(big))),
                    std::move(ev)});
  };
  auto pattern = [&](const std::string& name, std::vector<int> classes, int c,
                     std::vector<int> big, Evaluation ev) {
    int n = static_cast<int>(classes.size());
    pool.push_back({name,
                    make_pattern_system(sig,
                                        Carrier([n] {
                                          std::vector<std::string> ls;
                                          for (int i = 0; i < n; ++i)
                                            ls.push_back(std::string(1, char('a' + i)));
                                          return ls;
                                        }()),
                                        std::move(classes), harness_constants(c, std::move(big))),
                    std::move(ev)});
  };

  canonical("one", 1, 0, {0}, make_eval(0, 0, {0}, {0}));
  canonical("two-fine-a", 2, 0, {1}, make_eval(0, 1, {1}, {0, 1}));
  canonical("two-fine-b", 2, 1, {0, 1}, make_eval(1, 0, {0}, {0}));
  canonical("two-fine-c", 2, 0, {0}, make_eval(1, 1, {0, 1}, {1}));
  pattern("two-coarse-a", {0, 0}, 0, {0}, make_eval(0, 1, {0, 1}, {1}));
  pattern("two-coarse-b", {0, 0}, 1, {0, 1}, make_eval(1, 1, {0}, {0, 1}));
  pattern("two-coarse-c", {0, 0}, 0, {1}, make_eval(0, 0, {1}, {0}));
  pattern("three-mixed", {0, 0, 1}, 2, {0, 2}, make_eval(1, 2, {0, 2}, {1}));
  return pool;
}

CheckReport check_infrafiltration(const InfraProduct& product, const Evaluation& crossed,
                                  const FormulaPtr& formula) {
  CheckReport report;
  report.id = "infrafiltration";
  report.instance = product.filter.describe() + " ; " + print(formula);
  report.lhs = satisfies(*product.system, formula, crossed);
  std::uint64_t mask = 0;
  for (std::size_t g = 0; g < product.family.factors.size(); ++g) {
    if (satisfies(*product.family.factors[g], formula, product.family.evaluations[g]))
      mask |= std::uint64_t{1} << g;
  }
  report.rhs = product.filter.contains(mask);
  report.pass = report.lhs == report.rhs;
  return report;
}

CheckReport check_infrafiltration(const IndexedFamily& family, const FilterSpec& filter,
                                  const FormulaPtr& formula, Budget budget) {
  InfraProduct product = infraproduct(family, filter, budget);
  return check_infrafiltration(product, crossing(product), formula);
}

CheckReport check_standard_filtration(const InfraProduct& product, const Evaluation& crossed,
                                      const FormulaPtr& formula) {
  CheckReport report;
  report.id = "standard-filtration";
  report.instance = product.filter.describe() + " ; " + print(formula);
  report.lhs = satisfies(*product.system, formula, crossed, SatMode::Standard);
  std::uint64_t mask = 0;
  for (std::size_t g = 0; g < product.family.factors.size(); ++g) {
    if (satisfies(*product.family.factors[g], formula, product.family.evaluations[g],
                  SatMode::Standard))
      mask |= std::uint64_t{1} << g;
  }
  report.rhs = product.filter.contains(mask);
  report.pass = report.lhs == report.rhs;
  return report;
}

// ---------------------------------------------------------------------------
// Worked example facts.

SweepStats worked_example_checks(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "worked-example";
  SystemPtr frac = make_fraction_system(16, config.budget);
  auto atom = [&](long long m, long long s) { return Elem::atom(*fraction_index(*frac, m, s)); };
  Elem p0 = Elem::set({atom(3, 8), atom(2, 3)});
  Elem q0 = Elem::set({atom(6, 16), atom(2, 3), atom(4, 6)});

  auto fact = [&](const std::string& what, bool verdict, bool expected) {
    CheckReport r;
    r.id = "worked-example";
    r.instance = what;
    r.lhs = verdict;
    r.rhs = expected;
    r.pass = verdict == expected;
    record(stats, r);
  };
  fact("P0 ~ Q0 at the set level", frac->eq_holds(kSet, p0, q0), true);
  fact("P0 equals Q0 set-theoretically", p0 == q0, false);
  fact("6/16 belongs to P0", frac->in_holds(kSet, atom(6, 16), p0), true);
  fact("6/9 belongs to P0", frac->in_holds(kSet, atom(6, 9), p0), true);
  fact("6/16 is a member of P0", p0.contains(atom(6, 16)), false);
  fact("6/9 is a member of P0", p0.contains(atom(6, 9)), false);
  stats.pass = stats.failures == 0;
  return stats;
}

SweepStats exemplar_proposition_checks(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "exemplar-propositions";
  auto run = [&](const std::string& name, const SystemPtr& system) {
    PropositionReport report = verify_good_model_properties(*system, config.seed);
    CheckReport r;
    r.id = "good-model";
    r.instance = name + " via " + report.route + " (" + std::to_string(report.classes) +
                 " classes, " + std::to_string(report.honest_checks) + " checks)";
    r.lhs = report.all();
    r.rhs = true;
    r.pass = report.all();
    record(stats, r);
    if (!stats.note.empty()) stats.note += "; ";
    stats.note += name + ":" + report.route;
  };
  for (int n = 1; n <= config.fraction_bound; ++n)
    run("fractions N=" + std::to_string(n), make_fraction_system(n, config.budget));
  for (int g = 1; g <= config.segment_bound; ++g)
    run("segments G=" + std::to_string(g), make_segment_system(g, config.budget));
  stats.pass = stats.failures == 0;
  return stats;
}

// ---------------------------------------------------------------------------
// Normalization and evaluation equivalence.

namespace {

FormulaGen::Config harness_generator_config(bool rich) {
  SignaturePtr sig = harness_signature();
  FormulaGen::Config config;
  for (const char* text : {"x =0 c", "u =[0] C", "x in[0] u"})
    config.atoms.push_back(parse(text, *sig));
  if (rich)
    for (const char* text : {"x =0 y", "u =[0] v", "y in[0] C", "x in[0] v"})
      config.atoms.push_back(parse(text, *sig));
  config.quantifiable = {Term::variable("x", kFirst), Term::variable("u", kSet)};
  if (rich) config.quantifiable.push_back(Term::variable("y", kFirst));
  return config;
}

Evaluation seeded_eval(std::mt19937_64& rng, int carrier, bool nonempty) {
  auto subset = [&]() {
    std::vector<int> out;
    for (int i = 0; i < carrier; ++i)
      if (rng() & 1) out.push_back(i);
    if (nonempty && out.empty()) out.push_back(static_cast<int>(rng() % carrier));
    return out;
  };
  return make_eval(static_cast<int>(rng() % carrier), static_cast<int>(rng() % carrier),
                   subset(), subset());
}

}  // namespace

SweepStats normalization_sweep(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "normalization";
  std::mt19937_64 rng(config.seed);
  FormulaGen gen(harness_generator_config(true));
  SignaturePtr sig = harness_signature();
  while (stats.instances < static_cast<std::uint64_t>(config.normalization_triples)) {
    GeneratedSystem gs = random_system(rng(), sig, 1 + static_cast<int>(rng() % 2), 0.5,
                                       (stats.instances % 3 == 0) ? 0.8 : 0.0, config.budget);
    for (const FormulaPtr& f : gen.random(rng(), 8, 4)) {
      Evaluation ev = seeded_eval(rng, gs.system->carrier().size(), false);
      CheckReport r;
      r.id = "normalization";
      r.instance = print(f);
      r.lhs = satisfies(*gs.system, f, ev);
      r.rhs = satisfies(*gs.system, normalize(f), ev);
      r.pass = r.lhs == r.rhs;
      record(stats, r);
    }
  }
  stats.pass = stats.failures == 0;
  return stats;
}

SweepStats evaluation_equivalence_sweep(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "evaluation-equivalence";
  std::mt19937_64 rng(config.seed + 1);
  FormulaGen gen(harness_generator_config(true));
  SignaturePtr sig = harness_signature();
  while (stats.instances < static_cast<std::uint64_t>(config.evaluation_pairs)) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<int> classes;
    int next = 0;
    for (int i = 0; i < n; ++i)
      classes.push_back((rng() % 2 == 0 && next > 0) ? static_cast<int>(rng() % next) : next++);
    std::vector<int> big;
    big.push_back(static_cast<int>(rng() % n));
    SystemPtr sys = make_pattern_system(sig, Carrier([n] {
                                          std::vector<std::string> ls;
                                          for (int i = 0; i < n; ++i)
                                            ls.push_back(std::string(1, char('a' + i)));
                                          return ls;
                                        }()),
                                        classes, harness_constants(static_cast<int>(rng() % n), big),
                                        config.budget);

    Evaluation gamma = seeded_eval(rng, n, true);
    Evaluation delta;
    for (const auto& [var, value] : gamma.values()) {
      auto resample_atom = [&](const Elem& a) {
        std::vector<int> pool;
        for (int i = 0; i < n; ++i)
          if (sys->eq_holds(kFirst, a, Elem::atom(i))) pool.push_back(i);
        return Elem::atom(pool[rng() % pool.size()]);
      };
      if (var.type.is_first_order()) {
        delta.set(var, resample_atom(value));
      } else {
        std::vector<Elem> members;
        for (const Elem& m : value.members()) members.push_back(resample_atom(m));
        delta.set(var, Elem::set(std::move(members)));
      }
    }
    for (const FormulaPtr& f : gen.random(rng(), 4, 4)) {
      CheckReport r;
      r.id = "evaluation-equivalence";
      r.instance = print(f);
      r.lhs = satisfies(*sys, f, gamma);
      r.rhs = satisfies(*sys, f, delta);
      r.pass = r.lhs == r.rhs;
      record(stats, r);
    }
  }
  stats.pass = stats.failures == 0;
  return stats;
}

// ---------------------------------------------------------------------------
// The filtration sweeps.

SweepStats infrafiltration_sweep(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "infrafiltration";
  std::vector<PoolEntry> pool = sweep_pool();

  // Pass A: every canonical formula against a representative family set.
  FormulaGen narrow(harness_generator_config(false));
  std::vector<FormulaPtr> canon = narrow.canonical(config.formula_symbols);
  std::vector<std::vector<const PoolEntry*>> representative;
  for (const PoolEntry& e : pool) representative.push_back({&e});
  for (int i = 0; i < 6 && config.max_index >= 2; ++i)
    representative.push_back({&pool[i % pool.size()], &pool[(i * 3 + 1) % pool.size()]});
  for (int i = 0; i < 4 && config.max_index >= 3; ++i)
    representative.push_back(
        {&pool[i % pool.size()], &pool[(i + 2) % pool.size()], &pool[(i * 5 + 3) % pool.size()]});

  for (const auto& entries : representative) {
    IndexedFamily fam = assemble(entries);
    for (const FilterSpec& ultra : FilterSpec::all_ultrafilters(fam.index_labels)) {
      InfraProduct product = infraproduct(fam, ultra, config.budget);
      Evaluation crossed = crossing(product);
      for (const FormulaPtr& f : canon) {
        CheckReport r = check_infrafiltration(product, crossed, f);
        r.instance = family_name(entries) + " ; " + r.instance;
        record(stats, r);
      }
    }
  }

  // Pass B: every pool family up to the index cap against representative
  // formulas.
  SignaturePtr sig = harness_signature();
  std::vector<FormulaPtr> representatives;
  for (const char* text :
       {"x =0 c", "u =[0] C", "x in[0] u", "!(x =0 c)", "x =0 c & y =0 c",
        "x =0 c | u =[0] C", "x in[0] u -> u =[0] C", "E x:0 . x =0 c", "A x:0 . x in[0] C",
        "E u:[0] . x in[0] u & u =[0] C", "A u:[0] . E y:0 . y in[0] u | x =0 c",
        "!(E x:0 . x in[0] v)"})
    representatives.push_back(parse(text, *sig));

  std::vector<std::vector<const PoolEntry*>> families;
  std::vector<std::vector<const PoolEntry*>> current = {{}};
  for (int size = 1; size <= config.max_index; ++size) {
    std::vector<std::vector<const PoolEntry*>> next;
    for (const auto& partial : current)
      for (const PoolEntry& e : pool) {
        auto extended = partial;
        extended.push_back(&e);
        next.push_back(std::move(extended));
      }
    families.insert(families.end(), next.begin(), next.end());
    current = std::move(next);
  }
  for (const auto& entries : families) {
    IndexedFamily fam = assemble(entries);
    for (const FilterSpec& ultra : FilterSpec::all_ultrafilters(fam.index_labels)) {
      InfraProduct product = infraproduct(fam, ultra, config.budget);
      Evaluation crossed = crossing(product);
      for (const FormulaPtr& f : representatives) {
        CheckReport r = check_infrafiltration(product, crossed, f);
        r.instance = family_name(entries) + " ; " + r.instance;
        record(stats, r);
      }
    }
  }

  // Pass C: a seeded random tail of deeper formulas on random families.
  std::mt19937_64 rng(config.seed + 2);
  FormulaGen rich(harness_generator_config(true));
  for (const FormulaPtr& f : rich.random(config.seed + 3, config.random_formulas, 7)) {
    int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.max_index));
    std::vector<const PoolEntry*> entries;
    for (int i = 0; i < size; ++i) entries.push_back(&pool[rng() % pool.size()]);
    IndexedFamily fam = assemble(entries);
    FilterSpec ultra = FilterSpec::principal_ultrafilter(
        fam.index_labels, fam.index_labels[rng() % fam.index_labels.size()]);
    InfraProduct product = infraproduct(fam, ultra, config.budget);
    CheckReport r = check_infrafiltration(product, crossing(product), f);
    r.instance = family_name(entries) + " ; " + r.instance;
    record(stats, r);
  }

  stats.pass = stats.failures == 0;
  stats.note = "lhs on the product, rhs by factor satisfaction plus filter membership";
  return stats;
}

SweepStats filter_boundary_sweep(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "filter-boundary";
  std::vector<PoolEntry> pool = sweep_pool();
  SignaturePtr sig = harness_signature();

  // Every proper non-ultra filter containing the full set, per index size.
  auto non_ultra_filters = [&](int n) {
    std::vector<FilterSpec> out;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
    std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t ensembles = std::uint64_t{1} << subsets;
    for (std::uint64_t e = 0; e < ensembles; ++e) {
      std::vector<std::uint64_t> members;
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        if (e & (std::uint64_t{1} << mask)) members.push_back(mask);
      FilterSpec spec(labels, members);
      if (spec.classify() != FilterClass::ProperFilter) continue;
      if (!spec.contains(spec.full_mask())) continue;
      out.push_back(spec);
    }
    return out;
  };

  std::vector<FormulaPtr> positive;
  for (const char* text :
       {"x =0 c", "u =[0] C", "x in[0] u", "x =0 c & u =[0] C", "x in[0] u & y =0 c",
        "E x:0 . x =0 c", "E u:[0] . x in[0] u"})
    positive.push_back(parse(text, *sig));
  std::vector<FormulaPtr> negated;
  for (const char* text : {"!(x =0 c)", "!(u =[0] C)", "!(x in[0] u)"})
    negated.push_back(parse(text, *sig));

  std::uint64_t negation_failures = 0;
  for (int n = 2; n <= std::min(config.max_index, 3); ++n) {
    std::vector<FilterSpec> filters = non_ultra_filters(n);
    // All pool families of this size (capped deterministically for n=3).
    std::vector<std::vector<const PoolEntry*>> families;
    if (n == 2) {
      for (const PoolEntry& a : pool)
        for (const PoolEntry& b : pool) families.push_back({&a, &b});
    } else {
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); j += 2)
          families.push_back(
              {&pool[i], &pool[j], &pool[(i * 3 + j + 1) % pool.size()]});
    }
    for (const auto& entries : families) {
      IndexedFamily fam = assemble(entries);
      for (const FilterSpec& filter : filters) {
        InfraProduct product = infraproduct(fam, filter, config.budget);
        Evaluation crossed = crossing(product);
        for (const FormulaPtr& f : positive) {
          CheckReport r = check_infrafiltration(product, crossed, f);
          r.id = "filter-boundary-positive";
          record(stats, r);
        }
        for (const FormulaPtr& f : negated) {
          CheckReport r = check_infrafiltration(product, crossed, f);
          r.id = "filter-boundary-negation";
          ++stats.instances;
          if (!r.pass) {
            ++negation_failures;
            if (stats.samples.size() < 5) stats.samples.push_back(r);
          }
        }
      }
    }
  }

  // The positive fragment must filter through mere filters; negation must
  // genuinely need the ultrafilter.
  stats.pass = stats.failures == 0 && negation_failures > 0;
  stats.note = "recorded " + std::to_string(negation_failures) +
               " negation failures under proper non-ultra filters";
  return stats;
}

SweepStats projection_lemma_sweep(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "projection-lemmas";
  std::vector<PoolEntry> pool = sweep_pool();
  FilterSpec ultra2 = FilterSpec::principal_ultrafilter({"f1", "f2"}, "f1");

  // Nonempty regime: every pool pair; constants and evaluations project
  // onto their factors.
  for (const PoolEntry& a : pool)
    for (const PoolEntry& b : pool) {
      IndexedFamily fam = assemble({&a, &b});
      InfraProduct product = infraproduct(fam, ultra2, config.budget);
      Evaluation crossed = crossing(product);
      for (int g = 0; g < 2; ++g) {
        const System& factor = *fam.factors[static_cast<std::size_t>(g)];
        CheckReport r;
        r.id = "constant-projection";
        r.instance = a.name + "|" + b.name + " @f" + std::to_string(g + 1);
        r.lhs = project_set(product.shape, product.system->constant_value("C"), g) ==
                factor.constant_value("C");
        r.rhs = true;
        r.pass = r.lhs;
        record(stats, r);
        for (const char* var : {"u", "v"}) {
          Term term = Term::variable(var, kSet);
          CheckReport s;
          s.id = "evaluation-projection";
          s.instance = r.instance + " " + var;
          s.lhs = project_set(product.shape, *crossed.find(term), g) ==
                  *fam.evaluations[static_cast<std::size_t>(g)].find(term);
          s.rhs = true;
          s.pass = s.lhs;
          record(stats, s);
        }
        Term x = Term::variable("x", kFirst);
        CheckReport t;
        t.id = "evaluation-projection-first-order";
        t.instance = r.instance + " x";
        t.lhs = project_tuple(product.shape, *crossed.find(x), g) ==
                *fam.evaluations[static_cast<std::size_t>(g)].find(x);
        t.rhs = true;
        t.pass = t.lhs;
        record(stats, t);
      }
    }

  // Empty regime: one factor with an empty set constant next to a
  // nonempty one; the box collapses and the projection law breaks. The
  // counterexamples are expected and recorded.
  SignaturePtr sig = harness_signature();
  SystemPtr empty_const =
      System::canonical(sig, Carrier({"a", "b"}), harness_constants(0, {}));
  SystemPtr full_const =
      System::canonical(sig, Carrier({"a", "b"}), harness_constants(0, {0, 1}));
  IndexedFamily mixed;
  mixed.index_labels = {"f1", "f2"};
  mixed.factors = {empty_const, full_const};
  mixed.evaluations = {make_eval(0, 0, {}, {0}), make_eval(0, 0, {1}, {0})};
  InfraProduct product = infraproduct(mixed, ultra2, config.budget);
  Evaluation crossed = crossing(product);
  std::uint64_t counterexamples = 0;
  if (project_set(product.shape, product.system->constant_value("C"), 1) !=
      full_const->constant_value("C"))
    ++counterexamples;
  if (project_set(product.shape, *crossed.find(Term::variable("u", kSet)), 1) !=
      *mixed.evaluations[1].find(Term::variable("u", kSet)))
    ++counterexamples;
  stats.note = "empty-constituent counterexamples recorded: " + std::to_string(counterexamples);

  stats.pass = stats.failures == 0 && counterexamples == 2;
  return stats;
}

// ---------------------------------------------------------------------------
// Compactness.

CompactnessResult compactness_build(const std::vector<NamedFormula>& formulas,
                                    const ModelProvider& provider, Budget budget) {
  if (formulas.empty() || formulas.size() > 6)
    throw ValidationError("compactness construction expects 1..6 formulas");
  std::size_t k = formulas.size();
  std::uint64_t subset_count = (std::uint64_t{1} << k) - 1;

  // Index set: the nonempty subsets of the formula list.
  std::vector<std::string> labels;
  std::vector<std::vector<NamedFormula>> subsets;
  for (std::uint64_t mask = 1; mask <= subset_count; ++mask) {
    std::string label = "{";
    std::vector<NamedFormula> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) {
        if (label.size() > 1) label += ",";
        label += formulas[i].name;
        subset.push_back(formulas[i]);
      }
    labels.push_back(label + "}");
    subsets.push_back(std::move(subset));
  }

  IndexedFamily family;
  family.index_labels = labels;
  for (const auto& subset : subsets) {
    EvaluatedModel model = provider(subset);
    if (!model.system) throw ProviderFailure("provider returned no system");
    if (!holds_equality_axioms(*model.system))
      throw ProviderFailure("provided system fails the equality axioms");
    for (const NamedFormula& nf : subset)
      if (!satisfies(*model.system, nf.formula, model.eval))
        throw ProviderFailure("provided system fails its subset at " + nf.name);
    family.factors.push_back(model.system);
    family.evaluations.push_back(model.eval);
  }

  // The up-set ensemble has the finite intersection property; generate
  // the filter and extend it to an ultrafilter.
  std::vector<std::uint64_t> upsets;
  for (std::uint64_t f = 1; f <= subset_count; ++f) {
    std::uint64_t members = 0;
    for (std::uint64_t g = 1; g <= subset_count; ++g)
      if ((f & g) == f) members |= std::uint64_t{1} << (g - 1);
    upsets.push_back(members);
  }
  auto generated = generated_filter(labels, upsets);
  if (!generated) throw ValidationError("up-set ensemble lost the intersection property");
  FilterSpec ultra = extend_to_ultrafilter(*generated);

  InfraProduct product = infraproduct(family, ultra, budget);
  CompactnessResult result;
  result.model = product.system;
  result.eval = crossing(product);
  result.ultrafilter = ultra;
  result.pass = true;
  for (const NamedFormula& nf : formulas) {
    CheckReport r;
    r.id = "compactness";
    r.instance = nf.name;
    r.lhs = satisfies(*product.system, nf.formula, result.eval);
    r.rhs = true;
    r.pass = r.lhs;
    result.reports.push_back(r);
    if (!r.pass) result.pass = false;
  }
  CheckReport eq;
  eq.id = "compactness";
  eq.instance = "equality axioms on the product";
  eq.lhs = holds_equality_axioms(*product.system);
  eq.rhs = true;
  eq.pass = eq.lhs;
  result.reports.push_back(eq);
  if (!eq.pass) result.pass = false;
  return result;
}

SweepStats compactness_checks(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "compactness";
  SignaturePtr sig = harness_signature();
  std::vector<NamedFormula> all = {
      {"A", parse("E x:0 . x =0 c", *sig)},
      {"B", parse("A x:0 . x =0 x", *sig)},
      {"D", parse("E u:[0] . c in[0] u", *sig)},
  };
  // A deterministic provider mixing carrier sizes.
  ModelProvider provider = [&](const std::vector<NamedFormula>& subset) {
    EvaluatedModel model;
    // Singleton subsets get the two-element carrier; the product stays
    // within the quadratic enumeration caps.
    int n = subset.size() == 1 ? 2 : 1;
    std::vector<std::string> ls;
    for (int i = 0; i < n; ++i) ls.push_back(std::string(1, char('a' + i)));
    model.system = System::canonical(sig, Carrier(ls), harness_constants(0, {0}));
    model.eval = make_eval(0, n - 1, {0}, {0});
    return model;
  };
  for (std::size_t take = 1; take <= all.size(); ++take) {
    std::vector<NamedFormula> phi(all.begin(), all.begin() + static_cast<long>(take));
    CompactnessResult result = compactness_build(phi, provider, config.budget);
    for (const CheckReport& r : result.reports) record(stats, r);
    // Membership fact: every index extending {phi_i} models phi_i.
    for (std::size_t i = 0; i < take; ++i) {
      CheckReport r;
      r.id = "compactness-upset";
      r.instance = "indices above {" + phi[i].name + "} model " + phi[i].name;
      r.lhs = true;
      std::uint64_t f = std::uint64_t{1} << i;
      for (std::uint64_t g = 1; g < (std::uint64_t{1} << take); ++g) {
        if ((f & g) != f) continue;
        std::vector<NamedFormula> subset;
        for (std::size_t s = 0; s < take; ++s)
          if (g & (std::uint64_t{1} << s)) subset.push_back(phi[s]);
        EvaluatedModel model = provider(subset);
        if (!satisfies(*model.system, phi[i].formula, model.eval)) r.lhs = false;
      }
      r.rhs = true;
      r.pass = r.lhs;
      record(stats, r);
    }
  }
  stats.pass = stats.failures == 0;
  return stats;
}

// ---------------------------------------------------------------------------
// Tower checks.

namespace {

FormulaGen::Config tower_generator_config() {
  SignaturePtr sig = order_signature();
  FormulaGen::Config config;
  for (const char* text : {"x =0 y", "x =0 zero", "x in[0] u", "(x, y) in[0,0] leq"})
    config.atoms.push_back(parse(text, *sig));
  config.quantifiable = {Term::variable("x", kFirst), Term::variable("y", kFirst),
                         Term::variable("u", kSet)};
  return config;
}

Evaluation tower_base_eval() {
  Evaluation ev;
  ev.set(Term::variable("x", kFirst), Elem::atom(0));
  ev.set(Term::variable("y", kFirst), Elem::atom(1));
  ev.set(Term::variable("u", kSet), Elem::set({Elem::atom(0)}));
  return ev;
}

std::vector<std::string> exponent_labels(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back("f" + std::to_string(i + 1));
  return out;
}

}  // namespace

SweepStats tower_checks(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "tower";
  std::vector<std::string> expo = exponent_labels(config.tower_exponent);
  FilterSpec d = FilterSpec::principal_ultrafilter(expo, expo.front());
  Tower tower =
      build_tower(make_order_base(), tower_base_eval(), expo, d, config.tower_depth, config.budget);

  // Carrier growth is iterated exponentiation.
  std::uint64_t expect = static_cast<std::uint64_t>(tower.levels.front()->carrier().size());
  for (int i = 0; i <= tower.depth(); ++i) {
    CheckReport r;
    r.id = "tower-carrier";
    r.instance = "level " + std::to_string(i);
    r.lhs = static_cast<std::uint64_t>(
                tower.levels[static_cast<std::size_t>(i)]->carrier().size()) == expect;
    r.rhs = true;
    r.pass = r.lhs;
    record(stats, r);
    std::uint64_t next = 1;
    for (int f = 0; f < config.tower_exponent; ++f) next *= expect;
    expect = next;
  }

  // Diagonal embeddings are injective homomorphisms.
  for (int i = 0; i < tower.depth(); ++i) {
    const System& lo = *tower.levels[static_cast<std::size_t>(i)];
    const System& hi = *tower.levels[static_cast<std::size_t>(i) + 1];
    const Mapping& u = tower.embeddings[static_cast<std::size_t>(i)];
    CheckReport r;
    r.id = "tower-embedding";
    r.instance = "u_" + std::to_string(i);
    bool diag = true;
    for (int p = 0; p < lo.carrier().size(); ++p)
      for (int f = 0; f < config.tower_exponent; ++f)
        if (tower.level_shapes[static_cast<std::size_t>(i)].project_atom(u.apply_atom(p), f) != p)
          diag = false;
    r.lhs = diag && is_homomorphism(u, lo, hi) && approx_injective(u, lo, hi, kFirst);
    r.rhs = true;
    r.pass = r.lhs;
    record(stats, r);
  }

  // Closed formulas true at the base stay true at every level.
  FormulaGen gen(tower_generator_config());
  std::uint64_t preserved = 0;
  for (const FormulaPtr& f : gen.canonical(config.formula_symbols)) {
    if (!is_closed(f)) continue;
    if (!satisfies(*tower.levels.front(), f, Evaluation{})) continue;
    ++preserved;
    for (int i = 1; i <= tower.depth(); ++i) {
      CheckReport r;
      r.id = "tower-preservation";
      r.instance = "level " + std::to_string(i) + " ; " + print(f);
      r.lhs = satisfies(*tower.levels[static_cast<std::size_t>(i)], f, Evaluation{});
      r.rhs = true;
      r.pass = r.lhs;
      record(stats, r);
    }
  }
  stats.note = std::to_string(preserved) + " base-true closed formulas checked per level";

  // The limit product and its maps.
  std::vector<std::string> level_labels;
  for (int i = 0; i <= tower.depth(); ++i) level_labels.push_back(std::to_string(i));
  FilterSpec level_filter = FilterSpec::principal_ultrafilter(level_labels, level_labels.back());
  TowerLimit limit = build_limit(tower, level_filter, expo.front(), config.budget);
  for (int i = 0; i <= tower.depth(); ++i) {
    const System& level = *tower.levels[static_cast<std::size_t>(i)];
    CheckReport r;
    r.id = "tower-limit-map";
    r.instance = "w_" + std::to_string(i);
    r.lhs = is_homomorphism(limit.w[static_cast<std::size_t>(i)], level, *limit.limit) &&
            approx_injective(limit.w[static_cast<std::size_t>(i)], level, *limit.limit, kFirst);
    r.rhs = true;
    r.pass = r.lhs;
    record(stats, r);
  }
  for (int i = 0; i < tower.depth(); ++i) {
    CheckReport r;
    r.id = "tower-limit-composition";
    r.instance = "w_" + std::to_string(i) + " vs w_" + std::to_string(i + 1) + " . u_" +
                 std::to_string(i);
    bool ok = true;
    int size = tower.levels[static_cast<std::size_t>(i)]->carrier().size();
    for (int p = 0; p < size; ++p) {
      int direct = limit.w[static_cast<std::size_t>(i)].apply_atom(p);
      int through = limit.w[static_cast<std::size_t>(i) + 1].apply_atom(
          tower.embeddings[static_cast<std::size_t>(i)].apply_atom(p));
      if (!limit.limit->eq_holds(kFirst, Elem::atom(direct), Elem::atom(through))) ok = false;
    }
    r.lhs = ok;
    r.rhs = true;
    r.pass = ok;
    record(stats, r);
  }

  stats.pass = stats.failures == 0;
  return stats;
}

SweepStats remark_witness_checks(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "remark-witnesses";
  std::vector<std::string> expo = exponent_labels(config.tower_exponent);
  FilterSpec d = FilterSpec::principal_ultrafilter(expo, expo.front());
  Tower tower =
      build_tower(make_order_base(), tower_base_eval(), expo, d, config.tower_depth, config.budget);
  for (int level = 1; level <= tower.depth(); ++level) {
    RemarkReport inv = inversion_partition_witnesses(tower, level);
    for (const PartitionWitness& w : inv.entries) {
      CheckReport r;
      r.id = "remark-inversion";
      r.instance = "level " + std::to_string(level) + " ; " + w.subject + " -> " + w.branch;
      r.lhs = w.decided && w.witness_ok;
      r.rhs = true;
      r.pass = r.lhs;
      record(stats, r);
    }
    RemarkReport ord = order_partition_witnesses(tower, level);
    for (const PartitionWitness& w : ord.entries) {
      CheckReport r;
      r.id = "remark-order";
      r.instance = "level " + std::to_string(level) + " ; " + w.subject + " -> " + w.branch;
      r.lhs = w.decided && w.witness_ok && w.branch != "neither";
      r.rhs = true;
      r.pass = r.lhs;
      record(stats, r);
    }
  }
  stats.pass = stats.failures == 0;
  return stats;
}

// ---------------------------------------------------------------------------
// The standard-semantics contrast.

SystemPtr los_quotient(const IndexedFamily& family, const FilterSpec& ultra,
                       Evaluation* quotient_eval, const Evaluation& crossed, Budget budget) {
  family.validate();
  if (ultra.classify() != FilterClass::Ultrafilter)
    throw ValidationError("the quotient needs an ultrafilter");
  ProductShape shape;
  for (const SystemPtr& f : family.factors) shape.factor_sizes.push_back(f->carrier().size());
  budget.check_terminal(shape.size(), "quotient carrier too large");
  int n = static_cast<int>(shape.size());

  auto almost_equal = [&](int p, int q) {
    std::uint64_t mask = 0;
    for (std::size_t g = 0; g < family.factors.size(); ++g)
      if (shape.project_atom(p, static_cast<int>(g)) ==
          shape.project_atom(q, static_cast<int>(g)))
        mask |= std::uint64_t{1} << g;
    return ultra.contains(mask);
  };

  std::vector<int> rep;  // class representative per product atom
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) {
    int found = -1;
    for (int r : reps)
      if (almost_equal(p, r)) {
        found = r;
        break;
      }
    if (found < 0) {
      reps.push_back(p);
      found = p;
    }
    rep.push_back(found);
  }
  std::vector<std::string> labels;
  std::map<int, int> class_index;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    class_index[reps[i]] = static_cast<int>(i);
    labels.push_back("[" + std::to_string(reps[i]) + "]");
  }

  const SignatureSpec& sig = *family.factors.front()->signature();
  std::map<std::string, Elem> constants;
  for (const auto& [t, names] : sig.constants()) {
    for (const std::string& name : names) {
      if (t.is_first_order()) {
        std::vector<int> choices;
        for (const SystemPtr& f : family.factors)
          choices.push_back(f->constant_value(name).atom_index());
        constants[name] = Elem::atom(class_index[rep[shape.atom_of(choices)]]);
      } else {
        // Membership of a class tuple holds when it holds almost
        // everywhere on representatives.
        const auto& parents = t.parent_types();
        std::vector<Elem> members;
        std::vector<int> idx(parents.size(), 0);
        while (true) {
          std::uint64_t mask = 0;
          for (std::size_t g = 0; g < family.factors.size(); ++g) {
            std::vector<Elem> parts;
            for (std::size_t s = 0; s < parents.size(); ++s)
              parts.push_back(Elem::atom(
                  shape.project_atom(reps[static_cast<std::size_t>(idx[s])], static_cast<int>(g))));
            Elem arg = parts.size() == 1 ? parts[0] : Elem::tuple(parts);
            if (family.factors[g]->constant_value(name).contains(arg))
              mask |= std::uint64_t{1} << g;
          }
          if (ultra.contains(mask)) {
            std::vector<Elem> parts;
            for (std::size_t s = 0; s < parents.size(); ++s)
              parts.push_back(Elem::atom(static_cast<int>(idx[s])));
            members.push_back(parts.size() == 1 ? parts[0] : Elem::tuple(parts));
          }
          std::size_t s = idx.size();
          bool done = false;
          while (s-- > 0) {
            if (++idx[s] < static_cast<int>(reps.size())) break;
            idx[s] = 0;
            if (s == 0) done = true;
          }
          if (done) break;
        }
        constants[name] = Elem::set(std::move(members));
      }
    }
  }
  if (quotient_eval) {
    for (const auto& [var, value] : crossed.values()) {
      if (!var.type.is_first_order()) continue;
      quotient_eval->set(var, Elem::atom(class_index[rep[value.atom_index()]]));
    }
  }
  return System::canonical(family.factors.front()->signature(), Carrier(labels),
                           std::move(constants), budget);
}

SweepStats standard_counterexample_search(const SuiteConfig& config) {
  SweepStats stats;
  stats.name = "counterexample-standard";
  SignaturePtr sig = harness_signature();

  // Canonical evaluated systems: plain = and membership everywhere, so
  // the generalized and standard modes agree factor-wise.
  std::vector<PoolEntry> search_pool;
  auto add = [&](const std::string& name, Evaluation ev) {
    search_pool.push_back(
        {name, System::canonical(sig, Carrier({"a", "b"}), harness_constants(0, {0})),
         std::move(ev)});
  };
  add("s1", make_eval(0, 1, {0}, {0}));
  add("s2", make_eval(0, 0, {0}, {0, 1}));
  add("s3", make_eval(1, 0, {0, 1}, {1}));
  add("s4", make_eval(0, 0, {1}, {1}));
  add("s5", make_eval(1, 1, {0, 1}, {0, 1}));
  add("s6", make_eval(0, 1, {0}, {1}));

  std::vector<FormulaPtr> formulas;
  for (const char* text : {"u =[0] v", "x =0 y", "x in[0] u", "u =[0] C", "!(u =[0] v)",
                           "u =[0] v & x =0 y"})
    formulas.push_back(parse(text, *sig));

  CheckReport second_order_witness, first_order_witness;
  std::uint64_t standard_failures = 0;
  for (const PoolEntry& a : search_pool)
    for (const PoolEntry& b : search_pool) {
      IndexedFamily fam;
      fam.index_labels = {"f1", "f2"};
      fam.factors = {a.system, b.system};
      fam.evaluations = {a.eval, b.eval};
      for (const FilterSpec& ultra : FilterSpec::all_ultrafilters(fam.index_labels)) {
        InfraProduct product = infraproduct(fam, ultra, config.budget);
        Evaluation crossed = crossing(product);
        for (const FormulaPtr& f : formulas) {
          CheckReport gen = check_infrafiltration(product, crossed, f);
          gen.instance = a.name + "|" + b.name + " ; " + gen.instance;
          record(stats, gen);  // the generalized side must always pass
          CheckReport st = check_standard_filtration(product, crossed, f);
          st.instance = a.name + "|" + b.name + " ; " + st.instance;
          if (!st.pass && gen.pass) {
            ++standard_failures;
            bool first_order_only = true;
            for (const Term& v : free_variables(f))
              if (!v.type.is_first_order()) first_order_only = false;
            if (first_order_only && first_order_witness.instance.empty())
              first_order_witness = st;
            if (!first_order_only && second_order_witness.instance.empty())
              second_order_witness = st;
          }
        }
      }
    }
  if (!second_order_witness.instance.empty()) stats.samples.push_back(second_order_witness);
  if (!first_order_witness.instance.empty()) stats.samples.push_back(first_order_witness);

  // Sanity oracle: the factorized first-order quotient satisfies the
  // classical equivalence on the order signature.
  SignaturePtr osig = order_signature();
  FormulaGen::Config qconfig;
  for (const char* text : {"x =0 y", "x =0 zero", "(x, y) in[0,0] leq"})
    qconfig.atoms.push_back(parse(text, *osig));
  qconfig.quantifiable = {Term::variable("x", kFirst), Term::variable("y", kFirst)};
  FormulaGen qgen(qconfig);

  SystemPtr base = make_order_base();
  std::uint64_t quotient_failures = 0;
  for (int size = 2; size <= std::min(config.max_index, 3); ++size) {
    IndexedFamily fam;
    std::mt19937_64 rng(config.seed + 11 + static_cast<std::uint64_t>(size));
    for (int i = 0; i < size; ++i) {
      fam.index_labels.push_back("f" + std::to_string(i + 1));
      fam.factors.push_back(base);
      Evaluation ev;
      ev.set(Term::variable("x", kFirst), Elem::atom(static_cast<int>(rng() % 2)));
      ev.set(Term::variable("y", kFirst), Elem::atom(static_cast<int>(rng() % 2)));
      fam.evaluations.push_back(ev);
    }
    for (const FilterSpec& ultra : FilterSpec::all_ultrafilters(fam.index_labels)) {
      InfraProduct product = infraproduct(fam, ultra, config.budget);
      Evaluation crossed = crossing(product);
      Evaluation qeval;
      SystemPtr quotient = los_quotient(fam, ultra, &qeval, crossed, config.budget);
      for (const FormulaPtr& f : qgen.canonical(config.formula_symbols)) {
        CheckReport r;
        r.id = "los-quotient";
        r.instance = "|F|=" + std::to_string(size) + " ; " + print(f);
        r.lhs = satisfies(*quotient, f, qeval, SatMode::Standard);
        std::uint64_t mask = 0;
        for (std::size_t g = 0; g < fam.factors.size(); ++g)
          if (satisfies(*fam.factors[g], f, fam.evaluations[g], SatMode::Standard))
            mask |= std::uint64_t{1} << g;
        r.rhs = ultra.contains(mask);
        r.pass = r.lhs == r.rhs;
        ++stats.instances;
        if (!r.pass) {
          ++quotient_failures;
          if (stats.samples.size() < 8) stats.samples.push_back(r);
        }
      }
    }
  }

  stats.pass = stats.failures == 0 && standard_failures > 0 &&
               !second_order_witness.instance.empty() &&
               !first_order_witness.instance.empty() && quotient_failures == 0;
  stats.note = "standard-mode equivalence failures found: " + std::to_string(standard_failures) +
               "; factorized first-order quotient failures: " + std::to_string(quotient_failures);
  return stats;
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
  return {"worked-example",   "exemplar-propositions", "normalization",
          "evaluation-equivalence", "infrafiltration",  "filter-boundary",
          "projection-lemmas", "compactness",          "tower",
          "remark-witnesses", "counterexample-standard"};
}

SuiteResult run_suite(const SuiteConfig& config, const std::vector<std::string>& suites) {
  auto wanted = [&](const std::string& name) {
    if (suites.empty()) return true;
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };
  SuiteResult result;
  result.pass = true;
  auto push = [&](SweepStats stats) {
    result.pass = result.pass && stats.pass;
    result.sections.push_back(std::move(stats));
  };
  if (wanted("worked-example")) push(worked_example_checks(config));
  if (wanted("exemplar-propositions")) push(exemplar_proposition_checks(config));
  if (wanted("normalization")) push(normalization_sweep(config));
  if (wanted("evaluation-equivalence")) push(evaluation_equivalence_sweep(config));
  if (wanted("infrafiltration")) push(infrafiltration_sweep(config));
  if (wanted("filter-boundary")) push(filter_boundary_sweep(config));
  if (wanted("projection-lemmas")) push(projection_lemma_sweep(config));
  if (wanted("compactness")) push(compactness_checks(config));
  if (wanted("tower")) push(tower_checks(config));
  if (wanted("remark-witnesses")) push(remark_witness_checks(config));
  if (wanted("counterexample-standard")) push(standard_counterexample_search(config));
  return result;
}

}  // namespace infralog
