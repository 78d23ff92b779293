#include "infralog/tower.hpp"

#include "infralog/satisfaction.hpp"

namespace infralog {

Tower build_tower(SystemPtr base, Evaluation base_eval, std::vector<std::string> exponent_labels,
                  FilterSpec filter, int depth, Budget budget) {
  if (depth < 0) throw ValidationError("tower depth must be nonnegative");
  Tower tower;
  tower.exponent_labels = exponent_labels;
  tower.filter = filter;
  tower.levels.push_back(std::move(base));
  tower.level_evals.push_back(std::move(base_eval));
  for (int i = 0; i < depth; ++i) {
    InfraProduct power = infrapower(tower.levels.back(), tower.level_evals.back(),
                                    exponent_labels, filter, budget);
    tower.level_shapes.push_back(power.shape);
    tower.level_evals.push_back(crossing(power));
    int source_size = tower.levels.back()->carrier().size();
    Mapping diag;
    diag.target_size = power.system->carrier().size();
    for (int p = 0; p < source_size; ++p) {
      std::vector<int> choices(exponent_labels.size(), p);
      diag.atom_map.push_back(power.shape.atom_of(choices));
    }
    tower.embeddings.push_back(std::move(diag));
    tower.levels.push_back(power.system);
  }
  return tower;
}

TowerLimit build_limit(const Tower& tower, const FilterSpec& level_filter,
                       const std::string& anchor_label, Budget budget) {
  if (level_filter.index_size() != static_cast<int>(tower.levels.size()))
    throw ValidationError("level filter must index the tower levels");
  int anchor = -1;
  for (std::size_t i = 0; i < tower.exponent_labels.size(); ++i)
    if (tower.exponent_labels[i] == anchor_label) anchor = static_cast<int>(i);
  if (anchor < 0) throw ValidationError("anchor '" + anchor_label + "' not in the exponent");

  IndexedFamily family;
  family.index_labels = level_filter.index_labels();
  family.factors = tower.levels;
  family.evaluations = tower.level_evals;
  InfraProduct prod = infraproduct(family, level_filter, budget);

  TowerLimit limit;
  limit.limit = prod.system;
  limit.limit_shape = prod.shape;
  limit.limit_eval = crossing(prod);
  limit.level_filter = level_filter;
  limit.anchor_index = anchor;

  int n = tower.depth();
  for (int i = 0; i <= n; ++i) {
    Mapping w;
    w.target_size = prod.system->carrier().size();
    int level_size = tower.levels[static_cast<std::size_t>(i)]->carrier().size();
    for (int p = 0; p < level_size; ++p) {
      std::vector<int> choices(static_cast<std::size_t>(n + 1), 0);
      choices[static_cast<std::size_t>(i)] = p;
      // Climb with the diagonal embeddings above i.
      for (int j = i; j < n; ++j)
        choices[static_cast<std::size_t>(j + 1)] =
            tower.embeddings[static_cast<std::size_t>(j)].apply_atom(
                choices[static_cast<std::size_t>(j)]);
      // Descend through the anchor coordinate below i.
      for (int j = i; j > 0; --j)
        choices[static_cast<std::size_t>(j - 1)] =
            tower.level_shapes[static_cast<std::size_t>(j - 1)].project_atom(
                choices[static_cast<std::size_t>(j)], anchor);
      w.atom_map.push_back(prod.shape.atom_of(choices));
    }
    limit.w.push_back(std::move(w));
  }
  return limit;
}

SubmodelReport check_submodel(const Mapping& u, const System& source, const System& ambient,
                              const std::vector<NamedFormula>& closed_formulas) {
  SubmodelReport report;
  for (const NamedFormula& nf : closed_formulas) {
    SubmodelReport::FormulaVerdict v;
    v.name = nf.name;
    v.source_sat = satisfies(source, nf.formula, Evaluation{});
    v.ambient_sat = satisfies(ambient, nf.formula, Evaluation{});
    report.formulas.push_back(std::move(v));
  }

  report.constants_realized = is_homomorphism(u, source, ambient);

  Type t0 = Type::first_order();
  report.forward_equality_preserved = true;
  for (const Elem& p : source.terminal_of(t0))
    for (const Elem& q : source.terminal_of(t0))
      if (source.eq_holds(t0, p, q) && !ambient.eq_holds(t0, u.apply(p), u.apply(q)))
        report.forward_equality_preserved = false;
  report.equality_reflected = approx_injective(u, source, ambient, t0);

  report.belonging_restriction_agrees = true;
  for (const auto& [t, names] : source.signature()->constants()) {
    if (!t.is_bracket()) continue;
    for (const std::string& name : names) {
      const Elem& s = source.constant_value(name);
      const Elem& a = ambient.constant_value(name);
      for (const Elem& p : source.terminal_of(semitype_of(t))) {
        if (source.in_holds(t, p, s) != ambient.in_holds(t, u.apply(p), a))
          report.belonging_restriction_agrees = false;
      }
    }
  }
  return report;
}

namespace {

// Coordinate projection of a level-i atom (i >= 1).
int coordinate(const Tower& tower, int level, int atom, int f) {
  return tower.level_shapes[static_cast<std::size_t>(level - 1)].project_atom(atom, f);
}

}  // namespace

RemarkReport inversion_partition_witnesses(const Tower& tower, int level) {
  if (level < 1 || level > tower.depth())
    throw ValidationError("witness level must be between 1 and the tower depth");
  const System& here = *tower.levels[static_cast<std::size_t>(level)];
  const System& below = *tower.levels[static_cast<std::size_t>(level - 1)];
  Type t0 = Type::first_order();
  Type rho = Type::bracket({t0, t0});
  const Elem zero_below = below.constant_value("zero");
  const Elem zero_here = here.constant_value("zero");
  const Elem inv_below = below.constant_value("inv");
  const Elem inv_here = here.constant_value("inv");
  int exponent = static_cast<int>(tower.exponent_labels.size());

  RemarkReport report;
  report.axiom = "A3";
  report.level = level;
  for (int p = 0; p < here.carrier().size(); ++p) {
    PartitionWitness w;
    w.subject = here.carrier().label(p);
    std::uint64_t zer = 0;
    for (int f = 0; f < exponent; ++f)
      if (below.eq_holds(t0, Elem::atom(coordinate(tower, level, p, f)), zero_below))
        zer |= std::uint64_t{1} << f;
    std::uint64_t coz = tower.filter.full_mask() & ~zer;
    bool zer_in = tower.filter.contains(zer);
    bool coz_in = tower.filter.contains(coz);
    w.decided = zer_in != coz_in;
    if (here.eq_holds(t0, Elem::atom(p), zero_here)) {
      w.branch = "zer";
      // Equivalence to zero must come exactly from the zero set being in
      // the ultrafilter.
      w.witness_ok = zer_in;
    } else {
      w.branch = "coz";
      w.witness_ok = coz_in;
      // Build the coordinatewise inverse on the cozero set and keep the
      // original coordinates elsewhere.
      std::vector<int> inverse_choices;
      bool built = true;
      for (int f = 0; f < exponent; ++f) {
        int pf = coordinate(tower, level, p, f);
        if (!(coz & (std::uint64_t{1} << f))) {
          inverse_choices.push_back(pf);
          continue;
        }
        int found = -1;
        for (int q = 0; q < below.carrier().size(); ++q) {
          if (below.in_holds(rho, Elem::tuple({Elem::atom(pf), Elem::atom(q)}), inv_below)) {
            found = q;
            break;
          }
        }
        if (found < 0) {
          built = false;
          break;
        }
        inverse_choices.push_back(found);
      }
      if (!built) {
        w.witness_ok = false;
      } else {
        int p_inv = tower.level_shapes[static_cast<std::size_t>(level - 1)].atom_of(inverse_choices);
        w.witness_ok = w.witness_ok &&
                       here.in_holds(rho, Elem::tuple({Elem::atom(p), Elem::atom(p_inv)}), inv_here);
      }
    }
    if (!w.witness_ok || !w.decided) report.all_ok = false;
    report.entries.push_back(std::move(w));
  }
  return report;
}

RemarkReport order_partition_witnesses(const Tower& tower, int level) {
  if (level < 1 || level > tower.depth())
    throw ValidationError("witness level must be between 1 and the tower depth");
  const System& here = *tower.levels[static_cast<std::size_t>(level)];
  const System& below = *tower.levels[static_cast<std::size_t>(level - 1)];
  Type t0 = Type::first_order();
  Type rho = Type::bracket({t0, t0});
  const Elem leq_below = below.constant_value("leq");
  const Elem leq_here = here.constant_value("leq");
  int exponent = static_cast<int>(tower.exponent_labels.size());

  RemarkReport report;
  report.axiom = "A19";
  report.level = level;
  for (int p = 0; p < here.carrier().size(); ++p) {
    for (int q = 0; q < here.carrier().size(); ++q) {
      PartitionWitness w;
      w.subject = here.carrier().label(p) + " vs " + here.carrier().label(q);
      std::uint64_t le_set = 0, strict_reverse = 0;
      for (int f = 0; f < exponent; ++f) {
        Elem pf = Elem::atom(coordinate(tower, level, p, f));
        Elem qf = Elem::atom(coordinate(tower, level, q, f));
        if (below.in_holds(rho, Elem::tuple({pf, qf}), leq_below))
          le_set |= std::uint64_t{1} << f;
        else if (below.in_holds(rho, Elem::tuple({qf, pf}), leq_below) &&
                 !below.eq_holds(t0, qf, pf))
          strict_reverse |= std::uint64_t{1} << f;
      }
      bool g_in = tower.filter.contains(le_set);
      bool h_in = tower.filter.contains(strict_reverse);
      w.decided = g_in != h_in;
      if (g_in) {
        w.branch = "G";
        w.witness_ok =
            here.in_holds(rho, Elem::tuple({Elem::atom(p), Elem::atom(q)}), leq_here);
      } else if (h_in) {
        w.branch = "H'";
        w.witness_ok =
            here.in_holds(rho, Elem::tuple({Elem::atom(q), Elem::atom(p)}), leq_here);
      } else {
        w.branch = "neither";
        w.witness_ok = false;
      }
      if (!w.witness_ok || !w.decided) report.all_ok = false;
      report.entries.push_back(std::move(w));
    }
  }
  return report;
}

SignaturePtr order_signature() {
  static SignaturePtr sig = [] {
    Type t0 = Type::first_order();
    Type kappa = Type::bracket({t0});
    Type rho = Type::bracket({t0, t0});
    std::map<Type, std::vector<std::string>> constants;
    constants[t0] = {"zero", "one"};
    constants[rho] = {"inv", "leq"};
    return make_signature({t0, kappa, rho}, std::move(constants));
  }();
  return sig;
}

SystemPtr make_order_base() {
  Carrier carrier({"z", "o"});
  Elem z = Elem::atom(0), o = Elem::atom(1);
  std::map<std::string, Elem> constants;
  constants["zero"] = z;
  constants["one"] = o;
  constants["inv"] = Elem::set({Elem::tuple({o, o})});
  constants["leq"] =
      Elem::set({Elem::tuple({z, z}), Elem::tuple({z, o}), Elem::tuple({o, o})});
  return System::canonical(order_signature(), carrier, std::move(constants));
}

}  // namespace infralog
