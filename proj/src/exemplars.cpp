#include "infralog/exemplars.hpp"

#include <functional>
#include <random>

#include "infralog/structure.hpp"

namespace infralog {

namespace {

using AtomEq = std::function<bool(int, int)>;

bool semitype_eq(const Type& bracket_t, const AtomEq& eq0, const Elem& a, const Elem& b) {
  if (bracket_t.parent_types().size() == 1) return eq0(a.atom_index(), b.atom_index());
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (!eq0(pa[i].atom_index(), pb[i].atom_index())) return false;
  return true;
}

bool mutual_approx(const Type& t, const AtomEq& eq0, const Elem& P, const Elem& Q) {
  for (const Elem& p : P.members()) {
    bool hit = false;
    for (const Elem& q : Q.members())
      if (semitype_eq(t, eq0, q, p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  for (const Elem& q : Q.members()) {
    bool hit = false;
    for (const Elem& p : P.members())
      if (semitype_eq(t, eq0, p, q)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool has_witness(const Type& t, const AtomEq& eq0, const Elem& p, const Elem& P) {
  for (const Elem& q : P.members())
    if (semitype_eq(t, eq0, p, q)) return true;
  return false;
}

std::map<Type, Relation> pattern_equalities(const SignatureSpec& sig, const AtomEq& eq0) {
  std::map<Type, Relation> out;
  out[Type::first_order()] = Relation::intensional(
      [eq0](const Elem& a, const Elem& b) { return eq0(a.atom_index(), b.atom_index()); });
  for (const Type& t : sig.types().belonging_subdomain()) {
    out[t] = Relation::intensional(
        [t, eq0](const Elem& P, const Elem& Q) { return mutual_approx(t, eq0, P, Q); });
  }
  return out;
}

std::map<Type, Relation> pattern_belongings(const SignatureSpec& sig, const AtomEq& eq0) {
  std::map<Type, Relation> out;
  for (const Type& t : sig.types().belonging_subdomain()) {
    out[t] = Relation::intensional(
        [t, eq0](const Elem& p, const Elem& P) { return has_witness(t, eq0, p, P); });
  }
  return out;
}

std::shared_ptr<System> pattern_system_from_eq(SignaturePtr sig, Carrier carrier, AtomEq eq0,
                                               std::map<std::string, Elem> constants,
                                               Budget budget) {
  for (const Type& t : sig->types().types()) {
    if (t.is_bracket())
      for (const Type& p : t.parent_types())
        if (!p.is_first_order())
          throw ValidationError("witness-pattern systems need first-order parents");
  }
  auto eqs = pattern_equalities(*sig, eq0);
  auto ins = pattern_belongings(*sig, eq0);
  return std::make_shared<System>(std::move(sig), std::move(carrier), std::move(constants),
                                  std::move(eqs), std::move(ins), budget);
}

}  // namespace

SystemPtr make_fraction_system(int bound, Budget budget) {
  if (bound < 1) throw ValidationError("fraction bound must be positive");
  std::vector<std::string> labels;
  std::vector<std::pair<long long, long long>> fractions;
  for (long long m = -bound; m <= bound; ++m)
    for (long long s = -bound; s <= bound; ++s) {
      if (s == 0) continue;
      fractions.emplace_back(m, s);
      labels.push_back(std::to_string(m) + "/" + std::to_string(s));
    }
  AtomEq eq0 = [fractions](int i, int j) {
    const auto& [m1, s1] = fractions[static_cast<std::size_t>(i)];
    const auto& [m2, s2] = fractions[static_cast<std::size_t>(j)];
    return m1 * s2 == m2 * s1;
  };
  SignaturePtr sig = make_signature({Type::first_order(), Type::bracket({Type::first_order()})});
  auto system = pattern_system_from_eq(sig, Carrier(std::move(labels)), std::move(eq0), {}, budget);
  system->set_generator_note("{\"kind\":\"fractions\",\"N\":" + std::to_string(bound) + "}");
  return system;
}

std::optional<int> fraction_index(const System& system, long long m, long long s) {
  return system.carrier().index_of(std::to_string(m) + "/" + std::to_string(s));
}

SystemPtr make_segment_system(int bound, Budget budget) {
  if (bound < 1) throw ValidationError("grid bound must be positive");
  struct Segment {
    int x1, y1, x2, y2;  // endpoints in lexicographic order
  };
  std::vector<Segment> segments;
  std::vector<std::string> labels;
  int side = bound + 1;
  auto point = [side](int idx) { return std::pair{idx / side, idx % side}; };
  int points = side * side;
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) {
      auto [x1, y1] = point(i);
      auto [x2, y2] = point(j);
      segments.push_back({x1, y1, x2, y2});
      labels.push_back("(" + std::to_string(x1) + "," + std::to_string(y1) + ")-(" +
                       std::to_string(x2) + "," + std::to_string(y2) + ")");
    }
  // Lexicographic endpoint order is preserved by translation, so two
  // segments are translates iff their displacement vectors agree.
  AtomEq eq0 = [segments](int i, int j) {
    const Segment& a = segments[static_cast<std::size_t>(i)];
    const Segment& b = segments[static_cast<std::size_t>(j)];
    return a.x2 - a.x1 == b.x2 - b.x1 && a.y2 - a.y1 == b.y2 - b.y1;
  };
  SignaturePtr sig = make_signature({Type::first_order(), Type::bracket({Type::first_order()})});
  auto system = pattern_system_from_eq(sig, Carrier(std::move(labels)), std::move(eq0), {}, budget);
  system->set_generator_note("{\"kind\":\"segments\",\"G\":" + std::to_string(bound) + "}");
  return system;
}

std::optional<int> segment_index(const System& system, int x1, int y1, int x2, int y2) {
  if (std::pair{x1, y1} > std::pair{x2, y2}) {
    std::swap(x1, x2);
    std::swap(y1, y2);
  }
  return system.carrier().index_of("(" + std::to_string(x1) + "," + std::to_string(y1) + ")-(" +
                                   std::to_string(x2) + "," + std::to_string(y2) + ")");
}

SystemPtr make_pattern_system(SignaturePtr sig, Carrier carrier, std::vector<int> class_of,
                              std::map<std::string, Elem> constants, Budget budget) {
  if (static_cast<int>(class_of.size()) != carrier.size())
    throw ValidationError("class assignment must cover the carrier");
  AtomEq eq0 = [class_of](int i, int j) {
    return class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)];
  };
  return pattern_system_from_eq(std::move(sig), std::move(carrier), std::move(eq0),
                                std::move(constants), budget);
}

GeneratedSystem random_system(std::uint64_t seed, SignaturePtr sig, int carrier_size,
                              double coarsening_probability, double perturb_probability,
                              Budget budget) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  std::vector<std::string> labels;
  for (int i = 0; i < carrier_size; ++i) labels.push_back("a" + std::to_string(i));
  Carrier carrier(labels);

  std::vector<int> class_of(static_cast<std::size_t>(carrier_size));
  int next_class = 0;
  for (int i = 0; i < carrier_size; ++i) {
    if (i > 0 && coin(rng) < coarsening_probability) {
      class_of[static_cast<std::size_t>(i)] =
          class_of[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i))];
    } else {
      class_of[static_cast<std::size_t>(i)] = next_class++;
    }
  }

  std::map<std::string, Elem> constants;
  for (const auto& [t, names] : sig->constants()) {
    for (const std::string& name : names) {
      const ElemList& dom = terminal(t, carrier, budget);
      constants[name] = dom[rng() % dom.size()];
    }
  }

  AtomEq eq0 = [class_of](int i, int j) {
    return class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)];
  };
  std::map<Type, Relation> eqs = pattern_equalities(*sig, eq0);
  std::map<Type, Relation> ins = pattern_belongings(*sig, eq0);

  // Optional perturbation: spike extra pairs into the set-level relations.
  // The results stay legal systems but may lose symmetry, transitivity or
  // the change-of-equals property.
  if (perturb_probability > 0.0) {
    for (const Type& t : sig->types().belonging_subdomain()) {
      if (coin(rng) >= perturb_probability) continue;
      const ElemList sets = terminal(t, carrier, budget);
      const ElemList args = terminal(semitype_of(t), carrier, budget);
      auto extra_eq = std::make_shared<std::set<std::pair<Elem, Elem>>>();
      auto extra_in = std::make_shared<std::set<std::pair<Elem, Elem>>>();
      int spikes = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < spikes; ++k) {
        extra_eq->insert({sets[rng() % sets.size()], sets[rng() % sets.size()]});
        extra_in->insert({args[rng() % args.size()], sets[rng() % sets.size()]});
      }
      Relation base_eq = eqs[t];
      eqs[t] = Relation::intensional([base_eq, extra_eq](const Elem& a, const Elem& b) {
        return base_eq.holds(a, b) || extra_eq->count({a, b}) != 0;
      });
      Relation base_in = ins[t];
      ins[t] = Relation::intensional([base_in, extra_in](const Elem& a, const Elem& b) {
        return base_in.holds(a, b) || extra_in->count({a, b}) != 0;
      });
    }
  }

  auto system = std::make_shared<const System>(sig, carrier, std::move(constants), std::move(eqs),
                                               std::move(ins), budget);
  GeneratedSystem out;
  out.system = system;
  out.equality_axioms_hold = holds_equality_axioms(*system);
  return out;
}

namespace {

// Union-find over the system's own first-order equality.
std::vector<int> first_order_classes(const System& system) {
  Type t0 = Type::first_order();
  int n = system.carrier().size();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    cls[static_cast<std::size_t>(i)] = next;
    for (int j = i + 1; j < n; ++j)
      if (cls[static_cast<std::size_t>(j)] < 0 &&
          system.eq_holds(t0, Elem::atom(i), Elem::atom(j)))
        cls[static_cast<std::size_t>(j)] = next;
    ++next;
  }
  return cls;
}

bool check_first_order_equivalence(const System& system, std::uint64_t& steps) {
  Type t0 = Type::first_order();
  int n = system.carrier().size();
  for (int a = 0; a < n; ++a)
    if (!system.eq_holds(t0, Elem::atom(a), Elem::atom(a))) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!system.eq_holds(t0, Elem::atom(a), Elem::atom(b))) continue;
      if (!system.eq_holds(t0, Elem::atom(b), Elem::atom(a))) return false;
      for (int c = 0; c < n; ++c) {
        ++steps;
        if (system.eq_holds(t0, Elem::atom(b), Elem::atom(c)) &&
            !system.eq_holds(t0, Elem::atom(a), Elem::atom(c)))
          return false;
      }
    }
  return true;
}

Elem random_subset(std::mt19937_64& rng, int n) {
  std::vector<Elem> members;
  for (int i = 0; i < n; ++i)
    if (rng() & 1) members.push_back(Elem::atom(i));
  return Elem::set(std::move(members));
}

// Replaces each member by a random member of its class; keeps the trace
// on classes, so the result is equivalent to the input in a balanced
// system.
Elem class_preserving_resample(std::mt19937_64& rng, const Elem& P, const std::vector<int>& cls,
                               const std::vector<std::vector<int>>& members_of) {
  std::vector<Elem> out;
  for (const Elem& p : P.members()) {
    const auto& pool = members_of[static_cast<std::size_t>(cls[static_cast<std::size_t>(p.atom_index())])];
    out.push_back(Elem::atom(pool[rng() % pool.size()]));
  }
  return Elem::set(std::move(out));
}

PropositionReport quotient_route(const System& system, const Type& sigma, std::uint64_t seed) {
  PropositionReport report;
  report.route = "class-quotient";
  std::uint64_t steps = 0;
  report.first_order_equivalence = check_first_order_equivalence(system, steps);
  if (!report.first_order_equivalence) return report;

  Type t0 = Type::first_order();
  int n = system.carrier().size();
  std::vector<int> cls = first_order_classes(system);
  int k = 0;
  for (int c : cls) k = std::max(k, c + 1);
  report.classes = k;
  if (k > 20) throw BudgetExceeded("too many first-order classes for the quotient route",
                                   static_cast<std::uint64_t>(k), 20);
  std::vector<std::vector<int>> members_of(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) members_of[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])].push_back(i);

  std::uint64_t sig_count = std::uint64_t{1} << k;
  std::vector<Elem> rep_set(sig_count);
  for (std::uint64_t s = 0; s < sig_count; ++s) {
    std::vector<Elem> members;
    for (int c = 0; c < k; ++c)
      if (s & (std::uint64_t{1} << c)) members.push_back(Elem::atom(members_of[static_cast<std::size_t>(c)][0]));
    rep_set[s] = Elem::set(std::move(members));
  }

  auto signature_of = [&](const Elem& P) {
    std::uint64_t s = 0;
    for (const Elem& p : P.members())
      s |= std::uint64_t{1} << cls[static_cast<std::size_t>(p.atom_index())];
    return s;
  };

  std::mt19937_64 rng(seed);

  // Regularity: belonging matches the witness membership, exhaustively
  // over every atom against every signature representative, then over
  // seeded random subsets.
  report.regular = true;
  for (int a = 0; a < n && report.regular; ++a) {
    for (std::uint64_t s = 0; s < sig_count; ++s) {
      ++steps;
      bool lhs = system.in_holds(sigma, Elem::atom(a), rep_set[s]);
      bool witness = false;
      for (const Elem& q : rep_set[s].members())
        if (system.eq_holds(t0, Elem::atom(a), q)) {
          witness = true;
          break;
        }
      if (lhs != witness) {
        report.regular = false;
        break;
      }
    }
  }
  for (int trial = 0; trial < 4000 && report.regular; ++trial) {
    Elem P = random_subset(rng, n);
    Elem p = Elem::atom(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    ++steps;
    bool lhs = system.in_holds(sigma, p, P);
    bool witness = false;
    for (const Elem& q : P.members())
      if (system.eq_holds(t0, p, q)) {
        witness = true;
        break;
      }
    if (lhs != witness) report.regular = false;
  }

  // Balance: set equality matches mutual approximation. Exhaustive over
  // all signature pairs of small support plus the diagonal, then random
  // subset pairs, both same-signature and independent.
  auto honest_balance = [&](const Elem& P, const Elem& Q) {
    ++steps;
    bool lhs = system.eq_holds(sigma, P, Q);
    bool rhs = true;
    for (const Elem& p : P.members()) {
      bool hit = false;
      for (const Elem& q : Q.members())
        if (system.eq_holds(t0, q, p)) {
          hit = true;
          break;
        }
      if (!hit) {
        rhs = false;
        break;
      }
    }
    if (rhs)
      for (const Elem& q : Q.members()) {
        bool hit = false;
        for (const Elem& p : P.members())
          if (system.eq_holds(t0, p, q)) {
            hit = true;
            break;
          }
        if (!hit) {
          rhs = false;
          break;
        }
      }
    return lhs == rhs;
  };
  report.balanced = true;
  std::vector<std::uint64_t> small_sigs;
  for (std::uint64_t s = 0; s < sig_count; ++s)
    if (std::popcount(s) <= 2) small_sigs.push_back(s);
  for (std::uint64_t s : small_sigs)
    for (std::uint64_t t : small_sigs)
      if (!honest_balance(rep_set[s], rep_set[t])) report.balanced = false;
  for (std::uint64_t s = 0; s < sig_count && report.balanced; ++s)
    if (!honest_balance(rep_set[s], rep_set[s])) report.balanced = false;
  for (int trial = 0; trial < 4000 && report.balanced; ++trial) {
    Elem P = random_subset(rng, n);
    Elem Q = (trial & 1) ? class_preserving_resample(rng, P, cls, members_of)
                         : random_subset(rng, n);
    if (!honest_balance(P, Q)) report.balanced = false;
    if (signature_of(P) == signature_of(Q) && !system.eq_holds(sigma, P, Q))
      report.balanced = false;
  }

  // Extensionality: equality matches mutual belonging-inclusion, on
  // seeded random pairs plus all signature representatives against the
  // resampled variants.
  auto honest_extensional = [&](const Elem& P, const Elem& Q) {
    ++steps;
    bool lhs = system.eq_holds(sigma, P, Q);
    bool rhs = true;
    for (int a = 0; a < n; ++a) {
      bool in_p = system.in_holds(sigma, Elem::atom(a), P);
      bool in_q = system.in_holds(sigma, Elem::atom(a), Q);
      if (in_p != in_q) {
        rhs = false;
        break;
      }
    }
    return lhs == rhs;
  };
  report.extensional = true;
  for (int trial = 0; trial < 3000 && report.extensional; ++trial) {
    Elem P = random_subset(rng, n);
    Elem Q = (trial & 1) ? class_preserving_resample(rng, P, cls, members_of)
                         : random_subset(rng, n);
    if (!honest_extensional(P, Q)) report.extensional = false;
  }
  for (std::uint64_t s = 0; s < sig_count && report.extensional; ++s) {
    Elem Q = class_preserving_resample(rng, rep_set[s], cls, members_of);
    if (!honest_extensional(rep_set[s], Q)) report.extensional = false;
  }

  // Equality axioms at the set level: symmetry and transitivity on random
  // triples, and the change-of-equals biconditional with equivalent
  // first-order pairs (exhaustive) against resampled equal sets.
  report.equality_axioms = true;
  for (int trial = 0; trial < 2000 && report.equality_axioms; ++trial) {
    Elem P = random_subset(rng, n);
    Elem Q = class_preserving_resample(rng, P, cls, members_of);
    Elem R = (trial & 1) ? class_preserving_resample(rng, Q, cls, members_of) : random_subset(rng, n);
    ++steps;
    if (system.eq_holds(sigma, P, Q) != system.eq_holds(sigma, Q, P))
      report.equality_axioms = false;
    if (system.eq_holds(sigma, P, Q) && system.eq_holds(sigma, Q, R) &&
        !system.eq_holds(sigma, P, R))
      report.equality_axioms = false;
  }
  for (int a = 0; a < n && report.equality_axioms; ++a)
    for (int b = 0; b < n && report.equality_axioms; ++b) {
      if (!system.eq_holds(t0, Elem::atom(a), Elem::atom(b))) continue;
      for (int trial = 0; trial < 8; ++trial) {
        Elem P = random_subset(rng, n);
        Elem Q = class_preserving_resample(rng, P, cls, members_of);
        ++steps;
        if (system.in_holds(sigma, Elem::atom(a), P) !=
            system.in_holds(sigma, Elem::atom(b), Q)) {
          report.equality_axioms = false;
          break;
        }
      }
    }

  report.honest_checks = steps;
  return report;
}

}  // namespace

PropositionReport verify_good_model_properties(const System& system, std::uint64_t seed) {
  const auto brackets = system.signature()->types().belonging_subdomain();
  int n = system.carrier().size();
  if (n <= 6) {
    PropositionReport report;
    report.route = "direct";
    std::uint64_t steps = 0;
    report.first_order_equivalence = check_first_order_equivalence(system, steps);
    report.regular = is_regular(system);
    report.balanced = is_balanced(system);
    report.extensional = is_extensional(system);
    report.equality_axioms = holds_equality_axioms(system);
    report.honest_checks = steps;
    std::vector<int> cls = first_order_classes(system);
    for (int c : cls) report.classes = std::max(report.classes, c + 1);
    return report;
  }
  if (brackets.size() != 1 || !(brackets[0] == Type::bracket({Type::first_order()})))
    throw BudgetExceeded("quotient route supports the type domain {0,[0]} only",
                         static_cast<std::uint64_t>(n), 6);
  return quotient_route(system, brackets[0], seed);
}

}  // namespace infralog
