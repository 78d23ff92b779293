#pragma once

#include <random>
#include <vector>

#include "infralog/evaluation.hpp"
#include "infralog/exemplars.hpp"
#include "infralog/generator.hpp"
#include "infralog/parser.hpp"
#include "infralog/system.hpp"

namespace testutil {

using namespace infralog;

inline const Type t0 = Type::first_order();
inline const Type tset = Type::bracket({t0});

// The small working signature used across the semantic tests: types
// {0,[0]}, constants c:0 and C:[0].
inline SignaturePtr sweep_signature() {
  static SignaturePtr sig = make_signature({t0, tset}, {{t0, {"c"}}, {tset, {"C"}}});
  return sig;
}

inline Carrier letters(int n) {
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.push_back(std::string(1, char('a' + i)));
  return Carrier(ls);
}

// A canonical =/membership system over the sweep signature.
inline SystemPtr canonical_system(int carrier_size, int const_atom = 0,
                                  std::vector<int> const_set = {0}) {
  std::vector<Elem> members;
  for (int i : const_set) members.push_back(Elem::atom(i));
  std::map<std::string, Elem> consts = {{"c", Elem::atom(const_atom)},
                                        {"C", Elem::set(members)}};
  return System::canonical(sweep_signature(), letters(carrier_size), consts);
}

// A witness-pattern system over the sweep signature with the given
// partition (class per atom).
inline SystemPtr pattern_system(std::vector<int> class_of, int const_atom = 0,
                                std::vector<int> const_set = {0}) {
  int n = static_cast<int>(class_of.size());
  std::vector<Elem> members;
  for (int i : const_set) members.push_back(Elem::atom(i));
  std::map<std::string, Elem> consts = {{"c", Elem::atom(const_atom)},
                                        {"C", Elem::set(members)}};
  return make_pattern_system(sweep_signature(), letters(n), std::move(class_of),
                             std::move(consts));
}

// A seeded evaluation for the sweep variables x,y:0 and u,v:[0]; the
// second-order values are nonempty.
inline Evaluation random_sweep_eval(std::mt19937_64& rng, const System& system,
                                    bool nonempty_sets = true) {
  int n = system.carrier().size();
  Evaluation ev;
  ev.set(Term::variable("x", t0), Elem::atom(static_cast<int>(rng() % n)));
  ev.set(Term::variable("y", t0), Elem::atom(static_cast<int>(rng() % n)));
  for (const char* name : {"u", "v"}) {
    std::vector<Elem> members;
    for (int i = 0; i < n; ++i)
      if (rng() & 1) members.push_back(Elem::atom(i));
    if (nonempty_sets && members.empty())
      members.push_back(Elem::atom(static_cast<int>(rng() % n)));
    ev.set(Term::variable(name, tset), Elem::set(std::move(members)));
  }
  return ev;
}

// The atom basis over the sweep signature used by the generator-driven
// sweeps: one equality atom per order plus a belonging atom.
inline FormulaGen::Config sweep_generator_config(bool with_y_and_v = true) {
  SignaturePtr sig = sweep_signature();
  FormulaGen::Config config;
  std::vector<const char*> atoms = {"x =0 c", "u =[0] C", "x in[0] u"};
  std::vector<const char*> more = {"x =0 y", "u =[0] v", "y in[0] C"};
  for (const char* text : atoms) config.atoms.push_back(parse(text, *sig));
  if (with_y_and_v)
    for (const char* text : more) config.atoms.push_back(parse(text, *sig));
  config.quantifiable = {Term::variable("x", t0), Term::variable("u", tset)};
  if (with_y_and_v) {
    config.quantifiable.push_back(Term::variable("y", t0));
    config.quantifiable.push_back(Term::variable("v", tset));
  }
  return config;
}

}  // namespace testutil
