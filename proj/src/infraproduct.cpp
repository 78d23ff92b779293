#include "infralog/infraproduct.hpp"

#include <memory>
#include <unordered_map>

namespace infralog {

std::uint64_t ProductShape::size() const {
  std::uint64_t n = 1;
  for (int s : factor_sizes) n *= static_cast<std::uint64_t>(s);
  return n;
}

int ProductShape::project_atom(int atom, int factor) const {
  std::uint64_t rest = static_cast<std::uint64_t>(atom);
  std::uint64_t radix = 1;
  for (std::size_t i = factor_sizes.size(); i-- > static_cast<std::size_t>(factor) + 1;)
    radix *= static_cast<std::uint64_t>(factor_sizes[i]);
  return static_cast<int>((rest / radix) %
                          static_cast<std::uint64_t>(factor_sizes[static_cast<std::size_t>(factor)]));
}

int ProductShape::atom_of(const std::vector<int>& choices) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(factor_sizes[i]) + static_cast<std::uint64_t>(choices[i]);
  return static_cast<int>(idx);
}

Elem project_tuple(const ProductShape& shape, const Elem& p, int factor) {
  if (p.is_atom()) return Elem::atom(shape.project_atom(p.atom_index(), factor));
  std::vector<Elem> parts;
  parts.reserve(p.parts().size());
  for (const Elem& part : p.parts())
    parts.push_back(Elem::atom(shape.project_atom(part.atom_index(), factor)));
  return Elem::tuple(std::move(parts));
}

Elem project_set(const ProductShape& shape, const Elem& P, int factor) {
  std::vector<Elem> members;
  members.reserve(P.set_size());
  for (const Elem& p : P.members()) members.push_back(project_tuple(shape, p, factor));
  return Elem::set(std::move(members));
}

void IndexedFamily::validate() const {
  if (index_labels.empty() || factors.size() != index_labels.size())
    throw ValidationError("family needs one factor per index label");
  for (const SystemPtr& f : factors) {
    if (!f) throw ValidationError("family has a null factor");
    if (!(*f->signature() == *factors.front()->signature()))
      throw SignatureMismatch("family factors must share one signature");
  }
  if (!evaluations.empty() && evaluations.size() != factors.size())
    throw ValidationError("family needs one evaluation per factor when evaluated");
}

namespace {

// Relation backends over the product query `exists G in D, for all g in G`
// against the factor relations. Upward closure makes the minimal members
// of D sufficient; the equivalence with iterating every member is pinned
// by a test.
struct ProductContext {
  ProductShape shape;
  std::vector<SystemPtr> factors;
  std::vector<std::uint64_t> minimal_members;
  // Projections of set elements repeat heavily during satisfaction runs.
  mutable std::vector<std::unordered_map<Elem, Elem, ElemHash>> projection_cache;

  Elem project(const Elem& e, int factor) const {
    if (e.is_set()) {
      auto& cache = projection_cache[static_cast<std::size_t>(factor)];
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      Elem out = project_set(shape, e, factor);
      cache.emplace(e, out);
      return out;
    }
    return project_tuple(shape, e, factor);
  }

  bool filtered(const std::function<bool(int)>& holds_at) const {
    for (std::uint64_t member : minimal_members) {
      bool all = true;
      for (std::size_t g = 0; g < factors.size(); ++g) {
        if (!(member & (std::uint64_t{1} << g))) continue;
        if (!holds_at(static_cast<int>(g))) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }
};

}  // namespace

InfraProduct infraproduct(const IndexedFamily& family, const FilterSpec& filter, Budget budget) {
  family.validate();
  if (static_cast<std::size_t>(filter.index_size()) != family.index_labels.size())
    throw ValidationError("filter and family index sets differ in size");
  FilterClass cls = filter.classify();
  if (cls == FilterClass::NotFilter)
    throw ValidationError("infraproduct needs a filter: " + filter.describe() + " is not one");
  if (!filter.contains(filter.full_mask()))
    throw ValidationError("infraproduct needs a filter containing the full index set");

  auto ctx = std::make_shared<ProductContext>();
  ctx->factors = family.factors;
  for (const SystemPtr& f : family.factors) ctx->shape.factor_sizes.push_back(f->carrier().size());
  ctx->minimal_members = filter.minimal_members();
  ctx->projection_cache.resize(family.factors.size());

  budget.check_terminal(ctx->shape.size(), "product carrier too large");

  // Carrier atoms: choice tuples in mixed-radix order, labeled per factor.
  std::vector<std::string> labels;
  std::uint64_t n = ctx->shape.size();
  labels.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    std::string label = "⟨";
    for (std::size_t g = 0; g < family.factors.size(); ++g) {
      if (g > 0) label += ",";
      label += family.factors[g]->carrier().label(
          ctx->shape.project_atom(static_cast<int>(a), static_cast<int>(g)));
      label += "@" + family.index_labels[g];
    }
    labels.push_back(label + "⟩");
  }
  Carrier carrier(std::move(labels));

  const SignaturePtr sig = family.factors.front()->signature();

  // Constants: pointwise at first order, pointwise-membership boxes at
  // bracket types.
  std::map<std::string, Elem> constants;
  for (const auto& [t, names] : sig->constants()) {
    for (const std::string& name : names) {
      if (t.is_first_order()) {
        std::vector<int> choices;
        for (const SystemPtr& f : family.factors)
          choices.push_back(f->constant_value(name).atom_index());
        constants[name] = Elem::atom(ctx->shape.atom_of(choices));
      } else {
        const ElemList& args = terminal(semitype_of(t), carrier, budget);
        std::vector<Elem> members;
        for (const Elem& p : args) {
          bool inside_all = true;
          for (std::size_t g = 0; g < family.factors.size(); ++g) {
            if (!family.factors[g]->constant_value(name).contains(
                    ctx->project(p, static_cast<int>(g)))) {
              inside_all = false;
              break;
            }
          }
          if (inside_all) members.push_back(p);
        }
        constants[name] = Elem::set(std::move(members));
      }
    }
  }

  std::map<Type, Relation> eqs;
  std::map<Type, Relation> ins;
  for (const Type& t : sig->types().types()) {
    if (t.is_first_order()) {
      eqs[t] = Relation::intensional([ctx, t](const Elem& a, const Elem& b) {
        return ctx->filtered([&](int g) {
          return ctx->factors[static_cast<std::size_t>(g)]->eq_holds(
              t, ctx->project(a, g), ctx->project(b, g));
        });
      });
    } else {
      eqs[t] = Relation::intensional([ctx, t](const Elem& P, const Elem& Q) {
        return ctx->filtered([&](int g) {
          return ctx->factors[static_cast<std::size_t>(g)]->eq_holds(
              t, ctx->project(P, g), ctx->project(Q, g));
        });
      });
    }
  }
  for (const Type& t : sig->types().belonging_subdomain()) {
    ins[t] = Relation::intensional([ctx, t](const Elem& p, const Elem& P) {
      return ctx->filtered([&](int g) {
        return ctx->factors[static_cast<std::size_t>(g)]->in_holds(
            t, ctx->project(p, g), ctx->project(P, g));
      });
    });
  }

  InfraProduct out;
  out.system = std::make_shared<const System>(sig, std::move(carrier), std::move(constants),
                                              std::move(eqs), std::move(ins), budget);
  out.shape = ctx->shape;
  out.family = family;
  out.filter = filter;
  return out;
}

Evaluation crossing(const InfraProduct& product) {
  const IndexedFamily& family = product.family;
  if (family.evaluations.empty())
    throw ValidationError("crossing needs per-factor evaluations");
  // Collect the variables shared by all factor evaluations.
  Evaluation out;
  for (const auto& [var, value] : family.evaluations.front().values()) {
    (void)value;
    bool everywhere = true;
    for (const Evaluation& ev : family.evaluations)
      if (!ev.find(var)) everywhere = false;
    if (!everywhere) continue;
    if (var.type.is_first_order()) {
      std::vector<int> choices;
      for (const Evaluation& ev : family.evaluations)
        choices.push_back(ev.find(var)->atom_index());
      out.set(var, Elem::atom(product.shape.atom_of(choices)));
    } else {
      const ElemList& args = product.system->terminal_of(semitype_of(var.type));
      std::vector<Elem> members;
      for (const Elem& p : args) {
        bool inside_all = true;
        for (std::size_t g = 0; g < family.evaluations.size(); ++g) {
          if (!family.evaluations[g].find(var)->contains(
                  project_tuple(product.shape, p, static_cast<int>(g)))) {
            inside_all = false;
            break;
          }
        }
        if (inside_all) members.push_back(p);
      }
      out.set(var, Elem::set(std::move(members)));
    }
  }
  return out;
}

InfraProduct infrapower(const SystemPtr& base, const Evaluation& base_eval,
                        const std::vector<std::string>& exponent_labels, const FilterSpec& filter,
                        Budget budget) {
  IndexedFamily family;
  family.index_labels = exponent_labels;
  family.factors.assign(exponent_labels.size(), base);
  family.evaluations.assign(exponent_labels.size(), base_eval);
  return infraproduct(family, filter, budget);
}

DecomposedEvaluation decompose_evaluation(const InfraProduct& product, const Evaluation& beta) {
  DecomposedEvaluation out;
  out.per_factor.resize(product.family.factors.size());
  for (const auto& [var, value] : beta.values()) {
    for (std::size_t g = 0; g < product.family.factors.size(); ++g) {
      Elem projected = var.type.is_first_order()
                           ? Elem::atom(product.shape.project_atom(value.atom_index(),
                                                                   static_cast<int>(g)))
                           : project_set(product.shape, value, static_cast<int>(g));
      out.per_factor[g].set(var, std::move(projected));
    }
  }
  InfraProduct with_evals = product;
  with_evals.family.evaluations = out.per_factor;
  out.crossed = crossing(with_evals);
  return out;
}

}  // namespace infralog
