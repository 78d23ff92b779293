#include "infralog/terminal.hpp"

namespace infralog {

namespace {

constexpr std::uint64_t kOverflow = ~std::uint64_t{0};

std::uint64_t checked_pow2(std::uint64_t exponent) {
  if (exponent >= 63) return kOverflow;
  return std::uint64_t{1} << exponent;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a == kOverflow || b == kOverflow) return kOverflow;
  if (a != 0 && b > kOverflow / a) return kOverflow;
  return a * b;
}

std::uint64_t raw_size(const Semitype& st, std::uint64_t carrier_size) {
  switch (st.kind()) {
    case Semitype::Kind::FirstOrder:
      return carrier_size;
    case Semitype::Kind::OfType:
      return checked_pow2(raw_size(semitype_of(st.type()), carrier_size));
    case Semitype::Kind::Product: {
      std::uint64_t n = 1;
      for (const Semitype& f : st.factors()) n = checked_mul(n, raw_size(f, carrier_size));
      return n;
    }
  }
  return kOverflow;
}

}  // namespace

std::uint64_t terminal_size(const Semitype& st, std::uint64_t carrier_size, const Budget& budget) {
  std::uint64_t n = raw_size(st, carrier_size);
  if (n == kOverflow)
    throw BudgetExceeded("terminal " + st.to_string() + " overflows", n, budget.max_terminal);
  budget.check_terminal(n, "terminal too large");
  return n;
}

ElemList terminal(const Semitype& st, const Carrier& carrier, const Budget& budget) {
  terminal_size(st, static_cast<std::uint64_t>(carrier.size()), budget);
  switch (st.kind()) {
    case Semitype::Kind::FirstOrder: {
      ElemList out;
      out.reserve(static_cast<std::size_t>(carrier.size()));
      for (int i = 0; i < carrier.size(); ++i) out.push_back(Elem::atom(i));
      return out;
    }
    case Semitype::Kind::OfType: {
      ElemList base = terminal(semitype_of(st.type()), carrier, budget);
      std::uint64_t count = std::uint64_t{1} << base.size();
      ElemList out;
      out.reserve(static_cast<std::size_t>(count));
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<Elem> members;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) members.push_back(base[i]);
        out.push_back(Elem::set(std::move(members)));
      }
      return out;
    }
    case Semitype::Kind::Product: {
      std::vector<ElemList> factor_terms;
      for (const Semitype& f : st.factors()) factor_terms.push_back(terminal(f, carrier, budget));
      ElemList out;
      std::vector<std::size_t> idx(factor_terms.size(), 0);
      while (true) {
        std::vector<Elem> parts;
        parts.reserve(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) parts.push_back(factor_terms[i][idx[i]]);
        out.push_back(Elem::tuple(std::move(parts)));
        std::size_t i = idx.size();
        while (i > 0) {
          --i;
          if (++idx[i] < factor_terms[i].size()) break;
          idx[i] = 0;
          if (i == 0) return out;
        }
      }
    }
  }
  return {};
}

bool elem_matches(const Elem& e, const Semitype& st, int carrier_size) {
  switch (st.kind()) {
    case Semitype::Kind::FirstOrder:
      return e.is_atom() && e.atom_index() >= 0 && e.atom_index() < carrier_size;
    case Semitype::Kind::OfType: {
      if (!e.is_set()) return false;
      Semitype base = semitype_of(st.type());
      for (const Elem& m : e.members())
        if (!elem_matches(m, base, carrier_size)) return false;
      return true;
    }
    case Semitype::Kind::Product: {
      if (!e.is_tuple() || e.parts().size() != st.factors().size()) return false;
      for (std::size_t i = 0; i < st.factors().size(); ++i)
        if (!elem_matches(e.parts()[i], st.factors()[i], carrier_size)) return false;
      return true;
    }
  }
  return false;
}

std::function<Elem(const Elem&)> terminal_map(const Semitype& st, std::vector<int> u) {
  switch (st.kind()) {
    case Semitype::Kind::FirstOrder:
      return [u = std::move(u)](const Elem& e) { return Elem::atom(u.at(e.atom_index())); };
    case Semitype::Kind::OfType: {
      auto base = terminal_map(semitype_of(st.type()), std::move(u));
      return [base](const Elem& e) {
        std::vector<Elem> image;
        image.reserve(e.set_size());
        for (const Elem& m : e.members()) image.push_back(base(m));
        return Elem::set(std::move(image));
      };
    }
    case Semitype::Kind::Product: {
      std::vector<std::function<Elem(const Elem&)>> fs;
      for (const Semitype& f : st.factors()) fs.push_back(terminal_map(f, u));
      return [fs](const Elem& e) {
        std::vector<Elem> parts;
        parts.reserve(e.parts().size());
        for (std::size_t i = 0; i < fs.size(); ++i) parts.push_back(fs[i](e.parts()[i]));
        return Elem::tuple(std::move(parts));
      };
    }
  }
  return {};
}

}  // namespace infralog
