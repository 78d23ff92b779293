#include "infralog/elem.hpp"

#include <algorithm>

namespace infralog {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_children(std::uint64_t seed, const std::vector<Elem>& kids) {
  std::uint64_t h = seed;
  for (const Elem& k : kids) h = mix(h, k.hash());
  return h;
}

}  // namespace

Elem Elem::atom(int carrier_index) {
  Elem e{Raw{}};
  e.kind_ = Kind::Atom;
  e.atom_ = carrier_index;
  e.hash_ = mix(0x41, static_cast<std::uint64_t>(carrier_index) + 1);
  return e;
}

Elem Elem::tuple(std::vector<Elem> parts) {
  Elem e{Raw{}};
  e.kind_ = Kind::Tuple;
  e.hash_ = hash_children(0x54, parts);
  e.kids_ = std::make_shared<const std::vector<Elem>>(std::move(parts));
  return e;
}

Elem Elem::set(std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Elem e{Raw{}};
  e.kind_ = Kind::Set;
  e.hash_ = hash_children(0x53, members);
  e.kids_ = std::make_shared<const std::vector<Elem>>(std::move(members));
  return e;
}

bool Elem::contains(const Elem& e) const {
  return std::binary_search(kids_->begin(), kids_->end(), e);
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.hash_ != b.hash_ || a.kind_ != b.kind_) return false;
  if (a.kind_ == Elem::Kind::Atom) return a.atom_ == b.atom_;
  if (a.kids_ == b.kids_) return true;
  return *a.kids_ == *b.kids_;
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == Elem::Kind::Atom) return a.atom_ <=> b.atom_;
  const auto& ka = *a.kids_;
  const auto& kb = *b.kids_;
  std::size_t n = std::min(ka.size(), kb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = ka[i] <=> kb[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return ka.size() <=> kb.size();
}

std::string Elem::to_string(const Carrier& carrier) const {
  switch (kind_) {
    case Kind::Atom:
      return carrier.label(atom_);
    case Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < kids_->size(); ++i) {
        if (i > 0) out += ",";
        out += (*kids_)[i].to_string(carrier);
      }
      return out + ")";
    }
    case Kind::Set: {
      std::string out = "{";
      for (std::size_t i = 0; i < kids_->size(); ++i) {
        if (i > 0) out += ",";
        out += (*kids_)[i].to_string(carrier);
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace infralog
