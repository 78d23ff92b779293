#include "infralog/filters.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace infralog {

std::string to_string(FilterClass c) {
  switch (c) {
    case FilterClass::NotFilter: return "NotFilter";
    case FilterClass::Filter: return "Filter";
    case FilterClass::ProperFilter: return "ProperFilter";
    case FilterClass::Ultrafilter: return "Ultrafilter";
  }
  return "?";
}

FilterSpec::FilterSpec(std::vector<std::string> index_labels, std::vector<std::uint64_t> members)
    : labels_(std::move(index_labels)), members_(std::move(members)) {
  if (labels_.empty()) throw ValidationError("filter index set must be nonempty");
  if (labels_.size() > 24) throw ValidationError("filter index set too large");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (std::uint64_t m : members_)
    if (m > full_mask()) throw ValidationError("filter member outside the index set");
}

FilterSpec FilterSpec::principal_ultrafilter(std::vector<std::string> index_labels,
                                             const std::string& at) {
  int idx = -1;
  for (std::size_t i = 0; i < index_labels.size(); ++i)
    if (index_labels[i] == at) idx = static_cast<int>(i);
  if (idx < 0) throw ValidationError("principal point '" + at + "' not in the index set");
  std::uint64_t full = (std::uint64_t{1} << index_labels.size()) - 1;
  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    if (mask & (std::uint64_t{1} << idx)) members.push_back(mask);
  return FilterSpec(std::move(index_labels), std::move(members));
}

std::vector<FilterSpec> FilterSpec::all_ultrafilters(std::vector<std::string> index_labels) {
  std::vector<FilterSpec> out;
  for (const std::string& label : index_labels)
    out.push_back(principal_ultrafilter(index_labels, label));
  return out;
}

bool FilterSpec::contains(std::uint64_t mask) const {
  return std::binary_search(members_.begin(), members_.end(), mask);
}

FilterClass FilterSpec::classify() const {
  for (std::uint64_t g : members_) {
    for (std::uint64_t h : members_)
      if (!contains(g & h)) return FilterClass::NotFilter;
    for (std::uint64_t h = 0; h <= full_mask(); ++h)
      if ((g & h) == g && !contains(h)) return FilterClass::NotFilter;
  }
  if (contains(0) || members_.empty()) {
    // With the empty set every superset is present, so this is the full
    // power set; the empty ensemble passes the closure clauses vacuously.
    bool proper = members_.empty();
    return proper ? FilterClass::ProperFilter : FilterClass::Filter;
  }
  // Proper filter; the ultrafilter property is the binary partition test.
  for (std::uint64_t g = 0; g <= full_mask(); ++g) {
    std::uint64_t h = full_mask() & ~g;
    if (!contains(g) && !contains(h)) return FilterClass::ProperFilter;
  }
  return FilterClass::Ultrafilter;
}

std::vector<std::uint64_t> FilterSpec::minimal_members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : members_) {
    bool minimal = true;
    for (std::uint64_t other : members_) {
      if (other != m && (other & m) == other) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

std::string FilterSpec::describe() const {
  std::string out = "{";
  bool first_member = true;
  for (std::uint64_t m : members_) {
    if (!first_member) out += ", ";
    first_member = false;
    out += "{";
    bool first = true;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (m & (std::uint64_t{1} << i)) {
        if (!first) out += ",";
        first = false;
        out += labels_[i];
      }
    }
    out += "}";
  }
  return out + "}";
}

std::optional<FilterSpec> generated_filter(const std::vector<std::string>& index_labels,
                                           const std::vector<std::uint64_t>& ensemble) {
  std::uint64_t full = (std::uint64_t{1} << index_labels.size()) - 1;
  // Close the generators under intersection (the empty subensemble
  // contributes the full set), then take supersets.
  std::vector<std::uint64_t> cores = {full};
  for (std::uint64_t g : ensemble) {
    std::vector<std::uint64_t> next = cores;
    for (std::uint64_t c : cores) next.push_back(c & g);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cores = std::move(next);
  }
  for (std::uint64_t c : cores)
    if (c == 0) return std::nullopt;
  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    for (std::uint64_t c : cores)
      if ((mask & c) == c) {
        members.push_back(mask);
        break;
      }
  }
  return FilterSpec(index_labels, std::move(members));
}

FilterSpec extend_to_ultrafilter(const FilterSpec& filter) {
  FilterClass c = filter.classify();
  if (c != FilterClass::ProperFilter && c != FilterClass::Ultrafilter)
    throw ValidationError("can only extend a proper filter");
  if (filter.members().empty())
    return FilterSpec::principal_ultrafilter(filter.index_labels(), filter.index_labels().front());
  // The intersection of all members is the least member and is nonempty.
  std::uint64_t least = filter.full_mask();
  for (std::uint64_t m : filter.members()) least &= m;
  int idx = std::countr_zero(least);
  return FilterSpec::principal_ultrafilter(filter.index_labels(),
                                           filter.index_labels()[static_cast<std::size_t>(idx)]);
}

}  // namespace infralog
