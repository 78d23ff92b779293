#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infralog/errors.hpp"

namespace infralog {

enum class FilterClass { NotFilter, Filter, ProperFilter, Ultrafilter };

std::string to_string(FilterClass c);

// An ensemble of subsets of a finite index set, stored as bitmasks over
// the ordered index labels. Supports classification up to the ultrafilter
// property and the constructions needed by the compactness argument.
class FilterSpec {
 public:
  FilterSpec() = default;
  FilterSpec(std::vector<std::string> index_labels, std::vector<std::uint64_t> members);

  static FilterSpec principal_ultrafilter(std::vector<std::string> index_labels,
                                          const std::string& at);
  // All |F| principal ultrafilters, in index order.
  static std::vector<FilterSpec> all_ultrafilters(std::vector<std::string> index_labels);

  const std::vector<std::string>& index_labels() const { return labels_; }
  int index_size() const { return static_cast<int>(labels_.size()); }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << labels_.size()) - 1; }

  const std::vector<std::uint64_t>& members() const { return members_; }
  bool contains(std::uint64_t mask) const;

  // Strongest applicable label, by direct enumeration of the clauses:
  // closure under intersection and superset, properness, and the binary
  // partition property.
  FilterClass classify() const;

  // Inclusion-minimal members. For an upward-closed ensemble the
  // existential member tests only need these.
  std::vector<std::uint64_t> minimal_members() const;

  std::string describe() const;

  friend bool operator==(const FilterSpec& a, const FilterSpec& b) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> members_;  // sorted, unique
};

// The smallest filter containing the ensemble: supersets of intersections
// of finite subensembles (the full index set always included). Returns
// nullopt when the empty set arises, i.e. no proper filter exists.
std::optional<FilterSpec> generated_filter(const std::vector<std::string>& index_labels,
                                           const std::vector<std::uint64_t>& ensemble);

// Extends a proper filter to an ultrafilter, deterministically: principal
// at the least index of the least member.
FilterSpec extend_to_ultrafilter(const FilterSpec& filter);

}  // namespace infralog
