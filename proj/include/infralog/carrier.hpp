#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "infralog/errors.hpp"

namespace infralog {

// A finite, ordered support set. Elements are opaque atoms identified by
// their position; the labels are for printing and serialization.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("carrier must be nonempty");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (!index_.emplace(labels_[i], i).second)
        throw ValidationError("duplicate carrier label '" + labels_[i] + "'");
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace infralog
