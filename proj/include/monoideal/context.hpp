#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "monoideal/errors.hpp"

namespace monoideal {

/// An ordered list of distinct variable names.  Fixes both n = dim R and
/// the total order used for canonical forms.  Contexts compare by content,
/// so two independently built contexts with the same names are the same
/// ring.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (names_[i].empty())
        throw PreconditionError("empty variable name");
      if (!index_.emplace(names_[i], i).second)
        throw PreconditionError("duplicate variable name: " + names_[i]);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const VarContext& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

/// Convenience: x1..xn.
inline ContextPtr make_context(int n, const std::string& stem = "x") {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_context(std::move(names));
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b))
    throw ContextMismatchError("values live in different variable contexts");
}

}  // namespace monoideal
