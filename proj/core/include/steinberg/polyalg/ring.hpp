#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace steinberg::polyalg {

// An ordered list of variable names. Variables listed first are the most
// significant for every monomial order in this library.
class Ring {
public:
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  size_t arity() const { return vars_.size(); }
  const std::string& var(size_t i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }

  std::optional<size_t> index_of(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const Ring& o) const { return vars_ == o.vars_; }

private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace steinberg::polyalg
