#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "liesc/linear.hpp"

namespace liesc {

using NamedSubspace = std::pair<std::string, Subspace>;

/// One named identity checked on a concrete instance, with the subspaces needed to replay a failure.
struct Obligation {
  std::string name;
  bool pass = false;
  std::vector<NamedSubspace> witnesses;
};

struct ObligationReport {
  std::vector<Obligation> obligations;

  bool passed() const {
    return std::all_of(obligations.begin(), obligations.end(), [](const Obligation& o) { return o.pass; });
  }

  const Obligation* find(const std::string& name) const {
    for (const auto& o : obligations) {
      if (o.name == name) return &o;
    }
    return nullptr;
  }

  void add(std::string name, bool pass, std::vector<NamedSubspace> witnesses = {}) {
    obligations.push_back({std::move(name), pass, pass ? std::vector<NamedSubspace>{} : std::move(witnesses)});
  }
};

}  // namespace liesc
