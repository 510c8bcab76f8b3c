#pragma once

// Named bundles of self-checking claims about the concrete algebras.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/laws.hpp"

namespace ternalg {

struct Claim
{
  std::string name;
  bool holds = false;
  std::string detail;
};

struct BundleReport
{
  std::string target;
  std::vector<Claim> claims;

  bool holds() const;
};

/// presentation, twodim-table, vector-prop, traces, theorem2, msc2-decomp,
/// subalgebra-list
const std::vector<std::string> &reproduce_targets();

/// Runs the bundle, calling `on_claim` as each claim is decided. Throws
/// ParseError for an unknown target.
BundleReport reproduce(std::string_view target, const CheckOptions &opts = {},
                       const std::function<void(const Claim &)> &on_claim = {});

} // namespace ternalg
