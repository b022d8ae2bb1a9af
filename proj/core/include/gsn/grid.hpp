#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsn/bivariate.hpp"
#include "gsn/params.hpp"
#include "gsn/rational.hpp"

namespace gsn::grid {

/// {-2, -1/2, 0, 1/2, 1, 2, 3}.
const std::vector<Rational>& general_values();
/// {-2, -1, -1/2, 0, 1/2, 1, 2, 3}.
const std::vector<Rational>& bivariate_values();

/// Deterministic parameter grid for the general family: r, p <= 3, factor
/// lists of length 0..2 with r_s, p_s <= 2, scalar values from general_values().
/// A seed appends `extra` random points drawn from the same value set.
std::vector<ParamSpec> general(std::optional<std::uint64_t> seed = std::nullopt, unsigned extra = 0);

/// Coefficient points (a1, b1, a2, b2) over bivariate_values(); the standard
/// point (1, 0, 1, 0) always comes first.
std::vector<Coefficients> bivariate(unsigned count, std::optional<std::uint64_t> seed = std::nullopt,
                                    unsigned extra = 0);

/// Targets (c1, d1, c2, d2) used by the change-of-parameters identities.
const std::vector<Target>& targets();

}  // namespace gsn::grid
