#pragma once

#include <map>
#include <utility>

#include "quiver/checked.hpp"
#include "quiver/partition.hpp"

namespace quiver {

/// c^mu_{sigma,tau}: the number of Littlewood-Richardson skew tableaux of shape
/// mu/sigma and content tau.
Coeff lr_coeff(const Partition& sigma, const Partition& tau, const Partition& mu);

using Coproduct = std::map<std::pair<Partition, Partition>, Coeff>;

/// Every (sigma, tau) with c^mu_{sigma,tau} > 0, together with that coefficient.
Coproduct coproduct(const Partition& mu);

}  // namespace quiver
