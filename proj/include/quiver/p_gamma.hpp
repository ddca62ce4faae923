#pragma once

#include "quiver/diagram.hpp"
#include "quiver/tensor.hpp"

namespace quiver {

/// P_gamma in Lambda^{(x) length(gamma)} for a rectangle diagram. The lowest path
/// carries 1 (x) ... (x) 1; a peak is filled in with the coproduct of its merged
/// label, and a Flat step straightens the rectangle with sigma attached on its
/// right and tau below, vanishing when sigma has more rows than the rectangle.
TensorElement compute_P(const Path& gamma, const RectDiagram& rd,
                        ReductionOrder order = ReductionOrder::Leftmost);

/// c_mu(gamma): the coefficient of s_{mu_1} (x) ... (x) s_{mu_l} in P_gamma.
Coeff coefficient(const Path& gamma, const RectDiagram& rd, const ShapeTuple& shapes);

/// The Case-2 replacement for one basis element: tau on the Down segment and
/// sigma on the Up segment merge to s of (b+sigma_1..b+sigma_a, tau_1, tau_2, ...).
SignedSchur attach_rectangle(const RectDims& rect, const Partition& sigma, const Partition& tau);

}  // namespace quiver
