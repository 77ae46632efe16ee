#pragma once

#include "soflag/partitions.hpp"
#include "soflag/tracepoly.hpp"

namespace soflag {

/// Laplace-Beltrami operator of SO(N) on p_m, symbolic in N.
TracePoly lap_pm(unsigned m);

/// Laplacian of p_1^q, symbolic in N.
TracePoly lap_p1_pow(unsigned q);

/// <grad p_m, grad p_m'> = (m m'/2)(p_{|m-m'|} - p_{m+m'}) on SO(N).
TracePoly grad_inner_pm(unsigned m, unsigned m_prime);

/// Laplacian of p_lambda, assembled by splitting lambda into its parts >= 2 and
/// its power of p_1 (pure-power, no-ones, and mixed cases).
TracePoly lap_partition(const Partition& lambda);

/// The same Laplacian from the plain product rule over every factor of p_lambda.
/// Kept as an independent route for cross-checking lap_partition.
TracePoly lap_partition_product_rule(const Partition& lambda);

/// Linear extension to a TracePoly in any mode.
///
/// GeneralN input gets the symbolic formulas (substituted when N is fixed).
/// SO3/SO4 input is expanded back into trace monomials, pushed through the
/// general formulas at N = 3 or 4, and reduced again.
TracePoly lap(const TracePoly& a, GroupMode mode);

/// SO(3) closed forms: Delta(p_1^j) in p_1 powers. Input and output are SO3-mode.
TracePoly lap_so3_closed(const TracePoly& a);

/// SO(3) closed form for a single p_m, returned as a GeneralN@3 combination of
/// p_0, p_1, ..., p_m (B'' coordinates read off directly).
TracePoly lap_so3_pm_closed(unsigned m);

/// SO(4) closed form for Delta(p_1^l p_2^m). Input and output are SO4-mode.
TracePoly lap_so4_closed(const TracePoly& a);

}  // namespace soflag
