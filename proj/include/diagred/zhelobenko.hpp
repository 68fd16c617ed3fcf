// Zhelobenko automorphisms q_i of the h-deformed Weyl algebra, given by
// their action on generators and the shifted Weyl action on coefficients.
#pragma once

#include <vector>

#include "diagred/weyl.hpp"

namespace diagred {

/// q_i on generators (0-based i, 0 <= i < n-1); coefficients are on the left.
Element zhelobenko_generator(const WeylAlgebra& w, int i, Gen g);

/// q_i applied termwise: f * g1...gk -> (s_i o f) q_i(g1)...q_i(gk),
/// returned in normal form.
Element zhelobenko(const WeylAlgebra& w, NormalFormEngine& engine, int i, const Element& e);

/// Images of all defining relations vanish; braid relations on every
/// generator for n >= 3; the square q_i^2 on generators is recorded in the
/// report notes.
Report verify_zhelobenko(const WeylAlgebra& w);

/// Constants mu_i of  x^i d_i = sum_j beta_ij d_j x^j + mu_i  (unbarred
/// derivatives, N = 1), starting from mu_{n-1} read off the normal form and
/// propagating downwards with q_i. Throws if a step leaves non-scalar terms.
std::vector<Coeff> mu_by_propagation(int n);

/// Normally ordered products :x^{ia} d_{ib}: expressed through the reduction
/// product, and the action of q_i on them (diagonal part only).
Report check_normal_ordered_action(const WeylAlgebra& w);

/// Unbarred derivatives d_j = D_j phi_j^{-1} and doubly barred ones
/// DD_j = D_j Q-_j reproduce their closed-form relations (N = 1).
Report check_variant_generators(int n);

}  // namespace diagred
