#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "quiver/rng.hpp"
#include "quiver/tableau.hpp"

namespace quiver {

/// An ordered pair of tableaux; its meaning (p,q) or (q,p) is fixed by each function.
using TableauPair = std::pair<Tableau, Tableau>;

/// Visits every factorization w = p * q exactly once, as visit(p, q).
/// The visitor returns false to stop early; the function then returns false.
bool for_each_factorization(const Tableau& w, const std::function<bool(const Tableau&, const Tableau&)>& visit);

/// Every factorization w = p * q as (p, q), any shapes.
std::vector<TableauPair> all_factorizations(const Tableau& w);

/// Factorizations w = p * q with shape(p) = sigma and shape(q) = tau, as (p, q).
std::set<TableauPair> factorizations(const Tableau& w, const Partition& sigma, const Partition& tau);

/// A random factorization (p, q) of w. Uniform when w has at most `cap`
/// factorizations; otherwise drawn by a randomized depth-first search.
TableauPair sample_factorization(const Tableau& w, Rng& rng, std::size_t cap = 2048);

/// Simple factorizations w = q * t * p with respect to the rectangle, as (q, p).
/// With q0 the part of w below t, p0 the part right of t and z the part below
/// and right of t, these are q = q0 * zq, p = zp * p0 for every z = zq * zp.
std::set<TableauPair> simple_factorizations(const Tableau& w, const RectTableau& t);

/// All (x', y') with (x, y) |= (x', y') around the rectangle:
///  (1) x = x0 * xr is the vertical cut after column b and xr = m * n: x' = x0 * m, y' = n * y;
///  (2) y = yb * y0 is the horizontal cut after row a and yb = m * n: x' = x * m, y' = n * y0.
/// Requires every entry of x and y to exceed every entry of t.
std::set<TableauPair> models_pairs(const Tableau& x, const Tableau& y, const RectTableau& t);

}  // namespace quiver
