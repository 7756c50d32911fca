#pragma once

#include "hurwitz/laurent.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/shapes.hpp"

#include <vector>

namespace hurwitz {

// ν = 1^d. Both throw std::invalid_argument if |μ| != d.
Rational hurwitz_formula(const Partition& mu, int d);        // h^•_0(μ, 1^d)
Integer mobile_count_formula(const Partition& mu, int d);    // |HM_0(μ, 1^d)|

// Closed forms for single-shape cases: h̄_0(x,(d)) = d^{m-1} and
// h̄_0(x,1^d) = d! d^{m-2} ∏ x_i^{x_i}/x_i!.
Rational star_formula(const Composition& x);
Rational simple_formula(const Composition& x);

// P_{s,ε}(X,Y) for a forest s (isolated vertices allowed) and per-edge excesses ε.
Rational p_term(const BareShape& s, const std::vector<int>& eps, const Composition& x, const Composition& y);
// Q_{k,e}(X,Y).
Rational q_term(int k, int e, const Composition& x, const Composition& y);

// h̄_0(x^d, y^d) for seeds x, y (the completion adds parts equal to one).
// Requires |x| >= |y| and d >= |x|; the sum over k, e is cut at e <= |y|-k and
// the terms with k + e > min(|x|,|y|) are checked to vanish.
Rational kz_value(const Composition& x, const Composition& y, int d);

// h_0(α 1^{d-α}, β 1^{d-β}) by the closed two-part formula. Requires α >= β >= 2, d >= α.
Rational explicit_two_parts(int alpha, int beta, int d);

// h_0 -> h̄_0 for full partitions of d, and back.
Rational hbar_from_h(const Partition& mu, const Partition& nu, int g, const Rational& h);
Rational h_from_hbar(const Partition& mu, const Partition& nu, int g, const Rational& hbar);

struct KzFit {
    UnivariatePolynomial q;          // in z = 1/d
    std::vector<int> sample_d;       // |ν|+2 interpolation nodes
    std::vector<int> heldout_d;      // two further checks
    bool residual_zero = false;
};
// q_{μ,ν}(z) from h_0 values of the completed seeds. Requires |μ| >= |ν| and no parts
// equal to one. Throws std::runtime_error if a held-out value misses the fit.
KzFit kz_polynomial(const Partition& mu, const Partition& nu);
// Value of the right-hand side of the normalised formula at d, i.e. q(1/d) recovered from h_0.
Rational kz_normalized(const Partition& mu, const Partition& nu, int d);

// A weighted strict bipartite graph of the almost-simple sum: black vertices 0..n-1,
// white vertices 0..p-1, each white touched, edge weights >= 1.
struct WeightedStrictShape {
    BareShape shape;                 // shape.m == p
    std::vector<int> weights;        // per edge of shape.edges
};
std::vector<WeightedStrictShape> strict_shapes(const Composition& y);

// h̄_0(x, y^d)/(d-|y|)! via the sum over S(y) and index subsets. Requires |x| >= |y|.
Rational almost_simple_normalized(const Composition& x, const Composition& y);
// h̄_0(x, y^d), d = |x|.
Rational almost_simple(const Composition& x, const Composition& y);
// The β-star specialisation (y = (β)) of the normalised value, evaluated directly.
Rational beta_star_formula(const Composition& x, int beta);

// Coefficients q^y_{λ;λ'}(m) with
//   h̄_0(x, y^d)/(d-|y|)! = ∏ x_i^{x_i}/x_i! · d^{m+n-1-|y|} · Σ q_{λ;λ'}(m) m_{λ;λ'}(x).
// Found by exact decomposition for several m and interpolation in m, then checked at a fresh m.
SymbolicLaurentExpansion almost_simple_expansion(const Composition& y);

} // namespace hurwitz
