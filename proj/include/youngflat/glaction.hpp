#pragma once

// GL(V) acting on polynomials, column tableaux and Schur modules. A group
// element g sends e_i to sum_j g(j, i) e_j.

#include "youngflat/polynomial.hpp"
#include "youngflat/straighten.hpp"

namespace youngflat {

using GroupElement = RationalMatrix;

/// Substitutes x_i -> sum_j g(j, i) x_j.
Polynomial act_poly(const GroupElement& g, const Polynomial& p);

/// Expands every box multilinearly, dropping columns with a repeated entry.
XVector act(const GroupElement& g, const XVector& v);

SchurVector act(const GroupElement& g, const SchurVector& v, Straightener& engine);
inline SchurVector act(const GroupElement& g, const SchurVector& v) { return act(g, v, thread_straightener()); }

/// Matrix of g on S^lambda V in the enumerate_ssyt basis.
RationalMatrix rep_matrix(const GroupElement& g, const Partition& lambda, int n);

}  // namespace youngflat
