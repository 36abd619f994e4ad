#pragma once

// Pieri inclusions in the semistandard basis.
//
// The single-box map sends w (x) T, for T in S^lambda V, to the class in
// S^mu V of the hook-weighted sum over box-moving paths sigma_J / D_J, with J
// running over the decreasing column sequences from lambda_1 + 1 down to the
// column k that receives the new box. Longer horizontal strips are handled by
// composing single-box maps along a chain of partitions.

#include "youngflat/shapes.hpp"
#include "youngflat/straighten.hpp"

#include <span>
#include <unordered_map>
#include <vector>

namespace youngflat {

/// A horizontal strip mu/lambda together with the order in which its boxes
/// are added.
class PieriProblem {
 public:
  /// Leftmost-box-first chain.
  PieriProblem(Partition lambda, Partition mu, int n);
  /// Custom admissible order of strip columns (1-based).
  PieriProblem(Partition lambda, Partition mu, int n, std::span<const int> columnOrder);

  const Partition& lambda() const { return lambda_; }
  const Partition& mu() const { return mu_; }
  int n() const { return n_; }
  /// Number of boxes in the strip.
  int degree() const { return static_cast<int>(chain_.columns.size()); }
  const BoxChain& chain() const { return chain_; }

 private:
  void validate() const;

  Partition lambda_;
  Partition mu_;
  int n_;
  BoxChain chain_;
};

/// Single-box map applied to one canonical filling of shape lambda* with the
/// extra entry w, before straightening. k is the 1-based column of the new
/// box; the result lives in X^{mu*} V.
XVector zeta_unstraightened(const Composition& lambdaColumns, int k, Entry w, const Filling& filling);

/// Single-box Pieri map V (x) S^lambda V -> S^mu V where mu is lambda plus a
/// box in column k (1-based).
SchurVector zeta(const Partition& lambda, int k, Entry w, const SchurVector& t);

/// Composite map V^{(x)d} (x) S^lambda V -> S^mu V. The last letter of the
/// word is consumed first, by the box added first.
SchurVector psi(const PieriProblem& problem, std::span<const Entry> word, const SchurVector& t);

/// Semistandard tableau whose row i holds i + 1, except that columns of full
/// height n hold 1, ..., n.
ColumnTableau z_witness(const Partition& lambda, int n);

/// Evaluates psi with caches for the single-box maps on basis tableaux and for
/// straightening. One instance per thread.
class PieriEngine {
 public:
  explicit PieriEngine(const PieriProblem& problem);

  const PieriProblem& problem() const { return problem_; }

  /// Applies the single-box map of the given step (0-based) with letter w to
  /// a vector of shape chain().shapes[step].
  SchurVector apply_step(int step, Entry w, const SchurVector& t);

  SchurVector psi(std::span<const Entry> word, const SchurVector& t);

  Straightener& straightener() { return straightener_; }

 private:
  const Combination& step_basis(int step, Entry w, const Filling& ssyt);

  PieriProblem problem_;
  Straightener straightener_;
  std::vector<Composition> stepColumns_;
  // Indexed by step * (n + 1) + w.
  std::vector<std::unordered_map<Filling, Combination, FillingHash>> stepCache_;
};

}  // namespace youngflat
