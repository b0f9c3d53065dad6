#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upos/relations.hpp"

namespace upos {

/// Search and precision limits shared by the torus checker and the decider.
struct Budgets {
  long precision_bits = 128;
  long masser_cap = 20;
  int bnb_depth = 24;
  long torsion_denominator_max = 64;
};

/// f(z) = b + sum_j (c_j z_j + conj(c_j) conj(z_j)) restricted to a subtorus.
struct TorusProblem {
  AlgebraicNumber b;
  std::vector<AlgebraicNumber> cs;
  TorusDecomposition torus;
};

enum class TorusOutcome { Nonneg, NegWitness, Inconclusive };
enum class TorusStage { Finite, FullTorus, OneParameter, Search };

std::string to_string(TorusOutcome o);
std::string to_string(TorusStage s);

struct TorusVerdict {
  TorusOutcome outcome = TorusOutcome::Inconclusive;
  TorusStage stage = TorusStage::Search;
  /// Angles q_j (in turns) of a point of the torus with f < 0.
  std::optional<std::vector<Rational>> witness;
  /// Certified upper bound on f(witness), negative.
  std::optional<Rational> witness_bound;
  /// Exact minimum of f when the stage computes it.
  std::optional<AlgebraicNumber> minimum;
  /// Certified enclosure of min f (search stage).
  std::optional<Rational> lower_bound;
  std::optional<Rational> upper_bound;
  std::string report;
};

/// b - 2 sum |c_j|, the minimum of f over the full torus.
AlgebraicNumber min_full_torus(const AlgebraicNumber& b, const std::vector<AlgebraicNumber>& cs);

/// Exact f at (exp(2 pi i q_1), ...); throws InvalidInput if the point
/// violates a relation of the torus.
AlgebraicNumber eval_at_torsion(const TorusProblem& problem, const std::vector<Rational>& point);

/// Sign of f at a torsion point: outward-rounded enclosures at growing
/// precision, then exact evaluation if they cannot separate f from 0.
int sign_at_torsion(const TorusProblem& problem, const std::vector<Rational>& point);

TorusVerdict decide_nonneg(const TorusProblem& problem, const Budgets& budgets = {});

/// Upper bound on torsion points tried by the search stage.
inline constexpr std::size_t kMaxTorsionSamples = 1u << 20;
/// Upper bound on boxes processed by branch and bound.
inline constexpr std::size_t kMaxBoxes = 1u << 18;

}  // namespace upos
