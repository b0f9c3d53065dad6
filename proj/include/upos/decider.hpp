#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upos/errors.hpp"
#include "upos/lrs.hpp"
#include "upos/torus.hpp"

namespace upos {

enum class Outcome { UltimatelyPositive, NotUltimatelyPositive, Inconclusive };
enum class Reason { ZeroSeq, NoPositiveRealDominant, TorusNonneg, TorusNeg, TorusInconclusive };

/// "UP", "NOT_UP", "INCONCLUSIVE"
std::string to_string(Outcome o);
/// "ZERO_SEQ", "NO_POSITIVE_REAL_DOMINANT", "TORUS_NONNEG", "TORUS_NEG", "TORUS_INCONCLUSIVE"
std::string to_string(Reason r);

/// Outcome for the subsequence v_n = u_{Mn + l}.
struct ResidueReport {
  unsigned long l = 0;
  Outcome outcome = Outcome::Inconclusive;
  Reason reason = Reason::TorusInconclusive;
  /// Torsion point (angles in turns) where the dominant part is negative.
  std::optional<std::vector<Rational>> witness;
  /// Dominant roots of the subsequence.
  std::vector<AlgebraicNumber> dominant_roots;
  /// Relations among gamma_j / rho, present once the torus stage was reached.
  std::optional<RelationLattice> lattice;
  std::optional<TorusVerdict> torus;
  std::string note;
};

struct Diagnostics {
  std::size_t order = 0;
  unsigned long M = 1;
  /// Dominant roots of the minimized input.
  std::vector<AlgebraicNumber> dominant_roots;
  /// Lattice of the first residue that reached the torus stage.
  IntMatrix lattice_basis;
  /// Stabilized if any residue's search was; empty if no lattice was computed.
  std::optional<Completeness> lattice_completeness;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::vector<ResidueReport> residues;
  Diagnostics diagnostics;
};

/// Raised when a global step (roots, closed form, decomposition) runs out of
/// budget; carries what was known at that point.
class DecisionLimit : public ResourceLimit {
 public:
  DecisionLimit(const std::string& what, Diagnostics partial)
      : ResourceLimit(what), partial_(std::move(partial)) {}
  const Diagnostics& partial() const { return partial_; }

 private:
  Diagnostics partial_;
};

/// Throws NotSimple if the minimal recurrence has a repeated root.
Verdict decide_ultimate_positivity(const LRSRep& u, const Budgets& budgets = {});

/// Roots of maximal modulus among the terms (exact comparison).
std::vector<std::size_t> dominant_terms(const ClosedForm& cf);

}  // namespace upos
