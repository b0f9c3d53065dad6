#pragma once

#include <string>
#include <vector>

#include "upos/algebraic.hpp"
#include "upos/lattice.hpp"

namespace upos {

enum class Completeness { Exhaustive, Stabilized };

std::string to_string(Completeness c);

/// Sublattice of the multiplicative relations among s unit-modulus numbers.
struct RelationLattice {
  std::size_t s = 0;
  IntMatrix basis;  // Hermite form, independent rows
  Completeness completeness = Completeness::Exhaustive;
  long precision_bits = 0;  // precision at which a STABILIZED search settled

  std::size_t rank() const { return basis.size(); }
};

/// theta_j with lambda_j = exp(2 pi i theta_j), normalized into [0, 1)
/// up to the enclosure width.
struct ArgVector {
  std::vector<Interval> theta;
  long precision = 0;
};

ArgVector arg_vector(const std::vector<AlgebraicNumber>& lambdas, long bits);

/// Largest exponent accepted by verify_relation.
inline constexpr long kMaxRelationExponent = 1L << 16;
/// Enumeration budget below which find_relations searches exhaustively.
inline constexpr unsigned long kExhaustiveLimit = 100000;
/// Precision at which the stabilization loop gives up doubling.
inline constexpr long kMaxRelationPrecision = 4096;

/// Exact test of prod lambda_j^{v_j} = 1; throws ResourceLimit for
/// exponents beyond kMaxRelationExponent or degree blow-up.
bool verify_relation(const std::vector<AlgebraicNumber>& lambdas, const IntVector& v);

RelationLattice find_relations(const std::vector<AlgebraicNumber>& lambdas, long masser_cap, long precision);

/// (1/M)(L intersected with M Z^s)
RelationLattice scale_lattice(const RelationLattice& L, unsigned long M);

/// Points of T(lambda) are exp(2 pi i (offset + freq * phi)) for phi in [0,1)^r,
/// one family per coset offset.
struct TorusDecomposition {
  std::size_t s = 0;
  std::size_t r = 0;
  IntMatrix freq;  // s rows, r columns
  std::vector<std::vector<Rational>> cosets;
  IntMatrix relations;  // Hermite basis of the lattice cutting out the torus
};

/// Upper bound on the number of torsion cosets materialized.
inline constexpr std::size_t kMaxCosets = 1u << 20;

TorusDecomposition parametrize_torus(const RelationLattice& L);

}  // namespace upos
