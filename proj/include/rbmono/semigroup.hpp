#pragma once

#include <optional>
#include <vector>

#include "rbmono/operator.hpp"

namespace rbmono {

// gcd of a nonempty set of naturals, not all zero.
Exp gcd_of_set(const std::vector<Exp>& values);

// The monoid generated by `generators` inside the naturals, explored up to
// `bound`. `gaps`, `frobenius` and `conductor` describe the numerical
// semigroup obtained after dividing out gcd(generators); they are exact
// only when `certified` is true, which holds as soon as the exploration
// window contains a run of min-generator many consecutive members (every
// larger value is then a member too).
struct SemigroupView {
  std::vector<Exp> generators;  // sorted, deduplicated, positive
  Exp gcd = 1;
  Exp bound = 0;
  std::vector<Exp> elements;        // members of the monoid in [0, bound]
  std::vector<Exp> gaps;            // non-members of the normalized semigroup
  std::optional<Exp> frobenius;     // largest gap; nullopt when gap-free
  std::optional<Exp> conductor;     // least x with x + N inside; certified only
  bool certified = false;
};

SemigroupView semigroup_closure(const std::vector<Exp>& generators, Exp bound);

// The support of a weight-zero monomial operator, written as a disjoint
// union of residue classes s_i + dN. `verified_up_to` records the range on
// which the biconditional "n in support iff n mod d in residues" was
// actually checked; nothing is claimed beyond it.
struct SupportDecomposition {
  Exp d = 1;
  std::vector<Exp> residues;  // strictly increasing, within [0, d-1]
  Exp verified_up_to = 0;
};

// Throws ZeroOperator when the support is empty, InsufficientData when no
// positive theta value is available to infer d, InconsistentDecomposition
// (with a counterexample) when the residue test fails.
SupportDecomposition decompose_support(const MonomialOperator& op,
                                       Exp n_bound);

}  // namespace rbmono
