#ifndef SILT_VERIFY_HPP
#define SILT_VERIFY_HPP

#include "silt/torsion.hpp"
#include "silt/twoterm.hpp"

namespace silt {

// Runs every layer's invariant suite against one algebra: algebra arithmetic,
// catalog integrity, hom/ext/translate laws, D-class calculus, the silting
// census with its torsion-pair and Ext-projective laws, and the two-term
// correspondence. One route per suite; verdict true iff every suite passes.
// The first counterexample of a failing suite lands in the witnesses.
Report verify_all(const AlgebraPtr& a, const IndSet& ind, std::uint64_t seed = kDefaultSeed);

}  // namespace silt

#endif
