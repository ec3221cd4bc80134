#ifndef SILT_INDEC_HPP
#define SILT_INDEC_HPP

#include "silt/repmod.hpp"

namespace silt {

enum class IndStrategy { HereditaryKnitting, NakayamaIntervals, UserSupplied };

IndStrategy strategy_from_name(const std::string& name);
std::string strategy_name(IndStrategy s);

// Catalog of the pairwise non-isomorphic indecomposables of a
// representation-finite algebra, with cached hom and ext dimensions and the
// translate of each entry. Built once, immutable afterwards.
struct IndSet {
  AlgebraPtr alg;
  std::vector<Module> modules;
  std::vector<std::vector<int>> hom_table;  // dim Hom(U_i, U_j)
  std::vector<std::vector<int>> ext_table;  // dim Ext^1(U_i, U_j)
  std::vector<int> tau_map;                 // catalog index of tau(U_i), -1 when it vanishes

  int size() const { return int(modules.size()); }
  // catalog index of a module isomorphic to m, -1 if m is not indecomposable
  // or not covered
  int index_of(const Module& m) const;
};

// hereditary-knitting walks tau-minus orbits from the projectives;
// nakayama-intervals lists the radical-series quotients of the projectives;
// user-supplied validates the given list. The cap bounds the walk so a
// representation-infinite input aborts instead of looping.
IndSet enumerate_indecomposables(const AlgebraPtr& a, IndStrategy strategy,
                                 const std::vector<Module>& supplied = {}, int cap = 200,
                                 std::uint64_t seed = kDefaultSeed);

struct Decomposition {
  std::vector<int> multiplicities;
  int total() const;
  bool is_zero() const { return total() == 0; }
};

// Multiplicities from the hom-count linear system, solved mod p and then
// verified over the integers (dims and both one-sided hom counts).
Decomposition decompose(const Module& m, const IndSet& ind);
bool is_isomorphic(const Module& m, const Module& n, const IndSet& ind);

// Nilpotency scan over a spanning set of End(m) plus `samples` random
// combinations: any non-invertible, non-nilpotent endomorphism certifies a
// splitting. One-sided: a decomposable module can slip through when no such
// witness is sampled.
bool is_indecomposable_certificate(const Module& m, std::uint64_t seed = kDefaultSeed,
                                   int samples = 8);

// dim of End(m) and of its trace-form radical. The trace form computes the
// radical exactly when p exceeds the module dimension, which the default
// prime always does at this scale.
std::pair<int, int> end_ring_dims(const Module& m);

// Randomized splitter: stable kernel and image of random endomorphisms,
// recursively. Returns summands it could not split further. Used as a
// cross-check against decompose, not as the primary route.
std::vector<Module> fitting_split(const Module& m, std::uint64_t seed = kDefaultSeed,
                                  int samples = 24);

}  // namespace silt

#endif
