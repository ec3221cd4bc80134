#ifndef SILT_TESTS_FIXTURES_HPP
#define SILT_TESTS_FIXTURES_HPP

#include "silt/algebra.hpp"

namespace silt::fixtures {

// one vertex, no arrows
inline AlgebraPtr a1(i64 p = kDefaultPrime) {
  Quiver q;
  q.vertices = {"1"};
  return Algebra::build(q, {}, 2, p);
}

// 1 --alpha--> 2
inline AlgebraPtr a2(i64 p = kDefaultPrime) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"alpha", 0, 1}};
  return Algebra::build(q, {}, 3, p);
}

// 1 --alpha--> 2 --beta--> 3
inline AlgebraPtr a3(i64 p = kDefaultPrime) {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}};
  return Algebra::build(q, {}, 4, p);
}

// cyclic 1 -> 2 -> 3 -> 1 with all length-2 paths zero
inline AlgebraPtr n3(i64 p = kDefaultPrime) {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 0}};
  std::vector<Relation> rels = {
      {{1, {0, 1}}},  // alpha*beta
      {{1, {1, 2}}},  // beta*gamma
      {{1, {2, 0}}},  // gamma*alpha
  };
  return Algebra::build(q, rels, 3, p);
}

}  // namespace silt::fixtures

#endif
