#ifndef SILT_REPMOD_HPP
#define SILT_REPMOD_HPP

#include "silt/algebra.hpp"

namespace silt {

// Right modules as quiver representations: component dims[v] per vertex, and
// for an arrow a: i -> j a dims[i] x dims[j] matrix acting on row vectors.
// A path acts by the product of its arrow matrices, left to right.
struct Module {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Matrix> arrow_maps;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Module& o) const {
    return alg == o.alg && dims == o.dims && arrow_maps == o.arrow_maps;
  }
};

Module zero_module(const AlgebraPtr& a);
Module simple(const AlgebraPtr& a, int v);
Module projective(const AlgebraPtr& a, int v);
Module injective(const AlgebraPtr& a, int v);
void validate_module(const Module& m);  // relations must act by zero

// Map of modules: per-vertex blocks, x -> x * block[v]; commutes with arrows.
struct ModuleMap {
  Module source, target;
  std::vector<Matrix> blocks;
  bool operator==(const ModuleMap& o) const {
    return source == o.source && target == o.target && blocks == o.blocks;
  }
};

ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap identity_map(const Module& m);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);  // f then g
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(i64 c, const ModuleMap& f);
ModuleMap map_combo(const std::vector<ModuleMap>& basis, const Vec& coeffs);
bool is_module_map(const ModuleMap& f);
bool is_injective_map(const ModuleMap& f);
bool is_surjective_map(const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);
Vec flatten_map(const ModuleMap& f);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);
// the arrow-commutation system whose kernel is Hom(m, n), in the flattened
// block coordinates of flatten_map
Matrix hom_system(const Module& m, const Module& n);

struct SubModule {
  Module sub;
  ModuleMap incl;  // sub -> ambient, injective
};
struct Quotient {
  Module quot;
  ModuleMap proj;  // ambient -> quot, surjective
};

SubModule kernel(const ModuleMap& f);
SubModule image(const ModuleMap& f);  // inside the target
Quotient cokernel(const ModuleMap& f);
SubModule radical(const Module& m);
Quotient top(const Module& m);

// Direct sums with the canonical injections and projections.
struct Sum {
  Module mod;
  std::vector<ModuleMap> inject, project;
};
Sum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);
ModuleMap direct_sum_map(const Sum& src, const Sum& tgt, const std::vector<std::vector<ModuleMap>>& comp);

// Finite sum of vertex projectives with recorded summand structure. The
// component at vertex v is the concatenation, copy by copy, of the path bases
// basis_at(vertex_of_copy, v); gen_pos[k] locates e_{vertex_k} inside the
// component at vertex_k.
struct ProjSum {
  std::vector<int> vertices;  // one entry per copy
  Module mod;
  std::vector<int> gen_pos;
};
ProjSum proj_sum(const AlgebraPtr& a, const std::vector<int>& vertices);
Module regular_module(const AlgebraPtr& a);
ProjSum regular_proj(const AlgebraPtr& a);

// Hom(P_a, N) = N_a: a map out of a projective sum is determined by the rows
// the generators land on.
ModuleMap hom_from_generators(const ProjSum& src, const Module& tgt,
                              const std::vector<Vec>& gen_rows);

struct Cover {
  ProjSum p;
  ModuleMap map;  // p.mod ->> m, kernel inside the radical
};
Cover projective_cover(const Module& m);

// Projective presentation p_minus1 -> p0 -> coker -> 0. entries[i][j] is the
// algebra element carrying copy i of p_minus1 into copy j of p0.
struct Presentation {
  ProjSum pm1, p0;
  std::vector<std::vector<Vec>> entries;
  ModuleMap map;
};
Presentation make_presentation(const AlgebraPtr& a, const std::vector<int>& pm1_verts,
                               const std::vector<int>& p0_verts,
                               const std::vector<std::vector<Vec>>& entries);
std::vector<std::vector<Vec>> extract_entries(const ProjSum& src, const ProjSum& tgt,
                                              const ModuleMap& d);
Presentation direct_sum_pres(const Presentation& x, const Presentation& y);
Presentation min_presentation(const Module& m);
// minimal presentation with the cover kept around
struct MinPres {
  Presentation pres;
  ModuleMap cover;    // p0.mod ->> m
  SubModule ker;      // kernel of the cover
  ModuleMap ker_pre;  // pm1.mod ->> ker.sub (cover of the kernel)
};
MinPres min_presentation_full(const Module& m);

// Ext^1(m, n) through the kernel of the projective cover of m; valid in any
// projective dimension.
struct ExtSpace {
  Module m, n;
  SubModule k;                     // kernel of cover(m)
  ModuleMap cover;                 // p0 ->> m
  std::vector<ModuleMap> cocycles; // maps k.sub -> n spanning a complement
  int dim = 0;
};
ExtSpace ext1(const Module& m, const Module& n);

struct Extension {
  Module e;
  ModuleMap incl_n;  // n -> e
  ModuleMap proj_m;  // e ->> m
};
Extension middle_term(const ExtSpace& ext, const Vec& coeffs);

Module dual_module(const Module& m);       // over the opposite algebra
Module transpose_module(const Module& m);  // over the opposite algebra
Module tau(const Module& m);
Module tau_minus(const Module& m);

SubModule trace(const Module& t, const Module& m);

std::vector<Vec> annihilator(const Module& m);
bool is_faithful(const Module& m);
bool is_sincere(const Module& m);

Matrix path_action(const Module& m, const PathWord& w);

// Randomized isomorphism witness search: equal dims plus an invertible map
// among basis elements and `samples` random combinations. One-sided.
bool is_isomorphic_structural(const Module& m, const Module& n,
                              std::uint64_t seed = 0x51170ULL, int samples = 8);

}  // namespace silt

#endif
