#ifndef SILT_TWOTERM_HPP
#define SILT_TWOTERM_HPP

#include "silt/silting.hpp"

namespace silt {

// Complex of projectives concentrated in degrees -1 and 0, carried by a
// presentation. H^0 is its cokernel, H^{-1} its kernel.
struct TwoTermComplex {
  Presentation pres;
};

TwoTermComplex two_term(const Presentation& p);

Module h0(const TwoTermComplex& s);
Module h_minus1(const TwoTermComplex& s);

// H^i of the total Hom complex Hom(s, g): chain maps modulo homotopy at
// degree 0, homotopy kernel at -1, obstruction cokernel at +1. When the
// dimension is positive a representing cocycle is returned: the (u, v)
// square components at degree 0, the single leg otherwise.
struct HomVerdict {
  int degree = 0;
  int dim = 0;
  std::vector<ModuleMap> witness;
};

HomVerdict hom_complex_dim(const TwoTermComplex& s, const TwoTermComplex& g, int i);

// Verdict: no self-extension in degree 1. The coproduct half of the
// condition is automatic for finite sums and only recorded.
Report is_presilting(const TwoTermComplex& s);

// Two routes that must agree: (a) presilting with (D_sigma, (H^0)°) a torsion
// pair on the catalog; (b) H^0 silting with respect to the complex itself.
Report is_two_silting(const TwoTermComplex& s, const IndSet& ind);

// dim Hom_{D(A)}(s, x[i]) for i in {0, 1}: kernel resp. cokernel of the
// induced map Hom(p0, x) -> Hom(p_minus1, x).
int module_stalk_derived_hom(const TwoTermComplex& s, const Module& x, int i);

// The silting classes pushed through the support completion, each certified
// 2-silting. Pairwise inequivalent: equivalence of 2-term complexes is
// decided through their cokernel classes.
std::vector<TwoTermComplex> enumerate_two_silting(const AlgebraPtr& a, const IndSet& ind);

// Certifies that taking cokernels is a bijection between the enumerated
// 2-silting complexes and the enumerated silting classes: images are silting,
// distinct classes stay distinct, and support completion of the image lands
// back in the source class.
Report verify_h0_bijection(const AlgebraPtr& a, const IndSet& ind);

}  // namespace silt

#endif
