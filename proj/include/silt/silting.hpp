#ifndef SILT_SILTING_HPP
#define SILT_SILTING_HPP

#include "silt/torsion.hpp"

namespace silt {

// The induced map Hom(p0, X) -> Hom(p_minus1, X) in generator coordinates:
// Hom of a projective sum is the direct sum of the vertex components of X, so
// the map is one matrix acting on row vectors. X lies in D_sigma iff it is
// surjective, i.e. rank == cols.
Matrix dsigma_matrix(const Presentation& sigma, const Module& x);
bool dsigma_contains(const Presentation& sigma, const Module& x);
Fact dsigma_fact(const Presentation& sigma, const Module& x, const std::string& label);

bool is_tau_rigid(const Module& t);

// Vertices where t vanishes, and the support completion: the minimal
// presentation summed with (P_i -> 0) for each such vertex. D of the result
// cuts Gen(t) out of D of the minimal presentation.
std::vector<int> support_idempotent(const Module& t);
Presentation sigma_tilde(const Module& t);

// Whether t together with sigma is partial silting: t itself must lie in
// D_sigma. D_sigma is a torsion class automatically here because sigma is a
// map of finitely generated projectives; the report records that. With the
// default (minimal) presentation the verdict coincides with tau-rigidity,
// which is cross-checked; for an explicit sigma only the one-way implication
// membership => tau-rigid is enforced.
Report is_partial_silting(const Module& t, const IndSet& ind);
Report is_partial_silting(const Module& t, const Presentation& sigma, const IndSet& ind);

// Silting via two independent routes that must agree: (a) Gen(t) equals
// D_{sigma_tilde(t)} on the catalog; (b) t is tau-rigid with as many distinct
// summands as supported vertices.
Report is_silting(const Module& t, const IndSet& ind);

// The presentation-sensitive predicate: Gen(t) = D_sigma on the catalog for
// the given sigma presenting t. A module can pass with one presentation and
// fail with another; is_silting above always uses the support completion.
Report is_silting_with_respect_to(const Module& t, const Presentation& sigma, const IndSet& ind);

// Three routes: (a) Gen(t) = {X : Ext^1(t,X) = 0} on the catalog; (b) the
// minimal presentation is injective and t is silting with respect to it;
// (c) t is faithful and silting.
Report is_tilting(const Module& t, const IndSet& ind);

// Gen(t) = submodule-closure(Gen t) ∩ t-Ext-perp, cross-checked against
// Pres(t) = Gen(t) plus Ext-projectivity, and against is_silting.
Report is_quasitilting(const Module& t, const IndSet& ind);

struct ApproximationSequence {
  ModuleMap phi;        // A -> t0, a left D_sigma-approximation
  Module t0, t1;        // both in Add(t)
  ModuleMap coker_proj; // t0 ->> t1 with kernel = image of phi
  Report cert;
};

// The exact sequence A -> T0 -> T1 -> 0 with T0, T1 in Add(t) and the first
// map a left D_sigma-approximation. Starts from the universal map into the
// hom-counted bundle of summands of t and greedily deletes summand slots
// while the factorization certificate survives.
ApproximationSequence left_approximation(const Module& t, const Presentation& sigma,
                                         const IndSet& ind);

struct Completion {
  Module t;           // the input
  Module complement;  // M with t ⊕ M silting
  Presentation sigma_bar;
  Report certificate;
};

// Bongartz completion: bundle a basis of Hom(p_minus1, A) into
// psi: p_minus1^d -> A, take M = coker(psi, -sigma^d), and certify that
// t ⊕ M is silting with Gen(t ⊕ M) = D_sigma on the catalog.
Completion bongartz_complete(const Module& t, const Presentation& sigma, const IndSet& ind);

// Silting modules are equivalent when they generate the same torsion class.
bool equivalent_silting(const Module& t1, const Module& t2, const IndSet& ind);

}  // namespace silt

#endif
