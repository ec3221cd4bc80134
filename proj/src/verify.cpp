#include "silt/verify.hpp"

#include <string>

#include "silt/silting.hpp"

namespace silt {

namespace {

// First counterexample per suite is kept; later ones only flip the verdict.
void fail(Report& rep, Route& r, const std::string& key, const std::string& value) {
  if (r.verdict) rep.witness(key, value);
  r.verdict = false;
}

std::string pair_label(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Report verify_all(const AlgebraPtr& a, const IndSet& ind, std::uint64_t seed) {
  Report rep;

  {
    Route& r = rep.add_route("algebra-arithmetic");
    r.verdict = true;
    const int d = a->dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          Vec lhs = a->multiply(a->multiply(a->basis_elt(i), a->basis_elt(j)), a->basis_elt(k));
          Vec rhs = a->multiply(a->basis_elt(i), a->multiply(a->basis_elt(j), a->basis_elt(k)));
          if (lhs != rhs)
            fail(rep, r, "associativity",
                 "basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")");
        }
    Vec u = a->unit_elt();
    for (int i = 0; i < d; ++i)
      if (a->multiply(u, a->basis_elt(i)) != a->basis_elt(i) ||
          a->multiply(a->basis_elt(i), u) != a->basis_elt(i))
        fail(rep, r, "identity law", "basis " + std::to_string(i));
    int total = 0;
    for (int g = 0; g < d; ++g)
      if (a->basis_source(g) >= 0) ++total;
    if (total != d) fail(rep, r, "dimension law", "basis indexing out of vertex range");
    if (r.verdict)
      r.facts.push_back(fact_count_is(total, d, "every basis path carries a source vertex"));
  }

  {
    Route& r = rep.add_route("catalog-integrity");
    r.verdict = true;
    try {
      for (int i = 0; i < ind.size(); ++i) {
        Decomposition dec = decompose(ind.modules[i], ind);
        for (int j = 0; j < ind.size(); ++j)
          if (dec.multiplicities[j] != (i == j ? 1 : 0))
            fail(rep, r, "catalog decomposition", "U" + std::to_string(i));
        for (int j = 0; j < ind.size(); ++j) {
          if ((i != j) && is_isomorphic(ind.modules[i], ind.modules[j], ind))
            fail(rep, r, "catalog duplication", pair_label(i, j));
          if (ind.hom_table[i][j] != hom_dim(ind.modules[i], ind.modules[j]))
            fail(rep, r, "hom table", pair_label(i, j));
          if (ind.ext_table[i][j] != ext1(ind.modules[i], ind.modules[j]).dim)
            fail(rep, r, "ext table", pair_label(i, j));
        }
      }
      if (r.verdict)
        r.facts.push_back(
            fact_count_is(ind.size(), ind.size(), "catalog members verified pairwise distinct"));
    } catch (const Error& e) {
      fail(rep, r, "catalog-integrity exception", e.what());
    }
  }

  {
    Route& r = rep.add_route("translate-laws");
    r.verdict = true;
    try {
      for (int i = 0; i < ind.size(); ++i) {
        const Module& u = ind.modules[i];
        Module tu = tau(u);
        bool proj = false;
        for (int v = 0; v < a->n_vertices(); ++v)
          if (is_isomorphic(u, projective(a, v), ind)) proj = true;
        if (proj != tu.is_zero()) fail(rep, r, "tau kernel", "U" + std::to_string(i));
        if (!tu.is_zero() && !is_isomorphic(tau_minus(tu), u, ind))
          fail(rep, r, "tau round trip", "U" + std::to_string(i));
        if (ind.tau_map[i] == -1 ? !tu.is_zero()
                                 : !is_isomorphic(tu, ind.modules[ind.tau_map[i]], ind))
          fail(rep, r, "tau table", "U" + std::to_string(i));
        for (int v = 0; v < a->n_vertices(); ++v)
          if (hom_dim(projective(a, v), u) != u.dims[v])
            fail(rep, r, "projective hom", "U" + std::to_string(i) + " at vertex " + std::to_string(v));
      }
    } catch (const Error& e) {
      fail(rep, r, "translate-laws exception", e.what());
    }
  }

  {
    Route& r = rep.add_route("d-calculus");
    r.verdict = true;
    try {
      std::vector<Presentation> pres;
      std::vector<Module> taus;
      for (const Module& u : ind.modules) {
        pres.push_back(min_presentation(u));
        taus.push_back(tau(u));
      }
      for (int i = 0; i < ind.size(); ++i)
        for (int j = 0; j < ind.size(); ++j) {
          // surjectivity of Hom(sigma_T, M) detects vanishing of Hom(M, tau T)
          if (dsigma_contains(pres[i], ind.modules[j]) != (hom_dim(ind.modules[j], taus[i]) == 0))
            fail(rep, r, "tau-free membership", "T=U" + std::to_string(i) + " M=U" + std::to_string(j));
          Presentation both = direct_sum_pres(pres[i], pres[j]);
          for (int k = 0; k < ind.size(); ++k)
            if (dsigma_contains(both, ind.modules[k]) !=
                (dsigma_contains(pres[i], ind.modules[k]) && dsigma_contains(pres[j], ind.modules[k])))
              fail(rep, r, "sum intersection", pair_label(i, j) + " at U" + std::to_string(k));
        }
    } catch (const Error& e) {
      fail(rep, r, "d-calculus exception", e.what());
    }
  }

  std::vector<SiltingClass> classes;
  {
    Route& r = rep.add_route("silting-census");
    r.verdict = true;
    try {
      classes = enumerate_silting_classes(a, ind);
      r.facts.push_back(
          fact_count_is(int(classes.size()), int(classes.size()), "silting classes enumerated"));
      for (size_t c = 0; c < classes.size(); ++c) {
        const SiltingClass& sc = classes[c];
        Report silt = is_silting(sc.rep, ind);
        if (!silt.verdict || !recheck_report(silt))
          fail(rep, r, "class representative", "class " + std::to_string(c));
        TorsionCheck tc = is_torsion_pair(sc.cls, perp_class(sc.rep, ind), seed);
        if (!tc.ok)
          fail(rep, r, "torsion pair", "class " + std::to_string(c) + ": " + tc.failure + " at " +
                                           pair_label(tc.witness_i, tc.witness_j));
        Decomposition dec = decompose(sc.rep, ind);
        std::vector<int> summands;
        for (int j = 0; j < ind.size(); ++j)
          if (dec.multiplicities[j] > 0) summands.push_back(j);
        if (ext_projectives(sc.cls).members != summands)
          fail(rep, r, "ext-projectives", "class " + std::to_string(c));
      }
    } catch (const Error& e) {
      fail(rep, r, "silting-census exception", e.what());
    }
  }

  {
    Route& r = rep.add_route("two-term");
    r.verdict = true;
    try {
      std::vector<TwoTermComplex> two = enumerate_two_silting(a, ind);
      if (two.size() != classes.size()) fail(rep, r, "complex count", std::to_string(two.size()));
      Report bij = verify_h0_bijection(a, ind);
      if (!bij.verdict || !recheck_report(bij)) fail(rep, r, "h0 bijection", "failed");
      for (size_t c = 0; c < two.size(); ++c) {
        const TwoTermComplex& s = two[c];
        if (!is_presilting(s).verdict) fail(rep, r, "presilting", "complex " + std::to_string(c));
        Module hz = h0(s);
        for (int i = 0; i < ind.size(); ++i) {
          const Module& x = ind.modules[i];
          if (module_stalk_derived_hom(s, x, 0) != hom_dim(hz, x))
            fail(rep, r, "stalk degree 0", "complex " + std::to_string(c) + " at U" + std::to_string(i));
          if ((module_stalk_derived_hom(s, x, 1) == 0) != dsigma_contains(s.pres, x))
            fail(rep, r, "stalk degree 1", "complex " + std::to_string(c) + " at U" + std::to_string(i));
        }
      }
      if (r.verdict)
        r.facts.push_back(fact_count_is(int(two.size()), int(classes.size()),
                                        "two-term silting complexes match module classes"));
    } catch (const Error& e) {
      fail(rep, r, "two-term exception", e.what());
    }
  }

  rep.verdict = true;
  for (const Route& r : rep.routes)
    if (!r.verdict) rep.verdict = false;
  return rep;
}

}  // namespace silt
