#ifndef SILT_ALGEBRA_HPP
#define SILT_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "silt/exactlin.hpp"

namespace silt {

struct Arrow {
  std::string name;
  int from = -1, to = -1;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& name) const;
};

// Composition is written left to right: in a word {a1, a2} the path runs
// a1 then a2, so to(a1) == from(a2).
struct PathWord {
  int source = -1;
  std::vector<int> arrows;
  int target = -1;
  int length() const { return int(arrows.size()); }
  bool operator<(const PathWord& o) const;
  bool operator==(const PathWord& o) const { return source == o.source && arrows == o.arrows; }
};

struct RelTerm {
  i64 coeff = 0;
  std::vector<int> arrows;
};
using Relation = std::vector<RelTerm>;

// Finite-dimensional quotient of a path algebra by an admissible ideal.
// Basis: the window paths of length < length_cap that survive reduction
// modulo the relation span (longest path first, lexicographic tie-break).
// Construction fails with CapTooSmall unless every path of length equal to
// length_cap reduces to zero, which certifies J^cap = 0 in the quotient.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> build(Quiver q, std::vector<Relation> rels,
                                              int length_cap, i64 p = kDefaultPrime);

  const Quiver& quiver() const { return quiver_; }
  const Fp& field() const { return field_; }
  i64 p() const { return field_.p; }
  int n_vertices() const { return int(quiver_.vertices.size()); }
  int n_arrows() const { return int(quiver_.arrows.size()); }
  int dim() const { return int(basis_.size()); }
  int length_cap() const { return cap_; }
  int nilpotency_degree() const { return nilpotency_; }
  const std::vector<Relation>& relations() const { return relations_; }

  const std::vector<PathWord>& basis_paths() const { return basis_; }
  int basis_source(int k) const { return basis_[k].source; }
  int basis_target(int k) const { return basis_[k].target; }
  int basis_length(int k) const { return basis_[k].length(); }
  std::string basis_name(int k) const;
  // e_v sits at basis index v (trivial paths come first, in vertex order).
  int idempotent(int v) const { return v; }
  const std::vector<int>& basis_at(int s, int t) const;

  Vec zero_elt() const { return Vec(dim(), 0); }
  Vec unit_elt() const;
  Vec idempotent_elt(int v) const;
  Vec basis_elt(int k) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  // Normal form of an arbitrary composable word; words of length >= cap are 0.
  Vec path_normal_form(const PathWord& w) const;

  bool is_hereditary() const { return relations_.empty(); }
  bool is_nakayama() const;

  // The opposite algebra (arrows and relation words reversed). Cached; the
  // opposite of the opposite is this object again.
  std::shared_ptr<const Algebra> opposite() const;

 private:
  Algebra(Quiver q, std::vector<Relation> rels, int cap, i64 p)
      : field_(p), quiver_(std::move(q)), relations_(std::move(rels)), cap_(cap) {}
  void construct();

  Fp field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  int cap_;
  int nilpotency_ = 1;
  std::vector<PathWord> basis_;
  std::map<std::pair<int, int>, std::vector<int>> basis_by_pair_;
  std::map<PathWord, Vec> normal_form_;       // window paths (length <= cap)
  std::vector<std::vector<Vec>> mult_;        // mult_[i][j] = basis_i * basis_j
  mutable std::mutex op_mu_;
  mutable std::weak_ptr<const Algebra> op_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

PathWord reverse_word(const PathWord& w);

}  // namespace silt

#endif
