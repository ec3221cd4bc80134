#include "silt/report.hpp"

namespace silt {

Fact fact_rank_is(const Matrix& m, i64 r, const std::string& note) {
  return Fact{"rank_is", note, {m}, {r}};
}

Fact fact_product_is(const Matrix& a, const Matrix& b, const Matrix& c, const std::string& note) {
  return Fact{"product_is", note, {a, b, c}, {}};
}

Fact fact_is_zero(const Matrix& m, const std::string& note) {
  return Fact{"is_zero", note, {m}, {}};
}

Fact fact_count_is(i64 a, i64 b, const std::string& note) {
  return Fact{"count_is", note, {}, {a, b}};
}

bool recheck_fact(const Fact& f) {
  if (f.kind == "rank_is") {
    if (f.mats.size() != 1 || f.ints.size() != 1) return false;
    return rank(f.mats[0]) == f.ints[0];
  }
  if (f.kind == "product_is") {
    if (f.mats.size() != 3) return false;
    const Matrix& a = f.mats[0];
    const Matrix& b = f.mats[1];
    if (a.cols != b.rows || a.p != b.p) return false;
    return mul(a, b) == f.mats[2];
  }
  if (f.kind == "is_zero") {
    if (f.mats.size() != 1) return false;
    return is_zero(f.mats[0]);
  }
  if (f.kind == "count_is") {
    if (f.ints.size() != 2) return false;
    return f.ints[0] == f.ints[1];
  }
  return false;  // unknown kind never passes
}

bool recheck_report(const Report& r) {
  for (const Route& route : r.routes)
    for (const Fact& f : route.facts)
      if (!recheck_fact(f)) return false;
  return true;
}

}  // namespace silt
