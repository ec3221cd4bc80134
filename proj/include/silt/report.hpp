#ifndef SILT_REPORT_HPP
#define SILT_REPORT_HPP

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "silt/exactlin.hpp"

namespace silt {

// A single recheckable claim. Every kind reduces to exact linear algebra so a
// verifier needs nothing beyond the field layer:
//   rank_is     rank(mats[0]) == ints[0]
//   product_is  mats[0] * mats[1] == mats[2]
//   is_zero     mats[0] == 0
//   count_is    ints[0] == ints[1]
// The note says what the numbers mean; the verdict logic lives with the
// producer, the recheck only replays the arithmetic.
struct Fact {
  std::string kind;
  std::string note;
  std::vector<Matrix> mats;
  std::vector<i64> ints;
};

Fact fact_rank_is(const Matrix& m, i64 r, const std::string& note);
Fact fact_product_is(const Matrix& a, const Matrix& b, const Matrix& c, const std::string& note);
Fact fact_is_zero(const Matrix& m, const std::string& note);
Fact fact_count_is(i64 a, i64 b, const std::string& note);

// One independent way of settling the question, with its supporting facts.
struct Route {
  std::string name;
  bool verdict = false;
  std::vector<Fact> facts;
};

struct Report {
  bool verdict = false;
  // deque: add_route hands out references that must survive later additions
  std::deque<Route> routes;
  std::vector<std::pair<std::string, std::string>> witnesses;

  Route& add_route(const std::string& name) {
    routes.push_back({name, false, {}});
    return routes.back();
  }
  void witness(const std::string& key, const std::string& value) {
    witnesses.emplace_back(key, value);
  }
};

// Routes that must agree disagreed: the theorem tying them together failed at
// runtime. Carries the full report so both certificates survive the abort.
struct VerdictError : Error {
  Report report;
  VerdictError(const std::string& msg, Report rep)
      : Error(ErrKind::VerdictDisagreement, msg), report(std::move(rep)) {}
};

// Replays a fact's arithmetic; false means the certificate does not hold.
bool recheck_fact(const Fact& f);
bool recheck_report(const Report& r);

}  // namespace silt

#endif
