#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>

#include "silt/io.hpp"
#include "silt/silting.hpp"
#include "silt/twoterm.hpp"
#include "silt/verify.hpp"

using namespace silt;
namespace fs = std::filesystem;

namespace {

// 0 verdict true / success, 1 verdict false, 2 input problem, 3 broken
// internal invariant. Precondition failures that answer the user's question
// ("this module is not silting") count as verdict false.
int exit_code_for(ErrKind k) {
  switch (k) {
    case ErrKind::Parse:
    case ErrKind::NotAdmissible:
    case ErrKind::CapTooSmall:
    case ErrKind::FieldTooSmall:
    case ErrKind::PresentationMismatch:
    case ErrKind::StrategyMismatch:
    case ErrKind::NotRepresentationFinite:
    case ErrKind::DegreeOutOfRange:
      return 2;
    case ErrKind::NotSilting:
    case ErrKind::NotPartialSilting:
      return 1;
    default:
      return 3;
  }
}

struct Options {
  std::string algebra_file;
  std::string module_file;
  std::string complex_file;
  std::string ind_file;
  std::string out_dir;
  std::string strategy = "auto";
  std::string kind = "silting";
  std::uint64_t seed = kDefaultSeed;
  i64 p_override = 0;
  bool recheck = false;
};

IndSet make_catalog(const AlgebraPtr& a, const Options& opt) {
  if (!opt.ind_file.empty()) return load_indset(opt.ind_file, a);
  IndStrategy s;
  if (opt.strategy == "auto") {
    if (a->is_hereditary())
      s = IndStrategy::HereditaryKnitting;
    else if (a->is_nakayama())
      s = IndStrategy::NakayamaIntervals;
    else
      throw Error(ErrKind::StrategyMismatch,
                  "no automatic catalog for this algebra; pass --strategy or --ind");
  } else {
    s = strategy_from_name(opt.strategy);
    if (s == IndStrategy::UserSupplied)
      throw Error(ErrKind::StrategyMismatch, "user-supplied catalogs come from --ind");
  }
  return enumerate_indecomposables(a, s, {}, 200, opt.seed);
}

void emit(const Report& rep, const Options& opt, const std::string& verb) {
  std::string text = report_json(rep);
  if (opt.recheck) {
    Report replay = parse_report_json(text);
    if (!recheck_report(replay))
      throw Error(ErrKind::CertificationFailure, "serialized certificate failed its replay");
  }
  std::cout << text;
  std::string routes;
  for (const Route& r : rep.routes) {
    if (!routes.empty()) routes += ", ";
    routes += r.name + "=" + (r.verdict ? "ok" : "fail");
  }
  std::cerr << verb << ": verdict " << (rep.verdict ? "true" : "false")
            << (routes.empty() ? "" : " (" + routes + ")") << "\n";
}

Report tau_rigid_report(const Module& t) {
  Report rep;
  Route& r = rep.add_route("hom-into-translate");
  Module tt = tau(t);
  Matrix sys = hom_system(t, tt);
  int rk = rank(sys);
  r.facts.push_back(fact_rank_is(
      sys, rk, "commutation system for Hom(T, tau T); hom dim = " + std::to_string(sys.cols - rk)));
  r.verdict = (sys.cols - rk == 0);
  rep.verdict = r.verdict;
  return rep;
}

std::string ensure_dir(const std::string& dir) {
  fs::create_directories(dir);
  return dir;
}

int dispatch(const std::string& verb, const Options& opt) {
  AlgebraPtr a = load_algebra(opt.algebra_file, opt.p_override);
  IndSet ind = make_catalog(a, opt);

  auto need_module = [&]() {
    if (opt.module_file.empty()) throw Error(ErrKind::Parse, "this verb needs -M <module.json>");
    return load_module(opt.module_file, a);
  };
  auto need_complex = [&]() {
    if (opt.complex_file.empty()) throw Error(ErrKind::Parse, "this verb needs -C <complex.json>");
    return load_presentation(opt.complex_file, a);
  };
  auto chosen_presentation = [&](const Module& t) {
    return opt.complex_file.empty() ? min_presentation(t) : need_complex();
  };

  if (verb == "check-tau-rigid") {
    Report rep = tau_rigid_report(need_module());
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "check-partial-silting") {
    Module t = need_module();
    Report rep = opt.complex_file.empty() ? is_partial_silting(t, ind)
                                          : is_partial_silting(t, need_complex(), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "check-silting") {
    Module t = need_module();
    Report rep = opt.complex_file.empty() ? is_silting(t, ind)
                                          : is_silting_with_respect_to(t, need_complex(), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "check-tilting") {
    Report rep = is_tilting(need_module(), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "check-quasitilting") {
    Report rep = is_quasitilting(need_module(), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "complete") {
    Module t = need_module();
    Completion c = bongartz_complete(t, chosen_presentation(t), ind);
    if (!opt.out_dir.empty()) {
      std::string dir = ensure_dir(opt.out_dir);
      std::string ref = fs::absolute(opt.algebra_file).string();
      save_module(c.complement, (fs::path(dir) / "complement.json").string(), ref);
      save_presentation(c.sigma_bar, (fs::path(dir) / "sigma_bar.json").string(), ref);
    }
    emit(c.certificate, opt, verb);
    return c.certificate.verdict ? 0 : 1;
  }
  if (verb == "approximate") {
    Module t = need_module();
    Presentation sigma = opt.complex_file.empty() ? sigma_tilde(t) : need_complex();
    ApproximationSequence seq = left_approximation(t, sigma, ind);
    if (!opt.out_dir.empty()) {
      std::string dir = ensure_dir(opt.out_dir);
      std::string ref = fs::absolute(opt.algebra_file).string();
      save_module(seq.t0, (fs::path(dir) / "t0.json").string(), ref);
      save_module(seq.t1, (fs::path(dir) / "t1.json").string(), ref);
    }
    emit(seq.cert, opt, verb);
    return seq.cert.verdict ? 0 : 1;
  }
  if (verb == "check-presilting") {
    Report rep = is_presilting(two_term(need_complex()));
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "check-2silting") {
    Report rep = is_two_silting(two_term(need_complex()), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "enumerate") {
    if (opt.kind != "silting" && opt.kind != "2silting")
      throw Error(ErrKind::Parse, "--kind is silting or 2silting");
    std::vector<SiltingClass> classes = enumerate_silting_classes(a, ind);
    std::vector<std::string> files;
    std::string ref = fs::absolute(opt.algebra_file).string();
    for (size_t k = 0; k < classes.size(); ++k) {
      std::string name = "class_" + std::to_string(k) + ".json";
      if (!opt.out_dir.empty()) {
        std::string dir = ensure_dir(opt.out_dir);
        save_module(classes[k].rep, (fs::path(dir) / name).string(), ref);
        if (opt.kind == "2silting")
          save_presentation(sigma_tilde(classes[k].rep),
                            (fs::path(dir) / ("complex_" + std::to_string(k) + ".json")).string(), ref);
      }
      files.push_back(name);
    }
    if (opt.kind == "2silting" && enumerate_two_silting(a, ind).size() != classes.size())
      throw Error(ErrKind::CertificationFailure, "complex census diverged from the module census");
    std::cout << enumerate_json(classes, files);
    std::cerr << "enumerate: " << classes.size() << " " << opt.kind << " classes\n";
    return 0;
  }
  if (verb == "verify-bijection") {
    Report rep = verify_h0_bijection(a, ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "hrs-report") {
    Report rep = hrs_report(need_module(), ind);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 1;
  }
  if (verb == "verify-all") {
    Report rep = verify_all(a, ind, opt.seed);
    emit(rep, opt, verb);
    return rep.verdict ? 0 : 3;  // any invariant failure is an internal error
  }
  throw Error(ErrKind::Parse, "unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"silting toolkit for bound quiver algebras"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"check-tau-rigid", "vanishing of Hom(T, tau T)"},
      {"check-partial-silting", "T lies in D of its presentation"},
      {"check-silting", "Gen(T) = D of the support completion (or of -C)"},
      {"check-tilting", "three tilting characterizations, cross-checked"},
      {"check-quasitilting", "three quasitilting characterizations, cross-checked"},
      {"complete", "Bongartz completion of a partial silting pair"},
      {"approximate", "left approximation A -> T0 -> T1 -> 0"},
      {"check-presilting", "two-term complex with no degree-1 self-homs"},
      {"check-2silting", "two-term silting complex, both routes"},
      {"enumerate", "census of silting classes (--kind silting|2silting)"},
      {"verify-bijection", "module classes match two-term complexes"},
      {"hrs-report", "aisle and co-aisle of the induced t-structure"},
      {"verify-all", "every layer's invariant suite against one algebra"},
  };
  for (const auto& [name, desc] : verbs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("-A,--algebra", opt.algebra_file, "algebra file (JSON)")->required();
    sub->add_option("-M,--module", opt.module_file, "module file (JSON)");
    sub->add_option("-C,--complex", opt.complex_file, "two-term complex file (JSON)");
    sub->add_option("--ind", opt.ind_file, "catalog cache file");
    sub->add_option("--strategy", opt.strategy,
                    "catalog strategy: auto, hereditary-knitting, nakayama-intervals");
    sub->add_option("--seed", opt.seed, "randomized-check seed (default 0x5117)");
    sub->add_option("--p", opt.p_override, "override the field modulus");
    sub->add_option("-o,--out", opt.out_dir, "directory for produced modules/complexes");
    sub->add_flag("--recheck", opt.recheck, "replay the emitted certificate through exactlin");
    if (name == "enumerate") sub->add_option("--kind", opt.kind, "silting or 2silting");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, opt);
  } catch (const VerdictError& e) {
    std::cout << report_json(e.report);
    std::cerr << verb << ": " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    Report rep;
    rep.witness("error", e.what());
    std::cout << report_json(rep);
    std::cerr << verb << ": " << e.what() << "\n";
    return exit_code_for(e.kind);
  } catch (const std::exception& e) {
    std::cerr << verb << ": " << e.what() << "\n";
    return 3;
  }
}
