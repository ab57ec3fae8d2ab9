// trirep: command-line front end for the verification reports.
#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "trirep/verify.hpp"

using namespace trirep;

namespace {

constexpr int kUsageError = 3;

struct Globals {
  bool field_check = false;
  bool timing = false;
  std::string out;
  CheckOptions options;
};

using Runner = std::function<Report(bool prime)>;

Report run_or_inconclusive(const Runner& run, bool prime, const std::string& claim) {
  try {
    return run(prime);
  } catch (const KnittingIncomplete& e) {
    Report r;
    r.claim = claim;
    r.status = Status::Inconclusive;
    r.witnesses.push_back(e.what());
    return r;
  }
}

int emit(const Globals& g, const Runner& run, const std::string& claim) {
  Report r = run_or_inconclusive(run, false, claim);
  if (g.field_check) attach_field_check(r, run_or_inconclusive(run, true, claim));
  const std::string text = r.to_json(g.timing).dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw InputError("cannot write " + g.out);
    f << text;
  }
  return exit_code(r.status);
}

// Runs the rational or the prime-field instantiation of a report.
template <class Fn>
Runner on_quiver(const std::string& path, const CheckOptions& o, Fn fn) {
  return [path, &o, fn](bool prime) {
    QuiverPresentation q = load_quiver(path);
    return prime ? fn(q, o, F101{}) : fn(q, o, Rational{});
  };
}

#define TRIREP_REPORT(name) \
  [](const QuiverPresentation& q, const CheckOptions& o, auto field) { return name<decltype(field)>(q, o); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular matrix algebras: representation dimension and tilting checks"};
  app.require_subcommand(1);
  Globals g;
  CheckOptions& o = g.options;
  app.add_flag("--field-check", g.field_check, "repeat the computation over F101 and compare invariants");
  app.add_flag("--timing", g.timing, "include wall-clock seconds in the report");
  app.add_option("--jobs", o.jobs, "worker threads for per-tilting checks")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--cutoff", o.cutoff, "knitting vertex cutoff")->check(CLI::PositiveNumber);
  app.add_option("--sample-dim", o.sample_dim, "exact module size limit for sampled T2 knitting")
      ->check(CLI::PositiveNumber);

  std::string input, dot, generator;
  Runner runner;

  auto quiver_command = [&](const std::string& name, const std::string& help, auto report) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "quiver JSON file")->required();
    sub->callback([&, report] { runner = on_quiver(input, o, report); });
    return sub;
  };
  auto add_tilting = [&](CLI::App* sub) {
    sub->add_option_function<std::string>("--tilting", [&](const std::string& id) { o.tilting = id; },
                                          "restrict to one tilting module id");
  };
  auto add_cutoff = [&](CLI::App* sub) {
    sub->add_option("--cutoff", o.cutoff, "knitting vertex cutoff")->check(CLI::PositiveNumber);
  };

  add_cutoff(quiver_command("indec", "list indecomposables by knitting", TRIREP_REPORT(indec_report)));

  CLI::App* arq = app.add_subcommand("arquiver", "knit the AR quiver and write it as DOT");
  arq->add_option("input", input, "quiver JSON file")->required();
  arq->add_option("--dot", dot, "DOT output file")->required();
  add_cutoff(arq);
  arq->callback([&] {
    runner = [&](bool prime) {
      QuiverPresentation q = load_quiver(input);
      if (prime) return indec_report<F101>(q, o);
      std::ofstream f(dot);
      if (!f) throw InputError("cannot write " + dot);
      f << ar_quiver_dot<Rational>(knit_ar_quiver<Rational>(path_algebra<Rational>(q), KnitOptions{o.cutoff, 0}));
      Report r = indec_report<Rational>(q, o);
      r.details["dot"] = dot;
      return r;
    };
  });

  quiver_command("tiltings", "enumerate tilting modules and the tilting quiver", TRIREP_REPORT(tiltings_report));
  add_tilting(quiver_command("check-lemma43", "four set identities for a tilting module", TRIREP_REPORT(lemma43_report)));
  quiver_command("check-thm31", "rep.dim T2(A) <= 3 via Mor(add A) + Mor(add DA)", TRIREP_REPORT(thm31_report));
  quiver_command("check-thm32", "sampled rep.dim T2(A) <= 4 via T2 + DT2", TRIREP_REPORT(thm32_report))
      ->add_option("--dim-bound", o.dim_bound, "total dimension bound of the sample")
      ->check(CLI::PositiveNumber);
  CLI::App* thm41 =
      quiver_command("check-thm41", "finiteness of End(Tbar) against the subcategory", TRIREP_REPORT(thm41_report));
  add_tilting(thm41);
  add_cutoff(thm41);
  CLI::App* thm47 = quiver_command("check-thm47", "rep.dim End(Tbar) <= 3 via the block generator", TRIREP_REPORT(thm47_report));
  add_tilting(thm47);
  thm47->add_option("--maxlen", o.maxlen, "resolution length bound")->check(CLI::NonNegativeNumber);
  quiver_command("check-cor44", "torsion classes along paths of the tilting quiver", TRIREP_REPORT(cor44_report));

  CLI::App* rb = app.add_subcommand("repdim-bound", "resolution bound for a user-supplied generator");
  rb->add_option("input", input, "quiver JSON file")->required();
  rb->add_option("--generator", generator, "bundle JSON {\"modules\": [...]}")->required();
  rb->add_option("--maxlen", o.maxlen, "resolution length bound")->check(CLI::NonNegativeNumber);
  add_cutoff(rb);
  rb->callback([&] {
    runner = [&](bool prime) {
      QuiverPresentation q = load_quiver(input);
      Json bundle = load_json(generator);
      return prime ? repdim_report<F101>(q, bundle, o) : repdim_report<Rational>(q, bundle, o);
    };
  });

  app.add_subcommand("example-e6", "APR tilt of E6 and its Auslander algebra")->callback([&] {
    runner = [&](bool prime) { return prime ? e6_report<F101>(o) : e6_report<Rational>(o); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    return emit(g, runner, app.get_subcommands().front()->get_name());
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  }
}
