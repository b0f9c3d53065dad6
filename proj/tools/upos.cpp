// Command-line front end: decide, falsify, generate, roots.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "upos/decider.hpp"
#include "upos/errors.hpp"
#include "upos/harness.hpp"
#include "upos/io.hpp"

namespace {

constexpr int kExitError = 3;

struct Output {
  bool json = false;
  bool pretty = false;

  void print(const upos::Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

void print_verdict_text(const upos::Verdict& v) {
  std::cout << "verdict: " << to_string(v.outcome) << '\n';
  std::cout << "order " << v.diagnostics.order << ", M = " << v.diagnostics.M << '\n';
  for (const upos::ResidueReport& r : v.residues) {
    std::cout << "  l = " << r.l << ": " << to_string(r.outcome) << " (" << to_string(r.reason) << ")";
    if (r.witness) {
      std::cout << " witness [";
      for (std::size_t i = 0; i < r.witness->size(); ++i) std::cout << (i ? ", " : "") << upos::to_string((*r.witness)[i]);
      std::cout << "]";
    }
    if (!r.note.empty()) std::cout << " -- " << r.note;
    std::cout << '\n';
  }
  if (v.diagnostics.lattice_completeness) {
    std::cout << "lattice completeness: " << to_string(*v.diagnostics.lattice_completeness) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ultimate positivity of simple linear recurrence sequences"};
  app.require_subcommand(1);

  upos::Budgets budgets;
  Output out;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", budgets.precision_bits, "working precision for enclosures")
        ->check(CLI::PositiveNumber);
    sub->add_option("--masser-cap", budgets.masser_cap, "sup-norm cap of the relation search")->check(CLI::PositiveNumber);
    sub->add_option("--bnb-depth", budgets.bnb_depth, "branch-and-bound depth")->check(CLI::PositiveNumber);
    sub->add_option("--torsion-denominator-max", budgets.torsion_denominator_max, "largest torsion denominator sampled")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", out.json, "print JSON");
    sub->add_flag("--pretty", out.pretty, "print indented JSON");
  };

  std::string file;
  CLI::App* decide = app.add_subcommand("decide", "decide ultimate positivity");
  decide->add_option("file", file, "recurrence JSON")->required();
  add_common(decide);

  unsigned long horizon = 0;
  CLI::App* falsify = app.add_subcommand("falsify", "list negative terms up to a horizon");
  falsify->add_option("file", file, "recurrence JSON")->required();
  falsify->add_option("--horizon", horizon, "last index checked")->required()->check(CLI::PositiveNumber);
  add_common(falsify);

  std::string poly_file, out_file;
  CLI::App* generate = app.add_subcommand("generate", "recurrence of f(y_1^2, ..., y_s^2) over Gaussian prime units");
  generate->add_option("--poly", poly_file, "polynomial JSON")->required();
  generate->add_option("--out", out_file, "recurrence JSON to write")->required();
  add_common(generate);

  CLI::App* roots = app.add_subcommand("roots", "characteristic roots and closed form");
  roots->add_option("file", file, "recurrence JSON")->required();
  add_common(roots);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  out.json = out.json || out.pretty;

  try {
    if (decide->parsed()) {
      const upos::Verdict v = upos::decide_ultimate_positivity(upos::lrs_from_json(upos::read_json_file(file)), budgets);
      if (out.json) {
        out.print(upos::to_json(v));
      } else {
        print_verdict_text(v);
      }
      switch (v.outcome) {
        case upos::Outcome::UltimatelyPositive: return 0;
        case upos::Outcome::NotUltimatelyPositive: return 1;
        case upos::Outcome::Inconclusive: return 2;
      }
    }
    if (falsify->parsed()) {
      const std::vector<unsigned long> neg = upos::falsify(upos::lrs_from_json(upos::read_json_file(file)), horizon);
      if (out.json) {
        upos::Json j;
        j["horizon"] = horizon;
        j["negative"] = neg;
        out.print(j);
      } else {
        std::cout << neg.size() << " negative terms up to n = " << horizon << '\n';
        for (unsigned long n : neg) std::cout << n << '\n';
      }
      return 0;
    }
    if (generate->parsed()) {
      const upos::LRSRep u = upos::reduce_pos_to_lrs(upos::poly_from_json(upos::read_json_file(poly_file)));
      std::ofstream f(out_file);
      if (!f) throw upos::InvalidInput("cannot write " + out_file);
      f << upos::to_json(u).dump(2) << '\n';
      if (!f) throw upos::InvalidInput("write to " + out_file + " failed");
      std::cout << "order " << u.order() << " written to " << out_file << '\n';
      return 0;
    }
    if (roots->parsed()) {
      const upos::Json j = upos::roots_report(upos::lrs_from_json(upos::read_json_file(file)));
      std::cout << j.dump(out.json && !out.pretty ? -1 : 2) << '\n';
      return 0;
    }
  } catch (const upos::NotSimple& e) {
    std::cerr << "not simple: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
