#include "upos/decider.hpp"

#include "upos/degeneracy.hpp"
#include "upos/errors.hpp"

namespace upos {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::UltimatelyPositive: return "UP";
    case Outcome::NotUltimatelyPositive: return "NOT_UP";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::ZeroSeq: return "ZERO_SEQ";
    case Reason::NoPositiveRealDominant: return "NO_POSITIVE_REAL_DOMINANT";
    case Reason::TorusNonneg: return "TORUS_NONNEG";
    case Reason::TorusNeg: return "TORUS_NEG";
    case Reason::TorusInconclusive: return "TORUS_INCONCLUSIVE";
  }
  return "?";
}

std::vector<std::size_t> dominant_terms(const ClosedForm& cf) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (out.empty()) {
      out.push_back(i);
      continue;
    }
    const int c = compare_modulus(cf.terms[i].root, cf.terms[out.front()].root);
    if (c > 0) out.clear();
    if (c >= 0) out.push_back(i);
  }
  return out;
}

namespace {

ResidueReport decide_residue(const ClosedForm& sub, unsigned long l, const Budgets& budgets) {
  ResidueReport rep;
  rep.l = l;
  if (sub.terms.empty()) {
    rep.outcome = Outcome::UltimatelyPositive;
    rep.reason = Reason::ZeroSeq;
    return rep;
  }
  const std::vector<std::size_t> dom = dominant_terms(sub);
  std::optional<std::size_t> rho;
  std::vector<std::size_t> upper;
  for (std::size_t i : dom) {
    const AlgebraicNumber& z = sub.terms[i].root;
    rep.dominant_roots.push_back(z);
    if (z.is_real()) {
      if (alg_sign_real(z) > 0) {
        rho = i;
      } else if (dom.size() > 1) {
        // -rho next to rho would have quotient -1, which the decomposition removes
        throw Error("negative real dominant root survived the decomposition");
      }
    } else if (alg_sign_real(alg_im(z)) > 0) {
      upper.push_back(i);
    }
  }
  if (!rho) {
    rep.outcome = Outcome::NotUltimatelyPositive;
    rep.reason = Reason::NoPositiveRealDominant;
    return rep;
  }
  const AlgebraicNumber& r = sub.terms[*rho].root;
  TorusProblem problem;
  problem.b = sub.terms[*rho].coeff;
  std::vector<AlgebraicNumber> lambdas;
  for (std::size_t i : upper) {
    lambdas.push_back(r.is_rational() && r.rational() == 1 ? sub.terms[i].root : sub.terms[i].root / r);
    problem.cs.push_back(sub.terms[i].coeff);
  }
  try {
    rep.lattice = find_relations(lambdas, budgets.masser_cap, budgets.precision_bits);
    problem.torus = parametrize_torus(*rep.lattice);
    rep.torus = decide_nonneg(problem, budgets);
  } catch (const ResourceLimit& e) {
    rep.outcome = Outcome::Inconclusive;
    rep.reason = Reason::TorusInconclusive;
    rep.note = e.what();
    return rep;
  }
  switch (rep.torus->outcome) {
    case TorusOutcome::Nonneg:
      rep.outcome = Outcome::UltimatelyPositive;
      rep.reason = Reason::TorusNonneg;
      break;
    case TorusOutcome::NegWitness:
      rep.outcome = Outcome::NotUltimatelyPositive;
      rep.reason = Reason::TorusNeg;
      rep.witness = rep.torus->witness;
      break;
    case TorusOutcome::Inconclusive:
      rep.outcome = Outcome::Inconclusive;
      rep.reason = Reason::TorusInconclusive;
      break;
  }
  rep.note = rep.torus->report;
  return rep;
}

}  // namespace

Verdict decide_ultimate_positivity(const LRSRep& u, const Budgets& budgets) {
  Verdict v;
  const LRSRep m = minimize(u);
  v.diagnostics.order = m.order();
  if (!is_simple(m)) throw NotSimple("minimal characteristic polynomial " + char_poly(m).str() + " has repeated roots");
  ClosedForm cf;
  DecompositionPlan plan;
  try {
    cf = closed_form(m);
    for (std::size_t i : dominant_terms(cf)) v.diagnostics.dominant_roots.push_back(cf.terms[i].root);
    std::vector<AlgebraicNumber> roots;
    for (const ClosedTerm& t : cf.terms) roots.push_back(t.root);
    plan = plan_decomposition(roots);
  } catch (const ResourceLimit& e) {
    throw DecisionLimit(e.what(), v.diagnostics);
  }
  v.diagnostics.M = plan.M;

  bool all_positive = true;
  bool any_negative = false;
  for (unsigned long l = 0; l < plan.M; ++l) {
    ClosedForm sub;
    try {
      sub = subsequence_closed_form(cf, plan.M, l);
    } catch (const ResourceLimit& e) {
      throw DecisionLimit(e.what(), v.diagnostics);
    }
    ResidueReport rep = decide_residue(sub, l, budgets);
    all_positive = all_positive && rep.outcome == Outcome::UltimatelyPositive;
    any_negative = any_negative || rep.outcome == Outcome::NotUltimatelyPositive;
    if (rep.lattice) {
      if (!v.diagnostics.lattice_completeness) {
        v.diagnostics.lattice_basis = rep.lattice->basis;
        v.diagnostics.lattice_completeness = rep.lattice->completeness;
      } else if (rep.lattice->completeness == Completeness::Stabilized) {
        v.diagnostics.lattice_completeness = Completeness::Stabilized;
      }
    }
    v.residues.push_back(std::move(rep));
  }
  v.outcome = all_positive   ? Outcome::UltimatelyPositive
              : any_negative ? Outcome::NotUltimatelyPositive
                             : Outcome::Inconclusive;
  return v;
}

}  // namespace upos
