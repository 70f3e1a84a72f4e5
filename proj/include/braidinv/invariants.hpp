#pragma once

// Knot/link invariants extracted from the representation matrices: the
// elementary ideal chain of J_beta - I, the Alexander polynomial (Burau
// route), the Wada polynomial, the bivariate invariant, and the empirical
// checks that compare them.

#include "braidinv/braid.hpp"
#include "braidinv/matrix.hpp"
#include "braidinv/representations.hpp"

#include <cstddef>
#include <vector>

namespace braidinv {

inline IdealChain invariant_chain(RepKind kind, const BraidWord& beta) {
  return ideal_chain(braid_matrix(kind, beta).sub_identity());
}

// The generator of the first nonzero elementary ideal, raw and normalized.
// When every proper ideal vanishes (the identity braid), the first nonzero
// entry is the final 1: the unknot value.
struct InvariantReport {
  RepKind kind;
  IdealChain chain;
  std::size_t first_index = 0;
  LaurentPoly raw;
  LaurentPoly value;  // normalize(raw)
};

inline InvariantReport invariant_report(RepKind kind, const BraidWord& beta) {
  InvariantReport report;
  report.kind = kind;
  report.chain = invariant_chain(kind, beta);
  report.first_index = report.chain.first_nonzero_index();
  report.raw = report.chain.generators[report.first_index];
  report.value = normalize(report.raw);
  return report;
}

inline LaurentPoly wada_polynomial(const BraidWord& beta) {
  return invariant_report(RepKind::wada, beta).value;
}

inline LaurentPoly alexander_polynomial(const BraidWord& beta) {
  return invariant_report(RepKind::burau, beta).value;
}

// Bivariate invariant of M_beta - I. The coefficient ring is not a PID, so
// the full generator list rides along with the UFD gcd. principal_hint is a
// weak syntactic check only: the gcd divides every generator by
// construction, and the hint additionally asks whether the gcd itself
// already appears among the generators up to a unit. It never decides ideal
// membership.
struct TwoVariableInvariant {
  BiLaurentPoly value;                    // normalized gcd; 1 for the identity braid
  std::vector<BiLaurentPoly> generators;  // nonzero minors at the leading size
  std::size_t minor_size = 0;
  bool principal_hint = true;
};

inline TwoVariableInvariant twovar_invariant(const BraidWord& beta) {
  TwoVariableInvariant inv;
  const BivariateIdealGenerators ideal =
      ideal_generators_bivariate(twovar_braid_matrix(beta).sub_identity());
  if (ideal.minor_size == 0) {
    // zero matrix: every proper ideal vanishes and E_n is the whole ring
    inv.value = BiLaurentPoly(1);
    return inv;
  }
  inv.value = ideal.gcd_generator;
  inv.generators = ideal.generators;
  inv.minor_size = ideal.minor_size;
  inv.principal_hint = false;
  for (const BiLaurentPoly& g : inv.generators) {
    if (normalize(g) == inv.value) {
      inv.principal_hint = true;
      break;
    }
  }
  return inv;
}

// The conjecture under test: the Wada polynomial equals |Alexander(-1)|.
// The comparison uses absolute values because the sign conventions fixed by
// normalization have no counterpart in plain evaluation. A non-constant Wada
// polynomial has no established comparison rule; such a report is
// flagged for review instead of guessed at.
struct ConjectureReport {
  LaurentPoly alexander;
  Int alexander_at_minus1 = 0;
  LaurentPoly wada;
  bool wada_is_constant = true;
  bool consistent = false;
};

inline ConjectureReport check_wada_conjecture(const BraidWord& beta) {
  ConjectureReport report;
  report.alexander = alexander_polynomial(beta);
  const Rational value = evaluate(report.alexander, Rational(-1));
  report.alexander_at_minus1 = boost::multiprecision::numerator(value);
  report.wada = wada_polynomial(beta);
  report.wada_is_constant = report.wada.is_constant();
  if (report.wada_is_constant) {
    report.consistent =
        boost::multiprecision::abs(report.alexander_at_minus1) == report.wada.coeff(0);
  }
  return report;
}

// Empirical observation accompanying the two-variable representation: its
// leading invariant looks like the Alexander polynomial evaluated at st.
inline bool check_alst_observation(const BraidWord& beta) {
  return unit_equal(substitute_st(alexander_polynomial(beta)), twovar_invariant(beta).value);
}

}  // namespace braidinv
