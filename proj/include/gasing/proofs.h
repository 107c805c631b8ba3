#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gasing/construction.h"
#include "gasing/derive.h"
#include "gasing/trace.h"

namespace gasing {

/// Free-ring proof of cos(a)^2 + sin(a)^2 = 1. Steps without a combination
/// are readings of the construction; every other step must follow exactly from
/// earlier ones.
struct ProofCertificate {
  std::string case_id;
  DerivationTrace steps;
  std::pair<TrigRational, TrigRational> final_equation;
  // Cofactor of cos(angle)^2 + sin(angle)^2 - 1 in the numerator of
  // final rhs - final lhs, keyed by angle name.
  std::map<std::string, TrigPoly> cofactors;
  // Denominator cleared from the final difference before division.
  TrigPoly cleared_denominator{1};
  ConditionSet conditions;
  // Named by-products, e.g. the series closed forms of case8.
  std::map<std::string, TrigRational> quantities;
  bool verified = false;
  std::string failure;
};

/// Checks every combination step, the final membership and the absence of
/// identity-dependent steps; fills cofactors, verified and failure.
void verify(ProofCertificate& cert, bool guard_tripped = false);

ProofCertificate prove_main_identity();
ProofCertificate prove_alt_identity();
/// sec^2 = 1 + tan^2 and csc^2 = 1 + cot^2, in that order.
std::vector<ProofCertificate> prove_derived_squares();
/// n in 1..8; throws DomainError otherwise.
ProofCertificate prove_case(int n);
Formula sin2a_lemma(DerivationTrace* trace = nullptr);

/// Every certificate above, in a fixed order, checked in parallel.
std::vector<ProofCertificate> prove_all();
std::vector<ProofCertificate> prove_all_serial();

/// "main", "alt", "squares", "case1".."case8" or "all".
std::vector<ProofCertificate> prove_by_name(const std::string& name);

}  // namespace gasing
