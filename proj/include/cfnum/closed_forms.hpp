#pragma once

#include <string>
#include <vector>

#include "cfnum/lower_triangular.hpp"
#include "cfnum/sequences.hpp"

// Closed-form expressions of T2(n,k;P) and T1(n,k;P) for the catalog
// sequences, built only from classical and degenerate number triangles and
// number sequences (no umbral machinery).
namespace cfnum {

struct ClosedForm {
  std::string label;
  LowerTriangular table;
};

/// Every registered second-kind formula for the sequence (some entries have two).
std::vector<ClosedForm> closed_forms_t2(const PolySequenceSpec& spec, int n_max);

/// Every registered first-kind formula for the sequence.
std::vector<ClosedForm> closed_forms_t1(const PolySequenceSpec& spec, int n_max);

/// The fully degenerate Bell first-kind formula with S1(l,m) in place of
/// S2(l,m). Kept to document that this variant does not expand x^[n].
LowerTriangular fully_degenerate_bell_t1_with_s1(const Rational& lambda, int n_max);

}  // namespace cfnum
