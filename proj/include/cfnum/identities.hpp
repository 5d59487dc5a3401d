#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfnum/lower_triangular.hpp"
#include "cfnum/sequences.hpp"

namespace cfnum {

struct Witness {
  int n = -1;
  int k = -1;
  Rational lhs;
  Rational rhs;
  std::string detail;
};

struct IdentityCheck {
  std::string id;
  std::string sequence;
  int n_max = 0;
  std::optional<Witness> witness;  // empty iff the check passed

  bool passed() const { return !witness.has_value(); }
};

/// Both products T1·T2 and T2·T1 against the identity.
IdentityCheck check_orthogonality(const PolySequenceSpec& spec, int n_max);
IdentityCheck check_orthogonality(const LowerTriangular& t1, const LowerTriangular& t2,
                                  std::string sequence);

/// Random-vector round trips through the lower (n ≤ m) and upper (k ≥ n) inverse pairs.
IdentityCheck check_inverse_relations(const PolySequenceSpec& spec, int n_max, int trials,
                                      std::uint64_t seed);

/// Every registered closed form against the umbral routes.
IdentityCheck check_closed_forms(const PolySequenceSpec& spec, int n_max);

/// TL2 = T2·L1c and TL1 = L2c·T1.
IdentityCheck check_tl_compositions(int n_max);

/// T2(n+1,k;P̄) = T2(n,k-1;P) + (k/2)T2(n,k;P) and
/// T1(n+1,k;P̄) = T1(n,k-1;P) - (n/2)T1(n,k;P̄), with P̄ = (x p_(n-1)).
IdentityCheck check_recurrences(const PolySequenceSpec& spec, int n_max);

/// Σ_k T1(n,k;P) p_k(1) = (n/2)_(n-1) for 1 ≤ n ≤ n_max.
IdentityCheck check_sum_rule(const PolySequenceSpec& spec, int n_max);

/// Agreement of every applicable T2 and T1 route.
IdentityCheck check_routes(const PolySequenceSpec& spec, int n_max);

/// Direct evaluation of the triple/quadruple-product inversion displays for the
/// rising, rising_lambda, central_bell, lah_bell and laguerre examples.
std::vector<IdentityCheck> check_quadruple_sums(const Params& params, int n_max, std::uint64_t seed);

}  // namespace cfnum
