#pragma once

#include <cstdint>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/fq.hpp"
#include "mmu/lemmalab.hpp"

namespace mmu {

/// Exhaustive checks of the subspace idempotents on F_q^n:
///   eta-W-idempotent       eta_W^2 = eta_W
///   eta-W-orthogonal       eta_W1 eta_W2 = 0 for W1 != W2
///   eta-W-sum              sum_{dim W <= r} eta_W = eta_r, every r <= n
///   psi-of-eta-W           psi_r(eta_W) = [id_W] (dim W = r) or 0 (dim W < r)
///   epsilon-relations      eta_W E_{W,U} = E_{W,U} and E_{W,U} eta_W = eta_W
///   E-prime-intersection   E'_W1 E'_W2 = E'_{W1 ∩ W2}
///   eta-W-from-direct      eta_W = q^{-d(n-d)} mu(d)^{-1} sum_{W' ⊆ W} mu(dim W') D_{W'}
std::vector<LemmaCheck> check_idempotent_suite(const Field& f, int n, std::uint64_t budget = kDefaultBudget);

/// psi_full([a][b]) = psi_full([a]) psi_full([b]) for every pair of basis
/// matrices, plus the rank of psi_full against dim k[M_n].
std::vector<LemmaCheck> check_psi(const Field& f, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace mmu
