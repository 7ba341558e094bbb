#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/matfq.hpp"
#include "mmu/repmod.hpp"

namespace mmu {

/// Operator on k[M_{n,m}] sending each basis matrix to one basis matrix:
/// image[key(X)] = key(image of X).
using BasisMap = std::vector<std::uint64_t>;

enum class Side { left, right };

/// X -> aX for a in M_n.
BasisMap left_action(const Mat& a, int m);
/// X -> Xb for b in M_m.
BasisMap right_action(const Mat& b, int n);

/// Every left operator commutes with every right operator.
bool bimodule_commutes(const Field& f, int n, int m, std::uint64_t budget = kDefaultBudget);

/// Dimension of the algebra of operators commuting with all of M_n (side
/// left) or all of M_m (side right) acting on k[M_{n,m}].
std::size_t commutant_dimension(const Field& f, int n, int m, Side side, std::uint64_t budget = kDefaultBudget);
/// Dimension of the span of the operators of one side.
std::size_t image_dimension(const Field& f, int n, int m, Side side, std::uint64_t budget = kDefaultBudget);
/// Every operator of the other side satisfies the commutant equations of this side.
bool image_in_commutant(const Field& f, int n, int m, Side side, std::uint64_t budget = kDefaultBudget);

struct DoubleCentralizerReport {
  std::size_t left_image = 0;
  std::size_t right_image = 0;
  std::size_t left_commutant = 0;
  std::size_t right_commutant = 0;
  bool containment = false;

  bool holds() const { return containment && left_commutant == right_image && right_commutant == left_image; }
};

DoubleCentralizerReport double_centralizer(const Field& f, int n, int m, std::uint64_t budget = kDefaultBudget);

/// q^{nm} = sum_r qbinom(n, r) qbinom(m, r) |GL_r|.
bool sw_dimension_identity(int n, int m, long q);

struct TraceCheck {
  bool holds = false;
  std::size_t elements = 0;
  std::string first_mismatch;
};

/// tr(a | k[M_{n,m}]) = sum over simples of qbinom(m, r) dim(pi) chi_{L_n(pi)}(a)
/// for every a in M_n.
TraceCheck tensor_trace_check(const std::vector<SimpleModule>& simples, int m,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace mmu
