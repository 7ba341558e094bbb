#include "mmu/suites.hpp"

#include <map>

#include "mmu/algebra.hpp"
#include "mmu/qcomb.hpp"
#include "mmu/subgrpd.hpp"
#include "mmu/subspace.hpp"

namespace mmu {

namespace {

void record(LemmaCheck& c, bool ok, const std::string& what) {
  ++c.instances;
  if (ok) return;
  if (c.failures++ == 0) c.first_failure = what;
}

std::string pair_str(const Subspace& a, const Subspace& b) { return a.to_string() + ", " + b.to_string(); }

// The complement spanned by the non-pivot standard basis vectors.
Subspace standard_complement(const Subspace& w) { return Subspace::span_of_columns(w.complement_frame()); }

}  // namespace

std::vector<LemmaCheck> check_idempotent_suite(const Field& f, int n, std::uint64_t budget) {
  LemmaCheck idem("eta-W-idempotent", "eta_W^2 = eta_W");
  LemmaCheck orth("eta-W-orthogonal", "eta_W1 eta_W2 = 0 for W1 != W2");
  LemmaCheck sum("eta-W-sum", "sum over dim W <= r of eta_W = eta_r");
  LemmaCheck psi("psi-of-eta-W", "psi_r(eta_W) = [id_W] when dim W = r, 0 when dim W < r");
  LemmaCheck eps("epsilon-relations", "eta_W E_{W,U} = E_{W,U} and E_{W,U} eta_W = eta_W");
  LemmaCheck inter("E-prime-intersection", "E'_W1 E'_W2 = E'_{W1 ∩ W2}");
  LemmaCheck direct("eta-W-from-direct", "eta_W = q^-d(n-d) mu(d)^-1 sum over W' in W of mu(dim W') D_W'");

  const auto subspaces = enumerate_all_subspaces(f, n);
  std::vector<AlgElem> eta;
  std::vector<AlgElem> eprime;
  std::vector<AlgElem> direct_sums;
  for (const Subspace& w : subspaces) {
    eta.push_back(eta_W(w, budget));
    eprime.push_back(E_prime_W(w, budget));
    direct_sums.push_back(E_prime_W_direct(w, budget));
  }
  std::map<Subspace, std::size_t> index;
  for (std::size_t i = 0; i < subspaces.size(); ++i) index.emplace(subspaces[i], i);

  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const Subspace& w = subspaces[i];
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
      const AlgElem prod = alg_mul(eta[i], eta[j]);
      if (i == j)
        record(idem, prod == eta[i], w.to_string());
      else
        record(orth, prod.is_zero(), pair_str(w, subspaces[j]));
      const std::size_t k = index.at(w.intersect(subspaces[j]));
      record(inter, alg_mul(eprime[i], eprime[j]) == eprime[k], pair_str(w, subspaces[j]));
    }
    for (int r = w.dim(); r <= n; ++r) {
      const GroupoidElem image = psi_r(eta[i], r);
      record(psi, r == w.dim() ? image == groupoid_identity_at(w) : image.is_zero(),
             w.to_string() + " at r = " + std::to_string(r));
    }
    const AlgElem e = epsilon_WU(w, standard_complement(w));
    record(eps, alg_mul(eta[i], e) == e && alg_mul(e, eta[i]) == eta[i], w.to_string());
    AlgElem rebuilt(f, n);
    for (std::size_t j = 0; j < subspaces.size(); ++j)
      if (w.contains(subspaces[j]))
        rebuilt = alg_add(rebuilt, alg_scale(direct_sums[j], mu(subspaces[j].dim(), f.q())));
    const int d = w.dim();
    rebuilt = alg_scale(rebuilt, rat_pow(Rat(f.q()), -static_cast<long>(d * (n - d))) / mu(d, f.q()));
    record(direct, rebuilt == eta[i], w.to_string());
  }

  for (int r = 0; r <= n; ++r) {
    AlgElem total(f, n);
    for (std::size_t i = 0; i < subspaces.size(); ++i)
      if (subspaces[i].dim() <= r) total = alg_add(total, eta[i]);
    record(sum, total == eta_r(f, n, r, budget), "r = " + std::to_string(r));
  }
  return {idem, orth, sum, psi, eps, inter, direct};
}

std::vector<LemmaCheck> check_psi(const Field& f, int n, std::uint64_t budget) {
  LemmaCheck hom("psi-homomorphism", "psi([a][b]) = psi([a]) psi([b]) on all basis pairs");
  LemmaCheck rank("psi-rank", "rank of psi equals dim k[M_n] = q^(n^2)");

  const auto mats = enumerate_matrices(f, n, budget);
  std::vector<std::vector<GroupoidElem>> images;
  for (const Mat& m : mats) images.push_back(psi_full(AlgElem::basis(m)));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j) {
      const auto prod = psi_full(AlgElem::basis(mat_mul(mats[i], mats[j])));
      bool ok = true;
      for (std::size_t r = 0; r < prod.size() && ok; ++r) ok = groupoid_mul(images[i][r], images[j][r]) == prod[r];
      record(hom, ok, mats[i].to_string() + " * " + mats[j].to_string());
    }
  const std::size_t got = psi_full_rank(f, n, budget);
  record(rank, got == mats.size(),
         "rank " + std::to_string(got) + " of " + std::to_string(mats.size()));
  return {hom, rank};
}

}  // namespace mmu
