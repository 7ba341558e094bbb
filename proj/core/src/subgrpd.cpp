#include "mmu/subgrpd.hpp"

#include <sstream>

namespace mmu {

Rat GroupoidElem::coeff(const GroupoidBasis& b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GroupoidElem::add_term(const GroupoidBasis& b, const Rat& c) {
  if (c == 0) return;
  if (b.src.dim() != r_ || b.dst.dim() != r_) throw InvalidArgument("groupoid arrow of the wrong dimension");
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupoidBasis restrict_to(const Mat& m, const Subspace& u) {
  const Mat image = mat_mul(m, u.frame());
  const Subspace dst = u.dim() ? Subspace::span_of_columns(image) : Subspace::zero(u.field(), u.n());
  if (dst.dim() < u.dim()) return GroupoidBasis{u, dst, Mat(u.field(), 0, 0)};
  return GroupoidBasis{u, dst, dst.coordinates(image)};
}

GroupoidElem psi_r(const AlgElem& a, int r) {
  if (r < 0 || r > a.n()) throw InvalidArgument("psi_r requires 0 <= r <= n");
  GroupoidElem out(a.field(), a.n(), r);
  const auto subspaces = enumerate_subspaces(a.field(), a.n(), r);
  for (const auto& [k, c] : a.terms()) {
    const Mat m = a.matrix(k);
    if (mat_rank(m) < r) continue;
    for (const Subspace& u : subspaces) {
      GroupoidBasis b = restrict_to(m, u);
      if (b.dst.dim() == r) out.add_term(b, c);
    }
  }
  return out;
}

std::vector<GroupoidElem> psi_full(const AlgElem& a) {
  std::vector<GroupoidElem> out;
  for (int r = 0; r <= a.n(); ++r) out.push_back(psi_r(a, r));
  return out;
}

GroupoidElem groupoid_mul(const GroupoidElem& x, const GroupoidElem& y) {
  if (&x.field() != &y.field() || x.n() != y.n() || x.r() != y.r())
    throw InvalidArgument("groupoid elements from different algebras");
  GroupoidElem out(x.field(), x.n(), x.r());
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms())
      if (by.dst == bx.src) out.add_term(GroupoidBasis{by.src, bx.dst, mat_mul(bx.iso, by.iso)}, cx * cy);
  return out;
}

GroupoidElem groupoid_unit(const Field& f, int n, int r) {
  GroupoidElem out(f, n, r);
  for (const Subspace& u : enumerate_subspaces(f, n, r)) out.add_term(GroupoidBasis{u, u, Mat::identity(f, r)}, 1);
  return out;
}

GroupoidElem groupoid_identity_at(const Subspace& w) {
  GroupoidElem out(w.field(), w.n(), w.dim());
  out.add_term(GroupoidBasis{w, w, Mat::identity(w.field(), w.dim())}, 1);
  return out;
}

GroupoidMatrix groupoid_to_matrix_algebra(const GroupoidElem& x) {
  GroupoidMatrix out;
  out.objects = enumerate_subspaces(x.field(), x.n(), x.r());
  const std::size_t count = out.objects.size();
  out.blocks.assign(count, std::vector<GroupAlgElem>(count));
  std::map<Subspace, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(out.objects[i], i);
  for (const auto& [b, c] : x.terms()) {
    auto& cell = out.blocks[index.at(b.dst)][index.at(b.src)];
    Rat& v = cell[b.iso];
    v += c;
    if (v == 0) cell.erase(b.iso);
  }
  return out;
}

GroupoidMatrix block_mul(const GroupoidMatrix& a, const GroupoidMatrix& b) {
  if (a.objects != b.objects) throw InvalidArgument("block matrices over different object sets");
  const std::size_t count = a.objects.size();
  GroupoidMatrix out;
  out.objects = a.objects;
  out.blocks.assign(count, std::vector<GroupAlgElem>(count));
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t i = 0; i < count; ++i)
        for (const auto& [g, cg] : a.blocks[j][k])
          for (const auto& [h, ch] : b.blocks[k][i]) {
            const Mat gh = mat_mul(g, h);
            Rat& v = out.blocks[j][i][gh];
            v += cg * ch;
            if (v == 0) out.blocks[j][i].erase(gh);
          }
  return out;
}

std::size_t psi_full_rank(const Field& f, int n, std::uint64_t budget) {
  std::vector<std::vector<Subspace>> grass;
  for (int r = 0; r <= n; ++r) grass.push_back(enumerate_subspaces(f, n, r));
  std::map<std::pair<int, GroupoidBasis>, std::size_t> column;
  std::vector<SparseRowReducer::Row> rows;
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        std::map<std::size_t, Rat> row;
        for (int r = 0; r <= n; ++r)
          for (const Subspace& u : grass[r]) {
            GroupoidBasis b = restrict_to(m, u);
            if (b.dst.dim() != r) continue;
            auto [it, inserted] = column.emplace(std::make_pair(r, std::move(b)), column.size());
            row[it->second] += 1;
          }
        rows.emplace_back(row.begin(), row.end());
      },
      budget);
  SparseRowReducer red(column.size());
  for (auto& row : rows) red.add(std::move(row));
  return red.rank();
}

BigInt groupoid_algebra_dimension(const Field& f, int n) {
  BigInt total = 0;
  for (int r = 0; r <= n; ++r) {
    const BigInt count = q_binomial(n, r, f.q());
    total += count * count * gl_order(r, f.q());
  }
  return total;
}

AlgElem preimage_of_groupoid_basis(const GroupoidBasis& b, std::uint64_t budget) {
  const Subspace& u = b.src;
  const Field& f = u.field();
  const int n = u.n(), r = u.dim();
  if (b.dst.dim() != r || b.iso.rows() != r || b.iso.cols() != r || !is_invertible(b.iso))
    throw InvalidArgument("groupoid basis element is not an isomorphism of equal-dimensional subspaces");
  // m [F_U | C] = [F_{U'} g | 0].
  Mat source(f, n, n), target(f, n, n);
  const Mat fu = u.frame(), comp = u.complement_frame();
  const Mat img = r ? mat_mul(b.dst.frame(), b.iso) : Mat(f, n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) {
      source(i, j) = fu(i, j);
      target(i, j) = img(i, j);
    }
    for (int j = 0; j < n - r; ++j) source(i, r + j) = comp(i, j);
  }
  const Mat m = mat_mul(target, mat_inverse(source));
  return alg_mul(AlgElem::basis(m), eta_W(u, budget));
}

std::string to_string(const GroupoidElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*[" << b.iso.to_string() << ": " << b.src.to_string() << " -> " << b.dst.to_string()
       << "]";
  }
  return os.str();
}

}  // namespace mmu
