#include "mmu/repmod.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mmu/subgrpd.hpp"
#include "mmu/subspace.hpp"

namespace mmu {

namespace {

RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix out(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}


// X with f X = m f, read off the reduced form of [f | m f].
Mat restricted_endomorphism(const Mat& m, const Mat& frame) {
  const Field& f = m.field();
  const int n = frame.rows(), r = frame.cols();
  if (r == 0) return Mat(f, 0, 0);
  const Mat mf = mat_mul(m, frame);
  Mat aug(f, n, 2 * r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) {
      aug(i, j) = frame(i, j);
      aug(i, r + j) = mf(i, j);
    }
  const Mat red = rref(aug);
  Mat x(f, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) x(i, j) = red(i, r + j);
  return x;
}

std::size_t checked_dim(int q, int rows, int cols, std::size_t budget) {
  const std::uint64_t d = checked_count(q, rows, cols, budget);
  return static_cast<std::size_t>(d);
}

}  // namespace

const RatMatrix& GroupRep::operator()(const Mat& g) const {
  const auto it = images.find(g);
  if (it == images.end()) throw InvalidArgument("matrix " + g.to_string() + " is not in GL_" + std::to_string(r));
  return it->second;
}

const RatMatrix& MonoidModule::operator()(const Mat& m) const {
  const auto it = action.find(mat_key(m));
  if (it == action.end()) throw InvalidArgument("matrix " + m.to_string() + " has no action in " + name);
  return it->second;
}

GroupRep rep_from_generators(const Field& f, int r, std::string name, int dim,
                             const std::vector<std::pair<Mat, RatMatrix>>& generators) {
  GroupRep rho;
  rho.field = &f;
  rho.r = r;
  rho.dim = dim;
  rho.name = std::move(name);
  const auto d = static_cast<std::size_t>(dim);
  for (const auto& [g, img] : generators)
    if (g.rows() != r || !is_invertible(g) || img.rows() != d || img.cols() != d)
      throw InvalidArgument("generator images have the wrong shape");

  const Mat id = Mat::identity(f, r);
  rho.images.emplace(id, RatMatrix::identity(d));
  std::deque<Mat> queue{id};
  while (!queue.empty()) {
    const Mat g = queue.front();
    queue.pop_front();
    const RatMatrix rg = rho.images.at(g);
    for (const auto& [s, rs] : generators) {
      const Mat h = mat_mul(g, s);
      RatMatrix rh = rg * rs;
      const auto [it, inserted] = rho.images.emplace(h, rh);
      if (inserted)
        queue.push_back(h);
      else if (it->second != rh)
        throw InvalidArgument("generator images of " + rho.name + " do not define a representation at " +
                              h.to_string());
    }
  }
  const BigInt order = gl_order(r, f.q());
  if (BigInt(static_cast<unsigned long>(rho.images.size())) != order)
    throw InvalidArgument("generators of " + rho.name + " reach " + std::to_string(rho.images.size()) + " of " +
                          order.get_str() + " group elements");
  return rho;
}

GroupRep trivial_rep(const Field& f, int r) {
  GroupRep rho;
  rho.field = &f;
  rho.r = r;
  rho.dim = 1;
  rho.name = "triv";
  for (const Mat& g : enumerate_gl(f, r)) rho.images.emplace(g, RatMatrix::identity(1));
  return rho;
}

bool is_homomorphism(const GroupRep& rho) {
  const auto d = static_cast<std::size_t>(rho.dim);
  if (rho(Mat::identity(*rho.field, rho.r)) != RatMatrix::identity(d)) return false;
  for (const auto& [g, rg] : rho.images)
    for (const auto& [h, rh] : rho.images) {
      const auto it = rho.images.find(mat_mul(g, h));
      if (it == rho.images.end() || it->second != rg * rh) return false;
    }
  return true;
}

IrrepSet builtin_irreps(const Field& f, int r) {
  IrrepSet out;
  out.reps.push_back(trivial_rep(f, r));
  if (f.q() == 2 && r == 2) {
    const Mat t = Mat::from_rows(f, {{1, 1}, {0, 1}});
    const Mat s = Mat::from_rows(f, {{0, 1}, {1, 0}});
    out.reps.push_back(rep_from_generators(f, 2, "sign", 1, {{t, rat_matrix({{-1}})}, {s, rat_matrix({{-1}})}}));
    out.reps.push_back(rep_from_generators(f, 2, "std", 2,
                                           {{t, rat_matrix({{1, 0}, {-1, -1}})}, {s, rat_matrix({{0, 1}, {1, 0}})}}));
  }
  BigInt total = 0;
  for (const auto& rho : out.reps) total += rho.dim * rho.dim;
  out.complete = total == gl_order(r, f.q());
  return out;
}

MonoidModule build_L(int n, const GroupRep& pi, std::size_t dim_budget) {
  const Field& f = *pi.field;
  const int r = pi.r;
  if (r < 0 || r > n) throw InvalidArgument("L_n(pi) needs r <= n");
  const std::vector<Subspace> objects = enumerate_subspaces(f, n, r);
  std::map<Subspace, std::size_t> index;
  for (std::size_t i = 0; i < objects.size(); ++i) index.emplace(objects[i], i);
  const auto d = static_cast<std::size_t>(pi.dim);
  const std::size_t total = d * objects.size();
  if (total > dim_budget)
    throw BudgetExceeded("module dimension " + std::to_string(total) + " exceeds budget " + std::to_string(dim_budget));

  MonoidModule mod;
  mod.field = &f;
  mod.n = n;
  mod.dim = static_cast<int>(total);
  mod.name = "L_" + std::to_string(n) + "(" + pi.name + "_" + std::to_string(r) + ")";
  for_each_matrix(f, n, n, [&](const Mat& m) {
    RatMatrix a(total, total);
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const GroupoidBasis b = restrict_to(m, objects[i]);
      if (b.dst.dim() != r) continue;
      const std::size_t j = index.at(b.dst);
      const RatMatrix& block = pi(b.iso);
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) a(j * d + x, i * d + y) = block(x, y);
    }
    mod.action.emplace(mat_key(m), std::move(a));
  });
  return mod;
}

MonoidModule tensor_power_module(const Field& f, int n, int m, std::size_t dim_budget) {
  const std::size_t total = checked_dim(f.q(), n, m, dim_budget);
  MonoidModule mod;
  mod.field = &f;
  mod.n = n;
  mod.dim = static_cast<int>(total);
  mod.name = "V^" + std::to_string(m);
  std::vector<Mat> basis;
  for_each_matrix(f, n, m, [&](const Mat& x) { basis.push_back(x); });
  for_each_matrix(f, n, n, [&](const Mat& a) {
    RatMatrix op(total, total);
    for (std::size_t k = 0; k < basis.size(); ++k) op(mat_key(mat_mul(a, basis[k])), k) = 1;
    mod.action.emplace(mat_key(a), std::move(op));
  });
  return mod;
}

CharTable character(const MonoidModule& mod) {
  CharTable out;
  for (const auto& [k, a] : mod.action) out.emplace(k, a.trace());
  return out;
}

CharTable character_formula(int n, const GroupRep& pi) {
  const Field& f = *pi.field;
  const std::vector<Subspace> objects = enumerate_subspaces(f, n, pi.r);
  CharTable out;
  for_each_matrix(f, n, n, [&](const Mat& m) {
    Rat chi = 0;
    for (const Subspace& u : objects)
      if (image_of(m, u) == u) chi += pi.character(restricted_endomorphism(m, u.frame()));
    out.emplace(mat_key(m), chi);
  });
  return out;
}

bool module_axiom_holds(const MonoidModule& mod, std::string* detail) {
  const Field& f = *mod.field;
  if (mod(Mat::identity(f, mod.n)) != RatMatrix::identity(static_cast<std::size_t>(mod.dim))) {
    if (detail) *detail = "identity does not act as the identity";
    return false;
  }
  for (const auto& [ka, a] : mod.action) {
    const Mat ma = mat_from_key(f, mod.n, mod.n, ka);
    for (const auto& [kb, b] : mod.action) {
      const Mat mb = mat_from_key(f, mod.n, mod.n, kb);
      if (a * b != mod(mat_mul(ma, mb))) {
        if (detail) *detail = "action(a) action(b) != action(ab) for a = " + ma.to_string() + ", b = " + mb.to_string();
        return false;
      }
    }
  }
  return true;
}

CharTable restrict_to_group_char(const MonoidModule& mod) {
  CharTable out;
  for (const auto& [k, a] : mod.action)
    if (is_invertible(mat_from_key(*mod.field, mod.n, mod.n, k))) out.emplace(k, a.trace());
  return out;
}

CharTable parabolic_induction_char(const GroupRep& pi, int n, std::uint64_t budget) {
  const Field& f = *pi.field;
  const int r = pi.r;
  if (r > n) throw InvalidArgument("parabolic induction needs r <= n");
  const std::vector<Mat> group = enumerate_gl(f, n, budget);
  std::vector<Mat> inverses;
  for (const Mat& x : group) inverses.push_back(mat_inverse(x));
  auto in_parabolic = [&](const Mat& y) {
    for (int i = r; i < n; ++i)
      for (int j = 0; j < r; ++j)
        if (y(i, j) != 0) return false;
    return true;
  };
  auto levi = [&](const Mat& y) {
    Mat out(f, r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out(i, j) = y(i, j);
    return out;
  };
  const auto parabolic_order = std::count_if(group.begin(), group.end(), in_parabolic);
  CharTable out;
  for (const Mat& g : group) {
    Rat chi = 0;
    for (std::size_t k = 0; k < group.size(); ++k) {
      const Mat y = mat_mul(mat_mul(inverses[k], g), group[k]);
      if (in_parabolic(y)) chi += pi.character(levi(y));
    }
    out.emplace(mat_key(g), chi / parabolic_order);
  }
  return out;
}

MonoidModule restrict_to_submonoid(const MonoidModule& mod, int s) {
  const Field& f = *mod.field;
  const int n = mod.n;
  if (s < 0 || s > n) throw InvalidArgument("restriction needs 0 <= s <= n");
  RatMatrix basis = mod(e_matrix(f, n, s)).transpose();
  const std::vector<std::size_t> pivots = rat_rref(basis);
  const std::size_t k = pivots.size(), d = static_cast<std::size_t>(mod.dim);

  MonoidModule out;
  out.field = &f;
  out.n = s;
  out.dim = static_cast<int>(k);
  out.name = "Res_" + std::to_string(s) + " " + mod.name;
  for_each_matrix(f, s, s, [&](const Mat& a) {
    Mat big(f, n, n);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) big(i, j) = a(i, j);
    const RatMatrix& op = mod(big);
    // Coordinates in the reduced basis are the entries at the pivots.
    RatMatrix x(k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) {
        Rat v = 0;
        for (std::size_t c = 0; c < d; ++c) v += op(pivots[i], c) * basis(j, c);
        x(i, j) = v;
      }
    out.action.emplace(mat_key(a), std::move(x));
  });
  return out;
}

bool transpose_invariant(const CharTable& chi, const Field& f, int n) {
  for (const auto& [k, v] : chi) {
    const auto it = chi.find(mat_key(transpose(mat_from_key(f, n, n, k))));
    if (it == chi.end() || it->second != v) return false;
  }
  return true;
}

bool self_duality_check(const MonoidModule& mod) { return transpose_invariant(character(mod), *mod.field, mod.n); }

std::vector<std::vector<Mat>> gl_conjugacy_classes(const Field& f, int n, std::uint64_t budget) {
  const std::vector<Mat> group = enumerate_gl(f, n, budget);
  std::vector<Mat> inverses;
  for (const Mat& x : group) inverses.push_back(mat_inverse(x));
  std::set<MatKey> seen;
  std::vector<std::vector<Mat>> out;
  for (const Mat& g : group) {
    if (seen.count(mat_key(g))) continue;
    std::set<Mat> orbit;
    for (std::size_t k = 0; k < group.size(); ++k) orbit.insert(mat_mul(mat_mul(inverses[k], g), group[k]));
    for (const Mat& y : orbit) seen.insert(mat_key(y));
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<SimpleModule> simple_modules(const Field& f, int n) {
  std::vector<SimpleModule> out;
  for (int r = 0; r <= n; ++r) {
    IrrepSet irreps = builtin_irreps(f, r);
    if (!irreps.complete)
      throw InvalidArgument("no complete set of irreducible representations of GL_" + std::to_string(r) + "(F_" +
                            std::to_string(f.q()) + ") is built in");
    for (GroupRep& pi : irreps.reps) {
      SimpleLabel label{r, pi.name};
      MonoidModule mod = build_L(n, pi);
      out.push_back(SimpleModule{std::move(label), std::move(pi), std::move(mod)});
    }
  }
  return out;
}

std::vector<std::pair<SimpleLabel, long>> decompose(const MonoidModule& mod, const std::vector<SimpleModule>& simples) {
  for (const auto& s : simples)
    if (s.module.field != mod.field || s.module.n != mod.n)
      throw InvalidArgument("simple modules for a different monoid");
  const CharTable chi = character(mod);
  std::vector<CharTable> tables;
  for (const auto& s : simples) tables.push_back(character(s.module));
  const std::size_t rows = chi.size(), cols = simples.size();
  RatMatrix a(rows, cols);
  std::vector<Rat> b;
  std::size_t i = 0;
  for (const auto& [k, v] : chi) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = tables[j].at(k);
    b.push_back(v);
    ++i;
  }
  // Normal equations; exact because the characters are independent.
  const RatMatrix at = a.transpose();
  const std::vector<Rat> x = rat_solve(at * a, at.apply(b));
  if (a.apply(x) != b) throw ArithmeticError(mod.name + " is not a combination of the given simples");
  std::vector<std::pair<SimpleLabel, long>> out;
  for (std::size_t j = 0; j < cols; ++j) {
    if (x[j].get_den() != 1 || x[j] < 0)
      throw ArithmeticError("multiplicity of " + simples[j].label.to_string() + " is " + to_string(x[j]));
    out.emplace_back(simples[j].label, x[j].get_num().get_si());
  }
  return out;
}

namespace {

MultiplicityMap apply_by_label(const MultiplicityMap& in, int bound, PartitionFn (*op)(const PartitionFn&)) {
  std::map<std::string, PartitionFn> fns;
  for (const auto& [key, v] : in) {
    auto it = fns.try_emplace(key.first, bound).first;
    it->second.set(key.second, v);
  }
  MultiplicityMap out;
  for (const auto& [label, phi] : fns) {
    const PartitionFn image = op(phi);
    for (const auto& [lambda, v] : image.support()) {
      if (v.get_den() != 1) throw ArithmeticError("non-integral multiplicity");
      out.emplace(std::make_pair(label, lambda), v.get_num().get_si());
    }
  }
  return out;
}

}  // namespace

MultiplicityMap multiplicities_n_from_m(const MultiplicityMap& m, int bound) { return apply_by_label(m, bound, op_A); }

MultiplicityMap multiplicities_m_from_n(const MultiplicityMap& n, int bound) { return apply_by_label(n, bound, op_B); }

}  // namespace mmu
