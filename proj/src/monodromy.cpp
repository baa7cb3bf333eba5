#include "hodge/monodromy.hpp"

#include <algorithm>

namespace hodge {

NilpotentOperator NilpotentOperator::create(Matrix m) {
  if (!m.is_square()) throw DimensionMismatch("monodromy logarithm must be square");
  if (!m.is_real()) throw InputError("monodromy logarithm must be rational");
  NilpotentOperator n;
  n.nilpotency_index = m.rows() == 0 ? 1 : m.nilpotency_index();
  if (n.nilpotency_index == 0) throw InputError("operator is not nilpotent");
  n.matrix = std::move(m);
  return n;
}

bool NilpotentOperator::preserves(const IncreasingFiltration& w) const {
  for (const auto& [k, s] : w.jumps())
    if (!s.contains(s.image(matrix))) return false;
  return true;
}

IncreasingFiltration weight_filtration_pure(const NilpotentOperator& n, int center) {
  size_t d = n.dim();
  if (d == 0) return IncreasingFiltration::create(0, {});
  int top = static_cast<int>(d);
  std::vector<Subspace> ker, im;
  Matrix power = Matrix::identity(d);
  for (int j = 0; j <= top + 1; ++j) {
    im.push_back(Subspace::full(d).image(power));
    power = power * n.matrix;
    ker.push_back(Subspace::span(d, power.kernel()));  // ker N^{j+1}
  }
  std::map<int, Subspace> steps;
  for (int k = -top - 1; k <= top; ++k) {
    Subspace s = Subspace::zero(d);
    for (int j = 0; j <= top; ++j) {
      int e = j - k;
      Subspace image = e <= 0 ? Subspace::full(d) : im[std::min(e, top + 1)];
      s = sum(s, intersect(ker[j], image));
    }
    steps.emplace(k + center, std::move(s));
  }
  return IncreasingFiltration::create(d, std::move(steps));
}

namespace {

// Largest key <= k, zero below the first key.
Subspace step_at(const std::map<int, Subspace>& m, int k, size_t n) {
  auto it = m.upper_bound(k);
  if (it == m.begin()) return Subspace::zero(n);
  return std::prev(it)->second;
}

}  // namespace

RelativeWeightFiltration relative_weight_filtration(const NilpotentOperator& n,
                                                    const IncreasingFiltration& w) {
  size_t d = n.dim();
  if (w.ambient_dim() != d) throw DimensionMismatch("N and W act on different spaces");
  if (!n.preserves(w)) throw InputError("N does not preserve W");
  RelativeWeightFiltration out;
  std::map<int, Subspace> m;  // relative filtration of the part built so far

  for (int b : w.graded_indices()) {
    GradedPiece gr(w, b);
    Subspace u = gr.lower();
    size_t g = gr.dim();
    Matrix dn = gr.induced_map(n.matrix);
    IncreasingFiltration pure = weight_filtration_pure(NilpotentOperator::create(dn), b);

    // Basis of Gr_b adapted to the pure filtration, with levels.
    std::vector<Vector> basis;
    std::vector<int> level;
    Subspace acc = Subspace::zero(g);
    for (const auto& [k, s] : pure.jumps())
      for (const auto& v : s.vectors())
        if (!acc.contains(v)) {
          acc = sum(acc, Subspace::span(g, {v}));
          basis.push_back(v);
          level.push_back(k);
        }
    Matrix gbasis = Matrix::from_columns(basis, g);
    Matrix ginv = gbasis.inverse();
    std::vector<Vector> lifts;
    for (const auto& v : basis) lifts.push_back(gr.lift(v));

    // Unknown corrections x_i = sum_t y[i*m + t] u_t.
    auto ub = u.vectors();
    size_t mu = ub.size();
    std::vector<Vector> nub;
    for (const auto& x : ub) nub.push_back(n.matrix * x);
    std::vector<Vector> rows;
    Vector rhs;
    for (size_t i = 0; i < g; ++i) {
      Vector coeff = ginv * (dn * basis[i]);  // D g_i = sum_j coeff[j] g_j
      Vector constant = n.matrix * lifts[i];
      for (size_t j = 0; j < g; ++j)
        if (!coeff[j].is_zero()) constant = constant - scaled(lifts[j], coeff[j]);
      Subspace target = step_at(m, level[i] - 2, d);
      for (const auto& a : target.annihilator().vectors()) {
        Vector row(g * mu);
        for (size_t t = 0; t < mu; ++t) {
          row[i * mu + t] += dot(a, nub[t]);
          Gaussian au = dot(a, ub[t]);
          for (size_t j = 0; j < g; ++j) row[j * mu + t] -= coeff[j] * au;
        }
        rows.push_back(std::move(row));
        rhs.push_back(-dot(a, constant));
      }
    }
    Vector y(g * mu);
    bool ok = true;
    if (!rows.empty()) {
      if (g * mu == 0) ok = is_zero(rhs);
      else ok = solve(Matrix::from_rows(rows, g * mu), rhs, y);
    }
    if (!ok) {
      out.reason = "no lift of Gr_" + std::to_string(b) + " is compatible with N";
      return out;
    }
    std::vector<Vector> hat;
    for (size_t i = 0; i < g; ++i) {
      Vector v = lifts[i];
      for (size_t t = 0; t < mu; ++t)
        if (!y[i * mu + t].is_zero()) v = v + scaled(ub[t], y[i * mu + t]);
      hat.push_back(std::move(v));
    }
    int lo = *std::min_element(level.begin(), level.end());
    int hi = *std::max_element(level.begin(), level.end());
    if (!m.empty()) {
      lo = std::min(lo, m.begin()->first);
      hi = std::max(hi, m.rbegin()->first);
    }
    std::map<int, Subspace> next;
    for (int k = lo; k <= hi; ++k) {
      std::vector<Vector> vs;
      for (size_t i = 0; i < g; ++i)
        if (level[i] <= k) vs.push_back(hat[i]);
      next.emplace(k, sum(step_at(m, k, d), Subspace::span(d, vs)));
    }
    m = std::move(next);
  }

  out.filtration = IncreasingFiltration::create(d, std::move(m));
  std::string problem = check_relative_axioms(n, w, out.filtration);
  if (!problem.empty()) throw InvariantError("constructed relative filtration fails: " + problem);
  out.exists = true;
  return out;
}

std::string check_relative_axioms(const NilpotentOperator& n, const IncreasingFiltration& w,
                                  const IncreasingFiltration& m) {
  for (const auto& [k, s] : m.jumps())
    if (!m.at(k - 2).contains(s.image(n.matrix)))
      return "N M_" + std::to_string(k) + " is not in M_" + std::to_string(k - 2);
  int reach = m.highest() - m.lowest() + 2;
  for (int j : w.graded_indices()) {
    GradedPiece gr(w, j);
    IncreasingFiltration mj = gr.induced(m);
    Matrix nj = gr.induced_map(n.matrix);
    Matrix power = Matrix::identity(gr.dim());
    for (int l = 0; l <= reach; ++l) {
      auto gr_dim = [&](int k) { return mj.at(k).dim() - mj.at(k - 1).dim(); };
      if (gr_dim(j + l) != gr_dim(j - l))
        return "Gr^M_" + std::to_string(j + l) + " and Gr^M_" + std::to_string(j - l) +
               " of Gr^W_" + std::to_string(j) + " differ in dimension";
      if (l > 0) {
        Subspace img = sum(mj.at(j + l).image(power), mj.at(j - l - 1));
        if (!(img == mj.at(j - l)))
          return "N^" + std::to_string(l) + " is not onto Gr^M_" + std::to_string(j - l) +
                 " of Gr^W_" + std::to_string(j);
      }
      power = power * nj;
    }
  }
  return "";
}

LimitResult limit_mhs(const DecreasingFiltration& f0, const NilpotentOperator& n,
                      const IncreasingFiltration& w) {
  auto rel = relative_weight_filtration(n, w);
  if (!rel.exists) throw InputError("relative weight filtration does not exist: " + rel.reason);
  if (f0.ambient_dim() != n.dim()) throw DimensionMismatch("F0 has wrong dimension");
  LimitResult out;
  out.relative = rel.filtration;
  out.report = validate_mhs(n.dim(), rel.filtration, f0);
  if (out.report.valid) out.mhs = MixedHodgeStructure::create(rel.filtration, f0);
  return out;
}

}  // namespace hodge
