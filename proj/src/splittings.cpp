#include "hodge/splittings.hpp"

#include <algorithm>

namespace hodge {

namespace {

Matrix block_projection(const Matrix& basis, const std::vector<bool>& keep) {
  size_t n = basis.rows();
  Matrix d(n, n);
  for (size_t k = 0; k < n; ++k)
    if (keep[k]) d(k, k) = Gaussian(1);
  return basis * d * basis.inverse();
}

std::vector<Matrix> unflatten_all(const Subspace& s, size_t n) {
  std::vector<Matrix> out;
  for (const auto& v : s.vectors()) out.push_back(Matrix::unflatten(v, n, n));
  return out;
}

bool same_filtration(const IncreasingFiltration& a, const IncreasingFiltration& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  int lo = std::min(a.lowest(), b.lowest()) - 1, hi = std::max(a.highest(), b.highest()) + 1;
  for (int k = lo; k <= hi; ++k)
    if (!(a.at(k) == b.at(k))) return false;
  return true;
}

}  // namespace

GradingOperator GradingOperator::from_eigenspaces(size_t n, std::map<int, Subspace> spaces) {
  std::vector<Vector> cols;
  std::vector<int> eig;
  GradingOperator g;
  for (auto& [l, s] : spaces) {
    if (s.ambient_dim() != n) throw DimensionMismatch("eigenspace has wrong ambient dimension");
    if (s.is_zero()) continue;
    for (auto& v : s.vectors()) {
      cols.push_back(std::move(v));
      eig.push_back(l);
    }
    g.eigenspaces.emplace(l, std::move(s));
  }
  if (cols.size() != n) throw InputError("eigenspaces do not form a direct sum decomposition");
  Matrix basis = Matrix::from_columns(cols, n);
  if (basis.rank() != n) throw InputError("eigenspaces do not form a direct sum decomposition");
  Matrix d(n, n);
  for (size_t k = 0; k < n; ++k) d(k, k) = Gaussian(eig[k]);
  g.matrix = basis * d * basis.inverse();
  return g;
}

IncreasingFiltration GradingOperator::weight_filtration() const {
  std::map<int, Subspace> steps;
  Subspace acc = Subspace::zero(dim());
  for (const auto& [l, s] : eigenspaces) {
    acc = sum(acc, s);
    steps.emplace(l, acc);
  }
  return IncreasingFiltration::create(dim(), std::move(steps));
}

bool GradingOperator::splits(const IncreasingFiltration& w) const {
  return same_filtration(weight_filtration(), w);
}

Matrix GradingOperator::projection(int l) const {
  std::vector<Vector> cols;
  std::vector<bool> keep;
  for (const auto& [k, s] : eigenspaces)
    for (auto& v : s.vectors()) {
      cols.push_back(std::move(v));
      keep.push_back(k == l);
    }
  return block_projection(Matrix::from_columns(cols, dim()), keep);
}

GradingOperator grading_from_bigrading(const Bigrading& b) {
  std::map<int, Subspace> spaces;
  for (const auto& [pq, s] : b.pieces) {
    int l = pq.first + pq.second;
    auto it = spaces.find(l);
    if (it == spaces.end()) spaces.emplace(l, s);
    else it->second = sum(it->second, s);
  }
  return GradingOperator::from_eigenspaces(b.ambient, std::move(spaces));
}

GradingOperator deligne_grading(const MixedHodgeStructure& v) {
  return grading_from_bigrading(deligne_bigrading(v));
}

GradingOperator standard_grading(const IncreasingFiltration& w) {
  std::map<int, Subspace> spaces;
  for (int l : w.graded_indices()) {
    GradedPiece gr(w, l);
    spaces.emplace(l, Subspace::span(w.ambient_dim(), gr.lift_basis()));
  }
  return GradingOperator::from_eigenspaces(w.ambient_dim(), std::move(spaces));
}

std::vector<Matrix> lowering_operators(const IncreasingFiltration& w, int depth) {
  size_t n = w.ambient_dim();
  std::vector<std::pair<Subspace, Subspace>> cons;
  for (int k : w.graded_indices()) cons.emplace_back(w.at(k), w.at(k - depth));
  return unflatten_all(operators_mapping(n, n, cons), n);
}

std::vector<Matrix> l_minus1_minus1(const Bigrading& b) {
  std::vector<std::pair<Subspace, Subspace>> cons;
  for (const auto& [pq, s] : b.pieces) {
    auto [p, q] = pq;
    cons.emplace_back(s, b.span_where([p, q](int r, int t) { return r < p && t < q; }));
  }
  return unflatten_all(operators_mapping(b.ambient, b.ambient, cons), b.ambient);
}

std::vector<Matrix> l_minus1_minus1(const MixedHodgeStructure& v) {
  return l_minus1_minus1(deligne_bigrading(v));
}

bool in_l_minus1_minus1(const Bigrading& b, const Matrix& x) {
  for (const auto& [pq, s] : b.pieces) {
    auto [p, q] = pq;
    Subspace target = b.span_where([p, q](int r, int t) { return r < p && t < q; });
    if (!target.contains(s.image(x))) return false;
  }
  return true;
}

Matrix hodge_component(const Bigrading& b, const Matrix& x, int a, int c) {
  Matrix basis = b.adapted_basis();
  auto degrees = b.adapted_degrees();
  size_t n = b.ambient;
  auto proj = [&](Bidegree d) {
    std::vector<bool> keep(n);
    for (size_t k = 0; k < n; ++k) keep[k] = degrees[k] == d;
    return block_projection(basis, keep);
  };
  Matrix out(n, n);
  for (const auto& [pq, s] : b.pieces) {
    Bidegree target{pq.first + a, pq.second + c};
    if (!b.pieces.count(target)) continue;
    out += proj(target) * x * proj(pq);
  }
  return out;
}

Matrix unipotent_transport(const GradingOperator& t, const GradingOperator& t2) {
  if (t.dim() != t2.dim()) throw DimensionMismatch("gradings act on different spaces");
  if (!same_filtration(t.weight_filtration(), t2.weight_filtration()))
    throw InputError("gradings split different weight filtrations");
  Matrix u(t.dim(), t.dim());
  for (const auto& [l, s] : t.eigenspaces) u += t2.projection(l) * t.projection(l);
  return u;
}

Matrix delta_splitting(const MixedHodgeStructure& v) {
  GradingOperator t = deligne_grading(v);
  std::map<int, Subspace> conj_spaces;
  for (const auto& [l, s] : t.eigenspaces) conj_spaces.emplace(l, conjugate(s));
  GradingOperator tbar = GradingOperator::from_eigenspaces(v.rank(), std::move(conj_spaces));
  // u = e^{-2iδ} carries T to conj(T)
  Matrix u = unipotent_transport(t, tbar);
  Matrix delta = Gaussian(Rational(0), Rational(1, 2)) * u.log_unipotent();
  if (!delta.is_real()) throw InvariantError("delta is not real");
  Bigrading b = deligne_bigrading(v);
  if (!in_l_minus1_minus1(b, delta)) throw InvariantError("delta is not in L^{-1,-1}");
  Matrix shift = (Gaussian(Rational(0), Rational(-1)) * delta).exp_nilpotent();
  if (!is_split_over_R(v.with_hodge(v.hodge().transformed(shift))))
    throw InvariantError("e^{-i delta} F is not split over R");
  return delta;
}

Retraction parse_retraction(const std::string& name) {
  if (name == "delta") return Retraction::delta;
  if (name == "sl2") return Retraction::sl2;
  throw InputError("unknown retraction '" + name + "' (expected delta or sl2)");
}

std::string to_string(Retraction r) { return r == Retraction::delta ? "delta" : "sl2"; }

Matrix sl2_zeta(const MixedHodgeStructure& v) {
  size_t n = v.rank();
  Matrix delta = delta_splitting(v);
  if (delta.is_zero()) return Matrix(n, n);
  Matrix shift = (Gaussian(Rational(0), Rational(-1)) * delta).exp_nilpotent();
  Bigrading j = deligne_bigrading(v.with_hodge(v.hodge().transformed(shift)));

  std::map<Bidegree, Matrix> comp;
  Matrix total(n, n);
  int span = v.weight().highest() - v.weight().lowest();
  for (int a = -span; a <= -1; ++a)
    for (int c = -span; c <= -1; ++c) {
      Matrix x = hodge_component(j, delta, a, c);
      if (x.is_zero()) continue;
      total += x;
      comp.emplace(Bidegree{a, c}, std::move(x));
    }
  if (!(total == delta)) throw InvariantError("delta has components outside L^{-1,-1}");
  bool only_11 = comp.size() == 1 && comp.count({-1, -1});
  if (only_11) return Matrix(n, n);
  if (span >= 6)
    throw UnsupportedError("sl2 splitting is implemented for weight spans up to 5");

  auto d = [&](int a, int c) { return comp.count({a, c}) ? comp.at({a, c}) : Matrix(n, n); };
  auto g = [](long num, long den, bool imaginary) {
    Rational r(num, den);
    r.canonicalize();
    return imaginary ? Gaussian(Rational(0), r) : Gaussian(r);
  };
  Matrix zeta(n, n);
  zeta += g(-1, 2, true) * d(-1, -2);
  zeta += g(1, 2, true) * d(-2, -1);
  zeta += g(-3, 4, true) * d(-1, -3);
  zeta += g(3, 4, true) * d(-3, -1);
  zeta += g(-3, 8, true) * d(-2, -3) + g(-1, 8, false) * bracket(d(-1, -1), d(-1, -2));
  zeta += g(3, 8, true) * d(-3, -2) + g(-1, 8, false) * bracket(d(-1, -1), d(-2, -1));
  zeta += g(-5, 8, true) * d(-1, -4) + g(-1, 4, false) * bracket(d(-1, -1), d(-1, -3));
  zeta += g(5, 8, true) * d(-4, -1) + g(-1, 4, false) * bracket(d(-1, -1), d(-3, -1));
  if (!zeta.is_real()) throw InvariantError("sl2 zeta is not real");
  return zeta;
}

DecreasingFiltration split_filtration(const MixedHodgeStructure& v, Retraction r) {
  Matrix delta = delta_splitting(v);
  Matrix g = (Gaussian(Rational(0), Rational(-1)) * delta).exp_nilpotent();
  if (r == Retraction::sl2) g = sl2_zeta(v).exp_nilpotent() * g;
  return v.hodge().transformed(g);
}

RealSplitPoint split_point(const MixedHodgeStructure& v) {
  RealSplitPoint pt;
  for (int k : v.weight().graded_indices()) {
    GradedPiece gr(v.weight(), k);
    pt.graded.emplace(k, gr.induced(v.hodge()));
  }
  pt.grading = deligne_grading(v);
  if (!pt.grading.is_real()) throw InputError("structure is not split over R");
  return pt;
}

RealSplitPoint retract(const MixedHodgeStructure& v, Retraction r) {
  return split_point(v.with_hodge(split_filtration(v, r)));
}

DecreasingFiltration assemble(const RealSplitPoint& point, const IncreasingFiltration& w) {
  size_t n = w.ambient_dim();
  if (point.grading.dim() != n) throw DimensionMismatch("grading has wrong dimension");
  if (!point.grading.splits(w)) throw InputError("grading does not split the weight filtration");
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, f] : point.graded) {
    lo = first ? f.lowest() : std::min(lo, f.lowest());
    hi = first ? f.highest() : std::max(hi, f.highest());
    first = false;
  }
  std::map<int, Matrix> proj;
  for (const auto& [k, f] : point.graded) proj.emplace(k, point.grading.projection(k));
  std::map<int, Subspace> steps;
  for (int p = lo; p <= hi + 1; ++p) {
    std::vector<Vector> vs;
    for (const auto& [k, f] : point.graded) {
      GradedPiece gr(w, k);
      for (const auto& c : f.at(p).vectors()) vs.push_back(proj.at(k) * gr.lift(c));
    }
    steps.emplace(p, Subspace::span(n, vs));
  }
  return DecreasingFiltration::create(n, std::move(steps));
}

std::vector<Rational> chart_coordinates(const GradingOperator& t, const IncreasingFiltration& w) {
  if (!t.is_real()) throw InputError("chart coordinates need a real grading");
  size_t n = w.ambient_dim();
  Matrix x = unipotent_transport(standard_grading(w), t).log_unipotent();
  std::vector<Vector> basis;
  for (const auto& m : lowering_operators(w, 1)) basis.push_back(m.flatten());
  Subspace space = Subspace::span(n * n, basis);
  std::vector<Rational> out;
  for (const auto& c : space.coordinates(x.flatten())) out.push_back(c.re());
  return out;
}

}  // namespace hodge
