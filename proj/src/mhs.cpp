#include "hodge/mhs.hpp"

#include <algorithm>

namespace hodge {

namespace {

Gaussian i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian::i();
    case 2: return Gaussian(-1);
    default: return -Gaussian::i();
  }
}

// dim(F^p ∩ Fbar^q) on a single graded piece.
size_t cross_dim(const DecreasingFiltration& f, const DecreasingFiltration& fbar, int p, int q) {
  return intersect(f.at(p), fbar.at(q)).dim();
}

void check_structure(size_t rank, const IncreasingFiltration& w, const DecreasingFiltration& f) {
  if (w.ambient_dim() != rank || f.ambient_dim() != rank)
    throw DimensionMismatch("filtrations do not match the rank");
  if (!w.is_real()) throw InputError("weight filtration must have rational bases");
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Subspace kron(const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& u : a.vectors())
    for (const auto& v : b.vectors()) vs.push_back(kron(u, v));
  return Subspace::span(a.ambient_dim() * b.ambient_dim(), vs);
}

}  // namespace

ValidationReport validate_mhs(size_t rank, const IncreasingFiltration& weight,
                              const DecreasingFiltration& hodge, bool thorough) {
  check_structure(rank, weight, hodge);
  ValidationReport report;
  report.thorough = thorough;
  const int flo = hodge.lowest(), fhi = hodge.highest();
  for (int l : weight.graded_indices()) {
    GradedPiece gr(weight, l);
    DecreasingFiltration f = gr.induced(hodge);
    DecreasingFiltration fbar = f.conjugate();
    int plo = std::min(flo, l + 1 - fhi) - 1;
    int phi = std::max(fhi, l + 1 - flo) + 1;
    for (int p = plo; p <= phi; ++p)
      if (!complementary(f.at(p), fbar.at(l + 1 - p))) report.failures.push_back({l, p});
    if (thorough) {
      for (int p = flo - 1; p <= fhi + 1; ++p)
        for (int q = flo - 1; q <= fhi + 1; ++q) {
          if (p + q == l) continue;
          long d = static_cast<long>(cross_dim(f, fbar, p, q)) -
                   static_cast<long>(cross_dim(f, fbar, p + 1, q)) -
                   static_cast<long>(cross_dim(f, fbar, p, q + 1)) +
                   static_cast<long>(cross_dim(f, fbar, p + 1, q + 1));
          if (d != 0) report.triple_failures.push_back({l, p, q});
        }
    }
  }
  report.valid = report.failures.empty();
  if (thorough && report.valid != report.triple_failures.empty())
    throw InvariantError("opposedness and triple-graded checks disagree");
  return report;
}

MixedHodgeStructure MixedHodgeStructure::create(IncreasingFiltration weight,
                                                DecreasingFiltration hodge) {
  auto report = validate_mhs(weight.ambient_dim(), weight, hodge);
  if (!report.valid) {
    const auto& f = report.failures.front();
    throw NotMixedHodgeStructure("not a mixed Hodge structure: F^" + std::to_string(f.p) +
                                 " fails to be opposed on Gr_" + std::to_string(f.weight));
  }
  return MixedHodgeStructure(std::move(weight), std::move(hodge));
}

int MixedHodgeStructure::pure_weight() const {
  if (!is_pure() || weight_.jumps().empty()) throw InputError("structure is not pure");
  return weight_.jumps().begin()->first;
}

MixedHodgeStructure MixedHodgeStructure::with_hodge(DecreasingFiltration hodge) const {
  return create(weight_, std::move(hodge));
}

Subspace Bigrading::piece(int p, int q) const {
  auto it = pieces.find({p, q});
  return it == pieces.end() ? Subspace::zero(ambient) : it->second;
}

Matrix Bigrading::adapted_basis() const {
  std::vector<Vector> cols;
  for (const auto& [pq, s] : pieces)
    for (auto& v : s.vectors()) cols.push_back(std::move(v));
  return Matrix::from_columns(cols, ambient);
}

std::vector<Bidegree> Bigrading::adapted_degrees() const {
  std::vector<Bidegree> out;
  for (const auto& [pq, s] : pieces)
    for (size_t k = 0; k < s.dim(); ++k) out.push_back(pq);
  return out;
}

Bigrading deligne_bigrading(const MixedHodgeStructure& v) {
  const auto& w = v.weight();
  const auto& f = v.hodge();
  DecreasingFiltration fbar = f.conjugate();
  Bigrading b;
  b.ambient = v.rank();
  for (int l : w.graded_indices()) {
    Subspace wl = w.at(l);
    for (int p = f.lowest(); p <= f.highest(); ++p) {
      int q = l - p;
      Subspace left = intersect(f.at(p), wl);
      if (left.is_zero()) continue;
      Subspace right = intersect(fbar.at(q), wl);
      for (int j = 0; l - 2 - j >= w.lowest(); ++j)
        right = sum(right, intersect(fbar.at(q - 1 - j), w.at(l - 2 - j)));
      Subspace piece = intersect(left, right);
      if (!piece.is_zero()) b.pieces.emplace(Bidegree{p, q}, std::move(piece));
    }
  }
  if (!is_bigrading_of(b, v) || !satisfies_deligne_congruence(b))
    throw InvariantError("Deligne bigrading formula produced an invalid bigrading");
  return b;
}

bool is_bigrading_of(const Bigrading& b, const MixedHodgeStructure& v) {
  size_t total = 0;
  for (const auto& [pq, s] : b.pieces) total += s.dim();
  if (total != v.rank()) return false;
  if (!b.span_where([](int, int) { return true; }).is_full()) return false;
  const auto& f = v.hodge();
  for (int p = f.lowest() - 1; p <= f.highest() + 1; ++p)
    if (!(f.at(p) == b.span_where([p](int r, int) { return r >= p; }))) return false;
  const auto& w = v.weight();
  for (int k = w.lowest() - 1; k <= w.highest() + 1; ++k)
    if (!(w.at(k) == b.span_where([k](int r, int s) { return r + s <= k; }))) return false;
  return true;
}

bool satisfies_deligne_congruence(const Bigrading& b) {
  std::vector<Bidegree> degrees;
  for (const auto& [pq, s] : b.pieces) {
    degrees.push_back(pq);
    degrees.emplace_back(pq.second, pq.first);
  }
  for (const auto& [p, q] : degrees) {
    Subspace lower = b.span_where([p, q](int r, int s) { return r < p && s < q; });
    if (!(sum(b.piece(p, q), lower) == sum(conjugate(b.piece(q, p)), lower))) return false;
  }
  return true;
}

bool is_split_over_R(const MixedHodgeStructure& v) {
  Bigrading b = deligne_bigrading(v);
  for (const auto& [pq, s] : b.pieces)
    if (!(conjugate(s) == b.piece(pq.second, pq.first))) return false;
  return true;
}

HodgeNumbers hodge_numbers(const MixedHodgeStructure& v) {
  HodgeNumbers h;
  for (const auto& [pq, s] : deligne_bigrading(v).pieces) h[pq] = s.dim();
  return h;
}

Matrix weil_operator(size_t dim, int weight, const DecreasingFiltration& f) {
  DecreasingFiltration fbar = f.conjugate();
  std::vector<Vector> cols;
  std::vector<Gaussian> eig;
  for (int p = f.lowest(); p <= f.highest(); ++p) {
    Subspace piece = intersect(f.at(p), fbar.at(weight - p));
    for (auto& v : piece.vectors()) {
      cols.push_back(std::move(v));
      eig.push_back(i_power(2 * p - weight));
    }
  }
  if (cols.size() != dim) throw NotMixedHodgeStructure("Hodge decomposition does not span");
  Matrix basis = Matrix::from_columns(cols, dim);
  Matrix diag(dim, dim);
  for (size_t k = 0; k < dim; ++k) diag(k, k) = eig[k];
  Matrix c = basis * diag * basis.inverse();
  if (!c.is_real()) throw InvariantError("Weil operator is not real");
  return c;
}

Matrix weil_operator(const MixedHodgeStructure& v) {
  int n = v.pure_weight();
  return weil_operator(v.rank(), n, v.hodge());
}

PolarizationReport check_polarization(size_t dim, int weight, const DecreasingFiltration& f,
                                      const Matrix& form) {
  PolarizationReport r;
  auto fail = [&](std::string what) {
    r.polarized = false;
    r.issues.push_back({weight, std::move(what)});
  };
  if (form.rows() != dim || form.cols() != dim) {
    fail("form has wrong shape");
    return r;
  }
  if (!form.is_real()) fail("form is not rational");
  Matrix signed_t = (weight % 2 == 0 ? Gaussian(1) : Gaussian(-1)) * form.transpose();
  if (!(signed_t == form)) fail(weight % 2 == 0 ? "form is not symmetric" : "form is not skew-symmetric");
  if (dim > 0 && form.determinant().is_zero()) {
    fail("form is degenerate");
    return r;
  }
  Matrix c = weil_operator(dim, weight, f);
  Matrix gram = c.transpose() * form;  // h(u, v) = u^T gram conj(v)
  if (!(gram == gram.adjoint())) {
    fail("hermitian form is not hermitian");
    return r;
  }
  for (size_t k = 1; k <= dim; ++k) {
    Matrix minor(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    Gaussian d = minor.determinant();
    if (!d.is_real() || sgn(d.re()) <= 0) {
      fail("hermitian form is not positive definite (leading minor " + std::to_string(k) + ")");
      break;
    }
  }
  DecreasingFiltration fbar = f.conjugate();
  std::vector<std::pair<int, Subspace>> pieces;
  for (int p = f.lowest(); p <= f.highest(); ++p) {
    Subspace s = intersect(f.at(p), fbar.at(weight - p));
    if (!s.is_zero()) pieces.emplace_back(p, std::move(s));
  }
  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = a + 1; b < pieces.size(); ++b)
      for (const auto& u : pieces[a].second.vectors())
        for (const auto& v : pieces[b].second.vectors())
          if (!dot(u, gram * conj(v)).is_zero()) {
            fail("Hodge decomposition is not orthogonal between p=" + std::to_string(pieces[a].first) +
                 " and p=" + std::to_string(pieces[b].first));
            a = b = pieces.size();
            goto done;
          }
done:
  return r;
}

PolarizationReport check_graded_polarization(const MixedHodgeStructure& v,
                                             const GradedPolarization& q) {
  PolarizationReport r;
  for (int k : v.weight().graded_indices()) {
    GradedPiece gr(v.weight(), k);
    auto it = q.forms.find(k);
    if (it == q.forms.end()) {
      r.polarized = false;
      r.issues.push_back({k, "missing polarization form"});
      continue;
    }
    auto piece = check_polarization(gr.dim(), k, gr.induced(v.hodge()), it->second);
    if (!piece.polarized) {
      r.polarized = false;
      r.issues.insert(r.issues.end(), piece.issues.begin(), piece.issues.end());
    }
  }
  return r;
}

MixedHodgeStructure tensor(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
  size_t n = a.rank() * b.rank();
  const auto& wa = a.weight();
  const auto& wb = b.weight();
  std::map<int, Subspace> w;
  for (int k = wa.lowest() + wb.lowest(); k <= wa.highest() + wb.highest(); ++k) {
    Subspace s = Subspace::zero(n);
    for (int i = wa.lowest(); i <= wa.highest(); ++i) s = sum(s, kron(wa.at(i), wb.at(k - i)));
    w.emplace(k, std::move(s));
  }
  const auto& fa = a.hodge();
  const auto& fb = b.hodge();
  std::map<int, Subspace> f;
  for (int p = fa.lowest() + fb.lowest(); p <= fa.highest() + fb.highest(); ++p) {
    Subspace s = Subspace::zero(n);
    for (int i = fa.lowest(); i <= fa.highest(); ++i) s = sum(s, kron(fa.at(i), fb.at(p - i)));
    f.emplace(p, std::move(s));
  }
  return MixedHodgeStructure::create(IncreasingFiltration::create(n, std::move(w)),
                                     DecreasingFiltration::create(n, std::move(f)));
}

MixedHodgeStructure dual(const MixedHodgeStructure& v) {
  size_t n = v.rank();
  const auto& w = v.weight();
  std::map<int, Subspace> wd;
  for (int k = -w.highest() - 1; k <= -w.lowest(); ++k) wd.emplace(k, w.at(-k - 1).annihilator());
  const auto& f = v.hodge();
  std::map<int, Subspace> fd;
  for (int p = -f.highest(); p <= 1 - f.lowest(); ++p) fd.emplace(p, f.at(1 - p).annihilator());
  return MixedHodgeStructure::create(IncreasingFiltration::create(n, std::move(wd)),
                                     DecreasingFiltration::create(n, std::move(fd)));
}

Subspace operators_mapping(size_t rows, size_t cols,
                           const std::vector<std::pair<Subspace, Subspace>>& constraints) {
  std::vector<Vector> equations;
  for (const auto& [src, dst] : constraints) {
    if (src.ambient_dim() != cols || dst.ambient_dim() != rows)
      throw DimensionMismatch("operator constraint has wrong dimensions");
    Subspace ann = dst.annihilator();
    for (const auto& s : src.vectors())
      for (const auto& a : ann.vectors()) {
        // a . (X s) = sum_{i,j} a_i X_ij s_j
        Vector eq(rows * cols);
        for (size_t i = 0; i < rows; ++i)
          for (size_t j = 0; j < cols; ++j) eq[i * cols + j] = a[i] * s[j];
        equations.push_back(std::move(eq));
      }
  }
  if (equations.empty()) return Subspace::full(rows * cols);
  return Subspace::span(rows * cols, Matrix::from_rows(equations, rows * cols).kernel());
}

MixedHodgeStructure hom(const MixedHodgeStructure& a, const MixedHodgeStructure& b) {
  size_t rows = b.rank(), cols = a.rank(), n = rows * cols;
  auto reorder = [&](const Subspace& s) {
    std::vector<Vector> out;
    for (const auto& v : s.vectors()) {
      Vector r(n);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r[j * rows + i] = v[i * cols + j];
      out.push_back(std::move(r));
    }
    return Subspace::span(n, out);
  };
  const auto& wa = a.weight();
  const auto& wb = b.weight();
  std::map<int, Subspace> w;
  for (int k = wb.lowest() - wa.highest() - 1; k <= wb.highest() - wa.lowest(); ++k) {
    std::vector<std::pair<Subspace, Subspace>> cons;
    for (int l : wa.graded_indices()) cons.emplace_back(wa.at(l), wb.at(l + k));
    w.emplace(k, reorder(operators_mapping(rows, cols, cons)));
  }
  const auto& fa = a.hodge();
  const auto& fb = b.hodge();
  std::map<int, Subspace> f;
  for (int p = fb.lowest() - fa.highest() - 1; p <= fb.highest() - fa.lowest() + 1; ++p) {
    std::vector<std::pair<Subspace, Subspace>> cons;
    for (const auto& [s, sp] : fa.jumps()) cons.emplace_back(sp, fb.at(s + p));
    f.emplace(p, reorder(operators_mapping(rows, cols, cons)));
  }
  return MixedHodgeStructure::create(IncreasingFiltration::create(n, std::move(w)),
                                     DecreasingFiltration::create(n, std::move(f)));
}

MixedHodgeStructure tate(int n) {
  return MixedHodgeStructure::create(IncreasingFiltration::pure(1, -2 * n),
                                     DecreasingFiltration::create(1, {{-n, Subspace::full(1)}}));
}

MorphismReport check_morphism(const MhsMorphism& m) {
  MorphismReport r;
  const Matrix& f = m.matrix;
  if (f.rows() != m.target.rank() || f.cols() != m.source.rank())
    throw DimensionMismatch("morphism matrix has wrong shape");
  if (!f.is_real()) {
    r.ok = false;
    r.failures.push_back("matrix is not rational");
  }
  for (const auto& [k, s] : m.source.weight().jumps())
    if (!m.target.weight().at(k).contains(s.image(f))) {
      r.ok = false;
      r.failures.push_back("W_" + std::to_string(k) + " is not preserved");
    }
  for (const auto& [p, s] : m.source.hodge().jumps())
    if (!m.target.hodge().at(p).contains(s.image(f))) {
      r.ok = false;
      r.failures.push_back("F^" + std::to_string(p) + " is not preserved");
    }
  return r;
}

MorphismReport strictness_check(const MhsMorphism& m) {
  MorphismReport r;
  const Matrix& f = m.matrix;
  Subspace image = Subspace::full(m.source.rank()).image(f);
  const auto& ws = m.source.weight();
  const auto& wt = m.target.weight();
  int lo = std::min(ws.lowest(), wt.lowest()) - 1, hi = std::max(ws.highest(), wt.highest()) + 1;
  for (int k = lo; k <= hi; ++k)
    if (!(intersect(image, wt.at(k)) == ws.at(k).image(f))) {
      r.ok = false;
      r.failures.push_back("not strict for W_" + std::to_string(k));
    }
  const auto& fs = m.source.hodge();
  const auto& ft = m.target.hodge();
  lo = std::min(fs.lowest(), ft.lowest()) - 1;
  hi = std::max(fs.highest(), ft.highest()) + 1;
  for (int p = lo; p <= hi; ++p)
    if (!(intersect(image, ft.at(p)) == fs.at(p).image(f))) {
      r.ok = false;
      r.failures.push_back("not strict for F^" + std::to_string(p));
    }
  return r;
}

IntegerLattice hodge_classes(const MixedHodgeStructure& v) {
  std::vector<std::vector<Rational>> rows;
  auto add = [&](const Subspace& s) {
    for (const auto& a : s.annihilator().vectors()) {
      std::vector<Rational> re, im;
      for (const auto& x : a) {
        re.push_back(x.re());
        im.push_back(x.im());
      }
      rows.push_back(std::move(re));
      rows.push_back(std::move(im));
    }
  };
  add(v.weight().at(0));
  add(v.hodge().at(0));
  return integer_kernel(clear_denominators(rows), v.rank());
}

}  // namespace hodge
