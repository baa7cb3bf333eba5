#include "hodge/subspace.hpp"

#include "hodge/errors.hpp"

namespace hodge {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient dimensions");
}

}  // namespace

Subspace Subspace::zero(size_t ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }

Subspace Subspace::full(size_t ambient) {
  std::vector<size_t> pivots(ambient);
  for (size_t k = 0; k < ambient; ++k) pivots[k] = k;
  return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
  if (vectors.empty()) return zero(ambient);
  auto [reduced, pivots] = row_reduce(Matrix::from_rows(vectors, ambient));
  return Subspace(ambient, std::move(reduced), std::move(pivots));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector has wrong length");
  Vector out(v);
  for (size_t r = 0; r < pivots_.size(); ++r) {
    Gaussian c = out[pivots_[r]];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j)
      if (!basis_(r, j).is_zero()) out[j] -= c * basis_(r, j);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return hodge::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector c(dim());
  for (size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  return span(ambient_, basis_.kernel());
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw DimensionMismatch("map domain does not match subspace");
  std::vector<Vector> images;
  for (size_t r = 0; r < dim(); ++r) images.push_back(m * basis_.row(r));
  return span(m.rows(), images);
}

Subspace Subspace::preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionMismatch("map codomain mismatch");
  Subspace ann = target.annihilator();
  if (ann.dim() == 0) return full(m.cols());
  Matrix conditions = ann.basis() * m;
  return span(m.cols(), conditions.kernel());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  auto vs = a.vectors();
  for (auto& v : b.vectors()) vs.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace conjugate(const Subspace& a) {
  std::vector<Vector> vs;
  for (const auto& v : a.vectors()) vs.push_back(conj(v));
  return Subspace::span(a.ambient_dim(), vs);
}

std::vector<size_t> complement_columns(const Subspace& modulo) {
  std::vector<bool> pivot(modulo.ambient_dim(), false);
  for (size_t p : modulo.pivots()) pivot[p] = true;
  std::vector<size_t> cols;
  for (size_t j = 0; j < pivot.size(); ++j)
    if (!pivot[j]) cols.push_back(j);
  return cols;
}

Subspace quotient_image(const Subspace& a, const Subspace& modulo) {
  require_same_ambient(a, modulo);
  auto cols = complement_columns(modulo);
  std::vector<Vector> images;
  for (const auto& v : a.vectors()) {
    Vector r = modulo.reduce(v);
    Vector q;
    q.reserve(cols.size());
    for (size_t c : cols) q.push_back(r[c]);
    images.push_back(std::move(q));
  }
  return Subspace::span(cols.size(), images);
}

bool complementary(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a.dim() + b.dim() == a.ambient_dim() && sum(a, b).is_full();
}

}  // namespace hodge
