#include "hodge/filtration.hpp"

#include <algorithm>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

IncreasingFiltration IncreasingFiltration::create(size_t ambient, std::map<int, Subspace> steps) {
  if (steps.empty() && ambient > 0) throw InputError("increasing filtration has no steps");
  const Subspace* prev = nullptr;
  for (const auto& [k, s] : steps) {
    if (s.ambient_dim() != ambient)
      throw DimensionMismatch("filtration step " + std::to_string(k) + " has wrong ambient dimension");
    if (prev && !s.contains(*prev))
      throw InputError("increasing filtration is not nested at index " + std::to_string(k));
    prev = &s;
  }
  IncreasingFiltration f;
  f.ambient_ = ambient;
  Subspace last = Subspace::zero(ambient);
  for (auto& [k, s] : steps) {
    if (s == last) continue;
    last = s;
    f.steps_.emplace(k, std::move(s));
  }
  if (!last.is_full()) {
    int top = steps.empty() ? 0 : steps.rbegin()->first + 1;
    f.steps_.emplace(top, Subspace::full(ambient));
  }
  return f;
}

IncreasingFiltration IncreasingFiltration::pure(size_t ambient, int weight) {
  return create(ambient, {{weight, Subspace::full(ambient)}});
}

Subspace IncreasingFiltration::at(int k) const {
  auto it = steps_.upper_bound(k);
  if (it == steps_.begin()) return Subspace::zero(ambient_);
  return std::prev(it)->second;
}

std::vector<int> IncreasingFiltration::graded_indices() const {
  std::vector<int> out;
  for (const auto& [k, s] : steps_) out.push_back(k);
  return out;
}

int IncreasingFiltration::lowest() const { return steps_.empty() ? 0 : steps_.begin()->first; }
int IncreasingFiltration::highest() const { return steps_.empty() ? 0 : steps_.rbegin()->first; }

bool IncreasingFiltration::is_real() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const auto& e) { return e.second.is_real(); });
}

DecreasingFiltration DecreasingFiltration::create(size_t ambient, std::map<int, Subspace> steps) {
  const Subspace* prev = nullptr;
  for (const auto& [p, s] : steps) {
    if (s.ambient_dim() != ambient)
      throw DimensionMismatch("filtration step " + std::to_string(p) + " has wrong ambient dimension");
    if (prev && !prev->contains(s))
      throw InputError("decreasing filtration is not nested at index " + std::to_string(p));
    prev = &s;
  }
  DecreasingFiltration f;
  f.ambient_ = ambient;
  Subspace next = Subspace::zero(ambient);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->second == next) continue;
    next = it->second;
    f.steps_.emplace(it->first, it->second);
  }
  if (ambient > 0 && !next.is_full()) {
    int bottom = steps.empty() ? 0 : steps.begin()->first - 1;
    f.steps_.emplace(bottom, Subspace::full(ambient));
  }
  return f;
}

Subspace DecreasingFiltration::at(int p) const {
  auto it = steps_.lower_bound(p);
  if (it == steps_.end()) return Subspace::zero(ambient_);
  return it->second;
}

int DecreasingFiltration::lowest() const { return steps_.empty() ? 0 : steps_.begin()->first; }
int DecreasingFiltration::highest() const { return steps_.empty() ? 0 : steps_.rbegin()->first; }

DecreasingFiltration DecreasingFiltration::conjugate() const {
  std::map<int, Subspace> out;
  for (const auto& [p, s] : steps_) out.emplace(p, hodge::conjugate(s));
  return create(ambient_, std::move(out));
}

DecreasingFiltration DecreasingFiltration::transformed(const Matrix& g) const {
  std::map<int, Subspace> out;
  for (const auto& [p, s] : steps_) out.emplace(p, s.image(g));
  return create(ambient_, std::move(out));
}

GradedPiece::GradedPiece(const IncreasingFiltration& w, int k)
    : index_(k), lower_(w.at(k - 1)), upper_(w.at(k)) {
  std::vector<bool> low(upper_.ambient_dim(), false);
  for (size_t p : lower_.pivots()) low[p] = true;
  for (size_t r = 0; r < upper_.dim(); ++r) {
    size_t p = upper_.pivots()[r];
    if (low[p]) continue;
    columns_.push_back(p);
    lifts_.push_back(upper_.basis().row(r));
  }
}

Vector GradedPiece::coords(const Vector& v) const {
  if (!upper_.contains(v)) throw InputError("vector does not lie in W_k");
  Vector r = lower_.reduce(v);
  Vector c;
  c.reserve(columns_.size());
  for (size_t col : columns_) c.push_back(r[col]);
  return c;
}

Vector GradedPiece::lift(const Vector& c) const {
  if (c.size() != dim()) throw DimensionMismatch("graded coordinates have wrong length");
  Vector v(upper_.ambient_dim());
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) v = v + scaled(lifts_[i], c[i]);
  return v;
}

Subspace GradedPiece::induced(const Subspace& s) const {
  Subspace inside = intersect(s, upper_);
  std::vector<Vector> cs;
  for (const auto& v : inside.vectors()) cs.push_back(coords(v));
  return Subspace::span(dim(), cs);
}

DecreasingFiltration GradedPiece::induced(const DecreasingFiltration& f) const {
  std::map<int, Subspace> steps;
  for (const auto& [p, s] : f.jumps()) steps.emplace(p, induced(s));
  return DecreasingFiltration::create(dim(), std::move(steps));
}

IncreasingFiltration GradedPiece::induced(const IncreasingFiltration& m) const {
  std::map<int, Subspace> steps;
  for (const auto& [j, s] : m.jumps()) steps.emplace(j, induced(s));
  return IncreasingFiltration::create(dim(), std::move(steps));
}

Matrix GradedPiece::induced_map(const Matrix& m) const {
  std::vector<Vector> cols;
  for (const auto& l : lifts_) cols.push_back(coords(m * l));
  return Matrix::from_columns(cols, dim());
}

}  // namespace hodge
