#include "hodge/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

namespace hodge {

Gaussian evaluate(const Polynomial& p, const Gaussian& q) {
  Gaussian acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::complex<double> evaluate(const Polynomial& p, std::complex<double> q) {
  std::complex<double> acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * q + it->to_complex();
  return acc;
}

LocalModel1D LocalModel1D::create(size_t rank, IncreasingFiltration weight, GradedPolarization q,
                                  NilpotentOperator n, std::map<int, std::vector<PolyVector>> psi) {
  if (weight.ambient_dim() != rank || n.dim() != rank)
    throw DimensionMismatch("model data does not match the rank");
  if (!weight.is_real()) throw InputError("weight filtration must have rational bases");
  if (!n.preserves(weight)) throw InputError("N does not preserve W");
  Matrix e = n.matrix.exp_nilpotent();
  for (size_t i = 0; i < rank; ++i)
    for (size_t j = 0; j < rank; ++j)
      if (e(i, j).re().get_den() != 1) throw InputError("monodromy e^N is not integral");
  for (const auto& [p, vs] : psi)
    for (const auto& v : vs)
      if (v.size() != rank) throw DimensionMismatch("Psi generator has wrong length");
  LocalModel1D m;
  m.rank = rank;
  m.weight = std::move(weight);
  m.polarizations = std::move(q);
  m.n = std::move(n);
  m.psi = std::move(psi);
  return m;
}

namespace {

template <class Eval>
DecreasingFiltration cumulative(const LocalModel1D& m, Eval eval) {
  std::map<int, Subspace> steps;
  std::vector<Vector> acc;
  for (auto it = m.psi.rbegin(); it != m.psi.rend(); ++it) {
    for (const auto& v : it->second) acc.push_back(eval(v));
    steps.emplace(it->first, Subspace::span(m.rank, acc));
  }
  return DecreasingFiltration::create(m.rank, std::move(steps));
}

}  // namespace

DecreasingFiltration LocalModel1D::psi_at(const Gaussian& q) const {
  return cumulative(*this, [&](const PolyVector& v) {
    Vector out;
    for (const auto& p : v) out.push_back(evaluate(p, q));
    return out;
  });
}

unsigned LocalModel1D::degree() const {
  size_t d = 0;
  for (const auto& [p, vs] : psi)
    for (const auto& v : vs)
      for (const auto& poly : v) d = std::max(d, poly.empty() ? size_t{0} : poly.size() - 1);
  return static_cast<unsigned>(d);
}

DecreasingFiltration evaluate_period_map(const LocalModel1D& m, const Gaussian& q,
                                         const Gaussian& branch, long winding) {
  if (q.is_zero()) throw InputError("period map is undefined at q = 0");
  if (sgn(branch.im()) <= 0) throw InputError("branch value must lie in the upper half plane");
  Gaussian z = branch + Gaussian(Rational(winding));
  return m.psi_at(q).transformed((z * m.n.matrix).exp_nilpotent());
}

DecreasingFiltration evaluate_period_map_float(const LocalModel1D& m, std::complex<double> z) {
  using C = std::complex<double>;
  size_t n = m.rank;
  C q = std::exp(C(0, 2 * std::numbers::pi) * z);
  // exp(zN) by the finite series
  std::vector<C> nz(n * n), term(n * n), e(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) nz[i * n + j] = z * m.n.matrix(i, j).to_complex();
  for (size_t i = 0; i < n; ++i) term[i * n + i] = e[i * n + i] = 1;
  for (unsigned k = 1; k < std::max(1u, m.n.nilpotency_index); ++k) {
    std::vector<C> next(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < n; ++l)
        for (size_t j = 0; j < n; ++j) next[i * n + j] += term[i * n + l] * nz[l * n + j];
    for (auto& x : next) x /= static_cast<double>(k);
    term = std::move(next);
    for (size_t i = 0; i < n * n; ++i) e[i] += term[i];
  }
  return cumulative(m, [&](const PolyVector& v) {
    std::vector<C> raw;
    for (const auto& p : v) raw.push_back(evaluate(p, q));
    Vector out;
    for (size_t i = 0; i < n; ++i) {
      C acc = 0;
      for (size_t j = 0; j < n; ++j) acc += e[i * n + j] * raw[j];
      if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw NumericalOverflow("numerical overflow evaluating the period map at z = " +
                                std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
      out.push_back(Gaussian::from_complex(acc));
    }
    return out;
  });
}

AdmissibilityVerdict check_preadmissible(const LocalModel1D& m) {
  AdmissibilityVerdict v;
  auto rel = relative_weight_filtration(m.n, m.weight);
  v.cond1 = rel.exists;
  v.cond1_detail = rel.reason;

  // Generic ranks: every minor has degree <= rank * deg, so the maximum over
  // rank * deg + 1 distinct points is the rank over Q(i)(q).
  size_t samples = m.rank * m.degree() + 1;
  std::vector<DecreasingFiltration> generic;
  for (size_t s = 1; s <= samples; ++s) generic.push_back(m.psi_at(Gaussian(Rational(static_cast<long>(s)))));
  DecreasingFiltration zero = m.psi_at(Gaussian());
  v.cond2 = true;
  if (m.psi.empty()) return v;
  for (int p = m.psi.begin()->first; p <= m.psi.rbegin()->first; ++p)
    for (int k : m.weight.graded_indices()) {
      Subspace wk = m.weight.at(k), wk1 = m.weight.at(k - 1);
      auto graded_rank = [&](size_t r2, size_t r3) {
        return static_cast<long>(wk.dim()) - static_cast<long>(wk1.dim()) - static_cast<long>(r2) +
               static_cast<long>(r3);
      };
      size_t r2 = 0, r3 = 0;
      for (const auto& f : generic) {
        r2 = std::max(r2, sum(f.at(p), wk).dim());
        r3 = std::max(r3, sum(f.at(p), wk1).dim());
      }
      long at_zero = graded_rank(sum(zero.at(p), wk).dim(), sum(zero.at(p), wk1).dim());
      if (graded_rank(r2, r3) != at_zero) {
        v.cond2 = false;
        v.cond2_failures.emplace_back(p, k);
      }
    }
  return v;
}

bool check_orbit_transversality(const DecreasingFiltration& f0, const NilpotentOperator& n) {
  if (f0.ambient_dim() != n.dim()) throw DimensionMismatch("F0 and N act on different spaces");
  for (const auto& [p, s] : f0.jumps())
    if (!f0.at(p - 1).contains(s.image(n.matrix))) return false;
  return true;
}

VerticalStrip VerticalStrip::create(Rational a, Rational b, Rational c) {
  if (!(a < b)) throw InputError("strip needs a < b");
  if (sgn(c) <= 0) throw InputError("strip floor must be positive");
  return {std::move(a), std::move(b), std::move(c)};
}

ProbeReport strip_splitting_probe(const LocalModel1D& m, const VerticalStrip& s, const ProbeOptions& o) {
  if (o.nx == 0 || o.ny == 0) throw InputError("probe grid must be nonempty");
  double a = s.a.get_d(), b = s.b.get_d(), c = s.c.get_d();
  double top = o.top > 0 ? o.top : 10 * c;
  if (top < c) throw InputError("probe top height lies below the strip floor");
  ProbeReport report;
  for (size_t j = 0; j < o.nx; ++j) report.xs.push_back(a + (b - a) * (static_cast<double>(j) + 0.5) / static_cast<double>(o.nx));
  report.rows.resize(o.ny);
  for (size_t k = 0; k < o.ny; ++k)
    report.rows[k].y = o.ny == 1 ? c : c * std::pow(top / c, static_cast<double>(k) / static_cast<double>(o.ny - 1));

  auto run_row = [&](size_t k) {
    ProbeRow& row = report.rows[k];
    for (double x : report.xs) {
      std::vector<double> coords;
      try {
        auto f = evaluate_period_map_float(m, {x, row.y});
        auto v = MixedHodgeStructure::create(m.weight, f);
        for (const auto& r : chart_coordinates(retract(v, o.retraction).grading, m.weight)) coords.push_back(r.get_d());
      } catch (const NumericalOverflow&) {
        row.overflow = true;
      }
      for (double t : coords) {
        if (!std::isfinite(t)) row.overflow = true;
        row.sup = std::max(row.sup, std::abs(t));
      }
      row.coordinates.push_back(std::move(coords));
    }
  };

  unsigned workers = std::max(1u, std::min<unsigned>(o.workers, static_cast<unsigned>(o.ny)));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (size_t k = w; k < o.ny; k += workers) run_row(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  const auto& rows = report.rows;
  bool overflow = std::any_of(rows.begin(), rows.end(), [](const ProbeRow& r) { return r.overflow; });
  size_t ny = rows.size();
  bool rising = ny >= 3 && rows[ny - 3].sup < rows[ny - 2].sup && rows[ny - 2].sup < rows[ny - 1].sup;
  report.divergent = overflow || (rising && rows[ny - 1].sup > 10 * rows[0].sup);
  return report;
}

}  // namespace hodge
