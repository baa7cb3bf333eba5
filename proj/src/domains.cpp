#include "hodge/domains.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hodge {

PeriodDomainSpec PeriodDomainSpec::create(size_t rank, IncreasingFiltration weight, HodgeNumbers h,
                                          GradedPolarization q) {
  if (weight.ambient_dim() != rank) throw DimensionMismatch("weight filtration does not match the rank");
  if (!weight.is_real()) throw InputError("weight filtration must have rational bases");
  std::map<int, size_t> totals;
  for (const auto& [pq, n] : h) totals[pq.first + pq.second] += n;
  for (int k : weight.graded_indices()) {
    size_t d = GradedPiece(weight, k).dim();
    if (totals[k] != d)
      throw InputError("Hodge numbers of weight " + std::to_string(k) + " do not add up to dim Gr_" + std::to_string(k));
    totals.erase(k);
    auto it = q.forms.find(k);
    if (it == q.forms.end()) throw InputError("missing polarization on Gr_" + std::to_string(k));
    if (it->second.rows() != d || it->second.cols() != d)
      throw DimensionMismatch("polarization on Gr_" + std::to_string(k) + " has wrong shape");
  }
  for (const auto& [k, n] : totals)
    if (n != 0) throw InputError("Hodge numbers in weight " + std::to_string(k) + " where Gr_k is zero");
  return {rank, std::move(weight), std::move(h), std::move(q)};
}

Membership membership(const PeriodDomainSpec& spec, const DecreasingFiltration& f) {
  if (f.ambient_dim() != spec.rank) throw DimensionMismatch("filtration does not match the rank");
  Membership r;
  const auto& w = spec.weight;
  auto h = [&](int p, int q) {
    auto it = spec.hodge_numbers.find({p, q});
    return it == spec.hodge_numbers.end() ? size_t{0} : it->second;
  };
  int plo = f.lowest() - 1, phi = f.highest() + 1;
  for (const auto& [pq, n] : spec.hodge_numbers) {
    plo = std::min(plo, pq.first - 1);
    phi = std::max(phi, pq.first + 1);
  }
  for (int k : w.graded_indices()) {
    GradedPiece gr(w, k);
    auto fk = gr.induced(f);
    for (int p = plo; p <= phi; ++p) {
      size_t expected = 0;
      for (int s = p; s <= phi; ++s) expected += h(s, k - s);
      if (fk.at(p).dim() != expected) {
        r.detail = "dim F^" + std::to_string(p) + " on Gr_" + std::to_string(k) + " is " +
                   std::to_string(fk.at(p).dim()) + ", expected " + std::to_string(expected);
        return r;
      }
    }
    const Matrix& q = spec.polarizations.forms.at(k);
    for (int p = plo; p <= phi; ++p)
      for (const auto& u : fk.at(p).vectors())
        for (const auto& v : fk.at(k + 1 - p).vectors())
          if (!dot(u, q * v).is_zero()) {
            r.detail = "F^" + std::to_string(p) + " and F^" + std::to_string(k + 1 - p) +
                       " are not isotropic for q_" + std::to_string(k);
            return r;
          }
  }
  r.in_compact_dual = true;

  auto report = validate_mhs(spec.rank, w, f);
  if (!report.valid) {
    r.detail = "not a mixed Hodge structure";
    return r;
  }
  auto v = MixedHodgeStructure::create(w, f);
  auto pol = check_graded_polarization(v, spec.polarizations);
  if (!pol.polarized) {
    r.detail = "Gr_" + std::to_string(pol.issues.front().weight) + ": " + pol.issues.front().problem;
    return r;
  }
  for (int k : w.graded_indices()) {
    GradedPiece gr(w, k);
    auto fk = gr.induced(f);
    auto fbar = fk.conjugate();
    for (int p = plo; p <= phi; ++p)
      if (intersect(fk.at(p), fbar.at(k - p)).dim() != h(p, k - p)) {
        r.detail = "h^{" + std::to_string(p) + "," + std::to_string(k - p) + "} does not match";
        return r;
      }
  }
  r.in_M = true;
  if (!is_split_over_R(v)) {
    r.detail = "not split over R";
    return r;
  }
  r.in_M_R = true;
  return r;
}

RealSplitPoint real_split_coordinates(const PeriodDomainSpec& spec, const DecreasingFiltration& f) {
  auto m = membership(spec, f);
  if (!m.in_M_R) throw InputError("point is not in M_R: " + m.detail);
  return split_point(MixedHodgeStructure::create(spec.weight, f));
}

// ---- helpers ---------------------------------------------------------------

namespace {

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

struct Interval {
  Rational lo, hi;
};

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator+(const Interval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }
Interval operator-(const Rational& c, const Interval& a) { return {c - a.hi, c - a.lo}; }
Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}
Interval operator*(const Rational& c, const Interval& a) {
  Rational x = c * a.lo, y = c * a.hi;
  return x <= y ? Interval{x, y} : Interval{y, x};
}
Interval square(const Interval& a) {
  Rational x = a.lo * a.lo, y = a.hi * a.hi;
  if (a.lo <= 0 && a.hi >= 0) return {0, std::max(x, y)};
  return x <= y ? Interval{x, y} : Interval{y, x};
}
// b strictly positive
Interval divide(const Interval& a, const Interval& b) {
  return a * Interval{Rational(1) / b.hi, Rational(1) / b.lo};
}

// Rational s <= sqrt(v), close to it.
Rational sqrt_below(const Rational& v) {
  double approx = std::sqrt(v.get_d());
  Rational s(static_cast<long>(std::floor(approx * 1048576.0)), 1048576L);
  s.canonicalize();
  while (s > 0 && s * s > v) s -= Rational(1, 1048576);
  return s < 0 ? Rational(0) : s;
}

struct Sl2Region {
  Rational h, r2;  // |x| < h, |tau|^2 > r2

  bool contains(const Gaussian& t) const {
    return abs_of(t.re()) < h && t.norm() > r2 && sgn(t.im()) > 0;
  }
};

// 1: γF ∩ F nonempty (witness found), 0: empty, -1: undecided.
int sl2_overlap(const Sl2Region& f, const std::array<Integer, 4>& g, const Rational& ylo, const Rational& yhi) {
  Rational a(g[0]), b(g[1]), c(g[2]), d(g[3]);
  struct Box {
    Interval x, y;
    int depth;
  };
  std::vector<Box> stack{{{-f.h, f.h}, {ylo, yhi}, 0}};
  bool undecided = false;
  size_t visited = 0;
  while (!stack.empty()) {
    Box bx = stack.back();
    stack.pop_back();
    if (++visited > 400000) return -1;
    const Interval &x = bx.x, &y = bx.y;
    if (x.hi <= -f.h || x.lo >= f.h) continue;
    Interval m = square(x) + square(y);
    if (m.hi <= f.r2) continue;
    Interval u = c * x + d;
    Interval den = square(u) + (c * c) * square(y);
    if (den.lo <= 0) {
      undecided = true;
      continue;
    }
    Interval re = (a / c) - divide(u, c * den);
    Interval num = square(a * x + b) + (a * a) * square(y);
    Interval abs2 = divide(num, den);
    if (re.hi <= -f.h || re.lo >= f.h || abs2.hi <= f.r2) continue;
    Gaussian center((x.lo + x.hi) / 2, (y.lo + y.hi) / 2);
    if (f.contains(center) && f.contains(act(g, center))) return 1;
    if (bx.depth >= 22) {
      undecided = true;
      continue;
    }
    Rational xm = (x.lo + x.hi) / 2, ym = (y.lo + y.hi) / 2;
    for (int i = 0; i < 4; ++i) {
      Interval nx = i & 1 ? Interval{xm, x.hi} : Interval{x.lo, xm};
      Interval ny = i & 2 ? Interval{ym, y.hi} : Interval{y.lo, ym};
      stack.push_back({nx, ny, bx.depth + 1});
    }
  }
  return undecided ? -1 : 0;
}

// Bounds of the lattice coordinates t (with v = sum t_i b_i) over the box lo <= v <= hi.
std::vector<std::pair<Integer, Integer>> coordinate_ranges(const Matrix& inv_t, const std::vector<Rational>& lo,
                                                           const std::vector<Rational>& hi) {
  size_t m = lo.size();
  std::vector<std::pair<Integer, Integer>> out;
  for (size_t i = 0; i < m; ++i) {
    Rational tmin = 0, tmax = 0;
    for (size_t j = 0; j < m; ++j) {
      Rational coef = inv_t(i, j).re();
      Rational p = coef * lo[j], q = coef * hi[j];
      tmin += std::min(p, q);
      tmax += std::max(p, q);
    }
    out.emplace_back(ceil_of(tmin), floor_of(tmax));
  }
  return out;
}

template <class Fn>
void for_each_integer_point(const std::vector<std::pair<Integer, Integer>>& ranges, Fn fn) {
  size_t m = ranges.size();
  for (const auto& [lo, hi] : ranges)
    if (lo > hi) return;
  IntVector cur;
  for (const auto& r : ranges) cur.push_back(r.first);
  while (true) {
    fn(cur);
    size_t i = 0;
    while (i < m) {
      if (cur[i] < ranges[i].second) {
        ++cur[i];
        break;
      }
      cur[i] = ranges[i].first;
      ++i;
    }
    if (i == m) return;
  }
}

Matrix lattice_matrix(const std::vector<std::vector<Rational>>& lattice, size_t m) {
  if (lattice.size() != m) throw DimensionMismatch("lattice needs one basis vector per chart coordinate");
  Matrix l(m, m);  // columns are basis vectors
  for (size_t i = 0; i < m; ++i) {
    if (lattice[i].size() != m) throw DimensionMismatch("lattice basis vector has wrong length");
    for (size_t j = 0; j < m; ++j) l(j, i) = Gaussian(lattice[i][j]);
  }
  if (m > 0 && l.determinant().is_zero()) throw InputError("lattice is degenerate");
  return l;
}

std::vector<Rational> translate(const std::vector<Rational>& v, const Matrix& l, const IntVector& gamma) {
  std::vector<Rational> out = v;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < gamma.size(); ++j) out[i] += l(i, j).re() * Rational(gamma[j]);
  return out;
}

Rational strip_coordinate(const StripDescriptor& s, const Gaussian& z) { return z.re() - s.slope() * z.im(); }

void check_strip(const StripDescriptor& s) {
  if (s.sy == 0) throw InputError("strip direction must not be horizontal");
  if (sgn(s.width) <= 0) throw InputError("strip width must be positive");
}

FundamentalSetReport verify_strip(const StripDescriptor& s, const GroupAction& a) {
  if (a.kind != GroupAction::Kind::translation) throw UnsupportedError("strips need a translation action");
  check_strip(s);
  Rational p = abs_of(a.period);
  if (p == 0) throw InputError("translation period must be nonzero");
  FundamentalSetReport r;
  r.covering = s.width > p;
  r.covering_status = "exact";
  if (!r.covering) r.detail = "strip width does not exceed the period";
  r.finite_overlaps = true;
  r.overlap_status = "exact";
  Integer n = floor_of(s.width / p);
  for (Integer k = -n; k <= n; ++k)
    if (abs_of(Rational(k) * p) < s.width) r.overlaps.push_back({std::nullopt, {k}});
  return r;
}

FundamentalSetReport verify_sl2(const Sl2Descriptor& s, const GroupAction& a) {
  if (a.kind != GroupAction::Kind::sl2) throw UnsupportedError("the SL2 domain needs the SL2(Z) action");
  FundamentalSetReport r;
  r.covering_status = "exact";
  r.covering = sgn(s.epsilon) > 0;
  if (!r.covering) r.detail = "domain does not contain the closed standard domain";
  Sl2Region f{Rational(1, 2) + s.epsilon, (1 - s.epsilon) * (1 - s.epsilon)};
  if (s.epsilon >= Rational(1, 4) || s.epsilon <= -1) {
    r.finite_overlaps = false;
    r.overlap_status = "exact";
    r.detail = "domain reaches the real axis";
    return r;
  }
  r.finite_overlaps = true;
  r.overlap_status = "exact";
  // translations: |b| < 2h
  Integer bmax = floor_of(2 * f.h);
  for (Integer b = -bmax; b <= bmax; ++b)
    if (abs_of(Rational(b)) < 2 * f.h) r.overlaps.push_back({std::array<Integer, 4>{1, b, 0, 1}, {}});
  Rational ymin = sqrt_below(f.r2 - f.h * f.h);
  if (ymin <= 0) {
    r.finite_overlaps = false;
    r.detail = "domain reaches the real axis";
    return r;
  }
  Integer cmax = floor_of(1 / ymin);
  for (Integer c = 1; c <= cmax; ++c) {
    Rational cc(c);
    if (cc * cc * ymin * ymin >= 1) continue;
    Integer bound = floor_of(cc * f.h + 1 / (cc * ymin));
    Rational yhi = 1 / (cc * cc * ymin);
    for (Integer d = -bound; d <= bound; ++d)
      for (Integer av = -bound; av <= bound; ++av) {
        Integer num = av * d - 1;
        if (num % c != 0) continue;
        std::array<Integer, 4> g{av, Integer(num / c), c, d};
        int verdict = sl2_overlap(f, g, ymin, yhi);
        if (verdict == 1) r.overlaps.push_back({g, {}});
        if (verdict == -1) {
          r.overlap_status = "undecided";
          r.detail = "overlap test undecided for some candidates";
        }
      }
  }
  std::sort(r.overlaps.begin(), r.overlaps.end());
  return r;
}

}  // namespace

std::array<Integer, 4> normalize_psl2(std::array<Integer, 4> m) {
  if (m[2] < 0 || (m[2] == 0 && m[3] < 0))
    for (auto& x : m) x = -x;
  return m;
}

Gaussian act(const std::array<Integer, 4>& m, const Gaussian& tau) {
  Gaussian num = Gaussian(Rational(m[0])) * tau + Gaussian(Rational(m[1]));
  Gaussian den = Gaussian(Rational(m[2])) * tau + Gaussian(Rational(m[3]));
  return num * den.inverse();
}

FundamentalSetReport verify_fundamental_set(const FundamentalSetDescriptor& f, const GroupAction& a,
                                            size_t sample_budget) {
  using K = FundamentalSetDescriptor::Kind;
  switch (f.kind) {
    case K::strip: return verify_strip(f.strip, a);
    case K::sl2: return verify_sl2(f.sl2, a);
    case K::product: break;
  }
  if (a.kind != GroupAction::Kind::product) throw UnsupportedError("product descriptors need a product action");
  if (static_cast<bool>(f.graded) != static_cast<bool>(a.graded))
    throw UnsupportedError("graded factor of the descriptor and the action disagree");
  FundamentalSetReport graded;
  graded.covering = graded.finite_overlaps = true;
  graded.covering_status = graded.overlap_status = "exact";
  graded.overlaps.push_back({});
  if (f.graded) {
    if (f.graded->kind == K::product) throw UnsupportedError("nested product descriptors");
    graded = verify_fundamental_set(*f.graded, *a.graded, sample_budget);
  }
  size_t m = f.box.lower.size();
  if (f.box.width.size() != m) throw DimensionMismatch("box lower corner and widths differ in length");
  for (const auto& w : f.box.width)
    if (sgn(w) <= 0) throw InputError("box widths must be positive");
  Matrix l = lattice_matrix(a.lattice, m);
  Matrix inv = m > 0 ? l.inverse() : Matrix();

  FundamentalSetReport r;
  bool diagonal = true;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && !l(i, j).is_zero()) diagonal = false;
  bool box_covers = true;
  std::string box_status = "exact";
  if (diagonal) {
    for (size_t i = 0; i < m; ++i)
      if (!(f.box.width[i] > abs_of(l(i, i).re()))) box_covers = false;
  } else {
    box_status = "sampled";
    std::mt19937_64 rng(20240101);
    Rational scale = 0;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) scale = std::max(scale, abs_of(l(i, j).re()));
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    std::vector<Rational> upper(m);
    for (size_t i = 0; i < m; ++i) upper[i] = f.box.lower[i] + f.box.width[i];
    for (size_t s = 0; s < sample_budget && box_covers; ++s) {
      std::vector<Rational> x(m);
      for (auto& t : x) {
        t = Rational(dist(rng), 100000) * scale;
        t.canonicalize();
      }
      std::vector<Rational> lo(m), hi(m);
      for (size_t i = 0; i < m; ++i) {
        lo[i] = f.box.lower[i] - x[i];
        hi[i] = upper[i] - x[i];
      }
      bool hit = false;
      for_each_integer_point(coordinate_ranges(inv, lo, hi), [&](const IntVector& g) {
        if (hit) return;
        auto y = translate(x, l, g);
        bool inside = true;
        for (size_t i = 0; i < m; ++i)
          if (!(y[i] > f.box.lower[i] && y[i] < upper[i])) inside = false;
        hit = inside;
      });
      if (!hit) box_covers = false;
    }
  }
  // lattice overlaps: |(L g)_i| < w_i
  std::vector<Rational> lo(m), hi(m);
  for (size_t i = 0; i < m; ++i) {
    lo[i] = -f.box.width[i];
    hi[i] = f.box.width[i];
  }
  std::vector<IntVector> lattice_overlaps;
  std::vector<Rational> zero(m);
  for_each_integer_point(coordinate_ranges(inv, lo, hi), [&](const IntVector& g) {
    auto v = translate(zero, l, g);
    for (size_t i = 0; i < m; ++i)
      if (!(abs_of(v[i]) < f.box.width[i])) return;
    lattice_overlaps.push_back(g);
  });
  if (m == 0) lattice_overlaps.push_back({});

  r.covering = graded.covering && box_covers;
  r.covering_status = graded.covering_status == "exact" && box_status == "exact" ? "exact" : "sampled";
  r.finite_overlaps = graded.finite_overlaps;
  r.overlap_status = graded.overlap_status;
  r.detail = graded.detail;
  if (!box_covers) r.detail = "box translates do not cover the chart";
  for (const auto& ge : graded.overlaps)
    for (const auto& lv : lattice_overlaps) {
      GroupElement e = ge;
      e.translation.insert(e.translation.end(), lv.begin(), lv.end());
      r.overlaps.push_back(std::move(e));
    }
  std::sort(r.overlaps.begin(), r.overlaps.end());
  return r;
}

StripDescriptor coset_union(const StripDescriptor& s, const Rational& period, const std::vector<long>& cosets) {
  check_strip(s);
  if (cosets.empty()) throw InputError("no coset representatives");
  std::vector<long> cs = cosets;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  Rational p = abs_of(period);
  for (size_t i = 1; i < cs.size(); ++i)
    if (!(Rational(cs[i] - cs[i - 1]) * p < s.width)) throw InputError("translates do not form a single strip");
  StripDescriptor out = s;
  out.offset = s.offset + Rational(cs.front()) * p;
  out.width = Rational(cs.back() - cs.front()) * p + s.width;
  return out;
}

UnipotentReduction reduce_unipotent(const std::vector<Rational>& coord,
                                    const std::vector<std::vector<Rational>>& lattice) {
  size_t m = coord.size();
  Matrix l = lattice_matrix(lattice, m);
  Vector v;
  for (const auto& c : coord) v.push_back(Gaussian(c));
  Vector t = l.inverse() * v;
  UnipotentReduction r;
  std::vector<Rational> frac;
  for (const auto& x : t) {
    Integer f = floor_of(x.re());
    r.gamma.push_back(f);
    frac.push_back(x.re() - Rational(f));
  }
  r.reduced.assign(m, Rational(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) r.reduced[i] += l(i, j).re() * frac[j];
  return r;
}

Sl2Reduction reduce_sl2(const Gaussian& tau) {
  if (sgn(tau.im()) <= 0) throw InputError("point must lie in the upper half plane");
  std::array<Integer, 4> g{1, 0, 0, 1};
  Gaussian t = tau;
  auto mul = [](const std::array<Integer, 4>& x, const std::array<Integer, 4>& y) {
    return std::array<Integer, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                  x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  while (true) {
    Integer n = floor_of(t.re() + Rational(1, 2));
    if (n != 0) {
      t = t - Gaussian(Rational(n));
      g = mul({1, -n, 0, 1}, g);
    }
    Rational r2 = t.norm();
    if (r2 < 1 || (r2 == 1 && sgn(t.re()) > 0)) {
      t = Gaussian(-1) * t.inverse();
      g = mul({0, -1, 1, 0}, g);
      if (r2 == 1) break;
      continue;
    }
    break;
  }
  return {normalize_psl2(g), t};
}

Sl2ReductionFloat reduce_sl2(std::complex<double> tau) {
  if (!(tau.imag() > 0)) throw InputError("point must lie in the upper half plane");
  std::array<long long, 4> g{1, 0, 0, 1};
  for (int iter = 0; iter < 100000; ++iter) {
    long long n = static_cast<long long>(std::floor(tau.real() + 0.5));
    tau -= static_cast<double>(n);
    g = {g[0] - n * g[2], g[1] - n * g[3], g[2], g[3]};
    if (std::norm(tau) < 1) {
      tau = -1.0 / tau;
      g = {-g[2], -g[3], g[0], g[1]};
      continue;
    }
    if (g[2] < 0 || (g[2] == 0 && g[3] < 0))
      for (auto& x : g) x = -x;
    return {g, tau};
  }
  throw InvariantError("float SL2 reduction did not terminate");
}

// ---- quotient relation ------------------------------------------------------

namespace {

bool strip_test(const StripDescriptor& s, const Gaussian& z, bool closed) {
  Rational t = strip_coordinate(s, z);
  bool ok = closed ? (t >= s.offset && t <= s.offset + s.width) : (t > s.offset && t < s.offset + s.width);
  if (s.floor) ok = ok && (closed ? z.im() >= *s.floor : z.im() > *s.floor);
  return ok;
}

bool sl2_test(const Sl2Descriptor& s, const Gaussian& z, bool closed) {
  Rational h = Rational(1, 2) + s.epsilon, r = 1 - s.epsilon;
  if (sgn(z.im()) <= 0) return false;
  Rational x = abs_of(z.re());
  return closed ? (x <= h && z.norm() >= r * r) : (x < h && z.norm() > r * r);
}

bool region_test(const FundamentalSetDescriptor& f, const DomainPoint& p, bool closed) {
  using K = FundamentalSetDescriptor::Kind;
  switch (f.kind) {
    case K::strip: return strip_test(f.strip, p.z, closed);
    case K::sl2: return sl2_test(f.sl2, p.z, closed);
    case K::product: break;
  }
  if (f.graded && !region_test(*f.graded, {p.z, {}}, closed)) return false;
  if (p.chart.size() != f.box.lower.size()) throw DimensionMismatch("chart point has wrong length");
  for (size_t i = 0; i < p.chart.size(); ++i) {
    Rational lo = f.box.lower[i], hi = lo + f.box.width[i];
    bool ok = closed ? (p.chart[i] >= lo && p.chart[i] <= hi) : (p.chart[i] > lo && p.chart[i] < hi);
    if (!ok) return false;
  }
  return true;
}

DomainPoint apply(const GroupElement& g, const DomainPoint& p, const FundamentalSetDescriptor& f, const GroupAction& a) {
  using K = GroupAction::Kind;
  DomainPoint out = p;
  const GroupAction* graded = a.kind == K::product ? a.graded.get() : &a;
  size_t used = 0;
  if (graded) {
    if (graded->kind == K::sl2) out.z = act(*g.modular, p.z);
    else {
      out.z = p.z + Gaussian(Rational(g.translation.at(0)) * graded->period);
      used = 1;
    }
  }
  if (a.kind == K::product) {
    size_t m = f.box.lower.size();
    Matrix l = lattice_matrix(a.lattice, m);
    IntVector lv(g.translation.begin() + static_cast<std::ptrdiff_t>(used), g.translation.end());
    out.chart = translate(p.chart, l, lv);
  }
  return out;
}

}  // namespace

bool in_closure(const FundamentalSetDescriptor& f, const DomainPoint& p) { return region_test(f, p, true); }
bool in_region(const FundamentalSetDescriptor& f, const DomainPoint& p) { return region_test(f, p, false); }

bool identify_in_quotient(const DomainPoint& p1, const DomainPoint& p2, const FundamentalSetDescriptor& f,
                          const GroupAction& a, const std::vector<GroupElement>& overlaps) {
  if (!in_closure(f, p1) || !in_closure(f, p2)) throw InputError("points must lie in the closure of the fundamental set");
  for (const auto& g : overlaps) {
    DomainPoint q = apply(g, p1, f, a);
    if (q.z == p2.z && q.chart == p2.chart) return true;
  }
  return false;
}

namespace {

// Translates (o2 + n p, o2 + n p + w2) needed to cover (alpha, beta); needs w2 > p.
long cover_count(const Rational& alpha, const Rational& beta, const Rational& o2, const Rational& w2, const Rational& p) {
  Integer n = floor_of((alpha - o2) / p);
  Rational reach = o2 + Rational(n) * p + w2;
  long count = 1;
  while (reach < beta) {
    n = ceil_of((reach - o2) / p) - 1;
    reach = o2 + Rational(n) * p + w2;
    ++count;
  }
  return count;
}

}  // namespace

DefinableComparison same_definable_structure(const FundamentalSetDescriptor& f1,
                                             const FundamentalSetDescriptor& f2, const GroupAction& a) {
  using K = FundamentalSetDescriptor::Kind;
  if (f1.kind != K::strip || f2.kind != K::strip || a.kind != GroupAction::Kind::translation)
    throw UnsupportedError("definable-structure comparison is implemented for strips under translations");
  if (!verify_fundamental_set(f1, a).valid() || !verify_fundamental_set(f2, a).valid())
    throw InputError("both descriptors must be valid fundamental sets");
  const auto &s1 = f1.strip, &s2 = f2.strip;
  if (s1.floor != s2.floor) throw InputError("strips live in different spaces (floors differ)");
  DefinableComparison r;
  if (s1.slope() != s2.slope()) return r;
  Rational p = abs_of(a.period);
  r.translates_1_in_2 = cover_count(s1.offset, s1.offset + s1.width, s2.offset, s2.width, p);
  r.translates_2_in_1 = cover_count(s2.offset, s2.offset + s2.width, s1.offset, s1.width, p);
  r.same = true;
  return r;
}

}  // namespace hodge
