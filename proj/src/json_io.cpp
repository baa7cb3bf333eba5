#include "hodge/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace hodge::io {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
}

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

int read_index(const std::string& key, const std::string& path) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw SchemaError(child(path, key), "key is not an integer");
  return v;
}

size_t read_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    throw SchemaError(path, "expected a nonnegative integer");
  return j.get<size_t>();
}

Integer read_integer(const json& j, const std::string& path) {
  Rational r = read_rational(j, path);
  if (r.get_den() != 1) throw SchemaError(path, "expected an integer");
  return r.get_num();
}

std::vector<Vector> read_rows(const json& j, size_t rank, const std::string& path) {
  Matrix m = read_matrix(j, path, std::nullopt, rank);
  return m.row_vectors();
}

template <class Filtration>
Filtration read_filtration(const json& j, size_t rank, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object of index -> basis rows");
  std::map<int, Subspace> steps;
  for (const auto& [key, rows] : j.items())
    steps.emplace(read_index(key, path), Subspace::span(rank, read_rows(rows, rank, child(path, key))));
  try {
    return Filtration::create(rank, std::move(steps));
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

size_t read_rank(const json& j) {
  size_t n = read_size(field(j, "rank", ""), "/rank");
  if (n == 0) throw SchemaError("/rank", "rank must be positive");
  return n;
}

Polynomial read_polynomial(const json& j, const std::string& path) {
  if (j.is_string() || j.is_number()) return {read_scalar(j, path)};
  array(j, path);
  Polynomial p;
  for (size_t i = 0; i < j.size(); ++i) p.push_back(read_scalar(j[i], child(path, i)));
  return p;
}

void require_kind(const json& j, const std::string& path, std::string& kind) {
  const json& k = field(j, "kind", path);
  if (!k.is_string()) throw SchemaError(child(path, "kind"), "expected a string");
  kind = k.get<std::string>();
}

}  // namespace

Rational read_rational(const json& j, const std::string& path) {
  Gaussian z = read_scalar(j, path);
  if (!z.is_real()) throw SchemaError(path, "expected a rational scalar");
  return z.re();
}

Gaussian read_scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Gaussian(Rational(Integer(std::to_string(j.get<long long>()))));
  if (!j.is_string()) throw SchemaError(path, "expected a scalar string");
  try {
    return parse_gaussian(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, std::string("bad scalar \"") + j.get<std::string>() + "\": " + e.what());
  }
}

Matrix read_matrix(const json& j, const std::string& path, std::optional<size_t> rows, std::optional<size_t> cols) {
  array(j, path);
  if (rows && j.size() != *rows)
    throw SchemaError(path, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
  std::vector<Vector> out;
  size_t width = cols.value_or(j.empty() ? 0 : j[0].size());
  for (size_t r = 0; r < j.size(); ++r) {
    std::string rp = child(path, r);
    array(j[r], rp);
    if (j[r].size() != width)
      throw SchemaError(rp, "expected " + std::to_string(width) + " entries, got " + std::to_string(j[r].size()));
    Vector v;
    for (size_t c = 0; c < width; ++c) v.push_back(read_scalar(j[r][c], child(rp, c)));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out, width);
}

std::vector<Rational> read_rationals(const json& j, const std::string& path) {
  array(j, path);
  std::vector<Rational> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], child(path, i)));
  return out;
}

IncreasingFiltration read_weight(const json& j, size_t rank, const std::string& path) {
  auto w = read_filtration<IncreasingFiltration>(j, rank, path);
  if (!w.is_real()) throw SchemaError(path, "weight filtration needs rational bases");
  return w;
}

DecreasingFiltration read_hodge(const json& j, size_t rank, const std::string& path) {
  return read_filtration<DecreasingFiltration>(j, rank, path);
}

GradedPolarization read_polarizations(const json& j, const IncreasingFiltration& w, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object of weight -> form");
  GradedPolarization q;
  auto graded = w.graded_indices();
  for (const auto& [key, form] : j.items()) {
    int k = read_index(key, path);
    if (std::find(graded.begin(), graded.end(), k) == graded.end())
      throw SchemaError(child(path, key), "Gr_" + key + " is zero");
    size_t d = GradedPiece(w, k).dim();
    Matrix m = read_matrix(form, child(path, key), d, d);
    if (!m.is_real()) throw SchemaError(child(path, key), "polarization must be rational");
    q.forms.emplace(k, std::move(m));
  }
  for (int k : graded)
    if (!q.forms.count(k)) throw SchemaError(child(path, std::to_string(k)), "missing polarization for nonzero Gr_k");
  return q;
}

HodgeNumbers read_hodge_numbers(const json& j, const std::string& path) {
  array(j, path);
  HodgeNumbers h;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string p = child(path, i);
    if (!j[i].is_array() || j[i].size() != 3) throw SchemaError(p, "expected [p, q, h]");
    for (size_t t = 0; t < 3; ++t)
      if (!j[i][t].is_number_integer()) throw SchemaError(child(p, t), "expected an integer");
    long n = j[i][2].get<long>();
    if (n < 0) throw SchemaError(child(p, 2), "Hodge number must be nonnegative");
    h[{j[i][0].get<int>(), j[i][1].get<int>()}] += static_cast<size_t>(n);
  }
  return h;
}

MhsFile read_mhs_file(const json& j) {
  MhsFile f;
  f.rank = read_rank(j);
  f.weight = read_weight(field(j, "weight", ""), f.rank, "/weight");
  if (auto* h = optional_field(j, "hodge")) f.hodge = read_hodge(*h, f.rank, "/hodge");
  if (auto* q = optional_field(j, "polarizations")) f.polarizations = read_polarizations(*q, f.weight, "/polarizations");
  if (auto* h = optional_field(j, "hodge_numbers")) f.hodge_numbers = read_hodge_numbers(*h, "/hodge_numbers");
  return f;
}

MixedHodgeStructure read_mhs(const json& j) {
  auto f = read_mhs_file(j);
  if (!f.hodge) throw SchemaError("/hodge", "missing field");
  return MixedHodgeStructure::create(f.weight, *f.hodge);
}

PeriodDomainSpec read_domain(const json& j) {
  auto f = read_mhs_file(j);
  if (!f.polarizations) throw SchemaError("/polarizations", "missing field");
  if (!f.hodge_numbers) throw SchemaError("/hodge_numbers", "missing field");
  try {
    return PeriodDomainSpec::create(f.rank, f.weight, *f.hodge_numbers, *f.polarizations);
  } catch (const InputError& e) {
    throw SchemaError("/hodge_numbers", e.what());
  }
}

LocalModel1D read_model1d(const json& j) {
  size_t rank = read_rank(j);
  auto w = read_weight(field(j, "weight", ""), rank, "/weight");
  auto q = read_polarizations(field(j, "polarizations", ""), w, "/polarizations");
  Matrix n = read_matrix(field(j, "N", ""), "/N", rank, rank);
  const json& psi = field(j, "psi", "");
  if (!psi.is_object()) throw SchemaError("/psi", "expected an object of p -> generators");
  std::map<int, std::vector<PolyVector>> gens;
  for (const auto& [key, list] : psi.items()) {
    std::string p = child("/psi", key);
    array(list, p);
    auto& out = gens[read_index(key, "/psi")];
    for (size_t g = 0; g < list.size(); ++g) {
      std::string gp = child(p, g);
      array(list[g], gp);
      if (list[g].size() != rank) throw SchemaError(gp, "expected " + std::to_string(rank) + " entries");
      PolyVector v;
      for (size_t e = 0; e < rank; ++e) v.push_back(read_polynomial(list[g][e], child(gp, e)));
      out.push_back(std::move(v));
    }
  }
  NilpotentOperator nop;
  try {
    nop = NilpotentOperator::create(n);
  } catch (const InputError& e) {
    throw SchemaError("/N", e.what());
  }
  return LocalModel1D::create(rank, w, q, nop, gens);
}

RelwtFile read_relwt(const json& j) {
  size_t rank = read_rank(j);
  auto w = read_weight(field(j, "weight", ""), rank, "/weight");
  Matrix n = read_matrix(field(j, "N", ""), "/N", rank, rank);
  try {
    return {NilpotentOperator::create(n), w};
  } catch (const InputError& e) {
    throw SchemaError("/N", e.what());
  }
}

FundamentalSetDescriptor read_descriptor(const json& j, const std::string& path) {
  std::string kind;
  require_kind(j, path, kind);
  FundamentalSetDescriptor f;
  if (kind == "strip") {
    f.kind = FundamentalSetDescriptor::Kind::strip;
    if (auto* s = optional_field(j, "slope")) {
      auto v = read_rationals(*s, child(path, "slope"));
      if (v.size() != 2) throw SchemaError(child(path, "slope"), "expected [sx, sy]");
      if (v[1] == 0) throw SchemaError(child(path, "slope"), "sy must be nonzero");
      f.strip.sx = v[0];
      f.strip.sy = v[1];
    }
    f.strip.offset = read_rational(field(j, "offset", path), child(path, "offset"));
    f.strip.width = read_rational(field(j, "width", path), child(path, "width"));
    if (sgn(f.strip.width) <= 0) throw SchemaError(child(path, "width"), "width must be positive");
    if (auto* fl = optional_field(j, "floor")) f.strip.floor = read_rational(*fl, child(path, "floor"));
  } else if (kind == "sl2") {
    f.kind = FundamentalSetDescriptor::Kind::sl2;
    f.sl2.epsilon = read_rational(field(j, "epsilon", path), child(path, "epsilon"));
  } else if (kind == "product") {
    f.kind = FundamentalSetDescriptor::Kind::product;
    if (auto* g = optional_field(j, "graded"))
      f.graded = std::make_shared<FundamentalSetDescriptor>(read_descriptor(*g, child(path, "graded")));
    f.box.lower = read_rationals(field(j, "lower", path), child(path, "lower"));
    f.box.width = read_rationals(field(j, "width", path), child(path, "width"));
    if (f.box.lower.size() != f.box.width.size())
      throw SchemaError(child(path, "width"), "length differs from lower");
  } else {
    throw SchemaError(child(path, "kind"), "unknown descriptor kind \"" + kind + "\"");
  }
  return f;
}

GroupAction read_action(const json& j, const std::string& path) {
  std::string kind;
  require_kind(j, path, kind);
  GroupAction a;
  if (kind == "translation") {
    a.kind = GroupAction::Kind::translation;
    a.period = read_rational(field(j, "period", path), child(path, "period"));
    if (a.period == 0) throw SchemaError(child(path, "period"), "period must be nonzero");
  } else if (kind == "sl2") {
    a.kind = GroupAction::Kind::sl2;
  } else if (kind == "product") {
    a.kind = GroupAction::Kind::product;
    if (auto* g = optional_field(j, "graded"))
      a.graded = std::make_shared<GroupAction>(read_action(*g, child(path, "graded")));
    const json& l = array(field(j, "lattice", path), child(path, "lattice"));
    for (size_t i = 0; i < l.size(); ++i) a.lattice.push_back(read_rationals(l[i], child(child(path, "lattice"), i)));
  } else {
    throw SchemaError(child(path, "kind"), "unknown action kind \"" + kind + "\"");
  }
  return a;
}

DomainPoint read_point(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  DomainPoint p;
  if (auto* z = optional_field(j, "z")) p.z = read_scalar(*z, child(path, "z"));
  if (auto* c = optional_field(j, "chart")) p.chart = read_rationals(*c, child(path, "chart"));
  return p;
}

std::optional<Schema> parse_schema(const std::string& name) {
  static const std::map<std::string, Schema> names{
      {"mhs", Schema::mhs},           {"domain", Schema::domain},           {"model1d", Schema::model1d},
      {"relwt", Schema::relwt},       {"reduce", Schema::reduce},           {"fundamental", Schema::fundamental},
      {"identify", Schema::identify}, {"compare", Schema::compare}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

Schema detect_schema(const json& j) {
  if (!j.is_object()) throw SchemaError("/", "expected an object");
  if (j.contains("f1")) return Schema::compare;
  if (j.contains("p1")) return Schema::identify;
  if (j.contains("descriptor")) return Schema::fundamental;
  if (j.contains("psi")) return Schema::model1d;
  if (j.contains("N")) return Schema::relwt;
  if (j.contains("kind")) return Schema::reduce;
  if (j.contains("hodge_numbers")) return Schema::domain;
  if (j.contains("weight")) return Schema::mhs;
  throw SchemaError("/", "cannot tell which schema applies");
}

void check_schema(const json& j, Schema s) {
  switch (s) {
    case Schema::mhs: {
      auto f = read_mhs_file(j);
      if (!f.hodge) throw SchemaError("/hodge", "missing field");
      return;
    }
    case Schema::domain: read_domain(j); return;
    case Schema::model1d: read_model1d(j); return;
    case Schema::relwt: read_relwt(j); return;
    case Schema::reduce: {
      std::string kind;
      require_kind(j, "", kind);
      if (kind == "unipotent") {
        auto c = read_rationals(field(j, "coord", ""), "/coord");
        const json& l = array(field(j, "lattice", ""), "/lattice");
        for (size_t i = 0; i < l.size(); ++i) read_rationals(l[i], child("/lattice", i));
      } else if (kind == "sl2") {
        if (auto* t = optional_field(j, "tau")) read_scalar(*t, "/tau");
        else {
          const json& t2 = array(field(j, "tau_float", ""), "/tau_float");
          if (t2.size() != 2 || !t2[0].is_number() || !t2[1].is_number())
            throw SchemaError("/tau_float", "expected [re, im] numbers");
        }
      } else {
        throw SchemaError("/kind", "unknown reduction kind \"" + kind + "\"");
      }
      return;
    }
    case Schema::fundamental:
      read_descriptor(field(j, "descriptor", ""), "/descriptor");
      read_action(field(j, "action", ""), "/action");
      return;
    case Schema::identify:
      read_descriptor(field(j, "descriptor", ""), "/descriptor");
      read_action(field(j, "action", ""), "/action");
      read_point(field(j, "p1", ""), "/p1");
      read_point(field(j, "p2", ""), "/p2");
      return;
    case Schema::compare:
      read_descriptor(field(j, "f1", ""), "/f1");
      read_descriptor(field(j, "f2", ""), "/f2");
      read_action(field(j, "action", ""), "/action");
      return;
  }
}

// ---- writers ------------------------------------------------------------------

json to_json(const Rational& r) { return to_string(r); }
json to_json(const Gaussian& z) { return to_string(z); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& r : m.row_vectors()) out.push_back(to_json(r));
  return out;
}

json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json to_json(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.vectors()) out.push_back(to_json(v));
  return out;
}

json to_json(const IncreasingFiltration& w) {
  json out = json::object();
  for (const auto& [k, s] : w.jumps()) out[std::to_string(k)] = to_json(s);
  return out;
}

json to_json(const DecreasingFiltration& f) {
  json out = json::object();
  for (const auto& [p, s] : f.jumps()) out[std::to_string(p)] = to_json(s);
  return out;
}

json to_json(const GroupElement& g) {
  json out = json::object();
  if (g.modular) {
    const auto& m = *g.modular;
    out["matrix"] = json::array({json::array({m[0].get_str(), m[1].get_str()}), json::array({m[2].get_str(), m[3].get_str()})});
  }
  if (!g.translation.empty()) out["translation"] = to_json(g.translation);
  return out;
}

json to_json(const HodgeNumbers& h) {
  json out = json::array();
  for (const auto& [pq, n] : h)
    if (n > 0) out.push_back(json::array({pq.first, pq.second, n}));
  return out;
}

json float_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const ProbeReport& r) {
  json out = json::object();
  json xs = json::array();
  for (double x : r.xs) xs.push_back(float_json(x));
  out["xs"] = xs;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json coords = json::array();
    for (const auto& c : row.coordinates) {
      json cs = json::array();
      for (double v : c) cs.push_back(float_json(v));
      coords.push_back(cs);
    }
    rows.push_back({{"y", float_json(row.y)}, {"sup", float_json(row.sup)}, {"overflow", row.overflow}, {"coordinates", coords}});
  }
  out["rows"] = rows;
  out["divergent"] = r.divergent;
  return out;
}

}  // namespace hodge::io
