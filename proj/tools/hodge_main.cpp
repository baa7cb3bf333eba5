// hodge-cli: JSON front end for the hodge library.
// Exit status: 0 computed, 1 bad input, 2 internal invariant violated.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodge/json_io.hpp"

using namespace hodge;
using io::json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

json validation_json(const ValidationReport& r) {
  json opp = json::array(), triple = json::array();
  for (const auto& f : r.failures) opp.push_back({{"weight", f.weight}, {"p", f.p}});
  for (const auto& f : r.triple_failures) triple.push_back({{"weight", f.weight}, {"p", f.p}, {"q", f.q}});
  json out = {{"valid", r.valid}, {"opposedness_failures", opp}};
  if (r.thorough) out["triple_failures"] = triple;
  return out;
}

json bigrading_json(const Bigrading& b) {
  json pieces = json::array();
  for (const auto& [pq, s] : b.pieces) pieces.push_back({{"p", pq.first}, {"q", pq.second}, {"basis", io::to_json(s)}});
  return pieces;
}

json point_json(const RealSplitPoint& pt) {
  json graded = json::object();
  for (const auto& [k, f] : pt.graded) graded[std::to_string(k)] = io::to_json(f);
  return {{"graded", graded}, {"grading", io::to_json(pt.grading.matrix)}};
}

json report_json(const FundamentalSetReport& r) {
  json ov = json::array();
  for (const auto& g : r.overlaps) ov.push_back(io::to_json(g));
  return {{"covering", r.covering},          {"covering_status", r.covering_status},
          {"finite_overlaps", r.finite_overlaps}, {"overlap_status", r.overlap_status},
          {"overlaps", ov},                  {"valid", r.valid()},
          {"detail", r.detail}};
}

struct Options {
  std::string file, point, retraction = "delta", d = "1", strip = "0,1,1", grid = "20,20", schema;
  double top = 0;
  unsigned workers = 1;
  bool thorough = false;
};

json run(const std::string& verb, const Options& o) {
  json doc = io::load_file(o.file);
  if (verb == "schema-check") {
    io::Schema s;
    if (o.schema.empty()) s = io::detect_schema(doc);
    else {
      auto parsed = io::parse_schema(o.schema);
      if (!parsed) throw InputError("unknown schema " + o.schema);
      s = *parsed;
    }
    io::check_schema(doc, s);
    static const char* names[] = {"mhs", "domain", "model1d", "relwt", "reduce", "fundamental", "identify", "compare"};
    return {{"ok", true}, {"schema", names[static_cast<int>(s)]}};
  }
  if (verb == "validate") {
    auto f = io::read_mhs_file(doc);
    if (!f.hodge) throw io::SchemaError("/hodge", "missing field");
    return validation_json(validate_mhs(f.rank, f.weight, *f.hodge, o.thorough));
  }
  if (verb == "bigrade") {
    auto v = io::read_mhs(doc);
    auto b = deligne_bigrading(v);
    return {{"pieces", bigrading_json(b)}, {"hodge_numbers", io::to_json(hodge_numbers(v))},
            {"split_over_R", is_split_over_R(v)}};
  }
  if (verb == "delta") {
    auto v = io::read_mhs(doc);
    return {{"delta", io::to_json(delta_splitting(v))}, {"split_over_R", is_split_over_R(v)}};
  }
  if (verb == "retract") {
    auto v = io::read_mhs(doc);
    Retraction r = parse_retraction(o.retraction);
    auto pt = retract(v, r);
    json out = point_json(pt);
    out["retraction"] = to_string(r);
    out["hodge"] = io::to_json(split_filtration(v, r));
    out["chart"] = io::to_json(chart_coordinates(pt.grading, v.weight()));
    return out;
  }
  if (verb == "relwt") {
    auto f = io::read_relwt(doc);
    auto m = relative_weight_filtration(f.n, f.weight);
    json out = {{"exists", m.exists}};
    if (m.exists) out["M"] = io::to_json(m.filtration);
    else out["reason"] = m.reason;
    return out;
  }
  if (verb == "limit") {
    auto m = io::read_model1d(doc);
    auto rel = relative_weight_filtration(m.n, m.weight);
    if (!rel.exists) return {{"relative_exists", false}, {"reason", rel.reason}};
    auto lim = limit_mhs(m.psi_at(Gaussian(0)), m.n, m.weight);
    json out = {{"relative_exists", true}, {"relative", io::to_json(lim.relative)},
                {"hodge", io::to_json(m.psi_at(Gaussian(0)))}, {"validation", validation_json(lim.report)}};
    if (lim.mhs) out["hodge_numbers"] = io::to_json(hodge_numbers(*lim.mhs));
    return out;
  }
  if (verb == "admissible") {
    auto v = check_preadmissible(io::read_model1d(doc));
    json fails = json::array();
    for (const auto& [p, k] : v.cond2_failures) fails.push_back({{"p", p}, {"k", k}});
    return {{"cond1", v.cond1}, {"cond2", v.cond2}, {"preadmissible", v.preadmissible()},
            {"cond1_detail", v.cond1_detail}, {"cond2_failures", fails}};
  }
  if (verb == "probe") {
    auto m = io::read_model1d(doc);
    auto s = split_commas(o.strip);
    auto g = split_commas(o.grid);
    if (s.size() != 3) throw InputError("--strip expects a,b,c");
    if (g.size() != 2) throw InputError("--grid expects nx,ny");
    auto strip = VerticalStrip::create(parse_rational(s[0]), parse_rational(s[1]), parse_rational(s[2]));
    ProbeOptions po;
    try {
      po.nx = std::stoul(g[0]);
      po.ny = std::stoul(g[1]);
    } catch (const std::exception&) {
      throw InputError("--grid expects two positive integers");
    }
    po.top = o.top;
    po.retraction = parse_retraction(o.retraction);
    po.workers = o.workers;
    json out = io::to_json(strip_splitting_probe(m, strip, po));
    out["retraction"] = to_string(po.retraction);
    return out;
  }
  if (verb == "reduce") {
    io::check_schema(doc, io::Schema::reduce);
    if (doc["kind"] == "unipotent") {
      std::vector<std::vector<Rational>> lattice;
      for (size_t i = 0; i < doc["lattice"].size(); ++i)
        lattice.push_back(io::read_rationals(doc["lattice"][i], "/lattice/" + std::to_string(i)));
      auto r = reduce_unipotent(io::read_rationals(doc["coord"], "/coord"), lattice);
      return {{"gamma", io::to_json(r.gamma)}, {"reduced", io::to_json(r.reduced)}};
    }
    if (doc.contains("tau") && !doc["tau"].is_null()) {
      auto r = reduce_sl2(io::read_scalar(doc["tau"], "/tau"));
      return {{"gamma", io::to_json(GroupElement{r.gamma, {}})["matrix"]}, {"tau", io::to_json(r.tau)}};
    }
    auto r = reduce_sl2(std::complex<double>(doc["tau_float"][0].get<double>(), doc["tau_float"][1].get<double>()));
    json gm = json::array({json::array({r.gamma[0], r.gamma[1]}), json::array({r.gamma[2], r.gamma[3]})});
    return {{"gamma", gm}, {"tau", json::array({io::float_json(r.tau.real()), io::float_json(r.tau.imag())})}};
  }
  if (verb == "fundamental") {
    auto f = io::read_descriptor(doc.at("descriptor"), "/descriptor");
    auto a = io::read_action(doc.at("action"), "/action");
    size_t budget = doc.contains("sample_budget") ? doc["sample_budget"].get<size_t>() : 2000;
    return report_json(verify_fundamental_set(f, a, budget));
  }
  if (verb == "identify") {
    io::check_schema(doc, io::Schema::identify);
    auto f = io::read_descriptor(doc["descriptor"], "/descriptor");
    auto a = io::read_action(doc["action"], "/action");
    auto rep = verify_fundamental_set(f, a);
    if (!rep.finite_overlaps) throw InputError("descriptor has no finite overlap set");
    bool related = identify_in_quotient(io::read_point(doc["p1"], "/p1"), io::read_point(doc["p2"], "/p2"), f, a,
                                        rep.overlaps);
    return {{"related", related}};
  }
  if (verb == "compare-structures") {
    io::check_schema(doc, io::Schema::compare);
    auto r = same_definable_structure(io::read_descriptor(doc["f1"], "/f1"), io::read_descriptor(doc["f2"], "/f2"),
                                      io::read_action(doc["action"], "/action"));
    return {{"same", r.same}, {"translates_1_in_2", r.translates_1_in_2}, {"translates_2_in_1", r.translates_2_in_1}};
  }
  if (verb == "membership") {
    auto spec = io::read_domain(doc);
    DecreasingFiltration f;
    if (!o.point.empty()) {
      auto p = io::read_mhs_file(io::load_file(o.point));
      if (!p.hodge) throw io::SchemaError("/hodge", "missing field in " + o.point);
      f = *p.hodge;
    } else {
      auto self = io::read_mhs_file(doc);
      if (!self.hodge) throw io::SchemaError("/hodge", "missing field (or pass a point file)");
      f = *self.hodge;
    }
    auto m = membership(spec, f);
    return {{"in_compact_dual", m.in_compact_dual}, {"in_M", m.in_M}, {"in_M_R", m.in_M_R}, {"detail", m.detail}};
  }
  if (verb == "hodge") {
    auto file = io::read_mhs_file(doc);
    if (!file.hodge) throw io::SchemaError("/hodge", "missing field");
    auto v = MixedHodgeStructure::create(file.weight, *file.hodge);
    Rational d = parse_rational(o.d);
    json classes = json::array();
    std::optional<HodgeClass> witness;
    auto graded = file.weight.graded_indices();
    if (std::find(graded.begin(), graded.end(), 0) != graded.end()) {
      if (!file.polarizations) throw io::SchemaError("/polarizations", "missing field (q0 is needed)");
      for (const auto& c : enumerate_hdg0_d({v, file.polarizations->forms.at(0), d})) {
        classes.push_back({{"v", io::to_json(c.v)}, {"norm", io::to_json(c.norm)}});
        auto lead = std::find_if(c.v.begin(), c.v.end(), [](const Integer& e) { return e != 0; });
        if (*lead > 0 && (!witness || c.norm < witness->norm)) witness = c;
      }
    }
    json out = {{"d", io::to_json(d)}, {"classes", classes}, {"count", classes.size()}, {"nonempty", !classes.empty()}};
    out["witness"] = witness ? json{{"v", io::to_json(witness->v)}, {"norm", io::to_json(witness->norm)}} : json(nullptr);
    return out;
  }
  throw InputError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with mixed Hodge structures and their period maps"};
  app.require_subcommand(1);
  Options o;
  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"validate", "check the MHS axioms"},
      {"bigrade", "Deligne bigrading and Hodge numbers"},
      {"delta", "Deligne's delta splitting"},
      {"retract", "real split point and chart coordinates"},
      {"relwt", "relative weight filtration M(N, W)"},
      {"limit", "limit MHS of a one-variable model"},
      {"admissible", "pre-admissibility of a one-variable model"},
      {"probe", "splitting-coordinate probe over a vertical strip"},
      {"reduce", "reduce a point to a fundamental domain"},
      {"identify", "identify two points in the quotient"},
      {"compare-structures", "compare the definable structures of two fundamental sets"},
      {"hodge", "bounded-norm integral Hodge classes"},
      {"membership", "period domain membership"},
      {"schema-check", "validate a JSON document against its schema"},
      {"fundamental", "verify a fundamental set"},
  };
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("file", o.file, "input JSON")->required();
    std::string name = v.name;
    if (name == "validate") sub->add_flag("--thorough", o.thorough, "also check triple-graded vanishing");
    if (name == "retract" || name == "probe")
      sub->add_option("--retraction", o.retraction, "delta or sl2")->check(CLI::IsMember({"delta", "sl2"}));
    if (name == "hodge") sub->add_option("--d", o.d, "norm bound (rational)");
    if (name == "probe") {
      sub->add_option("--strip", o.strip, "a,b,c for a < x < b, y > c");
      sub->add_option("--grid", o.grid, "nx,ny");
      sub->add_option("--top", o.top, "top height (default 10c)");
      sub->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
    }
    if (name == "membership") sub->add_option("point", o.point, "JSON with the filtration under \"hodge\"");
    if (name == "schema-check") sub->add_option("--schema", o.schema, "schema name; detected when omitted");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  std::string verb = app.get_subcommands().front()->get_name();
  try {
    std::cout << run(verb, o).dump(2) << "\n";
    return 0;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    std::cout << json{{"error", std::string("unsupported: ") + e.what()}}.dump(2) << "\n";
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
