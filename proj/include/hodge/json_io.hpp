#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hodge/admissibility.hpp"
#include "hodge/domains.hpp"
#include "hodge/hodge_loci.hpp"

namespace hodge::io {

using json = nlohmann::json;

/// Input that does not match a schema; the message starts with the field path.
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what) : InputError(path + ": " + what) {}
};

json load_file(const std::string& path);

// ---- readers (path is the JSON pointer of `j`) --------------------------------

Rational read_rational(const json& j, const std::string& path);
Gaussian read_scalar(const json& j, const std::string& path);
Matrix read_matrix(const json& j, const std::string& path, std::optional<size_t> rows = std::nullopt,
                   std::optional<size_t> cols = std::nullopt);
std::vector<Rational> read_rationals(const json& j, const std::string& path);
IncreasingFiltration read_weight(const json& j, size_t rank, const std::string& path);
DecreasingFiltration read_hodge(const json& j, size_t rank, const std::string& path);
/// One form per nonzero Gr_k, of size dim Gr_k.
GradedPolarization read_polarizations(const json& j, const IncreasingFiltration& w, const std::string& path);
HodgeNumbers read_hodge_numbers(const json& j, const std::string& path);

struct MhsFile {
  size_t rank = 0;
  IncreasingFiltration weight;
  std::optional<DecreasingFiltration> hodge;
  std::optional<GradedPolarization> polarizations;
  std::optional<HodgeNumbers> hodge_numbers;
};
/// {"rank", "weight", "hodge"?, "polarizations"?, "hodge_numbers"?}
MhsFile read_mhs_file(const json& j);
MixedHodgeStructure read_mhs(const json& j);
PeriodDomainSpec read_domain(const json& j);

/// {"rank", "weight", "polarizations", "N", "psi": {"p": [[coefficient lists]]}}
LocalModel1D read_model1d(const json& j);

struct RelwtFile {
  NilpotentOperator n;
  IncreasingFiltration weight;
};
/// {"rank", "weight", "N"}
RelwtFile read_relwt(const json& j);

FundamentalSetDescriptor read_descriptor(const json& j, const std::string& path);
GroupAction read_action(const json& j, const std::string& path);
DomainPoint read_point(const json& j, const std::string& path);

/// Which schema a document is checked against.
enum class Schema { mhs, domain, model1d, relwt, reduce, fundamental, identify, compare };
std::optional<Schema> parse_schema(const std::string& name);
/// Guesses the schema from the keys present.
Schema detect_schema(const json& j);
/// Parses the document fully without running mathematics; throws SchemaError.
void check_schema(const json& j, Schema s);

// ---- writers ------------------------------------------------------------------

json to_json(const Rational& r);
json to_json(const Gaussian& z);
json to_json(const Matrix& m);
json to_json(const Vector& v);
json to_json(const std::vector<Rational>& v);
json to_json(const IntVector& v);
json to_json(const Subspace& s);
json to_json(const IncreasingFiltration& w);
json to_json(const DecreasingFiltration& f);
json to_json(const GroupElement& g);
json to_json(const HodgeNumbers& h);
json to_json(const ProbeReport& r);

/// Doubles with 12 significant digits.
json float_json(double x);

}  // namespace hodge::io
