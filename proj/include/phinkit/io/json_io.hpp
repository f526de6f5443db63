#pragma once

#include "phinkit/phin/module.hpp"
#include "phinkit/spectral/complex.hpp"
#include "phinkit/spectral/nerve.hpp"
#include "phinkit/spectral/pages.hpp"
#include "phinkit/spectral/steenbrink.hpp"

#include "json.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

namespace phinkit::io {

/// std::map-backed, so every object serializes with sorted keys.
using Json = nlohmann::json;

constexpr int schema_version = 1;

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Parses text as JSON; syntax errors become InvalidInput.
Json parse_text(std::string_view text);

/// Strict object access. Every lookup records the key, and finish() rejects
/// any key that was never looked at.
class ObjectReader {
public:
  ObjectReader(const Json& j, std::string where);

  const Json& required(const std::string& key);
  const Json* optional(const std::string& key);
  void finish() const;

  const std::string& where() const noexcept { return where_; }

private:
  const Json& j_;
  std::string where_;
  std::vector<std::string> seen_;
};

/// Checks the top-level "schema" field.
void check_schema(ObjectReader& r);

long read_int(const Json& j, const std::string& where);
linalg::Rational read_rational(const Json& j, const std::string& where);
/// rows x cols matrix; expected shape checked when given.
linalg::QMatrix read_matrix(const Json& j, const std::string& where, std::optional<std::size_t> rows = {},
                            std::optional<std::size_t> cols = {});

/// {"<index>": [[basis rows]]}: decreasing filtration on Q^n.
phin::IndexedFiltration read_filtration(const Json& j, std::size_t n, const std::string& where);

phin::PhiNModule read_phin_module(const Json& j);

struct FilteredComplexInput {
  spectral::FilteredComplex fc;
  std::optional<linalg::Integer> q; ///< Frobenius base for the abutment labels
};
FilteredComplexInput read_filtered_complex(const Json& j);

struct NerveInput {
  spectral::NerveDatum nerve;
  std::optional<linalg::Integer> q;
};
NerveInput read_nerve(const Json& j);

spectral::SteenbrinkDatum read_steenbrink(const Json& j);

Json to_json(const linalg::Rational& x);
Json to_json(const linalg::QMatrix& m);
Json to_json(const linalg::Subspace& s); ///< RREF basis rows
Json to_json(const phin::GradedDims& g); ///< [[index, dim], ...]
Json to_json(const spectral::Page& page); ///< dims and ranks of nonzero differentials

/// One clause of a verifier: the statement checked and whether it held.
Json clause(bool pass, const std::string& statement);

/// Flattens a report to "path = value" lines in key order.
std::string to_text(const Json& j);

} // namespace phinkit::io
