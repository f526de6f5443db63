#include "phinkit/io/json_io.hpp"

#include "phinkit/error.hpp"

#include <algorithm>
#include <sstream>

namespace phinkit::io {

using linalg::QMatrix;
using linalg::Rational;
using linalg::Subspace;

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

ObjectReader::ObjectReader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
  if (!j_.is_object()) throw InvalidInput(where_ + ": expected an object");
}

const Json& ObjectReader::required(const std::string& key) {
  if (const Json* v = optional(key)) return *v;
  throw InvalidInput(where_ + ": missing key \"" + key + "\"");
}

const Json* ObjectReader::optional(const std::string& key) {
  seen_.push_back(key);
  auto it = j_.find(key);
  return it == j_.end() ? nullptr : &*it;
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
      throw InvalidInput(where_ + ": unknown key \"" + it.key() + "\"");
}

void check_schema(ObjectReader& r) {
  const Json& s = r.required("schema");
  if (!s.is_number_integer() || s.get<long>() != schema_version)
    throw InvalidInput("unsupported schema version (expected " + std::to_string(schema_version) + ")");
}

long read_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InvalidInput(where + ": expected an integer");
  return j.get<long>();
}

Rational read_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InvalidInput(where + ": expected a rational string");
  try {
    return linalg::parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

QMatrix read_matrix(const Json& j, const std::string& where, std::optional<std::size_t> rows,
                    std::optional<std::size_t> cols) {
  if (!j.is_array()) throw InvalidInput(where + ": expected a matrix (array of rows)");
  const std::size_t r = j.size();
  std::size_t c = cols.value_or(r == 0 ? 0 : j.front().is_array() ? j.front().size() : 0);
  if (rows && *rows != r) throw InvalidInput(where + ": expected " + std::to_string(*rows) + " rows");
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != c)
      throw InvalidInput(where + ": row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = read_rational(row[k], where);
  }
  return m;
}

phin::IndexedFiltration read_filtration(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_object() || j.empty()) throw InvalidInput(where + ": expected a nonempty object of steps");
  std::map<int, Subspace> steps;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InvalidInput(where + ": step key \"" + it.key() + "\" is not an integer");
    }
    const QMatrix gens = read_matrix(*it, where + "[" + it.key() + "]", {}, n);
    steps[index] = Subspace::span(gens);
  }
  auto f = phin::IndexedFiltration::from_steps(n, phin::Orientation::decreasing, steps);
  f.validate();
  return f;
}

phin::PhiNModule read_phin_module(const Json& j) {
  ObjectReader r(j, "module");
  check_schema(r);
  phin::PhiNModule D;
  const long p = read_int(r.required("p"), "p");
  const long a = read_int(r.required("a"), "a");
  if (p < 2 || a < 1) throw InvalidInput("p must be at least 2 and a at least 1");
  D.p = static_cast<unsigned long>(p);
  D.a = static_cast<unsigned long>(a);
  D.d = static_cast<int>(read_int(r.required("d"), "d"));
  D.phi = read_matrix(r.required("phi"), "phi");
  const std::size_t n = D.phi.rows();
  if (D.phi.cols() != n) throw InvalidInput("phi must be square");
  D.N = read_matrix(r.required("N"), "N", n, n);
  D.fil = read_filtration(r.required("fil"), n, "fil");
  if (const Json* g = r.optional("gamma_fil")) D.gamma_fil = read_filtration(*g, n, "gamma_fil");
  r.finish();
  phin::validate(D);
  return D;
}

namespace {

std::optional<linalg::Integer> read_q(ObjectReader& r) {
  const Json* q = r.optional("q");
  if (!q) return std::nullopt;
  const long v = read_int(*q, "q");
  if (v < 2) throw InvalidInput("q must be at least 2");
  return linalg::Integer(v);
}

std::vector<std::vector<int>> read_int_table(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(where + ": expected an array of arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(read_int(x, where)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> read_dims(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of dimensions");
  std::vector<std::size_t> out;
  for (const auto& x : j) {
    const long v = read_int(x, where);
    if (v < 0) throw InvalidInput(where + ": dimensions are nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

spectral::Mask read_mask(const Json& j, std::size_t components, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InvalidInput(where + ": expected a nonempty list of components");
  spectral::Mask m = 0;
  for (const auto& x : j) {
    const long c = read_int(x, where);
    if (c < 0 || static_cast<std::size_t>(c) >= components) throw InvalidInput(where + ": component out of range");
    if (m >> c & 1) throw InvalidInput(where + ": repeated component");
    m |= spectral::Mask{1} << c;
  }
  return m;
}

} // namespace

FilteredComplexInput read_filtered_complex(const Json& j) {
  ObjectReader r(j, "filtered complex");
  check_schema(r);
  const int lo = static_cast<int>(read_int(r.required("lo"), "lo"));
  const auto levels = read_int_table(r.required("levels"), "levels");
  std::vector<std::size_t> dims;
  for (const auto& l : levels) dims.push_back(l.size());
  const Json& dj = r.required("differentials");
  if (!dj.is_array() || dj.size() + 1 != dims.size())
    throw InvalidInput("differentials: expected one matrix between each pair of consecutive degrees");
  std::vector<QMatrix> diffs;
  for (std::size_t k = 0; k + 1 < dims.size(); ++k)
    diffs.push_back(read_matrix(dj[k], "differentials[" + std::to_string(k) + "]", dims[k + 1], dims[k]));
  if (!dims.empty()) diffs.emplace_back(0, dims.back());
  FilteredComplexInput out;
  out.fc = spectral::filter_by_levels(spectral::GradedComplex(lo, dims, diffs), levels);
  if (const Json* w = r.optional("weights")) {
    out.fc.weights = read_int_table(*w, "weights");
    if (out.fc.weights.size() != dims.size()) throw InvalidInput("weights: one row per degree");
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (out.fc.weights[k].size() != dims[k]) throw InvalidInput("weights: one label per basis vector");
  }
  out.q = read_q(r);
  r.finish();
  out.fc.validate();
  return out;
}

NerveInput read_nerve(const Json& j) {
  ObjectReader r(j, "nerve");
  check_schema(r);
  NerveInput out;
  auto& nd = out.nerve;
  const long comps = read_int(r.required("components"), "components");
  if (comps < 1 || comps > 16) throw InvalidInput("components must lie in 1..16");
  nd.components = static_cast<std::size_t>(comps);
  const Json& strata = r.required("strata");
  if (!strata.is_array()) throw InvalidInput("strata: expected an array");
  for (const auto& s : strata) {
    ObjectReader sr(s, "stratum");
    const auto m = read_mask(sr.required("components"), nd.components, "stratum components");
    if (nd.strata.count(m)) throw InvalidInput("stratum listed twice");
    nd.strata[m] = read_dims(sr.required("dims"), "stratum dims");
    if (const Json* w = sr.optional("weights")) {
      std::vector<int> ws;
      for (const auto& x : *w) ws.push_back(static_cast<int>(read_int(x, "stratum weights")));
      nd.weights[m] = std::move(ws);
    }
    sr.finish();
  }
  if (const Json* rs = r.optional("restrictions")) {
    if (!rs->is_array()) throw InvalidInput("restrictions: expected an array");
    for (const auto& e : *rs) {
      ObjectReader er(e, "restriction");
      const auto from = read_mask(er.required("from"), nd.components, "restriction from");
      const auto to = read_mask(er.required("to"), nd.components, "restriction to");
      const Json& maps = er.required("maps");
      if (!maps.is_array()) throw InvalidInput("restriction maps: expected one matrix per degree");
      std::vector<QMatrix> ms;
      for (std::size_t s = 0; s < maps.size(); ++s)
        ms.push_back(read_matrix(maps[s], "restriction map", nd.dim(to, s), nd.dim(from, s)));
      nd.restrictions[{from, to}] = std::move(ms);
      er.finish();
    }
  }
  out.q = read_q(r);
  r.finish();
  nd.validate();
  return out;
}

spectral::SteenbrinkDatum read_steenbrink(const Json& j) {
  ObjectReader r(j, "Steenbrink datum");
  check_schema(r);
  spectral::SteenbrinkDatum sd;
  sd.d = static_cast<int>(read_int(r.required("d"), "d"));
  const Json& levels = r.required("levels");
  if (!levels.is_array()) throw InvalidInput("levels: expected an array of levels");
  for (const auto& level : levels) {
    if (!level.is_array()) throw InvalidInput("levels: each level is an array of strata");
    std::vector<std::vector<std::size_t>> strata;
    for (const auto& s : level) strata.push_back(read_dims(s, "level strata"));
    sd.levels.push_back(std::move(strata));
  }
  auto read_maps = [&](const char* key, auto& target, int drow, int arow) {
    const Json* maps = r.optional(key);
    if (!maps) return;
    if (!maps->is_array()) throw InvalidInput(std::string(key) + ": expected an array");
    for (const auto& e : *maps) {
      ObjectReader er(e, key);
      const int m = static_cast<int>(read_int(er.required("m"), "m"));
      const int a = static_cast<int>(read_int(er.required("a"), "a"));
      target[{m, a}] = read_matrix(er.required("matrix"), key, sd.level_dim(m + drow, a + arow), sd.level_dim(m, a));
      er.finish();
    }
  };
  read_maps("restriction", sd.restriction, 1, 0);
  read_maps("gysin", sd.gysin, -1, 2);
  r.finish();
  return sd;
}

Json to_json(const Rational& x) { return linalg::to_string(x); }

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Subspace& s) { return to_json(s.basis()); }

Json to_json(const phin::GradedDims& g) {
  Json out = Json::array();
  for (const auto& [i, n] : g)
    if (n != 0) out.push_back({i, n});
  return out;
}

Json to_json(const spectral::Page& page) {
  Json dims = Json::array(), ranks = Json::array();
  for (const auto& [pq, n] : page.dims) dims.push_back({pq.first, pq.second, n});
  for (const auto& [pq, m] : page.differentials) ranks.push_back({pq.first, pq.second, linalg::rank(m)});
  return {{"r", page.r}, {"dims", dims}, {"differential_ranks", ranks}, {"euler_characteristic", page.euler_characteristic()}};
}

Json clause(bool pass, const std::string& statement) { return {{"pass", pass}, {"statement", statement}}; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

} // namespace

std::string to_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

} // namespace phinkit::io
