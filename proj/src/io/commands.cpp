#include "phinkit/io/commands.hpp"

#include "phinkit/drinfeld/arrangement.hpp"
#include "phinkit/drinfeld/blowup.hpp"
#include "phinkit/drinfeld/counting.hpp"
#include "phinkit/drinfeld/lattice.hpp"
#include "phinkit/error.hpp"
#include "phinkit/phin/admissibility.hpp"
#include "phinkit/phin/monodromy.hpp"
#include "phinkit/phin/quotient.hpp"
#include "phinkit/phin/numbers.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace phinkit::io {

using linalg::Integer;
using linalg::QMatrix;
using linalg::Rational;

namespace {

// Clause statements shared by several reports.
constexpr const char* kWeaklyAdmissible =
    "t_H(D) = t_N(D), and t_H(D') <= t_N(D') for every (phi,N)-stable subspace D'";
constexpr const char* kOrdinary = "weakly admissible with integral slopes and Hodge numbers equal to Newton numbers";
constexpr const char* kMonodromyWeight = "monodromy filtration M_r equals weight filtration P_r for every r";
constexpr const char* kKernelImage =
    "if both convolution formulas agree and ker N = F^d, then ker N^(d+1-j) = im N^j = F^j for every j";
constexpr const char* kE2 = "with phi = q^s on E_1^(.,s) every differential d_r, r >= 2, vanishes";
constexpr const char* kAbutment = "phi = q^(n-p) on the graded piece gr^p of H^n";

// ---- phin ---------------------------------------------------------------

Json module_summary(const phin::PhiNModule& D) {
  return {{"dim", D.dim()}, {"p", D.p}, {"a", D.a}, {"d", D.d}, {"q", D.q().get_str()}};
}

Json slope_dims(const phin::SlopeDims& s) {
  Json out = Json::array();
  for (const auto& [slope, n] : s) out.push_back({linalg::to_string(slope), n});
  return out;
}

Json mw_json(const phin::MonodromyWeightReport& mw) {
  Json steps = Json::array();
  for (const auto& s : mw.steps)
    steps.push_back({{"r", s.r}, {"dim_M", s.dim_M}, {"dim_P", s.dim_P}, {"equal", s.equal}});
  return {{"equal", mw.equal}, {"steps", steps}};
}

phin::AdmissibilityOptions admissibility_options(const RunOptions& opts) {
  phin::AdmissibilityOptions a;
  a.seed = opts.seed;
  if (opts.budget) a.max_candidates = *opts.budget;
  return a;
}

Json admissibility_json(const phin::PhiNModule& D, const phin::AdmissibilityReport& rep) {
  Json out = {{"verdict", phin::to_string(rep.verdict)},
              {"admissible", rep.verdict == phin::Verdict::admissible},
              {"certified", rep.certified},
              {"method", rep.method},
              {"subspaces_checked", rep.subspaces_checked},
              {"t_N", to_json(rep.t_N)},
              {"t_H", to_json(rep.t_H)},
              {"witness", nullptr}};
  if (rep.witness) {
    const auto t = phin::t_numbers(D, *rep.witness);
    out["witness"] = {{"basis", to_json(*rep.witness)}, {"t_N", to_json(t.t_N)}, {"t_H", to_json(t.t_H)}};
  }
  return out;
}

Json phin_analyze(const Json& input, const RunOptions& opts) {
  const auto D = read_phin_module(input);
  const auto aopts = admissibility_options(opts);
  const auto ord = phin::is_ordinary(D, aopts);
  const auto& adm = ord.admissibility;
  const auto mw = phin::monodromy_weight_check(D);
  const auto ki = phin::kernel_image_check(D.N, D.d);
  const auto t = phin::t_numbers(D);
  Json ki_json = {{"h1", ki.h1},
                    {"h2", ki.h2},
                    {"conclusion_checked", ki.conclusion_checked},
                    {"conclusion_holds", ki.conclusion_holds},
                    {"F_dims", ki.F_dims},
                    {"alt_dims", ki.alt_dims}};
  Json kernel_image = clause(!ki.conclusion_checked || ki.conclusion_holds, kKernelImage);
  kernel_image["applicable"] = ki.conclusion_checked;
  Json result = {
      {"module", module_summary(D)},
      {"hodge_numbers", to_json(phin::hodge_numbers(D))},
      {"newton_numbers", slope_dims(phin::newton_numbers(D))},
      {"t_N", to_json(t.t_N)},
      {"t_H", to_json(t.t_H)},
      {"admissibility", admissibility_json(D, adm)},
      {"ordinary",
       {{"verdict", phin::to_string(ord.verdict)},
        {"integral_slopes", ord.integral_slopes},
        {"hodge_equals_newton", ord.hodge_equals_newton}}},
      {"monodromy_filtration", to_json(phin::monodromy_filtration(D).graded_dims())},
      {"weight_filtration", to_json(phin::weight_filtration(D).graded_dims())},
      {"monodromy_weight", mw_json(mw)},
      {"filtration_from_monodromy", ki_json},
  };
  Json clauses = {{"weakly_admissible", clause(adm.verdict == phin::Verdict::admissible, kWeaklyAdmissible)},
                  {"ordinary", clause(ord.verdict == phin::Ordinarity::ordinary, kOrdinary)},
                  {"monodromy_weight", clause(mw.equal, kMonodromyWeight)},
                  {"kernel_image", kernel_image}};
  return {{"result", result}, {"clauses", clauses}};
}

Json phin_check_mw(const Json& input, const RunOptions&) {
  const auto D = read_phin_module(input);
  const auto mw = phin::monodromy_weight_check(D);
  Json result = {{"module", module_summary(D)},
                 {"monodromy_filtration", to_json(phin::monodromy_filtration(D).graded_dims())},
                 {"weight_filtration", to_json(phin::weight_filtration(D).graded_dims())},
                 {"monodromy_weight", mw_json(mw)}};
  return {{"result", result}, {"clauses", {{"monodromy_weight", clause(mw.equal, kMonodromyWeight)}}}};
}

Json phin_quotient(const Json& input, const RunOptions&) {
  const auto D = read_phin_module(input);
  const auto rep = phin::quotient_check(D);
  auto clause_json = [](const phin::ClauseResult& c, const std::string& statement) {
    Json j = clause(c.pass, statement);
    j["detail"] = c.detail;
    return j;
  };
  Json result = {{"module", module_summary(D)},
                 {"dim_C", rep.dim_C},
                 {"C_meets_upper_gamma_trivially", rep.C_meets_upper_gamma_trivially},
                 {"C_inside_middle_gamma", rep.C_inside_middle_gamma},
                 {"phi_scalar_on_C", rep.phi_scalar_on_C},
                 {"kernel_passes_to_quotient", rep.kernel_passes_to_quotient},
                 {"gamma_graded_dims", rep.gamma_graded_dims}};
  Json clauses = {
      {"a_opposite", clause_json(rep.opposite, "Hodge and Gamma filtrations on D/C are opposite")},
      {"b_frobenius", clause_json(rep.frobenius, "Gamma filtration on D/C is phi-stable with phi = q^(d-r) on gr^r")},
      {"c_kernel_image", clause_json(rep.kernel_image, "Gamma^r = ker Nbar^(d+1-r) = im Nbar^r on D/C for every r")},
      {"C_complement",
       clause(rep.C_meets_upper_gamma_trivially && rep.C_inside_middle_gamma && rep.phi_scalar_on_C,
              "for d = 2t: C lies in Gamma^t, meets Gamma^(t+1) trivially and phi = q^t on C")},
      {"kernel_quotient", clause(rep.kernel_passes_to_quotient, "ker N maps onto ker Nbar modulo C")}};
  return {{"result", result}, {"clauses", clauses}};
}

// ---- spectral -----------------------------------------------------------

Json cohomology_dims(const spectral::FilteredComplex& fc) {
  Json out = Json::array();
  for (int n = fc.complex.lo(); n <= fc.complex.hi(); ++n) out.push_back({n, fc.complex.cohomology_dim(n)});
  return out;
}

// Shared body for any filtered complex: pages, degeneration, abutment.
void spectral_common(const spectral::FilteredComplex& fc, const std::optional<Integer>& q, Json& result, Json& clauses) {
  const int last = spectral::stable_page(fc);
  Json pages = Json::array();
  std::vector<long> euler;
  for (int r = 1; r <= last; ++r) {
    const auto page = spectral::e_page(fc, r);
    euler.push_back(page.euler_characteristic());
    pages.push_back(to_json(page));
  }
  const auto einf = spectral::e_page(fc, last);
  bool converges = true;
  Json abutment = Json::array();
  for (int n = fc.complex.lo(); n <= fc.complex.hi(); ++n) {
    std::size_t total = 0;
    for (const auto& [pq, dim] : einf.dims)
      if (pq.first + pq.second == n) total += dim;
    converges = converges && total == fc.complex.cohomology_dim(n);
    abutment.push_back({{"n", n}, {"graded_dims", to_json(spectral::abutment_filtration(fc, n).graded_dims())}});
  }
  const auto deg = spectral::degeneration_page(fc, std::max(last, 2));
  result["cohomology_dims"] = cohomology_dims(fc);
  result["pages"] = pages;
  result["stable_page"] = last;
  result["degeneration"] = {{"page", deg.page}, {"censored", deg.censored}};
  result["abutment"] = abutment;
  clauses["convergence"] = clause(converges, "sum over p + q = n of dim E_infinity^(p,q) equals dim H^n");
  clauses["euler_invariance"] =
      clause(std::adjacent_find(euler.begin(), euler.end(), std::not_equal_to<>()) == euler.end(),
             "the Euler characteristic is the same on every page");
  if (fc.has_weights()) {
    const bool eq = spectral::equivariant_degeneration_check(fc);
    result["equivariant_degeneration"] = eq;
    clauses["e2_degeneration"] = clause(eq && deg.page <= 2, kE2);
    if (q) {
      bool ok = true;
      for (int n = fc.complex.lo(); n <= fc.complex.hi(); ++n) ok = ok && spectral::abutment_frobenius_check(fc, n, *q);
      result["q"] = q->get_str();
      clauses["abutment_frobenius"] = clause(ok, kAbutment);
    }
  }
}

Json ss_pages(const Json& input, const RunOptions&) {
  const auto in = read_filtered_complex(input);
  Json result = Json::object(), clauses = Json::object();
  spectral_common(in.fc, in.q, result, clauses);
  return {{"result", result}, {"clauses", clauses}};
}

Json ss_cech(const Json& input, const RunOptions&) {
  const auto in = read_nerve(input);
  const auto fc = spectral::cech_complex(in.nerve);
  Json result = Json::object(), clauses = Json::object();
  spectral_common(fc, in.q, result, clauses);
  const auto cmp = spectral::cech_vs_total_check(in.nerve);
  result["cech_vs_flags"] = {{"equal", cmp.equal}, {"cech_dims", cmp.cech_dims}, {"flag_dims", cmp.lambda_dims}};
  clauses["cech_equals_flags"] =
      clause(cmp.equal, "total Cech cohomology equals that of the complex indexed by strict flags of strata");
  return {{"result", result}, {"clauses", clauses}};
}

Json ss_steenbrink(const Json& input, const RunOptions&) {
  const auto sd = read_steenbrink(input);
  const auto sc = spectral::steenbrink_double_complex(sd);
  const auto& cx = sc.fc.complex;
  const int D = std::max(sd.max_level() - 1, 0);
  Json result = Json::object(), clauses = Json::object();
  result["cohomology_dims"] = cohomology_dims(sc.fc);
  result["E1"] = to_json(spectral::e_page(sc.fc, 1));
  const auto deg = spectral::degeneration_page(sc.fc, std::max(spectral::stable_page(sc.fc), 2));
  result["degeneration"] = {{"page", deg.page}, {"censored", deg.censored}};
  Json degrees = Json::array();
  bool mw_all = true, shift_all = true, nilpotent_all = true;
  for (int n = cx.lo(); n <= cx.hi(); ++n) {
    if (cx.cohomology_dim(n) == 0) continue;
    const auto P = spectral::weight_filtration_on_cohomology(sc, n);
    const QMatrix N = spectral::monodromy_endomorphism(sc, n);
    int order = 0;
    for (QMatrix pw = QMatrix::identity(N.rows()); !pw.is_zero(); pw = pw * N) ++order;
    const bool nilpotent = N.pow(static_cast<unsigned>(D + 1)).is_zero();
    bool shift = true, mw = nilpotent;
    const int lo = P.first() - 2, hi = P.last() + 2;
    for (int k = lo; k <= hi; ++k) shift = shift && P.at(k - 2).contains(linalg::apply(N, P.at(k)));
    if (nilpotent) {
      const auto M = phin::monodromy_filtration(N, D);
      for (int r = std::min(lo, -D) - 1; r <= std::max(hi, D) + 1; ++r) mw = mw && M.at(r) == P.at(r);
    }
    mw_all = mw_all && mw;
    shift_all = shift_all && shift;
    nilpotent_all = nilpotent_all && nilpotent;
    degrees.push_back({{"n", n},
                       {"dim", cx.cohomology_dim(n)},
                       {"weight_graded_dims", to_json(P.graded_dims())},
                       {"monodromy_rank", linalg::rank(N)},
                       {"nilpotency_order", order},
                       {"monodromy_weight", mw}});
  }
  result["degrees"] = degrees;
  clauses["weight_shift"] = clause(shift_all, "N(P_k) is contained in P_(k-2) on every H^n");
  clauses["nilpotent"] = clause(nilpotent_all, "N^(D+1) = 0 where D is the largest stratum level minus one");
  clauses["monodromy_weight"] = clause(mw_all, kMonodromyWeight);
  return {{"result", result}, {"clauses", clauses}};
}

// ---- drinfeld -----------------------------------------------------------

long param(const Json& in, const char* key, long lo, long hi) {
  ObjectReader r(in, "parameters");
  const long v = read_int(r.required(key), key);
  if (v < lo || v > hi)
    throw InvalidInput(std::string("--") + key + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

void check_params(const Json& in, std::initializer_list<const char*> keys) {
  ObjectReader r(in, "parameters");
  for (const char* k : keys) r.required(k);
  r.finish();
}

Json poly_json(const drinfeld::PoincarePoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

Json drinfeld_ball(const Json& in, const RunOptions& opts) {
  check_params(in, {"d", "p", "n"});
  const int d = static_cast<int>(param(in, "d", 1, 8));
  const auto p = static_cast<unsigned>(param(in, "p", 2, 1000));
  const int n = static_cast<int>(param(in, "n", 0, 64));
  const auto b = drinfeld::ball(d, p, n, opts.budget.value_or(200000));
  Json vertices = Json::array(), edges = Json::array(), sizes = Json::array();
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    Json rows = Json::array();
    const auto& v = b.vertices[i];
    for (std::size_t r = 0; r < v.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < v.size(); ++c) row.push_back(v.at(r, c));
      rows.push_back(std::move(row));
    }
    vertices.push_back({{"distance", b.distance[i]}, {"representative", rows}});
  }
  std::vector<std::size_t> degree(b.vertices.size(), 0);
  for (const auto& e : b.edges) {
    edges.push_back({e.u, e.v, e.dim_from_u});
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int k = 0; k <= n; ++k) sizes.push_back(b.count_at_most(k));
  Integer valence = 0;
  for (long s = 1; s <= d; ++s) valence += drinfeld::gaussian_binomial(d + 1, s, p);
  bool homogeneous = true;
  for (std::size_t i = 0; i < b.vertices.size(); ++i)
    if (b.distance[i] < n) homogeneous = homogeneous && Integer(static_cast<unsigned long>(degree[i])) == valence;
  Json intermediate = Json::array();
  for (int k = 0; k < n; ++k)
    for (int m = 1; m <= d; ++m) intermediate.push_back({{"n", k}, {"m", m}, {"size", drinfeld::v_n_m(b, k, m).size()}});
  Json result = {{"d", d},
                 {"p", p},
                 {"radius", n},
                 {"neighbor_count", valence.get_str()},
                 {"ball_sizes", sizes},
                 {"vertices", vertices},
                 {"edges", edges},
                 {"intermediate_sets", intermediate}};
  return {{"result", result},
          {"clauses",
           {{"homogeneity",
             clause(homogeneous, "every interior vertex has one neighbour per nonzero proper subspace of F_p^(d+1)")}}}};
}

Json drinfeld_counts(const Json& in, const RunOptions&) {
  check_params(in, {"d", "q", "i"});
  const long d = param(in, "d", 1, 30);
  const long q = param(in, "q", 2, 1L << 30);
  const long i = param(in, "i", 1, d + 1);
  Json gauss = Json::array();
  for (long k = 0; k <= d + 1; ++k) gauss.push_back(drinfeld::gaussian_binomial(d + 1, k, q).get_str());
  // All flag signatures of length i-1, in lexicographic order.
  Json strata = Json::array();
  std::vector<long> sig;
  std::function<void(long)> walk = [&](long next) {
    if (static_cast<long>(sig.size()) == i - 1) {
      strata.push_back({{"signature", sig}, {"factor_dims", drinfeld::stratum_type(sig, d)}});
      return;
    }
    for (long x = next; x <= d; ++x) {
      sig.push_back(x);
      walk(x + 1);
      sig.pop_back();
    }
  };
  if (d <= 12) walk(1);
  Json result = {{"d", d},
                 {"q", q},
                 {"i", i},
                 {"simplices_through_vertex", drinfeld::simplices_through_vertex(d, q, i).get_str()},
                 {"gaussian_binomials", gauss},
                 {"stratum_types", strata}};
  return {{"result", result}, {"clauses", Json::object()}};
}

Json purity_table(drinfeld::SpaceKind kind, long r, const drinfeld::PoincarePoly& betti, const Integer& q, bool& ok) {
  Json out = Json::array();
  ok = true;
  for (long s = 1; s <= 3; ++s) {
    const Integer direct = drinfeld::point_count_oracle(kind, r, q, s);
    const Integer predicted = drinfeld::purity_count(kind, r, betti, q, s);
    ok = ok && direct == predicted;
    out.push_back({{"s", s}, {"point_count", direct.get_str()}, {"from_betti", predicted.get_str()}});
  }
  return out;
}

Json drinfeld_arrangement(const Json& in, const RunOptions& opts) {
  check_params(in, {"r", "q"});
  const long r = param(in, "r", 1, 12);
  const auto q = static_cast<unsigned>(param(in, "q", 2, 4096));
  const auto rep = drinfeld::rational_arrangement_poincare(r, q, opts.budget.value_or(20000));
  bool purity = false;
  Json counts = purity_table(drinfeld::SpaceKind::arrangement_complement, r, rep.betti, q, purity);
  const bool closed = rep.betti == drinfeld::arrangement_closed_form(r, q);
  Json result = {{"r", r},
                 {"q", q},
                 {"betti", poly_json(rep.betti)},
                 {"deletion_restriction", poly_json(rep.deletion_restriction)},
                 {"moebius", poly_json(rep.moebius)},
                 {"cross_check", rep.cross_check ? "pass" : "fail"},
                 {"frobenius_on_degree_m", "q^m"},
                 {"point_counts", counts}};
  Json clauses = {
      {"cross_check", clause(rep.cross_check, "deletion-restriction recursion agrees with the Moebius computation")},
      {"closed_form", clause(closed, "Betti numbers are the coefficients of prod_(k=1..r) (1 + q^k t)")},
      {"purity", clause(purity, "#U(F_(q^s)) = sum_m (-1)^m b_m q^(s(r-m)) for s = 1, 2, 3")}};
  return {{"result", result}, {"clauses", clauses}};
}

Json drinfeld_blowup(const Json& in, const RunOptions&) {
  check_params(in, {"r", "q"});
  const long r = param(in, "r", 0, 12);
  const Integer q(param(in, "q", 2, 1L << 20));
  const auto betti = drinfeld::blowup_poincare(r, q);
  bool purity = false;
  Json counts = purity_table(drinfeld::SpaceKind::iterated_blowup, r, betti, q, purity);
  Json result = {{"r", r}, {"q", q.get_str()}, {"betti", poly_json(betti)}, {"point_counts", counts}};
  Json clauses = {{"purity", clause(purity, "#B(F_(q^s)) = sum_k b_(2k) q^(sk) for s = 1, 2, 3")}};
  return {{"result", result}, {"clauses", clauses}};
}

using Handler = Json (*)(const Json&, const RunOptions&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"phin-analyze", phin_analyze},         {"phin-check-mw", phin_check_mw},
      {"phin-netcoh", phin_quotient},           {"ss-pages", ss_pages},
      {"ss-cech", ss_cech},                   {"ss-steenbrink", ss_steenbrink},
      {"drinfeld-ball", drinfeld_ball},       {"drinfeld-counts", drinfeld_counts},
      {"drinfeld-arrangement", drinfeld_arrangement}, {"drinfeld-blowup", drinfeld_blowup}};
  return table;
}

} // namespace

const std::vector<std::string>& file_commands() {
  static const std::vector<std::string> names = {"phin-analyze", "phin-check-mw", "phin-netcoh",
                                                 "ss-pages",     "ss-cech",       "ss-steenbrink"};
  return names;
}

const std::vector<std::string>& parameter_commands() {
  static const std::vector<std::string> names = {"drinfeld-ball", "drinfeld-counts", "drinfeld-arrangement",
                                                 "drinfeld-blowup"};
  return names;
}

Json execute(const std::string& command, const Json& input, const RunOptions& opts) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw InvalidInput("unknown command \"" + command + "\"");
  return it->second(input, opts);
}

Json report(const std::string& command, const Json& input, const RunOptions& opts) {
  Json body = execute(command, input, opts);
  body["schema"] = schema_version;
  body["command"] = command;
  body["input_hash"] = fnv1a_hex(input.dump());
  body["seed"] = opts.seed;
  if (opts.budget) body["budget"] = *opts.budget;
  return body;
}

RunResult run(const std::string& command, const std::string& input_text, const Json& params, const RunOptions& opts,
              const std::string& format) {
  RunResult res;
  auto fail = [&](int code, const std::string& kind, const std::string& name, const std::string& msg) {
    res.exit_code = code;
    Json err = {{"schema", schema_version}, {"command", command},
                {"error", {{"kind", kind}, {"name", name}, {"message", msg}}}, {"exit_code", code}};
    res.out = format == "text" ? to_text(err) : err.dump(2) + "\n";
    res.err = "phinkit: " + kind + ": " + msg + "\n";
  };
  try {
    const bool from_file =
        std::find(file_commands().begin(), file_commands().end(), command) != file_commands().end();
    const Json input = from_file ? parse_text(input_text) : params;
    const Json rep = report(command, input, opts);
    res.out = format == "text" ? to_text(rep) : rep.dump(2) + "\n";
  } catch (const InvalidInput& e) {
    fail(1, "invalid input", "", e.what());
  } catch (const PreconditionError& e) {
    fail(2, "precondition violation", e.name(), e.what());
  } catch (const CrossCheckError& e) {
    fail(3, "cross-check failure", "", e.what());
  } catch (const std::exception& e) {
    fail(3, "internal failure", "", e.what());
  }
  return res;
}

} // namespace phinkit::io
