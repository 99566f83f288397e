#include "gqs/cli.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "json.hpp"

#include "gqs/covariance.hpp"
#include "gqs/fock.hpp"
#include "gqs/purification.hpp"
#include "gqs/state.hpp"
#include "gqs/symmetry.hpp"
#include "gqs/symplectic.hpp"
#include "gqs/williamson.hpp"

namespace gqs::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail_schema(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const json& need(const json& o, const char* key, const char* where) {
  if (!o.is_object())
    fail_schema(std::string(where) + " must be an object");
  const auto it = o.find(key);
  if (it == o.end())
    fail_schema(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

void reject_unknown(const json& o, std::initializer_list<const char*> allowed,
                    const char* where) {
  if (!o.is_object()) fail_schema(std::string(where) + " must be an object");
  for (const auto& item : o.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return item.key() == a; });
    if (!known)
      fail_schema(std::string("unknown field '") + item.key() + "' in " + where);
  }
}

double number(const json& v, const char* what) {
  if (!v.is_number()) fail_schema(std::string(what) + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const char* what) {
  if (!v.is_number_integer()) fail_schema(std::string(what) + " must be an integer");
  return v.get<int>();
}

Complex parse_complex(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    fail_schema(std::string(what) + " must be a [re, im] pair");
  return {number(v[0], what), number(v[1], what)};
}

Vec parse_vec(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail_schema(std::string(what) + " must be a nonempty array of numbers");
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = number(v[i], what);
  return out;
}

CVec parse_cvec(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail_schema(std::string(what) + " must be a nonempty array of [re, im] pairs");
  CVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = parse_complex(v[i], what);
  return out;
}

Mat parse_mat(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail_schema(std::string(what) + " must be a nonempty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  if (cols == 0) fail_schema(std::string(what) + " rows must be nonempty arrays");
  Mat out(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!v[r].is_array() || v[r].size() != cols)
      fail_schema(std::string(what) + " must be rectangular");
    for (std::size_t c = 0; c < cols; ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          number(v[r][c], what);
  }
  return out;
}

json dump_vec(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json dump_cvec(const CVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(dump_complex(v(i)));
  return out;
}

json dump_mat(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json dump_cmat(const CMat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(dump_complex(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json dump_report(const MembershipReport& rep) {
  json out;
  out["member"] = rep.member;
  out["extreme"] = rep.extreme;
  out["d"] = dump_vec(rep.sympl_spectrum);
  out["min_eig_complex"] = rep.min_eig_complex;
  out["det"] = rep.det_value;
  out["det_bound"] = rep.det_bound;
  out["symmetry_residual"] = rep.symmetry_residual;
  return out;
}

json dump_state(const GaussianState& st) {
  json out;
  out["l"] = dump_vec(st.l);
  out["m"] = dump_vec(st.m);
  out["S"] = dump_mat(st.s);
  return out;
}

json dump_symmetry(const GaussianSymmetry& g) {
  json out;
  out["phase"] = dump_complex(g.phase);
  out["alpha"] = dump_cvec(g.alpha);
  out["L"] = dump_mat(g.l);
  return out;
}

GaussianState parse_state(const json& v, double tol) {
  reject_unknown(v, {"l", "m", "S"}, "state");
  return new_state(parse_vec(need(v, "l", "state"), "state.l"),
                   parse_vec(need(v, "m", "state"), "state.m"),
                   parse_mat(need(v, "S", "state"), "state.S"), tol);
}

GaussianSymmetry parse_symmetry(const json& v, double tol, const char* where) {
  reject_unknown(v, {"phase", "alpha", "L"}, where);
  return make_symmetry(parse_complex(need(v, "phase", where), "phase"),
                       parse_cvec(need(v, "alpha", where), "alpha"),
                       parse_mat(need(v, "L", where), "L"), tol);
}

int parse_cutoff(const json& payload) {
  const int cutoff = integer(need(payload, "cutoff", "payload"), "cutoff");
  if (cutoff < 1 || cutoff > 100) fail_schema("cutoff must lie in [1, 100]");
  return cutoff;
}

fock::FockOperator parse_rho(const json& v, int cutoff, bool allow_two_mode) {
  const json& kind_field = need(v, "kind", "rho");
  if (!kind_field.is_string()) fail_schema("rho.kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "vacuum") {
    reject_unknown(v, {"kind"}, "rho");
    return fock::vacuum_rho(cutoff);
  }
  if (kind == "thermal") {
    reject_unknown(v, {"kind", "s"}, "rho");
    const double s = number(need(v, "s", "rho"), "rho.s");
    if (!(s > 0.0)) fail_schema("rho.s must be positive");
    return fock::thermal_rho(s, cutoff);
  }
  if (kind == "coherent") {
    reject_unknown(v, {"kind", "alpha"}, "rho");
    const Complex alpha = parse_complex(need(v, "alpha", "rho"), "rho.alpha");
    const CVec psi = fock::displacement_op(alpha, cutoff).m.col(0);
    return {cutoff, 1, psi * psi.adjoint()};
  }
  if (kind == "squeezed") {
    reject_unknown(v, {"kind", "r", "phi"}, "rho");
    const double r = number(need(v, "r", "rho"), "rho.r");
    const double phi = number(need(v, "phi", "rho"), "rho.phi");
    const fock::FockOperator sq = fock::squeeze_op(r, phi, cutoff);
    const CVec psi = sq.m.col(0);
    fock::FockOperator out{cutoff, 1, psi * psi.adjoint()};
    out.range_flag = sq.range_flag;
    return out;
  }
  if (!allow_two_mode)
    fail_schema("rho.kind '" + kind + "' is not a single-mode recipe");
  if (kind == "purified_thermal") {
    reject_unknown(v, {"kind", "d"}, "rho");
    const double d = number(need(v, "d", "rho"), "rho.d");
    if (!(d > 0.5)) fail_schema("rho.d must exceed 1/2");
    return fock::purified_thermal_rho(d, cutoff);
  }
  if (kind == "product") {
    reject_unknown(v, {"kind", "a", "b"}, "rho");
    return fock::tensor(parse_rho(need(v, "a", "rho"), cutoff, false),
                        parse_rho(need(v, "b", "rho"), cutoff, false));
  }
  fail_schema("unknown rho.kind '" + kind + "'");
}

struct Outcome {
  json doc;
  int code = 0;
};

Outcome cmd_check(const json& payload, double tol) {
  reject_unknown(payload, {"S"}, "payload");
  const Mat s = parse_mat(need(payload, "S", "payload"), "S");
  const MembershipReport rep = kn_membership(s, tol);
  json out = dump_report(rep);
  out["tol"] = {{"sym", tol}, {"psd", tol_psd}, {"pure", tol_pure}};
  return {std::move(out), rep.member ? 0 : 2};
}

Outcome cmd_williamson(const json& payload, double tol) {
  reject_unknown(payload, {"A"}, "payload");
  const Mat a = parse_mat(need(payload, "A", "payload"), "A");
  const auto wd = williamson_decompose(a, tol);
  json out;
  out["M"] = dump_mat(wd.m);
  out["d"] = dump_vec(wd.d);
  out["residual"] = wd.residual;
  out["tol"] = {{"sym", tol}, {"recon", tol_recon}};
  return {std::move(out), 0};
}

Outcome cmd_decompose(const json& payload, double tol) {
  reject_unknown(payload, {"S"}, "payload");
  const Mat s = parse_mat(need(payload, "S", "payload"), "S");
  const auto ed = extreme_decompose(s, tol);
  json out;
  out["L"] = dump_mat(ed.l);
  out["M"] = dump_mat(ed.m);
  out["residual"] = ed.residual;
  out["tol"] = {{"sym", tol}, {"recon", tol_recon}};
  return {std::move(out), 0};
}

Outcome cmd_state_chf(const json& payload, double tol) {
  reject_unknown(payload, {"state", "alpha"}, "payload");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  const CVec alpha = parse_cvec(need(payload, "alpha", "payload"), "alpha");
  json out;
  out["chf"] = dump_complex(chf(st, alpha));
  out["tol"] = {{"sym", tol}};
  return {std::move(out), 0};
}

Outcome cmd_state_spectrum(const json& payload, double tol) {
  reject_unknown(payload, {"state", "k"}, "payload");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  const int k = integer(need(payload, "k", "payload"), "k");
  if (k < 1 || k > 100000) fail_schema("k must lie in [1, 100000]");
  const StateSpectrum spec = state_spectrum(st, k);
  json eigs = json::array();
  for (const auto& [value, occ] : spec.top_eigenvalues) {
    json entry;
    entry["value"] = value;
    entry["k"] = occ;
    eigs.push_back(std::move(entry));
  }
  json out;
  out["s_params"] = dump_vec(spec.s_params);
  out["pure_modes"] = spec.pure_mode_count;
  out["eigenvalues"] = std::move(eigs);
  out["tol"] = {{"sym", tol}, {"pure", tol_pure}};
  return {std::move(out), 0};
}

Outcome cmd_state_entropy(const json& payload, double tol) {
  reject_unknown(payload, {"state"}, "payload");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  const EntropyPurity ep = entropy_purity(st);
  json out;
  out["entropy"] = ep.entropy;
  out["purity"] = ep.purity;
  out["tol"] = {{"sym", tol}, {"pure", tol_pure}};
  return {std::move(out), 0};
}

Outcome cmd_state_wave(const json& payload, double tol) {
  reject_unknown(payload, {"state"}, "payload");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  const PureWaveParams wp = pure_wave_params(st);
  json out;
  out["alpha"] = dump_cvec(wp.alpha);
  out["U"] = dump_cmat(wp.u);
  out["lambdas"] = dump_vec(wp.lambdas);
  out["residual"] = wp.residual;
  out["tol"] = {{"sym", tol}, {"recon", tol_recon}, {"pure", tol_pure}};
  return {std::move(out), 0};
}

Outcome cmd_act(const json& payload, double tol) {
  reject_unknown(payload, {"g", "state"}, "payload");
  const GaussianSymmetry g = parse_symmetry(need(payload, "g", "payload"), tol, "g");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  json out = dump_state(act_on_state(g, st));
  out["tol"] = {{"sym", tol}};
  return {std::move(out), 0};
}

Outcome cmd_compose(const json& payload, double tol) {
  reject_unknown(payload, {"g1", "g2"}, "payload");
  const GaussianSymmetry g1 = parse_symmetry(need(payload, "g1", "payload"), tol, "g1");
  const GaussianSymmetry g2 = parse_symmetry(need(payload, "g2", "payload"), tol, "g2");
  json out = dump_symmetry(compose(g1, g2));
  out["tol"] = {{"sym", tol}};
  return {std::move(out), 0};
}

Outcome cmd_purify(const json& payload, double tol) {
  reject_unknown(payload, {"state"}, "payload");
  const GaussianState st = parse_state(need(payload, "state", "payload"), tol);
  const PurificationResult pr = purify(st);
  json out;
  out["pure_state"] = dump_state(pr.pure_state);
  out["L1"] = dump_mat(pr.factor_l1);
  out["L2"] = dump_mat(pr.factor_l2);
  out["symmetry"] = dump_symmetry(pr.symmetry);
  out["marginal_residual"] = pr.marginal_residual;
  out["tol"] = {{"sym", tol}, {"recon", tol_recon}};
  return {std::move(out), 0};
}

Outcome cmd_oracle_chf(const json& payload, double /*tol*/) {
  reject_unknown(payload, {"rho", "cutoff", "alpha"}, "payload");
  const int cutoff = parse_cutoff(payload);
  const fock::FockOperator rho = parse_rho(need(payload, "rho", "payload"), cutoff, true);
  const CVec alpha = parse_cvec(need(payload, "alpha", "payload"), "alpha");
  if (alpha.size() != rho.modes) fail_schema("alpha length must match the rho mode count");
  const fock::OracleChf result = fock::oracle_chf(rho, alpha);
  json out;
  out["value"] = dump_complex(result.value);
  out["trace"] = result.trace;
  out["trace_ok"] = result.trace_ok;
  out["range_flag"] = rho.range_flag;
  return {std::move(out), 0};
}

Outcome cmd_oracle_spectrum(const json& payload, double /*tol*/) {
  reject_unknown(payload, {"rho", "cutoff", "k"}, "payload");
  const int cutoff = parse_cutoff(payload);
  const fock::FockOperator rho = parse_rho(need(payload, "rho", "payload"), cutoff, true);
  const int k = integer(need(payload, "k", "payload"), "k");
  if (k < 1) fail_schema("k must be positive");
  CMat h = 0.5 * (rho.m + rho.m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw domain_error("oracle spectrum: eigensolve failed");
  Vec eigs = es.eigenvalues().reverse();
  const int take = std::min<int>(k, static_cast<int>(eigs.size()));
  json out;
  out["eigenvalues"] = dump_vec(eigs.head(take));
  out["trace"] = rho.m.trace().real();
  out["range_flag"] = rho.range_flag;
  return {std::move(out), 0};
}

Outcome cmd_oracle_ptrace(const json& payload, double /*tol*/) {
  reject_unknown(payload, {"rho", "cutoff", "keep"}, "payload");
  const int cutoff = parse_cutoff(payload);
  const fock::FockOperator rho = parse_rho(need(payload, "rho", "payload"), cutoff, true);
  if (rho.modes != 2) fail_schema("oracle ptrace expects a two-mode rho");
  const int keep = integer(need(payload, "keep", "payload"), "keep");
  if (keep != 1 && keep != 2) fail_schema("keep must be 1 or 2");
  const fock::FockOperator red = fock::partial_trace(rho, keep);
  json out;
  out["rho"] = dump_cmat(red.m);
  out["trace"] = red.m.trace().real();
  out["range_flag"] = red.range_flag;
  return {std::move(out), 0};
}

Outcome dispatch(const std::string& command, const json& payload, double tol) {
  if (command == "check") return cmd_check(payload, tol);
  if (command == "williamson") return cmd_williamson(payload, tol);
  if (command == "decompose") return cmd_decompose(payload, tol);
  if (command == "state chf") return cmd_state_chf(payload, tol);
  if (command == "state spectrum") return cmd_state_spectrum(payload, tol);
  if (command == "state entropy") return cmd_state_entropy(payload, tol);
  if (command == "state wave") return cmd_state_wave(payload, tol);
  if (command == "act") return cmd_act(payload, tol);
  if (command == "compose") return cmd_compose(payload, tol);
  if (command == "purify") return cmd_purify(payload, tol);
  if (command == "oracle chf") return cmd_oracle_chf(payload, tol);
  if (command == "oracle spectrum") return cmd_oracle_spectrum(payload, tol);
  if (command == "oracle ptrace") return cmd_oracle_ptrace(payload, tol);
  fail_schema("unknown command '" + command + "'");
}

}  // namespace

Result execute(const std::string& envelope_text, std::optional<double> tol_override,
               std::optional<std::uint64_t> seed) {
  (void)seed;  // reserved: no dispatched command samples
  Result res;
  try {
    const json env = json::parse(envelope_text);
    if (!env.is_object()) fail_schema("envelope must be an object");
    reject_unknown(env, {"command", "payload", "tolerances"}, "envelope");
    const json& cmd_field = need(env, "command", "envelope");
    if (!cmd_field.is_string()) fail_schema("command must be a string");
    const json& payload = need(env, "payload", "envelope");
    if (!payload.is_object()) fail_schema("payload must be an object");

    double tol = tol_sym;
    if (env.contains("tolerances")) {
      const json& t = env.at("tolerances");
      reject_unknown(t, {"sym"}, "tolerances");
      if (t.contains("sym")) {
        tol = number(t.at("sym"), "tolerances.sym");
        if (!(tol > 0.0)) fail_schema("tolerances.sym must be positive");
      }
    }
    if (tol_override) {
      if (!(*tol_override > 0.0)) fail_schema("--tol must be positive");
      tol = *tol_override;
    }

    Outcome oc = dispatch(cmd_field.get<std::string>(), payload, tol);
    res.output = oc.doc.dump() + "\n";
    res.exit_code = oc.code;
    if (oc.code != 0) res.diagnostic = "domain rejection: input is outside the admissible set";
  } catch (const membership_error& e) {
    json out;
    out["error"] = e.what();
    out["report"] = dump_report(e.report());
    res.output = out.dump() + "\n";
    res.diagnostic = e.what();
    res.exit_code = 2;
  } catch (const domain_error& e) {
    json out;
    out["error"] = e.what();
    res.output = out.dump() + "\n";
    res.diagnostic = e.what();
    res.exit_code = 2;
  } catch (const std::exception& e) {
    res.output.clear();
    res.diagnostic = e.what();
    res.exit_code = 1;
  }
  return res;
}

}  // namespace gqs::cli
