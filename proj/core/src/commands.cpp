// Copyright 2026 The dhlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dhlab/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dhlab/construct.hpp"
#include "dhlab/dh.hpp"
#include "dhlab/exactlin.hpp"
#include "dhlab/lefschetz.hpp"
#include "dhlab/polynomial.hpp"
#include "dhlab/wallcross.hpp"

namespace dhlab::commands {

namespace {

using polycert::Interval;
using polycert::Polynomial;
using polycert::SignVerdict;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    parse_fail(std::string("missing field '") + name + "'");
  return obj.at(name);
}

Rational rational_from(const json& v, const char* name) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Rational::from_string(v.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      parse_fail(std::string(name) + ": " + ex.what());
    }
  }
  parse_fail(std::string(name) + ": expected an integer or a 'p/q' string");
}

Integer integer_from(const json& v, const char* name) {
  const Rational r = rational_from(v, name);
  if (!r.is_integer()) parse_fail(std::string(name) + ": expected an integer");
  return r.numerator();
}

Vec vec_from(const json& v, const char* name) {
  if (!v.is_array()) parse_fail(std::string(name) + ": expected an array");
  Vec out;
  for (const auto& x : v) out.push_back(rational_from(x, name));
  return out;
}

exactlin::SymmetricForm form_from(const json& v, const char* name) {
  if (!v.is_array() || v.empty())
    parse_fail(std::string(name) + ": expected a non-empty square matrix");
  std::vector<std::vector<Integer>> entries;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != v.size())
      parse_fail(std::string(name) + ": matrix is not square");
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from(x, name));
    entries.push_back(std::move(r));
  }
  return exactlin::SymmetricForm(std::move(entries));
}

Interval interval_from(const json& v, const char* name) {
  if (!v.is_array() || v.size() != 2)
    parse_fail(std::string(name) + ": expected [lower, upper]");
  Interval out;
  if (!(v[0].is_string() && v[0].get<std::string>() == "-inf"))
    out.lower = rational_from(v[0], name);
  if (!(v[1].is_string() && v[1].get<std::string>() == "inf"))
    out.upper = rational_from(v[1], name);
  if (out.lower && out.upper && !(*out.lower < *out.upper))
    parse_fail(std::string(name) + ": lower must be below upper");
  return out;
}

Polynomial poly_from(const json& v, const char* name) {
  return Polynomial(vec_from(v, name));
}

json rational_to(const Rational& r) { return r.to_string(); }

json vec_to(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to(x));
  return out;
}

json interval_to(const Interval& range) {
  return json::array({range.lower ? rational_to(*range.lower) : json("-inf"),
                      range.upper ? rational_to(*range.upper) : json("inf")});
}

json poly_to(const Polynomial& p) {
  json out = json::object();
  out["coefficients"] = vec_to(p.coefficients());
  out["text"] = p.to_string();
  return out;
}

json verdict_to(const SignVerdict& verdict) {
  json out = json::object();
  out["kind"] = polycert::sign_kind_name(verdict.kind);
  json ws = json::array();
  for (const auto& [t, v] : verdict.witnesses)
    ws.push_back(json::array({rational_to(t), rational_to(v)}));
  out["witnesses"] = ws;
  return out;
}

const json& payload_of(const json& input, const char* expected_kind) {
  if (!input.is_object()) parse_fail("input document must be a JSON object");
  if (!input.contains("version") || !input.at("version").is_string())
    parse_fail("missing mandatory 'version' field");
  if (field(input, "kind") != expected_kind)
    parse_fail(std::string("expected kind '") + expected_kind + "', got '" +
               field(input, "kind").dump() + "'");
  return field(input, "payload");
}

json report_head(const char* kind) {
  json out = json::object();
  out["version"] = "1";
  out["kind"] = kind;
  return out;
}

dhcore::DHProfile profile_from_payload(const json& payload) {
  dhcore::DHProfile profile;
  if (payload.contains("components")) {
    std::vector<dhcore::ReducedComponentData> components;
    for (const auto& c : field(payload, "components"))
      components.push_back({form_from(field(c, "form"), "form"),
                            vec_from(field(c, "omega"), "omega"),
                            vec_from(field(c, "chern"), "chern"),
                            interval_from(field(c, "interval"), "interval")});
    profile = dhcore::profile_from_components(components);
  } else if (payload.contains("pieces")) {
    for (const auto& p : field(payload, "pieces"))
      profile.pieces.push_back(
          {interval_from(field(p, "interval"), "interval"),
           poly_from(field(p, "coefficients"), "coefficients")});
    for (std::size_t i = 0; i + 1 < profile.pieces.size(); ++i) {
      const auto& up = profile.pieces[i].first.upper;
      const auto& lo = profile.pieces[i + 1].first.lower;
      if (!up || !lo || *up != *lo)
        parse_fail("piece intervals must abut at shared walls");
      profile.walls.push_back(*up);
    }
  } else {
    parse_fail("dh_profile payload needs 'components' or 'pieces'");
  }
  return profile;
}

json dh_report_from_profile(const dhcore::DHProfile& profile) {
  const dhcore::LogConcavityReport result = dhcore::log_concavity_verdict(profile);
  json report = report_head("dh_report");
  json pieces = json::array();
  for (std::size_t i = 0; i < profile.pieces.size(); ++i) {
    json piece = json::object();
    piece["interval"] = interval_to(profile.pieces[i].first);
    piece["density"] = poly_to(profile.pieces[i].second);
    piece["defect"] = poly_to(
        polycert::logconcavity_defect(profile.pieces[i].second));
    piece["defect_sign"] = verdict_to(result.per_piece[i]);
    pieces.push_back(piece);
  }
  report["pieces"] = pieces;
  json walls = json::array();
  for (const auto& check : result.wall_checks) {
    json w = json::object();
    w["wall"] = rational_to(check.wall);
    w["left_derivative"] = rational_to(check.left_derivative);
    w["right_derivative"] = rational_to(check.right_derivative);
    w["pass"] = check.pass;
    w["boundary"] = check.boundary;
    walls.push_back(w);
  }
  report["wall_checks"] = walls;
  report["verdict"] = dhcore::verdict_name(result.verdict);
  return report;
}

lefschetz::FourManifoldRing ring_from(const json& v) {
  lefschetz::FourManifoldRing ring{
      field(v, "b1").get<std::size_t>(),
      field(v, "b2").get<std::size_t>(),
      {},
      {},
      form_from(field(v, "form"), "form"),
      v.contains("volume_normalization")
          ? rational_from(v.at("volume_normalization"), "volume_normalization")
          : Rational(1)};
  if (v.contains("cup_12_3"))
    for (const auto& slab : v.at("cup_12_3")) {
      std::vector<Vec> s;
      for (const auto& fiber : slab) s.push_back(vec_from(fiber, "cup_12_3"));
      ring.cup_12_3.push_back(std::move(s));
    }
  if (v.contains("pairing_13"))
    for (const auto& row : v.at("pairing_13"))
      ring.pairing_13.push_back(vec_from(row, "pairing_13"));
  return ring;
}

}  // namespace

json cmd_sig(const json& input) {
  const json& payload = payload_of(input, "form");
  const auto result = exactlin::inertia(form_from(field(payload, "matrix"), "matrix"));
  json report = report_head("sig_report");
  report["b_plus"] = result.b_plus;
  report["b_minus"] = result.b_minus;
  report["b_zero"] = result.b_zero;
  report["signature"] = result.signature;
  return report;
}

json cmd_counterexample(const json& input) {
  const json& payload = payload_of(input, "counterexample");
  construct::CounterexampleInput cx{
      form_from(field(payload, "matrix"), "matrix"),
      vec_from(field(payload, "omega0"), "omega0"),
      payload.contains("name") ? payload.at("name").get<std::string>() : ""};
  const auto result = construct::build_counterexample(cx);

  dhcore::DHProfile profile;
  profile.pieces.push_back({result.interval, result.density});
  const auto verdict = dhcore::log_concavity_verdict(profile);

  json report = report_head("counterexample_report");
  report["name"] = result.name;
  report["c"] = vec_to(result.c);
  report["epsilon"] = rational_to(result.epsilon);
  report["interval"] = interval_to(result.interval);
  report["density"] = poly_to(result.density);
  report["defect"] = poly_to(result.defect);
  report["certificate"] = verdict_to(result.certificate);
  report["verdict"] = dhcore::verdict_name(verdict.verdict);
  return report;
}

json cmd_dh(const json& input) {
  return dh_report_from_profile(profile_from_payload(payload_of(input, "dh_profile")));
}

json cmd_walls(const json& input, bool strict_taxonomy) {
  const json& payload = payload_of(input, "wallcross_spec");
  wallcross::MomentProfileSpec spec;
  spec.ambient_dimension = payload.contains("ambient_dimension")
                               ? field(payload, "ambient_dimension").get<std::size_t>()
                               : 6;
  for (const auto& level : field(payload, "critical_levels")) {
    wallcross::CriticalLevelData l;
    l.value = rational_from(field(level, "value"), "value");
    for (const auto& s : field(level, "strata")) {
      wallcross::CriticalStratumData stratum;
      stratum.label = field(s, "label").get<std::string>();
      stratum.dimension = field(s, "dimension").get<std::size_t>();
      const auto& hess = field(s, "hessian");
      if (!hess.is_array() || hess.size() != 2)
        parse_fail("hessian: expected [2f, 2b]");
      stratum.two_f = hess[0].get<std::size_t>();
      stratum.two_b = hess[1].get<std::size_t>();
      stratum.signature = field(s, "signature").get<long long>();
      stratum.poincare = poly_from(field(s, "poincare"), "poincare");
      l.strata.push_back(std::move(stratum));
    }
    spec.critical_levels.push_back(std::move(l));
  }
  const auto& initial = field(payload, "initial");
  spec.initial.signature = field(initial, "signature").get<long long>();
  spec.initial.poincare = poly_from(field(initial, "poincare"), "poincare");
  if (payload.contains("strict_taxonomy"))
    strict_taxonomy = payload.at("strict_taxonomy").get<bool>();

  const auto result = wallcross::bplus_constancy_check(spec, strict_taxonomy);
  json report = report_head("walls_report");
  report["constant"] = result.constant;
  json profiles = json::array();
  for (const auto& profile : result.profiles) {
    json p = json::object();
    p["interval"] = interval_to(profile.interval);
    p["signature"] = profile.signature;
    p["poincare"] = vec_to(profile.poincare.coefficients());
    p["b2"] = profile.b2;
    p["b_plus"] = rational_to(profile.b_plus);
    p["palindromic"] = profile.palindromic;
    profiles.push_back(p);
  }
  report["profiles"] = profiles;
  report["sigma_b2_change"] = result.sigma_b2_change;
  return report;
}

json cmd_hl(const json& input) {
  const json& payload = payload_of(input, "hl_data");
  lefschetz::SixManifoldLefschetzData data{
      ring_from(field(payload, "ring")),
      vec_from(field(payload, "omega0"), "omega0"),
      vec_from(field(payload, "beta2"), "beta2"),
      rational_from(field(payload, "beta4"), "beta4"),
      Rational(1)};
  json report = report_head("hl_report");
  if (payload.contains("epsilon") && !payload.at("epsilon").is_null()) {
    data.epsilon = rational_from(payload.at("epsilon"), "epsilon");
  } else {
    const unsigned bound = payload.contains("epsilon_bound")
                               ? payload.at("epsilon_bound").get<unsigned>()
                               : 1000;
    std::optional<Rational> extra;
    if (payload.contains("extra_qcc"))
      extra = rational_from(payload.at("extra_qcc"), "extra_qcc");
    data.epsilon = lefschetz::find_hl_epsilon(data.ring, data.omega0, data.beta2,
                                              data.beta4, bound, extra);
    report["epsilon_found"] = true;
  }
  const auto verdict = lefschetz::check_hl_six(data);
  report["epsilon"] = rational_to(data.epsilon);
  report["map1_injective"] = verdict.map1_injective;
  report["map2_injective"] = verdict.map2_injective;
  report["det_nonzero"] = verdict.det_nonzero;
  report["neq1_holds"] = verdict.neq1_holds;
  report["overall"] = verdict.overall;
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) witnesses.push_back(vec_to(w));
  report["witnesses"] = witnesses;
  return report;
}

namespace {

std::string decimal12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void plot_piece(const Interval& interval, const Polynomial& density,
                unsigned resolution, std::string& out) {
  if (!interval.lower || !interval.upper)
    parse_fail("plot requires finite piece intervals");
  const Polynomial defect = polycert::logconcavity_defect(density);
  out += "# piece on " + interval.lower->to_string() + " .. " +
         interval.upper->to_string() + "\n";
  const Rational width = *interval.upper - *interval.lower;
  for (unsigned i = 1; i <= resolution; ++i) {
    const Rational t = *interval.lower +
                       width * Rational(static_cast<long>(i)) /
                           Rational(static_cast<long>(resolution + 1));
    const Rational f = density(t);
    if (f.sign() <= 0)
      throw Error(ErrorCode::NonPositiveDensity,
                  "density not positive at t = " + t.to_string());
    out += decimal12(t.to_double()) + "\t" + decimal12(f.to_double()) + "\t" +
           decimal12(std::log(f.to_double())) + "\t" +
           decimal12(defect(t).to_double()) + "\n";
  }
}

}  // namespace

std::string cmd_plot(const json& report, unsigned resolution) {
  if (resolution == 0) parse_fail("plot resolution must be positive");
  std::string out = "t\tf\tln_f\th\n";
  const std::string kind =
      field(report, "kind").is_string() ? report.at("kind").get<std::string>() : "";
  if (kind == "counterexample_report") {
    plot_piece(interval_from(field(report, "interval"), "interval"),
               poly_from(field(field(report, "density"), "coefficients"),
                         "density"),
               resolution, out);
  } else if (kind == "dh_report") {
    for (const auto& piece : field(report, "pieces"))
      plot_piece(interval_from(field(piece, "interval"), "interval"),
                 poly_from(field(field(piece, "density"), "coefficients"),
                           "density"),
                 resolution, out);
  } else {
    parse_fail("plot needs a counterexample or dh report document");
  }
  return out;
}

int exit_code_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::CertificateFailed:
    case ErrorCode::InternalInconsistency:
    case ErrorCode::InternalDivisionInexact:
      return 3;
    default:
      return 2;
  }
}

}  // namespace dhlab::commands
