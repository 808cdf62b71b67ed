#include "doctest.h"

#include <functional>
#include <string>

#include "gvkit/expansions.hpp"
#include "gvkit/json_io.hpp"

using gvkit::Backend;
using gvkit::BpsTable;
using gvkit::Coords;
using gvkit::ElemSeries;
using gvkit::Error;
using gvkit::ErrorKind;
using gvkit::FanoSeries;
using gvkit::Json;
using gvkit::LatticeContext;
using gvkit::NovikovSeries;
using gvkit::QLaurent;
using gvkit::Rational;
using gvkit::TLaurent;

namespace {

bool schema_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::SchemaError;
  }
  return false;
}

}  // namespace

TEST_CASE("rationals travel as strings") {
  Rational r(-22, 7);
  Json j = gvkit::to_json(r);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "-22/7");
  CHECK(gvkit::rational_from_json(j) == r);
  CHECK(gvkit::rational_from_json(Json("360")) == Rational(360));
  CHECK(schema_error([] { gvkit::rational_from_json(Json("1.5")); }));
  CHECK(schema_error([] { gvkit::rational_from_json(Json("1/0")); }));
  CHECK(schema_error([] { gvkit::rational_from_json(Json(3)); }));
}

TEST_CASE("Laurent polynomial round trips") {
  QLaurent p = gvkit::q_power_bracket(2, 3) + QLaurent::monomial(-7, Rational(5, 3));
  CHECK(gvkit::qlaurent_from_json(gvkit::to_json(p)) == p);
  CHECK(gvkit::qlaurent_from_json(gvkit::to_json(QLaurent())) == QLaurent());

  TLaurent t = gvkit::sin_half_power(2, 0, 8);
  TLaurent back = gvkit::tlaurent_from_json(gvkit::to_json(t));
  CHECK(back == t);
  CHECK(back.min_exp() == t.min_exp());
  CHECK(back.known_to() == t.known_to());

  // a window with no nonzero coefficients still round-trips its bounds
  TLaurent z = TLaurent::zero_to(4);
  TLaurent zb = gvkit::tlaurent_from_json(gvkit::to_json(z));
  CHECK(zb.known_zero());
  CHECK(zb.known_to() == 4);
}

TEST_CASE("malformed Laurent data") {
  CHECK(schema_error([] { gvkit::qlaurent_from_json(Json{{"x", "1"}}); }));
  // odd exponent keys are rejected for t-series
  Json t;
  t["min_exp"] = 1;
  t["trunc"] = 5;
  t["coeffs"] = Json::array({"1", "2"});
  CHECK(schema_error([&] { gvkit::tlaurent_from_json(t); }));
  // coefficient count must match the window
  Json t2;
  t2["min_exp"] = 0;
  t2["trunc"] = 6;
  t2["coeffs"] = Json::array({"1", "2"});
  CHECK(schema_error([&] { gvkit::tlaurent_from_json(t2); }));
  Json t3;
  t3["min_exp"] = 0;
  t3["coeffs"] = Json::array();
  CHECK(schema_error([&] { gvkit::tlaurent_from_json(t3); }));  // missing key
}

TEST_CASE("elementary series round trips in both backends") {
  ElemSeries zq = gvkit::z_elem(2, 3, Backend::Q);
  ElemSeries back = gvkit::elem_from_json(gvkit::to_json(zq));
  CHECK(back.genus == zq.genus);
  CHECK(back.q_degree == zq.q_degree);
  CHECK(back.backend == Backend::Q);
  CHECK(back.is_log == zq.is_log);
  for (int d = 0; d <= 3; ++d) CHECK(back.qc(d) == zq.qc(d));

  ElemSeries gt = gvkit::gw_elem(0, 3, Backend::T, 8);
  ElemSeries gback = gvkit::elem_from_json(gvkit::to_json(gt));
  CHECK(gback.backend == Backend::T);
  CHECK(gback.t_order == gt.t_order);
  CHECK(gback.is_log);
  for (int d = 0; d <= 3; ++d) CHECK(gback.tc(d) == gt.tc(d));

  // degree labels must match positions
  Json j = gvkit::to_json(zq);
  j["coeffs"][1]["d"] = 2;
  CHECK(schema_error([&] { gvkit::elem_from_json(j); }));
}

TEST_CASE("term tables round trip with context") {
  auto plane = LatticeContext::make(2, {Rational(1), Rational(1, 2)});
  NovikovSeries s(plane, Rational(3), 2);
  s.add({1, 0}, 0, Rational(-5));
  s.add({0, 2}, 2, Rational(7, 2));
  NovikovSeries back = gvkit::series_from_json(gvkit::series_to_json(s));
  CHECK(back == s);
  CHECK(back.context().same_as(s.context()));
  CHECK(back.energy() == s.energy());
  CHECK(back.index_max() == s.index_max());

  BpsTable n(LatticeContext::line(), Rational(4), 1);
  n.add({3}, 1, Rational(9));
  BpsTable nb = gvkit::bps_from_json(gvkit::bps_to_json(n));
  CHECK(nb == n);

  // the two schemas are deliberately incompatible
  CHECK(schema_error([&] { gvkit::bps_from_json(gvkit::series_to_json(s)); }));
  CHECK(schema_error([&] { gvkit::series_from_json(gvkit::bps_to_json(n)); }));
}

TEST_CASE("Fano series carry their Chern form and insertions") {
  FanoSeries f{
      NovikovSeries(LatticeContext::make(2, {Rational(1), Rational(1)}),
                    Rational(2), 1),
      {3, 2},
      {2, 4}};
  f.series.add({1, 0}, 0, Rational(5));
  FanoSeries back = gvkit::fano_from_json(gvkit::to_json(f));
  CHECK(back.series == f.series);
  CHECK(back.chern == f.chern);
  CHECK(back.insertions == f.insertions);

  Json j = gvkit::to_json(f);
  j["chern"] = Json::array({1});  // rank mismatch
  CHECK(schema_error([&] { gvkit::fano_from_json(j); }));
}

TEST_CASE("local tables and reports") {
  gvkit::LocalBps b = gvkit::local_bps(2, 3);
  gvkit::LocalBps back = gvkit::local_bps_from_json(gvkit::to_json(b));
  CHECK(back.genus == b.genus);
  CHECK(back.q_degree == b.q_degree);
  CHECK(back.h_max == b.h_max);
  CHECK(back.table == b.table);

  gvkit::LocalReport r = gvkit::check_local_bps(1, 4);
  Json jr = gvkit::to_json(r);
  CHECK(jr["pass"].get<bool>());
  CHECK(jr["violations"].is_array());
  CHECK(jr["violations"].empty());
  CHECK(jr["support"].size() == 4);
}

TEST_CASE("pipeline reports") {
  auto ctx = LatticeContext::line();
  NovikovSeries gw(ctx, Rational(2), 2);
  auto w = gvkit::gw_elem_t(2, 2, 8);
  for (int d = 1; d <= 2; ++d)
    for (int g = 0; g <= 2; ++g) gw.add({d}, g, w[d].coeff(2 * g - 2));
  gvkit::PipelineReport rep = gvkit::full_pipeline(gw, 8);
  Json j = gvkit::to_json(rep);
  CHECK(j["integral"].get<bool>());
  CHECK(j["cross_check"].get<std::string>() == "agree");
  CHECK(j["violations"].empty());
  CHECK(j["elem_counts"]["terms"].size() == 1);
}

TEST_CASE("canonical text form") {
  Json j;
  j["b"] = "2";
  j["a"] = "1";
  std::string s = gvkit::dump_json(j);
  CHECK(s.back() == '\n');
  // ordered_json preserves insertion order, so "b" stays first
  CHECK(s.find("\"b\"") < s.find("\"a\""));
  CHECK(gvkit::dump_json(gvkit::parse_json(s)) == s);
  CHECK(schema_error([] { gvkit::parse_json("{"); }));
  CHECK(schema_error([] { gvkit::parse_json(""); }));
}

TEST_CASE("error objects") {
  Json e = gvkit::error_json("schema_error", "bad input");
  CHECK(e["error"]["kind"] == "schema_error");
  CHECK(e["error"]["message"] == "bad input");
  try {
    gvkit::fail(ErrorKind::DomainError, "zero class");
  } catch (const Error& err) {
    Json f = gvkit::error_json(err);
    CHECK(f["error"]["kind"] == "domain_error");
    CHECK(f["error"]["message"] == "zero class");
  }
}
