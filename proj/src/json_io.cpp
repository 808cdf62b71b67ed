#include "gvkit/json_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <utility>
#include <vector>

#include "gvkit/errors.hpp"

namespace gvkit {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  fail(ErrorKind::SchemaError, msg);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object())
    bad("expected an object carrying '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing key '" + std::string(key) + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const std::string& as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::int64_t parse_exponent(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  std::int64_t v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || errno != 0 || end != s.c_str() + s.size())
    bad("malformed exponent key '" + s + "'");
  return v;
}

Coords coords_from_json(const Json& j) {
  Coords a;
  for (const Json& x : as_array(j, "class")) a.push_back(as_int(x, "class entry"));
  return a;
}

Json table_to_json(const TermTable& t, const char* index_key,
                   const char* index_max_key) {
  Json out;
  out["rank"] = t.context().rank;
  Json weights = Json::array();
  for (const Rational& w : t.context().weights) weights.push_back(w.to_string());
  out["area_weights"] = std::move(weights);
  out["energy"] = t.energy().to_string();
  out[index_max_key] = t.index_max();
  Json terms = Json::array();
  for (const auto& [key, val] : t.terms()) {
    Json item;
    item["class"] = key.coords;
    item[index_key] = key.index;
    item["coeff"] = val.to_string();
    terms.push_back(std::move(item));
  }
  out["terms"] = std::move(terms);
  return out;
}

TermTable table_from_json(const Json& j, const char* index_key,
                          const char* index_max_key) {
  const int rank = static_cast<int>(as_int(field(j, "rank"), "rank"));
  std::vector<Rational> weights;
  for (const Json& w : as_array(field(j, "area_weights"), "area_weights"))
    weights.push_back(Rational::from_string(as_string(w, "area weight")));
  auto ctx = LatticeContext::make(rank, std::move(weights));
  const Rational energy =
      Rational::from_string(as_string(field(j, "energy"), "energy"));
  const int index_max =
      static_cast<int>(as_int(field(j, index_max_key), index_max_key));
  TermTable t(ctx, energy, index_max);
  for (const Json& item : as_array(field(j, "terms"), "terms")) {
    const Coords a = coords_from_json(field(item, "class"));
    const int index = static_cast<int>(as_int(field(item, index_key), index_key));
    t.set(a, index,
          Rational::from_string(as_string(field(item, "coeff"), "coeff")));
  }
  return t;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const QLaurent& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.to_string();
  return out;
}

Json to_json(const TLaurent& p) {
  Json out;
  out["min_exp"] = p.min_exp();
  out["trunc"] = p.known_to();
  Json coeffs = Json::array();
  for (std::int64_t e = p.min_exp(); e < p.known_to(); e += 2)
    coeffs.push_back(p.coeff(e).to_string());
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const ElemSeries& s) {
  Json out;
  out["series"] = s.is_log ? "gw" : "z";
  out["genus"] = s.genus;
  out["qdeg"] = s.q_degree;
  out["backend"] = s.backend == Backend::Q ? "q" : "t";
  if (s.backend == Backend::T) out["t_order"] = s.t_order;
  Json coeffs = Json::array();
  for (int d = 0; d <= s.q_degree; ++d) {
    Json item;
    item["d"] = d;
    item["poly"] = s.backend == Backend::Q ? to_json(s.qc(d)) : to_json(s.tc(d));
    coeffs.push_back(std::move(item));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const LocalBps& b) {
  Json out;
  out["genus"] = b.genus;
  out["qdeg"] = b.q_degree;
  out["h_max"] = b.h_max;
  Json terms = Json::array();
  for (const auto& [dh, val] : b.table) {
    Json item;
    item["d"] = dh.first;
    item["h"] = dh.second;
    item["value"] = val.to_string();
    terms.push_back(std::move(item));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const LocalReport& r) {
  Json out;
  out["genus"] = r.genus;
  out["qdeg"] = r.q_degree;
  out["h_max"] = r.h_max;
  out["pass"] = r.pass;
  Json support = Json::array();
  for (const auto& [dh, val] : r.bps.table) {
    Json item;
    item["d"] = dh.first;
    item["h"] = dh.second;
    item["value"] = val.to_string();
    support.push_back(std::move(item));
  }
  out["support"] = std::move(support);
  Json violations = Json::array();
  for (const LocalViolation& v : r.violations) {
    Json item;
    item["d"] = v.d;
    item["h"] = v.h;
    item["value"] = v.value.to_string();
    item["rule"] = v.rule;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  return out;
}

Json to_json(const FanoSeries& f) {
  Json out = table_to_json(f.series, "genus", "genus_max");
  out["chern"] = f.chern;
  out["insertions"] = f.insertions;
  return out;
}

Json to_json(const PipelineReport& r) {
  Json out;
  out["elem_counts"] = series_to_json(r.elem);
  out["bps"] = bps_to_json(r.bps);
  out["integral"] = r.elem_integral && r.bps_integral;
  Json violations = Json::array();
  const std::pair<const TermTable*, const char*> tables[] = {
      {&r.elem, "elem_counts"}, {&r.bps, "bps"}};
  for (const auto& [table, name] : tables)
    for (const auto& [key, val] : table->terms())
      if (!val.is_integer()) {
        Json item;
        item["table"] = name;
        item["class"] = key.coords;
        item["index"] = key.index;
        item["value"] = val.to_string();
        violations.push_back(std::move(item));
      }
  out["violations"] = std::move(violations);
  out["cross_check"] = "agree";
  return out;
}

Json series_to_json(const NovikovSeries& s) {
  return table_to_json(s, "genus", "genus_max");
}

Json bps_to_json(const BpsTable& t) { return table_to_json(t, "h", "h_max"); }

Rational rational_from_json(const Json& j) {
  return Rational::from_string(as_string(j, "rational"));
}

QLaurent qlaurent_from_json(const Json& j) {
  if (!j.is_object()) bad("Laurent polynomial must be an object");
  QLaurent p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.set_coeff(parse_exponent(it.key()),
                Rational::from_string(as_string(it.value(), "coefficient")));
  return p;
}

TLaurent tlaurent_from_json(const Json& j) {
  const std::int64_t min_exp = as_int(field(j, "min_exp"), "min_exp");
  const std::int64_t trunc = as_int(field(j, "trunc"), "trunc");
  if (min_exp % 2 != 0 || trunc % 2 != 0)
    bad("t-series exponents must be even");
  std::vector<Rational> coeffs;
  for (const Json& c : as_array(field(j, "coeffs"), "coeffs"))
    coeffs.push_back(Rational::from_string(as_string(c, "coefficient")));
  if (min_exp + 2 * static_cast<std::int64_t>(coeffs.size()) != trunc)
    bad("t-series coefficient count disagrees with its exponent window");
  return TLaurent::from_coeffs(min_exp, std::move(coeffs));
}

ElemSeries elem_from_json(const Json& j) {
  ElemSeries s;
  const std::string& kind = as_string(field(j, "series"), "series");
  if (kind == "z")
    s.is_log = false;
  else if (kind == "gw")
    s.is_log = true;
  else
    bad("series must be \"z\" or \"gw\"");
  s.genus = static_cast<int>(as_int(field(j, "genus"), "genus"));
  s.q_degree = static_cast<int>(as_int(field(j, "qdeg"), "qdeg"));
  const std::string& backend = as_string(field(j, "backend"), "backend");
  if (backend == "q")
    s.backend = Backend::Q;
  else if (backend == "t")
    s.backend = Backend::T;
  else
    bad("backend must be \"q\" or \"t\"");
  if (s.backend == Backend::T)
    s.t_order = as_int(field(j, "t_order"), "t_order");
  const Json& coeffs = as_array(field(j, "coeffs"), "coeffs");
  if (static_cast<std::int64_t>(coeffs.size()) !=
      static_cast<std::int64_t>(s.q_degree) + 1)
    bad("coefficient list must cover q-degrees 0 through qdeg");
  int d = 0;
  for (const Json& item : coeffs) {
    if (as_int(field(item, "d"), "d") != d)
      bad("coefficient list must be ordered by ascending q-degree");
    if (s.backend == Backend::Q)
      s.q_coeffs.push_back(qlaurent_from_json(field(item, "poly")));
    else
      s.t_coeffs.push_back(tlaurent_from_json(field(item, "poly")));
    ++d;
  }
  return s;
}

LocalBps local_bps_from_json(const Json& j) {
  LocalBps b;
  b.genus = static_cast<int>(as_int(field(j, "genus"), "genus"));
  b.q_degree = static_cast<int>(as_int(field(j, "qdeg"), "qdeg"));
  b.h_max = static_cast<int>(as_int(field(j, "h_max"), "h_max"));
  for (const Json& item : as_array(field(j, "terms"), "terms")) {
    const int d = static_cast<int>(as_int(field(item, "d"), "d"));
    const int h = static_cast<int>(as_int(field(item, "h"), "h"));
    b.table[{d, h}] =
        Rational::from_string(as_string(field(item, "value"), "value"));
  }
  return b;
}

NovikovSeries series_from_json(const Json& j) {
  return table_from_json(j, "genus", "genus_max");
}

BpsTable bps_from_json(const Json& j) {
  return table_from_json(j, "h", "h_max");
}

FanoSeries fano_from_json(const Json& j) {
  FanoSeries f{series_from_json(j), coords_from_json(field(j, "chern")), {}};
  if (static_cast<int>(f.chern.size()) != f.series.context().rank)
    bad("chern form must have one coefficient per lattice coordinate");
  for (const Json& x : as_array(field(j, "insertions"), "insertions"))
    f.insertions.push_back(static_cast<int>(as_int(x, "insertion dimension")));
  return f;
}

Json error_json(const Error& e) { return error_json(to_string(e.kind()), e.what()); }

Json error_json(const std::string& kind, const std::string& message) {
  Json out;
  Json inner;
  inner["kind"] = kind;
  inner["message"] = message;
  out["error"] = std::move(inner);
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

}  // namespace gvkit
