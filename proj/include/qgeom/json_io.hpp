#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "grassmann.hpp"
#include "scalar.hpp"
#include "segre_ideal.hpp"
#include "state.hpp"

namespace qgeom::io {

using nlohmann::json;

namespace detail {

template <Scalar T>
real_t<T> parse_real(const json& j, const std::string& field) {
  if (j.is_string()) {
    Rational q;
    if (!parse_rational(j.get<std::string>(), q))
      throw Error(Errc::ParseError, field + ": expected a number or a \"p/q\" string");
    if constexpr (is_exact_v<T>) {
      return q;
    } else {
      return q.get_d();
    }
  }
  if constexpr (is_exact_v<T>) {
    if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
    if (j.is_number_float()) throw Error(Errc::ParseError, field + ": exact mode takes integers or \"p/q\" strings");
  } else {
    if (j.is_number()) return j.get<double>();
  }
  throw Error(Errc::ParseError, field + ": expected a number or a \"p/q\" string");
}

template <Scalar T>
T parse_scalar(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::ParseError, field + ": expected a [re, im] pair");
  real_t<T> re = parse_real<T>(j[0], field + "[0]");
  real_t<T> im = parse_real<T>(j[1], field + "[1]");
  if constexpr (is_exact_v<T>) {
    return GaussRat(std::move(re), std::move(im));
  } else {
    return Complex(re, im);
  }
}

template <Scalar T>
std::vector<T> parse_vector(const json& j, const std::string& field) {
  if (!j.is_array()) throw Error(Errc::ParseError, field + ": expected an array of [re, im] pairs");
  std::vector<T> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_scalar<T>(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline json real_to_json(double v) { return v; }
inline json real_to_json(const Rational& v) { return v.get_str(); }

}  // namespace detail

template <Scalar T>
json scalar_to_json(const T& z) {
  if constexpr (is_exact_v<T>) {
    return json::array({z.real().get_str(), z.imag().get_str()});
  } else {
    return json::array({z.real(), z.imag()});
  }
}

/// {"dims":[...],"amps":[[re,im],...]}; reports the first offending field.
template <Scalar T>
PureState<T> state_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "state: expected a JSON object");
  if (!j.contains("dims")) throw Error(Errc::ParseError, "dims: missing");
  const json& jd = j.at("dims");
  if (!jd.is_array()) throw Error(Errc::ParseError, "dims: expected an array of integers");
  Dims dims;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    if (!jd[i].is_number_unsigned())
      throw Error(Errc::ParseError, "dims[" + std::to_string(i) + "]: expected a positive integer");
    dims.push_back(jd[i].get<std::size_t>());
  }
  if (!j.contains("amps")) throw Error(Errc::ParseError, "amps: missing");
  return make_state(std::move(dims), detail::parse_vector<T>(j.at("amps"), "amps"));
}

template <Scalar T>
json state_to_json(const PureState<T>& s) {
  json amps = json::array();
  for (const T& a : s.amps()) amps.push_back(scalar_to_json(a));
  return {{"dims", s.dims()}, {"amps", std::move(amps)}};
}

/// {"factors":[[[re,im],...],...]}
template <Scalar T>
std::vector<LocalState<T>> factors_from_json(const json& j) {
  if (!j.is_object() || !j.contains("factors")) throw Error(Errc::ParseError, "factors: missing");
  const json& jf = j.at("factors");
  if (!jf.is_array()) throw Error(Errc::ParseError, "factors: expected an array of local states");
  std::vector<LocalState<T>> out;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string field = "factors[" + std::to_string(i) + "]";
    try {
      out.push_back(make_local(detail::parse_vector<T>(jf[i], field)));
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      throw Error(e.code(), field + ": " + e.what());
    }
  }
  return out;
}

template <Scalar T>
json factors_to_json(const std::vector<LocalState<T>>& factors) {
  json arr = json::array();
  for (const auto& f : factors) {
    json v = json::array();
    for (const T& a : f.vec()) v.push_back(scalar_to_json(a));
    arr.push_back(std::move(v));
  }
  return {{"factors", std::move(arr)}};
}

inline json measure_report_to_json(const MeasureReport& r) {
  json parts = json::array();
  for (const auto& [b, term] : r.per_bipartition) parts.push_back({{"left", b.left()}, {"term", term}});
  return {{"value", r.value}, {"per_bipartition", std::move(parts)}};
}

/// {"k":..,"N":..,"coords":[{"I":[...],"re":..,"im":..},...]} sorted by I.
template <Scalar T>
json pluecker_set_to_json(const PlueckerSet<T>& ps) {
  json coords = json::array();
  const auto subsets = ps.subsets();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const T& v = ps.coords()[i];
    json c = {{"I", subsets[i]}};
    if constexpr (is_exact_v<T>) {
      c["re"] = v.real().get_str();
      c["im"] = v.imag().get_str();
    } else {
      c["re"] = v.real();
      c["im"] = v.imag();
    }
    coords.push_back(std::move(c));
  }
  return {{"k", ps.k()}, {"N", ps.n()}, {"coords", std::move(coords)}};
}

}  // namespace qgeom::io
