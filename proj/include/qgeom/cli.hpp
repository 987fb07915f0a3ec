#pragma once

// Command-line front end. Every numeric result comes from the library
// functions; this file only parses flags, reads files and prints.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "error.hpp"
#include "grassmann.hpp"
#include "json_io.hpp"
#include "segre_ideal.hpp"
#include "state.hpp"

namespace qgeom::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kBadInput = 2 };

namespace detail {

inline nlohmann::json read_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, what + ": cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, what + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

inline int exit_code_for(Errc e) {
  switch (e) {
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::ZeroVector:
    case Errc::NonFinite:
    case Errc::IndexOutOfRange:
    case Errc::MissingVariable:
      return kBadInput;
    default:
      return kDomainError;
  }
}

struct Options {
  std::string state_path;
  std::string factors_path;
  std::vector<std::size_t> dims;
  int pivot = 1;
  std::vector<int> partition;
  double tol = kDefaultTol;
  bool exact = false;
  int k = 0;
  int n = 0;
  std::size_t max_amps = kDefaultMaxAmps;
  std::uint64_t max_choose = kDefaultMaxChoose;
  std::string family = "all";
};

template <Scalar T>
PureState<T> load_state(const Options& o) {
  return io::state_from_json<T>(read_json_file(o.state_path, "state"));
}

template <Scalar T>
nlohmann::json check_separable(const Options& o) {
  const auto s = load_state<T>(o);
  if (!o.partition.empty()) {
    Bipartition b(o.partition, s.modes());
    const bool separable = is_bipartite_separable(s, b, o.tol);
    return {{"left", b.left()}, {"separable", separable}};
  }
  nlohmann::json parts = nlohmann::json::array();
  bool all = true;
  for (const Bipartition& b : canonical_bipartitions(s.modes())) {
    const bool sep = is_bipartite_separable(s, b, o.tol);
    all = all && sep;
    parts.push_back({{"left", b.left()}, {"separable", sep}});
  }
  return {{"separable", all}, {"per_bipartition", std::move(parts)}};
}

template <Scalar T>
nlohmann::json pluecker(const Options& o) {
  const auto m = pluecker_measure_detail(load_state<T>(o), o.pivot);
  return {{"value", m.value},
          {"pivot", m.pivot},
          {"normalization", "2*sqrt(sum_I |P_I|^2) of the unit-norm state"},
          {"pluecker", io::pluecker_set_to_json(m.coords)}};
}

template <Scalar T>
nlohmann::json factor(const Options& o) {
  return io::factors_to_json(local_factors(load_state<T>(o), o.tol));
}

template <Scalar T>
nlohmann::json segre(const Options& o) {
  return io::state_to_json(segre_map(io::factors_from_json<T>(read_json_file(o.factors_path, "factors"))));
}

template <class F>
nlohmann::json dispatch(bool exact, F&& f) {
  return exact ? f(GaussRat{}) : f(Complex{});
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Separability, concurrence and Plücker tools for multipartite pure states", "qgeom"};
  app.require_subcommand(1);

  auto add_state = [&](CLI::App* sc) { sc->add_option("--state", o.state_path, "State JSON file")->required(); };
  auto add_exact = [&](CLI::App* sc) { sc->add_flag("--exact", o.exact, "Exact Gaussian-rational arithmetic"); };
  auto add_tol = [&](CLI::App* sc) {
    sc->add_option("--tol", o.tol, "Separability tolerance")->check(CLI::NonNegativeNumber);
  };

  auto* check = app.add_subcommand("check-separable", "Rank-1 test across one or every bipartition");
  add_state(check);
  check->add_option("--partition", o.partition, "Modes on the left side, e.g. 1,3")->delimiter(',');
  add_tol(check);
  add_exact(check);

  auto* conc = app.add_subcommand("concurrence", "Two-qubit concurrence");
  add_state(conc);
  add_exact(conc);

  auto* gen = app.add_subcommand("gen-concurrence", "Generalized concurrence over all bipartitions");
  add_state(gen);
  add_exact(gen);

  auto* plu = app.add_subcommand("pluecker-measure", "Plücker-coordinate measure of a multi-qubit state");
  add_state(plu);
  plu->add_option("--pivot", o.pivot, "Mode forming the two matrix rows (1-based)");
  add_exact(plu);

  auto* ideal = app.add_subcommand("segre-ideal", "Print the 2x2-minor generators of the Segre ideal");
  ideal->add_option("--dims", o.dims, "Mode dimensions, e.g. 2,2,2")->delimiter(',')->required();
  ideal->add_option("--max-amps", o.max_amps, "Cap on the product of dims");

  auto* rels = app.add_subcommand("pluecker-relations", "Print the quadratic Plücker relations of G(k,N)");
  rels->add_option("--k", o.k, "Subspace dimension")->required();
  rels->add_option("--n", o.n, "Ambient dimension")->required();
  rels->add_option("--max-choose", o.max_choose, "Cap on C(N,k)");
  rels->add_option("--family", o.family, "Index pairs: all | separated")
      ->check(CLI::IsMember({"all", "separated"}));

  auto* smap = app.add_subcommand("segre-map", "Tensor product of local states");
  smap->add_option("--factors", o.factors_path, "Factors JSON file")->required();
  add_exact(smap);

  auto* fac = app.add_subcommand("factor", "Recover local factors of a product state");
  add_state(fac);
  add_tol(fac);
  add_exact(fac);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    nlohmann::json result;
    if (*check) {
      result = detail::dispatch(o.exact, [&](auto tag) { return detail::check_separable<decltype(tag)>(o); });
    } else if (*conc) {
      result = detail::dispatch(o.exact, [&](auto tag) {
        const double value = concurrence2(detail::load_state<decltype(tag)>(o));
        return nlohmann::json{{"value", value}};
      });
    } else if (*gen) {
      result = detail::dispatch(o.exact, [&](auto tag) {
        return io::measure_report_to_json(generalized_concurrence(detail::load_state<decltype(tag)>(o)));
      });
    } else if (*plu) {
      result = detail::dispatch(o.exact, [&](auto tag) { return detail::pluecker<decltype(tag)>(o); });
    } else if (*ideal) {
      for (const auto& g : segre_generators(o.dims, o.max_amps).gens) out << g.str() << "\n";
      return kOk;
    } else if (*rels) {
      const auto family = o.family == "separated" ? RelationFamily::Separated : RelationFamily::AllPairs;
      for (const auto& r : pluecker_relations(o.k, o.n, o.max_choose, family)) out << r.poly.str() << "\n";
      return kOk;
    } else if (*smap) {
      result = detail::dispatch(o.exact, [&](auto tag) { return detail::segre<decltype(tag)>(o); });
    } else if (*fac) {
      result = detail::dispatch(o.exact, [&](auto tag) { return detail::factor<decltype(tag)>(o); });
    }
    out << result.dump() << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }
}

}  // namespace qgeom::cli
