#ifndef UPEXT_CONFIG_HPP
#define UPEXT_CONFIG_HPP

#include "upext/anti_associated.hpp"
#include "upext/families.hpp"
#include "upext/measure.hpp"
#include "upext/rational.hpp"

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace upext {

/// Malformed or inconsistent job description (CLI exit code 3).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * Job description. Text format, one key per line, '#' starts a comment:
 *
 *     [base]
 *     family = grosjean1      # U T V W grosjean1 grosjean2 jacobi
 *     alpha = -0.3
 *     beta = 0                # jacobi only
 *
 *     [extension]
 *     b  = 0.1, -1/3          # b_{-r} ... b_{-1}
 *     a2 = 2, 0.4             # a_{-r+1}^2 ... a_0^2
 *
 *     [options]
 *     degree = 12
 *     grid = 201
 *     tol = 1e-8
 *     truncation = 4000
 *     points = 0, 1/3, -0.4
 *     perturb_measure = 0.05
 *
 * Numbers are read as exact rationals ("p/q" or decimals).
 */
struct JobConfig {
  std::string family;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::vector<Rational> b_new;
  std::vector<Rational> a2_new;

  std::size_t degree = 12;
  std::size_t grid = 201;
  std::optional<double> tol;
  std::size_t truncation = 4000;
  std::vector<Rational> points;
  double perturb_measure = 0.0;

  bool has_extension() const { return !b_new.empty(); }
  ExtensionParams extension() const;
  CoefficientSequence base_sequence() const;
  /// Base with a known measure: U, T (as Grosjean alpha = -1/2) or grosjean1.
  BaseFamily measure_base() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<Rational> parse_list(const std::string& key, const std::string& value) {
  std::vector<Rational> out;
  if (value.back() == ',') throw ConfigError("empty entry in list '" + key + "'");
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("empty entry in list '" + key + "'");
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
  return out;
}

inline Rational parse_number(const std::string& key, const std::string& value) {
  try {
    return parse_rational(value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

inline std::size_t parse_count(const std::string& key, const std::string& value) {
  const Rational v = parse_number(key, value);
  if (v.get_den() != 1 || v < 0) throw ConfigError(key + " must be a non-negative integer");
  return static_cast<std::size_t>(v.get_num().get_ui());
}

}  // namespace detail

inline JobConfig parse_config(std::istream& in) {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"base", {"family", "alpha", "beta"}},
      {"extension", {"b", "a2"}},
      {"options", {"degree", "grid", "tol", "truncation", "points", "perturb_measure"}},
  };
  JobConfig cfg;
  std::string line, section;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      if (!schema.contains(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError(where + "key '" + key + "' outside a section");
    if (!schema.at(section).contains(key)) throw ConfigError(where + "unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(section + "." + key).second) throw ConfigError(where + "duplicate key '" + key + "'");
    if (value.empty()) throw ConfigError(where + "empty value for '" + key + "'");

    if (key == "family") {
      cfg.family = value;
    } else if (key == "alpha") {
      cfg.alpha = detail::parse_number(key, value);
    } else if (key == "beta") {
      cfg.beta = detail::parse_number(key, value);
    } else if (key == "b") {
      cfg.b_new = detail::parse_list(key, value);
    } else if (key == "a2") {
      cfg.a2_new = detail::parse_list(key, value);
    } else if (key == "degree") {
      cfg.degree = detail::parse_count(key, value);
    } else if (key == "grid") {
      cfg.grid = detail::parse_count(key, value);
    } else if (key == "truncation") {
      cfg.truncation = detail::parse_count(key, value);
    } else if (key == "tol") {
      cfg.tol = to_double(detail::parse_number(key, value));
      if (!(*cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    } else if (key == "points") {
      cfg.points = detail::parse_list(key, value);
    } else if (key == "perturb_measure") {
      cfg.perturb_measure = to_double(detail::parse_number(key, value));
    }
  }

  static const std::set<std::string> families = {"U", "T", "V", "W", "grosjean1", "grosjean2", "jacobi"};
  if (cfg.family.empty()) throw ConfigError("[base] family is required");
  if (!families.contains(cfg.family)) throw ConfigError("unknown family '" + cfg.family + "'");
  const bool needs_alpha = cfg.family == "grosjean1" || cfg.family == "grosjean2" || cfg.family == "jacobi";
  if (needs_alpha && !cfg.alpha) throw ConfigError("family " + cfg.family + " needs alpha");
  if (!needs_alpha && cfg.alpha) throw ConfigError("family " + cfg.family + " takes no alpha");
  if ((cfg.family == "jacobi") != cfg.beta.has_value())
    throw ConfigError(cfg.family == "jacobi" ? "family jacobi needs beta" : "beta is only valid for jacobi");
  if (cfg.b_new.size() != cfg.a2_new.size())
    throw ConfigError("[extension] b and a2 must have the same length");
  if (cfg.grid < 2) throw ConfigError("grid must be at least 2");
  if (cfg.truncation < 50) throw ConfigError("truncation must be at least 50");
  try {
    (void)cfg.base_sequence();
    if (cfg.has_extension()) (void)cfg.extension();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

inline JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

inline ExtensionParams JobConfig::extension() const {
  if (!has_extension()) throw ConfigError("this command needs an [extension] section");
  return ExtensionParams(b_new, a2_new);
}

inline CoefficientSequence JobConfig::base_sequence() const {
  if (family == "U") return chebyshev_coeffs(ChebyshevKind::U);
  if (family == "T") return chebyshev_coeffs(ChebyshevKind::T);
  if (family == "V") return chebyshev_coeffs(ChebyshevKind::V);
  if (family == "W") return chebyshev_coeffs(ChebyshevKind::W);
  if (family == "grosjean1") return grosjean1_coeffs(*alpha);
  if (family == "grosjean2") return grosjean2_coeffs(*alpha);
  return jacobi_coeffs(*alpha, *beta);
}

inline BaseFamily JobConfig::measure_base() const {
  if (family == "U") return BaseFamily::chebyshev_u();
  if (family == "T") return BaseFamily::grosjean1(Rational(-1, 2));
  if (family == "grosjean1") {
    GrosjeanParam check(*alpha, GrosjeanKind::first);
    return BaseFamily::grosjean1(*alpha);
  }
  throw ConfigError("measure reconstruction needs family U, T or grosjean1 (got " + family + ")");
}

}  // namespace upext

#endif  // UPEXT_CONFIG_HPP
