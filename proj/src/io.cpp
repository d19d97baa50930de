#include "kummerlab/io.hpp"

#include "kummerlab/bernoulli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kummerlab::io {

namespace fs = std::filesystem;

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const PadicApprox& x) { return x.str(); }

Json to_json(const CyclotomicNumber& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}, {"text", x.str()}};
}

Json to_json(const DirichletCharacter& chi) {
  Json images = Json::array();
  for (const auto& g : chi.generator_images())
    images.push_back(Json{{"generator", g.generator}, {"exponent", g.exponent}, {"order", g.order}});
  return Json{{"modulus", chi.modulus()},
              {"generator_images", images},
              {"order", chi.order()},
              {"conductor", chi.conductor()},
              {"parity", chi.is_even() ? "even" : "odd"}};
}

Json to_json(const ConvexPolygon& poly) {
  Json vertices = Json::array(), slopes = Json::array();
  for (const auto& [x, y] : poly.vertices()) vertices.push_back(Json::array({to_json(x), to_json(y)}));
  for (const auto& s : poly.slope_multiset()) slopes.push_back(to_json(s));
  return Json{{"vertices", vertices}, {"slopes", slopes}};
}

Json to_json(const MotiveDescriptor& m) {
  Json hodge = Json::array();
  for (const auto& h : m.hodge) hodge.push_back(Json{{"i", h.i}, {"j", h.j}, {"mult", h.mult}});
  Json euler = Json::object();
  for (const auto& [p, f] : m.euler) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    euler[std::to_string(p)] = coeffs;
  }
  return Json{{"label", m.label}, {"rank", m.rank}, {"weight", m.weight}, {"dplus", m.dplus}, {"hodge", hodge}, {"euler", euler}};
}

Json to_json(const KummerReport& r) {
  return Json{{"p", r.p},
              {"c", r.c},
              {"m", r.m},
              {"precondition_holds", r.precondition_holds},
              {"congruence_holds", r.congruence_holds},
              {"attained_valuation", to_json(r.attained_valuation)},
              {"sum", to_json(r.sum)}};
}

Json to_json(const GeneralizedKummerReport& r) {
  return Json{{"p", r.p},
              {"n", r.n},
              {"wild_level", r.wild_level},
              {"precondition_holds", r.precondition_holds},
              {"conclusion_holds", r.conclusion_holds},
              {"attained_valuation", to_json(r.attained_valuation)},
              {"valuation_shift", to_json(r.valuation_shift)},
              {"sum", to_json(r.sum)}};
}

Json to_json(const SlopeReport& r) {
  Json roots = Json::array();
  for (const auto& v : r.root_valuations) roots.push_back(to_json(v));
  return Json{{"p", r.p},
              {"newton", to_json(r.newton)},
              {"hodge", to_json(r.hodge)},
              {"dplus", r.dplus},
              {"slope_invariant", to_json(r.slope_invariant)},
              {"admissible", r.admissible},
              {"ordinary", r.ordinary},
              {"root_valuations", roots}};
}

Json to_json(const ColemanReport& r) {
  return Json{{"p", r.p},
              {"n", r.n},
              {"k1", r.k1},
              {"k2", r.k2},
              {"bound", r.bound},
              {"holds", r.holds},
              {"min_valuation", to_json(r.min_valuation)},
              {"failing_indices", r.failing_indices}};
}

Json to_json(const FamilyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"k1", f.k1}, {"k2", f.k2}, {"index", f.index}, {"valuation", to_json(f.valuation)}, {"required", f.required}});
  return Json{{"family", r.family},
              {"p", r.p},
              {"branch", r.branch},
              {"pairs_checked", r.pairs_checked},
              {"min_valuation_margin", to_json(r.min_valuation_margin)},
              {"failures", failures}};
}

Json to_json(const TruncatedPowerSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.is_zero() ? Json("0") : Json(truncate_absolute(c, f.precision()).str()));
  return Json{{"p", f.prime()}, {"precision", f.precision()}, {"degree", f.degree()}, {"coeffs", coeffs}};
}

Json to_json(const QExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs) coeffs.push_back(to_json(c));
  return Json{{"weight", e.weight}, {"p", e.p}, {"coeffs", coeffs}};
}

Json to_json(const CacheSummary& s) {
  return Json{{"kind", s.kind},
              {"path", s.path.string()},
              {"requested", s.requested},
              {"entries", s.entries},
              {"hit", s.hit},
              {"regenerated", s.regenerated},
              {"warnings", s.warnings}};
}

// ---------------------------------------------------------------- parsing

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw std::invalid_argument("field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& prefix) {
  if (!j.is_object()) field_error(prefix.empty() ? "<root>" : prefix, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) field_error(prefix + key, "missing");
  return *it;
}

long require_long(const Json& j, const std::string& key, const std::string& prefix) {
  const Json& v = require(j, key, prefix);
  if (!v.is_number_integer()) field_error(prefix + key, "expected an integer");
  return v.get<long>();
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) field_error(field, "expected a rational string \"num/den\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    field_error(field, e.what());
  }
}

DirichletCharacter character_from_json(const Json& j) {
  const long modulus = require_long(j, "modulus", "");
  const Json& images = require(j, "generator_images", "");
  if (!images.is_array()) field_error("generator_images", "expected an array");
  std::vector<GeneratorImage> out;
  for (size_t i = 0; i < images.size(); ++i) {
    const std::string prefix = "generator_images[" + std::to_string(i) + "].";
    out.push_back({require_long(images[i], "generator", prefix), require_long(images[i], "order", prefix),
                   require_long(images[i], "exponent", prefix)});
  }
  return DirichletCharacter(modulus, out);
}

MotiveDescriptor motive_from_json(const Json& j) {
  MotiveDescriptor m;
  const Json& label = require(j, "label", "");
  if (!label.is_string()) field_error("label", "expected a string");
  m.label = label.get<std::string>();
  m.rank = require_long(j, "rank", "");
  m.weight = require_long(j, "weight", "");
  m.dplus = require_long(j, "dplus", "");
  const Json& hodge = require(j, "hodge", "");
  if (!hodge.is_array()) field_error("hodge", "expected an array");
  for (size_t i = 0; i < hodge.size(); ++i) {
    const std::string prefix = "hodge[" + std::to_string(i) + "].";
    m.hodge.push_back({require_long(hodge[i], "i", prefix), require_long(hodge[i], "j", prefix), require_long(hodge[i], "mult", prefix)});
  }
  const Json& euler = require(j, "euler", "");
  if (!euler.is_object()) field_error("euler", "expected an object keyed by prime");
  for (const auto& [key, coeffs] : euler.items()) {
    const std::string field = "euler." + key;
    long p = 0;
    try {
      size_t used = 0;
      p = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      field_error(field, "key is not an integer");
    }
    if (!coeffs.is_array()) field_error(field, "expected an array of rationals");
    EulerFactor f{p, {}};
    for (size_t i = 0; i < coeffs.size(); ++i) f.coeffs.push_back(rational_from_json(coeffs[i], field + "[" + std::to_string(i) + "]"));
    m.euler.emplace(p, f);
  }
  m.validate();
  return m;
}

MotiveDescriptor load_motive(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open motive file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("motive file " + path.string() + ": " + e.what());
  }
  return motive_from_json(j);
}

void save_motive(const fs::path& path, const MotiveDescriptor& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(m).dump(2) << '\n';
}

std::map<long, EulerFactor> load_ap_csv(const fs::path& path, FactorKind kind, long weight) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::map<long, EulerFactor> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (lineno == 1 && line == "p,ap")) continue;
    const auto comma = line.find(',');
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (comma == std::string::npos) throw std::invalid_argument(where + ": expected \"p,ap\"");
    long p = 0;
    Integer ap;
    try {
      size_t used = 0;
      p = std::stol(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("p");
      if (ap.set_str(line.substr(comma + 1), 10) != 0) throw std::invalid_argument("ap");
    } catch (const std::exception&) {
      throw std::invalid_argument(where + ": malformed record");
    }
    if (!is_prime(p)) throw std::invalid_argument(where + ": " + std::to_string(p) + " is not prime");
    out[p] = euler_factor_from_ap(kind, ap, p, weight);
  }
  return out;
}

// ---------------------------------------------------------------- caches

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("KUMMERLAB_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

namespace {

// Reads "index<TAB>value" records in order from 0; stops at the first bad line.
template <class Parse>
long read_records(const fs::path& path, Parse parse, std::vector<std::string>& warnings) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  long next = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    bool ok = tab != std::string::npos;
    if (ok) {
      try {
        size_t used = 0;
        ok = std::stol(line.substr(0, tab), &used) == next && used == tab && parse(line.substr(tab + 1));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      warnings.push_back(path.filename().string() + ": corrupted record at line " + std::to_string(next + 1) + ", regenerating");
      break;
    }
    ++next;
  }
  return next;
}

void write_atomically(const fs::path& path, const std::string& body) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << body;
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw std::runtime_error("cache directory " + dir.string() + " is not usable");
}

}  // namespace

CacheSummary warm_bernoulli(const fs::path& dir, long kmax) {
  if (kmax < 0) throw std::invalid_argument("Bernoulli bound must be >= 0");
  ensure_dir(dir);
  CacheSummary s{"bernoulli", dir / "bernoulli.tsv", kmax, 0, false, false, {}};

  std::vector<Rational> values;
  long n = read_records(
      s.path,
      [&](const std::string& text) {
        values.push_back(Rational::parse(text));
        return true;
      },
      s.warnings);
  values.resize(static_cast<size_t>(n));
  if (n > 0) {
    try {
      default_bernoulli_cache().seed(values);
    } catch (const std::invalid_argument&) {
      // Keep the prefix that satisfies the recurrence.
      long good = 0;
      while (good < n && values[static_cast<size_t>(good)] == bernoulli(good)) ++good;
      s.warnings.push_back(s.path.filename().string() + ": value at line " + std::to_string(good + 1) +
                           " fails the recurrence, regenerating");
      n = good;
      values.resize(static_cast<size_t>(n));
    }
  }

  const bool clean = s.warnings.empty();
  if (n > kmax && clean) {
    s.hit = true;
    s.entries = n;
    return s;
  }
  const long target = std::max(kmax, n - 1);
  default_bernoulli_cache().ensure(target);
  std::ostringstream body;
  for (long k = 0; k <= target; ++k) body << k << '\t' << bernoulli(k).str() << '\n';
  write_atomically(s.path, body.str());
  s.entries = target + 1;
  s.regenerated = true;
  return s;
}

CacheSummary warm_tau(const fs::path& dir, long bound, std::vector<Integer>* table) {
  if (bound < 1) throw std::invalid_argument("tau bound must be >= 1");
  ensure_dir(dir);
  CacheSummary s{"tau", dir / "tau.tsv", bound, 0, false, false, {}};

  std::vector<Integer> values;
  long n = read_records(
      s.path,
      [&](const std::string& text) {
        Integer v;
        if (text.empty() || v.set_str(text, 10) != 0) return false;
        values.push_back(v);
        return true;
      },
      s.warnings);
  values.resize(static_cast<size_t>(n));
  if (n >= 2 && (values[0] != 0 || values[1] != 1)) {
    s.warnings.push_back(s.path.filename().string() + ": tau(0), tau(1) are not 0, 1, regenerating");
    n = 0;
  }

  if (n > bound && s.warnings.empty()) {
    s.hit = true;
    s.entries = n;
    if (table) table->assign(values.begin(), values.begin() + bound + 1);
    return s;
  }
  const long target = std::max(bound, n - 1);
  auto fresh = tau_table(target);
  std::ostringstream body;
  for (long i = 0; i <= target; ++i) body << i << '\t' << fresh[static_cast<size_t>(i)].get_str() << '\n';
  write_atomically(s.path, body.str());
  s.entries = target + 1;
  s.regenerated = true;
  if (table) table->assign(fresh.begin(), fresh.begin() + bound + 1);
  return s;
}

}  // namespace kummerlab::io
