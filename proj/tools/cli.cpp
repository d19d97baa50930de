#include "cli.hpp"

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/families.hpp"
#include "kummerlab/io.hpp"
#include "kummerlab/motives.hpp"
#include "kummerlab/padic_zeta.hpp"
#include "kummerlab/polygons.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kummerlab::cli {

namespace {

using io::Json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("malformed " + what + ": '" + text + "'");
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational in " + what + ": '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + " is empty");
  return out;
}

// "M" is the trivial character mod M; "M:e1,e2,..." gives exponents on the
// generators of (Z/M)^x in the order of unit_group_generators.
DirichletCharacter parse_character(const std::string& text) {
  const auto colon = text.find(':');
  const long modulus = parse_long(text.substr(0, colon), "character modulus");
  if (modulus < 1) throw std::invalid_argument("character modulus must be >= 1");
  if (colon == std::string::npos) return DirichletCharacter::trivial(modulus);
  auto gens = unit_group_generators(modulus);
  const auto exps = split(text.substr(colon + 1), ',');
  if (exps.size() != gens.size())
    throw std::invalid_argument("character mod " + std::to_string(modulus) + " needs " + std::to_string(gens.size()) + " exponents");
  for (size_t i = 0; i < gens.size(); ++i) gens[i].exponent = parse_long(exps[i], "character exponent");
  return DirichletCharacter(modulus, gens);
}

std::string character_label(const DirichletCharacter& chi) {
  std::string s = std::to_string(chi.modulus());
  if (chi.generator_images().empty()) return s;
  s += ":";
  for (size_t i = 0; i < chi.generator_images().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chi.generator_images()[i].exponent);
  }
  return s;
}

std::vector<Valuation> parse_valuations(const std::string& text) {
  std::vector<Valuation> out;
  for (const auto& item : split(text, ',')) out.push_back(item == "inf" ? Valuation::infinity() : Valuation(parse_long(item, "valuation")));
  return out;
}

// "i:j:mult,..."
std::vector<HodgeNumber> parse_hodge(const std::string& text) {
  std::vector<HodgeNumber> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 3) throw std::invalid_argument("hodge entries are i:j:mult, got '" + item + "'");
    out.push_back({parse_long(parts[0], "hodge i"), parse_long(parts[1], "hodge j"), parse_long(parts[2], "hodge mult")});
  }
  return out;
}

Weierstrass parse_curve(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 5) throw std::invalid_argument("curve needs five coefficients a1,a2,a3,a4,a6");
  Weierstrass a{};
  for (size_t i = 0; i < 5; ++i) a[i] = parse_long(parts[i], "curve coefficient");
  return a;
}

// Sum of coefficient * embedded root of unity, absolute precision n.
PadicApprox embed_cyclotomic(const CyclotomicNumber& x, long p, long n) {
  PadicApprox acc = PadicApprox::zero(p, n);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rational& c = x.coeffs()[i];
    if (c.is_zero()) continue;
    const PadicApprox zeta = embed_root_of_unity(x.order(), static_cast<long>(i), p, n);
    acc = acc + PadicApprox::from_residue(p, residue_mod(c, p, n), n) * zeta;
  }
  return truncate_absolute(acc, n);
}

PadicApprox moment_padic(const DirichletCharacter& chi, long k, long c, long p, long n) {
  if (chi.is_trivial()) return PadicApprox::from_residue(p, residue_mod(regularized_zeta(k, c, p), p, n), n);
  return embed_cyclotomic(mazur_moment(chi, k, c, p), p, n);
}

std::string padic_text(const PadicApprox& x, long n) { return x.is_zero() ? "0" : truncate_absolute(x, n).str(); }

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

struct Options {
  bool json = false;
  std::optional<std::string> cache_dir;
  long k = 0, k2 = 0, c = 2, p = 0, m = 1, n = 1, r = 1, a = 1, s = 0, bound = 0, degree = 0, branch = 0, kmax = 0, twist = 0;
  long bernoulli_bound = -1, tau_bound = -1;
  std::string h, chi, motive = "", motive_file, vals, hodge, series, curve, family = "eisenstein", out_file, expect;
  bool has_tate = false;
};

std::optional<std::filesystem::path> cache_dir(const Options& o) { return io::resolve_cache_dir(o.cache_dir); }

void seed_bernoulli_cache(const Options& o, long k) {
  if (const auto dir = cache_dir(o)) io::warm_bernoulli(*dir, std::max(k, 0L));
}

std::vector<Integer> tau_for(const Options& o, long bound) {
  if (const auto dir = cache_dir(o)) {
    std::vector<Integer> t;
    io::warm_tau(*dir, bound, &t);
    return t;
  }
  return tau_table(bound);
}

MotiveDescriptor load_motive_option(const Options& o) {
  if (!o.motive_file.empty()) return io::load_motive(o.motive_file);
  if (o.motive.empty()) throw std::invalid_argument("--motive or --motive-file is required");
  return builtin_motive(o.motive);
}

void print_motive_text(std::ostream& out, const MotiveDescriptor& m) {
  out << "label: " << m.label << "\nrank: " << m.rank << "\nweight: " << m.weight << "\ndplus: " << m.dplus << "\nhodge:";
  for (const auto& h : m.hodge) out << " (" << h.i << "," << h.j << ")x" << h.mult;
  out << "\nlocal factors: " << m.euler.size() << " primes";
  if (!m.euler.empty()) out << " (" << m.euler.begin()->first << " .. " << m.euler.rbegin()->first << ")";
  out << "\n";
  for (const auto& [p, f] : m.euler) {
    if (p > 13) break;
    out << "  L_" << p << ":";
    for (const auto& c : f.coeffs) out << " " << c.str();
    out << "\n";
  }
}

// Emits the report and returns the exit code.
struct Emitter {
  std::ostream& out;
  bool json;
  int emit(const Json& j, const std::string& text, bool ok = true) {
    if (json)
      out << j.dump(2) << "\n";
    else
      out << text;
    return ok ? kOk : kCheckFailed;
  }
};

CLI::Validator prime_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          size_t used = 0;
          const long v = std::stol(s, &used);
          if (used == s.size() && is_prime(v)) return "";
        } catch (const std::exception&) {
        }
        return s + " is not prime";
      },
      "PRIME", "prime");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and p-adic verification of Kummer-type congruences", "kummerlab"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (default: $KUMMERLAB_CACHE_DIR)");

  const auto prime = prime_validator();
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Prime")->required()->check(prime); };
  auto add_c = [&](CLI::App* sub) { sub->add_option("--c", o.c, "Regularization parameter (default 2)"); };
  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    subs[name] = s;
    return s;
  };

  auto* s = sub("bernoulli", "Bernoulli number B_k");
  s->add_option("--k", o.k, "Index")->required()->check(CLI::NonNegativeNumber);

  s = sub("zeta", "zeta(-k)");
  s->add_option("--k", o.k, "k >= 0")->required()->check(CLI::NonNegativeNumber);

  s = sub("reg-zeta", "(1 - p^k)(1 - c^(k+1)) zeta(-k)");
  s->add_option("--k", o.k, "k >= 0")->required()->check(CLI::NonNegativeNumber);
  add_c(s);
  add_p(s);

  s = sub("kummer", "Kummer congruence for h(x) = sum alpha_i x^i");
  s->set_help_flag("--help", "Print this help message and exit");  // frees --h
  add_p(s);
  add_c(s);
  s->add_option("--h", o.h, "Comma-separated coefficients alpha_0,alpha_1,...")->required();
  s->add_option("--m", o.m, "Target power")->required()->check(CLI::NonNegativeNumber);

  s = sub("measure", "Regularized measure of a + p^r Z_p");
  add_p(s);
  add_c(s);
  s->add_option("--a", o.a, "Ball centre (a unit)")->required();
  s->add_option("--r", o.r, "Level")->required()->check(CLI::PositiveNumber);

  s = sub("moment", "Twisted moment int chi x^k dmu");
  add_p(s);
  add_c(s);
  s->add_option("--k", o.k, "Moment index")->required()->check(CLI::NonNegativeNumber);
  s->add_option("--chi", o.chi, "Character M or M:e1,e2,... (default trivial)");
  s->add_option("--n", o.n, "Also embed in Z_p to this precision (0 = skip)");

  s = sub("amice", "Amice transform of the regularized measure");
  add_p(s);
  add_c(s);
  s->add_option("--n", o.n, "Absolute precision")->required()->check(CLI::PositiveNumber);
  s->add_option("--degree", o.degree, "Series degree")->required()->check(CLI::NonNegativeNumber);
  s->add_option("--chi", o.chi, "Tame character twisting the measure");

  s = sub("specialize", "Evaluate a series at (1+p)^(k-1) - 1");
  add_p(s);
  add_c(s);
  s->add_option("--k", o.k, "Weight")->required();
  s->add_option("--n", o.n, "Precision")->required()->check(CLI::PositiveNumber);
  s->add_option("--series", o.series, "Integer coefficients c0,c1,...; default: Amice transform of the measure");
  s->add_option("--degree", o.degree, "Degree of the Amice transform");

  s = sub("characters", "Dirichlet characters modulo m");
  s->add_option("--m", o.m, "Modulus")->required()->check(CLI::PositiveNumber);

  s = sub("gauss", "Gauss sum of a primitive character");
  s->add_option("--chi", o.chi, "Character M:e1,e2,...")->required();

  s = sub("polygon", "Newton polygon from valuations or Hodge polygon from Hodge numbers");
  s->add_option("--vals", o.vals, "Valuations v_0,...,v_d ('inf' allowed)");
  s->add_option("--hodge", o.hodge, "Hodge numbers i:j:mult,...");

  s = sub("slope", "Newton/Hodge comparison for a motive at p");
  s->add_option("--motive", o.motive, "Built-in motive: Q(0), delta, 11a1");
  s->add_option("--motive-file", o.motive_file, "Motive JSON file");
  add_p(s);
  s->add_option("--expect", o.expect, "Fail unless the motive is: admissible, ordinary, non-ordinary")
      ->check(CLI::IsMember({"admissible", "ordinary", "non-ordinary"}));

  s = sub("twist", "Tate or character twist of a motive");
  s->add_option("--motive", o.motive, "Built-in motive");
  s->add_option("--motive-file", o.motive_file, "Motive JSON file");
  auto* tate = s->add_option("--tate", o.twist, "Tate twist M(m)");
  auto* chi_opt = s->add_option("--chi", o.chi, "Character twist M(chi)");
  tate->excludes(chi_opt);
  s->add_option("--out", o.out_file, "Write the twisted motive as JSON");

  s = sub("dual", "Dual motive");
  s->add_option("--motive", o.motive, "Built-in motive");
  s->add_option("--motive-file", o.motive_file, "Motive JSON file");
  s->add_option("--out", o.out_file, "Write the dual motive as JSON");

  s = sub("modified-factor", "Modification factor A_p(M(chi), s)");
  s->add_option("--motive", o.motive, "Built-in motive");
  s->add_option("--motive-file", o.motive_file, "Motive JSON file");
  add_p(s);
  s->add_option("--s", o.s, "Critical point s")->required();
  s->add_option("--n", o.n, "Relative precision")->required()->check(CLI::PositiveNumber);
  s->add_option("--chi", o.chi, "Character (default trivial)");

  s = sub("tau", "Ramanujan tau");
  auto* tau_n = s->add_option("--n", o.n, "tau(n)")->check(CLI::PositiveNumber);
  auto* tau_b = s->add_option("--bound", o.bound, "Table tau(1..bound)")->check(CLI::PositiveNumber);
  tau_n->excludes(tau_b);

  s = sub("ec-ap", "a_p of an elliptic curve by point counting");
  s->add_option("--curve", o.curve, "a1,a2,a3,a4,a6 (default 11a1: 0,-1,1,-10,-20)");
  auto* ec_p = s->add_option("--p", o.p, "Prime")->check(prime);
  auto* ec_b = s->add_option("--bound", o.bound, "All good primes below bound")->check(CLI::PositiveNumber);
  ec_p->excludes(ec_b);

  s = sub("eisenstein", "p-stabilized Eisenstein q-expansion");
  s->add_option("--k", o.k, "Even weight >= 4")->required();
  add_p(s);
  s->add_option("--bound", o.bound, "Last coefficient index")->required()->check(CLI::PositiveNumber);

  s = sub("coleman-check", "Coefficientwise congruence of two Eisenstein series");
  add_p(s);
  s->add_option("--k1", o.k, "First weight")->required();
  s->add_option("--k2", o.k2, "Second weight")->required();
  s->add_option("--n", o.n, "Level n: congruence mod p^(n+1)")->required()->check(CLI::NonNegativeNumber);
  s->add_option("--bound", o.bound, "Last coefficient index")->required()->check(CLI::NonNegativeNumber);

  s = sub("family-check", "Sweep a family for congruences mod p^(v+1)");
  s->add_option("--family", o.family, "eisenstein or dirichlet")->check(CLI::IsMember({"eisenstein", "dirichlet"}));
  add_p(s);
  s->add_option("--branch", o.branch, "k mod (p-1)")->required();
  s->add_option("--kmax", o.kmax, "Largest weight")->required();
  s->add_option("--bound", o.bound, "Coefficient bound (eisenstein)");
  add_c(s);

  s = sub("delta-scan", "Primes p < bound with tau(p) = 0 mod p");
  s->add_option("--bound", o.bound, "Prime cap")->required()->check(CLI::Range(2L, 20001L));

  s = sub("cache-warm", "Populate the Bernoulli and tau caches");
  s->add_option("--bernoulli", o.bernoulli_bound, "Largest Bernoulli index")->check(CLI::NonNegativeNumber);
  s->add_option("--tau", o.tau_bound, "tau table bound")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  for (const auto& [name, sc] : subs)
    if (sc->parsed()) command = name;
  if (command == "twist") o.has_tate = subs[command]->count("--tate") > 0;

  Emitter em{out, o.json};
  try {
    if (command == "bernoulli") {
      seed_bernoulli_cache(o, o.k);
      const Rational b = bernoulli(o.k);
      return em.emit(Json{{"k", o.k}, {"value", io::to_json(b)}}, b.str() + "\n");
    }
    if (command == "zeta") {
      seed_bernoulli_cache(o, o.k + 1);
      const Rational z = zeta_neg(o.k);
      return em.emit(Json{{"k", o.k}, {"value", io::to_json(z)}}, z.str() + "\n");
    }
    if (command == "reg-zeta") {
      const Rational z = regularized_zeta(o.k, o.c, o.p);
      return em.emit(Json{{"k", o.k}, {"c", o.c}, {"p", o.p}, {"value", io::to_json(z)}, {"valuation", io::to_json(val_p(z, o.p))}},
                     z.str() + "\n");
    }
    if (command == "kummer") {
      const auto h = parse_rationals(o.h, "--h");
      const auto r = kummer_check(h, o.c, o.p, o.m);
      std::ostringstream t;
      t << "precondition: " << yes_no(r.precondition_holds) << "\ncongruence: " << yes_no(r.congruence_holds)
        << "\nsum: " << r.sum.str() << "\nvaluation: " << r.attained_valuation.str() << "\n";
      return em.emit(io::to_json(r), t.str(), r.precondition_holds && r.congruence_holds);
    }
    if (command == "measure") {
      const Rational mu = measure_of_ball(o.a, o.r, o.c, o.p);
      return em.emit(Json{{"a", o.a}, {"r", o.r}, {"c", o.c}, {"p", o.p}, {"value", io::to_json(mu)}}, mu.str() + "\n");
    }
    if (command == "moment") {
      const auto chi = o.chi.empty() ? DirichletCharacter::trivial(1) : parse_character(o.chi);
      const auto v = mazur_moment(chi, o.k, o.c, o.p);
      Json j{{"chi", character_label(chi)}, {"k", o.k}, {"c", o.c}, {"p", o.p}, {"value", io::to_json(v)}};
      std::string text = v.str() + "\n";
      if (o.n > 0 && o.p != 2 && (o.p - 1) % chi.order() == 0) {
        const auto e = embed_cyclotomic(v, o.p, o.n);
        j["padic"] = padic_text(e, o.n);
        text += "p-adic: " + padic_text(e, o.n) + "\n";
      }
      return em.emit(j, text);
    }
    if (command == "amice" || (command == "specialize" && o.series.empty())) {
      const auto chi = o.chi.empty() ? DirichletCharacter::trivial(1) : parse_character(o.chi);
      const long degree = o.degree;
      std::vector<PadicApprox> moments;
      for (long j = 0; j <= degree; ++j) moments.push_back(moment_padic(chi, j, o.c, o.p, o.n));
      const auto f = amice_transform(moments, o.p, o.n);
      if (command == "amice") return em.emit(io::to_json(f), f.str() + "\n");
      const auto v = specialize(f, o.k, o.p, o.n);
      return em.emit(Json{{"k", o.k}, {"p", o.p}, {"n", o.n}, {"value", padic_text(v, o.n)}}, padic_text(v, o.n) + "\n");
    }
    if (command == "specialize") {
      std::vector<PadicApprox> coeffs;
      for (const auto& item : split(o.series, ','))
        coeffs.push_back(PadicApprox::from_residue(o.p, Integer(parse_long(item, "series coefficient")), o.n));
      const TruncatedPowerSeries f(o.p, o.n, coeffs);
      const auto v = specialize(f, o.k, o.p, o.n);
      Json j{{"k", o.k}, {"p", o.p}, {"n", o.n}, {"value", padic_text(v, o.n)}};
      std::string text = padic_text(v, o.n) + "\n";
      if (!v.is_zero() && v.shift() >= 0) {
        j["residue"] = v.residue_mod(o.n).get_str();
        text = v.residue_mod(o.n).get_str() + " mod " + std::to_string(o.p) + "^" + std::to_string(o.n) + "\n";
      } else if (v.is_zero()) {
        j["residue"] = "0";
      }
      return em.emit(j, text);
    }
    if (command == "characters") {
      Json arr = Json::array();
      std::ostringstream t;
      for (const auto& chi : characters_mod(o.m)) {
        Json j = io::to_json(chi);
        j["label"] = character_label(chi);
        arr.push_back(j);
        t << character_label(chi) << "  order " << chi.order() << "  conductor " << chi.conductor() << "  "
          << (chi.is_even() ? "even" : "odd") << "\n";
      }
      return em.emit(arr, t.str());
    }
    if (command == "gauss") {
      const auto chi = parse_character(o.chi);
      const auto g = gauss_sum(chi);
      const auto norm = g * gauss_sum(chi.conj());
      Json j{{"chi", character_label(chi)}, {"value", io::to_json(g)}, {"g_times_gbar", io::to_json(norm)}};
      return em.emit(j, "G = " + g.str() + "\nG(chi) G(chibar) = " + norm.str() + "\n");
    }
    if (command == "polygon") {
      if (o.vals.empty() == o.hodge.empty()) throw std::invalid_argument("give exactly one of --vals and --hodge");
      const auto poly = o.vals.empty() ? hodge_polygon(parse_hodge(o.hodge)) : newton_polygon(parse_valuations(o.vals));
      std::ostringstream t;
      t << poly.str() << "\nslopes:";
      for (const auto& sl : poly.slope_multiset()) t << " " << sl.str();
      t << "\n";
      return em.emit(io::to_json(poly), t.str());
    }
    if (command == "slope") {
      const auto m = load_motive_option(o);
      const auto r = slope_report(m, o.p);
      std::ostringstream t;
      t << "newton: " << r.newton.str() << "\nhodge: " << r.hodge.str() << "\ndplus: " << r.dplus
        << "\nh: " << r.slope_invariant.str() << "\nadmissible: " << (r.admissible ? "yes" : "no")
        << "\nordinary: " << (r.ordinary ? "yes" : "no") << "\nroot valuations:";
      for (const auto& v : r.root_valuations) t << " " << v.str();
      t << "\n";
      bool ok = true;
      if (o.expect == "admissible") ok = r.admissible;
      if (o.expect == "ordinary") ok = r.ordinary;
      if (o.expect == "non-ordinary") ok = !r.ordinary;
      return em.emit(io::to_json(r), t.str(), ok);
    }
    if (command == "twist" || command == "dual") {
      const auto m = load_motive_option(o);
      MotiveDescriptor result;
      if (command == "dual")
        result = dual(m);
      else if (o.has_tate)
        result = tate_twist(m, o.twist);
      else if (!o.chi.empty())
        result = char_twist(m, parse_character(o.chi));
      else
        throw std::invalid_argument("twist needs --tate or --chi");
      if (!o.out_file.empty()) io::save_motive(o.out_file, result);
      std::ostringstream t;
      print_motive_text(t, result);
      return em.emit(io::to_json(result), t.str());
    }
    if (command == "modified-factor") {
      const auto m = load_motive_option(o);
      const auto chi = o.chi.empty() ? DirichletCharacter::trivial(1) : parse_character(o.chi);
      const auto v = modified_factor(m, chi, o.s, o.p, o.n);
      Json j{{"label", m.label}, {"chi", character_label(chi)}, {"s", o.s}, {"p", o.p}, {"n", o.n}, {"value", v.str()},
             {"valuation", io::to_json(v.valuation())}};
      return em.emit(j, v.str() + "\n");
    }
    if (command == "tau") {
      if (subs["tau"]->count("--n")) {
        const auto t = tau_for(o, o.n);
        const Integer& v = t[static_cast<size_t>(o.n)];
        return em.emit(Json{{"n", o.n}, {"value", v.get_str()}}, v.get_str() + "\n");
      }
      if (!subs["tau"]->count("--bound")) throw std::invalid_argument("tau needs --n or --bound");
      const auto t = tau_for(o, o.bound);
      Json arr = Json::array();
      std::ostringstream text;
      for (long i = 1; i <= o.bound; ++i) {
        arr.push_back(t[static_cast<size_t>(i)].get_str());
        text << i << " " << t[static_cast<size_t>(i)].get_str() << "\n";
      }
      return em.emit(Json{{"bound", o.bound}, {"values", arr}}, text.str());
    }
    if (command == "ec-ap") {
      const Weierstrass a = o.curve.empty() ? Weierstrass{0, -1, 1, -10, -20} : parse_curve(o.curve);
      if (subs["ec-ap"]->count("--p")) {
        const long ap = count_points_ec(a, o.p);
        return em.emit(Json{{"p", o.p}, {"ap", ap}}, std::to_string(ap) + "\n");
      }
      if (!subs["ec-ap"]->count("--bound")) throw std::invalid_argument("ec-ap needs --p or --bound");
      const Integer disc = ec_discriminant(a);
      if (disc == 0) throw std::invalid_argument("singular Weierstrass equation");
      Json arr = Json::array();
      std::ostringstream text;
      for (long p : primes_below(o.bound)) {
        if (mod(disc, Integer(p)) == 0) continue;
        const long ap = count_points_ec(a, p);
        arr.push_back(Json{{"p", p}, {"ap", ap}});
        text << p << "," << ap << "\n";
      }
      return em.emit(Json{{"discriminant", disc.get_str()}, {"values", arr}}, text.str());
    }
    if (command == "eisenstein") {
      const auto e = eisenstein_qexp(o.k, o.p, o.bound);
      std::ostringstream t;
      for (size_t i = 0; i < e.coeffs.size(); ++i) t << "a_" << i << " = " << e.coeffs[i].str() << "\n";
      return em.emit(io::to_json(e), t.str());
    }
    if (command == "coleman-check") {
      const auto f = eisenstein_qexp(o.k, o.p, o.bound), g = eisenstein_qexp(o.k2, o.p, o.bound);
      const auto r = coleman_congruence_check(f, g, o.n, o.bound);
      std::ostringstream t;
      t << "congruence mod " << o.p << "^" << o.n + 1 << ": " << yes_no(r.holds) << "\nmin valuation: " << r.min_valuation.str()
        << "\n";
      if (!r.failing_indices.empty()) {
        t << "failing indices:";
        for (long i : r.failing_indices) t << " " << i;
        t << "\n";
      }
      return em.emit(io::to_json(r), t.str(), r.holds);
    }
    if (command == "family-check") {
      if (o.family == "eisenstein" && o.bound < 1) throw std::invalid_argument("eisenstein family needs --bound >= 1");
      const FamilyReport r = o.family == "eisenstein" ? eisenstein_family_check(o.p, o.branch, o.kmax, o.bound)
                                                      : dirichlet_family_check(o.p, o.branch, o.c, o.kmax);
      std::ostringstream t;
      t << r.family << " family, p = " << r.p << ", branch " << r.branch << ": " << r.pairs_checked << " pairs, "
        << r.failures.size() << " failures, min margin " << r.min_valuation_margin.str() << "\n";
      for (const auto& f : r.failures)
        t << "  k = " << f.k1 << ", k' = " << f.k2 << ", index " << f.index << ": valuation " << f.valuation.str()
          << " < " << f.required << "\n";
      return em.emit(io::to_json(r), t.str(), r.failures.empty());
    }
    if (command == "delta-scan") {
      const auto primes = delta_ordinarity_scan(o.bound, tau_for(o, std::max(o.bound - 1, 1L)));
      std::ostringstream t;
      t << "exceptional primes below " << o.bound << ":";
      for (long p : primes) t << " " << p;
      t << "\n";
      return em.emit(Json{{"bound", o.bound}, {"exceptional", primes}}, t.str());
    }
    if (command == "cache-warm") {
      const auto dir = cache_dir(o);
      if (!dir) throw std::invalid_argument("cache-warm needs --cache-dir or KUMMERLAB_CACHE_DIR");
      if (o.bernoulli_bound < 0 && o.tau_bound < 0) throw std::invalid_argument("cache-warm needs --bernoulli and/or --tau");
      Json arr = Json::array();
      std::ostringstream t;
      auto report = [&](const io::CacheSummary& sm) {
        for (const auto& w : sm.warnings) err << "warning: " << w << "\n";
        arr.push_back(io::to_json(sm));
        t << sm.kind << ": " << sm.entries << " records in " << sm.path.string() << " ("
          << (sm.hit ? "cache hit" : "regenerated") << ")\n";
      };
      if (o.bernoulli_bound >= 0) report(io::warm_bernoulli(*dir, o.bernoulli_bound));
      if (o.tau_bound >= 0) report(io::warm_tau(*dir, o.tau_bound));
      return em.emit(arr, t.str());
    }
    err << "usage error: unknown subcommand\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace kummerlab::cli
