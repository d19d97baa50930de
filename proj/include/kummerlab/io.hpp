#pragma once

// JSON renderings and the on-disk Bernoulli/tau caches.
// Key order is fixed (ordered_json) so identical inputs give identical bytes.

#include "kummerlab/characters.hpp"
#include "kummerlab/families.hpp"
#include "kummerlab/motives.hpp"
#include "kummerlab/padic_zeta.hpp"
#include "kummerlab/polygons.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kummerlab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);       // "num/den"
Json to_json(const Valuation& v);      // integer, or "inf"
Json to_json(const PadicApprox& x);    // "p^shift * residue mod p^N"
Json to_json(const CyclotomicNumber& x);
Json to_json(const DirichletCharacter& chi);
Json to_json(const ConvexPolygon& poly);
Json to_json(const MotiveDescriptor& m);
Json to_json(const KummerReport& r);
Json to_json(const GeneralizedKummerReport& r);
Json to_json(const SlopeReport& r);
Json to_json(const ColemanReport& r);
Json to_json(const FamilyReport& r);
Json to_json(const TruncatedPowerSeries& f);
Json to_json(const QExpansion& e);

/// Accepts "n", "n/d" or a JSON integer.  Errors name `field`.
Rational rational_from_json(const Json& j, const std::string& field);
DirichletCharacter character_from_json(const Json& j);
/// Field-level std::invalid_argument on malformed input; the result is validated.
MotiveDescriptor motive_from_json(const Json& j);

MotiveDescriptor load_motive(const std::filesystem::path& path);
void save_motive(const std::filesystem::path& path, const MotiveDescriptor& m);

/// "p,ap" lines (a header line "p,ap" is allowed) turned into Euler factors.
std::map<long, EulerFactor> load_ap_csv(const std::filesystem::path& path, FactorKind kind, long weight);

struct CacheSummary {
  std::string kind;  // "bernoulli" or "tau"
  std::filesystem::path path;
  long requested;
  long entries;       // records on disk afterwards
  bool hit;           // served without recomputation
  bool regenerated;   // the file was (re)written
  std::vector<std::string> warnings;
};

Json to_json(const CacheSummary& s);

/// --cache-dir wins over $KUMMERLAB_CACHE_DIR; nullopt when neither is set.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// bernoulli.tsv holds "k<TAB>num/den" for k = 0..K.  Cached values are
/// verified against the recurrence when loaded; a malformed or wrong line
/// truncates the usable prefix and triggers regeneration with a warning.
/// Loaded values also seed the process-wide Bernoulli cache.
CacheSummary warm_bernoulli(const std::filesystem::path& dir, long kmax);

/// tau.tsv holds "n<TAB>tau(n)" for n = 0..bound.  `table` receives tau(0..bound).
CacheSummary warm_tau(const std::filesystem::path& dir, long bound, std::vector<Integer>* table = nullptr);

}  // namespace kummerlab::io
