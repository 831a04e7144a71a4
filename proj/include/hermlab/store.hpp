#pragma once

// Disk cache for computed dimension series. Entries live at
// {root}/v1/{q}_{r}_{gamma}.csv next to a fingerprint sidecar that ties the
// payload to the deterministic point and place constructions it came from;
// a stale fingerprint forces a silent recompute, an unreadable payload is
// reported as corruption instead of being guessed at.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermlab/agcodes.hpp"
#include "hermlab/rate_stats.hpp"

namespace hermlab {

// a cache file exists but cannot be parsed or fails its schema checks
struct cache_corrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// cache payload schema: header `q,r,gamma,s,dim`, one row per s = 0..alpha
std::string series_to_csv(const RateSeries& rs);
RateSeries series_from_csv(const std::string& text);  // throws cache_corrupt

// FNV-1a over the affine point table CSV, plus the place serialization for
// the degree-3 family
std::uint64_t construction_fingerprint(const CodeFamily& fam);

class SeriesStore {
 public:
  explicit SeriesStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path entry_path(std::uint32_t q, std::uint32_t r, Gamma gamma) const;
  std::filesystem::path sidecar_path(std::uint32_t q, std::uint32_t r, Gamma gamma) const;

  // Cached series when present with a matching fingerprint. A missing entry,
  // missing sidecar, or fingerprint mismatch is a miss (nullopt); a payload
  // that will not parse throws cache_corrupt.
  std::optional<RateSeries> load(const CodeFamily& fam) const;

  // temp file + rename, payload first and sidecar second, so an interrupted
  // write leaves either the old entry or a recomputable one, never a torn one
  void save(const CodeFamily& fam, const RateSeries& rs) const;

  // load, or compute through the family and save
  RateSeries get(const CodeFamily& fam, unsigned jobs = 1) const;

  // keys of every well-formed v1 entry on disk, fingerprints unchecked
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Gamma>> list_entries() const;

 private:
  std::filesystem::path root_;
};

}  // namespace hermlab
