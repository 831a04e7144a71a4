#include "hermlab/store.hpp"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <tuple>

namespace hermlab {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& data) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string entry_name(std::uint32_t q, std::uint32_t r, Gamma gamma) {
  return std::to_string(q) + "_" + std::to_string(r) + "_" + gamma_token(gamma) + ".csv";
}

std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// atomic on POSIX: rename over the destination within one directory
void write_atomic(const std::filesystem::path& dest, const std::string& data) {
  std::filesystem::path tmp = dest;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, dest);
}

std::uint64_t parse_u64_field(std::string_view sv, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || ptr != sv.data() + sv.size())
    throw cache_corrupt(std::string("cache field is not a number: ") + what);
  return v;
}

}  // namespace

std::string series_to_csv(const RateSeries& rs) {
  std::string out = "q,r,gamma,s,dim\n";
  std::string prefix = std::to_string(rs.q) + "," + std::to_string(rs.r) + "," +
                       gamma_token(rs.gamma) + ",";
  for (std::size_t s = 0; s < rs.dims.size(); ++s)
    out += prefix + std::to_string(s) + "," + std::to_string(rs.dims[s]) + "\n";
  return out;
}

RateSeries series_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "q,r,gamma,s,dim")
    throw cache_corrupt("cache header mismatch");
  std::uint32_t q = 0, r = 0;
  std::optional<Gamma> gamma;
  std::vector<std::uint32_t> dims;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string_view sv = line;
    std::string_view field[5];
    for (int i = 0; i < 5; ++i) {
      std::size_t comma = sv.find(',');
      if (i < 4 && comma == std::string_view::npos)
        throw cache_corrupt("cache row has too few fields");
      if (i == 4 && comma != std::string_view::npos)
        throw cache_corrupt("cache row has too many fields");
      field[i] = sv.substr(0, comma);
      if (comma != std::string_view::npos) sv.remove_prefix(comma + 1);
    }
    std::uint32_t rq = (std::uint32_t)parse_u64_field(field[0], "q");
    std::uint32_t rr = (std::uint32_t)parse_u64_field(field[1], "r");
    auto rg = gamma_from_token(field[2]);
    if (!rg) throw cache_corrupt("cache row names an unknown gamma");
    std::uint64_t s = parse_u64_field(field[3], "s");
    std::uint32_t d = (std::uint32_t)parse_u64_field(field[4], "dim");
    if (dims.empty()) {
      q = rq;
      r = rr;
      gamma = rg;
    } else if (rq != q || rr != r || rg != gamma) {
      throw cache_corrupt("cache rows disagree on the series key");
    }
    if (s != dims.size()) throw cache_corrupt("cache rows skip an s value");
    dims.push_back(d);
  }
  if (!gamma) throw cache_corrupt("cache entry has no rows");
  try {
    return RateSeries::from_dims(q, r, *gamma, std::move(dims));
  } catch (const std::invalid_argument& e) {
    throw cache_corrupt(std::string("cache payload fails series checks: ") + e.what());
  }
}

std::uint64_t construction_fingerprint(const CodeFamily& fam) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, points_csv(fam.curve()));
  if (fam.gamma() == Gamma::degree_three)
    h = fnv1a(h, place_csv(fam.curve(), *fam.place()));
  return h;
}

SeriesStore::SeriesStore(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path SeriesStore::entry_path(std::uint32_t q, std::uint32_t r,
                                              Gamma gamma) const {
  return root_ / "v1" / entry_name(q, r, gamma);
}

std::filesystem::path SeriesStore::sidecar_path(std::uint32_t q, std::uint32_t r,
                                                Gamma gamma) const {
  std::filesystem::path p = entry_path(q, r, gamma);
  p += ".fp";
  return p;
}

std::optional<RateSeries> SeriesStore::load(const CodeFamily& fam) const {
  std::filesystem::path entry = entry_path(fam.q(), fam.r(), fam.gamma());
  auto payload = read_file(entry);
  if (!payload) return std::nullopt;
  auto side = read_file(sidecar_path(fam.q(), fam.r(), fam.gamma()));
  if (!side) return std::nullopt;
  char want[32];
  std::snprintf(want, sizeof want, "%016" PRIx64 "\n", construction_fingerprint(fam));
  if (*side != want) return std::nullopt;  // stale entry, recompute silently
  try {
    RateSeries rs = series_from_csv(*payload);
    if (rs.q != fam.q() || rs.r != fam.r() || rs.gamma != fam.gamma())
      throw cache_corrupt("cache entry carries the wrong series key");
    return rs;
  } catch (const cache_corrupt& e) {
    throw cache_corrupt(entry.string() + ": " + e.what());
  }
}

void SeriesStore::save(const CodeFamily& fam, const RateSeries& rs) const {
  std::filesystem::create_directories(root_ / "v1");
  write_atomic(entry_path(fam.q(), fam.r(), fam.gamma()), series_to_csv(rs));
  char fp[32];
  std::snprintf(fp, sizeof fp, "%016" PRIx64 "\n", construction_fingerprint(fam));
  write_atomic(sidecar_path(fam.q(), fam.r(), fam.gamma()), fp);
}

RateSeries SeriesStore::get(const CodeFamily& fam, unsigned jobs) const {
  if (auto hit = load(fam)) return *hit;
  RateSeries rs = RateSeries::from_records(fam.q(), fam.r(), fam.gamma(),
                                           fam.dim_series(jobs));
  save(fam, rs);
  return rs;
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, Gamma>> SeriesStore::list_entries()
    const {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Gamma>> out;
  std::filesystem::path dir = root_ / "v1";
  std::error_code ec;
  for (const auto& ent : std::filesystem::directory_iterator(dir, ec)) {
    if (!ent.is_regular_file()) continue;
    std::string name = ent.path().filename().string();
    if (name.size() < 5 || name.substr(name.size() - 4) != ".csv") continue;
    std::string stem = name.substr(0, name.size() - 4);
    std::size_t u1 = stem.find('_');
    std::size_t u2 = u1 == std::string::npos ? std::string::npos : stem.find('_', u1 + 1);
    if (u2 == std::string::npos) continue;
    auto g = gamma_from_token(std::string_view(stem).substr(u2 + 1));
    if (!g) continue;
    try {
      unsigned long q = std::stoul(stem.substr(0, u1));
      unsigned long r = std::stoul(stem.substr(u1 + 1, u2 - u1 - 1));
      out.emplace_back((std::uint32_t)q, (std::uint32_t)r, *g);
    } catch (const std::exception&) {
      continue;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hermlab
