#pragma once

// On-disk persistence of a CharacterCache as one JSON file:
//
//   {
//     "format": "weylinv-character-cache",
//     "version": 1,
//     "entries": {
//       "E-6-1,0,0,0,0,0": [
//         [[-1,0,0,0,0,1],1],
//         ...
//       ]
//     }
//   }
//
// One weight per line, entries and weights in canonical order, so a fixed
// entry set always serialises to the same bytes.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "weylinv/character.hpp"
#include "weylinv/errors.hpp"

namespace weylinv {

inline constexpr const char* kCacheFormat = "weylinv-character-cache";
inline constexpr int kCacheVersion = 1;

/// Cache file could not be read, parsed or written.
class CacheError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline std::string serialize_cache(const CharacterCache& cache) {
  std::ostringstream os;
  os << "{\n  \"format\": \"" << kCacheFormat << "\",\n  \"version\": " << kCacheVersion << ",\n  \"entries\": {";
  bool first_entry = true;
  for (const auto& [key, ch] : cache.entries()) {
    os << (first_entry ? "\n" : ",\n") << "    " << nlohmann::json(key).dump() << ": [";
    first_entry = false;
    bool first_term = true;
    for (const auto& [w, m] : ch.terms()) {
      os << (first_term ? "\n" : ",\n") << "      [[" << w.to_string() << "]," << m << "]";
      first_term = false;
    }
    os << "\n    ]";
  }
  os << (first_entry ? "}\n}\n" : "\n  }\n}\n");
  return os.str();
}

namespace detail {

inline SimpleType parse_cache_key(const std::string& key) {
  const auto d1 = key.find('-');
  const auto d2 = key.find('-', d1 == std::string::npos ? d1 : d1 + 1);
  if (d1 != 1 || d2 == std::string::npos) throw CacheError("malformed cache key '" + key + "'");
  SimpleType t{parse_family(key[0]), 0};
  try {
    t.rank = std::stoi(key.substr(2, d2 - 2));
  } catch (const std::exception&) {
    throw CacheError("malformed cache key '" + key + "'");
  }
  validate_simple_type(t.family, t.rank);
  return t;
}

}  // namespace detail

/// Replaces the contents of `cache` with the parsed document. Whitespace-only
/// text yields an empty cache.
inline void deserialize_cache(const std::string& text, CharacterCache& cache) {
  cache.clear();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CacheError("corrupt cache file at byte offset " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kCacheFormat) throw CacheError("not a weylinv character cache");
  if (!doc.contains("version") || !doc["version"].is_number_integer())
    throw CacheError("cache file has no version");
  if (doc["version"].get<int>() != kCacheVersion)
    throw CacheError("cache version " + doc["version"].dump() + " does not match supported version " +
                     std::to_string(kCacheVersion));
  if (!doc.contains("entries") || !doc["entries"].is_object()) throw CacheError("cache file has no entries object");
  for (const auto& [key, list] : doc["entries"].items()) {
    const SimpleType type = detail::parse_cache_key(key);
    const Weight highest = [&] {
      std::vector<std::int64_t> coords;
      std::stringstream ss(key.substr(key.find('-', 2) + 1));
      std::string part;
      while (std::getline(ss, part, ',')) coords.push_back(std::stoll(part));
      return Weight(std::move(coords));
    }();
    if (highest.size() != static_cast<std::size_t>(type.rank)) throw CacheError("cache key '" + key + "' has wrong length");
    WeightMultiplicities terms;
    try {
      for (const auto& item : list) {
        Weight w(item.at(0).get<std::vector<std::int64_t>>());
        if (w.size() != highest.size()) throw CacheError("weight of wrong length under '" + key + "'");
        terms[w] = item.at(1).get<std::int64_t>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw CacheError("malformed entry '" + key + "': " + e.what());
    }
    cache.insert(FormalCharacter(type, highest, std::move(terms)));
  }
  cache.mark_clean();
}

/// A missing file is an empty cache.
inline void load_cache(const std::filesystem::path& path, CharacterCache& cache) {
  cache.clear();
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read cache file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  deserialize_cache(ss.str(), cache);
}

/// Writes to a sibling temporary file and renames it into place.
inline void save_cache(const std::filesystem::path& path, const CharacterCache& cache) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    out << serialize_cache(cache);
    if (!out) throw CacheError("failed writing cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot replace cache file " + path.string() + ": " + ec.message());
}

}  // namespace weylinv
