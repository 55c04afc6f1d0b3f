#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "wreathlab/group.hpp"

namespace wreathlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// `flag` if set, else WREATHLAB_SIZE_CAP, else the library default.
/// Throws ParseError for a malformed or zero cap.
std::uint64_t resolve_size_cap(std::optional<std::uint64_t> flag);

struct BuildOptions {
  std::string k;
  std::string h;
  std::string omega = "regular";
  std::optional<std::string> out;
  std::string format = "text";
  std::uint64_t size_cap = kDefaultSizeCap;
};

struct EmbedOptions {
  std::string mode;
  std::string group;
  std::string normal;
  std::string subgroup;
  std::string field;
  std::string k_generators;
  std::string alpha;
  std::string section;
  std::string format = "text";
  std::uint64_t size_cap = kDefaultSizeCap;
};

struct SizesOptions {
  std::string emit = "figure";
  int kf = 0;
  std::string group;
  std::int64_t m_max = 0;
  std::string format = "auto";
  std::optional<std::string> out;
};

struct VerifyOptions {
  std::string suite = "all";
  std::string depth = "exhaustive";
  std::uint64_t seed = 0;
  std::optional<std::string> group_file;
  std::string format = "json";
};

struct IdentifyOptions {
  std::string group;
  std::string format = "text";
};

int cmd_build(const BuildOptions& o, std::ostream& out);
int cmd_embed(const EmbedOptions& o, std::ostream& out);
int cmd_sizes(const SizesOptions& o, std::ostream& out);
int cmd_verify(const VerifyOptions& o, std::ostream& out);
int cmd_identify(const IdentifyOptions& o, std::ostream& out);

/// Runs `body`, mapping library errors to exit codes: SizeLimitError and
/// SearchBudgetExceeded -> 3, any other error -> 2. Messages go to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace wreathlab::cli
