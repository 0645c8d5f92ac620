#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "abel/scan.hpp"

namespace abel {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

struct CheckArgs {
  std::filesystem::path document;
  bool json = false;
};

struct ResolveArgs {
  std::filesystem::path document;
  std::optional<int> max_len;
  std::optional<std::filesystem::path> verify_only;
  bool json = false;
};

struct DeltaArgs {
  std::filesystem::path document;
  int i = 1, k = 1, m = 1, n = 1;  // 1-based
  bool json = false;
};

struct StrataArgs {
  std::filesystem::path document;
  std::int64_t denominator = 2;
  std::int64_t bound = 1;
  bool resolve = false;
  bool json = false;
};

struct ScanArgs {
  ScanOptions options;
  std::filesystem::path out;
  bool json = false;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code. Input errors never escape as exceptions.
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_resolve(const ResolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_delta(const DeltaArgs& args, std::ostream& out, std::ostream& err);
int cmd_strata(const StrataArgs& args, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err);

}  // namespace abel
