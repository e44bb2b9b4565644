#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace gxb {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

inline const std::vector<std::string> kSelftestBattery = {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8"};

struct PropertyResult {
    std::string name;
    bool passed = true;
    /// First failure, naming the group and datum; empty on success.
    std::string detail;
};

struct SelftestReport {
    std::vector<PropertyResult> properties;
    bool passed() const;
};

/// Module invariants over the battery, with omega taken from `fixture_dir`
/// (missing files fall back to the engine). The seed only drives the random
/// cochains fed to the differential check.
SelftestReport run_selftest(const std::filesystem::path& fixture_dir, std::uint64_t seed = kDefaultSeed);

} // namespace gxb
