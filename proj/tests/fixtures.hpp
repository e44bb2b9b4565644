// Shared test inputs: the battery and freshly computed omega representatives.
#pragma once

#include <string>
#include <vector>

#include "gxb/cohomology.hpp"
#include "gxb/twisted_center.hpp"

namespace fixtures {

inline const std::vector<std::string> kBattery = {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8"};

/// Representatives of H^3(G, mu_|G|) produced by the engine, plus the
/// trivial cocycle first.
inline std::vector<gxb::TwistedGroupData> twisted_battery(const std::string& name) {
    auto g = gxb::share(gxb::builtin_group(name));
    auto h = gxb::cohomology_group(g, 3, gxb::share(gxb::CoefficientModule::roots_of_unity(g->order())));
    std::vector<gxb::TwistedGroupData> out{gxb::TwistedGroupData::untwisted(g)};
    for (const auto& r : h.representatives()) out.emplace_back(g, r);
    return out;
}

} // namespace fixtures
