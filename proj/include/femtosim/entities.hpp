#pragma once

#include <optional>
#include <unordered_set>

#include "femtosim/geometry.hpp"

namespace femtosim {

using FapId = int;
using MsId = int;

/// How a FAP reaches the core network: via the femto gateway concentrator or
/// directly to the RNC over an IP interface.
enum class Attachment { FemtoGateway, DirectRnc };

struct FemtoAccessPoint {
    FapId id = 0;
    Point2D center;
    double radius_m = 10.0;
    double tx_dbm = 10.0;
    bool open_access = false;                // when set, the CSG list is ignored
    std::unordered_set<MsId> csg;            // pre-registered subscribers
    Attachment attachment = Attachment::FemtoGateway;
};

struct MobileStation {
    MsId id = 0;
    Trajectory trajectory;
    double call_end_time_s = 0.0;
    std::optional<FapId> serving_fap;        // empty while on the macrocell
    std::unordered_set<FapId> csg_memberships;

    bool on_macro() const { return !serving_fap.has_value(); }
};

}  // namespace femtosim
