#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dreadlocks/portrait.hpp"

namespace dreadlocks {

// An interval of the dynamic partition: two boundary addresses with no
// separating (non-singleton) boundary address strictly between them. The
// unique wrap interval runs through alpha (lower > upper in linear order).
struct SectorArc {
    ExtAddress lower;
    ExtAddress upper;

    bool wraps() const { return compare_linear(lower, upper) != Ordering::Less; }
    bool operator==(const SectorArc& o) const { return lower == o.lower && upper == o.upper; }
};

// Canonical identifier of a partition sector (an unlink-equivalence class).
// Identity is the signature: for every separating Crit set, the complement
// component containing the sector. When the class satisfies the sector
// topology (one interval per singular value, closed gluing cycle), the
// interval arcs are attached, sorted by lower endpoint; classes of portraits
// violating the proposition carry the signature only. A sector with an
// empty signature is the full circle (no separating groups).
class SectorId {
  public:
    SectorId() = default;
    SectorId(std::vector<SectorArc> arcs, std::string signature);

    const std::vector<SectorArc>& arcs() const { return arcs_; }
    const std::string& signature() const { return signature_; }
    bool full() const { return signature_.empty(); }
    bool has_arcs() const { return !arcs_.empty(); }
    const SectorArc& key() const;

    bool operator==(const SectorId& o) const { return signature_ == o.signature_; }
    bool operator!=(const SectorId& o) const { return !(*this == o); }
    bool operator<(const SectorId& o) const { return signature_ < o.signature_; }

  private:
    std::vector<SectorArc> arcs_;
    std::string signature_;
};

enum class SectorHalf { Minus, Plus };

struct SectorSide {
    SectorId sector;
    SectorHalf half = SectorHalf::Minus;
};

// Walk failed to close (portrait violates the sector topology).
struct SectorWalkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// False iff members of T and U alternate in the cyclic order. Inputs must
// be disjoint.
bool unlinked(const std::vector<ExtAddress>& t, const std::vector<ExtAddress>& u);

// The pair of cyclically adjacent boundary addresses enclosing pt (singleton
// groups included). Exact boundary points must carry a side tag.
SectorArc elementary_interval_of(const AddressPoint& pt, const Portrait& p);

// For each separating Crit set, the complement component containing pt;
// canonical per class. Two points are unlink equivalent iff their
// signatures agree.
std::string sector_signature(const AddressPoint& pt, const Portrait& p);

// The sector of the dynamic partition containing pt. The interval list is
// produced by the closure walk (extend to the nearest non-singleton
// boundary addresses, then glue each upper endpoint to its group
// predecessor until the cycle closes) and is attached only when its arcs
// agree with the signature.
SectorId sector_of(const AddressPoint& pt, const Portrait& p);

// Unlink equivalence of two points, decided directly from the groups.
bool same_sector(const AddressPoint& u, const AddressPoint& v, const Portrait& p);

// Membership in I^- (arcs half-open at the top) or I^+ (half-open at the
// bottom).
bool in_side(const SectorSide& ss, const ExtAddress& a, const Portrait& p);

// The unique b in I^side with shift(b) = a.
ExtAddress sector_pullback(const SectorId& sector, const ExtAddress& a, SectorHalf side,
                           const Portrait& p);

// pi^-/pi^+: identity on I^side, otherwise the endpoint closing the gap that
// contains a.
ExtAddress project(const SectorSide& ss, const ExtAddress& a, const Portrait& p);

std::string format_sector(const SectorId& s, const Alphabet& alphabet);
std::string format_sector_key(const SectorId& s, const Alphabet& alphabet);

// A point strictly inside the open arc (lo, hi).
ExtAddress interior_witness(const ExtAddress& lo, const ExtAddress& hi);

}  // namespace dreadlocks
