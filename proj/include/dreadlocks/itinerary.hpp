#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dreadlocks/partition.hpp"

namespace dreadlocks {

// One step of an itinerary: a partition sector, a boundary pair (the sectors
// whose minus/plus sides contain a boundary address), a Julia pre-critical
// star, or a Fatou diamond.
struct ItineraryEntry {
    struct SectorStep {
        SectorId sector;
    };
    struct BoundaryPair {
        SectorId left;   // the sector whose I^- contains the address
        SectorId right;  // the sector whose I^+ contains the address
    };
    struct JuliaStar {
        std::string point;
        int group = -1;     // declared group index; -1 when the star is carried
                            // by a chosen-orbit address (flanking sectors below)
        int64_t block = 0;  // pattern block index of the instance
        std::vector<SectorId> flanking;
    };
    struct FatouDiamond {
        std::string point;
        int group = -1;
        int64_t block = 0;
        std::vector<SectorId> flanking;
    };

    std::variant<SectorStep, BoundaryPair, JuliaStar, FatouDiamond> value;

    bool operator==(const ItineraryEntry& o) const;
};

class Itinerary {
  public:
    Itinerary() = default;
    Itinerary(std::vector<ItineraryEntry> pre, std::vector<ItineraryEntry> per);

    const std::vector<ItineraryEntry>& pre() const { return pre_; }
    const std::vector<ItineraryEntry>& per() const { return per_; }
    size_t preperiod() const { return pre_.size(); }
    size_t period() const { return per_.size(); }
    const ItineraryEntry& at(size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    Itinerary shifted() const;

    bool operator==(const Itinerary& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const Itinerary& o) const { return !(*this == o); }

  private:
    std::vector<ItineraryEntry> pre_;
    std::vector<ItineraryEntry> per_;
};

// A pure sector sequence (eventually periodic), the target of adjacency.
class SectorWord {
  public:
    SectorWord() = default;
    SectorWord(std::vector<SectorId> pre, std::vector<SectorId> per);

    const std::vector<SectorId>& pre() const { return pre_; }
    const std::vector<SectorId>& per() const { return per_; }
    size_t preperiod() const { return pre_.size(); }
    size_t period() const { return per_.size(); }
    const SectorId& at(size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    bool operator==(const SectorWord& o) const { return pre_ == o.pre_ && per_ == o.per_; }

  private:
    std::vector<SectorId> pre_;
    std::vector<SectorId> per_;
};

// Entry j = the sector I with sigma^j(a) in I^- (resp. I^+).
Itinerary itinerary_left(const ExtAddress& a, const Portrait& p);
Itinerary itinerary_right(const ExtAddress& a, const Portrait& p);

// Sector entries at interior steps, BoundaryPair entries on the partition
// boundary.
Itinerary itinerary_full(const ExtAddress& a, const Portrait& p);

SectorWord left_projection(const Itinerary& it);
SectorWord right_projection(const Itinerary& it);

// True iff a consistent left or right reading of it matches u; star entries
// match any sector having the starred point on its boundary.
bool adjacent(const Itinerary& it, const SectorWord& u, const Portrait& p);

std::string format_itinerary(const Itinerary& it, const Alphabet& alphabet);
std::string format_sector_word(const SectorWord& u, const Alphabet& alphabet);

// Parses "per S(a,b) S(c,d)" / "S(a,b)|S(c,d) S(e,f)"; sector tokens are
// resolved against the portrait's partition via their interval endpoints.
SectorWord parse_sector_word(const std::string& text, const Portrait& p);

}  // namespace dreadlocks
