#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dreadlocks/itinerary.hpp"

namespace dreadlocks {

// Refusal: the operation needs a simple dynamic partition.
struct NotSimpleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RealizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ClassLocus { Plane, Tract };

struct LandingClass {
    ExtAddress id;                    // minimal member in the linear order
    std::vector<ExtAddress> members;  // sorted by the linear order
    size_t preperiod = 0;
    size_t period = 1;
    ClassLocus locus = ClassLocus::Plane;
    std::optional<std::string> tract_point;  // the ZFamily point the class lands at
};

struct EnumWindow {
    int64_t symbol_lo = -2;
    int64_t symbol_hi = 2;
    size_t max_preperiod = 1;
    size_t max_period = 2;
};

// All normalized addresses with symbols in the window, preperiod <= m, and
// primitive period <= n, sorted by (preperiod, period, linear order).
std::vector<ExtAddress> enumerate_addresses(const Alphabet& alphabet, const EnumWindow& w);

// Prop "landing behavior of periodic dreadlocks": periodic addresses land
// together iff their left itineraries agree.
bool periodic_land_together(const ExtAddress& s, const ExtAddress& t, const Portrait& p);

// The full landing equivalence, decided by recursion on the preperiod.
bool landing_equivalent(const ExtAddress& s, const ExtAddress& t, const Portrait& p);

// Reusable decider with memoized itineraries and sector lookups.
class LandingDecider {
  public:
    explicit LandingDecider(const Portrait& p);
    ~LandingDecider();
    LandingDecider(const LandingDecider&) = delete;
    LandingDecider& operator=(const LandingDecider&) = delete;
    bool equivalent(const ExtAddress& s, const ExtAddress& t);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// The generated equivalence via union-find closure over an enumerated corpus
// (the oracle for the pairwise decider).
std::vector<LandingClass> enumerate_classes(const Portrait& p, const EnumWindow& w);

// A periodic address whose one-sided itinerary equals the periodic sector
// word u (interval pullback construction).
ExtAddress realize_itinerary(const SectorWord& u, const Portrait& p);

struct UniqueRealizationReport {
    size_t targets = 0;
    size_t classes = 0;
    size_t violations = 0;
    std::vector<std::string> details;
};

// For each adjacency target arising from enumerated addresses, checks that
// exactly one landing class is adjacent to it.
UniqueRealizationReport unique_realization_report(const Portrait& p, const EnumWindow& w);

// The plane-side itinerary of the class's landing point.
Itinerary class_itinerary(const LandingClass& cl, const Portrait& p);

void require_simple(const Portrait& p);

}  // namespace dreadlocks
