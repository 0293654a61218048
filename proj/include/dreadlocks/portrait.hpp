#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dreadlocks/address.hpp"

namespace dreadlocks {

enum class Locus { Julia, Fatou };

// The chosen address s^i at a singular value, with orbit metadata of the
// value itself (user supplied; the analytic orbit is not computable here).
struct SingularEntry {
    ExtAddress address;
    Locus locus = Locus::Julia;
    int orbit_preperiod = 0;
    int orbit_period = 1;
};

// The grouping of sigma-preimages of a chosen address into the addresses
// landing at one preimage point. Symbols not covered by any declared group
// are implicit singleton groups (regular preimages).
struct CritGroup {
    struct Finite {
        std::vector<Symbol> members;  // sorted, consecutive run within a chain
    };
    struct ZFamily {
        int32_t chain = 0;  // every symbol of the chain; an asymptotic tract point
    };
    struct PeriodicPattern {
        int32_t chain = 0;
        int64_t modulus = 1;
        std::vector<int64_t> residues;  // sorted, consecutive run in [0, modulus)
    };

    std::string point_id;
    int target = 1;  // 1-based singular index j: members are subsets of sigma^{-1}(s^j)
    Locus locus = Locus::Julia;
    std::variant<Finite, ZFamily, PeriodicPattern> shape;

    bool is_zfamily() const { return std::holds_alternative<ZFamily>(shape); }
};

// A specific Crit set: either a declared group (pattern groups carry the
// block index of the instance) or an implicit singleton.
struct GroupRef {
    int group = -1;          // index into Portrait::groups, -1 for implicit singleton
    int64_t block = 0;       // pattern block index t (members tm+r, r in residues)
    Symbol symbol{0, 0};     // for implicit singletons: the single member
    int target = 1;

    bool implicit() const { return group < 0; }
    bool operator==(const GroupRef& o) const {
        return group == o.group && block == o.block && target == o.target &&
               (!implicit() || symbol == o.symbol);
    }
};

struct ValidationIssue {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

struct SimpleReport {
    struct Item {
        std::string property;
        bool ok;
        std::string detail;
    };
    std::vector<Item> items;
    bool simple() const {
        for (const auto& it : items)
            if (!it.ok) return false;
        return true;
    }
};

class Portrait {
  public:
    Alphabet alphabet{1};
    std::vector<SingularEntry> singulars;
    std::vector<CritGroup> groups;

    size_t singular_count() const { return singulars.size(); }
    const ExtAddress& singular_address(int j) const { return singulars.at(j - 1).address; }

    // The preimage address F * s^j.
    ExtAddress boundary_address(Symbol f, int j) const {
        return singular_address(j).prepended(f);
    }

    // j such that shift(a) == s^j, i.e. a is a partition-boundary address.
    std::optional<int> boundary_target(const ExtAddress& a) const;

    // The Crit set containing F * s^j.
    GroupRef group_at(Symbol f, int j) const;
    std::optional<GroupRef> group_of(const ExtAddress& a) const;

    bool nonsingleton(const GroupRef& ref) const;
    std::string point_label(const GroupRef& ref) const;
    Locus group_locus(const GroupRef& ref) const;

    // Members of one Crit set, sorted by symbol. Unbounded sets (ZFamily)
    // cannot be materialized and throw.
    std::vector<Symbol> instance_symbols(const GroupRef& ref) const;

    // Cyclic predecessor of member f within its Crit set.
    Symbol instance_pred(const GroupRef& ref, Symbol f) const;

    // Next boundary address of a non-singleton Crit set strictly above /
    // below x in cyclic order. nullopt: no non-singleton group exists at all.
    // Throws SectorUnboundedError when the cyclic neighbor is not a finite
    // address (boundary accumulating at an intermediate address).
    std::optional<ExtAddress> next_nonsingleton_above(const AddressPoint& x) const;
    std::optional<ExtAddress> next_nonsingleton_below(const AddressPoint& x) const;

    bool has_nonsingleton_groups() const;
};

// Raised when a sector boundary is not bounded by non-singleton group
// members in one cyclic direction.
struct SectorUnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ValidationReport validate(const Portrait& p);
SimpleReport check_simple(const Portrait& p);

// Exact membership of a in the Crit set(s) of declared group g (any pattern
// block).
bool crit_contains(const Portrait& p, const CritGroup& g, const ExtAddress& a);

// Member addresses of g whose first symbol index lies in [lo, hi] (all
// chains of the group). Finite groups ignore the window when omitted.
std::vector<ExtAddress> crit_members(const Portrait& p, const CritGroup& g,
                                     std::optional<std::pair<int64_t, int64_t>> window = {});

// All boundary addresses in the open arc (lo, hi), sorted, with their Crit
// sets. The arc must not contain alpha or a chain boundary (finite answer).
std::vector<std::pair<ExtAddress, GroupRef>> boundary_addresses_in(const Portrait& p,
                                                                   const AddressPoint& lo,
                                                                   const AddressPoint& hi);

// Portrait files: JSON with fields chains / singulars / groups.
Portrait portrait_from_json(const std::string& text);
std::string portrait_to_json(const Portrait& p);
Portrait load_portrait(const std::string& path);

}  // namespace dreadlocks
