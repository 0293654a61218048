#pragma once

// Brute-force unlink-equivalence oracle, independent of the sector walk.
//
// Each non-singleton Crit set cuts the circle of addresses into gaps between
// its cyclically consecutive members; two addresses are separated by the set
// iff they lie in different gaps read cyclically. Family members are
// enumerated inside a window wide enough that any alternation witness for
// sample addresses uses enumerated members (a linking pair must straddle a
// sample address, whose symbols lie strictly inside the window).

#include <map>
#include <string>
#include <vector>

#include "dreadlocks/partition.hpp"

namespace dreadlocks::testing {

struct OracleInstance {
    std::vector<ExtAddress> members;  // sorted in the linear order
};

inline std::vector<OracleInstance> oracle_instances(const Portrait& p, int64_t window_lo,
                                                    int64_t window_hi) {
    std::vector<OracleInstance> out;
    const int64_t lo = window_lo - 3, hi = window_hi + 3;
    for (size_t gi = 0; gi < p.groups.size(); ++gi) {
        const CritGroup& g = p.groups[gi];
        GroupRef probe{static_cast<int>(gi), 0, Symbol{}, g.target};
        if (!p.nonsingleton(probe)) continue;
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            OracleInstance inst;
            for (Symbol m : fin->members) inst.members.push_back(p.boundary_address(m, g.target));
            out.push_back(std::move(inst));
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            OracleInstance inst;
            for (int64_t i = lo; i <= hi; ++i)
                inst.members.push_back(p.boundary_address({zf->chain, i}, g.target));
            out.push_back(std::move(inst));
        } else {
            const auto& pat = std::get<CritGroup::PeriodicPattern>(g.shape);
            for (int64_t t = lo / pat.modulus - 2; t <= hi / pat.modulus + 2; ++t) {
                OracleInstance inst;
                for (int64_t r : pat.residues)
                    inst.members.push_back(
                        p.boundary_address({pat.chain, t * pat.modulus + r}, g.target));
                out.push_back(std::move(inst));
            }
        }
    }
    for (auto& inst : out)
        std::sort(inst.members.begin(), inst.members.end(),
                  [](const ExtAddress& a, const ExtAddress& b) {
                      return compare_linear(a, b) == Ordering::Less;
                  });
    return out;
}

// Gap index of x w.r.t. the instance (slot r and slot 0 wrap together).
inline size_t oracle_slot(const OracleInstance& inst, const ExtAddress& x) {
    size_t below = 0;
    for (const ExtAddress& m : inst.members)
        if (compare_linear(m, x) == Ordering::Less) ++below;
    return below % inst.members.size();
}

// The partition of the sample by pairwise unlinkedness from every Crit set.
// Signature vectors make the relation transparently transitive.
inline std::map<std::string, std::vector<ExtAddress>> oracle_partition(
    const Portrait& p, const std::vector<ExtAddress>& sample, int64_t window_lo,
    int64_t window_hi) {
    const auto instances = oracle_instances(p, window_lo, window_hi);
    std::map<std::string, std::vector<ExtAddress>> classes;
    for (const ExtAddress& x : sample) {
        std::string sig;
        for (const auto& inst : instances) sig += std::to_string(oracle_slot(inst, x)) + ",";
        classes[sig].push_back(x);
    }
    return classes;
}

// Literal cross-check: same signature iff {u,v} is unlinked from every
// enumerated Crit set (the unlinked predicate itself).
inline bool oracle_pair_unlinked(const Portrait& p, const std::vector<OracleInstance>& instances,
                                 const ExtAddress& u, const ExtAddress& v) {
    for (const auto& inst : instances)
        if (!unlinked(inst.members, {u, v})) return false;
    return true;
}

}  // namespace dreadlocks::testing
