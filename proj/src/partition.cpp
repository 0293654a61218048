#include "dreadlocks/partition.hpp"

#include <algorithm>
#include <set>

namespace dreadlocks {

namespace {

constexpr int kWalkCapBase = 64;
constexpr int64_t kPullbackChainCap = 64;

bool addr_less(const ExtAddress& a, const ExtAddress& b) {
    return compare_linear(a, b) == Ordering::Less;
}

}  // namespace

SectorId::SectorId(std::vector<SectorArc> arcs, std::string signature)
    : arcs_(std::move(arcs)), signature_(std::move(signature)) {
    std::sort(arcs_.begin(), arcs_.end(),
              [](const SectorArc& x, const SectorArc& y) { return addr_less(x.lower, y.lower); });
}

const SectorArc& SectorId::key() const {
    if (arcs_.empty()) throw std::logic_error("sector has no interval representation");
    return arcs_.front();
}

bool unlinked(const std::vector<ExtAddress>& t, const std::vector<ExtAddress>& u) {
    struct Tagged {
        const ExtAddress* a;
        bool in_t;
    };
    std::vector<Tagged> all;
    for (const auto& a : t) all.push_back({&a, true});
    for (const auto& a : u) all.push_back({&a, false});
    std::sort(all.begin(), all.end(),
              [](const Tagged& x, const Tagged& y) { return addr_less(*x.a, *y.a); });
    for (size_t i = 1; i < all.size(); ++i)
        if (*all[i - 1].a == *all[i].a) {
            if (all[i - 1].in_t != all[i].in_t)
                throw std::invalid_argument("unlinked: the two address sets must be disjoint");
            all.erase(all.begin() + i--);
        }
    if (t.empty() || u.empty()) return true;
    // Linked iff the circular label sequence has at least four blocks.
    int blocks = 0;
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i].in_t != all[(i + 1) % all.size()].in_t) ++blocks;
    return blocks < 4;
}

namespace {

void require_sided_if_boundary(const AddressPoint& pt, const Portrait& p) {
    if (pt.side == Side::Exact && p.boundary_target(pt.address))
        throw std::invalid_argument("boundary address; supply side");
}

}  // namespace

SectorArc elementary_interval_of(const AddressPoint& pt, const Portrait& p) {
    require_sided_if_boundary(pt, p);
    if (p.singulars.empty()) throw std::invalid_argument("portrait has no singular values");
    const int n = static_cast<int>(p.singulars.size());
    const Symbol f = pt.address.first();
    std::optional<ExtAddress> lower, upper;
    auto offer = [&](const ExtAddress& b) {
        const Ordering c = compare_linear(AddressPoint::exact(b), pt);
        if (c == Ordering::Less) {
            if (!lower || addr_less(*lower, b)) lower = b;
        } else if (c == Ordering::Greater) {
            if (!upper || addr_less(b, *upper)) upper = b;
        }
    };
    for (int j = 1; j <= n; ++j) offer(p.boundary_address(f, j));
    offer(p.boundary_address(Alphabet::pred(f), n));
    offer(p.boundary_address(Alphabet::succ(f), 1));
    return {*lower, *upper};
}

ExtAddress interior_witness(const ExtAddress& lo, const ExtAddress& hi) {
    if (compare_linear(lo, hi) != Ordering::Less) {
        // wrap arc: anything with a larger first symbol
        return ExtAddress({}, {Alphabet::succ(lo.first())});
    }
    size_t i = 0;
    while (lo.at(i) == hi.at(i)) ++i;
    std::vector<Symbol> pre;
    for (size_t k = 0; k <= i; ++k) pre.push_back(lo.at(k));
    const Symbol bump = Alphabet::succ(lo.at(i + 1));
    return ExtAddress(std::move(pre), {bump});
}

std::string sector_signature(const AddressPoint& pt, const Portrait& p) {
    std::string sig;
    const Symbol f = pt.address.first();
    auto below = [&](const ExtAddress& b) {
        return compare_linear(AddressPoint::exact(b), pt) == Ordering::Less;
    };
    for (size_t gi = 0; gi < p.groups.size(); ++gi) {
        const CritGroup& g = p.groups[gi];
        GroupRef probe{static_cast<int>(gi), 0, Symbol{}, g.target};
        if (!p.nonsingleton(probe)) continue;
        sig += "#" + std::to_string(gi) + ":";
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            size_t count = 0;
            for (Symbol m : fin->members)
                if (below(p.boundary_address(m, g.target))) ++count;
            sig += std::to_string(count % fin->members.size());
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            if (f.chain != zf->chain) {
                sig += "w";  // the wrap component through alpha
            } else {
                const int64_t i0 =
                    below(p.boundary_address({zf->chain, f.index}, g.target)) ? f.index
                                                                              : f.index - 1;
                sig += std::to_string(i0);
            }
        } else {
            const auto& pat = std::get<CritGroup::PeriodicPattern>(g.shape);
            std::string desc = "o";  // outside every block: one merged component
            if (f.chain == pat.chain) {
                const int64_t t0 = f.index >= 0 ? f.index / pat.modulus
                                                : -((-f.index + pat.modulus - 1) / pat.modulus);
                for (int64_t t = t0 - 1; t <= t0 + 1 && desc == "o"; ++t) {
                    for (size_t k = 0; k + 1 < pat.residues.size(); ++k) {
                        const ExtAddress a =
                            p.boundary_address({pat.chain, t * pat.modulus + pat.residues[k]},
                                               g.target);
                        const ExtAddress b =
                            p.boundary_address({pat.chain, t * pat.modulus + pat.residues[k + 1]},
                                               g.target);
                        if (in_open_arc(pt, AddressPoint::exact(a), AddressPoint::exact(b))) {
                            desc = std::to_string(t) + "." + std::to_string(k);
                            break;
                        }
                    }
                }
            }
            sig += desc;
        }
    }
    return sig;
}

namespace {

// The gluing walk; empty result when it does not close or loses a boundary.
std::vector<SectorArc> sector_walk(const AddressPoint& pt, const Portrait& p) {
    const auto lo = p.next_nonsingleton_below(pt);
    const auto hi = p.next_nonsingleton_above(pt);
    if (!lo || !hi) return {};
    std::vector<SectorArc> arcs{{*lo, *hi}};
    const int cap = std::max(kWalkCapBase, 8 * static_cast<int>(p.singulars.size() + 1));
    for (int step = 0; step < cap; ++step) {
        const ExtAddress& b = arcs.back().upper;
        const auto ref = p.group_of(b);
        if (!ref || !p.nonsingleton(*ref)) return {};
        const Symbol prev = p.instance_pred(*ref, b.first());
        ExtAddress b2 = p.boundary_address(prev, ref->target);
        const auto hi2 = p.next_nonsingleton_above(AddressPoint::exact(b2));
        if (!hi2) return {};
        SectorArc next{std::move(b2), *hi2};
        if (next == arcs.front()) return arcs;
        arcs.push_back(std::move(next));
    }
    return {};
}

}  // namespace

SectorId sector_of(const AddressPoint& pt, const Portrait& p) {
    require_sided_if_boundary(pt, p);
    std::string sig = sector_signature(pt, p);
    if (sig.empty()) return SectorId{};  // no separating groups: the full circle
    std::vector<SectorArc> arcs;
    try {
        arcs = sector_walk(pt, p);
    } catch (const SectorUnboundedError&) {
        arcs.clear();
    }
    // Attach the interval representation only when each walked arc really
    // lies in the class (portraits outside the sector-topology setting
    // produce over-merged walks).
    for (const SectorArc& arc : arcs) {
        const ExtAddress w = interior_witness(arc.lower, arc.upper);
        if (sector_signature(AddressPoint::exact(w), p) != sig) {
            arcs.clear();
            break;
        }
    }
    return SectorId(std::move(arcs), std::move(sig));
}

namespace {

// Exact test: does the Crit family g (declared, non-singleton) have a member
// address inside the open arc (lo, hi)?
bool group_member_in_arc(const Portrait& p, const CritGroup& g, const AddressPoint& lo,
                         const AddressPoint& hi) {
    auto inside = [&](const ExtAddress& b) {
        return in_open_arc(AddressPoint::exact(b), lo, hi);
    };
    if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
        for (Symbol m : fin->members)
            if (inside(p.boundary_address(m, g.target))) return true;
        return false;
    }
    int32_t chain;
    int64_t modulus;
    std::vector<int64_t> residues;
    if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
        chain = zf->chain;
        modulus = 1;
        residues = {0};
    } else {
        const auto& pat = std::get<CritGroup::PeriodicPattern>(g.shape);
        chain = pat.chain;
        modulus = pat.modulus;
        residues = pat.residues;
    }
    auto is_member = [&](int64_t i) {
        int64_t r = i % modulus;
        if (r < 0) r += modulus;
        return std::binary_search(residues.begin(), residues.end(), r);
    };
    // The family traverses the circle monotonically, so the indices of
    // members inside the arc form a contiguous (possibly infinite) range:
    // probing near the arc endpoints and at +-BIG is exhaustive.
    std::vector<int64_t> candidates;
    const int64_t lo_idx = lo.address.first().index;
    const int64_t hi_idx = hi.address.first().index;
    const int64_t big = std::max(std::abs(lo_idx), std::abs(hi_idx)) + modulus + 4;
    for (int64_t base : {lo_idx, hi_idx, -big, big})
        for (int64_t d = -modulus - 1; d <= modulus + 1; ++d) candidates.push_back(base + d);
    for (int64_t i : candidates)
        if (is_member(i) && inside(p.boundary_address({chain, i}, g.target))) return true;
    return false;
}

}  // namespace

bool same_sector(const AddressPoint& u, const AddressPoint& v, const Portrait& p) {
    require_sided_if_boundary(u, p);
    require_sided_if_boundary(v, p);
    if (compare_linear(u, v) == Ordering::Equal) return true;
    for (size_t gi = 0; gi < p.groups.size(); ++gi) {
        GroupRef probe{static_cast<int>(gi), 0, Symbol{}, p.groups[gi].target};
        if (!p.nonsingleton(probe)) continue;
        const CritGroup& g = p.groups[gi];
        if (group_member_in_arc(p, g, u, v) && group_member_in_arc(p, g, v, u)) return false;
    }
    return true;
}

bool in_side(const SectorSide& ss, const ExtAddress& a, const Portrait& p) {
    (void)p;
    if (ss.sector.full()) return true;
    if (!ss.sector.has_arcs())
        throw SectorWalkError("sector has no interval representation; sides are undefined");
    const AddressPoint x = AddressPoint::exact(a);
    for (const SectorArc& arc : ss.sector.arcs()) {
        const AddressPoint lo = AddressPoint::exact(arc.lower);
        const AddressPoint hi = AddressPoint::exact(arc.upper);
        if (ss.half == SectorHalf::Minus ? in_arc_lo_open(x, lo, hi)
                                         : in_arc_hi_open(x, lo, hi))
            return true;
    }
    return false;
}

ExtAddress sector_pullback(const SectorId& sector, const ExtAddress& a, SectorHalf side,
                           const Portrait& p) {
    if (sector.full())
        throw std::invalid_argument("pullback into the full sector is not single-valued");
    if (!sector.has_arcs())
        throw SectorWalkError("sector has no interval representation; pullback is undefined");
    for (const SectorArc& arc : sector.arcs()) {
        const Symbol fl = arc.lower.first();
        const Symbol fu = arc.upper.first();
        std::vector<Symbol> prefixes;
        if (!arc.wraps() && fl.chain == fu.chain) {
            if (fu.index - fl.index > 100000)
                throw std::invalid_argument("sector arc too wide for pullback");
            for (int64_t i = fl.index; i <= fu.index; ++i) prefixes.push_back({fl.chain, i});
        } else {
            for (int64_t i = fl.index; i <= fl.index + kPullbackChainCap; ++i)
                prefixes.push_back({fl.chain, i});
            for (int64_t i = fu.index - kPullbackChainCap; i <= fu.index; ++i)
                prefixes.push_back({fu.chain, i});
        }
        for (Symbol f : prefixes) {
            if (!p.alphabet.contains(f)) continue;
            ExtAddress b = a.prepended(f);
            const AddressPoint x = AddressPoint::exact(b);
            const AddressPoint lo = AddressPoint::exact(arc.lower);
            const AddressPoint hi = AddressPoint::exact(arc.upper);
            const bool hit = side == SectorHalf::Minus ? in_arc_lo_open(x, lo, hi)
                                                       : in_arc_hi_open(x, lo, hi);
            if (hit) return b;
        }
    }
    throw std::invalid_argument("no preimage of the address lies in the requested sector side");
}

ExtAddress project(const SectorSide& ss, const ExtAddress& a, const Portrait& p) {
    if (!ss.sector.full() && !ss.sector.has_arcs())
        throw SectorWalkError("sector has no interval representation; projection is undefined");
    if (in_side(ss, a, p)) return a;
    const auto& arcs = ss.sector.arcs();  // sorted by lower endpoint
    const size_t m = arcs.size();
    const AddressPoint x = AddressPoint::exact(a);
    for (size_t k = 0; k < m; ++k) {
        const ExtAddress& gap_lo = arcs[k].upper;
        const ExtAddress& gap_hi = arcs[(k + 1) % m].lower;
        const AddressPoint lo = AddressPoint::exact(gap_lo);
        const AddressPoint hi = AddressPoint::exact(gap_hi);
        if (ss.half == SectorHalf::Minus) {
            if (in_arc_lo_open(x, lo, hi)) return gap_lo;
        } else {
            if (in_arc_hi_open(x, lo, hi)) return gap_hi;
        }
    }
    throw std::logic_error("projection gap lookup failed");
}

std::string format_sector_key(const SectorId& s, const Alphabet& alphabet) {
    if (s.full()) return "S(full)";
    if (!s.has_arcs()) return "S{" + s.signature() + "}";
    return "S(" + format_address(s.key().lower, alphabet) + "," +
           format_address(s.key().upper, alphabet) + ")";
}

std::string format_sector(const SectorId& s, const Alphabet& alphabet) {
    if (s.full()) return "S(full)";
    if (!s.has_arcs()) return "S{" + s.signature() + "}";
    std::string out;
    for (size_t i = 0; i < s.arcs().size(); ++i) {
        if (i) out += "+";
        out += "S(" + format_address(s.arcs()[i].lower, alphabet) + "," +
               format_address(s.arcs()[i].upper, alphabet) + ")";
    }
    return out;
}

}  // namespace dreadlocks
