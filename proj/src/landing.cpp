#include "dreadlocks/landing.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dreadlocks {

void require_simple(const Portrait& p) {
    const ValidationReport v = validate(p);
    if (!v.ok()) throw NotSimpleError("portrait invalid: " + v.issues.front().message);
    const SimpleReport rep = check_simple(p);
    if (!rep.simple()) {
        for (const auto& it : rep.items)
            if (!it.ok)
                throw NotSimpleError("portrait is not simple: " + it.property + ": " + it.detail);
    }
}

std::vector<ExtAddress> enumerate_addresses(const Alphabet& alphabet, const EnumWindow& w) {
    std::vector<Symbol> symbols;
    for (int32_t c = 0; c < alphabet.chains; ++c)
        for (int64_t i = w.symbol_lo; i <= w.symbol_hi; ++i) symbols.push_back({c, i});

    std::vector<ExtAddress> out;
    std::set<std::string> seen;
    const Alphabet ab = alphabet;

    std::vector<std::vector<std::vector<Symbol>>> words_by_len(
        std::max(w.max_period, w.max_preperiod) + 1);
    words_by_len[0] = {{}};
    for (size_t len = 1; len < words_by_len.size(); ++len)
        for (const auto& shorter : words_by_len[len - 1])
            for (Symbol s : symbols) {
                auto word = shorter;
                word.push_back(s);
                words_by_len[len].push_back(std::move(word));
            }

    for (size_t n = 1; n <= w.max_period; ++n) {
        for (const auto& per : words_by_len[n]) {
            for (size_t m = 0; m <= w.max_preperiod; ++m) {
                for (const auto& pre : words_by_len[m]) {
                    ExtAddress a(pre, per);
                    if (a.preperiod() != m || a.period() != n) continue;  // not in normal form
                    const std::string key = format_address(a, ab);
                    if (seen.insert(key).second) out.push_back(std::move(a));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ExtAddress& a, const ExtAddress& b) {
        if (a.preperiod() != b.preperiod()) return a.preperiod() < b.preperiod();
        if (a.period() != b.period()) return a.period() < b.period();
        return compare_linear(a, b) == Ordering::Less;
    });
    return out;
}

namespace {

// Shared state for landing decisions over one portrait.
class LandingEngine {
  public:
    explicit LandingEngine(const Portrait& p) : p_(p) { require_simple(p); }

    const Portrait& portrait() const { return p_; }

    const Itinerary& left_of(const ExtAddress& a) {
        const std::string key = format_address(a, p_.alphabet);
        auto it = itl_.find(key);
        if (it == itl_.end()) it = itl_.emplace(key, itinerary_left(a, p_)).first;
        return it->second;
    }

    const SectorId& minus_sector(const ExtAddress& a) {
        const std::string key = format_address(a, p_.alphabet);
        auto it = sec_.find(key);
        if (it == sec_.end())
            it = sec_.emplace(key, sector_of(AddressPoint::below(a), p_)).first;
        return it->second;
    }

    bool equivalent(const ExtAddress& s, const ExtAddress& t) {
        if (s == t) return true;
        std::string ka = format_address(s, p_.alphabet);
        std::string kb = format_address(t, p_.alphabet);
        if (kb < ka) std::swap(ka, kb);
        const std::string key = ka + ";" + kb;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const bool r = decide(s, t);
        memo_.emplace(key, r);
        return r;
    }

    // A preperiodic member of the group instance lies in the minus side of
    // sector sec and has the given preperiod.
    bool bridge_member_in_minus(const CritGroup& g, const SectorId& sec, size_t want_preperiod) {
        if (sec.full()) return true;
        for (const SectorArc& arc : sec.arcs()) {
            for (const ExtAddress& b : members_in_minus_arc(g, arc))
                if (b.preperiod() == want_preperiod) return true;
        }
        return false;
    }

  private:
    bool decide(const ExtAddress& s, const ExtAddress& t) {
        if (preperiod_period(s) != preperiod_period(t)) return false;
        const size_t m = s.preperiod();
        if (m == 0) return left_of(s) == left_of(t);
        if (!equivalent(s.shifted(), t.shifted())) return false;
        const SectorId& is = minus_sector(s);
        const SectorId& it = minus_sector(t);
        if (is == it) return true;
        // A Julia critical point may carry both sectors: Crit-chain case.
        for (size_t gi = 0; gi < p_.groups.size(); ++gi) {
            const CritGroup& g = p_.groups[gi];
            GroupRef probe{static_cast<int>(gi), 0, Symbol{}, g.target};
            if (g.locus != Locus::Julia || !p_.nonsingleton(probe)) continue;
            if (!equivalent(p_.singular_address(g.target), s.shifted())) continue;
            if (bridge_member_in_minus(g, is, m) && bridge_member_in_minus(g, it, m))
                return true;
        }
        return false;
    }

    // Member addresses of g inside (arc.lower, arc.upper]; exhaustive by the
    // contiguity of family indices (probes near the endpoints and far out).
    std::vector<ExtAddress> members_in_minus_arc(const CritGroup& g, const SectorArc& arc) {
        std::vector<ExtAddress> hits;
        const AddressPoint lo = AddressPoint::exact(arc.lower);
        const AddressPoint hi = AddressPoint::exact(arc.upper);
        auto in_half_open = [&](const ExtAddress& b) {
            return in_arc_lo_open(AddressPoint::exact(b), lo, hi);
        };
        auto push = [&](ExtAddress b) {
            for (const auto& h : hits)
                if (h == b) return;
            hits.push_back(std::move(b));
        };
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            for (Symbol msym : fin->members) {
                ExtAddress b = p_.boundary_address(msym, g.target);
                if (in_half_open(b)) push(std::move(b));
            }
            return hits;
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
        const int64_t lo_idx = arc.lower.first().index;
        const int64_t hi_idx = arc.upper.first().index;
        const int64_t big = std::max(std::abs(lo_idx), std::abs(hi_idx)) + 2 * modulus + 6;
        std::vector<int64_t> candidates;
        for (int64_t base : {lo_idx, hi_idx, -big, big})
            for (int64_t d = -2 * modulus - 2; d <= 2 * modulus + 2; ++d)
                candidates.push_back(base + d);
        for (int64_t i : candidates) {
            if (!is_member(i)) continue;
            ExtAddress b = p_.boundary_address({chain, i}, g.target);
            if (in_half_open(b)) push(std::move(b));
        }
        return hits;
    }

    const Portrait& p_;
    std::map<std::string, Itinerary> itl_;
    std::map<std::string, SectorId> sec_;
    std::map<std::string, bool> memo_;
};

}  // namespace

bool periodic_land_together(const ExtAddress& s, const ExtAddress& t, const Portrait& p) {
    if (s.preperiod() != 0 || t.preperiod() != 0)
        throw std::invalid_argument("periodic_land_together requires periodic addresses");
    require_simple(p);
    return itinerary_left(s, p) == itinerary_left(t, p);
}

bool landing_equivalent(const ExtAddress& s, const ExtAddress& t, const Portrait& p) {
    LandingEngine eng(p);
    return eng.equivalent(s, t);
}

struct LandingDecider::Impl {
    LandingEngine engine;
    explicit Impl(const Portrait& p) : engine(p) {}
};

LandingDecider::LandingDecider(const Portrait& p) : impl_(std::make_unique<Impl>(p)) {}
LandingDecider::~LandingDecider() = default;

bool LandingDecider::equivalent(const ExtAddress& s, const ExtAddress& t) {
    return impl_->engine.equivalent(s, t);
}

namespace {

struct Dsu {
    std::vector<size_t> parent;
    explicit Dsu(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// The Julia critical Crit set containing a, filtered to preperiodic members
// (landing classes have uniform preperiod and period, so a degenerate
// periodic member of a declared family never witnesses relation (2)).
std::optional<GroupRef> julia_crit_instance(const Portrait& p, const ExtAddress& a) {
    if (a.preperiod() == 0) return std::nullopt;
    const auto ref = p.group_of(a);
    if (!ref || ref->implicit()) return std::nullopt;
    if (!p.nonsingleton(*ref)) return std::nullopt;
    if (p.groups[ref->group].locus != Locus::Julia) return std::nullopt;
    return ref;
}

}  // namespace

std::vector<LandingClass> enumerate_classes(const Portrait& p, const EnumWindow& w) {
    require_simple(p);
    const std::vector<ExtAddress> addrs = enumerate_addresses(p.alphabet, w);
    const size_t n = addrs.size();

    // Left itineraries once per address; relation (1) buckets by the
    // normalized itinerary.
    std::vector<Itinerary> itls;
    itls.reserve(n);
    for (size_t i = 0; i < n; ++i) itls.push_back(itinerary_left(addrs[i], p));

    Dsu dsu(n);
    {
        std::map<std::string, size_t> first_with;
        for (size_t i = 0; i < n; ++i) {
            auto [it, inserted] =
                first_with.emplace(format_itinerary(itls[i], p.alphabet), i);
            if (!inserted) dsu.unite(it->second, i);
        }
    }

    // Relation (2): equal minus-sector prefix, then a common Julia Crit set.
    struct CritHit {
        size_t addr;
        size_t depth;
    };
    std::map<std::string, std::vector<CritHit>> by_instance;
    for (size_t i = 0; i < n; ++i) {
        ExtAddress cur = addrs[i];
        const size_t m = addrs[i].preperiod();
        for (size_t d = 0; d < m; ++d) {
            if (const auto ref = julia_crit_instance(p, cur)) {
                const std::string key = std::to_string(ref->group) + "@" +
                                        std::to_string(ref->block) + ">" +
                                        std::to_string(ref->target);
                by_instance[key].push_back({i, d});
            }
            cur = cur.shifted();
        }
    }
    for (const auto& [key, hits] : by_instance) {
        for (size_t a = 0; a < hits.size(); ++a) {
            for (size_t b = a + 1; b < hits.size(); ++b) {
                if (hits[a].depth != hits[b].depth) continue;
                const size_t i = hits[a].addr, j = hits[b].addr;
                if (preperiod_period(addrs[i]) != preperiod_period(addrs[j])) continue;
                bool prefix_ok = true;
                for (size_t d = 0; d < hits[a].depth && prefix_ok; ++d)
                    prefix_ok = (itls[i].at(d) == itls[j].at(d));
                if (prefix_ok) dsu.unite(i, j);
            }
        }
    }

    std::map<size_t, LandingClass> classes;
    for (size_t i = 0; i < n; ++i) {
        const size_t root = dsu.find(i);
        auto& cl = classes[root];
        cl.members.push_back(addrs[i]);
    }
    std::vector<LandingClass> out;
    for (auto& [root, cl] : classes) {
        std::sort(cl.members.begin(), cl.members.end(),
                  [](const ExtAddress& a, const ExtAddress& b) {
                      return compare_linear(a, b) == Ordering::Less;
                  });
        cl.id = cl.members.front();
        cl.preperiod = cl.id.preperiod();
        cl.period = cl.id.period();
        for (const ExtAddress& mem : cl.members) {
            const auto ref = julia_crit_instance(p, mem);
            if (ref && !ref->implicit() && p.groups[ref->group].is_zfamily()) {
                cl.locus = ClassLocus::Tract;
                cl.tract_point = p.groups[ref->group].point_id;
                break;
            }
        }
        out.push_back(std::move(cl));
    }
    std::sort(out.begin(), out.end(), [](const LandingClass& a, const LandingClass& b) {
        if (a.preperiod != b.preperiod) return a.preperiod < b.preperiod;
        if (a.period != b.period) return a.period < b.period;
        return compare_linear(a.id, b.id) == Ordering::Less;
    });
    return out;
}

ExtAddress realize_itinerary(const SectorWord& u, const Portrait& p) {
    if (u.preperiod() != 0)
        throw std::invalid_argument("realize_itinerary requires a periodic sector word");
    const ValidationReport v = validate(p);
    if (!v.ok()) throw NotSimpleError("portrait invalid: " + v.issues.front().message);
    const size_t m = u.period();

    // Forward orbit of the chosen addresses.
    std::vector<ExtAddress> orbit;
    for (const auto& s : p.singulars) {
        ExtAddress a = s.address;
        for (size_t k = 0; k <= s.address.preperiod() + s.address.period(); ++k) {
            if (std::find(orbit.begin(), orbit.end(), a) == orbit.end()) orbit.push_back(a);
            a = a.shifted();
        }
    }

    struct Interval {
        ExtAddress lo, hi;
        ExtAddress witness;
    };
    const SectorId& start = u.per().front();
    if (start.full()) throw RealizeError("full-circle sector admits no interval bookkeeping");
    std::vector<Interval> base;
    for (const SectorArc& arc : start.arcs()) {
        std::vector<ExtAddress> cuts;
        for (const ExtAddress& t : orbit)
            if (in_open_arc(AddressPoint::exact(t), AddressPoint::exact(arc.lower),
                            AddressPoint::exact(arc.upper)))
                cuts.push_back(t);
        std::sort(cuts.begin(), cuts.end(), [&](const ExtAddress& a, const ExtAddress& b) {
            return in_open_arc(AddressPoint::exact(a), AddressPoint::exact(arc.lower),
                               AddressPoint::exact(b));
        });
        ExtAddress lo = arc.lower;
        for (const ExtAddress& c : cuts) {
            base.push_back({lo, c, interior_witness(lo, c)});
            lo = c;
        }
        base.push_back({lo, arc.upper, interior_witness(lo, arc.upper)});
    }

    // Pull each base interval back one period; record the symbol words.
    auto pull_once = [&](Interval& j, const SectorId& target) {
        const ExtAddress b = sector_pullback(target, j.witness, SectorHalf::Minus, p);
        const Symbol f = b.first();
        j.lo = j.lo.prepended(f);
        j.hi = j.hi.prepended(f);
        j.witness = b;
    };
    auto pull_period = [&](Interval j) {
        for (size_t l = 1; l <= m; ++l) {
            const SectorId& target = u.at((m - (l % m)) % m);
            pull_once(j, target);
        }
        return j;
    };

    std::vector<size_t> rho(base.size());
    std::vector<std::vector<Symbol>> word(base.size());
    for (size_t i = 0; i < base.size(); ++i) {
        Interval pulled = pull_period(base[i]);
        for (size_t k = 0; k < m; ++k) word[i].push_back(pulled.witness.at(k));
        bool found = false;
        for (size_t k = 0; k < base.size() && !found; ++k) {
            if (in_open_arc(AddressPoint::exact(pulled.witness), AddressPoint::exact(base[k].lo),
                            AddressPoint::exact(base[k].hi))) {
                rho[i] = k;
                found = true;
            }
        }
        if (!found) throw RealizeError("pullback left the interval decomposition");
    }

    // Collect candidate periodic addresses from every rho-cycle.
    std::vector<ExtAddress> candidates;
    std::vector<bool> done(base.size(), false);
    for (size_t s0 = 0; s0 < base.size(); ++s0) {
        if (done[s0]) continue;
        std::vector<size_t> path;
        std::map<size_t, size_t> pos;
        size_t cur = s0;
        while (!pos.count(cur) && !done[cur]) {
            pos[cur] = path.size();
            path.push_back(cur);
            cur = rho[cur];
        }
        for (size_t i : path) done[i] = true;
        if (!pos.count(cur)) continue;  // ran into an already-processed path
        // Elements of the (m*L)-fold pullback of the cycle start with the
        // prefix words in reverse cycle order.
        std::vector<Symbol> cycle_word;
        for (size_t i = path.size(); i-- > pos[cur];)
            for (Symbol s : word[path[i]]) cycle_word.push_back(s);
        candidates.push_back(ExtAddress({}, std::move(cycle_word)));
    }

    std::optional<ExtAddress> right_match;
    for (const ExtAddress& s : candidates) {
        if (left_projection(itinerary_left(s, p)) == u) return s;
        if (!right_match && left_projection(itinerary_right(s, p)) == u) right_match = s;
    }
    if (right_match) return *right_match;
    throw RealizeError("no pullback cycle realizes the requested itinerary");
}

Itinerary class_itinerary(const LandingClass& cl, const Portrait& p) {
    const ExtAddress& x = cl.id;
    const auto [m, n] = preperiod_period(x);
    std::vector<ItineraryEntry> pre, per;
    ExtAddress cur = x;
    for (size_t j = 0; j < m + n; ++j) {
        ItineraryEntry e;
        const auto crit = julia_crit_instance(p, cur);
        bool placed = false;
        if (crit) {
            e.value = ItineraryEntry::JuliaStar{p.point_label(*crit), crit->group, crit->block, {}};
            placed = true;
        }
        if (!placed) {
            // chosen-orbit steps: the landing point sits on a chosen dreadlock
            for (size_t si = 0; si < p.singulars.size() && !placed; ++si) {
                const auto& sing = p.singulars[si];
                ExtAddress t = sing.address;
                for (size_t k = 0; k <= sing.address.preperiod() + sing.address.period(); ++k) {
                    if (t == cur) {
                        if (sing.locus == Locus::Fatou) {
                            e.value = ItineraryEntry::BoundaryPair{
                                sector_of(AddressPoint::below(cur), p),
                                sector_of(AddressPoint::above(cur), p)};
                        } else if (p.boundary_target(cur)) {
                            e.value = ItineraryEntry::JuliaStar{
                                "@" + format_address(cur, p.alphabet),
                                -1,
                                0,
                                {sector_of(AddressPoint::below(cur), p),
                                 sector_of(AddressPoint::above(cur), p)}};
                        } else {
                            e.value =
                                ItineraryEntry::SectorStep{sector_of(AddressPoint::exact(cur), p)};
                        }
                        placed = true;
                        break;
                    }
                    t = t.shifted();
                }
            }
        }
        if (!placed && p.boundary_target(cur)) {
            // a regular (singleton) preimage: Julia pre-critical boundary point
            e.value = ItineraryEntry::JuliaStar{"@" + format_address(cur, p.alphabet),
                                                -1,
                                                0,
                                                {sector_of(AddressPoint::below(cur), p),
                                                 sector_of(AddressPoint::above(cur), p)}};
            placed = true;
        }
        if (!placed)
            e.value = ItineraryEntry::SectorStep{sector_of(AddressPoint::exact(cur), p)};
        (j < m ? pre : per).push_back(std::move(e));
        cur = cur.shifted();
    }
    return Itinerary(std::move(pre), std::move(per));
}

UniqueRealizationReport unique_realization_report(const Portrait& p, const EnumWindow& w) {
    require_simple(p);
    UniqueRealizationReport rep;
    const std::vector<LandingClass> classes = enumerate_classes(p, w);
    rep.classes = classes.size();

    std::vector<Itinerary> class_its;
    class_its.reserve(classes.size());
    for (const auto& cl : classes) class_its.push_back(class_itinerary(cl, p));

    std::map<std::string, SectorWord> targets;
    for (const ExtAddress& a : enumerate_addresses(p.alphabet, w)) {
        for (const Itinerary& it : {itinerary_left(a, p), itinerary_right(a, p)}) {
            SectorWord u = left_projection(it);
            targets.emplace(format_sector_word(u, p.alphabet), std::move(u));
        }
    }
    rep.targets = targets.size();
    for (const auto& [key, u] : targets) {
        size_t count = 0;
        std::string who;
        for (size_t c = 0; c < classes.size(); ++c) {
            if (adjacent(class_its[c], u, p)) {
                ++count;
                who += (who.empty() ? "" : ", ") + format_address(classes[c].id, p.alphabet);
            }
        }
        if (count != 1) {
            ++rep.violations;
            rep.details.push_back("target " + key + " adjacent to " + std::to_string(count) +
                                  " classes [" + who + "]");
        }
    }
    return rep;
}

}  // namespace dreadlocks
