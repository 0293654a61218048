#include "dreadlocks/portrait.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dreadlocks {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int64_t mod_pos(int64_t a, int64_t b) { return a - floor_div(a, b) * b; }

bool pattern_member(const CritGroup::PeriodicPattern& pat, Symbol s) {
    if (s.chain != pat.chain) return false;
    return std::binary_search(pat.residues.begin(), pat.residues.end(),
                              mod_pos(s.index, pat.modulus));
}

}  // namespace

std::optional<int> Portrait::boundary_target(const ExtAddress& a) const {
    const ExtAddress img = a.shifted();
    for (size_t j = 1; j <= singulars.size(); ++j)
        if (img == singular_address(static_cast<int>(j))) return static_cast<int>(j);
    return std::nullopt;
}

GroupRef Portrait::group_at(Symbol f, int j) const {
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const CritGroup& g = groups[gi];
        if (g.target != j) continue;
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            if (std::binary_search(fin->members.begin(), fin->members.end(), f))
                return {static_cast<int>(gi), 0, f, j};
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            if (zf->chain == f.chain) return {static_cast<int>(gi), 0, f, j};
        } else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
            if (pattern_member(*pat, f))
                return {static_cast<int>(gi), floor_div(f.index, pat->modulus), f, j};
        }
    }
    return {-1, 0, f, j};  // implicit singleton: a regular preimage
}

std::optional<GroupRef> Portrait::group_of(const ExtAddress& a) const {
    const auto j = boundary_target(a);
    if (!j) return std::nullopt;
    return group_at(a.first(), *j);
}

bool Portrait::nonsingleton(const GroupRef& ref) const {
    if (ref.implicit()) return false;
    const CritGroup& g = groups.at(ref.group);
    if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape))
        return fin->members.size() >= 2;
    if (std::holds_alternative<CritGroup::ZFamily>(g.shape)) return true;
    return std::get<CritGroup::PeriodicPattern>(g.shape).residues.size() >= 2;
}

std::string Portrait::point_label(const GroupRef& ref) const {
    if (ref.implicit())
        return "reg(" + format_symbol(ref.symbol, alphabet) + ">" + std::to_string(ref.target) + ")";
    const CritGroup& g = groups.at(ref.group);
    if (std::holds_alternative<CritGroup::PeriodicPattern>(g.shape))
        return g.point_id + "[" + std::to_string(ref.block) + "]";
    return g.point_id;
}

Locus Portrait::group_locus(const GroupRef& ref) const {
    return ref.implicit() ? Locus::Julia : groups.at(ref.group).locus;
}

std::vector<Symbol> Portrait::instance_symbols(const GroupRef& ref) const {
    if (ref.implicit()) return {ref.symbol};
    const CritGroup& g = groups.at(ref.group);
    if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) return fin->members;
    if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
        std::vector<Symbol> out;
        for (int64_t r : pat->residues) out.push_back({pat->chain, ref.block * pat->modulus + r});
        return out;
    }
    throw std::logic_error("ZFamily member set is not finitely enumerable");
}

Symbol Portrait::instance_pred(const GroupRef& ref, Symbol f) const {
    if (ref.implicit()) return f;
    const CritGroup& g = groups.at(ref.group);
    if (std::holds_alternative<CritGroup::ZFamily>(g.shape)) return {f.chain, f.index - 1};
    const std::vector<Symbol> mem = instance_symbols(ref);
    const auto it = std::find(mem.begin(), mem.end(), f);
    if (it == mem.end()) throw std::logic_error("symbol not a member of its group instance");
    return it == mem.begin() ? mem.back() : *(it - 1);
}

bool Portrait::has_nonsingleton_groups() const {
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        GroupRef r{static_cast<int>(gi), 0, Symbol{}, groups[gi].target};
        if (nonsingleton(r)) return true;
    }
    return false;
}

namespace {

// Per-group minimal member address strictly above x, plus whether the group
// has members above x without a minimum (its chain lies above x's chain, so
// members accumulate at the chain's lower end).
struct AboveScan {
    std::optional<ExtAddress> best;
    std::optional<int32_t> unbounded_chain;

    void offer(const ExtAddress& cand, const AddressPoint& x) {
        if (!(compare_linear(AddressPoint::exact(cand), x) == Ordering::Greater)) return;
        if (!best || compare_linear(cand, *best) == Ordering::Less) best = cand;
    }
};

}  // namespace

std::optional<ExtAddress> Portrait::next_nonsingleton_above(const AddressPoint& x) const {
    AboveScan scan;
    std::optional<int32_t> wrap_unbounded_chain;  // families seen at all
    std::optional<ExtAddress> wrap_min;
    const Symbol xf = x.address.first();
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const CritGroup& g = groups[gi];
        GroupRef probe{static_cast<int>(gi), 0, Symbol{}, g.target};
        if (!nonsingleton(probe)) continue;
        const int j = g.target;
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            for (Symbol m : fin->members) scan.offer(boundary_address(m, j), x);
            const ExtAddress front = boundary_address(fin->members.front(), j);
            if (!wrap_min || compare_linear(front, *wrap_min) == Ordering::Less) wrap_min = front;
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            if (zf->chain == xf.chain) {
                for (int64_t i = xf.index; i <= xf.index + 1; ++i)
                    scan.offer(boundary_address({zf->chain, i}, j), x);
            } else if (zf->chain > xf.chain) {
                if (!scan.unbounded_chain || zf->chain < *scan.unbounded_chain)
                    scan.unbounded_chain = zf->chain;
            }
            if (!wrap_unbounded_chain || zf->chain < *wrap_unbounded_chain)
                wrap_unbounded_chain = zf->chain;
        } else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
            if (pat->chain == xf.chain) {
                for (int64_t i = xf.index; i <= xf.index + pat->modulus; ++i)
                    if (pattern_member(*pat, {pat->chain, i}))
                        scan.offer(boundary_address({pat->chain, i}, j), x);
            } else if (pat->chain > xf.chain) {
                if (!scan.unbounded_chain || pat->chain < *scan.unbounded_chain)
                    scan.unbounded_chain = pat->chain;
            }
            if (!wrap_unbounded_chain || pat->chain < *wrap_unbounded_chain)
                wrap_unbounded_chain = pat->chain;
        }
    }
    if (scan.best &&
        (!scan.unbounded_chain || scan.best->first().chain < *scan.unbounded_chain))
        return scan.best;
    if (scan.unbounded_chain)
        throw SectorUnboundedError("sector boundary accumulates at an intermediate address");
    // wrap through alpha
    if (wrap_min && (!wrap_unbounded_chain || wrap_min->first().chain < *wrap_unbounded_chain))
        return wrap_min;
    if (wrap_unbounded_chain)
        throw SectorUnboundedError("sector boundary accumulates at an intermediate address");
    return std::nullopt;
}

std::optional<ExtAddress> Portrait::next_nonsingleton_below(const AddressPoint& x) const {
    std::optional<ExtAddress> best;
    std::optional<int32_t> unbounded_chain;       // families just below x's position
    std::optional<int32_t> wrap_unbounded_chain;  // families anywhere (max chain wins on wrap)
    std::optional<ExtAddress> wrap_max;
    const Symbol xf = x.address.first();
    auto offer = [&](const ExtAddress& cand) {
        if (!(compare_linear(AddressPoint::exact(cand), x) == Ordering::Less)) return;
        if (!best || compare_linear(cand, *best) == Ordering::Greater) best = cand;
    };
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const CritGroup& g = groups[gi];
        GroupRef probe{static_cast<int>(gi), 0, Symbol{}, g.target};
        if (!nonsingleton(probe)) continue;
        const int j = g.target;
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            for (Symbol m : fin->members) offer(boundary_address(m, j));
            const ExtAddress back = boundary_address(fin->members.back(), j);
            if (!wrap_max || compare_linear(back, *wrap_max) == Ordering::Greater) wrap_max = back;
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            if (zf->chain == xf.chain) {
                for (int64_t i = xf.index - 1; i <= xf.index; ++i)
                    offer(boundary_address({zf->chain, i}, j));
            } else if (zf->chain < xf.chain) {
                if (!unbounded_chain || zf->chain > *unbounded_chain) unbounded_chain = zf->chain;
            }
            if (!wrap_unbounded_chain || zf->chain > *wrap_unbounded_chain)
                wrap_unbounded_chain = zf->chain;
        } else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
            if (pat->chain == xf.chain) {
                for (int64_t i = xf.index - pat->modulus; i <= xf.index; ++i)
                    if (pattern_member(*pat, {pat->chain, i}))
                        offer(boundary_address({pat->chain, i}, j));
            } else if (pat->chain < xf.chain) {
                if (!unbounded_chain || pat->chain > *unbounded_chain) unbounded_chain = pat->chain;
            }
            if (!wrap_unbounded_chain || pat->chain > *wrap_unbounded_chain)
                wrap_unbounded_chain = pat->chain;
        }
    }
    if (best && (!unbounded_chain || best->first().chain > *unbounded_chain)) return best;
    if (unbounded_chain)
        throw SectorUnboundedError("sector boundary accumulates at an intermediate address");
    if (wrap_max && (!wrap_unbounded_chain || wrap_max->first().chain > *wrap_unbounded_chain))
        return wrap_max;
    if (wrap_unbounded_chain)
        throw SectorUnboundedError("sector boundary accumulates at an intermediate address");
    return std::nullopt;
}

namespace {

bool covers(const CritGroup& g, Symbol s) {
    if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape))
        return std::binary_search(fin->members.begin(), fin->members.end(), s);
    if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) return zf->chain == s.chain;
    return pattern_member(std::get<CritGroup::PeriodicPattern>(g.shape), s);
}

}  // namespace

ValidationReport validate(const Portrait& p) {
    ValidationReport rep;
    auto issue = [&](std::string code, std::string msg) {
        rep.issues.push_back({std::move(code), std::move(msg)});
    };
    if (p.alphabet.chains < 1) issue("alphabet", "chain count must be >= 1");
    if (p.singulars.empty()) issue("singulars", "portrait needs at least one singular value");
    for (size_t i = 0; i < p.singulars.size(); ++i) {
        const auto& s = p.singulars[i];
        if (s.orbit_preperiod < 0) issue("orbit", "orbit preperiod must be >= 0");
        if (s.orbit_period < 1) issue("orbit", "orbit period must be >= 1");
        for (size_t k = 0; k < s.address.preperiod() + s.address.period(); ++k)
            if (!p.alphabet.contains(s.address.at(k)))
                issue("alphabet", "singular address " + std::to_string(i + 1) +
                                      " uses a symbol outside the alphabet");
    }
    for (size_t i = 1; i < p.singulars.size(); ++i)
        if (compare_linear(p.singulars[i - 1].address, p.singulars[i].address) != Ordering::Less)
            issue("order", "singular addresses must be strictly increasing (s^" +
                               std::to_string(i) + " vs s^" + std::to_string(i + 1) + ")");

    const int n = static_cast<int>(p.singulars.size());
    for (size_t gi = 0; gi < p.groups.size(); ++gi) {
        const CritGroup& g = p.groups[gi];
        const std::string tag = "group " + g.point_id;
        if (g.target < 1 || g.target > n) {
            issue("target", tag + ": target index out of range");
            continue;
        }
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            if (fin->members.empty()) issue("members", tag + ": finite group needs d >= 1 members");
            if (!std::is_sorted(fin->members.begin(), fin->members.end()))
                issue("members", tag + ": members must be sorted");
            for (size_t i = 0; i < fin->members.size(); ++i) {
                if (!p.alphabet.contains(fin->members[i]))
                    issue("alphabet", tag + ": member outside alphabet");
                if (i > 0 && !(fin->members[i].chain == fin->members[i - 1].chain &&
                               fin->members[i].index == fin->members[i - 1].index + 1))
                    issue("consecutive", tag + ": members must form a consecutive run");
            }
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            if (zf->chain < 0 || zf->chain >= p.alphabet.chains)
                issue("alphabet", tag + ": chain outside alphabet");
        } else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
            if (pat->chain < 0 || pat->chain >= p.alphabet.chains)
                issue("alphabet", tag + ": chain outside alphabet");
            if (pat->modulus < 1) issue("pattern", tag + ": modulus must be >= 1");
            if (pat->residues.empty()) issue("pattern", tag + ": residue set must be nonempty");
            if (!std::is_sorted(pat->residues.begin(), pat->residues.end()))
                issue("pattern", tag + ": residues must be sorted");
            for (size_t i = 0; i < pat->residues.size(); ++i) {
                if (pat->residues[i] < 0 || pat->residues[i] >= pat->modulus)
                    issue("pattern", tag + ": residue outside [0, modulus)");
                if (i > 0 && pat->residues[i] != pat->residues[i - 1] + 1)
                    issue("consecutive", tag + ": residues must form a consecutive run");
            }
        }
    }

    // No symbol may be covered twice for the same target.
    for (size_t a = 0; a < p.groups.size(); ++a) {
        for (size_t b = a + 1; b < p.groups.size(); ++b) {
            const CritGroup& ga = p.groups[a];
            const CritGroup& gb = p.groups[b];
            if (ga.target != gb.target) continue;
            bool overlap = false;
            auto probe_symbols = [&](const CritGroup& g) {
                std::vector<Symbol> probes;
                if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape))
                    probes = fin->members;
                else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
                    int64_t other_mod = 1;
                    if (const auto* pb = std::get_if<CritGroup::PeriodicPattern>(
                            &(&g == &ga ? gb : ga).shape))
                        other_mod = pb->modulus;
                    const int64_t span = std::lcm(pat->modulus, other_mod);
                    for (int64_t i = 0; i < span; ++i)
                        if (pattern_member(*pat, {pat->chain, i})) probes.push_back({pat->chain, i});
                } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
                    probes.push_back({zf->chain, 0});  // any symbol of the chain
                }
                return probes;
            };
            if (ga.is_zfamily() || gb.is_zfamily()) {
                const auto* za = std::get_if<CritGroup::ZFamily>(&ga.shape);
                const auto* zb = std::get_if<CritGroup::ZFamily>(&gb.shape);
                if (za && zb)
                    overlap = za->chain == zb->chain;
                else {
                    const CritGroup& fam = za ? ga : gb;
                    const CritGroup& oth = za ? gb : ga;
                    for (Symbol s : probe_symbols(oth))
                        if (covers(fam, s)) overlap = true;
                }
            } else {
                for (Symbol s : probe_symbols(ga))
                    if (covers(gb, s)) overlap = true;
            }
            if (overlap)
                issue("partition", "groups " + ga.point_id + " and " + gb.point_id +
                                       " cover a common preimage of s^" +
                                       std::to_string(ga.target));
        }
    }

    // A chosen address must not lie in another singular value's Crit sets.
    for (int i = 1; i <= n; ++i) {
        const ExtAddress& si = p.singular_address(i);
        const ExtAddress img = si.shifted();
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (img == p.singular_address(j))
                issue("disjoint", "chosen address s^" + std::to_string(i) +
                                      " is a preimage address of s^" + std::to_string(j) +
                                      " (chosen dreadlocks must have disjoint closures)");
        }
    }
    return rep;
}

SimpleReport check_simple(const Portrait& p) {
    SimpleReport rep;
    const Alphabet& ab = p.alphabet;
    for (size_t i = 0; i < p.singulars.size(); ++i) {
        const auto& s = p.singulars[i];
        const std::string name = "s^" + std::to_string(i + 1);
        rep.items.push_back({"fixed-dreadlocks",
                             s.address.period() == 1,
                             name + " = " + format_address(s.address, ab) +
                                 " has eventual period " + std::to_string(s.address.period())});
        rep.items.push_back({"fixed-points", s.orbit_period == 1,
                             name + " orbit period " + std::to_string(s.orbit_period)});
        const size_t m = static_cast<size_t>(s.orbit_preperiod);
        const bool minimal =
            s.address.shifted(m + static_cast<size_t>(s.orbit_period)) == s.address.shifted(m);
        rep.items.push_back(
            {s.locus == Locus::Fatou ? "minimality" : "orbit-consistency", minimal,
             name + ": sigma^(m+n) agrees with sigma^m on the chosen address"});
    }
    // Forward invariance proxy: orbits of chosen addresses form a finite set.
    std::set<std::string> orbit;
    for (const auto& s : p.singulars) {
        ExtAddress a = s.address;
        for (size_t k = 0; k <= s.address.preperiod() + s.address.period(); ++k) {
            orbit.insert(format_address(a, ab));
            a = a.shifted();
        }
    }
    rep.items.push_back({"forward-invariance", true,
                         "forward orbit set has " + std::to_string(orbit.size()) + " addresses"});
    return rep;
}

bool crit_contains(const Portrait& p, const CritGroup& g, const ExtAddress& a) {
    if (a.shifted() != p.singular_address(g.target)) return false;
    return covers(g, a.first());
}

std::vector<ExtAddress> crit_members(const Portrait& p, const CritGroup& g,
                                     std::optional<std::pair<int64_t, int64_t>> window) {
    std::vector<ExtAddress> out;
    if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
        for (Symbol m : fin->members) {
            if (window && (m.index < window->first || m.index > window->second)) continue;
            out.push_back(p.boundary_address(m, g.target));
        }
        return out;
    }
    if (!window)
        throw std::invalid_argument("enumerating an infinite Crit group requires a window");
    const int32_t chain = g.is_zfamily() ? std::get<CritGroup::ZFamily>(g.shape).chain
                                         : std::get<CritGroup::PeriodicPattern>(g.shape).chain;
    for (int64_t i = window->first; i <= window->second; ++i) {
        const Symbol s{chain, i};
        if (covers(g, s)) out.push_back(p.boundary_address(s, g.target));
    }
    return out;
}

std::vector<std::pair<ExtAddress, GroupRef>> boundary_addresses_in(const Portrait& p,
                                                                   const AddressPoint& lo,
                                                                   const AddressPoint& hi) {
    if (compare_linear(lo, hi) != Ordering::Less)
        throw std::invalid_argument(
            "arc contains alpha (or is empty); boundary address set would be infinite");
    const Symbol fl = lo.address.first();
    const Symbol fh = hi.address.first();
    if (fl.chain != fh.chain)
        throw std::invalid_argument(
            "arc crosses a chain boundary; boundary address set would be infinite");
    if (fh.index - fl.index > 100000) throw std::invalid_argument("arc too wide to enumerate");
    std::vector<std::pair<ExtAddress, GroupRef>> out;
    for (int64_t idx = fl.index; idx <= fh.index; ++idx) {
        for (int j = 1; j <= static_cast<int>(p.singulars.size()); ++j) {
            const Symbol f{fl.chain, idx};
            ExtAddress b = p.boundary_address(f, j);
            if (in_open_arc(AddressPoint::exact(b), lo, hi))
                out.push_back({std::move(b), p.group_at(f, j)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return compare_linear(x.first, y.first) == Ordering::Less;
    });
    return out;
}

namespace {

using nlohmann::ordered_json;

Locus parse_locus(const std::string& s) {
    if (s == "julia") return Locus::Julia;
    if (s == "fatou") return Locus::Fatou;
    throw std::invalid_argument("locus must be 'julia' or 'fatou', got '" + s + "'");
}

std::string locus_str(Locus l) { return l == Locus::Julia ? "julia" : "fatou"; }

}  // namespace

Portrait portrait_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("portrait file is not valid JSON: ") + e.what());
    }
    Portrait p;
    try {
        p.alphabet.chains = doc.at("chains").get<int32_t>();
        for (const auto& s : doc.at("singulars")) {
            SingularEntry e;
            e.address = parse_address(s.at("address").get<std::string>(), p.alphabet);
            e.locus = parse_locus(s.at("locus").get<std::string>());
            e.orbit_preperiod = s.at("preperiod").get<int>();
            e.orbit_period = s.at("period").get<int>();
            p.singulars.push_back(std::move(e));
        }
        for (const auto& g : doc.at("groups")) {
            CritGroup cg;
            cg.point_id = g.at("point").get<std::string>();
            cg.target = g.at("target").get<int>();
            cg.locus = parse_locus(g.at("locus").get<std::string>());
            const std::string kind = g.at("kind").get<std::string>();
            if (kind == "finite") {
                CritGroup::Finite fin;
                for (const auto& m : g.at("members")) {
                    const std::string tok = m.get<std::string>();
                    ExtAddress tmp = parse_address(tok + "|0", {p.alphabet.chains});
                    fin.members.push_back(tmp.first());
                }
                std::sort(fin.members.begin(), fin.members.end());
                cg.shape = std::move(fin);
            } else if (kind == "zfamily") {
                cg.shape = CritGroup::ZFamily{g.at("chain").get<int32_t>()};
            } else if (kind == "pattern") {
                CritGroup::PeriodicPattern pat;
                pat.chain = g.at("chain").get<int32_t>();
                pat.modulus = g.at("modulus").get<int64_t>();
                for (const auto& r : g.at("residues")) pat.residues.push_back(r.get<int64_t>());
                std::sort(pat.residues.begin(), pat.residues.end());
                cg.shape = std::move(pat);
            } else {
                throw std::invalid_argument("unknown group kind '" + kind + "'");
            }
            p.groups.push_back(std::move(cg));
        }
    } catch (const ordered_json::exception& e) {
        throw std::invalid_argument(std::string("portrait file: ") + e.what());
    }
    return p;
}

std::string portrait_to_json(const Portrait& p) {
    ordered_json doc;
    doc["chains"] = p.alphabet.chains;
    doc["singulars"] = ordered_json::array();
    for (const auto& s : p.singulars) {
        ordered_json e;
        e["address"] = format_address(s.address, p.alphabet);
        e["locus"] = locus_str(s.locus);
        e["preperiod"] = s.orbit_preperiod;
        e["period"] = s.orbit_period;
        doc["singulars"].push_back(std::move(e));
    }
    doc["groups"] = ordered_json::array();
    for (const auto& g : p.groups) {
        ordered_json e;
        e["point"] = g.point_id;
        e["target"] = g.target;
        e["locus"] = locus_str(g.locus);
        if (const auto* fin = std::get_if<CritGroup::Finite>(&g.shape)) {
            e["kind"] = "finite";
            e["members"] = ordered_json::array();
            for (Symbol m : fin->members) e["members"].push_back(format_symbol(m, p.alphabet));
        } else if (const auto* zf = std::get_if<CritGroup::ZFamily>(&g.shape)) {
            e["kind"] = "zfamily";
            e["chain"] = zf->chain;
        } else if (const auto* pat = std::get_if<CritGroup::PeriodicPattern>(&g.shape)) {
            e["kind"] = "pattern";
            e["chain"] = pat->chain;
            e["modulus"] = pat->modulus;
            e["residues"] = pat->residues;
        }
        doc["groups"].push_back(std::move(e));
    }
    return doc.dump(2) + "\n";
}

Portrait load_portrait(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open portrait file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return portrait_from_json(buf.str());
}

}  // namespace dreadlocks
