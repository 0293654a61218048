#include "dreadlocks/itinerary.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dreadlocks {

bool ItineraryEntry::operator==(const ItineraryEntry& o) const {
    if (value.index() != o.value.index()) return false;
    if (const auto* s = std::get_if<SectorStep>(&value))
        return s->sector == std::get<SectorStep>(o.value).sector;
    if (const auto* b = std::get_if<BoundaryPair>(&value)) {
        const auto& ob = std::get<BoundaryPair>(o.value);
        return b->left == ob.left && b->right == ob.right;
    }
    if (const auto* j = std::get_if<JuliaStar>(&value)) {
        const auto& oj = std::get<JuliaStar>(o.value);
        return j->point == oj.point && j->group == oj.group && j->block == oj.block;
    }
    const auto& f = std::get<FatouDiamond>(value);
    const auto& of = std::get<FatouDiamond>(o.value);
    return f.point == of.point && f.group == of.group && f.block == of.block;
}

namespace {

template <typename Entry>
void normalize_entry_words(std::vector<Entry>& pre, std::vector<Entry>& per) {
    if (per.empty()) throw std::invalid_argument("itinerary period must be nonempty");
    const size_t n = per.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = (per[i] == per[i - d]);
        if (ok) {
            per.resize(d);
            break;
        }
    }
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.begin(), per.begin() + (per.size() - 1), per.end());
    }
}

}  // namespace

Itinerary::Itinerary(std::vector<ItineraryEntry> pre, std::vector<ItineraryEntry> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
    normalize_entry_words(pre_, per_);
}

Itinerary Itinerary::shifted() const {
    if (!pre_.empty())
        return Itinerary(std::vector<ItineraryEntry>(pre_.begin() + 1, pre_.end()), per_);
    std::vector<ItineraryEntry> w(per_.begin() + 1, per_.end());
    w.push_back(per_.front());
    return Itinerary({}, std::move(w));
}

SectorWord::SectorWord(std::vector<SectorId> pre, std::vector<SectorId> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
    normalize_entry_words(pre_, per_);
}

namespace {

Itinerary sided_itinerary(const ExtAddress& a, const Portrait& p, Side side) {
    const auto [m, n] = preperiod_period(a);
    std::vector<ItineraryEntry> pre, per;
    ExtAddress cur = a;
    for (size_t j = 0; j < m + n; ++j) {
        SectorId s = sector_of(AddressPoint{cur, side}, p);
        ItineraryEntry e{ItineraryEntry::SectorStep{std::move(s)}};
        (j < m ? pre : per).push_back(std::move(e));
        cur = cur.shifted();
    }
    return Itinerary(std::move(pre), std::move(per));
}

}  // namespace

Itinerary itinerary_left(const ExtAddress& a, const Portrait& p) {
    return sided_itinerary(a, p, Side::Below);
}

Itinerary itinerary_right(const ExtAddress& a, const Portrait& p) {
    return sided_itinerary(a, p, Side::Above);
}

Itinerary itinerary_full(const ExtAddress& a, const Portrait& p) {
    const auto [m, n] = preperiod_period(a);
    std::vector<ItineraryEntry> pre, per;
    ExtAddress cur = a;
    for (size_t j = 0; j < m + n; ++j) {
        ItineraryEntry e;
        if (p.boundary_target(cur)) {
            SectorId below = sector_of(AddressPoint::below(cur), p);
            SectorId above = sector_of(AddressPoint::above(cur), p);
            e.value = ItineraryEntry::BoundaryPair{std::move(below), std::move(above)};
        } else {
            e.value = ItineraryEntry::SectorStep{sector_of(AddressPoint::exact(cur), p)};
        }
        (j < m ? pre : per).push_back(std::move(e));
        cur = cur.shifted();
    }
    return Itinerary(std::move(pre), std::move(per));
}

namespace {

std::optional<SectorId> sided_component(const ItineraryEntry& e, bool left) {
    if (const auto* s = std::get_if<ItineraryEntry::SectorStep>(&e.value)) return s->sector;
    if (const auto* b = std::get_if<ItineraryEntry::BoundaryPair>(&e.value))
        return left ? b->left : b->right;
    return std::nullopt;  // star / diamond entries have no single projection
}

}  // namespace

SectorWord left_projection(const Itinerary& it) {
    std::vector<SectorId> pre, per;
    for (const auto& e : it.pre()) {
        auto s = sided_component(e, true);
        if (!s) throw std::invalid_argument("itinerary with star entries has no projection");
        pre.push_back(std::move(*s));
    }
    for (const auto& e : it.per()) {
        auto s = sided_component(e, true);
        if (!s) throw std::invalid_argument("itinerary with star entries has no projection");
        per.push_back(std::move(*s));
    }
    return SectorWord(std::move(pre), std::move(per));
}

SectorWord right_projection(const Itinerary& it) {
    std::vector<SectorId> pre, per;
    for (const auto& e : it.pre()) {
        auto s = sided_component(e, false);
        if (!s) throw std::invalid_argument("itinerary with star entries has no projection");
        pre.push_back(std::move(*s));
    }
    for (const auto& e : it.per()) {
        auto s = sided_component(e, false);
        if (!s) throw std::invalid_argument("itinerary with star entries has no projection");
        per.push_back(std::move(*s));
    }
    return SectorWord(std::move(pre), std::move(per));
}

namespace {

// Does the starred point lie on the boundary of sector s? For a declared
// group: some interval endpoint of s belongs to the group. For a
// chosen-orbit star: s is one of the two flanking sectors.
bool star_matches(const ItineraryEntry::JuliaStar& star, const SectorId& s, const Portrait& p) {
    if (star.group >= 0) {
        if (s.full()) return true;
        const bool pattern = std::holds_alternative<CritGroup::PeriodicPattern>(
            p.groups.at(star.group).shape);
        for (const SectorArc& arc : s.arcs()) {
            for (const ExtAddress* b : {&arc.lower, &arc.upper}) {
                const auto ref = p.group_of(*b);
                if (ref && !ref->implicit() && ref->group == star.group &&
                    (!pattern || ref->block == star.block))
                    return true;
            }
        }
        return false;
    }
    for (const SectorId& fl : star.flanking)
        if (fl == s) return true;
    return false;
}

bool matches_one_side(const Itinerary& it, const SectorWord& u, const Portrait& p, bool left) {
    const size_t span = it.preperiod() + u.preperiod() + it.period() * u.period();
    for (size_t j = 0; j < span; ++j) {
        const ItineraryEntry& e = it.at(j);
        const SectorId& want = u.at(j);
        if (const auto* s = std::get_if<ItineraryEntry::SectorStep>(&e.value)) {
            if (!(s->sector == want)) return false;
        } else if (const auto* b = std::get_if<ItineraryEntry::BoundaryPair>(&e.value)) {
            if (!((left ? b->left : b->right) == want)) return false;
        } else if (const auto* st = std::get_if<ItineraryEntry::JuliaStar>(&e.value)) {
            if (!star_matches(*st, want, p)) return false;
        } else {
            return false;  // Fatou diamonds are excluded from adjacency
        }
    }
    return true;
}

}  // namespace

bool adjacent(const Itinerary& it, const SectorWord& u, const Portrait& p) {
    return matches_one_side(it, u, p, true) || matches_one_side(it, u, p, false);
}

namespace {

std::string entry_str(const ItineraryEntry& e, const Alphabet& ab) {
    if (const auto* s = std::get_if<ItineraryEntry::SectorStep>(&e.value))
        return format_sector_key(s->sector, ab);
    if (const auto* b = std::get_if<ItineraryEntry::BoundaryPair>(&e.value))
        return "B(" + format_sector_key(b->left, ab) + "|" + format_sector_key(b->right, ab) + ")";
    if (const auto* j = std::get_if<ItineraryEntry::JuliaStar>(&e.value))
        return "*(" + j->point + ")";
    return "o(" + std::get<ItineraryEntry::FatouDiamond>(e.value).point + ")";
}

}  // namespace

std::string format_itinerary(const Itinerary& it, const Alphabet& alphabet) {
    std::string out;
    for (size_t i = 0; i < it.pre().size(); ++i) {
        if (i) out += ' ';
        out += entry_str(it.pre()[i], alphabet);
    }
    out += '|';
    for (size_t i = 0; i < it.per().size(); ++i) {
        if (i) out += ' ';
        out += entry_str(it.per()[i], alphabet);
    }
    return out;
}

std::string format_sector_word(const SectorWord& u, const Alphabet& alphabet) {
    std::string out;
    for (size_t i = 0; i < u.pre().size(); ++i) {
        if (i) out += ' ';
        out += format_sector_key(u.pre()[i], alphabet);
    }
    out += '|';
    for (size_t i = 0; i < u.per().size(); ++i) {
        if (i) out += ' ';
        out += format_sector_key(u.per()[i], alphabet);
    }
    return out;
}

SectorWord parse_sector_word(const std::string& text, const Portrait& p) {
    // split on '|' or the keyword "per"
    std::string pre_part, per_part;
    const auto bar = text.find('|');
    // '|' also appears inside address tokens "a b|c"; sector entries are
    // "S(addr,addr)" so a top-level split must respect parentheses.
    size_t depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '|' && depth == 0) {
            split = i;
            break;
        }
    }
    (void)bar;
    if (split != std::string::npos) {
        pre_part = text.substr(0, split);
        per_part = text.substr(split + 1);
    } else {
        const auto kw = text.find("per");
        if (kw == std::string::npos)
            throw std::invalid_argument("sector word needs a '|' or 'per' separator");
        pre_part = text.substr(0, kw);
        per_part = text.substr(kw + 3);
    }
    auto parse_entries = [&](const std::string& part) {
        std::vector<SectorId> out;
        size_t i = 0;
        while (i < part.size()) {
            if (std::isspace(static_cast<unsigned char>(part[i]))) {
                ++i;
                continue;
            }
            if (part[i] != 'S')
                throw std::invalid_argument("sector word entries must look like S(lo,up)");
            const auto open = part.find('(', i);
            size_t close = open, d = 0;
            for (; close < part.size(); ++close) {
                if (part[close] == '(') ++d;
                if (part[close] == ')' && --d == 0) break;
            }
            if (open == std::string::npos || close >= part.size())
                throw std::invalid_argument("unbalanced parentheses in sector word");
            const std::string inner = part.substr(open + 1, close - open - 1);
            const auto comma = inner.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("sector entry needs 'lo,up' interval");
            const ExtAddress lo = parse_address(inner.substr(0, comma), p.alphabet);
            // The lower endpoint determines the sector: walk from just above it.
            out.push_back(sector_of(AddressPoint::above(lo), p));
            i = close + 1;
        }
        return out;
    };
    std::vector<SectorId> pre = parse_entries(pre_part);
    std::vector<SectorId> per = parse_entries(per_part);
    if (per.empty()) throw std::invalid_argument("sector word has an empty period");
    return SectorWord(std::move(pre), std::move(per));
}

}  // namespace dreadlocks
