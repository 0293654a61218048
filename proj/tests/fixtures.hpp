#pragma once

#include "dreadlocks/portrait.hpp"

namespace dreadlocks::testing {

inline ExtAddress A(const std::string& text, int32_t chains = 1) {
    return parse_address(text, Alphabet{chains});
}

// The canonical exponential portrait: one singular value with fixed address
// |0, every preimage landing at the asymptotic tract point.
inline Portrait canonical_exp() {
    Portrait p;
    p.alphabet = {1};
    p.singulars.push_back({A("|0"), Locus::Julia, 0, 1});
    CritGroup g;
    g.point_id = "T0";
    g.target = 1;
    g.locus = Locus::Julia;
    g.shape = CritGroup::ZFamily{0};
    p.groups.push_back(std::move(g));
    return p;
}

// The combinatorial model of E_{2 pi i}: the ray landing at the singular
// value 0 has address 0|1 (the fixed ray |1 lands at 2 pi i).
inline Portrait exp_2pii() {
    Portrait p;
    p.alphabet = {1};
    p.singulars.push_back({A("0|1"), Locus::Julia, 1, 1});
    CritGroup g;
    g.point_id = "T0";
    g.target = 1;
    g.locus = Locus::Julia;
    g.shape = CritGroup::ZFamily{0};
    p.groups.push_back(std::move(g));
    return p;
}

// Two singular values, one degree-2 critical point over the first; all
// other preimages are implicit singleton (regular) preimages.
inline Portrait pair2() {
    Portrait p;
    p.alphabet = {1};
    p.singulars.push_back({A("|0"), Locus::Julia, 0, 1});
    p.singulars.push_back({A("|5"), Locus::Julia, 0, 1});
    CritGroup g;
    g.point_id = "c";
    g.target = 1;
    g.locus = Locus::Julia;
    g.shape = CritGroup::Finite{{Symbol{0, 0}, Symbol{0, 1}}};
    p.groups.push_back(std::move(g));
    return p;
}

// Three singular values: a ZFamily over s^1 and modulus-2 residue-pair
// pattern groups over s^2 and s^3 (the unique pattern configuration whose
// sector walk closes with sigma bijective on sectors).
inline Portrait pattern3() {
    Portrait p;
    p.alphabet = {1};
    p.singulars.push_back({A("|0"), Locus::Julia, 0, 1});
    p.singulars.push_back({A("|1"), Locus::Julia, 0, 1});
    p.singulars.push_back({A("|2"), Locus::Julia, 0, 1});
    CritGroup zf;
    zf.point_id = "T0";
    zf.target = 1;
    zf.locus = Locus::Julia;
    zf.shape = CritGroup::ZFamily{0};
    p.groups.push_back(std::move(zf));
    for (int t = 2; t <= 3; ++t) {
        CritGroup pat;
        pat.point_id = "c" + std::to_string(t);
        pat.target = t;
        pat.locus = Locus::Julia;
        pat.shape = CritGroup::PeriodicPattern{0, 2, {0, 1}};
        p.groups.push_back(std::move(pat));
    }
    return p;
}

}  // namespace dreadlocks::testing
