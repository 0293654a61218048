#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dreadlocks/itinerary.hpp"
#include "dreadlocks/landing.hpp"
#include "fixtures.hpp"

using namespace dreadlocks;
using namespace dreadlocks::testing;

namespace {

SectorId sec(const Portrait& p, const char* interior) {
    return sector_of(AddressPoint::exact(A(interior)), p);
}

Itinerary const_itinerary(SectorId s) {
    return Itinerary({}, {ItineraryEntry{ItineraryEntry::SectorStep{std::move(s)}}});
}

}  // namespace

TEST_CASE("left itinerary of interior periodic addresses") {
    const Portrait p = canonical_exp();
    const Itinerary it1 = itinerary_left(A("|1"), p);
    CHECK(it1 == const_itinerary(sec(p, "|1")));

    const Itinerary it12 = itinerary_left(A("|1 2"), p);
    REQUIRE(it12.period() == 2);
    CHECK(it12.preperiod() == 0);
    CHECK(it12.at(0) == ItineraryEntry{ItineraryEntry::SectorStep{sec(p, "|1")}});
    CHECK(it12.at(1) == ItineraryEntry{ItineraryEntry::SectorStep{sec(p, "|2 1")}});
    CHECK(sec(p, "|2 1") == sec(p, "|2"));  // sigma(|1 2) = |2 1 lies in S_2
}

TEST_CASE("boundary addresses take the sector on the requested side") {
    const Portrait p = canonical_exp();
    const Itinerary left = itinerary_left(A("2|0"), p);
    CHECK(left.preperiod() == 1);
    CHECK(left.at(0) == ItineraryEntry{ItineraryEntry::SectorStep{sec(p, "|1")}});
    const Itinerary tail = itinerary_left(A("|0"), p);
    CHECK(left.shifted() == tail);

    const Itinerary right = itinerary_right(A("2|0"), p);
    CHECK(right.at(0) == ItineraryEntry{ItineraryEntry::SectorStep{sec(p, "|2")}});
    CHECK(itinerary_right(A("|1"), p) == itinerary_left(A("|1"), p));  // interior orbit
}

TEST_CASE("full itinerary marks boundary steps with pairs") {
    const Portrait p = canonical_exp();
    const Itinerary full = itinerary_full(A("2|0"), p);
    const auto* bp = std::get_if<ItineraryEntry::BoundaryPair>(&full.at(0).value);
    REQUIRE(bp != nullptr);
    CHECK(bp->left == sec(p, "|1"));
    CHECK(bp->right == sec(p, "|2"));
    CHECK(left_projection(full) == left_projection(itinerary_left(A("2|0"), p)));
    CHECK(right_projection(full) == left_projection(itinerary_right(A("2|0"), p)));

    const Itinerary interior = itinerary_full(A("|1"), p);
    CHECK(std::get_if<ItineraryEntry::SectorStep>(&interior.at(0).value) != nullptr);
}

TEST_CASE("itineraries are shift equivariant") {
    const Portrait p = canonical_exp();
    const Portrait q = exp_2pii();
    for (const char* text : {"|1", "|1 2", "2|0", "1 3|0", "0 1|2", "|0 1"}) {
        const ExtAddress a = A(text);
        CHECK(itinerary_left(shift(a), p) == itinerary_left(a, p).shifted());
        CHECK(itinerary_left(shift(a), q) == itinerary_left(a, q).shifted());
    }
}

TEST_CASE("periodic left itinerary forces a periodic address") {
    const Portrait p = exp_2pii();
    EnumWindow w{-2, 2, 2, 2};
    for (const ExtAddress& a : enumerate_addresses(p.alphabet, w)) {
        if (a.preperiod() == 0) continue;
        CHECK(itinerary_left(a, p).preperiod() >= 1);
    }
}

TEST_CASE("adjacency accepts exactly the one-sided projections") {
    const Portrait p = canonical_exp();
    const Itinerary it = itinerary_full(A("2|0"), p);
    const SectorWord left = left_projection(itinerary_left(A("2|0"), p));
    const SectorWord right = left_projection(itinerary_right(A("2|0"), p));
    CHECK(adjacent(it, left, p));
    CHECK(adjacent(it, right, p));

    std::vector<SectorId> wrong{sec(p, "|3")};
    const SectorWord bad(wrong, left_projection(itinerary_left(A("|0"), p)).per());
    CHECK_FALSE(adjacent(it, bad, p));
}

TEST_CASE("star entries match any sector touching the starred point") {
    const Portrait p = canonical_exp();
    // the asymptotic tract point sits on the boundary of every sector
    ItineraryEntry star{ItineraryEntry::JuliaStar{"T0", 0, 0, {}}};
    Itinerary it({}, {star});
    const SectorWord u1({}, {sec(p, "|1")});
    const SectorWord u2({}, {sec(p, "|-2")});
    CHECK(adjacent(it, u1, p));
    CHECK(adjacent(it, u2, p));

    // a chosen-orbit star carries only its two flanking sectors
    ItineraryEntry local{
        ItineraryEntry::JuliaStar{"@|0", -1, 0, {sec(p, "|-1 -2"), sec(p, "0 5|0")}}};
    Itinerary it2({}, {local});
    CHECK(adjacent(it2, SectorWord({}, {sec(p, "0 5|0")}), p));
    CHECK_FALSE(adjacent(it2, SectorWord({}, {sec(p, "|1")}), p));
}

TEST_CASE("itinerary text rendering") {
    const Portrait p = canonical_exp();
    CHECK(format_itinerary(itinerary_left(A("|1"), p), p.alphabet) == "|S(1|0,2|0)");
    CHECK(format_itinerary(itinerary_left(A("2|0"), p), p.alphabet) ==
          "S(1|0,2|0)|S(-1|0,|0)");
    CHECK(format_itinerary(itinerary_full(A("2|0"), p), p.alphabet) ==
          "B(S(1|0,2|0)|S(2|0,3|0))|B(S(-1|0,|0)|S(|0,1|0))");
    const SectorWord u = parse_sector_word("per S(1|0,2|0) S(2|0,3|0)", p);
    REQUIRE(u.period() == 2);
    CHECK(u.at(0) == sec(p, "|1"));
    CHECK(u.at(1) == sec(p, "|2"));
    CHECK(parse_sector_word("|S(1|0,2|0)", p).at(0) == sec(p, "|1"));
}

TEST_CASE("fatou diamonds render but never match adjacency") {
    const Portrait p = canonical_exp();
    ItineraryEntry diamond{ItineraryEntry::FatouDiamond{"U1", -1, 0, {}}};
    Itinerary it({}, {diamond});
    CHECK(format_itinerary(it, p.alphabet) == "|o(U1)");
    CHECK_FALSE(adjacent(it, SectorWord({}, {sec(p, "|1")}), p));
}
