#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dreadlocks/address.hpp"
#include "fixtures.hpp"

using namespace dreadlocks;
using dreadlocks::testing::A;

TEST_CASE("shift drops the first symbol") {
    CHECK(shift(A("3|1 2")) == A("|1 2"));
    CHECK(shift(A("|0")) == A("|0"));
    CHECK(shift(A("|1 2")) == A("|2 1"));
}

TEST_CASE("normalize produces the unique normal form") {
    CHECK(normalize({{0, 1}, {0, 0}}, {{0, 0}}) == A("1|0"));
    CHECK(normalize({}, {{0, 1}, {0, 2}, {0, 1}, {0, 2}}) == A("|1 2"));
    CHECK(normalize({{0, 3}}, {{0, 1}, {0, 2}}) == A("3|1 2"));
    CHECK_THROWS_AS(normalize({}, {}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent on a sample") {
    for (const char* text : {"|0", "3|1 2", "0 1|0", "-2|3 -1", "1 1 1|2"}) {
        const ExtAddress a = A(text);
        CHECK(normalize(a.pre(), a.per()) == a);
    }
}

TEST_CASE("preperiod and period") {
    CHECK(preperiod_period(A("|0")) == std::pair<size_t, size_t>{0, 1});
    CHECK(preperiod_period(A("3|1 2")) == std::pair<size_t, size_t>{1, 2});
    CHECK(preperiod_period(A("0 1|0")) == std::pair<size_t, size_t>{2, 1});
}

TEST_CASE("shift preserves the primitive period and drops one preperiod step") {
    for (const char* text : {"|0", "3|1 2", "0 1|0", "5 0 1|2 3 4", "|1 2"}) {
        const ExtAddress a = A(text);
        const auto [m, n] = preperiod_period(a);
        const auto [ms, ns] = preperiod_period(shift(a));
        CHECK(ns == n);
        CHECK(ms == (m > 0 ? m - 1 : 0));
    }
}

TEST_CASE("linear order is lexicographic with side tags") {
    CHECK(compare_linear(A("|0"), A("|1")) == Ordering::Less);
    CHECK(compare_linear(A("1|0"), A("|1")) == Ordering::Less);
    CHECK(compare_linear(AddressPoint::above(A("1|0")), AddressPoint::exact(A("1|0"))) ==
          Ordering::Greater);
    CHECK(compare_linear(AddressPoint::below(A("1|0")), AddressPoint::exact(A("1|0"))) ==
          Ordering::Less);
}

namespace {

std::vector<ExtAddress> order_sample() {
    std::vector<ExtAddress> s;
    for (const char* text : {"|0", "|1", "|2", "1|0", "2|0", "|1 2", "|2 1", "-1|0", "|-1", "0|1",
                             "1 1|0", "|0 1", "|1 0", "2|1", "-2|-1 3"})
        s.push_back(A(text));
    return s;
}

}  // namespace

TEST_CASE("linear order is total: trichotomy and transitivity") {
    const auto s = order_sample();
    for (const auto& a : s)
        for (const auto& b : s) {
            const Ordering ab = compare_linear(a, b);
            const Ordering ba = compare_linear(b, a);
            if (a == b) {
                CHECK(ab == Ordering::Equal);
            } else {
                CHECK(ab != Ordering::Equal);
                CHECK(static_cast<int>(ab) == -static_cast<int>(ba));
            }
        }
    for (const auto& a : s)
        for (const auto& b : s)
            for (const auto& c : s) {
                if (compare_linear(a, b) == Ordering::Less &&
                    compare_linear(b, c) == Ordering::Less)
                    CHECK(compare_linear(a, c) == Ordering::Less);
            }
}

TEST_CASE("cyclic order basics") {
    CHECK(cyclic_order(A("|0"), A("|1"), A("|2")));
    CHECK_FALSE(cyclic_order(A("|0"), A("|2"), A("|1")));
    CHECK(cyclic_order(A("|2"), A("|3"), A("|0")));  // wraps through alpha
    CHECK_THROWS_AS(cyclic_order(A("|0"), A("|0"), A("|1")), std::invalid_argument);
}

TEST_CASE("cyclic order is rotation invariant and antisymmetric") {
    const auto s = order_sample();
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j)
            for (size_t k = 0; k < s.size(); ++k) {
                if (s[i] == s[j] || s[j] == s[k] || s[i] == s[k]) continue;
                const bool c = cyclic_order(s[i], s[j], s[k]);
                CHECK(c == cyclic_order(s[j], s[k], s[i]));
                CHECK(c == !cyclic_order(s[i], s[k], s[j]));
            }
}

TEST_CASE("successor and predecessor") {
    CHECK(Alphabet::succ({0, 5}) == Symbol{0, 6});
    CHECK(Alphabet::pred({0, 0}) == Symbol{0, -1});
    CHECK(Alphabet::pred(Alphabet::succ({1, -3})) == Symbol{1, -3});
}

TEST_CASE("between any two addresses lies a third") {
    const auto s = order_sample();
    for (const auto& a : s)
        for (const auto& b : s) {
            if (compare_linear(a, b) != Ordering::Less) continue;
            // first difference, then overshoot the smaller tail
            size_t i = 0;
            while (a.at(i) == b.at(i)) ++i;
            std::vector<Symbol> pre;
            for (size_t k = 0; k <= i; ++k) pre.push_back(a.at(k));
            const ExtAddress mid(pre, {Alphabet::succ(a.at(i + 1))});
            CHECK(compare_linear(a, mid) == Ordering::Less);
            CHECK(compare_linear(mid, b) == Ordering::Less);
        }
}

TEST_CASE("reblock groups the symbol stream") {
    const BlockAddress b1 = reblock(A("|1 2"), 2);
    CHECK(b1.pre().empty());
    CHECK(b1.per() == std::vector<BlockAddress::Block>{{{0, 1}, {0, 2}}});
    const BlockAddress b2 = reblock(A("|0"), 3);
    CHECK(b2.per() == std::vector<BlockAddress::Block>{{{0, 0}, {0, 0}, {0, 0}}});
}

TEST_CASE("reblock commutes with the shift of the iterate") {
    for (const char* text : {"3|1 2", "|0", "0 1|2", "5|1 2 3", "|1 2 3 4"}) {
        for (size_t n : {1u, 2u, 3u}) {
            const ExtAddress a = A(text);
            CHECK(reblock(a, n).shifted() == reblock(a.shifted(n), n));
        }
    }
}

TEST_CASE("address text grammar round trips") {
    for (const char* text : {"|0", "3|1 2", "0 1|0", "-2|3 -1"}) {
        const ExtAddress a = A(text);
        CHECK(format_address(a) == text);
        CHECK(parse_address(format_address(a)) == a);
    }
    // multi-chain symbols and the keyword alias
    const Alphabet two{2};
    const ExtAddress m = parse_address("1:4|0:0 1:-2", two);
    CHECK(format_address(m, two) == "1:4|0:0 1:-2");
    CHECK(parse_address("3 0 per 0") == A("3|0"));
    CHECK_THROWS_AS(parse_address("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_address("|1:0"), std::invalid_argument);  // chain outside k=1
}
