#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dreadlocks {

// A fundamental-domain symbol. Symbols live on k bi-infinite chains; the
// linear order is lexicographic on (chain, index) and the cyclic order
// closes through the intermediate address alpha after the last chain.
struct Symbol {
    int32_t chain = 0;
    int64_t index = 0;

    auto operator<=>(const Symbol&) const = default;
};

struct Alphabet {
    int32_t chains = 1;

    bool contains(Symbol s) const { return s.chain >= 0 && s.chain < chains; }
    static Symbol succ(Symbol s) { return {s.chain, s.index + 1}; }
    static Symbol pred(Symbol s) { return {s.chain, s.index - 1}; }
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

// An eventually periodic external address in normal form: the period word is
// primitive and the preperiod has no absorbable suffix (its last symbol
// differs from the last symbol of the period word).
class ExtAddress {
  public:
    ExtAddress() : per_{Symbol{0, 0}} {}
    ExtAddress(std::vector<Symbol> pre, std::vector<Symbol> per);

    const std::vector<Symbol>& pre() const { return pre_; }
    const std::vector<Symbol>& per() const { return per_; }
    size_t preperiod() const { return pre_.size(); }
    size_t period() const { return per_.size(); }

    // Symbol of the underlying infinite sequence at position i >= 0.
    Symbol at(size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    Symbol first() const { return at(0); }

    ExtAddress shifted() const;
    ExtAddress shifted(size_t k) const;
    ExtAddress prepended(Symbol f) const;

    bool operator==(const ExtAddress& o) const { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const ExtAddress& o) const { return !(*this == o); }
    // Structural order for containers; the dynamical order is compare_linear.
    bool operator<(const ExtAddress& o) const {
        return pre_ != o.pre_ ? pre_ < o.pre_ : per_ < o.per_;
    }

  private:
    std::vector<Symbol> pre_;
    std::vector<Symbol> per_;
};

ExtAddress shift(const ExtAddress& a);
ExtAddress normalize(std::vector<Symbol> pre, std::vector<Symbol> per);
std::pair<size_t, size_t> preperiod_period(const ExtAddress& a);

// Lexicographic order on the infinite symbol streams (the linear order on
// addresses obtained by cutting the circle at alpha).
Ordering compare_linear(const ExtAddress& a, const ExtAddress& b);

enum class Side { Below = -1, Exact = 0, Above = 1 };

// An address with a side tag; (a, Below) compares as an element
// infinitesimally smaller than (a, Exact).
struct AddressPoint {
    ExtAddress address;
    Side side = Side::Exact;

    static AddressPoint below(ExtAddress a) { return {std::move(a), Side::Below}; }
    static AddressPoint exact(ExtAddress a) { return {std::move(a), Side::Exact}; }
    static AddressPoint above(ExtAddress a) { return {std::move(a), Side::Above}; }
};

Ordering compare_linear(const AddressPoint& a, const AddressPoint& b);

// True iff b lies on the counterclockwise arc from a to c. Arguments must be
// pairwise distinct as address points.
bool cyclic_order(const AddressPoint& a, const AddressPoint& b, const AddressPoint& c);
bool cyclic_order(const ExtAddress& a, const ExtAddress& b, const ExtAddress& c);

// Membership of x in cyclic arcs bounded by lo < hi or wrapping through alpha.
bool in_open_arc(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi);
bool in_arc_lo_open(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi);
bool in_arc_hi_open(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi);

// Addresses over the n-block alphabet of an iterate. Symbols are n-tuples of
// base symbols; same normal form rules as ExtAddress.
class BlockAddress {
  public:
    using Block = std::vector<Symbol>;
    BlockAddress(std::vector<Block> pre, std::vector<Block> per);

    const std::vector<Block>& pre() const { return pre_; }
    const std::vector<Block>& per() const { return per_; }
    BlockAddress shifted() const;

    bool operator==(const BlockAddress& o) const { return pre_ == o.pre_ && per_ == o.per_; }

  private:
    std::vector<Block> pre_;
    std::vector<Block> per_;
};

// Address of the same dreadlock for the n-th iterate: the symbol stream
// grouped into consecutive n-blocks.
BlockAddress reblock(const ExtAddress& a, size_t n);

// Text grammar: "pre|per" (or "pre per per-word"), symbols "chain:index",
// chain omitted when the alphabet has a single chain.
std::string format_address(const ExtAddress& a, const Alphabet& alphabet = {1});
std::string format_symbol(Symbol s, const Alphabet& alphabet = {1});
ExtAddress parse_address(const std::string& text, const Alphabet& alphabet = {1});
std::string format_block_address(const BlockAddress& a, const Alphabet& alphabet = {1});

}  // namespace dreadlocks
