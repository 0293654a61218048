#include "dreadlocks/address.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dreadlocks {

namespace {

// Smallest d dividing n with w = (first d symbols)^(n/d).
template <typename Word>
size_t primitive_root_length(const Word& w) {
    const size_t n = w.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return d;
    }
    return n;
}

template <typename Word>
void normalize_words(Word& pre, Word& per) {
    if (per.empty()) throw std::invalid_argument("address period word must be nonempty");
    const size_t d = primitive_root_length(per);
    per.resize(d);
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        std::rotate(per.begin(), per.begin() + (per.size() - 1), per.end());
    }
}

}  // namespace

ExtAddress::ExtAddress(std::vector<Symbol> pre, std::vector<Symbol> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
    normalize_words(pre_, per_);
}

ExtAddress ExtAddress::shifted() const {
    if (!pre_.empty()) {
        std::vector<Symbol> p(pre_.begin() + 1, pre_.end());
        return ExtAddress(std::move(p), per_);
    }
    std::vector<Symbol> w(per_.begin() + 1, per_.end());
    w.push_back(per_.front());
    return ExtAddress({}, std::move(w));
}

ExtAddress ExtAddress::shifted(size_t k) const {
    ExtAddress r = *this;
    for (size_t i = 0; i < k; ++i) r = r.shifted();
    return r;
}

ExtAddress ExtAddress::prepended(Symbol f) const {
    std::vector<Symbol> p;
    p.reserve(pre_.size() + 1);
    p.push_back(f);
    p.insert(p.end(), pre_.begin(), pre_.end());
    return ExtAddress(std::move(p), per_);
}

ExtAddress shift(const ExtAddress& a) { return a.shifted(); }

ExtAddress normalize(std::vector<Symbol> pre, std::vector<Symbol> per) {
    return ExtAddress(std::move(pre), std::move(per));
}

std::pair<size_t, size_t> preperiod_period(const ExtAddress& a) {
    return {a.preperiod(), a.period()};
}

Ordering compare_linear(const ExtAddress& a, const ExtAddress& b) {
    // Eventually periodic streams that agree this far agree everywhere.
    const size_t bound =
        std::max(a.preperiod(), b.preperiod()) + a.period() * b.period() + 1;
    for (size_t i = 0; i < bound; ++i) {
        const Symbol x = a.at(i), y = b.at(i);
        if (x < y) return Ordering::Less;
        if (y < x) return Ordering::Greater;
    }
    return Ordering::Equal;
}

Ordering compare_linear(const AddressPoint& a, const AddressPoint& b) {
    const Ordering c = compare_linear(a.address, b.address);
    if (c != Ordering::Equal) return c;
    if (a.side == b.side) return Ordering::Equal;
    return static_cast<int>(a.side) < static_cast<int>(b.side) ? Ordering::Less
                                                               : Ordering::Greater;
}

bool cyclic_order(const AddressPoint& a, const AddressPoint& b, const AddressPoint& c) {
    if (compare_linear(a, b) == Ordering::Equal || compare_linear(b, c) == Ordering::Equal ||
        compare_linear(a, c) == Ordering::Equal)
        throw std::invalid_argument("cyclic_order requires pairwise distinct points");
    const bool ab = compare_linear(a, b) == Ordering::Less;
    const bool bc = compare_linear(b, c) == Ordering::Less;
    const bool ca = compare_linear(c, a) == Ordering::Less;
    return (ab && bc) || (bc && ca) || (ca && ab);
}

bool cyclic_order(const ExtAddress& a, const ExtAddress& b, const ExtAddress& c) {
    return cyclic_order(AddressPoint::exact(a), AddressPoint::exact(b), AddressPoint::exact(c));
}

bool in_open_arc(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi) {
    const bool above_lo = compare_linear(lo, x) == Ordering::Less;
    const bool below_hi = compare_linear(x, hi) == Ordering::Less;
    if (compare_linear(lo, hi) == Ordering::Less) return above_lo && below_hi;
    return above_lo || below_hi;  // arc wraps through alpha
}

bool in_arc_lo_open(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi) {
    return in_open_arc(x, lo, hi) || compare_linear(x, hi) == Ordering::Equal;
}

bool in_arc_hi_open(const AddressPoint& x, const AddressPoint& lo, const AddressPoint& hi) {
    return in_open_arc(x, lo, hi) || compare_linear(x, lo) == Ordering::Equal;
}

BlockAddress::BlockAddress(std::vector<Block> pre, std::vector<Block> per)
    : pre_(std::move(pre)), per_(std::move(per)) {
    normalize_words(pre_, per_);
}

BlockAddress BlockAddress::shifted() const {
    if (!pre_.empty()) {
        std::vector<Block> p(pre_.begin() + 1, pre_.end());
        return BlockAddress(std::move(p), per_);
    }
    std::vector<Block> w(per_.begin() + 1, per_.end());
    w.push_back(per_.front());
    return BlockAddress({}, std::move(w));
}

BlockAddress reblock(const ExtAddress& a, size_t n) {
    if (n == 0) throw std::invalid_argument("reblock requires n >= 1");
    const size_t m = a.preperiod();
    const size_t pre_blocks = (m + n - 1) / n;
    size_t per_blocks = a.period() / std::gcd(a.period(), n);
    std::vector<BlockAddress::Block> pre, per;
    for (size_t b = 0; b < pre_blocks; ++b) {
        BlockAddress::Block blk;
        for (size_t i = 0; i < n; ++i) blk.push_back(a.at(b * n + i));
        pre.push_back(std::move(blk));
    }
    for (size_t b = 0; b < per_blocks; ++b) {
        BlockAddress::Block blk;
        for (size_t i = 0; i < n; ++i) blk.push_back(a.at(pre_blocks * n + b * n + i));
        per.push_back(std::move(blk));
    }
    return BlockAddress(std::move(pre), std::move(per));
}

std::string format_symbol(Symbol s, const Alphabet& alphabet) {
    if (alphabet.chains == 1) return std::to_string(s.index);
    return std::to_string(s.chain) + ":" + std::to_string(s.index);
}

std::string format_address(const ExtAddress& a, const Alphabet& alphabet) {
    std::string out;
    for (size_t i = 0; i < a.pre().size(); ++i) {
        if (i) out += ' ';
        out += format_symbol(a.pre()[i], alphabet);
    }
    out += '|';
    for (size_t i = 0; i < a.per().size(); ++i) {
        if (i) out += ' ';
        out += format_symbol(a.per()[i], alphabet);
    }
    return out;
}

std::string format_block_address(const BlockAddress& a, const Alphabet& alphabet) {
    auto fmt_block = [&](const BlockAddress::Block& b) {
        std::string s = "(";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += format_symbol(b[i], alphabet);
        }
        return s + ")";
    };
    std::string out;
    for (size_t i = 0; i < a.pre().size(); ++i) {
        if (i) out += ' ';
        out += fmt_block(a.pre()[i]);
    }
    out += '|';
    for (size_t i = 0; i < a.per().size(); ++i) {
        if (i) out += ' ';
        out += fmt_block(a.per()[i]);
    }
    return out;
}

namespace {

Symbol parse_symbol(const std::string& tok, const Alphabet& alphabet) {
    Symbol s;
    const auto colon = tok.find(':');
    try {
        if (colon == std::string::npos) {
            s.chain = 0;
            s.index = std::stoll(tok);
        } else {
            s.chain = static_cast<int32_t>(std::stol(tok.substr(0, colon)));
            s.index = std::stoll(tok.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad symbol token '" + tok + "'");
    }
    if (!alphabet.contains(s))
        throw std::invalid_argument("symbol '" + tok + "' outside alphabet with " +
                                    std::to_string(alphabet.chains) + " chain(s)");
    return s;
}

}  // namespace

ExtAddress parse_address(const std::string& text, const Alphabet& alphabet) {
    std::string pre_part, per_part;
    const auto bar = text.find('|');
    if (bar != std::string::npos) {
        if (text.find('|', bar + 1) != std::string::npos)
            throw std::invalid_argument("address '" + text + "' has multiple '|' separators");
        pre_part = text.substr(0, bar);
        per_part = text.substr(bar + 1);
    } else {
        // keyword alias: "PRE per PER"
        std::istringstream probe(text);
        std::vector<std::string> toks;
        for (std::string t; probe >> t;) toks.push_back(t);
        auto kw = std::find(toks.begin(), toks.end(), "per");
        if (kw == toks.end())
            throw std::invalid_argument("address '" + text + "' lacks a '|' or 'per' separator");
        for (auto it = toks.begin(); it != kw; ++it) pre_part += *it + " ";
        for (auto it = kw + 1; it != toks.end(); ++it) per_part += *it + " ";
    }
    std::vector<Symbol> pre, per;
    std::istringstream ps(pre_part);
    for (std::string t; ps >> t;) pre.push_back(parse_symbol(t, alphabet));
    std::istringstream qs(per_part);
    for (std::string t; qs >> t;) per.push_back(parse_symbol(t, alphabet));
    if (per.empty()) throw std::invalid_argument("address '" + text + "' has an empty period word");
    return ExtAddress(std::move(pre), std::move(per));
}

}  // namespace dreadlocks
