#pragma once

// Noncommutative polynomials over exact scalars.  A generator is a pair
// (slot, id) packed into one char16_t; a word is a u16string of letters; a
// polynomial is a finite map word -> nonzero scalar coefficient, ordered by
// the monomial order used for rewriting.

#include <algorithm>
#include <map>

#include "qdg/scalars.hpp"

namespace qdg {

// All polynomial coefficients live in the fraction field (the quantized
// enveloping algebra's Cartan bracket has a 1/(q - q^{-1}) factor); values
// that stay in the Laurent ring keep denominator 1 and a fast path.
using Scalar = FieldScalar;

using Letter = char16_t;
using Word = std::u16string;

inline Letter make_letter(int slot, int id) {
    if (slot < 0 || slot > 127 || id < 0 || id > 255) throw error("letter out of range");
    return static_cast<Letter>((slot << 8) | id);
}
inline int letter_slot(Letter l) { return l >> 8; }
inline int letter_id(Letter l) { return l & 0xff; }

// Monomial order: graded, then by letter content (multiset compared via the
// descending-sorted letter sequence), then left-to-right lexicographic.
// Compatible with concatenation on both sides and a well-order.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    Word sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<Letter>());
    std::sort(sb.begin(), sb.end(), std::greater<Letter>());
    if (sa != sb) return sa < sb;
    return a < b;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// Stable-sort letters by slot (free cross-slot commutation canonical form);
// within a slot the original order is preserved.
inline Word slot_sorted(const Word& w) {
    Word r = w;
    std::stable_sort(r.begin(), r.end(),
                     [](Letter a, Letter b) { return letter_slot(a) < letter_slot(b); });
    return r;
}

class NcPoly {
  public:
    using TermMap = std::map<Word, Scalar, WordLess>;

    NcPoly() = default;
    explicit NcPoly(const Scalar& c) {
        if (!c.is_zero()) t_[Word()] = c;
    }
    static NcPoly one() { return NcPoly(Scalar(1)); }
    static NcPoly monomial(const Word& w, const Scalar& c = Scalar(1)) {
        NcPoly p;
        if (!c.is_zero()) p.t_[w] = c;
        return p;
    }
    static NcPoly gen(int slot, int id) { return monomial(Word(1, make_letter(slot, id))); }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    const Word& lead_word() const {
        if (t_.empty()) throw error("NcPoly: zero has no leading term");
        return t_.rbegin()->first;
    }
    const Scalar& lead_coeff() const {
        if (t_.empty()) throw error("NcPoly: zero has no leading term");
        return t_.rbegin()->second;
    }
    Scalar coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Scalar() : it->second;
    }
    // Coefficient of the empty word (the "constant"/scalar part).
    Scalar scalar_part() const { return coeff(Word()); }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(const NcPoly& a) {
        NcPoly r;
        for (auto& [w, c] : a.t_) r.t_[w] = -c;
        return r;
    }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly r;
        for (auto& [wa, ca] : a.t_)
            for (auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
    friend NcPoly operator*(const Scalar& c, const NcPoly& p) {
        NcPoly r;
        for (auto& [w, pc] : p.t_) r.add_term(w, c * pc);
        return r;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }
    friend bool operator<(const NcPoly& a, const NcPoly& b) { return a.t_ < b.t_; }

    // Remap letters: (slot, id) -> new letter.
    template <class F>
    NcPoly remap(F f) const {
        NcPoly r;
        for (auto& [w, c] : t_) {
            Word nw;
            nw.reserve(w.size());
            for (Letter l : w) nw.push_back(f(letter_slot(l), letter_id(l)));
            r.add_term(nw, c);
        }
        return r;
    }
    NcPoly shift_slots(int by) const {
        return remap([by](int s, int id) { return make_letter(s + by, id); });
    }

    // Substitute each letter by a polynomial (algebra-homomorphic extension).
    template <class F>
    NcPoly substitute(F f) const {
        NcPoly r;
        for (auto& [w, c] : t_) {
            NcPoly prod = NcPoly(c);
            for (Letter l : w) prod *= f(l);
            r += prod;
        }
        return r;
    }

    int degree() const {  // graded degree of the leading term; -1 for zero
        return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size());
    }

  private:
    TermMap t_;
};

}  // namespace qdg
