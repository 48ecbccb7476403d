#pragma once

// A presented Hopf algebra: named generators with a confluent rule set on
// slot 0, plus coproduct/counit/antipode tables.  Tensor powers share the
// single-slot rules (distinct slots commute freely); coproduct legs of a
// tensor power T_N live in slot blocks [0,N) and [N,2N).

#include <functional>
#include <string>
#include <vector>

#include "qdg/linalg.hpp"
#include "qdg/rewrite.hpp"

namespace qdg {

class Algebra {
  public:
    std::string name;
    std::vector<std::string> gens;     // id -> display name; precedence = id order
    RewriteSystem rw;                  // rules over slot-0 letters
    std::vector<NcPoly> relations;     // original relations lhs - rhs (slot 0)
    std::vector<NcPoly> delta_tab;     // per generator, slots {0,1}
    std::vector<Scalar> eps_tab;       // per generator
    std::vector<NcPoly> s_tab;         // per generator, slot 0

    int gen_count() const { return static_cast<int>(gens.size()); }
    int gen_id(const std::string& n) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == n) return static_cast<int>(i);
        throw error(name + ": unknown generator '" + n + "'");
    }

    void add_relation(const NcPoly& lhs_minus_rhs) {
        relations.push_back(lhs_minus_rhs);
        rw.add_relation(lhs_minus_rhs);
    }

    std::vector<Letter> alphabet(int slot = 0) const {
        std::vector<Letter> a;
        for (int i = 0; i < gen_count(); ++i) a.push_back(make_letter(slot, i));
        return a;
    }

    // ---- normal forms on tensor powers (per-slot rules, slots commute) ----
    NcPoly nf(const NcPoly& p) const {
        NcPoly r;
        for (auto& [w, c] : p.terms()) r += c * nf_word(w);
        return r;
    }
    NcPoly mul(const NcPoly& a, const NcPoly& b) const { return nf(a * b); }

    // Normal single-slot basis words of exact degree d, mapped to `slot`.
    std::vector<Word> basis_words(int d, int slot = 0) const {
        std::vector<Word> ws = rw.normal_words(alphabet(0), d);
        if (slot != 0)
            for (auto& w : ws)
                for (auto& l : w) l = make_letter(slot, letter_id(l));
        return ws;
    }
    // Normal words on slots [0,N) of total degree <= d (canonical T_N basis).
    std::vector<Word> tensor_basis(int N, int d) const {
        std::vector<Word> cur = {Word()};
        for (int s = 0; s < N; ++s) {
            std::vector<Word> next;
            for (int k = 0; k <= d; ++k)
                for (auto& b : basis_words(k, s))
                    for (auto& w : cur)
                        if (static_cast<int>(w.size() + b.size()) <= d) next.push_back(w + b);
            cur = std::move(next);
        }
        return cur;
    }

    // ---- Hopf structure on tensor powers ----
    // Coproduct T_N -> T_{2N}: leg 1 = slots [0,N), leg 2 = slots [N,2N).
    NcPoly coproduct(const NcPoly& p, int N = 1) const {
        NcPoly r = p.substitute([&](Letter l) {
            int s = letter_slot(l), id = letter_id(l);
            return delta_tab[id].remap([&](int ds, int did) {
                return make_letter(ds == 0 ? s : N + s, did);
            });
        });
        return nf(r);
    }
    // Iterated coproduct on a single-slot element: k legs in slots 0..k-1.
    NcPoly coproduct_iter(const NcPoly& p, int k) const {
        NcPoly cur = p;
        for (int i = 1; i < k; ++i) {
            cur = cur.substitute([&](Letter l) {
                int s = letter_slot(l), id = letter_id(l);
                if (s != i - 1) return NcPoly::gen(s, id);
                return delta_tab[id].remap([&](int ds, int did) {
                    return make_letter(i - 1 + ds, did);
                });
            });
        }
        return nf(cur);
    }

    Scalar counit(const NcPoly& p) const {
        Scalar r;
        for (auto& [w, c] : p.terms()) {
            Scalar t = c;
            for (Letter l : w) t *= eps_tab[letter_id(l)];
            r += t;
        }
        return r;
    }

    // Antipode, extended anti-homomorphically per slot: S(x (x) y) = Sx (x) Sy.
    NcPoly antipode(const NcPoly& p) const {
        NcPoly r;
        for (auto& [w, c] : p.terms()) {
            // reverse within each slot block, keep slot order
            Word sorted = slot_sorted(w);
            NcPoly prod = NcPoly(c);
            size_t i = 0;
            while (i < sorted.size()) {
                size_t j = i;
                int s = letter_slot(sorted[i]);
                while (j < sorted.size() && letter_slot(sorted[j]) == s) ++j;
                NcPoly block = NcPoly::one();
                for (size_t k = j; k-- > i;)
                    block *= s_tab[letter_id(sorted[k])].remap(
                        [&](int, int id) { return make_letter(s, id); });
                prod *= block;
                i = j;
            }
            r += prod;
        }
        return nf(r);
    }

    // ---- expression grammar ----
    NcPoly parse(const std::string& text) const;
    std::string emit(const NcPoly& p) const;
    std::string word_str(const Word& w) const;

    // Solve the antipode table from m(S (x) id)Delta = eta.eps = m(id (x) S)Delta,
    // with an ansatz of normal words of degree <= ansatz_deg.  Requires every
    // left/right coproduct leg of a generator to be a generator or 1 (true for
    // matrix coalgebras), so the equations are linear in the table.  An
    // optional filter(g, word) prunes the ansatz (e.g. by weight).
    void solve_antipode(int ansatz_deg,
                        const std::function<bool(int, const Word&)>& filter = {});

  private:
    NcPoly nf_word(const Word& w) const {
        Word sorted = slot_sorted(w);
        NcPoly r = NcPoly::one();
        size_t i = 0;
        while (i < sorted.size()) {
            size_t j = i;
            int s = letter_slot(sorted[i]);
            while (j < sorted.size() && letter_slot(sorted[j]) == s) ++j;
            Word block;
            for (size_t k = i; k < j; ++k) block.push_back(make_letter(0, letter_id(sorted[k])));
            NcPoly b = rw.normal_form(block);
            r = r * b.shift_slots(s);
            i = j;
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// Expression grammar: terms joined by `+`; term = factors joined by `*`;
// factor = `(laurent)` or `(laurent)/(laurent)` or a rational or a generator
// name (tensor copies suffixed _2, _3, ...).
// ---------------------------------------------------------------------------
inline NcPoly Algebra::parse(const std::string& text) const {
    size_t i = 0;
    auto ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_paren = [&]() -> std::string {
        // at '('; returns inner text, advances past ')'
        int depth = 0;
        size_t start = ++i;
        for (; i < text.size(); ++i) {
            if (text[i] == '(') ++depth;
            if (text[i] == ')') {
                if (depth == 0) break;
                --depth;
            }
        }
        if (i >= text.size()) throw error("parse: unbalanced parentheses");
        return text.substr(start, i++ - start);
    };
    NcPoly result;
    while (true) {
        ws();
        NcPoly term = NcPoly::one();
        bool any = false;
        while (i < text.size()) {
            ws();
            if (i >= text.size() || text[i] == '+') break;
            if (text[i] == '*') {
                ++i;
                ws();
            }
            if (text[i] == '(') {
                Laurent num = Laurent::parse(parse_paren());
                ws();
                Scalar s(num);
                if (i + 1 < text.size() && text[i] == '/' && text[i + 1] == '(') {
                    ++i;
                    s = Scalar(num, Laurent::parse(parse_paren()));
                }
                term *= NcPoly(s);
            } else if (isdigit(static_cast<unsigned char>(text[i])) ||
                       (text[i] == '-' && !any) || text[i] == 'v') {
                size_t j = i;
                if (text[j] == '-') ++j;
                while (j < text.size() &&
                       (isalnum(static_cast<unsigned char>(text[j])) || text[j] == '/' ||
                        text[j] == '^' || (text[j] == '-' && text[j - 1] == '^')))
                    ++j;
                term *= NcPoly(Scalar(Laurent::parse(text.substr(i, j - i))));
                i = j;
            } else {
                size_t j = i;
                while (j < text.size() && (isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_' || text[j] == '\''))
                    ++j;
                std::string tok = text.substr(i, j - i);
                if (tok.empty()) throw error("parse: unexpected character '" +
                                             std::string(1, text[i]) + "'");
                i = j;
                int slot = 0;
                size_t us = tok.rfind('_');
                if (us != std::string::npos && us + 1 < tok.size() &&
                    isdigit(static_cast<unsigned char>(tok[us + 1]))) {
                    slot = std::stoi(tok.substr(us + 1)) - 1;
                    tok = tok.substr(0, us);
                }
                term *= NcPoly::gen(slot, gen_id(tok));
            }
            any = true;
        }
        if (!any) throw error("parse: empty term in '" + text + "'");
        result += term;
        ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw error("parse: expected '+' in '" + text + "'");
        ++i;
    }
    return nf(result);
}

inline std::string Algebra::word_str(const Word& w) const {
    std::string s;
    for (Letter l : w) {
        if (!s.empty()) s += "*";
        s += gens.at(letter_id(l));
        if (letter_slot(l) > 0) s += "_" + std::to_string(letter_slot(l) + 1);
    }
    return s;
}

inline std::string Algebra::emit(const NcPoly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto& [w, c] = *it;
        if (!out.empty()) out += " + ";
        if (w.empty()) {
            out += c.den().is_one() ? c.num().to_string()
                                    : "(" + c.num().to_string() + ")/(" + c.den().to_string() + ")";
            continue;
        }
        if (!c.is_one()) {
            out += "(" + c.num().to_string() + ")";
            if (!c.den().is_one()) out += "/(" + c.den().to_string() + ")";
            out += "*";
        }
        out += word_str(w);
    }
    return out;
}

inline void Algebra::solve_antipode(int ansatz_deg,
                                    const std::function<bool(int, const Word&)>& filter) {
    std::vector<Word> basis;  // ansatz support, slot 0
    for (int d = 0; d <= ansatz_deg; ++d)
        for (auto& w : basis_words(d)) basis.push_back(w);
    int G = gen_count();
    // unknowns: (generator, candidate basis word) pairs surviving the filter
    std::vector<std::pair<int, int>> unknowns;              // (g, basis index)
    std::vector<std::vector<int>> per_gen(G);               // g -> unknown indices
    for (int g = 0; g < G; ++g)
        for (int j = 0; j < static_cast<int>(basis.size()); ++j)
            if (!filter || filter(g, basis[j])) {
                per_gen[g].push_back(static_cast<int>(unknowns.size()));
                unknowns.emplace_back(g, j);
            }
    int U = static_cast<int>(unknowns.size());
    Matrix<FieldScalar> M;
    std::vector<FieldScalar> b;
    for (int g = 0; g < G; ++g) {
        for (int side = 0; side < 2; ++side) {
            // side 0: m(S (x) id)Delta(g) = eps(g);  side 1: m(id (x) S)Delta(g) = eps(g)
            std::map<Word, std::vector<Scalar>, WordLess> rows;
            std::map<Word, Scalar, WordLess> rhs;
            auto row_of = [&](const Word& w) -> std::vector<Scalar>& {
                auto it = rows.find(w);
                if (it == rows.end())
                    it = rows.emplace(w, std::vector<Scalar>(U, Scalar(0))).first;
                return it->second;
            };
            rhs[Word()] = eps_tab[g];
            for (auto& [dw, dc] : delta_tab[g].terms()) {
                Word leg0, leg1;
                for (Letter l : dw)
                    (letter_slot(l) == 0 ? leg0 : leg1).push_back(make_letter(0, letter_id(l)));
                const Word& sleg = side == 0 ? leg0 : leg1;
                const Word& pleg = side == 0 ? leg1 : leg0;
                if (sleg.empty()) {  // S(1) = 1: constant contribution, move to rhs
                    NcPoly t = dc * rw.normal_form(pleg);
                    for (auto& [w, c] : t.terms()) rhs[w] = rhs[w] - c;
                    continue;
                }
                if (sleg.size() != 1)
                    throw error(name + ": antipode solver needs generator coproduct legs");
                int h = letter_id(sleg[0]);
                for (int u : per_gen[h]) {
                    const Word& bw = basis[unknowns[u].second];
                    NcPoly t = side == 0 ? dc * rw.normal_form(bw + pleg)
                                         : dc * rw.normal_form(pleg + bw);
                    for (auto& [w, c] : t.terms()) row_of(w)[u] += c;
                }
            }
            for (auto& [w, c] : rhs)
                if (!c.is_zero()) row_of(w);
            for (auto& [w, row] : rows) {
                M.push_back(row);
                auto it = rhs.find(w);
                b.push_back(it == rhs.end() ? Scalar(0) : it->second);
            }
        }
    }
    auto x = solve(M, b);
    if (!x) throw error(name + ": antipode system inconsistent");
    s_tab.assign(G, NcPoly());
    for (int u = 0; u < U; ++u)
        s_tab[unknowns[u].first].add_term(basis[unknowns[u].second], (*x)[u]);
}

}  // namespace qdg
