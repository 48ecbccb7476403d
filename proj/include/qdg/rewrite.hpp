#pragma once

// Rewriting engine: oriented relations as rules, memoized normal forms with a
// step budget, and a diamond-lemma overlap check.

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qdg/ncpoly.hpp"

namespace qdg {

struct Rule {
    Word lhs;     // leading word, implicit coefficient 1
    NcPoly rhs;   // replacement
};

struct OverlapFailure {
    Word witness;
    std::string reason;  // "ambiguity" or "step budget exhausted"
};

class RewriteSystem {
  public:
    bool free_slot_commute = true;
    size_t step_budget = 500000;
    size_t depth_budget = 4000;

    // Optional extra canonicalization applied after slot sorting: rewrites the
    // word in place and returns a scalar multiplier (e.g. scalar commutation
    // of group-like letters).  Must preserve the term order up to ties.
    std::function<Scalar(Word&)> scalar_canon;

    // Optional term order used to orient relations (default: word_less).  Must
    // be a well-order compatible with concatenation on both sides.
    std::function<bool(const Word&, const Word&)> term_order;

    const std::vector<Rule>& rules() const { return rules_; }

    // Orient a relation p = 0 into lead(p) -> -(rest)/leadcoeff.  Refuses
    // non-decreasing orientations; coefficients live in a field, so any
    // nonzero leading coefficient can be divided through.
    void add_relation(const NcPoly& p) {
        if (p.is_zero()) return;
        auto less = [&](const Word& a, const Word& b) {
            return term_order ? term_order(a, b) : word_less(a, b);
        };
        const Word* lead = nullptr;
        for (auto& [w, c] : p.terms())
            if (!lead || less(*lead, w)) lead = &w;
        Scalar inv = p.terms().at(*lead).unit_inverse();
        NcPoly rhs;
        for (auto& [w, c] : p.terms()) {
            if (w == *lead) continue;
            if (!less(w, *lead))
                throw error("rewrite: rule does not decrease the term order");
            rhs.add_term(w, -(inv * c));
        }
        add_rule_unchecked(*lead, rhs);
    }

    // Raw insertion, no orientation check (confluence_check must be able to
    // diagnose badly oriented systems rather than refuse them).
    void add_rule_unchecked(Word lhs, NcPoly rhs) {
        if (lhs.empty()) throw error("rewrite: empty rule lhs");
        index_[lhs[0]].push_back(rules_.size());
        rules_.push_back({std::move(lhs), std::move(rhs)});
        memo_.clear();
    }

    NcPoly normal_form(const NcPoly& p) const {
        size_t steps = step_budget;
        NcPoly r;
        for (auto& [w, c] : p.terms()) {
            auto [cw, s] = canon(w);
            r += (c * s) * nf_word(cw, steps, 0);
        }
        return r;
    }
    NcPoly normal_form(const Word& w) const {
        size_t steps = step_budget;
        auto [cw, s] = canon(w);
        return s * nf_word(cw, steps, 0);
    }

    bool is_normal_word(const Word& w) const {
        auto [c, s] = canon(w);
        return !find_redex(c).has_value() && c == w;
    }

    // All normal words of exact length deg over the given alphabet letters.
    std::vector<Word> normal_words(const std::vector<Letter>& alphabet, int deg) const {
        std::vector<Word> cur = {Word()};
        for (int k = 0; k < deg; ++k) {
            std::vector<Word> next;
            for (auto& w : cur)
                for (Letter l : alphabet) {
                    Word e = w + Word(1, l);
                    if (canon(e).first == e && !find_redex(e).has_value()) next.push_back(e);
                }
            cur = std::move(next);
        }
        return cur;
    }

    // Degree-bounded completion: orient every unresolved overlap ambiguity
    // into a new rule until confluence_check passes up to `degree`.  The
    // quantum-determinant rule of C_q[SL(n)] generates a degree-indexed family
    // of straightening consequences; this derives the ones the working degree
    // needs.
    void complete(int degree, int max_rounds = 200) {
        for (int round = 0; round < max_rounds; ++round) {
            auto failures = confluence_check(degree);
            bool added = false;
            for (auto& f : failures) {
                if (f.reason != "ambiguity")
                    throw error("complete: " + f.reason);
                // recompute the two routes for this witness against the
                // current rule set and orient the gap if it persists
                NcPoly diff = ambiguity_gap(f.witness);
                if (diff.is_zero()) continue;
                add_relation(diff);
                added = true;
            }
            if (!added) return;
        }
        throw error("complete: no fixpoint within round budget");
    }

    std::vector<OverlapFailure> confluence_check(int degree) const {
        std::vector<OverlapFailure> failures;
        auto check = [&](const Word& w, size_t pos1, size_t rule1, size_t pos2, size_t rule2) {
            if (static_cast<int>(w.size()) > degree) return;
            try {
                NcPoly a = apply_at(w, pos1, rule1);
                NcPoly b = apply_at(w, pos2, rule2);
                if (normal_form(a) != normal_form(b))
                    failures.push_back({w, "ambiguity"});
            } catch (const error& e) {
                failures.push_back({w, e.what()});
            }
        };
        for (size_t i = 0; i < rules_.size(); ++i) {
            for (size_t j = 0; j < rules_.size(); ++j) {
                const Word& l1 = rules_[i].lhs;
                const Word& l2 = rules_[j].lhs;
                // proper overlap: suffix of l1 = prefix of l2
                for (size_t k = 1; k < std::min(l1.size(), l2.size()); ++k)
                    if (l1.compare(l1.size() - k, k, l2, 0, k) == 0)
                        check(l1 + l2.substr(k), 0, i, l1.size() - k, j);
                // inclusion: l2 inside l1
                if (i != j && l2.size() < l1.size())
                    for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos)
                        if (l1.compare(pos, l2.size(), l2) == 0) check(l1, 0, i, pos, j);
            }
        }
        return failures;
    }

  private:
    std::vector<Rule> rules_;
    std::unordered_map<Letter, std::vector<size_t>> index_;  // rules by lhs[0]
    mutable std::map<Word, NcPoly> memo_;

    // Difference of two distinct one-step-reduction normal forms of w (zero
    // if all reductions agree).
    NcPoly ambiguity_gap(const Word& w) const {
        std::optional<NcPoly> first;
        for (size_t pos = 0; pos < w.size(); ++pos)
            for (size_t r = 0; r < rules_.size(); ++r) {
                const Word& l = rules_[r].lhs;
                if (pos + l.size() > w.size() || w.compare(pos, l.size(), l) != 0) continue;
                NcPoly nf = normal_form(apply_at(w, pos, r));
                if (!first)
                    first = nf;
                else if (nf != *first)
                    return nf - *first;
            }
        return NcPoly();
    }

    std::pair<Word, Scalar> canon(const Word& w) const {
        Word c = free_slot_commute ? slot_sorted(w) : w;
        Scalar s(1);
        if (scalar_canon) s = scalar_canon(c);
        return {c, s};
    }

    std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            auto it = index_.find(w[pos]);
            if (it == index_.end()) continue;
            for (size_t r : it->second) {
                const Word& l = rules_[r].lhs;
                if (pos + l.size() <= w.size() && w.compare(pos, l.size(), l) == 0)
                    return std::make_pair(pos, r);
            }
        }
        return std::nullopt;
    }

    NcPoly apply_at(const Word& w, size_t pos, size_t rule) const {
        const Rule& r = rules_[rule];
        NcPoly pre = NcPoly::monomial(w.substr(0, pos));
        NcPoly post = NcPoly::monomial(w.substr(pos + r.lhs.size()));
        return pre * r.rhs * post;
    }

    NcPoly nf_word(const Word& w, size_t& steps, size_t depth) const {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        if (steps-- == 0) throw error("rewrite: step budget exhausted (badly oriented rules?)");
        if (depth > depth_budget)
            throw error("rewrite: recursion depth exhausted (badly oriented rules?)");
        auto redex = find_redex(w);
        NcPoly result;
        if (!redex) {
            result = NcPoly::monomial(w);
        } else {
            NcPoly expanded = apply_at(w, redex->first, redex->second);
            for (auto& [ww, c] : expanded.terms()) {
                auto [cw, cs] = canon(ww);
                result += (c * cs) * nf_word(cw, steps, depth + 1);
            }
        }
        memo_[w] = result;
        return result;
    }
};

}  // namespace qdg
