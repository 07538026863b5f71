// Ordered rewrite systems producing normal forms modulo the defining
// relations of the calculus.
//
// A system consists of
//   - an alphabet listed in ascending rank (the global enum order),
//   - one rule per reducible adjacent pair: every out-of-order pair of
//     distinct letters, plus the cancellation pairs such as x * x^-1 -> 1,
//   - nilpotency caps g^n -> 0, applied to runs of equal letters.
//
// Every rule's right-hand side is strictly below its left-hand side in the
// shortlex order, so reduction terminates; uniqueness of normal forms is not
// assumed but certified by check_local_confluence, which joins all two-rule
// overlaps on three-letter words and all cap overlaps, and additionally
// compares leftmost against rightmost reduction on every short word.

#pragma once

#include <algorithm>
#include <optional>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "element.hpp"

namespace qplane {

enum class Strategy { leftmost, rightmost };

struct ConfluenceIssue {
    std::string kind;  // "critical-pair" | "cap-overlap" | "strategy"
    Word word;
    Element left, right;
    std::string to_string() const {
        return kind + " at " + word.to_string() + ": " + left.to_string() + "  vs  " + right.to_string();
    }
};

struct ConfluenceResult {
    long pairs_checked = 0;
    long words_checked = 0;
    std::vector<ConfluenceIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// All words over an alphabet up to a length, in shortlex order.
inline std::vector<Word> all_words(const std::vector<Gen>& alphabet, int max_len, bool include_empty = false) {
    std::vector<Word> out;
    if (include_empty) out.push_back(Word::empty());
    std::vector<Word> layer{Word::empty()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * alphabet.size());
        for (const Word& w : layer)
            for (Gen g : alphabet) {
                Word n = w;
                n.ls.push_back(g);
                next.push_back(std::move(n));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

class RewriteSystem {
public:
    RewriteSystem(std::string name, QMode mode, std::vector<Gen> ranking)
        : name_(std::move(name)), mode_(mode), ranking_(std::move(ranking)) {}

    const std::string& name() const { return name_; }
    QMode mode() const { return mode_; }
    const std::vector<Gen>& ranking() const { return ranking_; }
    const std::map<std::pair<Gen, Gen>, Element>& rules() const { return rules_; }
    const std::map<Gen, int>& caps() const { return caps_; }
    long iteration_cap() const { return iteration_cap_; }
    void set_iteration_cap(long n) { iteration_cap_ = n; }

    void add_rule(Gen a, Gen b, Element rhs) {
        rules_[{a, b}] = rhs;
        RuleEntry e;
        e.rhs = std::move(rhs);
        if (e.rhs.size() == 1) {
            const auto& [w, c] = *e.rhs.terms().begin();
            e.single = true;
            e.rw = w;
            e.coeff = c;
            if (c.terms().size() == 1) {
                const auto& [k, cy] = *c.terms().begin();
                for (int m = 0; m < 3; ++m)
                    if (cy == Cyclo::jpow(m)) {
                        e.mono = true;
                        e.qexp = k;
                        e.jexp = m;
                        break;
                    }
            }
        }
        table_[slot(a, b)] = std::move(e);
    }
    void add_cap(Gen g, int n) { caps_[g] = n; }

    const Element* find_rule(Gen a, Gen b) const {
        auto it = rules_.find({a, b});
        return it == rules_.end() ? nullptr : &it->second;
    }

    bool in_alphabet(Gen g) const {
        return std::find(ranking_.begin(), ranking_.end(), g) != ranking_.end();
    }

    /// A word survives the caps iff no run of a nilpotent letter reaches its order.
    bool killed_by_caps(const Word& w) const {
        if (caps_.empty()) return false;
        size_t k = 0;
        while (k < w.size()) {
            size_t r = k;
            while (r < w.size() && w[r] == w[k]) ++r;
            auto it = caps_.find(w[k]);
            if (it != caps_.end() && r - k >= static_cast<size_t>(it->second)) return true;
            k = r;
        }
        return false;
    }

    int find_redex(const Word& w, Strategy st) const {
        if (w.size() < 2) return -1;
        if (st == Strategy::leftmost) {
            for (size_t k = 0; k + 1 < w.size(); ++k)
                if (table_[slot(w[k], w[k + 1])]) return static_cast<int>(k);
        } else {
            for (size_t k = w.size() - 1; k-- > 0;)
                if (table_[slot(w[k], w[k + 1])]) return static_cast<int>(k);
        }
        return -1;
    }

    bool is_normal_word(const Word& w) const { return !killed_by_caps(w) && find_redex(w, Strategy::leftmost) < 0; }

    Element normalize(const Element& e, Strategy st = Strategy::leftmost) const {
        for (const auto& [w, c] : e.terms())
            for (Gen g : w.ls)
                if (!in_alphabet(g))
                    throw AlgebraError(name_ + " system: letter " + gen_name(g) + " not in alphabet");

        Element out;
        std::map<Word, Scalar> work;
        for (const auto& [w, c] : e.terms()) work.emplace(w, c);

        auto splice = [](const Word& w, int pos, const Word& rw) {
            std::vector<Gen> nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.ls.begin(), w.ls.begin() + pos);
            nw.insert(nw.end(), rw.ls.begin(), rw.ls.end());
            nw.insert(nw.end(), w.ls.begin() + pos + 2, w.ls.end());
            return Word(std::move(nw));
        };

        long steps = 0;
        while (!work.empty()) {
            // Largest word first: every rewrite lands strictly below in
            // shortlex, so smaller pending words can still absorb its output.
            auto it = std::prev(work.end());
            Word w = it->first;
            Scalar c = it->second;
            const Word start = w;
            work.erase(it);
            if (c.is_zero()) continue;

            // q- and j-exponents picked up along the single-term splice path,
            // folded into the coefficient only when the chain ends
            long accq = 0;
            int accj = 0;
            auto fold = [&]() {
                if (accq || accj) {
                    c *= Scalar::monomial(accq, Cyclo::jpow(accj));
                    accq = 0;
                    accj = 0;
                }
            };

            for (;;) {
                if (killed_by_caps(w)) break;
                int pos = find_redex(w, st);
                if (pos < 0) {
                    fold();
                    out.add(std::move(w), c);
                    break;
                }
                if (++steps > iteration_cap_) {
                    throw AlgebraError(name_ + " system: rewrite iteration cap (" +
                                       std::to_string(iteration_cap_) + ") exceeded; started from " +
                                       start.to_string() + ", reached " + w.to_string());
                }
                const RuleEntry& re = *table_[slot(w[static_cast<size_t>(pos)], w[static_cast<size_t>(pos) + 1])];
                if (re.single) {
                    w = splice(w, pos, re.rw);
                    if (re.mono) {
                        accq += re.qexp;
                        accj += re.jexp;
                    } else {
                        c *= re.coeff;
                    }
                    continue;
                }
                fold();
                for (const auto& [rw, rc] : re.rhs.terms()) {
                    Word cand = splice(w, pos, rw);
                    Scalar cc = c * rc;
                    auto wit = work.find(cand);
                    if (wit == work.end()) {
                        work.emplace(std::move(cand), std::move(cc));
                    } else {
                        wit->second += cc;
                        if (wit->second.is_zero()) work.erase(wit);
                    }
                }
                break;
            }
        }
        return out;
    }

    /// Every relation holds in its own quotient: normalize(lhs - rhs) = 0.
    bool relations_sound() const {
        for (const auto& [key, rhs] : rules_) {
            Element lhs = Element::word(Word{key.first, key.second});
            if (!normalize(lhs - rhs).is_zero()) return false;
        }
        for (const auto& [g, n] : caps_) {
            if (!normalize(Element::gen(g).pow(n)).is_zero()) return false;
        }
        return true;
    }

    /// Diamond-lemma style certification, see file comment.
    ConfluenceResult check_local_confluence(int strategy_max_len) const {
        ConfluenceResult res;
        // two-rule overlaps a.b.c
        for (Gen a : ranking_) {
            for (Gen b : ranking_) {
                const Element* r_ab = find_rule(a, b);
                if (!r_ab) continue;
                for (Gen c : ranking_) {
                    const Element* r_bc = find_rule(b, c);
                    if (!r_bc) continue;
                    ++res.pairs_checked;
                    Element viaLeft = normalize(*r_ab * Element::gen(c));
                    Element viaRight = normalize(Element::gen(a) * *r_bc);
                    if (viaLeft != viaRight)
                        res.issues.push_back({"critical-pair", Word{a, b, c}, viaLeft, viaRight});
                }
            }
        }
        // cap overlaps: in a.g^n (resp. g^n.b) the cap kills the word, while
        // the pair rule gives a genuine one-step descendant; the descendant
        // must normalize to zero.  Built by hand so the eager cap shortcut
        // inside normalize cannot mask the divergence.
        for (const auto& [g, n] : caps_) {
            Element gpow_tail = Element::gen(g).pow(n - 1);
            for (Gen a : ranking_) {
                if (const Element* r = find_rule(a, g)) {
                    ++res.pairs_checked;
                    Element e = normalize(*r * gpow_tail);
                    if (!e.is_zero()) {
                        Word w{a};
                        for (int k = 0; k < n; ++k) w.ls.push_back(g);
                        res.issues.push_back({"cap-overlap", w, e, Element::zero()});
                    }
                }
                if (const Element* r = find_rule(g, a)) {
                    ++res.pairs_checked;
                    Element e = normalize(gpow_tail * *r);
                    if (!e.is_zero()) {
                        Word w;
                        for (int k = 0; k < n; ++k) w.ls.push_back(g);
                        w.ls.push_back(a);
                        res.issues.push_back({"cap-overlap", w, e, Element::zero()});
                    }
                }
            }
        }
        // exhaustive strategy comparison on short words, fanned out by prefix
        if (strategy_max_len > 0) {
            std::vector<Word> roots = all_words(ranking_, 1);
            unsigned n_threads = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                    static_cast<unsigned>(roots.size()));
            std::vector<std::vector<ConfluenceIssue>> issues(roots.size());
            std::vector<long> counts(roots.size(), 0);
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    size_t r = next.fetch_add(1);
                    if (r >= roots.size()) return;
                    std::vector<Word> stack{roots[r]};
                    while (!stack.empty()) {
                        Word w = stack.back();
                        stack.pop_back();
                        ++counts[r];
                        Element lm = normalize(Element::word(w), Strategy::leftmost);
                        Element rm = normalize(Element::word(w), Strategy::rightmost);
                        if (lm != rm) issues[r].push_back({"strategy", w, lm, rm});
                        if (w.size() < static_cast<size_t>(strategy_max_len))
                            for (Gen g : ranking_) {
                                Word n = w;
                                n.ls.push_back(g);
                                stack.push_back(std::move(n));
                            }
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            for (size_t r = 0; r < roots.size(); ++r) {
                res.words_checked += counts[r];
                res.issues.insert(res.issues.end(), issues[r].begin(), issues[r].end());
            }
        }
        return res;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name_;
        j["q_mode"] = qplane::to_string(mode_);
        j["ranking"] = nlohmann::json::array();
        for (Gen g : ranking_) j["ranking"].push_back(gen_name(g));
        j["rules"] = nlohmann::json::array();
        for (const auto& [key, rhs] : rules_) {
            nlohmann::json rule;
            rule["lhs"] = {gen_name(key.first), gen_name(key.second)};
            rule["rhs"] = nlohmann::json::array();
            for (const auto& [w, c] : rhs.terms()) {
                nlohmann::json term;
                term["coeff"] = scalar_to_json(c);
                term["word"] = nlohmann::json::array();
                for (Gen g : w.ls) term["word"].push_back(gen_name(g));
                rule["rhs"].push_back(term);
            }
            j["rules"].push_back(rule);
        }
        j["caps"] = nlohmann::json::object();
        for (const auto& [g, n] : caps_) j["caps"][gen_name(g)] = n;
        j["iteration_cap"] = iteration_cap_;
        return j;
    }

    static RewriteSystem from_json(const nlohmann::json& j) {
        QMode mode = j.at("q_mode").get<std::string>() == "symbolic" ? QMode::symbolic : QMode::specialized;
        std::vector<Gen> ranking;
        for (const auto& s : j.at("ranking")) {
            Gen g;
            if (!gen_from_name(s.get<std::string>(), g)) throw AlgebraError("unknown generator " + s.get<std::string>());
            ranking.push_back(g);
        }
        RewriteSystem sys(j.at("name").get<std::string>(), mode, std::move(ranking));
        for (const auto& rule : j.at("rules")) {
            Gen a, b;
            if (!gen_from_name(rule.at("lhs").at(0).get<std::string>(), a) ||
                !gen_from_name(rule.at("lhs").at(1).get<std::string>(), b))
                throw AlgebraError("bad rule lhs");
            Element rhs;
            for (const auto& term : rule.at("rhs")) {
                std::vector<Gen> ls;
                for (const auto& s : term.at("word")) {
                    Gen g;
                    if (!gen_from_name(s.get<std::string>(), g)) throw AlgebraError("unknown generator in rule");
                    ls.push_back(g);
                }
                rhs.add(Word(std::move(ls)), scalar_from_json(term.at("coeff")));
            }
            sys.add_rule(a, b, std::move(rhs));
        }
        for (auto it = j.at("caps").begin(); it != j.at("caps").end(); ++it) {
            Gen g;
            if (!gen_from_name(it.key(), g)) throw AlgebraError("unknown generator in caps");
            sys.add_cap(g, it.value().get<int>());
        }
        if (j.contains("iteration_cap")) sys.set_iteration_cap(j.at("iteration_cap").get<long>());
        return sys;
    }

    static nlohmann::json scalar_to_json(const Scalar& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : s.terms()) {
            nlohmann::json t = nlohmann::json::array();
            t.push_back(k);
            nlohmann::json coords = nlohmann::json::array();
            for (int d = 0; d < 4; ++d) coords.push_back(c.coord(d).str());
            t.push_back(coords);
            arr.push_back(t);
        }
        return arr;
    }

    static Scalar scalar_from_json(const nlohmann::json& arr) {
        Scalar s;
        for (const auto& t : arr) {
            long k = t.at(0).get<long>();
            std::array<Rational, 4> coords;
            for (size_t d = 0; d < 4; ++d) coords[d] = Rational(t.at(1).at(d).get<std::string>());
            s += Scalar::monomial(k, Cyclo::from_coords(std::move(coords)));
        }
        return s;
    }

private:
    struct RuleEntry {
        Element rhs;
        bool single = false;  // exactly one term on the right
        Word rw;              // its word
        Scalar coeff;         // its coefficient
        bool mono = false;    // coefficient is q^qexp * j^jexp
        long qexp = 0;
        int jexp = 0;
    };

    static size_t slot(Gen a, Gen b) {
        return static_cast<size_t>(a) * static_cast<size_t>(kGenCount) + static_cast<size_t>(b);
    }

    std::string name_;
    QMode mode_;
    std::vector<Gen> ranking_;
    std::map<std::pair<Gen, Gen>, Element> rules_;
    std::vector<std::optional<RuleEntry>> table_ = std::vector<std::optional<RuleEntry>>(
        static_cast<size_t>(kGenCount) * static_cast<size_t>(kGenCount));
    std::map<Gen, int> caps_;
    long iteration_cap_ = 4'000'000;
};

/// Normal-form words of the system up to a length (the monomial basis window).
inline std::vector<Word> basis_words(const RewriteSystem& sys, int max_len, bool include_empty = true) {
    std::vector<Word> out;
    for (const Word& w : all_words(sys.ranking(), max_len, include_empty))
        if (sys.is_normal_word(w)) out.push_back(w);
    return out;
}

}  // namespace qplane
