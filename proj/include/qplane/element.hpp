// Finite linear combinations of words with Scalar coefficients, plus the
// graded commutator.  Multiplication is free concatenation; all quotient
// structure lives in the rewrite systems.

#pragma once

#include <map>
#include <sstream>
#include <string>

#include "scalar.hpp"
#include "word.hpp"

namespace qplane {

class Element {
public:
    Element() = default;

    static Element zero() { return Element(); }
    static Element one() { return word(Word::empty()); }
    static Element scalar(Scalar s) {
        Element e;
        e.add(Word::empty(), std::move(s));
        return e;
    }
    static Element word(Word w, Scalar c = Scalar::one()) {
        Element e;
        e.add(std::move(w), std::move(c));
        return e;
    }
    static Element gen(Gen g, Scalar c = Scalar::one()) { return word(Word{g}, std::move(c)); }

    const std::map<Word, Scalar>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(Word w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element operator-() const {
        Element r;
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }

    friend Element operator+(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

    Element scaled(const Scalar& s) const {
        Element r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }

    unsigned family_mask() const {
        unsigned m = kAllFamilies;
        for (const auto& [w, c] : terms_) m &= w.family_mask();
        return m;
    }

    friend Element operator*(const Element& a, const Element& b) {
        if (!a.is_zero() && !b.is_zero() && (a.family_mask() & b.family_mask()) == 0)
            throw AlgebraError("mixed generator alphabets: cannot multiply " +
                               a.terms_.begin()->first.to_string() + " by " +
                               b.terms_.begin()->first.to_string());
        Element r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add(wa.concat(wb), ca * cb);
        return r;
    }

    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }

    Element pow(int e) const {
        if (e < 0) throw AlgebraError("negative power of an element");
        Element acc = one();
        for (int k = 0; k < e; ++k) acc = acc * *this;
        return acc;
    }

    /// Common Z3 grade of all words; inhomogeneous elements are rejected.
    int grade() const {
        if (terms_.empty()) return 0;
        int g = terms_.begin()->first.grade();
        for (const auto& [w, c] : terms_)
            if (w.grade() != g)
                throw AlgebraError("inhomogeneous element: words " + terms_.begin()->first.to_string() +
                                   " and " + w.to_string() + " have different grades");
        return g;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                       cs.find(" - ") == std::string::npos;
            if (neg) cs = cs.substr(1);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool composite = cs.find(' ') != std::string::npos;
            if (w.is_empty()) {
                os << (composite ? "(" + cs + ")" : cs);
                continue;
            }
            if (cs != "1") {
                os << (composite ? "(" + cs + ")" : cs) << " * ";
            }
            os << w.to_string();
        }
        return os.str();
    }

private:
    std::map<Word, Scalar> terms_;
};

/// AB - j^{grade(A) grade(B)} BA, left unreduced.
inline Element graded_commutator(const Element& a, const Element& b) {
    int ga = a.grade(), gb = b.grade();
    return a * b - (b * a).scaled(Scalar(Cyclo::jpow(ga * gb)));
}

}  // namespace qplane
