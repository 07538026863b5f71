// Fixed-arity tensors of words, the codomain of coproducts and coactions.
//
// Multiplication is componentwise concatenation.  Two conventions are
// supported for the crossing of graded legs:
//
//   untwisted : (u1 (x) u2)(v1 (x) v2) = u1 v1 (x) u2 v2
//   twisted   : an extra factor j^{grade(v_i) grade(u_k)} for every pair of
//               legs i < k that cross, the Z3-graded braiding.
//
// Coordinates and the operator/dual alphabets are grade 0, so the convention
// only matters when both factors carry forms or differentials.

#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "element.hpp"

namespace qplane {

enum class TensorTwist { off, on };

class TensorElement {
public:
    using Key = std::vector<Word>;

    explicit TensorElement(size_t arity) : arity_(arity) {}

    static TensorElement unit(size_t arity) {
        TensorElement t(arity);
        t.add(Key(arity), Scalar::one());
        return t;
    }

    static TensorElement term(Key legs, Scalar c = Scalar::one()) {
        TensorElement t(legs.size());
        t.add(std::move(legs), std::move(c));
        return t;
    }

    size_t arity() const { return arity_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Key legs, const Scalar& c) {
        if (c.is_zero()) return;
        if (legs.size() != arity_) throw AlgebraError("tensor term arity mismatch");
        auto it = terms_.find(legs);
        if (it == terms_.end()) {
            terms_.emplace(std::move(legs), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    TensorElement operator-() const {
        TensorElement r(arity_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        if (a.arity_ != b.arity_) throw AlgebraError("tensor arity mismatch");
        TensorElement r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }

    TensorElement scaled(const Scalar& s) const {
        TensorElement r(arity_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.add(k, c * s);
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [legs, c] : terms_) {
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
            if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << " * ";
            for (size_t k = 0; k < legs.size(); ++k) {
                if (k) os << " (x) ";
                os << legs[k].to_string();
            }
        }
        return os.str();
    }

private:
    size_t arity_;
    std::map<Key, Scalar> terms_;
};

/// Componentwise product; equal arity required.
inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                                TensorTwist twist = TensorTwist::off) {
    if (a.arity() != b.arity()) throw AlgebraError("tensor arity mismatch");
    TensorElement r(a.arity());
    for (const auto& [ua, ca] : a.terms()) {
        for (const auto& [ub, cb] : b.terms()) {
            Scalar c = ca * cb;
            if (twist == TensorTwist::on) {
                // braid every leg of b past the legs of a to its right
                int e = 0;
                for (size_t ib = 0; ib < ub.size(); ++ib)
                    for (size_t ka = ib + 1; ka < ua.size(); ++ka) e += ub[ib].grade() * ua[ka].grade();
                if (e % 3 != 0) c = c * Scalar(Cyclo::jpow(e));
            }
            TensorElement::Key legs(a.arity());
            for (size_t k = 0; k < a.arity(); ++k) legs[k] = ua[k].concat(ub[k]);
            r.add(std::move(legs), c);
        }
    }
    return r;
}

}  // namespace qplane
