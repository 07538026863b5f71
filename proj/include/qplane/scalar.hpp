// Coefficient ring of the engine: Laurent polynomials in a symbolic q over
// Q(zeta_12).  The engine runs in one of two q-modes:
//
//   symbolic    - q is a free invertible indeterminate; used for the
//                 covariance derivation, where the deformation parameter is
//                 still undetermined.
//   specialized - every occurrence of q is reduced to j immediately, so all
//                 scalars collapse to the constant term.
//
// Division is restricted to units.  In symbolic mode the units are the
// nonzero monomials c*q^k; in specialized mode every nonzero scalar is a
// single constant term and hence invertible.

#pragma once

#include <map>
#include <sstream>
#include <string>

#include "cyclo.hpp"

namespace qplane {

enum class QMode { symbolic, specialized };

inline const char* to_string(QMode m) { return m == QMode::symbolic ? "symbolic" : "specialized"; }

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Cyclo c) {
        if (!c.is_zero()) terms_[0] = std::move(c);
    }
    explicit Scalar(long n) : Scalar(Cyclo(n)) {}
    Scalar(long num, long den) : Scalar(Cyclo(num, den)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar j() { return Scalar(Cyclo::j()); }
    static Scalar i() { return Scalar(Cyclo::i()); }

    /// q^k in the given mode: a Laurent monomial when symbolic, j^k when specialized.
    static Scalar q_power(QMode m, long k) {
        Scalar s;
        if (m == QMode::symbolic) {
            s.terms_[k] = Cyclo::one();
        } else {
            s = Scalar(Cyclo::jpow(k));
        }
        return s;
    }

    static Scalar monomial(long exp, Cyclo coeff) {
        Scalar s;
        if (!coeff.is_zero()) s.terms_[exp] = std::move(coeff);
        return s;
    }

    const std::map<long, Cyclo>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);  // for map keys in serialization

    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Unit test: a single nonzero term c*q^k.
    bool is_unit() const { return terms_.size() == 1 && !terms_.begin()->second.is_zero(); }

    /// Inverse of a unit; non-units are rejected.
    Scalar inv() const {
        if (is_zero()) throw AlgebraError("scalar inversion of zero");
        if (!is_unit()) throw AlgebraError("non-invertible Laurent polynomial: " + to_string());
        const auto& [k, c] = *terms_.begin();
        return monomial(-k, c.inv());
    }

    /// Evaluation q -> t (t must be invertible when negative exponents occur).
    Cyclo eval(const Cyclo& t) const {
        Cyclo acc;
        for (const auto& [k, c] : terms_) acc += c * t.pow(k);
        return acc;
    }

    /// The specialization map q -> j.  A ring homomorphism onto Q(zeta_12).
    Cyclo specialize() const {
        Cyclo acc;
        for (const auto& [k, c] : terms_) acc += c * Cyclo::jpow(k);
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        if (is_constant()) return terms_.begin()->second.to_string();
        std::ostringstream os;
        bool first = true;
        // highest power first, the usual polynomial reading order
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string cs = c.to_string();
            bool neg = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool composite = cs.find(' ') != std::string::npos;
            bool unit = (cs == "1") && k != 0;
            if (composite)
                os << "(" << (neg ? "-" : "") << (neg ? c.to_string().substr(1) : cs) << ")";
            else if (!unit)
                os << cs;
            if (k != 0) {
                if (!unit) os << "*";
                os << "q";
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void add_term(long k, const Cyclo& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long, Cyclo> terms_;  // exponent -> coefficient, zero entries pruned
};

inline bool operator<(const Scalar& a, const Scalar& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        for (int k = 0; k < 4; ++k)
            if (ia->second.coord(k) != ib->second.coord(k)) return ia->second.coord(k) < ib->second.coord(k);
    }
    return ib != b.terms_.end();
}

}  // namespace qplane
