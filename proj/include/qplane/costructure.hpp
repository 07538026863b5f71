// Co-structures (coproduct, counit, coinverse) of the quotient algebras and
// the generic Hopf-axiom checker.
//
// A Costructure stores generator images and extends them to words:
//   delta multiplicatively into the tensor square,
//   epsilon multiplicatively into scalars,
//   kappa anti-multiplicatively.
// The extension of delta and kappa across graded letters depends on the
// braiding convention.  With TensorTwist::on the crossing of two graded legs
// picks up j^{grade * grade} and kappa reverses with the same factor; with
// TensorTwist::off both extensions are plain.  Grade-0 alphabets are
// insensitive to the choice.  For the omega algebra only the twisted
// convention closes all axioms (the q-binomials [3]_j = 0 are what kill
// theta^3 inside delta); the untwisted rule is kept selectable to make that
// failure observable.

#pragma once

#include "report.hpp"
#include "rewrite.hpp"
#include "systems.hpp"

namespace qplane {

class Costructure {
public:
    Costructure(std::string name, const RewriteSystem* sys, TensorTwist twist)
        : name_(std::move(name)), sys_(sys), twist_(twist) {}

    const std::string& name() const { return name_; }
    const RewriteSystem& system() const { return *sys_; }
    TensorTwist twist() const { return twist_; }
    const std::vector<Gen>& alphabet() const { return alphabet_; }
    bool has_kappa() const { return !kappa_.empty(); }

    void set_gen(Gen g, TensorElement delta, Scalar eps) {
        alphabet_.push_back(g);
        delta_.emplace(g, std::move(delta));
        eps_.emplace(g, std::move(eps));
    }
    void set_kappa(Gen g, Element k) { kappa_.emplace(g, std::move(k)); }

    /// Normalize every leg of a tensor independently.
    TensorElement normalize_legs(const TensorElement& t) const {
        TensorElement out(t.arity());
        for (const auto& [legs, c] : t.terms()) {
            TensorElement acc = TensorElement::term(TensorElement::Key(t.arity()), c);
            for (size_t k = 0; k < legs.size(); ++k) {
                Element nf = sys_->normalize(Element::word(legs[k]));
                TensorElement next(t.arity());
                for (const auto& [pl, pc] : acc.terms())
                    for (const auto& [w, wc] : nf.terms()) {
                        TensorElement::Key nl = pl;
                        nl[k] = w;
                        next.add(std::move(nl), pc * wc);
                    }
                acc = std::move(next);
            }
            for (const auto& [legs2, c2] : acc.terms()) out.add(legs2, c2);
        }
        return out;
    }

    TensorElement delta_word(const Word& w) const {
        TensorElement acc = TensorElement::unit(2);
        for (Gen g : w.ls) acc = tensor_mul(acc, delta_at(g), twist_);
        return acc;
    }

    TensorElement delta(const Element& e, bool normalized = true) const {
        TensorElement acc(2);
        for (const auto& [w, c] : e.terms()) acc = acc + delta_word(w).scaled(c);
        return normalized ? normalize_legs(acc) : acc;
    }

    Scalar eps(const Element& e) const {
        Scalar acc;
        for (const auto& [w, c] : e.terms()) {
            Scalar p = c;
            for (Gen g : w.ls) {
                auto it = eps_.find(g);
                if (it == eps_.end()) throw AlgebraError(name_ + ": epsilon undefined on " + gen_name(g));
                p *= it->second;
            }
            acc += p;
        }
        return acc;
    }

    Element kappa(const Element& e) const {
        Element acc;
        for (const auto& [w, c] : e.terms()) {
            Element p = Element::scalar(c);
            int cross = 0;
            for (size_t k = w.size(); k-- > 0;) {
                auto it = kappa_.find(w[k]);
                if (it == kappa_.end()) throw AlgebraError(name_ + ": kappa undefined on " + gen_name(w[k]));
                p = p * it->second;
            }
            if (twist_ == TensorTwist::on) {
                for (size_t a = 0; a < w.size(); ++a)
                    for (size_t b = a + 1; b < w.size(); ++b) cross += grade(w[a]) * grade(w[b]);
                if (cross % 3) p = p.scaled(Scalar(Cyclo::jpow(cross)));
            }
            acc += p;
        }
        return sys_->normalize(acc);
    }

    /// (delta (x) id) or (id (x) delta) applied to a tensor square.
    TensorElement delta_lift(const TensorElement& t, bool left_slot) const {
        TensorElement out(3);
        for (const auto& [legs, c] : t.terms()) {
            TensorElement d = delta_word(legs[left_slot ? 0 : 1]);
            for (const auto& [dl, dc] : d.terms()) {
                TensorElement::Key key(3);
                if (left_slot) {
                    key[0] = dl[0];
                    key[1] = dl[1];
                    key[2] = legs[1];
                } else {
                    key[0] = legs[0];
                    key[1] = dl[0];
                    key[2] = dl[1];
                }
                out.add(std::move(key), c * dc);
            }
        }
        return out;
    }

private:
    const TensorElement& delta_at(Gen g) const {
        auto it = delta_.find(g);
        if (it == delta_.end()) throw AlgebraError(name_ + ": delta undefined on " + gen_name(g));
        return it->second;
    }

    std::string name_;
    const RewriteSystem* sys_;
    TensorTwist twist_;
    std::vector<Gen> alphabet_;
    std::map<Gen, TensorElement> delta_;
    std::map<Gen, Scalar> eps_;
    std::map<Gen, Element> kappa_;
};

namespace detail {
inline TensorElement t2(std::initializer_list<std::pair<Word, Word>> legs,
                        std::initializer_list<Scalar> coeffs) {
    TensorElement t(2);
    auto lc = coeffs.begin();
    for (const auto& [a, b] : legs) t.add({a, b}, *lc++);
    return t;
}
inline TensorElement t2one(const Word& a, const Word& b) { return TensorElement::term({a, b}); }
}  // namespace detail

/// Coordinate Hopf algebra: Delta(x) = x (x) x, Delta(y) = y (x) 1 + x (x) y.
inline Costructure costructure_coordinates(const RewriteSystem* sys) {
    using detail::t2;
    Costructure c("A", sys, TensorTwist::off);
    Word wx{Gen::x}, wxi{Gen::xinv}, wy{Gen::y}, e;
    c.set_gen(Gen::x, detail::t2one(wx, wx), Scalar::one());
    c.set_gen(Gen::xinv, detail::t2one(wxi, wxi), Scalar::one());
    c.set_gen(Gen::y, t2({{wy, e}, {wx, wy}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_kappa(Gen::x, Element::gen(Gen::xinv));
    c.set_kappa(Gen::xinv, Element::gen(Gen::x));
    c.set_kappa(Gen::y, -Element::word(Word{Gen::xinv, Gen::y}));
    return c;
}

/// The form algebra with coordinates adjoined; q-mode matches the system.
inline Costructure costructure_omega(const RewriteSystem* sys, TensorTwist twist) {
    using detail::t2;
    QMode m = sys->mode();
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    Costructure c("Omega", sys, twist);
    Word wx{Gen::x}, wxi{Gen::xinv}, wy{Gen::y}, wth{Gen::theta}, wph{Gen::phi}, e;
    c.set_gen(Gen::x, detail::t2one(wx, wx), Scalar::one());
    c.set_gen(Gen::xinv, detail::t2one(wxi, wxi), Scalar::one());
    c.set_gen(Gen::y, t2({{wy, e}, {wx, wy}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_gen(Gen::theta, t2({{wth, e}, {e, wth}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_gen(Gen::phi, t2({{wph, e}, {wx, wph}, {wy, wth}}, {Scalar::one(), Scalar::one(), -Scalar::one()}),
              Scalar::zero());
    c.set_kappa(Gen::x, Element::gen(Gen::xinv));
    c.set_kappa(Gen::xinv, Element::gen(Gen::x));
    c.set_kappa(Gen::y, -Element::word(Word{Gen::xinv, Gen::y}));
    c.set_kappa(Gen::theta, -Element::gen(Gen::theta));
    c.set_kappa(Gen::phi, Element::word(Word{Gen::phi, Gen::xinv}, -q(-1)) -
                              Element::word(Word{Gen::theta, Gen::xinv, Gen::y}));
    return c;
}

/// Quantum Lie generators: Delta(H) = H (x) 1 + K (x) H, Delta(X) three-term.
inline Costructure costructure_operator(const RewriteSystem* sys) {
    using detail::t2;
    QMode m = sys->mode();
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    Costructure c("U", sys, TensorTwist::off);
    Word wH{Gen::H}, wX{Gen::Xop}, wK{Gen::K}, wKi{Gen::Kinv}, e;
    c.set_gen(Gen::H, t2({{wH, e}, {wK, wH}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_gen(Gen::Xop, t2({{wX, e}, {e, wX}, {wX, wH}}, {Scalar::one(), Scalar::one(), q(-1) - Scalar::one()}),
              Scalar::zero());
    c.set_gen(Gen::K, detail::t2one(wK, wK), Scalar::one());
    c.set_gen(Gen::Kinv, detail::t2one(wKi, wKi), Scalar::one());
    c.set_kappa(Gen::H, -Element::word(Word{Gen::H, Gen::Kinv}));
    c.set_kappa(Gen::Xop, -Element::word(Word{Gen::Xop, Gen::Kinv}));
    c.set_kappa(Gen::K, Element::gen(Gen::Kinv));
    c.set_kappa(Gen::Kinv, Element::gen(Gen::K));
    return c;
}

/// Dual algebra: Delta(A) primitive, Delta(B) = B (x) L + 1 (x) B.
inline Costructure costructure_dual(const RewriteSystem* sys) {
    using detail::t2;
    Costructure c("Uq", sys, TensorTwist::off);
    Word wA{Gen::A}, wB{Gen::B}, wL{Gen::L}, wLi{Gen::Linv}, e;
    c.set_gen(Gen::A, t2({{wA, e}, {e, wA}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_gen(Gen::B, t2({{wB, wL}, {e, wB}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_gen(Gen::L, detail::t2one(wL, wL), Scalar::one());
    c.set_gen(Gen::Linv, detail::t2one(wLi, wLi), Scalar::one());
    c.set_kappa(Gen::A, -Element::gen(Gen::A));
    c.set_kappa(Gen::B, -Element::word(Word{Gen::B, Gen::Linv}));
    c.set_kappa(Gen::L, Element::gen(Gen::Linv));
    c.set_kappa(Gen::Linv, Element::gen(Gen::L));
    return c;
}

/// Partial derivatives: Delta(dax) grouplike, Delta(day) = day (x) 1 + dax (x) day.
inline Costructure costructure_partial(const RewriteSystem* sys) {
    using detail::t2;
    Costructure c("partial", sys, TensorTwist::off);
    Word wdx{Gen::dax}, wdxi{Gen::daxinv}, wdy{Gen::day}, e;
    c.set_gen(Gen::dax, detail::t2one(wdx, wdx), Scalar::one());
    c.set_gen(Gen::daxinv, detail::t2one(wdxi, wdxi), Scalar::one());
    c.set_gen(Gen::day, t2({{wdy, e}, {wdx, wdy}}, {Scalar::one(), Scalar::one()}), Scalar::zero());
    c.set_kappa(Gen::dax, Element::gen(Gen::daxinv));
    c.set_kappa(Gen::daxinv, Element::gen(Gen::dax));
    c.set_kappa(Gen::day, -Element::word(Word{Gen::daxinv, Gen::day}));
    return c;
}

/// Coassociativity, both counit laws, both coinverse laws on every basis word
/// up to the window, plus compatibility of delta/epsilon/kappa with every
/// rewrite rule and cap of the system.
inline Report hopf_axiom_check(const Costructure& c, int window, const EngineConfig& cfg,
                               bool check_kappa = true) {
    Report rep;
    rep.suite = "hopf/" + c.name();
    rep.config = cfg;
    const RewriteSystem& sys = c.system();

    // axiom sweep over the basis window
    std::vector<Word> basis;
    for (const Word& w : all_words(c.alphabet(), window, true))
        if (sys.is_normal_word(w)) basis.push_back(w);

    bool co_ok = true, cu_ok = true, ap_ok = true;
    std::string co_w, cu_w, ap_w;
    for (const Word& w : basis) {
        TensorElement d2 = c.delta(Element::word(w), false);
        TensorElement left = c.normalize_legs(c.delta_lift(d2, true));
        TensorElement right = c.normalize_legs(c.delta_lift(d2, false));
        if (left != right && co_ok) {
            co_ok = false;
            co_w = w.to_string();
        }
        TensorElement dn = c.normalize_legs(d2);
        // m(eps (x) id) and m(id (x) eps)
        Element ce1, ce2;
        for (const auto& [legs, cc] : dn.terms()) {
            ce1 += Element::word(legs[1]).scaled(cc * c.eps(Element::word(legs[0])));
            ce2 += Element::word(legs[0]).scaled(cc * c.eps(Element::word(legs[1])));
        }
        Element base = sys.normalize(Element::word(w));
        if ((sys.normalize(ce1) != base || sys.normalize(ce2) != base) && cu_ok) {
            cu_ok = false;
            cu_w = w.to_string();
        }
        if (check_kappa && c.has_kappa()) {
            Element a1, a2;
            for (const auto& [legs, cc] : dn.terms()) {
                a1 += (c.kappa(Element::word(legs[0])) * Element::word(legs[1])).scaled(cc);
                a2 += (Element::word(legs[0]) * c.kappa(Element::word(legs[1]))).scaled(cc);
            }
            Element target = Element::scalar(c.eps(Element::word(w)));
            if ((sys.normalize(a1) != sys.normalize(target) || sys.normalize(a2) != sys.normalize(target)) &&
                ap_ok) {
                ap_ok = false;
                ap_w = w.to_string();
            }
        }
    }
    rep.check_true("coassociativity(window=" + std::to_string(window) + ")", "6", co_ok, co_w);
    rep.check_true("counit(window=" + std::to_string(window) + ")", "8", cu_ok, cu_w);
    if (check_kappa && c.has_kappa()) rep.check_true("coinverse(window=" + std::to_string(window) + ")", "10", ap_ok, ap_w);

    // relation compatibility
    for (const auto& [key, rhs] : sys.rules()) {
        bool in_domain = true;
        for (Gen g : {key.first, key.second})
            if (std::find(c.alphabet().begin(), c.alphabet().end(), g) == c.alphabet().end()) in_domain = false;
        if (!in_domain) continue;
        Element lhs = Element::word(Word{key.first, key.second});
        std::string rn = std::string(gen_name(key.first)) + "*" + gen_name(key.second);
        rep.check_zero("compat.delta." + rn, "", c.delta(lhs) - c.delta(rhs));
        rep.check_zero("compat.eps." + rn, "", c.eps(lhs) - c.eps(rhs));
        if (check_kappa && c.has_kappa())
            rep.check_zero("compat.kappa." + rn, "", sys.normalize(c.kappa(lhs) - c.kappa(rhs)));
    }
    for (const auto& [g, n] : sys.caps()) {
        if (std::find(c.alphabet().begin(), c.alphabet().end(), g) == c.alphabet().end()) continue;
        Element gp = Element::gen(g).pow(n);
        std::string rn = std::string(gen_name(g)) + "^" + std::to_string(n);
        rep.check_zero("compat.delta." + rn, "", c.delta(gp));
        rep.check_zero("compat.eps." + rn, "", c.eps(gp));
        if (check_kappa && c.has_kappa()) rep.check_zero("compat.kappa." + rn, "", c.kappa(gp));
    }
    return rep;
}

}  // namespace qplane
