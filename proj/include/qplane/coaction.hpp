// Right and left coactions of the coordinate Hopf algebra on the
// differential bimodule, and the covariance suite.
//
// Both coactions are algebra maps into a tensor square whose second
// (respectively first) leg carries only coordinates, so the graded braiding
// never fires and the extension through products is plain componentwise
// multiplication.  The generator images on differentials come from applying
// d to one leg of the coordinate coproduct, once for first-order and twice
// for second-order differentials.

#pragma once

#include "calculus.hpp"
#include "costructure.hpp"

namespace qplane {

class Coaction {
public:
    enum class Side { right, left };  // right: Gamma (x) A;  left: A (x) Gamma

    Coaction(Side side, const RewriteSystem* sys) : side_(side), sys_(sys) {
        Word wx{Gen::x}, wxi{Gen::xinv}, wy{Gen::y}, e;
        auto one = Scalar::one();
        if (side == Side::right) {
            im_.emplace(Gen::x, TensorElement::term({wx, wx}));
            im_.emplace(Gen::xinv, TensorElement::term({wxi, wxi}));
            TensorElement ty(2);
            ty.add({wy, e}, one);
            ty.add({wx, wy}, one);
            im_.emplace(Gen::y, std::move(ty));
            im_.emplace(Gen::dx, TensorElement::term({Word{Gen::dx}, wx}));
            TensorElement tdy(2);
            tdy.add({Word{Gen::dy}, e}, one);
            tdy.add({Word{Gen::dx}, wy}, one);
            im_.emplace(Gen::dy, std::move(tdy));
            im_.emplace(Gen::d2x, TensorElement::term({Word{Gen::d2x}, wx}));
            TensorElement td2y(2);
            td2y.add({Word{Gen::d2y}, e}, one);
            td2y.add({Word{Gen::d2x}, wy}, one);
            im_.emplace(Gen::d2y, std::move(td2y));
        } else {
            im_.emplace(Gen::x, TensorElement::term({wx, wx}));
            im_.emplace(Gen::xinv, TensorElement::term({wxi, wxi}));
            TensorElement ty(2);
            ty.add({wy, e}, one);
            ty.add({wx, wy}, one);
            im_.emplace(Gen::y, std::move(ty));
            im_.emplace(Gen::dx, TensorElement::term({wx, Word{Gen::dx}}));
            im_.emplace(Gen::dy, TensorElement::term({wx, Word{Gen::dy}}));
            im_.emplace(Gen::d2x, TensorElement::term({wx, Word{Gen::d2x}}));
            im_.emplace(Gen::d2y, TensorElement::term({wx, Word{Gen::d2y}}));
        }
    }

    Side side() const { return side_; }

    TensorElement apply_raw(const Element& e) const {
        TensorElement acc(2);
        for (const auto& [w, c] : e.terms()) {
            TensorElement t = TensorElement::unit(2);
            for (Gen g : w.ls) {
                auto it = im_.find(g);
                if (it == im_.end()) throw AlgebraError("coaction undefined on " + std::string(gen_name(g)));
                t = tensor_mul(t, it->second);
            }
            acc = acc + t.scaled(c);
        }
        return acc;
    }

    TensorElement apply(const Element& e) const { return normalize_legs(apply_raw(e)); }

    TensorElement normalize_legs(const TensorElement& t) const {
        TensorElement out(t.arity());
        for (const auto& [legs, c] : t.terms()) {
            std::vector<Element> nf;
            for (const Word& leg : legs) nf.push_back(sys_->normalize(Element::word(leg)));
            TensorElement acc = TensorElement::term(TensorElement::Key(t.arity()), c);
            for (size_t k = 0; k < legs.size(); ++k) {
                TensorElement next(t.arity());
                for (const auto& [pl, pc] : acc.terms())
                    for (const auto& [w, wc] : nf[k].terms()) {
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

private:
    Side side_;
    const RewriteSystem* sys_;
    std::map<Gen, TensorElement> im_;
};

/// Invariance of the relation table, the coaction laws, the d-compatibility,
/// and the mixed-coaction identity.
inline Report covariance_suite(const EngineConfig& cfg) {
    Report rep;
    rep.suite = "covariance";
    rep.config = cfg;
    Calculus calc(cfg.mode);
    const RewriteSystem sys = build_main_system(cfg.mode);
    Coaction right(Coaction::Side::right, &sys), left(Coaction::Side::left, &sys);
    Costructure coA = costructure_coordinates(&sys);

    // (i) the fourteen two-letter relations are mapped to zero
    const std::pair<Gen, Gen> relations[14] = {
        {Gen::x, Gen::dx},  {Gen::x, Gen::dy},  {Gen::y, Gen::dx},  {Gen::y, Gen::dy},
        {Gen::dx, Gen::dy}, {Gen::x, Gen::d2x}, {Gen::x, Gen::d2y}, {Gen::y, Gen::d2x},
        {Gen::y, Gen::d2y}, {Gen::dx, Gen::d2x}, {Gen::dx, Gen::d2y}, {Gen::dy, Gen::d2x},
        {Gen::dy, Gen::d2y}, {Gen::d2x, Gen::d2y}};
    for (const auto& [a, b] : relations) {
        Element lhs = Element::word(Word{a, b});
        const Element& rhs = *sys.find_rule(a, b);
        std::string rn = std::string(gen_name(a)) + "*" + gen_name(b);
        rep.check_zero("invariance.right." + rn, "35-39", right.apply(lhs - rhs));
        rep.check_zero("invariance.left." + rn, "35-39", left.apply(lhs - rhs));
    }

    // window for the law checks: generators plus short bimodule words
    std::vector<Word> window;
    for (Gen g : {Gen::x, Gen::xinv, Gen::y, Gen::dx, Gen::dy, Gen::d2x, Gen::d2y}) window.push_back(Word{g});
    for (const Word& w : all_words({Gen::x, Gen::xinv, Gen::y, Gen::dx, Gen::dy, Gen::d2x, Gen::d2y}, 3)) {
        int ndiff = 0;
        for (Gen g : w.ls) ndiff += (grade(g) != 0 || g == Gen::d2x || g == Gen::d2y) ? 1 : 0;
        if (ndiff <= 1 && w.size() > 1 && sys.is_normal_word(w)) window.push_back(w);
    }

    // (ii) coassociativity and counit laws for both coactions
    bool r_co = true, r_cu = true, l_co = true, l_cu = true;
    std::string r_co_w, r_cu_w, l_co_w, l_cu_w;
    for (const Word& w : window) {
        Element e = Element::word(w);
        {
            TensorElement t = right.apply_raw(e);
            // (Delta_R (x) id) Delta_R  vs  (id (x) Delta_A) Delta_R
            TensorElement lhs(3), rhs(3);
            for (const auto& [legs, c] : t.terms()) {
                TensorElement inner = right.apply_raw(Element::word(legs[0]));
                for (const auto& [il, ic] : inner.terms()) lhs.add({il[0], il[1], legs[1]}, c * ic);
                TensorElement dd = coA.delta_word(legs[1]);
                for (const auto& [dl, dc] : dd.terms()) rhs.add({legs[0], dl[0], dl[1]}, c * dc);
            }
            if (right.normalize_legs(lhs) != right.normalize_legs(rhs) && r_co) {
                r_co = false;
                r_co_w = w.to_string();
            }
            Element cu;
            TensorElement tn = right.apply(e);
            for (const auto& [legs, c] : tn.terms())
                cu += Element::word(legs[0]).scaled(c * coA.eps(Element::word(legs[1])));
            if (sys.normalize(cu) != sys.normalize(e) && r_cu) {
                r_cu = false;
                r_cu_w = w.to_string();
            }
        }
        {
            TensorElement t = left.apply_raw(e);
            // (Delta_A (x) id) Delta_L  vs  (id (x) Delta_L) Delta_L
            TensorElement lhs(3), rhs(3);
            for (const auto& [legs, c] : t.terms()) {
                TensorElement dd = coA.delta_word(legs[0]);
                for (const auto& [dl, dc] : dd.terms()) lhs.add({dl[0], dl[1], legs[1]}, c * dc);
                TensorElement inner = left.apply_raw(Element::word(legs[1]));
                for (const auto& [il, ic] : inner.terms()) rhs.add({legs[0], il[0], il[1]}, c * ic);
            }
            if (left.normalize_legs(lhs) != left.normalize_legs(rhs) && l_co) {
                l_co = false;
                l_co_w = w.to_string();
            }
            Element cu;
            TensorElement tn = left.apply(e);
            for (const auto& [legs, c] : tn.terms())
                cu += Element::word(legs[1]).scaled(c * coA.eps(Element::word(legs[0])));
            if (sys.normalize(cu) != sys.normalize(e) && l_cu) {
                l_cu = false;
                l_cu_w = w.to_string();
            }
        }
    }
    rep.check_true("coassociativity.right", "21", r_co, r_co_w);
    rep.check_true("counit.right", "21", r_cu, r_cu_w);
    rep.check_true("coassociativity.left", "26", l_co, l_co_w);
    rep.check_true("counit.left", "26", l_cu, l_cu_w);

    // (iii) d-compatibility on coordinate words
    bool d_r = true, d_l = true;
    std::string d_r_w, d_l_w;
    for (const Word& w : all_words({Gen::x, Gen::xinv, Gen::y}, 3, true)) {
        if (!sys.is_normal_word(w)) continue;
        Element a = Element::word(w);
        TensorElement dA = coA.delta(a, false);
        TensorElement viaDr(2), viaDl(2);
        for (const auto& [legs, c] : dA.terms()) {
            Element dleg = calc.d(Element::word(legs[0]));
            for (const auto& [dw, dc] : dleg.terms()) viaDr.add({dw, legs[1]}, c * dc);
            Element dleg2 = calc.d(Element::word(legs[1]));
            for (const auto& [dw, dc] : dleg2.terms()) viaDl.add({legs[0], dw}, c * dc);
        }
        if (right.normalize_legs(viaDr) != right.apply(calc.d(a)) && d_r) {
            d_r = false;
            d_r_w = w.to_string();
        }
        if (left.normalize_legs(viaDl) != left.apply(calc.d(a)) && d_l) {
            d_l = false;
            d_l_w = w.to_string();
        }
    }
    rep.check_true("d-compat.right", "40", d_r, d_r_w);
    rep.check_true("d-compat.left", "40", d_l, d_l_w);

    // (iv) mixed identity (Delta_L (x) id) Delta_R = (id (x) Delta_R) Delta_L
    bool mix = true;
    std::string mix_w;
    for (const Word& w : window) {
        Element e = Element::word(w);
        TensorElement lhs(3), rhs(3);
        TensorElement tr = right.apply_raw(e), tl = left.apply_raw(e);
        for (const auto& [legs, c] : tr.terms()) {
            TensorElement inner = left.apply_raw(Element::word(legs[0]));
            for (const auto& [il, ic] : inner.terms()) lhs.add({il[0], il[1], legs[1]}, c * ic);
        }
        for (const auto& [legs, c] : tl.terms()) {
            TensorElement inner = right.apply_raw(Element::word(legs[1]));
            for (const auto& [il, ic] : inner.terms()) rhs.add({legs[0], il[0], il[1]}, c * ic);
        }
        if (right.normalize_legs(lhs) != right.normalize_legs(rhs)) {
            mix = false;
            mix_w = w.to_string();
            break;
        }
    }
    rep.check_true("mixed-coaction", "41", mix, mix_w);
    return rep;
}

}  // namespace qplane
