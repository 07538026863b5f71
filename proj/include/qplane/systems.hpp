// The concrete rewrite systems of the calculus.
//
// Rankings:
//   main     d2y < d2x < dy < dx < x^-1 < x < y
//   omega    theta < phi < x^-1 < x < y
//   operator H < X < q^-N < q^N
//   dual     B < A < q^A < q^-A
//   partial  day < dax^-1 < dax
//
// With these rankings every defining relation reads left-to-right as a
// reduction and the coordinate basis is x^m y^n.

#pragma once

#include "rewrite.hpp"

namespace qplane {

namespace detail {
inline Element w(std::initializer_list<Gen> g, Scalar c = Scalar::one()) {
    return Element::word(Word(g), std::move(c));
}
}  // namespace detail

/// Coordinates, first and second order differentials; caps dx^3 = dy^3 = 0.
inline RewriteSystem build_main_system(QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    RewriteSystem sys("main", m, {Gen::d2y, Gen::d2x, Gen::dy, Gen::dx, Gen::xinv, Gen::x, Gen::y});

    sys.add_rule(Gen::y, Gen::x, w({Gen::x, Gen::y}, q(-1)));

    sys.add_rule(Gen::x, Gen::dx, w({Gen::dx, Gen::x}, q(-1)));
    sys.add_rule(Gen::x, Gen::dy, w({Gen::dy, Gen::x}));
    sys.add_rule(Gen::y, Gen::dx, w({Gen::dx, Gen::y}, q(-1)) + w({Gen::dy, Gen::x}, q(-1) - Scalar::one()));
    sys.add_rule(Gen::y, Gen::dy, w({Gen::dy, Gen::y}, q(-1)));

    sys.add_rule(Gen::dx, Gen::dy, w({Gen::dy, Gen::dx}, q(1)));

    sys.add_rule(Gen::x, Gen::d2x, w({Gen::d2x, Gen::x}, q(-1)));
    sys.add_rule(Gen::x, Gen::d2y, w({Gen::d2y, Gen::x}));
    sys.add_rule(Gen::y, Gen::d2x, w({Gen::d2x, Gen::y}, q(-1)) + w({Gen::d2y, Gen::x}, q(-1) - Scalar::one()));
    sys.add_rule(Gen::y, Gen::d2y, w({Gen::d2y, Gen::y}, q(-1)));

    sys.add_rule(Gen::dx, Gen::d2x, w({Gen::d2x, Gen::dx}, q(-2)));
    sys.add_rule(Gen::dx, Gen::d2y, w({Gen::d2y, Gen::dx}, q(2)));
    sys.add_rule(Gen::dy, Gen::d2x, w({Gen::d2x, Gen::dy}, q(-2)) + w({Gen::d2y, Gen::dx}, q(1) - q(-1)));
    sys.add_rule(Gen::dy, Gen::d2y, w({Gen::d2y, Gen::dy}, q(-2)));

    sys.add_rule(Gen::d2x, Gen::d2y, w({Gen::d2y, Gen::d2x}, q(1)));

    // x^-1 relations, conjugates of the x rules
    sys.add_rule(Gen::y, Gen::xinv, w({Gen::xinv, Gen::y}, q(1)));
    sys.add_rule(Gen::xinv, Gen::dx, w({Gen::dx, Gen::xinv}, q(1)));
    sys.add_rule(Gen::xinv, Gen::dy, w({Gen::dy, Gen::xinv}));
    sys.add_rule(Gen::xinv, Gen::d2x, w({Gen::d2x, Gen::xinv}, q(1)));
    sys.add_rule(Gen::xinv, Gen::d2y, w({Gen::d2y, Gen::xinv}));
    sys.add_rule(Gen::x, Gen::xinv, Element::one());
    sys.add_rule(Gen::xinv, Gen::x, Element::one());

    sys.add_cap(Gen::dx, 3);
    sys.add_cap(Gen::dy, 3);
    return sys;
}

/// Invariant forms against coordinates; caps theta^3 = phi^3 = 0.
inline RewriteSystem build_omega_system(QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    RewriteSystem sys("omega", m, {Gen::theta, Gen::phi, Gen::xinv, Gen::x, Gen::y});

    sys.add_rule(Gen::x, Gen::theta, w({Gen::theta, Gen::x}, q(-1)));
    sys.add_rule(Gen::y, Gen::theta, w({Gen::theta, Gen::y}, q(-1)) + w({Gen::phi}, q(-1) - Scalar::one()));
    sys.add_rule(Gen::x, Gen::phi, w({Gen::phi, Gen::x}));
    sys.add_rule(Gen::y, Gen::phi, w({Gen::phi, Gen::y}));
    sys.add_rule(Gen::phi, Gen::theta, w({Gen::theta, Gen::phi}));
    sys.add_rule(Gen::y, Gen::x, w({Gen::x, Gen::y}, q(-1)));

    sys.add_rule(Gen::y, Gen::xinv, w({Gen::xinv, Gen::y}, q(1)));
    sys.add_rule(Gen::xinv, Gen::theta, w({Gen::theta, Gen::xinv}, q(1)));
    sys.add_rule(Gen::xinv, Gen::phi, w({Gen::phi, Gen::xinv}));
    sys.add_rule(Gen::x, Gen::xinv, Element::one());
    sys.add_rule(Gen::xinv, Gen::x, Element::one());

    sys.add_cap(Gen::theta, 3);
    sys.add_cap(Gen::phi, 3);
    return sys;
}

/// The quantum Lie algebra presentation with K = q^-N adjoined grouplike.
inline RewriteSystem build_operator_system(QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    RewriteSystem sys("operator", m, {Gen::H, Gen::Xop, Gen::K, Gen::Kinv});

    sys.add_rule(Gen::Xop, Gen::H, w({Gen::H, Gen::Xop}, q(-1)) + w({Gen::Xop}));
    sys.add_rule(Gen::K, Gen::H, w({Gen::H, Gen::K}));
    sys.add_rule(Gen::K, Gen::Xop, w({Gen::Xop, Gen::K}, q(1)));
    sys.add_rule(Gen::Kinv, Gen::H, w({Gen::H, Gen::Kinv}));
    sys.add_rule(Gen::Kinv, Gen::Xop, w({Gen::Xop, Gen::Kinv}, q(-1)));
    sys.add_rule(Gen::K, Gen::Kinv, Element::one());
    sys.add_rule(Gen::Kinv, Gen::K, Element::one());
    return sys;
}

/// The dual algebra: AB = BA + B with L = q^A adjoined grouplike.
inline RewriteSystem build_dual_system(QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    RewriteSystem sys("dual", m, {Gen::B, Gen::A, Gen::L, Gen::Linv});

    sys.add_rule(Gen::A, Gen::B, w({Gen::B, Gen::A}) + w({Gen::B}));
    sys.add_rule(Gen::L, Gen::B, w({Gen::B, Gen::L}, q(1)));
    sys.add_rule(Gen::L, Gen::A, w({Gen::A, Gen::L}));
    sys.add_rule(Gen::Linv, Gen::B, w({Gen::B, Gen::Linv}, q(-1)));
    sys.add_rule(Gen::Linv, Gen::A, w({Gen::A, Gen::Linv}));
    sys.add_rule(Gen::L, Gen::Linv, Element::one());
    sys.add_rule(Gen::Linv, Gen::L, Element::one());
    return sys;
}

/// Commuting partial derivatives with a formal inverse of dax.
inline RewriteSystem build_partial_system(QMode m) {
    using detail::w;
    (void)m;
    RewriteSystem sys("partial", m, {Gen::day, Gen::daxinv, Gen::dax});
    sys.add_rule(Gen::daxinv, Gen::day, w({Gen::day, Gen::daxinv}));
    sys.add_rule(Gen::dax, Gen::day, w({Gen::day, Gen::dax}));
    sys.add_rule(Gen::dax, Gen::daxinv, Element::one());
    sys.add_rule(Gen::daxinv, Gen::dax, Element::one());
    return sys;
}

inline RewriteSystem build_system_by_name(const std::string& name, QMode m) {
    if (name == "main") return build_main_system(m);
    if (name == "omega") return build_omega_system(m);
    if (name == "operator") return build_operator_system(m);
    if (name == "dual") return build_dual_system(m);
    if (name == "partial") return build_partial_system(m);
    throw AlgebraError("unknown system: " + name);
}

// ---------------------------------------------------------------------------
// Ansatz coefficients for the covariance derivation.

/// The undetermined coefficients of the coordinate/differential ansatz
///   x dx = A dx x,          x dy = C11 dy x + C12 dx y,
///   y dx = C21 dx y + C22 dy x,   y dy = B dy y,   dx dy = F dy dx,
/// together with the induced second-order coefficients.  K1, K2, Q1, Q2 are
/// always recomputed from the current fields.
struct CalcCoefficients {
    Scalar A, B, C11, C12, C21, C22, F;

    Scalar K1() const { return Scalar::j() * C11 + Scalar::j() * C12 * F - F; }
    Scalar K2() const { return Scalar::j() * C21 * F + Scalar::j() * C22 - Scalar::one(); }
    Scalar Q1() const { return -(Scalar::j() * Scalar::j()) * (C12 + C11 * F.inv() + Scalar::one()); }
    Scalar Q2() const { return -(Scalar::j() * Scalar::j()) * (C22 + C21 * F + Scalar::one()); }
};

/// First-order ansatz system (coordinates and first differentials only).
inline RewriteSystem build_ansatz_system(const CalcCoefficients& c, QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    RewriteSystem sys("ansatz", m, {Gen::dy, Gen::dx, Gen::x, Gen::y});
    sys.add_rule(Gen::y, Gen::x, w({Gen::x, Gen::y}, q(-1)));
    sys.add_rule(Gen::x, Gen::dx, w({Gen::dx, Gen::x}, c.A));
    sys.add_rule(Gen::x, Gen::dy, w({Gen::dy, Gen::x}, c.C11) + w({Gen::dx, Gen::y}, c.C12));
    sys.add_rule(Gen::y, Gen::dx, w({Gen::dx, Gen::y}, c.C21) + w({Gen::dy, Gen::x}, c.C22));
    sys.add_rule(Gen::y, Gen::dy, w({Gen::dy, Gen::y}, c.B));
    sys.add_rule(Gen::dx, Gen::dy, w({Gen::dy, Gen::dx}, c.F));
    sys.add_cap(Gen::dx, 3);
    sys.add_cap(Gen::dy, 3);
    return sys;
}

/// Full ansatz table including the differentiated second-order relations.
/// Requires invertible Q1, Q2, F, so it is built in specialized mode where
/// every nonzero scalar is a unit.
inline RewriteSystem build_ansatz_full_system(const CalcCoefficients& c, QMode m) {
    using detail::w;
    auto q = [m](long k) { return Scalar::q_power(m, k); };
    Scalar j = Scalar::j(), j2 = Scalar::j() * Scalar::j();
    RewriteSystem sys("ansatz-full", m, {Gen::d2y, Gen::d2x, Gen::dy, Gen::dx, Gen::x, Gen::y});
    sys.add_rule(Gen::y, Gen::x, w({Gen::x, Gen::y}, q(-1)));
    sys.add_rule(Gen::x, Gen::dx, w({Gen::dx, Gen::x}, c.A));
    sys.add_rule(Gen::x, Gen::dy, w({Gen::dy, Gen::x}, c.C11) + w({Gen::dx, Gen::y}, c.C12));
    sys.add_rule(Gen::y, Gen::dx, w({Gen::dx, Gen::y}, c.C21) + w({Gen::dy, Gen::x}, c.C22));
    sys.add_rule(Gen::y, Gen::dy, w({Gen::dy, Gen::y}, c.B));
    sys.add_rule(Gen::dx, Gen::dy, w({Gen::dy, Gen::dx}, c.F));
    // first differentiation of the ansatz
    sys.add_rule(Gen::x, Gen::d2x, w({Gen::d2x, Gen::x}, c.A) + w({Gen::dx, Gen::dx}, c.A * j - Scalar::one()));
    sys.add_rule(Gen::x, Gen::d2y,
                 w({Gen::d2y, Gen::x}, c.C11) + w({Gen::d2x, Gen::y}, c.C12) + w({Gen::dy, Gen::dx}, c.K1()));
    sys.add_rule(Gen::y, Gen::d2x,
                 w({Gen::d2x, Gen::y}, c.C21) + w({Gen::d2y, Gen::x}, c.C22) + w({Gen::dy, Gen::dx}, c.K2()));
    sys.add_rule(Gen::y, Gen::d2y, w({Gen::d2y, Gen::y}, c.B) + w({Gen::dy, Gen::dy}, c.B * j - Scalar::one()));
    // second differentiation
    Scalar q1inv = c.Q1().inv(), q2inv = c.Q2().inv();
    sys.add_rule(Gen::dx, Gen::d2x, w({Gen::d2x, Gen::dx}, Scalar(Cyclo::jpow(-2))));
    sys.add_rule(Gen::dx, Gen::d2y, w({Gen::d2y, Gen::dx}, j2 * c.C11 * q1inv) +
                                        w({Gen::d2x, Gen::dy}, (j2 * c.C12 + c.F.inv() * c.K1()) * q1inv));
    sys.add_rule(Gen::dy, Gen::d2x, w({Gen::d2x, Gen::dy}, j2 * c.C21 * q2inv) +
                                        w({Gen::d2y, Gen::dx}, (j2 * c.C22 + c.K2()) * q2inv));
    sys.add_rule(Gen::dy, Gen::d2y, w({Gen::d2y, Gen::dy}, Scalar(Cyclo::jpow(-2))));
    sys.add_rule(Gen::d2x, Gen::d2y, w({Gen::d2y, Gen::d2x}, c.F));
    sys.add_cap(Gen::dx, 3);
    sys.add_cap(Gen::dy, 3);
    return sys;
}

}  // namespace qplane
