// Exact arithmetic in the cyclotomic field Q(zeta_12).
//
// Elements are stored in the power basis 1, z, z^2, z^3 of Q(z)/(z^4 - z^2 + 1),
// where z is a primitive 12th root of unity.  This is the smallest field that
// simultaneously contains
//   j = z^4 = z^2 - 1   (primitive cube root of unity, j^2 + j + 1 = 0)
//   i = z^3             (i^2 = -1)
// so every coefficient appearing in the calculus lives here exactly.

#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qplane {

using Rational = boost::multiprecision::cpp_rational;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Cyclo {
public:
    Cyclo() = default;
    explicit Cyclo(Rational r) { c_[0] = std::move(r); }
    Cyclo(long num, long den) { c_[0] = Rational(num, den); }
    explicit Cyclo(long n) { c_[0] = n; }

    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(1); }

    // j = z^2 - 1
    static Cyclo j() {
        Cyclo r;
        r.c_[0] = -1;
        r.c_[2] = 1;
        return r;
    }

    // i = z^3
    static Cyclo i() {
        Cyclo r;
        r.c_[3] = 1;
        return r;
    }

    static Cyclo from_coords(std::array<Rational, 4> coords) {
        Cyclo r;
        r.c_ = std::move(coords);
        return r;
    }

    // j^k for any integer k (j has order 3)
    static Cyclo jpow(long k) {
        long m = ((k % 3) + 3) % 3;
        if (m == 0) return one();
        if (m == 1) return j();
        return j() * j();
    }

    const Rational& coord(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const {
        for (const auto& r : c_)
            if (r != 0) return false;
        return true;
    }
    bool is_one() const { return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo operator-() const {
        Cyclo r;
        for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        Cyclo r;
        for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        // convolution up to degree 6, then reduction by
        //   z^4 = z^2 - 1,  z^5 = z^3 - z,  z^6 = -1
        std::array<Rational, 7> t{};
        for (int p = 0; p < 4; ++p) {
            if (a.c_[p] == 0) continue;
            for (int q = 0; q < 4; ++q) {
                if (b.c_[q] == 0) continue;
                t[static_cast<size_t>(p + q)] += a.c_[p] * b.c_[q];
            }
        }
        Cyclo r;
        r.c_[0] = t[0] - t[4] - t[6];
        r.c_[1] = t[1] - t[5];
        r.c_[2] = t[2] + t[4];
        r.c_[3] = t[3] + t[5];
        return r;
    }

    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    /// Multiplicative inverse; throws on zero.
    Cyclo inv() const {
        if (is_zero()) throw AlgebraError("cyclotomic inversion of zero");
        // Solve M * x = e0 where M is multiplication-by-*this in the power basis.
        std::array<std::array<Rational, 5>, 4> m{};
        for (int k = 0; k < 4; ++k) {
            Cyclo col = *this * zpow(k);
            for (int r = 0; r < 4; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(k)] = col.c_[static_cast<size_t>(r)];
        }
        m[0][4] = 1;
        // Gaussian elimination with exact rationals.
        for (int col = 0; col < 4; ++col) {
            int piv = -1;
            for (int r = col; r < 4; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
            if (piv < 0) throw AlgebraError("singular multiplication matrix");  // unreachable for a field
            std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
            Rational d = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int k = col; k <= 4; ++k) m[static_cast<size_t>(col)][static_cast<size_t>(k)] /= d;
            for (int r = 0; r < 4; ++r) {
                if (r == col) continue;
                Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (f == 0) continue;
                for (int k = col; k <= 4; ++k)
                    m[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
            }
        }
        Cyclo r;
        for (int k = 0; k < 4; ++k) r.c_[static_cast<size_t>(k)] = m[static_cast<size_t>(k)][4];
        return r;
    }

    Cyclo pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyclo base = *this, acc = one();
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Coordinates in the display basis {1, j, i, ij}.
    std::array<Rational, 4> display_coords() const {
        // 1 = 1, j = z^2 - 1, i = z^3, ij = -z
        return {c_[0] + c_[2], c_[2], c_[3], -c_[1]};
    }

    /// Rendering over {1, j, i, ij}, e.g. "-1 - j" for j^2.
    std::string to_string() const {
        auto d = display_coords();
        static const char* names[4] = {"", "j", "i", "i*j"};
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < 4; ++k) {
            const Rational& v = d[static_cast<size_t>(k)];
            if (v == 0) continue;
            Rational a = v < 0 ? Rational(-v) : v;
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            bool unit = (a == 1) && k != 0;
            if (!unit) os << a.str();
            if (k != 0) {
                if (!unit) os << "*";
                os << names[k];
            }
        }
        if (first) return "0";
        return os.str();
    }

    /// Rendering in the power basis of z (diagnostics).
    std::string to_string_zeta() const {
        static const char* names[4] = {"", "z", "z^2", "z^3"};
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k < 4; ++k) {
            const Rational& v = c_[static_cast<size_t>(k)];
            if (v == 0) continue;
            Rational a = v < 0 ? Rational(-v) : v;
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            bool unit = (a == 1) && k != 0;
            if (!unit) os << a.str();
            if (k != 0) {
                if (!unit) os << "*";
                os << names[k];
            }
        }
        if (first) return "0";
        return os.str();
    }

private:
    static Cyclo zpow(int k) {
        Cyclo r;
        r.c_[static_cast<size_t>(k)] = 1;  // k in [0,3]
        return r;
    }

    std::array<Rational, 4> c_{};  // c0 + c1 z + c2 z^2 + c3 z^3
};

}  // namespace qplane
