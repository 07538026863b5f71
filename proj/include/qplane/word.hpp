// Words in the free algebra: flat sequences of generators, ordered shortlex.

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "generator.hpp"

namespace qplane {

struct Word {
    std::vector<Gen> ls;

    Word() = default;
    Word(std::initializer_list<Gen> g) : ls(g) {}
    explicit Word(std::vector<Gen> g) : ls(std::move(g)) {}

    static Word empty() { return Word(); }

    size_t size() const { return ls.size(); }
    bool is_empty() const { return ls.empty(); }
    Gen operator[](size_t k) const { return ls[k]; }

    Word concat(const Word& o) const {
        Word r = *this;
        r.ls.insert(r.ls.end(), o.ls.begin(), o.ls.end());
        return r;
    }

    int grade() const {
        int g = 0;
        for (Gen l : ls) g += qplane::grade(l);
        return g % 3;
    }

    unsigned family_mask() const {
        unsigned m = kAllFamilies;
        for (Gen l : ls) m &= qplane::family_mask(l);
        return m;
    }

    // shortlex: by length, then lexicographically by rank (= enum value)
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.ls.size() != b.ls.size()) return a.ls.size() <=> b.ls.size();
        for (size_t k = 0; k < a.ls.size(); ++k)
            if (a.ls[k] != b.ls[k]) return a.ls[k] <=> b.ls[k];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.ls == b.ls; }

    std::string to_string() const {
        if (ls.empty()) return "1";
        std::string s;
        for (size_t k = 0; k < ls.size(); ++k) {
            if (k) s += "*";
            s += gen_name(ls[k]);
        }
        return s;
    }
};

}  // namespace qplane
