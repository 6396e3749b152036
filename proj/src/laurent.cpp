#include "tandem/laurent.hpp"

#include <limits>
#include <sstream>

namespace tandem {

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Rat LaurentPoly::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int e1, int e2, const Rat& c) {
    if (c == 0) return;
    Key k{e1, e2};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

LaurentPoly LaurentPoly::shifted(int d1, int d2) const {
    LaurentPoly out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(Key{k.first + d1, k.second + d2}, v);
    return out;
}

LaurentPoly LaurentPoly::nonnegative_part(int slot) const {
    LaurentPoly out;
    for (const auto& [k, v] : terms_) {
        int e = slot == 0 ? k.first : k.second;
        if (e >= 0) out.terms_.emplace(k, v);
    }
    return out;
}

LaurentPoly LaurentPoly::slice(int slot, int e) const {
    LaurentPoly out;
    for (const auto& [k, v] : terms_) {
        if ((slot == 0 ? k.first : k.second) != e) continue;
        Key nk = slot == 0 ? Key{0, k.second} : Key{k.first, 0};
        out.add_term(nk.first, nk.second, v);
    }
    return out;
}

LaurentPoly LaurentPoly::eval_one(int slot) const {
    LaurentPoly out;
    for (const auto& [k, v] : terms_) {
        Key nk = slot == 0 ? Key{0, k.second} : Key{k.first, 0};
        out.add_term(nk.first, nk.second, v);
    }
    return out;
}

int LaurentPoly::min_exponent(int slot) const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [k, v] : terms_) m = std::min(m, slot == 0 ? k.first : k.second);
    return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_exponent(int slot) const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [k, v] : terms_) m = std::max(m, slot == 0 ? k.first : k.second);
    return terms_.empty() ? 0 : m;
}

std::string LaurentPoly::to_string(const std::string& v1, const std::string& v2) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit) os << rat_to_string(a);
        auto emit = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (!unit) os << "*";
            unit = false;
            os << name;
            if (e != 1) os << "^" << e;
        };
        emit(v1, k.first);
        emit(v2, k.second);
    }
    return os.str();
}

} // namespace tandem
