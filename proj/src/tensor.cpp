#include "lsq/tensor.hpp"

#include <sstream>

namespace lsq {

Rat Tensor2::coeff(const Key& u, const Key& v) const {
    auto it = terms_.find({u, v});
    return it == terms_.end() ? Rat(0) : it->second;
}

void Tensor2::add_term(const Key& u, const Key& v, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(KeyPair{u, v}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (alph_ != o.alph_) throw std::invalid_argument("alphabet mismatch");
    for (auto& [p, c] : o.terms_) add_term(p.first, p.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (alph_ != o.alph_) throw std::invalid_argument("alphabet mismatch");
    for (auto& [p, c] : o.terms_) add_term(p.first, p.second, -c);
    return *this;
}

Tensor2& Tensor2::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
    if (a.alph_ != b.alph_) throw std::invalid_argument("alphabet mismatch");
    Tensor2 r(a.alph_);
    for (auto& [p, cp] : a.terms_)
        for (auto& [q, cq] : b.terms_)
            r.add_term(p.first + q.first, p.second + q.second, cp * cq);
    return r;
}

std::string Tensor2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first) os << "\n";
        os << "(" << key_to_string(alph_, p.first) << " | " << key_to_string(alph_, p.second)
           << ") : " << c.str();
        first = false;
    }
    return os.str();
}

Tensor2 tensor(const NCPoly& p, const NCPoly& q) {
    require_same_alphabet(p, q);
    Tensor2 r(p.alphabet());
    for (auto& [u, cu] : p.terms())
        for (auto& [v, cv] : q.terms()) r.add_term(u, v, cu * cv);
    return r;
}

Tensor2 apply_each(const Tensor2& t,
                   const std::function<NCPoly(Alphabet, const Key&)>& f,
                   const std::function<NCPoly(Alphabet, const Key&)>& g) {
    Tensor2 r(t.alphabet());
    for (auto& [p, c] : t.terms()) {
        NCPoly fu = f(t.alphabet(), p.first);
        NCPoly gv = g(t.alphabet(), p.second);
        for (auto& [u, cu] : fu.terms())
            for (auto& [v, cv] : gv.terms()) r.add_term(u, v, c * cu * cv);
    }
    return r;
}

Tensor2 coproduct(const NCPoly& p) {
    Tensor2 r(p.alphabet());
    for (auto& [w, c] : p.terms()) {
        size_t n = w.size();
        if (n > 30) throw std::length_error("word too long for coproduct expansion");
        // Deal each letter to the left or right factor.
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            Key left, right;
            for (size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? left : right) += w[i];
            r.add_term(left, right, c);
        }
    }
    return r;
}

Tensor2 reduced_coproduct(const NCPoly& p) {
    Tensor2 r = coproduct(p);
    for (auto& [w, c] : p.terms()) {
        r.add_term(w, Key{}, -c);
        r.add_term(Key{}, w, -c);
    }
    return r;
}

bool is_primitive(const NCPoly& p) { return reduced_coproduct(p).is_zero(); }

NCPoly antipode(const NCPoly& p) {
    NCPoly r(p.alphabet());
    for (auto& [w, c] : p.terms()) {
        Key rev(w.rbegin(), w.rend());
        r.add_term(rev, (w.size() % 2 == 0) ? c : -c);
    }
    return r;
}

NCPoly reverse_Y(const NCPoly& p) {
    if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("reverse_Y requires alphabet Y");
    NCPoly r(Alphabet::Y);
    for (auto& [w, c] : p.terms()) r.add_term(Key(w.rbegin(), w.rend()), c);
    return r;
}

} // namespace lsq
