#include "lsq/poly.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace lsq {

NCPoly NCPoly::one(Alphabet a) {
    NCPoly p(a);
    p.terms_.emplace(Key{}, Rat(1));
    return p;
}

NCPoly NCPoly::letter(Alphabet a, unsigned idx) {
    if (!letter_valid(a, idx))
        throw std::invalid_argument("invalid letter index for alphabet");
    NCPoly p(a);
    p.terms_.emplace(Key(1, static_cast<char>(idx)), Rat(1));
    return p;
}

NCPoly NCPoly::word(Alphabet a, Key w, Rat c) {
    NCPoly p(a);
    if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

Rat NCPoly::coeff(const Key& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NCPoly::add_term(const Key& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    require_same_alphabet(*this, o);
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    require_same_alphabet(*this, o);
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(alph_);
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    require_same_alphabet(a, b);
    NCPoly r(a.alph_);
    for (auto& [u, cu] : a.terms_)
        for (auto& [v, cv] : b.terms_) r.add_term(u + v, cu * cv);
    return r;
}

bool NCPoly::is_homogeneous_weight() const {
    if (terms_.empty()) return true;
    int m = key_weight(alph_, terms_.begin()->first);
    for (auto& [w, c] : terms_)
        if (key_weight(alph_, w) != m) return false;
    return true;
}

bool NCPoly::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    int m = key_weight(alph_, terms_.begin()->first);
    int n = key_depth(alph_, terms_.begin()->first);
    for (auto& [w, c] : terms_)
        if (key_weight(alph_, w) != m || key_depth(alph_, w) != n) return false;
    return true;
}

int NCPoly::weight() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous_weight()) throw std::logic_error("weight of non-homogeneous polynomial");
    return key_weight(alph_, terms_.begin()->first);
}

int NCPoly::depth() const {
    if (terms_.empty()) return 0;
    if (!is_bihomogeneous()) throw std::logic_error("depth of non-bihomogeneous polynomial");
    return key_depth(alph_, terms_.begin()->first);
}

std::map<Bidegree, NCPoly> NCPoly::bidegree_split() const {
    std::map<Bidegree, NCPoly> out;
    for (auto& [w, c] : terms_) {
        Bidegree d{key_weight(alph_, w), key_depth(alph_, w)};
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, NCPoly(alph_)).first;
        it->second.add_term(w, c);
    }
    return out;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
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
        os << a.str() << "*" << key_to_string(alph_, w);
        first = false;
    }
    return os.str();
}

void require_same_alphabet(const NCPoly& a, const NCPoly& b) {
    if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
}

namespace {

enum class QshKind { Shuffle, Stuffle, Balanced };

using IntTermMap = std::map<Key, long long, LenLex>;

// Letter-level recursion for the shuffle and both quasi-shuffles; memoized
// globally on the word pair (the result does not depend on the alphabet
// beyond the merge rule).
const IntTermMap& qsh_words(QshKind kind, const Key& u, const Key& v) {
    static std::map<std::tuple<int, Key, Key>, IntTermMap> memo[1];
    if (LenLex{}(v, u)) return qsh_words(kind, v, u); // products are commutative
    auto key = std::make_tuple(static_cast<int>(kind), u, v);
    auto it = memo[0].find(key);
    if (it != memo[0].end()) return it->second;

    IntTermMap res;
    if (u.empty()) {
        res[v] = 1;
    } else if (v.empty()) {
        res[u] = 1;
    } else {
        unsigned char a = u[0], b = v[0];
        Key ut = u.substr(1), vt = v.substr(1);
        for (auto& [w, c] : qsh_words(kind, ut, v)) res[Key(1, a) + w] += c;
        for (auto& [w, c] : qsh_words(kind, u, vt)) res[Key(1, b) + w] += c;
        if (kind != QshKind::Shuffle && !(kind == QshKind::Balanced && (a == 0 || b == 0))) {
            Key merged(1, static_cast<char>(a + b));
            for (auto& [w, c] : qsh_words(kind, ut, vt)) res[merged + w] += c;
        }
    }
    return memo[0].emplace(std::move(key), std::move(res)).first->second;
}

NCPoly qsh(QshKind kind, const NCPoly& p, const NCPoly& q) {
    require_same_alphabet(p, q);
    NCPoly r(p.alphabet());
    for (auto& [u, cu] : p.terms())
        for (auto& [v, cv] : q.terms()) {
            Rat c = cu * cv;
            for (auto& [w, k] : qsh_words(kind, u, v)) r.add_term(w, c * k);
        }
    return r;
}

} // namespace

NCPoly shuffle(const NCPoly& p, const NCPoly& q) { return qsh(QshKind::Shuffle, p, q); }

NCPoly stuffle(const NCPoly& p, const NCPoly& q) {
    if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("stuffle requires alphabet Y");
    return qsh(QshKind::Stuffle, p, q);
}

NCPoly balanced_stuffle(const NCPoly& p, const NCPoly& q) {
    if (p.alphabet() != Alphabet::B)
        throw std::invalid_argument("balanced quasi-shuffle requires alphabet B");
    return qsh(QshKind::Balanced, p, q);
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    std::optional<Alphabet> alph;

    explicit Parser(const std::string& text, std::optional<Alphabet> hint) : s(text), alph(hint) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + msg);
    }

    Int parse_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return Int(s.substr(start, i - start));
    }

    Alphabet letter_alphabet(char c) {
        switch (c) {
            case 'x': return Alphabet::X;
            case 'y': return Alphabet::Y;
            case 'b': return Alphabet::B;
        }
        fail("expected letter");
    }

    void unify(Alphabet a) {
        if (!alph) alph = a;
        else if (*alph != a) fail("mixed alphabets in expression");
    }

    // A parsed value is coeff * poly; `poly` is empty (monostate) for pure
    // scalars so that scalars need no alphabet.
    struct Value {
        Rat coeff = 1;
        std::optional<NCPoly> poly;
    };

    static Value mul(Value a, const Value& b) {
        a.coeff *= b.coeff;
        if (b.poly) {
            if (a.poly) a.poly = (*a.poly) * (*b.poly);
            else a.poly = b.poly;
        }
        return a;
    }

    Value parse_factor() {
        char c = peek();
        if (c == '(') {
            ++i;
            Value v = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++i;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int();
            Rat r(num);
            if (peek() == '/') {
                ++i;
                Int den = parse_int();
                if (den == 0) fail("zero denominator");
                r = Rat(num, den);
            }
            return Value{r, std::nullopt};
        }
        if (c == 'x' || c == 'y' || c == 'b') {
            Alphabet a = letter_alphabet(c);
            ++i;
            Int idx = parse_int();
            if (idx < 0 || idx > 200) fail("letter index out of range");
            unsigned u = static_cast<unsigned>(idx);
            if (!letter_valid(a, u)) fail("invalid letter for alphabet");
            unify(a);
            return Value{1, NCPoly::letter(a, u)};
        }
        fail("expected factor");
    }

    Value parse_term() {
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++i;
        }
        Value v = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i;
                v = mul(v, parse_factor());
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'b' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                v = mul(v, parse_factor()); // juxtaposition
            } else {
                break;
            }
        }
        if (neg) v.coeff = -v.coeff;
        return v;
    }

    Value parse_expr() {
        Value acc = parse_term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            Value t = parse_term();
            // materialize both sides relative to a common alphabet later;
            // here keep them as polys if any side has one
            acc = add(acc, t);
        }
        return acc;
    }

    NCPoly materialize(const Value& v) {
        if (v.poly) {
            NCPoly p = *v.poly;
            p *= v.coeff;
            return p;
        }
        if (!alph) fail("cannot infer alphabet of scalar expression");
        NCPoly p = NCPoly::one(*alph);
        p *= v.coeff;
        return p;
    }

    Value add(const Value& a, const Value& b) {
        if (!a.poly && !b.poly) return Value{a.coeff + b.coeff, std::nullopt};
        NCPoly p = materialize(a);
        p += materialize(b);
        return Value{1, p};
    }
};

} // namespace

NCPoly parse_poly(const std::string& text, std::optional<Alphabet> hint) {
    Parser p(text, hint);
    if (p.eof()) throw std::invalid_argument("empty expression");
    Parser::Value v = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return p.materialize(v);
}

} // namespace lsq
