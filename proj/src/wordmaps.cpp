#include "lsq/wordmaps.hpp"

namespace lsq {

NCPoly apply_letter_derivation(const NCPoly& p,
                               const std::function<NCPoly(unsigned)>& image) {
    NCPoly r(p.alphabet());
    for (auto& [w, c] : p.terms()) {
        for (size_t i = 0; i < w.size(); ++i) {
            NCPoly img = image(static_cast<unsigned char>(w[i]));
            for (auto& [u, cu] : img.terms())
                r.add_term(w.substr(0, i) + u + w.substr(i + 1), c * cu);
        }
    }
    return r;
}

NCPoly embed_iY(const NCPoly& p) {
    if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("embed_iY requires alphabet Y");
    NCPoly r(Alphabet::X);
    for (auto& [w, c] : p.terms()) {
        Key img;
        for (unsigned char n : w) {
            img.append(n - 1, '\0'); // x0^{n-1}
            img.push_back('\1');     // x1
        }
        r.add_term(img, c);
    }
    return r;
}

NCPoly proj_piY(const NCPoly& p) {
    if (p.alphabet() != Alphabet::X) throw std::invalid_argument("proj_piY requires alphabet X");
    NCPoly r(Alphabet::Y);
    for (auto& [w, c] : p.terms()) {
        if (!w.empty() && w.back() == '\0') continue;
        Key img;
        unsigned run = 0;
        for (char ch : w) {
            if (ch == '\0') {
                ++run;
            } else {
                img.push_back(static_cast<char>(run + 1)); // x0^{k-1} x1 -> y_k
                run = 0;
            }
        }
        r.add_term(img, c);
    }
    return r;
}

NCPoly proj_pi0(const NCPoly& p) {
    if (p.alphabet() != Alphabet::B) throw std::invalid_argument("proj_pi0 requires alphabet B");
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms())
        if (w.empty() || w.back() != '\0') r.add_term(w, c);
    return r;
}

bool in_B0(const NCPoly& p) {
    if (p.alphabet() != Alphabet::B) return false;
    for (auto& [w, c] : p.terms())
        if (!w.empty() && w.back() == '\0') return false;
    return true;
}

void require_B0(const NCPoly& p) {
    if (p.alphabet() != Alphabet::B) throw std::invalid_argument("expected alphabet B");
    if (!in_B0(p)) throw std::invalid_argument("word ending in b0 is not allowed here");
}

NCPoly gamma0(const NCPoly& p) {
    Alphabet a = p.alphabet();
    return apply_letter_derivation(p, [a](unsigned idx) {
        switch (a) {
            case Alphabet::X: return idx == 0 ? NCPoly::one(a) : NCPoly::zero(a);
            case Alphabet::Y:
                return idx >= 2 ? NCPoly::word(a, Key(1, static_cast<char>(idx - 1)), Rat(idx - 1))
                                : NCPoly::zero(a);
            case Alphabet::B: return idx == 0 ? NCPoly::one(a) : NCPoly::zero(a);
        }
        return NCPoly::zero(a);
    });
}

NCPoly gamma_n(unsigned n, const NCPoly& p) {
    if (p.alphabet() != Alphabet::Y) throw std::invalid_argument("gamma_n requires alphabet Y");
    if (n < 1) throw std::invalid_argument("gamma_n requires n >= 1");
    return apply_letter_derivation(p, [n](unsigned idx) {
        return idx == n ? NCPoly::one(Alphabet::Y) : NCPoly::zero(Alphabet::Y);
    });
}

NCPoly sec_Y(const NCPoly& p) {
    NCPoly cur = embed_iY(p);
    NCPoly r(Alphabet::X);
    Rat coef(1);
    Key x0s;
    for (int i = 0; !cur.is_zero(); ++i) {
        if (i > 0) {
            coef *= Rat(-1, i);
            x0s.push_back('\0');
        }
        for (auto& [w, c] : cur.terms()) r.add_term(w + x0s, coef * c);
        cur = gamma0(cur);
    }
    return r;
}

BBlocks parse_b_word(const Key& w) {
    BBlocks b;
    int run = 0;
    for (unsigned char ch : w) {
        if (ch == 0) {
            ++run;
        } else {
            b.runs.push_back(run);
            b.letters.push_back(ch);
            run = 0;
        }
    }
    b.tail_run = run;
    return b;
}

Key BBlocks::assemble() const {
    Key w;
    for (size_t i = 0; i < letters.size(); ++i) {
        w.append(runs[i], '\0');
        w.push_back(static_cast<char>(letters[i]));
    }
    w.append(tail_run, '\0');
    return w;
}

Key word_subst_letters(const Key& w, const std::vector<unsigned>& l) {
    BBlocks b = parse_b_word(w);
    if (l.size() != b.d()) throw std::invalid_argument("index length mismatch");
    for (unsigned v : l)
        if (v < 1) throw std::invalid_argument("letter index must be >= 1");
    b.letters = l;
    return b.assemble();
}

Key word_subst_runs(const Key& w, const std::vector<int>& n) {
    BBlocks b = parse_b_word(w);
    if (b.tail_run != 0) throw std::invalid_argument("trailing b0 not allowed");
    if (n.size() != b.d()) throw std::invalid_argument("index length mismatch");
    for (int v : n)
        if (v < 0) throw std::invalid_argument("run length must be >= 0");
    b.runs = n;
    return b.assemble();
}

namespace {

// Iterates over all entrywise vectors lo_i <= v_i <= hi_i.
bool next_box(std::vector<int>& v, const std::vector<int>& lo, const std::vector<int>& hi) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < hi[i]) {
            ++v[i];
            return true;
        }
        v[i] = lo[i];
    }
    return false;
}

// All compositions of total into parts.size() entries with part_i >= lo.
void compositions(int total, size_t parts, int lo, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = lo; v <= total - lo * static_cast<int>(parts - 1); ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, lo, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_compositions(int total, size_t parts, int lo) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions(total, parts, lo, cur, out);
    return out;
}

} // namespace

NCPoly sec_B(const NCPoly& p) {
    require_B0(p);
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms()) {
        BBlocks b = parse_b_word(w);
        size_t d = b.d();
        if (d == 0) { // empty word
            r.add_term(w, c);
            continue;
        }
        int M = 0;
        for (int m : b.runs) M += m;
        std::vector<int> n(d, 0);
        std::vector<int> lo(d, 0);
        do {
            Rat coef = c;
            int N = 0;
            for (size_t i = 0; i < d; ++i) {
                coef *= Rat(binomial(b.runs[i], n[i]));
                N += n[i];
            }
            if ((M + N) % 2) coef = -coef;
            Key img = word_subst_runs(w, n);
            img.append(M - N, '\0'); // b0^{|m|-|n|}
            r.add_term(img, coef);
        } while (next_box(n, lo, b.runs));
    }
    return r;
}

NCPoly tau(const NCPoly& p) {
    require_B0(p);
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms()) {
        BBlocks b = parse_b_word(w);
        Key img;
        for (size_t i = b.d(); i-- > 0;) { // antiautomorphism: reverse the blocks
            img.append(b.letters[i] - 1, '\0');          // b0^{k-1}
            img.push_back(static_cast<char>(b.runs[i] + 1)); // b_{m+1}
        }
        r.add_term(img, c);
    }
    return r;
}

NCPoly S0(const NCPoly& p) { return proj_pi0(antipode(sec_B(p))); }

NCPoly rho(const NCPoly& p) {
    require_B0(p);
    NCPoly r(Alphabet::B);
    for (auto& [w, c] : p.terms()) {
        BBlocks b = parse_b_word(w);
        size_t d = b.d();
        if (d == 0) {
            r.add_term(w, c); // rho(1) = 1, from the S0/tau composition identity
            continue;
        }
        int K = 0, M = 0;
        for (unsigned k : b.letters) K += k;
        for (int m : b.runs) M += m;
        auto ls = all_compositions(K, d, 1);
        auto ns = all_compositions(M, d, 0);
        for (auto& l : ls)
            for (auto& n : ns) {
                Rat coef = c;
                for (size_t s = 0; s + 1 < d; ++s)
                    coef *= Rat(binomial(b.letters[s] - 1, l[s] - 1) * binomial(b.runs[s], n[s]));
                if (coef == 0) continue;
                if ((l[d - 1] + n[d - 1] - 1) % 2) coef = -coef;
                // b0^{n_d} b_{l_d} b0^{n_1} b_{l_1} ... b0^{n_{d-1}} b_{l_{d-1}}
                Key img;
                img.append(n[d - 1], '\0');
                img.push_back(static_cast<char>(l[d - 1]));
                for (size_t s = 0; s + 1 < d; ++s) {
                    img.append(n[s], '\0');
                    img.push_back(static_cast<char>(l[s]));
                }
                r.add_term(img, coef);
            }
    }
    return r;
}

} // namespace lsq
