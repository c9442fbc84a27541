#include "lsq/derivations.hpp"

namespace lsq {

NCPoly d(const NCPoly& psi, const NCPoly& p) {
    if (psi.alphabet() != Alphabet::X || p.alphabet() != Alphabet::X)
        throw std::invalid_argument("d requires alphabet X");
    NCPoly x1 = NCPoly::letter(Alphabet::X, 1);
    NCPoly img1 = commutator(x1, psi);
    return apply_letter_derivation(p, [&](unsigned idx) {
        return idx == 1 ? img1 : NCPoly::zero(Alphabet::X);
    });
}

NCPoly s(const NCPoly& psi, const NCPoly& p) { return psi * p + d(psi, p); }

NCPoly sY(const NCPoly& psi, const NCPoly& u) { return proj_piY(s(psi, embed_iY(u))); }

NCPoly DfY(const NCPoly& f, const NCPoly& u) { return sY(f, u) - u * proj_piY(f); }

NCPoly FDecomposition::block(size_t i, unsigned j) const {
    if (j == 0) return f[i] + fbar[i];
    NCPoly yj = NCPoly::letter(Alphabet::Y, j);
    return f[i] * yj + yj * fbar[i];
}

FDecomposition f_decomp(const NCPoly& f) {
    if (f.alphabet() != Alphabet::X) throw std::invalid_argument("f_decomp requires alphabet X");
    if (!f.is_homogeneous_weight()) throw std::invalid_argument("f_decomp requires homogeneous input");
    FDecomposition out;
    out.p = f.is_zero() ? 0 : f.weight();
    out.f.assign(out.p + 1, NCPoly(Alphabet::Y));
    for (auto& [w, c] : f.terms()) {
        size_t run = 0;
        while (run < w.size() && w[w.size() - 1 - run] == '\0') ++run;
        Key head = w.substr(0, w.size() - run);
        // head is empty or ends in x1, so its pi_Y image is a single word
        out.f[run] += proj_piY(NCPoly::word(Alphabet::X, head, c));
    }
    out.fbar.reserve(out.f.size());
    for (auto& fi : out.f) {
        NCPoly b = reverse_Y(fi);
        if (out.p % 2) b *= Rat(-1);
        out.fbar.push_back(std::move(b));
    }
    return out;
}

namespace {

// partial^R_w(b_a) (side > 0), partial^L_w(b_a) (side < 0), or their
// difference partial_w(b_a) (side == 0), for a single word w.
NCPoly partial_letter(const Key& w, unsigned a, int side) {
    NCPoly r(Alphabet::B);
    if (a == 0) return r;
    BBlocks b = parse_b_word(w);
    size_t dd = b.d();
    int K = 0;
    for (unsigned k : b.letters) K += k;

    std::vector<int> l(dd, 1), lo(dd, 1), hi(b.letters.begin(), b.letters.end());
    bool more = true;
    while (more) {
        Rat coef(1);
        int L = 0;
        for (size_t i = 0; i < dd; ++i) {
            coef *= Rat(binomial(b.letters[i] - 1, l[i] - 1));
            L += l[i];
        }
        if ((K + L) % 2) coef = -coef;
        Key wl = w;
        if (dd) {
            std::vector<unsigned> lu(l.begin(), l.end());
            wl = word_subst_letters(w, lu);
        }
        Key ba(1, static_cast<char>(a + K - L));
        if (side > 0) r.add_term(ba + wl, coef);
        else if (side < 0) r.add_term(wl + ba, coef);
        else {
            r.add_term(ba + wl, coef);
            r.add_term(wl + ba, -coef);
        }
        more = dd && [&] {
            for (size_t i = 0; i < dd; ++i) {
                if (l[i] < hi[i]) {
                    ++l[i];
                    return true;
                }
                l[i] = lo[i];
            }
            return false;
        }();
    }
    return r;
}

NCPoly partial_side(const NCPoly& w, const NCPoly& p, int side) {
    if (w.alphabet() != Alphabet::B || p.alphabet() != Alphabet::B)
        throw std::invalid_argument("partial requires alphabet B");
    // Precompute the image of each letter occurring in p.
    std::map<unsigned, NCPoly> images;
    auto image = [&](unsigned idx) -> const NCPoly& {
        auto it = images.find(idx);
        if (it == images.end()) {
            NCPoly img(Alphabet::B);
            for (auto& [ww, c] : w.terms()) {
                NCPoly part = partial_letter(ww, idx, side);
                part *= c;
                img += part;
            }
            it = images.emplace(idx, std::move(img)).first;
        }
        return it->second;
    };
    return apply_letter_derivation(p, [&](unsigned idx) { return image(idx); });
}

} // namespace

NCPoly partial(const NCPoly& w, const NCPoly& p) { return partial_side(w, p, 0); }
NCPoly partialR(const NCPoly& w, const NCPoly& p) { return partial_side(w, p, 1); }
NCPoly partialL(const NCPoly& w, const NCPoly& p) { return partial_side(w, p, -1); }

NCPoly sigma(const NCPoly& psi, const NCPoly& p) { return psi * p + partial(psi, p); }

NCPoly sigma0(const NCPoly& psi, const NCPoly& u) {
    require_B0(u);
    return proj_pi0(sigma(psi, u));
}

NCPoly partial0(const NCPoly& w, const NCPoly& u) {
    require_B0(w);
    require_B0(u);
    return proj_pi0(partial(sec_B(w), u));
}

NCPoly partialR0(const NCPoly& w, const NCPoly& u) {
    require_B0(w);
    require_B0(u);
    return proj_pi0(partialR(sec_B(w), u));
}

NCPoly partialL0(const NCPoly& w, const NCPoly& u) {
    require_B0(w);
    require_B0(u);
    return proj_pi0(partialL(sec_B(w), u));
}

} // namespace lsq
