#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zxcf/bitvec.hpp"

namespace zxcf {

/// Signed n-qubit Pauli operator in symplectic representation:
///
///     P = i^iota * L_0 ⊗ L_1 ⊗ ... ⊗ L_{n-1}
///
/// where the letter on qubit q is picked by the bit pair (x_q, z_q):
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Letters are Hermitian, so P is
/// Hermitian exactly when iota is even; tableau rows keep iota in {0,2}.
/// The exponent is tracked mod 4 so intermediate products such as
/// X*Z = -iY stay representable.
struct PauliString {
    int n = 0;
    BitVec x;
    BitVec z;
    uint8_t iota = 0;  // exponent of i, mod 4

    PauliString() = default;
    explicit PauliString(int nq) : n(nq), x(nq), z(nq) {}

    static PauliString identity(int nq) { return PauliString(nq); }

    /// Single-letter string: letter in {'I','X','Y','Z'} at qubit q.
    static PauliString single(int nq, int q, char letter) {
        PauliString p(nq);
        p.set_letter(q, letter);
        return p;
    }

    char letter(int q) const {
        bool xb = x.get(q), zb = z.get(q);
        return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }

    void set_letter(int q, char c) {
        switch (c) {
            case 'I': x.set(q, false); z.set(q, false); break;
            case 'X': x.set(q, true);  z.set(q, false); break;
            case 'Y': x.set(q, true);  z.set(q, true);  break;
            case 'Z': x.set(q, false); z.set(q, true);  break;
            default: throw std::invalid_argument(std::string("illegal Pauli letter '") + c + "'");
        }
    }

    bool is_identity_bits() const { return x.none() && z.none(); }
    bool is_hermitian() const { return (iota & 1) == 0; }

    /// +1 or -1; only meaningful for Hermitian strings.
    int sign() const {
        if (!is_hermitian()) {
            throw std::logic_error("sign() on non-Hermitian Pauli string");
        }
        return iota == 0 ? 1 : -1;
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString& a, const PauliString& b) {
        if (auto c = a.n <=> b.n; c != 0) {
            return c;
        }
        if (auto c = a.x <=> b.x; c != 0) {
            return c;
        }
        if (auto c = a.z <=> b.z; c != 0) {
            return c;
        }
        return a.iota <=> b.iota;
    }
};

/// Operator product a*b with exact i^iota bookkeeping. The per-qubit phase
/// is +i for cyclic letter pairs (X,Y),(Y,Z),(Z,X) and -i for the reversed
/// ones; both counts are accumulated word-parallel.
inline PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) {
        throw std::invalid_argument("multiply: length mismatch");
    }
    PauliString r(a.n);
    int plus = 0, minus = 0;
    const auto& ax = a.x.words();
    const auto& az = a.z.words();
    const auto& bx = b.x.words();
    const auto& bz = b.z.words();
    for (size_t i = 0; i < ax.size(); ++i) {
        uint64_t p = (ax[i] & ~az[i] & bx[i] & bz[i])    // X*Y
                   | (ax[i] & az[i] & ~bx[i] & bz[i])    // Y*Z
                   | (~ax[i] & az[i] & bx[i] & ~bz[i]);  // Z*X
        uint64_t m = (ax[i] & az[i] & bx[i] & ~bz[i])    // Y*X
                   | (~ax[i] & az[i] & bx[i] & bz[i])    // Z*Y
                   | (ax[i] & ~az[i] & ~bx[i] & bz[i]);  // X*Z
        plus += __builtin_popcountll(p);
        minus += __builtin_popcountll(m);
    }
    r.x = a.x;
    r.x ^= b.x;
    r.z = a.z;
    r.z ^= b.z;
    r.iota = static_cast<uint8_t>((a.iota + b.iota + plus + 3 * minus) & 3);
    return r;
}

/// True iff the symplectic form sum(a.x*b.z + a.z*b.x) vanishes mod 2.
inline bool commutes(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) {
        throw std::invalid_argument("commutes: length mismatch");
    }
    return !(BitVec::parity_and(a.x, b.z) ^ BitVec::parity_and(a.z, b.x));
}

/// Parses an optional sign prefix ("+" or "-") followed by letters IXYZ.
inline PauliString parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_pauli: empty string");
    }
    uint8_t iota = 0;
    if (text.front() == '+' || text.front() == '-') {
        iota = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("parse_pauli: sign with no letters");
    }
    PauliString p(static_cast<int>(text.size()));
    for (size_t q = 0; q < text.size(); ++q) {
        p.set_letter(static_cast<int>(q), text[q]);
    }
    p.iota = iota;
    return p;
}

/// Inverse of parse_pauli on Hermitian strings ("+XZ", "-Y", ...). Strings
/// with odd iota get an "i"/"-i" prefix; those are display-only.
inline std::string format_pauli(const PauliString& p) {
    std::string s;
    switch (p.iota & 3) {
        case 0: s = "+"; break;
        case 1: s = "i"; break;
        case 2: s = "-"; break;
        case 3: s = "-i"; break;
    }
    for (int q = 0; q < p.n; ++q) {
        s += p.letter(q);
    }
    return s;
}

}  // namespace zxcf
