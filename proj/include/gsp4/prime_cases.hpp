#pragma once

namespace gsp4 {

// Residue-class case selectors appearing in the p >= 5 count formulas for the
// generic types. Transcribed verbatim; shared by the closed-form and
// generating-function routes.

// IIa: coefficient of the c4/4 correction
inline long long case8_iia(long long p) {
    long long r = p % 8;
    return (r == 1 || r == 7) ? 0 : 1;  // 1 for p = 3,5 mod 8
}

// IIIa+VIa/b, IVa, Va: coefficient of the c4 correction
inline long long case8_p7(long long p) { return p % 8 == 7 ? 1 : 0; }

// IIa: coefficient of the c5/5 correction
inline long long case5_iia(long long p) {
    if (p == 5) return 1;
    long long r = p % 5;
    return (r == 1 || r == 4) ? 0 : 2;
}

// IIIa+VIa/b
inline long long case5_iiia(long long p) {
    if (p == 5) return 1;
    long long r = p % 5;
    if (r == 1) return 0;
    if (r == 4) return 2;
    return 1;  // p = 2,3 mod 5
}

// IVa
inline long long case5_iva(long long p) {
    if (p == 5) return 1;
    long long r = p % 5;
    if (r == 1) return 0;
    if (r == 4) return 4;
    return 2;  // p = 2,3 mod 5
}

// Va
inline long long case5_va(long long p) {
    long long r = p % 5;
    if (r == 2 || r == 3) return 1;
    if (r == 4) return -2;
    return 0;
}

}  // namespace gsp4
