#pragma once

namespace gsp4 {

// Dimensions of elliptic cusp form spaces at full level and at prime level p,
// including the sign-split new subspaces used by the Saito-Kurokawa and
// Yoshida relations.
struct EllipticDims {
    long long k = 0;
    long long p = 0;
    long long full = 0;       // dim S_k(Gamma_0(p))
    long long new_part = 0;   // dim S_k^new(Gamma_0(p))
    long long plus_new = 0;   // sign +1 eigenspace of the new part
    long long minus_new = 0;  // sign -1 eigenspace of the new part
};

// dim S_k(SL(2,Z)); 0 for odd k.
long long dim_cusp_sl2(long long k);

// dim S_k(Gamma_0(p)) for even k >= 2.
long long dim_cusp_gamma0(long long k, long long p);

// dim S_k^new(Gamma_0(p)) = dim S_k(Gamma_0(p)) - 2 dim S_k(SL(2,Z)).
long long dim_new_gamma0(long long k, long long p);

// dim S_k^{sign,new}(Gamma_0(p)) for sign in {-1,+1}, even k >= 2.
long long dim_new_pm(long long k, long long p, int sign);

EllipticDims elliptic_dims(long long k, long long p);

}  // namespace gsp4
