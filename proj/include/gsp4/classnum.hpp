#pragma once

namespace gsp4 {

// Class-number data for the imaginary quadratic field Q(sqrt(-p)), p prime >= 5.
struct ImaginaryQuadraticData {
    long long p = 0;
    long long discriminant = 0;  // field discriminant: -p if p = 3 mod 4, else -4p
    long long h = 0;             // class number
    int b = 0;                   // 1 if p = 1 mod 4, 2 if p = 7 mod 8, 4 if p = 3 mod 8
};

// Class number of Q(sqrt(-p)) by exhaustive enumeration of reduced primitive
// binary quadratic forms (a,b,c) of the field discriminant. Memoized per p.
long long class_number(long long p);

int b_param(long long p);

ImaginaryQuadraticData quadratic_data(long long p);

}  // namespace gsp4
