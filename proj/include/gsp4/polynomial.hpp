#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gsp4/bigint.hpp"
#include "gsp4/rational.hpp"

namespace gsp4 {

// Dense univariate polynomial; index = exponent, trailing zeros trimmed.
// The zero polynomial has an empty coefficient list.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Coeff value) { return Polynomial({std::move(value)}); }
    // c * t^e
    static Polynomial monomial(Coeff value, std::size_t exponent) {
        std::vector<Coeff> coeffs(exponent + 1, Coeff(0));
        coeffs[exponent] = std::move(value);
        return Polynomial(std::move(coeffs));
    }
    // 1 - t^e
    static Polynomial one_minus_power(std::size_t exponent) {
        Polynomial result = monomial(Coeff(-1), exponent);
        result.coeffs_[0] = Coeff(1);
        return result;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    Coeff coefficient(std::size_t exponent) const {
        return exponent < coeffs_.size() ? coeffs_[exponent] : Coeff(0);
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
        std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial scaled(const Coeff& factor) const {
        if (factor == Coeff(0)) return Polynomial();
        std::vector<Coeff> out = coeffs_;
        for (auto& c : out) c *= factor;
        return Polynomial(std::move(out));
    }

    Polynomial shifted(std::size_t exponent) const {  // multiply by t^exponent
        if (is_zero() || exponent == 0) {
            Polynomial copy = *this;
            return copy;
        }
        std::vector<Coeff> out(coeffs_.size() + exponent, Coeff(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + exponent] = coeffs_[i];
        return Polynomial(std::move(out));
    }

    template <typename Arg>
    Arg evaluate(const Arg& x) const {
        Arg result(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            result = result * x + Arg(coeffs_[i]);
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == Coeff(0)) continue;
            if (!out.empty()) out += " + ";
            out += std::to_string(i) + ":" + coeff_to_string(coeffs_[i]);
        }
        return out;
    }

private:
    std::vector<Coeff> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
    }

    static std::string coeff_to_string(const Coeff& c) { return c.to_string(); }
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<Rational>;

// Converts a rational-coefficient polynomial with integral coefficients to an
// integer polynomial; throws std::domain_error naming `what` otherwise.
IntPolynomial to_int_polynomial(const RationalPolynomial& poly, const std::string& what);

}  // namespace gsp4
