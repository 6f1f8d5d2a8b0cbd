#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "tamon/rational_circle.hpp"

namespace tamon {

/// Polynomial over Z, coefficients ascending, canonical form (no stored
/// leading zeros; the zero polynomial has an empty coefficient vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly one() { return IntPoly({mpz_class(1)}); }
    static IntPoly constant(const mpz_class& c) { return IntPoly({c}); }

    /// -1 for the zero polynomial.
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    mpz_class coeff(int i) const {
        return (i < 0 || i >= (int)c_.size()) ? mpz_class(0) : c_[i];
    }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    /// Division by a monic divisor; quotient and remainder over Z.
    static void divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& q, IntPoly& r);

    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

/// The cyclotomic polynomial Phi_d, monic of degree phi(d). Memoized.
IntPoly cyclotomic(long d);

/// Q_f(t) = prod over orders d in the support of Phi_d^{c_d} where c_d is
/// the common value of f on order-d elements. Requires is_complete(f);
/// throws std::invalid_argument otherwise. Monic of degree ||f||.
IntPoly q_poly(const MultFunc& f);

/// Alias of q_poly for the characteristic-polynomial use.
IntPoly charpoly_from_exponents(const MultFunc& g);

struct CycloFactorization {
    std::map<long, long> factors;  // d -> multiplicity of Phi_d
};

struct CycloFactorResult {
    CycloFactorization factorization;
    IntPoly residual;  // 1 when the input factors completely
    bool ok() const { return residual.degree() == 0; }
};

/// Trial division by Phi_d in increasing d. Input must be monic and
/// nonzero (throws otherwise). If the input is not a product of cyclotomic
/// polynomials, ok() is false and residual carries the non-cyclotomic part.
CycloFactorResult factor_cyclotomic(const IntPoly& p);

/// The complete multiplicity function induced by a cyclotomic
/// factorization (inverse of q_poly).
MultFunc mult_func_of(const CycloFactorization& f);

}  // namespace tamon
