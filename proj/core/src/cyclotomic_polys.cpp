#include "tamon/cyclotomic_polys.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tamon/arith.hpp"

namespace tamon {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

void IntPoly::divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& q, IntPoly& r) {
    if (!den.is_monic()) throw std::invalid_argument("divmod_monic: divisor not monic");
    std::vector<mpz_class> rem = num.c_;
    int dd = den.degree();
    std::vector<mpz_class> quot;
    if ((int)rem.size() > dd) quot.assign(rem.size() - dd, mpz_class(0));
    for (int i = (int)rem.size() - 1; i >= dd; --i) {
        mpz_class c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den.c_[j];
    }
    q = IntPoly(std::move(quot));
    r = IntPoly(std::move(rem));
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        mpz_class abs_a = abs(a);
        if (abs_a != 1 || i == 0) os << abs_a.get_str();
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

IntPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::map<long, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (t^d - 1) / prod of Phi_d' over proper divisors d' of d
    std::function<IntPoly(long)> phi = [&](long n) -> IntPoly {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> tn(n + 1, mpz_class(0));
        tn[0] = -1;
        tn[n] = 1;
        IntPoly num((std::vector<mpz_class>(tn)));
        IntPoly den = IntPoly::one();
        for (long dv : divisors(n))
            if (dv != n) den = den * phi(dv);
        IntPoly q, r;
        IntPoly::divmod_monic(num, den, q, r);
        if (!r.is_zero()) throw std::logic_error("cyclotomic: non-exact division");
        cache[n] = q;
        return q;
    };
    return phi(d);
}

IntPoly q_poly(const MultFunc& f) {
    if (!is_complete(f)) throw std::invalid_argument("q_poly: input is not complete");
    std::map<long, long> exponents;  // order d -> common value
    for (const auto& [x, v] : f.entries()) exponents[x.order()] = v;
    IntPoly p = IntPoly::one();
    for (const auto& [d, c] : exponents) {
        IntPoly phi_d = cyclotomic(d);
        for (long i = 0; i < c; ++i) p = p * phi_d;
    }
    return p;
}

IntPoly charpoly_from_exponents(const MultFunc& g) { return q_poly(g); }

CycloFactorResult factor_cyclotomic(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("factor_cyclotomic: input must be monic and nonzero");
    CycloFactorResult res;
    res.residual = p;
    long n = p.degree();
    // phi(d) > sqrt(d)/2 for all d, so phi(d) <= n forces d <= 4n^2 + 4.
    for (long d = 1; d <= 4 * n * n + 4 && res.residual.degree() > 0; ++d) {
        if (euler_phi(d) > res.residual.degree()) continue;
        IntPoly phi_d = cyclotomic(d);
        for (;;) {
            IntPoly q, r;
            IntPoly::divmod_monic(res.residual, phi_d, q, r);
            if (!r.is_zero()) break;
            res.factorization.factors[d] += 1;
            res.residual = q;
            if (res.residual.degree() < phi_d.degree()) break;
        }
    }
    return res;
}

MultFunc mult_func_of(const CycloFactorization& f) {
    MultFunc m;
    for (const auto& [d, c] : f.factors) {
        if (c <= 0) throw std::invalid_argument("mult_func_of: non-positive multiplicity");
        for (const QZElem& x : elements_of_order(d)) m.set(x, c);
    }
    return m;
}

}  // namespace tamon
