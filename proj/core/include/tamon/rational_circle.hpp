#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace tamon {

/// An element of Q/Z, stored as the reduced fraction in [0,1).
/// Equality and ordering are exact; the ordering is the numeric order of
/// the representative.
class QZElem {
public:
    QZElem() : v_(0) {}

    /// The class of a/b in Q/Z. Throws std::invalid_argument if b == 0.
    static QZElem make(const mpz_class& a, const mpz_class& b);
    static QZElem make(long a, long b) { return make(mpz_class(a), mpz_class(b)); }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Order of the element in the group Q/Z (the reduced denominator).
    /// Throws std::overflow_error if it does not fit in long.
    long order() const;

    bool is_zero() const { return v_ == 0; }

    QZElem operator-() const;
    QZElem operator+(const QZElem& o) const;
    /// n·x in Q/Z.
    QZElem scaled(long n) const;

    bool operator==(const QZElem& o) const { return v_ == o.v_; }
    bool operator!=(const QZElem& o) const { return v_ != o.v_; }
    bool operator<(const QZElem& o) const { return v_ < o.v_; }

    /// "0" or "a/b" in lowest terms.
    std::string str() const;

    /// Strict parse: accepts exactly the canonical forms produced by str().
    /// Non-reduced or out-of-range fractions yield nullopt.
    static std::optional<QZElem> parse(const std::string& s);

private:
    explicit QZElem(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;  // canonical: reduced, 0 <= v_ < 1
};

/// Finitely supported multiplicity function Q/Z -> N, in canonical sparse
/// form: stored values are strictly positive.
class MultFunc {
public:
    MultFunc() = default;

    long at(const QZElem& x) const;
    /// Sets f(x) = v; v == 0 erases. Negative v throws.
    void set(const QZElem& x, long v);
    void bump(const QZElem& x, long dv);

    const std::map<QZElem, long>& entries() const { return m_; }
    bool empty() const { return m_.empty(); }

    bool operator==(const MultFunc& o) const { return m_ == o.m_; }
    bool operator!=(const MultFunc& o) const { return m_ != o.m_; }

private:
    std::map<QZElem, long> m_;
};

/// f^refl(x) = f(-x).
MultFunc reflect(const MultFunc& f);

/// Pointwise sum.
MultFunc add(const MultFunc& f, const MultFunc& g);

/// Pointwise k·f, k >= 0.
MultFunc scale(const MultFunc& f, long k);

/// Sum of all values.
long norm(const MultFunc& f);

/// True iff f(x) depends only on the order of x: for every order d present
/// in the support, all phi(d) elements of order d carry the same value.
bool is_complete(const MultFunc& f);

/// True iff f + f^refl is complete.
bool is_semicomplete(const MultFunc& f);

/// g(x) = sum over y with n·y = x of f(y). Preserves the norm.
MultFunc pushforward(const MultFunc& f, long n);

/// All elements of Q/Z of exact order d, in increasing order.
std::vector<QZElem> elements_of_order(long d);

}  // namespace tamon
