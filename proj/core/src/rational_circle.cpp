#include "tamon/rational_circle.hpp"

#include <stdexcept>
#include <vector>

#include "tamon/arith.hpp"

namespace tamon {

QZElem QZElem::make(const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw std::invalid_argument("QZElem: zero denominator");
    mpq_class v(a, b);
    v.canonicalize();
    // reduce into [0,1)
    mpz_class fl = v.get_num() / v.get_den();
    if (v.get_num() < 0 && v.get_num() % v.get_den() != 0) fl -= 1;
    v -= fl;
    return QZElem(v);
}

long QZElem::order() const {
    mpz_class d = v_.get_den();
    if (!d.fits_slong_p()) throw std::overflow_error("QZElem::order: denominator too large");
    return d.get_si();
}

QZElem QZElem::operator-() const { return make(-v_.get_num(), v_.get_den()); }

QZElem QZElem::operator+(const QZElem& o) const {
    mpq_class s = v_ + o.v_;
    return make(s.get_num(), s.get_den());
}

QZElem QZElem::scaled(long n) const {
    return make(v_.get_num() * n, v_.get_den());
}

std::string QZElem::str() const {
    if (v_ == 0) return "0";
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<QZElem> QZElem::parse(const std::string& s) {
    if (s == "0") return QZElem();
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size()) return std::nullopt;
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    for (const std::string& part : {ns, ds}) {
        if (part.empty() || (part.size() > 1 && part[0] == '0')) return std::nullopt;
        for (char c : part)
            if (c < '0' || c > '9') return std::nullopt;
    }
    mpz_class n(ns), d(ds);
    if (n <= 0 || n >= d) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return std::nullopt;
    return make(n, d);
}

long MultFunc::at(const QZElem& x) const {
    auto it = m_.find(x);
    return it == m_.end() ? 0 : it->second;
}

void MultFunc::set(const QZElem& x, long v) {
    if (v < 0) throw std::invalid_argument("MultFunc: negative value");
    if (v == 0)
        m_.erase(x);
    else
        m_[x] = v;
}

void MultFunc::bump(const QZElem& x, long dv) { set(x, at(x) + dv); }

MultFunc reflect(const MultFunc& f) {
    MultFunc g;
    for (const auto& [x, v] : f.entries()) g.set(-x, v);
    return g;
}

MultFunc add(const MultFunc& f, const MultFunc& g) {
    MultFunc h = f;
    for (const auto& [x, v] : g.entries()) h.bump(x, v);
    return h;
}

MultFunc scale(const MultFunc& f, long k) {
    if (k < 0) throw std::invalid_argument("scale: negative factor");
    MultFunc h;
    if (k == 0) return h;
    for (const auto& [x, v] : f.entries()) h.set(x, v * k);
    return h;
}

long norm(const MultFunc& f) {
    long s = 0;
    for (const auto& [x, v] : f.entries()) s += v;
    return s;
}

std::vector<QZElem> elements_of_order(long d) {
    if (d <= 0) throw std::invalid_argument("elements_of_order: d must be positive");
    std::vector<QZElem> out;
    if (d == 1) {
        out.push_back(QZElem());
        return out;
    }
    for (long k = 1; k < d; ++k)
        if (gcd_long(k, d) == 1) out.push_back(QZElem::make(k, d));
    return out;
}

bool is_complete(const MultFunc& f) {
    std::vector<long> orders;
    for (const auto& [x, v] : f.entries()) {
        long d = x.order();
        bool seen = false;
        for (long o : orders) seen |= (o == d);
        if (!seen) orders.push_back(d);
    }
    for (long d : orders) {
        long common = -1;
        for (const QZElem& x : elements_of_order(d)) {
            long v = f.at(x);
            if (common == -1)
                common = v;
            else if (v != common)
                return false;
        }
    }
    return true;
}

bool is_semicomplete(const MultFunc& f) { return is_complete(add(f, reflect(f))); }

MultFunc pushforward(const MultFunc& f, long n) {
    if (n < 1) throw std::invalid_argument("pushforward: n must be >= 1");
    MultFunc g;
    for (const auto& [y, v] : f.entries()) g.bump(y.scaled(n), v);
    return g;
}

}  // namespace tamon
