#include "tamon/exact_linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "tamon/arith.hpp"
#include "tamon/cyclotomic_polys.hpp"

namespace tamon {

namespace {

struct FieldCtx {
    long phi = 0;
    std::vector<mpq_class> modulus;  // Phi_N, ascending, monic, length phi+1
};

const FieldCtx& field_ctx(long n) {
    static std::map<long, FieldCtx> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    FieldCtx ctx;
    IntPoly phi_n = cyclotomic(n);
    ctx.phi = phi_n.degree();
    ctx.modulus.reserve(ctx.phi + 1);
    for (int i = 0; i <= phi_n.degree(); ++i) ctx.modulus.emplace_back(phi_n.coeff(i));
    return cache.emplace(n, std::move(ctx)).first->second;
}

// Reduce a polynomial (ascending mpq coefficients) modulo Phi_N in place,
// then resize to phi(N).
void reduce_mod(std::vector<mpq_class>& p, long n) {
    const FieldCtx& ctx = field_ctx(n);
    long phi = ctx.phi;
    for (long i = (long)p.size() - 1; i >= phi; --i) {
        if (p[i] == 0) continue;
        mpq_class c = p[i];
        p[i] = 0;
        for (long j = 0; j < phi; ++j) p[i - phi + j] -= c * ctx.modulus[j];
    }
    p.resize(phi, mpq_class(0));
}

int qdeg(const std::vector<mpq_class>& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Remainder of a modulo b over Q[x]; also accumulates the Bezout tracking
// used by the extended Euclid below.
std::vector<mpq_class> qmul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    int da = qdeg(a), db = qdeg(b);
    if (da < 0 || db < 0) return {};
    std::vector<mpq_class> r(da + db + 1, mpq_class(0));
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<mpq_class> qsub(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

void qdivmod(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den,
             std::vector<mpq_class>& q, std::vector<mpq_class>& r) {
    int dd = qdeg(den);
    if (dd < 0) throw std::domain_error("polynomial division by zero");
    r = num;
    q.assign(std::max<int>(qdeg(num) - dd + 1, 0), mpq_class(0));
    for (int i = qdeg(r); i >= dd; --i) {
        if (r[i] == 0) continue;
        mpq_class c = r[i] / den[dd];
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
    }
}

}  // namespace

CycloElem::CycloElem(long n) : n_(n), c_(field_ctx(n).phi, mpq_class(0)) {}

CycloElem::CycloElem(long n, std::vector<mpq_class> coeffs) : n_(n), c_(std::move(coeffs)) {
    if ((long)c_.size() != field_ctx(n).phi)
        throw std::invalid_argument("CycloElem: residue length must be phi(N)");
}

CycloElem CycloElem::from_rational(long n, const mpq_class& q) {
    CycloElem e(n);
    e.c_[0] = q;
    return e;
}

CycloElem CycloElem::root_of_unity(const QZElem& x, long n) {
    long d = x.order();
    if (n % d != 0)
        throw std::invalid_argument("root_of_unity: element order does not divide conductor");
    mpz_class knum = x.numerator() * (n / d);
    long k = knum.get_si() % n;
    std::vector<mpq_class> p(k + 1, mpq_class(0));
    p[k] = 1;
    reduce_mod(p, n);
    return CycloElem(n, std::move(p));
}

bool CycloElem::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElem: conductor mismatch");
    CycloElem r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElem: conductor mismatch");
    CycloElem r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycloElem CycloElem::operator-() const {
    CycloElem r(n_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycloElem: conductor mismatch");
    if (is_zero() || o.is_zero()) return CycloElem(n_);
    std::vector<mpq_class> p = qmul(c_, o.c_);
    reduce_mod(p, n_);
    return CycloElem(n_, std::move(p));
}

CycloElem CycloElem::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElem: division by zero");
    // extended Euclid: s·a + t·Phi_N = 1 in Q[x]
    const FieldCtx& ctx = field_ctx(n_);
    std::vector<mpq_class> r0 = ctx.modulus, r1 = c_;
    std::vector<mpq_class> s0 = {}, s1 = {mpq_class(1)};
    while (qdeg(r1) > 0) {
        std::vector<mpq_class> q, r;
        qdivmod(r0, r1, q, r);
        std::vector<mpq_class> s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (qdeg(r1) != 0) throw std::logic_error("CycloElem: modulus not coprime to element");
    mpq_class lead = r1[qdeg(r1)];
    std::vector<mpq_class> inv = s1;
    for (auto& q : inv) q /= lead;
    reduce_mod(inv, n_);
    return CycloElem(n_, std::move(inv));
}

bool CycloElem::operator==(const CycloElem& o) const { return n_ == o.n_ && c_ == o.c_; }

CycloMatrix::CycloMatrix(long n, int rows, int cols)
    : n_(n), rows_(rows), cols_(cols), e_((size_t)rows * cols, CycloElem(n)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("CycloMatrix: negative size");
}

CycloMatrix CycloMatrix::identity(long n, int dim) {
    CycloMatrix m(n, dim, dim);
    CycloElem one = CycloElem::from_rational(n, 1);
    for (int i = 0; i < dim; ++i) m.set(i, i, one);
    return m;
}

void CycloMatrix::set(int i, int j, CycloElem v) {
    if (v.conductor() != n_) throw std::invalid_argument("CycloMatrix: conductor mismatch");
    e_[(size_t)i * cols_ + j] = std::move(v);
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    if (n_ != o.n_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("CycloMatrix: shape/conductor mismatch");
    CycloMatrix r(n_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    if (n_ != o.n_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("CycloMatrix: shape/conductor mismatch");
    CycloMatrix r(n_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (n_ != o.n_ || cols_ != o.rows_)
        throw std::invalid_argument("CycloMatrix: shape/conductor mismatch");
    CycloMatrix r(n_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycloElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CycloElem& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.e_[(size_t)i * o.cols_ + j] = r.at(i, j) + a * b;
            }
        }
    return r;
}

CycloMatrix CycloMatrix::scaled(const CycloElem& s) const {
    CycloMatrix r(n_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix r(n_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

CycloMatrix CycloMatrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow: matrix not square");
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    CycloMatrix r = identity(n_, rows_);
    CycloMatrix base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
    return n_ == o.n_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool CycloMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

CycloMatrix hstack(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.conductor() != b.conductor() || a.rows() != b.rows())
        throw std::invalid_argument("hstack: shape/conductor mismatch");
    CycloMatrix r(a.conductor(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

namespace {

// In-place forward elimination with first-nonzero pivoting; returns pivot
// column per pivot row. rows are stored in `grid`.
struct Eliminator {
    long n;
    int rows, cols;
    std::vector<std::vector<CycloElem>> grid;
    std::vector<int> pivot_cols;

    explicit Eliminator(const CycloMatrix& m)
        : n(m.conductor()), rows(m.rows()), cols(m.cols()) {
        grid.reserve(rows);
        for (int i = 0; i < rows; ++i) {
            std::vector<CycloElem> row;
            row.reserve(cols);
            for (int j = 0; j < cols; ++j) row.push_back(m.at(i, j));
            grid.push_back(std::move(row));
        }
    }

    void to_rref() {
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (!grid[i][c].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(grid[p], grid[r]);
            CycloElem inv = grid[r][c].inverse();
            for (int j = c; j < cols; ++j) grid[r][j] = grid[r][j] * inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || grid[i][c].is_zero()) continue;
                CycloElem f = grid[i][c];
                for (int j = c; j < cols; ++j) grid[i][j] = grid[i][j] - f * grid[r][j];
            }
            pivot_cols.push_back(c);
            ++r;
        }
    }

    CycloMatrix to_matrix() const {
        CycloMatrix m(n, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.set(i, j, grid[i][j]);
        return m;
    }
};

}  // namespace

CycloMatrix rref(const CycloMatrix& m) {
    Eliminator e(m);
    e.to_rref();
    return e.to_matrix();
}

long mat_rank(const CycloMatrix& m) {
    Eliminator e(m);
    e.to_rref();
    return (long)e.pivot_cols.size();
}

CycloMatrix column_echelon(const CycloMatrix& m) {
    Eliminator e(m.transpose());
    e.to_rref();
    int r = (int)e.pivot_cols.size();
    CycloMatrix out(m.conductor(), m.rows(), r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.rows(); ++j) out.set(j, i, e.grid[i][j]);
    return out;
}

CycloMatrix kernel_basis(const CycloMatrix& m) {
    Eliminator e(m);
    e.to_rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycloMatrix k(m.conductor(), m.cols(), (int)free_cols.size());
    CycloElem one = CycloElem::from_rational(m.conductor(), 1);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.set(f, (int)fi, one);
        for (size_t pi = 0; pi < e.pivot_cols.size(); ++pi)
            k.set(e.pivot_cols[pi], (int)fi, -e.grid[pi][f]);
    }
    return k;
}

std::optional<CycloMatrix> inverse(const CycloMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    int dim = m.rows();
    Eliminator e(hstack(m, CycloMatrix::identity(m.conductor(), dim)));
    e.to_rref();
    for (int i = 0; i < dim; ++i)
        if (i >= (int)e.pivot_cols.size() || e.pivot_cols[i] != i) return std::nullopt;
    CycloMatrix inv(m.conductor(), dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) inv.set(i, j, e.grid[i][dim + j]);
    return inv;
}

bool span_contains(const CycloMatrix& basis, const CycloMatrix& v) {
    long rb = mat_rank(basis);
    return mat_rank(hstack(basis, v)) == rb;
}

bool same_span(const CycloMatrix& a, const CycloMatrix& b) {
    return column_echelon(a) == column_echelon(b);
}

CycloMatrix span_sum(const CycloMatrix& a, const CycloMatrix& b) {
    return column_echelon(hstack(a, b));
}

CycloMatrix span_intersection(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return CycloMatrix(a.conductor(), a.rows(), 0);
    CycloMatrix stacked = hstack(a, b.scaled(-CycloElem::from_rational(b.conductor(), 1)));
    CycloMatrix k = kernel_basis(stacked);
    CycloMatrix coeffs(a.conductor(), a.cols(), k.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) coeffs.set(i, j, k.at(i, j));
    return column_echelon(a * coeffs);
}

std::vector<std::vector<int>> index_subsets(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(j);
    for (int i = 0; i < j; ++i) cur[i] = i;
    if (j > n) return out;
    for (;;) {
        out.push_back(cur);
        int i = j - 1;
        while (i >= 0 && cur[i] == n - j + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int l = i + 1; l < j; ++l) cur[l] = cur[l - 1] + 1;
    }
    return out;
}

CycloElem minor_det(const CycloMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    int j = (int)rows.size();
    if (j != (int)cols.size()) throw std::invalid_argument("minor_det: non-square minor");
    std::vector<std::vector<CycloElem>> g;
    g.reserve(j);
    for (int r : rows) {
        std::vector<CycloElem> row;
        row.reserve(j);
        for (int c : cols) row.push_back(m.at(r, c));
        g.push_back(std::move(row));
    }
    CycloElem det = CycloElem::from_rational(m.conductor(), 1);
    for (int c = 0; c < j; ++c) {
        int p = -1;
        for (int i = c; i < j; ++i)
            if (!g[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return CycloElem(m.conductor());
        if (p != c) {
            std::swap(g[p], g[c]);
            det = -det;
        }
        det = det * g[c][c];
        CycloElem inv = g[c][c].inverse();
        for (int i = c + 1; i < j; ++i) {
            if (g[i][c].is_zero()) continue;
            CycloElem f = g[i][c] * inv;
            for (int l = c; l < j; ++l) g[i][l] = g[i][l] - f * g[c][l];
        }
    }
    return det;
}

CycloMatrix wedge_matrix(const CycloMatrix& m, int j) {
    if (m.rows() != m.cols()) throw std::invalid_argument("wedge_matrix: matrix not square");
    if (j < 1 || j > m.rows()) throw std::invalid_argument("wedge_matrix: j out of range");
    auto subsets = index_subsets(m.rows(), j);
    int dim = (int)subsets.size();
    CycloMatrix w(m.conductor(), dim, dim);
    for (int col = 0; col < dim; ++col)
        for (int row = 0; row < dim; ++row)
            w.set(row, col, minor_det(m, subsets[row], subsets[col]));
    return w;
}

std::vector<CycloElem> charpoly(const CycloMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
    int dim = m.rows();
    long n = m.conductor();
    std::vector<CycloElem> c(dim + 1, CycloElem(n));
    c[dim] = CycloElem::from_rational(n, 1);
    // Faddeev-LeVerrier: A_1 = M, c_{n-1} = -tr A_1,
    // A_k = M (A_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(A_k)/k.
    CycloMatrix ak = m;
    for (int k = 1; k <= dim; ++k) {
        if (k > 1) {
            CycloMatrix shifted = ak;
            for (int i = 0; i < dim; ++i) shifted.set(i, i, shifted.at(i, i) + c[dim - k + 1]);
            ak = m * shifted;
        }
        CycloElem tr(n);
        for (int i = 0; i < dim; ++i) tr = tr + ak.at(i, i);
        c[dim - k] = -(tr * CycloElem::from_rational(n, mpq_class(1, k)));
    }
    return c;
}

long profile_dimension(const JordanProfile& p) {
    long d = 0;
    for (const auto& [x, sizes] : p)
        for (const auto& [size, count] : sizes) d += (long)size * count;
    return d;
}

long profile_max_block(const JordanProfile& p, const QZElem& x) {
    auto it = p.find(x);
    if (it == p.end()) return 0;
    long mx = 0;
    for (const auto& [size, count] : it->second) mx = std::max<long>(mx, size);
    return mx;
}

namespace {

// rank((M - lambda)^k) for k = 0, 1, ... until stable; returns the list
// including the stable repeat.
std::vector<long> rank_sequence(const CycloMatrix& m, const CycloElem& lambda) {
    int dim = m.rows();
    CycloMatrix shifted = m;
    for (int i = 0; i < dim; ++i) shifted.set(i, i, shifted.at(i, i) - lambda);
    std::vector<long> ranks = {dim};
    CycloMatrix p = shifted;
    for (int k = 1; k <= dim; ++k) {
        long r = mat_rank(p);
        ranks.push_back(r);
        if (r == ranks[k - 1]) break;
        p = p * shifted;
    }
    return ranks;
}

}  // namespace

JordanProfile jordan_profile(const CycloMatrix& m, const std::vector<QZElem>& candidates) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_profile: matrix not square");
    int dim = m.rows();
    JordanProfile profile;
    long covered = 0;
    for (const QZElem& x : candidates) {
        CycloElem lambda = CycloElem::root_of_unity(x, m.conductor());
        std::vector<long> r = rank_sequence(m, lambda);
        covered += dim - r.back();
        auto rank_at = [&](int k) { return k < (int)r.size() ? r[k] : r.back(); };
        std::map<int, long> sizes;
        for (int k = 1; k < (int)r.size(); ++k) {
            long exactly = (rank_at(k - 1) - rank_at(k)) - (rank_at(k) - rank_at(k + 1));
            if (exactly > 0) sizes[k] = exactly;
        }
        if (!sizes.empty()) profile[x] = std::move(sizes);
    }
    if (covered != dim) throw std::domain_error("jordan_profile: uncovered spectrum");
    return profile;
}

CycloMatrix generalized_eigenspace(const CycloMatrix& m, const QZElem& exponent) {
    int dim = m.rows();
    CycloElem lambda = CycloElem::root_of_unity(exponent, m.conductor());
    CycloMatrix shifted = m;
    for (int i = 0; i < dim; ++i) shifted.set(i, i, shifted.at(i, i) - lambda);
    // ker((M - lambda)^k) stabilizes with the rank; iterating instead of
    // taking the dim-th power keeps the entries small.
    CycloMatrix p = shifted;
    long r = mat_rank(p);
    for (int k = 1; k < dim && r > 0; ++k) {
        CycloMatrix next = p * shifted;
        long rn = mat_rank(next);
        if (rn == r) break;
        p = std::move(next);
        r = rn;
    }
    return column_echelon(kernel_basis(p));
}

std::pair<CycloMatrix, CycloMatrix> jordan_chevalley(const CycloMatrix& m,
                                                     const std::vector<QZElem>& candidates) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_chevalley: matrix not square");
    int dim = m.rows();
    long n = m.conductor();
    CycloMatrix basis(n, dim, 0);
    std::vector<CycloElem> diag;
    for (const QZElem& x : candidates) {
        CycloMatrix e = generalized_eigenspace(m, x);
        if (e.cols() == 0) continue;
        CycloElem lambda = CycloElem::root_of_unity(x, n);
        for (int j = 0; j < e.cols(); ++j) diag.push_back(lambda);
        basis = hstack(basis, e);
    }
    if (basis.cols() != dim) throw std::domain_error("jordan_chevalley: uncovered spectrum");
    auto binv = inverse(basis);
    if (!binv) throw std::logic_error("jordan_chevalley: eigenspace basis not invertible");
    CycloMatrix d(n, dim, dim);
    for (int i = 0; i < dim; ++i) d.set(i, i, diag[i]);
    CycloMatrix ms = basis * d * *binv;
    CycloMatrix mn = m - ms;
    return {std::move(ms), std::move(mn)};
}

}  // namespace tamon
