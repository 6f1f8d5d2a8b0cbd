#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tamon/rational_circle.hpp"

namespace tamon {

/// Element of the cyclotomic field Q(zeta_N) = Q[x] / Phi_N(x), stored as
/// the residue polynomial of degree < phi(N), ascending powers of zeta_N.
class CycloElem {
public:
    /// Zero element of Q(zeta_N).
    explicit CycloElem(long n);
    CycloElem(long n, std::vector<mpq_class> coeffs);

    static CycloElem from_rational(long n, const mpq_class& q);
    /// zeta_N^{x·N}; requires order(x) | N.
    static CycloElem root_of_unity(const QZElem& x, long n);

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem inverse() const;  // throws std::domain_error on zero
    CycloElem operator/(const CycloElem& o) const { return *this * o.inverse(); }
    bool operator==(const CycloElem& o) const;
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

private:
    long n_;
    std::vector<mpq_class> c_;  // length phi(n_)
};

/// Dense matrix over Q(zeta_N); all entries share the conductor.
class CycloMatrix {
public:
    CycloMatrix(long n, int rows, int cols);
    static CycloMatrix identity(long n, int dim);

    long conductor() const { return n_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const CycloElem& at(int i, int j) const { return e_[(size_t)i * cols_ + j]; }
    void set(int i, int j, CycloElem v);

    CycloMatrix operator+(const CycloMatrix& o) const;
    CycloMatrix operator-(const CycloMatrix& o) const;
    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix scaled(const CycloElem& s) const;
    CycloMatrix transpose() const;
    CycloMatrix pow(int k) const;
    bool operator==(const CycloMatrix& o) const;
    bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

    bool is_zero() const;

private:
    long n_;
    int rows_, cols_;
    std::vector<CycloElem> e_;
};

/// Columns of a stacked side by side, then columns of b.
CycloMatrix hstack(const CycloMatrix& a, const CycloMatrix& b);

long mat_rank(const CycloMatrix& m);

/// Reduced row echelon form.
CycloMatrix rref(const CycloMatrix& m);

/// Canonical reduced column-echelon basis of the column span; zero columns
/// dropped. Equal spans give equal matrices.
CycloMatrix column_echelon(const CycloMatrix& m);

/// Basis of the right null space (columns), canonical.
CycloMatrix kernel_basis(const CycloMatrix& m);

std::optional<CycloMatrix> inverse(const CycloMatrix& m);

/// Is every column of v inside the column span of basis?
bool span_contains(const CycloMatrix& basis, const CycloMatrix& v);
bool same_span(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix span_sum(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix span_intersection(const CycloMatrix& a, const CycloMatrix& b);

/// Matrix of M on the j-th exterior power. Basis of Lambda^j V is the
/// sorted j-element index subsets in lexicographic order; the (I, J) entry
/// is det of the submatrix with rows I and columns J.
CycloMatrix wedge_matrix(const CycloMatrix& m, int j);

/// Lexicographically ordered j-subsets of {0, ..., n-1}.
std::vector<std::vector<int>> index_subsets(int n, int j);

/// det of the submatrix of m with the given rows and columns.
CycloElem minor_det(const CycloMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols);

/// Coefficients of det(t·Id - M), ascending, length dim+1
/// (Faddeev-LeVerrier).
std::vector<CycloElem> charpoly(const CycloMatrix& m);

/// eigenvalue exponent -> (block size -> count)
using JordanProfile = std::map<QZElem, std::map<int, long>>;

long profile_dimension(const JordanProfile& p);
long profile_max_block(const JordanProfile& p, const QZElem& x);

/// Jordan block structure from rank sequences r_k = rank((M - lambda)^k):
/// #blocks of size >= k is r_{k-1} - r_k. The candidate exponents must
/// cover the whole spectrum; otherwise throws std::domain_error
/// ("uncovered spectrum").
JordanProfile jordan_profile(const CycloMatrix& m, const std::vector<QZElem>& candidates);

/// M = M_s + M_n with M_s semi-simple (acts as lambda on each generalized
/// eigenspace), M_n nilpotent, commuting. Same spectrum precondition as
/// jordan_profile.
std::pair<CycloMatrix, CycloMatrix> jordan_chevalley(const CycloMatrix& m,
                                                     const std::vector<QZElem>& candidates);

/// Generalized eigenspace ker((M - lambda)^dim), canonical basis.
CycloMatrix generalized_eigenspace(const CycloMatrix& m, const QZElem& exponent);

}  // namespace tamon
