#include "tamon/weight_filt.hpp"

#include <algorithm>
#include <stdexcept>

#include "tamon/arith.hpp"

namespace tamon {

namespace {

// Incremental linear-independence accumulator over Q(zeta_N).
// Stored columns are kept reduced with unit pivots.
class SpanAccum {
public:
    SpanAccum(long n, int dim) : n_(n), dim_(dim) {}

    int rank() const { return (int)cols_.size(); }

    // Returns true (and absorbs the column) if v is independent of the
    // current span.
    bool insert(std::vector<CycloElem> v) {
        for (size_t k = 0; k < cols_.size(); ++k) {
            const CycloElem& c = v[pivots_[k]];
            if (c.is_zero()) continue;
            CycloElem f = c;
            for (int i = 0; i < dim_; ++i) v[i] = v[i] - f * cols_[k][i];
        }
        int p = -1;
        for (int i = 0; i < dim_; ++i)
            if (!v[i].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return false;
        CycloElem inv = v[p].inverse();
        for (int i = 0; i < dim_; ++i) v[i] = v[i] * inv;
        cols_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool insert_matrix_cols(const CycloMatrix& m) {
        bool any = false;
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<CycloElem> v;
            v.reserve(dim_);
            for (int i = 0; i < dim_; ++i) v.push_back(m.at(i, j));
            any |= insert(std::move(v));
        }
        return any;
    }

private:
    long n_;
    int dim_;
    std::vector<std::vector<CycloElem>> cols_;
    std::vector<int> pivots_;
};

std::vector<CycloElem> column_of(const CycloMatrix& m, int j) {
    std::vector<CycloElem> v;
    v.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
    return v;
}

CycloMatrix matrix_from_columns(long n, int dim, const std::vector<std::vector<CycloElem>>& cols) {
    CycloMatrix m(n, dim, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < dim; ++i) m.set(i, (int)j, cols[j][i]);
    return m;
}

std::vector<CycloElem> apply_to(const CycloMatrix& m, const std::vector<CycloElem>& v) {
    std::vector<CycloElem> out(m.rows(), CycloElem(m.conductor()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] = out[i] + m.at(i, j) * v[j];
        }
    return out;
}

// A basis compatible with the filtration: vector a enters at level[a],
// and W_i = span of the vectors with level <= i.
struct FlagBasis {
    std::vector<std::vector<CycloElem>> vectors;
    std::vector<int> levels;  // non-decreasing
};

FlagBasis flag_basis(const WeightFiltration& w) {
    FlagBasis fb;
    SpanAccum acc(w.conductor(), w.ambient_dim());
    for (int i = w.lo(); i <= w.hi(); ++i) {
        CycloMatrix b = w.basis_at(i);
        for (int j = 0; j < b.cols(); ++j) {
            std::vector<CycloElem> v = column_of(b, j);
            if (acc.insert(v)) {
                fb.vectors.push_back(std::move(v));
                fb.levels.push_back(i);
            }
        }
    }
    return fb;
}

}  // namespace

int WeightFiltration::lo() const {
    for (const auto& [i, b] : steps_)
        if (b.cols() > 0) return i;
    throw std::logic_error("WeightFiltration: no nonzero step");
}

int WeightFiltration::hi() const {
    for (const auto& [i, b] : steps_)
        if (b.cols() == ambient_) return i;
    throw std::logic_error("WeightFiltration: filtration does not reach the full space");
}

long WeightFiltration::dim_at(int i) const {
    auto it = steps_.upper_bound(i);
    if (it == steps_.begin()) return 0;
    return std::prev(it)->second.cols();
}

CycloMatrix WeightFiltration::basis_at(int i) const {
    auto it = steps_.upper_bound(i);
    if (it == steps_.begin()) return CycloMatrix(conductor_, ambient_, 0);
    return std::prev(it)->second;
}

std::map<int, long> WeightFiltration::graded_dims() const {
    std::map<int, long> g;
    long prev = 0;
    for (const auto& [i, b] : steps_) {
        long d = b.cols();
        if (d > prev) g[i] = d - prev;
        prev = d;
    }
    return g;
}

void WeightFiltration::set_step(int i, CycloMatrix basis) {
    if (basis.rows() != ambient_ || basis.conductor() != conductor_)
        throw std::invalid_argument("WeightFiltration: step shape/conductor mismatch");
    steps_.insert_or_assign(i, std::move(basis));
}

bool WeightFiltration::operator==(const WeightFiltration& o) const {
    if (center_ != o.center_ || ambient_ != o.ambient_ || conductor_ != o.conductor_)
        return false;
    if (ambient_ == 0) return true;
    int a = std::min(lo(), o.lo());
    int b = std::max(hi(), o.hi());
    for (int i = a; i <= b; ++i)
        if (basis_at(i) != o.basis_at(i)) return false;
    return true;
}

namespace {

bool check_weight_conditions(const CycloMatrix& nilpotent, const WeightFiltration& w) {
    int lo = w.lo(), hi = w.hi();
    // (1) N W_i in W_{i-2}
    for (int i = lo; i <= hi; ++i) {
        CycloMatrix img = nilpotent * w.basis_at(i);
        if (img.cols() > 0 && !img.is_zero() && !span_contains(w.basis_at(i - 2), img))
            return false;
    }
    // (2) N^a : Gr_{c+a} -> Gr_{c-a} is an isomorphism
    int c = w.center();
    for (int a = 1; c + a <= hi || c - a >= lo; ++a) {
        long up = w.dim_at(c + a) - w.dim_at(c + a - 1);
        long down = w.dim_at(c - a) - w.dim_at(c - a - 1);
        if (up != down) return false;
        if (up == 0) continue;
        CycloMatrix img = nilpotent.pow(a) * w.basis_at(c + a);
        if (!span_contains(w.basis_at(c - a), img)) return false;
        CycloMatrix reached = span_sum(img, w.basis_at(c - a - 1));
        if (reached.cols() != w.dim_at(c - a)) return false;
    }
    return true;
}

}  // namespace

bool satisfies_weight_conditions(const CycloMatrix& nilpotent, const WeightFiltration& w) {
    return check_weight_conditions(nilpotent, w);
}

WeightFiltration weight_filtration(const CycloMatrix& nilpotent, int w) {
    if (nilpotent.rows() != nilpotent.cols())
        throw std::invalid_argument("weight_filtration: matrix not square");
    int dim = nilpotent.rows();
    long n = nilpotent.conductor();

    // powers[k] = N^k, up to the nilpotency index
    std::vector<CycloMatrix> powers = {CycloMatrix::identity(n, dim)};
    int d = 0;
    while (d <= dim && !powers.back().is_zero()) {
        powers.push_back(powers.back() * nilpotent);
        ++d;
    }
    if (!powers.back().is_zero())
        throw std::invalid_argument("weight_filtration: operator is not nilpotent");

    // Jordan chains, longest first: at level k, chain tops of length k are
    // vectors of ker N^k independent of ker N^{k-1} plus the images of the
    // longer chains.
    std::vector<CycloMatrix> kernels;  // kernels[k] = basis of ker N^k
    for (int k = 0; k <= d; ++k) kernels.push_back(column_echelon(kernel_basis(powers[k])));

    std::vector<std::pair<std::vector<CycloElem>, int>> tops;  // (vector, chain length)
    for (int k = d; k >= 1; --k) {
        SpanAccum acc(n, dim);
        acc.insert_matrix_cols(kernels[k - 1]);
        for (const auto& [t, len] : tops)
            if (len > k) acc.insert(apply_to(powers[len - k], t));
        for (int j = 0; j < kernels[k].cols(); ++j) {
            std::vector<CycloElem> v = column_of(kernels[k], j);
            if (acc.insert(v)) tops.emplace_back(column_of(kernels[k], j), k);
        }
    }

    // weight of N^j t for a chain of length len: w + len - 1 - 2j
    std::map<int, std::vector<std::vector<CycloElem>>> by_weight;
    long total = 0;
    for (const auto& [t, len] : tops) {
        total += len;
        for (int j = 0; j < len; ++j)
            by_weight[w + len - 1 - 2 * j].push_back(apply_to(powers[j], t));
    }
    if (total != dim) throw std::logic_error("weight_filtration: Jordan chain count mismatch");

    WeightFiltration wf(w, dim, n);
    if (dim == 0) return wf;
    std::vector<std::vector<CycloElem>> cum;
    int min_w = by_weight.begin()->first;
    int max_w = by_weight.rbegin()->first;
    for (int i = min_w; i <= max_w; ++i) {
        auto it = by_weight.find(i);
        if (it != by_weight.end())
            cum.insert(cum.end(), it->second.begin(), it->second.end());
        wf.set_step(i, column_echelon(matrix_from_columns(n, dim, cum)));
    }
    if (!check_weight_conditions(nilpotent, wf))
        throw std::logic_error("weight_filtration: defining conditions failed on output");
    return wf;
}

long amplitude(const WeightFiltration& w) {
    if (w.ambient_dim() == 0) return 0;
    return w.hi() > w.center() ? w.hi() - w.center() : 0;
}

long max_block_from_amplitude(const CycloMatrix& m, const std::vector<QZElem>& candidates) {
    auto [ms, mn] = jordan_chevalley(m, candidates);
    return amplitude(weight_filtration(mn, 0)) + 1;
}

WeightFiltration dual_filtration(const WeightFiltration& w) {
    int dim = w.ambient_dim();
    WeightFiltration out(-w.center(), dim, w.conductor());
    if (dim == 0) return out;
    int lo = -w.hi(), hi = -w.lo();
    for (int i = lo; i <= hi; ++i) {
        CycloMatrix b = w.basis_at(-i - 1);
        if (b.cols() == 0) {
            out.set_step(i, column_echelon(CycloMatrix::identity(w.conductor(), dim)));
        } else {
            out.set_step(i, column_echelon(kernel_basis(b.transpose())));
        }
    }
    return out;
}

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.conductor() != b.conductor()) throw std::invalid_argument("kron: conductor mismatch");
    CycloMatrix r(a.conductor(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
                }
        }
    return r;
}

CycloMatrix tensor_operator(const CycloMatrix& a, const CycloMatrix& b) {
    return kron(a, CycloMatrix::identity(b.conductor(), b.rows())) +
           kron(CycloMatrix::identity(a.conductor(), a.rows()), b);
}

WeightFiltration tensor_filtration(const WeightFiltration& w, const WeightFiltration& w2) {
    if (w.conductor() != w2.conductor())
        throw std::invalid_argument("tensor_filtration: conductor mismatch");
    long n = w.conductor();
    int d1 = w.ambient_dim(), d2 = w2.ambient_dim();
    WeightFiltration out(w.center() + w2.center(), d1 * d2, n);
    FlagBasis f1 = flag_basis(w), f2 = flag_basis(w2);
    // u_a tensor v_b enters at level(u_a) + level(v_b)
    std::map<int, std::vector<std::vector<CycloElem>>> by_level;
    for (size_t a = 0; a < f1.vectors.size(); ++a)
        for (size_t b = 0; b < f2.vectors.size(); ++b) {
            std::vector<CycloElem> t(d1 * d2, CycloElem(n));
            for (int i = 0; i < d1; ++i) {
                if (f1.vectors[a][i].is_zero()) continue;
                for (int j = 0; j < d2; ++j) {
                    if (f2.vectors[b][j].is_zero()) continue;
                    t[i * d2 + j] = f1.vectors[a][i] * f2.vectors[b][j];
                }
            }
            by_level[f1.levels[a] + f2.levels[b]].push_back(std::move(t));
        }
    std::vector<std::vector<CycloElem>> cum;
    int min_l = by_level.begin()->first, max_l = by_level.rbegin()->first;
    for (int i = min_l; i <= max_l; ++i) {
        auto it = by_level.find(i);
        if (it != by_level.end()) cum.insert(cum.end(), it->second.begin(), it->second.end());
        out.set_step(i, column_echelon(matrix_from_columns(n, d1 * d2, cum)));
    }
    return out;
}

WeightFiltration wedge_filtration(const WeightFiltration& w, int j) {
    int dim = w.ambient_dim();
    if (j < 1 || j > dim) throw std::invalid_argument("wedge_filtration: j out of range");
    long n = w.conductor();
    FlagBasis fb = flag_basis(w);
    auto subsets = index_subsets(dim, j);
    int wdim = (int)subsets.size();
    WeightFiltration out(w.center() * j, wdim, n);

    // v_{a1} wedge ... wedge v_{aj} enters at the sum of the entry levels
    auto choices = index_subsets(dim, j);
    std::map<int, std::vector<std::vector<CycloElem>>> by_level;
    for (const auto& pick : choices) {
        int level = 0;
        CycloMatrix u(n, dim, j);
        for (int k = 0; k < j; ++k) {
            level += fb.levels[pick[k]];
            for (int i = 0; i < dim; ++i) u.set(i, k, fb.vectors[pick[k]][i]);
        }
        std::vector<int> all_cols(j);
        for (int k = 0; k < j; ++k) all_cols[k] = k;
        std::vector<CycloElem> col;
        col.reserve(wdim);
        for (const auto& rows : subsets) col.push_back(minor_det(u, rows, all_cols));
        by_level[level].push_back(std::move(col));
    }
    std::vector<std::vector<CycloElem>> cum;
    int min_l = by_level.begin()->first, max_l = by_level.rbegin()->first;
    for (int i = min_l; i <= max_l; ++i) {
        auto it = by_level.find(i);
        if (it != by_level.end()) cum.insert(cum.end(), it->second.begin(), it->second.end());
        out.set_step(i, column_echelon(matrix_from_columns(n, wdim, cum)));
    }
    return out;
}

}  // namespace tamon
