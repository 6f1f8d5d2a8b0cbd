#pragma once

#include <map>

#include "tamon/exact_linalg.hpp"

namespace tamon {

/// Finite ascending filtration by column spans of a Q(zeta_N)-vector
/// space; subspace bases are stored in reduced column-echelon form so that
/// equality of steps is exact span equality.
class WeightFiltration {
public:
    WeightFiltration(int center, int ambient, long conductor)
        : center_(center), ambient_(ambient), conductor_(conductor) {}

    int center() const { return center_; }
    int ambient_dim() const { return ambient_; }
    long conductor() const { return conductor_; }

    /// Lowest index with W_i != 0 and highest index with W_{i-1} != V.
    int lo() const;
    int hi() const;

    long dim_at(int i) const;
    /// Basis of W_i (columns); empty matrix below lo, full echelon above hi.
    CycloMatrix basis_at(int i) const;

    /// dim Gr_i for the indices where it is nonzero.
    std::map<int, long> graded_dims() const;

    /// Set W_i; callers must add steps so that spans are nested.
    void set_step(int i, CycloMatrix basis);

    bool operator==(const WeightFiltration& o) const;

private:
    int center_;
    int ambient_;
    long conductor_;
    std::map<int, CycloMatrix> steps_;  // only indices where the dim jumps
};

/// The unique filtration centered at w with N W_i in W_{i-2} and
/// N^a : Gr_{w+a} -> Gr_{w-a} an isomorphism, built from a Jordan chain
/// basis of the nilpotent operator; both conditions are re-verified on the
/// result. Throws std::invalid_argument on a non-nilpotent input.
WeightFiltration weight_filtration(const CycloMatrix& nilpotent, int w);

/// Smallest a >= 0 with W_{center+a} = V.
long amplitude(const WeightFiltration& w);

/// Do the two defining conditions hold for this nilpotent operator and
/// filtration? (Independent re-check; the constructor asserts it too.)
bool satisfies_weight_conditions(const CycloMatrix& nilpotent, const WeightFiltration& w);

/// amplitude(weight_filtration(M_n, 0)) + 1 for quasi-unipotent M.
long max_block_from_amplitude(const CycloMatrix& m, const std::vector<QZElem>& candidates);

/// (W^dual)_i = annihilator of W_{-i-1}, centered at -center.
WeightFiltration dual_filtration(const WeightFiltration& w);

/// Convolution filtration on V tensor V', centered at the sum of centers.
/// Basis order of the tensor space: e_i tensor e'_j at index i*dim' + j.
WeightFiltration tensor_filtration(const WeightFiltration& w, const WeightFiltration& w2);

/// Exterior-power filtration on Lambda^j V (lexicographic subset basis),
/// centered at center*j.
WeightFiltration wedge_filtration(const WeightFiltration& w, int j);

/// N tensor Id + Id tensor N' on the tensor basis above.
CycloMatrix tensor_operator(const CycloMatrix& a, const CycloMatrix& b);

/// Kronecker product (used for tensor-filtration basis vectors and the
/// tensor operator check).
CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);

}  // namespace tamon
