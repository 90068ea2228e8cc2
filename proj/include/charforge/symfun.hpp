#pragma once

// Symmetric functions of the eigenvalues of a matrix, written directly as
// polynomials in the matrix entries. Eigenvalues are never computed.

#include <span>
#include <vector>

#include "charforge/partitions.hpp"
#include "charforge/polyring.hpp"

namespace charforge {

/// A symmetric-function value together with the matrix it was evaluated on.
struct SymmetricEvaluation {
    GenericMatrix matrix;
    Polynomial value;
};

/// Sum of the principal i x i minors; 1 for i = 0 and 0 for i > size.
Polynomial elementary_sym(const GenericMatrix& a, int i, const DivisorBound& bound = {});

/// MacMahon expansion: sum over all sequences s in [m]^i of
/// prod_k a[sorted(s)_k, s_k].
Polynomial homogeneous_sym(const GenericMatrix& a, int i, const DivisorBound& bound = {});

/// trace(A^k), k >= 1.
Polynomial power_sum(const GenericMatrix& a, int k, const DivisorBound& bound = {});

/// det(h_{lam_i - i + j}) over the length(lam) square matrix.
Polynomial schur_jt(const GenericMatrix& a, const Partition& lam, const DivisorBound& bound = {});

/// det(e_{lam'_i - i + j}) over the lam_1 square matrix.
Polynomial schur_dual_jt(const GenericMatrix& a, const Partition& lam, const DivisorBound& bound = {});

/// det(e_{lam'_i - nu'_j - i + j}) over the lam_1 square matrix.
Polynomial skew_schur(const GenericMatrix& a, const SkewShape& s, const DivisorBound& bound = {});

/// det(tI - A) in the variable t.
Polynomial characteristic_polynomial(const GenericMatrix& a);

/// The cyclic matrix with b_1..b_{l-1} on the superdiagonal and b_l in the
/// bottom-left corner, placed after `offset` leading zero rows and columns.
GenericMatrix companion_matrix(std::span<const Polynomial> b, int offset = 0);

/// The cycle entries a[o+1,o+2], a[o+2,o+3], ..., a[o+l,o+1]; a[o+1,o+1] when l = 1.
std::vector<Polynomial> cycle_entries(int l, int offset = 0);

/// Every index occurs as often as a row index as it does as a column index.
/// Throws on non-entry variables.
bool is_balanced(const Monomial& m);

/// [mono_c * mono_d] s_lam(A) for A = C (+) D, with C on indices 1..k and D on
/// k+1..m, summed over nu of size deg(mono_c) contained in lam.
Integer coeff_via_blocks(const Partition& lam, const Monomial& mono_c, const Monomial& mono_d, int k, int m);

}  // namespace charforge
