#pragma once

// The quantized-algebra construction behind the exchange process: the spin
// module of a single site, coproducts along the chain, a central element
// whose two-site image is the bond Hamiltonian, and the q-exponential ground
// state whose conjugation turns the Hamiltonian into the Markov generator.
//
// Matrix convention: entry (r, c) is the coefficient of basis state r in the
// image of basis state c, so operators act on column coordinate vectors and
// compose as matrix products.  The site basis is site_states(n, j2); the
// chain basis is enumerate_configs(n, j2, L), whose ordering makes site 1
// the most significant factor of a left-folded Kronecker product.

#include <vector>

#include "asepq/matrix.hpp"
#include "asepq/qarith.hpp"
#include "asepq/statespace.hpp"

namespace asepq {

using OpMatrix = DenseMatrix<RationalFunction>;

// Weight factors carried by the iterated coproduct of a raising/lowering
// generator.  `hopf` uses q^{E_ii - E_{i+1,i+1}} (inverse on the lowering
// side), the algebra-morphism iterate of the two-site coproduct; `bare`
// uses q^{E_ii} (resp. q^{-E_ii}).  Only the hopf weights commute with the
// raising generator by a factor q^2, which is what makes the q-exponential
// factorize and the symmetry operator commute with the Hamiltonian; the
// bare variant exists so tests can demonstrate that it fails.
enum class WeightConvention { hopf, bare };

enum class GenKind { raising, lowering, weight };

long site_dimension(long n, long j2);
OpMatrix site_identity(long n, long j2);

// diagonal operator q^{a_1 E_11 + ... + a_n E_nn}
OpMatrix weight_matrix(long n, long j2, const std::vector<long>& a);

// E_{ij} for i != j in closed form: one particle moves from class j to
// class i with coefficient q^{mu_{lo+1} + ... + mu_{hi-1}} [mu_j], where
// lo < hi are the two class indices
OpMatrix e_matrix(long i, long j, long n, long j2);

// the same operator assembled from nearest-neighbour generators through
// nested commutators E_{ij} = E_{ik}E_{kj} - q^{-1}E_{kj}E_{ik}
OpMatrix e_matrix_inductive(long i, long j, long n, long j2);

OpMatrix kron(const OpMatrix& a, const OpMatrix& b);
OpMatrix chain_operator(const std::vector<OpMatrix>& site_ops);

// iterated coproduct of the generator across L sites: raising generators
// carry weight factors to the left of the active site, lowering generators
// inverse weights to the right, weights become pure tensor powers
OpMatrix coproduct_chain(GenKind kind, long i, long n, long j2, long L,
                         WeightConvention wc = WeightConvention::hopf);

// two-site coproduct of the composite E_{ij}, valid for any i != j
OpMatrix coproduct_two_site(long i, long j, long n, long j2);

// central element on one site and its two-site coproduct image
OpMatrix central_element(long n, long j2);
OpMatrix central_two_site(long n, long j2);

// off-diagonal part of the bond element in closed form; the diagonal stays
// zero because the generator's diagonal is fixed later by the zero-row-sum
// condition
OpMatrix hamiltonian_closed(long n, long j2);

// sum of the two-site bond element over bonds (x, x+1), 1 <= x <= L-1
OpMatrix hamiltonian_chain(long n, long j2, long L);

// eigenvalue of the bond element on the two-site vacuum; the chain
// Hamiltonian has eigenvalue (L-1) times this on the full vacuum
LaurentPoly bond_vacuum_eigenvalue(long n, long j2);

// q-deformed exponential sum_k x^k / {k}!, requires a nilpotent input
OpMatrix q_exponential(const OpMatrix& x);

// ordered product of the q-exponentials of the chain raising operators,
// class-1 factor leftmost
OpMatrix symmetry_operator(long n, long j2, long L,
                           WeightConvention wc = WeightConvention::hopf);

struct GroundStateData {
    OpMatrix S;                        // symmetry operator
    std::vector<RationalFunction> g;   // S applied to the vacuum
    std::vector<RationalFunction> b2;  // squared basis-change diagonal
};

// The basis-change matrix B has square-root entries, so it is carried in
// squared form b2(c) = prod_x prod_i 1/{c_i^x}!; self-adjointness of
// B^{-1}HB is equivalent to the balance identity H(s,t) b2(t) = H(t,s) b2(s),
// which is how tests state it.
GroundStateData build_S_G_B(long n, long j2, long L);

std::vector<RationalFunction> ground_state(long n, long j2, long L);
RationalFunction b_squared(const Config& c);

// closed forms of the symmetry matrix elements and ground-state entries;
// each agrees with the operator version up to a factor that is conserved
// per (sector, sector) block
RationalFunction symmetry_closed(const Config& eta, const Config& xi);
RationalFunction ground_state_closed(const Config& eta);

// off-diagonal conjugation g(s)^{-1} H(s,t) g(t), diagonal reset so every
// row sums to zero
DenseMatrix<RationalFunction> ground_state_transform(
    const OpMatrix& H, const std::vector<RationalFunction>& g);

// self-duality matrix G^{-1} S G^{-1} B^2 on the full bounded space
DenseMatrix<RationalFunction> duality_from_pipeline(long n, long j2, long L);

}  // namespace asepq
