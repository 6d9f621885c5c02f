#pragma once

#include "lsdual/ncalg.hpp"
#include "lsdual/subspace.hpp"

#include <cstddef>
#include <vector>

namespace lsdual {

/// ls_m^k: elements of bidegree (m,k) primitive for Delta whose image under pi
/// is primitive for Delta_Y, with the depth-1 even-weight component set to 0.
struct LsBasis {
    std::size_t m = 0;
    std::size_t k = 0;
    Subspace space;

    std::size_t dim() const { return space.dim(); }
    std::vector<NcPoly> polys() const;
};

/// Number of Lyndon words with `depth` z's and `weight` letters, which is the
/// dimension of that bidegree of the free Lie algebra on x, z.
std::size_t lie_dimension(std::size_t depth, std::size_t weight);

/// Primitive elements of bidegree (depth, weight): kernel of the equations
/// Delta(psi) - 1 (x) psi - psi (x) 1 = 0. Requires weight >= 1.
Subspace shuffle_primitives(std::size_t depth, std::size_t weight);

/// Requires k >= m >= 1; throws std::invalid_argument otherwise.
LsBasis compute_ls(std::size_t m, std::size_t k);

/// The spanning family of the (m,k) slice of
///   K + K x + K_{1,even} + K<x,z>_+^{sh 2} + i(K<Y>_+^{sh_Y 2}),
/// in coordinates of WordBasis(m, k).
std::vector<SparseVector> ls_perp_generators(std::size_t m, std::size_t k);

/// ls_m^k recomputed as the orthogonal complement of ls_perp_generators.
LsBasis compute_ls_via_complement(std::size_t m, std::size_t k);

struct ClosureWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    NcPoly bracket;
};

struct ClosureReport {
    std::size_t target_m = 0;
    std::size_t target_k = 0;
    std::size_t pairs_checked = 0;
    std::vector<ClosureWitness> failures;
    bool pass() const { return failures.empty(); }
};

/// Tests {psi_1, psi_2} in ls for every pair of basis elements.
ClosureReport check_closure(const LsBasis& p1, const LsBasis& p2, const LsBasis& target);
ClosureReport check_closure(const LsBasis& p1, const LsBasis& p2);

}  // namespace lsdual
