#pragma once

#include "lsdual/dihedral.hpp"
#include "lsdual/lsspace.hpp"
#include "lsdual/memo.hpp"
#include "lsdual/serialize.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lsdual {

struct BidegreeResult {
    std::size_t m = 0;
    std::size_t k = 0;
    bool pass = true;
    Json dim_data = Json::object();
    /// Always present when pass is false.
    std::optional<Json> witness;
    double millis = 0;
};

struct CheckReport {
    std::string check;
    Json params = Json::object();
    /// Sorted by (m, k). A check stops at its first failing bidegree, so a
    /// failure, if any, is the last entry.
    std::vector<BidegreeResult> results;

    bool pass() const;
    /// {check, params, results: [{m, k, status, dim_data, witness?, millis}]};
    /// millis is omitted when timing is false.
    Json to_json(bool timing = true) const;
};

/// Optional persistent storage behind Context, keyed by (kind, m, k).
class BasisStore {
public:
    virtual ~BasisStore() = default;
    virtual std::optional<Subspace> load(const std::string& kind, std::size_t m, std::size_t k) = 0;
    virtual void save(const std::string& kind, std::size_t m, std::size_t k, const Subspace& s) = 0;
};

/// Memoised bases shared by all checks. Thread-safe.
class Context {
public:
    explicit Context(std::size_t jobs = 1, BasisStore* store = nullptr);

    std::size_t jobs() const { return jobs_; }

    /// ls_m^k in WordBasis(m, k) coordinates.
    const Subspace& ls(std::size_t m, std::size_t k);
    /// (W_R)_{m,k} in W coordinates.
    const Subspace& wr(std::size_t m, std::size_t k);
    /// F_{m,k} in VBasis(m, k) coordinates; m may be 0.
    const Subspace& f(std::size_t m, std::size_t k);
    /// W_R embedded in VBasis(m, k) coordinates (zero in depth 0).
    const Subspace& wr_in_v(std::size_t m, std::size_t k);
    /// U_{m,k} in VBasis(m, k) coordinates.
    const Subspace& u_in_v(std::size_t m, std::size_t k);
    /// Dsh_m(k - m) in monomial_basis(m, k - m) coordinates; m >= 2.
    const Subspace& dsh(std::size_t m, std::size_t k);

private:
    using Key = std::tuple<std::string, std::size_t, std::size_t>;
    const Subspace& get(const std::string& kind, std::size_t m, std::size_t k, bool persist,
                        const std::function<Subspace()>& compute);

    std::size_t jobs_;
    BasisStore* store_;
    Memo<Key, Subspace> memo_;
};

/// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body);

/// A subspace C_{m,k} of V_{m,k} for every bidegree.
using VSubspaceFn = std::function<const Subspace&(std::size_t, std::size_t)>;

/// The class of v in V/C, written on the free-column representatives.
VVector project_quotient(const VVector& v, const VSubspaceFn& c);
/// The image of t in (V/C) (x) (V/C); zero iff t lies in C (x) V + V (x) C.
VTensor2 project_quotient(const VTensor2& t, const VSubspaceFn& c);

// --- Checks ------------------------------------------------------------------------
// Each check covers every bidegree 1 <= m <= max_depth, m <= k <= max_weight in
// its domain unless stated otherwise.

CheckReport check_orthogonality(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// phi(F) = ls^perp, and both equal the span of ls_perp_generators.
CheckReport check_phiF_equals_ls_perp(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// Brackets of ls basis elements land in ls, for total weight <= max_weight
/// (all depths); reported per target bidegree.
CheckReport check_ihara_closure(Context& ctx, std::size_t max_weight);
/// phi(U) is a coideal for co_ihara (depth 0 included).
CheckReport check_coideal_U(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// W_R is a coideal for delta~.
CheckReport check_coideal_WR(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// F is a coideal for the pullback of co_ihara (depth 0 included).
CheckReport check_coideal_F(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// delta~ - pullback(co_ihara) maps W into C (x) V + V (x) C, with C = W_R or,
/// when use_F is set, C = F.
CheckReport check_cobracket_comparison(Context& ctx, std::size_t max_depth, std::size_t max_weight, bool use_F);
/// h_m(Dsh_m') = (W_R)_m for 2 <= m.
CheckReport check_hm_duality(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// f_m maps ls_m^k injectively into Dsh_m(k - m) with equal dimensions.
CheckReport check_fm_isomorphism(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// beta_m o i o h_m equals the dual of f_m, as matrices on dual-basis forms.
CheckReport check_fm_compatibility(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// The cobracket induced on V/F is co-antisymmetric and satisfies co-Jacobi.
CheckReport check_cojacobi(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// dim ls = dim W/W_R = dim Dsh = 0 when k + m is odd.
CheckReport check_parity(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// dim ls = dim W/W_R = dim V/F, and = dim Dsh_m(k - m) when m >= 2.
CheckReport check_dimension_agreement(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// Every coefficient of {t_1:...:t_{m+1}} - {t_{m+1}:t_1:...:t_m} lies in W_R.
CheckReport check_cyclic_symmetry(Context& ctx, std::size_t max_depth, std::size_t max_weight);
/// <{a,b}, w> = <a (x) b, co_ihara(w)> for all words with |a| + |b| <= max_weight
/// and |w| <= max_weight; reported per bidegree of w.
CheckReport check_coihara_adjoint(Context& ctx, std::size_t max_weight);
/// co_ihara vanishes on depth-1 words of weight <= max_weight.
CheckReport check_coihara_depth1(Context& ctx, std::size_t max_weight);
/// Q_p sh Q_q = sum over shuffles of Q_{p+q}, (p,q) in {(1,1),(1,2),(2,2)},
/// truncation N; reported as m = p + q, k = N.
CheckReport check_q_shuffle(Context& ctx, std::size_t max_truncation);
/// The Q-series lemma, the recursion for Q_n, the P product law and the
/// co-Ihara formula for P; reported as (m, N).
CheckReport check_series_identities(Context& ctx, std::size_t max_depth, std::size_t max_truncation);

struct CheckInfo {
    std::string id;
    std::string description;
    std::function<CheckReport(Context&, std::size_t max_depth, std::size_t max_weight)> run;
};

/// All checks in a fixed order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& id);

struct DimRow {
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t ls = 0;
    /// dim (W/W_R)_{m,k}
    std::size_t d = 0;
    /// dim Dsh_m(k - m); absent for m = 1.
    std::optional<std::size_t> dsh;
    std::size_t vf = 0;

    bool consistent() const { return ls == d && ls == vf && (!dsh || *dsh == ls); }
};

/// Rows for 1 <= m <= max_depth, m <= k <= max_weight in (m, k) order.
std::vector<DimRow> dimension_table(Context& ctx, std::size_t max_depth, std::size_t max_weight);

}  // namespace lsdual
