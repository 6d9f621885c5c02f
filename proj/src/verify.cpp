#include "lsdual/verify.hpp"

#include "lsdual/commring.hpp"

#include <gmpxx.h>

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace lsdual {

namespace {

using Clock = std::chrono::steady_clock;
using Grid = std::vector<std::pair<std::size_t, std::size_t>>;
using Tensor3 = LinComb<std::tuple<VIndex, VIndex, VIndex>>;

std::size_t binom(std::size_t n, std::size_t r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out.get_ui();
}

Grid make_grid(std::size_t m_lo, std::size_t max_depth, std::size_t max_weight) {
    Grid g;
    for (std::size_t m = m_lo; m <= max_depth; ++m) {
        for (std::size_t k = m; k <= max_weight; ++k) g.emplace_back(m, k);
    }
    return g;
}

Json range_params(std::size_t max_depth, std::size_t max_weight) {
    return Json{{"max_depth", max_depth}, {"max_weight", max_weight}};
}

const VBasis& vbasis(std::size_t m, std::size_t k) {
    static Memo<std::pair<std::size_t, std::size_t>, VBasis> memo;
    return *memo.get({m, k}, [&] { return VBasis(m, k); });
}

const WordBasis& wbasis(std::size_t m, std::size_t k) {
    static Memo<std::pair<std::size_t, std::size_t>, WordBasis> memo;
    return *memo.get({m, k}, [&] { return WordBasis(m, k); });
}

SparseVector w_coords(const VBasis& vb, const VVector& v) {
    const SparseVector full = vb.coords(v);
    SparseVector out(vb.w_size());
    for (const auto& [i, c] : full.entries()) {
        if (i >= vb.w_size()) throw std::invalid_argument("w_coords: element has a U component");
        out.push_back(i, c);
    }
    return out;
}

SparseVector embed_w(const VBasis& vb, const SparseVector& w) {
    SparseVector out(vb.size());
    for (const auto& [i, c] : w.entries()) out.push_back(i, c);
    return out;
}

CheckReport run_grid(const std::string& id, Json params, const Grid& grid, std::size_t jobs,
                     const std::function<BidegreeResult(std::size_t, std::size_t)>& fn) {
    std::vector<std::optional<BidegreeResult>> slots(grid.size());
    std::atomic<std::size_t> first_fail{grid.size()};
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        if (i > first_fail.load()) return;
        const auto t0 = Clock::now();
        BidegreeResult r;
        try {
            r = fn(grid[i].first, grid[i].second);
        } catch (const std::exception& e) {
            r.pass = false;
            r.witness = Json{{"error", e.what()}};
        }
        r.m = grid[i].first;
        r.k = grid[i].second;
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (!r.pass) {
            if (!r.witness) r.witness = Json{{"error", "unspecified failure"}};
            std::size_t cur = first_fail.load();
            while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
            }
        }
        slots[i] = std::move(r);
    });
    CheckReport report{id, std::move(params), {}};
    for (auto& slot : slots) {
        if (!slot) break;
        const bool failed = !slot->pass;
        report.results.push_back(std::move(*slot));
        if (failed) break;
    }
    return report;
}

BidegreeResult fail(Json witness, Json dims = Json::object()) {
    BidegreeResult r;
    r.pass = false;
    r.witness = std::move(witness);
    r.dim_data = std::move(dims);
    return r;
}

BidegreeResult ok(Json dims = Json::object()) {
    BidegreeResult r;
    r.dim_data = std::move(dims);
    return r;
}

VTensor2 swap_factors(const VTensor2& t) {
    VTensor2 out;
    for (const auto& [p, c] : t) out.add({p.second, p.first}, c);
    return out;
}

Json tensor3_json(const Tensor3& t) {
    Json out = Json::array();
    for (const auto& [key, c] : t) {
        const auto& [a, b, d] = key;
        out.push_back(Json{{"factors", Json::array({to_json(a), to_json(b), to_json(d)})}, {"coeff", to_json(c)}});
    }
    return out;
}

/// Generic coideal test: every generator's image projects to zero.
BidegreeResult coideal_result(const std::vector<VVector>& generators, const std::function<VTensor2(const VVector&)>& map,
                              const VSubspaceFn& c) {
    for (const auto& g : generators) {
        const VTensor2 residue = project_quotient(map(g), c);
        if (!residue.is_zero()) {
            return fail(Json{{"element", to_json(g)}, {"residue", to_json(residue)}},
                        Json{{"generators", generators.size()}});
        }
    }
    return ok(Json{{"generators", generators.size()}});
}

std::vector<VVector> basis_vectors(const VBasis& vb, const Subspace& s) {
    std::vector<VVector> out;
    for (const auto& b : s.basis()) out.push_back(vb.vector(b));
    return out;
}

DimRow dim_row(Context& ctx, std::size_t m, std::size_t k) {
    DimRow row;
    row.m = m;
    row.k = k;
    row.ls = ctx.ls(m, k).dim();
    const Subspace& wr = ctx.wr(m, k);
    row.d = wr.ambient_dim() - wr.dim();
    if (m >= 2) row.dsh = ctx.dsh(m, k).dim();
    row.vf = binom(k, m) - ctx.f(m, k).dim();
    return row;
}

Json row_json(const DimRow& r) {
    Json j{{"ls", r.ls}, {"D", r.d}};
    j["dsh"] = r.dsh ? Json(*r.dsh) : Json(nullptr);
    j["vf"] = r.vf;
    return j;
}

CommPoly var(std::size_t n, std::size_t i) { return CommPoly::variable(n, i); }

TruncatedSeries<NcPoly> times_z(const TruncatedSeries<NcPoly>& s) {
    const NcPoly z = word_poly("z");
    return series_map(s, [&](const NcPoly& p) { return concat(p, z); });
}

const auto concat_op = [](const NcPoly& a, const NcPoly& b) { return concat(a, b); };
const auto shuffle_op = [](const NcPoly& a, const NcPoly& b) { return shuffle(a, b); };
const auto wedge_op = [](const NcPoly& a, const NcPoly& b) { return wedge(a, b); };

template <class C>
BidegreeResult series_equal(const TruncatedSeries<C>& lhs, const TruncatedSeries<C>& rhs, Json dims) {
    if (lhs == rhs) {
        dims["coefficients"] = lhs.terms().size();
        return ok(std::move(dims));
    }
    auto diff = lhs - rhs;
    const auto& [e, c] = *diff.terms().begin();
    return fail(Json{{"exponents", e}, {"difference", to_json(c)}}, std::move(dims));
}

}  // namespace

// --- Reports -----------------------------------------------------------------------

bool CheckReport::pass() const {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

Json CheckReport::to_json(bool timing) const {
    Json results_json = Json::array();
    for (const auto& r : results) {
        Json j{{"m", r.m}, {"k", r.k}, {"status", r.pass ? "pass" : "fail"}, {"dim_data", r.dim_data}};
        if (r.witness) j["witness"] = *r.witness;
        if (timing) j["millis"] = r.millis;
        results_json.push_back(std::move(j));
    }
    return Json{{"check", check}, {"params", params}, {"results", std::move(results_json)}};
}

// --- Context -------------------------------------------------------------------------

Context::Context(std::size_t jobs, BasisStore* store) : jobs_(jobs == 0 ? 1 : jobs), store_(store) {}

const Subspace& Context::get(const std::string& kind, std::size_t m, std::size_t k, bool persist,
                             const std::function<Subspace()>& compute) {
    return *memo_.get(Key{kind, m, k}, [&] {
        if (persist && store_) {
            if (auto cached = store_->load(kind, m, k)) return *cached;
        }
        Subspace s = compute();
        if (persist && store_) store_->save(kind, m, k, s);
        return s;
    });
}

const Subspace& Context::ls(std::size_t m, std::size_t k) {
    return get("ls", m, k, true, [&] { return compute_ls(m, k).space; });
}

const Subspace& Context::wr(std::size_t m, std::size_t k) {
    return get("wr", m, k, true, [&] { return compute_WR(m, k); });
}

const Subspace& Context::f(std::size_t m, std::size_t k) {
    return get("f", m, k, false, [&] { return compute_F(m, k, m == 0 ? Subspace::zero(0) : wr(m, k)); });
}

const Subspace& Context::wr_in_v(std::size_t m, std::size_t k) {
    return get("wr_in_v", m, k, false, [&] {
        const VBasis& vb = vbasis(m, k);
        if (m == 0) return Subspace::zero(vb.size());
        std::vector<SparseVector> rows;
        for (const auto& b : wr(m, k).basis()) rows.push_back(embed_w(vb, b));
        return Subspace::span(rows, vb.size());
    });
}

const Subspace& Context::u_in_v(std::size_t m, std::size_t k) {
    return get("u_in_v", m, k, false, [&] {
        const VBasis& vb = vbasis(m, k);
        std::vector<SparseVector> rows;
        for (std::size_t i = vb.w_size(); i < vb.size(); ++i) rows.push_back(SparseVector::unit(vb.size(), i));
        return Subspace::span(rows, vb.size());
    });
}

const Subspace& Context::dsh(std::size_t m, std::size_t k) {
    if (m < 2 || k < m) throw std::invalid_argument("Context::dsh: need k >= m >= 2");
    return get("dsh", m, k, true, [&] { return compute_dsh(m, k - m).space; });
}

void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    const std::size_t count = std::min(jobs, n);
    for (std::size_t t = 0; t < count; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

// --- Quotient projection ------------------------------------------------------------

VVector project_quotient(const VVector& v, const VSubspaceFn& c) {
    std::map<std::pair<std::size_t, std::size_t>, VVector> parts;
    for (const auto& [idx, a] : v) parts[{idx.depth(), idx.weight()}].add(idx, a);
    VVector out;
    for (const auto& [bd, part] : parts) {
        const VBasis& vb = vbasis(bd.first, bd.second);
        const Subspace& s = c(bd.first, bd.second);
        const auto free = s.free_columns();
        const SparseVector q = s.quotient_coords(vb.coords(part));
        for (const auto& [i, a] : q.entries()) out.add(vb.indices()[free[i]], a);
    }
    return out;
}

VTensor2 project_quotient(const VTensor2& t, const VSubspaceFn& c) {
    std::map<VIndex, VVector> seen;
    auto proj = [&](const VIndex& idx) -> const VVector& {
        auto it = seen.find(idx);
        if (it == seen.end()) it = seen.emplace(idx, project_quotient(VVector(idx), c)).first;
        return it->second;
    };
    VTensor2 out;
    for (const auto& [p, a] : t) {
        const VVector& l = proj(p.first);
        if (l.is_zero()) continue;
        const VVector& r = proj(p.second);
        if (r.is_zero()) continue;
        out.axpy(a, tensor(l, r));
    }
    return out;
}

// --- Checks -----------------------------------------------------------------------------

CheckReport check_orthogonality(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("orthogonality", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const Subspace& f = ctx.f(m, k);
                        const Subspace& l = ctx.ls(m, k);
                        const VBasis& vb = vbasis(m, k);
                        const WordBasis& wb = wbasis(m, k);
                        Json dims{{"F", f.dim()}, {"ls", l.dim()}, {"V", binom(k, m)}};
                        for (const auto& b : f.basis()) {
                            const SparseVector pf = wb.coords(phi(vb.vector(b)));
                            for (const auto& psi : l.basis()) {
                                const Rational p = pf.dot(psi);
                                if (p != 0) {
                                    return fail(Json{{"f", to_json(vb.vector(b))},
                                                     {"psi", to_json(wb.poly(psi))},
                                                     {"pairing", to_json(p)}},
                                                dims);
                                }
                            }
                        }
                        if (f.dim() + l.dim() != binom(k, m)) return fail(Json{{"reason", "dim F + dim ls != C(k,m)"}}, dims);
                        return ok(dims);
                    });
}

CheckReport check_phiF_equals_ls_perp(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("phiF-ls-perp", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const Subspace& f = ctx.f(m, k);
                        const VBasis& vb = vbasis(m, k);
                        const WordBasis& wb = wbasis(m, k);
                        std::vector<SparseVector> images;
                        for (const auto& b : f.basis()) images.push_back(wb.coords(phi(vb.vector(b))));
                        const Subspace phi_f = Subspace::span(images, wb.size());
                        const Subspace perp = orthogonal_complement(ctx.ls(m, k));
                        const Subspace gens = Subspace::span(ls_perp_generators(m, k), wb.size());
                        Json dims{{"phiF", phi_f.dim()}, {"ls_perp", perp.dim()}, {"generated", gens.dim()}};
                        for (const auto* other : {&perp, &gens}) {
                            if (phi_f == *other) continue;
                            for (const auto& v : phi_f.basis()) {
                                if (!other->contains(v)) return fail(Json{{"in_phiF_only", to_json(wb.poly(v))}}, dims);
                            }
                            for (const auto& v : other->basis()) {
                                if (!phi_f.contains(v)) return fail(Json{{"missing_from_phiF", to_json(wb.poly(v))}}, dims);
                            }
                        }
                        return ok(dims);
                    });
}

CheckReport check_ihara_closure(Context& ctx, std::size_t max_weight) {
    return run_grid(
        "ihara-closure", Json{{"max_weight", max_weight}}, make_grid(2, max_weight, max_weight), ctx.jobs(),
        [&](std::size_t m, std::size_t k) {
            std::size_t pairs = 0;
            std::size_t brackets = 0;
            for (std::size_t m1 = 1; m1 < m; ++m1) {
                const std::size_t m2 = m - m1;
                for (std::size_t k1 = m1; k1 + m2 <= k; ++k1) {
                    const std::size_t k2 = k - k1;
                    if (std::make_pair(m1, k1) > std::make_pair(m2, k2)) continue;
                    const Subspace& a = ctx.ls(m1, k1);
                    const Subspace& b = ctx.ls(m2, k2);
                    if (a.dim() == 0 || b.dim() == 0) continue;
                    ++pairs;
                    const ClosureReport rep = check_closure(LsBasis{m1, k1, a}, LsBasis{m2, k2, b}, LsBasis{m, k, ctx.ls(m, k)});
                    brackets += rep.pairs_checked;
                    if (!rep.pass()) {
                        const auto& w = rep.failures.front();
                        return fail(Json{{"left", {m1, k1, w.i}}, {"right", {m2, k2, w.j}}, {"bracket", to_json(w.bracket)}},
                                    Json{{"bidegree_pairs", pairs}, {"brackets", brackets}});
                    }
                }
            }
            return ok(Json{{"bidegree_pairs", pairs}, {"brackets", brackets}});
        });
}

CheckReport check_coideal_U(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    const VSubspaceFn c = [&ctx](std::size_t m, std::size_t k) -> const Subspace& { return ctx.u_in_v(m, k); };
    return run_grid("coideal-U", range_params(max_depth, max_weight), make_grid(0, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const VBasis& vb = vbasis(m, k);
                        return coideal_result(basis_vectors(vb, ctx.u_in_v(m, k)), pullback_coihara, c);
                    });
}

CheckReport check_coideal_WR(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    const VSubspaceFn c = [&ctx](std::size_t m, std::size_t k) -> const Subspace& { return ctx.wr_in_v(m, k); };
    return run_grid("coideal-WR", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const VBasis& vb = vbasis(m, k);
                        return coideal_result(basis_vectors(vb, ctx.wr_in_v(m, k)), cobracket_delta, c);
                    });
}

CheckReport check_coideal_F(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    const VSubspaceFn c = [&ctx](std::size_t m, std::size_t k) -> const Subspace& { return ctx.f(m, k); };
    return run_grid("coideal-F", range_params(max_depth, max_weight), make_grid(0, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const VBasis& vb = vbasis(m, k);
                        return coideal_result(basis_vectors(vb, ctx.f(m, k)), pullback_coihara, c);
                    });
}

CheckReport check_cobracket_comparison(Context& ctx, std::size_t max_depth, std::size_t max_weight, bool use_F) {
    const VSubspaceFn c = [&ctx, use_F](std::size_t m, std::size_t k) -> const Subspace& {
        return use_F ? ctx.f(m, k) : ctx.wr_in_v(m, k);
    };
    return run_grid(use_F ? "cobracket-comparison-F" : "cobracket-comparison", range_params(max_depth, max_weight),
                    make_grid(1, max_depth, max_weight), ctx.jobs(), [&](std::size_t m, std::size_t k) {
                        const VBasis& vb = vbasis(m, k);
                        std::vector<VVector> gens;
                        for (std::size_t i = 0; i < vb.w_size(); ++i) gens.emplace_back(vb.indices()[i]);
                        return coideal_result(
                            gens, [](const VVector& v) { return cobracket_delta(v) - pullback_coihara(v); }, c);
                    });
}

CheckReport check_hm_duality(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("hm-duality", range_params(max_depth, max_weight), make_grid(2, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const std::size_t d = k - m;
                        const Subspace& dsh = ctx.dsh(m, k);
                        const Subspace& wr = ctx.wr(m, k);
                        const VBasis& vb = vbasis(m, k);
                        std::vector<SparseVector> images;
                        const Subspace annihilator = orthogonal_complement(dsh);
                        for (const auto& form : annihilator.basis()) {
                            images.push_back(w_coords(vb, h_map(m, d, form)));
                        }
                        const Subspace image = Subspace::span(images, vb.w_size());
                        Json dims{{"Dsh", dsh.dim()}, {"W_over_WR", wr.ambient_dim() - wr.dim()}, {"h_image", image.dim()}};
                        if (!(image == wr)) {
                            for (const auto& v : image.basis()) {
                                if (!wr.contains(v)) return fail(Json{{"h_image_not_in_WR", to_json(vb.vector(embed_w(vb, v)))}}, dims);
                            }
                            for (const auto& v : wr.basis()) {
                                if (!image.contains(v)) return fail(Json{{"WR_not_in_h_image", to_json(vb.vector(embed_w(vb, v)))}}, dims);
                            }
                        }
                        return ok(dims);
                    });
}

CheckReport check_fm_isomorphism(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("fm-isomorphism", range_params(max_depth, max_weight), make_grid(2, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const std::size_t d = k - m;
                        const Subspace& l = ctx.ls(m, k);
                        const Subspace& dsh = ctx.dsh(m, k);
                        const WordBasis& wb = wbasis(m, k);
                        std::vector<SparseVector> images;
                        for (const auto& psi : l.basis()) {
                            const CommPoly img = f_map(m, wb.poly(psi));
                            SparseVector c = coords_of(img, d);
                            if (!dsh.contains(c)) {
                                return fail(Json{{"psi", to_json(wb.poly(psi))}, {"f_psi_not_in_Dsh", to_json(img)}},
                                            Json{{"ls", l.dim()}, {"Dsh", dsh.dim()}});
                            }
                            images.push_back(std::move(c));
                        }
                        const std::size_t r = Subspace::span(images, dsh.ambient_dim()).dim();
                        Json dims{{"ls", l.dim()}, {"Dsh", dsh.dim()}, {"rank", r}};
                        if (r != l.dim()) return fail(Json{{"reason", "f_m is not injective on ls"}}, dims);
                        if (l.dim() != dsh.dim()) return fail(Json{{"reason", "dim ls != dim Dsh"}}, dims);
                        return ok(dims);
                    });
}

CheckReport check_fm_compatibility(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("fm-compatibility", range_params(max_depth, max_weight), make_grid(2, max_depth, max_weight),
                    ctx.jobs(), [&](std::size_t m, std::size_t k) {
                        const std::size_t d = k - m;
                        const auto mons = monomial_basis(m, d);
                        std::map<Exponents, std::size_t> col_of;
                        for (std::size_t j = 0; j < mons.size(); ++j) col_of.emplace(mons[j], j);
                        const WordBasis& wb = wbasis(m, k);
                        SparseMatrix composite(wb.size(), mons.size());
                        SparseMatrix dual_f(wb.size(), mons.size());
                        for (std::size_t j = 0; j < mons.size(); ++j) {
                            const SparseVector col = wb.coords(phi(h_map(m, d, SparseVector::unit(mons.size(), j))));
                            for (const auto& [i, c] : col.entries()) composite.set(i, j, c);
                        }
                        for (std::size_t i = 0; i < wb.size(); ++i) {
                            const CommPoly image = f_map(m, NcPoly(wb.words()[i]));
                            for (const auto& [e, c] : image.terms()) dual_f.set(i, col_of.at(e), c);
                        }
                        Json dims{{"words", wb.size()}, {"monomials", mons.size()}};
                        if (composite == dual_f) return ok(dims);
                        for (std::size_t i = 0; i < wb.size(); ++i) {
                            for (std::size_t j = 0; j < mons.size(); ++j) {
                                if (composite.at(i, j) != dual_f.at(i, j)) {
                                    return fail(Json{{"word", wb.words()[i].str()},
                                                     {"monomial", mons[j]},
                                                     {"composite", to_json(composite.at(i, j))},
                                                     {"dual_f", to_json(dual_f.at(i, j))}},
                                                dims);
                                }
                            }
                        }
                        return fail(Json{{"reason", "matrices differ"}}, dims);
                    });
}

CheckReport check_cojacobi(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    const VSubspaceFn c = [&ctx](std::size_t m, std::size_t k) -> const Subspace& { return ctx.f(m, k); };
    auto memo = std::make_shared<Memo<VIndex, VTensor2>>();
    auto delta_q = [memo, c](const VIndex& rep) -> const VTensor2& {
        return *memo->get(rep, [&] { return project_quotient(pullback_coihara(VVector(rep)), c); });
    };
    return run_grid("cojacobi", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const VBasis& vb = vbasis(m, k);
                        const auto free = ctx.f(m, k).free_columns();
                        Json dims{{"V_over_F", free.size()}};
                        for (std::size_t col : free) {
                            const VIndex& e = vb.indices()[col];
                            const VTensor2& d = delta_q(e);
                            if (!(d + swap_factors(d)).is_zero()) {
                                return fail(Json{{"element", to_json(e)}, {"reason", "not co-antisymmetric"}, {"delta", to_json(d)}},
                                            dims);
                            }
                            Tensor3 iterated;
                            for (const auto& [p, a] : d) {
                                for (const auto& [q, b] : delta_q(p.first)) iterated.add({q.first, q.second, p.second}, a * b);
                            }
                            Tensor3 alternator;
                            for (const auto& [key, a] : iterated) {
                                const auto& [x, y, z] = key;
                                alternator.add({x, y, z}, a);
                                alternator.add({y, z, x}, a);
                                alternator.add({z, x, y}, a);
                            }
                            if (!alternator.is_zero()) {
                                return fail(Json{{"element", to_json(e)}, {"alternator", tensor3_json(alternator)}}, dims);
                            }
                        }
                        return ok(dims);
                    });
}

CheckReport check_parity(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    Grid grid;
    for (const auto& [m, k] : make_grid(1, max_depth, max_weight)) {
        if ((m + k) % 2 == 1) grid.emplace_back(m, k);
    }
    return run_grid("parity", range_params(max_depth, max_weight), grid, ctx.jobs(), [&](std::size_t m, std::size_t k) {
        const std::size_t ls = ctx.ls(m, k).dim();
        const Subspace& wr = ctx.wr(m, k);
        const std::size_t d = wr.ambient_dim() - wr.dim();
        Json dims{{"ls", ls}, {"D", d}};
        std::size_t dsh = 0;
        if (m >= 2) {
            dsh = ctx.dsh(m, k).dim();
            dims["dsh"] = dsh;
        } else {
            dims["dsh"] = nullptr;
        }
        if (ls != 0 || d != 0 || dsh != 0) return fail(Json{{"reason", "nonzero dimension at odd k + m"}}, dims);
        return ok(dims);
    });
}

CheckReport check_dimension_agreement(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("dims-agreement", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const DimRow row = dim_row(ctx, m, k);
                        if (!row.consistent()) return fail(Json{{"reason", "dimensions disagree"}}, row_json(row));
                        return ok(row_json(row));
                    });
}

CheckReport check_cyclic_symmetry(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    return run_grid("cyclic-symmetry", range_params(max_depth, max_weight), make_grid(1, max_depth, max_weight),
                    ctx.jobs(), [&](std::size_t m, std::size_t k) {
                        if (cycle_check(m, k)) return ok();
                        return fail(Json{{"reason", "a coefficient of the cyclic difference is not in W_R"}});
                    });
}

CheckReport check_coihara_adjoint(Context& ctx, std::size_t max_weight) {
    std::vector<Word> words;
    for (std::size_t w = 0; w <= max_weight; ++w) {
        for (std::size_t m = 0; m <= w; ++m) {
            for (auto& word : words_of_bidegree(m, w)) words.push_back(std::move(word));
        }
    }
    // Brackets of all pairs with |a| + |b| <= max_weight.
    struct Entry {
        Word a;
        Word b;
        NcPoly bracket;
    };
    std::vector<Entry> entries;
    for (const auto& a : words) {
        for (const auto& b : words) {
            if (a.weight() + b.weight() <= max_weight) entries.push_back({a, b, {}});
        }
    }
    parallel_for(entries.size(), ctx.jobs(), [&](std::size_t i) {
        entries[i].bracket = ihara_bracket(NcPoly(entries[i].a), NcPoly(entries[i].b));
    });
    Grid grid;
    for (std::size_t k = 0; k <= max_weight; ++k) {
        for (std::size_t m = 0; m <= k; ++m) grid.emplace_back(m, k);
    }
    return run_grid("coihara-adjoint", Json{{"max_weight", max_weight}}, grid, ctx.jobs(), [&](std::size_t m, std::size_t k) {
        std::size_t compared = 0;
        for (const auto& w : words_of_bidegree(m, k)) {
            const Tensor2 co = co_ihara(w);
            for (const auto& [pair, c] : co) {
                if (pair.first.weight() + pair.second.weight() > max_weight) {
                    return fail(Json{{"word", w.str()}, {"reason", "co_ihara term outside the weight range"}});
                }
            }
            for (const auto& e : entries) {
                ++compared;
                const Rational lhs = e.bracket.coeff(w);
                const Rational rhs = co.coeff({e.a, e.b});
                if (lhs != rhs) {
                    return fail(Json{{"a", e.a.str()}, {"b", e.b.str()}, {"w", w.str()}, {"bracket_coeff", to_json(lhs)},
                                     {"coihara_coeff", to_json(rhs)}});
                }
            }
        }
        return ok(Json{{"comparisons", compared}});
    });
}

CheckReport check_coihara_depth1(Context& ctx, std::size_t max_weight) {
    return run_grid("coihara-depth1", Json{{"max_weight", max_weight}}, make_grid(1, 1, max_weight), ctx.jobs(),
                    [&](std::size_t m, std::size_t k) {
                        const auto words = words_of_bidegree(m, k);
                        for (const auto& w : words) {
                            const Tensor2 co = co_ihara(w);
                            if (!co.is_zero()) return fail(Json{{"word", w.str()}, {"co_ihara", to_json(co)}});
                        }
                        return ok(Json{{"words", words.size()}});
                    });
}

CheckReport check_q_shuffle(Context& ctx, std::size_t max_truncation) {
    const std::size_t N = max_truncation;
    const Grid grid{{2, N}, {3, N}, {4, N}};
    return run_grid("q-shuffle", Json{{"max_truncation", N}}, grid, ctx.jobs(), [&](std::size_t n, std::size_t) {
        const std::size_t p = n / 2;
        const std::size_t q = n - p;
        std::vector<CommPoly> left;
        std::vector<CommPoly> right;
        for (std::size_t i = 1; i <= p; ++i) left.push_back(var(n, i));
        for (std::size_t i = p + 1; i <= n; ++i) right.push_back(var(n, i));
        const auto lhs = series_product(q_series_at(left, n, N), q_series_at(right, n, N), shuffle_op);
        TruncatedSeries<NcPoly> rhs(n, N);
        for (const auto& sigma : shuffles(p, n)) {
            std::vector<CommPoly> forms(n, CommPoly(n));
            for (std::size_t i = 0; i < n; ++i) forms[static_cast<std::size_t>(sigma[i]) - 1] = var(n, i + 1);
            rhs += q_series_at(forms, n, N);
        }
        return series_equal(lhs, rhs, Json{{"p", p}, {"q", q}, {"N", N}});
    });
}

CheckReport check_q_lemma(Context& ctx, std::size_t max_truncation) {
    const std::size_t N = max_truncation;
    // m = 0, 1, 2 selects Q = 1, z, Q_1(t'').
    const Grid grid{{0, N}, {1, N}, {2, N}};
    return run_grid("q-lemma", Json{{"max_truncation", N}}, grid, ctx.jobs(), [&](std::size_t which, std::size_t) {
        const std::size_t n = 3;
        TruncatedSeries<NcPoly> Q(n, N);
        if (which == 0) Q.add(Exponents(n, 0), unit_poly());
        if (which == 1) Q.add(Exponents(n, 0), word_poly("z"));
        if (which == 2) Q = q_series_at({var(n, 3)}, n, N);
        const CommPoly t = var(n, 1);
        const CommPoly tp = var(n, 2);
        const auto lhs = series_product(geometric_x(t, n, N), series_product(times_z(geometric_x(tp, n, N)), Q, concat_op),
                                        shuffle_op);
        const auto rhs = series_product(times_z(geometric_x(t + tp, n, N)),
                                        series_product(geometric_x(t, n, N), Q, shuffle_op), concat_op);
        const char* names[] = {"1", "z", "Q_1"};
        return series_equal(lhs, rhs, Json{{"Q", names[which]}, {"N", N}});
    });
}

CheckReport check_q_recursion(Context& ctx, std::size_t max_truncation) {
    const std::size_t N = max_truncation;
    const Grid grid{{1, N}, {2, N}, {3, N}};
    return run_grid("q-recursion", Json{{"max_truncation", N}}, grid, ctx.jobs(), [&](std::size_t n, std::size_t) {
        // Variables in reversed order, so t_{a_1} = t_n.
        std::vector<CommPoly> forms;
        for (std::size_t i = 1; i <= n; ++i) forms.push_back(var(n, n + 1 - i));
        const std::vector<CommPoly> rest(forms.begin() + 1, forms.end());
        const auto rhs = times_z(series_product(geometric_x(forms[0], n, N), q_series_at(rest, n, N), shuffle_op));
        return series_equal(q_series_at(forms, n, N), rhs, Json{{"n", n}, {"N", N}});
    });
}

CheckReport check_p_product(Context& ctx, std::size_t max_depth, std::size_t max_truncation) {
    const std::size_t N = max_truncation;
    Grid grid;
    for (std::size_t m = 2; m <= max_depth; ++m) grid.emplace_back(m, N);
    return run_grid("p-product", Json{{"max_depth", max_depth}, {"max_truncation", N}}, grid, ctx.jobs(),
                    [&](std::size_t m, std::size_t) {
                        const std::size_t n = m + 1;
                        const auto full = p_series(m, N);
                        for (std::size_t k = 1; k + 1 <= m; ++k) {
                            std::vector<CommPoly> a{CommPoly(n)};
                            std::vector<CommPoly> b;
                            for (std::size_t i = k + 1; i <= m; ++i) a.push_back(var(n, i + 1));
                            for (std::size_t i = 0; i <= k; ++i) b.push_back(var(n, i + 1));
                            std::vector<CommPoly> c(a.begin() + 1, a.end());
                            std::vector<CommPoly> d(b);
                            d.push_back(CommPoly(n));
                            for (const auto& [x, y] : {std::make_pair(a, b), std::make_pair(c, d)}) {
                                auto r = series_equal(series_product(p_series_at(x, n, N), p_series_at(y, n, N), concat_op), full,
                                                      Json{{"m", m}, {"split", k}, {"N", N}});
                                if (!r.pass) return r;
                            }
                        }
                        return ok(Json{{"splits", m - 1}, {"N", N}});
                    });
}

CheckReport check_coihara_p(Context& ctx, std::size_t max_depth, std::size_t max_truncation) {
    const std::size_t N = max_truncation;
    Grid grid;
    for (std::size_t m = 0; m <= max_depth; ++m) grid.emplace_back(m, N);
    return run_grid("coihara-p", Json{{"max_depth", max_depth}, {"max_truncation", N}}, grid, ctx.jobs(),
                    [&](std::size_t m, std::size_t) {
                        const std::size_t n = m + 1;
                        auto P = [&](const std::vector<std::size_t>& idx) {
                            std::vector<CommPoly> forms;
                            for (std::size_t i : idx) forms.push_back(var(n, i + 1));
                            return p_series_at(forms, n, N);
                        };
                        auto range = [](std::size_t lo, std::size_t hi) {
                            std::vector<std::size_t> out;
                            for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
                            return out;
                        };
                        auto join = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
                            a.insert(a.end(), b.begin(), b.end());
                            return a;
                        };
                        const auto lhs = series_map(p_series(m, N), [](const NcPoly& p) { return co_ihara(p); });
                        TruncatedSeries<Tensor2> rhs(n, N);
                        for (std::size_t i = 0; i <= m; ++i) {
                            for (std::size_t k = 0; k <= m; ++k) {
                                if (i == 0) {
                                    rhs += series_product(P(range(k, m)), P(range(0, k)), wedge_op);
                                } else if (k >= i) {
                                    rhs += series_product(P(join(range(0, i - 1), range(k, m))), P(range(i, k)), wedge_op);
                                } else {
                                    rhs += series_product(P(range(k, i - 1)), P(join(range(0, k), range(i, m))), wedge_op);
                                }
                            }
                        }
                        return series_equal(lhs, rhs, Json{{"m", m}, {"N", N}});
                    });
}

CheckReport check_series_identities(Context& ctx, std::size_t max_depth, std::size_t max_truncation) {
    CheckReport out{"series-identities", Json{{"max_depth", max_depth}, {"max_truncation", max_truncation}}, {}};
    for (const auto& rep : {check_q_lemma(ctx, max_truncation), check_q_recursion(ctx, max_truncation),
                            check_p_product(ctx, max_depth, max_truncation), check_coihara_p(ctx, std::min<std::size_t>(max_depth, 3), max_truncation)}) {
        for (auto r : rep.results) {
            r.dim_data["identity"] = rep.check;
            out.results.push_back(std::move(r));
        }
    }
    return out;
}

// --- Registry -------------------------------------------------------------------------------

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry{
        {"parity", "dim ls = dim W/W_R = dim Dsh = 0 at odd k + m", check_parity},
        {"dims-agreement", "dim ls = dim W/W_R = dim V/F = dim Dsh", check_dimension_agreement},
        {"orthogonality", "<phi(F), ls> = 0 and dim F + dim ls = C(k,m)", check_orthogonality},
        {"phiF-ls-perp", "phi(F) = ls^perp = the five-summand span", check_phiF_equals_ls_perp},
        {"ihara-closure", "ls is closed under the Ihara bracket (total weight <= max-weight)",
         [](Context& c, std::size_t, std::size_t k) { return check_ihara_closure(c, k); }},
        {"coihara-adjoint", "co_ihara is the adjoint of the Ihara bracket (weights <= max-weight)",
         [](Context& c, std::size_t, std::size_t k) { return check_coihara_adjoint(c, k); }},
        {"coihara-depth1", "co_ihara vanishes on depth-1 words",
         [](Context& c, std::size_t, std::size_t k) { return check_coihara_depth1(c, k); }},
        {"cyclic-symmetry", "cyclic symmetry of the colon series modulo W_R", check_cyclic_symmetry},
        {"coideal-U", "phi(U) is a coideal for co_ihara", check_coideal_U},
        {"coideal-WR", "W_R is a coideal for delta~", check_coideal_WR},
        {"coideal-F", "F is a coideal for the pullback of co_ihara", check_coideal_F},
        {"cobracket-comparison", "(delta~ - pullback co_ihara)(W) in W_R (x) V + V (x) W_R",
         [](Context& c, std::size_t m, std::size_t k) { return check_cobracket_comparison(c, m, k, false); }},
        {"cobracket-comparison-F", "(delta~ - pullback co_ihara)(W) in F (x) V + V (x) F",
         [](Context& c, std::size_t m, std::size_t k) { return check_cobracket_comparison(c, m, k, true); }},
        {"cojacobi", "the cobracket on V/F is co-antisymmetric and satisfies co-Jacobi", check_cojacobi},
        {"hm-duality", "h_m(Dsh_m') = (W_R)_m", check_hm_duality},
        {"fm-isomorphism", "f_m restricts to an isomorphism ls_m -> Dsh_m", check_fm_isomorphism},
        {"fm-compatibility", "beta_m o i o h_m = dual of f_m", check_fm_compatibility},
        {"q-shuffle", "Q_p sh Q_q = sum over shuffles of Q_{p+q} (truncation = max-weight)",
         [](Context& c, std::size_t, std::size_t k) { return check_q_shuffle(c, k); }},
        {"series-identities", "Q lemma, Q recursion, P product law, co-Ihara of P (truncation = max-weight)",
         check_series_identities},
    };
    return registry;
}

const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : check_registry()) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::vector<DimRow> dimension_table(Context& ctx, std::size_t max_depth, std::size_t max_weight) {
    const Grid grid = make_grid(1, max_depth, max_weight);
    std::vector<DimRow> rows(grid.size());
    parallel_for(grid.size(), ctx.jobs(), [&](std::size_t i) { rows[i] = dim_row(ctx, grid[i].first, grid[i].second); });
    return rows;
}

}  // namespace lsdual
