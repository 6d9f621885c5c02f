// lsdual: bases, dimension tables and verification reports for ls and its duals.

#include "lsdual/cache.hpp"
#include "lsdual/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <thread>

using namespace lsdual;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string cache_dir;
    std::size_t jobs = 0;
    bool no_timing = false;
};

std::string resolve_cache_dir(const Globals& g) {
    if (!g.cache_dir.empty()) return g.cache_dir;
    if (const char* env = std::getenv("LSDUAL_CACHE_DIR"); env && *env) return env;
    return {};
}

std::unique_ptr<DiskStore> open_store(const Globals& g) {
    const std::string dir = resolve_cache_dir(g);
    if (dir.empty()) return nullptr;
    return std::make_unique<DiskStore>(dir);
}

std::size_t job_count(const Globals& g) {
    if (g.jobs > 0) return g.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

Json poly_list(const WordBasis& wb, const Subspace& s) {
    Json out = Json::array();
    for (const auto& v : s.basis()) out.push_back(to_json(wb.poly(v)));
    return out;
}

Json vvector_list(const VBasis& vb, const Subspace& s, bool w_only) {
    Json out = Json::array();
    for (const auto& v : s.basis()) {
        SparseVector full(vb.size());
        for (const auto& [i, c] : v.entries()) full.push_back(i, c);
        out.push_back(to_json(vb.vector(w_only ? full : v)));
    }
    return out;
}

Json basis_json(Context& ctx, const std::string& kind, std::size_t m, std::size_t k) {
    if (kind == "ls") {
        if (m < 1 || k < m) throw UsageError("ls needs 1 <= m <= k");
        const Subspace& s = ctx.ls(m, k);
        return Json{{"kind", kind}, {"m", m}, {"k", k}, {"dim", s.dim()}, {"basis", poly_list(WordBasis(m, k), s)}};
    }
    if (kind == "dsh") {
        // Arguments are (m, d): polynomials of degree d in m variables.
        const std::size_t d = k;
        if (m < 2) throw UsageError("dsh needs m >= 2");
        const Subspace& s = ctx.dsh(m, m + d);
        Json basis = Json::array();
        for (const auto& v : s.basis()) basis.push_back(to_json(poly_from_coords(m, d, v)));
        return Json{{"kind", kind}, {"m", m}, {"d", d}, {"k", m + d}, {"dim", s.dim()}, {"basis", std::move(basis)}};
    }
    if (kind == "wr") {
        if (m < 1 || k < m) throw UsageError("wr needs 1 <= m <= k");
        const Subspace& s = ctx.wr(m, k);
        return Json{{"kind", kind},
                    {"m", m},
                    {"k", k},
                    {"dim", s.dim()},
                    {"quotient_dim", s.ambient_dim() - s.dim()},
                    {"basis", vvector_list(VBasis(m, k), s, true)}};
    }
    if (kind == "vf") {
        if (k < m) throw UsageError("vf needs m <= k");
        const Subspace& f = ctx.f(m, k);
        const VBasis vb(m, k);
        Json reps = Json::array();
        for (std::size_t c : f.free_columns()) reps.push_back(to_json(vb.indices()[c]));
        return Json{{"kind", kind},
                    {"m", m},
                    {"k", k},
                    {"dim", f.ambient_dim() - f.dim()},
                    {"representatives", std::move(reps)},
                    {"F", Json{{"dim", f.dim()}, {"basis", vvector_list(vb, f, false)}}}};
    }
    throw UsageError("unknown basis kind '" + kind + "' (expected ls, dsh, wr or vf)");
}

void print_dims(const std::vector<DimRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "m,k,ls,D,dsh,vf\n";
        for (const auto& r : rows) {
            std::cout << r.m << ',' << r.k << ',' << r.ls << ',' << r.d << ','
                      << (r.dsh ? std::to_string(*r.dsh) : std::string("-")) << ',' << r.vf << '\n';
        }
        return;
    }
    Json out = Json::array();
    for (const auto& r : rows) {
        Json j{{"m", r.m}, {"k", r.k}, {"ls", r.ls}, {"D", r.d}};
        j["dsh"] = r.dsh ? Json(*r.dsh) : Json(nullptr);
        j["vf"] = r.vf;
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << '\n';
}

void add_globals(CLI::App& app, Globals& g) {
    app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $LSDUAL_CACHE_DIR; no caching if unset)");
    app.add_option("--jobs", g.jobs, "Worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    app.add_flag("--no-timing", g.no_timing, "Omit millis fields from reports");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bases, dimension tables and verification reports for ls and its duals"};
    app.require_subcommand(1);
    Globals g;
    add_globals(app, g);

    std::string kind;
    std::size_t basis_m = 0;
    std::size_t basis_k = 0;
    auto* basis = app.add_subcommand("basis", "Print a canonical basis as JSON (dsh takes m d, the others m k)");
    basis->add_option("kind", kind, "ls | dsh | wr | vf")->required();
    basis->add_option("m", basis_m, "Depth")->required();
    basis->add_option("k", basis_k, "Weight (degree for dsh)")->required();

    std::size_t max_depth = 4;
    std::size_t max_weight = 8;
    std::string format = "json";
    auto* dims = app.add_subcommand("dims", "Dimension table: ls, W/W_R, Dsh and V/F");
    dims->add_option("--max-depth", max_depth, "Largest depth m (>= 1)");
    dims->add_option("--max-weight", max_weight, "Largest weight k (>= max-depth)");
    dims->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string check_id;
    auto* verify = app.add_subcommand("verify", "Run a check, or all of them, and print JSON reports");
    verify->add_option("check", check_id, "Check id or 'all'")->required();
    verify->add_option("--max-depth", max_depth, "Largest depth m (>= 1)");
    verify->add_option("--max-weight", max_weight, "Largest weight k (>= 1)");

    std::string cache_action;
    auto* cache = app.add_subcommand("cache", "Inspect or empty the basis cache");
    cache->add_option("action", cache_action, "status | clear")->required()->check(CLI::IsMember({"status", "clear"}));

    for (auto* sub : {basis, dims, verify, cache}) sub->fallthrough();

    std::string id_list = "check ids:";
    for (const auto& c : check_registry()) id_list += "\n  " + c.id + "  " + c.description;
    verify->footer(id_list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    auto usage = [&](const CLI::App* sub, const std::string& msg) {
        std::cerr << "error: " << msg << "\n\n" << sub->help();
        return kExitUsage;
    };

    try {
        if (cache->parsed()) {
            const std::string dir = resolve_cache_dir(g);
            if (dir.empty()) return usage(cache, "no cache directory: pass --cache-dir or set LSDUAL_CACHE_DIR");
            DiskStore store(dir);
            if (cache_action == "status") {
                const auto entries = store.list();
                std::cout << entries.size() << " entries in " << dir << '\n';
                for (const auto& e : entries) {
                    std::cout << e.kind << ' ' << e.m << ' ' << e.k << ' ' << e.bytes << (e.stale ? " stale" : "") << '\n';
                }
            } else {
                std::cout << "removed " << store.clear() << " entries from " << dir << '\n';
            }
            return kExitPass;
        }

        auto store = open_store(g);
        Context ctx(job_count(g), store.get());

        if (basis->parsed()) {
            try {
                std::cout << basis_json(ctx, kind, basis_m, basis_k).dump(2) << '\n';
            } catch (const UsageError& e) {
                return usage(basis, e.what());
            }
            return kExitPass;
        }
        if (dims->parsed()) {
            if (max_depth < 1) return usage(dims, "--max-depth must be at least 1");
            if (max_weight < max_depth) return usage(dims, "--max-weight must be at least --max-depth");
            print_dims(dimension_table(ctx, max_depth, max_weight), format);
            return kExitPass;
        }
        if (verify->parsed()) {
            if (max_depth < 1) return usage(verify, "--max-depth must be at least 1");
            if (max_weight < 1) return usage(verify, "--max-weight must be at least 1");
            const bool timing = !g.no_timing;
            if (check_id == "all") {
                Json reports = Json::array();
                bool pass = true;
                for (const auto& c : check_registry()) {
                    const CheckReport r = c.run(ctx, max_depth, max_weight);
                    pass = pass && r.pass();
                    reports.push_back(r.to_json(timing));
                }
                const Json out{{"check", "all"},
                               {"params", {{"max_depth", max_depth}, {"max_weight", max_weight}}},
                               {"pass", pass},
                               {"reports", std::move(reports)}};
                std::cout << out.dump(2) << '\n';
                return pass ? kExitPass : kExitFail;
            }
            const CheckInfo* c = find_check(check_id);
            if (!c) return usage(verify, "unknown check '" + check_id + "'");
            const CheckReport r = c->run(ctx, max_depth, max_weight);
            std::cout << r.to_json(timing).dump(2) << '\n';
            return r.pass() ? kExitPass : kExitFail;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
