// Acceptance run: one PASS/FAIL line per criterion on stdout, witnesses on stderr.

#include "lsdual/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <thread>
#include <vector>

using namespace lsdual;

namespace {

struct Criterion {
    int number;
    const char* name;
    std::function<std::vector<CheckReport>(Context&)> run;
};

}  // namespace

int main() {
    Context ctx(std::max(1u, std::thread::hardware_concurrency()));

    const std::vector<Criterion> criteria{
        {1, "parity vanishing, m <= 4, k <= 12",
         [](Context& c) { return std::vector{check_parity(c, 4, 12)}; }},
        {2, "ls = W/W_R = Dsh dimensions, m <= 4, k <= 10",
         [](Context& c) { return std::vector{check_dimension_agreement(c, 4, 10)}; }},
        {3, "Ihara closure of ls, total weight <= 9",
         [](Context& c) { return std::vector{check_ihara_closure(c, 9)}; }},
        {4, "phi(F) orthogonal to ls, dim F + dim ls = C(k,m), m <= 4, k <= 10",
         [](Context& c) { return std::vector{check_orthogonality(c, 4, 10)}; }},
        {5, "co_ihara adjoint to the Ihara bracket, weight <= 6",
         [](Context& c) { return std::vector{check_coihara_adjoint(c, 6)}; }},
        {6, "co_ihara vanishes in depth 1, weight <= 8",
         [](Context& c) { return std::vector{check_coihara_depth1(c, 8)}; }},
        {7, "Q-series shuffle law, truncation 6",
         [](Context& c) { return std::vector{check_q_shuffle(c, 6)}; }},
        {8, "cobracket comparison modulo W_R and modulo F, m <= 3, k <= 8",
         [](Context& c) {
             return std::vector{check_cobracket_comparison(c, 3, 8, false), check_cobracket_comparison(c, 3, 8, true)};
         }},
        {9, "phi(U) and W_R are coideals, k <= 8",
         [](Context& c) { return std::vector{check_coideal_U(c, 8, 8), check_coideal_WR(c, 8, 8)}; }},
        {10, "co-Jacobi on V/F, m <= 3, k <= 8",
         [](Context& c) { return std::vector{check_cojacobi(c, 3, 8)}; }},
        {11, "beta o i o h_m equals the dual of f_m, m = 2, 3, k <= 8",
         [](Context& c) { return std::vector{check_fm_compatibility(c, 3, 8)}; }},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        std::vector<CheckReport> reports;
        try {
            reports = cr.run(ctx);
            for (const auto& r : reports) pass = pass && r.pass();
        } catch (const std::exception& e) {
            pass = false;
            std::cerr << "criterion " << cr.number << ": " << e.what() << '\n';
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %s (%.2fs)\n", pass ? "PASS" : "FAIL", cr.number, cr.name, secs);
        std::fflush(stdout);
        if (pass) continue;
        ++failures;
        for (const auto& r : reports) {
            if (r.pass()) continue;
            const BidegreeResult& bad = r.results.back();
            std::cerr << "criterion " << cr.number << ": " << r.check << " fails at (m,k) = (" << bad.m << ',' << bad.k
                      << "): " << bad.witness.value_or(Json()).dump() << '\n';
        }
    }
    return failures == 0 ? 0 : 1;
}
