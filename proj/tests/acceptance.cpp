// Acceptance suite: runs every criterion at its stated budget and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ordlab/derivation.hpp"
#include "ordlab/io.hpp"
#include "ordlab/obstacle.hpp"
#include "ordlab/scattered.hpp"
#include "ordlab/shift.hpp"
#include "ordlab/tree.hpp"
#include "support/gen.hpp"
#include "support/hyperplane_oracle.hpp"
#include "support/lex_oracle.hpp"

using namespace ordlab;
using namespace ordlab::testing;

namespace {

struct criterion_result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(criterion_result&)>& body) {
    criterion_result r;
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds)
        r.require(false, "exceeded the " + std::to_string(budget_seconds) + " s budget");
    std::printf("[%2d] %s (%.2f s / %g s) %s%s%s\n", number, r.pass ? "PASS" : "FAIL", elapsed,
                budget_seconds, title.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
}

ordinal o(const char* text) { return parse_ordinal(text); }

// ---- CLI helpers ---------------------------------------------------------

struct cli_run {
    int status = -1;
    std::string out;
};

cli_run run_cli(const std::string& args) {
    cli_run r;
    std::string command = std::string(ORDLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

int main() {
    const ordinal w = ordinal::omega();

    run_criterion(1, "symbolic closed forms, exact", 1.0, [&](criterion_result& r) {
        r.require(dentability_c(w) == o("w^2"), "dz(w)");
        r.require(dentability_c(o("w^(w^2)")) == o("w^4"), "dz(w^(w^2))");
        r.require(dentability_c(o("w^(w^w)")) == o("w^(w+1)"), "dz absorption");
        const std::vector<std::pair<const char*, const char*>> sz_cases = {
            {"0", "w"}, {"1", "w^2"}, {"2", "w^3"}, {"w", "w^(w+1)"}};
        const std::vector<std::pair<const char*, const char*>> l2_cases = {
            {"0", "w^2"}, {"1", "w^3"}, {"2", "w^4"}, {"w", "w^(w+1)"}};
        for (std::size_t i = 0; i < sz_cases.size(); ++i) {
            ordinal alpha = omega_pow(omega_pow(o(sz_cases[i].first)));
            r.require(szlenk_c(alpha) == o(sz_cases[i].second),
                      std::string("sz at alpha=") + sz_cases[i].first);
            r.require(szlenk_l2_c(alpha) == o(l2_cases[i].second),
                      std::string("sz-l2 at alpha=") + l2_cases[i].first);
        }
    });

    run_criterion(2, "Theorem-1 classifier on 50 generated ordinals", 1.0,
                  [&](criterion_result& r) {
        rng gen(20240001);
        for (int i = 0; i < 50; ++i) {
            ordinal alpha = gen_alpha_in_classification_range(gen);
            ordinal beta = gen_alpha_in_classification_range(gen);
            const ordinal& lo = std::min(alpha, beta);
            const ordinal& hi = std::max(alpha, beta);
            bool direct = hi < pow_omega(lo);
            r.require(iso_equivalent(alpha, beta) == direct, "iso_equivalent vs direct");

            ordinal gamma = iso_class(alpha);
            r.require(omega_pow(omega_pow(gamma)) <= alpha, "class lower bound");
            r.require(alpha < omega_pow(omega_pow(successor(gamma))), "class upper bound");
        }
    });

    run_criterion(3, "ordinal oracle equivalence, exhaustive below w^3", 30.0,
                  [&](criterion_result& r) {
        std::vector<lex_ordinal> all;
        for (std::uint64_t a = 0; a <= 4; ++a)
            for (std::uint64_t b = 0; b <= 4; ++b)
                for (std::uint64_t c = 0; c <= 4; ++c) all.push_back(triple(a, b, c));
        for (const auto& la : all)
            for (const auto& lb : all) {
                ordinal a = to_ordinal(la);
                ordinal b = to_ordinal(lb);
                auto cmp = a <=> b;
                int expect = lex_compare(la, lb);
                r.require((expect < 0) == (cmp < 0) && (expect > 0) == (cmp > 0), "compare");
                r.require(add(a, b) == to_ordinal(lex_add(la, lb)), "add");
                r.require(mul(a, b) == to_ordinal(lex_mul(la, lb)), "mul");
            }
    });

    run_criterion(4, "Cantor-Bendixson calculus", 10.0, [&](criterion_result& r) {
        for (int gamma = 1; gamma <= 3; ++gamma) {
            derived_space s = compact_space{omega_pow(ordinal(gamma))};
            int steps = 0;
            while (s) {
                s = cb_derivative(*s);
                ++steps;
            }
            r.require(steps == gamma + 1, "height by literal iteration");
            r.require(cb_height(compact_space{omega_pow(ordinal(gamma))}) == ordinal(gamma + 1),
                      "cb_height closed form");
        }
        for (std::uint64_t a = 0; a <= 3; ++a)
            for (std::uint64_t b = 0; b <= 3; ++b)
                for (std::uint64_t c = 0; c <= 3; ++c) {
                    compact_space start{to_ordinal(triple(a, b, c))};
                    derived_space iterated = start;
                    for (int n = 1; n <= 5; ++n) {
                        if (iterated) iterated = cb_derivative(*iterated);
                        r.require(cb_power(start, ordinal(n)) == iterated,
                                  "cb_power vs iteration");
                    }
                }
        rng gen(20240004);
        for (int i = 0; i < 50; ++i) {
            ordinal alpha = gen_alpha_in_classification_range(gen);
            r.require(dentability_from_height(cb_height(compact_space{alpha})) ==
                          dentability_c(alpha),
                      "height consistency");
        }
    });

    run_criterion(5, "removability vs hyperplane-dichotomy oracle, 200 instances", 60.0,
                  [&](criterion_result& r) {
        rng gen(20240005);
        for (int i = 0; i < 200; ++i) {
            int dim = pick(gen, 1, 3);
            point_set k = gen_point_set(gen, dim, pick(gen, 2, 8), gen_norm(gen));
            rat eps = gen_rat(gen, 1, 5, 3);
            int x = pick(gen, 0, static_cast<int>(k.size()) - 1);
            r.require(removable(k, x, eps) == oracle_removable(k, x, eps),
                      "engine/oracle disagreement at instance " + std::to_string(i));
        }
    });

    run_criterion(6, "dyadic tree ranks, n = 1..4", 120.0, [&](criterion_result& r) {
        auto node_depth = [](int position) {
            int d = 0;
            for (int node = position + 1; node > 1; node >>= 1) ++d;
            return d;
        };
        for (int n = 1; n <= 4; ++n) {
            dyadic_tree t = make_dyadic_tree(n);
            derivation_trace trace = derive(t.set, rat(1));
            r.require(trace.stages.size() == static_cast<std::size_t>(n) + 2 &&
                          trace.stages.back().empty(),
                      "tree empties at stage n+1");
            for (std::size_t i = 0; i < t.set.size(); ++i)
                r.require(trace.ranks[i] == n - node_depth(static_cast<int>(i)),
                          "rank of depth-d node is n-d");
            r.require(trace.ranks[t.root_index] == n, "root rank");
        }
    });

    run_criterion(7, "equivariance and monotonicity suites", 60.0, [&](criterion_result& r) {
        rng gen(20240007);
        for (int i = 0; i < 100; ++i) {  // signed-permutation equivariance
            int dim = pick(gen, 1, 3);
            point_set k = gen_point_set(gen, dim, pick(gen, 2, 6), gen_norm(gen));
            rat eps = gen_rat(gen, 1, 4, 2);
            std::vector<int> perm(dim);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), gen);
            std::vector<int> sign(dim);
            for (auto& s : sign) s = pick(gen, 0, 1) ? 1 : -1;
            point_set u{dim, k.norm, {}};
            for (const auto& p : k.points) {
                vec q(dim);
                for (int j = 0; j < dim; ++j) q[j] = rat(sign[j]) * p[perm[j]];
                u.points.push_back(std::move(q));
            }
            r.require(derive(k, eps).stages == derive(u, eps).stages,
                      "signed-permutation equivariance");
        }
        for (int i = 0; i < 100; ++i) {  // shift-rank preservation
            int dim = pick(gen, 3, 5);
            int m = pick(gen, 1, dim - 2);
            point_set k{dim, gen_norm(gen), {}};
            int want = pick(gen, 2, 5);
            while (static_cast<int>(k.size()) < want) {
                vec p(dim, rat(0));
                for (int j = 0; j + m < dim - 1; ++j) p[j] = gen_rat(gen, -3, 3, 2);
                p[dim - 1] = gen_rat(gen, -3, 3, 2);
                if (std::find(k.points.begin(), k.points.end(), p) == k.points.end())
                    k.points.push_back(std::move(p));
            }
            rat eps = gen_rat(gen, 1, 4, 2);
            r.require(derive(k, eps).ranks == derive(shift(k, m), eps).ranks,
                      "shift-rank preservation");
        }
        for (int i = 0; i < 100; ++i) {  // eps- and K-monotonicity
            int dim = pick(gen, 1, 3);
            point_set k2 = gen_point_set(gen, dim, pick(gen, 3, 7), gen_norm(gen));
            rat eps1 = gen_rat(gen, 1, 4, 3);
            rat eps2 = eps1 + gen_rat(gen, 1, 3, 2);
            point_set larger = d_step(k2, eps2);
            point_set smaller = d_step(k2, eps1);
            for (const auto& p : larger.points)
                r.require(std::find(smaller.points.begin(), smaller.points.end(), p) !=
                              smaller.points.end(),
                          "eps-monotonicity");
            point_set k1{k2.dim, k2.norm, {}};
            for (const auto& p : k2.points)
                if (pick(gen, 0, 1)) k1.points.push_back(p);
            if (k1.empty()) k1.points.push_back(k2.points[0]);
            point_set step1 = d_step(k1, eps1);
            point_set step2 = d_step(k2, eps1);
            for (const auto& p : step1.points)
                r.require(std::find(step2.points.begin(), step2.points.end(), p) !=
                              step2.points.end(),
                          "K-monotonicity");
        }
    });

    run_criterion(8, "obstacles certify survival, >= 50 positive instances", 60.0,
                  [&](criterion_result& r) {
        rng gen(20240008);
        int confirmed = 0;
        int attempts = 0;
        while (confirmed < 50 && attempts < 1000) {
            ++attempts;
            obstacle_instance inst = gen_obstacle_instance(gen);
            if (!check_obstacle(inst.k, inst.m, inst.f, inst.eps, inst.stages)) continue;
            ++confirmed;
            derivation_trace trace = derive(inst.k, inst.eps);
            r.require(trace.ranks[inst.f].has_value() && *trace.ranks[inst.f] >= inst.stages,
                      "obstacle without survival at attempt " + std::to_string(attempts));
        }
        r.require(confirmed >= 50,
                  "only " + std::to_string(confirmed) + " positive instances found");
    });

    run_criterion(9, "index invariants over 200 generated ordinals", 5.0,
                  [&](criterion_result& r) {
        rng gen(20240009);
        for (int i = 0; i < 200; ++i) {
            ordinal alpha = gen_ordinal(gen, 3);
            ordinal sz = szlenk_c(alpha);
            ordinal dz = dentability_c(alpha);
            r.require(dz >= sz, "Dz >= Sz");
            r.require(dz <= omega_pow(sz), "Raja bound");
            r.require(dz.terms().size() == 1 && dz.leading_coefficient() == 1,
                      "Dz is a single omega power");
        }
    });

    run_criterion(10, "CLI round-trips and the C([0,w]) report", 60.0,
                  [&](criterion_result& r) {
        const std::string dir = "/tmp/ordlab_acceptance";
        if (std::system(("mkdir -p " + dir).c_str()) != 0)
            r.require(false, "cannot create the scratch directory");
        const std::string input = dir + "/line.json";
        {
            point_set k{1, norm_kind::l1, {{rat(-1)}, {rat(0)}, {rat(1)}}};
            std::ofstream out(input);
            out << to_json(k).dump() << "\n";
        }
        const std::string shift_input = dir + "/shiftable.json";
        {
            point_set k{3, norm_kind::l1, {{rat(1), rat(0), rat(1, 2)}, {rat(0), rat(0), rat(1)}}};
            std::ofstream out(shift_input);
            out << to_json(k).dump() << "\n";
        }

        const std::vector<std::string> commands = {
            "ord eval \"w^(w^2)*3 + w*5 + 7\"",
            "ord add 1 w",
            "ord mul \"w*2\" w",
            "ord cmp \"w*2+1\" \"w^2\"",
            "ord pow-omega \"w*3+2\"",
            "ord omega-pow \"w+2\"",
            "cb derive \"w^2*2+w*3+5\"",
            "cb power \"w^w\" \"w\"",
            "cb height \"w^(w^2)\"",
            "index sz \"w^(w^w)\"",
            "index dz \"w^(w^2)\"",
            "index dz-height \"w+1\"",
            "index sz-l2 \"w^(w^3)\"",
            "index iso-class \"w^5*3+w\"",
            "index iso-equiv w \"w*2\"",
            "index report w",
            "lab derive --input " + input + " --eps 1/2",
            "lab tree --depth 2 --eps 1",
            "lab shift --input " + shift_input + " --by 1",
            "lab obstacle --input " + input + " --obstacle-indices 0,2 --point 1 --eps 1 "
            "--stages 1",
        };
        for (const auto& c : commands) {
            cli_run run = run_cli(c + " --json");
            r.require(run.status == 0, "exit status of: " + c);
            json parsed;
            try {
                parsed = json::parse(run.out);
            } catch (...) {
                r.require(false, "unparseable JSON from: " + c);
                continue;
            }
            r.require(parsed.contains("command") && parsed.contains("result"),
                      "schema of: " + c);
            // parse-format identity on the emitted object
            r.require(parsed.dump() + "\n" == run.out, "round-trip of: " + c);
            // byte-identical across repeated runs
            cli_run again = run_cli(c + " --json");
            r.require(again.out == run.out, "determinism of: " + c);
        }

        // spot values: dz(w^(w^2)) = w^4 on the text surface
        r.require(run_cli("index dz \"w^(w^2)\"").out == "w^4\n", "dz text value");

        // the C([0,w]) report reproduces criterion 1's values bit-exactly
        cli_run report = run_cli("index report w --json");
        r.require(report.status == 0, "report exit status");
        json rep = json::parse(report.out, nullptr, false);
        r.require(!rep.is_discarded(), "report JSON parses");
        if (!rep.is_discarded()) {
            const json& result = rep.at("result");
            r.require(result.at("szlenk") == "w", "report szlenk");
            r.require(result.at("dentability") == "w^2", "report dentability");
            r.require(result.at("iso_gamma") == "0", "report iso_gamma");
            r.require(result.at("cb_height") == "2", "report cb_height");
            r.require(result.at("all_pass") == true, "report checks");
        }

        // trace round-trip through the published schema
        cli_run lab = run_cli("lab derive --input " + input + " --eps 1/2 --json");
        json trace_json = json::parse(lab.out).at("result");
        derivation_trace t = trace_from_json(trace_json);
        r.require(to_json(t).dump() == trace_json.dump(), "trace parse-format identity");
        r.require(t.ranks == std::vector<std::optional<int>>{0, 1, 0}, "trace ranks");

        // error paths map to the documented exit codes
        r.require(run_cli("index iso-class 5").status == 1, "domain error -> exit 1");
        r.require(run_cli("ord eval \"w^\"").status == 2, "syntax error -> exit 2");
        r.require(run_cli("lab tree --depth 6 --eps 1").status == 3, "capacity -> exit 3");
    });

    if (failures == 0)
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
