// Acceptance harness: exercises every promised behavior end to end and
// prints exactly one [PASS]/[FAIL] line per criterion, with the measured
// margins indented underneath. Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "qszego/verify.hpp"

using namespace qszego;

namespace {

int g_failures = 0;

const CheckResult* find_check(const SuiteResult& s, const std::string& needle) {
    for (const auto& c : s.checks) {
        if (c.name.find(needle) != std::string::npos) return &c;
    }
    return nullptr;
}

struct Criterion {
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;

    void require(const SuiteResult& s, const std::string& needle) {
        const CheckResult* c = find_check(s, needle);
        if (c == nullptr) {
            ok = false;
            notes.push_back("missing check: " + needle);
            if (const CheckResult* abort = find_check(s, "suite aborted"))
                notes.push_back("  " + abort->name);
            return;
        }
        if (!c->passed) ok = false;
        char buf[512];
        if (c->threshold > 0.0) {
            std::snprintf(buf, sizeof(buf), "%s: measured %.3g (bound %.3g)%s", c->name.c_str(),
                          c->measured, c->threshold, c->passed ? "" : "  <-- FAILED");
        } else {
            std::snprintf(buf, sizeof(buf), "%s: %s", c->name.c_str(),
                          c->passed ? "exact" : "FAILED");
        }
        notes.push_back(buf);
        if (!c->detail.empty() && (c->threshold == 0.0 || !c->passed ||
                                   c->name.find("ratio") != std::string::npos ||
                                   c->name.find("FAILS") != std::string::npos ||
                                   c->name.find("scales") != std::string::npos)) {
            notes.push_back("  " + c->detail);
        }
    }

    void require_time(double seconds, double budget, const std::string& label) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s completed in %.2f s (budget %.0f s)", label.c_str(),
                      seconds, budget);
        notes.push_back(buf);
        if (seconds >= budget) {
            ok = false;
            notes.back() += "  <-- OVER BUDGET";
        }
    }

    void emit(int index) const {
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index, title.c_str());
        for (const auto& n : notes) std::printf("        %s\n", n.c_str());
        if (!ok) ++g_failures;
    }
};

// Runs a suite; if it throws, the result carries a single failed check naming
// the exception, so every criterion that depends on it reports [FAIL] with the
// reason instead of the binary dying mid-report.
template <typename Fn>
SuiteResult guarded(const char* suite, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        SuiteResult r;
        r.suite = suite;
        r.checks.push_back({std::string("suite aborted: ") + e.what(), false, 0.0, 0.0, ""});
        return r;
    }
}

} // namespace

int main() {
    std::printf("acceptance: explicit kernel library for the quaternionic Siegel domain\n\n");

    // Shared suite runs (each suite is deterministic for a fixed seed).
    const SuiteResult s_const = guarded("constants", [] { return suite_constants(); });
    const SuiteResult s_oracle = guarded("oracle", [] { return suite_oracle(0x0ddba11u); });
    const SuiteResult s_reg1 = guarded("regularity", [] { return suite_regularity(1, 1001); });
    const SuiteResult s_reg2 = guarded("regularity", [] { return suite_regularity(2, 1001); });
    const SuiteResult s_inv1 = guarded("invariance", [] { return suite_invariance(1, 1002); });
    const SuiteResult s_inv2 = guarded("invariance", [] { return suite_invariance(2, 1002); });
    const SuiteResult s_ode1 = guarded("ode", [] { return suite_ode(1, 1003); });
    const SuiteResult s_ode2 = guarded("ode", [] { return suite_ode(2, 1003); });

    QuadratureSpec spec; // 48-node default; the order-1 probe grid caps itself
    const SuiteResult s_rep0 = guarded("reproduce", [&] { return suite_reproduce(0, spec, 77); });
    const SuiteResult s_rep1 =
        guarded("reproduce", [&] { return suite_reproduce(1, spec, 20240816u); });
    const SuiteResult s_neg =
        guarded("negative-control", [] { return suite_negative_control(4242); });
    const SuiteResult s_grp = guarded("group-measure", [] { return suite_group_measure(0x6e0u); });

    {
        Criterion c;
        c.title = "exact normalization constants at orders 1 and 2, with the combinatorial sum";
        c.require(s_const, "order 1: 6237/872");
        c.require(s_const, "order 2: 11486475/193472");
        c.require(s_const, "K(1) = 109/1995840");
        c.require_time(s_const.wall_time_seconds, 1.0, "constants suite");
        c.emit(1);
    }
    {
        Criterion c;
        c.title = "terminating hypergeometric table and assembled brackets, exact";
        c.require(s_oracle, "terminating 2F1 table");
        c.require(s_oracle, "assembled hypergeometric brackets");
        c.emit(2);
    }
    {
        Criterion c;
        c.title = "diagonal-identity closure of the constant formula, orders 1..6, exact";
        c.require(s_const, "diagonal-identity closure");
        c.require(s_const, "diagonal values 1/8, 3/8, 45/16");
        c.require_time(s_const.wall_time_seconds, 1.0, "constants suite");
        c.emit(3);
    }
    {
        Criterion c;
        c.title = "closed-form kernel profile matches 2n-fold finite differencing "
                  "(50 arguments, orders 1 and 2, rel < 1e-5)";
        c.require(s_oracle, "2n-fold finite differencing");
        c.require_time(s_oracle.wall_time_seconds, 10.0, "oracle suite");
        c.emit(4);
    }
    {
        Criterion c;
        c.title = "kernel sections satisfy the Cauchy-Fueter system "
                  "(20 pairs, orders 1 and 2, residual < 1e-6)";
        c.require(s_reg1, "kernel satisfies the Cauchy-Fueter system");
        c.require(s_reg2, "kernel satisfies the Cauchy-Fueter system");
        c.require(s_reg1, "annihilates the kernel's second argument");
        c.require_time(s_reg1.wall_time_seconds + s_reg2.wall_time_seconds, 30.0,
                       "regularity suites");
        c.emit(5);
    }
    {
        Criterion c;
        c.title = "two-point invariances under translation, rotation, and dilation "
                  "(20 configs, rel < 1e-10, closed form only)";
        for (const SuiteResult* s : {&s_inv1, &s_inv2}) {
            c.require(*s, "boundary translation");
            c.require(*s, "symplectic rotation");
            c.require(*s, "unit-quaternion rotation");
            c.require(*s, "dilation weight");
        }
        c.emit(6);
    }
    {
        Criterion c;
        c.title = "complex-slice structure: vanishing components, angular ODE pair, "
                  "homogeneity, rotation covariance (orders 1 and 2)";
        for (const SuiteResult* s : {&s_ode1, &s_ode2}) {
            c.require(*s, "components f3, f4 vanish");
            c.require(*s, "first angular ODE residual");
            c.require(*s, "second angular ODE residual");
            c.require(*s, "profile homogeneity");
            c.require(*s, "profile rotation covariance");
        }
        c.emit(7);
    }
    {
        Criterion c;
        c.title = "special-function oracles: radial moment vs quadrature (rel < 1e-8), "
                  "cosine expansion (k <= 8), Jacobi routes exact";
        c.require(s_oracle, "radial moment integral");
        c.require(s_oracle, "cosine multiple-angle expansion");
        c.require(s_oracle, "Jacobi-polynomial route");
        c.emit(8);
    }
    {
        Criterion c;
        c.title = "reproducing property: order 0 against 1/(2 pi^2) and order 1 with the "
                  "measured constant (5 probe pairs each, rel < 1e-3)";
        c.require(s_rep0, "equals 1/(2 pi^2)");
        c.require(s_rep0, "reproduces kernel sections");
        c.require_time(s_rep0.wall_time_seconds, 30.0, "order-0 run");
        c.require(s_rep1, "reproduces kernel sections");
        c.require(s_rep1, "empirical/closed-form constant ratio");
        c.require(s_rep1, "Monte Carlo and tensor paths agree");
        c.require_time(s_rep1.wall_time_seconds, 300.0, "order-1 run");
        c.emit(9);
    }
    {
        Criterion c;
        c.title = "negative control: the order-2 kernel over the 1-coordinate boundary fails "
                  "scale consistency by a reported r-dependent factor";
        c.require(s_neg, "FAILS scale consistency");
        c.require(s_neg, "systematic");
        c.require(s_neg, "IS scale consistent");
        c.emit(10);
    }
    {
        Criterion c;
        c.title = "boundary group axioms exact over rationals; the boundary measure is "
                  "translation invariant";
        c.require(s_grp, "group axioms");
        c.require(s_grp, "invariant under left group translation");
        c.emit(11);
    }

    std::printf("\n%d of 11 criteria passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
