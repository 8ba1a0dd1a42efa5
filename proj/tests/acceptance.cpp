// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zsr/cli.hpp"
#include "zsr/coloring.hpp"
#include "zsr/decomposition.hpp"
#include "zsr/ramsey.hpp"
#include "zsr/zerosum.hpp"

using namespace zsr;

namespace {

struct Failure {
    std::vector<std::string> reasons;
    void fail(const std::string& why) { reasons.push_back(why); }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

int failures = 0;
std::vector<RamseyResult> ramsey_runs;
std::vector<RamseyQuery> ramsey_queries;

RamseyResult run_ramsey(const RamseyQuery& q, const RamseyOptions& o = {}) {
    auto res = exact_ramsey(q, o);
    ramsey_runs.push_back(res);
    ramsey_queries.push_back(q);
    return res;
}

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Failure&)>& body) {
    Failure f;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(f);
    } catch (const std::exception& e) {
        f.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_seconds) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit_seconds << " s";
        f.fail(os.str());
    }
    const bool ok = f.reasons.empty();
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    for (const auto& r : f.reasons) std::printf("    %s\n", r.c_str());
    std::fflush(stdout);
}

std::string str(int v) { return std::to_string(v); }

std::string run_json(const std::vector<std::string>& tail, const std::string& jobs) {
    std::vector<std::string> args = {"zsr", "--no-cache", "--format", "json", "--seed", "0", "--jobs", jobs};
    args.insert(args.end(), tail.begin(), tail.end());
    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + "\n" + out.str();
}

}  // namespace

int main() {
    criterion(1, "s_n(Z_n) = 2n - 1 for n = 2..6", 120, [](Failure& f) {
        for (int n = 2; n <= 6; ++n) {
            const auto s = egz_invariant(Group::canonical({n}), n);
            f.expect(s.is_exact(), "Z_" + str(n) + " inconclusive");
            f.expect(s.value == 2 * n - 1, "Z_" + str(n) + ": got " + str(s.value));
            f.expect(!has_zero_sum_exact_len(s.witness, n), "Z_" + str(n) + ": witness has a zero-sum n-subset");
        }
    });

    criterion(2, "Davenport constants with zero-sum-free witnesses", 120, [](Failure& f) {
        std::vector<std::pair<Group, int>> cases;
        for (int n = 1; n <= 8; ++n) cases.emplace_back(Group::canonical({n}), n);
        cases.emplace_back(Group::parse("2,2"), 3);
        cases.emplace_back(Group::parse("3,3"), 5);
        cases.emplace_back(Group::parse("2,4"), 5);
        for (const auto& [g, want] : cases) {
            const auto d = davenport(g);
            f.expect(d.is_exact() && d.value == want, g.name() + ": got " + str(d.value));
            f.expect(static_cast<int>(d.witness.size()) == want - 1, g.name() + ": witness length");
            f.expect(!has_nonempty_zero_sum(d.witness), g.name() + ": witness not zero-sum free");
        }
    });

    criterion(3, "s_3(Z_3 x Z_3) = 9", 300, [](Failure& f) {
        const auto s = egz_invariant(Group::parse("3,3"), 3);
        f.expect(s.is_exact() && s.value == 9, "got " + str(s.value));
        f.expect(!has_zero_sum_exact_len(s.witness, 3), "witness has a zero-sum triple");
    });

    criterion(4, "invariant bounds hold across the group grid", 120, [](Failure& f) {
        for (const char* text : {"2", "3", "4", "5", "6", "7", "8", "2,2", "2,4", "3,3", "2,2,2", "4,4", "2,6"}) {
            const Group g = Group::parse(text);
            const auto d = davenport(g);
            for (int k = 1; k <= 2; ++k) {
                const int m = k * g.exponent();
                if (g.order() > 9 && k > 1) continue;
                const auto s = egz_invariant(g, m);
                f.expect(s.is_exact(), g.name() + " m=" + str(m) + " inconclusive");
                f.expect(s.value >= m + d.value - 1, g.name() + ": s_m below m + D - 1");
                if (k == 1) f.expect(s.value <= g.order() + g.exponent() - 1, g.name() + ": s above |G| + exp - 1");
            }
            if (g.order() > 9) continue;
            const auto e = ell_invariant(g);
            f.expect(e.lower <= e.value && e.value <= e.upper, g.name() + ": ell outside its bounds");
            f.expect(e.pinched == (e.lower == e.upper), g.name() + ": pinch flag");
        }
        f.expect(ell_invariant(Group::parse("2")).value == 1, "ell(Z_2) != 1");
        f.expect(ell_invariant(Group::parse("2,2")).value == 2, "ell(Z_2 x Z_2) != 2");
    });

    criterion(5, "cyclic star values by exhaustive search", 600, [](Failure& f) {
        for (auto [t, m, want] : {std::tuple{2, 2, 3}, std::tuple{2, 4, 5}, std::tuple{3, 3, 6}}) {
            const auto res = run_ramsey(RamseyQuery{Group::canonical({t}), 2, m, {FamilyKind::hyperstar, 0}});
            const std::string tag = "Z_" + str(t) + " m=" + str(m);
            f.expect(res.exact() == want, tag + ": search gave lower " + str(res.lower));
            f.expect(theoremC_value(m, t) == want, tag + ": formula gave " + str(theoremC_value(m, t)));
        }
    });

    criterion(6, "intersecting sandwich and kind order", 120, [](Failure& f) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto eq = run_ramsey(RamseyQuery{Group::parse("2"), 3, 2, {FamilyKind::intersecting, 0}});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        f.expect(eq.exact() == 4 && omega(3, 3) == 4, "Z_2, r = 3: got lower " + str(eq.lower));
        f.expect(secs < 1.0, "Z_2, r = 3 took " + std::to_string(secs) + " s");
        struct Case {
            const char* group;
            int k, r;
        };
        for (const Case& cs : {Case{"2", 1, 2}, Case{"2", 1, 3}, Case{"2", 1, 4}, Case{"3", 1, 2}, Case{"3", 1, 3},
                               Case{"2", 2, 2}, Case{"4", 1, 2}, Case{"2,2", 1, 2}}) {
            const Group g = Group::parse(cs.group);
            const auto sb = theorem1_bounds(g, cs.k, cs.r);
            const std::string tag = g.name() + " k=" + str(cs.k) + " r=" + str(cs.r);
            const auto ri = run_ramsey(RamseyQuery{g, cs.r, sb.m, {FamilyKind::intersecting, 0}});
            const auto rs = run_ramsey(RamseyQuery{g, cs.r, sb.m, {FamilyKind::hyperstar, 0}});
            if (!ri.exact() || !rs.exact()) {
                f.fail(tag + ": not decided");
                continue;
            }
            f.expect(sb.omega - 1 <= *ri.exact() && *ri.exact() <= sb.omega, tag + ": outside Omega - 1 .. Omega");
            f.expect(*rs.exact() >= *ri.exact(), tag + ": hyperstar below intersecting");
        }
    });

    criterion(7, "decompositions verify and part counts hold", 120, [](Failure& f) {
        for (int n = 2; n <= 10; ++n)
            for (int r : {2, 3}) {
                if (n < r) continue;
                const auto d = matching_decomposition(n, r);
                const auto chk = verify_decomposition(d);
                const std::string tag = "n=" + str(n) + " r=" + str(r);
                f.expect(static_cast<bool>(chk), tag + ": " + chk.violation);
                const auto total = static_cast<std::int64_t>(binomial(n, r));
                const std::int64_t per = n / r;
                f.expect(static_cast<std::int64_t>(d.parts.size()) == (total + per - 1) / per, tag + ": part count");
            }
        std::mt19937_64 rng(7);
        for (int n = 2; n <= 8; ++n)
            for (int r = 2; r <= n; ++r)
                for (int trial = 0; trial < 10; ++trial) {
                    std::int64_t left = static_cast<std::int64_t>(binomial(n, r));
                    std::vector<std::int64_t> sizes;
                    while (left > 0) {
                        const std::int64_t s = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(left));
                        sizes.push_back(s);
                        left -= s;
                    }
                    const auto chk = verify_decomposition(baranyai_partition(n, r, sizes, rng()));
                    f.expect(static_cast<bool>(chk), "baranyai n=" + str(n) + " r=" + str(r) + ": " + chk.violation);
                }
        struct Case {
            const char* group;
            int k, r;
        };
        for (const Case& cs : {Case{"2", 1, 2}, Case{"3", 1, 2}, Case{"2", 1, 3}, Case{"2", 2, 2}, Case{"2,2", 1, 2},
                               Case{"4", 1, 2}, Case{"3", 1, 3}, Case{"2", 2, 3}, Case{"5", 1, 2}, Case{"3,3", 1, 2},
                               Case{"2", 1, 4}, Case{"3", 2, 3}}) {
            const auto mc = theorem1_lower_coloring(Group::parse(cs.group), cs.k, cs.r, LowerVariant::minus_two);
            f.expect(mc.t < mc.s, std::string(cs.group) + " r=" + str(cs.r) + ": t >= s");
        }
    });

    criterion(8, "lower-bound constructions certified", 60, [](Failure& f) {
        for (auto [text, r] : {std::pair{"2", 2}, std::pair{"3", 2}, std::pair{"2", 3}}) {
            const Group g = Group::parse(text);
            const auto mc = theorem1_lower_coloring(g, 1, r, LowerVariant::minus_two);
            const auto res = verify_no_zero_sum_family(mc.coloring, {FamilyKind::intersecting, 0}, g.exponent());
            f.expect(res.status == FamilyStatus::certified_absent, g.name() + " r=" + str(r) + ": not certified");
        }
        for (auto [text, m] : {std::pair{"2", 2}, std::pair{"3", 3}}) {
            const Group g = Group::parse(text);
            const auto pc = delta_lower_coloring(g, 2, 0, m);
            const auto res = verify_no_zero_sum_family(pc.coloring, {FamilyKind::delta, 0}, m);
            f.expect(res.status == FamilyStatus::certified_absent, g.name() + " delta(0): not certified");
        }
    });

    criterion(9, "delta(0) pinch for Z_2, r = 2, m = 2", 1, [](Failure& f) {
        const auto b = theorem2_bounds(Group::parse("2"), 2, 0, 2);
        f.expect(b.lower == 5 && b.upper == 5, "bounds (" + str(b.lower) + ", " + str(b.upper) + ")");
        const auto res = run_ramsey(RamseyQuery{Group::parse("2"), 2, 2, {FamilyKind::delta, 0}});
        f.expect(res.exact() == 5, "search gave lower " + str(res.lower));
        f.expect(res.certificate && res.certificate->n() == 4, "no K_4 certificate");
    });

    criterion(10, "property suites", 300, [](Failure& f) {
        std::mt19937 rng(10);
        const std::vector<const char*> groups = {"2", "3", "4", "5", "6", "2,2", "2,4", "3,3", "2,2,2"};
        for (int trial = 0; trial < 1000; ++trial) {
            const Group g = Group::parse(groups[rng() % groups.size()]);
            std::vector<int> s(rng() % 13);
            for (auto& x : s) x = static_cast<int>(rng() % g.order());
            const GSeq seq(g, s);
            bool ok = has_nonempty_zero_sum(seq) == oracle::has_nonempty_zero_sum(g, s);
            for (int m = 0; m <= static_cast<int>(s.size()); ++m)
                ok = ok && has_zero_sum_exact_len(seq, m) == oracle::has_zero_sum_len(g, s, m);
            if (!ok) {
                f.fail("DP disagrees with enumeration on " + g.name());
                break;
            }
        }
        int bad = 0;
        while (bad < 1000) {
            const Group g = Group::parse(groups[rng() % groups.size()]);
            const int m = g.exponent();
            std::vector<int> s(1 + rng() % 8);
            for (auto& x : s) x = static_cast<int>(rng() % g.order());
            if (has_zero_sum_exact_len(GSeq(g, s), m)) continue;
            ++bad;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                if (has_zero_sum_exact_len(GSeq(g, t), m)) f.fail("deleting a term created a zero-sum m-subset");
            }
        }
        for (int n = 1; n <= 14; ++n)
            for (int r = 1; r <= std::min(n, 5); ++r) {
                const auto total = static_cast<std::int64_t>(binomial(n, r));
                for (std::int64_t k = 0; k < total; ++k)
                    if (edge_rank(edge_unrank(k, n, r), n) != k) f.fail("rank/unrank mismatch");
            }
        for (std::size_t i = 0; i < ramsey_runs.size(); ++i) {
            const auto& res = ramsey_runs[i];
            if (!res.certificate) continue;
            const auto st = verify_no_zero_sum_family(*res.certificate, ramsey_queries[i].kind, ramsey_queries[i].m).status;
            f.expect(st == FamilyStatus::certified_absent, "certificate of run " + std::to_string(i) + " fails");
        }
        const std::vector<std::vector<std::string>> cmds = {
            {"ramsey", "exact", "--group", "3", "--r", "2", "--m", "3", "--kind", "hyperstar", "--cert", "/dev/null"},
            {"conjecture", "probe", "--group", "2", "--r", "3"},
            {"inv", "egz", "--group", "2,4", "--m", "4"},
            {"bounds", "t1", "--group", "3", "--r", "2"},
        };
        for (const auto& cmd : cmds) {
            const auto a = run_json(cmd, "1");
            const auto b = run_json(cmd, "1");
            const auto c = run_json(cmd, "4");
            f.expect(a == b && a == c, "JSON differs for " + cmd[0] + " " + cmd[1]);
        }
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
