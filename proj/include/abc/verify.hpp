// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abc/bc_tree.hpp"
#include "abc/closed_form.hpp"
#include "abc/harmonic.hpp"
#include "abc/instances.hpp"
#include "abc/interval.hpp"
#include "abc/optimizer.hpp"
#include "abc/oracle.hpp"
#include "abc/svbwc.hpp"

// Executable checks of the model's claims on concrete parameter grids.
// Shared by the acceptance test binary and `abc_tree verify`.

namespace abc::verify {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0; // 0 = no limit
};

// Margin for comparisons between exact quantities and real-valued bounds.
inline constexpr double kMargin = 1e-9;

namespace grids {

inline std::vector<Rational> halves(long max_twice) {
    std::vector<Rational> out;
    for (long i = 0; i <= max_twice; ++i) {
        out.emplace_back(i, 2);
    }
    return out;
}

// Z in {0, 1/2, ..., 12}
inline std::vector<Rational> bounds12() { return halves(24); }

inline std::vector<Rational> cut_values_up_to(const Rational& r) {
    const Rational all[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2),
                            Rational(2),    Rational(5, 2), Rational(3),    Rational(7, 2), Rational(4)};
    std::vector<Rational> out;
    for (const auto& c : all) {
        if (c <= r) {
            out.push_back(c);
        }
    }
    return out;
}

struct Point {
    Rational bound;
    Rational r;
    Rational c;
};

// Z in {0, 1/2, ..., 12}, r in {1, 2, 3, 4}, c in {1/3, 1/2, 2/3, 1, 3/2, ..., r}.
inline std::vector<Point> equal_branching_grid() {
    std::vector<Point> out;
    for (const auto& z : bounds12()) {
        for (long r = 1; r <= 4; ++r) {
            for (const auto& c : cut_values_up_to(Rational(r))) {
                out.push_back({z, Rational(r), c});
            }
        }
    }
    return out;
}

} // namespace grids

namespace detail {

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
};

// Runs body(detail_stream) -> bool, catching model errors as failures and
// enforcing the time limit.
inline CheckResult run(std::string id, std::string name, double limit, const std::function<bool(std::ostream&)>& body) {
    CheckResult res;
    res.id = std::move(id);
    res.name = std::move(name);
    res.limit_seconds = limit;
    std::ostringstream os;
    Stopwatch sw;
    try {
        res.passed = body(os);
    } catch (const std::exception& e) {
        os << "exception: " << e.what();
        res.passed = false;
    }
    res.seconds = sw.seconds();
    if (limit > 0.0 && res.seconds >= limit) {
        os << (os.tellp() > 0 ? "; " : "") << "time limit " << limit << "s exceeded";
        res.passed = false;
    }
    res.detail = os.str();
    return res;
}

inline bool witness_ok(const OptResult& res, const TimeFn& w, const Rational& bound) {
    if (!res.witness) {
        return false;
    }
    res.witness->check_invariants();
    return proves_bound(*res.witness, bound) && tree_time(*res.witness, w) == res.tau &&
           res.witness->size() == res.size && res.witness->num_cuts() == res.num_cuts &&
           res.witness->branch_depth() == res.branch_depth;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Acceptance criteria
// ---------------------------------------------------------------------------

inline CheckResult cut_and_branch_beats_pure_trees() {
    return detail::run("AC1", "branch-and-cut beats pure branching and pure cutting (l=r=3, c=1, Z=6)", 1.0,
                       [](std::ostream& os) {
        const SvbcParams p(3, 3, 1);
        const auto w = TimeFn::one();
        const Rational z(6);
        const auto pb = tree_time(pure_branch_tree(p, z), w);
        const auto pc = tree_time(pure_cut_tree(p, z), w);
        const auto dp = min_tree_time(p, w, z);
        const bool shape = dp.witness && dp.witness->is_cut_and_branch() && dp.num_cuts == 3 &&
                           dp.branch_depth == 1 && dp.size == build_cut_and_branch(p, 3, 1).size();
        os << "pure-branch=" << pb << " pure-cut=" << pc << " dp=" << dp.tau << " cuts=" << dp.num_cuts
           << " depth=" << dp.branch_depth;
        return pb == Rational(7) && pc == Rational(7) && dp.tau == Rational(6) && shape &&
               detail::witness_ok(dp, w, z);
    });
}

inline CheckResult cuts_below_root_win() {
    return detail::run("AC2", "cuts below the root beat root cuts (l=3, r=7, c=2, w=z/2+1, Z=7)", 1.0,
                       [](std::ostream& os) {
        const SvbcParams p(3, 7, 2);
        const auto w = TimeFn::affine(Rational(1, 2), Rational(1));
        const Rational z(7);
        const auto dp = min_tree_time(p, w, z);
        const auto ro = min_tree_time_root_cuts_only(p, w, z);
        const auto pc = tree_time(pure_cut_tree(p, z), w);
        bool below_left = false;
        if (dp.witness) {
            const auto& root = dp.witness->node(dp.witness->root());
            below_left = root.kind == NodeKind::Branch &&
                         dp.witness->node(root.children[0]).kind == NodeKind::Cut &&
                         dp.witness->node(root.children[1]).kind == NodeKind::Leaf;
        }
        os << "dp=" << dp.tau << " root-only=" << ro.tau << " pure-cut=" << pc
           << " cuts-below-left-branch=" << (below_left ? "yes" : "no");
        return dp.tau == Rational(13, 2) && ro.tau == Rational(7) && pc == Rational(10) && below_left &&
               dp.num_cuts == 2 && detail::witness_ok(dp, w, z);
    });
}

inline CheckResult closed_form_cut_count_exhaustion() {
    return detail::run("AC3", "closed-form k* attains the minimal size on the (Z, r, c) grid", 60.0,
                       [](std::ostream& os) {
        std::size_t bad = 0;
        std::size_t n = 0;
        for (const auto& pt : grids::equal_branching_grid()) {
            ++n;
            const auto ans = optimal_cuts_equal_lr(pt.bound, pt.r, pt.c);
            std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
            for (std::uint64_t k = 0; k <= kappa(pt.bound, pt.r, pt.c, 0); ++k) {
                best = std::min(best, size_by_cut_count(pt.bound, pt.r, pt.c, k));
            }
            DpOptions o;
            o.build_witness = false;
            const auto dp = min_tree_time(SvbcParams(pt.r, pt.r, pt.c), TimeFn::one(), pt.bound, o);
            const auto at_k = size_by_cut_count(pt.bound, pt.r, pt.c, ans.k_star);
            if (at_k != best || dp.size != best || ans.min_size_lower_bound != dp.size) {
                if (bad++ < 3) {
                    os << "mismatch Z=" << pt.bound << " r=" << pt.r << " c=" << pt.c << " k*=" << ans.k_star
                       << " size(k*)=" << at_k << " min=" << best << " dp=" << dp.size << "; ";
                }
            }
        }
        os << n << " grid points, " << bad << " mismatches";
        return bad == 0;
    });
}

inline CheckResult nonmonotonicity_witness() {
    return detail::run("AC4", "one cut hurts, two cuts help (Z=5, r=3, c=1)", 0.0, [](std::ostream& os) {
        const Rational z(5), r(3), c(1);
        const auto s0 = size_by_cut_count(z, r, c, 0);
        const auto s1 = size_by_cut_count(z, r, c, 1);
        const auto s2 = size_by_cut_count(z, r, c, 2);
        const auto reduction = abc::detail::pow2(to_int64((z / r).ceil())) - 2;
        os << "sizes k=0,1,2: " << s0 << "," << s1 << "," << s2 << " reduction=" << s0 - s2;
        return s0 == 7 && s1 == 8 && s2 == 5 && s0 - s2 == reduction && s1 > s0 && s0 > s2;
    });
}

inline CheckResult harmonic_bounds() {
    return detail::run("AC5", "ln(z+1) < H(z) <= ln z + 1 and e^(x-1) <= H^-1(x) < e^x - 1", 10.0,
                       [](std::ostream& os) {
        const Rational margin = Rational::from_mpq(mpq_class(1, 1'000'000'000));
        std::size_t bad = 0;
        mpq_class h(0);
        for (unsigned long z = 1; z <= 10'000; ++z) {
            h += mpq_class(1, z);
            const Interval hz(Rational::from_mpq(h));
            const Interval lower = Interval::log(Rational(static_cast<long>(z + 1)));
            const Interval upper = Interval::log(Rational(static_cast<long>(z))) + Interval(1L);
            // strict: certified positive gap; non-strict: slack within the margin
            const bool strict_ok = (hz - lower).certainly_positive();
            const bool weak_ok = (hz - upper).certainly_le(margin);
            if (!strict_ok || !weak_ok) {
                if (bad++ < 3) {
                    os << "H bound fails at z=" << z << "; ";
                }
            }
        }
        // The strict upper bound on H^-1 does not hold on (1, ln 3], where
        // H^-1(x) = 2 >= e^x - 1. H^-1(x) <= ceil(e^x - 1) < e^x holds for all x.
        std::size_t upper_misses = 0;
        std::size_t weaker_misses = 0;
        for (long i = 1; i <= 200; ++i) {
            const Rational x = Rational(1) + Rational(11 * i, 200);
            const auto k = harmonic_inverse(x);
            const Interval kq(Rational(static_cast<long>(k)));
            const bool lo_ok = (Interval::exp(x - Rational(1)) - kq).certainly_le(margin);
            const bool hi_ok = (Interval::exp(x) - Interval(1L) - kq).certainly_positive();
            const bool weaker_ok = (Interval::exp(x) - kq).certainly_positive();
            const bool adjoint = harmonic_geq(k, x) && (k == 0 || !harmonic_geq(k - 1, x));
            if (!lo_ok || !adjoint) {
                if (bad++ < 6) {
                    os << "H^-1 lower bound fails at x=" << x << " (k=" << k << "); ";
                }
            }
            if (!hi_ok) {
                ++upper_misses;
                if (upper_misses <= 3) {
                    const bool known = Interval::log(Rational(3)).certainly_ge(x);
                    os << "H^-1(x) < e^x - 1 fails at x=" << x << " (k=" << k << ", e^x - 1 = " << std::setprecision(6)
                       << (Interval::exp(x) - Interval(1L)).mid() << (known ? ", inside (1, ln 3]" : "") << "); ";
                }
            }
            weaker_misses += weaker_ok ? 0 : 1;
        }
        os << "10000 values of H, 200 values of H^-1, " << bad << " other failures, " << upper_misses
           << " strict upper bound failures, " << weaker_misses << " failures of H^-1(x) < e^x";
        return bad == 0 && upper_misses == 0;
    });
}

inline CheckResult approximation_factor_check() {
    return detail::run("AC6", "approximate cut count within max{8, e^(1+r/c)} of the optimum", 120.0,
                       [](std::ostream& os) {
        const Rational vals[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
        std::size_t bad = 0;
        std::size_t n = 0;
        double worst = 0.0;
        std::string worst_at;
        for (const auto& z : grids::halves(16)) {
            for (const auto& r : vals) {
                for (const auto& c : vals) {
                    ++n;
                    const auto plan = approx_cut_count(z, r, c);
                    DpOptions o;
                    o.build_witness = false;
                    const auto dp = min_tree_time(SvbcParams(r, r, c, Decay::Harmonic), TimeFn::one(), z, o);
                    const double factor = approximation_factor(r, c).upper();
                    const double alg = static_cast<double>(plan.tree_size);
                    const double opt = static_cast<double>(dp.size);
                    if (dp.tau != Rational(static_cast<long>(dp.size)) || plan.tree_size < dp.size ||
                        alg > factor * opt + kMargin) {
                        if (bad++ < 3) {
                            os << "violation Z=" << z << " r=" << r << " c=" << c << " alg=" << plan.tree_size
                               << " opt=" << dp.size << "; ";
                        }
                    }
                    if (alg / opt > worst) {
                        worst = alg / opt;
                        worst_at = "Z=" + z.str() + " r=" + r.str() + " c=" + c.str();
                    }
                }
            }
        }
        os << n << " grid points, " << bad << " violations, worst ratio " << worst << " at " << worst_at;
        return bad == 0;
    });
}

inline CheckResult root_cuts_suffice() {
    return detail::run("AC7", "optimum attained with root cuts only (w=1 any l<=r; l=r any w)", 120.0,
                       [](std::ostream& os) {
        std::size_t bad = 0;
        std::size_t n = 0;
        DpOptions o;
        o.build_witness = false;
        const auto compare = [&](const SvbcParams& p, const TimeFn& w, const Rational& z) {
            ++n;
            const auto dp = min_tree_time(p, w, z, o);
            const auto ro = min_tree_time_root_cuts_only(p, w, z, o);
            if (dp.tau != ro.tau) {
                if (bad++ < 3) {
                    os << "differs " << p.str() << " w=" << w.str() << " Z=" << z << ": " << dp.tau << " vs "
                       << ro.tau << "; ";
                }
            }
        };
        const Rational ells[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(4)};
        for (const auto& pt : grids::equal_branching_grid()) {
            for (const auto& ell : ells) {
                if (ell <= pt.r) {
                    compare(SvbcParams(ell, pt.r, pt.c), TimeFn::one(), pt.bound);
                }
            }
        }
        const TimeFn ws[] = {TimeFn::affine(Rational(1), Rational(1)), TimeFn::affine(Rational(1, 2), Rational(1)),
                             TimeFn::polynomial({Rational(1), Rational(0), Rational(1)})};
        for (const auto& pt : grids::equal_branching_grid()) {
            for (const auto& w : ws) {
                compare(SvbcParams(pt.r, pt.r, pt.c), w, pt.bound);
            }
        }
        os << n << " instances, " << bad << " differences";
        return bad == 0;
    });
}

inline CheckResult oracle_equivalence(std::uint64_t seed = 20240601) {
    return detail::run("AC8", "optimizer matches brute-force enumeration on 50 random instances", 60.0,
                       [seed](std::ostream& os) {
        std::mt19937_64 rng(seed);
        const Rational steps[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
        const TimeFn ws[] = {TimeFn::one(), TimeFn::affine(Rational(1, 2), Rational(1)),
                             TimeFn::polynomial({Rational(1), Rational(0), Rational(1)})};
        auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
        std::size_t bad = 0;
        std::size_t n = 0;
        std::size_t per_decay[2] = {0, 0};
        while (n < 50) {
            Rational ell = steps[pick(5)];
            Rational r = steps[pick(5)];
            if (r < ell) {
                std::swap(ell, r);
            }
            const auto decay = pick(2) == 0 ? Decay::Constant : Decay::Harmonic;
            const SvbcParams p(ell, r, steps[pick(5)], decay);
            const auto& w = ws[n % 3];
            const Rational z(static_cast<long>(1 + pick(12)), 2);
            const auto branch_depth = to_uint64((z / ell).ceil());
            const auto cuts = p.cuts_needed(z).value_or(abc::detail::kNever);
            if (branch_depth > 5 || cuts > 7) {
                continue;
            }
            ++n;
            ++per_decay[decay == Decay::Constant ? 0 : 1];
            EnumLimits lim;
            lim.max_depth = branch_depth + cuts; // no optimal path can be longer
            lim.max_cuts_per_path = std::max<std::uint64_t>(cuts, 1);
            const auto want = enumerate_min(p, w, z, lim);
            const auto got = min_tree_time(p, w, z);
            if (want.tau != got.tau || !detail::witness_ok(got, w, z) || !detail::witness_ok(want, w, z)) {
                if (bad++ < 3) {
                    os << "mismatch " << p.str() << " w=" << w.str() << " Z=" << z << ": oracle=" << want.tau
                       << " dp=" << got.tau << "; ";
                }
            }
        }
        os << n << " instances (" << per_decay[0] << " constant, " << per_decay[1] << " harmonic), " << bad
           << " mismatches";
        return bad == 0 && per_decay[0] > 0 && per_decay[1] > 0;
    });
}

inline CheckResult triangle_family() {
    return detail::run("AC9", "disjoint triangles: k* = m, size m+1 vs 2^(m+1)-1 pure branching", 0.0,
                       [](std::ostream& os) {
        std::size_t bad = 0;
        for (std::uint64_t m = 1; m <= 12; ++m) {
            const auto [p, z] = derive_model(m);
            const auto plan = optimal_plan(m);
            DpOptions o;
            o.build_witness = false;
            const auto dp = min_tree_time(p, TimeFn::one(), z, o);
            const auto pb = pure_branch_time(p, z);
            const std::uint64_t full = (std::uint64_t{1} << (m + 1)) - 1;
            if (plan.k_star != m || plan.min_size_lower_bound != m + 1 || dp.size != m + 1 || dp.num_cuts != m ||
                !pb || *pb != Rational(static_cast<long>(full)) || triangle_pure_branch_size(m) != full) {
                ++bad;
                os << "m=" << m << " k*=" << plan.k_star << " dp=" << dp.size << "; ";
            }
        }
        os << "m=1..12, " << bad << " mismatches";
        return bad == 0;
    });
}

inline CheckResult polynomial_time_threshold() {
    return detail::run("AC10", "cuts eventually forced under w=z+1; pure branching optimal under w=s z+1", 30.0,
                       [](std::ostream& os) {
        const SvbcParams p(1, 1, 1);
        const auto th = cut_threshold_search(p, TimeFn::affine(Rational(1), Rational(1)), Rational(10), Rational(1));
        const Rational z(4);
        const auto sbar = *pure_branch_time(p, z);
        const auto heavy = TimeFn::affine(sbar, Rational(1));
        const auto dp = min_tree_time(p, heavy, z);
        os << "threshold=" << (th ? th->str() : "none") << " s=" << sbar << " dp=" << dp.tau
           << " cuts=" << dp.num_cuts;
        return th && *th <= Rational(10) && dp.tau == sbar && dp.num_cuts == 0 && detail::witness_ok(dp, heavy, z);
    });
}

inline std::vector<CheckResult> acceptance_suite() {
    return {cut_and_branch_beats_pure_trees(), cuts_below_root_win(),       closed_form_cut_count_exhaustion(),
            nonmonotonicity_witness(), harmonic_bounds(),         approximation_factor_check(),
            root_cuts_suffice(),       oracle_equivalence(),      triangle_family(),
            polynomial_time_threshold()};
}

// ---------------------------------------------------------------------------
// Further structural properties
// ---------------------------------------------------------------------------

inline CheckResult cut_benefit_above_threshold() {
    return detail::run("P1", "above r*delta*, minimal trees cut and carry at least ceil((Z-Zbar)/c) cuts", 60.0,
                       [](std::ostream& os) {
        std::size_t bad = 0;
        std::size_t n = 0;
        DpOptions o;
        o.build_witness = false;
        for (const auto& pt : grids::equal_branching_grid()) {
            const Rational zbar = cut_benefit_threshold(pt.r, pt.c);
            if (pt.bound <= zbar) {
                continue;
            }
            ++n;
            const auto ans = optimal_cuts_equal_lr(pt.bound, pt.r, pt.c);
            const auto dp = min_tree_time(SvbcParams(pt.r, pt.r, pt.c), TimeFn::one(), pt.bound, o);
            const auto pb = pure_branch_time(SvbcParams(pt.r, pt.r, pt.c), pt.bound);
            const auto floor_cuts = min_cut_count_lower(pt.bound, zbar, pt.c);
            if (ans.k_star < 1 || !(dp.tau < *pb) || dp.num_cuts < floor_cuts || ans.k_star < floor_cuts) {
                if (bad++ < 3) {
                    os << "Z=" << pt.bound << " r=" << pt.r << " c=" << pt.c << "; ";
                }
            }
        }
        // Unequal branching with c <= l <= r: some cut still beats pure branching.
        const Rational ells[] = {Rational(1), Rational(2), Rational(3)};
        for (const auto& pt : grids::equal_branching_grid()) {
            for (const auto& ell : ells) {
                if (ell > pt.r || pt.c > ell || pt.bound <= cut_benefit_threshold(pt.r, pt.c)) {
                    continue;
                }
                ++n;
                const SvbcParams p(ell, pt.r, pt.c);
                const auto dp = min_tree_time(p, TimeFn::one(), pt.bound, o);
                if (!(dp.tau < *pure_branch_time(p, pt.bound))) {
                    if (bad++ < 3) {
                        os << "no cut benefit at " << p.str() << " Z=" << pt.bound << "; ";
                    }
                }
            }
        }
        os << n << " instances, " << bad << " failures";
        return bad == 0;
    });
}

inline CheckResult size_bound_sandwich() {
    return detail::run("P2", "f_lb <= size <= f_ub on the harmonic grid", 60.0, [](std::ostream& os) {
        const Rational vals[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
        std::size_t bad = 0;
        std::size_t n = 0;
        const Rational margin = Rational::from_mpq(mpq_class(1, 1'000'000'000));
        for (const auto& z : grids::halves(16)) {
            for (const auto& r : vals) {
                for (const auto& c : vals) {
                    const auto hat = delta_hat_star(z, r, c);
                    for (std::int64_t d = 0; d <= hat; ++d) {
                        const auto du = static_cast<std::uint64_t>(d);
                        if (z - Rational(static_cast<long>(d)) * r <= c) {
                            continue;
                        }
                        ++n;
                        const auto size = kappa_bar(z, r, c, du) + 2 * abc::detail::pow2(d) - 1;
                        const Rational sq(static_cast<long>(size));
                        const auto [lb, ub] = size_bound_intervals(z, r, c, du);
                        if (!(lb - Interval(sq)).certainly_le(margin) || !(Interval(sq) - ub).certainly_le(margin)) {
                            if (bad++ < 3) {
                                os << "Z=" << z << " r=" << r << " c=" << c << " d=" << d << "; ";
                            }
                        }
                    }
                }
            }
        }
        os << n << " (Z, r, c, delta) points, " << bad << " violations";
        return bad == 0;
    });
}

inline CheckResult minimizer_gap() {
    return detail::run("P3", "integer minimizers of f_lb and f_ub differ by -1..2", 10.0, [](std::ostream& os) {
        const Rational vals[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(5)};
        std::size_t bad = 0;
        std::size_t n = 0;
        const double ln2 = std::log(2.0);
        for (const auto& z : grids::halves(40)) {
            for (const auto& r : vals) {
                for (const auto& c : vals) {
                    ++n;
                    const double zd = z.to_double(), rd = r.to_double(), cd = c.to_double();
                    const auto argmin = [&](double shift, double offset) {
                        std::int64_t best = 0;
                        double best_v = INFINITY;
                        for (std::int64_t d = 0; d <= 80; ++d) {
                            const double v = std::exp((zd - d * rd) / cd - shift) + std::exp2(d + 1) - offset;
                            if (v < best_v - 1e-12 * std::abs(best_v)) {
                                best_v = v;
                                best = d;
                            }
                        }
                        return best;
                    };
                    const auto lo = argmin(1.0, 1.0);
                    const auto hi = argmin(0.0, 2.0);
                    const auto m = continuous_minimizers(z, r, c);
                    const double eps = m.delta_ub_c - m.delta_lb_c;
                    if (hi - lo < -1 || hi - lo > 2 || std::abs(eps - 1.0 / (rd / cd + ln2)) > 1e-9) {
                        if (bad++ < 3) {
                            os << "Z=" << z << " r=" << r << " c=" << c << " lo=" << lo << " hi=" << hi << "; ";
                        }
                    }
                }
            }
        }
        os << n << " points, " << bad << " violations";
        return bad == 0;
    });
}

inline CheckResult minimal_cut_count_layers() {
    return detail::run("P4", "harmonic optimum is a root-cut tree with exactly kappa_bar(delta) cuts", 60.0,
                       [](std::ostream& os) {
        const Rational vals[] = {Rational(1, 2), Rational(1), Rational(2), Rational(3)};
        std::size_t bad = 0;
        std::size_t n = 0;
        for (const auto& z : grids::halves(16)) {
            for (const auto& r : vals) {
                for (const auto& c : vals) {
                    ++n;
                    const auto dp = min_tree_time(SvbcParams(r, r, c, Decay::Harmonic), TimeFn::one(), z);
                    const bool ok = dp.witness && dp.witness->is_cut_and_branch() &&
                                    dp.num_cuts == kappa_bar(z, r, c, dp.branch_depth);
                    if (!ok && bad++ < 3) {
                        os << "Z=" << z << " r=" << r << " c=" << c << " cuts=" << dp.num_cuts
                           << " depth=" << dp.branch_depth << "; ";
                    }
                }
            }
        }
        os << n << " points, " << bad << " violations";
        return bad == 0;
    });
}

inline CheckResult symmetric_witnesses() {
    return detail::run("P5", "l=r optima are symmetric and never profit from moving cuts up", 60.0,
                       [](std::ostream& os) {
        std::size_t bad = 0;
        std::size_t n = 0;
        const TimeFn ws[] = {TimeFn::one(), TimeFn::affine(Rational(1, 2), Rational(1)),
                             TimeFn::polynomial({Rational(1), Rational(0), Rational(1)}),
                             TimeFn::affine(Rational(4), Rational(1)), TimeFn::polynomial({Rational(1), Rational(0), Rational(0), Rational(2)})};
        for (const auto& z : grids::halves(16)) {
            for (long r = 1; r <= 3; ++r) {
                for (const auto& c : grids::cut_values_up_to(Rational(r))) {
                    for (const auto& w : ws) {
                        ++n;
                        const SvbcParams p(r, r, c);
                        const auto dp = min_tree_time(p, w, z);
                        bool ok = detail::witness_ok(dp, w, z) && dp.witness->has_uniform_cut_count();
                        // Below a branch node, a chain of q cuts on its children must satisfy
                        // w(z0+q) >= w(z0) + sum_{i<q} w(z0+i).
                        const auto& t = *dp.witness;
                        for (NodeId id = 0; ok && id < t.size(); ++id) {
                            const auto& u = t.node(id);
                            if (u.kind != NodeKind::Branch) {
                                continue;
                            }
                            NodeId v = u.children[0];
                            std::uint64_t chain = 0;
                            while (t.node(v).kind == NodeKind::Cut) {
                                ++chain;
                                v = t.node(v).children[0];
                            }
                            const auto z0 = u.cuts_on_path;
                            Rational prefix(0);
                            for (std::uint64_t q = 1; q <= chain; ++q) {
                                prefix += w(z0 + q - 1);
                                if (w(z0 + q) < w(z0) + prefix) {
                                    ok = false;
                                }
                            }
                        }
                        if (!ok && bad++ < 3) {
                            os << p.str() << " w=" << w.str() << " Z=" << z << "; ";
                        }
                    }
                }
            }
        }
        os << n << " instances, " << bad << " violations";
        return bad == 0;
    });
}

inline std::vector<CheckResult> property_suite() {
    return {cut_benefit_above_threshold(), size_bound_sandwich(), minimizer_gap(), minimal_cut_count_layers(),
            symmetric_witnesses()};
}

} // namespace abc::verify
