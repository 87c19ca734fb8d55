// Copyright (c) abc-tree contributors.
// SPDX-License-Identifier: Apache-2.0
//
// abc_tree: command-line front end for the branch-and-cut tree model.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abc/abc.hpp"

namespace {

using json = nlohmann::json;

enum class Format { Text, Csv, Dot, Json };

struct Options {
    std::string ell = "1";
    std::string r = "1";
    std::string c = "1";
    std::string bound = "0";
    std::string w = "one";
    std::string decay = "constant";
    bool compare_root_only = false;
    std::string out;
    std::string format = "text";
    // sweep
    std::string ell_list = "1,2,3";
    std::string r_list = "1,2,3,4";
    std::string c_list = "1/2,1,2";
    std::string w_list = "one";
    std::string decay_list = "constant";
    std::string z_max = "8";
    std::string z_step = "1/2";
    unsigned threads = 0;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "dot") return Format::Dot;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "'");
}

void require_format(Format f, std::initializer_list<Format> allowed, const std::string& cmd) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
        throw UsageError("format not supported by " + cmd);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

abc::DpOptions dp_options() {
    abc::DpOptions o;
    if (const char* env = std::getenv("ABC_TREE_MAX_STATES")) {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(env, &pos);
            if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
            o.max_states = v;
        } catch (const std::exception&) {
            throw UsageError(std::string("ABC_TREE_MAX_STATES must be a positive integer, got '") + env + "'");
        }
    }
    return o;
}

abc::SvbcParams params_of(const Options& o) {
    return abc::SvbcParams(abc::Rational::parse(o.ell), abc::Rational::parse(o.r), abc::Rational::parse(o.c),
                           abc::parse_decay(o.decay));
}

json tree_json(const abc::BcTree& t) {
    json nodes = json::array();
    for (abc::NodeId id = 0; id < t.size(); ++id) {
        const auto& n = t.node(id);
        json j{{"id", id},
               {"kind", n.kind == abc::NodeKind::Leaf ? "leaf" : (n.kind == abc::NodeKind::Cut ? "cut" : "branch")},
               {"gap", n.gap.str()},
               {"z", n.cuts_on_path}};
        json ch = json::array();
        for (auto c : n.children) {
            if (c != abc::kNoNode) ch.push_back(c);
        }
        j["children"] = ch;
        nodes.push_back(j);
    }
    return nodes;
}

int cmd_optcuts(const Options& o, Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Json}, "optcuts");
    const auto p = params_of(o);
    const auto z = abc::Rational::parse(o.bound);
    const auto ans = abc::optimal_cuts_equal_lr(p, z);
    if (f == Format::Json) {
        out << json{{"k_star", ans.k_star},
                    {"case", abc::to_string(ans.case_taken)},
                    {"min_size", ans.min_size_lower_bound},
                    {"delta_star", ans.delta_star},
                    {"depth_max", ans.depth_max}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "k*=" << ans.k_star << " size>=" << ans.min_size_lower_bound << "\n";
    out << "case=" << abc::to_string(ans.case_taken) << " delta*=" << ans.delta_star
        << " depth_max=" << ans.depth_max << "\n";
    return 0;
}

int cmd_mintree(const Options& o, Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Dot, Format::Json}, "mintree");
    const auto p = params_of(o);
    const auto w = abc::TimeFn::parse(o.w);
    const auto z = abc::Rational::parse(o.bound);
    auto opts = dp_options();
    const auto res = abc::min_tree_time(p, w, z, opts);
    std::optional<abc::OptResult> ro;
    if (o.compare_root_only) {
        auto ro_opts = opts;
        ro_opts.build_witness = false;
        ro = abc::min_tree_time_root_cuts_only(p, w, z, ro_opts);
    }
    if (f == Format::Dot) {
        if (!res.witness) throw abc::DomainError("witness tree too large to export");
        out << abc::to_dot(*res.witness);
        return 0;
    }
    if (f == Format::Json) {
        json j{{"params", p.str()},
               {"w", w.str()},
               {"Z", z.str()},
               {"tau", res.tau.str()},
               {"size", res.size},
               {"cuts", res.num_cuts},
               {"branch_depth", res.branch_depth}};
        if (ro) j["root_only_tau"] = ro->tau.str();
        if (res.witness) j["tree"] = tree_json(*res.witness);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "tau=" << res.tau;
    if (ro) out << " root-only=" << ro->tau;
    out << "\n";
    out << "size=" << res.size << " cuts=" << res.num_cuts << " branch_depth=" << res.branch_depth << "\n";
    return 0;
}

int cmd_svbwc(const Options& o, Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Csv, Format::Json}, "svbwc");
    const auto r = abc::Rational::parse(o.r);
    const auto c = abc::Rational::parse(o.c);
    const auto z = abc::Rational::parse(o.bound);
    const auto plan = abc::approx_cut_count(z, r, c);
    if (f == Format::Csv) {
        out << "delta,cuts,size,chosen\n";
        for (const auto& cand : plan.candidates) {
            out << cand.delta << "," << cand.cuts << "," << cand.size << ","
                << (cand.delta == plan.chosen_delta ? 1 : 0) << "\n";
        }
        return 0;
    }
    if (f == Format::Json) {
        json cands = json::array();
        for (const auto& cand : plan.candidates) {
            cands.push_back({{"delta", cand.delta}, {"cuts", cand.cuts}, {"size", cand.size}});
        }
        out << json{{"candidates", cands},
                    {"chosen_delta", plan.chosen_delta},
                    {"cuts", plan.num_cuts},
                    {"size", plan.tree_size},
                    {"delta_bar_c", plan.delta_bar_c},
                    {"delta_hat_star", plan.delta_hat_star},
                    {"factor", abc::approximation_factor(r, c).upper()}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "delta  cuts  size\n";
    for (const auto& cand : plan.candidates) {
        out << cand.delta << "  " << cand.cuts << "  " << cand.size << "\n";
    }
    out << "chosen delta=" << plan.chosen_delta << " cuts=" << plan.num_cuts << " size=" << plan.tree_size << "\n";
    return 0;
}

struct SweepPoint {
    abc::SvbcParams params;
    abc::Rational bound;
    abc::TimeFn w;
};

struct SweepRow {
    std::tuple<abc::Rational, abc::Rational, abc::Rational, int, abc::Rational, std::size_t> key;
    std::string line;
};

std::string sweep_row(const SweepPoint& pt, const abc::DpOptions& opts) {
    const auto& p = pt.params;
    std::ostringstream os;
    os << p.ell << "," << p.r << "," << p.c << "," << abc::to_string(p.decay) << "," << pt.bound << ","
       << pt.w.str() << ",";
    // Closed-form plan only where it applies: l = r, unit time, 0 < c <= r.
    std::optional<std::uint64_t> plan_size;
    const bool planned = p.equal_branching() && pt.w.kind() == abc::TimeFn::Kind::ConstantOne && p.can_cut() &&
                         p.c <= p.r;
    if (planned && p.decay == abc::Decay::Constant) {
        const auto ans = abc::optimal_cuts_equal_lr(pt.bound, p.r, p.c);
        plan_size = abc::size_by_cut_count(pt.bound, p.r, p.c, ans.k_star);
        os << ans.k_star << "," << abc::to_string(ans.case_taken) << ",";
    } else if (planned && pt.bound > p.c) {
        const auto plan = abc::approx_cut_count(pt.bound, p.r, p.c);
        plan_size = plan.tree_size;
        os << plan.num_cuts << ",approx,";
    } else {
        os << ",,";
    }
    const auto dp = abc::min_tree_time(p, pt.w, pt.bound, opts);
    const auto ro = abc::min_tree_time_root_cuts_only(p, pt.w, pt.bound, opts);
    os << dp.tau << "," << dp.size << "," << dp.num_cuts << "," << ro.tau << ",";
    if (plan_size) {
        os << abc::Rational(static_cast<long>(*plan_size), static_cast<long>(dp.size));
    }
    return os.str();
}

int cmd_sweep(const Options& o, Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Csv}, "sweep");
    std::vector<SweepPoint> points;
    std::vector<std::tuple<abc::Rational, abc::Rational, abc::Rational, int, abc::Rational, std::size_t>> keys;
    const auto z_max = abc::Rational::parse(o.z_max);
    const auto z_step = abc::Rational::parse(o.z_step);
    if (z_step.sign() <= 0) throw UsageError("--Z-step must be positive");
    const auto ws = split(o.w_list, ';');
    for (const auto& ls : split(o.ell_list, ',')) {
        for (const auto& rs : split(o.r_list, ',')) {
            for (const auto& cs : split(o.c_list, ',')) {
                for (const auto& ds : split(o.decay_list, ',')) {
                    const auto ell = abc::Rational::parse(ls);
                    const auto r = abc::Rational::parse(rs);
                    if (ell > r) continue;
                    const abc::SvbcParams p(ell, r, abc::Rational::parse(cs), abc::parse_decay(ds));
                    for (std::size_t wi = 0; wi < ws.size(); ++wi) {
                        const auto w = abc::TimeFn::parse(ws[wi]);
                        for (abc::Rational z(0); z <= z_max; z += z_step) {
                            points.push_back({p, z, w});
                            keys.emplace_back(p.ell, p.r, p.c, static_cast<int>(p.decay), z, wi);
                        }
                    }
                }
            }
        }
    }
    const auto opts = [] {
        auto d = dp_options();
        d.build_witness = false;
        return d;
    }();
    std::vector<SweepRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(points.size());
    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(o.threads ? o.threads : std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(std::max<std::size_t>(points.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < points.size(); i = next++) {
                rows[i].key = keys[i];
                try {
                    rows[i].line = sweep_row(points[i], opts);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!errors[i].empty()) {
            throw abc::ModelError("sweep point " + points[i].params.str() + " Z=" + points[i].bound.str() + ": " +
                                  errors[i]);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.key < b.key; });
    out << "ell,r,c,decay,Z,w,k_star,case,dp_tau,dp_size,dp_cuts,root_only_tau,ratio\n";
    for (const auto& row : rows) out << row.line << "\n";
    return 0;
}

int cmd_verify(Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Json}, "verify");
    auto results = abc::verify::acceptance_suite();
    for (auto& r : abc::verify::property_suite()) results.push_back(std::move(r));
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    if (f == Format::Json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                           {"seconds", r.seconds}});
        }
        out << json{{"checks", arr}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " [" << r.detail << "] ("
                << r.seconds << "s)\n";
        }
        out << (results.size() - failed) << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_example(const std::string& m_text, Format f, std::ostream& out) {
    require_format(f, {Format::Text, Format::Json}, "example");
    std::uint64_t m = 0;
    try {
        m = std::stoull(m_text);
    } catch (const std::exception&) {
        throw UsageError("--m must be a positive integer");
    }
    const abc::TriangleInstance inst(m);
    const auto [p, z] = abc::derive_model(m);
    const auto plan = abc::optimal_plan(m);
    auto opts = dp_options();
    opts.build_witness = false;
    const auto dp = abc::min_tree_time(p, abc::TimeFn::one(), z, opts);
    const auto pure = abc::triangle_pure_branch_size(m);
    if (f == Format::Json) {
        out << json{{"m", m},
                    {"lp", inst.lp_value.str()},
                    {"ip", inst.ip_value.str()},
                    {"params", p.str()},
                    {"Z", z.str()},
                    {"k_star", plan.k_star},
                    {"size", plan.min_size_lower_bound},
                    {"dp_size", dp.size},
                    {"pure_branch_size", pure}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "independent set on " << m << " disjoint triangles\n";
    out << "lp=" << inst.lp_value << " ip=" << inst.ip_value << " Z=" << z << "\n";
    out << "model " << p.str() << "\n";
    out << "k*=" << plan.k_star << " size=" << plan.min_size_lower_bound << " dp_size=" << dp.size
        << " pure_branch_size=" << pure << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree size analysis for the abstract branch-and-cut model"};
    app.require_subcommand(1, 1);
    Options o;
    std::string m_text = "3";

    auto add_model = [&](CLI::App* sub, bool with_ell, bool with_w) {
        if (with_ell) sub->add_option("--l", o.ell, "left branch improvement (p/q)");
        sub->add_option("--r", o.r, "right branch improvement (p/q)");
        sub->add_option("--c", o.c, "cut improvement (p/q)");
        sub->add_option("--Z", o.bound, "bound to prove (p/q)");
        if (with_w) {
            sub->add_option("--w", o.w, "time function: one | affine:a,b | poly:c0,c1,.. | table:v0,v1,..");
            sub->add_option("--decay", o.decay, "cut decay: constant | harmonic");
        }
    };
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "write output to FILE");
        sub->add_option("--format", o.format, "text | csv | dot | json");
    };

    auto* optcuts = app.add_subcommand("optcuts", "optimal root cut count for l = r, unit time");
    add_model(optcuts, true, false);
    add_io(optcuts);

    auto* mintree = app.add_subcommand("mintree", "minimum tree time by dynamic programming");
    add_model(mintree, true, true);
    mintree->add_flag("--compare-root-only", o.compare_root_only, "also report the best root-cuts-only tree");
    add_io(mintree);

    auto* svbwc = app.add_subcommand("svbwc", "approximate cut count under harmonic cut decay");
    add_model(svbwc, false, false);
    add_io(svbwc);

    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("--l", o.ell_list, "comma-separated left improvements");
    sweep->add_option("--r", o.r_list, "comma-separated right improvements");
    sweep->add_option("--c", o.c_list, "comma-separated cut improvements");
    sweep->add_option("--w", o.w_list, "semicolon-separated time functions");
    sweep->add_option("--decay", o.decay_list, "comma-separated decays");
    sweep->add_option("--Z", o.z_max, "largest bound; bounds run 0, step, .., Z");
    sweep->add_option("--Z-step", o.z_step, "bound step");
    sweep->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    add_io(sweep);

    auto* verify = app.add_subcommand("verify", "run the acceptance and property checks");
    add_io(verify);

    auto* example = app.add_subcommand("example", "disjoint triangles independent set instance");
    example->add_option("--m", m_text, "number of triangles");
    add_io(example);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const bool is_sweep = sweep->parsed();
        const Format f = is_sweep && o.format == "text" ? Format::Csv : parse_format(o.format);
        std::ofstream file;
        if (!o.out.empty()) {
            file.open(o.out);
            if (!file) throw UsageError("cannot open " + o.out);
        }
        std::ostream& out = o.out.empty() ? std::cout : file;
        if (optcuts->parsed()) return cmd_optcuts(o, f, out);
        if (mintree->parsed()) return cmd_mintree(o, f, out);
        if (svbwc->parsed()) return cmd_svbwc(o, f, out);
        if (is_sweep) return cmd_sweep(o, f, out);
        if (verify->parsed()) return cmd_verify(f, out);
        return cmd_example(m_text, f, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const abc::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
