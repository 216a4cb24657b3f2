#include "grl/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "grl/fixtures.hpp"
#include "grl/json_io.hpp"

namespace grl {

namespace {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GRL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ull;
}

struct InstanceResult {
    bool ok = true;
    std::string line;
};

// Deterministic parallel map: results are collected per index and emitted in
// order, so output is byte-identical for any worker count.
template <typename Fn>
std::vector<InstanceResult> run_instances(std::size_t count, int threads, Fn&& fn) {
    std::vector<InstanceResult> results(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            results[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

int cmd_field_info(int p, int m, const std::vector<int>& modulus, std::ostream& out) {
    Field f = modulus.empty() ? Field::make(p, m) : Field::make(p, m, modulus);
    json j = field_to_json(f);
    j["q"] = f.q();
    j["generator"] = f.generator();
    out << j.dump(2) << "\n";
    return 0;
}

json construct_to_json(const FamilyParams& p) {
    QuadExt ext = extension_for_order(p.q);
    json j{{"family", p.family}, {"q", p.q}, {"m", p.m}, {"k", p.k}};
    GrlSpec spec = [&] {
        switch (p.family) {
            case 1: {
                auto [s, t] = construct_family1(ext, p.m, p.k);
                j["trace"] = family1_trace_to_json(t);
                return s;
            }
            case 2: {
                auto [s, t] = construct_family2(ext, p.m, p.k);
                j["trace"] = family2_trace_to_json(t);
                return s;
            }
            case 3: {
                auto [s, t] = construct_family3(ext, p.m, p.k);
                j["trace"] = family3_trace_to_json(t);
                return s;
            }
            default: {
                auto [s, t] = construct_family4(ext, p.m, p.k);
                j["trace"] = family4_trace_to_json(t);
                return s;
            }
        }
    }();
    j["spec"] = grl_spec_to_json(spec);

    LinearCode code = build_grl_generator(spec);
    bool hso = is_hermitian_self_orthogonal(code);
    int n_total = code.n(), k = code.k();
    json code_j{{"n", n_total}, {"k", k}, {"hermitian_self_orthogonal", hso}};
    if (p.family <= 2) {
        bool nmds = nmds_criterion_s2(spec).holds;
        code_j["label"] = nmds ? "NMDS" : "MDS";
        code_j["d"] = json{{"value", n_total - k}, {"evidence", nmds ? "certified" : "unknown"}};
        code_j["d_dual"] = json{{"value", k}, {"evidence", nmds ? "certified" : "unknown"}};
        j["quantum"] = quantum_params_to_json(qgrl_parameters(p.family, p.q, p.m, p.k));
    } else {
        code_j["d"] = json{{"value", spec.n() - k + 2}, {"evidence", "lower-bound"}};
        j["quantum"] = quantum_params_to_json(qgrl_parameters(p.family, p.q, p.m, p.k));
    }
    j["code"] = std::move(code_j);
    return j;
}

int cmd_construct(const FamilyParams& p, const std::string& format, std::ostream& out) {
    if (format == "gfmat") {
        GrlSpec spec = construct_family(p);
        write_gfmat(out, build_grl_generator(spec).gen());
        return 0;
    }
    json j = construct_to_json(p);
    if (format == "json") {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "family " << p.family << " (q=" << p.q << ", m=" << p.m << ", k=" << p.k << "): ["
        << j["code"]["n"].get<int>() << "," << j["code"]["k"].get<int>() << "] over GF(" << p.q * p.q << ")\n"
        << "  hermitian_self_orthogonal: " << j["code"]["hermitian_self_orthogonal"].get<bool>() << "\n"
        << "  quantum: [[" << j["quantum"]["n"].get<int>() << "," << j["quantum"]["k"].get<int>() << ","
        << (p.family >= 3 ? ">=" : "") << j["quantum"]["d"]["value"].get<int>() << "]]_" << p.q
        << "  S(Q)=" << j["quantum"]["defect"].get<std::string>() << "\n";
    return 0;
}

int cmd_verify(const std::string& spec_path, bool do_nmds, bool do_hso, bool do_distance, std::uint64_t budget,
               std::ostream& out, std::ostream& err) {
    std::ifstream in(spec_path);
    if (!in) {
        err << "error: cannot open " << spec_path << "\n";
        return 2;
    }
    json jin = json::parse(in, nullptr, true, true);
    GrlSpec spec = grl_spec_from_json(jin);  // throws invalid_argument on bad invariants

    if (!do_nmds && !do_hso && !do_distance) {
        do_nmds = spec.s() >= 2;
        do_hso = spec.f.has_conj();
        do_distance = false;
    }

    json report = json::array();
    bool all_hold = true;
    bool nmds_holds = false;
    if (do_nmds) {
        if (spec.s() == 2) {
            auto r = nmds_criterion_s2(spec);
            nmds_holds = r.holds;
            report.push_back(s2_report_to_json(r));
        } else if (spec.s() == 3) {
            auto r = nmds_criterion_s3(spec);
            nmds_holds = r.holds;
            report.push_back(s3_report_to_json(r));
        } else {
            err << "error: NMDS criterion needs s in {2,3}\n";
            return 2;
        }
        all_hold = all_hold && nmds_holds;
    }
    if (do_hso) {
        auto r = spec.s() == 2 ? so_criterion_s2(spec)
             : spec.s() == 3 ? so_criterion_s3(spec)
                             : throw std::invalid_argument("Hermitian criterion needs s in {2,3}");
        LinearCode code = build_grl_generator(spec);
        bool gram_zero = is_hermitian_self_orthogonal(code);
        json jj = so_report_to_json(r);
        jj["gram_zero"] = gram_zero;
        report.push_back(std::move(jj));
        all_hold = all_hold && r.holds && gram_zero == r.holds;
    }
    if (do_distance) {
        LinearCode code = build_grl_generator(spec);
        int d = min_distance_exact(code, {budget, false});
        json jj{{"check", "distance"}, {"d", d}, {"evidence", "exact"}};
        if (do_nmds && nmds_holds) {
            bool consistent = d == code.n() - code.k();
            jj["consistent_with_nmds"] = consistent;
            all_hold = all_hold && consistent;
        }
        report.push_back(std::move(jj));
    }
    out << report.dump(2) << "\n";
    return all_hold ? 0 : 1;
}

int cmd_classify(const std::string& gfmat_path, std::uint64_t budget, std::ostream& out, std::ostream& err) {
    std::ifstream in(gfmat_path);
    if (!in) {
        err << "error: cannot open " << gfmat_path << "\n";
        return 2;
    }
    Matrix gen = read_gfmat(in);
    LinearCode code(std::move(gen));
    Classification c = classify(code, {budget, true});
    bool hso = code.field().has_conj() ? std::optional<bool>(is_hermitian_self_orthogonal(code)).value() : false;
    out << code_report_to_json(code.n(), code.k(),
                               c, code.field().has_conj() ? std::optional<bool>(hso) : std::nullopt)
               .dump(2)
        << "\n";
    return 0;
}

int cmd_table2(const std::string& rows_path, const std::string& known_path, const std::vector<int>& q_filter,
               const std::string& format, std::ostream& out, std::ostream& err) {
    std::ifstream rows_in(rows_path);
    if (!rows_in) {
        err << "error: cannot open " << rows_path << "\n";
        return 2;
    }
    auto rows = load_table2_rows_csv(rows_in, err);
    if (!q_filter.empty()) {
        std::erase_if(rows, [&](const Table2Row& r) {
            return std::find(q_filter.begin(), q_filter.end(), r.q) == q_filter.end();
        });
    }
    std::vector<KnownCode> known;
    if (!known_path.empty()) {
        std::ifstream known_in(known_path);
        if (!known_in) {
            err << "error: cannot open " << known_path << "\n";
            return 2;
        }
        known = load_known_codes_csv(known_in, err);
    }
    auto cells = table2_report(rows, known);
    if (format == "json") {
        json j = json::array();
        for (const auto& c : cells) {
            json cj{{"family", c.row.family}, {"q", c.row.q},      {"m", c.row.m},
                    {"k", c.row.k},           {"ours", quantum_params_to_json(c.ours)}};
            if (c.competitor) {
                cj["known"] = json{{"n", c.competitor->n},
                                   {"k", c.competitor->k},
                                   {"d", c.competitor->d},
                                   {"d_is_bound", c.competitor->d_is_bound},
                                   {"source", c.competitor->source},
                                   {"defect", c.competitor_defect->str()}};
            }
            j.push_back(std::move(cj));
        }
        out << j.dump(2) << "\n";
    } else {
        print_table2(out, cells, format);
    }
    return 0;
}

int cmd_sweep(int family_filter, int qmax, std::uint64_t budget, int threads, std::ostream& out) {
    std::vector<FamilyParams> all;
    for (int family = 1; family <= 4; ++family) {
        if (family_filter != 0 && family_filter != family) continue;
        for (int q : {4, 5, 7, 8, 9}) {
            if (q > qmax) continue;
            for (const auto& p : family_grid(family, q)) all.push_back(p);
        }
    }
    auto results = run_instances(all.size(), threads, [&](std::size_t i) {
        const FamilyParams& p = all[i];
        InstanceResult r;
        std::ostringstream line;
        line << "family=" << p.family << " q=" << p.q << " m=" << p.m << " k=" << p.k;
        try {
            QuadExt ext = extension_for_order(p.q);
            GrlSpec spec = [&] {
                switch (p.family) {
                    case 1: return construct_family1(ext, p.m, p.k).first;
                    case 2: return construct_family2(ext, p.m, p.k).first;
                    case 3: return construct_family3(ext, p.m, p.k).first;
                    default: return construct_family4(ext, p.m, p.k).first;
                }
            }();
            LinearCode code = build_grl_generator(spec);
            line << " n=" << code.n() << " k=" << code.k();
            if (!is_hermitian_self_orthogonal(code)) {
                r.ok = false;
                line << " GRAM-NONZERO";
            }
            if (p.family <= 2) {
                if (!nmds_criterion_s2(spec).holds) {
                    r.ok = false;
                    line << " NMDS-CRITERION-FAILED";
                }
            } else {
                int bound = spec.n() - p.k + 2;
                try {
                    int d = min_distance_exact(code, {budget, true});
                    line << " d=" << d << " bound=" << bound;
                    if (d < bound) {
                        r.ok = false;
                        line << " DISTANCE-BELOW-BOUND";
                    }
                } catch (const budget_exceeded&) {
                    line << " d>=" << bound << " (bound only; enumeration infeasible)";
                }
            }
        } catch (const std::exception& e) {
            r.ok = false;
            line << " ERROR: " << e.what();
        }
        r.line = (r.ok ? "OK   " : "FAIL ") + line.str();
        return r;
    });
    bool all_ok = true;
    for (const auto& r : results) {
        out << r.line << "\n";
        all_ok = all_ok && r.ok;
    }
    out << (all_ok ? "sweep passed" : "sweep FAILED") << " (" << results.size() << " instances)\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized Roth-Lempel code toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker pool size")->capture_default_str();
    std::uint64_t budget = default_budget();

    auto* fi = app.add_subcommand("field-info", "describe a finite field");
    int p = 0, m = 1;
    std::vector<int> modulus;
    fi->add_option("--p", p, "characteristic")->required();
    fi->add_option("--m", m, "extension degree")->capture_default_str();
    fi->add_option("--modulus", modulus, "modulus coefficients, low to high");

    auto* co = app.add_subcommand("construct", "build a family instance");
    FamilyParams fp;
    bool as_json = false, as_gfmat = false;
    co->add_option("--family", fp.family, "family 1..4")->required();
    co->add_option("--q", fp.q, "base field order")->required();
    co->add_option("--m", fp.m, "coset count")->required();
    co->add_option("--k", fp.k, "dimension")->required();
    co->add_flag("--json", as_json, "machine-readable output");
    co->add_flag("--gfmat", as_gfmat, "print the generator in GFMAT v1");

    auto* ve = app.add_subcommand("verify", "check a spec file");
    std::string spec_path;
    bool v_nmds = false, v_hso = false, v_dist = false;
    ve->add_option("--spec", spec_path, "GRL spec JSON file")->required();
    ve->add_flag("--nmds", v_nmds, "run the NMDS criterion");
    ve->add_flag("--hso", v_hso, "run the Hermitian self-orthogonality criterion");
    ve->add_flag("--distance", v_dist, "enumerate the exact minimum distance");
    ve->add_option("--budget", budget, "enumeration budget");

    auto* cl = app.add_subcommand("classify", "classify a code from a GFMAT file");
    std::string gfmat_path;
    cl->add_option("--gfmat", gfmat_path, "generator matrix file")->required();
    cl->add_option("--budget", budget, "enumeration budget");

    auto* exs = app.add_subcommand("examples", "replay the bundled worked examples");

    auto* t2 = app.add_subcommand("table2", "emit the quantum-code comparison table");
    std::string rows_path, known_path, format = "human";
    std::vector<int> q_filter;
    t2->add_option("--rows", rows_path, "curated rows CSV")->required();
    t2->add_option("--known", known_path, "known-codes CSV");
    t2->add_option("--q", q_filter, "restrict to these q values");
    t2->add_option("--format", format, "human | csv | json")->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "run the full family grids");
    int family_filter = 0, qmax = 9;
    sw->add_option("--family", family_filter, "restrict to one family (0 = all)")->capture_default_str();
    sw->add_option("--qmax", qmax, "largest base field order")->capture_default_str();
    sw->add_option("--budget", budget, "enumeration budget");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fi->parsed()) return cmd_field_info(p, m, modulus, out);
        if (co->parsed()) return cmd_construct(fp, as_gfmat ? "gfmat" : as_json ? "json" : "human", out);
        if (ve->parsed()) return cmd_verify(spec_path, v_nmds, v_hso, v_dist, budget, out, err);
        if (cl->parsed()) return cmd_classify(gfmat_path, budget, out, err);
        if (exs->parsed()) return fixtures::replay_worked_examples(out) ? 0 : 1;
        if (t2->parsed()) return cmd_table2(rows_path, known_path, q_filter, format, out, err);
        if (sw->parsed()) return cmd_sweep(family_filter, qmax, budget, threads, out);
    } catch (const budget_exceeded& e) {
        err << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace grl
