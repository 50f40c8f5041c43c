#include "llr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "llr/balance.hpp"
#include "llr/bench.hpp"
#include "llr/io.hpp"
#include "llr/nmf.hpp"
#include "llr/poset.hpp"
#include "llr/reduce.hpp"

namespace llr {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LLR_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

/// Replaces entries below eps with eps. Returns whether anything changed.
bool clamp_entries(Matrix& a, double eps) {
    bool clamped = false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a(i, j) < eps) {
                a(i, j) = eps;
                clamped = true;
            }
    return clamped;
}

std::vector<double> parse_reals(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stod(tok));
    return out;
}

json matrix_to_json(const Matrix& a) {
    json rows = json::array();
    for (long i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CommonInput {
    std::string path;
    bool header = false;
    double clamp = 0.0;  // 0 = no clamping
};

Matrix load_positive(const CommonInput& in, json* summary) {
    Matrix a = read_matrix_file(in.path, in.header);
    bool clamped = false;
    if (in.clamp > 0.0) clamped = clamp_entries(a, in.clamp);
    if (summary) (*summary)["clamped"] = clamped;
    require_positive(a);
    return a;
}

int cmd_reduce(const CommonInput& in, long rank,
               const std::vector<long>& columns, std::uint64_t seed,
               const std::string& out_path, std::ostream& out) {
    json summary;
    Matrix a = load_positive(in, &summary);

    ReductionResult res;
    if (!columns.empty()) {
        BingoPlan plan = make_plan(a.cols(), rank, columns);
        res = lrrr(a, plan);
    } else {
        res = lrrr_auto(a, rank, seed);
    }
    write_csv_file(out_path, res.output);

    summary["n_rows"] = a.rows();
    summary["n_cols"] = a.cols();
    summary["rank_bound"] = rank;
    summary["kl"] = res.kl_from_input;
    summary["ls"] = res.ls_from_input;
    summary["elapsed_seconds"] = res.elapsed_seconds;
    summary["plan_columns"] = res.plan.selected;
    summary["plan_partition"] = format_partition(res.plan);
    summary["transposed"] = res.transposed;
    if (!res.rng_algorithm.empty()) summary["rng"] = res.rng_algorithm;
    out << summary.dump() << "\n";
    return kExitOk;
}

int cmd_score(const CommonInput& in_a, const std::string& b_path,
              long ref_rank, std::uint64_t seed, std::ostream& out) {
    json summary;
    Matrix a = load_positive(in_a, nullptr);
    Matrix b = read_matrix_file(b_path);
    summary["kl"] = kl_divergence(a, b);
    summary["ls"] = ls_error(a, b);
    if (ref_rank > 0) {
        ReductionResult ref = lrrr_auto(a, ref_rank, seed);
        summary["ref_rank"] = ref_rank;
        summary["phi_kl"] = summary["kl"].get<double>() / ref.kl_from_input;
        summary["phi_ls"] = summary["ls"].get<double>() / ref.ls_from_input;
    }
    out << summary.dump() << "\n";
    return kExitOk;
}

int cmd_bench(const SweepSpec& spec, const std::string& out_path,
              const std::string& format, std::ostream& out) {
    std::vector<BenchRecord> records = run_sweep(spec);
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot open " + out_path + " for writing");
    if (format == "csv") write_records_csv(file, records);
    else write_records_ndjson(file, records);

    json summary = json::array();
    for (const BenchSummary& s : summarize(records)) {
        summary.push_back({{"method", s.method},
                           {"n_rows", s.n_rows},
                           {"n_cols", s.n_cols},
                           {"target_rank", s.target_rank},
                           {"trials", s.trials},
                           {"median_elapsed", s.median_elapsed},
                           {"median_phi_kl", s.median_phi_kl},
                           {"median_phi_ls", s.median_phi_ls}});
    }
    out << summary.dump() << "\n";
    return kExitOk;
}

int cmd_balance(const std::vector<double>& s, const std::vector<double>& t,
                long curve_samples, const std::string& out_path,
                std::ostream& out) {
    BalanceSpec spec;
    spec.s = Eigen::Map<const Vector>(s.data(), s.size());
    spec.t = Eigen::Map<const Vector>(t.data(), t.size());
    Matrix singleton = balanced_rank1(spec);
    write_csv_file(out_path, singleton);

    json summary;
    summary["n_rows"] = singleton.rows();
    summary["n_cols"] = singleton.cols();
    summary["matrix"] = matrix_to_json(singleton);
    if (curve_samples > 0) {
        if (s.size() != 2 || t.size() != 2)
            throw InvalidSpecError("--curve-samples requires 2x2 marginals");
        double lo = std::max(0.0, spec.s(1) + spec.t(1) - 1.0);
        double hi = std::min(spec.s(1), spec.t(1));
        std::vector<double> b22;
        for (long k = 1; k <= curve_samples; ++k)
            b22.push_back(lo + (hi - lo) * k / (curve_samples + 1));
        json curve = json::array();
        for (const CurvePoint& pt : curve_2x2(spec, b22)) {
            curve.push_back({{"b22", pt.b22},
                             {"B", matrix_to_json(pt.b)},
                             {"theta", matrix_to_json(pt.theta)},
                             {"eta", matrix_to_json(pt.eta)}});
        }
        summary["curve"] = std::move(curve);
    }
    out << summary.dump() << "\n";
    return kExitOk;
}

int cmd_coords(const CommonInput& in, const std::string& emit,
               const std::string& out_path, double bingo_tol,
               std::ostream& out) {
    Matrix a = load_positive(in, nullptr);
    auto [p, total] = normalize(a);
    ThetaCoords theta = theta_from_p(p);
    EtaCoords eta = eta_from_p(p);

    if (emit == "theta") {
        write_csv_file(out_path, theta.theta);
    } else if (emit == "eta") {
        write_csv_file(out_path, eta.eta);
    } else {
        json both;
        both["theta"] = matrix_to_json(theta.theta);
        both["eta"] = matrix_to_json(eta.eta);
        std::ofstream file(out_path);
        if (!file)
            throw ParseError("cannot open " + out_path + " for writing");
        file << both.dump() << "\n";
    }

    json summary;
    summary["n_rows"] = a.rows();
    summary["n_cols"] = a.cols();
    summary["total"] = total;
    if (bingo_tol >= 0.0) {
        double tol = bingo_tol > 0.0 ? bingo_tol : default_bingo_tol(theta);
        Bingos b = find_bingos(theta, tol);
        summary["bingo_tol"] = tol;
        summary["vertical_bingos"] = b.vertical;
        summary["horizontal_bingos"] = b.horizontal;
    }
    out << summary.dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Legendre rank reduction toolkit"};
    app.require_subcommand(1);

    CommonInput in;
    std::uint64_t seed = default_seed();
    long rank = 1;
    std::string columns_arg, out_path, b_path;
    long ref_rank = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", in.path, "input matrix (CSV or PGM)")
            ->required();
        cmd->add_flag("--header", in.header, "skip one CSV header line");
        cmd->add_option("--clamp", in.clamp,
                        "replace entries below eps with eps before use");
    };

    CLI::App* reduce = app.add_subcommand("reduce", "Legendre rank reduction");
    add_input(reduce);
    reduce->add_option("--rank", rank, "target rank")->required();
    reduce->add_option("--columns", columns_arg,
                       "explicit bingo columns, comma-separated");
    reduce->add_option("--seed", seed, "plan sampling seed");
    reduce->add_option("--out", out_path, "output matrix path")->required();

    CLI::App* score = app.add_subcommand("score", "divergences between two "
                                                  "matrices");
    add_input(score);
    score->add_option("b", b_path, "comparison matrix")->required();
    score->add_option("--ref-rank", ref_rank,
                      "also report phi scores against an LrRR reference run");
    score->add_option("--seed", seed, "reference-run seed");

    std::string axis = "size", methods_arg = "lrrr", values_arg, format =
        "ndjson";
    SweepSpec sweep;
    CLI::App* bench = app.add_subcommand("bench", "synthetic sweeps");
    bench->add_option("--axis", axis, "size|rank")
        ->check(CLI::IsMember({"size", "rank"}));
    bench->add_option("--values", values_arg, "comma-separated grid values")
        ->required();
    bench->add_option("--fixed", sweep.fixed_value,
                      "r for size sweeps, n for rank sweeps")->required();
    bench->add_option("--methods", methods_arg,
                      "comma-separated method names");
    bench->add_option("--trials", sweep.trials, "trials per grid point");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--max-iters", sweep.nmf_max_iters,
                      "iteration cap for the NMF baselines");
    bench->add_option("--format", format, "ndjson|csv")
        ->check(CLI::IsMember({"ndjson", "csv"}));
    bench->add_option("--out", out_path, "records output path")->required();

    std::string s_arg, t_arg;
    long curve_samples = 0;
    CLI::App* balance = app.add_subcommand("balance",
                                           "balanced rank-1 matrices");
    balance->add_option("--s", s_arg, "target row sums")->required();
    balance->add_option("--t", t_arg, "target column sums")->required();
    balance->add_option("--curve-samples", curve_samples,
                        "emit the 2x2 balanced-family curve");
    balance->add_option("--out", out_path, "output matrix path")->required();

    std::string emit = "both";
    double bingo_tol = -1.0;
    CLI::App* coords = app.add_subcommand("coords",
                                          "log-linear coordinate grids");
    add_input(coords);
    coords->add_option("--emit", emit, "theta|eta|both")
        ->check(CLI::IsMember({"theta", "eta", "both"}));
    coords->add_option("--out", out_path, "output path")->required();
    coords->add_flag_callback("--bingo-report",
                              [&] { if (bingo_tol < 0) bingo_tol = 0.0; },
                              "print detected bingos");
    coords->add_option("--bingo-tol", bingo_tol,
                       "bingo zero tolerance (implies a report)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (reduce->parsed()) {
            std::vector<long> cols;
            if (!columns_arg.empty())
                for (double v : parse_reals(columns_arg))
                    cols.push_back(static_cast<long>(v));
            return cmd_reduce(in, rank, cols, seed, out_path, out);
        }
        if (score->parsed())
            return cmd_score(in, b_path, ref_rank, seed, out);
        if (bench->parsed()) {
            sweep.axis = axis == "size" ? SweepAxis::size : SweepAxis::rank;
            for (double v : parse_reals(values_arg))
                sweep.values.push_back(static_cast<long>(v));
            std::stringstream ss(methods_arg);
            std::string tok;
            while (std::getline(ss, tok, ','))
                sweep.methods.push_back(tok);
            sweep.seed = seed;
            return cmd_bench(sweep, out_path, format, out);
        }
        if (balance->parsed())
            return cmd_balance(parse_reals(s_arg), parse_reals(t_arg),
                               curve_samples, out_path, out);
        if (coords->parsed())
            return cmd_coords(in, emit, out_path, bingo_tol, out);
        err << "no subcommand\n";
        return kExitUsage;
    } catch (const NonPositiveEntryError& e) {
        err << e.what() << " (use --clamp to lift zeros)\n";
        return kExitDomain;
    } catch (const NegativeEntryError& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const NotADistributionError& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const NotNormalizedError& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        // Validation-class failures: bad flags, shapes, specs, files.
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace llr
