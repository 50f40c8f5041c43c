#include "llr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "llr/nmf.hpp"
#include "llr/reduce.hpp"
#include "llr/rng.hpp"

namespace llr {

Clock steady_clock_seconds() {
    return [] {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    };
}

const std::vector<std::string>& known_methods() {
    static const std::vector<std::string> methods = {"lrrr", "nmf-ls",
                                                     "nmf-kl", "lra-nmf"};
    return methods;
}

Matrix gen_uniform(long n, long m, std::uint64_t seed) {
    constexpr double eps = 1e-9;
    Rng rng(seed);
    Matrix a(n, m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j)
            a(i, j) = eps + (1.0 - eps) * rng.uniform01();
    return a;
}

namespace {

Matrix run_method(const std::string& method, const Matrix& a, long r,
                  std::uint64_t seed, long max_iters) {
    if (method == "lrrr") return lrrr_auto(a, r, seed).output;
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.max_iters = max_iters;
    if (method == "nmf-ls") return nmf_ls(a, r, cfg).product();
    if (method == "nmf-kl") return nmf_kl(a, r, cfg).product();
    if (method == "lra-nmf") {
        cfg.inner_rank = std::min(2 * r, std::min(a.rows(), a.cols()) - 1);
        return lra_nmf(a, r, cfg).product();
    }
    throw UnknownMethodError(method);
}

double safe_ratio(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 1.0 : 0.0;
    return num / den;
}

}  // namespace

std::vector<BenchRecord> run_sweep(const SweepSpec& spec, Clock clock) {
    if (spec.values.empty() || spec.methods.empty())
        throw EmptyInputError();
    for (const auto& method : spec.methods) {
        const auto& known = known_methods();
        if (std::find(known.begin(), known.end(), method) == known.end())
            throw UnknownMethodError(method);
    }

    std::vector<BenchRecord> records;
    for (long value : spec.values) {
        long n = spec.axis == SweepAxis::size ? value : spec.fixed_value;
        long m = n;
        long r = spec.axis == SweepAxis::size ? spec.fixed_value : value;
        r = std::min(r, std::min(n, m));

        for (const auto& method : spec.methods) {
            // Warm-up, discarded.
            {
                std::uint64_t s = Rng::mix(spec.seed, value * 1000003ULL);
                Matrix a = gen_uniform(n, m, s);
                double t0 = clock();
                Matrix out = run_method(method, a, r, s, spec.nmf_max_iters);
                (void)clock();
                (void)t0;
                (void)out;
            }
            for (long trial = 0; trial < spec.trials; ++trial) {
                std::uint64_t s =
                    Rng::mix(spec.seed, value * 1000003ULL + trial + 1);
                Matrix a = gen_uniform(n, m, s);
                ReductionResult ref = lrrr_auto(a, r, s);

                double t0 = clock();
                Matrix out = run_method(method, a, r, s, spec.nmf_max_iters);
                double t1 = clock();

                BenchRecord rec;
                rec.method = method;
                rec.n_rows = n;
                rec.n_cols = m;
                rec.target_rank = r;
                rec.seed = s;
                rec.elapsed_seconds = t1 - t0;
                rec.kl_error = kl_divergence(a, out);
                rec.ls_error = ls_error(a, out);
                rec.phi_kl = safe_ratio(rec.kl_error, ref.kl_from_input);
                rec.phi_ls = safe_ratio(rec.ls_error, ref.ls_from_input);
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
    if (records.empty()) throw EmptyInputError();

    using Key = std::tuple<std::string, long, long, long>;
    std::map<Key, std::vector<const BenchRecord*>> groups;
    std::vector<Key> order;
    for (const auto& rec : records) {
        Key key{rec.method, rec.n_rows, rec.n_cols, rec.target_rank};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(&rec);
    }

    std::vector<BenchSummary> out;
    for (const Key& key : order) {
        const auto& group = groups[key];
        std::vector<double> elapsed, phi_kl, phi_ls;
        for (const BenchRecord* rec : group) {
            elapsed.push_back(rec->elapsed_seconds);
            phi_kl.push_back(rec->phi_kl);
            phi_ls.push_back(rec->phi_ls);
        }
        BenchSummary s;
        std::tie(s.method, s.n_rows, s.n_cols, s.target_rank) = key;
        s.trials = static_cast<long>(group.size());
        s.median_elapsed = median(elapsed);
        s.min_elapsed = *std::min_element(elapsed.begin(), elapsed.end());
        s.max_elapsed = *std::max_element(elapsed.begin(), elapsed.end());
        s.median_phi_kl = median(phi_kl);
        s.median_phi_ls = median(phi_ls);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace llr
