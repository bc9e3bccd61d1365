// qdc: batch driver for the quantum-compression experiments.
//
// Subcommands: entropies, identity, rate, fidelity, estimate.
// Exit status: 0 success, 1 acceptance-gap failure, 2 input error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qdc/coding.hpp"
#include "qdc/qsim.hpp"
#include "qdc/quantum.hpp"
#include "qdc/rng.hpp"

using json = nlohmann::json;
using namespace qdc;

namespace {

// Substream tags for the master seed.
constexpr uint64_t kTagSweep = 1;
constexpr uint64_t kTagMcStream = 2;
constexpr uint64_t kTagEstimateZ = 3;
constexpr uint64_t kTagEstimateX = 4;
constexpr uint64_t kTagEstimateY = 5;

struct Config {
    std::optional<CMatrix> rho;
    std::optional<CMatrix> sigma;
    int n = 16;
    long trials = 1;
    uint64_t seed = 0;
    std::string mode; // informational; the subcommand is authoritative
};

CMatrix parse_matrix(const json &node) {
    if (node.is_object() && node.contains("bloch")) {
        const auto &b = node["bloch"];
        if (!b.is_array() || b.size() != 3) throw ParseError("bloch vector must have 3 components");
        return bloch_to_density({b[0].get<double>(), b[1].get<double>(), b[2].get<double>()}).mat();
    }
    const json &rows = node.is_object() && node.contains("matrix") ? node["matrix"] : node;
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const int d = static_cast<int>(rows.size());
    std::vector<cplx> entries;
    entries.reserve(static_cast<size_t>(d) * d);
    for (const auto &row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != d) throw ParseError("matrix rows must be square");
        for (const auto &cell : row) {
            if (!cell.is_array() || cell.size() != 2) throw ParseError("matrix entries must be [re, im] pairs");
            entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return CMatrix(d, std::move(entries));
}

Config load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    Config cfg;
    try {
        if (j.contains("rho")) cfg.rho = parse_matrix(j["rho"]);
        if (j.contains("sigma")) cfg.sigma = parse_matrix(j["sigma"]);
        if (j.contains("n")) cfg.n = j["n"].get<int>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<long>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
        if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad config field: ") + e.what());
    }
    return cfg;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

// Rows of (name, value) pairs; one CSV line per row, stable column order.
struct Record {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;

    void add_row(std::vector<std::pair<std::string, std::string>> row) { rows.push_back(std::move(row)); }

    std::string to_csv() const {
        std::ostringstream out;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == 0) {
                for (size_t c = 0; c < rows[0].size(); ++c) out << (c ? "," : "") << rows[0][c].first;
                out << "\n";
            }
            for (size_t c = 0; c < rows[i].size(); ++c) out << (c ? "," : "") << rows[i][c].second;
            out << "\n";
        }
        return out.str();
    }

    std::string to_json() const {
        json arr = json::array();
        for (const auto &row : rows) {
            json obj = json::object();
            for (const auto &[k, v] : row) {
                // numbers stay numbers; strings stay strings
                try {
                    size_t used = 0;
                    double d = std::stod(v, &used);
                    if (used == v.size()) {
                        obj[k] = d;
                        continue;
                    }
                } catch (...) {
                }
                obj[k] = v;
            }
            arr.push_back(obj);
        }
        std::ostringstream out;
        out << arr.dump(2) << "\n";
        return out.str();
    }
};

void write_output(const std::string &payload, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    out << payload;
}

DensityMatrix require_density(const std::optional<CMatrix> &m, const char *name) {
    if (!m) throw ValidationError(std::string("config is missing '") + name + "'");
    return validate_density(*m);
}

ProbDist empirical(const SymbolSeq &z) {
    size_t ones = 0;
    for (uint8_t s : z) ones += s;
    const double p1 = static_cast<double>(ones) / static_cast<double>(z.size());
    return ProbDist({1.0 - p1, p1});
}

int run_entropies(const Config &cfg, Record &rec) {
    auto rho = require_density(cfg.rho, "rho");
    auto sigma = require_density(cfg.sigma, "sigma");
    rec.add_row({{"mode", "entropies"},
                 {"s_rho", fmt(von_neumann_entropy(rho))},
                 {"s_sigma", fmt(von_neumann_entropy(sigma))},
                 {"s_rel", fmt(quantum_relative_entropy(rho, sigma))},
                 {"h_p_rho", fmt(shannon_entropy(eigenvalue_dist(rho)))},
                 {"h_p_sigma", fmt(shannon_entropy(eigenvalue_dist(sigma)))},
                 {"seed", std::to_string(cfg.seed)}});
    return 0;
}

DensityMatrix random_density2(SplitMix64 &rng) {
    CMatrix g(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.at(i, j) = cplx(rng.next_gaussian(), rng.next_gaussian());
    CMatrix gg = matmul(g, adjoint(g));
    return validate_density(scale(1.0 / trace(gg).real(), gg));
}

int run_identity(const Config &cfg, Record &rec) {
    double worst_gap = 0.0, worst_lhs = 0.0, worst_rhs = 0.0;
    long infinite_count = 0, trials = 1;
    bool mismatch_inf = false;

    if (cfg.rho && cfg.sigma) {
        auto s = entropy_identity_sides(require_density(cfg.rho, "rho"), require_density(cfg.sigma, "sigma"));
        worst_lhs = s.lhs;
        worst_rhs = s.rhs;
        if (std::isinf(s.lhs) || std::isinf(s.rhs)) {
            ++infinite_count;
            mismatch_inf = std::isinf(s.lhs) != std::isinf(s.rhs);
        } else {
            worst_gap = std::abs(s.lhs - s.rhs);
        }
    } else {
        trials = std::max(1L, cfg.trials);
        SplitMix64 rng = SplitMix64(cfg.seed).split(kTagSweep);
        for (long t = 0; t < trials; ++t) {
            auto rho = random_density2(rng);
            auto sigma = random_density2(rng);
            auto s = entropy_identity_sides(rho, sigma);
            if (std::isinf(s.lhs) || std::isinf(s.rhs)) {
                ++infinite_count;
                mismatch_inf |= std::isinf(s.lhs) != std::isinf(s.rhs);
                continue;
            }
            const double gap = std::abs(s.lhs - s.rhs);
            if (gap >= worst_gap) {
                worst_gap = gap;
                worst_lhs = s.lhs;
                worst_rhs = s.rhs;
            }
        }
    }

    rec.add_row({{"mode", "identity"},
                 {"lhs", fmt(worst_lhs)},
                 {"rhs", fmt(worst_rhs)},
                 {"gap", fmt(worst_gap)},
                 {"trials", std::to_string(trials)},
                 {"infinite_pairs", std::to_string(infinite_count)},
                 {"seed", std::to_string(cfg.seed)}});
    return (worst_gap > 1e-9 || mismatch_inf) ? 1 : 0;
}

int run_rate(const Config &cfg, Record &rec) {
    auto rho = require_density(cfg.rho, "rho");
    auto sigma = require_density(cfg.sigma, "sigma");
    if (cfg.trials < 1) throw ValidationError("trials must be >= 1");

    auto sides = entropy_identity_sides(rho, sigma);
    auto basis = OrthonormalBasis::eigenbasis(sigma);
    auto code = rank_code_build(sides.chi, cfg.n);
    const double block_rate = expected_length(rho, basis, code);

    const size_t stream_len = static_cast<size_t>(cfg.trials) * static_cast<size_t>(cfg.n);
    SplitMix64 rng = SplitMix64(cfg.seed).split(kTagMcStream);
    auto stream = sample_iid(sides.eta, stream_len, rng.next_u64());
    const double mc_rate = static_cast<double>(arithmetic_encode(stream, sides.chi).size()) /
                           static_cast<double>(stream_len);

    rec.add_row({{"mode", "rate"},
                 {"target", fmt(sides.lhs)},
                 {"block_rate", fmt(block_rate)},
                 {"mc_rate", fmt(mc_rate)},
                 {"block_gap", fmt(std::abs(block_rate - sides.lhs))},
                 {"mc_gap", fmt(std::abs(mc_rate - sides.rhs))},
                 {"n", std::to_string(cfg.n)},
                 {"trials", std::to_string(cfg.trials)},
                 {"seed", std::to_string(cfg.seed)}});
    return 0;
}

int run_fidelity(const Config &cfg, Record &rec) {
    auto rho = require_density(cfg.rho, "rho");
    auto sigma = require_density(cfg.sigma, "sigma");
    auto basis = OrthonormalBasis::eigenbasis(sigma);
    auto chi = ProbDist::from_eigenvalues(hermitian_eig(sigma.mat()).eigenvalues);
    auto code = rank_code_build(chi, cfg.n);
    for (int m = 0; m <= cfg.n; ++m) {
        rec.add_row({{"mode", "fidelity"},
                     {"m", std::to_string(m)},
                     {"fidelity", fmt(truncation_fidelity(rho, basis, code, m))},
                     {"n", std::to_string(cfg.n)},
                     {"seed", std::to_string(cfg.seed)}});
    }
    return 0;
}

int run_estimate(const Config &cfg, Record &rec) {
    auto rho = require_density(cfg.rho, "rho");
    auto sigma = require_density(cfg.sigma, "sigma");
    if (cfg.trials < 1) throw ValidationError("trials must be >= 1");
    const size_t len = static_cast<size_t>(cfg.trials) * static_cast<size_t>(cfg.n);
    if (len < (1u << 13)) throw SampleTooShort("estimate needs trials*n >= 8192");

    auto basis = OrthonormalBasis::eigenbasis(sigma);
    auto eff = effective_density(rho, basis);
    auto chi = ProbDist::from_eigenvalues(hermitian_eig(sigma.mat()).eigenvalues);
    auto p_rho = eigenvalue_dist(rho);

    SplitMix64 master(cfg.seed);
    auto z = sample_iid(eff.eta, len, master.split(kTagEstimateZ).next_u64());
    auto x = sample_iid(chi, len, master.split(kTagEstimateX).next_u64());
    auto y = sample_iid(p_rho, len, master.split(kTagEstimateY).next_u64());

    const double d_hat = zm_estimate(z, x);
    const double h_eta_hat = shannon_entropy(empirical(z));
    const double s_rho_hat = shannon_entropy(empirical(y));
    const double s_rel_hat = d_hat + h_eta_hat - s_rho_hat;

    const double d_true = relative_entropy(eff.eta, chi);
    const double s_rel_true = quantum_relative_entropy(rho, sigma);

    rec.add_row({{"mode", "estimate"},
                 {"d_hat", fmt(d_hat)},
                 {"d_true", fmt(d_true)},
                 {"d_err", fmt(d_hat - d_true)},
                 {"h_eta_hat", fmt(h_eta_hat)},
                 {"h_eta_true", fmt(shannon_entropy(eff.eta))},
                 {"s_rho_hat", fmt(s_rho_hat)},
                 {"s_rho_true", fmt(von_neumann_entropy(rho))},
                 {"s_rel_hat", fmt(s_rel_hat)},
                 {"s_rel_true", fmt(s_rel_true)},
                 {"sample_len", std::to_string(len)},
                 {"seed", std::to_string(cfg.seed)}});
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"quantum data compression experiments"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv";
    std::optional<uint64_t> seed_flag;
    std::optional<int> n_flag;
    std::optional<long> trials_flag;

    const std::vector<std::string> modes = {"entropies", "identity", "rate", "fidelity", "estimate"};
    for (const auto &m : modes) {
        auto *sub = app.add_subcommand(m);
        sub->add_option("--config", config_path, "JSON experiment config");
        sub->add_option("--seed", seed_flag, "master 64-bit seed (overrides config)");
        sub->add_option("--n", n_flag, "block length (overrides config)");
        sub->add_option("--trials", trials_flag, "Monte-Carlo repetitions (overrides config)");
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) ? 2 : 0;
    }
    const std::string mode = app.get_subcommands().front()->get_name();

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Config cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (seed_flag) cfg.seed = *seed_flag;
        if (n_flag) cfg.n = *n_flag;
        if (trials_flag) cfg.trials = *trials_flag;
        if (!cfg.mode.empty() && cfg.mode != mode)
            throw ValidationError("config mode '" + cfg.mode + "' does not match subcommand '" + mode + "'");

        Record rec;
        int status = 0;
        if (mode == "entropies")
            status = run_entropies(cfg, rec);
        else if (mode == "identity")
            status = run_identity(cfg, rec);
        else if (mode == "rate")
            status = run_rate(cfg, rec);
        else if (mode == "fidelity")
            status = run_fidelity(cfg, rec);
        else
            status = run_estimate(cfg, rec);

        write_output(format == "csv" ? rec.to_csv() : rec.to_json(), out_path);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "{\"mode\":\"%s\",\"wall_time_s\":%.6f}\n", mode.c_str(), secs);
        return status;
    } catch (const Error &e) {
        std::fprintf(stderr, "{\"error\":\"%s\",\"message\":\"%s\"}\n", e.code().c_str(), e.what());
        return 2;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "{\"error\":\"internal\",\"message\":\"%s\"}\n", e.what());
        return 2;
    }
}
