#include "nea/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nea {

double schedule_eval(const Schedule& s, std::size_t n) {
    if (n < 2) throw std::domain_error("schedule_eval: n must be >= 2");
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    double v = 0.0;
    switch (s.kind) {
        case ScheduleKind::Const: v = s.value; break;
        case ScheduleKind::LogNOverN2Sq: v = (ln / nd) * (ln / nd); break;
        case ScheduleKind::LogNOverN32: v = ln / std::pow(nd, 1.5); break;
        case ScheduleKind::LogNOverN: v = ln / nd; break;
        case ScheduleKind::LogN2OverN3: v = ln * ln / (nd * nd * nd); break;
        case ScheduleKind::LogNOverN52: v = ln / std::pow(nd, 2.5); break;
        case ScheduleKind::LogNOverN2: v = ln / (nd * nd); break;
        case ScheduleKind::OneOverN: v = 1.0 / nd; break;
    }
    return std::min(1.0, std::max(0.0, v));
}

Schedule parse_schedule(const std::string& text) {
    if (text == "(logn/n)^2") return {ScheduleKind::LogNOverN2Sq, 0.0};
    if (text == "logn/n^(3/2)") return {ScheduleKind::LogNOverN32, 0.0};
    if (text == "logn/n") return {ScheduleKind::LogNOverN, 0.0};
    if (text == "logn^2/n^3") return {ScheduleKind::LogN2OverN3, 0.0};
    if (text == "logn/n^(5/2)") return {ScheduleKind::LogNOverN52, 0.0};
    if (text == "logn/n^2") return {ScheduleKind::LogNOverN2, 0.0};
    if (text == "1/n") return {ScheduleKind::OneOverN, 0.0};
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw std::invalid_argument("bad schedule: " + text);
    return Schedule::constant(v);
}

std::string schedule_to_string(const Schedule& s) {
    switch (s.kind) {
        case ScheduleKind::LogNOverN2Sq: return "(logn/n)^2";
        case ScheduleKind::LogNOverN32: return "logn/n^(3/2)";
        case ScheduleKind::LogNOverN: return "logn/n";
        case ScheduleKind::LogN2OverN3: return "logn^2/n^3";
        case ScheduleKind::LogNOverN52: return "logn/n^(5/2)";
        case ScheduleKind::LogNOverN2: return "logn/n^2";
        case ScheduleKind::OneOverN: return "1/n";
        case ScheduleKind::Const: break;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", s.value);
    return buf;
}

std::uint64_t SampleSizeSchedule::resolve(std::size_t n) const {
    std::uint64_t v = coef;
    for (unsigned e = 0; e < exponent; ++e) v *= static_cast<std::uint64_t>(n);
    return std::max<std::uint64_t>(1, v);
}

SampleSizeSchedule parse_sample_size(const std::string& text) {
    SampleSizeSchedule s;
    const std::size_t caret = text.find("n^");
    try {
        if (caret == std::string::npos) {
            s.coef = std::stoull(text);
            s.exponent = 0;
        } else {
            s.coef = caret == 0 ? 1 : std::stoull(text.substr(0, caret));
            s.exponent = static_cast<unsigned>(std::stoul(text.substr(caret + 2)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad sample size: " + text + " (expected <int> or <int>n^<int>)");
    }
    if (s.coef < 1) throw std::invalid_argument("sample size coefficient must be >= 1");
    return s;
}

std::string sample_size_to_string(const SampleSizeSchedule& s) {
    if (s.exponent == 0) return std::to_string(s.coef);
    return std::to_string(s.coef) + "n^" + std::to_string(s.exponent);
}

NoiseSpec NoiseFamily::resolve(std::size_t n) const {
    switch (kind) {
        case NoiseKind::Noiseless: return NoiseSpec::noiseless();
        case NoiseKind::OneBit: return NoiseSpec::one_bit(schedule_eval(p, n));
        case NoiseKind::BitWise:
            return NoiseSpec::bit_wise(schedule_eval(p, n), schedule_eval(q, n));
    }
    return NoiseSpec::noiseless();
}

NoiseFamily parse_noise_family(const std::string& text) {
    NoiseFamily f;
    if (text == "none") {
        f.kind = NoiseKind::Noiseless;
    } else if (text.rfind("onebit:p=", 0) == 0) {
        f.kind = NoiseKind::OneBit;
        f.p = parse_schedule(text.substr(9));
    } else if (text.rfind("bitwise:p=", 0) == 0) {
        const std::string rest = text.substr(10);
        const std::size_t comma = rest.find(",q=");
        if (comma == std::string::npos)
            throw std::invalid_argument("bitwise noise needs q: " + text);
        f.kind = NoiseKind::BitWise;
        f.p = parse_schedule(rest.substr(0, comma));
        f.q = parse_schedule(rest.substr(comma + 3));
    } else {
        throw std::invalid_argument("unknown noise family: " + text);
    }
    return f;
}

std::string noise_family_to_string(const NoiseFamily& f) {
    switch (f.kind) {
        case NoiseKind::Noiseless: return "none";
        case NoiseKind::OneBit: return "onebit:p=" + schedule_to_string(f.p);
        case NoiseKind::BitWise:
            return "bitwise:p=" + schedule_to_string(f.p) + ",q=" + schedule_to_string(f.q);
    }
    return "none";
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "problem") {
            cfg.problem = parse_problem(value);
        } else if (key == "noise") {
            cfg.noise = parse_noise_family(value);
        } else if (key == "m") {
            cfg.m = parse_sample_size(value);
        } else if (key == "n_grid") {
            cfg.n_grid.clear();
            std::istringstream gs(value);
            std::string item;
            while (std::getline(gs, item, ','))
                cfg.n_grid.push_back(std::stoull(trim(item)));
        } else if (key == "runs_per_n") {
            cfg.runs_per_n = std::stoull(value);
        } else if (key == "max_evaluations") {
            cfg.max_evaluations = std::stoull(value);
        } else if (key == "master_seed") {
            cfg.master_seed = std::stoull(value);
        } else if (key == "out") {
            cfg.out_path = value;
        } else if (key == "hitting") {
            if (value == "state") cfg.hitting = HittingRule::State;
            else if (value == "evaluation") cfg.hitting = HittingRule::Evaluation;
            else throw std::invalid_argument("hitting must be state|evaluation");
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

namespace {

void validate_experiment(const ExperimentConfig& cfg) {
    if (cfg.n_grid.empty()) throw std::invalid_argument("experiment: n_grid is empty");
    for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
        if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
            throw std::invalid_argument("experiment: n_grid must be strictly increasing");
    if (cfg.runs_per_n < 1) throw std::invalid_argument("experiment: runs_per_n must be >= 1");
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& config, std::size_t workers) {
    validate_experiment(config);
    if (workers < 1) workers = 1;

    struct Job {
        std::size_t n_index;
        std::uint64_t run_index;
    };
    std::vector<Job> jobs;
    for (std::size_t ni = 0; ni < config.n_grid.size(); ++ni)
        for (std::uint64_t r = 0; r < config.runs_per_n; ++r) jobs.push_back({ni, r});

    std::vector<RunResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job job = jobs[i];
            const std::size_t n = config.n_grid[job.n_index];
            RunConfig rc;
            rc.problem = config.problem;
            rc.n = n;
            rc.noise = config.noise.resolve(n);
            rc.sampling.m = config.m.resolve(n);
            rc.max_evaluations = config.max_evaluations;
            rc.seed = derive_run_seed(config.master_seed, n, job.run_index);
            rc.hitting = config.hitting;
            results[i] = run(rc);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<ResultRow> rows;
    std::size_t offset = 0;
    for (std::size_t ni = 0; ni < config.n_grid.size(); ++ni) {
        const std::size_t n = config.n_grid[ni];
        ResultRow row;
        row.n = n;
        const NoiseSpec noise = config.noise.resolve(n);
        row.p = noise.kind == NoiseKind::Noiseless ? 0.0 : noise.p;
        row.q = noise.kind == NoiseKind::BitWise ? noise.q : 0.0;
        row.m = config.m.resolve(n);
        row.runs = config.runs_per_n;
        row.master_seed = config.master_seed;

        std::vector<double> evals(config.runs_per_n);
        double sum = 0.0;
        for (std::uint64_t r = 0; r < config.runs_per_n; ++r) {
            const RunResult& res = results[offset + r];
            row.hits += res.hit ? 1 : 0;
            row.censored += res.censored ? 1 : 0;
            // Censored runs enter at the cap so truncation stays visible.
            evals[r] = res.censored ? static_cast<double>(config.max_evaluations)
                                    : static_cast<double>(res.evaluations);
            sum += evals[r];
        }
        offset += config.runs_per_n;
        row.mean_evals = sum / static_cast<double>(config.runs_per_n);
        std::sort(evals.begin(), evals.end());
        const std::size_t mid = evals.size() / 2;
        row.median_evals =
            evals.size() % 2 == 1 ? evals[mid] : 0.5 * (evals[mid - 1] + evals[mid]);
        double ss = 0.0;
        for (double e : evals) ss += (e - row.mean_evals) * (e - row.mean_evals);
        row.stddev_evals =
            evals.size() > 1 ? std::sqrt(ss / static_cast<double>(evals.size() - 1)) : 0.0;
        row.normalized = std::log(row.mean_evals) / std::log(static_cast<double>(n));
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string csv_to_string(const std::vector<ResultRow>& rows) {
    std::string out =
        "n,p,q,m,runs,hits,censored,mean_evals,median_evals,stddev_evals,normalized,master_seed\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + fmt_double(r.p) + ',' + fmt_double(r.q) + ',' +
               std::to_string(r.m) + ',' + std::to_string(r.runs) + ',' + std::to_string(r.hits) +
               ',' + std::to_string(r.censored) + ',' + fmt_double(r.mean_evals) + ',' +
               fmt_double(r.median_evals) + ',' + fmt_double(r.stddev_evals) + ',' +
               fmt_double(r.normalized) + ',' + std::to_string(r.master_seed) + '\n';
    }
    return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << csv_to_string(rows);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nea
