#include "gazebench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "gazebench/idt.hpp"
#include "gazebench/log.hpp"

namespace gazebench {

void EvalPlan::validate() const {
    if (n_fixations < 1) throw RangeError("evaluate: n_fixations must be >= 1");
    if (filter_organic_to_n && *filter_organic_to_n < 1)
        throw RangeError("evaluate: filter_organic_to_n must be >= 1");
    metric_params.validate();
}

namespace {

struct PairJob {
    const Scanpath* human;
    const Scanpath* synthetic;
    PairResult result; // metrics filled in later
};

void compute_pair_metrics(PairJob& job, const MetricParams& params) {
    job.result.dtw = dtw(*job.human, *job.synthetic);
    job.result.eyenalysis = eyenalysis(*job.human, *job.synthetic);
    const std::size_t min_len = std::min(job.human->size(), job.synthetic->size());
    if (min_len >= static_cast<std::size_t>(params.l_min)) {
        const RecurrenceMatrix m = cross_recurrence(*job.human, *job.synthetic, params);
        job.result.determinism = determinism(m, params.l_min);
        job.result.laminarity = laminarity(m, params.l_min);
    }
}

Aggregate aggregate_values(const std::vector<double>& values) {
    Aggregate a;
    a.n = static_cast<int>(values.size());
    if (a.n == 0) return a;
    double sum = 0.0;
    for (double v : values) sum += v;
    a.mean = sum / a.n;
    double sq = 0.0;
    for (double v : values) sq += (v - a.mean) * (v - a.mean);
    a.stddev = std::sqrt(sq / a.n); // population standard deviation
    return a;
}

std::map<GroupKey, GroupStats> group_results(const std::vector<PairResult>& rows,
                                             const std::vector<GroupKey>& cells, bool indexed_only) {
    std::map<GroupKey, GroupStats> out;
    for (const auto& key : cells) {
        std::vector<double> v_dtw, v_eye, v_det, v_lam;
        for (const auto& r : rows) {
            if (indexed_only && !r.indexed) continue;
            if (!(GroupKey{r.difficulty, r.node_count} == key)) continue;
            v_dtw.push_back(r.dtw);
            v_eye.push_back(r.eyenalysis);
            if (r.determinism) v_det.push_back(*r.determinism);
            if (r.laminarity) v_lam.push_back(*r.laminarity);
        }
        GroupStats stats;
        stats.dtw = aggregate_values(v_dtw);
        stats.eyenalysis = aggregate_values(v_eye);
        stats.determinism = aggregate_values(v_det);
        stats.laminarity = aggregate_values(v_lam);
        out.emplace(key, stats);
    }
    return out;
}

} // namespace

MetricReport evaluate(const std::vector<TrialRecord>& trials,
                      const std::map<std::string, std::vector<Scanpath>>& synthetic_by_stimulus,
                      const EvalPlan& plan) {
    plan.validate();
    if (trials.empty()) throw EmptyInputError("evaluate: no trials");

    // Stable within-stimulus participant order, stable stimulus order.
    std::map<std::string, std::vector<const TrialRecord*>> by_stimulus;
    for (const auto& t : trials) {
        if (t.human_scanpath.empty()) {
            log::warn("evaluate: trial ", t.participant_id, "/", t.stimulus_id,
                      " has an empty scanpath; excluded");
            continue;
        }
        by_stimulus[t.stimulus_id].push_back(&t);
    }
    if (by_stimulus.empty()) throw EmptyInputError("evaluate: no usable trials");
    for (auto& [stim, list] : by_stimulus)
        std::sort(list.begin(), list.end(), [](const TrialRecord* a, const TrialRecord* b) {
            return a->participant_id < b->participant_id;
        });

    // Organic truncation happens before any metric sees the paths.
    std::map<std::string, std::vector<Scanpath>> humans;
    for (const auto& [stim, list] : by_stimulus) {
        auto& vec = humans[stim];
        for (const TrialRecord* t : list)
            vec.push_back(plan.filter_organic_to_n
                              ? truncate_scanpath(t->human_scanpath,
                                                  static_cast<std::size_t>(*plan.filter_organic_to_n))
                              : t->human_scanpath);
    }

    std::string generator;
    std::vector<PairJob> jobs;
    std::vector<GroupKey> cells; // conditions present in the trial set
    for (const auto& [stim, list] : by_stimulus) {
        const auto it = synthetic_by_stimulus.find(stim);
        if (it == synthetic_by_stimulus.end() || it->second.empty())
            throw SchemaError("evaluate: no synthetic scanpaths for stimulus " + stim);
        const auto& synths = it->second;
        for (const auto& sp : synths)
            if (sp.empty()) throw EmptyInputError("evaluate: empty synthetic path for " + stim);
        if (!synths.front().generator.empty()) generator = synths.front().generator;

        if (plan.mode == GeneratorMode::PerParticipant &&
            synths.size() < list.size())
            throw SchemaError("evaluate: stimulus " + stim + " has " + std::to_string(synths.size()) +
                              " synthetic paths for " + std::to_string(list.size()) + " participants");
        if (plan.mode == GeneratorMode::PerStimulus && synths.size() != 1)
            throw SchemaError("evaluate: per-stimulus mode expects exactly one synthetic path for " +
                              stim);

        for (std::size_t hi = 0; hi < list.size(); ++hi) {
            const TrialRecord* t = list[hi];
            const GroupKey key{t->difficulty, t->node_count};
            if (std::find(cells.begin(), cells.end(), key) == cells.end()) cells.push_back(key);

            const std::size_t n_synth = plan.mode == GeneratorMode::PerStimulus ? 1 : synths.size();
            for (std::size_t si = 0; si < n_synth; ++si) {
                PairJob job;
                job.human = &humans[stim][hi];
                job.synthetic = &synths[si];
                job.result.stimulus_id = stim;
                job.result.participant_id = t->participant_id;
                job.result.generator = synths[si].generator;
                job.result.synthetic_index = static_cast<int>(si);
                job.result.difficulty = t->difficulty;
                job.result.node_count = t->node_count;
                job.result.indexed = plan.mode == GeneratorMode::PerStimulus || hi == si;
                jobs.push_back(job);
            }
        }
    }

    // Pairs are independent; compute in parallel, reduce in job order.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_workers =
        plan.jobs > 0 ? static_cast<unsigned>(plan.jobs) : hw;
    if (n_workers <= 1 || jobs.size() < 2) {
        for (auto& job : jobs) compute_pair_metrics(job, plan.metric_params);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                compute_pair_metrics(jobs[i], plan.metric_params);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(n_workers, jobs.size()); ++i)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    MetricReport report;
    report.generator = generator;
    for (auto& job : jobs) report.per_pair.push_back(std::move(job.result));
    report.grouped = group_results(report.per_pair, cells, false);
    if (plan.mode == GeneratorMode::PerParticipant)
        report.grouped_indexed = group_results(report.per_pair, cells, true);
    return report;
}

namespace {

std::string format_cell(const Aggregate& a) {
    if (!a.valid()) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f ± %.4f", a.mean, a.stddev);
    return buf;
}

// Paper row order: hard/6, easy/6, hard/3, easy/3.
const GroupKey kRowOrder[] = {
    {QuestionDifficulty::Hard, NodeCount::Six},
    {QuestionDifficulty::Easy, NodeCount::Six},
    {QuestionDifficulty::Hard, NodeCount::Three},
    {QuestionDifficulty::Easy, NodeCount::Three},
};

void emit_rows(std::string& out, const std::map<GroupKey, GroupStats>& grouped,
               const std::string& pairing, TableFormat fmt) {
    for (const auto& key : kRowOrder) {
        const auto it = grouped.find(key);
        if (it == grouped.end()) continue;
        const GroupStats& g = it->second;
        const std::string cells[] = {format_cell(g.dtw), format_cell(g.eyenalysis),
                                     format_cell(g.determinism), format_cell(g.laminarity)};
        if (fmt == TableFormat::Csv) {
            out += pairing + "," + to_string(key.difficulty) + "," + to_string(key.node_count);
            for (const auto& c : cells) out += "," + c;
            out += "\n";
        } else {
            out += "| " + pairing + " | " + to_string(key.difficulty) + " | " +
                   to_string(key.node_count);
            for (const auto& c : cells) out += " | " + c;
            out += " |\n";
        }
    }
}

} // namespace

std::string emit_tables(const MetricReport& report, TableFormat format) {
    std::string out;
    if (format == TableFormat::Csv) {
        out += "pairing,question,graph,dtw,eyenalysis,determinism,laminarity\n";
        emit_rows(out, report.grouped, "all-pairs", format);
        emit_rows(out, report.grouped_indexed, "indexed", format);
    } else {
        out += "| Pairing | Question | Graph | DTW | Eyenalysis | Determinism | Laminarity |\n";
        out += "| --- | --- | --- | --- | --- | --- | --- |\n";
        emit_rows(out, report.grouped, "all-pairs", format);
        emit_rows(out, report.grouped_indexed, "indexed", format);
    }
    return out;
}

void write_per_pair_csv(std::ostream& out, const MetricReport& report) {
    out << "generator,pairing,stimulus_id,participant_id,synth_index,question,graph,"
           "dtw,eyenalysis,determinism,laminarity\n";
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.9f", v);
        return std::string(buf);
    };
    for (const auto& r : report.per_pair) {
        out << r.generator << ',' << (r.indexed ? "indexed" : "cross") << ',' << r.stimulus_id << ','
            << r.participant_id << ',' << r.synthetic_index << ',' << to_string(r.difficulty) << ','
            << to_string(r.node_count) << ',' << fmt(r.dtw) << ',' << fmt(r.eyenalysis) << ','
            << (r.determinism ? fmt(*r.determinism) : "") << ','
            << (r.laminarity ? fmt(*r.laminarity) : "") << "\n";
    }
}

} // namespace gazebench
