#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "jsrforge/certify.hpp"
#include "jsrforge/fricke.hpp"
#include "jsrforge/mat2.hpp"
#include "jsrforge/reference_data.hpp"
#include "jsrforge/rng.hpp"
#include "jsrforge/word.hpp"

namespace jsrforge {

inline constexpr double kScreenTieTol = 1e-12;

struct SearchConfig {
    std::uint64_t n_samples = 1000000;
    int max_word_len = 14;          // screening list covers this length
    int target_chirals_max_len = 9; // default targets: chiral pairs up to here
    std::uint64_t seed = 0;
    double xyuv_range = 10.0;       // x, y, u, v uniform on [-range, range]
    double z_range = 100.0;         // z uniform on [-z_range, z_range]
    int budget = kDefaultBudget;

    /// Test hook: when nonempty these tuples are processed instead of random
    /// draws, with sample_index equal to the position.
    std::vector<Tuple5> injected;
};

/// One screening competitor: a 2-isospectrality class representative with
/// its trace polynomial flattened for fast evaluation.
struct ScreenEntry {
    Word word;
    Poly5 poly;
    std::vector<std::pair<Exp5, double>> terms;
    int len = 0;
    int na = 0;
    int nb = 0;
};

struct ScreenList {
    std::vector<ScreenEntry> entries;
    int max_word_len = 0;
    int max_exponent = 0;
};

namespace detail {

inline ScreenEntry make_screen_entry(const Word& w) {
    ScreenEntry e{w, fricke_polynomial(w), {}, static_cast<int>(w.length()),
                  static_cast<int>(w.count_a()), static_cast<int>(w.count_b())};
    e.terms.reserve(e.poly.num_terms());
    for (const auto& [exp, c] : e.poly.terms())
        e.terms.emplace_back(exp, static_cast<double>(c));
    return e;
}

}  // namespace detail

/// Deduped competitor list: one entry per 2-isospectrality class among all
/// primitive rotation classes of length <= max_len.
inline ScreenList build_screen_list(int max_len) {
    ScreenList list;
    list.max_word_len = max_len;
    std::map<Poly5::TermMap, bool> seen;
    for (const Word& w : lyndon_words(max_len)) {
        ScreenEntry e = detail::make_screen_entry(w);
        auto [it, inserted] = seen.emplace(e.poly.terms(), true);
        if (!inserted) continue;
        list.max_exponent = std::max(list.max_exponent, e.poly.max_exponent());
        list.entries.push_back(std::move(e));
    }
    list.max_exponent = std::max(list.max_exponent, max_len);
    return list;
}

/// Power tables for one tuple; all polynomial and determinant evaluations
/// against the same tuple share them.
class TupleEvaluator {
public:
    TupleEvaluator(const Tuple5& t, int max_exp) : max_exp_(max_exp) {
        const std::array<double, 5> base = t.as_array();
        for (std::size_t v = 0; v < 5; ++v) {
            pw_[v].resize(static_cast<std::size_t>(max_exp) + 1);
            pw_[v][0] = 1.0;
            for (int e = 1; e <= max_exp; ++e) pw_[v][static_cast<std::size_t>(e)] = pw_[v][static_cast<std::size_t>(e - 1)] * base[v];
        }
    }

    double eval_terms(const std::vector<std::pair<Exp5, double>>& terms) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms)
            acc += c * pw_[0][e[0]] * pw_[1][e[1]] * pw_[2][e[2]] * pw_[3][e[3]] * pw_[4][e[4]];
        return acc;
    }

    double normalized_rho(const ScreenEntry& e) const {
        const double tau = eval_terms(e.terms);
        const double delta = pw_[3][static_cast<std::size_t>(e.na)] * pw_[4][static_cast<std::size_t>(e.nb)];
        return std::pow(rho_from_trace_det(tau, delta), 1.0 / static_cast<double>(e.len));
    }

private:
    int max_exp_;
    std::array<std::vector<double>, 5> pw_;
};

struct ScreenResult {
    bool accept = false;
    double target_normalized_rho = 0.0;
    double best_other = 0.0;  // strongest non-isospectral competitor seen
    double gap = 0.0;         // target - best_other when accepted
};

/// Accepts the tuple iff the target's normalized spectral radius strictly
/// beats every competitor outside its own isospectrality class; ties within
/// the tolerance count as defeats. Exits on the first defeater.
inline ScreenResult screen(const Tuple5& t, const Word& target, const ScreenList& list) {
    const ScreenEntry te = detail::make_screen_entry(target);
    const TupleEvaluator ev(t, std::max(list.max_exponent, te.poly.max_exponent()));
    ScreenResult res;
    res.target_normalized_rho = ev.normalized_rho(te);
    res.best_other = -std::numeric_limits<double>::infinity();
    for (const ScreenEntry& e : list.entries) {
        if (e.na == te.na && e.nb == te.nb && e.poly == te.poly) continue;
        const double r = ev.normalized_rho(e);
        res.best_other = std::max(res.best_other, r);
        if (r >= res.target_normalized_rho - kScreenTieTol) return res;
    }
    res.accept = true;
    res.gap = res.target_normalized_rho - res.best_other;
    return res;
}

struct CandidateRecord {
    std::uint64_t sample_index = 0;
    Tuple5 tuple;
    Word best_word{"a"};
    double best_normalized_rho = 0.0;
    double runner_up_gap = 0.0;
    std::string status;  // screened | realized | certified | rejected(reason)
};

/// Chiral-pair representatives up to max_len, one word per orbit under
/// mirror-pairing and letter exchange; 23 words at the default length 9.
inline std::vector<Word> default_search_targets(int max_len) {
    std::vector<Word> targets;
    for (const ChiralPair& p : chiral_pairs(max_len)) targets.push_back(p.first);
    return targets;
}

inline int worker_count() {
    if (const char* env = std::getenv("JSRFORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 64u));
}

/// Samples tuples from the configured distributions, discards the ones no
/// real pair attains, screens the rest against each target, and pushes
/// every accepted tuple through realization and polytope certification.
/// Deterministic for a fixed (seed, config) regardless of thread count.
inline std::vector<CandidateRecord> run_search(const SearchConfig& cfg,
                                               const std::vector<Word>& targets) {
    const ScreenList list = build_screen_list(cfg.max_word_len);
    struct TargetData {
        ScreenEntry entry;
        Word partner{"a"};
    };
    std::vector<TargetData> tds;
    int max_exp = list.max_exponent;
    for (const Word& t : targets) {
        TargetData td{detail::make_screen_entry(t), canonical_rotation(mirror(t))};
        max_exp = std::max(max_exp, td.entry.poly.max_exponent());
        tds.push_back(std::move(td));
    }

    const std::uint64_t total = cfg.injected.empty()
                                    ? cfg.n_samples
                                    : static_cast<std::uint64_t>(cfg.injected.size());

    auto process = [&](std::uint64_t idx) -> std::optional<CandidateRecord> {
        Tuple5 t;
        if (!cfg.injected.empty()) {
            t = cfg.injected[static_cast<std::size_t>(idx)];
        } else {
            CounterRng rng(cfg.seed, idx);
            t.x = rng.uniform(-cfg.xyuv_range, cfg.xyuv_range);
            t.y = rng.uniform(-cfg.xyuv_range, cfg.xyuv_range);
            t.z = rng.uniform(-cfg.z_range, cfg.z_range);
            t.u = rng.uniform(-cfg.xyuv_range, cfg.xyuv_range);
            t.v = rng.uniform(-cfg.xyuv_range, cfg.xyuv_range);
        }
        if (!realizable(t)) return std::nullopt;
        const TupleEvaluator ev(t, max_exp);

        // Lazy competitor evaluations shared across targets.
        std::vector<double> cache(list.entries.size(), std::numeric_limits<double>::quiet_NaN());
        auto competitor = [&](std::size_t i) {
            double& slot = cache[i];
            if (std::isnan(slot)) slot = ev.normalized_rho(list.entries[i]);
            return slot;
        };

        for (const TargetData& td : tds) {
            const double t_nrho = ev.normalized_rho(td.entry);
            bool defeated = false;
            double best_other = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < list.entries.size(); ++i) {
                const ScreenEntry& e = list.entries[i];
                if (e.na == td.entry.na && e.nb == td.entry.nb && e.poly == td.entry.poly) continue;
                const double r = competitor(i);
                best_other = std::max(best_other, r);
                if (r >= t_nrho - kScreenTieTol) { defeated = true; break; }
            }
            if (defeated) continue;

            CandidateRecord rec;
            rec.sample_index = idx;
            rec.tuple = t;
            rec.best_word = td.entry.word;
            rec.best_normalized_rho = t_nrho;
            rec.runner_up_gap = t_nrho - best_other;
            rec.status = "screened";
            try {
                auto [A, B] = realize(t);
                rec.status = "realized";
                const Certificate cert =
                    certify(A, B, {td.entry.word, td.partner}, CertifyOptions{cfg.budget});
                rec.status = cert.certified() ? "certified" : "rejected(" + cert.reason + ")";
            } catch (const std::exception& e) {
                rec.status = "rejected(" + std::string(e.what()) + ")";
            }
            return rec;
        }
        return std::nullopt;
    };

    const int workers = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(total, 1));
    std::vector<std::vector<CandidateRecord>> partial(static_cast<std::size_t>(workers));
    std::atomic<std::uint64_t> cursor{0};
    auto drain = [&](int wid) {
        constexpr std::uint64_t kChunk = 4096;
        while (true) {
            const std::uint64_t begin = cursor.fetch_add(kChunk);
            if (begin >= total) break;
            const std::uint64_t end = std::min(begin + kChunk, total);
            for (std::uint64_t i = begin; i < end; ++i) {
                if (auto rec = process(i)) partial[static_cast<std::size_t>(wid)].push_back(std::move(*rec));
            }
        }
    };
    if (workers <= 1) {
        drain(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain, w);
        for (auto& th : pool) th.join();
    }

    std::vector<CandidateRecord> out;
    for (auto& p : partial)
        for (auto& r : p) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), [](const CandidateRecord& l, const CandidateRecord& r) {
        return l.sample_index < r.sample_index;
    });
    return out;
}

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string to_csv(const std::vector<CandidateRecord>& records) {
    std::string out = "sample_index,x,y,z,u,v,best_word,normalized_rho,gap,status\n";
    for (const CandidateRecord& r : records) {
        out += std::to_string(r.sample_index) + ',';
        out += format_g17(r.tuple.x) + ',';
        out += format_g17(r.tuple.y) + ',';
        out += format_g17(r.tuple.z) + ',';
        out += format_g17(r.tuple.u) + ',';
        out += format_g17(r.tuple.v) + ',';
        out += r.best_word.str() + ',';
        out += format_g17(r.best_normalized_rho) + ',';
        out += format_g17(r.runner_up_gap) + ',';
        out += r.status + '\n';
    }
    return out;
}

struct TableRowResult {
    int row = 0;
    Tuple5 tuple;
    Word smp{"a"};
    int expected_pairs = 0;
    bool screen_ok = false;
    bool realized = false;
    Verdict verdict = Verdict::failed;
    std::string reason;
    int vertex_pairs = 0;
    double min_margin = 0.0;
    bool pass = false;
};

struct TableReport {
    std::vector<TableRowResult> rows;
    bool all_pass = false;
};

/// Pushes every bundled reference tuple through screen -> realize ->
/// certify and compares the resulting polygon size against the recorded
/// one, allowing a difference of up to `pair_tolerance` antipodal pairs.
inline TableReport reproduce_table(int max_word_len = 14, int pair_tolerance = 4) {
    const ScreenList list = build_screen_list(max_word_len);
    TableReport report;
    report.all_pass = true;
    int idx = 0;
    for (const ReferenceRow& row : reference_table()) {
        TableRowResult r;
        r.row = ++idx;
        r.tuple = row.tuple;
        r.smp = parse_word(row.smp);
        r.expected_pairs = row.vertex_pairs;
        const ScreenResult sc = screen(row.tuple, r.smp, list);
        r.screen_ok = sc.accept;
        if (r.screen_ok) {
            try {
                auto [A, B] = realize(row.tuple);
                r.realized = true;
                const Certificate cert =
                    certify(A, B, {r.smp, canonical_rotation(mirror(r.smp))});
                r.verdict = cert.verdict;
                r.reason = cert.reason;
                if (cert.certified()) {
                    r.vertex_pairs = static_cast<int>(cert.reps.size());
                    r.min_margin = cert.min_interior_margin;
                }
            } catch (const std::exception& e) {
                r.reason = e.what();
            }
        } else {
            r.reason = "screening rejected the stated product";
        }
        r.pass = r.screen_ok && r.verdict == Verdict::certified_unique_pair &&
                 std::abs(r.vertex_pairs - r.expected_pairs) <= pair_tolerance;
        report.all_pass = report.all_pass && r.pass;
        report.rows.push_back(std::move(r));
    }
    return report;
}

}  // namespace jsrforge
