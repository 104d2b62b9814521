#include "collatz/census.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>
#include <thread>

namespace collatz {

namespace {

Walk walk_under(Rule rule, const std::string& bits) {
    switch (rule) {
        case Rule::Collatz: return collatz_walk(bits);
        case Rule::Reverse: return reverse_walk(bits);
        case Rule::OnChangeTurnRight: return on_change_walk(bits);
        case Rule::Dragon: break;
    }
    throw DomainError("census rules are bit-driven; dragon has no source n");
}

// Findings for a slice of the range. Girth-4 curves are counted, not
// listed; they are the overwhelming default.
struct Findings {
    std::vector<std::uint64_t> acyclic;
    std::vector<std::pair<std::uint64_t, int>> exotic;
    std::vector<std::uint64_t> cap_exceeded;
    std::uint64_t girth4 = 0;

    void append(Findings&& tail) {
        acyclic.insert(acyclic.end(), tail.acyclic.begin(), tail.acyclic.end());
        exotic.insert(exotic.end(), tail.exotic.begin(), tail.exotic.end());
        cap_exceeded.insert(cap_exceeded.end(), tail.cap_exceeded.begin(),
                            tail.cap_exceeded.end());
        girth4 += tail.girth4;
    }
};

Findings sweep_slice(std::uint64_t first, std::uint64_t last, Rule rule,
                     std::uint64_t step_cap) {
    Findings f;
    for (std::uint64_t n = first; n <= last; ++n) {
        try {
            const CurveClass c = classify(n, rule, step_cap);
            switch (c.kind) {
                case CurveClass::Acyclic: f.acyclic.push_back(n); break;
                case CurveClass::Girth4: ++f.girth4; break;
                case CurveClass::Exotic: f.exotic.emplace_back(n, c.girth); break;
            }
        } catch (const CapExceeded&) {
            // Recorded, never fatal: a cap hit in a sweep is a finding.
            f.cap_exceeded.push_back(n);
        }
    }
    return f;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << text;
        out.flush();
        if (!out) {
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("rename " + tmp.string() + " -> " + path.string() +
                      " failed: " + ec.message());
    }
}

std::string record_lines(const Findings& f) {
    // One line per finding, `n<TAB>class<TAB>girth`, merged in n order.
    struct Row {
        std::uint64_t n;
        const char* cls;
        std::string girth;
    };
    std::vector<Row> rows;
    rows.reserve(f.acyclic.size() + f.exotic.size() + f.cap_exceeded.size());
    for (std::uint64_t n : f.acyclic) rows.push_back({n, "acyclic", "inf"});
    for (auto [n, g] : f.exotic) rows.push_back({n, "exotic", std::to_string(g)});
    for (std::uint64_t n : f.cap_exceeded) rows.push_back({n, "cap-exceeded", "-"});
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.n < b.n; });

    std::string out;
    for (const Row& r : rows) {
        out += std::to_string(r.n);
        out += '\t';
        out += r.cls;
        out += '\t';
        out += r.girth;
        out += '\n';
    }
    return out;
}

// ---- checkpoint sidecar ------------------------------------------------
//
// The checkpoint file itself is the single line `completed_through=<n>`.
// Findings accumulated so far live next to it in `<path>.partial`; both are
// replaced atomically after every chunk, sidecar first, so the checkpoint
// never points past persisted data.

std::filesystem::path sidecar_path(const std::filesystem::path& checkpoint) {
    return checkpoint.string() + ".partial";
}

std::string serialize_sidecar(const CensusConfig& cfg, std::uint64_t completed_through,
                              const Findings& f) {
    std::ostringstream out;
    out << "census-partial v1\n"
        << "range_start=" << cfg.range_start << '\n'
        << "range_end=" << cfg.range_end << '\n'
        << "rule=" << rule_name(cfg.rule) << '\n'
        << "step_cap=" << cfg.step_cap << '\n'
        << "completed_through=" << completed_through << '\n'
        << "count_girth4=" << f.girth4 << '\n'
        << "records:\n"
        << record_lines(f);
    return out.str();
}

bool parse_u64(std::string_view text, std::uint64_t& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

// Expects `key=<u64>`; false on any mismatch.
bool parse_kv_u64(const std::string& line, std::string_view key, std::uint64_t& out) {
    if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 ||
        line[key.size()] != '=') {
        return false;
    }
    return parse_u64(std::string_view(line).substr(key.size() + 1), out);
}

struct ResumeState {
    std::uint64_t completed_through = 0;
    Findings findings;
};

// Loads checkpoint + sidecar if both exist and echo this config; anything
// inconsistent means a fresh start.
std::optional<ResumeState> load_resume_state(const CensusConfig& cfg) {
    const std::filesystem::path cp = cfg.checkpoint_path;
    std::ifstream cp_in(cp);
    std::ifstream side_in(sidecar_path(cp));
    if (!cp_in || !side_in) {
        return std::nullopt;
    }

    std::string line;
    std::uint64_t cp_through = 0;
    if (!std::getline(cp_in, line) || !parse_kv_u64(line, "completed_through", cp_through)) {
        return std::nullopt;
    }

    auto expect = [&side_in, &line](std::string_view want) {
        return std::getline(side_in, line) && line == want;
    };
    auto expect_u64 = [&side_in, &line](std::string_view key, std::uint64_t& out) {
        return std::getline(side_in, line) && parse_kv_u64(line, key, out);
    };

    std::uint64_t start = 0, end = 0, cap = 0, through = 0;
    ResumeState state;
    if (!expect("census-partial v1") ||
        !expect_u64("range_start", start) || start != cfg.range_start ||
        !expect_u64("range_end", end) || end != cfg.range_end ||
        !expect(std::string("rule=") + std::string(rule_name(cfg.rule))) ||
        !expect_u64("step_cap", cap) || cap != cfg.step_cap ||
        !expect_u64("completed_through", through) || through != cp_through ||
        !expect_u64("count_girth4", state.findings.girth4) ||
        !expect("records:")) {
        return std::nullopt;
    }
    if (through < cfg.range_start || through > cfg.range_end) {
        return std::nullopt;
    }

    while (std::getline(side_in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto tab1 = line.find('\t');
        const auto tab2 = line.find('\t', tab1 == std::string::npos ? tab1 : tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos) {
            return std::nullopt;
        }
        std::uint64_t n = 0;
        if (!parse_u64(std::string_view(line).substr(0, tab1), n)) {
            return std::nullopt;
        }
        const std::string cls = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string girth_text = line.substr(tab2 + 1);
        if (cls == "acyclic") {
            state.findings.acyclic.push_back(n);
        } else if (cls == "exotic") {
            std::uint64_t g = 0;
            if (!parse_u64(girth_text, g)) {
                return std::nullopt;
            }
            state.findings.exotic.emplace_back(n, static_cast<int>(g));
        } else if (cls == "cap-exceeded") {
            state.findings.cap_exceeded.push_back(n);
        } else {
            return std::nullopt;
        }
    }
    state.completed_through = through;
    return state;
}

void persist_progress(const CensusConfig& cfg, std::uint64_t completed_through,
                      const Findings& f) {
    const std::filesystem::path cp = cfg.checkpoint_path;
    write_file_atomically(sidecar_path(cp), serialize_sidecar(cfg, completed_through, f));
    write_file_atomically(cp, "completed_through=" + std::to_string(completed_through) + "\n");
}

}  // namespace

CurveClass classify(std::uint64_t n, Rule rule, std::uint64_t step_cap) {
    if (n < 2) {
        throw DomainError("classify requires n >= 2");
    }
    const Encoding enc = encode(BigInt(n), step_cap);
    const SegmentGraph g = graph_of(walk_under(rule, enc.bits));
    const std::optional<int> gr = girth(g);
    if (!gr) {
        return {CurveClass::Acyclic, 0};
    }
    return {*gr == 4 ? CurveClass::Girth4 : CurveClass::Exotic, *gr};
}

CensusReport run_census(const CensusConfig& config) {
    if (config.range_start < 2) {
        throw DomainError("census range starts at 2");
    }
    if (config.range_start > config.range_end) {
        throw DomainError("census range is empty");
    }
    if (config.chunk_size < 1) {
        throw DomainError("chunk_size must be >= 1");
    }
    if (config.rule == Rule::Dragon) {
        throw DomainError("census rules are bit-driven; dragon has no source n");
    }

    const auto t0 = std::chrono::steady_clock::now();

    Findings base;
    std::uint64_t sweep_from = config.range_start;
    if (!config.checkpoint_path.empty()) {
        if (auto resumed = load_resume_state(config)) {
            base = std::move(resumed->findings);
            sweep_from = resumed->completed_through + 1;
        }
    }

    // Static chunk grid over what remains; workers pull chunk indices and
    // results merge in chunk order, so findings are independent of worker
    // count and completion order.
    std::uint64_t chunk_count = 0;
    if (sweep_from <= config.range_end) {
        const std::uint64_t remaining = config.range_end - sweep_from + 1;
        chunk_count = (remaining + config.chunk_size - 1) / config.chunk_size;
    }
    std::uint64_t run_chunks = chunk_count;
    if (config.max_chunks_per_run != 0) {
        run_chunks = std::min(run_chunks, config.max_chunks_per_run);
    }

    std::vector<Findings> chunk_results(run_chunks);
    auto chunk_last = [&](std::uint64_t i) {
        return std::min(config.range_end, sweep_from + (i + 1) * config.chunk_size - 1);
    };

    if (run_chunks > 0) {
        unsigned workers = config.worker_count != 0
                               ? config.worker_count
                               : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(
            std::min<std::uint64_t>(workers, run_chunks));

        std::atomic<std::uint64_t> next_chunk{0};
        std::atomic<bool> abort{false};

        // Frontier bookkeeping: the contiguous prefix of finished chunks,
        // persisted after every advance when checkpointing is on.
        std::mutex frontier_mutex;
        std::vector<bool> chunk_done(run_chunks, false);
        std::uint64_t frontier = 0;
        Findings persisted = base;
        std::exception_ptr failure;

        auto worker_loop = [&] {
            while (!abort.load(std::memory_order_relaxed)) {
                const std::uint64_t i = next_chunk.fetch_add(1, std::memory_order_relaxed);
                if (i >= run_chunks) {
                    return;
                }
                const std::uint64_t first = sweep_from + i * config.chunk_size;
                chunk_results[i] = sweep_slice(first, chunk_last(i), config.rule,
                                               config.step_cap);

                std::lock_guard lock(frontier_mutex);
                chunk_done[i] = true;
                bool advanced = false;
                while (frontier < run_chunks && chunk_done[frontier]) {
                    persisted.append(Findings(chunk_results[frontier]));
                    ++frontier;
                    advanced = true;
                }
                if (advanced && !config.checkpoint_path.empty() && !failure) {
                    try {
                        persist_progress(config, chunk_last(frontier - 1), persisted);
                    } catch (...) {
                        failure = std::current_exception();
                        abort.store(true, std::memory_order_relaxed);
                    }
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker_loop);
        }
        for (auto& t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    Findings total = std::move(base);
    for (auto& chunk : chunk_results) {
        total.append(std::move(chunk));
    }

    CensusReport report;
    report.config = config;
    report.acyclic_ns = std::move(total.acyclic);
    report.exotic_ns = std::move(total.exotic);
    report.cap_exceeded_ns = std::move(total.cap_exceeded);
    report.count_girth4 = total.girth4;
    report.completed_through =
        run_chunks == chunk_count ? config.range_end
        : run_chunks > 0          ? chunk_last(run_chunks - 1)
                                  : sweep_from - 1;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

std::string serialize_report(const CensusReport& report) {
    Findings f;
    f.acyclic = report.acyclic_ns;
    f.exotic = report.exotic_ns;
    f.cap_exceeded = report.cap_exceeded_ns;
    f.girth4 = report.count_girth4;

    std::ostringstream out;
    out << "census-report v1\n"
        << "range_start=" << report.config.range_start << '\n'
        << "range_end=" << report.config.range_end << '\n'
        << "rule=" << rule_name(report.config.rule) << '\n'
        << "step_cap=" << report.config.step_cap << '\n'
        << "completed_through=" << report.completed_through << '\n'
        << "count_total=" << report.count_total() << '\n'
        << "count_acyclic=" << report.count_acyclic() << '\n'
        << "count_girth4=" << report.count_girth4 << '\n'
        << "count_exotic=" << report.count_exotic() << '\n'
        << "count_cap_exceeded=" << report.count_cap_exceeded() << '\n'
        << "records:\n"
        << record_lines(f);
    return out.str();
}

void write_report_file(const CensusReport& report, const std::filesystem::path& path) {
    write_file_atomically(path, serialize_report(report));
}

}  // namespace collatz
