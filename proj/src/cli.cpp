#include "realhiggs/cli.hpp"

#include <chrono>
#include <thread>

#include <CLI11.hpp>

#include "realhiggs/cache.hpp"
#include "realhiggs/errors.hpp"
#include "realhiggs/parallel.hpp"
#include "realhiggs/rank2.hpp"
#include "realhiggs/version.hpp"

namespace realhiggs {

namespace {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void validate_request(const ComputeRequest& req) {
    if (req.r < 1) throw InvalidInput("rank r must be at least 1 (got " + std::to_string(req.r) + ")");
    check_coprime(req.r, req.d);
    if (req.field == FieldCase::Real) {
        if (!req.b) throw InvalidTopology("the real field needs --b (number of real circles minus one)");
        validate_real_topology(CurveTopology::circles(req.g, *req.b));
    } else {
        if (req.g < 1 || req.g > kMaxGenus)
            throw InvalidTopology("genus must lie in 1.." + std::to_string(kMaxGenus) + " (got " +
                                  std::to_string(req.g) + ")");
        if (req.pipeline != Pipeline::Generic)
            throw InvalidInput("the complex field only supports the generic pipeline");
    }
    if (req.pipeline == Pipeline::ClosedFormR2 && req.r != 2)
        throw InvalidInput("the rank2 pipeline needs --r 2 (got " + std::to_string(req.r) + ")");
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) return kExitInvalidInput;
    return kExitInternal;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return static_cast<double>(us.count()) / 1000.0;
}

}  // namespace

OutputRecord compute_record(const ComputeRequest& req, APolyStore& store, int jobs) {
    validate_request(req);
    BettiResult res;
    if (req.field == FieldCase::Complex) {
        res = complex_betti(store.get(req.g, req.r));
    } else {
        switch (req.pipeline) {
            case Pipeline::Generic: res = real_betti(store.get(req.g, req.r), *req.b); break;
            case Pipeline::FastSpecialized:
                res = real_betti(req.g, *req.b, req.r, Pipeline::FastSpecialized, jobs);
                break;
            case Pipeline::ClosedFormR2: res = p_rank2(req.g, *req.b); break;
        }
    }
    return OutputRecord::from(res, req.d);
}

IntRange IntRange::parse(const std::string& s) {
    auto to_int = [&](const std::string& part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw InvalidInput("bad range '" + s + "' (expected N or LO..HI)");
        return v;
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = to_int(s);
        return {v, v};
    }
    return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

std::vector<OutputRecord> compute_table(IntRange g, const std::string& b_policy, IntRange r, int d,
                                        FieldCase field, Pipeline pipeline, APolyStore& store, int jobs,
                                        bool timing) {
    std::optional<int> fixed_b;
    if (field == FieldCase::Real && b_policy != "all") {
        IntRange b = IntRange::parse(b_policy);
        if (b.lo != b.hi) throw InvalidInput("--b takes 'all' or a single value");
        fixed_b = b.lo;
    }
    std::vector<ComputeRequest> cells;
    for (int gg = g.lo; gg <= g.hi; ++gg) {
        std::vector<std::optional<int>> bs;
        if (field == FieldCase::Complex) {
            bs.push_back(std::nullopt);
        } else if (fixed_b) {
            bs.push_back(fixed_b);
        } else {
            for (int b = 0; b <= gg; ++b) bs.push_back(b);
        }
        for (const auto& b : bs)
            for (int rr = r.lo; rr <= r.hi; ++rr) cells.push_back({gg, b, rr, d, field, pipeline});
    }
    std::vector<OutputRecord> out(cells.size());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const ComputeRequest& req = cells[i];
        auto start = std::chrono::steady_clock::now();
        try {
            out[i] = compute_record(req, store, 1);
            if (timing) out[i].wall_ms = elapsed_ms(start);
        } catch (const std::exception& e) {
            OutputRecord& rec = out[i];
            rec.g = req.g;
            rec.b = req.b;
            rec.r = req.r;
            rec.d = req.d;
            rec.field = req.field;
            rec.pipeline = req.pipeline;
            rec.error = e.what();
            rec.exit_code = exit_code_for(e);
        }
    });
    return out;
}

std::vector<CheckReport> check_cache_entries(const std::string& dir, int jobs) {
    DiskCache cache(dir);
    std::vector<CacheEntryInfo> entries = cache.list();
    std::vector<CheckReport> out(entries.size());
    APolyStore fresh(1);
    parallel_for(entries.size(), jobs, [&](std::size_t i) {
        const CacheEntryInfo& e = entries[i];
        CheckReport& c = out[i];
        c.name = "cache_entry";
        c.g = e.g;
        c.r = e.r;
        c.detail = e.path.filename().string();
        try {
            if (!e.readable) throw InvalidInput(e.problem);
            APoly stored = DiskCache::read_entry(e.path);
            std::string expected = fresh.get(e.g, e.r).value.to_string();
            std::string actual = stored.value.to_string();
            c.pass = expected == actual;
            if (!c.pass) {
                c.expected = expected;
                c.actual = actual;
            }
        } catch (const std::exception& ex) {
            c.pass = false;
            c.detail += std::string(": ") + ex.what();
        }
    });
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z2-Betti polynomials of real Higgs bundle moduli spaces", "realhiggs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kEngineVersion));

    std::string cache_dir;
    bool no_cache = false;
    int jobs = 1;
    app.add_option("--cache-dir", cache_dir, "Cache directory (default: $" + std::string(kCacheDirEnv) + " or ~/.cache/realhiggs)");

    std::string field_s = "real", format_s = "text", pipeline_s = "generic";
    bool no_timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--no-cache", no_cache, "Neither read nor write the on-disk cache");
        sub->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    };
    auto add_compute_opts = [&](CLI::App* sub) {
        sub->add_option("--field", field_s, "real or complex")->check(CLI::IsMember({"real", "complex"}));
        sub->add_option("--format", format_s, "json, csv, latex or text")
            ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
        sub->add_option("--pipeline", pipeline_s, "generic, fast or rank2")
            ->check(CLI::IsMember({"generic", "fast", "rank2"}));
        sub->add_flag("--no-timing", no_timing, "Omit wall_ms from JSON output");
        add_common(sub);
    };

    int g = 0, r = 1, d = 1;
    std::optional<int> b;
    auto* compute = app.add_subcommand("compute", "Betti polynomial of one moduli space");
    compute->add_option("--g", g, "Genus")->required();
    compute->add_option("--b", b, "Real circles minus one (real field)");
    compute->add_option("--r", r, "Rank")->required();
    compute->add_option("--d", d, "Degree, coprime to the rank");
    add_compute_opts(compute);

    std::string g_range, b_policy = "all", r_range;
    auto* table = app.add_subcommand("table", "Betti polynomials over a parameter grid");
    table->add_option("--g", g_range, "Genus range, N or LO..HI")->required();
    table->add_option("--b", b_policy, "'all' or a single value");
    table->add_option("--r", r_range, "Rank range, N or LO..HI")->required();
    table->add_option("--d", d, "Degree, coprime to every rank in the range");
    add_compute_opts(table);

    int max_g = 3, max_r = 3;
    bool check_cache = false;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "Run the identity checks over a grid");
    verify->add_option("--max-g", max_g, "Largest genus");
    verify->add_option("--max-r", max_r, "Largest rank");
    verify->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--check-cache", check_cache, "Also recompute every cache entry and compare");
    add_common(verify);

    auto* cache_cmd = app.add_subcommand("cache", "Inspect or empty the cache");
    cache_cmd->require_subcommand(1);
    auto* cache_list = cache_cmd->add_subcommand("list", "List cache entries");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "Delete all cache entries");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        jobs = resolve_jobs(jobs);
        DiskCache disk(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
        APolyStore store(jobs, no_cache ? nullptr : &disk);

        if (*compute || *table) {
            FieldCase field = parse_field_case(field_s);
            Pipeline pipeline = parse_pipeline(pipeline_s);
            OutputFormat format = parse_output_format(format_s);
            if (*compute) {
                auto start = std::chrono::steady_clock::now();
                OutputRecord rec = compute_record({g, b, r, d, field, pipeline}, store, jobs);
                if (!no_timing) rec.wall_ms = elapsed_ms(start);
                out << render_single(rec, format);
                return kExitOk;
            }
            auto recs = compute_table(IntRange::parse(g_range), b_policy, IntRange::parse(r_range), d, field,
                                      pipeline, store, jobs, !no_timing);
            out << render_table(recs, format);
            int code = kExitOk;
            for (const auto& rec : recs) {
                if (rec.ok()) continue;
                err << "g=" << rec.g << " r=" << rec.r << ": " << rec.error << "\n";
                code = std::max(code, rec.exit_code);
            }
            return code;
        }
        if (*verify) {
            auto reports = run_suite(max_g, max_r, store, jobs);
            if (check_cache) {
                auto cached = check_cache_entries(disk.dir().string(), jobs);
                reports.insert(reports.end(), cached.begin(), cached.end());
            }
            out << (verify_format == "json" ? render_json(reports) : render_text(reports));
            return all_pass(reports) ? kExitOk : kExitVerifyFailed;
        }
        if (*cache_list) {
            out << "cache directory: " << disk.dir().string() << "\n";
            for (const auto& e : disk.list()) {
                out << e.path.filename().string();
                if (e.readable) {
                    out << "  g=" << e.g << " r=" << e.r << " engine=" << e.engine_version
                        << " pipeline=" << e.pipeline_version << " created=" << e.created << " terms=" << e.terms;
                } else {
                    out << "  unreadable: " << e.problem;
                }
                out << "\n";
            }
            return kExitOk;
        }
        if (*cache_clear) {
            out << "removed " << disk.clear() << " entries from " << disk.dir().string() << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}

}  // namespace realhiggs
