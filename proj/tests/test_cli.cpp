#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "realhiggs/cache.hpp"
#include "realhiggs/cli.hpp"
#include "realhiggs/errors.hpp"
#include "realhiggs/version.hpp"

using namespace realhiggs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("realhiggs-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "realhiggs");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("compute prints the expanded polynomial") {
    TempDir dir;
    auto r = run({"--cache-dir", dir.path.string(), "compute", "--g", "2", "--b", "2", "--r", "2", "--d", "1",
                  "--field", "real"});
    CHECK(r.code == 0);
    CHECK(r.out == "4*t^10 - 20*t^9 + 52*t^8 - 76*t^7 + 56*t^6 - 16*t^5\n");
    auto rank_one = run({"--cache-dir", dir.path.string(), "compute", "--g", "1", "--b", "0", "--r", "1", "--d", "0"});
    CHECK(rank_one.code == 0);
    CHECK(rank_one.out == "t^2 - t\n");
    auto latex = run({"compute", "--no-cache", "--g", "1", "--b", "0", "--r", "1", "--format", "latex"});
    CHECK(latex.out == "-t (1-t)\n");
    auto complex = run({"compute", "--no-cache", "--g", "1", "--r", "1", "--field", "complex"});
    CHECK(complex.out == "t^4 - 2*t^3 + t^2\n");
}

TEST_CASE("invalid input exits with 2") {
    auto bad_b = run({"compute", "--no-cache", "--g", "2", "--b", "3", "--r", "2", "--d", "1"});
    CHECK(bad_b.code == kExitInvalidInput);
    CHECK(bad_b.err.find("b = 3") != std::string::npos);
    CHECK(run({"compute", "--no-cache", "--g", "2", "--b", "1", "--r", "2", "--d", "4"}).code == kExitInvalidInput);
    CHECK(run({"compute", "--no-cache", "--g", "2", "--r", "2"}).code == kExitInvalidInput);
    CHECK(run({"compute", "--no-cache", "--g", "2", "--b", "1", "--r", "3", "--pipeline", "rank2"}).code ==
          kExitInvalidInput);
    CHECK(run({"compute", "--g", "2"}).code == kExitInvalidInput);
    CHECK(run({"frobnicate"}).code == kExitInvalidInput);
    CHECK(run({"table", "--no-cache", "--g", "x..2", "--r", "1"}).code == kExitInvalidInput);
}

TEST_CASE("table over two genera has seven rows") {
    auto r = run({"table", "--no-cache", "--g", "2..3", "--b", "all", "--r", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 7);
    auto empty = run({"table", "--no-cache", "--g", "3..2", "--r", "2", "--format", "json"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "[]\n");
    auto empty_csv = run({"table", "--no-cache", "--g", "2", "--r", "3..1", "--format", "csv"});
    CHECK(count_lines(empty_csv.out) == 1);
}

TEST_CASE("table cells fail independently") {
    auto r = run({"table", "--no-cache", "--g", "1..2", "--b", "2", "--r", "1", "--format", "json", "--no-timing"});
    CHECK(r.code == kExitInvalidInput);
    auto recs = parse_json_table(r.out);
    REQUIRE(recs.size() == 2);
    CHECK_FALSE(recs[0].ok());
    CHECK(recs[1].ok());
}

TEST_CASE("json round trips") {
    APolyStore store;
    auto recs = compute_table({1, 3}, "all", {1, 2}, 1, FieldCase::Real, Pipeline::Generic, store, 2, true);
    auto parsed = parse_json_table(render_table(recs, OutputFormat::Json));
    CHECK(parsed == recs);
    auto cx = compute_table({1, 2}, "all", {1, 2}, 1, FieldCase::Complex, Pipeline::Generic, store, 1, false);
    CHECK(cx.size() == 4);
    CHECK(parse_json_table(render_table(cx, OutputFormat::Json)) == cx);
    CHECK(parse_json_record(render_json(recs[0])) == recs[0]);
    CHECK_THROWS_AS(parse_json_record("{"), InvalidInput);
    CHECK_THROWS_AS(parse_json_record("{\"params\":{}}"), InvalidInput);
}

TEST_CASE("all formats render the same polynomial") {
    APolyStore store;
    OutputRecord rec = compute_record({2, 1, 2, 1, FieldCase::Real, Pipeline::Generic}, store);
    std::string text = render_text(rec);
    CHECK(render_table({rec}, OutputFormat::Csv).find(text) != std::string::npos);
    CHECK(render_table({rec}, OutputFormat::Text).find(text) != std::string::npos);
    CHECK(render_latex(rec) == "-2 t^{5} (1-t)^{3} \\left(t^{2} - t + 3\\right)");
    CHECK(latex_poly(UPoly(std::vector<Rational>{Rational(1, 2), 0, -1})) == "-t^{2} + \\frac{1}{2}");
}

TEST_CASE("cache on and off give identical output") {
    TempDir dir;
    std::vector<std::string> base = {"--cache-dir", dir.path.string(), "table", "--g", "1..2", "--r", "1..3",
                                     "--format", "json", "--no-timing"};
    auto off = base;
    off.push_back("--no-cache");
    auto cold = run(base), warm = run(base), none = run(off);
    CHECK(cold.code == 0);
    CHECK(cold.out == warm.out);
    CHECK(cold.out == none.out);
    CHECK(fs::exists(dir.path / "A_g2_r3.txt"));
}

TEST_CASE("cache entries reload byte-identically") {
    TempDir dir;
    DiskCache cache(dir.path);
    APolyStore writer(1, &cache);
    std::string fresh = writer.get(2, 2).value.to_string();
    CHECK(writer.backend_hits() == 0);
    APolyStore reader(1, &cache);
    CHECK(reader.get(2, 2).value.to_string() == fresh);
    CHECK(reader.backend_hits() == 1);
    auto entries = cache.list();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].readable);
    CHECK(entries[0].engine_version == kEngineVersion);
}

TEST_CASE("version mismatch is a miss") {
    TempDir dir;
    DiskCache cache(dir.path);
    APolyStore writer(1, &cache);
    writer.get(1, 2);
    fs::path p = cache.entry_path(1, 2);
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    const std::string line = std::string("engine_version ") + kEngineVersion;
    text.replace(text.find(line), line.size(), "engine_version 0.0.0-old");
    std::ofstream(p) << text;
    CHECK_FALSE(cache.load(1, 2).has_value());
    APolyStore reader(1, &cache);
    reader.get(1, 2);
    CHECK(reader.backend_hits() == 0);
}

TEST_CASE("corrupted cache entries are detected") {
    TempDir dir;
    std::string d = dir.path.string();
    CHECK(run({"--cache-dir", d, "compute", "--g", "2", "--b", "1", "--r", "2"}).code == 0);
    CHECK(run({"--cache-dir", d, "verify", "--max-g", "1", "--max-r", "1", "--check-cache"}).code == 0);

    fs::path p = DiskCache(dir.path).entry_path(2, 2);
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    // Flip one coefficient: still a well-formed entry, but wrong.
    auto body = text.find("---\n") + 4;
    auto slash = text.find('/', body);
    text.insert(slash, "7");
    std::ofstream(p) << text;

    auto r = run({"--cache-dir", d, "verify", "--max-g", "1", "--max-r", "1", "--check-cache"});
    CHECK(r.code == kExitVerifyFailed);
    CHECK(r.out.find("FAIL cache_entry g=2 r=2") != std::string::npos);
    CHECK(r.out.find("expected:") != std::string::npos);

    std::ofstream(p) << "garbage\n";
    auto g = run({"--cache-dir", d, "verify", "--max-g", "1", "--max-r", "1", "--check-cache"});
    CHECK(g.code == kExitVerifyFailed);
    CHECK_FALSE(DiskCache(dir.path).load(2, 2).has_value());
}

TEST_CASE("verify smoke run and json output") {
    auto r = run({"verify", "--no-cache", "--max-r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto j = run({"verify", "--no-cache", "--max-g", "1", "--max-r", "1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.front() == '[');
}

TEST_CASE("cache list and clear") {
    TempDir dir;
    std::string d = dir.path.string();
    run({"--cache-dir", d, "compute", "--g", "1", "--b", "0", "--r", "2"});
    auto list = run({"--cache-dir", d, "cache", "list"});
    CHECK(list.out.find("A_g1_r2.txt") != std::string::npos);
    auto clear = run({"--cache-dir", d, "cache", "clear"});
    CHECK(clear.out.find("removed 1 entries") == 0);
    CHECK(DiskCache(dir.path).list().empty());
    CHECK(run({"--cache-dir", d, "cache"}).code == kExitInvalidInput);
}

TEST_CASE("cache directory comes from the environment") {
    const char* old = std::getenv(kCacheDirEnv);
    std::string saved = old ? old : "";
    setenv(kCacheDirEnv, "/tmp/realhiggs-env-test", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/realhiggs-env-test"));
    if (old) {
        setenv(kCacheDirEnv, saved.c_str(), 1);
    } else {
        unsetenv(kCacheDirEnv);
    }
}

TEST_CASE("integer ranges") {
    CHECK(IntRange::parse("2..5").lo == 2);
    CHECK(IntRange::parse("2..5").hi == 5);
    CHECK(IntRange::parse("4").lo == 4);
    CHECK_THROWS_AS(IntRange::parse("2..x"), InvalidInput);
    CHECK_THROWS_AS(IntRange::parse(""), InvalidInput);
}
