#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gazebench/scanpath_io.hpp"
#include "gazebench/image_io.hpp"

namespace fs = std::filesystem;
using namespace gazebench;

namespace {

std::string bin() {
    const char* p = std::getenv("GAZEBENCH_BIN");
    REQUIRE(p != nullptr);
    return p;
}

fs::path work() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "gazebench_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path log = work() / "out.log";
    const std::string cmd = "\"" + bin() + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {status == -1 ? -1 : WEXITSTATUS(status), buf.str()};
}

} // namespace

TEST_CASE("cli: no subcommand prints usage and exits nonzero") {
    const auto r = run("");
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("Usage") != std::string::npos);
}

TEST_CASE("cli: --version and --help succeed") {
    CHECK(run("--version").exit_code == 0);
    const auto help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("Exit codes") != std::string::npos);
}

TEST_CASE("cli: unknown flag exits with the usage code") {
    const auto r = run("sample --frobnicate");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: unreadable file exits with the io code") {
    const auto r = run("render --scanpath /nonexistent/sp.json --out " +
                       (work() / "x.png").string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli: sample from a single-peak map lands on the peak") {
    const fs::path map = work() / "peak.png";
    std::vector<std::uint8_t> px(16 * 16, 10);
    px[5 * 16 + 9] = 255;
    write_png_gray8(map.string(), 16, 16, px);

    const fs::path out = work() / "peak_path.json";
    const auto r = run("sample --mode ior --map \"" + map.string() + "\" --n-fixations 1 --out \"" +
                       out.string() + "\"");
    REQUIRE(r.exit_code == 0);
    const Scanpath sp = read_scanpath_file(out.string());
    REQUIRE(sp.size() == 1);
    CHECK(sp.fixations[0].x == doctest::Approx((9 + 0.5) / 16.0));
    CHECK(sp.fixations[0].y == doctest::Approx((5 + 0.5) / 16.0));
}

TEST_CASE("cli: sampling twice with one seed is byte-identical") {
    const fs::path map = work() / "uni.png";
    write_png_gray8(map.string(), 8, 8, std::vector<std::uint8_t>(64, 128));

    const fs::path a = work() / "a.json", b = work() / "b.json";
    REQUIRE(run("sample --mode prob --map \"" + map.string() + "\" --n-fixations 5 --seed 3 --out \"" +
                a.string() + "\"").exit_code == 0);
    REQUIRE(run("sample --mode prob --map \"" + map.string() + "\" --n-fixations 5 --seed 3 --out \"" +
                b.string() + "\"").exit_code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("cli: ingest on the fixture gaze log emits scanpaths and a manifest") {
    const fs::path fx = work() / "fx";
    REQUIRE(run("synth-fixtures --out-dir \"" + fx.string() + "\" --seed 1").exit_code == 0);

    const fs::path out_dir = work() / "detected";
    const fs::path manifest = work() / "detected_manifest.json";
    const auto r = run("ingest --log \"" + (fx / "gaze" / "gaze_log.csv").string() +
                       "\" --difficulty-col difficulty --nodes-col node_count --out-dir \"" +
                       out_dir.string() + "\" --emit-manifest \"" + manifest.string() +
                       "\" --out \"" + (work() / "detected.jsonl").string() + "\"");
    REQUIRE(r.exit_code == 0);
    // 4 stimuli x 3 participants
    int files = 0;
    for (const auto& e : fs::directory_iterator(out_dir)) files += e.is_regular_file();
    CHECK(files == 12);
    const Scanpath sp = read_scanpath_file((out_dir / "p01_s01.json").string());
    CHECK(sp.size() >= 8); // 12 planned fixations, detector may merge a couple
    CHECK(fs::exists(manifest));
}

TEST_CASE("cli: ingest with a bad column mapping exits with the schema code") {
    const fs::path fx = work() / "fx"; // created above
    const auto r = run("ingest --log \"" + (fx / "gaze" / "gaze_log.csv").string() +
                       "\" --x-col nope --out \"" + (work() / "zz.jsonl").string() + "\"");
    CHECK(r.exit_code == 4);
}

TEST_CASE("cli: render writes PNG and SVG for the same scanpath") {
    Scanpath sp;
    sp.stimulus_id = "s";
    sp.fixations = {{0.2, 0.2, 200.0, 0.0}, {0.8, 0.6, 200.0, 220.0}};
    const fs::path spf = work() / "r.json";
    write_scanpath_file(spf.string(), sp);

    const fs::path png = work() / "r.png";
    const fs::path svg = work() / "r.svg";
    REQUIRE(run("render --scanpath \"" + spf.string() + "\" --out \"" + png.string() +
                "\" --width 120 --height 90").exit_code == 0);
    REQUIRE(run("render --scanpath \"" + spf.string() + "\" --out \"" + svg.string() +
                "\" --width 120 --height 90").exit_code == 0);
    const ImageU8 img = load_png_image(png.string());
    CHECK(img.width == 120);
    CHECK(img.height == 90);
    std::ifstream in(svg);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("<circle") != std::string::npos);
}

TEST_CASE("cli: synth-fixtures is byte-reproducible") {
    const fs::path a = work() / "fxr_a", b = work() / "fxr_b";
    REQUIRE(run("synth-fixtures --out-dir \"" + a.string() + "\" --seed 9").exit_code == 0);
    REQUIRE(run("synth-fixtures --out-dir \"" + b.string() + "\" --seed 9").exit_code == 0);
    for (const char* rel : {"maps_manifest.json", "eval_manifest.json", "gaze/gaze_log.csv",
                            "maps/s01_d0.5.png", "trials/p02_s03.json"}) {
        std::ifstream fa(a / rel, std::ios::binary), fb(b / rel, std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        REQUIRE(sa.str().size() > 0);
        CHECK(sa.str() == sb.str());
    }
}

TEST_CASE("cli: render output is byte-reproducible") {
    Scanpath sp;
    sp.stimulus_id = "s";
    sp.fixations = {{0.3, 0.3, 200.0, 0.0}, {0.6, 0.7, 200.0, 220.0}, {0.1, 0.9, 200.0, 440.0}};
    const fs::path spf = work() / "rep.json";
    write_scanpath_file(spf.string(), sp);

    const fs::path p1 = work() / "rep1.png", p2 = work() / "rep2.png";
    for (const auto& out : {p1, p2})
        REQUIRE(run("render --scanpath \"" + spf.string() + "\" --out \"" + out.string() +
                    "\" --width 160 --height 120").exit_code == 0);
    std::ifstream fa(p1, std::ios::binary), fb(p2, std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    REQUIRE(sa.str().size() > 0);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("cli: config file values apply under flag precedence") {
    const fs::path map = work() / "cfg_map.png";
    write_png_gray8(map.string(), 4, 4, std::vector<std::uint8_t>(16, 200));
    const fs::path cfg = work() / "gaze.cfg";
    {
        std::ofstream out(cfg);
        out << "[sample]\nn-fixations=3\nseed=11\n";
    }
    const fs::path out1 = work() / "cfg_a.json";
    REQUIRE(run("--config \"" + cfg.string() + "\" sample --mode prob --map \"" + map.string() +
                "\" --out \"" + out1.string() + "\"").exit_code == 0);
    CHECK(read_scanpath_file(out1.string()).size() == 3);

    // Flag overrides the config value.
    const fs::path out2 = work() / "cfg_b.json";
    REQUIRE(run("--config \"" + cfg.string() + "\" sample --mode prob --map \"" + map.string() +
                "\" --n-fixations 5 --out \"" + out2.string() + "\"").exit_code == 0);
    CHECK(read_scanpath_file(out2.string()).size() == 5);
}
