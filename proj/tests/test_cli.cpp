// Drives the installed command-line binary and checks exit codes and files.

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

int cli(const std::string& args)
{
    const std::string cmd = std::string(WHICHPATH_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / ("whichpath_cli_" + std::to_string(::getpid())))
    {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    fs::path write(const std::string& name, const std::string& text) const
    {
        std::ofstream(dir / name) << text;
        return dir / name;
    }
};

const char* kConfig = R"({
  "geometry": {"slit_separation": 20, "packet_width": 1, "propagation_time": 800},
  "recorder": {"n_qubits": 3, "kick_angle": 0.6}
})";

} // namespace

TEST_CASE("run writes deterministic outputs")
{
    Scratch s;
    const auto cfg = s.write("run.json", kConfig);
    REQUIRE(cli("run " + cfg.string() + " --output-dir " + (s.dir / "a").string()) == 0);
    REQUIRE(cli("--output-dir " + (s.dir / "b").string() + " run " + cfg.string()) == 0);
    for (const char* f : {"pattern.csv", "summary.json"}) {
        CAPTURE(f);
        CHECK(fs::exists(s.dir / "a" / f));
        CHECK(slurp(s.dir / "a" / f) == slurp(s.dir / "b" / f));
    }
}

TEST_CASE("run rejects malformed configs before writing anything")
{
    Scratch s;
    std::string bad = kConfig;
    bad.replace(bad.find("\"packet_width\": 1"), 17, "\"packet_width\": -1");
    const auto cfg = s.write("bad.json", bad);
    CHECK(cli("run " + cfg.string() + " --output-dir " + (s.dir / "out").string()) == 1);
    CHECK(!fs::exists(s.dir / "out"));
    CHECK(cli("run " + (s.dir / "missing.json").string()) == 1);
    CHECK(cli("frobnicate") == 1);
}

TEST_CASE("sweep")
{
    Scratch s;
    const std::string base = kConfig;
    const auto good = s.write("sweep.json", R"({"base": )" + base +
                                                R"(, "sweep": {"parameter": "kick_angle", "values": [0, 1, 3.14159], "parallelism": 2}})");
    CHECK(cli("sweep " + good.string() + " --output-dir " + s.dir.string()) == 0);
    const std::string csv = slurp(s.dir / "sweep.csv");
    CHECK(csv.rfind("param_value,gamma_re,gamma_im,visibility,distinguishability,purity,status\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    const auto empty = s.write("empty.json", R"({"base": )" + base +
                                                 R"(, "sweep": {"parameter": "kick_angle", "values": []}})");
    CHECK(cli("sweep " + empty.string() + " --output-dir " + s.dir.string()) == 1);
}

TEST_CASE("validate")
{
    CHECK(cli("validate --list") == 0);
    CHECK(cli("validate") == 0);
    CHECK(cli("validate --tolerance-scale 1e-30") == 3);
}
