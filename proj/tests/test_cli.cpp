#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Scratch {
    fs::path dir = fs::temp_directory_path() / ("ramsey_cli_" + std::to_string(::getpid()));
    Scratch() { fs::create_directories(dir); }
    ~Scratch() { fs::remove_all(dir); }
    fs::path file(const std::string& name, const std::string& body) const
    {
        const auto p = dir / name;
        std::ofstream(p) << body;
        return p;
    }
};

int run(const std::string& args, const fs::path& out = "/dev/null")
{
    const std::string cmd = std::string(RAMSEY_CLI) + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string complete_edge_list(int n)
{
    std::string s = std::to_string(n) + "\n";
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("exit codes")
{
    Scratch s;
    const auto k6 = s.file("k6.txt", complete_edge_list(6));
    const auto k8 = s.file("k8.txt", complete_edge_list(8));
    const auto bad = s.file("bad.txt", "x y\n");

    CHECK(run("--help") == 0);
    CHECK(run("decide --graph " + k6.string() + " --target book --k 2 --n 1") == 0);
    CHECK(run("frob") == 1);
    CHECK(run("decide --graph " + k6.string() + " --target book --k 0 --n 1") == 1);
    CHECK(run("decide --graph " + bad.string() + " --target book --k 2 --n 1") == 2);
    CHECK(run("decide --graph " + k8.string() + " --target book --k 2 --n 1 --decider exact") == 3);
    CHECK(run("decide --graph " + (s.dir / "missing.txt").string() + " --target book --k 2 --n 1") == 4);
    CHECK(run("sample --N 10 --p 0.5 --seed 1 --out " + (s.dir / "no" / "g.txt").string()) == 4);
}

TEST_CASE("decide reports json")
{
    Scratch s;
    const auto k6 = s.file("k6.txt", complete_edge_list(6));
    const auto out = s.dir / "out.json";
    REQUIRE(run("decide --graph " + k6.string() + " --target book --k 2 --n 1 --decider exact", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["outcome"] == "arrows");
    CHECK(j["method"] == "exhaustive");
}

TEST_CASE("sample round-trips through decide")
{
    Scratch s;
    const auto g = s.dir / "g.txt";
    REQUIRE(run("sample --N 12 --p 0.5 --seed 3 --out " + g.string()) == 0);
    const auto text = slurp(g);
    CHECK(text.rfind("12\n", 0) == 0);
    CHECK(run("decide --graph " + g.string() + " --target book --k 1 --n 6 --decider star") == 0);
}

TEST_CASE("sweep writes csv and manifest")
{
    Scratch s;
    const auto csv = s.dir / "run.csv";
    REQUIRE(run("sweep --target book --k 1 --n 5 --samples 10 --seed 4 --decider star --p 0.3,0.7 --out " + csv.string()) == 0);
    CHECK(slurp(csv).rfind("p,samples,arrows,not_arrows,unknown,p_hat,ci_lo,ci_hi,band_lo,band_hi\n", 0) == 0);
    const auto manifest = nlohmann::json::parse(slurp(s.dir / "run.manifest.json"));
    CHECK(manifest["master_seed"] == "4");
}
