#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int status;
        std::string out;
    };

    auto scratch() -> fs::path
    {
        static auto dir = [] {
            auto d = fs::temp_directory_path() / ("epgdom-cli-" + std::to_string(::getpid()));
            fs::create_directories(d);
            return d;
        }();
        return dir;
    }

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto run(const std::string & args) -> Run
    {
        auto out = scratch() / "stdout.txt";
        auto cmd = std::string(EPGDOM_CLI_PATH) + " " + args + " >" + out.string() + " 2>&1";
        int raw = std::system(cmd.c_str());
        return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
    }

    auto write(const std::string & name, const std::string & text) -> std::string
    {
        auto p = scratch() / name;
        std::ofstream(p) << text;
        return p.string();
    }
}

TEST_CASE("info")
{
    auto r = run("info Q8");
    CHECK(r.status == 0);
    CHECK(r.out.find("8") != std::string::npos);
    CHECK(run("info Q7").status == 2);
    CHECK(run("info Z100000").status == 2);
}

TEST_CASE("graph export")
{
    auto r = run("graph Q8 --mode proper");
    CHECK(r.status == 0);
    CHECK(r.out.find("1 -- 3;") != std::string::npos);
    auto json = (scratch() / "q8.json").string();
    CHECK(run("graph Q8 --mode proper --json " + json).status == 0);
    auto j = nlohmann::json::parse(slurp(json));
    CHECK(j["edges"].size() == 3);
}

TEST_CASE("dominate")
{
    auto r = run("dominate Q8 --kind total");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 6);
    auto none = nlohmann::json::parse(run("dominate E2^2 --kind total").out);
    CHECK(none["status"] == "NoneExists");
    CHECK(run("dominate Q32 --kind dom --budget 1").status == 3);
    CHECK(run("dominate Q8 --kind strong").status != 0);
}

TEST_CASE("verify exit codes")
{
    auto out = (scratch() / "report.json").string();
    auto good = write("good.txt", "Q8 #tags: quaternion\nE3^2xZ2 #tags: known-discrepancy\nE2^2 #tags: expect-no-total-dom\n");
    CHECK(run("verify --catalog " + good + " --out " + out).status == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["rows"][1]["verdict"] == "MISMATCH");

    auto untagged = write("untagged.txt", "Q8\nE3^2xZ2\n");
    CHECK(run("verify --catalog " + untagged + " --out " + out).status == 1);

    auto missing = write("missing.txt", "file:/nonexistent/table.txt\n");
    CHECK(run("verify --catalog " + missing + " --out " + out).status == 2);
    CHECK(run("verify --catalog /nonexistent/catalog.txt --out " + out).status == 2);

    CHECK(run("verify --spec Q32 --budget 1 --out " + out).status == 3);

    auto empty = write("empty.txt", "");
    CHECK(run("verify --catalog " + empty + " --out " + out).status == 0);

    auto csv = (scratch() / "report.csv").string();
    CHECK(run("verify --spec Q8 --spec Z6 --format csv --out " + csv).status == 0);
    CHECK(slurp(csv).starts_with("spec,"));
}

TEST_CASE("default catalog through the binary")
{
    auto out = (scratch() / "default.json").string();
    CHECK(run("verify --out " + out + " --workers 2").status == 0);
}

TEST_CASE("selftest")
{
    CHECK(run("selftest --seed 1 --trials 50 --max-n 12").status == 0);
    CHECK(run("selftest --max-n 40").status != 0);
}
