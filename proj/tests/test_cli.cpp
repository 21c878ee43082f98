#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string command = std::string(LEFSCHETZ_CLI) + " " + args + " 2>&1";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string data(const char* name)
{
    return std::string(LEFSCHETZ_TEST_DATA) + "/" + name;
}

nlohmann::json json_of(const Run& r)
{
    INFO(r.out);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("wlp on the fixtures")
{
    const auto tog = run("wlp --json " + data("togliatti.json"));
    CHECK(tog.status == 0);
    const auto j = json_of(tog);
    CHECK(j.at("has_wlp") == false);
    CHECK(j.at("failure_degrees") == nlohmann::json::array({2}));
    CHECK(j.at("h_vector") == nlohmann::json::array({1, 3, 6, 6, 3}));
    CHECK(j.at("reports").size() == 4);

    const auto control = run("wlp " + data("control.json"));
    CHECK(control.status == 0);
    CHECK(control.out.find("h-vector: (1, 3, 6, 6, 4, 1)") != std::string::npos);
    CHECK(control.out.find("WLP: yes") != std::string::npos);
}

TEST_CASE("inline generators")
{
    const auto r = run("wlp --json --gen x^3 --gen y^3 --gen z^3 --gen xyz");
    CHECK(r.status == 0);
    CHECK(json_of(r).at("failure_degrees") == nlohmann::json::array({2}));
    const auto v = run("wlp --json --gen a^2 --gen b^2 --gen ab --vars a,b");
    CHECK(v.status == 0);
}

TEST_CASE("togliatti verdicts agree")
{
    const auto r = run("togliatti --json " + data("togliatti.json"));
    CHECK(r.status == 0);
    const auto j = json_of(r);
    CHECK(j.at("wlp_fails_in_degree_dminus1") == true);
    CHECK(j.at("hyperplane_dependent") == true);
    CHECK(j.at("laplace_equations") == 1);
    CHECK(j.at("togliatti") == true);
    CHECK(j.at("agree") == true);

    const auto c = json_of(run("togliatti --json " + data("control.json")));
    CHECK(c.at("togliatti") == false);
    CHECK(c.at("agree") == true);
}

TEST_CASE("not artinian")
{
    const auto r = run("wlp " + data("not_artinian.json"));
    CHECK(r.status == 1);
    CHECK(r.out.find("not artinian") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2")
{
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("wlp").status == 2);
    CHECK(run("wlp " + data("missing.json")).status == 2);
    const auto bad = run("wlp " + data("bad_degree.json"));
    CHECK(bad.status == 2);
    CHECK(bad.out.find("generator 2") != std::string::npos);
    CHECK(run("wlp --gen 'x^3 + q'").status == 2);
    CHECK(run("osculate --order 0 " + data("togliatti.json")).status == 2);
    CHECK(run("example --name nothing").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("osculate, apolar, polytope and splitting")
{
    const auto o = json_of(run("osculate --json --order 2 " + data("togliatti.json")));
    CHECK(o.at("actual_dim") == 4);
    CHECK(o.at("delta") == 1);
    const auto q = json_of(run("osculate --json --order 3 " + data("quartic.json")));
    CHECK(q.at("actual_dim") == 8);

    const auto a = json_of(run("apolar --json " + data("togliatti.json")));
    CHECK(a.at("dimension") == 6);

    const auto p = json_of(run("polytope --json " + data("togliatti.json")));
    CHECK(p.at("normalized_volume") == 6);
    CHECK(p.at("smooth") == true);
    CHECK(p.at("vertices").size() == 6);

    const auto s = json_of(run("splitting --json " + data("togliatti.json")));
    CHECK(s.at("values") == nlohmann::json::array({-2, -1, 0}));
    CHECK(s.at("wlp_via_splitting") == false);

    const auto dense = run("wlp --json " + data("dense.json"));
    CHECK(dense.status == 0);
    CHECK(run("polytope " + data("dense.json")).status == 2);
}

TEST_CASE("classify stream")
{
    const auto r = run("classify --n 2 --json");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<nlohmann::json> lines;
    while (std::getline(in, line)) lines.push_back(nlohmann::json::parse(line));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].at("smooth") == true);
    CHECK(lines[0].at("label") == "togliatti");
    CHECK(lines[1].at("summary").at("records") == 1);
}

TEST_CASE("example documents feed back into the tool")
{
    const auto path = std::filesystem::temp_directory_path() / "lefschetz-cli-example.json";
    const auto e = run("example --name case-2 --out " + path.string());
    CHECK(e.status == 0);
    const auto r = json_of(run("togliatti --json " + path.string()));
    CHECK(r.at("togliatti") == true);
    const auto p = json_of(run("polytope --json " + path.string()));
    CHECK(p.at("normalized_volume") == 18);
    std::filesystem::remove(path);

    const auto part = run("example --name partition --n 4 --partition '0,1|2|3,4'");
    CHECK(part.status == 0);
    CHECK(nlohmann::json::parse(part.out).at("variables").size() == 5);
}

TEST_CASE("same seed gives identical output")
{
    const std::string args = "splitting --json --seed 12 " + data("dense.json");
    CHECK(run(args).out == run(args).out);
    const std::string wlp = "wlp --json --generic-l --seed 3 " + data("control.json");
    CHECK(run(wlp).out == run(wlp).out);
    CHECK(setenv("LEFSCHETZ_SEED", "12", 1) == 0);
    CHECK(run("splitting --json " + data("dense.json")).out == run(args).out);
    unsetenv("LEFSCHETZ_SEED");
}

TEST_CASE("verify-r4 on a short range")
{
    const auto r = run("verify-r4 --dmin 8 --dmax 9 --monomial-samples 5 --random-samples 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("fails in degree(s) (10)") != std::string::npos);
}
