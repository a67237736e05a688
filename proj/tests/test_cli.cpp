#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

std::string env(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v, name << " must point at the build output");
    return v;
}

std::string data(const std::string& file) { return env("PTG_DATA") + "/" + file; }

std::string temp_path(const std::string& name) { return std::string(P_tmpdir) + "/ptg_cli_test_" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run run(const std::string& args) {
    std::string err_path = temp_path("stderr.txt");
    std::string cmd = "\"" + env("PTG_BIN") + "\" " + args + " 2>\"" + err_path + "\"";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err_path);
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("recognize answers yes and no") {
    Run yes = run("recognize --graph " + data("p5.el") + " --tree " + data("k2.el") + " --json");
    CHECK(yes.status == 0);
    auto js = nlohmann::json::parse(yes.out);
    CHECK(js.contains("models"));

    Run no = run("recognize --graph " + data("claw.el") + " --tree " + data("k2.el") + " --json");
    CHECK(no.status == 1);
    CHECK(nlohmann::json::parse(no.out)["answer"] == "no");
    CHECK(no.err.find("no:") != std::string::npos);

    Run star = run("recognize --graph " + data("claw.el") + " --tree " + data("k13.el") + " --dot");
    CHECK(star.status == 0);
    CHECK(star.out.find("graph") != std::string::npos);
}

TEST_CASE("input errors exit with status 2 and a position") {
    Run bad = run("recognize --graph " + data("bad.el") + " --tree " + data("k2.el"));
    CHECK(bad.status == 2);
    CHECK(bad.err.find("line 3, column 3") != std::string::npos);

    Run missing = run("recognize --graph " + data("nope.el") + " --tree " + data("k2.el"));
    CHECK(missing.status == 2);

    Run usage = run("recognize --graph");
    CHECK(usage.status == 2);

    Run cyclic = run("recognize --graph " + data("p5.el") + " --tree " + data("c4.el"));
    CHECK(cyclic.status == 2);
}

TEST_CASE("verify checks a written representation") {
    std::string rep = temp_path("rep.json");
    Run yes = run("recognize --graph " + data("claw.el") + " --tree " + data("k13.el") + " --json");
    REQUIRE(yes.status == 0);
    std::ofstream(rep) << yes.out;
    Run ok = run("verify --graph " + data("claw.el") + " --rep " + rep + " --mode proper --tree " + data("k13.el") + " --json");
    CHECK(ok.status == 0);
    Run wrong = run("verify --graph " + data("claw.el") + " --rep " + rep + " --mode proper --tree " + data("k2.el") + " --json");
    CHECK(wrong.status == 1);
    Run other = run("verify --graph " + data("p5.el") + " --rep " + rep + " --mode proper");
    CHECK(other.status != 0);
    std::remove(rep.c_str());
}

TEST_CASE("chains and leafage") {
    Run ch = run("chains --graph " + data("p5.el"));
    CHECK(ch.status == 0);
    auto cj = nlohmann::json::parse(ch.out);
    CHECK(cj["chains"].size() == 1);

    Run lf = run("leafage --graph " + data("claw.el"));
    CHECK(lf.status == 0);
    CHECK(nlohmann::json::parse(lf.out)["leaves"] == 3);
}

TEST_CASE("gadget commands") {
    Run cert = run("gadget certify --poset " + data("s2.poset"));
    CHECK(cert.status == 0);
    std::string path = temp_path("cert.json");
    CHECK(nlohmann::json::parse(cert.out).contains("orders"));
    std::ofstream(path) << cert.out;

    Run checked = run("gadget certify --poset " + data("s2.poset") + " --certificate " + path);
    CHECK(checked.status == 0);
    CHECK(nlohmann::json::parse(checked.out)["valid"] == true);
    Run mismatched = run("gadget certify --poset " + data("four.poset") + " --certificate " + path);
    CHECK(mismatched.status != 0);

    std::string rep = temp_path("gadget_rep.json");
    Run built = run("gadget build --poset " + data("s2.poset") + " --certificate " + path);
    CHECK(built.status == 0);
    std::ofstream(rep) << built.out;
    Run extracted = run("gadget extract --poset " + data("s2.poset") + " --rep " + rep);
    CHECK(extracted.status == 0);

    std::remove(path.c_str());
    std::remove(rep.c_str());
}

TEST_CASE("generators are reproducible from the command line") {
    Run a = run("gen --kind chordal --n 8 --density 0.4 --seed 5");
    Run b = run("gen --kind chordal --n 8 --density 0.4 --seed 5");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    Run p = run("gen --kind planted --n 6 --seed 3 --tree " + data("k13.el"));
    CHECK(p.status == 0);
}
