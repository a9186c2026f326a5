#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "vspace/cli.hpp"
#include "vspace/fixtures.hpp"
#include "vspace/io.hpp"

using namespace vspace;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "vspace");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("vspace_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    std::string fixture(FixtureId id) const {
        return write(std::string(to_string(id)) + ".json", save_operator(canned_example(id)));
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("check") {
    Scratch s;
    const auto ex22 = s.fixture(FixtureId::Ex2_2);
    const auto r = run({"check", ex22, "--axioms", "c1,c22"});
    CHECK(r.code == kExitViolation);
    CHECK(r.out.find("F={1} ⊆ G={1,2} ⊆ τ(F)") != std::string::npos);

    const auto id3 = s.write("id3.json", save_operator(OperatorTable::identity(GroundSet::numbered(3))));
    CHECK(run({"check", id3}).code == kExitPass);
    CHECK(run({"check", s.path("missing.json")}).code == kExitUsage);
    CHECK(run({"check", s.write("junk.json", "{")}).code == kExitUsage);
    CHECK(run({"check", id3, "--axioms", "c9"}).code == kExitUsage);
    CHECK(run({"check", s.fixture(FixtureId::Ex1)}).code == kExitPass);
    CHECK(run({"check", s.fixture(FixtureId::Ex1), "--axioms", "c2"}).code == kExitViolation);
}

TEST_CASE("structured output is stable and quiet is silent") {
    Scratch s;
    const auto ex22 = s.fixture(FixtureId::Ex2_2);
    const auto a = run({"--format", "structured", "check", ex22});
    const auto b = run({"--format", "structured", "check", ex22});
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["axioms"]["C22"]["witness"]["type"] == "C22");

    const auto q = run({"--quiet", "check", ex22});
    CHECK(q.code == kExitViolation);
    CHECK(q.out.empty());
    CHECK(run({"--format", "xml", "check", ex22}).code == kExitUsage);
}

TEST_CASE("bases and extreme") {
    Scratch s;
    const auto ex1 = s.fixture(FixtureId::Ex1);
    const auto b = run({"bases", ex1, "--set", "1,3"});
    CHECK(b.code == kExitPass);
    CHECK(b.out.find("bases: {1}, {3}") != std::string::npos);
    CHECK(run({"bases", ex1, "--set", "1,7"}).code == kExitUsage);

    const auto exms = s.fixture(FixtureId::Exms);
    CHECK(run({"extreme", exms, "--set", "1,2,3", "--def", "EX"}).out == "EX({1,2,3}) = {1,3}\n");
    CHECK(run({"extreme", exms, "--set", "1,2,3", "--def", "ex"}).out == "ex({1,2,3}) = {1}\n");
}

TEST_CASE("partition and from-partition") {
    Scratch s;
    const auto p51 = run({"partition", s.fixture(FixtureId::Ex5_1)});
    CHECK(p51.code == kExitViolation);
    CHECK(p51.out.find("class τ = {1,2,3}: {1}, {1,2}, {1,3}  NOT an interval") != std::string::npos);
    CHECK(run({"partition", s.fixture(FixtureId::Exms)}).code == kExitPass);

    std::string intervals;
    for (auto x : canonical_subsets(3)) {
        const auto labels = GroundSet::numbered(3).labels_of(x);
        nlohmann::json set = labels;
        intervals += (intervals.empty() ? "" : ",") + std::string(R"({"lower":)") + set.dump() +
                     R"(,"upper":)" + set.dump() + "}";
    }
    const auto discrete =
        s.write("discrete3.json", R"({"ground":["1","2","3"],"intervals":[)" + intervals + "]}");
    const auto out = s.path("id3.json");
    CHECK(run({"from-partition", discrete, "-o", out}).code == kExitPass);
    CHECK(load_operator_file(out) == OperatorTable::identity(GroundSet::numbered(3)));

    const auto overlap = s.write(
        "overlap.json",
        R"({"ground":["1","2"],"intervals":[{"lower":[],"upper":["1","2"]},{"lower":["2"],"upper":["2"]}]})");
    const auto r = run({"from-partition", overlap});
    CHECK(r.code == kExitViolation);
    CHECK(r.err.find("overlap") != std::string::npos);
    const auto gap = s.write("gap.json", R"({"ground":["1"],"intervals":[{"lower":[],"upper":[]}]})");
    CHECK(run({"from-partition", gap}).err.find("gap") != std::string::npos);
}

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "-n", "3", "--theorem", "uniquegen-iff-antiexchange"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("0 violations / 246 violator spaces") != std::string::npos);
    CHECK(run({"enumerate", "-n", "3", "--theorem", "c1-convexity-implies-c22"}).code == kExitPass);
    CHECK(run({"enumerate", "-n", "3", "--theorem", "krein-milman-EX"}).code == kExitViolation);
    CHECK(run({"enumerate", "-n", "3", "--theorem", "nope"}).code == kExitUsage);
    CHECK(run({"enumerate", "-n", "4", "--theorem", "u1"}).code == kExitUsage);
    CHECK(run({"enumerate", "-n", "4", "--theorem", "u1", "--samples", "50"}).code == kExitPass);
    CHECK(run({"enumerate", "-n", "2", "--census"}).out.find("/ 16 C1 tables") != std::string::npos);
    CHECK(run({"enumerate", "--list"}).out.find("c2c3-implies-c22") != std::string::npos);
}

TEST_CASE("miniball and examples") {
    Scratch s;
    const auto pts = s.write("square.json", R"({"dim":2,"points":[{"label":"a","coords":["0","0"]},
        {"label":"b","coords":["0","1"]},{"label":"c","coords":["1","0"]},{"label":"d","coords":["1","1"]}]})");
    const auto sq = s.path("sq.json");
    CHECK(run({"miniball", pts, "--materialize", "-o", sq}).code == kExitPass);
    CHECK(run({"check", sq}).code == kExitPass);
    CHECK(run({"miniball", pts}).out == "center (1/2, 1/2), radius^2 1/2\n");
    CHECK(run({"miniball", s.write("bad.json", R"({"dim":3,"points":[]})")}).code == kExitUsage);

    const auto ex = run({"examples", "--id", "exms"});
    CHECK(ex.code == kExitPass);
    const auto table = load_operator_text(ex.out);
    CHECK(table == canned_example(FixtureId::Exms));
    CHECK(table.images().size() == 16);
    CHECK(run({"examples", "--id", "ex9"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
}
