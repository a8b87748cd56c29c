#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(ICSQ_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::ostringstream os;
    while (fgets(buf.data(), buf.size(), pipe))
        os << buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = os.str();
    return r;
}

std::string data(const std::string& name)
{
    return std::string(ICSQ_DATA_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name)
{
    return std::string("cli_tmp_") + name;
}

} // namespace

TEST_CASE("validate")
{
    CHECK(run("validate " + data("rp2.json")).exit_code == 0);

    SUBCASE("truncated JSON exits 2")
    {
        const std::string p = tmp_path("trunc.json");
        std::ofstream(p) << "{ \"formal_dimension\": 1, ";
        RunResult r = run("validate " + p);
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("parse error") != std::string::npos);
        std::remove(p.c_str());
    }
    SUBCASE("identity violation exits 1 and names the simplex")
    {
        const std::string p = tmp_path("badident.json");
        std::ofstream(p) << R"({"formal_dimension":0,"simplices":{
            "0":{"blocks":[0],"faces":[]},
            "1":{"blocks":[0],"faces":[]},
            "2":{"blocks":[0],"faces":[]},
            "01":{"blocks":[1],"faces":["1","0"]},
            "02":{"blocks":[1],"faces":["2","0"]},
            "12":{"blocks":[1],"faces":["2","1"]},
            "t":{"blocks":[2],"faces":["01","02","12"]}}})";
        RunResult r = run("validate " + p);
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("t:") != std::string::npos);
        std::remove(p.c_str());
    }
}

TEST_CASE("build")
{
    SUBCASE("cone of the circle has 13 simplices and validates")
    {
        const std::string p = tmp_path("cone_circle.json");
        RunResult r = run("build cone " + data("circle.json") + " --n 2 --out " + p);
        REQUIRE(r.exit_code == 0);
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(run("validate " + p).exit_code == 0);
        // count simplices: 6 base + 6 coned + apex
        std::size_t count = 0;
        std::string line;
        std::ifstream in2(p);
        while (std::getline(in2, line))
            if (line.find("\"blocks\"") != std::string::npos)
                ++count;
        CHECK(count == 13);
        std::remove(p.c_str());
    }
    SUBCASE("trivial build of rp2 has 31 simplices")
    {
        const std::string p = tmp_path("rp2_triv.json");
        REQUIRE(run("build trivial " + data("rp2.json") + " --n 2 --out " + p).exit_code == 0);
        std::size_t count = 0;
        std::string line;
        std::ifstream in(p);
        while (std::getline(in, line))
            if (line.find("\"blocks\"") != std::string::npos)
                ++count;
        CHECK(count == 31);
        std::remove(p.c_str());
    }
    SUBCASE("suspension of a point has 5 simplices")
    {
        const std::string p = tmp_path("susp_point.json");
        REQUIRE(run("build suspension " + data("point.json") + " --n 1 --out " + p).exit_code ==
                0);
        std::size_t count = 0;
        std::string line;
        std::ifstream in(p);
        while (std::getline(in, line))
            if (line.find("\"blocks\"") != std::string::npos)
                ++count;
        CHECK(count == 5);
        std::remove(p.c_str());
    }
}

TEST_CASE("cohomology tables")
{
    SUBCASE("cone formula rows for cone(rp2)")
    {
        const std::string p = tmp_path("cone_rp2.json");
        REQUIRE(run("build cone " + data("rp2.json") + " --n 3 --out " + p).exit_code == 0);
        RunResult r = run("cohomology " + p +
                          " --perversity 0,0,1 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("perversity,degree,dim") == 0);
        CHECK(r.out.find("\"0,0,1\",0,1") != std::string::npos);
        CHECK(r.out.find("\"0,0,1\",1,1") != std::string::npos);
        CHECK(r.out.find("\"0,0,1\",2,0") != std::string::npos);
        CHECK(r.out.find("\"0,0,1\",3,0") != std::string::npos);
        std::remove(p.c_str());
    }
    SUBCASE("classical rows for the trivially filtered torus")
    {
        RunResult r = run("cohomology " + data("torus.json") + " --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find(",0,1") != std::string::npos);
        CHECK(r.out.find(",1,2") != std::string::npos);
        CHECK(r.out.find(",2,1") != std::string::npos);
    }
}

TEST_CASE("squares tables")
{
    // rp2.json is a plain (formal dimension 0) complex: perversities are
    // empty and the squares are the classical ones
    RunResult r = run("squares " + data("rp2.json") + " --i 0,1,2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("class,i,target_perversity,coords,witness_perverse_degree,image_in_2p") ==
          0);
    CHECK(r.out.find("H^1[0],0,(),1,(),1") != std::string::npos);   // Sq^0 = id
    CHECK(r.out.find("H^1[0],1,(),1,(),1") != std::string::npos);   // Sq^1 = [1]
    CHECK(r.out.find("H^1[0],2,(),,(),") != std::string::npos);     // above the degree: zero
}

TEST_CASE("cohomology of a complex with no regular simplices is zero")
{
    const std::string p = tmp_path("only_apex.json");
    std::ofstream(p) << R"({"formal_dimension":1,"simplices":{
        "apex":{"blocks":[0,-1],"faces":[]}}})";
    RunResult r = run("cohomology " + p + " --perversity 0 --degrees 0..1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("0,0,0") != std::string::npos);
    CHECK(r.out.find("0,1,0") != std::string::npos);
    std::remove(p.c_str());
}

TEST_CASE("verify is deterministic and passes on the corpus files")
{
    RunResult a = run("verify " + data("circle.json") + " --seed 3");
    RunResult b = run("verify " + data("circle.json") + " --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("PASS leibniz") != std::string::npos);
}
