#include <gtest/gtest.h>

#include <sys/wait.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string &args)
{
    std::string cmd = std::string(WDR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch()
{
    auto dir = std::filesystem::temp_directory_path() / ("wdr_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, Density)
{
    Outcome r = run("density --n 2 --p 3,5,7");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,p,V,W,c_p_num,c_p_den\n2,3,1,3,8,9\n2,5,1,5,24,25\n2,7,1,7,48,49\n");
}

TEST(Cli, HpfAndFactor)
{
    EXPECT_EQ(run("hpf --p 3 --f 3").out, "8\n");
    EXPECT_EQ(run("hpf --p 2 --f 2").out, "1\n");
    Outcome r = run("factor-modp --p 3 --form '4;3,3,1,3,3'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"profile\":\"strongly-divisible\""), std::string::npos) << r.out;
}

TEST(Cli, UwdAndWitness)
{
    Outcome r = run("uwd --max-witness --form '3;1,1,0,4'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"m_f\":\"8\""), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"l_f\":\"6\""), std::string::npos) << r.out;
    EXPECT_EQ(run("weakdiv --m 8 --form '3;1,1,0,4'").out, "{\"form\":\"3;1,1,0,4\",\"l\":\"6\",\"m\":\"8\"}\n");
    EXPECT_NE(run("weakdiv --m 3 --form '3;1,1,0,4'").out.find("\"l\":null"), std::string::npos);
}

TEST(Cli, FormsFromStdin)
{
    Outcome r = run("ring < /dev/null");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    auto dir = scratch();
    std::ofstream(dir / "forms.txt") << "# two quadratics\n2;1,0,1\n\n2;1,1,1\n";
    r = run("ring < " + (dir / "forms.txt").string());
    EXPECT_NE(r.out.find("{\"disc\":\"-4\",\"form\":\"2;1,0,1\"}"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("{\"disc\":\"-3\",\"form\":\"2;1,1,1\"}"), std::string::npos) << r.out;
}

TEST(Cli, DedekindClassifyReduce)
{
    Outcome d = run("dedekind --p 2 --form '3;1,1,0,4'");
    EXPECT_EQ(d.out, "form,p,parts,maximal\n\"3;1,1,0,4\",2,(2,1,0);(1,1,1),0\n");
    Outcome c = run("classify --m 8 --form '3;1,1,0,4'");
    EXPECT_NE(c.out.find("\"3;1,1,0,4\",8,6,,,,,1"), std::string::npos) << c.out;
    Outcome red = run("reduce --form '3;1,0,-2,-1'");
    EXPECT_NE(red.out.find("reduced no"), std::string::npos) << red.out;
    Outcome cnt = run("count-orders --form '2;1,0,1' --X 3");
    EXPECT_EQ(cnt.out, "N,coeff,partial,zeta_coeff,zeta_partial\n1,1,1,1,1\n2,1,2,1,2\n3,1,3,1,3\n");
}

TEST(Cli, Errors)
{
    EXPECT_EQ(run("ring --form '3;1,2'").code, 1);
    EXPECT_EQ(run("factor-modp --p 4 --form '2;1,0,1'").code, 1);
    EXPECT_NE(run("frobnicate").code, 0);
    EXPECT_NE(run("").code, 0);
}

TEST(Cli, Sieve)
{
    auto dir = scratch();
    std::ofstream(dir / "box.ini") << "n = 3\ns = 6\nt = 1\nm_list = 1,2\nM = 12\nprecision = 128\n"
                                   << "budget = 100000\nout = " << (dir / "run" / "box").string() << "\n";
    Outcome r = run("sieve --config " + (dir / "box.ini").string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "m,candidates,presieved,uwd,reduced,deduped,weighted_num,weighted_scale,X");
    EXPECT_EQ(slurp(dir / "run" / "box.csv"), r.out);
    EXPECT_TRUE(std::filesystem::exists(dir / "run" / "box.jsonl"));
    EXPECT_NE(slurp(dir / "run" / "box.summary.json").find("\"budget_exhausted\": false"), std::string::npos);

    Outcome sharded = run("sieve --config " + (dir / "box.ini").string() + " --shards 3 --out " +
                      (dir / "run" / "sharded").string());
    EXPECT_EQ(sharded.out, r.out);
    EXPECT_EQ(slurp(dir / "run" / "sharded.jsonl"), slurp(dir / "run" / "box.jsonl"));

    std::ofstream(dir / "small.ini") << "n = 3\ns = 6\nm_list = 1\nbudget = 10\nout = "
                                     << (dir / "run" / "small").string() << "\n";
    Outcome cut = run("sieve --config " + (dir / "small.ini").string());
    EXPECT_EQ(cut.code, 2);
    EXPECT_NE(cut.out.find("1,10,"), std::string::npos) << cut.out;
    EXPECT_NE(slurp(dir / "run" / "small.summary.json").find("\"budget_exhausted\": true"), std::string::npos);

    std::ofstream(dir / "bad.ini") << "n = 3\nm_list = 4\n";
    EXPECT_EQ(run("sieve --config " + (dir / "bad.ini").string()).code, 1);
    std::filesystem::remove_all(dir);
}
