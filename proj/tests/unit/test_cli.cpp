#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"
#include "striptr/error.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string data(const std::string &file) { return std::string(STRIPTR_DATA_DIR) + "/" + file; }

Run run(const std::string &args, const std::string &env = "")
{
    std::string cmd = env + " " + STRIPTR_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE *pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

// Value field of each records line, in order.
std::vector<std::string> values(const std::string &records)
{
    std::vector<std::string> out;
    for (const auto &l : lines(records)) {
        auto j = nlohmann::json::parse(l);
        out.push_back(j.at("value").get<std::string>());
    }
    return out;
}

class TempFile {
public:
    explicit TempFile(const std::string &content)
        : path_(std::filesystem::temp_directory_path() /
                ("striptr_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++) + ".json"))
    {
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

} // namespace

TEST(CliValidate, AcceptsAndRejects)
{
    EXPECT_EQ(run("validate " + data("spp.json")).code, 0);
    EXPECT_EQ(run("validate " + data("c3.json")).code, 0);
    EXPECT_EQ(run("validate " + data("spp_forbidden_framing.json")).code, 2);
    EXPECT_EQ(run("validate " + data("duplicate_alpha.json")).code, 2);
    EXPECT_EQ(run("validate " + data("label_mismatch.json")).code, 2);
}

TEST(CliValidate, ReasonsOnStderr)
{
    std::string cmd = std::string(STRIPTR_CLI_PATH) + " validate " + data("spp_forbidden_framing.json") + " 2>&1";
    FILE *pipe = ::popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string text;
    std::array<char, 1024> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        text.append(buf.data(), n);
    }
    ::pclose(pipe);
    EXPECT_NE(text.find("framing"), std::string::npos) << text;
}

TEST(CliFreeEnergy, ConifoldClosed)
{
    auto r = run("free-energy " + data("conifold.json") + " --g-max 3 --route closed");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"2, closed, -5/576", "3, closed, 3119/725760"}));
}

TEST(CliFreeEnergy, ClosedAndResidueValuesAreIdentical)
{
    for (const char *cfg : {"spp.json", "six_punctured.json", "one_beta.json"}) {
        auto closed = run("--format records free-energy " + data(cfg) + " --g-max 5 --route closed");
        auto residue = run("--format records free-energy " + data(cfg) + " --g-max 5 --route residue");
        ASSERT_EQ(closed.code, 0);
        ASSERT_EQ(residue.code, 0);
        EXPECT_EQ(values(closed.out), values(residue.out)) << cfg;
        EXPECT_EQ(values(closed.out).size(), 4u);
    }
}

TEST(CliFreeEnergy, TrRouteAgrees)
{
    auto r = run("--format records free-energy " + data("conifold.json") + " --g-max 2 --route all");
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    auto verdict = nlohmann::json::parse(ls.back());
    EXPECT_EQ(verdict.at("route"), "verdict");
    EXPECT_NE(verdict.at("value").get<std::string>().find("tr agrees"), std::string::npos);
}

TEST(CliFreeEnergy, BudgetExhaustion)
{
    EXPECT_EQ(run("free-energy " + data("conifold.json") + " --g-max 4 --route tr").code, 4);
}

TEST(CliFreeEnergy, InvalidInputs)
{
    EXPECT_EQ(run("free-energy " + data("spp_forbidden_framing.json") + " --route closed").code, 2);
    EXPECT_EQ(run("free-energy " + data("conifold.json") + " --g-max 1").code, 2);
    EXPECT_EQ(run("free-energy " + data("conifold.json"), "STRIPTR_PRECISION=16").code, 2);
    EXPECT_EQ(run("free-energy " + data("conifold.json"), "STRIPTR_PRECISION=abc").code, 2);
    TempFile broken("{\"alphas\": [\"1/2\"");
    EXPECT_EQ(run("free-energy " + broken.path()).code, 2);
    TempFile floats("{\"alphas\": [0.5]}");
    EXPECT_EQ(run("validate " + floats.path()).code, 2);
}

TEST(CliBps, SppTable)
{
    auto r = run("bps-table " + data("spp.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"nD0, -3", "D2_Q-kD0, 1", "D2_Q*mu-kD0, -1", "D2_mu-kD0, 1",
                                                      "D2bar_Q-kD0, 1", "D2bar_Q*mu-kD0, -1", "D2bar_mu-kD0, 1"}));
    auto labelled = run("bps-table " + data("spp_labelled.json"));
    EXPECT_EQ(labelled.out, r.out);
}

TEST(CliBps, NeedsLabels)
{
    EXPECT_EQ(run("bps-table " + data("conifold_f1.json")).code, 2);
    EXPECT_EQ(run("z-series " + data("conifold_f1.json")).code, 2);
}

TEST(CliZSeries, ConifoldLogSeries)
{
    auto r = run("z-series " + data("conifold.json") + " --q-order 3 --degree 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1, 1, 1", "1, Q, -1", "2, 1, 5/2", "2, Q, -2", "2, Q^2, -1/2",
                                                      "3, 1, 10/3", "3, Q, -3"}));
}

TEST(CliZSeries, ConifoldDt)
{
    auto r = run("--format records z-series " + data("conifold.json") + " --q-order 3 --degree 2 --dt");
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_FALSE(ls.empty());
    auto first = nlohmann::json::parse(ls.front());
    EXPECT_EQ(first.at("qpow"), 0);
    EXPECT_EQ(first.at("monomial"), "1");
    EXPECT_EQ(first.at("coeff"), "1");
    auto last = nlohmann::json::parse(ls.back());
    EXPECT_EQ(last.at("qpow"), 3);
    EXPECT_EQ(last.at("monomial"), "Q^2");
    EXPECT_EQ(last.at("coeff"), "2");
}

TEST(CliVerify, Suites)
{
    EXPECT_EQ(run("verify " + data("spp.json") + " --suite lemmas").code, 0);
    EXPECT_EQ(run("verify " + data("six_punctured.json") + " --suite routes --g-max 4").code, 0);
    EXPECT_EQ(run("verify " + data("spp.json") + " --suite product --g-max 3 --degree 3").code, 0);
    EXPECT_EQ(run("verify " + data("conifold.json") + " --suite tr --g-max 2").code, 0);
    EXPECT_NE(run("verify " + data("spp.json")).code, 0);
}

TEST(CliDeterminism, ByteIdenticalReruns)
{
    const std::string args = "--format records --seed 5 verify " + data("conifold.json") + " --suite tr --g-max 2";
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto c = run("--format records free-energy " + data("six_punctured.json") + " --g-max 4 --route residue");
    auto d = run("--format records free-energy " + data("six_punctured.json") + " --g-max 4 --route residue");
    EXPECT_EQ(c.out, d.out);
}

TEST(CliConfig, ParsesMonomialParameters)
{
    auto cfg = striptr::cli::parse_config(nlohmann::json::parse(
        R"({"alphas": ["Q^-1", "mu"], "kahler_values": {"Q": "1/2", "mu": "1/3"}, "g_max": 4})"));
    EXPECT_EQ(cfg.geometry.alphas(), (std::vector<striptr::Rational>{striptr::Rational(2), striptr::Rational(1, 3)}));
    EXPECT_EQ(cfg.g_max, 4);
    ASSERT_TRUE(cfg.geometry.kahler().has_value());
    EXPECT_EQ(cfg.geometry.kahler()->alpha_labels.at(0).to_string(), "Q^-1");
    EXPECT_THROW(striptr::cli::parse_config(nlohmann::json::parse(R"({"alphas": ["Q", "1/2"], "kahler_values": {"Q": "1/3"}})")),
                 striptr::ParseError);
    EXPECT_THROW(striptr::cli::parse_config(nlohmann::json::parse(R"({"alphas": ["1/0"]})")), striptr::ParseError);
}
