#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = ordspace::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(Cli, SignOnReferenceDescriptor)
{
    const auto ref = call({"reference", "-n", "2", "--format", "json"});
    ASSERT_EQ(ref.code, 0) << ref.err;
    const auto path = temp_file("ordspace_ref2.json", ref.out);
    const auto r = call({"sign", "-d", path, "-e", "Z^-3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "-1\n");
}

TEST(Cli, Multiply)
{
    const auto r = call({"mul", "-n", "2", "-e", "Z", "-e", "h[1,0,0]"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "h[1,-1,0] * Z\n");
}

TEST(Cli, CbModel)
{
    const auto r = call({"cb-model", "-n", "3", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"spaceRank\": 3"), std::string::npos) << r.out;
}

TEST(Cli, VerifyPasses)
{
    const auto r = call({"verify", "-n", "2", "-B", "2", "--samples", "500", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call({"mul", "-n", "2", "-e", "h[1,0", "-e", "Z"}).code, 2);
    EXPECT_EQ(call({"mul", "-n", "2", "-e", "h[3,0,0]", "-e", "Z"}).code, 1);
    EXPECT_EQ(call({"cb-model", "-n", "1"}).code, 2);
    EXPECT_EQ(call({"inv", "-n", "2", "-e", "h[1,0,3/2]"}).code, 1);
    EXPECT_EQ(call({"no-such-command"}).code, 2);
    EXPECT_EQ(call({"sign", "-n", "2"}).code, 2);
    const auto bad = temp_file("ordspace_bad.json", R"({"n":2,"gamma":"1111","blocks":[[1],[1,2]],"directions":"11"})");
    EXPECT_EQ(call({"validate", "-d", bad}).code, 1);
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args{"witness", "-d", temp_file("ordspace_ref2b.json", call({"reference", "-n", "2", "--format", "json"}).out),
                                        "--count", "3", "--seed", "5"};
    const auto a = call(args);
    const auto b = call(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}
