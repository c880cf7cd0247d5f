#include "support/golden.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

namespace lieb {
namespace {

const std::string kGolden = LIEB_GOLDEN_DIR;
const std::string kSamples = LIEB_SAMPLES_DIR;

bool update_requested() {
    const char* v = std::getenv("LIEB_UPDATE_GOLDEN");
    return v && std::string(v) == "1";
}

class GoldenTranscript : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenTranscript, MatchesEngineOutput) {
    const std::string path = kGolden + "/" + GetParam() + ".txt";
    golden::Transcript t = golden::read(path);
    ASSERT_FALSE(t.args.empty()) << path;
    std::vector<std::string> args = t.args;
    for (auto& a : args)
        if (a.rfind("samples/", 0) == 0) a = kSamples + a.substr(7);
    const golden::Run r = golden::run(args);
    if (update_requested()) {
        t.exit_code = r.exit_code;
        t.output = r.out;
        golden::write(path, t);
        GTEST_SKIP() << "regenerated " << path;
    }
    EXPECT_EQ(r.exit_code, t.exit_code);
    EXPECT_EQ(r.out, t.output);
    // deterministic: a second run is identical
    EXPECT_EQ(golden::run(args).out, r.out);
}

std::vector<std::string> golden_names() {
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(kGolden))
        if (e.path().extension() == ".txt") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTranscript, ::testing::ValuesIn(golden_names()),
                         [](const ::testing::TestParamInfo<std::string>& info) {
                             std::string s = info.param;
                             for (char& ch : s)
                                 if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                             return s;
                         });

TEST(Cli, ValidateE2Passes) {
    const auto r = golden::run({"validate", "e2"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, DoubleFlagsCorrectedBracket) {
    const auto r = golden::run({"double", "e2"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("[p2,J12] = p1 + z J12\n"), std::string::npos);
    EXPECT_NE(r.out.find("note: [p2,J12]"), std::string::npos);
}

TEST(Cli, ValidationFailureExitsWithOne) {
    EXPECT_EQ(golden::run({"validate", kSamples + "/broken_cocycle.json"}).exit_code, 1);
    EXPECT_EQ(golden::run({"double", kSamples + "/broken_cocycle.json"}).exit_code, 1);
    EXPECT_EQ(golden::run({"contract", "e2", "--m", "0,0,1"}).exit_code, 1);
    EXPECT_EQ(golden::run({"solve-exponents", "e2", "--m", "0,0,1"}).exit_code, 1);
}

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(golden::run({}).exit_code, 2);
    EXPECT_EQ(golden::run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(golden::run({"validate", "no-such-algebra"}).exit_code, 2);
    EXPECT_EQ(golden::run({"validate", "nonrel-map"}).exit_code, 2);
    EXPECT_EQ(golden::run({"contract", "e2", "--m", "1,0"}).exit_code, 2);
    EXPECT_EQ(golden::run({"contract", "e2", "--m", "1,x,0"}).exit_code, 2);
    EXPECT_EQ(golden::run({"contract", "e2"}).exit_code, 2);
    EXPECT_EQ(golden::run({"catalog", "show", "nope"}).exit_code, 2);
    EXPECT_EQ(golden::run({"cocommutator", "--rmatrix", kSamples + "/abelian2.json"}).exit_code, 2);
}

TEST(Cli, MalformedDocumentExitsWithTwo) {
    const auto path = std::filesystem::temp_directory_path() / "lieb_cli_malformed.json";
    {
        std::ofstream out(path);
        out << R"({"dimension": 3, "generators": ["A", "B", "C"], "c": [[1, 2, 3, "1"], [2, 1, 3, "1"]]})";
    }
    const auto r = golden::run({"validate", path.string()});
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("/c/1"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, ExportedDoubleReloads) {
    const auto path = std::filesystem::temp_directory_path() / "lieb_cli_double.json";
    ASSERT_EQ(golden::run({"double", "e2", "--export", path.string()}).exit_code, 0);
    const auto r = golden::run({"validate", path.string()});
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("dimension 6"), std::string::npos);
    EXPECT_NE(r.out.find("cybe: ok"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, NegativeExponentsUseEqualsForm) {
    const auto r = golden::run({"contract", "e2", "--m", "1,0,1", "--n=-1,0,-1"});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("pairing exponents n_i + m_i = (0, 0, 0)"), std::string::npos);
    EXPECT_NE(r.out.find("double-preserving: no"), std::string::npos);
}

TEST(Cli, SamplesValidate) {
    for (const char* name : {"e2.json", "abelian2.json", "book.json"})
        EXPECT_EQ(golden::run({"validate", kSamples + "/" + name}).exit_code, 0) << name;
}

}  // namespace
}  // namespace lieb
