#include "golden_cases.hpp"
#include "lawvere/cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lawvere::testing {
namespace {

class Golden : public ::testing::TestWithParam<GoldenCase> {};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST_P(Golden, OutputMatchesByteForByte)
{
    const GoldenCase& c = GetParam();
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_command(c.args, out, err, LAWVERE_DATA_DIR);
    EXPECT_EQ(code, cli::kVerified) << err.str();

    std::string path = std::string(LAWVERE_GOLDEN_DIR) + "/" + c.name + ".json";
    if (std::getenv("LAWVERE_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path, std::ios::binary) << out.str();
    }
    EXPECT_EQ(out.str(), slurp(path)) << path;
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) { return info.param.name; });

} // namespace
} // namespace lawvere::testing
